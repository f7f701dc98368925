use optocog::graph::{sample_graph, DegreeDistribution};
use optocog::sim::{pool_sweep, run, synchrony_metrics, SimConfig, SyncAnalysis, Topology};
use serde_json::json;

use super::{pick, pick_list, usage, Ctx, Failure, Report};
use crate::config::{SimulationSection, TopologyKind};
use crate::table::{Cell, Table};

/// Command-line overrides of the `[simulation]` section.
#[derive(Debug, clap::Args)]
pub struct SimOverrides {
    #[arg(long)]
    nodes: Option<usize>,
    /// Side of the node square in units of v T.
    #[arg(long)]
    extent_over_vt: Option<f64>,
    /// Phase advance per spike, as a fraction of the period.
    #[arg(long)]
    coupling: Option<f64>,
    /// Refractory window, as a fraction of the period.
    #[arg(long)]
    refractory: Option<f64>,
    /// Run length in periods.
    #[arg(long)]
    periods: Option<f64>,
}

#[derive(Debug, clap::Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    sim: SimOverrides,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    #[command(flatten)]
    sim: SimOverrides,
    /// Pool diameters in units of v T.
    #[arg(long, value_delimiter = ',')]
    diameters: Vec<f64>,
    /// Number of seeds per diameter, counting up from the base seed.
    #[arg(long)]
    seeds: Option<u64>,
}

fn section(ctx: &Ctx, o: &SimOverrides) -> SimulationSection {
    let s = &ctx.cfg.simulation;
    SimulationSection {
        nodes: pick(&o.nodes, &s.nodes),
        extent_over_vt: pick(&o.extent_over_vt, &s.extent_over_vt),
        coupling: pick(&o.coupling, &s.coupling),
        refractory_fraction: pick(&o.refractory, &s.refractory_fraction),
        periods: pick(&o.periods, &s.periods),
        ..s.clone()
    }
}

fn build(s: &SimulationSection, seed: u64) -> Result<SimConfig<f64>, Failure> {
    let mut c = match (&s.positions, &s.phases) {
        (Some(pos), Some(phases)) => SimConfig::new(pos.clone(), phases.clone(), s.signal_velocity, s.period),
        (None, None) => {
            if s.nodes == 0 || !(1..=3).contains(&s.dimension) {
                return Err(usage("need at least one node in 1 to 3 dimensions"));
            }
            let extent = s.extent_over_vt * s.signal_velocity * s.period;
            if extent.is_nan() || extent <= 0.0 || extent.is_infinite() {
                return Err(usage("extent_over_vt must be positive"));
            }
            SimConfig::new(vec![vec![0.0; s.dimension]], vec![0.0], s.signal_velocity, s.period)
                .with_random_layout(s.nodes, s.dimension, extent, seed)
        }
        _ => return Err(usage("positions and phases must be given together")),
    };
    c.coupling = s.coupling;
    c.refractory_fraction = s.refractory_fraction;
    c.duration = s.periods * s.period;
    c.max_events = s.max_events;
    c.seed = seed;
    if s.topology == TopologyKind::Random {
        let n = c.n_nodes() as u64;
        let graph = sample_graph(&DegreeDistribution::random(n, s.avg_path_length)?, n, seed)?;
        c.topology = Topology::from_graph(&graph);
    }
    c.validate()?;
    Ok(c)
}

fn analysis(s: &SimulationSection) -> Result<SyncAnalysis<f64>, Failure> {
    if !(s.window_periods > 0.0 && s.window_periods <= s.periods) {
        return Err(usage("window_periods must be positive and no longer than the run"));
    }
    Ok(SyncAnalysis {
        period: s.period,
        window: s.window_periods * s.period,
        lock_threshold: s.lock_threshold,
    })
}

pub fn simulate(ctx: &Ctx, args: &SimulateArgs) -> Result<Report, Failure> {
    let s = section(ctx, &args.sim);
    let cfg = build(&s, ctx.seed)?;
    let analysis = analysis(&s)?;
    let trace = run(&cfg)?;
    let sync = synchrony_metrics(&trace, &analysis)?;

    let mut t = Table::new("trace", &["node_id", "fire_time_s"]);
    for f in &trace.fires {
        t.push(vec![Cell::Int(f.node as u64), Cell::real(f.time)]);
    }
    let mut report = Report::new();
    report.notes.extend([
        format!(
            "{} nodes, {} fires, {} events over {} periods",
            cfg.n_nodes(),
            trace.fires.len(),
            trace.events_scheduled,
            s.periods
        ),
        format!(
            "order parameter {:.6} over the last {} periods: {} (threshold {})",
            sync.order_parameter,
            s.window_periods,
            if sync.locked { "locked" } else { "not locked" },
            sync.lock_threshold
        ),
        match sync.convergence_time {
            Some(t) => format!("locked from {t:.6e} s ({:.1} periods)", t / s.period),
            None => "never settled into lock".to_owned(),
        },
    ]);
    report.json.push((
        "summary".into(),
        json!({
            "nodes": cfg.n_nodes(),
            "seed": ctx.seed,
            "period_s": s.period,
            "duration_s": cfg.duration,
            "fires": trace.fires.len(),
            "events_scheduled": trace.events_scheduled,
            "synchrony": sync,
        }),
    ));
    report.tables.push(t);
    Ok(report)
}

pub fn sweep(ctx: &Ctx, args: &SweepArgs) -> Result<Report, Failure> {
    let s = section(ctx, &args.sim);
    let base = build(&s, ctx.seed)?;
    let analysis = analysis(&s)?;
    let ratios = pick_list(&args.diameters, &ctx.cfg.sweep.diameters_over_vt);
    let n_seeds = pick(&args.seeds, &ctx.cfg.sweep.seeds);
    if ratios.is_empty() || n_seeds == 0 {
        return Err(usage("empty sweep: need at least one diameter and one seed"));
    }
    let vt = base.light_cone();
    let diameters: Vec<f64> = ratios.iter().map(|r| r * vt).collect();
    let seeds: Vec<u64> = (0..n_seeds).map(|i| ctx.seed + i).collect();
    let rows = pool_sweep(&base, &diameters, &seeds, &analysis)?;

    let mut t = Table::new("sweep", &["diameter_over_vT", "mean_order_parameter", "stderr"]);
    let mut report = Report::new();
    report.notes.push(format!(
        "{} nodes, coupling {}, refractory {}, {} periods, {} seeds from {}",
        base.n_nodes(),
        s.coupling,
        s.refractory_fraction,
        s.periods,
        n_seeds,
        ctx.seed
    ));
    for r in &rows {
        t.push(vec![Cell::real(r.diameter_over_vt), Cell::real(r.mean_order_parameter), Cell::opt(r.stderr)]);
        report.notes.push(format!(
            "d = {:.3} vT: locked in {:.0}% of seeds",
            r.diameter_over_vt,
            r.locked_fraction * 100.0
        ));
    }
    report.json.push(("sweep".into(), json!(rows)));
    report.tables.push(t);
    Ok(report)
}
