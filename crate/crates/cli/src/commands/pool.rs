use optocog::pool::{feasibility, pool, Dimension, ElementKind, Platform, PoolQuery, Propagation};

use super::{pick, pick_list, Ctx, Failure, Report};
use crate::config::LogGrid;
use crate::table::{Cell, Table};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Signal velocity, m/s.
    #[arg(long)]
    v: Option<f64>,
    /// Element width, m.
    #[arg(long)]
    w: Option<f64>,
    /// Frequencies, Hz. Replaces the log grid.
    #[arg(long, value_delimiter = ',')]
    f: Vec<f64>,
    /// Pool dimension, 1 to 3.
    #[arg(long)]
    n: Option<u8>,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<ElementKind>,
    #[arg(long)]
    f_min: Option<f64>,
    #[arg(long)]
    f_max: Option<f64>,
    #[arg(long)]
    points_per_decade: Option<u32>,
    /// Require the signal to go there and back, halving the diameter.
    #[arg(long)]
    round_trip: bool,
    /// Also report whether a system this wide (m) is integrable.
    #[arg(long)]
    extent: Option<f64>,
}

fn parse_kind(s: &str) -> Result<ElementKind, String> {
    match s {
        "neuron" => Ok(ElementKind::Neuron),
        "synapse" => Ok(ElementKind::Synapse),
        _ => Err(format!("expected neuron or synapse, got {s:?}")),
    }
}

pub fn run(ctx: &Ctx, args: &Args) -> Result<Report, Failure> {
    let cfg = &ctx.cfg.pool;
    let platform = Platform::new(
        "platform",
        pick(&args.v, &cfg.velocity),
        pick(&args.w, &cfg.element_width),
        pick(&args.kind, &cfg.element_kind),
    )?;
    let dimension = Dimension::new(pick(&args.n, &cfg.dimension))?;
    let mut frequencies = pick_list(&args.f, &cfg.frequencies);
    if frequencies.is_empty() {
        let grid = LogGrid {
            min: pick(&args.f_min, &cfg.frequency_grid.min),
            max: pick(&args.f_max, &cfg.frequency_grid.max),
            per_decade: pick(&args.points_per_decade, &cfg.frequency_grid.per_decade),
        };
        frequencies = grid.points().map_err(Failure::Usage)?;
    }
    let propagation = if args.round_trip || cfg.round_trip {
        Propagation::RoundTrip
    } else {
        Propagation::OneWay
    };

    let mut t = Table::new("pool", &["frequency", "diameter_m", "area_m2", "population"]);
    for &f in &frequencies {
        let r = pool(
            &platform,
            &PoolQuery {
                frequency: f,
                dimension,
                propagation,
            },
        )?;
        t.push(vec![Cell::real(f), Cell::real(r.diameter), Cell::opt(r.area), Cell::real(r.population)]);
    }
    let mut report = Report::new();
    report.notes.push(format!(
        "v = {:.6e} m/s, w = {:.6e} m per {}, n = {}, {}",
        platform.signal_velocity,
        platform.element_width,
        platform.element_kind,
        dimension.get(),
        match propagation {
            Propagation::OneWay => "one-way",
            Propagation::RoundTrip => "round trip",
        }
    ));
    report.tables.push(t);

    if let Some(extent) = args.extent.or(cfg.extent) {
        let mut ft = Table::new(
            "feasibility",
            &["frequency", "extent_m", "pool_diameter_m", "max_frequency", "integrable"],
        );
        for &f in &frequencies {
            let r = feasibility(&platform, extent, f)?;
            ft.push(vec![
                Cell::real(f),
                Cell::real(extent),
                Cell::real(r.pool_diameter),
                Cell::real(r.max_frequency),
                Cell::Flag(r.integrable),
            ]);
        }
        report.tables.push(ft);
    }
    Ok(report)
}
