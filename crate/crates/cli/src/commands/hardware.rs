use optocog::graph::{Cutoff, DegreeDistribution, PowerLaw};
use optocog::hardware::{network_area, neuron_power, node_area, rate_for_device_power, system_power};

use super::{pick, Ctx, Failure, Report};
use crate::config::{LogGrid, NetworkLaw};
use crate::table::{Cell, Table};

#[derive(Debug, clap::Args)]
pub struct AreaArgs {
    #[arg(long)]
    degree_min: Option<f64>,
    #[arg(long)]
    degree_max: Option<f64>,
    #[arg(long)]
    n_min: Option<f64>,
    #[arg(long)]
    n_max: Option<f64>,
    #[arg(long)]
    points_per_decade: Option<u32>,
    /// Degree exponent of the network.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    k_min: Option<u64>,
}

fn law(alpha: f64, k_min: u64) -> Result<DegreeDistribution<f64>, Failure> {
    Ok(PowerLaw::new(alpha, k_min, Cutoff::Natural)?.into())
}

pub fn area(ctx: &Ctx, args: &AreaArgs) -> Result<Report, Failure> {
    let cfg = &ctx.cfg.area;
    let profile = ctx.cfg.hardware.profile().map_err(Failure::Usage)?;
    let per_decade = pick(&args.points_per_decade, &cfg.degrees.per_decade);
    let degrees = LogGrid {
        min: pick(&args.degree_min, &cfg.degrees.min),
        max: pick(&args.degree_max, &cfg.degrees.max),
        per_decade,
    }
    .counts()
    .map_err(Failure::Usage)?;
    let sizes = LogGrid {
        min: pick(&args.n_min, &cfg.n_total.min),
        max: pick(&args.n_max, &cfg.n_total.max),
        per_decade: args.points_per_decade.unwrap_or(cfg.n_total.per_decade),
    }
    .counts()
    .map_err(Failure::Usage)?;
    let NetworkLaw { alpha, k_min } = cfg.law;
    let (alpha, k_min) = (pick(&args.alpha, &alpha), pick(&args.k_min, &k_min));
    let dist = law(alpha, k_min)?;

    let mut nodes = Table::new("node_area", &["degree", "node_area_m2"]);
    for &k in &degrees {
        nodes.push(vec![Cell::Int(k), Cell::real(node_area(k as f64, &profile)?)]);
    }
    let mut network = Table::new("network_area", &["n_total", "network_area_m2"]);
    for &n in &sizes {
        network.push(vec![Cell::Int(n), Cell::real(network_area(n, &dist, &profile)?)]);
    }
    let mut report = Report::new();
    report.notes.push(format!(
        "synapse area {:.4e} m², neuron base area {:.4e} m², routing overhead {}; network degrees follow k^-{alpha} from {k_min}",
        profile.synapse_area, profile.neuron_base_area, profile.routing_overhead_fraction
    ));
    report.tables.push(nodes);
    report.tables.push(network);
    Ok(report)
}

#[derive(Debug, clap::Args)]
pub struct PowerArgs {
    /// Fan-out of the single neuron.
    #[arg(long)]
    degree: Option<f64>,
    /// Firing frequency of the single neuron, Hz.
    #[arg(long)]
    frequency: Option<f64>,
    #[arg(long)]
    n_total: Option<u64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    k_min: Option<u64>,
    /// Network mean firing rate, Hz.
    #[arg(long, conflicts_with = "device_power")]
    mean_rate: Option<f64>,
    /// Pick the mean rate that draws this device power, W.
    #[arg(long)]
    device_power: Option<f64>,
}

pub fn power(ctx: &Ctx, args: &PowerArgs) -> Result<Report, Failure> {
    let cfg = &ctx.cfg.power;
    let profile = ctx.cfg.hardware.profile().map_err(Failure::Usage)?;
    let degree = pick(&args.degree, &cfg.degree);
    let frequency = pick(&args.frequency, &cfg.frequency);
    let n_total = pick(&args.n_total, &cfg.n_total);
    let dist = law(pick(&args.alpha, &cfg.law.alpha), pick(&args.k_min, &cfg.law.k_min))?;
    let rate = match (args.mean_rate, args.device_power) {
        (Some(r), _) => r,
        (None, Some(p)) => rate_for_device_power(n_total, &dist, p, &profile)?,
        (None, None) => match cfg.mean_rate {
            Some(r) => r,
            None => rate_for_device_power(n_total, &dist, cfg.device_power, &profile)?,
        },
    };

    let neuron = neuron_power(degree, frequency, &profile)?;
    let mut nt = Table::new(
        "neuron_power",
        &["degree", "frequency_Hz", "pulse_energy_J", "device_power_W", "wall_power_W", "power_density_W_per_m2"],
    );
    nt.push(vec![
        Cell::real(degree),
        Cell::real(frequency),
        Cell::real(neuron.pulse_energy),
        Cell::real(neuron.device_power),
        Cell::real(neuron.wall_power),
        Cell::real(neuron.power_density),
    ]);

    let sys = system_power(n_total, &dist, rate, &profile)?;
    let mut st = Table::new(
        "system_power",
        &[
            "n_total",
            "mean_degree",
            "mean_rate_Hz",
            "device_power_W",
            "wall_power_W",
            "area_m2",
            "power_density_W_per_m2",
        ],
    );
    st.push(vec![
        Cell::Int(n_total),
        Cell::real(dist.mean_degree(n_total)?),
        Cell::real(rate),
        Cell::real(sys.device_power),
        Cell::real(sys.wall_power),
        Cell::real(sys.area),
        Cell::real(sys.power_density),
    ]);

    let mut report = Report::new();
    report.notes.push(format!(
        "{} photons per synapse event at {:.4e} m, source efficiency {}, cooling overhead {}",
        profile.photons_per_synapse_event, profile.wavelength, profile.source_efficiency, profile.cooling_overhead
    ));
    report.tables.push(nt);
    report.tables.push(st);
    Ok(report)
}
