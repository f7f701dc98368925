use optocog::graph::{avg_degree_random, powerlaw_max_degree, powerlaw_mean_degree, Cutoff, PowerLaw};

use super::{pick, pick_list, usage, Ctx, Failure, Report};
use crate::config::LogGrid;
use crate::table::{Cell, Table};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Random networks, one block per average path length.
    #[arg(long)]
    random: bool,
    /// Power-law networks, one block per exponent.
    #[arg(long)]
    powerlaw: bool,
    #[arg(long, value_delimiter = ',', value_name = "L")]
    path_length: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_name = "ALPHA")]
    alpha: Vec<f64>,
    #[arg(long)]
    k_min: Option<u64>,
    #[arg(long)]
    n_min: Option<f64>,
    #[arg(long)]
    n_max: Option<f64>,
    #[arg(long)]
    points_per_decade: Option<u32>,
}

pub fn run(ctx: &Ctx, args: &Args) -> Result<Report, Failure> {
    let cfg = &ctx.cfg.degree;
    let grid = LogGrid {
        min: pick(&args.n_min, &cfg.n_total.min),
        max: pick(&args.n_max, &cfg.n_total.max),
        per_decade: pick(&args.points_per_decade, &cfg.n_total.per_decade),
    };
    let sizes = grid.counts().map_err(Failure::Usage)?;
    if sizes.first().is_some_and(|&n| n < 2) {
        return Err(usage("networks need at least 2 nodes"));
    }
    let (random, powerlaw) = match (args.random, args.powerlaw) {
        (false, false) => (true, true),
        flags => flags,
    };
    let lengths = if random { pick_list(&args.path_length, &cfg.path_lengths) } else { vec![] };
    let alphas = if powerlaw { pick_list(&args.alpha, &cfg.alphas) } else { vec![] };
    if lengths.is_empty() && alphas.is_empty() {
        return Err(usage("empty grid: no path lengths or exponents"));
    }
    let k_min = pick(&args.k_min, &cfg.k_min);

    let mut t = Table::new("degree", &["n_total", "param", "avg_degree", "max_degree"]);
    for &l in &lengths {
        for &n in &sizes {
            let k = avg_degree_random(n, l)?;
            t.push(vec![Cell::Int(n), Cell::real(l), Cell::real(k), Cell::Empty]);
        }
    }
    for &alpha in &alphas {
        let law = PowerLaw::new(alpha, k_min, Cutoff::Natural)?;
        for &n in &sizes {
            t.push(vec![
                Cell::Int(n),
                Cell::real(alpha),
                Cell::real(powerlaw_mean_degree(&law, n)?),
                Cell::real(powerlaw_max_degree(&law, n)?),
            ]);
        }
    }
    let mut report = Report::new();
    report.notes.push(format!(
        "param is the average path length for random blocks ({}) and the exponent for power-law blocks ({}, k_min = {k_min})",
        lengths.len(),
        alphas.len()
    ));
    report.tables.push(t);
    Ok(report)
}
