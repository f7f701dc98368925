//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p optocog --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use optocog::consts::{EARTH_SURFACE_AREA, SPEED_OF_LIGHT};
use optocog::graph::{
    avg_degree_random, measure_avg_path_length, powerlaw_max_degree, powerlaw_mean_degree,
    sample_graph, Cutoff, DegreeDistribution, PowerLaw, SourceSample,
};
use optocog::hardware::{
    network_area, neuron_power, photon_energy, synapse_width_from_wafer, wafer_area,
    HardwareProfile,
};
use optocog::pool::{
    max_frequency, pool_area, pool_population, pool_ratio, square_side, Dimension, Platform,
    PoolQuery,
};
use optocog::sim::{pool_sweep, run, SimConfig, SyncAnalysis};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod support;
use support::{discrete_mean, natural_cutoff, median_sampled_max, oracle_cases, pair_return_map};

struct Outcome {
    pass: bool,
    detail: String,
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn within_factor(x: f64, target: f64, factor: f64) -> bool {
    x >= target / factor && x <= target * factor
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    out.pass &= took <= limit;
    out.detail = format!("{}; {:.2} s of {} s", out.detail, took.as_secs_f64(), limit.as_secs());
    out
}

fn cortex_pool() -> Outcome {
    let n = pool_population(&Platform::cortex_neurons(), &PoolQuery::new(6.0, Dimension::TWO)).unwrap();
    Outcome {
        pass: rel(n, 1.9e10) <= 0.05,
        detail: format!("N_pool = {n:.4e}, want 1.9e10 ±5%"),
    }
}

fn platform_ratio() -> Outcome {
    let r = pool_ratio(&Platform::photonic_synapses(), &Platform::cortex_synapses(), Dimension::TWO).unwrap();
    let formula = ((SPEED_OF_LIGHT * 2.4e-8) / (1.9e-5 * 2.0)).powi(2);
    Outcome {
        pass: within_factor(r, 1e10, 4.0) && rel(r, formula) <= 0.02,
        detail: format!("ratio = {r:.4e}; formula {formula:.4e} ±2%, 1e10 within ×4"),
    }
}

fn data_center_scale() -> Outcome {
    let c = Platform::photonic_synapses();
    let area = pool_area(&c, 1e6).unwrap();
    let earth_side = square_side(EARTH_SURFACE_AREA);
    let f_earth = max_frequency(&c, earth_side).unwrap();
    let area_ok = (7e4..=1.3e5).contains(&area);
    let theta_ok = (4.0..=8.0).contains(&f_earth);
    Outcome {
        pass: area_ok && theta_ok,
        detail: format!(
            "area at 1 MHz = {area:.4e} m² (want [7e4, 1.3e5]); Earth-scale side {earth_side:.4e} m \
             gives f_max = {f_earth:.3} Hz (want theta band [4, 8] Hz: {}; round trip would give {:.3} Hz)",
            if theta_ok { "inside" } else { "outside" },
            f_earth / 2.0
        ),
    }
}

fn degree_formula() -> Outcome {
    let k5 = avg_degree_random(100_000, 2.0).unwrap();
    let k6 = avg_degree_random(1_000_000, 2.0).unwrap();
    Outcome {
        pass: (370.0..=410.0).contains(&k5) && k6 > 1000.0,
        detail: format!("k(1e5, 2) = {k5:.1} (want [370, 410]); k(1e6, 2) = {k6:.1} (want > 1000)"),
    }
}

fn path_length_oracle() -> Outcome {
    const N: u64 = 10_000;
    let target = 2.5;
    let dist = DegreeDistribution::random(N, target).unwrap();
    let k = avg_degree_random(N, target).unwrap();
    let measured: Vec<f64> = (0..20)
        .map(|seed| {
            let g = sample_graph(&dist, N, seed).unwrap();
            measure_avg_path_length(&g, SourceSample::All).unwrap().mean
        })
        .collect();
    let worst = measured.iter().map(|&l| rel(l, target)).fold(0.0, f64::max);
    let (lo, hi) = measured
        .iter()
        .fold((f64::MAX, f64::MIN), |(a, b), &l| (a.min(l), b.max(l)));
    Outcome {
        pass: worst <= 0.10,
        detail: format!(
            "k = {k:.2}; measured L in [{lo:.4}, {hi:.4}] over 20 seeds, worst {:.2}% off 2.5 (want ≤ 10%)",
            worst * 100.0
        ),
    }
}

fn powerlaw_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut worst_mean, mut worst_max) = (0.0f64, 1.0f64);
    for alpha in [1.5, 2.0, 2.5, 3.0] {
        for n in [1_000u64, 10_000, 1_000_000] {
            let law = PowerLaw::new(alpha, 1, Cutoff::Natural).unwrap();
            let mean = powerlaw_mean_degree(&law, n).unwrap();
            worst_mean = worst_mean.max(rel(mean, discrete_mean(alpha, 1, natural_cutoff(alpha, 1, n))));
            let sampled = median_sampled_max(alpha, 1.0, n, 40, &mut rng);
            let ratio = sampled / powerlaw_max_degree(&law, n).unwrap();
            worst_max = worst_max.max(ratio.max(1.0 / ratio));
        }
    }
    Outcome {
        pass: worst_mean <= 0.02 && worst_max <= 10.0,
        detail: format!(
            "mean vs discrete sum worst {:.3}% (want ≤ 2%); max degree vs median sampled max worst ×{worst_max:.2} (want ≤ ×10)",
            worst_mean * 100.0
        ),
    }
}

fn power_numbers() -> Outcome {
    let pulse = 1e7 * photon_energy(1.5e-6).unwrap();
    let neuron = neuron_power(1e6, 1e6, &HardwareProfile::superconducting_optoelectronic()).unwrap();
    Outcome {
        pass: (1.2e-12..=1.4e-12).contains(&pulse) && (1e-3..=2e-3).contains(&neuron.device_power),
        detail: format!(
            "pulse = {:.4} pJ (want [1.2, 1.4]); neuron device power = {:.4} mW (want [1, 2])",
            pulse * 1e12,
            neuron.device_power * 1e3
        ),
    }
}

fn wafer_calibration() -> Outcome {
    let w = synapse_width_from_wafer(0.3, 200_000_000).unwrap();
    let law: DegreeDistribution<f64> = PowerLaw::new(3.0, 100, Cutoff::Natural).unwrap().into();
    let mean = law.mean_degree(1_000_000).unwrap();
    let area = network_area(1_000_000, &law, &HardwareProfile::superconducting_optoelectronic()).unwrap();
    let wafer = wafer_area(0.3);
    Outcome {
        pass: (1.8e-5..=2.0e-5).contains(&w) && area <= wafer,
        detail: format!(
            "w = {w:.4e} m (want [1.8e-5, 2.0e-5]); 1e6 nodes at mean degree {mean:.1} take {area:.4e} m² of {wafer:.4e} m²"
        ),
    }
}

fn simulator_oracle() -> Outcome {
    let mut worst = 0.0f64;
    let mut counts_match = true;
    let mut fires = 0;
    for p in oracle_cases() {
        let horizon = 100.0 * p.period;
        let want = pair_return_map(p, horizon);
        let side = p.delay / 2f64.sqrt();
        let mut c = SimConfig::new(vec![vec![0.0, 0.0], vec![side, side]], p.phases.to_vec(), 1.0, p.period);
        c.coupling = p.coupling;
        c.refractory_fraction = p.refractory;
        c.duration = horizon;
        let trace = run(&c).unwrap();
        for node in 0..2 {
            let got = trace.fire_times(node as u32);
            counts_match &= got.len() == want[node].len();
            fires += got.len();
            for (g, w) in got.iter().zip(&want[node]) {
                worst = worst.max((g - w).abs());
            }
        }
    }
    Outcome {
        pass: counts_match && worst <= 1e-9,
        detail: format!("{fires} fire times over 6 pairs, max deviation {worst:.2e} s (want ≤ 1e-9)"),
    }
}

fn light_cone_sweep() -> Outcome {
    // 1 MHz at the speed of light: v T = 300 m
    let period = 1e-6;
    let mut base = SimConfig::new(vec![vec![0.0, 0.0]; 64], vec![0.0; 64], SPEED_OF_LIGHT, period);
    base.coupling = 0.3;
    base.refractory_fraction = 0.35;
    base.duration = 50.0 * period;
    let vt = base.light_cone();
    let diameters: Vec<f64> = [0.1, 0.5, 1.0, 2.0, 4.0].iter().map(|x| x * vt).collect();
    let seeds: Vec<u64> = (0..10).collect();
    let analysis = SyncAnalysis::new(period);
    let coupled = pool_sweep(&base, &diameters, &seeds, &analysis).unwrap();
    base.coupling = 0.0;
    let null = pool_sweep(&base, &diameters, &seeds, &analysis).unwrap();
    let drop = coupled[0].mean_order_parameter - coupled[4].mean_order_parameter;
    let null_r: Vec<f64> = null.iter().map(|r| r.mean_order_parameter).collect();
    let spread = null_r.iter().cloned().fold(f64::MIN, f64::max) - null_r.iter().cloned().fold(f64::MAX, f64::min);
    let curve: Vec<String> = coupled
        .iter()
        .map(|r| format!("{:.3}", r.mean_order_parameter))
        .collect();
    Outcome {
        pass: drop >= 0.3 && spread <= 0.05,
        detail: format!(
            "R at d/vT 0.1..4 = [{}]; drop {drop:.3} (want ≥ 0.3); null spread {spread:.3} (want ≤ 0.05)",
            curve.join(", ")
        ),
    }
}

fn main() -> ExitCode {
    let instant = Duration::from_secs(1);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("cortex pool calibration", Box::new(move || timed(instant, cortex_pool))),
        ("photonic/biological pool ratio", Box::new(move || timed(instant, platform_ratio))),
        ("data-center scale and theta band", Box::new(move || timed(instant, data_center_scale))),
        ("random-network degree formula", Box::new(move || timed(instant, degree_formula))),
        ("sampled path length", Box::new(|| timed(Duration::from_secs(60), path_length_oracle))),
        ("power-law mean and cutoff", Box::new(|| timed(Duration::from_secs(10), powerlaw_oracles))),
        ("pulse energy and neuron power", Box::new(move || timed(instant, power_numbers))),
        ("wafer calibration", Box::new(move || timed(instant, wafer_calibration))),
        ("two-oscillator oracle", Box::new(move || timed(instant, simulator_oracle))),
        ("light-cone sweep", Box::new(|| timed(Duration::from_secs(300), light_cone_sweep))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        if !out.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<34} {}  {}",
            i + 1,
            name,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
