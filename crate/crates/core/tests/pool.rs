use optocog::consts::{EARTH_SURFACE_AREA, SPEED_OF_LIGHT};
use optocog::pool::{
    is_integrable, max_frequency, pool, pool_area, pool_diameter, pool_population, pool_ratio,
    square_side, Dimension, ElementKind, Platform, PoolQuery,
};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn platform(v: f64, w: f64) -> Platform<f64> {
    Platform::new("t", v, w, ElementKind::Synapse).unwrap()
}

fn dimension() -> impl Strategy<Value = Dimension> {
    (1u8..=3).prop_map(|n| Dimension::new(n).unwrap())
}

#[test]
fn cortex_pool() {
    let n = pool_population(&Platform::cortex_neurons(), &PoolQuery::new(6.0, Dimension::TWO)).unwrap();
    assert!(rel(n, 1.9e10) < 0.05, "{n}");
}

#[test]
fn photonic_over_biological() {
    let r = pool_ratio(&Platform::photonic_synapses(), &Platform::cortex_synapses(), Dimension::TWO).unwrap();
    let exact = ((SPEED_OF_LIGHT * 2.4e-8) / (1.9e-5 * 2.0)).powi(2);
    assert!(rel(r, exact) < 1e-12);
    assert!(r / 1e10 <= 4.0 && r / 1e10 >= 0.25, "{r}");
    // the degraded, one-dimensional reading of the same comparison
    assert!(rel(r.sqrt(), 1.9e5) < 0.01);
}

#[test]
fn data_center_and_planet() {
    let c = Platform::photonic_synapses();
    let a = pool_area(&c, 1e6).unwrap();
    assert!((7e4..=1.3e5).contains(&a), "{a}");
    assert!(pool_area(&c, 6.0).unwrap() > EARTH_SURFACE_AREA);
    let f = max_frequency(&c, square_side(1e5)).unwrap();
    assert!(rel(f, 9.5e5) < 0.01, "{f}");
}

#[test]
fn asteroid_at_a_kilohertz() {
    let c = Platform::photonic_synapses();
    assert!(is_integrable(&c, 6e4, 1e3).unwrap());
    assert!(max_frequency(&c, 6e4).unwrap() >= 1e3);
    assert!(pool_diameter(&c, 1e3).unwrap() >= 6e4);
}

#[test]
fn cortex_fails_beyond_a_third_of_a_metre() {
    assert!(!is_integrable(&Platform::cortex_neurons(), 0.4, 6.0).unwrap());
}

proptest! {
    #[test]
    fn population_is_diameter_over_width_to_the_n(
        v in 1e-3f64..2.9e8, w in 1e-9f64..1e-2, f in 1e-2f64..1e9, n in dimension()
    ) {
        let p = platform(v, w);
        let q = PoolQuery::new(f, n);
        let d = pool_diameter(&p, f).unwrap();
        prop_assert_eq!(pool_population(&p, &q).unwrap(), (d / w).powi(n.get() as i32));
        let r = pool(&p, &q).unwrap();
        prop_assert_eq!(r.diameter, d);
        prop_assert_eq!(r.area.is_some(), n.get() == 2);
    }

    #[test]
    fn ratio_ignores_common_rescaling(
        v1 in 1e-2f64..1e8, w1 in 1e-9f64..1e-3, v2 in 1e-2f64..1e8, w2 in 1e-9f64..1e-3,
        lambda in 1e-3f64..1e3, mu in 1e-3f64..1.0, n in dimension()
    ) {
        let base = pool_ratio(&platform(v1, w1), &platform(v2, w2), n).unwrap();
        let scaled = pool_ratio(
            &platform(v1 * mu, w1 * lambda), &platform(v2 * mu, w2 * lambda), n,
        ).unwrap();
        prop_assert!(rel(scaled, base) < 1e-12);
    }

    #[test]
    fn ratio_is_a_quotient_of_populations(
        v1 in 1e-2f64..2.9e8, w1 in 1e-9f64..1e-3, v2 in 1e-2f64..2.9e8, w2 in 1e-9f64..1e-3,
        f in 1e-1f64..1e8, n in dimension()
    ) {
        let (a, b) = (platform(v1, w1), platform(v2, w2));
        let q = PoolQuery::new(f, n);
        let lhs = pool_ratio(&a, &b, n).unwrap() * pool_population(&b, &q).unwrap();
        prop_assert!(rel(lhs, pool_population(&a, &q).unwrap()) < 1e-12);
    }

    #[test]
    fn saturated_pool_is_integrable(v in 1e-3f64..2.9e8, f in 1e-3f64..1e10) {
        let p = platform(v, 1e-6);
        prop_assert!(is_integrable(&p, pool_diameter(&p, f).unwrap(), f).unwrap());
        let fmax = max_frequency(&p, 1.0).unwrap();
        prop_assert!(is_integrable(&p, 1.0, fmax).unwrap());
        prop_assert!(!is_integrable(&p, 1.0, fmax * (1.0 + 1e-9)).unwrap());
    }

    #[test]
    fn halving_frequency_doubles_diameter(v in 1e-3f64..2.9e8, f in 1e-3f64..1e10) {
        let p = platform(v, 1e-6);
        prop_assert_eq!(pool_diameter(&p, f / 2.0).unwrap(), 2.0 * pool_diameter(&p, f).unwrap());
        prop_assert!(rel(pool_area(&p, f).unwrap() / pool_area(&p, 2.0 * f).unwrap(), 4.0) < 1e-14);
    }

    #[test]
    fn units_do_not_matter(
        v in 1e-2f64..1e8, w in 1e-9f64..1e-3, f in 1e-1f64..1e8, n in dimension()
    ) {
        // metres and seconds against millimetres and milliseconds
        let si = pool_population(&platform(v, w), &PoolQuery::new(f, n)).unwrap();
        let milli = pool_population(&platform(v, w * 1e3), &PoolQuery::new(f * 1e-3, n)).unwrap();
        prop_assert!(rel(milli, si) < 1e-12);
    }
}
