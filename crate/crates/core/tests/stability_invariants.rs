use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stableset_core::corpus::all_graphs_up_to;
use stableset_core::graph::complete;
use stableset_core::poly::vertex_matching_poly;
use stableset_core::stability::{
    count_real_roots, interlaces, is_real_rooted, isolate_real_roots, ray_samples, restrict_along,
    strongly_rayleigh_probe, RayleighPoints,
};
use stableset_core::{BigRational, RatPoly};

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial assembled from known factors: linear factors with chosen
/// rational roots (some repeated) and quadratics with negative
/// discriminant. Returns it with its distinct real roots.
fn known_factor_poly(rng: &mut ChaCha8Rng) -> (RatPoly, Vec<Q>) {
    let mut p = RatPoly::constant(q(
        rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 },
        1,
    ));
    let mut roots = BTreeSet::new();
    let mut degree = 0;
    let target = rng.gen_range(1..=12);
    while degree < target {
        if target - degree >= 2 && rng.gen_bool(0.3) {
            // x^2 + b x + c with b^2 < 4c
            let b = rng.gen_range(-6..=6);
            let c = b * b / 4 + rng.gen_range(1..=9);
            p = &p * &RatPoly::new(vec![q(c, 1), q(b, 1), q(1, 1)]);
            degree += 2;
        } else {
            let r = q(rng.gen_range(-40..=40), rng.gen_range(1..=8));
            p = &p * &RatPoly::new(vec![-r.clone(), q(1, 1)]);
            roots.insert(r);
            degree += 1;
        }
    }
    (p, roots.into_iter().collect())
}

#[test]
fn sturm_counts_match_known_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let (p, roots) = known_factor_poly(&mut rng);
        assert_eq!(
            count_real_roots(&p, None).unwrap(),
            roots.len(),
            "{}",
            p.to_text("x")
        );
        let isolated = isolate_real_roots(&p).unwrap();
        assert_eq!(isolated.len(), roots.len());
        for (r, expected) in isolated.iter().zip(&roots) {
            let iv = r.to_interval();
            assert!(
                (iv.approx - expected.to_f64().unwrap()).abs() < 1e-9,
                "{iv:?} vs {expected}"
            );
        }
        let lo = q(-3, 1);
        let hi = q(2, 1);
        let inside = roots.iter().filter(|r| **r > lo && **r <= hi).count();
        assert_eq!(count_real_roots(&p, Some((&lo, &hi))).unwrap(), inside);
    }
}

#[test]
fn derivatives_interlace_real_rooted_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut seen = 0;
    while seen < 300 {
        let (p, _) = known_factor_poly(&mut rng);
        if p.degree().unwrap_or(0) < 1 || !is_real_rooted(&p).unwrap().real_rooted {
            continue;
        }
        assert!(
            interlaces(&p.derivative(), &p).unwrap(),
            "{}",
            p.to_text("x")
        );
        seen += 1;
    }
}

#[test]
fn vertex_matching_rays_are_real_rooted() {
    for (i, g) in all_graphs_up_to(7).into_iter().enumerate() {
        let p = vertex_matching_poly(&g).unwrap();
        let vars: Vec<_> = (0..g.n() as u32).collect();
        for t in ray_samples(&vars, 20, i as u64) {
            let r = restrict_along(&p, &t).unwrap();
            assert!(
                is_real_rooted(&r).unwrap().real_rooted,
                "{:?} along {t:?}",
                g.edges()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn complete_graphs_satisfy_rayleigh(n in 1usize..=7, samples in 1usize..40, seed in any::<u64>()) {
        let p = stableset_core::poly::independence_poly(&complete(n)).unwrap();
        let v = strongly_rayleigh_probe(&p, RayleighPoints::Seeded(samples), seed).unwrap();
        prop_assert!(!v.refuted());
    }
}
