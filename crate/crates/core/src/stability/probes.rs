//! Seeded sampling probes. Refutations are exact and replayable;
//! corroborations only say that no sample failed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{is_real_rooted, StabilityError};
use crate::poly::{MultiPoly, PolyError, Var};
use crate::scalar::rational_string;
use crate::{IntPoly, RatPoly};

type Q = BigRational;

/// A point or direction: exact rational value per variable.
pub type Point = BTreeMap<Var, Q>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    RefutedWithWitness,
    Corroborated,
}

fn ser_point<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(p.iter().map(|(v, q)| (v.to_string(), rational_string(q))))
}

fn ser_weights<S: Serializer>(w: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(rational_string))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `p(t z)` is not real-rooted; `index` names the failing polynomial
    /// when several were probed.
    Ray {
        #[serde(serialize_with = "ser_point")]
        t: Point,
        index: usize,
    },
    /// `∂_j p(x) ∂_k p(x) < ∂_j ∂_k p(x) p(x)`.
    Rayleigh {
        #[serde(serialize_with = "ser_point")]
        x: Point,
        j: Var,
        k: Var,
    },
    /// `Σ α_k p_k` is not real-rooted.
    Weights {
        #[serde(serialize_with = "ser_weights")]
        weights: Vec<Q>,
    },
    /// Along the ray `t`, the combination with these weights fails.
    RayWeights {
        #[serde(serialize_with = "ser_point")]
        t: Point,
        #[serde(serialize_with = "ser_weights")]
        weights: Vec<Q>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeVerdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Samples examined (up to and including the refuting one).
    pub samples: usize,
    pub seed: u64,
    /// Exact values behind a refutation, as decimal rational strings.
    pub exact_values: Vec<String>,
    /// Set on every corroboration: no finite sample covers all of `R_+^n`.
    pub sampling_limited: bool,
}

impl ProbeVerdict {
    pub fn refuted(&self) -> bool {
        self.outcome == Outcome::RefutedWithWitness
    }

    fn corroborated(samples: usize, seed: u64) -> Self {
        ProbeVerdict {
            outcome: Outcome::Corroborated,
            witness: None,
            samples,
            seed,
            exact_values: Vec::new(),
            sampling_limited: true,
        }
    }

    fn refutation(index: usize, seed: u64, witness: Witness, exact_values: Vec<String>) -> Self {
        ProbeVerdict {
            outcome: Outcome::RefutedWithWitness,
            witness: Some(witness),
            samples: index + 1,
            seed,
            exact_values,
            sampling_limited: false,
        }
    }
}

fn sixteenths(rng: &mut ChaCha8Rng) -> Q {
    Q::new(BigInt::from(rng.gen_range(1..=64)), BigInt::from(16))
}

/// Seeded directions over `vars`: sample 0 is all ones, the rest have
/// entries `k/16` with `k` uniform in `1..=64`.
pub fn ray_samples(vars: &[Var], samples: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|i| {
            vars.iter()
                .map(|&v| {
                    (
                        v,
                        if i == 0 {
                            Q::one()
                        } else {
                            sixteenths(&mut rng)
                        },
                    )
                })
                .collect()
        })
        .collect()
}

/// Seeded positive weight vectors of length `m`; sample 0 is all ones.
pub fn weight_samples(m: usize, samples: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0f_a1fa);
    (0..samples)
        .map(|i| {
            (0..m)
                .map(|_| {
                    if i == 0 {
                        Q::one()
                    } else {
                        sixteenths(&mut rng)
                    }
                })
                .collect()
        })
        .collect()
}

/// Seeded real points for the Rayleigh check: sample 0 is all ones, the
/// rest have entries `k/4` with `k` uniform in `-8..=8`.
pub fn real_point_samples(vars: &[Var], samples: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0ea1_9017);
    (0..samples)
        .map(|i| {
            vars.iter()
                .map(|&v| {
                    let x = if i == 0 {
                        Q::one()
                    } else {
                        Q::new(BigInt::from(rng.gen_range(-8..=8)), BigInt::from(4))
                    };
                    (v, x)
                })
                .collect()
        })
        .collect()
}

fn coeff_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

/// `p(t z)`.
pub fn restrict_along(p: &IntPoly, t: &Point) -> Result<RatPoly, PolyError> {
    p.restrict(|v| t.get(&v).cloned())
}

/// Exact per-sample check: is `p(t z)` real-rooted?
pub fn ray_passes(p: &IntPoly, t: &Point) -> Result<bool, StabilityError> {
    Ok(is_real_rooted(&restrict_along(p, t)?)?.real_rooted)
}

/// Same-phase stability probe (`p(t z)` real-rooted for sampled `t`).
pub fn same_phase_probe(
    p: &IntPoly,
    samples: usize,
    seed: u64,
) -> Result<ProbeVerdict, StabilityError> {
    if samples == 0 {
        return Err(StabilityError::NoSamples);
    }
    let rays = ray_samples(&p.variables(), samples, seed);
    let checked: Vec<Result<bool, StabilityError>> =
        rays.par_iter().map(|t| ray_passes(p, t)).collect();
    for (i, r) in checked.into_iter().enumerate() {
        if !r? {
            let restricted = restrict_along(p, &rays[i])?;
            return Ok(ProbeVerdict::refutation(
                i,
                seed,
                Witness::Ray {
                    t: rays[i].clone(),
                    index: 0,
                },
                coeff_strings(&restricted),
            ));
        }
    }
    Ok(ProbeVerdict::corroborated(samples, seed))
}

fn eval_at(p: &IntPoly, x: &Point) -> Result<Q, PolyError> {
    p.map_coeffs(|c| Q::from_integer(c.clone()))
        .evaluate_with(|v| Some(x.get(&v).cloned().unwrap_or_else(Q::zero)))
}

/// Rayleigh difference `∂_j p ∂_k p - ∂_j∂_k p · p` at `x`, as `(lhs, rhs)`.
pub fn rayleigh_sides(p: &IntPoly, x: &Point, j: Var, k: Var) -> Result<(Q, Q), PolyError> {
    let dj = p.partial_derivative(j);
    let dk = p.partial_derivative(k);
    let djk = dj.partial_derivative(k);
    let lhs = eval_at(&dj, x)? * eval_at(&dk, x)?;
    let rhs = eval_at(&djk, x)? * eval_at(p, x)?;
    Ok((lhs, rhs))
}

pub enum RayleighPoints {
    Explicit(Vec<Point>),
    Seeded(usize),
}

/// Strong Rayleigh probe over variable pairs at the given real points.
pub fn strongly_rayleigh_probe(
    p: &IntPoly,
    points: RayleighPoints,
    seed: u64,
) -> Result<ProbeVerdict, StabilityError> {
    if !p.is_multi_affine() {
        return Err(StabilityError::Poly(PolyError::NotMultiAffine));
    }
    let vars = p.variables();
    let pts = match points {
        RayleighPoints::Explicit(v) => v,
        RayleighPoints::Seeded(n) => real_point_samples(&vars, n, seed),
    };
    if pts.is_empty() {
        return Err(StabilityError::NoSamples);
    }
    let first: Vec<MultiPoly<Q>> = vars
        .iter()
        .map(|&v| {
            p.partial_derivative(v)
                .map_coeffs(|c| Q::from_integer(c.clone()))
        })
        .collect();
    let pq = p.map_coeffs(|c| Q::from_integer(c.clone()));
    let eval = |f: &MultiPoly<Q>, x: &Point| {
        f.evaluate_with(|v| Some(x.get(&v).cloned().unwrap_or_else(Q::zero)))
    };
    let failures: Vec<Option<(Var, Var, Q, Q)>> = pts
        .par_iter()
        .map(|x| -> Result<_, PolyError> {
            let px = eval(&pq, x)?;
            let d: Vec<Q> = first.iter().map(|f| eval(f, x)).collect::<Result<_, _>>()?;
            for a in 0..vars.len() {
                for b in a + 1..vars.len() {
                    let djk = eval(&first[a].partial_derivative(vars[b]), x)?;
                    let lhs = d[a].clone() * d[b].clone();
                    let rhs = djk * px.clone();
                    if lhs < rhs {
                        return Ok(Some((vars[a], vars[b], lhs, rhs)));
                    }
                }
            }
            Ok(None)
        })
        .collect::<Result<_, _>>()?;
    for (i, f) in failures.into_iter().enumerate() {
        if let Some((j, k, lhs, rhs)) = f {
            return Ok(ProbeVerdict::refutation(
                i,
                seed,
                Witness::Rayleigh {
                    x: pts[i].clone(),
                    j,
                    k,
                },
                vec![rational_string(&lhs), rational_string(&rhs)],
            ));
        }
    }
    Ok(ProbeVerdict::corroborated(pts.len(), seed))
}

fn normalized(p: &RatPoly) -> RatPoly {
    match p.leading() {
        Some(l) if l.is_negative() => -p,
        _ => p.clone(),
    }
}

/// `Σ α_k p_k` after making every leading coefficient positive.
pub fn combination(ps: &[RatPoly], weights: &[Q]) -> RatPoly {
    ps.iter().zip(weights).fold(RatPoly::zero(), |acc, (p, a)| {
        &acc + &normalized(p).scale(a)
    })
}

/// Common interlacing via convex combinations: a refutation is a weight
/// vector whose combination has a non-real root.
pub fn common_interlacing_probe(
    ps: &[RatPoly],
    samples: usize,
    seed: u64,
) -> Result<ProbeVerdict, StabilityError> {
    if samples == 0 {
        return Err(StabilityError::NoSamples);
    }
    if ps.is_empty() {
        return Err(StabilityError::EmptyInput);
    }
    for (i, p) in ps.iter().enumerate() {
        if p.is_zero() || !is_real_rooted(p)?.real_rooted {
            return Err(StabilityError::NotRealRooted(i));
        }
    }
    let ws = weight_samples(ps.len(), samples, seed);
    let fails = ws
        .par_iter()
        .map(|w| is_real_rooted(&combination(ps, w)).map(|v| !v.real_rooted))
        .collect::<Result<Vec<bool>, _>>()?;
    match fails.iter().position(|&f| f) {
        Some(i) => Ok(ProbeVerdict::refutation(
            i,
            seed,
            Witness::Weights {
                weights: ws[i].clone(),
            },
            coeff_strings(&combination(ps, &ws[i])),
        )),
        None => Ok(ProbeVerdict::corroborated(samples, seed)),
    }
}

/// Same-phase compatibility: along sampled rays every `p_k(t z)` must be
/// real-rooted and the family must have a common interlacing.
pub fn same_phase_compatible_probe(
    ps: &[IntPoly],
    ray_samples_n: usize,
    weight_samples_n: usize,
    seed: u64,
) -> Result<ProbeVerdict, StabilityError> {
    if ray_samples_n == 0 || weight_samples_n == 0 {
        return Err(StabilityError::NoSamples);
    }
    let mut vars: Vec<Var> = ps.iter().flat_map(|p| p.variables()).collect();
    vars.sort_unstable();
    vars.dedup();
    let rays = ray_samples(&vars, ray_samples_n, seed);
    let results: Vec<Result<Option<ProbeVerdict>, StabilityError>> = rays
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let restricted: Vec<RatPoly> = ps
                .iter()
                .map(|p| restrict_along(p, t))
                .collect::<Result<_, _>>()?;
            for (k, r) in restricted.iter().enumerate() {
                if !is_real_rooted(r)?.real_rooted {
                    return Ok(Some(ProbeVerdict::refutation(
                        i,
                        seed,
                        Witness::Ray {
                            t: t.clone(),
                            index: k,
                        },
                        coeff_strings(r),
                    )));
                }
            }
            let nonzero: Vec<RatPoly> = restricted.into_iter().filter(|r| !r.is_zero()).collect();
            if nonzero.len() < 2 {
                return Ok(None);
            }
            let v =
                common_interlacing_probe(&nonzero, weight_samples_n, seed.wrapping_add(i as u64))?;
            Ok(match v.witness {
                Some(Witness::Weights { weights }) => Some(ProbeVerdict::refutation(
                    i,
                    seed,
                    Witness::RayWeights {
                        t: t.clone(),
                        weights,
                    },
                    v.exact_values,
                )),
                _ => None,
            })
        })
        .collect();
    for r in results {
        if let Some(v) = r? {
            return Ok(v);
        }
    }
    Ok(ProbeVerdict::corroborated(ray_samples_n, seed))
}

/// The polynomials `f_0, x_1 f_1, ..., x_m f_m` of a proper splitting.
pub fn selection_parts(split: &crate::poly::ProperSplitting) -> Vec<IntPoly> {
    let mut out = vec![split.f0.clone()];
    for (v, f) in &split.parts {
        out.push(f.mul_term(&crate::poly::Monomial::var(*v), &BigInt::one()));
    }
    out
}
