//! Exact real-root counting, isolation and comparison over the rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::StabilityError;
use crate::scalar::{rational_string, rational_to_f64};
use crate::RatPoly;

type Q = BigRational;

/// Isolation width every root is refined to: `2^-40`.
pub fn isolation_width() -> Q {
    Q::new(BigInt::one(), BigInt::one() << 40)
}

/// A positive integer multiple of a rational polynomial. Signs at `a/b`
/// come from `Σ c_i a^i b^(d-i)`, which avoids rational normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Signer(Vec<BigInt>);

impl Signer {
    fn new(p: &RatPoly) -> Self {
        let l = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        Signer(
            p.coeffs()
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        )
    }

    fn sign_at(&self, x: &Q) -> i32 {
        let Some((top, rest)) = self.0.split_last() else {
            return 0;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = top.clone();
        let mut bp = BigInt::one();
        for c in rest.iter().rev() {
            bp *= b;
            acc = acc * a + c * &bp;
        }
        int_sign(&acc)
    }

    fn sign_at_pos_inf(&self) -> i32 {
        self.0.last().map_or(0, int_sign)
    }

    fn sign_at_neg_inf(&self) -> i32 {
        let s = self.sign_at_pos_inf();
        if self.0.len() % 2 == 0 {
            -s
        } else {
            s
        }
    }
}

fn int_sign(v: &BigInt) -> i32 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// The Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let r = -&chain.last().unwrap().rem(&next);
        // positive rescaling keeps every sign and bounds coefficient growth
        let r = match r.leading() {
            Some(l) => r.scale(&(Q::one() / l.abs())),
            None => r,
        };
        chain.push(next);
        next = r;
    }
    chain
}

fn changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

#[derive(Clone, Debug)]
enum End<'a> {
    NegInf,
    PosInf,
    At(&'a Q),
}

fn variations(chain: &[Signer], at: End<'_>) -> usize {
    changes(chain.iter().map(|f| match at {
        End::NegInf => f.sign_at_neg_inf(),
        End::PosInf => f.sign_at_pos_inf(),
        End::At(x) => f.sign_at(x),
    }))
}

fn signers(chain: &[RatPoly]) -> Vec<Signer> {
    chain.iter().map(Signer::new).collect()
}

/// Distinct roots of a square-free `p` in `(lo, hi]` (open ends for `None`).
fn count_square_free(chain: &[Signer], lo: Option<&Q>, hi: Option<&Q>) -> usize {
    let a = variations(chain, lo.map_or(End::NegInf, End::At));
    let b = variations(chain, hi.map_or(End::PosInf, End::At));
    a.saturating_sub(b)
}

/// Number of distinct real roots in `(lo, hi]`, or on the whole line.
pub fn count_real_roots(p: &RatPoly, interval: Option<(&Q, &Q)>) -> Result<usize, StabilityError> {
    if p.is_zero() {
        return Err(StabilityError::ZeroPolynomial);
    }
    let chain = signers(&sturm_chain(&p.square_free_part()));
    Ok(match interval {
        None => count_square_free(&chain, None, None),
        Some((lo, hi)) if lo >= hi => 0,
        Some((lo, hi)) => count_square_free(&chain, Some(lo), Some(hi)),
    })
}

/// Distinct real roots in the open interval `(lo, hi)`.
pub fn count_roots_open(p: &RatPoly, lo: &Q, hi: &Q) -> Result<usize, StabilityError> {
    let n = count_real_roots(p, Some((lo, hi)))?;
    Ok(if lo < hi && p.eval(hi).is_zero() {
        n - 1
    } else {
        n
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealRootednessVerdict {
    pub real_rooted: bool,
    /// Real roots counted with multiplicity.
    pub real_root_count: usize,
    pub degree: usize,
}

/// Real-rootedness with multiplicities from the square-free decomposition.
pub fn is_real_rooted(p: &RatPoly) -> Result<RealRootednessVerdict, StabilityError> {
    let degree = p.degree().ok_or(StabilityError::ZeroPolynomial)?;
    let mut count = 0;
    for (factor, mult) in p.square_free_decomposition() {
        let chain = signers(&sturm_chain(&factor));
        count += mult * count_square_free(&chain, None, None);
    }
    Ok(RealRootednessVerdict {
        real_rooted: count == degree,
        real_root_count: count,
        degree,
    })
}

/// `1 + max |a_i / a_n|`: every root has absolute value below this.
pub fn cauchy_bound(p: &RatPoly) -> Q {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let n = p.degree().unwrap();
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / lead.clone())
        .max()
        .unwrap_or_else(Q::zero);
    m + Q::one()
}

/// A real algebraic number: the unique root of the square-free `poly` in
/// `(lo, hi]`, or exactly `lo` when `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    poly: RatPoly,
    signer: Signer,
    lo: Q,
    hi: Q,
    multiplicity: usize,
}

impl RealRoot {
    fn exact(poly: RatPoly, x: Q, multiplicity: usize) -> Self {
        RealRoot {
            signer: Signer::new(&poly),
            poly,
            lo: x.clone(),
            hi: x,
            multiplicity,
        }
    }

    pub fn lo(&self) -> &Q {
        &self.lo
    }

    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Square-free monic polynomial the root belongs to.
    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// The value if it is known to be rational.
    pub fn exact_value(&self) -> Option<&Q> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Q {
        self.hi.clone() - self.lo.clone()
    }

    pub fn approx(&self) -> f64 {
        rational_to_f64(&((self.lo.clone() + self.hi.clone()) / Q::from_integer(2.into())))
    }

    /// Halves the interval once.
    pub fn refine(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = (self.lo.clone() + self.hi.clone()) / Q::from_integer(2.into());
        let s_mid = self.signer.sign_at(&mid);
        if s_mid == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        // hi is never a root here, so the simple root sits where the sign flips
        if s_mid != self.signer.sign_at(&self.hi) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Q) {
        while !self.is_exact() && &self.width() > width {
            self.refine();
        }
    }

    /// Makes the root exact when the simplest rational in `[lo, hi]` is a
    /// root. At width `2^-40` this catches every rational root whose
    /// denominator is at most `2^20`.
    pub fn snap_rational(&mut self) {
        if self.is_exact() {
            return;
        }
        let s = simplest_between(&self.lo, &self.hi);
        if self.signer.sign_at(&s) == 0 {
            self.lo = s.clone();
            self.hi = s;
        }
    }

    /// Compares the root with a rational number exactly.
    pub fn cmp_rational(&self, q: &Q) -> Ordering {
        let mut r = self.clone();
        loop {
            if r.is_exact() {
                return r.lo.cmp(q);
            }
            if q <= &r.lo {
                return Ordering::Greater;
            }
            if q > &r.hi {
                return Ordering::Less;
            }
            if r.signer.sign_at(q) == 0 {
                return Ordering::Equal;
            }
            r.refine();
        }
    }

    /// Exact comparison of two algebraic numbers; equality is decided by a
    /// common root of the gcd inside the overlap, never by tolerance.
    pub fn cmp_root(&self, other: &RealRoot) -> Ordering {
        if let Some(x) = self.exact_value() {
            return other.cmp_rational(x).reverse();
        }
        if let Some(y) = other.exact_value() {
            return self.cmp_rational(y);
        }
        let g = self.poly.gcd(&other.poly);
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if let Some(x) = a.exact_value() {
                return b.cmp_rational(x).reverse();
            }
            if let Some(y) = b.exact_value() {
                return a.cmp_rational(y);
            }
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if g.degree().unwrap_or(0) > 0 {
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if count_real_roots(&g, Some((lo, hi))).unwrap_or(0) > 0 {
                    return Ordering::Equal;
                }
            }
            a.refine();
            b.refine();
        }
    }

    pub fn to_interval(&self) -> RootInterval {
        RootInterval {
            lo: rational_string(&self.lo),
            hi: rational_string(&self.hi),
            sign_lo: self.poly.sign_at(&self.lo),
            sign_hi: self.poly.sign_at(&self.hi),
            approx: self.approx(),
            exact: self.exact_value().map(rational_string),
        }
    }
}

/// The rational with the smallest denominator in `[lo, hi]`, `lo < hi`.
fn simplest_between(lo: &Q, hi: &Q) -> Q {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = fl.clone() + Q::one();
    if &next <= hi {
        return next;
    }
    // lo and hi share the integer part; recurse on the reciprocals of the fractional parts
    let inner = simplest_between(
        &(hi.clone() - fl.clone()).recip(),
        &(lo.clone() - fl.clone()).recip(),
    );
    fl + inner.recip()
}

/// Serializable view of an isolated root.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootInterval {
    pub lo: String,
    pub hi: String,
    /// Exact signs of the square-free part at the endpoints.
    pub sign_lo: i32,
    pub sign_hi: i32,
    pub approx: f64,
    pub exact: Option<String>,
}

fn isolate_square_free(f: &RatPoly, multiplicity: usize, out: &mut Vec<RealRoot>) {
    let chain = signers(&sturm_chain(f));
    let b = cauchy_bound(f);
    let mut stack = vec![(-b.clone(), b)];
    let two = Q::from_integer(2.into());
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = count_square_free(&chain, Some(&lo), Some(&hi));
        match n {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let mid = (lo.clone() + hi.clone()) / two.clone();
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    let width = isolation_width();
    for (lo, hi) in found {
        let mut r = if f.eval(&hi).is_zero() {
            RealRoot::exact(f.clone(), hi, multiplicity)
        } else {
            RealRoot {
                poly: f.clone(),
                signer: Signer::new(f),
                lo,
                hi,
                multiplicity,
            }
        };
        r.refine_to(&width);
        r.snap_rational();
        out.push(r);
    }
}

/// Every real root, ascending, refined to width at most `2^-40`.
pub fn isolate_real_roots(p: &RatPoly) -> Result<Vec<RealRoot>, StabilityError> {
    if p.is_zero() {
        return Err(StabilityError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        isolate_square_free(&factor, mult, &mut out);
    }
    out.sort_by(|a, b| a.cmp_root(b));
    Ok(out)
}

/// Roots listed with multiplicity, descending.
fn descending_with_multiplicity(p: &RatPoly) -> Result<Vec<RealRoot>, StabilityError> {
    let roots = isolate_real_roots(p)?;
    Ok(roots
        .into_iter()
        .rev()
        .flat_map(|r| std::iter::repeat(r.clone()).take(r.multiplicity))
        .collect())
}

/// `q ≪ p`: with roots `λ_1 ≥ λ_2 ≥ ...` of `p` and `γ_1 ≥ ...` of `q`,
/// `λ_1 ≥ γ_1 ≥ λ_2 ≥ γ_2 ≥ ...`. Root positions do not depend on the
/// sign of the leading coefficient, so no normalization is needed here.
pub fn interlaces(q: &RatPoly, p: &RatPoly) -> Result<bool, StabilityError> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(StabilityError::ZeroPolynomial),
    };
    if dq > dp || dp - dq > 1 {
        return Err(StabilityError::DegreeGap { p: dp, q: dq });
    }
    for (i, f) in [p, q].into_iter().enumerate() {
        if !is_real_rooted(f)?.real_rooted {
            return Err(StabilityError::NotRealRooted(i));
        }
    }
    let lam = descending_with_multiplicity(p)?;
    let gam = descending_with_multiplicity(q)?;
    for (k, g) in gam.iter().enumerate() {
        if lam[k].cmp_root(g) == Ordering::Less {
            return Ok(false);
        }
        if let Some(next) = lam.get(k + 1) {
            if g.cmp_root(next) == Ordering::Less {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn q(cs: &[i64]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn from_roots(rs: &[Q]) -> RatPoly {
        rs.iter().fold(RatPoly::one(), |acc, r| {
            &acc * &RatPoly::new(vec![-r.clone(), int(1)])
        })
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&q(&[1, 4, 3, 1]), None).unwrap(), 1);
        assert_eq!(count_real_roots(&q(&[1, 3, 3]), None).unwrap(), 0);
        assert_eq!(count_real_roots(&q(&[1, 3, 3, 1]), None).unwrap(), 1);
        assert_eq!(
            count_real_roots(&q(&[-1, 0, 1]), Some((&int(-1), &int(1)))).unwrap(),
            1
        );
        assert_eq!(
            count_roots_open(&q(&[-1, 0, 1]), &int(-2), &int(1)).unwrap(),
            1
        );
        assert!(count_real_roots(&RatPoly::zero(), None).is_err());
    }

    #[test]
    fn verdicts() {
        let v = is_real_rooted(&q(&[1, 3, 3, 1])).unwrap();
        assert_eq!((v.real_rooted, v.real_root_count, v.degree), (true, 3, 3));
        assert!(is_real_rooted(&q(&[1, 6, 9, 2])).unwrap().real_rooted);
        assert!(!is_real_rooted(&q(&[1, 4, 3, 1])).unwrap().real_rooted);
        assert!(is_real_rooted(&q(&[1, 5])).unwrap().real_rooted);
        assert!(is_real_rooted(&q(&[7])).unwrap().real_rooted);
    }

    #[test]
    fn isolation_and_exact_roots() {
        let p = from_roots(&[rat(-1, 3), rat(-1, 3), int(2), rat(5, 7)]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0].multiplicity(), 2);
        assert_eq!(roots[0].cmp_rational(&rat(-1, 3)), Ordering::Equal);
        assert_eq!(roots[1].cmp_rational(&rat(5, 7)), Ordering::Equal);
        assert_eq!(roots[2].cmp_rational(&int(2)), Ordering::Equal);
        // sqrt(2)
        let s = isolate_real_roots(&q(&[-2, 0, 1])).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s[1].width() <= isolation_width());
        assert!((s[1].approx() - 2f64.sqrt()).abs() < 1e-10);
        assert_eq!(s[1].cmp_rational(&rat(141421, 100000)), Ordering::Greater);
        assert_eq!(s[1].cmp_rational(&rat(141422, 100000)), Ordering::Less);
    }

    #[test]
    fn equal_irrational_roots_compare_equal() {
        let a = &q(&[-2, 0, 1]) * &q(&[1, 1]);
        let b = &q(&[-2, 0, 1]) * &q(&[-5, 1]);
        let ra = isolate_real_roots(&a).unwrap();
        let rb = isolate_real_roots(&b).unwrap();
        let sa = ra
            .iter()
            .find(|r| r.cmp_rational(&int(1)) == Ordering::Greater)
            .unwrap();
        let sb = rb
            .iter()
            .find(|r| {
                r.cmp_rational(&int(1)) == Ordering::Greater
                    && r.cmp_rational(&int(2)) == Ordering::Less
            })
            .unwrap();
        assert_eq!(sa.cmp_root(sb), Ordering::Equal);
        let three = isolate_real_roots(&q(&[-3, 0, 1])).unwrap();
        assert_eq!(sa.cmp_root(&three[1]), Ordering::Less);
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&q(&[1, 1]), &q(&[0, 2, 1])).unwrap());
        assert!(!interlaces(&q(&[3, 1]), &q(&[0, 1, 1])).unwrap());
        let p = from_roots(&[int(-3), int(-1), int(0), int(4)]);
        assert!(interlaces(&p.derivative(), &p).unwrap());
        assert!(interlaces(&p, &p).unwrap());
        assert!(matches!(
            interlaces(&q(&[1]), &p),
            Err(StabilityError::DegreeGap { .. })
        ));
        assert!(matches!(
            interlaces(&q(&[1, 1]), &q(&[1, 0, 1])),
            Err(StabilityError::NotRealRooted(0))
        ));
    }
}
