//! Sparse multivariate polynomials over any [`Scalar`] ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{PolyError, UniPoly, MAX_TERMS};
use crate::scalar::Scalar;

pub type Var = u32;

/// Exponent vector stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, exponents positive.
///
/// Ordering is graded: lower total degree first; within a degree, the
/// monomial with the larger exponent on the earliest differing variable
/// comes first (so `x_a x_c` precedes `x_a x_d` precedes `x_b x_d`). This is
/// a valid monomial order, and the leading term of a polynomial is its last.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// From `(var, exp)` pairs in any order; zero exponents dropped,
    /// repeated variables merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// Square-free monomial over the given variables.
    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Renames variables; exponents of collapsed variables add up.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a.0 != b.0 {
                    // self has a positive exponent where other has none
                    return if a.0 < b.0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
                if a.1 != b.1 {
                    return b.1.cmp(&a.1);
                }
            }
            // equal degree and equal common prefix: same monomial
            debug_assert_eq!(self.0.len(), other.0.len());
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("x{v}")
                } else {
                    format!("x{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `x_{name}` in LaTeX style; single-character names drop the braces.
pub fn var_text(name: &str) -> String {
    if name.chars().count() == 1 {
        format!("x_{name}")
    } else {
        format!("x_{{{name}}}")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in display order (ascending degree).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Degree at most one in every variable.
    pub fn is_multi_affine(&self) -> bool {
        self.terms.keys().all(Monomial::is_square_free)
    }

    /// Sorted list of variables that occur.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn check_cap(&self) -> Result<(), PolyError> {
        if self.terms.len() > MAX_TERMS {
            Err(PolyError::TooManyTerms(MAX_TERMS))
        } else {
            Ok(())
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone())),
        )
    }

    /// `self * c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let out = self * other;
        out.check_cap()?;
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `∂p/∂x_v`.
    pub fn partial_derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut scaled = C::zero();
            for _ in 0..e {
                scaled = scaled + c.clone();
            }
            let reduced = Monomial::from_pairs(
                m.0.iter()
                    .map(|&(w, f)| (w, if w == v { f - 1 } else { f })),
            );
            out.add_term(reduced, scaled);
        }
        out
    }

    /// Sets each listed variable to zero (drops every term containing one).
    pub fn set_zero(&self, vars: &[Var]) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.0.iter().any(|(v, _)| vars.contains(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms containing `x_v`, i.e. `x_v * ∂p/∂x_v` for multi-affine `p`.
    pub fn select(&self, v: Var) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) > 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the square-free terms.
    pub fn multi_affine_part(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_square_free())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at a point; `point(v)` must be defined for every variable.
    pub fn evaluate_with(&self, point: impl Fn(Var) -> Option<C>) -> Result<C, PolyError> {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point(v).ok_or(PolyError::MissingVariable(v))?;
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Renames variables through `f`; collapsed variables multiply.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Substitutes a polynomial for each variable.
    pub fn substitute(&self, f: impl Fn(Var) -> MultiPoly<C>) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for &(v, e) in &m.0 {
                t = t.checked_mul(&f(v).pow(e))?;
            }
            out = &out + &t;
        }
        out.check_cap()?;
        Ok(out)
    }

    /// `p(t z)`: every variable `x_v` becomes `t_v z`.
    pub fn restrict<D>(&self, t: impl Fn(Var) -> Option<D>) -> Result<UniPoly<D>, PolyError>
    where
        D: Scalar + From<C>,
    {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![D::zero(); deg + 1];
        for (m, c) in &self.terms {
            let mut w = D::from(c.clone());
            for &(v, e) in &m.0 {
                let tv = t(v).ok_or(PolyError::MissingDirection(v))?;
                for _ in 0..e {
                    w = w * tv.clone();
                }
            }
            let d = m.degree() as usize;
            coeffs[d] = coeffs[d].clone() + w;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// The diagonal `p(z, z, ..., z)`.
    pub fn diagonal<D>(&self) -> UniPoly<D>
    where
        D: Scalar + From<C>,
    {
        self.restrict(|_| Some(D::one()))
            .expect("all-ones direction covers every variable")
    }

    /// Exact division `self / d`, if `d` divides `self` with coefficients
    /// in the same ring. Long division on leading terms; the quotient is
    /// verified by multiplying back.
    pub fn exact_divide(&self, d: &Self) -> Result<Option<Self>, PolyError> {
        let (dm, dc) = d.leading_term().ok_or(PolyError::DivisionByZero)?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let Some(qm) = rm.div(&dm) else {
                return Ok(None);
            };
            let qc = rc.clone() / dc.clone();
            if qc.clone() * dc.clone() != *rc {
                return Ok(None);
            }
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c.clone() * qc.clone()));
            }
            quot.add_term(qm, qc);
            quot.check_cap()?;
        }
        debug_assert!(rem.is_zero());
        if &quot * d != *self {
            return Ok(None);
        }
        Ok(Some(quot))
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<C: Scalar + fmt::Display + Signed> MultiPoly<C> {
    /// Canonical text: ascending degree, explicit signs, `x_{name}` variables.
    pub fn to_text(&self, name: &dyn Fn(Var) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> =
                m.0.iter()
                    .map(|&(v, e)| {
                        let base = var_text(&name(v));
                        if e == 1 {
                            base
                        } else {
                            format!("{base}^{e}")
                        }
                    })
                    .collect();
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push(' ');
                }
                out.push_str(&vars.join(" "));
            }
        }
        out
    }
}

impl<C: Scalar + fmt::Display + Signed> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&|v| v.to_string()))
    }
}

impl<C: Scalar> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Scalar> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: Self) -> MultiPoly<C> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Scalar> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(mut self, rhs: Self) -> MultiPoly<C> {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

impl<C: Scalar> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = MultiPoly<BigInt>;

    fn x(v: Var) -> P {
        P::var(v)
    }

    fn c(k: i64) -> P {
        P::constant(BigInt::from(k))
    }

    #[test]
    fn monomial_order_is_graded_and_matches_display() {
        let a = Monomial::from_vars([0, 2]);
        let b = Monomial::from_vars([0, 3]);
        let d = Monomial::from_vars([1, 3]);
        assert!(a < b && b < d);
        assert!(Monomial::var(5) < a);
        assert!(Monomial::one() < Monomial::var(0));
        assert!(Monomial::from_pairs([(0, 2)]) < Monomial::from_vars([0, 1]));
    }

    #[test]
    fn monomial_division() {
        let m = Monomial::from_pairs([(0, 2), (3, 1)]);
        assert_eq!(
            m.div(&Monomial::var(0)),
            Some(Monomial::from_pairs([(0, 1), (3, 1)]))
        );
        assert_eq!(m.div(&Monomial::var(1)), None);
        assert_eq!(m.div(&Monomial::from_pairs([(0, 3)])), None);
        assert_eq!(m.div(&m), Some(Monomial::one()));
    }

    #[test]
    fn arithmetic_and_text() {
        let p = &(&c(1) + &x(0)) * &(&c(1) - &x(1));
        assert_eq!(p.to_string(), "1 + x_0 - x_1 - x_0 x_1");
        assert_eq!((&p - &p).to_string(), "0");
        let q = &x(0) * &x(0);
        assert_eq!(q.scale(&BigInt::from(-3)).to_string(), "-3 x_0^2");
        assert!(!q.is_multi_affine());
        let names = |v: Var| ["a", "ab"][v as usize].to_string();
        assert_eq!((&x(0) + &x(1)).to_text(&names), "x_a + x_{ab}");
    }

    #[test]
    fn derivative_and_deselection() {
        // 1 + x0 + x1 + x0 x1^2
        let p = &(&(&c(1) + &x(0)) + &x(1)) + &(&x(0) * &x(1).pow(2));
        assert_eq!(
            p.partial_derivative(1),
            &c(1)
                + &c(2)
                    .mul_term(&Monomial::var(0), &BigInt::from(1))
                    .mul_term(&Monomial::var(1), &BigInt::from(1))
        );
        assert_eq!(p.set_zero(&[0]), &c(1) + &x(1));
        assert_eq!(p.select(0), &x(0) + &(&x(0) * &x(1).pow(2)));
    }

    #[test]
    fn exact_division() {
        let d = &c(1) + &x(0);
        let q = &(&c(1) + &x(1)) - &(&x(0) * &x(2));
        let p = &d * &q;
        assert_eq!(p.exact_divide(&d).unwrap(), Some(q));
        assert_eq!(p.exact_divide(&p).unwrap(), Some(c(1)));
        assert_eq!(
            (&c(1) + &x(0)).exact_divide(&(&c(1) + &x(1))).unwrap(),
            None
        );
        assert_eq!(c(3).exact_divide(&c(2)).unwrap(), None);
        assert!(matches!(
            p.exact_divide(&P::zero()),
            Err(PolyError::DivisionByZero)
        ));
    }

    #[test]
    fn restriction_and_substitution() {
        let p = &(&c(1) + &x(0)) * &(&c(1) + &x(1));
        let r: UniPoly<BigRational> = p
            .restrict(|v| Some(BigRational::from_integer(BigInt::from(v as i64 + 1))))
            .unwrap();
        assert_eq!(
            r.coeffs(),
            &[1, 3, 2].map(|k| BigRational::from_integer(BigInt::from(k)))
        );
        assert!(matches!(
            p.restrict::<BigRational>(|_| None),
            Err(PolyError::MissingDirection(_))
        ));
        let s = p.substitute(|v| if v == 0 { x(1) } else { x(2) }).unwrap();
        assert_eq!(s, &(&c(1) + &x(1)) * &(&c(1) + &x(2)));
        assert_eq!(p.map_vars(|_| 7), (&c(1) + &x(7)).pow(2));
    }

    #[test]
    fn evaluation() {
        let p = &(&c(1) + &x(0)) * &x(1);
        assert_eq!(
            p.evaluate_with(|v| Some(BigInt::from(v as i64 + 2)))
                .unwrap(),
            BigInt::from(9)
        );
        assert!(p.evaluate_with(|_| None).is_err());
    }
}
