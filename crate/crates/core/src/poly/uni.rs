//! Dense univariate polynomials, coefficients in ascending degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::scalar::{OrderedField, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c z^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn z() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = C::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + C::one();
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `p(c z)`.
    pub fn rescale_var(&self, c: &C) -> Self {
        let mut pow = C::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        Self::new(out)
    }

    /// `q` with `q(z^2) = self`, when only even powers occur.
    pub fn even_part_in_square(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: OrderedField> UniPoly<C> {
    /// Euclidean division: `(q, r)` with `self = q d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d
            .leading()
            .expect("division by the zero polynomial")
            .clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![C::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() / dl.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic scalar multiple (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() / l.clone()).collect())
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors, monic.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's square-free decomposition: `[(a_1, 1), (a_2, 2), ...]` with
    /// `self = c * Π a_i^i`, each `a_i` monic square-free, non-constant.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Sign of `self(x)`: -1, 0 or 1.
    pub fn sign_at(&self, x: &C) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign as `x -> +inf`.
    pub fn sign_at_pos_inf(&self) -> i32 {
        self.leading()
            .map_or(0, |l| if l.is_positive() { 1 } else { -1 })
    }

    /// Sign as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => self.sign_at_pos_inf() * if d % 2 == 0 { 1 } else { -1 },
        }
    }
}

impl<C: Scalar + fmt::Display + Signed> UniPoly<C> {
    /// Human-readable form in the variable `var`, e.g. `1 + 4z + 3z^2 + z^3`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let mag = c.abs();
            let mag_s = mag.to_string();
            let mag_s = if mag_s.contains('/') && k > 0 {
                format!("({mag_s})")
            } else {
                mag_s
            };
            match k {
                0 => out.push_str(&mag_s),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag_s);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl<C: Scalar + fmt::Display + Signed> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("z"))
    }
}

impl<C: Scalar> Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: Self) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Scalar> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: Self) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Scalar> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Scalar> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: Self) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<C: Scalar> Add for UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: Self) -> UniPoly<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: Self) -> UniPoly<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: Self) -> UniPoly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use num_rational::BigRational;

    type Q = UniPoly<BigRational>;

    fn q(cs: &[i64]) -> Q {
        Q::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(q(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(q(&[0]).degree(), None);
        assert_eq!(q(&[1, 4, 3, 1]).to_string(), "1 + 4z + 3z^2 + z^3");
        assert_eq!(q(&[0, -1, 0, 2]).to_string(), "-z + 2z^3");
        assert_eq!(
            Q::new(vec![rat(1, 2), rat(-3, 4)]).to_string(),
            "1/2 - (3/4)z"
        );
    }

    #[test]
    fn division_identity() {
        let p = q(&[3, -2, 0, 5, 1]);
        let d = q(&[1, 2, 1]);
        let (qq, r) = p.div_rem(&d);
        assert_eq!(&(&qq * &d) + &r, p);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_and_square_free() {
        // (z+1)^2 (z-2)
        let p = &(&q(&[1, 1]) * &q(&[1, 1])) * &q(&[-2, 1]);
        assert_eq!(p.gcd(&p.derivative()), q(&[1, 1]));
        assert_eq!(p.square_free_part(), &q(&[1, 1]) * &q(&[-2, 1]));
        let dec = p.square_free_decomposition();
        assert_eq!(dec, vec![(q(&[-2, 1]), 1), (q(&[1, 1]), 2)]);
    }

    #[test]
    fn even_part() {
        assert_eq!(
            q(&[1, 0, -6, 0, 9, 0, -2]).even_part_in_square(),
            Some(q(&[1, -6, 9, -2]))
        );
        assert_eq!(q(&[1, 1]).even_part_in_square(), None);
    }

    #[test]
    fn signs_at_infinity() {
        let p = q(&[0, 0, 0, -1]);
        assert_eq!(p.sign_at_pos_inf(), -1);
        assert_eq!(p.sign_at_neg_inf(), 1);
        assert_eq!(p.sign_at(&int(2)), -1);
    }
}
