//! Dense univariate polynomials in `D` over ℚ: the Euclidean ring used for
//! Hermite reduction and matrix inversion over ℚ[∂].

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Monomial, Poly, D};
use super::scalar::Scalar;

/// Coefficients in ascending degree order, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Scalar::one()])
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly(c)
    }

    /// Converts a polynomial that involves only `D`.
    pub fn from_poly(p: &Poly) -> Option<Self> {
        if !p.uses_only(1) {
            return None;
        }
        let deg = p.degree_in(D).max(0) as usize;
        let mut c = vec![Scalar::zero(); deg + 1];
        for (m, v) in p.terms() {
            c[m.exponent(D) as usize] = v.clone();
        }
        Some(Self::from_coeffs(c))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| (c.clone(), Monomial::var_power(D, k as u32))),
        )
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `-1` for zero.
    pub fn degree(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.0.last()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.0.iter().map(|x| x * c).collect())
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Scalar::zero(); k];
        c.extend(self.0.iter().cloned());
        UniPoly(c)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut q = vec![Scalar::zero(); (self.degree() - divisor.degree() + 1).max(0) as usize];
        let mut r = self.clone();
        while r.degree() >= divisor.degree() {
            let k = (r.degree() - divisor.degree()) as usize;
            let c = r.leading().unwrap() / &lead;
            q[k] = c.clone();
            r = &r - &divisor.shifted(k).scale(&c);
        }
        (UniPoly::from_coeffs(q), r)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.0.len().max(rhs.0.len());
        UniPoly::from_coeffs(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Scalar::zero);
                    let b = rhs.0.get(i).cloned().unwrap_or_else(Scalar::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c.clone()).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Scalar::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{int, ratio};

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn division_identity() {
        let a = up(&[1, 2, 3, 4]);
        let b = up(&[1, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree() < b.degree());
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn poly_conversion() {
        let p = Poly::d().scale(&ratio(1, 2));
        let u = UniPoly::from_poly(&p).unwrap();
        assert_eq!(u.to_poly(), p);
        assert!(UniPoly::from_poly(&Poly::x(1)).is_none());
    }
}
