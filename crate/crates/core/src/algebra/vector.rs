use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Signed;

use crate::kernel::poly::{Poly, Var, D};
use crate::kernel::scalar::Scalar;

/// A basis-indexed vector of polynomials.
///
/// With coefficients in `D` alone this is an element of a free ℚ[∂]-module;
/// with λ-slots it is a bracket or cochain value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Poly>);

/// An element of a free ℚ[∂]-module (coefficients in `D` only).
pub type Element = Vector;

/// A λ-valued element, coefficients in `D` and one or more slots.
pub type LValue = Vector;

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Poly::zero(); dim])
    }

    /// The `i`-th generator.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Poly::one();
        v
    }

    pub fn from_polys(c: Vec<Poly>) -> Self {
        Vector(c)
    }

    /// `p·e_i`.
    pub fn term(dim: usize, i: usize, p: Poly) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = p;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn comps(&self) -> &[Poly] {
        &self.0
    }

    pub fn comp(&self, i: usize) -> &Poly {
        &self.0[i]
    }

    pub fn comp_mut(&mut self, i: usize) -> &mut Poly {
        &mut self.0[i]
    }

    pub fn into_polys(self) -> Vec<Poly> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_zero)
    }

    /// Indices of nonzero components.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, _)| i)
    }

    /// One past the largest symbol index used by any component.
    pub fn width(&self) -> usize {
        self.0.iter().map(Poly::width).max().unwrap_or(0)
    }

    /// True when the slot symbol occurs in some component.
    pub fn uses_var(&self, var: Var) -> bool {
        self.0.iter().any(|p| p.degree_in(var) > 0)
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(Poly::total_degree).max().unwrap_or(-1)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiplication by a polynomial coefficient.
    pub fn mul_poly(&self, p: &Poly) -> Vector {
        Vector(self.0.iter().map(|q| q * p).collect())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Vector {
        Vector(self.0.iter().map(f).collect())
    }

    pub fn compose(&self, images: &[Poly]) -> Vector {
        self.map(|p| p.compose(images))
    }

    pub fn substitute(&self, var: Var, expr: &Poly) -> Vector {
        self.map(|p| p.substitute(var, expr))
    }

    /// `D ↦ D + by` on every coefficient.
    pub fn shift_partial(&self, by: &Poly) -> Vector {
        self.map(|p| p.shift_partial(by))
    }

    pub fn coeff_of_power(&self, var: Var, n: u32) -> Vector {
        self.map(|p| p.coeff_of_power(var, n))
    }

    /// Concatenation, used for direct sums.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut c = self.0.clone();
        c.extend(other.0.iter().cloned());
        Vector(c)
    }

    /// The sub-vector on components `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Vector {
        Vector(self.0[range].to_vec())
    }

    /// Embeds into a larger basis at an offset.
    pub fn embed(&self, dim: usize, offset: usize) -> Vector {
        let mut v = Vector::zero(dim);
        for (i, p) in self.0.iter().enumerate() {
            v.0[offset + i] = p.clone();
        }
        v
    }

    /// Canonical text such as `(d + 2*x)*L - 1/2*E`, using `names` for the
    /// generators and slot names chosen for `width`.
    pub fn render(&self, names: &[String], width: usize) -> String {
        let mut out = String::new();
        for i in self.support() {
            let p = &self.0[i];
            let body = p.render_with_width(width);
            let (neg, text) = if p.num_terms() == 1 {
                let neg = p.terms().next().unwrap().1.is_negative();
                let abs = if neg { -p.clone() } else { p.clone() };
                let text = if abs.is_one() {
                    names[i].clone()
                } else {
                    format!("{}*{}", abs.render_with_width(width), names[i])
                };
                (neg, text)
            } else {
                (false, format!("({})*{}", body, names[i]))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&text);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Rendering with generic generator names `e0, e1, ...`.
    pub fn render_generic(&self) -> String {
        let names: Vec<String> = (0..self.dim()).map(|i| format!("e{i}")).collect();
        self.render(&names, self.width())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_generic())
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Vector> for Vector {
    fn sub_assign(&mut self, rhs: &Vector) {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut v = self.clone();
        v += rhs;
        v
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut v = self.clone();
        v -= rhs;
        v
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(mut self, rhs: Vector) -> Vector {
        self += &rhs;
        self
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(mut self, rhs: Vector) -> Vector {
        self -= &rhs;
        self
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.map(|p| -p)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

/// `p(∂)` applied as the derivation: multiplication by `D`.
pub fn partial(v: &Vector) -> Vector {
    v.mul_poly(&Poly::var(D))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{int, ratio};

    #[test]
    fn rendering() {
        let names = vec!["L".to_string(), "E".to_string()];
        let v = Vector::from_polys(vec![
            &Poly::d() + &Poly::x(1).scale(&int(2)),
            Poly::from_int(-1),
        ]);
        assert_eq!(v.render(&names, 2), "(d + 2*x)*L - E");
        let w = Vector::from_polys(vec![Poly::d().scale(&ratio(1, 2)), Poly::zero()]);
        assert_eq!(w.render(&names, 1), "1/2*d*L");
        assert_eq!(Vector::zero(2).render(&names, 0), "0");
        let n = Vector::from_polys(vec![Poly::d().scale(&int(-3)), Poly::one()]);
        assert_eq!(n.render(&names, 1), "-3*d*L + E");
    }
}
