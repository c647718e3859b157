//! Exact multivariate polynomials over ℚ in the symbols `D` (the derivation ∂)
//! and the λ-slots `X1, X2, ...`.
//!
//! Variable `0` is always `D`; variable `k >= 1` is the slot `Xk`. Exponent
//! vectors are stored with trailing zeros trimmed, so a polynomial does not
//! carry a fixed symbol count and two polynomials compare equal exactly when
//! their normalized term maps agree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::scalar::{self, Scalar};

/// Index of a polynomial symbol: `0` is `D`, `k >= 1` is `Xk`.
pub type Var = usize;

/// The derivation symbol.
pub const D: Var = 0;

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// `var^exp`.
    pub fn var_power(var: Var, exp: u32) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = exp;
        Self::from_exponents(e)
    }

    pub fn exponent(&self, var: Var) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// One past the largest variable index that occurs.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let e = (0..n)
            .map(|i| self.exponent(i) + other.exponent(i))
            .collect();
        Monomial::from_exponents(e)
    }

    /// All monomials in variables `0..nvars` of total degree at most `max_degree`,
    /// listed in ascending degree-lex order.
    pub fn all_up_to(nvars: usize, max_degree: i32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if max_degree < 0 {
            return out;
        }
        fn rec(prefix: &mut Vec<u32>, nvars: usize, remaining: u32, out: &mut Vec<Monomial>) {
            if prefix.len() == nvars {
                out.push(Monomial::from_exponents(prefix.clone()));
                return;
            }
            for e in 0..=remaining {
                prefix.push(e);
                rec(prefix, nvars, remaining - e, out);
                prefix.pop();
            }
        }
        rec(&mut Vec::new(), nvars, max_degree as u32, &mut out);
        out.sort_by(degree_lex);
        out
    }
}

/// Degree-lex order: compare total degree, then the exponents of `D`, `X1`,
/// `X2`, ... in turn. Printing lists larger monomials first, so `d` comes
/// before `x` within a degree.
pub fn degree_lex(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        let n = a.width().max(b.width());
        for v in 0..n {
            let c = a.exponent(v).cmp(&b.exponent(v));
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// A polynomial in `D, X1, X2, ...` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(scalar::int(c))
    }

    pub fn monomial(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// The symbol `var` itself.
    pub fn var(var: Var) -> Self {
        Self::monomial(Scalar::one(), Monomial::var_power(var, 1))
    }

    /// Shorthand for `D`.
    pub fn d() -> Self {
        Self::var(D)
    }

    /// Shorthand for the slot `Xk` (`k >= 1`).
    pub fn x(k: usize) -> Self {
        assert!(k >= 1, "slot symbols start at X1");
        Self::var(k)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Scalar, Monomial)>,
    {
        let mut p = Poly::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant term when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i32 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i32)
            .max()
            .unwrap_or(-1)
    }

    /// Degree in a single symbol; `-1` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> i32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var) as i32)
            .max()
            .unwrap_or(-1)
    }

    /// One past the largest symbol index that occurs.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    /// True when only symbols with index `< width` occur.
    pub fn uses_only(&self, width: usize) -> bool {
        self.width() <= width
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution: symbol `k` is replaced by `images[k]` for
    /// `k < images.len()`; higher symbols are left untouched.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut powers: Vec<Vec<Poly>> = vec![Vec::new(); images.len()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut rest = Vec::with_capacity(m.width());
            for (v, &e) in m.exponents().iter().enumerate() {
                if v < images.len() {
                    if e == 0 {
                        rest.push(0);
                        continue;
                    }
                    let cache = &mut powers[v];
                    if cache.is_empty() {
                        cache.push(Poly::one());
                    }
                    while cache.len() <= e as usize {
                        let next = cache.last().unwrap() * &images[v];
                        cache.push(next);
                    }
                    term = &term * &cache[e as usize];
                    rest.push(0);
                } else {
                    rest.push(e);
                }
            }
            let rest = Monomial::from_exponents(rest);
            if rest.width() > 0 {
                term = term.mul_monomial(&rest);
            }
            out += &term;
        }
        out
    }

    /// Replaces one symbol by an expression.
    pub fn substitute(&self, var: Var, expr: &Poly) -> Poly {
        let mut images: Vec<Poly> = (0..=var).map(Poly::var).collect();
        images[var] = expr.clone();
        self.compose(&images)
    }

    /// The shift `D ↦ D + by`, which is how a coefficient crosses a λ-bracket.
    pub fn shift_partial(&self, by: &Poly) -> Poly {
        self.substitute(D, &(&Poly::d() + by))
    }

    /// Renames symbols through `map` (`map[k]` is the new index of symbol `k`).
    pub fn rename(&self, map: &[Var]) -> Poly {
        let images: Vec<Poly> = map.iter().map(|&v| Poly::var(v)).collect();
        self.compose(&images)
    }

    fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    /// The coefficient of `var^n`, as a polynomial in the remaining symbols.
    pub fn coeff_of_power(&self, var: Var, n: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(var) == n {
                let mut e = m.exponents().to_vec();
                if var < e.len() {
                    e[var] = 0;
                }
                out.add_term(Monomial::from_exponents(e), c.clone());
            }
        }
        out
    }

    /// Evaluates at a point; symbols beyond `point.len()` are taken as zero.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(v).cloned().unwrap_or_else(Scalar::zero);
                t *= num_traits::pow(x, e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Terms sorted in descending degree-lex order, the canonical print order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| degree_lex(b.0, a.0));
        v
    }
}

/// Printing uses `d` for `D`, `x` for `X1` when no higher slot occurs, and
/// `x1, x2, ...` otherwise.
pub fn symbol_name(var: Var, width: usize) -> String {
    match var {
        D => "d".to_string(),
        1 if width <= 2 => "x".to_string(),
        k => format!("x{k}"),
    }
}

impl Poly {
    /// Canonical text form, e.g. `d^2 + 4*d*x + 4*x^2` or `1/2*d - 3`.
    pub fn render(&self) -> String {
        self.render_with_width(self.width())
    }

    /// Renders with the symbol naming chosen for an ambient width, so that a
    /// family of polynomials prints with consistent slot names.
    pub fn render_with_width(&self, width: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                factors.push(scalar::render(&mag));
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(symbol_name(v, width)),
                    _ => factors.push(format!("{}^{}", symbol_name(v, width), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Scalar> for Poly {
    fn from(c: Scalar) -> Self {
        Poly::constant(c)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{int, ratio};

    fn x() -> Poly {
        Poly::x(1)
    }

    #[test]
    fn product_expands() {
        let d = Poly::d();
        let p = &(&d + &x()) * &(&d + &x().scale(&int(2)));
        let expected = Poly::from_terms([
            (int(1), Monomial::from_exponents(vec![2])),
            (int(3), Monomial::from_exponents(vec![1, 1])),
            (int(2), Monomial::from_exponents(vec![0, 2])),
        ]);
        assert_eq!(p, expected);
        assert_eq!(p.render(), "d^2 + 3*d*x + 2*x^2");
    }

    #[test]
    fn additive_inverse_and_rational_sum() {
        let p = &Poly::d() + &x().scale(&ratio(3, 7));
        assert!((&p + &(-&p)).is_zero());
        let half = Poly::d().scale(&ratio(1, 2));
        let three_halves = Poly::d().scale(&ratio(3, 2));
        assert_eq!(&half + &three_halves, Poly::d().scale(&int(2)));
    }

    #[test]
    fn skew_substitution() {
        let skew = -(&x() + &Poly::d());
        assert_eq!(x().substitute(1, &skew), skew);
        // (1/2)D + (3/2)X  ↦  -D - (3/2)X
        let p = &Poly::d().scale(&ratio(1, 2)) + &x().scale(&ratio(3, 2));
        let q = p.substitute(1, &skew);
        let expected = &(-Poly::d()) - &x().scale(&ratio(3, 2));
        assert_eq!(q, expected);
        assert_eq!(q.substitute(1, &skew), p);
    }

    #[test]
    fn shift_partial_examples() {
        let y = Poly::x(2);
        let p = &Poly::d() + &y.scale(&int(2));
        assert_eq!(p.shift_partial(&x()), &(&Poly::d() + &x()) + &y.scale(&int(2)));
        assert_eq!(Poly::from_int(3).shift_partial(&x()), Poly::from_int(3));
        let p = &Poly::d() + &Poly::x(2).scale(&int(2));
        assert_eq!(
            p.shift_partial(&Poly::x(1)),
            &(&Poly::d() + &Poly::x(1)) + &Poly::x(2).scale(&int(2))
        );
    }

    #[test]
    fn compose_is_simultaneous() {
        // X1 ↦ X1 + X2, X2 ↦ X1 at once.
        let p = &Poly::x(1) * &Poly::x(2);
        let q = p.compose(&[Poly::d(), &Poly::x(1) + &Poly::x(2), Poly::x(1)]);
        assert_eq!(q, &(&Poly::x(1) + &Poly::x(2)) * &Poly::x(1));
    }

    #[test]
    fn coefficient_extraction() {
        let p = (&Poly::d() + &x().scale(&int(2))).pow(2);
        assert_eq!(p.coeff_of_power(1, 1), Poly::d().scale(&int(4)));
        assert_eq!(p.coeff_of_power(1, 2), Poly::from_int(4));
        assert!(p.coeff_of_power(1, 3).is_zero());
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(Poly::d().scale(&ratio(2, 4)).render(), "1/2*d");
        assert_eq!(Poly::zero().render(), "0");
        assert_eq!((-Poly::one()).render(), "-1");
        let p = &Poly::x(1) + &Poly::x(2);
        assert_eq!(p.render(), "x1 + x2");
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(Monomial::all_up_to(2, 1).len(), 3);
        assert_eq!(Monomial::all_up_to(2, 2).len(), 6);
        assert_eq!(Monomial::all_up_to(3, 2).len(), 10);
        assert!(Monomial::all_up_to(2, -1).is_empty());
    }
}
