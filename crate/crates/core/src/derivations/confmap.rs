use num_traits::Zero;

use crate::algebra::{apply_endo, Algebra, Basis, EndoMap, Vector};
use crate::error::{Error, Result};
use crate::kernel::poly::{Poly, Var, D};
use crate::kernel::polymat::PolyMatrix;
use crate::kernel::scalar::{int, Scalar};
use crate::parity::Parity;

/// A conformal linear map `f_λ` on a free module of rank `n`:
/// `f_λ(e_i) = Σ_j P_ji(∂, λ) e_j` with `λ` stored as `X1`, extended by
/// `f_λ(p(∂)m) = p(∂+λ) f_λ(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConfMap {
    parity: Parity,
    matrix: PolyMatrix,
}

impl ConfMap {
    pub fn new(parity: Parity, matrix: PolyMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols(),
            });
        }
        if matrix.rows().iter().flatten().any(|p| p.width() > 2) {
            return Err(Error::precondition("map entries may only involve d and x"));
        }
        Ok(ConfMap { parity, matrix })
    }

    pub fn zero(n: usize, parity: Parity) -> Self {
        ConfMap {
            parity,
            matrix: PolyMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        ConfMap {
            parity: Parity::Even,
            matrix: PolyMatrix::identity(n),
        }
    }

    /// The map with `f_λ(e_i) = columns[i]`.
    pub fn from_columns(parity: Parity, columns: &[Vector]) -> Result<Self> {
        let n = columns.len();
        let matrix = PolyMatrix::from_fn(n, n, |j, i| columns[i].comp(j).clone());
        Self::new(parity, matrix)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    /// `f_λ(e_i)` with `λ = X1`.
    pub fn column(&self, i: usize) -> Vector {
        Vector::from_polys(self.matrix.column(i))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.rows().iter().flatten().all(Poly::is_zero)
    }

    pub fn degree(&self) -> i32 {
        self.matrix
            .rows()
            .iter()
            .flatten()
            .map(Poly::total_degree)
            .max()
            .unwrap_or(-1)
    }

    /// `f_s(v)`: coefficients of `v` undergo `D ↦ D + s`, matrix entries
    /// `λ ↦ s`. Other variables in `v` and `s` are parameters.
    pub fn apply(&self, v: &Vector, s: &Poly) -> Vector {
        let n = self.rank();
        let shift = &Poly::d() + s;
        let images = [Poly::d(), s.clone()];
        let mut out = Vector::zero(n);
        for i in v.support() {
            let c = v.comp(i).substitute(D, &shift);
            for j in 0..n {
                let p = self.matrix.get(j, i);
                if !p.is_zero() {
                    *out.comp_mut(j) += &(&c * &p.compose(&images));
                }
            }
        }
        out
    }

    /// `f_λ(v)` with `λ` placed in slot `X{slot}`, which `v` must not use.
    pub fn eval(&self, v: &Vector, slot: Var) -> Result<Vector> {
        if v.dim() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.dim(),
            });
        }
        if slot == D || v.uses_var(slot) {
            return Err(Error::SlotCollision(slot));
        }
        Ok(self.apply(v, &Poly::x(slot)))
    }

    pub fn scale(&self, c: &Scalar) -> ConfMap {
        ConfMap {
            parity: self.parity,
            matrix: self.matrix.scale(c),
        }
    }

    /// Sum of maps of equal rank; the parity of `self` is kept.
    pub fn add(&self, other: &ConfMap) -> Result<ConfMap> {
        Ok(ConfMap {
            parity: self.parity,
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &ConfMap) -> Result<ConfMap> {
        self.add(&other.scale(&int(-1)))
    }

    /// `f ∘ m` for an endomorphism `m`: `λ ↦ f_λ(m(e_i))`.
    pub fn compose_endo(&self, m: &EndoMap) -> Result<ConfMap> {
        let n = self.rank();
        let cols: Vec<Vector> = (0..n)
            .map(|i| Ok(self.apply(&apply_endo(m, &Vector::basis(n, i))?, &Poly::x(1))))
            .collect::<Result<_>>()?;
        Self::from_columns(self.parity, &cols)
    }

    /// Entries that break parity homogeneity, as a vector per column.
    pub(crate) fn off_parity(&self, basis: &Basis, i: usize) -> Vector {
        basis.off_parity_part(&self.column(i), basis.parity(i) + self.parity)
    }

    /// Rendering of `f_λ(e_i)` per generator, `λ` printed as `x`.
    pub fn render(&self, basis: &Basis) -> Vec<(String, String)> {
        (0..self.rank())
            .map(|i| {
                (
                    basis.name(i).to_string(),
                    basis.render_width(&self.column(i), 2),
                )
            })
            .collect()
    }
}

/// Linear combination of maps of one shape.
pub(crate) fn combine(units: &[ConfMap], coeffs: &[Scalar], n: usize, parity: Parity) -> ConfMap {
    let mut acc = ConfMap::zero(n, parity);
    for (u, c) in units.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&u.scale(c)).expect("same rank");
        }
    }
    acc
}

/// The gc-bracket `[f_λ g]_μ`, a map in `μ` (stored as `X1`) with
/// coefficients polynomial in `λ` (stored as `X2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GcBracket {
    pub parity: Parity,
    pub matrix: PolyMatrix,
}

impl GcBracket {
    /// The coefficient of `λ^n`, a conformal map in `μ`.
    pub fn coefficient(&self, n: u32) -> ConfMap {
        ConfMap {
            parity: self.parity,
            matrix: self.matrix.map_entries(|p| p.coeff_of_power(2, n)),
        }
    }

    /// All nonzero-degree coefficients of `λ^0 .. λ^d`, `d` the `λ`-degree.
    pub fn coefficients(&self) -> Vec<ConfMap> {
        let deg = self
            .matrix
            .rows()
            .iter()
            .flatten()
            .map(|p| p.degree_in(2))
            .max()
            .unwrap_or(-1);
        (0..=deg.max(0) as u32).map(|n| self.coefficient(n)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.rows().iter().flatten().all(Poly::is_zero)
    }

    /// `[f_λ g]_μ(e_i)` with `μ = X1`, `λ = X2`.
    pub fn column(&self, i: usize) -> Vector {
        Vector::from_polys(self.matrix.column(i))
    }
}

/// `[f_λ g]_μ(a) = f_λ(g_{μ-λ}(a)) - (-1)^{|f||g|} g_{μ-λ}(f_λ(a))`.
pub fn gc_bracket(f: &ConfMap, g: &ConfMap) -> Result<GcBracket> {
    let n = f.rank();
    if g.rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.rank(),
        });
    }
    let (mu, lambda) = (Poly::x(1), Poly::x(2));
    let diff = &mu - &lambda;
    let sign = f.parity.koszul(g.parity);
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            let e = Vector::basis(n, i);
            let first = f.apply(&g.apply(&e, &diff), &lambda);
            let second = g.apply(&f.apply(&e, &lambda), &diff);
            &first - &second.scale(&sign)
        })
        .collect();
    Ok(GcBracket {
        parity: f.parity + g.parity,
        matrix: PolyMatrix::from_fn(n, n, |j, i| cols[i].comp(j).clone()),
    })
}

/// The inner map `b ↦ [a_λ α^{k+1} β^{l-1}(b)]` for `a` fixed by `α` and
/// `β`; `l = 0` uses `β⁻¹`.
pub fn inner_derivation(alg: &Algebra, a: &Vector, k: u32, l: u32) -> Result<ConfMap> {
    if alg.alpha(a) != *a || alg.beta(a) != *a {
        return Err(Error::precondition(
            "inner derivations need an element fixed by alpha and beta",
        ));
    }
    let parity = alg
        .basis
        .parity_of(a)
        .ok_or_else(|| Error::precondition("inner derivations need a homogeneous element"))?;
    let twist = alg.alpha_beta_power(k as i64 + 1, l as i64 - 1)?;
    let n = alg.rank();
    let x = Poly::x(1);
    let cols: Vec<Vector> = (0..n)
        .map(|i| alg.bracket(a, &apply_endo(&twist, &alg.gen(i)).expect("dimension"), &x))
        .collect();
    ConfMap::from_columns(parity, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn rank_one(p: Poly) -> ConfMap {
        ConfMap::new(Parity::Even, PolyMatrix::new(vec![vec![p]]).unwrap()).unwrap()
    }

    #[test]
    fn sesquilinear_extension() {
        let id = rank_one(Poly::one());
        let de = Vector::from_polys(vec![Poly::d()]);
        let v = id.eval(&de, 1).unwrap();
        assert_eq!(v.comp(0), &(&Poly::d() + &Poly::x(1)));
        let dmap = rank_one(Poly::d());
        let q = &Poly::d().pow(2) + &Poly::from_int(3);
        let v = dmap.eval(&Vector::from_polys(vec![q.clone()]), 1).unwrap();
        let shifted = q.substitute(D, &(&Poly::d() + &Poly::x(1)));
        assert_eq!(v.comp(0), &(&shifted * &Poly::d()));
        assert!(ConfMap::zero(1, Parity::Even).eval(&de, 1).unwrap().is_zero());
        let used = Vector::from_polys(vec![Poly::x(1)]);
        assert!(matches!(id.eval(&used, 1), Err(Error::SlotCollision(1))));
    }

    #[test]
    fn gc_bracket_examples() {
        let f = rank_one(Poly::one());
        let g = rank_one(Poly::d());
        let b = gc_bracket(&f, &g).unwrap();
        assert_eq!(b.column(0).comp(0), &Poly::x(2));
        let c = rank_one(Poly::from_int(3));
        assert!(gc_bracket(&c, &c).unwrap().is_zero());
        assert!(gc_bracket(&f, &ConfMap::zero(1, Parity::Even)).unwrap().is_zero());
    }

    #[test]
    fn inner_derivation_examples() {
        let e = gallery::ex25();
        assert!(inner_derivation(&e, &e.gen(0), 0, 1).unwrap().is_zero());
        assert!(inner_derivation(&e, &e.gen(1), 0, 1).is_err());
        let v = gallery::virasoro_ns_default();
        let f = inner_derivation(&v, &v.gen(0), 0, 1).unwrap();
        assert_eq!(f.column(0), *v.table.get(0, 0));
        let ab = gallery::abelian(2);
        let a = ab.gen(0).scale(&int(5));
        assert!(inner_derivation(&ab, &a, 2, 0).unwrap().is_zero());
    }
}
