//! Matrices over ℚ[D]: composition, inversion by Euclidean row reduction,
//! and submodule membership via Hermite reduction.

use num_traits::One;

use super::poly::Poly;
use super::scalar::Scalar;
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// A square or rectangular matrix whose entries are polynomials in `D`.
///
/// Column `i` holds the image of basis vector `i`, so `apply` computes
/// `out[j] = Σ_i m[j][i]·v[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
    cols: usize,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(PolyMatrix { rows, cols })
    }

    /// An `nrows × cols` matrix, convenient when either side may be empty.
    pub fn from_fn(nrows: usize, cols: usize, f: impl Fn(usize, usize) -> Poly) -> Self {
        PolyMatrix {
            rows: (0..nrows).map(|j| (0..cols).map(|i| f(j, i)).collect()).collect(),
            cols,
        }
    }

    pub fn zeros(nrows: usize, cols: usize) -> Self {
        Self::from_fn(nrows, cols, |_, _| Poly::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |j, i| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn scalar_diag(diag: &[Scalar]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |j, i| {
            if i == j {
                Poly::constant(diag[i].clone())
            } else {
                Poly::zero()
            }
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.rows[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: Poly) {
        self.rows[row][col] = p;
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    /// True when every entry is a polynomial in `D` alone.
    pub fn is_d_only(&self) -> bool {
        self.rows.iter().flatten().all(|p| p.uses_only(1))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.nrows())
    }

    /// Column `i`, i.e. the image of the `i`-th basis vector.
    pub fn column(&self, i: usize) -> Vec<Poly> {
        self.rows.iter().map(|r| r[i].clone()).collect()
    }

    pub fn apply(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|r| {
                let mut acc = Poly::zero();
                for (a, b) in r.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.nrows(),
            });
        }
        Ok(Self::from_fn(self.nrows(), other.cols, |j, i| {
            let mut acc = Poly::zero();
            for k in 0..self.cols {
                let (a, b) = (&self.rows[j][k], &other.rows[k][i]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                found: other.nrows(),
            });
        }
        Ok(Self::from_fn(self.nrows(), self.cols, |j, i| {
            &self.rows[j][i] + &other.rows[j][i]
        }))
    }

    pub fn scale(&self, c: &Scalar) -> PolyMatrix {
        Self::from_fn(self.nrows(), self.cols, |j, i| self.rows[j][i].scale(c))
    }

    /// Entrywise substitution, e.g. `D ↦ D + X1` when a matrix crosses a
    /// conformal map.
    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        Self::from_fn(self.nrows(), self.cols, |j, i| f(&self.rows[j][i]))
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let (n1, m1) = (self.nrows(), self.cols);
        Self::from_fn(n1 + other.nrows(), m1 + other.cols, |j, i| {
            if j < n1 && i < m1 {
                self.rows[j][i].clone()
            } else if j >= n1 && i >= m1 {
                other.rows[j - n1][i - m1].clone()
            } else {
                Poly::zero()
            }
        })
    }

    /// Non-negative power of a square matrix.
    pub fn pow(&self, k: u32) -> PolyMatrix {
        let mut acc = Self::identity(self.nrows());
        for _ in 0..k {
            acc = acc.mul(self).expect("square matrix");
        }
        acc
    }

    /// Integer power; negative exponents use the inverse over ℚ[D].
    pub fn pow_signed(&self, k: i64, what: &str) -> Result<PolyMatrix> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            let inv = self.inverse().ok_or_else(|| Error::NotInvertible(what.to_string()))?;
            Ok(inv.pow((-k) as u32))
        }
    }

    fn to_uni(&self) -> Option<Vec<Vec<UniPoly>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(UniPoly::from_poly).collect())
            .collect()
    }

    /// Determinant over ℚ[D]; `None` if some entry involves a λ-slot.
    pub fn determinant(&self) -> Option<Poly> {
        if !self.is_square() {
            return None;
        }
        let mut a = self.to_uni()?;
        let n = a.len();
        let mut sign_flip = false;
        let mut det = UniPoly::one();
        for c in 0..n {
            if !euclid_column(&mut a, c, c, &mut [], &mut sign_flip) {
                return Some(Poly::zero());
            }
            det = &det * &a[c][c];
        }
        let det = det.to_poly();
        Some(if sign_flip { -det } else { det })
    }

    /// Inverse over ℚ[D]: exists iff the determinant is a nonzero constant.
    pub fn inverse(&self) -> Option<PolyMatrix> {
        if !self.is_square() {
            return None;
        }
        let mut a = self.to_uni()?;
        let n = a.len();
        let mut inv: Vec<Vec<UniPoly>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { UniPoly::one() } else { UniPoly::zero() })
                    .collect()
            })
            .collect();
        let mut sign_flip = false;
        for c in 0..n {
            if !euclid_column(&mut a, c, c, &mut inv, &mut sign_flip) {
                return None;
            }
            if a[c][c].degree() != 0 {
                return None;
            }
        }
        for c in (0..n).rev() {
            let p = a[c][c].leading().unwrap().clone();
            let pinv = Scalar::one() / p;
            for x in a[c].iter_mut() {
                *x = x.scale(&pinv);
            }
            for x in inv[c].iter_mut() {
                *x = x.scale(&pinv);
            }
            for r in 0..c {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for k in 0..n {
                    let t = &a[c][k] * &f;
                    a[r][k] = &a[r][k] - &t;
                    let t = &inv[c][k] * &f;
                    inv[r][k] = &inv[r][k] - &t;
                }
            }
        }
        Some(PolyMatrix {
            rows: inv
                .into_iter()
                .map(|r| r.into_iter().map(|u| u.to_poly()).collect())
                .collect(),
            cols: n,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }
}

/// Clears column `c` below row `start` by Euclidean row operations, leaving
/// the gcd in row `start`. Returns false when the column is zero from
/// `start` down. Row operations are mirrored on `track` when non-empty.
fn euclid_column(
    a: &mut [Vec<UniPoly>],
    start: usize,
    c: usize,
    track: &mut [Vec<UniPoly>],
    sign_flip: &mut bool,
) -> bool {
    let n = a.len();
    loop {
        let best = (start..n)
            .filter(|&r| !a[r][c].is_zero())
            .min_by_key(|&r| a[r][c].degree());
        let Some(best) = best else {
            return false;
        };
        if best != start {
            a.swap(best, start);
            if !track.is_empty() {
                track.swap(best, start);
            }
            *sign_flip = !*sign_flip;
        }
        let mut done = true;
        for r in start + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let (q, rem) = a[r][c].div_rem(&a[start][c]);
            for k in 0..a[r].len() {
                let t = &a[start][k] * &q;
                a[r][k] = &a[r][k] - &t;
            }
            if !track.is_empty() {
                for k in 0..track[r].len() {
                    let t = &track[start][k] * &q;
                    track[r][k] = &track[r][k] - &t;
                }
            }
            if !rem.is_zero() {
                done = false;
            }
        }
        if done {
            return true;
        }
    }
}

/// Membership of `v` in the ℚ[D]-span of `gens` (all vectors over ℚ[D] of a
/// common length), decided by Hermite-style echelon reduction.
pub fn hnf_membership(gens: &[Vec<Poly>], v: &[Poly]) -> Result<bool> {
    let len = v.len();
    let to_uni = |row: &[Poly]| -> Result<Vec<UniPoly>> {
        if row.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: row.len(),
            });
        }
        row.iter()
            .map(|p| {
                UniPoly::from_poly(p)
                    .ok_or_else(|| Error::precondition("submodule vectors must involve only d"))
            })
            .collect()
    };
    let mut a: Vec<Vec<UniPoly>> = gens.iter().map(|g| to_uni(g)).collect::<Result<_>>()?;
    let mut target = to_uni(v)?;

    // echelon form: (pivot column, row)
    let mut echelon: Vec<(usize, Vec<UniPoly>)> = Vec::new();
    let mut start = 0;
    let mut sign_flip = false;
    for c in 0..len {
        if start == a.len() {
            break;
        }
        if euclid_column(&mut a, start, c, &mut [], &mut sign_flip) {
            echelon.push((c, a[start].clone()));
            start += 1;
        }
    }

    let mut next = 0;
    for c in 0..len {
        if target[c].is_zero() {
            if next < echelon.len() && echelon[next].0 == c {
                next += 1;
            }
            continue;
        }
        if next < echelon.len() && echelon[next].0 == c {
            let row = &echelon[next].1;
            let (q, rem) = target[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return Ok(false);
            }
            for k in 0..len {
                let t = &row[k] * &q;
                target[k] = &target[k] - &t;
            }
            next += 1;
        } else {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Poly {
        Poly::d()
    }

    #[test]
    fn membership_examples() {
        let e1 = vec![Poly::one()];
        let de1 = vec![d()];
        assert!(hnf_membership(std::slice::from_ref(&e1), &de1).unwrap());
        assert!(!hnf_membership(std::slice::from_ref(&de1), &e1).unwrap());
        assert!(hnf_membership(&[de1], &[Poly::zero()]).unwrap());
        assert!(hnf_membership(&[], &[Poly::zero(), Poly::zero()]).unwrap());
        assert!(!hnf_membership(&[], &[Poly::one()]).unwrap());
    }

    #[test]
    fn membership_needs_gcd() {
        // span{(D, 0), (D + 1, 0)} contains (1, 0)
        let g1 = vec![d(), Poly::zero()];
        let g2 = vec![&d() + &Poly::one(), Poly::zero()];
        assert!(hnf_membership(&[g1, g2], &[Poly::one(), Poly::zero()]).unwrap());
        // span{(D, 1)} does not contain (D, 0)
        let g = vec![d(), Poly::one()];
        assert!(!hnf_membership(std::slice::from_ref(&g), &[d(), Poly::zero()]).unwrap());
        assert!(hnf_membership(&[g], &[d() * d(), d()]).unwrap());
    }

    #[test]
    fn inverse_of_unimodular() {
        let m = PolyMatrix::new(vec![
            vec![Poly::one(), d()],
            vec![Poly::zero(), Poly::from_int(2)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
        assert_eq!(m.determinant().unwrap(), Poly::from_int(2));
    }

    #[test]
    fn non_invertible() {
        let m = PolyMatrix::new(vec![vec![d()]]).unwrap();
        assert!(m.inverse().is_none());
        assert_eq!(m.determinant().unwrap(), d());
        let swap = PolyMatrix::new(vec![
            vec![Poly::zero(), Poly::one()],
            vec![Poly::one(), Poly::zero()],
        ])
        .unwrap();
        assert_eq!(swap.determinant().unwrap(), Poly::from_int(-1));
        assert_eq!(swap.pow_signed(-1, "swap").unwrap(), swap);
    }
}
