//! Exact linear algebra over ℚ: reduced row echelon form, null spaces and
//! affine solves.

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

pub type VectorQ = Vec<Scalar>;

/// Row-major dense matrix. Every row must have `cols` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixQ {
    pub rows: Vec<VectorQ>,
    pub cols: usize,
}

impl MatrixQ {
    pub fn new(rows: Vec<VectorQ>, cols: usize) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        Ok(MatrixQ { rows, cols })
    }

    pub fn zeros(nrows: usize, cols: usize) -> Self {
        MatrixQ {
            rows: vec![vec![Scalar::zero(); cols]; nrows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Scalar::one();
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        MatrixQ {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&x| super::scalar::int(x)).collect())
                .collect(),
            cols,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> VectorQ {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// In-place reduction to reduced row echelon form. Returns pivot columns.
/// When `track` is given, the same row operations are applied to it.
fn rref_in_place(rows: &mut [VectorQ], cols: usize, mut track: Option<&mut [VectorQ]>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(t) = track.as_deref_mut() {
            t.swap(r, p);
        }
        let inv = Scalar::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        if let Some(t) = track.as_deref_mut() {
            for x in t[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (pivot_row, target) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, y) in target.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            if let Some(t) = track.as_deref_mut() {
                let (pivot_row, target) = if i < r {
                    let (a, b) = t.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = t.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in target.iter_mut().zip(pivot_row.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Null-space basis and rank. Basis vectors are normalized so that each has
/// a `1` in its own free column and `0` in the other free columns.
pub fn rref_kernel(m: &MatrixQ) -> (Vec<VectorQ>, usize) {
    let mut rows = m.rows.clone();
    let pivots = rref_in_place(&mut rows, m.cols, None);
    let rank = pivots.len();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); m.cols];
        v[free] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        basis.push(v);
    }
    (basis, rank)
}

pub fn rank(m: &MatrixQ) -> usize {
    let mut rows = m.rows.clone();
    rref_in_place(&mut rows, m.cols, None).len()
}

/// Solves `m x = rhs`. Returns `None` when inconsistent, otherwise a
/// particular solution (free variables set to zero) and a null-space basis.
pub fn solve_affine(m: &MatrixQ, rhs: &[Scalar]) -> Result<Option<(VectorQ, Vec<VectorQ>)>> {
    PreparedSystem::new(m)?.solve(rhs).map(|sol| {
        sol.map(|x| {
            let (kernel, _) = rref_kernel(m);
            (x, kernel)
        })
    })
}

/// A coefficient matrix reduced once, so many right-hand sides can be solved
/// cheaply. Only an independent subset of rows is reduced (with its row
/// transform); candidate solutions are verified against the full matrix.
#[derive(Clone, Debug)]
pub struct PreparedSystem {
    full: MatrixQ,
    selected: Vec<usize>,
    reduced: Vec<VectorQ>,
    transform: Vec<VectorQ>,
    pivots: Vec<usize>,
}

/// Indices of a maximal independent set of rows, chosen greedily in order.
fn independent_rows(m: &MatrixQ) -> Vec<usize> {
    // echelon rows keyed by their leading column
    let mut basis: Vec<(usize, VectorQ)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in m.rows.iter().enumerate() {
        let mut v = row.clone();
        for (lead, b) in &basis {
            if v[*lead].is_zero() {
                continue;
            }
            let f = v[*lead].clone();
            for (x, y) in v.iter_mut().zip(b).skip(*lead) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            let inv = Scalar::one() / &v[lead];
            for x in v.iter_mut() {
                *x *= &inv;
            }
            // keep earlier basis rows reduced at this column so later
            // reductions stay triangular
            for (_, b) in basis.iter_mut() {
                if !b[lead].is_zero() {
                    let f = b[lead].clone();
                    for (x, y) in b.iter_mut().zip(&v).skip(lead) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            basis.push((lead, v));
            chosen.push(idx);
        }
    }
    chosen
}

impl PreparedSystem {
    pub fn new(m: &MatrixQ) -> Result<Self> {
        for r in &m.rows {
            if r.len() != m.cols {
                return Err(Error::DimensionMismatch {
                    expected: m.cols,
                    found: r.len(),
                });
            }
        }
        let selected = independent_rows(m);
        let mut reduced: Vec<VectorQ> = selected.iter().map(|&i| m.rows[i].clone()).collect();
        let mut transform = MatrixQ::identity(selected.len()).rows;
        let pivots = rref_in_place(&mut reduced, m.cols, Some(transform.as_mut_slice()));
        Ok(PreparedSystem {
            full: m.clone(),
            selected,
            reduced,
            transform,
            pivots,
        })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> Vec<VectorQ> {
        let cols = self.full.cols;
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(); cols];
                v[free] = Scalar::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.reduced[r][free].clone();
                }
                v
            })
            .collect()
    }

    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<VectorQ>> {
        if rhs.len() != self.full.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.full.nrows(),
                found: rhs.len(),
            });
        }
        let sub: Vec<&Scalar> = self.selected.iter().map(|&i| &rhs[i]).collect();
        let mut x = vec![Scalar::zero(); self.full.cols];
        for (r, &p) in self.pivots.iter().enumerate() {
            x[p] = self.transform[r]
                .iter()
                .zip(&sub)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * *b)
                .sum();
        }
        let consistent = self.full.rows.iter().zip(rhs).all(|(row, b)| {
            let lhs: Scalar = row
                .iter()
                .zip(&x)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum();
            &lhs == b
        });
        Ok(consistent.then_some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{int, ratio};

    #[test]
    fn kernel_of_rank_one() {
        let m = MatrixQ::from_ints(&[&[1, 2], &[2, 4]]);
        let (k, r) = rref_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn identity_and_zero() {
        let (k, r) = rref_kernel(&MatrixQ::identity(3));
        assert!(k.is_empty());
        assert_eq!(r, 3);
        let (k, r) = rref_kernel(&MatrixQ::zeros(2, 2));
        assert_eq!(k.len(), 2);
        assert_eq!(r, 0);
    }

    #[test]
    fn affine_examples() {
        let m = MatrixQ::from_ints(&[&[1, 1], &[1, -1]]);
        let (x, k) = solve_affine(&m, &[int(1), int(0)]).unwrap().unwrap();
        assert_eq!(x, vec![ratio(1, 2), ratio(1, 2)]);
        assert!(k.is_empty());

        let m = MatrixQ::from_ints(&[&[0]]);
        assert!(solve_affine(&m, &[int(1)]).unwrap().is_none());
        let (x, k) = solve_affine(&m, &[int(0)]).unwrap().unwrap();
        assert_eq!(x, vec![int(0)]);
        assert_eq!(k.len(), 1);
    }

    #[test]
    fn dimension_mismatch() {
        let m = MatrixQ::from_ints(&[&[1, 1]]);
        assert!(solve_affine(&m, &[int(1), int(2)]).is_err());
        assert!(MatrixQ::new(vec![vec![int(1)]], 2).is_err());
    }

    #[test]
    fn prepared_reuse() {
        let m = MatrixQ::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let p = PreparedSystem::new(&m).unwrap();
        for rhs in [[1, 2, 0], [3, 6, 1], [0, 0, 5]] {
            let rhs: Vec<Scalar> = rhs.iter().map(|&x| int(x)).collect();
            let x = p.solve(&rhs).unwrap().unwrap();
            assert_eq!(m.mul_vec(&x), rhs);
        }
        assert!(p.solve(&[int(1), int(1), int(0)]).unwrap().is_none());
    }
}
