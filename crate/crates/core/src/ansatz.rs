//! Linear systems whose unknowns are coefficients of a bounded-degree
//! polynomial ansatz. Each unknown contributes one column: the residual it
//! produces, flattened by (piece, component, monomial).

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::Vector;
use crate::error::Result;
use crate::kernel::linalg::{MatrixQ, PreparedSystem, VectorQ};
use crate::kernel::poly::Monomial;
use crate::kernel::scalar::Scalar;

type Key = (usize, usize, Monomial);

#[derive(Clone, Debug, Default)]
pub(crate) struct System {
    index: HashMap<Key, usize>,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl System {
    pub fn new() -> Self {
        Self::default()
    }

    fn entries(&mut self, pieces: &[Vector]) -> Vec<(usize, Scalar)> {
        let mut out = Vec::new();
        for (p, v) in pieces.iter().enumerate() {
            for c in v.support() {
                for (m, s) in v.comp(c).terms() {
                    let next = self.index.len();
                    let row = *self.index.entry((p, c, m.clone())).or_insert(next);
                    out.push((row, s.clone()));
                }
            }
        }
        out
    }

    /// Adds one unknown whose unit value produces the residual `pieces`.
    pub fn push_column(&mut self, pieces: &[Vector]) {
        let e = self.entries(pieces);
        self.columns.push(e);
    }

    pub fn matrix(&self) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.index.len(), self.columns.len());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                m.rows[*r][c] = s.clone();
            }
        }
        m
    }

    /// Rows for a right-hand side; `None` when it has a nonzero entry on a
    /// monomial no column reaches, which makes the system infeasible.
    pub fn rhs(&self, pieces: &[Vector]) -> Option<VectorQ> {
        let mut b = vec![Scalar::zero(); self.index.len()];
        for (p, v) in pieces.iter().enumerate() {
            for c in v.support() {
                for (m, s) in v.comp(c).terms() {
                    let row = self.index.get(&(p, c, m.clone()))?;
                    b[*row] = s.clone();
                }
            }
        }
        Some(b)
    }

    pub fn prepare(&self) -> Result<PreparedSystem> {
        PreparedSystem::new(&self.matrix())
    }
}

/// Solves `Σ x_k·column_k = target` given a prepared system.
pub(crate) fn solve_with(
    system: &System,
    prepared: &PreparedSystem,
    target: &[Vector],
) -> Result<Option<VectorQ>> {
    match system.rhs(target) {
        None => Ok(None),
        Some(b) => prepared.solve(&b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::poly::Poly;
    use crate::kernel::scalar::int;

    #[test]
    fn kernel_of_two_columns() {
        let mut s = System::new();
        let v = Vector::from_polys(vec![Poly::d()]);
        s.push_column(std::slice::from_ref(&v));
        s.push_column(&[v.scale(&int(-2))]);
        let (k, r) = crate::kernel::linalg::rref_kernel(&s.matrix());
        assert_eq!(r, 1);
        assert_eq!(k.len(), 1);
        let p = s.prepare().unwrap();
        let x = solve_with(&s, &p, &[v.scale(&int(3))]).unwrap().unwrap();
        assert_eq!(&x[0] - &(&x[1] * int(2)), int(3));
        assert!(solve_with(&s, &p, &[Vector::from_polys(vec![Poly::one()])])
            .unwrap()
            .is_none());
    }
}
