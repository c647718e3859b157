use crate::algebra::vector::Vector;
use crate::error::{Error, Result};
use crate::kernel::poly::{Poly, D};

/// Values of a sesquilinear λ-operation on generator pairs.
///
/// `entries[i][j]` is the value on `(left_i, right_j)` as a polynomial in `D`
/// and the slot `X1`, over a target basis of size `target_dim`. The same shape
/// serves brackets, associative λ-products and module actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    entries: Vec<Vec<Vector>>,
    left: usize,
    right: usize,
    target_dim: usize,
}

impl Table {
    pub fn zero(left: usize, right: usize, target_dim: usize) -> Self {
        Table {
            entries: vec![vec![Vector::zero(target_dim); right]; left],
            left,
            right,
            target_dim,
        }
    }

    pub fn from_fn(
        left: usize,
        right: usize,
        target_dim: usize,
        f: impl Fn(usize, usize) -> Vector,
    ) -> Self {
        Table {
            entries: (0..left)
                .map(|i| (0..right).map(|j| f(i, j)).collect())
                .collect(),
            left,
            right,
            target_dim,
        }
    }

    /// Validates shape and that entries use only `D` and `X1`.
    pub fn new(entries: Vec<Vec<Vector>>, right: usize, target_dim: usize) -> Result<Self> {
        let left = entries.len();
        for row in &entries {
            if row.len() != right {
                return Err(Error::DimensionMismatch {
                    expected: right,
                    found: row.len(),
                });
            }
            for v in row {
                if v.dim() != target_dim {
                    return Err(Error::DimensionMismatch {
                        expected: target_dim,
                        found: v.dim(),
                    });
                }
                if v.width() > 2 {
                    return Err(Error::precondition(
                        "table entries may only involve d and the slot x",
                    ));
                }
            }
        }
        Ok(Table {
            entries,
            left,
            right,
            target_dim,
        })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.dim(), self.target_dim);
        self.entries[i][j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Vector::is_zero)
    }

    /// Largest total degree of any entry (`-1` when all vanish).
    pub fn max_degree(&self) -> i32 {
        self.entries
            .iter()
            .flatten()
            .map(Vector::total_degree)
            .max()
            .unwrap_or(-1)
    }

    pub fn map(&self, f: impl Fn(usize, usize, &Vector) -> Vector) -> Table {
        Table::from_fn(self.left, self.right, self.target_dim, |i, j| {
            f(i, j, &self.entries[i][j])
        })
    }

    /// The sesquilinear extension to arbitrary arguments at slot value `s`:
    ///
    /// `⟨Σ u_i e_i, Σ v_j e_j⟩_s = Σ u_i(-s) · v_j(D + s) · T_ij(D, s)`.
    ///
    /// `u` and `v` may carry further slot symbols as parameters; `s` may be
    /// any polynomial, including ones involving `D` (as in `-λ-∂`).
    pub fn pair(&self, u: &Vector, v: &Vector, s: &Poly) -> Vector {
        assert_eq!(u.dim(), self.left, "left argument dimension");
        assert_eq!(v.dim(), self.right, "right argument dimension");
        let mut out = Vector::zero(self.target_dim);
        let neg_s = -s;
        let images = [Poly::var(D), s.clone()];
        let vs: Vec<(usize, Poly)> = v
            .support()
            .map(|j| (j, v.comp(j).shift_partial(s)))
            .collect();
        for i in u.support() {
            let ui = u.comp(i).substitute(D, &neg_s);
            for (j, vj) in &vs {
                let t = &self.entries[i][*j];
                if t.is_zero() {
                    continue;
                }
                let c = &ui * vj;
                if c.is_zero() {
                    continue;
                }
                out += &t.compose(&images).mul_poly(&c);
            }
        }
        out
    }

    /// Checked variant of [`Table::pair`].
    pub fn try_pair(&self, u: &Vector, v: &Vector, s: &Poly) -> Result<Vector> {
        if u.dim() != self.left {
            return Err(Error::DimensionMismatch {
                expected: self.left,
                found: u.dim(),
            });
        }
        if v.dim() != self.right {
            return Err(Error::DimensionMismatch {
                expected: self.right,
                found: v.dim(),
            });
        }
        Ok(self.pair(u, v, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::int;

    /// The Virasoro-type table `[L_λ L] = (D + 2λ)L`.
    fn vir() -> Table {
        let e = Vector::from_polys(vec![&Poly::d() + &Poly::x(1).scale(&int(2))]);
        Table::new(vec![vec![e]], 1, 1).unwrap()
    }

    #[test]
    fn sesquilinearity_rules() {
        let t = vir();
        let l = Vector::basis(1, 0);
        let dl = Vector::from_polys(vec![Poly::d()]);
        let x = Poly::x(1);
        let base = t.pair(&l, &l, &x);
        assert_eq!(t.pair(&dl, &l, &x), base.mul_poly(&-&x));
        assert_eq!(t.pair(&l, &dl, &x), base.mul_poly(&(&Poly::d() + &x)));
    }

    #[test]
    fn nested_value() {
        let t = vir();
        let l = Vector::basis(1, 0);
        let inner = t.pair(&l, &l, &Poly::x(2));
        let outer = t.pair(&l, &inner, &Poly::x(1));
        let expected = &(&(&Poly::d() + &Poly::x(1)) + &Poly::x(2).scale(&int(2)))
            * &(&Poly::d() + &Poly::x(1).scale(&int(2)));
        assert_eq!(outer, Vector::from_polys(vec![expected]));
    }
}
