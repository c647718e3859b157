use crate::algebra::basis::Basis;
use crate::algebra::table::Table;
use crate::algebra::vector::Vector;
use crate::error::{Error, Result};
use crate::kernel::poly::{Poly, Var};
use crate::kernel::polymat::PolyMatrix;
use crate::kernel::scalar;

/// An even ℚ[∂]-linear endomorphism of a free module, as a matrix over ℚ[D].
pub type EndoMap = PolyMatrix;

/// Applies an endomorphism to an element or λ-value. Coefficients involving
/// slots pass through, since the matrix entries only multiply.
pub fn apply_endo(m: &EndoMap, x: &Vector) -> Result<Vector> {
    Ok(Vector::from_polys(m.apply(x.comps())?))
}

pub(crate) fn endo(m: &EndoMap, x: &Vector) -> Vector {
    apply_endo(m, x).expect("endomorphism dimension")
}

fn check_endo(m: &EndoMap, n: usize, what: &str) -> Result<()> {
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.nrows().max(m.ncols()),
        });
    }
    if !m.is_d_only() {
        return Err(Error::precondition(format!("{what} may only involve d")));
    }
    Ok(())
}

/// A finite free BiHom-Lie conformal superalgebra presented by generators,
/// the twisting maps `α`, `β` and a λ-bracket table on generator pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub basis: Basis,
    pub alpha: EndoMap,
    pub beta: EndoMap,
    pub table: Table,
}

impl Algebra {
    pub fn new(basis: Basis, alpha: EndoMap, beta: EndoMap, table: Table) -> Result<Self> {
        let n = basis.len();
        check_endo(&alpha, n, "alpha")?;
        check_endo(&beta, n, "beta")?;
        if table.left() != n || table.right() != n || table.target_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: table.left(),
            });
        }
        Ok(Algebra {
            basis,
            alpha,
            beta,
            table,
        })
    }

    /// Identity twisting maps: an ordinary Lie conformal superalgebra.
    pub fn untwisted(basis: Basis, table: Table) -> Result<Self> {
        let n = basis.len();
        Self::new(basis, PolyMatrix::identity(n), PolyMatrix::identity(n), table)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn gen(&self, i: usize) -> Vector {
        self.basis.gen(i)
    }

    pub fn alpha(&self, x: &Vector) -> Vector {
        endo(&self.alpha, x)
    }

    pub fn beta(&self, x: &Vector) -> Vector {
        endo(&self.beta, x)
    }

    /// `[a_s b]` for an arbitrary slot expression `s`.
    pub fn bracket(&self, a: &Vector, b: &Vector, s: &Poly) -> Vector {
        self.table.pair(a, b, s)
    }

    /// `[a_λ b]` with λ the slot symbol `slot`.
    pub fn eval_bracket(&self, a: &Vector, b: &Vector, slot: Var) -> Result<Vector> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        Ok(self.bracket(a, b, &Poly::var(slot)))
    }

    /// `[a_λ v]` where `v` is an already computed λ-value: coefficients of `v`
    /// are shifted by `D ↦ D + λ` before the table applies.
    pub fn eval_into(&self, a: &Vector, v: &Vector, slot: Var) -> Result<Vector> {
        self.check_dims(a)?;
        self.check_dims(v)?;
        if slot == 0 {
            return Err(Error::precondition("slot index 0 is reserved for d"));
        }
        if v.uses_var(slot) || a.uses_var(slot) {
            return Err(Error::SlotCollision(slot));
        }
        Ok(self.bracket(a, v, &Poly::var(slot)))
    }

    /// The `n`-th product `a_(n) b`: `n!` times the coefficient of `λⁿ`.
    /// Negative `n` gives zero.
    pub fn nth_product(&self, a: &Vector, b: &Vector, n: i64) -> Result<Vector> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        if n < 0 {
            return Ok(Vector::zero(self.rank()));
        }
        let n = n as u32;
        let value = self.bracket(a, b, &Poly::x(1));
        Ok(value.coeff_of_power(1, n).scale(&scalar::factorial(n)))
    }

    fn check_dims(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Both twisting maps invertible over ℚ[∂].
    pub fn is_regular(&self) -> bool {
        self.alpha.is_invertible() && self.beta.is_invertible()
    }

    pub fn alpha_inverse(&self) -> Result<EndoMap> {
        self.alpha
            .inverse()
            .ok_or_else(|| Error::NotInvertible("alpha".into()))
    }

    pub fn beta_inverse(&self) -> Result<EndoMap> {
        self.beta
            .inverse()
            .ok_or_else(|| Error::NotInvertible("beta".into()))
    }

    /// `α^k β^l` (negative exponents use inverses).
    pub fn alpha_beta_power(&self, k: i64, l: i64) -> Result<EndoMap> {
        let a = self.alpha.pow_signed(k, "alpha")?;
        let b = self.beta.pow_signed(l, "beta")?;
        a.mul(&b)
    }

    /// Largest total degree in the bracket table.
    pub fn table_degree(&self) -> i32 {
        self.table.max_degree()
    }

    /// True when both twisting maps are the identity.
    pub fn is_untwisted(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }
}

/// A λ-product without symmetry assumptions, with twisting maps: the input
/// of the commutator construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssocConformal {
    pub basis: Basis,
    pub alpha: EndoMap,
    pub beta: EndoMap,
    pub table: Table,
}

impl AssocConformal {
    pub fn new(basis: Basis, alpha: EndoMap, beta: EndoMap, table: Table) -> Result<Self> {
        let a = Algebra::new(basis, alpha, beta, table)?;
        Ok(AssocConformal {
            basis: a.basis,
            alpha: a.alpha,
            beta: a.beta,
            table: a.table,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn product(&self, a: &Vector, b: &Vector, s: &Poly) -> Vector {
        self.table.pair(a, b, s)
    }

    pub fn alpha(&self, x: &Vector) -> Vector {
        endo(&self.alpha, x)
    }

    pub fn beta(&self, x: &Vector) -> Vector {
        endo(&self.beta, x)
    }
}
