use crate::algebra::structure::Algebra;
use crate::algebra::vector::Vector;
use crate::error::{Error, Result};
use crate::kernel::poly::Poly;
use crate::kernel::polymat::hnf_membership;

struct Span<'a> {
    gens: Vec<Vec<Poly>>,
    algebra: &'a Algebra,
}

impl<'a> Span<'a> {
    fn new(algebra: &'a Algebra, gens: &[Vector]) -> Result<Self> {
        for g in gens {
            if g.dim() != algebra.rank() {
                return Err(Error::DimensionMismatch {
                    expected: algebra.rank(),
                    found: g.dim(),
                });
            }
            if g.width() > 1 {
                return Err(Error::precondition("generators may only involve d"));
            }
        }
        Ok(Span {
            gens: gens.iter().map(|g| g.comps().to_vec()).collect(),
            algebra,
        })
    }

    fn contains(&self, v: &Vector) -> bool {
        if v.is_zero() {
            return true;
        }
        hnf_membership(&self.gens, v.comps()).expect("consistent ranks")
    }

    /// Every coefficient of the slot `X1` lies in the span.
    fn contains_lvalue(&self, v: &Vector) -> bool {
        let top = v.comps().iter().map(|p| p.degree_in(1)).max().unwrap_or(-1);
        (0..=top.max(0) as u32).all(|n| self.contains(&v.coeff_of_power(1, n)))
    }

    fn stable_under_maps(&self) -> bool {
        self.gens.iter().all(|g| {
            let g = Vector::from_polys(g.clone());
            self.contains(&self.algebra.alpha(&g)) && self.contains(&self.algebra.beta(&g))
        })
    }
}

/// Whether the ℚ[∂]-span of `gens` is stable under `α`, `β` and closed under
/// the bracket.
pub fn is_subalgebra(a: &Algebra, gens: &[Vector]) -> Result<bool> {
    let span = Span::new(a, gens)?;
    if !span.stable_under_maps() {
        return Ok(false);
    }
    let x = Poly::x(1);
    for u in gens {
        for v in gens {
            if !span.contains_lvalue(&a.bracket(u, v, &x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the ℚ[∂]-span of `gens` is a left ideal: stable under `α`, `β` and
/// `[A_λ U] ⊆ U[λ]`.
pub fn is_ideal(a: &Algebra, gens: &[Vector]) -> Result<bool> {
    let span = Span::new(a, gens)?;
    if !span.stable_under_maps() {
        return Ok(false);
    }
    let x = Poly::x(1);
    for i in 0..a.rank() {
        for u in gens {
            if !span.contains_lvalue(&a.bracket(&a.gen(i), u, &x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
