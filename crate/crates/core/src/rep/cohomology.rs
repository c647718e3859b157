use num_traits::Zero;

use crate::algebra::{Algebra, Vector};
use crate::ansatz::System;
use crate::error::Result;
use crate::kernel::linalg::{rank, rref_kernel};
use crate::kernel::poly::{Monomial, Poly};
use crate::kernel::scalar::Scalar;
use crate::parity::Parity;
use crate::rep::cochain::{constraint_residuals, tuple_count, tuple_of, Cochain};
use crate::rep::differential::{differential_with, DifferentialVariant};
use crate::rep::module::RepModule;

/// The unknowns of a degree-bounded cochain ansatz: one unit cochain per
/// (tuple, module generator of the right parity, monomial).
fn unit_cochains(a: &Algebra, m: &RepModule, n: usize, parity: Parity, degree: i32) -> Vec<Cochain> {
    let monomials = Monomial::all_up_to(n + 1, degree);
    let rank = a.rank();
    let mut out = Vec::new();
    for k in 0..tuple_count(rank, n) {
        let t = tuple_of(k, rank, n);
        let target = parity + t.iter().map(|&i| a.basis.parity(i)).sum::<Parity>();
        for u in m.basis.of_parity(target) {
            for mono in &monomials {
                let mut values = vec![Vector::zero(m.rank()); tuple_count(rank, n)];
                values[k] = Vector::term(
                    m.rank(),
                    u,
                    Poly::monomial(num_traits::One::one(), mono.clone()),
                );
                out.push(Cochain::new(n, parity, rank, m.rank(), values).expect("unit cochain"));
            }
        }
    }
    out
}

fn combine(units: &[Cochain], coeffs: &[Scalar], template: &Cochain) -> Cochain {
    let mut acc = Cochain::zero(
        template.arity(),
        template.parity(),
        template.algebra_rank(),
        template.module_rank(),
    );
    for (u, c) in units.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&u.scale(c)).expect("same shape");
        }
    }
    acc
}

/// An exact ℚ-basis of the `n`-cochains of parity `parity` whose values have
/// total degree at most `degree` in `D, X1..Xn`.
pub fn solve_cochain_space(
    a: &Algebra,
    m: &RepModule,
    n: usize,
    parity: Parity,
    degree: i32,
) -> Result<Vec<Cochain>> {
    let units = unit_cochains(a, m, n, parity, degree);
    if units.is_empty() {
        return Ok(Vec::new());
    }
    let mut system = System::new();
    for u in &units {
        let pieces: Vec<Vector> = constraint_residuals(a, m, u)
            .into_iter()
            .map(|(_, _, r)| r)
            .collect();
        system.push_column(&pieces);
    }
    let (kernel, _) = rref_kernel(&system.matrix());
    Ok(kernel
        .iter()
        .map(|k| combine(&units, k, &units[0]))
        .collect())
}

/// An exact ℚ-basis of the `n`-cocycles of parity `parity` and degree at
/// most `degree`: the kernel of `d` on [`solve_cochain_space`].
pub fn solve_cocycles(
    a: &Algebra,
    m: &RepModule,
    n: usize,
    parity: Parity,
    degree: i32,
    variant: DifferentialVariant,
) -> Result<Vec<Cochain>> {
    let space = solve_cochain_space(a, m, n, parity, degree)?;
    if space.is_empty() {
        return Ok(Vec::new());
    }
    let mut system = System::new();
    for g in &space {
        system.push_column(differential_with(a, m, g, variant)?.values());
    }
    let (kernel, _) = rref_kernel(&system.matrix());
    Ok(kernel.iter().map(|k| combine(&space, k, &space[0])).collect())
}

/// Rank of `d` on the span of `basis`.
fn image_rank(
    a: &Algebra,
    m: &RepModule,
    basis: &[Cochain],
    variant: DifferentialVariant,
) -> Result<usize> {
    if basis.is_empty() {
        return Ok(0);
    }
    let mut system = System::new();
    for g in basis {
        let d = differential_with(a, m, g, variant)?;
        system.push_column(d.values());
    }
    Ok(rank(&system.matrix()))
}

/// Dimensions of degree-bounded slices of the cochain complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationReport {
    pub arity: usize,
    pub parity: Parity,
    pub degree: i32,
    /// `degree` plus the largest degree of the action table.
    pub ambient_degree: i32,
    pub cochain_dim: usize,
    pub cocycle_dim: usize,
    pub ambient_cocycle_dim: usize,
    /// Rank of `d` on `(n-1)`-cochains of degree at most `degree`.
    pub coboundary_dim: usize,
    /// `ambient_cocycle_dim - coboundary_dim`.
    pub indicator: i64,
    pub variant: DifferentialVariant,
}

fn cocycle_dim(
    a: &Algebra,
    m: &RepModule,
    n: usize,
    parity: Parity,
    degree: i32,
    variant: DifferentialVariant,
) -> Result<(usize, usize)> {
    let space = solve_cochain_space(a, m, n, parity, degree)?;
    let r = image_rank(a, m, &space, variant)?;
    Ok((space.len(), space.len() - r))
}

/// Truncation indicators for `n`-cochains of parity `parity`: cocycles of
/// degree at most `degree`, coboundaries of `(n-1)`-cochains of degree at
/// most `degree`, and cocycles of the ambient degree that can contain them.
pub fn truncated_cohomology_report(
    a: &Algebra,
    m: &RepModule,
    n: usize,
    parity: Parity,
    degree: i32,
    variant: DifferentialVariant,
) -> Result<TruncationReport> {
    let ambient = degree + m.rho.max_degree().max(0);
    let (cochain_dim, cocycle) = cocycle_dim(a, m, n, parity, degree, variant)?;
    let ambient_cocycle = if ambient == degree {
        cocycle
    } else {
        cocycle_dim(a, m, n, parity, ambient, variant)?.1
    };
    let coboundary = if n == 0 {
        0
    } else {
        let lower = solve_cochain_space(a, m, n - 1, parity, degree)?;
        image_rank(a, m, &lower, variant)?
    };
    Ok(TruncationReport {
        arity: n,
        parity,
        degree,
        ambient_degree: ambient,
        cochain_dim,
        cocycle_dim: cocycle,
        ambient_cocycle_dim: ambient_cocycle,
        coboundary_dim: coboundary,
        indicator: ambient_cocycle as i64 - coboundary as i64,
        variant,
    })
}

/// Number of unknowns in the degree-bounded ansatz.
pub fn ansatz_size(a: &Algebra, m: &RepModule, n: usize, parity: Parity, degree: i32) -> usize {
    unit_cochains(a, m, n, parity, degree).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::rep::cochain::check_cochain;

    #[test]
    fn abelian_rank_one() {
        let a = gallery::abelian(1);
        let m = RepModule::adjoint(&a);
        let space = solve_cochain_space(&a, &m, 1, Parity::Even, 1).unwrap();
        assert_eq!(space.len(), 3);
        let r = truncated_cohomology_report(
            &a,
            &m,
            1,
            Parity::Even,
            1,
            DifferentialVariant::LITERAL,
        )
        .unwrap();
        assert_eq!((r.cocycle_dim, r.coboundary_dim, r.indicator), (3, 0, 3));
    }

    #[test]
    fn zero_cochains_are_fixed_elements() {
        let a = gallery::ex25();
        let m = RepModule::adjoint(&a);
        let even = solve_cochain_space(&a, &m, 0, Parity::Even, 0).unwrap();
        assert_eq!(even.len(), 1);
        assert_eq!(even[0].value(&[]).support().collect::<Vec<_>>(), vec![0]);
        for g in solve_cochain_space(&a, &m, 1, Parity::Even, 2).unwrap() {
            assert!(check_cochain(&a, &m, &g).ok());
        }
    }
}
