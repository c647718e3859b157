use crate::algebra::{check_algebra, Algebra, Axiom, CheckReport, Table, Vector};
use crate::error::{Error, Result};
use crate::kernel::poly::Poly;
use crate::kernel::polymat::PolyMatrix;
use crate::kernel::scalar::Scalar;
use crate::rep::module::RepModule;

/// A ℚ[∂]-linear map `T: M → R`, as a matrix over ℚ[D] whose column `u` is
/// `T(m_u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OOperator {
    pub matrix: PolyMatrix,
}

impl OOperator {
    pub fn new(matrix: PolyMatrix) -> Result<Self> {
        if !matrix.is_d_only() {
            return Err(Error::precondition("operator entries may only involve d"));
        }
        Ok(OOperator { matrix })
    }

    pub fn zero(algebra_rank: usize, module_rank: usize) -> Self {
        OOperator {
            matrix: PolyMatrix::zeros(algebra_rank, module_rank),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector::from_polys(self.matrix.apply(v.comps()).expect("module dimension"))
    }
}

struct Twists {
    /// `φ⁻¹ψ`
    phi_inv_psi: PolyMatrix,
    /// `φψ⁻¹`
    phi_psi_inv: PolyMatrix,
}

fn twists(m: &RepModule) -> Result<Twists> {
    let phi_inv = m
        .phi
        .inverse()
        .ok_or_else(|| Error::NotInvertible("phi".into()))?;
    let psi_inv = m
        .psi
        .inverse()
        .ok_or_else(|| Error::NotInvertible("psi".into()))?;
    Ok(Twists {
        phi_inv_psi: phi_inv.mul(&m.psi)?,
        phi_psi_inv: m.phi.mul(&psi_inv)?,
    })
}

fn check_shapes(a: &Algebra, m: &RepModule, t: &OOperator) -> Result<()> {
    if t.matrix.nrows() != a.rank() || t.matrix.ncols() != m.rank() {
        return Err(Error::DimensionMismatch {
            expected: a.rank(),
            found: t.matrix.nrows(),
        });
    }
    Ok(())
}

fn induced_value(m: &RepModule, t: &OOperator, tw: &Twists, u: usize, v: usize) -> Vector {
    let x = Poly::x(1);
    let skew = -(&x + &Poly::d());
    let (mu, mv) = (m.basis.gen(u), m.basis.gen(v));
    let first = m.act(&t.apply(&mu), &mv, &x);
    let tv = t.apply(&Vector::from_polys(tw.phi_inv_psi.apply(mv.comps()).expect("dim")));
    let uu = Vector::from_polys(tw.phi_psi_inv.apply(mu.comps()).expect("dim"));
    let second = m.act(&tv, &uu, &skew);
    let sign = m.basis.parity(u).koszul(m.basis.parity(v));
    &first - &second.scale(&sign)
}

fn names(m: &RepModule, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| m.basis.name(i).to_string()).collect()
}

fn check_intertwining(a: &Algebra, m: &RepModule, t: &OOperator, report: &mut CheckReport) {
    for u in 0..m.rank() {
        let mu = m.basis.gen(u);
        let tu = t.apply(&mu);
        let off = a.basis.off_parity_part(&tu, m.basis.parity(u));
        report.record(Axiom::OperatorParity, names(m, &[u]), off, &a.basis);
        let res = &t.apply(&m.phi(&mu)) - &a.alpha(&tu);
        report.record(Axiom::OperatorAlpha, names(m, &[u]), res, &a.basis);
        let res = &t.apply(&m.psi(&mu)) - &a.beta(&tu);
        report.record(Axiom::OperatorBeta, names(m, &[u]), res, &a.basis);
    }
}

/// Checks `Tφ = αT`, `Tψ = βT`, that `T` is even, and
/// `[Tu_λ Tv] = T(ρ(Tu)_λ v - (-1)^{|u||v|} ρ(Tφ⁻¹ψ(v))_{-λ-∂} φψ⁻¹(u))`,
/// reporting the right side minus the left.
pub fn check_o_operator(a: &Algebra, m: &RepModule, t: &OOperator) -> Result<CheckReport> {
    check_shapes(a, m, t)?;
    let tw = twists(m)?;
    let mut report = CheckReport::new();
    check_intertwining(a, m, t, &mut report);
    let x = Poly::x(1);
    for u in 0..m.rank() {
        for v in 0..m.rank() {
            let lhs = a.bracket(&t.apply(&m.basis.gen(u)), &t.apply(&m.basis.gen(v)), &x);
            let rhs = t.apply(&induced_value(m, t, &tw, u, v));
            report.record(Axiom::OperatorIdentity, names(m, &[u, v]), &rhs - &lhs, &a.basis);
        }
    }
    Ok(report)
}

/// The bracket `[u_λ v]_T` on `M`, with maps `φ`, `ψ`. Fails unless `T`
/// passes [`check_o_operator`].
pub fn induced_bracket(a: &Algebra, m: &RepModule, t: &OOperator) -> Result<Algebra> {
    let report = check_o_operator(a, m, t)?;
    if !report.ok() {
        return Err(Error::hypothesis("T must be an O-operator", report));
    }
    let tw = twists(m)?;
    let n = m.rank();
    let table = Table::from_fn(n, n, n, |u, v| induced_value(m, t, &tw, u, v));
    Algebra::new(m.basis.clone(), m.phi.clone(), m.psi.clone(), table)
}

/// Residuals of `T` being a homomorphism from `induced` to `a`:
/// `[Tu_λ Tv] - T([u_λ v]_T)`, `Tφ - αT`, `Tψ - βT`.
pub fn homomorphism_residual(a: &Algebra, induced: &Algebra, t: &OOperator) -> CheckReport {
    let mut report = CheckReport::new();
    let x = Poly::x(1);
    for u in 0..induced.rank() {
        let eu = induced.gen(u);
        let tu = t.apply(&eu);
        let res = &t.apply(&induced.alpha(&eu)) - &a.alpha(&tu);
        report.record(Axiom::OperatorAlpha, vec![induced.basis.name(u).into()], res, &a.basis);
        let res = &t.apply(&induced.beta(&eu)) - &a.beta(&tu);
        report.record(Axiom::OperatorBeta, vec![induced.basis.name(u).into()], res, &a.basis);
        for v in 0..induced.rank() {
            let ev = induced.gen(v);
            let lhs = a.bracket(&tu, &t.apply(&ev), &x);
            let rhs = t.apply(induced.table.get(u, v));
            report.record(
                Axiom::Homomorphism,
                vec![induced.basis.name(u).into(), induced.basis.name(v).into()],
                &lhs - &rhs,
                &a.basis,
            );
        }
    }
    report
}

/// All parity-preserving constant operators with entries drawn from
/// `values` that pass [`check_o_operator`]. Fails with
/// [`Error::SearchTooLarge`] beyond `limit` candidates.
pub fn search_o_operators(
    a: &Algebra,
    m: &RepModule,
    values: &[Scalar],
    limit: u128,
) -> Result<Vec<OOperator>> {
    let positions: Vec<(usize, usize)> = (0..a.rank())
        .flat_map(|j| (0..m.rank()).map(move |u| (j, u)))
        .filter(|&(j, u)| a.basis.parity(j) == m.basis.parity(u))
        .collect();
    let count = (values.len() as u128)
        .checked_pow(positions.len() as u32)
        .unwrap_or(u128::MAX);
    if count > limit {
        return Err(Error::SearchTooLarge(count));
    }
    twists(m)?;
    let mut found = Vec::new();
    let mut idx = vec![0usize; positions.len()];
    for _ in 0..count {
        let mut mat = PolyMatrix::zeros(a.rank(), m.rank());
        for (p, &(j, u)) in positions.iter().enumerate() {
            mat.set(j, u, Poly::constant(values[idx[p]].clone()));
        }
        let t = OOperator { matrix: mat };
        if check_o_operator(a, m, &t)?.ok() {
            found.push(t);
        }
        for k in idx.iter_mut() {
            *k += 1;
            if *k < values.len() {
                break;
            }
            *k = 0;
        }
    }
    Ok(found)
}

/// `check_algebra` on the induced structure together with the homomorphism
/// residual.
pub fn verify_induced(a: &Algebra, m: &RepModule, t: &OOperator) -> Result<(CheckReport, CheckReport)> {
    let induced = induced_bracket(a, m, t)?;
    Ok((check_algebra(&induced), homomorphism_residual(a, &induced, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn zero_operator_passes() {
        for a in [gallery::virasoro_ns_default(), gallery::ex25()] {
            let m = RepModule::adjoint(&a);
            let t = OOperator::zero(a.rank(), m.rank());
            assert!(check_o_operator(&a, &m, &t).unwrap().ok());
            let ind = induced_bracket(&a, &m, &t).unwrap();
            assert!(ind.table.is_zero());
        }
    }

    #[test]
    fn identity_on_virasoro_adjoint_fails_with_bracket() {
        let a = gallery::virasoro_ns_default();
        let m = RepModule::adjoint(&a);
        let t = OOperator::new(PolyMatrix::identity(2)).unwrap();
        let r = check_o_operator(&a, &m, &t).unwrap();
        for u in 0..2 {
            for v in 0..2 {
                let names = [a.basis.name(u), a.basis.name(v)];
                let expected = a.table.get(u, v);
                match r.find(Axiom::OperatorIdentity, &names) {
                    Some(viol) => assert_eq!(&viol.residual, expected),
                    None => assert!(expected.is_zero()),
                }
            }
        }
    }
}
