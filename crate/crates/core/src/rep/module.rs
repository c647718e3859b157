use crate::algebra::check::{check_grading, check_maps};
use crate::algebra::{apply_endo, Algebra, Axiom, Basis, CheckReport, EndoMap, Table, Vector};
use crate::constructions::SuperAlgebraFD;
use crate::error::{Error, Result};
use crate::kernel::poly::Poly;
use crate::kernel::polymat::PolyMatrix;

/// A finite free module over an algebra: generators, the maps `φ`, `ψ`
/// and the action table `ρ(e_i)_λ m_u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepModule {
    pub basis: Basis,
    pub phi: EndoMap,
    pub psi: EndoMap,
    /// Left index over algebra generators, right index and target over
    /// module generators.
    pub rho: Table,
}

impl RepModule {
    pub fn new(basis: Basis, phi: EndoMap, psi: EndoMap, rho: Table) -> Result<Self> {
        let n = basis.len();
        for (what, m) in [("phi", &phi), ("psi", &psi)] {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.nrows(),
                });
            }
            if !m.is_d_only() {
                return Err(Error::precondition(format!("{what} may only involve d")));
            }
        }
        if rho.right() != n || rho.target_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rho.right(),
            });
        }
        Ok(RepModule {
            basis,
            phi,
            psi,
            rho,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `ρ(a)_s v`.
    pub fn act(&self, a: &Vector, v: &Vector, s: &Poly) -> Vector {
        self.rho.pair(a, v, s)
    }

    pub fn phi(&self, v: &Vector) -> Vector {
        apply_endo(&self.phi, v).expect("module dimension")
    }

    pub fn psi(&self, v: &Vector) -> Vector {
        apply_endo(&self.psi, v).expect("module dimension")
    }

    /// The algebra acting on itself by the bracket, with `φ = α`, `ψ = β`.
    pub fn adjoint(a: &Algebra) -> RepModule {
        RepModule {
            basis: a.basis.clone(),
            phi: a.alpha.clone(),
            psi: a.beta.clone(),
            rho: a.table.clone(),
        }
    }

    /// Zero action with identity maps.
    pub fn trivial(a: &Algebra, basis: Basis) -> RepModule {
        let n = basis.len();
        RepModule {
            basis,
            phi: PolyMatrix::identity(n),
            psi: PolyMatrix::identity(n),
            rho: Table::zero(a.rank(), n, n),
        }
    }

    /// The module `ℚ[∂] ⊗ V` over `cur(g)` from a representation of `g` on
    /// `V`: `ρ(e_i)_λ v_u = ϱ(x_i) v_u`, with `φ`, `ψ` extended constantly.
    /// `action[i]` is the matrix of `ϱ(x_i)` (column `u` is the image of
    /// `v_u`).
    pub fn cur_module(
        g: &SuperAlgebraFD,
        basis: Basis,
        action: &[PolyMatrix],
        phi: EndoMap,
        psi: EndoMap,
    ) -> Result<RepModule> {
        let n = basis.len();
        if action.len() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                found: action.len(),
            });
        }
        for m in action {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.nrows(),
                });
            }
        }
        let rho = Table::from_fn(g.dim(), n, n, |i, u| {
            Vector::from_polys(action[i].column(u))
        });
        RepModule::new(basis, phi, psi, rho)
    }

    /// Twist of a module over an untwisted algebra, matching the algebra
    /// twist `[x_λ y]' = [a(x)_λ b(y)]`: `ρ'(x)_λ v = ρ(a(x))_λ ψ(v)`, keeping
    /// `φ`, `ψ`. `φ` and `ψ` must intertwine `ρ` with `a` and `b`.
    pub fn yau_twist(&self, a: &EndoMap) -> Result<RepModule> {
        let x = Poly::x(1);
        let na = self.rho.left();
        let n = self.rank();
        let rho = Table::from_fn(na, n, n, |i, u| {
            let ai = apply_endo(a, &Vector::basis(na, i)).expect("algebra dimension");
            self.act(&ai, &self.psi(&self.basis.gen(u)), &x)
        });
        RepModule::new(self.basis.clone(), self.phi.clone(), self.psi.clone(), rho)
    }
}

/// Verifies the module axioms on generators: grading of `ρ`, even
/// commuting `φ`, `ψ`, the intertwining relations `φρ(a) = ρ(αa)φ`,
/// `ψρ(a) = ρ(βa)ψ`, and the composition law
/// `ρ([β(a)_λ b])_{λ+μ} ψ = ρ(αβ(a))_λ ρ(b)_μ - (-1)^{|a||b|} ρ(β(b))_μ ρ(α(a))_λ`.
pub fn check_module(a: &Algebra, m: &RepModule) -> CheckReport {
    let mut report = CheckReport::new();
    assert_eq!(m.rho.left(), a.rank(), "module is over an algebra of another rank");
    let mb = &m.basis;
    check_maps(
        &mut report,
        mb,
        &m.phi,
        &m.psi,
        Axiom::ModuleMapsCommute,
        Axiom::ModuleMapParity,
    );
    check_grading(&mut report, &a.basis, mb, mb, &m.rho, Axiom::ModuleGrading);
    let x = Poly::x(1);
    let y = Poly::x(2);
    let xy = &x + &y;
    for i in 0..a.rank() {
        let ei = a.gen(i);
        for u in 0..m.rank() {
            let v = mb.gen(u);
            let tuple = vec![a.basis.name(i).to_string(), mb.name(u).to_string()];
            let lhs = m.phi(&m.act(&ei, &v, &x));
            let rhs = m.act(&a.alpha(&ei), &m.phi(&v), &x);
            report.record(Axiom::PhiIntertwines, tuple.clone(), &lhs - &rhs, mb);
            let lhs = m.psi(&m.act(&ei, &v, &x));
            let rhs = m.act(&a.beta(&ei), &m.psi(&v), &x);
            report.record(Axiom::PsiIntertwines, tuple, &lhs - &rhs, mb);
        }
    }
    for i in 0..a.rank() {
        for j in 0..a.rank() {
            let (ea, eb) = (a.gen(i), a.gen(j));
            let br = a.bracket(&a.beta(&ea), &eb, &x);
            let sign = a.basis.parity(i).koszul(a.basis.parity(j));
            for u in 0..m.rank() {
                let v = mb.gen(u);
                let lhs = m.act(&br, &m.psi(&v), &xy);
                let t1 = m.act(&a.alpha(&a.beta(&ea)), &m.act(&eb, &v, &y), &x);
                let t2 = m.act(&a.beta(&eb), &m.act(&a.alpha(&ea), &v, &x), &y);
                let res = &(&lhs - &t1) + &t2.scale(&sign);
                report.record(
                    Axiom::ModuleComposition,
                    vec![
                        a.basis.name(i).to_string(),
                        a.basis.name(j).to_string(),
                        mb.name(u).to_string(),
                    ],
                    res,
                    mb,
                );
            }
        }
    }
    report
}
