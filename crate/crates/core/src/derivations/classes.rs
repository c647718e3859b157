use crate::algebra::{apply_endo, Algebra, Axiom, CheckReport, EndoMap, Vector};
use crate::ansatz::{solve_with, System};
use crate::derivations::confmap::{combine, ConfMap};
use crate::error::{Error, Result};
use crate::kernel::linalg::rref_kernel;
use crate::kernel::poly::{Monomial, Poly};
use crate::parity::Parity;

/// The three sides of the Leibniz-type identities on a generator pair
/// `(a, b)` with `λ = X1`, `μ = X2` and `φ = α^k β^l`.
struct Sides {
    /// `[f_λ(a)_{λ+μ} φ(b)]`
    left: Vector,
    /// `(-1)^{|f||a|} [φ(a)_μ f_λ(b)]`
    right: Vector,
    /// `f_λ([a_μ b])`
    outer: Vector,
}

fn twist(a: &Algebra, k: u32, l: u32) -> EndoMap {
    a.alpha.pow(k).mul(&a.beta.pow(l)).expect("square maps")
}

fn sides(a: &Algebra, f: &ConfMap, phi: &EndoMap, i: usize, j: usize) -> Sides {
    let (lam, mu) = (Poly::x(1), Poly::x(2));
    let (ea, eb) = (a.gen(i), a.gen(j));
    let phi_a = apply_endo(phi, &ea).expect("dimension");
    let phi_b = apply_endo(phi, &eb).expect("dimension");
    let sign = f.parity().koszul(a.basis.parity(i));
    Sides {
        left: a.bracket(&f.apply(&ea, &lam), &phi_b, &(&lam + &mu)),
        right: a.bracket(&phi_a, &f.apply(&eb, &lam), &mu).scale(&sign),
        outer: f.apply(&a.bracket(&ea, &eb, &mu), &lam),
    }
}

fn pair_names(a: &Algebra, i: usize, j: usize) -> Vec<String> {
    vec![a.basis.name(i).to_string(), a.basis.name(j).to_string()]
}

fn check_shape(a: &Algebra, f: &ConfMap) {
    assert_eq!(f.rank(), a.rank(), "map and algebra ranks differ");
}

/// `f∘α - α∘f` and `f∘β - β∘f` on each generator.
fn omega_residuals(a: &Algebra, f: &ConfMap) -> Vec<Vector> {
    let x = Poly::x(1);
    let mut out = Vec::with_capacity(2 * a.rank());
    for m in [&a.alpha, &a.beta] {
        for i in 0..a.rank() {
            let e = a.gen(i);
            let lhs = f.apply(&apply_endo(m, &e).expect("dimension"), &x);
            let rhs = apply_endo(m, &f.column(i)).expect("dimension");
            out.push(&lhs - &rhs);
        }
    }
    out
}

/// Membership in `Ω` (commuting with `α` and `β`) and parity homogeneity.
pub fn check_omega(a: &Algebra, f: &ConfMap) -> CheckReport {
    check_shape(a, f);
    let mut report = CheckReport::new();
    let n = a.rank();
    let res = omega_residuals(a, f);
    for i in 0..n {
        let name = vec![a.basis.name(i).to_string()];
        report.record(Axiom::MapCommutesAlpha, name.clone(), res[i].clone(), &a.basis);
        report.record(Axiom::MapCommutesBeta, name.clone(), res[n + i].clone(), &a.basis);
        report.record(Axiom::ConformalMapParity, name, f.off_parity(&a.basis, i), &a.basis);
    }
    report
}

/// `f_λ([a_μ b]) = [f_λ(a)_{λ+μ} α^kβ^l(b)] + (-1)^{|a||f|} [α^kβ^l(a)_μ f_λ(b)]`
/// on generator pairs, together with [`check_omega`]. Residuals are the
/// right side minus the left.
pub fn is_derivation(a: &Algebra, f: &ConfMap, k: u32, l: u32) -> CheckReport {
    let mut report = check_omega(a, f);
    let phi = twist(a, k, l);
    for i in 0..a.rank() {
        for j in 0..a.rank() {
            let s = sides(a, f, &phi, i, j);
            let res = &(&s.left + &s.right) - &s.outer;
            report.record(Axiom::Leibniz, pair_names(a, i, j), res, &a.basis);
        }
    }
    report
}

/// Which of the bracket-compatibility classes a map belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapClass {
    Derivation,
    Centroid,
    Quasicentroid,
    CentralDerivation,
}

impl MapClass {
    pub fn name(self) -> &'static str {
        match self {
            MapClass::Derivation => "derivation",
            MapClass::Centroid => "centroid",
            MapClass::Quasicentroid => "quasicentroid",
            MapClass::CentralDerivation => "central-derivation",
        }
    }

    /// The defining residuals on one pair, tagged with their axioms.
    fn residuals(self, s: &Sides) -> Vec<(Axiom, Vector)> {
        match self {
            MapClass::Derivation => {
                vec![(Axiom::Leibniz, &(&s.left + &s.right) - &s.outer)]
            }
            MapClass::Centroid => vec![
                (Axiom::CentroidLeft, &s.left - &s.right),
                (Axiom::CentroidRight, &s.left - &s.outer),
            ],
            MapClass::Quasicentroid => vec![(Axiom::Quasicentroid, &s.left - &s.right)],
            MapClass::CentralDerivation => vec![
                (Axiom::CentralLeft, s.left.clone()),
                (Axiom::CentralRight, s.outer.clone()),
            ],
        }
    }
}

/// Residuals of the class identities with exponents `(k, l)`, together with
/// [`check_omega`].
pub fn class_report(a: &Algebra, f: &ConfMap, class: MapClass, k: u32, l: u32) -> CheckReport {
    let mut report = check_omega(a, f);
    let phi = twist(a, k, l);
    for i in 0..a.rank() {
        for j in 0..a.rank() {
            let s = sides(a, f, &phi, i, j);
            for (axiom, res) in class.residuals(&s) {
                report.record(axiom, pair_names(a, i, j), res, &a.basis);
            }
        }
    }
    report
}

/// Membership verdicts of [`classify_map`]. Each class flag also requires
/// `f ∈ Ω` and parity homogeneity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassFlags {
    pub in_omega: bool,
    pub derivation: bool,
    pub centroid: bool,
    pub quasicentroid: bool,
    pub central_derivation: bool,
}

pub fn classify_map(a: &Algebra, f: &ConfMap, k: u32, l: u32) -> ClassFlags {
    let flag = |c| class_report(a, f, c, k, l).ok();
    ClassFlags {
        in_omega: check_omega(a, f).ok(),
        derivation: flag(MapClass::Derivation),
        centroid: flag(MapClass::Centroid),
        quasicentroid: flag(MapClass::Quasicentroid),
        central_derivation: flag(MapClass::CentralDerivation),
    }
}

/// `[f_λ(a)_{λ+μ} φ(b)] + (-1)^{|f||a|} [φ(a)_μ f'_λ(b)] - f''_λ([a_μ b])`
/// on generator pairs, plus `Ω` membership of all three maps. The maps must
/// share one parity.
pub fn generalized_residual(
    a: &Algebra,
    f: &ConfMap,
    f1: &ConfMap,
    f2: &ConfMap,
    k: u32,
    l: u32,
) -> Result<CheckReport> {
    if f1.parity() != f.parity() || f2.parity() != f.parity() {
        return Err(Error::precondition("witness maps must have the parity of f"));
    }
    let mut report = CheckReport::new();
    for g in [f, f1, f2] {
        report.merge(check_omega(a, g));
    }
    let phi = twist(a, k, l);
    for i in 0..a.rank() {
        for j in 0..a.rank() {
            let s0 = sides(a, f, &phi, i, j);
            let s1 = sides(a, f1, &phi, i, j);
            let s2 = sides(a, f2, &phi, i, j);
            let res = &(&s0.left + &s1.right) - &s2.outer;
            report.record(Axiom::GeneralizedLeibniz, pair_names(a, i, j), res, &a.basis);
        }
    }
    Ok(report)
}

/// `[f_λ(a)_{λ+μ} φ(b)] + (-1)^{|f||a|} [φ(a)_μ f_λ(b)] - f'_λ([a_μ b])`
/// plus `Ω` membership. The maps must share one parity.
pub fn quasi_residual(
    a: &Algebra,
    f: &ConfMap,
    f1: &ConfMap,
    k: u32,
    l: u32,
) -> Result<CheckReport> {
    let mut report = generalized_residual(a, f, f, f1, k, l)?;
    let moved: Vec<_> = report.of_axiom(Axiom::GeneralizedLeibniz).cloned().collect();
    report.violations.retain(|v| v.axiom != Axiom::GeneralizedLeibniz);
    for mut v in moved {
        v.axiom = Axiom::QuasiLeibniz;
        report.violations.push(v);
    }
    Ok(report)
}

/// All maps of parity `parity` with entries in `D`, `X1` of degree at most
/// `degree` having a single nonzero monomial entry.
fn unit_maps(a: &Algebra, parity: Parity, degree: i32) -> Vec<ConfMap> {
    let n = a.rank();
    let monomials = Monomial::all_up_to(2, degree);
    let mut out = Vec::new();
    for i in 0..n {
        let target = a.basis.parity(i) + parity;
        for j in a.basis.of_parity(target) {
            for m in &monomials {
                let mut col = vec![Vector::zero(n); n];
                col[i] = Vector::term(n, j, Poly::monomial(num_traits::One::one(), m.clone()));
                out.push(ConfMap::from_columns(parity, &col).expect("square"));
            }
        }
    }
    out
}

/// Linear system over several maps ("roles") drawn from the same ansatz.
/// `pieces(role, unit)` gives the contribution of a unit map in that role to
/// the pair equations; each role also carries its own `Ω` equations.
struct RoleSystem {
    units: Vec<ConfMap>,
    roles: usize,
    system: System,
    n: usize,
    parity: Parity,
}

impl RoleSystem {
    fn new(
        a: &Algebra,
        parity: Parity,
        degree: i32,
        roles: usize,
        pieces: impl Fn(usize, &ConfMap) -> Vec<Vector>,
    ) -> Self {
        let units = unit_maps(a, parity, degree);
        let mut system = System::new();
        let n = a.rank();
        for r in 0..roles {
            for u in &units {
                let mut col = pieces(r, u);
                for s in 0..roles {
                    if s == r {
                        col.extend(omega_residuals(a, u));
                    } else {
                        col.extend(std::iter::repeat_n(Vector::zero(n), 2 * n));
                    }
                }
                system.push_column(&col);
            }
        }
        RoleSystem {
            units,
            roles,
            system,
            n,
            parity,
        }
    }

    fn split(&self, coeffs: &[crate::kernel::scalar::Scalar]) -> Vec<ConfMap> {
        let u = self.units.len();
        (0..self.roles)
            .map(|r| combine(&self.units, &coeffs[r * u..(r + 1) * u], self.n, self.parity))
            .collect()
    }

    fn kernel(&self) -> Vec<Vec<ConfMap>> {
        if self.units.is_empty() {
            return Vec::new();
        }
        let (k, _) = rref_kernel(&self.system.matrix());
        k.iter().map(|v| self.split(v)).collect()
    }

    fn solve(&self, target: &[Vector]) -> Result<Option<Vec<ConfMap>>> {
        if self.units.is_empty() {
            return Ok(target.iter().all(Vector::is_zero).then(Vec::new));
        }
        let prepared = self.system.prepare()?;
        Ok(solve_with(&self.system, &prepared, target)?.map(|x| self.split(&x)))
    }
}

fn pairs(a: &Algebra) -> impl Iterator<Item = (usize, usize)> {
    let n = a.rank();
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// An exact basis of the maps of parity `parity` and entry degree at most
/// `degree` that lie in `Ω` and satisfy the class identities with exponents
/// `(k, l)`.
pub fn solve_class(
    a: &Algebra,
    class: MapClass,
    k: u32,
    l: u32,
    parity: Parity,
    degree: i32,
) -> Vec<ConfMap> {
    let phi = twist(a, k, l);
    let sys = RoleSystem::new(a, parity, degree, 1, |_, u| {
        pairs(a)
            .flat_map(|(i, j)| class.residuals(&sides(a, u, &phi, i, j)))
            .map(|(_, v)| v)
            .collect()
    });
    sys.kernel().into_iter().map(|mut v| v.remove(0)).collect()
}

/// [`solve_class`] for α^kβ^l-derivations.
pub fn solve_derivations(a: &Algebra, k: u32, l: u32, parity: Parity, degree: i32) -> Vec<ConfMap> {
    solve_class(a, MapClass::Derivation, k, l, parity, degree)
}

/// A basis of pairs `(f, f')` with `f` an α^kβ^l-quasiderivation and `f'` its
/// companion, both in `Ω` of parity `parity` and degree at most `degree`.
pub fn solve_quasiderivations(
    a: &Algebra,
    k: u32,
    l: u32,
    parity: Parity,
    degree: i32,
) -> Vec<(ConfMap, ConfMap)> {
    let phi = twist(a, k, l);
    let sys = RoleSystem::new(a, parity, degree, 2, |r, u| {
        pairs(a)
            .map(|(i, j)| {
                let s = sides(a, u, &phi, i, j);
                if r == 0 {
                    &s.left + &s.right
                } else {
                    -s.outer
                }
            })
            .collect()
    });
    sys.kernel()
        .into_iter()
        .map(|mut v| {
            let second = v.pop().expect("two roles");
            (v.pop().expect("two roles"), second)
        })
        .collect()
}

/// Maps `f'`, `f''` witnessing that `f` is a generalized derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationWitness {
    pub first: ConfMap,
    pub second: ConfMap,
    pub k: u32,
    pub l: u32,
}

/// Constraint on the second witness map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SecondMap {
    #[default]
    Free,
    Zero,
}

/// Searches for `f', f'' ∈ Ω` of the parity of `f` and entry degree at most
/// `degree` with `[f_λ(a)_{λ+μ} φ(b)] + (-1)^{|f||a|} [φ(a)_μ f'_λ(b)] =
/// f''_λ([a_μ b])`. `None` means no witness at this degree bound.
pub fn witness_generalized(
    a: &Algebra,
    f: &ConfMap,
    k: u32,
    l: u32,
    degree: i32,
    second: SecondMap,
) -> Result<Option<DerivationWitness>> {
    check_shape(a, f);
    if !check_omega(a, f).ok() {
        return Ok(None);
    }
    let phi = twist(a, k, l);
    let roles = match second {
        SecondMap::Free => 2,
        SecondMap::Zero => 1,
    };
    let sys = RoleSystem::new(a, f.parity(), degree, roles, |r, u| {
        pairs(a)
            .map(|(i, j)| {
                let s = sides(a, u, &phi, i, j);
                if r == 0 {
                    s.right
                } else {
                    -s.outer
                }
            })
            .collect()
    });
    let n = a.rank();
    let mut target: Vec<Vector> = pairs(a).map(|(i, j)| -sides(a, f, &phi, i, j).left).collect();
    target.extend(std::iter::repeat_n(Vector::zero(n), 2 * n * roles));
    let Some(mut maps) = sys.solve(&target)? else {
        return Ok(None);
    };
    let second = if roles == 2 {
        maps.pop().expect("two roles")
    } else {
        ConfMap::zero(n, f.parity())
    };
    let first = maps.pop().unwrap_or_else(|| ConfMap::zero(n, f.parity()));
    Ok(Some(DerivationWitness {
        first,
        second,
        k,
        l,
    }))
}

/// Searches for the companion `f' ∈ Ω` making `f` a quasiderivation.
pub fn witness_quasi(
    a: &Algebra,
    f: &ConfMap,
    k: u32,
    l: u32,
    degree: i32,
) -> Result<Option<ConfMap>> {
    check_shape(a, f);
    if !check_omega(a, f).ok() {
        return Ok(None);
    }
    let phi = twist(a, k, l);
    let sys = RoleSystem::new(a, f.parity(), degree, 1, |_, u| {
        pairs(a)
            .map(|(i, j)| -sides(a, u, &phi, i, j).outer)
            .collect()
    });
    let n = a.rank();
    let mut target: Vec<Vector> = pairs(a)
        .map(|(i, j)| {
            let s = sides(a, f, &phi, i, j);
            -(&s.left + &s.right)
        })
        .collect();
    target.extend(std::iter::repeat_n(Vector::zero(n), 2 * n));
    Ok(sys.solve(&target)?.map(|mut v| v.remove(0)))
}
