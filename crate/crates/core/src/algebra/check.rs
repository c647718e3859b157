use std::fmt;

use crate::algebra::basis::Basis;
use crate::algebra::structure::{endo, Algebra, AssocConformal, EndoMap};
use crate::algebra::table::Table;
use crate::algebra::vector::Vector;
use crate::kernel::poly::Poly;

/// Identifiers of the identities checked across the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    MapsCommute,
    MapParity,
    Grading,
    AlphaMultiplicative,
    BetaMultiplicative,
    SkewSymmetry,
    Jacobi,
    Associativity,
    Commutativity,
    ModuleMapsCommute,
    ModuleMapParity,
    ModuleGrading,
    PhiIntertwines,
    PsiIntertwines,
    ModuleComposition,
    CochainGrading,
    CochainSkewSymmetry,
    CochainAlpha,
    CochainBeta,
    DSquared,
    OperatorParity,
    OperatorAlpha,
    OperatorBeta,
    OperatorIdentity,
    Homomorphism,
    MapCommutesAlpha,
    MapCommutesBeta,
    ConformalMapParity,
    Leibniz,
    CentroidLeft,
    CentroidRight,
    Quasicentroid,
    CentralLeft,
    CentralRight,
    GeneralizedLeibniz,
    QuasiLeibniz,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::MapsCommute => "maps-commute",
            Axiom::MapParity => "map-parity",
            Axiom::Grading => "grading",
            Axiom::AlphaMultiplicative => "alpha-multiplicative",
            Axiom::BetaMultiplicative => "beta-multiplicative",
            Axiom::SkewSymmetry => "bihom-skew-symmetry",
            Axiom::Jacobi => "bihom-jacobi",
            Axiom::Associativity => "bihom-associativity",
            Axiom::Commutativity => "supercommutativity",
            Axiom::ModuleMapsCommute => "module-maps-commute",
            Axiom::ModuleMapParity => "module-map-parity",
            Axiom::ModuleGrading => "module-grading",
            Axiom::PhiIntertwines => "phi-intertwines",
            Axiom::PsiIntertwines => "psi-intertwines",
            Axiom::ModuleComposition => "module-composition",
            Axiom::CochainGrading => "cochain-grading",
            Axiom::CochainSkewSymmetry => "cochain-skew-symmetry",
            Axiom::CochainAlpha => "cochain-alpha-commutativity",
            Axiom::CochainBeta => "cochain-beta-commutativity",
            Axiom::DSquared => "d-squared",
            Axiom::OperatorParity => "o-operator-parity",
            Axiom::OperatorAlpha => "o-operator-alpha",
            Axiom::OperatorBeta => "o-operator-beta",
            Axiom::OperatorIdentity => "o-operator-identity",
            Axiom::Homomorphism => "homomorphism",
            Axiom::MapCommutesAlpha => "commutes-with-alpha",
            Axiom::MapCommutesBeta => "commutes-with-beta",
            Axiom::ConformalMapParity => "conformal-map-parity",
            Axiom::Leibniz => "twisted-leibniz",
            Axiom::CentroidLeft => "centroid-left",
            Axiom::CentroidRight => "centroid-right",
            Axiom::Quasicentroid => "quasicentroid",
            Axiom::CentralLeft => "central-left",
            Axiom::CentralRight => "central-right",
            Axiom::GeneralizedLeibniz => "generalized-leibniz",
            Axiom::QuasiLeibniz => "quasi-leibniz",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One failing identity: where it failed and the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Generator names of the failing tuple.
    pub tuple: Vec<String>,
    pub residual: Vector,
    /// Names of the basis the residual is expressed in.
    pub target: Vec<String>,
}

impl Violation {
    /// The residual in canonical text form (`x1, x2, ...` once two slots occur).
    pub fn residual_text(&self) -> String {
        self.residual.render(&self.target, self.residual.width())
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}): {}",
            self.axiom,
            self.tuple.join(", "),
            self.residual_text()
        )
    }
}

/// Outcome of an identity check. `ok()` holds iff there are no violations,
/// and every recorded residual is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records the residual if it is nonzero.
    pub fn record(&mut self, axiom: Axiom, tuple: Vec<String>, residual: Vector, target: &Basis) {
        if !residual.is_zero() {
            self.violations.push(Violation {
                axiom,
                tuple,
                residual,
                target: target.names().to_vec(),
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    pub fn of_axiom(&self, axiom: Axiom) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.of_axiom(axiom).next().is_some()
    }

    /// The violation of `axiom` at the given tuple, if any.
    pub fn find(&self, axiom: Axiom, tuple: &[&str]) -> Option<&Violation> {
        self.of_axiom(axiom)
            .find(|v| v.tuple.iter().map(String::as_str).eq(tuple.iter().copied()))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn names(basis: &Basis, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| basis.name(i).to_string()).collect()
}

/// `αβ = βα` and both maps even.
pub(crate) fn check_maps(
    report: &mut CheckReport,
    basis: &Basis,
    alpha: &EndoMap,
    beta: &EndoMap,
    commute: Axiom,
    parity: Axiom,
) {
    check_commute(report, basis, alpha, beta, commute, None);
    check_even(report, basis, "alpha", alpha, parity);
    check_even(report, basis, "beta", beta, parity);
}

/// `ab = ba` on every generator; `label` prefixes the reported tuple.
pub(crate) fn check_commute(
    report: &mut CheckReport,
    basis: &Basis,
    a: &EndoMap,
    b: &EndoMap,
    axiom: Axiom,
    label: Option<&str>,
) {
    for i in 0..basis.len() {
        let e = basis.gen(i);
        let ab = endo(a, &endo(b, &e));
        let ba = endo(b, &endo(a, &e));
        let mut tuple: Vec<String> = label.map(str::to_string).into_iter().collect();
        tuple.push(basis.name(i).to_string());
        report.record(axiom, tuple, &ab - &ba, basis);
    }
}

/// `m` maps each generator into the span of generators of its parity.
pub(crate) fn check_even(
    report: &mut CheckReport,
    basis: &Basis,
    label: &str,
    m: &EndoMap,
    axiom: Axiom,
) {
    for i in 0..basis.len() {
        let img = endo(m, &basis.gen(i));
        let off = basis.off_parity_part(&img, basis.parity(i));
        report.record(axiom, vec![label.to_string(), basis.name(i).to_string()], off, basis);
    }
}

/// Every table entry lies in the component of parity `|i| + |j|`.
pub(crate) fn check_grading(
    report: &mut CheckReport,
    left: &Basis,
    right: &Basis,
    target: &Basis,
    table: &Table,
    axiom: Axiom,
) {
    for i in 0..left.len() {
        for j in 0..right.len() {
            let expected = left.parity(i) + right.parity(j);
            let off = target.off_parity_part(table.get(i, j), expected);
            report.record(
                axiom,
                vec![left.name(i).to_string(), right.name(j).to_string()],
                off,
                target,
            );
        }
    }
}

fn check_multiplicative(
    report: &mut CheckReport,
    basis: &Basis,
    table: &Table,
    alpha: &EndoMap,
    beta: &EndoMap,
) {
    check_morphism(report, basis, table, alpha, Axiom::AlphaMultiplicative);
    check_morphism(report, basis, table, beta, Axiom::BetaMultiplicative);
}

/// `m([e_i λ e_j]) = [m(e_i) λ m(e_j)]` on generator pairs.
pub(crate) fn check_morphism(
    report: &mut CheckReport,
    basis: &Basis,
    table: &Table,
    m: &EndoMap,
    axiom: Axiom,
) {
    let x = Poly::x(1);
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let lhs = endo(m, table.get(i, j));
            let rhs = table.pair(&endo(m, &basis.gen(i)), &endo(m, &basis.gen(j)), &x);
            report.record(axiom, names(basis, &[i, j]), &lhs - &rhs, basis);
        }
    }
}

/// Skew-symmetry residual on a generator pair:
/// `[β(e_i)_λ α(e_j)] + (-1)^{|i||j|} [β(e_j)_{-λ-∂} α(e_i)]`.
pub fn skew_residual(a: &Algebra, i: usize, j: usize) -> Vector {
    let (ei, ej) = (a.gen(i), a.gen(j));
    let x = Poly::x(1);
    let skew = -(&x + &Poly::d());
    let lhs = a.bracket(&a.beta(&ei), &a.alpha(&ej), &x);
    let other = a.bracket(&a.beta(&ej), &a.alpha(&ei), &skew);
    let sign = a.basis.parity(i).koszul(a.basis.parity(j));
    &lhs + &other.scale(&sign)
}

/// Jacobi residual on a generator triple with λ = `x1`, μ = `x2`:
/// `[αβ(a)_λ[b_μ c]] - [[β(a)_λ b]_{λ+μ} β(c)] - (-1)^{|a||b|}[β(b)_μ[α(a)_λ c]]`.
pub fn jacobi_residual(alg: &Algebra, i: usize, j: usize, k: usize) -> Vector {
    let (a, b, c) = (alg.gen(i), alg.gen(j), alg.gen(k));
    let (l, m) = (Poly::x(1), Poly::x(2));
    let lm = &l + &m;
    let t1 = alg.bracket(&alg.alpha(&alg.beta(&a)), &alg.bracket(&b, &c, &m), &l);
    let t2 = alg.bracket(&alg.bracket(&alg.beta(&a), &b, &l), &alg.beta(&c), &lm);
    let t3 = alg.bracket(&alg.beta(&b), &alg.bracket(&alg.alpha(&a), &c, &l), &m);
    let sign = alg.basis.parity(i).koszul(alg.basis.parity(j));
    &(&t1 - &t2) - &t3.scale(&sign)
}

/// Verifies every defining identity on generators: commuting even maps,
/// grading, multiplicativity, twisted skew-symmetry and twisted Jacobi.
/// Sesquilinearity holds by construction of the table extension.
pub fn check_algebra(a: &Algebra) -> CheckReport {
    let mut report = CheckReport::new();
    let basis = &a.basis;
    check_maps(
        &mut report,
        basis,
        &a.alpha,
        &a.beta,
        Axiom::MapsCommute,
        Axiom::MapParity,
    );
    check_grading(&mut report, basis, basis, basis, &a.table, Axiom::Grading);
    check_multiplicative(&mut report, basis, &a.table, &a.alpha, &a.beta);
    let n = a.rank();
    for i in 0..n {
        for j in 0..n {
            report.record(Axiom::SkewSymmetry, names(basis, &[i, j]), skew_residual(a, i, j), basis);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                report.record(
                    Axiom::Jacobi,
                    names(basis, &[i, j, k]),
                    jacobi_residual(a, i, j, k),
                    basis,
                );
            }
        }
    }
    report
}

/// Which map twists the right-hand side of the associativity identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AssocLaw {
    /// `α(a)_λ(b_μ c) = (a_λ b)_{λ+μ} β(c)`, the law satisfied by Yau twists
    /// `a∘b = α(a)β(b)` of associative products.
    #[default]
    Standard,
    /// `α(a)_λ(b_μ c) = (a_λ b)_{λ+μ} α(c)`; agrees with the standard law
    /// when `α = β`.
    AlphaRight,
}

/// Verifies a twisted associative λ-product (standard law).
pub fn check_associative(a: &AssocConformal) -> CheckReport {
    check_associative_with(a, AssocLaw::Standard)
}

pub fn check_associative_with(a: &AssocConformal, law: AssocLaw) -> CheckReport {
    let mut report = CheckReport::new();
    let basis = &a.basis;
    check_maps(
        &mut report,
        basis,
        &a.alpha,
        &a.beta,
        Axiom::MapsCommute,
        Axiom::MapParity,
    );
    check_grading(&mut report, basis, basis, basis, &a.table, Axiom::Grading);
    check_multiplicative(&mut report, basis, &a.table, &a.alpha, &a.beta);
    let (l, m) = (Poly::x(1), Poly::x(2));
    let lm = &l + &m;
    let n = a.rank();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis.gen(i), basis.gen(j), basis.gen(k));
                let lhs = a.product(&a.alpha(&x), &a.product(&y, &z, &m), &l);
                let tz = match law {
                    AssocLaw::Standard => a.beta(&z),
                    AssocLaw::AlphaRight => a.alpha(&z),
                };
                let rhs = a.product(&a.product(&x, &y, &l), &tz, &lm);
                report.record(Axiom::Associativity, names(basis, &[i, j, k]), &lhs - &rhs, basis);
            }
        }
    }
    report
}
