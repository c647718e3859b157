//! Builders producing new algebras from old: current algebras, tensor
//! products, twists, direct sums, commutator algebras and semidirect
//! products. Each builder verifies its hypotheses before building.

use num_traits::Zero;

use crate::algebra::check::{check_commute, check_even, check_grading, check_maps, check_morphism};
use crate::algebra::{
    check_algebra, check_associative, AssocConformal, Algebra, Axiom, Basis, CheckReport,
    EndoMap, Table, Vector,
};
use crate::error::{Error, Result};
use crate::kernel::linalg::VectorQ;
use crate::kernel::poly::Poly;
use crate::kernel::polymat::PolyMatrix;
use crate::kernel::scalar::Scalar;
use crate::rep::{check_module, RepModule};

/// Constant vector over the polynomial ring.
pub fn lift(v: &[Scalar]) -> Vector {
    Vector::from_polys(v.iter().map(|c| Poly::constant(c.clone())).collect())
}

/// A finite-dimensional superalgebra over ℚ given by structure constants,
/// with two even scalar twisting maps. Used both for Lie-type brackets and
/// for associative products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebraFD {
    pub basis: Basis,
    consts: Vec<Vec<VectorQ>>,
    pub alpha: EndoMap,
    pub beta: EndoMap,
}

impl SuperAlgebraFD {
    /// `consts[i][j]` holds the coordinates of `x_i · x_j`.
    pub fn new(
        basis: Basis,
        consts: Vec<Vec<VectorQ>>,
        alpha: EndoMap,
        beta: EndoMap,
    ) -> Result<Self> {
        let n = basis.len();
        let dims_ok = consts.len() == n
            && consts.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n));
        if !dims_ok {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: consts.len(),
            });
        }
        for m in [&alpha, &beta] {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.nrows(),
                });
            }
            if m.rows().iter().flatten().any(|p| p.as_constant().is_none()) {
                return Err(Error::precondition("twisting maps must be scalar matrices"));
            }
        }
        Ok(SuperAlgebraFD {
            basis,
            consts,
            alpha,
            beta,
        })
    }

    pub fn untwisted(basis: Basis, consts: Vec<Vec<VectorQ>>) -> Result<Self> {
        let n = basis.len();
        Self::new(basis, consts, PolyMatrix::identity(n), PolyMatrix::identity(n))
    }

    pub fn from_fn(basis: Basis, f: impl Fn(usize, usize) -> VectorQ) -> Result<Self> {
        let n = basis.len();
        let consts = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::untwisted(basis, consts)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &VectorQ {
        &self.consts[i][j]
    }

    pub fn is_untwisted(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> VectorQ {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let c = &x[i] * &y[j];
                for (o, s) in out.iter_mut().zip(&self.consts[i][j]) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        out
    }

    /// The structure constants as a λ-free table.
    pub fn table(&self) -> Table {
        let n = self.dim();
        Table::from_fn(n, n, n, |i, j| lift(&self.consts[i][j]))
    }

    fn unit(&self, i: usize) -> VectorQ {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = num_traits::One::one();
        v
    }

    /// Grading, supercommutativity `xy = (-1)^{|x||y|} yx` and
    /// associativity on basis elements.
    pub fn check_commutative_associative(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let n = self.dim();
        let b = &self.basis;
        check_grading(&mut report, b, b, b, &self.table(), Axiom::Grading);
        for i in 0..n {
            for j in 0..n {
                let sign = b.parity(i).koszul(b.parity(j));
                let ji: VectorQ = self.consts[j][i].iter().map(|c| c * &sign).collect();
                let diff: VectorQ = self.consts[i][j].iter().zip(&ji).map(|(a, c)| a - c).collect();
                report.record(
                    Axiom::Commutativity,
                    vec![b.name(i).into(), b.name(j).into()],
                    lift(&diff),
                    b,
                );
                for k in 0..n {
                    let left = self.product(&self.consts[i][j], &self.unit(k));
                    let right = self.product(&self.unit(i), &self.consts[j][k]);
                    let diff: VectorQ = left.iter().zip(&right).map(|(a, c)| a - c).collect();
                    report.record(
                        Axiom::Associativity,
                        vec![b.name(i).into(), b.name(j).into(), b.name(k).into()],
                        lift(&diff),
                        b,
                    );
                }
            }
        }
        report
    }
}

fn require(what: &str, report: CheckReport) -> Result<()> {
    if report.ok() {
        Ok(())
    } else {
        Err(Error::hypothesis(what, report))
    }
}

/// The current algebra `ℚ[∂] ⊗ g` with `[a_λ b] = [a, b]` on generators.
pub fn cur(g: &SuperAlgebraFD) -> Result<Algebra> {
    let mut report = CheckReport::new();
    check_maps(
        &mut report,
        &g.basis,
        &g.alpha,
        &g.beta,
        Axiom::MapsCommute,
        Axiom::MapParity,
    );
    require("twisting maps must be even and commute", report)?;
    Algebra::new(g.basis.clone(), g.alpha.clone(), g.beta.clone(), g.table())
}

/// The associative current algebra `ℚ[∂] ⊗ A` with constant λ-product.
pub fn cur_associative(a: &SuperAlgebraFD) -> Result<AssocConformal> {
    AssocConformal::new(a.basis.clone(), a.alpha.clone(), a.beta.clone(), a.table())
}

/// `R ⊗ B` for an untwisted algebra `R` and a supercommutative associative
/// `B`: `[(r⊗b)_λ(r'⊗b')] = (-1)^{|b||r'|} [r_λ r'] ⊗ bb'`. Generators are
/// named `r.b`.
pub fn tensor_superalgebra(r: &Algebra, b: &SuperAlgebraFD) -> Result<Algebra> {
    if !r.is_untwisted() || !b.is_untwisted() {
        return Err(Error::precondition(
            "tensor product needs identity twisting maps on both factors",
        ));
    }
    require("the conformal factor must be a Lie conformal superalgebra", check_algebra(r))?;
    require(
        "the scalar factor must be supercommutative and associative",
        b.check_commutative_associative(),
    )?;
    let (nr, nb) = (r.rank(), b.dim());
    let mut names = Vec::with_capacity(nr * nb);
    let mut parities = Vec::with_capacity(nr * nb);
    for i in 0..nr {
        for p in 0..nb {
            names.push(format!("{}.{}", r.basis.name(i), b.basis.name(p)));
            parities.push(r.basis.parity(i) + b.basis.parity(p));
        }
    }
    let basis = Basis::new(names, parities)?;
    let n = nr * nb;
    let table = Table::from_fn(n, n, n, |x, y| {
        let (i, p) = (x / nb, x % nb);
        let (j, q) = (y / nb, y % nb);
        let t = r.table.get(i, j);
        let sign = b.basis.parity(p).koszul(r.basis.parity(j));
        let prod = b.structure_constant(p, q);
        let mut out = Vector::zero(n);
        for k in t.support() {
            for (s, c) in prod.iter().enumerate() {
                if !c.is_zero() {
                    *out.comp_mut(k * nb + s) = t.comp(k).scale(&(c * &sign));
                }
            }
        }
        out
    });
    Algebra::untwisted(basis, table)
}

fn twisted_table(table: &Table, basis: &Basis, a: &EndoMap, b: &EndoMap) -> Table {
    let x = Poly::x(1);
    let n = basis.len();
    Table::from_fn(n, n, n, |i, j| {
        let ai = crate::algebra::apply_endo(a, &basis.gen(i)).expect("dimension");
        let bj = crate::algebra::apply_endo(b, &basis.gen(j)).expect("dimension");
        table.pair(&ai, &bj, &x)
    })
}

/// Twist of an untwisted algebra: `[x_λ y]' = [a(x)_λ b(y)]` with maps
/// `(a, b)`. `a`, `b` must be even, commute and preserve the bracket.
pub fn yau_twist(r: &Algebra, a: &EndoMap, b: &EndoMap) -> Result<Algebra> {
    if !r.is_untwisted() {
        return Err(Error::precondition("yau twist needs an untwisted algebra"));
    }
    let basis = &r.basis;
    let mut report = CheckReport::new();
    check_maps(&mut report, basis, a, b, Axiom::MapsCommute, Axiom::MapParity);
    check_morphism(&mut report, basis, &r.table, a, Axiom::AlphaMultiplicative);
    check_morphism(&mut report, basis, &r.table, b, Axiom::BetaMultiplicative);
    require("twisting maps must be commuting even bracket morphisms", report)?;
    let table = twisted_table(&r.table, basis, a, b);
    Algebra::new(basis.clone(), a.clone(), b.clone(), table)
}

/// `[x_λ y]' = [a2(x)_λ b2(y)]` with maps `(α a2, β b2)`. The four maps must
/// pairwise commute and `a2`, `b2` must be even bracket morphisms.
pub fn composition_twist(r: &Algebra, a2: &EndoMap, b2: &EndoMap) -> Result<Algebra> {
    let basis = &r.basis;
    let mut report = CheckReport::new();
    check_even(&mut report, basis, "alpha'", a2, Axiom::MapParity);
    check_even(&mut report, basis, "beta'", b2, Axiom::MapParity);
    let maps = [("alpha", &r.alpha), ("beta", &r.beta), ("alpha'", a2), ("beta'", b2)];
    for (x, (na, ma)) in maps.iter().enumerate() {
        for (nb, mb) in &maps[x + 1..] {
            let label = format!("{na},{nb}");
            check_commute(&mut report, basis, ma, mb, Axiom::MapsCommute, Some(&label));
        }
    }
    check_morphism(&mut report, basis, &r.table, a2, Axiom::AlphaMultiplicative);
    check_morphism(&mut report, basis, &r.table, b2, Axiom::BetaMultiplicative);
    require("second pair of maps must be commuting even bracket morphisms", report)?;
    let table = twisted_table(&r.table, basis, a2, b2);
    Algebra::new(basis.clone(), r.alpha.mul(a2)?, r.beta.mul(b2)?, table)
}

/// `[x_λ y]' = [α^k(x)_λ β^k(y)]` with maps `(α^{k+1}, β^{k+1})`.
pub fn power_twist(r: &Algebra, k: u32) -> Result<Algebra> {
    composition_twist(r, &r.alpha.pow(k), &r.beta.pow(k))
}

/// Direct sum with componentwise bracket and block-diagonal maps. Clashing
/// generator names from `s` get primes appended.
pub fn direct_sum(r: &Algebra, s: &Algebra) -> Result<Algebra> {
    let basis = r.basis.disjoint_union(&s.basis);
    let (nr, n) = (r.rank(), r.rank() + s.rank());
    let table = Table::from_fn(n, n, n, |i, j| match (i < nr, j < nr) {
        (true, true) => r.table.get(i, j).embed(n, 0),
        (false, false) => s.table.get(i - nr, j - nr).embed(n, nr),
        _ => Vector::zero(n),
    });
    Algebra::new(
        basis,
        r.alpha.block_diag(&s.alpha),
        r.beta.block_diag(&s.beta),
        table,
    )
}

/// The commutator algebra of a regular twisted associative λ-product:
/// `[a_λ b] = a_λ b - (-1)^{|a||b|} α⁻¹β(b)_{-λ-∂} αβ⁻¹(a)`.
pub fn from_associative(a: &AssocConformal) -> Result<Algebra> {
    require("input must satisfy the twisted associativity law", check_associative(a))?;
    let ai = a
        .alpha
        .inverse()
        .ok_or_else(|| Error::NotInvertible("alpha".into()))?;
    let bi = a
        .beta
        .inverse()
        .ok_or_else(|| Error::NotInvertible("beta".into()))?;
    let left = ai.mul(&a.beta)?;
    let right = a.alpha.mul(&bi)?;
    let x = Poly::x(1);
    let skew = -(&x + &Poly::d());
    let n = a.rank();
    let b = &a.basis;
    let table = Table::from_fn(n, n, n, |i, j| {
        let direct = a.product(&b.gen(i), &b.gen(j), &x);
        let lj = crate::algebra::apply_endo(&left, &b.gen(j)).expect("dimension");
        let ri = crate::algebra::apply_endo(&right, &b.gen(i)).expect("dimension");
        let swapped = a.product(&lj, &ri, &skew);
        let sign = b.parity(i).koszul(b.parity(j));
        &direct - &swapped.scale(&sign)
    });
    Algebra::new(b.clone(), a.alpha.clone(), a.beta.clone(), table)
}

/// The semidirect product `R ⋉ M` with maps `α ⊕ φ`, `β ⊕ ψ`:
/// `[(r+m)_λ(r'+m')] = [r_λ r'] + ρ(r)_λ m' - (-1)^{|r'||m|} ρ(α⁻¹β(r'))_{-∂-λ} φψ⁻¹(m)`.
pub fn semidirect(r: &Algebra, m: &RepModule) -> Result<Algebra> {
    require("algebra axioms", check_algebra(r))?;
    require("module axioms", check_module(r, m))?;
    let ai = r.alpha_inverse()?;
    r.beta_inverse()?;
    m.phi
        .inverse()
        .ok_or_else(|| Error::NotInvertible("phi".into()))?;
    let psi_inv = m
        .psi
        .inverse()
        .ok_or_else(|| Error::NotInvertible("psi".into()))?;
    let left = ai.mul(&r.beta)?;
    let right = m.phi.mul(&psi_inv)?;
    let basis = r.basis.disjoint_union(&m.basis);
    let (nr, n) = (r.rank(), r.rank() + m.rank());
    let x = Poly::x(1);
    let skew = -(&x + &Poly::d());
    let table = Table::from_fn(n, n, n, |i, j| match (i < nr, j < nr) {
        (true, true) => r.table.get(i, j).embed(n, 0),
        (true, false) => m.rho.get(i, j - nr).embed(n, nr),
        (false, true) => {
            let u = i - nr;
            let rj = crate::algebra::apply_endo(&left, &r.gen(j)).expect("dimension");
            let mu = crate::algebra::apply_endo(&right, &m.basis.gen(u)).expect("dimension");
            let sign = r.basis.parity(j).koszul(m.basis.parity(u));
            (-m.act(&rj, &mu, &skew).scale(&sign)).embed(n, nr)
        }
        (false, false) => Vector::zero(n),
    });
    Algebra::new(
        basis,
        r.alpha.block_diag(&m.phi),
        r.beta.block_diag(&m.psi),
        table,
    )
}
