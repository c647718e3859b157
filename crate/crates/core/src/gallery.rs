//! Ready-made algebras, superalgebras and modules, plus seeded random
//! generators of valid inputs for the builders.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Algebra, AssocConformal, Basis, EndoMap, Table, Vector};
use crate::constructions::{cur, cur_associative, yau_twist, SuperAlgebraFD};
use crate::kernel::linalg::VectorQ;
use crate::kernel::poly::Poly;
use crate::kernel::polymat::PolyMatrix;
use crate::kernel::scalar::{int, ratio, Scalar};
use crate::parity::Parity;
use crate::rep::RepModule;

/// The Neveu-Schwarz type algebra on `L` (even) and `E` (odd) with
/// `α(L) = f(∂)L`, `α(E) = g(∂)E`, `β = id` and
/// `[L_λ L] = (∂+2λ)L`, `[L_λ E] = (∂+3/2λ)E`, `[E_λ L] = (1/2∂+3/2λ)E`,
/// `[E_λ E] = 0`.
pub fn virasoro_ns(f: &Poly, g: &Poly) -> Algebra {
    let basis = Basis::of(&[("L", Parity::Even), ("E", Parity::Odd)]);
    let (d, x) = (Poly::d(), Poly::x(1));
    let ll = &d + &x.scale(&int(2));
    let le = &d + &x.scale(&ratio(3, 2));
    let el = &d.scale(&ratio(1, 2)) + &x.scale(&ratio(3, 2));
    let table = Table::from_fn(2, 2, 2, |i, j| match (i, j) {
        (0, 0) => Vector::term(2, 0, ll.clone()),
        (0, 1) => Vector::term(2, 1, le.clone()),
        (1, 0) => Vector::term(2, 1, el.clone()),
        _ => Vector::zero(2),
    });
    let alpha = PolyMatrix::new(vec![
        vec![f.clone(), Poly::zero()],
        vec![Poly::zero(), g.clone()],
    ])
    .expect("2x2");
    Algebra::new(basis, alpha, PolyMatrix::identity(2), table).expect("well-formed example")
}

/// [`virasoro_ns`] with `f = g = 1`.
pub fn virasoro_ns_default() -> Algebra {
    virasoro_ns(&Poly::one(), &Poly::one())
}

/// Rank 3 with `e1` even, `e2`, `e3` odd; `α` swaps `e2`, `e3`, `β` swaps
/// them with a sign; `[e2_λ e3] = [e3_λ e2] = e1`, all other brackets zero.
pub fn ex25() -> Algebra {
    let basis = Basis::of(&[("e1", Parity::Even), ("e2", Parity::Odd), ("e3", Parity::Odd)]);
    let table = Table::from_fn(3, 3, 3, |i, j| match (i, j) {
        (1, 2) | (2, 1) => Vector::basis(3, 0),
        _ => Vector::zero(3),
    });
    let p = |rows: [[i64; 3]; 3]| {
        PolyMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| Poly::from_int(c)).collect())
                .collect(),
        )
        .expect("3x3")
    };
    let alpha = p([[1, 0, 0], [0, 0, 1], [0, 1, 0]]);
    let beta = p([[1, 0, 0], [0, 0, -1], [0, -1, 0]]);
    Algebra::new(basis, alpha, beta, table).expect("well-formed example")
}

/// `n` even generators `a1..an` with zero bracket and identity maps.
pub fn abelian(n: usize) -> Algebra {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let basis = Basis::new(names, vec![Parity::Even; n]).expect("distinct names");
    Algebra::untwisted(basis, Table::zero(n, n, n)).expect("well-formed")
}

fn unit(n: usize, i: usize) -> VectorQ {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn combo(n: usize, terms: &[(usize, Scalar)]) -> VectorQ {
    let mut v = vec![Scalar::zero(); n];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

/// `sl(2)` with basis `e, h, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> SuperAlgebraFD {
    let basis = Basis::of(&[("e", Parity::Even), ("h", Parity::Even), ("f", Parity::Even)]);
    SuperAlgebraFD::from_fn(basis, |i, j| match (i, j) {
        (1, 0) => combo(3, &[(0, int(2))]),
        (0, 1) => combo(3, &[(0, int(-2))]),
        (1, 2) => combo(3, &[(2, int(-2))]),
        (2, 1) => combo(3, &[(2, int(2))]),
        (0, 2) => unit(3, 1),
        (2, 0) => combo(3, &[(1, int(-1))]),
        _ => vec![Scalar::zero(); 3],
    })
    .expect("well-formed")
}

/// The Heisenberg algebra `[p, q] = z`.
pub fn heisenberg() -> SuperAlgebraFD {
    let basis = Basis::of(&[("p", Parity::Even), ("q", Parity::Even), ("z", Parity::Even)]);
    SuperAlgebraFD::from_fn(basis, |i, j| match (i, j) {
        (0, 1) => unit(3, 2),
        (1, 0) => combo(3, &[(2, int(-1))]),
        _ => vec![Scalar::zero(); 3],
    })
    .expect("well-formed")
}

fn matrix_unit_basis(p: usize, q: usize) -> Basis {
    let n = p + q;
    let odd = |i: usize| i >= p;
    let mut names = Vec::new();
    let mut parities = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("E{}{}", i + 1, j + 1));
            parities.push(Parity::from_bool(odd(i) != odd(j)));
        }
    }
    Basis::new(names, parities).expect("distinct names")
}

fn matrix_unit_product(n: usize, i: usize, j: usize, k: usize, l: usize) -> Option<usize> {
    (j == k).then_some(i * n + l)
}

/// The associative matrix superalgebra `M(p|q)` on matrix units `Eij`.
pub fn matrix_superalgebra(p: usize, q: usize) -> SuperAlgebraFD {
    let n = p + q;
    let dim = n * n;
    SuperAlgebraFD::from_fn(matrix_unit_basis(p, q), |a, b| {
        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
        match matrix_unit_product(n, i, j, k, l) {
            Some(t) => unit(dim, t),
            None => vec![Scalar::zero(); dim],
        }
    })
    .expect("well-formed")
}

/// `gl(p|q)` with the supercommutator of matrix units.
pub fn gl(p: usize, q: usize) -> SuperAlgebraFD {
    let n = p + q;
    let dim = n * n;
    let basis = matrix_unit_basis(p, q);
    let parities: Vec<Parity> = basis.parities().to_vec();
    SuperAlgebraFD::from_fn(basis, |a, b| {
        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
        let sign = parities[a].koszul(parities[b]);
        let mut v = vec![Scalar::zero(); dim];
        if let Some(t) = matrix_unit_product(n, i, j, k, l) {
            v[t] += Scalar::one();
        }
        if let Some(t) = matrix_unit_product(n, k, l, i, j) {
            v[t] -= &sign;
        }
        v
    })
    .expect("well-formed")
}

/// `ℚ` as a one-dimensional commutative algebra.
pub fn scalars() -> SuperAlgebraFD {
    SuperAlgebraFD::from_fn(Basis::of(&[("one", Parity::Even)]), |_, _| vec![Scalar::one()])
        .expect("well-formed")
}

/// `ℚ[ε]/(ε²)` with `ε` of the given parity.
pub fn dual_numbers(parity: Parity) -> SuperAlgebraFD {
    let basis = Basis::of(&[("one", Parity::Even), ("eps", parity)]);
    SuperAlgebraFD::from_fn(basis, |i, j| match (i, j) {
        (0, 0) => unit(2, 0),
        (0, 1) | (1, 0) => unit(2, 1),
        _ => vec![Scalar::zero(); 2],
    })
    .expect("well-formed")
}

/// The Grassmann algebra on `k` odd generators, with basis the monomials
/// `xi_S` indexed by subsets `S`.
pub fn grassmann(k: usize) -> SuperAlgebraFD {
    let dim = 1usize << k;
    let name = |s: usize| {
        if s == 0 {
            "one".to_string()
        } else {
            let idx: Vec<String> = (0..k).filter(|b| s >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
            format!("xi{}", idx.join(""))
        }
    };
    let names = (0..dim).map(name).collect();
    let parities = (0..dim)
        .map(|s: usize| Parity::from_bool(s.count_ones() % 2 == 1))
        .collect();
    let basis = Basis::new(names, parities).expect("distinct names");
    SuperAlgebraFD::from_fn(basis, |s, t| {
        if s & t != 0 {
            return vec![Scalar::zero(); dim];
        }
        // sign of merging the ordered generator lists of s and t
        let swaps: u32 = (0..k)
            .filter(|b| t >> b & 1 == 1)
            .map(|b| (s >> (b + 1)).count_ones())
            .sum();
        let mut v = vec![Scalar::zero(); dim];
        v[s | t] = crate::kernel::scalar::sign(swaps % 2 == 1);
        v
    })
    .expect("well-formed")
}

/// A commutative algebra with zero product on `n` even generators.
pub fn zero_product(n: usize) -> SuperAlgebraFD {
    let names = (1..=n).map(|i| format!("b{i}")).collect();
    let basis = Basis::new(names, vec![Parity::Even; n]).expect("distinct names");
    SuperAlgebraFD::from_fn(basis, |_, _| vec![Scalar::zero(); n]).expect("well-formed")
}

/// Conjugation by `diag(t)` on matrix units: `Eij ↦ (t_i/t_j) Eij`.
pub fn torus_automorphism(t: &[Scalar]) -> EndoMap {
    let n = t.len();
    let diag: Vec<Scalar> = (0..n * n).map(|a| &t[a / n] / &t[a % n]).collect();
    PolyMatrix::scalar_diag(&diag)
}

/// Twist of a finite-dimensional algebra: `x∘y = a(x)b(y)` with maps
/// `(a, b)`. Commutation and multiplicativity are the caller's concern.
pub fn twist_fd(g: &SuperAlgebraFD, a: &EndoMap, b: &EndoMap) -> SuperAlgebraFD {
    let n = g.dim();
    let column = |m: &EndoMap, i: usize| -> VectorQ {
        m.column(i)
            .iter()
            .map(|p| p.as_constant().expect("scalar map"))
            .collect()
    };
    let consts = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| g.product(&column(a, i), &column(b, j)))
                .collect()
        })
        .collect();
    SuperAlgebraFD::new(g.basis.clone(), consts, a.clone(), b.clone()).expect("same shape")
}

/// The current algebra of `gl(1|1)` twisted by conjugation with
/// `diag(1, 2)` and `diag(1, 3)`.
pub fn cur_gl11() -> Algebra {
    let a = torus_automorphism(&[int(1), int(2)]);
    let b = torus_automorphism(&[int(1), int(3)]);
    let g = twist_fd(&gl(1, 1), &a, &b);
    cur(&g).expect("commuting even maps")
}

/// The natural module `ℚ[∂] ⊗ ℚ^{p|q}` over `cur(gl(p|q))` with
/// `φ = diag(s)`, `ψ = diag(t)`.
pub fn natural_module(p: usize, q: usize, s: &[Scalar], t: &[Scalar]) -> RepModule {
    let n = p + q;
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let parities = (0..n).map(|i| Parity::from_bool(i >= p)).collect();
    let basis = Basis::new(names, parities).expect("distinct names");
    let action: Vec<PolyMatrix> = (0..n * n)
        .map(|a| {
            let (i, j) = (a / n, a % n);
            PolyMatrix::from_fn(n, n, |r, c| {
                if r == i && c == j {
                    Poly::one()
                } else {
                    Poly::zero()
                }
            })
        })
        .collect();
    RepModule::cur_module(
        &gl(p, q),
        basis,
        &action,
        PolyMatrix::scalar_diag(s),
        PolyMatrix::scalar_diag(t),
    )
    .expect("well-formed")
}

/// The twisted current algebra of `gl(p|q)` by `Ad(diag s)`, `Ad(diag t)`
/// together with its twisted natural module.
pub fn twisted_gl_with_natural(p: usize, q: usize, s: &[Scalar], t: &[Scalar]) -> (Algebra, RepModule) {
    let (a, b) = (torus_automorphism(s), torus_automorphism(t));
    let untwisted = cur(&gl(p, q)).expect("untwisted");
    let alg = yau_twist(&untwisted, &a, &b).expect("torus automorphisms");
    let m = natural_module(p, q, s, t).yau_twist(&a).expect("well-formed");
    (alg, m)
}

/// Seeded generators of valid inputs for each builder.
pub mod random {
    use super::*;
    use crate::constructions::{direct_sum, SuperAlgebraFD};

    pub use rand_chacha::ChaCha8Rng as Rng8;
    use rand::SeedableRng;

    pub fn rng(seed: u64) -> Rng8 {
        Rng8::seed_from_u64(seed)
    }

    /// A nonzero rational from a small fixed pool.
    pub fn nonzero<R: Rng>(rng: &mut R) -> Scalar {
        let pool = [int(1), int(-1), int(2), int(-2), int(3), ratio(1, 2), ratio(-1, 3)];
        pool.choose(rng).expect("nonempty").clone()
    }

    fn nonzeros<R: Rng>(rng: &mut R, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| nonzero(rng)).collect()
    }

    fn small_gl<R: Rng>(rng: &mut R) -> (usize, usize) {
        *[(1, 0), (2, 0), (1, 1), (0, 2), (2, 1)].choose(rng).expect("nonempty")
    }

    /// An untwisted finite-dimensional Lie superalgebra.
    pub fn lie_fd<R: Rng>(rng: &mut R) -> SuperAlgebraFD {
        match rng.gen_range(0..3) {
            0 => sl2(),
            1 => heisenberg(),
            _ => {
                let (p, q) = small_gl(rng);
                gl(p, q)
            }
        }
    }

    /// A supercommutative associative algebra.
    pub fn commutative<R: Rng>(rng: &mut R) -> SuperAlgebraFD {
        match rng.gen_range(0..5) {
            0 => scalars(),
            1 => dual_numbers(Parity::Even),
            2 => dual_numbers(Parity::Odd),
            3 => grassmann(rng.gen_range(1..=2)),
            _ => zero_product(rng.gen_range(1..=2)),
        }
    }

    /// `gl(p|q)` twisted by two random torus automorphisms.
    pub fn twisted_gl<R: Rng>(rng: &mut R) -> SuperAlgebraFD {
        let (p, q) = small_gl(rng);
        let n = p + q;
        let a = torus_automorphism(&nonzeros(rng, n));
        let b = torus_automorphism(&nonzeros(rng, n));
        twist_fd(&gl(p, q), &a, &b)
    }

    /// An untwisted Lie conformal superalgebra.
    pub fn untwisted<R: Rng>(rng: &mut R) -> Algebra {
        match rng.gen_range(0..4) {
            0 => virasoro_ns_default(),
            1 => abelian(rng.gen_range(1..=2)),
            2 => cur(&lie_fd(rng)).expect("untwisted"),
            _ => direct_sum(&virasoro_ns_default(), &cur(&heisenberg()).expect("untwisted"))
                .expect("direct sum"),
        }
    }

    /// An untwisted algebra together with two commuting even automorphisms.
    pub fn yau_input<R: Rng>(rng: &mut R) -> (Algebra, EndoMap, EndoMap) {
        if rng.gen_bool(0.25) {
            let sign = |r: &mut R| if r.gen_bool(0.5) { int(1) } else { int(-1) };
            let (s, t) = (sign(rng), sign(rng));
            let a = PolyMatrix::scalar_diag(&[int(1), s]);
            let b = PolyMatrix::scalar_diag(&[int(1), t]);
            return (virasoro_ns_default(), a, b);
        }
        let (p, q) = small_gl(rng);
        let n = p + q;
        let a = torus_automorphism(&nonzeros(rng, n));
        let b = torus_automorphism(&nonzeros(rng, n));
        (cur(&gl(p, q)).expect("untwisted"), a, b)
    }

    /// A regular BiHom-Lie conformal superalgebra.
    pub fn regular<R: Rng>(rng: &mut R) -> Algebra {
        match rng.gen_range(0..3) {
            0 => ex25(),
            1 => cur(&twisted_gl(rng)).expect("commuting maps"),
            _ => {
                let (r, a, b) = yau_input(rng);
                yau_twist(&r, &a, &b).expect("automorphisms")
            }
        }
    }

    /// A regular twisted associative λ-product: the current algebra of a
    /// twisted matrix superalgebra or Grassmann algebra.
    pub fn associative<R: Rng>(rng: &mut R) -> AssocConformal {
        let twisted = if rng.gen_bool(0.7) {
            let (p, q) = small_gl(rng);
            let n = p + q;
            let a = torus_automorphism(&nonzeros(rng, n));
            let b = torus_automorphism(&nonzeros(rng, n));
            twist_fd(&matrix_superalgebra(p, q), &a, &b)
        } else {
            let k = rng.gen_range(1..=2);
            let scale = |c: &[Scalar]| {
                let diag: Vec<Scalar> = (0..1usize << k)
                    .map(|s| {
                        (0..k)
                            .filter(|b| s >> b & 1 == 1)
                            .fold(Scalar::one(), |acc, b| acc * &c[b])
                    })
                    .collect();
                PolyMatrix::scalar_diag(&diag)
            };
            let a = scale(&nonzeros(rng, k));
            let b = scale(&nonzeros(rng, k));
            twist_fd(&grassmann(k), &a, &b)
        };
        cur_associative(&twisted).expect("well-formed")
    }

    /// A regular algebra with a module whose maps are invertible.
    pub fn module_pair<R: Rng>(rng: &mut R) -> (Algebra, RepModule) {
        if rng.gen_bool(0.5) {
            let a = regular(rng);
            let m = RepModule::adjoint(&a);
            (a, m)
        } else {
            let (p, q) = small_gl(rng);
            let n = p + q;
            let s = nonzeros(rng, n);
            let t = nonzeros(rng, n);
            twisted_gl_with_natural(p, q, &s, &t)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_algebra;
    use crate::rep::check_module;

    #[test]
    fn finite_examples_are_consistent() {
        for g in [sl2(), heisenberg(), gl(1, 1), gl(2, 1)] {
            let r = check_algebra(&cur(&g).unwrap());
            assert!(r.ok(), "{r}");
        }
        for b in [scalars(), dual_numbers(Parity::Odd), grassmann(2), zero_product(2)] {
            let r = b.check_commutative_associative();
            assert!(r.ok(), "{r}");
        }
    }

    #[test]
    fn twisted_gl11_and_its_module() {
        let r = check_algebra(&cur_gl11());
        assert!(r.ok(), "{r}");
        let (a, m) = twisted_gl_with_natural(1, 1, &[int(1), int(2)], &[int(1), int(3)]);
        assert_eq!(a, cur_gl11());
        let r = check_module(&a, &m);
        assert!(r.ok(), "{r}");
    }
}
