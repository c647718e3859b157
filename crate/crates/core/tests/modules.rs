use bihom_core::constructions::cur;
use bihom_core::gallery::{self, random};
use bihom_core::kernel::scalar::int;
use bihom_core::rep::check_module;
use bihom_core::*;
use proptest::prelude::*;

#[test]
fn adjoint_modules_of_the_examples_pass() {
    for a in [gallery::virasoro_ns_default(), gallery::ex25(), gallery::cur_gl11()] {
        let r = check_module(&a, &RepModule::adjoint(&a));
        assert!(r.ok(), "{r}");
    }
}

#[test]
fn trivial_module_passes() {
    let basis = Basis::of(&[("m", Parity::Even), ("n", Parity::Odd)]);
    for a in [gallery::virasoro_ns_default(), gallery::ex25()] {
        assert!(check_module(&a, &RepModule::trivial(&a, basis.clone())).ok());
    }
}

#[test]
fn current_modules_pass() {
    let one = [int(1), int(1), int(1)];
    let m = gallery::natural_module(2, 1, &one, &one);
    let a = cur(&gallery::gl(2, 1)).unwrap();
    let r = check_module(&a, &m);
    assert!(r.ok(), "{r}");
    let (a, m) = gallery::twisted_gl_with_natural(1, 1, &[int(1), int(2)], &[int(1), int(3)]);
    assert!(check_module(&a, &m).ok());
}

#[test]
fn current_module_action_matches_the_matrix_units() {
    let one = [int(1), int(1)];
    let m = gallery::natural_module(1, 1, &one, &one);
    let x = Poly::x(1);
    let a = cur(&gallery::gl(1, 1)).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let e = a.gen(2 * i + j);
            for u in 0..2 {
                let got = m.act(&e, &m.basis.gen(u), &x);
                let oracle = if u == j { m.basis.gen(i) } else { Vector::zero(2) };
                assert_eq!(got, oracle);
            }
        }
    }
}

#[test]
fn corrupted_action_reports_composition_violations() {
    let a = gallery::virasoro_ns_default();
    let mut m = RepModule::adjoint(&a);
    m.rho.set(0, 0, Vector::term(2, 0, Poly::from_int(1)));
    let r = check_module(&a, &m);
    assert!(r.has(Axiom::ModuleComposition));
}

#[test]
fn module_with_mismatched_maps_is_reported() {
    let a = gallery::ex25();
    let mut m = RepModule::adjoint(&a);
    m.phi = PolyMatrix::identity(3);
    let r = check_module(&a, &m);
    assert!(r.has(Axiom::PhiIntertwines));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_module_pairs_pass(seed in any::<u64>()) {
        let (a, m) = random::module_pair(&mut random::rng(seed));
        let r = check_module(&a, &m);
        prop_assert!(r.ok(), "{}", r);
    }
}
