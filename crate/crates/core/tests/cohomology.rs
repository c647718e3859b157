use bihom_core::gallery;
use bihom_core::kernel::scalar::int;
use bihom_core::rep::*;
use bihom_core::*;

fn cochains(a: &Algebra, m: &RepModule, n: usize, degree: i32) -> Vec<Cochain> {
    [Parity::Even, Parity::Odd]
        .into_iter()
        .flat_map(|p| solve_cochain_space(a, m, n, p, degree).unwrap())
        .collect()
}

#[test]
fn d_squared_vanishes_on_the_rank_three_adjoint() {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    let zero = cochains(&a, &m, 0, 0);
    let one = cochains(&a, &m, 1, 2);
    assert_eq!(zero.len(), 1);
    assert!(!one.is_empty());
    for g in zero.iter().chain(&one) {
        let r = check_d_squared(&a, &m, g).unwrap();
        assert!(r.ok(), "{r}");
        let dg = differential(&a, &m, g).unwrap();
        assert!(check_cochain(&a, &m, &dg).ok());
    }
}

#[test]
fn odd_module_elements_differentiate_by_the_action() {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    for u in 0..3 {
        let g = Cochain::element(m.basis.parity(u), 3, m.basis.gen(u));
        let dg = differential(&a, &m, &g).unwrap();
        for i in 0..3 {
            assert_eq!(dg.value(&[i]), &a.bracket(&a.gen(i), &m.basis.gen(u), &Poly::x(1)));
        }
    }
}

#[test]
fn literal_reading_is_found_first_on_the_rank_three_panel() {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    let panel = vec![PanelCase {
        cochains: cochains(&a, &m, 0, 0).into_iter().chain(cochains(&a, &m, 1, 2)).collect(),
        algebra: a,
        module: m,
    }];
    assert_eq!(find_differential_variant(&panel).unwrap(), Some(DifferentialVariant::LITERAL));
}

#[test]
fn untwisted_examples_satisfy_d_squared() {
    let v = gallery::virasoro_ns_default();
    let m = RepModule::adjoint(&v);
    for n in 0..=1 {
        for g in cochains(&v, &m, n, 1) {
            assert!(check_d_squared(&v, &m, &g).unwrap().ok());
        }
    }
}

/// With `α ≠ β` the literal differential loses `d² = 0` already on
/// 0-cochains, and no reading in the search family repairs it.
#[test]
fn distinct_twists_break_d_squared_for_every_reading() {
    let a = gallery::cur_gl11();
    let m = RepModule::adjoint(&a);
    let elements = cochains(&a, &m, 0, 0);
    assert!(!elements.is_empty());
    let r = check_d_squared(&a, &m, &elements[0]).unwrap();
    assert!(r.has(Axiom::DSquared));
    let panel = vec![PanelCase {
        cochains: elements,
        algebra: a.clone(),
        module: m.clone(),
    }];
    let found = find_differential_variant(&panel).unwrap();
    if let Some(v) = found {
        let ones = cochains(&a, &m, 1, 0);
        let all_cochains = ones
            .iter()
            .all(|g| check_cochain(&a, &m, &differential_with(&a, &m, g, v).unwrap()).ok());
        assert!(!all_cochains, "reading {v} unexpectedly repairs the complex");
    }
}

#[test]
fn cochain_spaces_grow_with_the_degree_bound() {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    let mut last = 0;
    for degree in 0..=2 {
        let dim = solve_cochain_space(&a, &m, 1, Parity::Even, degree).unwrap().len();
        assert!(dim >= last);
        last = dim;
    }
    for g in solve_cochain_space(&a, &m, 1, Parity::Even, 1).unwrap() {
        for t in g.tuples() {
            assert!(g.value(&t).total_degree() <= 1);
        }
    }
}

#[test]
fn truncation_report_on_the_rank_one_abelian_algebra() {
    let a = gallery::abelian(1);
    let m = RepModule::adjoint(&a);
    let r = truncated_cohomology_report(&a, &m, 1, Parity::Even, 1, DifferentialVariant::LITERAL).unwrap();
    assert_eq!(r.cochain_dim, 3);
    assert_eq!((r.cocycle_dim, r.coboundary_dim, r.indicator), (3, 0, 3));
}

#[test]
fn truncation_indicator_is_nonnegative_on_the_rank_three_adjoint() {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    let r = truncated_cohomology_report(&a, &m, 1, Parity::Even, 1, DifferentialVariant::LITERAL).unwrap();
    assert!(r.coboundary_dim <= r.ambient_cocycle_dim);
    assert!(r.indicator >= 0);
}

#[test]
fn antilinearity_of_cochain_evaluation() {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    for g in cochains(&a, &m, 1, 1) {
        for i in 0..3 {
            let de = a.gen(i).mul_poly(&Poly::d());
            let lhs = g.eval(&[de], &[Poly::x(1)]).unwrap();
            let rhs = g.eval_at(&[a.gen(i)]).unwrap().mul_poly(&Poly::x(1).scale(&int(-1)));
            assert_eq!(lhs, rhs);
        }
    }
}
