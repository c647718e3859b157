use bihom_core::constructions::cur;
use bihom_core::derivations::*;
use bihom_core::gallery;
use bihom_core::kernel::scalar::int;
use bihom_core::*;
use std::rc::Rc;

const PARITIES: [Parity; 2] = [Parity::Even, Parity::Odd];

fn solved(a: &Algebra, class: Option<MapClass>, degree: i32) -> Vec<ConfMap> {
    PARITIES
        .iter()
        .flat_map(|&p| match class {
            None => solve_derivations(a, 0, 0, p, degree),
            Some(c) => solve_class(a, c, 0, 0, p, degree),
        })
        .collect()
}

fn lambda_coefficients(f: &ConfMap, g: &ConfMap) -> Vec<ConfMap> {
    gc_bracket(f, g).unwrap().coefficients()
}

#[test]
fn inner_derivations_shift_the_first_exponent() {
    let v = gallery::virasoro_ns_default();
    for (k, l) in [(0, 1), (1, 1), (2, 0), (0, 0)] {
        for a in [v.gen(0), v.gen(1), v.gen(0).mul_poly(&Poly::d())] {
            let f = inner_derivation(&v, &a, k, l).unwrap();
            let r = is_derivation(&v, &f, k + 1, l);
            assert!(r.ok(), "k={k} l={l}: {r}");
        }
    }
    let e = gallery::ex25();
    for (k, l) in [(0, 1), (1, 2), (0, 0)] {
        let f = inner_derivation(&e, &e.gen(0), k, l).unwrap();
        assert!(f.is_zero());
        assert!(is_derivation(&e, &f, k + 1, l).ok());
    }
}

#[test]
fn inner_derivation_columns_are_brackets() {
    let v = gallery::virasoro_ns_default();
    let f = inner_derivation(&v, &v.gen(0), 0, 1).unwrap();
    for i in 0..2 {
        assert_eq!(f.column(i), v.bracket(&v.gen(0), &v.gen(i), &Poly::x(1)));
    }
}

#[test]
fn gc_brackets_of_derivations_are_derivations() {
    for (a, degree) in [(gallery::ex25(), 2), (cur(&gallery::gl(1, 1)).unwrap(), 1)] {
        let der = solved(&a, None, degree);
        assert!(!der.is_empty());
        for f in &der {
            for g in &der {
                for h in lambda_coefficients(f, g) {
                    let r = is_derivation(&a, &h, 0, 0);
                    assert!(r.ok(), "{r}");
                }
            }
        }
    }
}

#[test]
fn gc_brackets_sum_the_exponents() {
    let v = gallery::virasoro_ns_default();
    let f = inner_derivation(&v, &v.gen(0), 0, 1).unwrap();
    let g = inner_derivation(&v, &v.gen(1), 1, 1).unwrap();
    for h in lambda_coefficients(&f, &g) {
        assert!(is_derivation(&v, &h, 3, 2).ok());
    }
}

#[test]
fn twisting_a_derivation_by_the_structure_maps_raises_its_exponents() {
    let a = gallery::cur_gl11();
    for f in solved(&a, None, 1) {
        let by_alpha = f.compose_endo(&a.alpha).unwrap();
        assert!(is_derivation(&a, &by_alpha, 1, 0).ok());
        let by_beta = f.compose_endo(&a.beta).unwrap();
        assert!(is_derivation(&a, &by_beta, 0, 1).ok());
    }
}

type Op = Rc<dyn Fn(&Vector, &Poly) -> Vector>;

fn op(f: &ConfMap) -> (Op, Parity) {
    let f = f.clone();
    let p = f.parity();
    (Rc::new(move |v: &Vector, s: &Poly| f.apply(v, s)), p)
}

/// `[F_λ G]` as an operator in its own parameter `s`:
/// `F_λ(G_{s-λ} v) - (-1)^{|F||G|} G_{s-λ}(F_λ v)`.
fn bracket((f, pf): &(Op, Parity), (g, pg): &(Op, Parity), lambda: &Poly) -> (Op, Parity) {
    let (f, g, lambda) = (f.clone(), g.clone(), lambda.clone());
    let sign = pf.koszul(*pg);
    let h = move |v: &Vector, s: &Poly| {
        let rest = s - &lambda;
        let first = f(&g(v, &rest), &lambda);
        let second = g(&f(v, &lambda), &rest);
        &first - &second.scale(&sign)
    };
    (Rc::new(h), *pf + *pg)
}

fn twisted(f: &ConfMap, m: &EndoMap) -> (Op, Parity) {
    op(&f.compose_endo(m).unwrap())
}

#[test]
fn gc_bracket_on_derivations_is_bihom_skew_and_jacobi() {
    let a = gallery::cur_gl11();
    let der = solved(&a, None, 0);
    assert!(!der.is_empty());
    let (lambda, mu, nu) = (Poly::x(2), Poly::x(3), Poly::x(4));
    let ab = a.alpha.mul(&a.beta).unwrap();
    for f in &der {
        for g in &der {
            let left = bracket(&twisted(f, &a.beta), &twisted(g, &a.alpha), &lambda);
            let swapped = bracket(&twisted(g, &a.beta), &twisted(f, &a.alpha), &(&nu - &lambda));
            let sign = f.parity().koszul(g.parity());
            for i in 0..a.rank() {
                let e = a.gen(i);
                assert_eq!(left.0(&e, &nu), swapped.0(&e, &nu).scale(&-sign.clone()));
            }
            for h in &der {
                let inner = bracket(&op(g), &op(h), &mu);
                let lhs = bracket(&twisted(f, &ab), &inner, &lambda);
                let first = bracket(
                    &bracket(&twisted(f, &a.beta), &op(g), &lambda),
                    &twisted(h, &a.beta),
                    &(&lambda + &mu),
                );
                let second = bracket(
                    &twisted(g, &a.beta),
                    &bracket(&twisted(f, &a.alpha), &op(h), &lambda),
                    &mu,
                );
                let sign = f.parity().koszul(g.parity());
                for i in 0..a.rank() {
                    let e = a.gen(i);
                    let rhs = &first.0(&e, &nu) + &second.0(&e, &nu).scale(&sign);
                    assert_eq!(lhs.0(&e, &nu), rhs);
                }
            }
        }
    }
}

#[test]
fn central_derivations_form_an_ideal() {
    for a in [cur(&gallery::heisenberg()).unwrap(), gallery::cur_gl11()] {
        let central = solved(&a, Some(MapClass::CentralDerivation), 1);
        assert!(!central.is_empty());
        for f in &central {
            for g in &solved(&a, None, 1) {
                for h in lambda_coefficients(f, g) {
                    let r = class_report(&a, &h, MapClass::CentralDerivation, 0, 0);
                    assert!(r.ok(), "{r}");
                }
            }
        }
    }
}

#[test]
fn quasicentroid_brackets_have_witnesses_with_vanishing_outer_map() {
    for (a, degree) in [(gallery::ex25(), 2), (cur(&gallery::gl(1, 1)).unwrap(), 1)] {
        let qc = solved(&a, Some(MapClass::Quasicentroid), degree);
        for f in &qc {
            for g in &qc {
                for h in lambda_coefficients(f, g) {
                    let zero = ConfMap::zero(a.rank(), h.parity());
                    let first = h.scale(&f.parity().koszul(g.parity()));
                    assert!(generalized_residual(&a, &h, &first, &zero, 0, 0).unwrap().ok());
                    let w = witness_generalized(&a, &h, 0, 0, degree + 2, SecondMap::Zero).unwrap();
                    assert!(w.is_some());
                }
            }
        }
    }
}

#[test]
fn quasiderivation_plus_quasicentroid_is_generalized() {
    let a = gallery::ex25();
    for p in PARITIES {
        for (f, companion) in solve_quasiderivations(&a, 0, 0, p, 2) {
            assert!(quasi_residual(&a, &f, &companion, 0, 0).unwrap().ok());
            for g in solve_class(&a, MapClass::Quasicentroid, 0, 0, p, 2) {
                let sum = f.add(&g).unwrap();
                let diff = f.sub(&g).unwrap();
                let r = generalized_residual(&a, &sum, &diff, &companion, 0, 0).unwrap();
                assert!(r.ok(), "{r}");
            }
        }
    }
}

#[test]
fn class_inclusions_hold_on_solved_maps() {
    let a = gallery::ex25();
    for f in solved(&a, Some(MapClass::Centroid), 2) {
        let flags = classify_map(&a, &f, 0, 0);
        assert!(flags.in_omega && flags.quasicentroid);
        let zero = ConfMap::zero(3, f.parity());
        assert!(generalized_residual(&a, &f, &zero, &f, 0, 0).unwrap().ok());
    }
    for f in solved(&a, None, 2) {
        assert!(generalized_residual(&a, &f, &f, &f, 0, 0).unwrap().ok());
        assert!(quasi_residual(&a, &f, &f, 0, 0).unwrap().ok());
    }
}

#[test]
fn scalar_maps_on_the_rank_three_example() {
    let a = gallery::ex25();
    let two = ConfMap::identity(3).scale(&int(2));
    let flags = classify_map(&a, &two, 0, 0);
    assert!(flags.in_omega && flags.centroid && !flags.derivation);
    let x = Poly::x(1);
    let mu = Poly::x(2);
    for i in 0..3 {
        for j in 0..3 {
            let (ea, eb) = (a.gen(i), a.gen(j));
            let left = a.bracket(&two.apply(&ea, &x), &eb, &(&x + &mu));
            let outer = two.apply(&a.bracket(&ea, &eb, &mu), &x);
            assert_eq!(left, outer);
        }
    }
}

#[test]
fn derivation_spaces_grow_with_the_degree_bound() {
    let a = gallery::ex25();
    let dims: Vec<usize> = (0..=2).map(|d| solve_derivations(&a, 0, 0, Parity::Even, d).len()).collect();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{dims:?}");
}
