use bihom_core::algebra::partial;
use bihom_core::gallery::{self, random};
use bihom_core::kernel::scalar::{factorial, int};
use bihom_core::*;
use proptest::prelude::*;

fn shipped() -> Vec<Algebra> {
    vec![
        gallery::virasoro_ns_default(),
        gallery::virasoro_ns(&Poly::d(), &Poly::one()),
        gallery::ex25(),
        gallery::cur_gl11(),
    ]
}

/// Brute-force oracle: the bracket polynomial evaluated at `λ = t` against
/// `Σ tⁿ/n!·a_(n)b`, for enough integer points to pin down the `λ`-degree.
fn round_trip_at_points(a: &Algebra, i: usize, j: usize) -> bool {
    let (ea, eb) = (a.gen(i), a.gen(j));
    let value = a.table.get(i, j);
    let top = value.comps().iter().map(|p| p.degree_in(1)).max().unwrap_or(0).max(0);
    (0..=top + 1).all(|t| {
        let t = Poly::from_int(t as i64);
        let direct = value.substitute(1, &t);
        let mut sum = Vector::zero(a.rank());
        for n in 0..=top + 1 {
            let prod = a.nth_product(&ea, &eb, n as i64).unwrap();
            let w = &t.pow(n as u32).scale(&(int(1) / factorial(n as u32)));
            sum += &prod.mul_poly(w);
        }
        sum == direct
    })
}

#[test]
fn n_product_round_trip_on_shipped_examples() {
    for a in shipped() {
        for i in 0..a.rank() {
            for j in 0..a.rank() {
                assert!(round_trip_at_points(&a, i, j), "pair ({i},{j})");
                let mut rebuilt = Vector::zero(a.rank());
                for n in 0..=a.table_degree().max(0) as u32 {
                    let prod = a.nth_product(&a.gen(i), &a.gen(j), n as i64).unwrap();
                    let w = Poly::x(1).pow(n).scale(&(int(1) / factorial(n)));
                    rebuilt += &prod.mul_poly(&w);
                }
                assert_eq!(&rebuilt, a.table.get(i, j));
            }
        }
    }
}

#[test]
fn neveu_schwarz_type_passes_and_f_equal_d_fails_skew_symmetry() {
    let r = check_algebra(&gallery::virasoro_ns_default());
    assert!(r.ok(), "{r}");
    let r = check_algebra(&gallery::virasoro_ns(&Poly::d(), &Poly::one()));
    let v = r.find(Axiom::SkewSymmetry, &["L", "L"]).expect("violation at (L, L)");
    let (d, x) = (Poly::d(), Poly::x(1));
    let oracle = &(&(&d * &d) + &(&d * &x).scale(&int(4))) + &(&x * &x).scale(&int(4));
    assert_eq!(v.residual, Vector::from_polys(vec![oracle, Poly::zero()]));
}

#[test]
fn rank_three_example_and_its_center() {
    let e = gallery::ex25();
    assert!(check_algebra(&e).ok());
    assert_eq!(e.table.get(2, 1), &e.gen(0));
    assert!(is_ideal(&e, &[e.gen(0)]).unwrap());
    assert!(is_subalgebra(&e, &[e.gen(0)]).unwrap());
    assert!(!is_ideal(&e, &[e.gen(1), e.gen(2)]).unwrap());
}

#[test]
fn neveu_schwarz_type_subalgebras() {
    let v = gallery::virasoro_ns_default();
    let (l, e) = (v.gen(0), v.gen(1));
    assert!(is_subalgebra(&v, std::slice::from_ref(&l)).unwrap());
    assert!(!is_ideal(&v, std::slice::from_ref(&l)).unwrap());
    assert!(is_ideal(&v, std::slice::from_ref(&e)).unwrap());
    assert!(is_subalgebra(&v, &[l, e]).unwrap());
}

#[test]
fn nth_products_vanish_beyond_the_lambda_degree() {
    for a in shipped() {
        let top = a.table_degree().max(0) as i64;
        for i in 0..a.rank() {
            for j in 0..a.rank() {
                assert!(a.nth_product(&a.gen(i), &a.gen(j), top + 1).unwrap().is_zero());
                assert!(a.nth_product(&a.gen(i), &a.gen(j), -1).unwrap().is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn partial_on_the_left_lowers_the_product_index(seed in any::<u64>(), n in 0i64..4) {
        let a = random::regular(&mut random::rng(seed));
        for i in 0..a.rank() {
            for j in 0..a.rank() {
                let (ea, eb) = (a.gen(i), a.gen(j));
                let lhs = a.nth_product(&partial(&ea), &eb, n).unwrap();
                let rhs = a.nth_product(&ea, &eb, n - 1).unwrap().scale(&int(-n));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn random_regular_algebras_pass_the_checker(seed in any::<u64>()) {
        let a = random::regular(&mut random::rng(seed));
        let r = check_algebra(&a);
        prop_assert!(r.ok(), "{}", r);
    }
}
