//! Conformal linear maps on an algebra, their gc-bracket, and exact
//! solvers for twisted derivations, centroids, quasicentroids, central
//! derivations and generalized derivations.

mod classes;
mod confmap;

pub use classes::{
    check_omega, class_report, classify_map, generalized_residual, is_derivation,
    quasi_residual, solve_class, solve_derivations, solve_quasiderivations, witness_generalized,
    witness_quasi, ClassFlags, DerivationWitness, MapClass, SecondMap,
};
pub use confmap::{gc_bracket, inner_derivation, ConfMap, GcBracket};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Axiom;
    use crate::gallery;
    use crate::kernel::polymat::PolyMatrix;
    use crate::kernel::scalar::int;
    use crate::parity::Parity;

    fn scalar_map(n: usize, c: i64) -> ConfMap {
        ConfMap::identity(n).scale(&int(c))
    }

    #[test]
    fn derivation_examples() {
        let v = gallery::virasoro_ns_default();
        assert!(is_derivation(&v, &ConfMap::zero(2, Parity::Even), 0, 0).ok());
        let ad = inner_derivation(&v, &v.gen(0), 0, 1).unwrap();
        assert!(is_derivation(&v, &ad, 0, 0).ok());
        assert!(is_derivation(&v, &ad, 1, 1).ok());

        let e = gallery::ex25();
        let r = is_derivation(&e, &scalar_map(3, 2), 0, 0);
        let viol = r.find(Axiom::Leibniz, &["e2", "e3"]).unwrap();
        assert_eq!(viol.residual, e.gen(0).scale(&int(2)));
    }

    #[test]
    fn solver_dimensions() {
        let a = gallery::abelian(1);
        assert_eq!(solve_derivations(&a, 0, 0, Parity::Even, 1).len(), 3);
        assert!(solve_derivations(&a, 0, 0, Parity::Even, -1).is_empty());
        let e = gallery::ex25();
        for p in [Parity::Even, Parity::Odd] {
            for f in solve_derivations(&e, 0, 0, p, 2) {
                assert!(is_derivation(&e, &f, 0, 0).ok());
                assert_eq!(f.parity(), p);
            }
        }
    }

    #[test]
    fn classification() {
        let e = gallery::ex25();
        let flags = classify_map(&e, &ConfMap::zero(3, Parity::Even), 0, 0);
        assert!(flags.centroid && flags.quasicentroid && flags.central_derivation);
        let a = gallery::abelian(1);
        assert!(classify_map(&a, &ConfMap::identity(1), 0, 0).centroid);
        let id = ConfMap::identity(3);
        let flags = classify_map(&e, &id, 0, 0);
        let x = crate::kernel::poly::Poly::x(1);
        let mu = crate::kernel::poly::Poly::x(2);
        let mut brute = true;
        for i in 0..3 {
            for j in 0..3 {
                let (ea, eb) = (e.gen(i), e.gen(j));
                let sign = Parity::Even.koszul(e.basis.parity(i));
                let left = e.bracket(&ea, &eb, &(&x + &mu));
                let right = e.bracket(&ea, &eb, &mu).scale(&sign);
                let outer = e.bracket(&ea, &eb, &mu);
                brute &= left == right && left == outer;
            }
        }
        assert_eq!(flags.centroid, brute);
    }

    #[test]
    fn witnesses() {
        let e = gallery::ex25();
        for f in solve_derivations(&e, 0, 0, Parity::Even, 1) {
            let w = witness_generalized(&e, &f, 0, 0, 1, SecondMap::Free).unwrap().unwrap();
            let r = generalized_residual(&e, &f, &w.first, &w.second, 0, 0).unwrap();
            assert!(r.ok(), "{r}");
            assert!(generalized_residual(&e, &f, &f, &f, 0, 0).unwrap().ok());
            let q = witness_quasi(&e, &f, 0, 0, 1).unwrap().unwrap();
            assert!(quasi_residual(&e, &f, &q, 0, 0).unwrap().ok());
        }
        for f in solve_class(&e, MapClass::Centroid, 0, 0, Parity::Even, 1) {
            let w = witness_generalized(&e, &f, 0, 0, 1, SecondMap::Free).unwrap();
            assert!(w.is_some());
            let zero = ConfMap::zero(3, Parity::Even);
            assert!(generalized_residual(&e, &f, &zero, &f, 0, 0).unwrap().ok());
        }
        let off = ConfMap::new(
            Parity::Even,
            PolyMatrix::from_fn(3, 3, |j, i| {
                if (j, i) == (1, 0) {
                    crate::kernel::poly::Poly::one()
                } else {
                    crate::kernel::poly::Poly::zero()
                }
            }),
        )
        .unwrap();
        assert!(witness_generalized(&e, &off, 0, 0, 1, SecondMap::Free).unwrap().is_none());
    }
}
