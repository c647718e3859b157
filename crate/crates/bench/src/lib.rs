//! Inputs shared by the benchmarks.

use bihom_cli::dsl::{serialize, Document, Item};
use bihom_core::constructions::{cur, direct_sum};
use bihom_core::gallery;
use bihom_core::rep::solve_cochain_space;
use bihom_core::{Algebra, Cochain, Parity, RepModule};

/// Algebras of increasing rank, labelled for benchmark ids.
pub fn algebras() -> Vec<(&'static str, Algebra)> {
    let sl2 = cur(&gallery::sl2()).expect("sl2 is untwisted");
    vec![
        ("virasoro_ns", gallery::virasoro_ns_default()),
        ("ex25", gallery::ex25()),
        ("cur_gl11", gallery::cur_gl11()),
        ("cur_sl2", sl2.clone()),
        ("cur_sl2_plus_ex25", direct_sum(&sl2, &gallery::ex25()).expect("regular")),
    ]
}

/// The adjoint module of the rank-three example with a degree-bounded basis
/// of its even 1-cochains.
pub fn adjoint_cochains(degree: i32) -> (Algebra, RepModule, Vec<Cochain>) {
    let a = gallery::ex25();
    let m = RepModule::adjoint(&a);
    let space = solve_cochain_space(&a, &m, 1, Parity::Even, degree).expect("regular");
    (a, m, space)
}

/// Canonical definition text holding every algebra of [`algebras`].
pub fn definition_text() -> String {
    let mut doc = Document::new();
    for (name, a) in algebras() {
        doc.push(name, Item::Algebra(a)).expect("valid names");
    }
    serialize(&doc)
}
