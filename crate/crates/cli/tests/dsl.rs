use std::path::PathBuf;

use bihom_cli::dsl::{parse, serialize, Document, Item, Pos};
use bihom_core::constructions::cur;
use bihom_core::derivations::solve_derivations;
use bihom_core::gallery::{self, random};
use bihom_core::{Parity, Poly, RepModule, Vector};
use proptest::prelude::*;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

fn only_algebra(doc: &Document) -> &bihom_core::Algebra {
    match &doc.definitions()[0].item {
        Item::Algebra(a) => a,
        other => panic!("expected an algebra, got {other:?}"),
    }
}

fn error_at(text: &str) -> (Pos, String) {
    let e = parse(text).unwrap_err();
    (e.pos, e.message)
}

#[test]
fn shipped_examples_parse_to_the_gallery_algebras() {
    let doc = parse(&read("virasoro_ns.alg")).unwrap();
    let v = only_algebra(&doc);
    assert_eq!(*v, gallery::virasoro_ns_default());
    let ll = &Poly::d() + &Poly::x(1).scale(&bihom_core::kernel::scalar::int(2));
    assert_eq!(*v.table.get(0, 0), Vector::term(2, 0, ll));

    let doc = parse(&read("ex25.alg")).unwrap();
    let e = only_algebra(&doc);
    assert_eq!(*e, gallery::ex25());
    assert_eq!(*e.table.get(1, 2), e.gen(0));

    let doc = parse(&read("cur_gl11.alg")).unwrap();
    assert_eq!(*only_algebra(&doc), gallery::cur_gl11());

    let doc = parse(&read("virasoro_f_eq_d.alg")).unwrap();
    assert_eq!(*only_algebra(&doc), gallery::virasoro_ns(&Poly::d(), &Poly::one()));
}

#[test]
fn shipped_files_are_canonical() {
    for entry in std::fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_str().unwrap().to_string();
        if name == "malformed.alg" {
            continue;
        }
        let text = read(&name);
        assert_eq!(serialize(&parse(&text).unwrap()), text, "{name}");
    }
}

#[test]
fn rationals_are_reduced_on_output() {
    let doc = parse("algebra a { generators: L: even; alpha: L -> (2/4)*d*L; }").unwrap();
    assert!(serialize(&doc).contains("alpha: L -> 1/2*d*L;"));
}

#[test]
fn noncanonical_input_normalizes_once() {
    let text = "# comment\nalgebra v{generators:L:even,E:odd;\n bracket [L,L]=2*x*L+d*L; # trailing\n\
                bracket[L,E] = (3/2*x + d)*E; bracket [E, L] = 3/2*x*E + 1/2*d*E;}";
    let once = serialize(&parse(text).unwrap());
    assert_eq!(serialize(&parse(&once).unwrap()), once);
    assert_eq!(*only_algebra(&parse(&once).unwrap()), gallery::virasoro_ns_default());
}

#[test]
fn empty_generators_block_is_reported_at_the_block() {
    let (pos, msg) = error_at("algebra a {\n  generators: ;\n}");
    assert_eq!(pos, Pos { line: 2, col: 3 });
    assert!(msg.contains("empty generators"), "{msg}");
    let (pos, _) = error_at("algebra a {\n}");
    assert_eq!(pos, Pos { line: 1, col: 11 });
}

#[test]
fn syntax_errors_carry_positions() {
    let (pos, msg) = error_at(&read("malformed.alg"));
    assert_eq!(pos, Pos { line: 3, col: 30 });
    assert!(msg.contains("expected `)`"), "{msg}");
    let (pos, _) = error_at("algebra a { generators: L: even; bracket [L, L] = $; }");
    assert_eq!(pos.col, 51);
    let (_, msg) = error_at("lattice a {}");
    assert!(msg.contains("unknown definition kind"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; alpha L -> L; }");
    assert!(msg.contains("expected `:`"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; frobnicate: L -> L; }");
    assert!(msg.contains("unknown statement"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: neutral; }");
    assert!(msg.contains("`even` or `odd`"), "{msg}");
}

#[test]
fn unresolved_names_are_errors() {
    let (pos, msg) = error_at("algebra a { generators: L: even; bracket [L, M] = L; }");
    assert_eq!(pos.col, 46);
    assert!(msg.contains("unresolved name `M`"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; bracket [L, L] = K; }");
    assert!(msg.contains("unresolved name `K`"), "{msg}");
    let (_, msg) = error_at("module m over nowhere { generators: v: even; }");
    assert!(msg.contains("unresolved name `nowhere`"), "{msg}");
    let (_, msg) = error_at(
        "algebra a { generators: L: even; }\nmap f on a { images: L -> L; }\nooperator t on f { images: L -> L; }",
    );
    assert!(msg.contains("expected a module or an algebra"), "{msg}");
}

#[test]
fn parity_mismatches_are_errors() {
    let (pos, msg) = error_at("algebra a { generators: L: even, E: odd; bracket [L, E] = L; }");
    assert!(msg.contains("parity mismatch"), "{msg}");
    assert_eq!(pos.col, 59);
    let (_, msg) = error_at("algebra a { generators: L: even, E: odd; alpha: L -> E; }");
    assert!(msg.contains("parity mismatch"), "{msg}");
    let (_, msg) = error_at(
        "algebra a { generators: L: even, E: odd; }\nmap f on a { parity: odd; images: L -> L; }",
    );
    assert!(msg.contains("must be odd"), "{msg}");
    let (_, msg) = error_at(
        "algebra a { generators: L: even, E: odd; }\nooperator t on a { images: E -> L; }",
    );
    assert!(msg.contains("parity mismatch"), "{msg}");
}

#[test]
fn structural_errors() {
    let (_, msg) = error_at("algebra a { generators: L: even; }\nalgebra a { generators: L: even; }");
    assert!(msg.contains("already defined"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even, L: odd; }");
    assert!(msg.contains("duplicate generator"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: x: even; }");
    assert!(msg.contains("reserved"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: x2: even; }");
    assert!(msg.contains("reserved"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; bracket [L, L] = L; bracket [L, L] = L; }");
    assert!(msg.contains("duplicate bracket"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; alpha: L -> L; alpha: L -> L; }");
    assert!(msg.contains("duplicate entry"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even, M: even; bracket [L, L] = L*M; }");
    assert!(msg.contains("not linear"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; bracket [L, L] = L + 1; }");
    assert!(msg.contains("without a generator"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; alpha: L -> x*L; }");
    assert!(msg.contains("`x` is not allowed"), "{msg}");
    let (_, msg) = error_at("superalgebra g { generators: a: even; bracket [a, a] = d*a; }");
    assert!(msg.contains("`d` is not allowed"), "{msg}");
    let (_, msg) = error_at("algebra a { generators: L: even; bracket [L, L] = L^2; }");
    assert!(msg.contains("not linear"), "{msg}");
}

#[test]
fn expressions_expand_products_and_powers() {
    let doc = parse("algebra a { generators: L: even; bracket [L, L] = (d + 2*x)^2*L - x*(2*L); }")
        .unwrap();
    let a = only_algebra(&doc);
    let (d, x) = (Poly::d(), Poly::x(1));
    let two = bihom_core::kernel::scalar::int(2);
    let expected = &(&d + &x.scale(&two)).pow(2) - &x.scale(&two);
    assert_eq!(*a.table.get(0, 0), Vector::term(1, 0, expected));
}

#[test]
fn built_algebras_serialize_and_reparse() {
    let mut doc = Document::new();
    doc.push("cur_sl2", Item::Algebra(cur(&gallery::sl2()).unwrap())).unwrap();
    doc.push("heis", Item::Superalgebra(gallery::heisenberg())).unwrap();
    let a = gallery::ex25();
    doc.push("ex25", Item::Algebra(a.clone())).unwrap();
    for (k, f) in solve_derivations(&a, 0, 0, Parity::Even, 1).into_iter().enumerate() {
        doc.push(format!("der{k}"), Item::Map { on: "ex25".into(), map: f }).unwrap();
    }
    let text = serialize(&doc);
    let back = parse(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(serialize(&back), text);
}

#[test]
fn documents_reject_unusable_names() {
    let mut doc = Document::new();
    assert!(doc.push("1a", Item::Algebra(gallery::ex25())).is_err());
    assert!(doc
        .push("m", Item::Module { over: "ex25".into(), module: RepModule::adjoint(&gallery::ex25()) })
        .is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_documents_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let (alg, module) = random::module_pair(&mut rng);
        let mut doc = Document::new();
        doc.push("r", Item::Algebra(random::regular(&mut rng))).unwrap();
        doc.push("s", Item::Associative(random::associative(&mut rng))).unwrap();
        doc.push("g", Item::Superalgebra(random::lie_fd(&mut rng))).unwrap();
        doc.push("a", Item::Algebra(alg)).unwrap();
        doc.push("m", Item::Module { over: "a".into(), module }).unwrap();
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
    }
}
