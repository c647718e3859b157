use std::fmt::Write;

use bihom_core::{Basis, PolyMatrix, Table, Vector};

use crate::dsl::{Document, Item};

fn render(names: &[String], v: &Vector) -> String {
    v.render(names, 2)
}

fn generators(out: &mut String, basis: &Basis) {
    let gens: Vec<String> = (0..basis.len())
        .map(|i| format!("{}: {}", basis.name(i), basis.parity(i).name()))
        .collect();
    let _ = writeln!(out, "  generators: {};", gens.join(", "));
}

fn assignment_list(keys: &[String], values: &[String]) -> String {
    keys.iter()
        .zip(values)
        .map(|(k, v)| format!("{k} -> {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn map_statement(out: &mut String, word: &str, basis: &Basis, m: &PolyMatrix) {
    let values: Vec<String> = (0..m.ncols())
        .map(|i| render(basis.names(), &Vector::from_polys(m.column(i))))
        .collect();
    let _ = writeln!(out, "  {word}: {};", assignment_list(basis.names(), &values));
}

fn entries(out: &mut String, word: &str, left: &[String], right: &Basis, table: &Table) {
    for (i, a) in left.iter().enumerate() {
        for j in 0..right.len() {
            let v = table.get(i, j);
            if !v.is_zero() {
                let _ = writeln!(
                    out,
                    "  {word} [{a}, {}] = {};",
                    right.name(j),
                    render(right.names(), v)
                );
            }
        }
    }
}

/// Canonical text of a document: one block per definition in source order,
/// two-space indentation, every generator listed in each map statement,
/// nonzero table entries in generator order, blank lines between blocks.
pub fn serialize(doc: &Document) -> String {
    let mut blocks = Vec::new();
    for def in doc.definitions() {
        let mut out = String::new();
        let name = &def.name;
        match &def.item {
            Item::Algebra(a) => {
                let _ = writeln!(out, "algebra {name} {{");
                generators(&mut out, &a.basis);
                map_statement(&mut out, "alpha", &a.basis, &a.alpha);
                map_statement(&mut out, "beta", &a.basis, &a.beta);
                entries(&mut out, "bracket", a.basis.names(), &a.basis, &a.table);
            }
            Item::Superalgebra(s) => {
                let _ = writeln!(out, "superalgebra {name} {{");
                generators(&mut out, &s.basis);
                map_statement(&mut out, "alpha", &s.basis, &s.alpha);
                map_statement(&mut out, "beta", &s.basis, &s.beta);
                entries(&mut out, "bracket", s.basis.names(), &s.basis, &s.table());
            }
            Item::Associative(a) => {
                let _ = writeln!(out, "associative {name} {{");
                generators(&mut out, &a.basis);
                map_statement(&mut out, "alpha", &a.basis, &a.alpha);
                map_statement(&mut out, "beta", &a.basis, &a.beta);
                entries(&mut out, "product", a.basis.names(), &a.basis, &a.table);
            }
            Item::Module { over, module } => {
                let _ = writeln!(out, "module {name} over {over} {{");
                generators(&mut out, &module.basis);
                map_statement(&mut out, "phi", &module.basis, &module.phi);
                map_statement(&mut out, "psi", &module.basis, &module.psi);
                let left = doc
                    .algebra(over)
                    .expect("documents only hold resolved references")
                    .basis
                    .names();
                entries(&mut out, "action", left, &module.basis, &module.rho);
            }
            Item::Map { on, map } => {
                let alg = doc.algebra(on).expect("documents only hold resolved references");
                let _ = writeln!(out, "map {name} on {on} {{");
                let _ = writeln!(out, "  parity: {};", map.parity().name());
                let values: Vec<String> = (0..map.rank())
                    .map(|i| render(alg.basis.names(), &map.column(i)))
                    .collect();
                let _ = writeln!(out, "  images: {};", assignment_list(alg.basis.names(), &values));
            }
            Item::OOperator { on, op } => {
                let (alg, module) = doc.module_of(on).expect("documents only hold resolved references");
                let _ = writeln!(out, "ooperator {name} on {on} {{");
                let values: Vec<String> = (0..module.rank())
                    .map(|u| render(alg.basis.names(), &Vector::from_polys(op.matrix.column(u))))
                    .collect();
                let _ = writeln!(out, "  images: {};", assignment_list(module.basis.names(), &values));
            }
        }
        out.push_str("}\n");
        blocks.push(out);
    }
    blocks.join("\n")
}
