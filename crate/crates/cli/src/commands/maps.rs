use bihom_core::derivations::{classify_map, solve_class, witness_generalized, MapClass, SecondMap};
use bihom_core::rep::{check_o_operator, homomorphism_residual, induced_bracket};
use bihom_core::{Algebra, ConfMap, OOperator, Parity, RepModule};

use crate::cli::{ClassArg, Output};
use crate::commands::{algebra, built, pick, verdict, CliError};
use crate::dsl::{Document, Item, Kind};
use crate::report::{Node, Report};

fn render_map(a: &Algebra, f: &ConfMap) -> Node {
    Node::List(
        f.render(&a.basis)
            .into_iter()
            .map(|(g, v)| Node::Str(format!("{g} -> {v}")))
            .collect(),
    )
}

fn class_of(c: ClassArg) -> MapClass {
    match c {
        ClassArg::Derivation => MapClass::Derivation,
        ClassArg::Centroid => MapClass::Centroid,
        ClassArg::Quasicentroid => MapClass::Quasicentroid,
        ClassArg::CentralDerivation => MapClass::CentralDerivation,
    }
}

pub fn solve_der(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    (k, l): (u32, u32),
    deg: i32,
    parity: Parity,
    class: ClassArg,
) -> Result<(), CliError> {
    let (n, a) = algebra(doc, name)?;
    let class = class_of(class);
    report.set("algebra", n);
    report.set("class", class.name());
    report.set("k", k);
    report.set("l", l);
    report.set("parity", parity.name());
    report.set("bound", format!("degree <= {deg}"));
    let basis = solve_class(a, class, k, l, parity, deg);
    report.set("dimension", basis.len());
    report.set("basis", Node::List(basis.iter().map(|f| render_map(a, f)).collect()));
    Ok(())
}

fn map<'a>(doc: &'a Document, name: Option<&'a str>) -> Result<(&'a str, &'a Algebra, &'a ConfMap), CliError> {
    let n = pick(doc, Kind::Map, name)?;
    match doc.get(n).map(|d| &d.item) {
        Some(Item::Map { on, map }) => Ok((n, doc.algebra(on).expect("resolved reference"), map)),
        _ => unreachable!("picked a map"),
    }
}

pub fn classify(report: &mut Report, doc: &Document, name: Option<&str>, (k, l): (u32, u32)) -> Result<(), CliError> {
    let (n, a, f) = map(doc, name)?;
    report.set("map", n);
    report.set("k", k);
    report.set("l", l);
    let flags = classify_map(a, f, k, l);
    report.set(
        "classes",
        Node::map()
            .with("commutes-with-twists", flags.in_omega)
            .with("derivation", flags.derivation)
            .with("centroid", flags.centroid)
            .with("quasicentroid", flags.quasicentroid)
            .with("central-derivation", flags.central_derivation),
    );
    Ok(())
}

pub fn gder_witness(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    (k, l): (u32, u32),
    deg: i32,
) -> Result<(), CliError> {
    let (n, a, f) = map(doc, name)?;
    report.set("map", n);
    report.set("k", k);
    report.set("l", l);
    report.set("bound", format!("degree <= {deg}"));
    let Some(found) = verdict(report, witness_generalized(a, f, k, l, deg, SecondMap::Free))? else {
        return Ok(());
    };
    match found {
        Some(w) => {
            report.set("witnessed", true);
            report.set("first", render_map(a, &w.first));
            report.set("second", render_map(a, &w.second));
        }
        None => {
            report.set("witnessed", false);
            report.set("note", format!("not witnessed at degree <= {deg}"));
        }
    }
    Ok(())
}

fn ooperator<'a>(
    doc: &'a Document,
    name: Option<&'a str>,
) -> Result<(&'a str, &'a Algebra, RepModule, &'a OOperator), CliError> {
    let n = pick(doc, Kind::OOperator, name)?;
    match doc.get(n).map(|d| &d.item) {
        Some(Item::OOperator { on, op }) => {
            let (a, m) = doc.module_of(on).expect("resolved reference");
            Ok((n, a, m, op))
        }
        _ => unreachable!("picked an operator"),
    }
}

pub fn ooperator_check(report: &mut Report, doc: &Document, name: Option<&str>) -> Result<(), CliError> {
    let (n, a, m, t) = ooperator(doc, name)?;
    report.set("ooperator", n);
    if let Some(r) = verdict(report, check_o_operator(a, &m, t))? {
        report.check("check", &r);
    }
    Ok(())
}

pub fn induced(report: &mut Report, doc: &Document, name: Option<&str>, output: &Output) -> Result<(), CliError> {
    let (n, a, m, t) = ooperator(doc, name)?;
    report.set("ooperator", n);
    let Some(alg) = verdict(report, induced_bracket(a, &m, t))? else {
        return Ok(());
    };
    let hom = homomorphism_residual(a, &alg, t);
    let result_name = output.as_name.clone().unwrap_or(format!("{n}_induced"));
    built(report, result_name, alg)?;
    report.check("homomorphism", &hom);
    Ok(())
}
