use bihom_core::constructions::{
    composition_twist, cur as current, direct_sum, from_associative, power_twist,
    semidirect as semidirect_product, tensor_superalgebra, yau_twist,
};
use bihom_core::rep::check_module as module_check;
use bihom_core::{check_algebra, check_associative, EndoMap, Parity};

use crate::cli::{Output, Target};
use crate::commands::{algebra, built, pair, pick, verdict, CliError};
use crate::dsl::{Document, Item, Kind};
use crate::report::Report;

fn output_name(output: &Output, default: String) -> String {
    output.as_name.clone().unwrap_or(default)
}

pub fn check(report: &mut Report, doc: &Document, name: Option<&str>) -> Result<(), CliError> {
    let (n, a) = algebra(doc, name)?;
    report.set("algebra", n);
    report.set("rank", a.rank());
    report.check("check", &check_algebra(a));
    Ok(())
}

pub fn check_assoc(report: &mut Report, doc: &Document, name: Option<&str>) -> Result<(), CliError> {
    let n = pick(doc, Kind::Associative, name)?;
    let Some(Item::Associative(a)) = doc.get(n).map(|d| &d.item) else {
        unreachable!("picked an associative algebra")
    };
    report.set("associative", n);
    report.set("rank", a.rank());
    report.check("check", &check_associative(a));
    Ok(())
}

pub fn check_module(report: &mut Report, doc: &Document, target: &Target) -> Result<(), CliError> {
    let p = pair(doc, target)?;
    report.set("algebra", p.name);
    report.set("module", p.label);
    report.set("rank", p.module.rank());
    report.check("check", &module_check(p.algebra, &p.module));
    Ok(())
}

/// A map definition usable as a twisting map: even with entries in `d` only.
fn endo(doc: &Document, name: &str) -> Result<EndoMap, CliError> {
    match doc.get(name).map(|d| &d.item) {
        Some(Item::Map { map, .. }) => {
            if map.parity() != Parity::Even || !map.matrix().is_d_only() {
                return Err(CliError::Usage(format!(
                    "map `{name}` must be even with entries in d only to twist"
                )));
            }
            Ok(map.matrix().clone())
        }
        _ => Err(CliError::Usage(format!("no map named `{name}`"))),
    }
}

pub fn twist(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    alpha: &str,
    beta: &str,
    output: &Output,
) -> Result<(), CliError> {
    let (n, a) = algebra(doc, name)?;
    let (ma, mb) = (endo(doc, alpha)?, endo(doc, beta)?);
    report.set("algebra", n);
    if let Some(t) = verdict(report, yau_twist(a, &ma, &mb))? {
        built(report, output_name(output, format!("{n}_twist")), t)?;
    }
    Ok(())
}

pub fn compose_twist(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    maps: Option<(&str, &str)>,
    power: Option<u32>,
    output: &Output,
) -> Result<(), CliError> {
    let (n, a) = algebra(doc, name)?;
    report.set("algebra", n);
    let result = match (maps, power) {
        (Some((ma, mb)), _) => composition_twist(a, &endo(doc, ma)?, &endo(doc, mb)?),
        (None, Some(k)) => {
            report.set("power", k);
            power_twist(a, k)
        }
        (None, None) => return Err(CliError::Usage("give --alpha and --beta, or --power".into())),
    };
    if let Some(t) = verdict(report, result)? {
        built(report, output_name(output, format!("{n}_composed")), t)?;
    }
    Ok(())
}

pub fn dsum(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    other: Option<&str>,
    output: &Output,
) -> Result<(), CliError> {
    let (n, a) = algebra(doc, name)?;
    let m = match other {
        Some(o) => pick(doc, Kind::Algebra, Some(o))?,
        None => doc
            .names_of(Kind::Algebra)
            .find(|x| *x != n)
            .ok_or_else(|| CliError::Usage("dsum needs two algebras".into()))?,
    };
    let b = doc.algebra(m).expect("picked an algebra");
    report.set("algebras", vec![n, m]);
    if let Some(s) = verdict(report, direct_sum(a, b))? {
        built(report, output_name(output, format!("{n}_plus_{m}")), s)?;
    }
    Ok(())
}

fn superalgebra<'a>(
    doc: &'a Document,
    name: Option<&'a str>,
) -> Result<(&'a str, &'a bihom_core::SuperAlgebraFD), CliError> {
    let n = pick(doc, Kind::Superalgebra, name)?;
    match doc.get(n).map(|d| &d.item) {
        Some(Item::Superalgebra(s)) => Ok((n, s)),
        _ => unreachable!("picked a superalgebra"),
    }
}

pub fn cur(report: &mut Report, doc: &Document, name: Option<&str>, output: &Output) -> Result<(), CliError> {
    let (n, g) = superalgebra(doc, name)?;
    report.set("superalgebra", n);
    if let Some(c) = verdict(report, current(g))? {
        built(report, output_name(output, format!("cur_{n}")), c)?;
    }
    Ok(())
}

pub fn tensor(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    other: Option<&str>,
    output: &Output,
) -> Result<(), CliError> {
    let (n, a) = algebra(doc, name)?;
    let (m, b) = superalgebra(doc, other)?;
    report.set("algebra", n);
    report.set("superalgebra", m);
    if let Some(t) = verdict(report, tensor_superalgebra(a, b))? {
        built(report, output_name(output, format!("{n}_tensor_{m}")), t)?;
    }
    Ok(())
}

pub fn from_assoc(
    report: &mut Report,
    doc: &Document,
    name: Option<&str>,
    output: &Output,
) -> Result<(), CliError> {
    let n = pick(doc, Kind::Associative, name)?;
    let Some(Item::Associative(a)) = doc.get(n).map(|d| &d.item) else {
        unreachable!("picked an associative algebra")
    };
    report.set("associative", n);
    if let Some(c) = verdict(report, from_associative(a))? {
        built(report, output_name(output, format!("{n}_commutator")), c)?;
    }
    Ok(())
}

pub fn semidirect(
    report: &mut Report,
    doc: &Document,
    target: &Target,
    output: &Output,
) -> Result<(), CliError> {
    let p = pair(doc, target)?;
    report.set("algebra", p.name);
    report.set("module", p.label);
    if let Some(s) = verdict(report, semidirect_product(p.algebra, &p.module))? {
        built(report, output_name(output, format!("{}_semidirect", p.name)), s)?;
    }
    Ok(())
}
