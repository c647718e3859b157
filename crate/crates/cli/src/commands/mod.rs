//! Execution of each verb against a parsed document.

mod complex;
mod maps;
mod structures;

use bihom_core::{check_algebra, Algebra, Parity, RepModule};

use crate::cli::{Command, ParityArg, Target};
use crate::dsl::{serialize, Document, Item, Kind};
use crate::report::{violations, Report};

/// Failures that are not mathematical verdicts; they exit with status 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] bihom_core::Error),
}

pub fn execute(cmd: &Command, doc: &Document) -> Result<Report, CliError> {
    let mut report = Report::new(cmd.verb());
    match dispatch(&mut report, cmd, doc) {
        Ok(()) => Ok(report),
        Err(CliError::Core(e)) => {
            verdict::<()>(&mut report, Err(e))?;
            Ok(report)
        }
        Err(e) => Err(e),
    }
}

fn dispatch(report: &mut Report, cmd: &Command, doc: &Document) -> Result<(), CliError> {
    match cmd {
        Command::Check { name } => structures::check(report, doc, name.as_deref())?,
        Command::CheckAssoc { name } => structures::check_assoc(report, doc, name.as_deref())?,
        Command::CheckModule { target } => structures::check_module(report, doc, target)?,
        Command::Twist {
            name,
            alpha,
            beta,
            output,
        } => structures::twist(report, doc, name.as_deref(), alpha, beta, output)?,
        Command::ComposeTwist {
            name,
            alpha,
            beta,
            power,
            output,
        } => structures::compose_twist(
            report,
            doc,
            name.as_deref(),
            alpha.as_deref().zip(beta.as_deref()),
            *power,
            output,
        )?,
        Command::Dsum {
            name,
            other,
            output,
        } => structures::dsum(report, doc, name.as_deref(), other.as_deref(), output)?,
        Command::Cur { name, output } => structures::cur(report, doc, name.as_deref(), output)?,
        Command::Tensor {
            name,
            other,
            output,
        } => structures::tensor(report, doc, name.as_deref(), other.as_deref(), output)?,
        Command::FromAssoc { name, output } => {
            structures::from_assoc(report, doc, name.as_deref(), output)?
        }
        Command::Semidirect { target, output } => {
            structures::semidirect(report, doc, target, output)?
        }
        Command::D2check { n, deg, target } => complex::d2check(report, doc, target, *n, *deg)?,
        Command::Cocycles {
            n,
            deg,
            parity,
            target,
        } => complex::cocycles(report, doc, target, *n, *deg, parity_of(*parity))?,
        Command::CohomologyReport { n, deg, target } => {
            complex::cohomology_report(report, doc, target, *n, *deg)?
        }
        Command::SolveDer {
            k,
            l,
            deg,
            parity,
            class,
            name,
        } => maps::solve_der(
            report,
            doc,
            name.as_deref(),
            (*k, *l),
            *deg,
            parity_of(*parity),
            *class,
        )?,
        Command::Classify { k, l, map } => maps::classify(report, doc, map.as_deref(), (*k, *l))?,
        Command::GderWitness { k, l, deg, map } => {
            maps::gder_witness(report, doc, map.as_deref(), (*k, *l), *deg)?
        }
        Command::OoperatorCheck { ooperator } => {
            maps::ooperator_check(report, doc, ooperator.as_deref())?
        }
        Command::Induced { ooperator, output } => {
            maps::induced(report, doc, ooperator.as_deref(), output)?
        }
        Command::Fmt => return Err(CliError::Usage("fmt does not produce a report".into())),
    }
    Ok(())
}

fn parity_of(p: ParityArg) -> Parity {
    match p {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    }
}

/// The named definition of `kind`, or the first one in the document.
fn pick<'a>(doc: &'a Document, kind: Kind, name: Option<&'a str>) -> Result<&'a str, CliError> {
    match name {
        Some(n) => match doc.get(n) {
            Some(d) if d.item.kind() == kind => Ok(n),
            Some(d) => Err(CliError::Usage(format!(
                "`{n}` is a {}, expected a {kind}",
                d.item.kind()
            ))),
            None => Err(CliError::Usage(format!("no definition named `{n}`"))),
        },
        None => doc
            .names_of(kind)
            .next()
            .ok_or_else(|| CliError::Usage(format!("the input defines no {kind}"))),
    }
}

fn algebra<'a>(doc: &'a Document, name: Option<&'a str>) -> Result<(&'a str, &'a Algebra), CliError> {
    let n = pick(doc, Kind::Algebra, name)?;
    Ok((n, doc.algebra(n).expect("picked an algebra")))
}

/// An algebra with a module over it, and a label for the module.
struct Pair<'a> {
    name: &'a str,
    algebra: &'a Algebra,
    label: String,
    module: RepModule,
}

fn pair<'a>(doc: &'a Document, t: &'a Target) -> Result<Pair<'a>, CliError> {
    match &t.module {
        Some(m) => {
            let (algebra, module) = doc
                .module_of(m)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let name = match &doc.get(m).expect("resolved").item {
                Item::Module { over, .. } => over.as_str(),
                _ => m.as_str(),
            };
            if t.name.as_deref().is_some_and(|n| n != name) {
                return Err(CliError::Usage(format!("module `{m}` is not over `{name}`")));
            }
            let label = match doc.get(m).map(|d| d.item.kind()) {
                Some(Kind::Module) => m.clone(),
                _ => format!("adjoint({m})"),
            };
            Ok(Pair {
                name,
                algebra,
                label,
                module,
            })
        }
        None => {
            let (name, algebra) = algebra(doc, t.name.as_deref())?;
            Ok(Pair {
                name,
                algebra,
                label: format!("adjoint({name})"),
                module: RepModule::adjoint(algebra),
            })
        }
    }
}

/// Turns hypothesis failures into a failing report; other library errors
/// are input errors.
fn verdict<T>(report: &mut Report, r: bihom_core::Result<T>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (bihom_core::Error::Hypothesis { .. } | bihom_core::Error::NotInvertible(_))) => {
            report.ok = false;
            report.set("error", e.to_string());
            if let Some(r) = e.report() {
                report.set("violations", violations(r));
            }
            Ok(None)
        }
        Err(e) => Err(CliError::Core(e)),
    }
}

/// Records a built algebra in canonical form together with its axiom check.
fn built(report: &mut Report, name: String, alg: Algebra) -> Result<(), CliError> {
    let check = check_algebra(&alg);
    let mut d = Document::new();
    d.push(name, Item::Algebra(alg))
        .map_err(|e| CliError::Input(e.to_string()))?;
    report.set("result", serialize(&d));
    report.check("check", &check);
    Ok(())
}
