use bihom_core::rep::{
    check_cochain, check_d_squared_with, differential_with, solve_cochain_space, solve_cocycles,
    truncated_cohomology_report, DifferentialVariant,
};
use bihom_core::{Algebra, CheckReport, Cochain, Parity, RepModule};

use crate::cli::Target;
use crate::commands::{pair, CliError};
use crate::dsl::Document;
use crate::report::{violations, Node, Report};

/// Nonzero values as `[a1, a2] -> value`, slots printed in argument order.
pub fn render_cochain(a: &Algebra, m: &RepModule, g: &Cochain) -> Node {
    let width = g.arity() + 1;
    let lines: Vec<Node> = g
        .tuples()
        .filter(|t| !g.value(t).is_zero())
        .map(|t| {
            let args: Vec<&str> = t.iter().map(|&i| a.basis.name(i)).collect();
            let value = g.value(&t).render(m.basis.names(), width);
            Node::Str(format!("[{}] -> {value}", args.join(", ")))
        })
        .collect();
    Node::List(lines)
}

/// `d(dγ) = 0` and `dγ` being a cochain.
fn closure(a: &Algebra, m: &RepModule, g: &Cochain, v: DifferentialVariant) -> Result<CheckReport, CliError> {
    let mut r = check_d_squared_with(a, m, g, v)?;
    let dg = differential_with(a, m, g, v)?;
    r.merge(check_cochain(a, m, &dg));
    Ok(r)
}

pub fn d2check(report: &mut Report, doc: &Document, target: &Target, n: usize, deg: i32) -> Result<(), CliError> {
    let p = pair(doc, target)?;
    report.set("algebra", p.name);
    report.set("module", p.label.clone());
    report.set("n", n);
    report.set("deg", deg);
    let mut space = Vec::new();
    let mut dims = Node::map();
    for parity in [Parity::Even, Parity::Odd] {
        let s = solve_cochain_space(p.algebra, &p.module, n, parity, deg)?;
        dims = dims.with(parity.name(), s.len());
        space.extend(s.into_iter().map(|g| (parity, g)));
    }
    report.set("cochain-basis", dims);
    let mut failures = Vec::new();
    for (k, (parity, g)) in space.iter().enumerate() {
        let r = closure(p.algebra, &p.module, g, DifferentialVariant::LITERAL)?;
        if !r.ok() {
            failures.push(
                Node::map()
                    .with("cochain", k)
                    .with("parity", parity.name())
                    .with("violations", violations(&r)),
            );
        }
    }
    let literal_ok = failures.is_empty();
    report.set(
        "literal",
        Node::map()
            .with("verdict", if literal_ok { "ok" } else { "violation" })
            .with("failures", Node::List(failures)),
    );
    let chosen = if literal_ok {
        Some(DifferentialVariant::LITERAL)
    } else {
        let mut found = None;
        'search: for v in DifferentialVariant::all().into_iter().skip(1) {
            for (_, g) in &space {
                if !closure(p.algebra, &p.module, g, v)?.ok() {
                    continue 'search;
                }
            }
            found = Some(v);
            break;
        }
        found
    };
    report.ok = chosen.is_some();
    report.set(
        "variant",
        match chosen {
            Some(v) if v.is_literal() => "literal".to_string(),
            Some(v) => v.to_string(),
            None => "none".to_string(),
        },
    );
    Ok(())
}

pub fn cocycles(
    report: &mut Report,
    doc: &Document,
    target: &Target,
    n: usize,
    deg: i32,
    parity: Parity,
) -> Result<(), CliError> {
    let p = pair(doc, target)?;
    report.set("algebra", p.name);
    report.set("module", p.label.clone());
    report.set("n", n);
    report.set("deg", deg);
    report.set("parity", parity.name());
    let basis = solve_cocycles(p.algebra, &p.module, n, parity, deg, DifferentialVariant::LITERAL)?;
    report.set("bound", format!("degree <= {deg}"));
    report.set("dimension", basis.len());
    report.set(
        "basis",
        Node::List(basis.iter().map(|g| render_cochain(p.algebra, &p.module, g)).collect()),
    );
    Ok(())
}

pub fn cohomology_report(
    report: &mut Report,
    doc: &Document,
    target: &Target,
    n: usize,
    deg: i32,
) -> Result<(), CliError> {
    let p = pair(doc, target)?;
    report.set("algebra", p.name);
    report.set("module", p.label.clone());
    report.set("n", n);
    report.set("deg", deg);
    let mut rows = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let t = truncated_cohomology_report(
            p.algebra,
            &p.module,
            n,
            parity,
            deg,
            DifferentialVariant::LITERAL,
        )?;
        rows.push(
            Node::map()
                .with("parity", parity.name())
                .with("cochains", t.cochain_dim)
                .with("cocycles", t.cocycle_dim)
                .with("ambient-degree", t.ambient_degree)
                .with("ambient-cocycles", t.ambient_cocycle_dim)
                .with("coboundaries", t.coboundary_dim)
                .with("indicator", t.indicator),
        );
    }
    report.set("truncation-indicators", Node::List(rows));
    Ok(())
}
