//! Command reports: an ordered key/value tree rendered as indented text or
//! as JSON under a versioned schema header.

use std::fmt::Write;
use std::time::Duration;

use bihom_core::{CheckReport, Violation};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "bihom-report/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Str(String),
    Int(i64),
    Bool(bool),
    List(Vec<Node>),
    Map(Vec<(String, Node)>),
}

impl Node {
    pub fn map() -> Self {
        Node::Map(Vec::new())
    }

    /// Adds an entry to a map node.
    pub fn with(mut self, key: &str, value: impl Into<Node>) -> Self {
        match &mut self {
            Node::Map(entries) => entries.push((key.to_string(), value.into())),
            _ => panic!("`with` on a non-map node"),
        }
        self
    }

    pub fn to_json(&self) -> Value {
        match self {
            Node::Str(s) => Value::String(s.clone()),
            Node::Int(i) => json!(i),
            Node::Bool(b) => Value::Bool(*b),
            Node::List(items) => Value::Array(items.iter().map(Node::to_json).collect()),
            Node::Map(entries) => {
                let mut m = Map::new();
                for (k, v) in entries {
                    m.insert(k.clone(), v.to_json());
                }
                Value::Object(m)
            }
        }
    }

    fn is_scalar(&self) -> bool {
        !matches!(self, Node::List(_) | Node::Map(_))
    }

    fn scalar_text(&self) -> String {
        match self {
            Node::Str(s) => s.clone(),
            Node::Int(i) => i.to_string(),
            Node::Bool(b) => b.to_string(),
            _ => unreachable!("container node"),
        }
    }
}

impl From<&str> for Node {
    fn from(s: &str) -> Self {
        Node::Str(s.to_string())
    }
}

impl From<String> for Node {
    fn from(s: String) -> Self {
        Node::Str(s)
    }
}

impl From<bool> for Node {
    fn from(b: bool) -> Self {
        Node::Bool(b)
    }
}

impl From<usize> for Node {
    fn from(n: usize) -> Self {
        Node::Int(n as i64)
    }
}

impl From<i64> for Node {
    fn from(n: i64) -> Self {
        Node::Int(n)
    }
}

impl From<i32> for Node {
    fn from(n: i32) -> Self {
        Node::Int(n as i64)
    }
}

impl From<u32> for Node {
    fn from(n: u32) -> Self {
        Node::Int(n as i64)
    }
}

impl<T: Into<Node>> From<Vec<T>> for Node {
    fn from(items: Vec<T>) -> Self {
        Node::List(items.into_iter().map(Into::into).collect())
    }
}

pub fn violation(v: &Violation) -> Node {
    Node::map()
        .with("axiom", v.axiom.id())
        .with("tuple", v.tuple.join(", "))
        .with("residual", v.residual_text())
}

/// Every violation of a check, in the order recorded.
pub fn violations(r: &CheckReport) -> Node {
    Node::List(r.violations.iter().map(violation).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// The outcome of one command. `ok` decides the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub body: Vec<(String, Node)>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ok: true,
            body: Vec::new(),
            elapsed: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Node>) {
        self.body.push((key.to_string(), value.into()));
    }

    /// Records a check under `key` and clears `ok` if it failed.
    pub fn check(&mut self, key: &str, r: &CheckReport) {
        self.ok &= r.ok();
        self.set(
            key,
            Node::map()
                .with("verdict", if r.ok() { "ok" } else { "violation" })
                .with("violations", violations(r)),
        );
    }

    pub fn get(&self, key: &str) -> Option<&Node> {
        self.body.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), SCHEMA.into());
        m.insert("command".into(), self.command.clone().into());
        m.insert("ok".into(), self.ok.into());
        for (k, v) in &self.body {
            m.insert(k.clone(), v.to_json());
        }
        Value::Object(m)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("tree serializes");
        s.push('\n');
        s
    }

    /// Indented text; multi-line strings are written as blocks after `|`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{SCHEMA} {}\n", self.command);
        let _ = writeln!(out, "verdict: {}", if self.ok { "ok" } else { "violation" });
        for (k, v) in &self.body {
            text_entry(&mut out, 0, k, v);
        }
        if let Some(t) = self.elapsed {
            let _ = writeln!(out, "elapsed: {} ms", t.as_millis());
        }
        out
    }
}

fn indent(n: usize) -> String {
    " ".repeat(n)
}

fn text_scalar(out: &mut String, depth: usize, prefix: &str, node: &Node) {
    let text = node.scalar_text();
    if text.contains('\n') {
        let _ = writeln!(out, "{}{prefix}|", indent(depth));
        for line in text.lines() {
            let _ = writeln!(out, "{}{line}", indent(depth + 2));
        }
    } else {
        let _ = writeln!(out, "{}{prefix}{text}", indent(depth));
    }
}

fn text_entry(out: &mut String, depth: usize, key: &str, node: &Node) {
    match node {
        n if n.is_scalar() => text_scalar(out, depth, &format!("{key}: "), n),
        Node::List(items) if items.is_empty() => {
            let _ = writeln!(out, "{}{key}: []", indent(depth));
        }
        Node::Map(entries) if entries.is_empty() => {
            let _ = writeln!(out, "{}{key}: {{}}", indent(depth));
        }
        _ => {
            let _ = writeln!(out, "{}{key}:", indent(depth));
            text_children(out, depth + 2, node);
        }
    }
}

fn text_children(out: &mut String, depth: usize, node: &Node) {
    match node {
        Node::Map(entries) => {
            for (k, v) in entries {
                text_entry(out, depth, k, v);
            }
        }
        Node::List(items) => {
            for item in items {
                match item {
                    n if n.is_scalar() => text_scalar(out, depth, "- ", n),
                    _ => {
                        let _ = writeln!(out, "{}-", indent(depth));
                        text_children(out, depth + 2, item);
                    }
                }
            }
        }
        _ => unreachable!("scalar handled by caller"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_layout() {
        let mut r = Report::new("check");
        r.set("algebra", "ex25");
        r.set(
            "items",
            vec![Node::map().with("a", 1usize).with("b", "x\ny")],
        );
        r.set("empty", Vec::<Node>::new());
        let expected = "bihom-report/1 check\nverdict: ok\nalgebra: ex25\nitems:\n  -\n    a: 1\n    b: |\n      x\n      y\nempty: []\n";
        assert_eq!(r.to_text(), expected);
    }

    #[test]
    fn json_keeps_insertion_order() {
        let mut r = Report::new("check");
        r.set("zeta", 1usize);
        r.set("alpha", true);
        let s = r.to_json_string();
        assert!(s.find("\"schema\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"zeta\"").unwrap() < s.find("\"alpha\"").unwrap());
        assert_eq!(r.to_json()["schema"], SCHEMA);
    }
}
