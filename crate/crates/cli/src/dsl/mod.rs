//! The definition language: a document of named algebras, superalgebras,
//! associative algebras, modules, conformal maps and O-operators, with a
//! canonical text form.

mod expr;
pub mod lexer;
mod parser;
mod writer;

use std::fmt;

use bihom_core::{Algebra, AssocConformal, ConfMap, OOperator, RepModule, SuperAlgebraFD};

pub use parser::parse;
pub use writer::serialize;

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {}, column {}: {message}", pos.line, pos.col)]
pub struct DslError {
    pub pos: Pos,
    pub message: String,
}

impl DslError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        DslError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Algebra(Algebra),
    Superalgebra(SuperAlgebraFD),
    Associative(AssocConformal),
    /// A module over the named algebra.
    Module { over: String, module: RepModule },
    /// A conformal map on the named algebra.
    Map { on: String, map: ConfMap },
    /// An operator from the named module (or the adjoint module of the named
    /// algebra) into its algebra.
    OOperator { on: String, op: OOperator },
}

impl Item {
    pub fn kind(&self) -> Kind {
        match self {
            Item::Algebra(_) => Kind::Algebra,
            Item::Superalgebra(_) => Kind::Superalgebra,
            Item::Associative(_) => Kind::Associative,
            Item::Module { .. } => Kind::Module,
            Item::Map { .. } => Kind::Map,
            Item::OOperator { .. } => Kind::OOperator,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Superalgebra,
    Associative,
    Module,
    Map,
    OOperator,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Superalgebra => "superalgebra",
            Kind::Associative => "associative",
            Kind::Module => "module",
            Kind::Map => "map",
            Kind::OOperator => "ooperator",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Kind> {
        [
            Kind::Algebra,
            Kind::Superalgebra,
            Kind::Associative,
            Kind::Module,
            Kind::Map,
            Kind::OOperator,
        ]
        .into_iter()
        .find(|k| k.keyword() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub item: Item,
}

/// Definitions in source order. Names are unique and every reference points
/// to an earlier definition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    defs: Vec<Definition>,
}

/// Why a definition could not be added to a document.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("`{0}` is already defined")]
    Duplicate(String),
    #[error("`{0}` is not a valid identifier")]
    InvalidName(String),
    #[error("unresolved name `{name}`: expected {expected}")]
    Unresolved { name: String, expected: String },
}

fn is_reserved(name: &str) -> bool {
    name == "d" || name == "x" || name.strip_prefix('x').is_some_and(|r| r.bytes().all(|b| b.is_ascii_digit()))
}

/// A generator or definition name usable in the language.
pub fn valid_name(name: &str) -> bool {
    lexer::is_identifier(name) && !is_reserved(name)
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn definitions(&self) -> &[Definition] {
        &self.defs
    }

    pub fn get(&self, name: &str) -> Option<&Definition> {
        self.defs.iter().find(|d| d.name == name)
    }

    /// Adds a definition after checking its name, its generator names and its
    /// reference.
    pub fn push(&mut self, name: impl Into<String>, item: Item) -> Result<(), DocumentError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(DocumentError::InvalidName(name));
        }
        if self.get(&name).is_some() {
            return Err(DocumentError::Duplicate(name));
        }
        let gens = match &item {
            Item::Algebra(a) => a.basis.names(),
            Item::Superalgebra(s) => s.basis.names(),
            Item::Associative(a) => a.basis.names(),
            Item::Module { module, .. } => module.basis.names(),
            _ => &[],
        };
        if let Some(bad) = gens.iter().find(|g| !valid_name(g)) {
            return Err(DocumentError::InvalidName(bad.clone()));
        }
        match &item {
            Item::Module { over, .. } | Item::Map { on: over, .. } => {
                self.algebra(over)?;
            }
            Item::OOperator { on, .. } => {
                self.module_of(on)?;
            }
            _ => {}
        }
        self.defs.push(Definition { name, item });
        Ok(())
    }

    fn unresolved(name: &str, expected: &str) -> DocumentError {
        DocumentError::Unresolved {
            name: name.to_string(),
            expected: expected.to_string(),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<&Algebra, DocumentError> {
        match self.get(name).map(|d| &d.item) {
            Some(Item::Algebra(a)) => Ok(a),
            _ => Err(Self::unresolved(name, "an algebra")),
        }
    }

    /// The algebra and module named by `name`: a module definition, or the
    /// adjoint module of an algebra definition.
    pub fn module_of(&self, name: &str) -> Result<(&Algebra, RepModule), DocumentError> {
        match self.get(name).map(|d| &d.item) {
            Some(Item::Algebra(a)) => Ok((a, RepModule::adjoint(a))),
            Some(Item::Module { over, module }) => Ok((self.algebra(over)?, module.clone())),
            _ => Err(Self::unresolved(name, "a module or an algebra")),
        }
    }

    /// Names of the definitions of one kind, in source order.
    pub fn names_of(&self, kind: Kind) -> impl Iterator<Item = &str> {
        self.defs
            .iter()
            .filter(move |d| d.item.kind() == kind)
            .map(|d| d.name.as_str())
    }

    /// Appends all definitions of `other`.
    pub fn extend(&mut self, other: Document) -> Result<(), DocumentError> {
        for d in other.defs {
            self.push(d.name, d.item)?;
        }
        Ok(())
    }
}
