//! Documents for the built-in examples, so no input files are needed.

use bihom_core::gallery;
use clap::ValueEnum;

use crate::dsl::{Document, Item};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Builtin {
    /// Neveu-Schwarz type algebra on L, E with identity twists
    VirasoroNs,
    /// Rank-three algebra with [e2, e3] = [e3, e2] = e1
    Ex25,
    /// Current algebra of gl(1|1) with torus twists
    CurGl11,
}

impl Builtin {
    pub const ALL: [Builtin; 3] = [Builtin::VirasoroNs, Builtin::Ex25, Builtin::CurGl11];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::VirasoroNs => "virasoro_ns",
            Builtin::Ex25 => "ex25",
            Builtin::CurGl11 => "cur_gl11",
        }
    }

    pub fn document(self) -> Document {
        let alg = match self {
            Builtin::VirasoroNs => gallery::virasoro_ns_default(),
            Builtin::Ex25 => gallery::ex25(),
            Builtin::CurGl11 => gallery::cur_gl11(),
        };
        let mut doc = Document::new();
        doc.push(self.name(), Item::Algebra(alg))
            .expect("gallery names are valid identifiers");
        doc
    }
}
