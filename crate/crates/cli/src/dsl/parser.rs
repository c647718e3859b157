use bihom_core::{
    Algebra, AssocConformal, Basis, ConfMap, OOperator, Parity, PolyMatrix, RepModule,
    SuperAlgebraFD, Table, Vector,
};

use crate::dsl::expr::{element, Scope};
use crate::dsl::lexer::{tokenize, Tok, Token};
use crate::dsl::{valid_name, Document, DslError, Item, Kind, Pos};

pub(crate) struct Cursor {
    toks: Vec<Token>,
    i: usize,
}

impl Cursor {
    fn new(toks: Vec<Token>) -> Self {
        Cursor { toks, i: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    pub fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    /// The current token; the cursor stays on the final end-of-input token.
    pub fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        DslError::new(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    pub fn expect_sym(&mut self, c: char) -> Result<Pos, DslError> {
        if *self.peek() == Tok::Sym(c) {
            Ok(self.bump().pos)
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn expect_arrow(&mut self) -> Result<(), DslError> {
        if *self.peek() == Tok::Arrow {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected("`->`"))
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<(String, Pos), DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump().pos)),
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Pos, DslError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => Ok(self.bump().pos),
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }
}

/// Parses a document. Definitions may only refer to earlier definitions.
pub fn parse(text: &str) -> Result<Document, DslError> {
    let mut cur = Cursor::new(tokenize(text)?);
    let mut doc = Document::new();
    while *cur.peek() != Tok::Eof {
        definition(&mut cur, &mut doc)?;
    }
    Ok(doc)
}

fn lookup(names: &[String], name: &str, pos: Pos) -> Result<usize, DslError> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| DslError::new(pos, format!("unresolved name `{name}`")))
}

fn definition(cur: &mut Cursor, doc: &mut Document) -> Result<(), DslError> {
    let (word, start) = cur.ident("a definition keyword")?;
    let kind = Kind::from_keyword(&word).ok_or_else(|| {
        DslError::new(
            start,
            format!(
                "unknown definition kind `{word}`; expected algebra, superalgebra, \
                 associative, module, map or ooperator"
            ),
        )
    })?;
    let (name, name_pos) = cur.ident("a definition name")?;
    let reference = match kind {
        Kind::Module => {
            cur.keyword("over")?;
            Some(cur.ident("an algebra name")?)
        }
        Kind::Map | Kind::OOperator => {
            cur.keyword("on")?;
            Some(cur.ident(if kind == Kind::Map {
                "an algebra name"
            } else {
                "a module or algebra name"
            })?)
        }
        _ => None,
    };
    let open = cur.expect_sym('{')?;
    let item = match (kind, reference) {
        (Kind::Map, Some((on, pos))) => {
            let alg = doc
                .algebra(&on)
                .map_err(|e| DslError::new(pos, e.to_string()))?
                .clone();
            map_body(cur, &alg, on, open)?
        }
        (Kind::OOperator, Some((on, pos))) => {
            let (alg, module) = doc
                .module_of(&on)
                .map_err(|e| DslError::new(pos, e.to_string()))?;
            let alg = alg.clone();
            ooperator_body(cur, &alg, &module, on)?
        }
        (Kind::Module, Some((over, pos))) => {
            let alg = doc
                .algebra(&over)
                .map_err(|e| DslError::new(pos, e.to_string()))?
                .clone();
            let body = structure_body(cur, kind, Some(&alg), open)?;
            let module = RepModule::new(body.basis, body.first, body.second, body.table)
                .map_err(|e| DslError::new(start, e.to_string()))?;
            Item::Module { over, module }
        }
        _ => {
            let body = structure_body(cur, kind, None, open)?;
            build_structure(kind, body).map_err(|e| DslError::new(start, e))?
        }
    };
    cur.expect_sym('}')?;
    doc.push(name, item)
        .map_err(|e| DslError::new(name_pos, e.to_string()))
}

/// Generators, the two twisting maps and the table of an algebra-like block.
struct StructureBody {
    basis: Basis,
    first: PolyMatrix,
    second: PolyMatrix,
    table: Table,
}

fn build_structure(kind: Kind, b: StructureBody) -> Result<Item, String> {
    let err = |e: bihom_core::Error| e.to_string();
    match kind {
        Kind::Algebra => Algebra::new(b.basis, b.first, b.second, b.table)
            .map(Item::Algebra)
            .map_err(err),
        Kind::Associative => AssocConformal::new(b.basis, b.first, b.second, b.table)
            .map(Item::Associative)
            .map_err(err),
        Kind::Superalgebra => {
            let n = b.basis.len();
            let consts = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            b.table
                                .get(i, j)
                                .comps()
                                .iter()
                                .map(|p| p.as_constant().expect("constant entries"))
                                .collect()
                        })
                        .collect()
                })
                .collect();
            SuperAlgebraFD::new(b.basis, consts, b.first, b.second)
                .map(Item::Superalgebra)
                .map_err(err)
        }
        _ => unreachable!("not an algebra-like kind"),
    }
}

fn generators(cur: &mut Cursor) -> Result<Basis, DslError> {
    let pos = cur.keyword("generators")?;
    cur.expect_sym(':')?;
    if *cur.peek() == Tok::Sym(';') {
        return Err(DslError::new(pos, "empty generators block"));
    }
    let mut names: Vec<String> = Vec::new();
    let mut parities = Vec::new();
    loop {
        let (name, npos) = cur.ident("a generator name")?;
        if !valid_name(&name) {
            return Err(DslError::new(npos, format!("`{name}` is reserved")));
        }
        if names.contains(&name) {
            return Err(DslError::new(npos, format!("duplicate generator `{name}`")));
        }
        cur.expect_sym(':')?;
        let (p, ppos) = cur.ident("`even` or `odd`")?;
        let parity = Parity::parse(&p)
            .ok_or_else(|| DslError::new(ppos, format!("expected `even` or `odd`, found `{p}`")))?;
        names.push(name);
        parities.push(parity);
        if *cur.peek() == Tok::Sym(',') {
            cur.bump();
        } else {
            break;
        }
    }
    cur.expect_sym(';')?;
    Ok(Basis::new(names, parities).expect("distinct generator names"))
}

/// `key -> elem, ...;` with each key at most once across statements.
fn assignments(
    cur: &mut Cursor,
    keys: &[String],
    slots: &mut [Option<Vector>],
    scope: &Scope,
    check: &dyn Fn(usize, &Vector) -> Option<String>,
) -> Result<(), DslError> {
    loop {
        let (key, kpos) = cur.ident("a generator name")?;
        let i = lookup(keys, &key, kpos)?;
        if slots[i].is_some() {
            return Err(DslError::new(kpos, format!("duplicate entry for `{key}`")));
        }
        cur.expect_arrow()?;
        let vpos = cur.pos();
        let v = element(cur, scope)?;
        if let Some(msg) = check(i, &v) {
            return Err(DslError::new(vpos, msg));
        }
        slots[i] = Some(v);
        if *cur.peek() == Tok::Sym(',') {
            cur.bump();
        } else {
            break;
        }
    }
    cur.expect_sym(';')?;
    Ok(())
}

fn homogeneity(basis: &Basis, v: &Vector, expected: Parity, what: &str) -> Option<String> {
    if basis.off_parity_part(v, expected).is_zero() {
        None
    } else {
        Some(format!("parity mismatch: {what} must be {}", expected.name()))
    }
}

fn matrix_of(slots: Vec<Option<Vector>>, n: usize) -> PolyMatrix {
    let cols: Vec<Vector> = slots
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.unwrap_or_else(|| Vector::basis(n, i)))
        .collect();
    PolyMatrix::from_fn(n, n, |j, i| cols[i].comp(j).clone())
}

/// Body of an algebra, superalgebra, associative algebra or module (with the
/// algebra it is over).
fn structure_body(
    cur: &mut Cursor,
    kind: Kind,
    over: Option<&Algebra>,
    open: Pos,
) -> Result<StructureBody, DslError> {
    if let Tok::Sym('}') = cur.peek() {
        return Err(DslError::new(open, "missing generators statement"));
    }
    let basis = generators(cur)?;
    let n = basis.len();
    let names = basis.names().to_vec();
    let (map_words, entry_word) = match kind {
        Kind::Module => (["phi", "psi"], "action"),
        Kind::Associative => (["alpha", "beta"], "product"),
        _ => (["alpha", "beta"], "bracket"),
    };
    let constant = kind == Kind::Superalgebra;
    let map_scope = Scope {
        names: &names,
        allow_d: !constant,
        allow_x: false,
    };
    let entry_scope = Scope {
        names: &names,
        allow_d: !constant,
        allow_x: !constant,
    };
    let left: Vec<String> = over.map_or(names.clone(), |a| a.basis.names().to_vec());
    let left_parity = |i: usize| over.map_or_else(|| basis.parity(i), |a| a.basis.parity(i));
    let mut maps: [Vec<Option<Vector>>; 2] = [vec![None; n], vec![None; n]];
    let mut entries: Vec<Vec<Option<Vector>>> = vec![vec![None; n]; left.len()];
    loop {
        let (word, wpos) = match cur.peek() {
            Tok::Sym('}') => break,
            _ => cur.ident("a statement keyword")?,
        };
        if let Some(slot) = map_words.iter().position(|w| *w == word) {
            cur.expect_sym(':')?;
            let check = |i: usize, v: &Vector| {
                homogeneity(&basis, v, basis.parity(i), &format!("the image of `{}`", names[i]))
            };
            assignments(cur, &names, &mut maps[slot], &map_scope, &check)?;
        } else if word == entry_word {
            cur.expect_sym('[')?;
            let (a, apos) = cur.ident("a generator name")?;
            let i = lookup(&left, &a, apos)?;
            cur.expect_sym(',')?;
            let (b, bpos) = cur.ident("a generator name")?;
            let j = lookup(&names, &b, bpos)?;
            cur.expect_sym(']')?;
            cur.expect_sym('=')?;
            let vpos = cur.pos();
            let v = element(cur, &entry_scope)?;
            let expected = left_parity(i) + basis.parity(j);
            let label = format!("{entry_word} [{a}, {b}]");
            if let Some(msg) = homogeneity(&basis, &v, expected, &label) {
                return Err(DslError::new(vpos, msg));
            }
            if entries[i][j].is_some() {
                return Err(DslError::new(wpos, format!("duplicate {label}")));
            }
            entries[i][j] = Some(v);
            cur.expect_sym(';')?;
        } else if word == "generators" {
            return Err(DslError::new(wpos, "duplicate generators statement"));
        } else {
            return Err(DslError::new(
                wpos,
                format!(
                    "unknown statement `{word}` in {kind}; expected {}, {} or {entry_word}",
                    map_words[0], map_words[1]
                ),
            ));
        }
    }
    let [first, second] = maps;
    let table = Table::from_fn(left.len(), n, n, |i, j| {
        entries[i][j].clone().unwrap_or_else(|| Vector::zero(n))
    });
    Ok(StructureBody {
        first: matrix_of(first, n),
        second: matrix_of(second, n),
        basis,
        table,
    })
}

fn map_body(cur: &mut Cursor, alg: &Algebra, on: String, open: Pos) -> Result<Item, DslError> {
    let names = alg.basis.names().to_vec();
    let n = names.len();
    let mut parity = None;
    let mut images: Vec<Option<Vector>> = vec![None; n];
    let scope = Scope {
        names: &names,
        allow_d: true,
        allow_x: true,
    };
    loop {
        let (word, wpos) = match cur.peek() {
            Tok::Sym('}') => break,
            _ => cur.ident("`parity` or `images`")?,
        };
        match word.as_str() {
            "parity" => {
                if parity.is_some() || images.iter().any(Option::is_some) {
                    return Err(DslError::new(wpos, "parity must be declared once, before images"));
                }
                cur.expect_sym(':')?;
                let (p, ppos) = cur.ident("`even` or `odd`")?;
                parity = Some(Parity::parse(&p).ok_or_else(|| {
                    DslError::new(ppos, format!("expected `even` or `odd`, found `{p}`"))
                })?);
                cur.expect_sym(';')?;
            }
            "images" => {
                cur.expect_sym(':')?;
                let p = parity.unwrap_or(Parity::Even);
                let check = |i: usize, v: &Vector| {
                    let what = format!("the image of `{}`", names[i]);
                    homogeneity(&alg.basis, v, alg.basis.parity(i) + p, &what)
                };
                assignments(cur, &names, &mut images, &scope, &check)?;
            }
            _ => {
                return Err(DslError::new(
                    wpos,
                    format!("unknown statement `{word}` in map; expected parity or images"),
                ))
            }
        }
    }
    let cols: Vec<Vector> = images
        .into_iter()
        .map(|v| v.unwrap_or_else(|| Vector::zero(n)))
        .collect();
    let map = ConfMap::from_columns(parity.unwrap_or(Parity::Even), &cols)
        .map_err(|e| DslError::new(open, e.to_string()))?;
    Ok(Item::Map { on, map })
}

fn ooperator_body(
    cur: &mut Cursor,
    alg: &Algebra,
    module: &RepModule,
    on: String,
) -> Result<Item, DslError> {
    let keys = module.basis.names().to_vec();
    let names = alg.basis.names().to_vec();
    let mut images: Vec<Option<Vector>> = vec![None; keys.len()];
    let scope = Scope {
        names: &names,
        allow_d: true,
        allow_x: false,
    };
    loop {
        let (word, wpos) = match cur.peek() {
            Tok::Sym('}') => break,
            _ => cur.ident("`images`")?,
        };
        if word != "images" {
            return Err(DslError::new(
                wpos,
                format!("unknown statement `{word}` in ooperator; expected images"),
            ));
        }
        cur.expect_sym(':')?;
        let check = |u: usize, v: &Vector| {
            let what = format!("the image of `{}`", keys[u]);
            homogeneity(&alg.basis, v, module.basis.parity(u), &what)
        };
        assignments(cur, &keys, &mut images, &scope, &check)?;
    }
    let cols: Vec<Vector> = images
        .into_iter()
        .map(|v| v.unwrap_or_else(|| Vector::zero(names.len())))
        .collect();
    let matrix = PolyMatrix::from_fn(names.len(), keys.len(), |j, u| cols[u].comp(j).clone());
    let op = OOperator::new(matrix).expect("entries only involve d");
    Ok(Item::OOperator { on, op })
}
