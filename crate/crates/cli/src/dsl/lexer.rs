use bihom_core::kernel::scalar;
use bihom_core::Scalar;

use crate::dsl::{DslError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Number(Scalar),
    Arrow,
    Sym(char),
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(c) => format!("number `{}`", scalar::render(c)),
            Tok::Arrow => "`->`".to_string(),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\'')
}

/// Whether `s` lexes as a single identifier.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(ident_start) && chars.all(ident_continue)
}

/// Splits `text` into tokens. `#` starts a comment running to the end of the
/// line. A rational literal `p/q` is one token.
pub fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col);
            }
            continue;
        }
        if ident_start(c) {
            let start = i;
            while i < chars.len() && ident_continue(chars[i]) {
                advance(&mut i, &mut line, &mut col);
            }
            let word: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Ident(word), pos });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                advance(&mut i, &mut line, &mut col);
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                advance(&mut i, &mut line, &mut col);
                while i < chars.len() && chars[i].is_ascii_digit() {
                    advance(&mut i, &mut line, &mut col);
                }
            }
            let lit: String = chars[start..i].iter().collect();
            let value = scalar::parse(&lit)
                .ok_or_else(|| DslError::new(pos, format!("invalid number `{lit}`")))?;
            out.push(Token { tok: Tok::Number(value), pos });
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            advance(&mut i, &mut line, &mut col);
            advance(&mut i, &mut line, &mut col);
            out.push(Token { tok: Tok::Arrow, pos });
            continue;
        }
        if "{}[](),;:+-*^=".contains(c) {
            advance(&mut i, &mut line, &mut col);
            out.push(Token { tok: Tok::Sym(c), pos });
            continue;
        }
        return Err(DslError::new(pos, format!("unexpected character `{c}`")));
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bihom_core::kernel::scalar::ratio;

    fn kinds(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn rationals_reduce() {
        assert_eq!(
            kinds("2/4*d"),
            vec![
                Tok::Number(ratio(1, 2)),
                Tok::Sym('*'),
                Tok::Ident("d".into()),
                Tok::Eof
            ]
        );
    }

    #[test]
    fn positions_and_comments() {
        let toks = tokenize("# note\n  L -> E.1'").unwrap();
        assert_eq!(toks[0].pos, Pos { line: 2, col: 3 });
        assert_eq!(toks[1].tok, Tok::Arrow);
        assert_eq!(toks[2].tok, Tok::Ident("E.1'".into()));
        let err = tokenize("a\n  $").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 3 });
        assert!(tokenize("1/0").is_err());
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("L.x'"));
        assert!(!is_identifier("1"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("a b"));
    }
}
