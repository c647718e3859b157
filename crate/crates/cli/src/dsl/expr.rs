use bihom_core::{Poly, Vector};
use num_traits::{Signed, ToPrimitive};

use crate::dsl::lexer::Tok;
use crate::dsl::parser::Cursor;
use crate::dsl::{DslError, Pos};

/// Generators and polynomial symbols an expression may use.
pub struct Scope<'a> {
    pub names: &'a [String],
    pub allow_d: bool,
    pub allow_x: bool,
}

/// A partial expression: `poly + vec`, where `linear` records whether a
/// generator occurred syntactically.
struct Value {
    poly: Poly,
    vec: Vector,
    linear: bool,
}

impl Value {
    fn poly(p: Poly, n: usize) -> Self {
        Value {
            poly: p,
            vec: Vector::zero(n),
            linear: false,
        }
    }

    fn add(self, other: Value, sign: bool) -> Value {
        let (poly, vec) = if sign {
            (&self.poly + &other.poly, &self.vec + &other.vec)
        } else {
            (&self.poly - &other.poly, &self.vec - &other.vec)
        };
        Value {
            poly,
            vec,
            linear: self.linear || other.linear,
        }
    }
}

/// Parses a ℚ-linear combination of generators with polynomial coefficients,
/// such as `(d + 2*x)*L - 1/2*E`.
pub fn element(cur: &mut Cursor, scope: &Scope) -> Result<Vector, DslError> {
    let start = cur.pos();
    let v = sum(cur, scope)?;
    if !v.poly.is_zero() {
        return Err(DslError::new(
            start,
            "expected a combination of generators, found a term without a generator",
        ));
    }
    Ok(v.vec)
}

fn sum(cur: &mut Cursor, scope: &Scope) -> Result<Value, DslError> {
    let negate = match cur.peek() {
        Tok::Sym('-') => {
            cur.bump();
            true
        }
        Tok::Sym('+') => {
            cur.bump();
            false
        }
        _ => false,
    };
    let first = product(cur, scope)?;
    let mut acc = if negate {
        Value::poly(Poly::zero(), scope.names.len()).add(first, false)
    } else {
        first
    };
    loop {
        let sign = match cur.peek() {
            Tok::Sym('+') => true,
            Tok::Sym('-') => false,
            _ => return Ok(acc),
        };
        cur.bump();
        let rhs = product(cur, scope)?;
        acc = acc.add(rhs, sign);
    }
}

fn product(cur: &mut Cursor, scope: &Scope) -> Result<Value, DslError> {
    let mut acc = power(cur, scope)?;
    while *cur.peek() == Tok::Sym('*') {
        let pos = cur.bump().pos;
        let rhs = power(cur, scope)?;
        acc = multiply(acc, rhs, pos)?;
    }
    Ok(acc)
}

fn multiply(a: Value, b: Value, pos: Pos) -> Result<Value, DslError> {
    if a.linear && b.linear {
        return Err(DslError::new(pos, "product of two generators is not linear"));
    }
    let vec = &a.vec.mul_poly(&b.poly) + &b.vec.mul_poly(&a.poly);
    Ok(Value {
        poly: &a.poly * &b.poly,
        vec,
        linear: a.linear || b.linear,
    })
}

fn power(cur: &mut Cursor, scope: &Scope) -> Result<Value, DslError> {
    let base = atom(cur, scope)?;
    if *cur.peek() != Tok::Sym('^') {
        return Ok(base);
    }
    let pos = cur.bump().pos;
    let tok = cur.bump();
    let exp = match &tok.tok {
        Tok::Number(c) if c.is_integer() && !c.numer().is_negative() => c
            .numer()
            .to_u32()
            .ok_or_else(|| DslError::new(tok.pos, "exponent too large"))?,
        other => {
            return Err(DslError::new(
                tok.pos,
                format!("expected a nonnegative integer exponent, found {}", other.describe()),
            ))
        }
    };
    if base.linear {
        if exp == 1 {
            return Ok(base);
        }
        return Err(DslError::new(pos, "power of a generator is not linear"));
    }
    Ok(Value::poly(base.poly.pow(exp), scope.names.len()))
}

fn atom(cur: &mut Cursor, scope: &Scope) -> Result<Value, DslError> {
    let n = scope.names.len();
    let tok = cur.bump();
    match tok.tok {
        Tok::Number(c) => Ok(Value::poly(Poly::constant(c), n)),
        Tok::Sym('(') => {
            let inner = sum(cur, scope)?;
            cur.expect_sym(')')?;
            Ok(inner)
        }
        Tok::Ident(ref s) if s == "d" => {
            if !scope.allow_d {
                return Err(DslError::new(tok.pos, "`d` is not allowed here"));
            }
            Ok(Value::poly(Poly::d(), n))
        }
        Tok::Ident(ref s) if s == "x" => {
            if !scope.allow_x {
                return Err(DslError::new(tok.pos, "`x` is not allowed here"));
            }
            Ok(Value::poly(Poly::x(1), n))
        }
        Tok::Ident(ref s) => match scope.names.iter().position(|g| g == s) {
            Some(i) => Ok(Value {
                poly: Poly::zero(),
                vec: Vector::basis(n, i),
                linear: true,
            }),
            None => Err(DslError::new(tok.pos, format!("unresolved name `{s}`"))),
        },
        other => Err(DslError::new(
            tok.pos,
            format!("expected a term, found {}", other.describe()),
        )),
    }
}
