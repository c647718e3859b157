//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num/den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` for a parity exponent.
pub fn sign(odd: bool) -> Scalar {
    if odd {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// `n!` as a scalar.
pub fn factorial(n: u32) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| acc * int(k as i64))
}

/// Canonical text: `3`, `-1/2`.
pub fn render(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Scalar::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Scalar::from_integer),
    }
}

pub fn is_unit(c: &Scalar) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert_eq!(render(&ratio(6, -4)), "-3/2");
        assert_eq!(render(&int(7)), "7");
    }

    #[test]
    fn parse_roundtrip() {
        for c in [ratio(3, 7), int(-5), ratio(-1, 2), int(0)] {
            assert_eq!(parse(&render(&c)), Some(c));
        }
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
