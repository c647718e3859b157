use std::fmt;
use std::ops::Add;

use crate::kernel::scalar::{self, Scalar};

/// ℤ₂-degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_bool(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    /// The Koszul sign `(-1)^{|self||other|}`.
    pub fn koszul(self, other: Parity) -> Scalar {
        scalar::sign(self.is_odd() && other.is_odd())
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "even" => Some(Parity::Even),
            "odd" => Some(Parity::Odd),
            _ => None,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bool(self.is_odd() != rhs.is_odd())
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Self {
        iter.fold(Parity::Even, |a, b| a + b)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::int;

    #[test]
    fn addition_is_mod_two() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert_eq!([Parity::Odd; 3].into_iter().sum::<Parity>(), Parity::Odd);
    }

    #[test]
    fn koszul_sign() {
        assert_eq!(Parity::Odd.koszul(Parity::Odd), int(-1));
        assert_eq!(Parity::Odd.koszul(Parity::Even), int(1));
    }
}
