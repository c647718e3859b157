use crate::algebra::vector::Vector;
use crate::error::{Error, Result};
use crate::parity::Parity;

/// Named generators of a free ℤ₂-graded ℚ[∂]-module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Basis {
    names: Vec<String>,
    parities: Vec<Parity>,
}

impl Basis {
    pub fn new(names: Vec<String>, parities: Vec<Parity>) -> Result<Self> {
        if names.len() != parities.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: parities.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::precondition(format!("duplicate generator name {n}")));
            }
        }
        Ok(Basis { names, parities })
    }

    /// Convenience constructor from `(name, parity)` pairs.
    pub fn of(gens: &[(&str, Parity)]) -> Self {
        Basis::new(
            gens.iter().map(|(n, _)| n.to_string()).collect(),
            gens.iter().map(|(_, p)| *p).collect(),
        )
        .expect("distinct generator names")
    }

    pub fn empty() -> Self {
        Basis::default()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indices of generators with the given parity.
    pub fn of_parity(&self, p: Parity) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.parities[i] == p)
    }

    /// The parity of a vector if its support is homogeneous (`None` for mixed
    /// support; `Some(Even)` for zero).
    pub fn parity_of(&self, v: &Vector) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for i in v.support() {
            match found {
                None => found = Some(self.parities[i]),
                Some(p) if p != self.parities[i] => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    /// Components of `v` sitting on generators of the wrong parity.
    pub fn off_parity_part(&self, v: &Vector, expected: Parity) -> Vector {
        let mut out = Vector::zero(v.dim());
        for i in v.support() {
            if self.parities[i] != expected {
                *out.comp_mut(i) = v.comp(i).clone();
            }
        }
        out
    }

    /// Disjoint union; clashing names on the right get primes appended.
    pub fn disjoint_union(&self, other: &Basis) -> Basis {
        let mut names = self.names.clone();
        for n in &other.names {
            let mut m = n.clone();
            while names.contains(&m) {
                m.push('\'');
            }
            names.push(m);
        }
        let mut parities = self.parities.clone();
        parities.extend(other.parities.iter().copied());
        Basis { names, parities }
    }

    /// Rendering with this basis's generator names.
    pub fn render(&self, v: &Vector) -> String {
        v.render(&self.names, v.width())
    }

    pub fn render_width(&self, v: &Vector, width: usize) -> String {
        v.render(&self.names, width)
    }

    pub fn gen(&self, i: usize) -> Vector {
        Vector::basis(self.len(), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_renames_clashes() {
        let a = Basis::of(&[("L", Parity::Even), ("E", Parity::Odd)]);
        let b = Basis::of(&[("L", Parity::Even)]);
        let u = a.disjoint_union(&b);
        assert_eq!(u.names(), &["L", "E", "L'"]);
        assert!(Basis::new(vec!["a".into(), "a".into()], vec![Parity::Even; 2]).is_err());
    }
}
