use crate::algebra::{apply_endo, Algebra, Axiom, CheckReport, Vector};
use crate::error::{Error, Result};
use crate::kernel::poly::{Poly, D};
use crate::kernel::scalar::Scalar;
use crate::parity::Parity;
use crate::rep::module::RepModule;

/// An `n`-cochain stored by its values on every `n`-tuple of algebra
/// generators. Each value is a module vector with coefficients in `D` and the
/// slots `X1..Xn`; for `n = 0` the single value is a module element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    arity: usize,
    parity: Parity,
    algebra_rank: usize,
    module_rank: usize,
    values: Vec<Vector>,
}

/// Digits of `index` in base `rank`, most significant first.
pub fn tuple_of(mut index: usize, rank: usize, arity: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for k in (0..arity).rev() {
        t[k] = index % rank;
        index /= rank;
    }
    t
}

pub fn index_of(tuple: &[usize], rank: usize) -> usize {
    tuple.iter().fold(0, |acc, &d| acc * rank + d)
}

/// Number of `arity`-tuples over `rank` generators.
pub fn tuple_count(rank: usize, arity: usize) -> usize {
    rank.pow(arity as u32)
}

impl Cochain {
    pub fn new(
        arity: usize,
        parity: Parity,
        algebra_rank: usize,
        module_rank: usize,
        values: Vec<Vector>,
    ) -> Result<Self> {
        let count = tuple_count(algebra_rank, arity);
        if values.len() != count {
            return Err(Error::DimensionMismatch {
                expected: count,
                found: values.len(),
            });
        }
        for v in &values {
            if v.dim() != module_rank {
                return Err(Error::DimensionMismatch {
                    expected: module_rank,
                    found: v.dim(),
                });
            }
            if v.width() > arity + 1 {
                return Err(Error::precondition(format!(
                    "values of a {arity}-cochain may only involve d and x1..x{arity}"
                )));
            }
        }
        Ok(Cochain {
            arity,
            parity,
            algebra_rank,
            module_rank,
            values,
        })
    }

    pub fn zero(arity: usize, parity: Parity, algebra_rank: usize, module_rank: usize) -> Self {
        Cochain {
            arity,
            parity,
            algebra_rank,
            module_rank,
            values: vec![Vector::zero(module_rank); tuple_count(algebra_rank, arity)],
        }
    }

    pub fn from_fn(
        arity: usize,
        parity: Parity,
        algebra_rank: usize,
        module_rank: usize,
        f: impl Fn(&[usize]) -> Vector,
    ) -> Self {
        let values = (0..tuple_count(algebra_rank, arity))
            .map(|k| f(&tuple_of(k, algebra_rank, arity)))
            .collect();
        Cochain {
            arity,
            parity,
            algebra_rank,
            module_rank,
            values,
        }
    }

    /// The 0-cochain given by a module element.
    pub fn element(parity: Parity, algebra_rank: usize, m: Vector) -> Self {
        Cochain {
            arity: 0,
            parity,
            algebra_rank,
            module_rank: m.dim(),
            values: vec![m],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn algebra_rank(&self) -> usize {
        self.algebra_rank
    }

    pub fn module_rank(&self) -> usize {
        self.module_rank
    }

    pub fn values(&self) -> &[Vector] {
        &self.values
    }

    pub fn value(&self, tuple: &[usize]) -> &Vector {
        &self.values[index_of(tuple, self.algebra_rank)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Vector::is_zero)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.values.len()).map(|k| tuple_of(k, self.algebra_rank, self.arity))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let mut out = self.clone();
        out.values = self.values.iter().map(|v| v.scale(c)).collect();
        out
    }

    /// Sum of cochains of equal shape.
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.arity != other.arity || self.values.len() != other.values.len() {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a += b;
        }
        Ok(out)
    }

    /// `γ_{s_1..s_n}(u_1, .., u_n)` for arguments with arbitrary polynomial
    /// coefficients and slot expressions `s_k`. Antilinearity gives
    /// `γ(.., p(∂)e, ..) = p(-s_k)·γ(.., e, ..)`.
    pub fn eval(&self, args: &[Vector], slots: &[Poly]) -> Result<Vector> {
        if args.len() != self.arity || slots.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        for a in args {
            if a.dim() != self.algebra_rank {
                return Err(Error::DimensionMismatch {
                    expected: self.algebra_rank,
                    found: a.dim(),
                });
            }
        }
        Ok(self.eval_unchecked(args, slots))
    }

    pub(crate) fn eval_unchecked(&self, args: &[Vector], slots: &[Poly]) -> Vector {
        if self.arity == 0 {
            return self.values[0].clone();
        }
        let mut images = Vec::with_capacity(self.arity + 1);
        images.push(Poly::d());
        images.extend(slots.iter().cloned());
        // coefficients of each argument after D -> -s_k
        let coeffs: Vec<Vec<(usize, Poly)>> = args
            .iter()
            .zip(slots)
            .map(|(a, s)| {
                let neg = -s;
                a.support().map(|i| (i, a.comp(i).substitute(D, &neg))).collect()
            })
            .collect();
        let mut out = Vector::zero(self.module_rank);
        let mut idx = vec![0usize; self.arity];
        if coeffs.iter().any(Vec::is_empty) {
            return out;
        }
        loop {
            let tuple: Vec<usize> = idx.iter().enumerate().map(|(k, &p)| coeffs[k][p].0).collect();
            let value = self.value(&tuple);
            if !value.is_zero() {
                let mut c = Poly::one();
                for (k, &p) in idx.iter().enumerate() {
                    c = &c * &coeffs[k][p].1;
                }
                out += &value.compose(&images).mul_poly(&c);
            }
            // odometer
            let mut k = self.arity;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < coeffs[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    /// Evaluation at generators with the default slots `X1..Xn`.
    pub fn eval_at(&self, args: &[Vector]) -> Result<Vector> {
        let slots: Vec<Poly> = (1..=self.arity).map(Poly::x).collect();
        self.eval(args, &slots)
    }
}

fn gen_names(a: &Algebra, t: &[usize]) -> Vec<String> {
    t.iter().map(|&i| a.basis.name(i).to_string()).collect()
}

/// The cochain conditions as residuals, in a fixed order: grading,
/// skew-symmetry on adjacent slots, and `γ∘α = φ∘γ`, `γ∘β = ψ∘γ` (the
/// twisting map applied to every argument).
pub(crate) fn constraint_residuals(
    a: &Algebra,
    m: &RepModule,
    g: &Cochain,
) -> Vec<(Axiom, Vec<usize>, Vector)> {
    let n = g.arity;
    let mut out = Vec::new();
    let slots: Vec<Poly> = (1..=n).map(Poly::x).collect();
    for t in g.tuples() {
        let expected = g.parity + t.iter().map(|&i| a.basis.parity(i)).sum::<Parity>();
        out.push((
            Axiom::CochainGrading,
            t.clone(),
            m.basis.off_parity_part(g.value(&t), expected),
        ));
    }
    if n >= 2 {
        for t in g.tuples() {
            for i in 0..n - 1 {
                let mut args: Vec<Vector> = t.iter().map(|&k| a.gen(k)).collect();
                let (ei, ej) = (a.gen(t[i]), a.gen(t[i + 1]));
                args[i] = a.beta(&ei);
                args[i + 1] = a.alpha(&ej);
                let lhs = g.eval_unchecked(&args, &slots);
                args[i] = a.beta(&ej);
                args[i + 1] = a.alpha(&ei);
                let mut swapped = slots.clone();
                swapped.swap(i, i + 1);
                let rhs = g.eval_unchecked(&args, &swapped);
                let sign = a.basis.parity(t[i]).koszul(a.basis.parity(t[i + 1]));
                let mut tuple = t.clone();
                tuple.push(i);
                out.push((
                    Axiom::CochainSkewSymmetry,
                    tuple,
                    &lhs + &rhs.scale(&sign),
                ));
            }
        }
    }
    for (axiom, map, target) in [
        (Axiom::CochainAlpha, &a.alpha, &m.phi),
        (Axiom::CochainBeta, &a.beta, &m.psi),
    ] {
        for t in g.tuples() {
            let args: Vec<Vector> = t
                .iter()
                .map(|&k| apply_endo(map, &a.gen(k)).expect("algebra dimension"))
                .collect();
            let lhs = if n == 0 {
                g.values[0].clone()
            } else {
                g.eval_unchecked(&args, &slots)
            };
            let rhs = apply_endo(target, g.value(&t)).expect("module dimension");
            out.push((axiom, t, &lhs - &rhs));
        }
    }
    out
}

/// Checks the cochain conditions (antilinearity holds by construction).
pub fn check_cochain(a: &Algebra, m: &RepModule, g: &Cochain) -> CheckReport {
    let mut report = CheckReport::new();
    for (axiom, t, res) in constraint_residuals(a, m, g) {
        let mut names = gen_names(a, &t[..g.arity.min(t.len())]);
        if axiom == Axiom::CochainSkewSymmetry {
            names.push(format!("slot {}", t[g.arity] + 1));
        }
        report.record(axiom, names, res, &m.basis);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::kernel::scalar::int;

    #[test]
    fn tuple_indexing_round_trips() {
        for k in 0..27 {
            assert_eq!(index_of(&tuple_of(k, 3, 3), 3), k);
        }
        assert_eq!(tuple_of(5, 3, 2), vec![1, 2]);
    }

    #[test]
    fn antilinearity_and_zero_arity() {
        let a = gallery::ex25();
        let m = Vector::basis(3, 0);
        let g0 = Cochain::element(Parity::Even, 3, m.clone());
        assert_eq!(g0.eval(&[], &[]).unwrap(), m);
        let g1 = Cochain::from_fn(1, Parity::Odd, 3, 3, |t| a.gen(t[0]));
        let de = a.gen(1).mul_poly(&Poly::d());
        let v = g1.eval_at(&[de]).unwrap();
        assert_eq!(v, a.gen(1).mul_poly(&-Poly::x(1)));
        assert!(matches!(g1.eval(&[], &[]), Err(Error::ArityMismatch { .. })));
        let two = g1.scale(&int(2)).add(&g1).unwrap();
        assert_eq!(two.value(&[2]), &a.gen(2).scale(&int(3)));
    }
}
