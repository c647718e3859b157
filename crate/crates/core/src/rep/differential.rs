use std::fmt;

use crate::algebra::{apply_endo, Algebra, Axiom, CheckReport, EndoMap, Vector};
use crate::error::Result;
use crate::kernel::poly::Poly;
use crate::kernel::scalar;
use crate::parity::Parity;
use crate::rep::cochain::{tuple_count, tuple_of, Cochain};
use crate::rep::module::RepModule;

/// How a 0-cochain `m` is differentiated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroRule {
    /// `(dm)_λ a = ρ(a)_λ m`.
    Action,
    /// The general two-sum formula specialised to `n = 0`.
    General,
}

/// Sign of the `i`-th action term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionSign {
    /// `(-1)^{i+1} (-1)^{(|γ| + A_i)|a_i|}`.
    Koszul,
    /// `(-1)^{i+1} (-1)^{|γ||a_i| + A_i}`.
    Additive,
}

/// A reading of the differential. The action terms are
/// `ρ(α^p β^{n-1+q}(a_i))_{λ_i} γ(β^r(a_1), .., β^r(a_{n+1}))` with `a_i`
/// omitted from the arguments; the bracket terms are fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DifferentialVariant {
    pub zero_rule: ZeroRule,
    pub action_sign: ActionSign,
    /// `p`
    pub rho_alpha: u32,
    /// `q`
    pub rho_beta_offset: i64,
    /// `r`
    pub args_beta: u32,
}

impl DifferentialVariant {
    /// The formula exactly as written: `ρ(αβ^{n-1}(a_i))` acting on `γ` of
    /// the untwisted remaining arguments, Koszul sign, and `(dm)_λ a = ρ(a)_λ m`.
    pub const LITERAL: DifferentialVariant = DifferentialVariant {
        zero_rule: ZeroRule::Action,
        action_sign: ActionSign::Koszul,
        rho_alpha: 1,
        rho_beta_offset: 0,
        args_beta: 0,
    };

    /// All readings, literal first.
    pub fn all() -> Vec<DifferentialVariant> {
        let mut out = vec![Self::LITERAL];
        for zero_rule in [ZeroRule::Action, ZeroRule::General] {
            for action_sign in [ActionSign::Koszul, ActionSign::Additive] {
                for args_beta in [0, 1] {
                    for rho_alpha in [1, 0] {
                        for rho_beta_offset in [0, 1, -1] {
                            let v = DifferentialVariant {
                                zero_rule,
                                action_sign,
                                rho_alpha,
                                rho_beta_offset,
                                args_beta,
                            };
                            if v != Self::LITERAL {
                                out.push(v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_literal(&self) -> bool {
        *self == Self::LITERAL
    }
}

impl fmt::Display for DifferentialVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = match self.zero_rule {
            ZeroRule::Action => "action",
            ZeroRule::General => "general",
        };
        let sign = match self.action_sign {
            ActionSign::Koszul => "koszul",
            ActionSign::Additive => "additive",
        };
        let q = self.rho_beta_offset;
        let beta = match q {
            0 => "n-1".to_string(),
            q if q > 0 => format!("n-1+{q}"),
            q => format!("n-1-{}", -q),
        };
        write!(
            f,
            "zero-rule={zero} sign={sign} rho=alpha^{}*beta^({beta}) args=beta^{}",
            self.rho_alpha, self.args_beta
        )
    }
}

fn bit(p: Parity) -> u32 {
    p.bit() as u32
}

struct Maps {
    rho_map: EndoMap,
    args_map: EndoMap,
    beta: EndoMap,
    ai_beta: EndoMap,
}

/// `dγ` under the given reading. Requires `α` invertible.
pub fn differential_with(
    a: &Algebra,
    m: &RepModule,
    g: &Cochain,
    variant: DifferentialVariant,
) -> Result<Cochain> {
    let n = g.arity();
    let ai = a.alpha_inverse()?;
    let maps = Maps {
        rho_map: a.alpha_beta_power(variant.rho_alpha as i64, n as i64 - 1 + variant.rho_beta_offset)?,
        args_map: a.beta.pow(variant.args_beta),
        beta: a.beta.clone(),
        ai_beta: ai.mul(&a.beta)?,
    };
    let rank = a.rank();
    let values = (0..tuple_count(rank, n + 1))
        .map(|k| {
            let t = tuple_of(k, rank, n + 1);
            differential_value(a, m, g, variant, &maps, &t)
        })
        .collect();
    Cochain::new(n + 1, g.parity(), rank, m.rank(), values)
}

/// `dγ` as literally written.
pub fn differential(a: &Algebra, m: &RepModule, g: &Cochain) -> Result<Cochain> {
    differential_with(a, m, g, DifferentialVariant::LITERAL)
}

fn endo(map: &EndoMap, v: &Vector) -> Vector {
    apply_endo(map, v).expect("algebra dimension")
}

fn differential_value(
    a: &Algebra,
    m: &RepModule,
    g: &Cochain,
    variant: DifferentialVariant,
    maps: &Maps,
    t: &[usize],
) -> Vector {
    let n = g.arity();
    let slot = |k: usize| Poly::x(k + 1);
    if n == 0 && variant.zero_rule == ZeroRule::Action {
        return m.act(&a.gen(t[0]), g.value(&[]), &slot(0));
    }
    let par: Vec<u32> = t.iter().map(|&i| bit(a.basis.parity(i))).collect();
    let prefix = |i: usize| -> u32 { par[..i].iter().sum() };
    let theta = bit(g.parity());
    let mut out = Vector::zero(m.rank());
    for i in 0..=n {
        let a_i = prefix(i);
        let exp = match variant.action_sign {
            ActionSign::Koszul => i as u32 + (theta + a_i) * par[i],
            ActionSign::Additive => i as u32 + theta * par[i] + a_i,
        };
        let args: Vec<Vector> = (0..=n)
            .filter(|&k| k != i)
            .map(|k| endo(&maps.args_map, &a.gen(t[k])))
            .collect();
        let slots: Vec<Poly> = (0..=n).filter(|&k| k != i).map(slot).collect();
        let inner = g.eval_unchecked(&args, &slots);
        if inner.is_zero() {
            continue;
        }
        let term = m.act(&endo(&maps.rho_map, &a.gen(t[i])), &inner, &slot(i));
        out += &term.scale(&scalar::sign(exp % 2 == 1));
    }
    for i in 0..=n {
        for j in i + 1..=n {
            let exp = (i + j) as u32 + prefix(i) * par[i] + prefix(j) * par[j] + par[i] * par[j];
            let first = a.bracket(&endo(&maps.ai_beta, &a.gen(t[i])), &a.gen(t[j]), &slot(i));
            if first.is_zero() {
                continue;
            }
            let mut args = vec![first];
            let mut slots = vec![&slot(i) + &slot(j)];
            for k in (0..=n).filter(|&k| k != i && k != j) {
                args.push(endo(&maps.beta, &a.gen(t[k])));
                slots.push(slot(k));
            }
            let term = g.eval_unchecked(&args, &slots);
            out += &term.scale(&scalar::sign(exp % 2 == 1));
        }
    }
    out
}

/// Residuals of `d(dγ)` per generator tuple.
pub fn check_d_squared_with(
    a: &Algebra,
    m: &RepModule,
    g: &Cochain,
    variant: DifferentialVariant,
) -> Result<CheckReport> {
    let dd = differential_with(a, m, &differential_with(a, m, g, variant)?, variant)?;
    let mut report = CheckReport::new();
    for t in dd.tuples() {
        let names = t.iter().map(|&i| a.basis.name(i).to_string()).collect();
        report.record(Axiom::DSquared, names, dd.value(&t).clone(), &m.basis);
    }
    Ok(report)
}

pub fn check_d_squared(a: &Algebra, m: &RepModule, g: &Cochain) -> Result<CheckReport> {
    check_d_squared_with(a, m, g, DifferentialVariant::LITERAL)
}

/// One test case for the reading search: an algebra, a module and cochains
/// on which `d² = 0` must hold.
pub struct PanelCase {
    pub algebra: Algebra,
    pub module: RepModule,
    pub cochains: Vec<Cochain>,
}

/// The first reading (literal first) under which `d² = 0` holds on every
/// cochain of the panel.
pub fn find_differential_variant(panel: &[PanelCase]) -> Result<Option<DifferentialVariant>> {
    for v in DifferentialVariant::all() {
        if variant_passes(panel, v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn variant_passes(panel: &[PanelCase], v: DifferentialVariant) -> Result<bool> {
    for case in panel {
        for g in &case.cochains {
            if !check_d_squared_with(&case.algebra, &case.module, g, v)?.ok() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
