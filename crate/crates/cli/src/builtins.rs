//! Named builtins: the suite functions on `[0,1]`, moduli, closed sets,
//! and potentials that scenarios and the acceptance suite refer to.

use std::sync::Arc;

use cauchy_core::extend::{BairePotential, CantorPotential};
use cauchy_core::fncode::Modulus;
use cauchy_core::rational::Rat;
use cauchy_core::real::{real_from_rational, RealCode};
use cauchy_core::sepclosed::SepClosedSet;
use cauchy_core::seq::{BaireSeq, BinSeq, embed_real};

/// A function on `[0,1]` with exact rational values and a valid modulus
/// of uniform continuity `ω(k) = k + modulus_shift` (Lipschitz constant
/// at most `2^modulus_shift`).
#[derive(Clone, Copy)]
pub struct NamedFunction {
    pub name: &'static str,
    exact: fn(&Rat) -> Rat,
    pub modulus_shift: u32,
}

impl NamedFunction {
    pub fn eval_exact(&self, x: &Rat) -> Rat {
        (self.exact)(x)
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::shifted(self.modulus_shift)
    }

    /// The function as a black-box evaluator producing constant codes.
    pub fn code_fn(&self) -> impl Fn(&Rat) -> RealCode + Send + Sync + Clone + 'static {
        let exact = self.exact;
        move |x: &Rat| real_from_rational(exact(x))
    }

    /// The function as an evaluator on real codes, reading the argument
    /// at one precision beyond the Lipschitz shift.
    pub fn real_fn(&self) -> impl Fn(&RealCode) -> RealCode + Send + Sync + Clone + 'static {
        let exact = self.exact;
        let shift = self.modulus_shift;
        move |x: &RealCode| {
            let x = x.clone();
            RealCode::from_fn(cauchy_core::real::Provenance::Arithmetic, move |k| {
                exact(&x.approx(k + shift + 1))
            })
        }
    }
}

fn identity_exact(x: &Rat) -> Rat {
    x.clone()
}

fn one_minus_exact(x: &Rat) -> Rat {
    Rat::one() - x
}

fn abs_half_exact(x: &Rat) -> Rat {
    (x - &Rat::ratio(1, 2)).abs()
}

/// Piecewise quadratic ramp: `x²` on `[0,1/2]`, `1/2 − (1−x)²` beyond.
/// Slope at most 1, so the identity modulus is valid.
fn pwquad_exact(x: &Rat) -> Rat {
    if x <= &Rat::ratio(1, 2) {
        x * x
    } else {
        let tail = Rat::one() - x;
        Rat::ratio(1, 2) - &tail * &tail
    }
}

pub const SUITE: [NamedFunction; 4] = [
    NamedFunction {
        name: "identity",
        exact: identity_exact,
        modulus_shift: 0,
    },
    NamedFunction {
        name: "one-minus",
        exact: one_minus_exact,
        modulus_shift: 0,
    },
    NamedFunction {
        name: "abs-half",
        exact: abs_half_exact,
        modulus_shift: 0,
    },
    NamedFunction {
        name: "pwquad",
        exact: pwquad_exact,
        modulus_shift: 0,
    },
];

pub fn function(name: &str) -> Option<NamedFunction> {
    SUITE.iter().find(|f| f.name == name).copied()
}

pub fn modulus(spec: &str) -> Option<Modulus> {
    if spec == "identity" {
        return Some(Modulus::identity());
    }
    if let Some(c) = spec.strip_prefix("constant:") {
        return c.parse::<u32>().ok().map(Modulus::constant);
    }
    if let Some(s) = spec.strip_prefix("shift:") {
        return s.parse::<u32>().ok().map(Modulus::shifted);
    }
    None
}

/// The two-interval test set: all rationals of `[0,1/3] ∪ [2/3,1]`.
pub fn two_interval_set() -> SepClosedSet {
    SepClosedSet::union(
        &SepClosedSet::rationals_in(Rat::zero(), Rat::ratio(1, 3)),
        &SepClosedSet::rationals_in(Rat::ratio(2, 3), Rat::one()),
    )
}

pub fn set(spec: &str) -> Option<SepClosedSet> {
    match spec {
        "unit" => Some(SepClosedSet::rationals_in(Rat::zero(), Rat::one())),
        "left-half" => Some(SepClosedSet::rationals_in(Rat::zero(), Rat::ratio(1, 2))),
        "two-interval" => Some(two_interval_set()),
        _ => None,
    }
}

/// The step function on the two-interval set: 0 on the left part, 1 on
/// the right part. Valid modulus on the set: any gap-respecting one;
/// `ω(k) = k + 2` keeps pairs within `2^{−2} < 1/3` inside one part.
pub fn two_interval_step() -> (impl Fn(&RealCode) -> RealCode + Send + Sync + Clone, Modulus) {
    (
        |x: &RealCode| {
            let q = x.approx(4);
            if q < Rat::ratio(1, 2) {
                real_from_rational(Rat::zero())
            } else {
                real_from_rational(Rat::one())
            }
        },
        Modulus::shifted(2),
    )
}

pub fn cantor_potential(name: &str) -> Option<CantorPotential> {
    match name {
        "embed" => Some(CantorPotential::new(
            |f: &BinSeq| embed_real(f),
            Modulus::shifted(1),
        )),
        "first-bit" => Some(CantorPotential::new(
            |f: &BinSeq| real_from_rational(if f.at(0) == 0 { Rat::zero() } else { Rat::one() }),
            Modulus::constant(1),
        )),
        _ => name.strip_prefix("const:").and_then(|c| {
            let value: Rat = c.parse().ok()?;
            Some(CantorPotential::new(
                move |_: &BinSeq| real_from_rational(value.clone()),
                Modulus::constant(1),
            ))
        }),
    }
}

pub fn baire_potential(name: &str) -> Option<BairePotential> {
    match name {
        // 2^{−g(0)}: rewards a large first entry, bounded below by 0.
        "entry-decay" => Some(BairePotential::new(
            |g: &BaireSeq| real_from_rational(Rat::pow2(-(g.at(0).min(62) as i32))),
            Modulus::constant(1),
        )),
        "first-entry" => Some(BairePotential::new(
            |g: &BaireSeq| real_from_rational(Rat::from_int(g.at(0).min(1 << 20) as i64)),
            Modulus::constant(1),
        )),
        "binary-embed" => Some(BairePotential::new(
            |g: &BaireSeq| {
                let g = g.clone();
                embed_real(&BinSeq::from_fn(move |n| g.at(n).min(1) as u8))
            },
            Modulus::shifted(1),
        )),
        _ => None,
    }
}

/// Black-box accepters on finite sequences for the bounded survival
/// search: return 0 to accept a prefix.
pub fn suslin_predicate(name: &str) -> Option<Arc<dyn Fn(&cauchy_core::seq::FinSeq) -> u64 + Send + Sync>> {
    match name {
        "accept-all" => Some(Arc::new(|_| 0)),
        "reject-nonempty" => Some(Arc::new(|s| u64::from(!s.is_empty()))),
        "identity-only" => Some(Arc::new(|s| {
            let ok = s.entries().iter().enumerate().all(|(i, &e)| e == i as u64);
            u64::from(!ok)
        })),
        _ => None,
    }
}

pub fn kappa0_functional(name: &str) -> Option<Arc<dyn Fn(&BinSeq) -> u64 + Send + Sync>> {
    match name {
        "first-bit" => Some(Arc::new(|f: &BinSeq| f.at(0) as u64)),
        "third-bit-flip" => Some(Arc::new(|f: &BinSeq| 1 - f.at(2) as u64)),
        "never" => Some(Arc::new(|_| 1)),
        _ => None,
    }
}
