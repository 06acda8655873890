//! Second-order codes for continuous functions.
//!
//! Two codings are housed here:
//!
//! * [`Associate`] — a table from finite sequences to naturals coding a
//!   continuous functional on sequence spaces. The convention is total:
//!   value `0` means "no information", value `m+1` means "output is `m`".
//! * [`NbhdCode`] — an indexable enumeration of quadruples
//!   `(a, r, b, s)` meaning `|x − a| < r  ⟹  |F(x) − b| ≤ s`: an open
//!   input ball paired with a closed output ball.
//!
//! A [`Modulus`] `ω` promises `|x − y| < 2^{−ω(k)} ⟹ |F(x) − F(y)| < 2^{−k}`.
//! [`code_from_modulus`] compiles a function-with-modulus into a grid of
//! quadruples; [`modulus_from_code`] recovers a modulus from a total code
//! by a certified finite-cover search. Partiality is explicit: every
//! evaluation returns a [`CodeOutcome`] whose `NeedFuel` case reports the
//! fuel spent.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::rational::Rat;
use crate::real::RealCode;
use crate::seq::{BaireSeq, FinSeq};

/// Result of a fuel-bounded evaluation; `Value` records the precision at
/// which it was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalOutcome<T, W> {
    Value {
        value: T,
        precision: u32,
        consumed: u64,
    },
    NeedFuel {
        consumed: u64,
    },
    Inconsistent {
        first: W,
        second: W,
    },
}

impl<T, W> EvalOutcome<T, W> {
    pub fn value(&self) -> Option<&T> {
        match self {
            EvalOutcome::Value { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_value(&self) -> bool {
        matches!(self, EvalOutcome::Value { .. })
    }
}

/// Outcome of evaluating an associate: payload is the coded natural.
pub type AssocOutcome = EvalOutcome<u64, (FinSeq, u64)>;

/// Outcome of evaluating a neighborhood code: payload is a rational
/// within the certified precision of the function value.
pub type CodeOutcome = EvalOutcome<Rat, Quad>;

/// An associate (RM-code) for a continuous functional on sequence space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Associate {
    table: BTreeMap<FinSeq, u64>,
}

impl Associate {
    pub fn new() -> Associate {
        Associate::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (FinSeq, u64)>) -> Associate {
        Associate {
            table: entries.into_iter().collect(),
        }
    }

    /// Table lookup under the total-map convention: absent entries are 0.
    pub fn lookup(&self, sigma: &FinSeq) -> u64 {
        self.table.get(sigma).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, sigma: FinSeq, value: u64) {
        self.table.insert(sigma, value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&FinSeq, u64)> {
        self.table.iter().map(|(k, &v)| (k, v))
    }

    /// Branch consistency over the stored entries: along any chain of
    /// prefixes, at most one distinct nonzero value appears.
    pub fn check_branch_consistency(&self) -> Result<(), ((FinSeq, u64), (FinSeq, u64))> {
        let nonzero: Vec<(&FinSeq, u64)> =
            self.table.iter().filter(|(_, &v)| v != 0).map(|(k, &v)| (k, v)).collect();
        for (i, (sigma, v)) in nonzero.iter().enumerate() {
            for (tau, w) in nonzero.iter().skip(i + 1) {
                let comparable = sigma.is_prefix_of(tau) || tau.is_prefix_of(sigma);
                if comparable && v != w {
                    return Err((((*sigma).clone(), *v), ((*tau).clone(), *w)));
                }
            }
        }
        Ok(())
    }
}

/// Evaluate an associate on a sequence: the first nonzero table value
/// along the prefixes of `f` up to length `fuel` decides the output.
pub fn eval_assoc(alpha: &Associate, f: &BaireSeq, fuel: u64) -> AssocOutcome {
    let mut hit: Option<(FinSeq, u64)> = None;
    for n in 0..=fuel {
        let sigma = f.prefix(n);
        let v = alpha.lookup(&sigma);
        if v != 0 {
            match &hit {
                None => hit = Some((sigma, v)),
                Some((first_sigma, first_v)) => {
                    if *first_v != v {
                        return AssocOutcome::Inconsistent {
                            first: (first_sigma.clone(), *first_v),
                            second: (sigma, v),
                        };
                    }
                }
            }
        }
    }
    match hit {
        Some((sigma, v)) => AssocOutcome::Value {
            value: v - 1,
            precision: sigma.len() as u32,
            consumed: fuel,
        },
        None => AssocOutcome::NeedFuel { consumed: fuel },
    }
}

/// One neighborhood condition: `|x − a| < r ⟹ |F(x) − b| ≤ s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quad {
    pub a: Rat,
    pub r: Rat,
    pub b: Rat,
    pub s: Rat,
}

impl Quad {
    pub fn new(a: Rat, r: Rat, b: Rat, s: Rat) -> Quad {
        assert!(r.is_positive(), "input radius must be positive");
        assert!(s.is_positive(), "output slack must be positive");
        Quad { a, r, b, s }
    }

    fn ball_lo(&self) -> Rat {
        &self.a - &self.r
    }

    fn ball_hi(&self) -> Rat {
        &self.a + &self.r
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.r, self.b, self.s)
    }
}

enum QuadSource {
    Finite(Vec<Quad>),
    Stream(Box<dyn Fn(u64) -> Option<Quad> + Send + Sync>),
}

/// A neighborhood-condition code: a restartable, indexable enumeration of
/// quadruples. Pairwise consistency is a checked property of the entries
/// actually consulted, not an enforced construction.
#[derive(Clone)]
pub struct NbhdCode {
    source: Arc<QuadSource>,
}

impl NbhdCode {
    pub fn from_quads(quads: Vec<Quad>) -> NbhdCode {
        NbhdCode {
            source: Arc::new(QuadSource::Finite(quads)),
        }
    }

    pub fn from_fn<F>(stream: F) -> NbhdCode
    where
        F: Fn(u64) -> Option<Quad> + Send + Sync + 'static,
    {
        NbhdCode {
            source: Arc::new(QuadSource::Stream(Box::new(stream))),
        }
    }

    pub fn empty() -> NbhdCode {
        NbhdCode::from_quads(Vec::new())
    }

    pub fn get(&self, index: u64) -> Option<Quad> {
        match self.source.as_ref() {
            QuadSource::Finite(v) => v.get(index as usize).cloned(),
            QuadSource::Stream(f) => f(index),
        }
    }

    /// The first `limit` quadruples (fewer when the enumeration ends).
    pub fn prefix(&self, limit: u64) -> Vec<Quad> {
        (0..limit).map_while(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for NbhdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NbhdCode(first = {:?})", self.get(0))
    }
}

/// A modulus of uniform continuity:
/// `|x − y| < 2^{−ω(k)} ⟹ |F(x) − F(y)| < 2^{−k}`.
#[derive(Clone)]
pub struct Modulus {
    map: Arc<dyn Fn(u32) -> u32 + Send + Sync>,
}

impl Modulus {
    pub fn from_fn<F>(map: F) -> Modulus
    where
        F: Fn(u32) -> u32 + Send + Sync + 'static,
    {
        Modulus { map: Arc::new(map) }
    }

    /// `ω(k) = k`: valid for any 1-Lipschitz function.
    pub fn identity() -> Modulus {
        Modulus::from_fn(|k| k)
    }

    pub fn constant(value: u32) -> Modulus {
        Modulus::from_fn(move |_| value)
    }

    /// `ω(k) = k + shift`: valid when the Lipschitz constant is ≤ 2^shift.
    pub fn shifted(shift: u32) -> Modulus {
        Modulus::from_fn(move |k| k + shift)
    }

    pub fn at(&self, k: u32) -> u32 {
        (self.map)(k)
    }

    pub fn check_monotone(&self, bound: u32) -> bool {
        (1..=bound).all(|k| self.at(k - 1) <= self.at(k))
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus(ω(0..4) = {:?})", (0..4).map(|k| self.at(k)).collect::<Vec<_>>())
    }
}

/// Certified strict comparison of `|x − a|` against `r`. The working
/// precision is at least `base`, refined so the approximation slack is
/// at most a quarter of the ball radius — a ball can only ever certify
/// with slack below its own radius. `Some(true)`: membership in the
/// open ball is certified; `Some(false)`: exclusion is certified;
/// `None`: `x` is too close to the boundary and the quad is unusable.
fn certify_in_ball(x: &RealCode, quad: &Quad, base: u32) -> Option<bool> {
    let p = base.max(quad.r.recip().ceil_log2() + 2);
    let slack = Rat::pow2(-(p as i32));
    let dist = (x.approx(p) - &quad.a).abs();
    if &dist + &slack < quad.r {
        Some(true)
    } else if &dist - &slack >= quad.r {
        Some(false)
    } else {
        None
    }
}

/// Evaluate a neighborhood code at `x` to precision `k`, consulting the
/// first `fuel` quadruples. Membership in input balls is certified by
/// apartness at working precision `k+3` (finer for small balls);
/// boundary-ambiguous quadruples are skipped. All applicable quadruples
/// are cross-checked for pairwise consistency before any value is
/// reported.
pub fn eval_code(code: &NbhdCode, x: &RealCode, k: u32, fuel: u64) -> CodeOutcome {
    let p = k + 3;
    let target = Rat::pow2(-(k as i32));
    let mut applicable: Vec<Quad> = Vec::new();
    let mut consumed = 0;
    for i in 0..fuel {
        let Some(quad) = code.get(i) else { break };
        consumed = i + 1;
        if certify_in_ball(x, &quad, p) == Some(true) {
            applicable.push(quad);
        }
    }
    for (i, q1) in applicable.iter().enumerate() {
        for q2 in applicable.iter().skip(i + 1) {
            if (&q1.b - &q2.b).abs() > &q1.s + &q2.s {
                return CodeOutcome::Inconsistent {
                    first: q1.clone(),
                    second: q2.clone(),
                };
            }
        }
    }
    match applicable.into_iter().find(|q| q.s <= target) {
        Some(q) => CodeOutcome::Value {
            value: q.b,
            precision: k,
            consumed,
        },
        None => CodeOutcome::NeedFuel { consumed },
    }
}

/// Compile a function with modulus into a neighborhood code on `[0,1]`.
///
/// For each `k ≤ k_max` the grid has step `2^{−ω(k+2)}`; each quadruple
/// is `(a = i·2^{−ω(k+2)}, r = 2^{−ω(k+2)}, b = [F(a)](k+2), s = 2^{−k})`.
/// The triangle budget `2^{−(k+2)}` (modulus) + `2^{−(k+2)}`
/// (approximation) keeps the true error within `s`.
pub fn code_from_modulus<F>(f: F, omega: &Modulus, k_max: u32) -> NbhdCode
where
    F: Fn(&Rat) -> RealCode + Send + Sync + 'static,
{
    // Per-precision blocks, enumerated lazily: block k holds 2^{ω(k+2)}+1
    // quadruples at grid step 2^{−ω(k+2)}.
    let mut blocks = Vec::new();
    let mut start = 0u64;
    for k in 0..=k_max {
        let grid_exp = omega.at(k + 2);
        assert!(grid_exp <= 32, "grid exponent {grid_exp} beyond enumerable range");
        blocks.push((start, k, grid_exp));
        start += (1u64 << grid_exp) + 1;
    }
    let total = start;
    NbhdCode::from_fn(move |index| {
        if index >= total {
            return None;
        }
        let &(block_start, k, grid_exp) = blocks
            .iter()
            .rev()
            .find(|(s, _, _)| *s <= index)
            .expect("index 0 belongs to the first block");
        let i = index - block_start;
        let step = Rat::pow2(-(grid_exp as i32));
        let a = Rat::from_int(i as i64) * &step;
        let b = f(&a).approx(k + 2);
        Some(Quad::new(a, step, b, Rat::pow2(-(k as i32))))
    })
}

/// Find a modulus value `ω(k)` from a total code: search the first `fuel`
/// quadruples for a finite subfamily with `s ≤ 2^{−k−1}` whose open balls
/// cover `[0,1]` (greedy chain, exact rational arithmetic), then return
/// the least `k′` with `2^{−k′}` at most half the minimal chain overlap.
/// Any two points closer than `2^{−k′}` then share a ball, so their
/// values differ by at most `2s ≤ 2^{−k}`.
pub fn modulus_from_code(code: &NbhdCode, k: u32, fuel: u64) -> Option<u32> {
    let slack_bound = Rat::pow2(-(k as i32) - 1);
    let mut balls: Vec<Quad> = code
        .prefix(fuel)
        .into_iter()
        .filter(|q| q.s <= slack_bound)
        .collect();
    balls.sort_by(|p, q| p.ball_lo().cmp(&q.ball_lo()));
    // Greedy chain: repeatedly take, among balls whose interior contains
    // the current frontier, the one reaching farthest right.
    let mut chain: Vec<Quad> = Vec::new();
    let mut frontier = Rat::zero();
    loop {
        // The next ball must contain the frontier in its interior; among
        // those, take the one reaching farthest right.
        let best = balls
            .iter()
            .filter(|q| q.ball_lo() < frontier && q.ball_hi() > frontier)
            .max_by(|p, q| p.ball_hi().cmp(&q.ball_hi()))
            .cloned();
        let Some(best) = best else { return None };
        frontier = best.ball_hi();
        chain.push(best);
        if frontier > Rat::one() {
            break;
        }
    }
    // Lebesgue number: half the minimal overlap between consecutive
    // chain balls (a single covering ball works at any distance).
    let mut lebesgue: Option<Rat> = None;
    for pair in chain.windows(2) {
        let overlap = pair[0].ball_hi() - pair[1].ball_lo();
        lebesgue = Some(match lebesgue {
            None => overlap,
            Some(cur) => cur.min(overlap),
        });
    }
    match lebesgue {
        None => Some(0),
        Some(width) => {
            let half = width * Rat::ratio(1, 2);
            let mut kp = 0u32;
            while Rat::pow2(-(kp as i32)) > half {
                kp += 1;
            }
            Some(kp)
        }
    }
}

/// Which dyadic grid points of `[0,1]` the code covers at precision `k`.
#[derive(Clone, Debug)]
pub struct TotalityReport {
    pub grid_depth: u32,
    pub covered: u64,
    pub total: u64,
    pub uncovered: Vec<Rat>,
}

impl TotalityReport {
    pub fn covered_fraction(&self) -> Rat {
        if self.total == 0 {
            return Rat::zero();
        }
        Rat::new((self.covered).into(), (self.total).into()).unwrap()
    }
}

pub fn totality_report(code: &NbhdCode, k: u32, grid_depth: u32, fuel: u64) -> TotalityReport {
    let step = Rat::pow2(-(grid_depth as i32));
    let total = (1u64 << grid_depth) + 1;
    let mut covered = 0;
    let mut uncovered = Vec::new();
    for i in 0..total {
        let x = Rat::from_int(i as i64) * &step;
        let point = crate::real::real_from_rational(x.clone());
        if eval_code(code, &point, k, fuel).is_value() {
            covered += 1;
        } else {
            uncovered.push(x);
        }
    }
    TotalityReport {
        grid_depth,
        covered,
        total,
        uncovered,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::real_from_rational;
    use crate::seq::BinSeq;

    fn assoc_012() -> Associate {
        Associate::from_entries([
            (FinSeq::empty(), 0),
            (FinSeq::new(vec![0]), 3),
            (FinSeq::new(vec![1]), 5),
        ])
    }

    #[test]
    fn eval_assoc_first_nonzero_decides() {
        let alpha = assoc_012();
        let zeros = BaireSeq::from(&BinSeq::zeros());
        assert_eq!(
            eval_assoc(&alpha, &zeros, 2),
            AssocOutcome::Value {
                value: 2,
                precision: 1,
                consumed: 2
            }
        );
        let ones = BaireSeq::from_fn(|_| 1);
        assert_eq!(
            eval_assoc(&alpha, &ones, 2),
            AssocOutcome::Value {
                value: 4,
                precision: 1,
                consumed: 2
            }
        );
    }

    #[test]
    fn eval_assoc_empty_table_needs_fuel() {
        let alpha = Associate::new();
        let f = BaireSeq::from_fn(|n| n);
        assert_eq!(eval_assoc(&alpha, &f, 10), AssocOutcome::NeedFuel { consumed: 10 });
    }

    #[test]
    fn eval_assoc_flags_inconsistency() {
        let alpha = Associate::from_entries([
            (FinSeq::new(vec![0]), 3),
            (FinSeq::new(vec![0, 0]), 4),
        ]);
        let zeros = BaireSeq::from(&BinSeq::zeros());
        match eval_assoc(&alpha, &zeros, 5) {
            AssocOutcome::Inconsistent { first, second } => {
                assert_eq!(first.1, 3);
                assert_eq!(second.1, 4);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
        assert!(alpha.check_branch_consistency().is_err());
    }

    #[test]
    fn eval_assoc_repeat_of_same_value_is_consistent() {
        let alpha = Associate::from_entries([
            (FinSeq::new(vec![0]), 3),
            (FinSeq::new(vec![0, 0]), 3),
        ]);
        let zeros = BaireSeq::from(&BinSeq::zeros());
        assert!(alpha.check_branch_consistency().is_ok());
        assert_eq!(
            eval_assoc(&alpha, &zeros, 5),
            AssocOutcome::Value {
                value: 2,
                precision: 1,
                consumed: 5
            }
        );
    }

    #[test]
    fn eval_assoc_monotone_in_fuel() {
        let alpha = assoc_012();
        let zeros = BaireSeq::from(&BinSeq::zeros());
        let first = eval_assoc(&alpha, &zeros, 2);
        for fuel in 3..=12 {
            match (&first, eval_assoc(&alpha, &zeros, fuel)) {
                (
                    AssocOutcome::Value { value: v1, .. },
                    AssocOutcome::Value { value: v2, .. },
                ) => assert_eq!(*v1, v2),
                (a, b) => panic!("fuel monotonicity broken: {a:?} vs {b:?}"),
            }
        }
    }

    #[test]
    fn eval_code_single_covering_quad() {
        let code = NbhdCode::from_quads(vec![Quad::new(
            Rat::ratio(1, 2),
            Rat::one(),
            Rat::from_int(7),
            Rat::ratio(1, 8),
        )]);
        let x = real_from_rational(Rat::ratio(1, 2));
        assert_eq!(
            eval_code(&code, &x, 3, 1),
            CodeOutcome::Value {
                value: Rat::from_int(7),
                precision: 3,
                consumed: 1
            }
        );
    }

    #[test]
    fn eval_code_empty_needs_fuel() {
        let code = NbhdCode::empty();
        let x = real_from_rational(Rat::ratio(1, 3));
        assert_eq!(eval_code(&code, &x, 4, 10), CodeOutcome::NeedFuel { consumed: 0 });
    }

    #[test]
    fn eval_code_round_trip_identity() {
        let code = code_from_modulus(|q| real_from_rational(q.clone()), &Modulus::identity(), 4);
        let x = real_from_rational(Rat::ratio(1, 3));
        match eval_code(&code, &x, 4, 1 << 12) {
            CodeOutcome::Value { value, .. } => {
                let err = (value - Rat::ratio(1, 3)).abs();
                assert!(err <= Rat::pow2(-4) + Rat::pow2(-6));
            }
            other => panic!("expected value, got {other:?}"),
        }
    }

    #[test]
    fn eval_code_round_trip_one_minus_x() {
        let code = code_from_modulus(
            |q| real_from_rational(Rat::one() - q),
            &Modulus::identity(),
            4,
        );
        let x = real_from_rational(Rat::ratio(1, 4));
        match eval_code(&code, &x, 3, 1 << 12) {
            CodeOutcome::Value { value, .. } => {
                let err = (value - Rat::ratio(3, 4)).abs();
                assert!(err <= Rat::pow2(-3) + Rat::pow2(-5));
            }
            other => panic!("expected value, got {other:?}"),
        }
    }

    #[test]
    fn code_from_constant_has_constant_outputs() {
        let code = code_from_modulus(
            |_| real_from_rational(Rat::ratio(1, 2)),
            &Modulus::constant(0),
            2,
        );
        for q in code.prefix(1 << 10) {
            assert_eq!(q.b, Rat::ratio(1, 2));
        }
    }

    #[test]
    fn code_from_modulus_grid_spacing() {
        let code = code_from_modulus(|q| real_from_rational(q.clone()), &Modulus::identity(), 2);
        // Blocks for k = 0, 1, 2 have grid exponents ω(2) = 2, ω(3) = 3,
        // ω(4) = 4: block sizes 5, 9, 17.
        let quads = code.prefix(1 << 10);
        assert_eq!(quads.len(), 5 + 9 + 17);
        let last_block = &quads[14..];
        assert!(last_block.iter().all(|q| q.r == Rat::pow2(-4)));
        assert_eq!(last_block[1].a, Rat::pow2(-4));
    }

    #[test]
    fn eval_code_flags_contradictory_quads() {
        // Two overlapping balls promising incompatible outputs.
        let code = NbhdCode::from_quads(vec![
            Quad::new(Rat::ratio(1, 2), Rat::ratio(1, 4), Rat::zero(), Rat::ratio(1, 32)),
            Quad::new(Rat::ratio(1, 2), Rat::ratio(1, 4), Rat::one(), Rat::ratio(1, 32)),
        ]);
        let x = real_from_rational(Rat::ratio(1, 2));
        assert!(matches!(
            eval_code(&code, &x, 3, 10),
            CodeOutcome::Inconsistent { .. }
        ));
    }

    #[test]
    fn eval_code_checks_consistency_before_value() {
        // The first applicable quad alone would yield a value; a later
        // contradictory quad must flip the outcome to Inconsistent.
        let good = Quad::new(Rat::ratio(1, 2), Rat::one(), Rat::zero(), Rat::ratio(1, 16));
        let bad = Quad::new(Rat::ratio(1, 2), Rat::one(), Rat::one(), Rat::ratio(1, 16));
        let ordered = NbhdCode::from_quads(vec![good.clone(), bad.clone()]);
        let x = real_from_rational(Rat::ratio(1, 2));
        assert!(eval_code(&ordered, &x, 3, 1).is_value());
        assert!(matches!(
            eval_code(&ordered, &x, 3, 2),
            CodeOutcome::Inconsistent { .. }
        ));
    }

    #[test]
    fn modulus_from_single_covering_ball() {
        let code = NbhdCode::from_quads(vec![Quad::new(
            Rat::ratio(1, 2),
            Rat::from_int(2),
            Rat::ratio(1, 3),
            Rat::pow2(-4),
        )]);
        // s = 2^{−k−1} for k = 3; one ball covers [0,1], so ω(3) = 0.
        assert_eq!(modulus_from_code(&code, 3, 10), Some(0));
    }

    #[test]
    fn modulus_from_code_empty_needs_fuel() {
        assert_eq!(modulus_from_code(&NbhdCode::empty(), 2, 100), None);
    }

    #[test]
    fn modulus_round_trip_is_valid() {
        let f = |q: &Rat| real_from_rational(q.clone());
        let code = code_from_modulus(f, &Modulus::identity(), 5);
        let k = 2;
        let kp = modulus_from_code(&code, k, 1 << 12).expect("cover must exist");
        // Validity oracle: sample dyadic pairs closer than 2^{−k′}.
        let depth = (kp + 2).min(12);
        let step = Rat::pow2(-(depth as i32));
        for i in 0..(1u64 << depth) {
            let x = Rat::from_int(i as i64) * &step;
            let y = &x + &Rat::pow2(-(kp as i32) - 1);
            if y > Rat::one() {
                continue;
            }
            let fx = f(&x).approx(20);
            let fy = f(&y).approx(20);
            assert!((fx - fy).abs() < Rat::pow2(-(k as i32)));
        }
    }

    #[test]
    fn totality_full_and_empty() {
        let code = code_from_modulus(|q| real_from_rational(q.clone()), &Modulus::identity(), 4);
        let report = totality_report(&code, 3, 4, 1 << 12);
        assert_eq!(report.covered, report.total);
        assert_eq!(report.covered_fraction(), Rat::one());

        let empty = totality_report(&NbhdCode::empty(), 3, 2, 10);
        assert_eq!(empty.covered, 0);
        assert_eq!(empty.covered_fraction(), Rat::zero());
        assert_eq!(empty.uncovered.len(), 5);
    }

    #[test]
    fn totality_reports_uncovered_witnesses() {
        let code = NbhdCode::from_quads(vec![Quad::new(
            Rat::ratio(1, 4),
            Rat::ratio(1, 4),
            Rat::zero(),
            Rat::ratio(1, 8),
        )]);
        let report = totality_report(&code, 3, 2, 10);
        assert!(report.uncovered.contains(&Rat::ratio(3, 4)));
        assert!(report.covered < report.total);
    }
}
