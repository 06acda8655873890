//! Fuel-bounded approximants of type-two search functionals.
//!
//! Unbounded witness search is exactly the non-computable content these
//! functionals package, so every search here carries an explicit budget
//! and exhaustion is a first-class outcome. In particular the classical
//! convention "`μ(f) = 0` when no zero exists" is not emulated — it is
//! only meaningful for a completed infinite search — and
//! [`OracleOutcome::ExhaustedAt`] is reported instead.
//!
//! [`grilliot_extract`] packages the effective content of a certified
//! discontinuity: from a convergent sequence on which a (fuel-bounded,
//! deliberately cheating) evaluator jumps, it builds a functional that
//! decides `∃n g(n)=0` by evaluating the function on a diagonal real.
//! [`em_dispatch`] is the dual-strategy combinator: solve a task with a
//! continuity witness if one is found, else extract arithmetical power
//! from a discontinuity witness.

use std::fmt;
use std::sync::Arc;

use crate::fncode::{eval_assoc, AssocOutcome, Associate, Modulus};
use crate::rational::Rat;
use crate::real::{Provenance, RealCode};
use crate::seq::{BaireSeq, BinSeq, FinSeq};

/// A search budget. Outcomes report how much of it was consumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fuel(pub u64);

/// Outcome of a fuel-bounded witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    /// `witness ≤ budget` and the defining predicate holds there.
    Found { witness: u64, consumed: u64 },
    ExhaustedAt { budget: u64 },
}

impl OracleOutcome {
    pub fn witness(&self) -> Option<u64> {
        match self {
            OracleOutcome::Found { witness, .. } => Some(*witness),
            OracleOutcome::ExhaustedAt { .. } => None,
        }
    }
}

/// One probe of a search, for step-log transcripts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    pub step: u64,
    pub kind: &'static str,
    pub input: String,
    pub outcome: String,
}

fn mu_scan(f: &BaireSeq, budget: u64, mut observe: impl FnMut(u64, u64)) -> OracleOutcome {
    for n in 0..=budget {
        let v = f.at(n);
        observe(n, v);
        if v == 0 {
            return OracleOutcome::Found {
                witness: n,
                consumed: n + 1,
            };
        }
    }
    OracleOutcome::ExhaustedAt { budget }
}

/// Least `n ≤ budget` with `f(n) = 0`.
pub fn mu_search(f: &BaireSeq, fuel: Fuel) -> OracleOutcome {
    mu_scan(f, fuel.0, |_, _| {})
}

pub fn mu_search_trace(f: &BaireSeq, fuel: Fuel) -> (OracleOutcome, Vec<Probe>) {
    let mut probes = Vec::new();
    let out = mu_scan(f, fuel.0, |n, v| {
        probes.push(Probe {
            step: n,
            kind: "mu",
            input: format!("f({n})={v}"),
            outcome: if v == 0 { "hit".into() } else { "miss".into() },
        });
    });
    (out, probes)
}

/// Existence-only view of the same search; agreement with [`mu_search`]
/// on witnesses is an invariant, so this delegates outright.
pub fn exists2_search(f: &BaireSeq, fuel: Fuel) -> OracleOutcome {
    mu_search(f, fuel)
}

/// Outcome of a bounded-depth survival check for `(∃g)(∀n)(f(ḡn)=0)`.
/// Survival is a necessary condition for the unbounded statement, never
/// a certification of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuslinOutcome {
    SurvivesTo { depth: u64, witness: FinSeq },
    NoPathOfLength(u64),
}

/// Depth-first search over prefixes with entries `< depth` for one of
/// length `depth` all of whose initial segments are accepted (`f = 0`).
/// Entries are tried in ascending order, so a returned witness is the
/// lexicographically least survivor.
pub fn suslin_depth_check<F>(f: F, depth: u64) -> SuslinOutcome
where
    F: Fn(&FinSeq) -> u64,
{
    if f(&FinSeq::empty()) != 0 {
        return SuslinOutcome::NoPathOfLength(0);
    }
    if depth == 0 {
        return SuslinOutcome::SurvivesTo {
            depth: 0,
            witness: FinSeq::empty(),
        };
    }
    let mut deepest = 0u64;
    let mut stack: Vec<(FinSeq, u64)> = vec![(FinSeq::empty(), 0)];
    while let Some((node, next_entry)) = stack.pop() {
        if next_entry >= depth {
            continue;
        }
        stack.push((node.clone(), next_entry + 1));
        let child = node.push(next_entry);
        if f(&child) == 0 {
            if child.len() == depth {
                return SuslinOutcome::SurvivesTo {
                    depth,
                    witness: child,
                };
            }
            deepest = deepest.max(child.len());
            stack.push((child, 0));
        }
    }
    SuslinOutcome::NoPathOfLength(deepest + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kappa0Outcome {
    /// Lexicographically least `m`-prefix (zero-extended) where `Y = 0`.
    Found(FinSeq),
    NoneAtDepth(u32),
}

#[derive(Clone, Debug)]
pub enum OracleError {
    /// Two extensions of a common prefix gave different values despite
    /// the declared modulus depth.
    ModulusViolation { prefix: FinSeq, values: (u64, u64) },
    /// Precondition spot-checks on a discontinuity witness failed.
    WitnessInvalid { reason: String },
    /// Both sides of a dovetailed decision certified: the declared
    /// domain hypothesis is violated.
    BothCertified { step: u64 },
    /// An associate consulted during deciding was internally inconsistent.
    InconsistentAssociate { first: (FinSeq, u64), second: (FinSeq, u64) },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::ModulusViolation { prefix, values } => write!(
                f,
                "extensions of {prefix} gave {} and {}: declared modulus violated",
                values.0, values.1
            ),
            OracleError::WitnessInvalid { reason } => {
                write!(f, "discontinuity witness invalid: {reason}")
            }
            OracleError::BothCertified { step } => {
                write!(f, "both sides certified at step {step}: domain hypothesis violated")
            }
            OracleError::InconsistentAssociate { first, second } => write!(
                f,
                "associate inconsistent: {} -> {} vs {} -> {}",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

impl std::error::Error for OracleError {}

/// Exhaustive comprehension on Cantor space under a declared modulus
/// depth `m`: the value of `Y` is promised to depend only on the first
/// `m` bits. Every scanned prefix is spot-checked on its all-zero and
/// all-one extensions; under the promise the search is decisive.
pub fn kappa0_search<Y>(y: Y, modulus_depth: u32) -> Result<Kappa0Outcome, OracleError>
where
    Y: Fn(&BinSeq) -> u64,
{
    let m = modulus_depth;
    for code in 0..(1u64 << m) {
        let bits: Vec<u8> = (0..m).rev().map(|b| ((code >> b) & 1) as u8).collect();
        let zero_ext = BinSeq::from_bits(&bits);
        let bits_clone = bits.clone();
        let one_ext = BinSeq::from_fn(move |n| {
            bits_clone.get(n as usize).copied().unwrap_or(1)
        });
        let v0 = y(&zero_ext);
        let v1 = y(&one_ext);
        if v0 != v1 {
            return Err(OracleError::ModulusViolation {
                prefix: zero_ext.prefix(m as u64),
                values: (v0, v1),
            });
        }
        if v0 == 0 {
            return Ok(Kappa0Outcome::Found(zero_ext.prefix(m as u64)));
        }
    }
    Ok(Kappa0Outcome::NoneAtDepth(m))
}

/// A type-two functional extracted from a discontinuity witness: applied
/// to `g` with fuel, it reports whether `g` has a zero within the budget.
#[derive(Clone)]
pub struct Functional2 {
    detector: Arc<dyn Fn(&BaireSeq, Fuel) -> OracleOutcome + Send + Sync>,
}

impl Functional2 {
    pub fn apply(&self, g: &BaireSeq, fuel: Fuel) -> OracleOutcome {
        (self.detector)(g, fuel)
    }
}

/// A fuel-bounded black-box evaluator for a (possibly discontinuous)
/// real function. Genuinely discontinuous functions cannot be computable
/// black boxes; supplying one with an internal budget is the honest way
/// to stage the extraction.
pub type FuelledRealFn = Arc<dyn Fn(&RealCode, u64) -> RealCode + Send + Sync>;

const WITNESS_SPOT_CHECKS: u32 = 8;

/// Extract arithmetical power from a certified discontinuity.
///
/// Preconditions, spot-checked on `n ≤ 8`: `|seq(n) − x0| ≤ 2^{−n}`,
/// and `|F(seq(n)) − F(x0)| ≥ δ`. The returned functional builds, for
/// each `g`, the diagonal real that follows `x0` until `g` reveals a
/// zero at `m` and then switches to `seq(m+2)`; comparing `F` there
/// against `F(x0)` at precision `δ/8` decides the search. The index
/// shift keeps the diagonal fast-Cauchy with margin `(5/8)·2^{−n}`.
pub fn grilliot_extract(
    f: FuelledRealFn,
    x0: RealCode,
    seq: Arc<dyn Fn(u32) -> RealCode + Send + Sync>,
    delta: Rat,
    witness_fuel: u64,
) -> Result<Functional2, OracleError> {
    assert!(delta.is_positive(), "discontinuity gap must be positive");
    // Precision with 2^{−p} ≤ δ/8.
    let p = (Rat::from_int(8) / delta.clone()).ceil_log2();
    for n in 0..WITNESS_SPOT_CHECKS {
        let q = n + 3;
        let gap = (seq(n).approx(q) - x0.approx(q)).abs();
        if gap > Rat::pow2(-(n as i32)) + Rat::pow2(-(q as i32) + 1) {
            return Err(OracleError::WitnessInvalid {
                reason: format!("|seq({n}) − x0| not within 2^-{n}: gap approximant {gap}"),
            });
        }
        let jump = (f(&seq(n), witness_fuel).approx(p) - f(&x0, witness_fuel).approx(p)).abs();
        if &jump + &Rat::pow2(-(p as i32) + 1) < delta {
            return Err(OracleError::WitnessInvalid {
                reason: format!("|F(seq({n})) − F(x0)| below δ: jump approximant {jump}"),
            });
        }
    }
    let threshold = delta * Rat::ratio(1, 2);
    let detector = move |g: &BaireSeq, fuel: Fuel| -> OracleOutcome {
        let g_for_diag = g.clone();
        let x0_for_diag = x0.clone();
        let seq_for_diag = seq.clone();
        let diagonal = RealCode::from_fn(Provenance::Arithmetic, move |k| {
            let least_zero = (0..k as u64).find(|&m| g_for_diag.at(m) == 0);
            match least_zero {
                Some(m) => seq_for_diag(m as u32 + 2).approx(k + 2),
                None => x0_for_diag.approx(k + 2),
            }
        });
        let f_fuel = fuel.0 + 4;
        let d = (f(&diagonal, f_fuel).approx(p) - f(&x0, f_fuel).approx(p)).abs();
        if d > threshold {
            // Apartness certified: recover the witness within fuel.
            match mu_search(g, fuel) {
                OracleOutcome::Found { witness, consumed } => {
                    OracleOutcome::Found { witness, consumed }
                }
                // Apartness fired just beyond the budget; report honestly.
                OracleOutcome::ExhaustedAt { budget } => OracleOutcome::ExhaustedAt { budget },
            }
        } else {
            OracleOutcome::ExhaustedAt { budget: fuel.0 }
        }
    };
    Ok(Functional2 {
        detector: Arc::new(detector),
    })
}

/// The black-box refuter for a co-semi-decidable set: `refute(x, t)` is
/// true when stage `t` witnesses `x ∉ D`.
pub type Refuter = Arc<dyn Fn(&BinSeq, u64) -> bool + Send + Sync>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainOutcome {
    InD { steps: u64 },
    NotInD { steps: u64 },
    NeedFuel { budget: u64 },
}

fn domain_scan(
    alpha: &Associate,
    refuter: &Refuter,
    x: &BinSeq,
    fuel: Fuel,
    mut observe: impl FnMut(u64, &'static str, String, &str),
) -> Result<DomainOutcome, OracleError> {
    let xb = BaireSeq::from(x);
    for t in 0..=fuel.0 {
        let sigma_side = eval_assoc(alpha, &xb, t);
        match &sigma_side {
            AssocOutcome::Inconsistent { first, second } => {
                return Err(OracleError::InconsistentAssociate {
                    first: first.clone(),
                    second: second.clone(),
                });
            }
            _ => {}
        }
        let sigma_hit = sigma_side.is_value();
        observe(
            t,
            "dovetail-sigma",
            format!("eval_assoc@{t}"),
            if sigma_hit { "defined" } else { "pending" },
        );
        let pi_hit = refuter(x, t);
        observe(
            t,
            "dovetail-pi",
            format!("refuter@{t}"),
            if pi_hit { "refuted" } else { "pending" },
        );
        match (sigma_hit, pi_hit) {
            (true, true) => return Err(OracleError::BothCertified { step: t }),
            (true, false) => return Ok(DomainOutcome::InD { steps: t }),
            (false, true) => return Ok(DomainOutcome::NotInD { steps: t }),
            (false, false) => {}
        }
    }
    Ok(DomainOutcome::NeedFuel { budget: fuel.0 })
}

/// Decide `x ∈ D` by dovetailing, one step per side and per round, the
/// semi-decidable "the associate is defined at `x`" against the
/// refuter's counterexample search. Under the hypothesis that the
/// associate's domain is exactly `D`, one side must certifyeventually;
/// the step count of the certifying side is reported as a hardness proxy.
pub fn domain_decider(
    alpha: &Associate,
    refuter: &Refuter,
    x: &BinSeq,
    fuel: Fuel,
) -> Result<DomainOutcome, OracleError> {
    domain_scan(alpha, refuter, x, fuel, |_, _, _, _| {})
}

pub fn domain_decider_trace(
    alpha: &Associate,
    refuter: &Refuter,
    x: &BinSeq,
    fuel: Fuel,
) -> (Result<DomainOutcome, OracleError>, Vec<Probe>) {
    let mut probes = Vec::new();
    let out = domain_scan(alpha, refuter, x, fuel, |step, kind, input, outcome| {
        probes.push(Probe {
            step,
            kind,
            input,
            outcome: outcome.to_string(),
        });
    });
    (out, probes)
}

/// What the witness search produced within its budget.
pub enum ContinuityEvidence {
    Modulus(Modulus),
    Discontinuity {
        f: FuelledRealFn,
        x0: RealCode,
        seq: Arc<dyn Fn(u32) -> RealCode + Send + Sync>,
        delta: Rat,
    },
    Exhausted {
        modulus_transcript: Vec<String>,
        discontinuity_transcript: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Continuous,
    Discontinuous,
}

#[derive(Debug)]
pub enum DispatchOutcome<T> {
    Solved { result: T, branch: Branch },
    NeedFuel {
        modulus_transcript: Vec<String>,
        discontinuity_transcript: Vec<String>,
    },
}

#[derive(Debug)]
pub enum DispatchError<E> {
    Branch { branch: Branch, error: E },
    Witness(OracleError),
}

impl<E: fmt::Display> fmt::Display for DispatchError<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DispatchError::Branch { branch, error } => {
                write!(f, "{branch:?} branch failed: {error}")
            }
            DispatchError::Witness(e) => write!(f, "witness extraction failed: {e}"),
        }
    }
}

/// The dual-strategy dispatch: run the witness source; a modulus routes
/// the task to the continuous method, a discontinuity witness is
/// compiled by [`grilliot_extract`] and routed to the discontinuous
/// method, and exhaustion returns both partial transcripts.
pub fn em_dispatch<T, E, W, C, D>(
    witness_source: W,
    cont_method: C,
    disc_method: D,
    fuel: Fuel,
) -> Result<DispatchOutcome<T>, DispatchError<E>>
where
    W: FnOnce(Fuel) -> ContinuityEvidence,
    C: FnOnce(Modulus) -> Result<T, E>,
    D: FnOnce(Functional2) -> Result<T, E>,
{
    match witness_source(fuel) {
        ContinuityEvidence::Modulus(omega) => match cont_method(omega) {
            Ok(result) => Ok(DispatchOutcome::Solved {
                result,
                branch: Branch::Continuous,
            }),
            Err(error) => Err(DispatchError::Branch {
                branch: Branch::Continuous,
                error,
            }),
        },
        ContinuityEvidence::Discontinuity { f, x0, seq, delta } => {
            let functional = grilliot_extract(f, x0, seq, delta, fuel.0)
                .map_err(DispatchError::Witness)?;
            match disc_method(functional) {
                Ok(result) => Ok(DispatchOutcome::Solved {
                    result,
                    branch: Branch::Discontinuous,
                }),
                Err(error) => Err(DispatchError::Branch {
                    branch: Branch::Discontinuous,
                    error,
                }),
            }
        }
        ContinuityEvidence::Exhausted {
            modulus_transcript,
            discontinuity_transcript,
        } => Ok(DispatchOutcome::NeedFuel {
            modulus_transcript,
            discontinuity_transcript,
        }),
    }
}

/// The step surrogate used throughout the demos: certifies `x > 0` by
/// scanning approximants within its internal fuel and returns 1, else
/// falls back to 0. A genuine step function is not computable; the
/// internal budget is what makes this one a usable black box.
pub fn step_surrogate() -> FuelledRealFn {
    Arc::new(|x: &RealCode, fuel: u64| {
        for k in 0..=fuel.min(64) as u32 {
            let a = x.approx(k);
            if a - Rat::pow2(-(k as i32)) > Rat::zero() {
                return crate::real::real_from_rational(Rat::one());
            }
        }
        crate::real::real_from_rational(Rat::zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::real_from_rational;

    #[test]
    fn mu_finds_least_zero() {
        let f = BaireSeq::from_entries(&[1, 1, 0, 1], 1);
        assert_eq!(
            mu_search(&f, Fuel(10)),
            OracleOutcome::Found {
                witness: 2,
                consumed: 3
            }
        );
        let zero_first = BaireSeq::from_entries(&[0], 7);
        assert_eq!(mu_search(&zero_first, Fuel(5)).witness(), Some(0));
    }

    #[test]
    fn mu_exhausts_honestly() {
        let ones = BaireSeq::from_fn(|_| 1);
        assert_eq!(
            mu_search(&ones, Fuel(10)),
            OracleOutcome::ExhaustedAt { budget: 10 }
        );
    }

    #[test]
    fn mu_trace_records_probes() {
        let f = BaireSeq::from_entries(&[5, 0], 9);
        let (out, probes) = mu_search_trace(&f, Fuel(8));
        assert_eq!(out.witness(), Some(1));
        assert_eq!(probes.len(), 2);
        assert_eq!(probes[1].outcome, "hit");
    }

    #[test]
    fn exists2_matches_mu_exhaustively() {
        // All f with support in the first 12 positions (1 beyond).
        for mask in 0u64..(1 << 12) {
            let f = BaireSeq::from_fn(move |n| {
                if n < 12 {
                    (mask >> n) & 1
                } else {
                    1
                }
            });
            // Invert: look for zeros where mask bit is 0.
            assert_eq!(mu_search(&f, Fuel(12)), exists2_search(&f, Fuel(12)));
        }
    }

    #[test]
    fn exists2_examples() {
        let f = BaireSeq::from_entries(&[5, 0], 9);
        assert_eq!(exists2_search(&f, Fuel(8)).witness(), Some(1));
        let inverted_char_3 = BaireSeq::from_fn(|n| if n == 3 { 0 } else { 1 });
        assert_eq!(exists2_search(&inverted_char_3, Fuel(10)).witness(), Some(3));
    }

    #[test]
    fn suslin_zero_function_survives() {
        for d in 0..5 {
            match suslin_depth_check(|_| 0, d) {
                SuslinOutcome::SurvivesTo { depth, witness } => {
                    assert_eq!(depth, d);
                    assert_eq!(witness.entries(), vec![0; d as usize]);
                }
                other => panic!("expected survival, got {other:?}"),
            }
        }
    }

    #[test]
    fn suslin_rejecting_nonempty_dies_at_one() {
        let out = suslin_depth_check(|s| if s.is_empty() { 0 } else { 1 }, 4);
        assert_eq!(out, SuslinOutcome::NoPathOfLength(1));
    }

    #[test]
    fn suslin_identity_prefixes() {
        let accepts_identity = |s: &FinSeq| {
            let ok = s.entries().iter().enumerate().all(|(i, &e)| e == i as u64);
            if ok {
                0
            } else {
                1
            }
        };
        match suslin_depth_check(accepts_identity, 3) {
            SuslinOutcome::SurvivesTo { witness, .. } => {
                assert_eq!(witness, FinSeq::new(vec![0, 1, 2]));
            }
            other => panic!("expected survival, got {other:?}"),
        }
    }

    #[test]
    fn kappa0_examples() {
        // Y(f) = f(0) at depth 1: zero at prefix (0).
        let out = kappa0_search(|f: &BinSeq| f.at(0) as u64, 1).unwrap();
        assert_eq!(out, Kappa0Outcome::Found(FinSeq::new(vec![0])));

        let none = kappa0_search(|_| 1, 2).unwrap();
        assert_eq!(none, Kappa0Outcome::NoneAtDepth(2));

        // Y(f) = 1 − f(2) at depth 3: least prefix (0,0,1).
        let out = kappa0_search(|f: &BinSeq| 1 - f.at(2) as u64, 3).unwrap();
        assert_eq!(out, Kappa0Outcome::Found(FinSeq::new(vec![0, 0, 1])));
    }

    #[test]
    fn kappa0_matches_brute_force_and_is_decisive() {
        for m in 0..=10u32 {
            // A family of prefix-determined functionals: parity of the
            // first m bits xor a mask test.
            let y = move |f: &BinSeq| {
                let sum: u64 = (0..m as u64).map(|n| f.at(n) as u64).sum();
                if sum == (m as u64) / 2 {
                    0
                } else {
                    1
                }
            };
            let brute = (0..(1u64 << m)).find(|code| {
                let bits: Vec<u8> = (0..m).rev().map(|b| ((code >> b) & 1) as u8).collect();
                y(&BinSeq::from_bits(&bits)) == 0
            });
            match (kappa0_search(y, m).unwrap(), brute) {
                (Kappa0Outcome::Found(prefix), Some(code)) => {
                    let bits: Vec<u64> = (0..m).rev().map(|b| (code >> b) & 1).collect();
                    assert_eq!(prefix, FinSeq::new(bits));
                }
                (Kappa0Outcome::NoneAtDepth(_), None) => {}
                (got, want) => panic!("mismatch: {got:?} vs brute {want:?}"),
            }
        }
    }

    #[test]
    fn kappa0_detects_modulus_violation() {
        // Depends on bit 3 despite declared depth 2.
        let y = |f: &BinSeq| f.at(3) as u64;
        assert!(matches!(
            kappa0_search(y, 2),
            Err(OracleError::ModulusViolation { .. })
        ));
    }

    fn step_witness() -> (FuelledRealFn, RealCode, Arc<dyn Fn(u32) -> RealCode + Send + Sync>) {
        (
            step_surrogate(),
            real_from_rational(Rat::zero()),
            Arc::new(|n: u32| real_from_rational(Rat::pow2(-(n as i32)))),
        )
    }

    #[test]
    fn grilliot_agrees_with_exists2_on_short_supports() {
        let (f, x0, seq) = step_witness();
        let functional = grilliot_extract(f, x0, seq, Rat::one(), 32).unwrap();
        // Exhaustive over all g with support in the first 6 positions.
        for mask in 0u64..(1 << 6) {
            let g = BaireSeq::from_fn(move |n| if n < 6 { (mask >> n) & 1 } else { 1 });
            let expected = exists2_search(&g, Fuel(6));
            let got = functional.apply(&g, Fuel(6));
            assert_eq!(got.witness(), expected.witness(), "mask {mask:b}");
        }
    }

    #[test]
    fn grilliot_constant_sequences() {
        let (f, x0, seq) = step_witness();
        let functional = grilliot_extract(f, x0, seq, Rat::one(), 32).unwrap();
        let zeros = BaireSeq::from_fn(|_| 0);
        assert_eq!(functional.apply(&zeros, Fuel(8)).witness(), Some(0));
        let ones = BaireSeq::from_fn(|_| 1);
        assert_eq!(
            functional.apply(&ones, Fuel(8)),
            OracleOutcome::ExhaustedAt { budget: 8 }
        );
    }

    #[test]
    fn grilliot_rejects_bad_witness() {
        let f = step_surrogate();
        let x0 = real_from_rational(Rat::zero());
        // Sequence that does not converge to x0.
        let seq = Arc::new(|_: u32| real_from_rational(Rat::one()));
        assert!(matches!(
            grilliot_extract(f, x0, seq, Rat::one(), 16),
            Err(OracleError::WitnessInvalid { .. })
        ));

        // Converges, but the function does not jump: constant evaluator.
        let flat: FuelledRealFn = Arc::new(|_, _| real_from_rational(Rat::zero()));
        let x0 = real_from_rational(Rat::zero());
        let seq = Arc::new(|n: u32| real_from_rational(Rat::pow2(-(n as i32))));
        assert!(matches!(
            grilliot_extract(flat, x0, seq, Rat::one(), 16),
            Err(OracleError::WitnessInvalid { .. })
        ));
    }

    #[test]
    fn grilliot_diagonal_is_fast_cauchy() {
        let (_, x0, seq) = step_witness();
        for mask in [0u64, 1, 2, 5, 32, 63] {
            let g = BaireSeq::from_fn(move |n| if n < 6 { (mask >> n) & 1 } else { 1 });
            let x0 = x0.clone();
            let seq = seq.clone();
            let diag = RealCode::from_fn(Provenance::Arithmetic, move |k| {
                let least_zero = (0..k as u64).find(|&m| g.at(m) == 0);
                match least_zero {
                    Some(m) => seq(m as u32 + 2).approx(k + 2),
                    None => x0.approx(k + 2),
                }
            });
            for n in 0..16u32 {
                for i in 1..=(16 - n) {
                    let gap = (diag.approx(n) - diag.approx(n + i)).abs();
                    assert!(gap < Rat::pow2(-(n as i32)), "n={n} i={i} mask={mask}");
                }
            }
        }
    }

    fn prefix_pair(sigma: &[u64]) -> (Associate, Refuter) {
        let sigma_vec = sigma.to_vec();
        let mut alpha = Associate::new();
        alpha.insert(FinSeq::new(sigma_vec.clone()), 1);
        let refuter: Refuter = Arc::new(move |x: &BinSeq, t: u64| {
            (t as usize) < sigma_vec.len() && x.at(t) as u64 != sigma_vec[t as usize]
        });
        (alpha, refuter)
    }

    #[test]
    fn decider_total_code_everything_in() {
        let mut alpha = Associate::new();
        alpha.insert(FinSeq::empty(), 1);
        let refuter: Refuter = Arc::new(|_, _| false);
        let x = BinSeq::from_bits(&[1, 0, 1]);
        assert_eq!(
            domain_decider(&alpha, &refuter, &x, Fuel(10)).unwrap(),
            DomainOutcome::InD { steps: 0 }
        );
    }

    #[test]
    fn decider_refuter_wins() {
        let alpha = Associate::new();
        let refuter: Refuter = Arc::new(|_, t| t == 3);
        let x = BinSeq::zeros();
        assert_eq!(
            domain_decider(&alpha, &refuter, &x, Fuel(10)).unwrap(),
            DomainOutcome::NotInD { steps: 3 }
        );
    }

    #[test]
    fn decider_prefix_family() {
        let (alpha, refuter) = prefix_pair(&[0]);
        let inside = BinSeq::from_bits(&[0, 1, 1]);
        let outside = BinSeq::from_fn(|_| 1);
        assert!(matches!(
            domain_decider(&alpha, &refuter, &inside, Fuel(10)).unwrap(),
            DomainOutcome::InD { .. }
        ));
        assert!(matches!(
            domain_decider(&alpha, &refuter, &outside, Fuel(10)).unwrap(),
            DomainOutcome::NotInD { steps: 0 }
        ));
    }

    #[test]
    fn decider_flags_violated_hypothesis() {
        // Associate defined at x while the refuter also fires: the
        // domain-equality hypothesis cannot hold.
        let mut alpha = Associate::new();
        alpha.insert(FinSeq::empty(), 1);
        let refuter: Refuter = Arc::new(|_, _| true);
        let x = BinSeq::zeros();
        assert!(matches!(
            domain_decider(&alpha, &refuter, &x, Fuel(10)),
            Err(OracleError::BothCertified { step: 0 })
        ));
    }

    #[test]
    fn decider_monotone_certification() {
        let (alpha, refuter) = prefix_pair(&[0, 1]);
        let x = BinSeq::from_bits(&[0, 1, 0]);
        let mut last: Option<DomainOutcome> = None;
        for budget in 0..8 {
            match domain_decider(&alpha, &refuter, &x, Fuel(budget)).unwrap() {
                DomainOutcome::NeedFuel { .. } => {
                    assert!(last.is_none(), "certified outcome regressed");
                }
                certified => {
                    if let Some(prev) = &last {
                        assert_eq!(prev, &certified);
                    }
                    last = Some(certified);
                }
            }
        }
        assert!(matches!(last, Some(DomainOutcome::InD { .. })));
    }

    #[test]
    fn dispatch_continuous_branch() {
        let out: Result<DispatchOutcome<u32>, DispatchError<String>> = em_dispatch(
            |_| ContinuityEvidence::Modulus(Modulus::identity()),
            |omega| Ok(omega.at(3)),
            |_| unreachable!("discontinuous branch must not run"),
            Fuel(10),
        );
        match out.unwrap() {
            DispatchOutcome::Solved { result, branch } => {
                assert_eq!(result, 3);
                assert_eq!(branch, Branch::Continuous);
            }
            other => panic!("expected solved, got {other:?}"),
        }
    }

    #[test]
    fn dispatch_discontinuous_branch() {
        let (f, x0, seq) = step_witness();
        let out: Result<DispatchOutcome<Option<u64>>, DispatchError<String>> = em_dispatch(
            move |_| ContinuityEvidence::Discontinuity {
                f,
                x0,
                seq,
                delta: Rat::one(),
            },
            |_| unreachable!("continuous branch must not run"),
            |functional| {
                let g = BaireSeq::from_entries(&[1, 1, 0], 1);
                Ok(functional.apply(&g, Fuel(8)).witness())
            },
            Fuel(16),
        );
        match out.unwrap() {
            DispatchOutcome::Solved { result, branch } => {
                assert_eq!(result, Some(2));
                assert_eq!(branch, Branch::Discontinuous);
            }
            other => panic!("expected solved, got {other:?}"),
        }
    }

    #[test]
    fn dispatch_zero_fuel_reports_transcripts() {
        let out: Result<DispatchOutcome<u32>, DispatchError<String>> = em_dispatch(
            |fuel| ContinuityEvidence::Exhausted {
                modulus_transcript: vec![format!("modulus search stopped at {}", fuel.0)],
                discontinuity_transcript: vec!["no jump found".into()],
            },
            |_| unreachable!(),
            |_| unreachable!(),
            Fuel(0),
        );
        match out.unwrap() {
            DispatchOutcome::NeedFuel {
                modulus_transcript,
                discontinuity_transcript,
            } => {
                assert_eq!(modulus_transcript.len(), 1);
                assert_eq!(discontinuity_transcript.len(), 1);
            }
            other => panic!("expected need-fuel, got {other:?}"),
        }
    }

    #[test]
    fn dispatch_is_deterministic() {
        let run = || {
            let (f, x0, seq) = step_witness();
            let out: Result<DispatchOutcome<Option<u64>>, DispatchError<String>> = em_dispatch(
                move |_| ContinuityEvidence::Discontinuity {
                    f,
                    x0,
                    seq,
                    delta: Rat::one(),
                },
                |_| Err("unused".to_string()),
                |functional| {
                    let g = BaireSeq::from_entries(&[1, 0], 1);
                    Ok(functional.apply(&g, Fuel(6)).witness())
                },
                Fuel(12),
            );
            match out.unwrap() {
                DispatchOutcome::Solved { result, branch } => (result, branch),
                _ => panic!("expected solved"),
            }
        };
        assert_eq!(run(), run());
    }
}
