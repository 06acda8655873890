//! Extension and approximation pipelines over separably closed sets.
//!
//! * [`tietze_extend`] — extend a function given on a separably closed
//!   set to a queried point: pass values through on witnessed members,
//!   interpolate linearly across complement gaps, clamp to a constant
//!   where a gap touches the ambient boundary.
//! * [`one_point_extend`] — extend across a single limit point, given an
//!   explicit vanishing modulus for `lim_{x→0⁺} f(x) = 0`.
//! * [`bernstein_approx`] — Bernstein polynomial approximation with a
//!   certified error bound driven by the modulus of uniform continuity.
//! * [`ekeland_search`] / [`ekeland_search_baire`] — exhaustive
//!   `ε`-minimizer search over sequence-space prefixes under a prefix
//!   modulus. The Baire-space variant demands an explicit branching
//!   bound; the unbounded problem is refused by contract.
//!
//! Every operation that needs continuity takes it as an explicit modulus
//! argument. Without that enrichment these operations have no finitary
//! implementation at all, which is precisely why it is demanded up front.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fncode::Modulus;
use crate::rational::Rat;
use crate::real::{self, RealCode};
use crate::sepclosed::{complement_gap_indexed, member_search, IndexedGap, MembershipOutcome, SepClosedSet};
use crate::seq::{BaireSeq, BinSeq};

/// Outcome of a fuel-bounded extension query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendOutcome {
    Value { value: Rat, precision: u32 },
    NeedFuel,
}

impl ExtendOutcome {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            ExtendOutcome::Value { value, .. } => Some(value),
            ExtendOutcome::NeedFuel => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendError {
    /// Queried values contradicted the declared modulus at certified
    /// precision.
    InconsistentModulus {
        distance_bound: Rat,
        value_gap: Rat,
        level: u32,
    },
    DegreeBudgetExceeded { degree: u64, cap: u64 },
    DepthBudgetExceeded { depth: u32, budget: u32 },
    /// The candidate count of a bounded Baire search overflowed the fan
    /// budget.
    SearchSpaceTooLarge { branching: u64, depth: u32 },
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::InconsistentModulus {
                distance_bound,
                value_gap,
                level,
            } => write!(
                f,
                "values {value_gap} apart on points within {distance_bound} violate the modulus at level {level}"
            ),
            ExtendError::DegreeBudgetExceeded { degree, cap } => {
                write!(f, "Bernstein degree {degree} exceeds cap {cap}; lower the precision")
            }
            ExtendError::DepthBudgetExceeded { depth, budget } => {
                write!(f, "search depth {depth} exceeds fan budget {budget}")
            }
            ExtendError::SearchSpaceTooLarge { branching, depth } => {
                write!(f, "{branching}^{depth} candidates exceed the fan budget")
            }
        }
    }
}

impl std::error::Error for ExtendError {}

/// A partial function: a black-box evaluator trusted only on points of
/// `S̄`, together with the set and a modulus of uniform continuity valid
/// on `S̄`. The modulus is the explicit constructive enrichment that
/// makes extension computable.
#[derive(Clone)]
pub struct PartialFnOnSet {
    evaluator: Arc<dyn Fn(&RealCode) -> RealCode + Send + Sync>,
    set: SepClosedSet,
    modulus: Modulus,
}

impl PartialFnOnSet {
    pub fn new<F>(evaluator: F, set: SepClosedSet, modulus: Modulus) -> PartialFnOnSet
    where
        F: Fn(&RealCode) -> RealCode + Send + Sync + 'static,
    {
        PartialFnOnSet {
            evaluator: Arc::new(evaluator),
            set,
            modulus,
        }
    }

    pub fn eval(&self, x: &RealCode) -> RealCode {
        (self.evaluator)(x)
    }

    pub fn set(&self) -> &SepClosedSet {
        &self.set
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }
}

/// Check a queried pair against the declared modulus: an error is raised
/// only when, at certified precision, the points are provably close and
/// the values provably far for some level `k₀ ≤ k`.
fn check_pair_against_modulus(
    xl: &RealCode,
    xr: &RealCode,
    vl: &RealCode,
    vr: &RealCode,
    omega: &Modulus,
    k: u32,
) -> Result<(), ExtendError> {
    let p = k + 3;
    let slack = Rat::pow2(-(p as i32) + 1);
    let distance_bound = (xl.approx(p) - xr.approx(p)).abs() + &slack;
    let value_gap = (vl.approx(p) - vr.approx(p)).abs() - &slack;
    for level in 0..=k {
        if distance_bound < Rat::pow2(-(omega.at(level) as i32))
            && value_gap > Rat::pow2(-(level as i32))
        {
            return Err(ExtendError::InconsistentModulus {
                distance_bound,
                value_gap,
                level,
            });
        }
    }
    Ok(())
}

/// Extend `f` to the point `x` at precision `k`.
///
/// Membership witnessed to level `k+2` passes the evaluator through.
/// Otherwise a complement gap is searched; across an interior gap the
/// extension interpolates linearly between the values at the certified
/// set-adjacent endpoints, and a gap touching the ambient boundary 0/1
/// extends by the constant value of its one set-adjacent endpoint.
pub fn tietze_extend(
    f: &PartialFnOnSet,
    x: &RealCode,
    k: u32,
    fuel: u64,
) -> Result<ExtendOutcome, ExtendError> {
    if let MembershipOutcome::WitnessedUpTo { .. } = member_search(x, &f.set, k + 2, fuel) {
        return Ok(ExtendOutcome::Value {
            value: f.eval(x).approx(k),
            precision: k,
        });
    }
    match complement_gap_indexed(x, &f.set, k, fuel) {
        IndexedGap::Inconclusive => Ok(ExtendOutcome::NeedFuel),
        IndexedGap::Gap {
            lo,
            hi,
            left_index,
            right_index,
        } => {
            let left = left_index.and_then(|i| f.set.point(i));
            let right = right_index.and_then(|i| f.set.point(i));
            match (left, right) {
                (None, None) => Ok(ExtendOutcome::NeedFuel),
                (Some(xl), None) => Ok(ExtendOutcome::Value {
                    value: f.eval(&xl).approx(k),
                    precision: k,
                }),
                (None, Some(xr)) => Ok(ExtendOutcome::Value {
                    value: f.eval(&xr).approx(k),
                    precision: k,
                }),
                (Some(xl), Some(xr)) => {
                    let vl = f.eval(&xl);
                    let vr = f.eval(&xr);
                    check_pair_against_modulus(&xl, &xr, &vl, &vr, &f.modulus, k)?;
                    // v = vl + (x − lo)·(vr − vl)/(hi − lo), anchored at
                    // the snapped rational endpoints.
                    let width = &hi - &lo;
                    let t = real::scale(
                        &real::shift_by(x, &-&lo),
                        &width.recip(),
                    );
                    let v = real::add(&vl, &real::mul(&t, &real::sub(&vr, &vl)));
                    Ok(ExtendOutcome::Value {
                        value: v.approx(k),
                        precision: k,
                    })
                }
            }
        }
    }
}

/// A vanishing modulus for `lim_{x→0⁺} f(x) = 0`: a rational `δ_k > 0`
/// for each `k` with `0 < x < δ_k ⟹ |f(x)| < 2^{−k}`.
#[derive(Clone)]
pub struct VanishingModulus {
    delta: Arc<dyn Fn(u32) -> Rat + Send + Sync>,
}

impl VanishingModulus {
    pub fn from_fn<F>(delta: F) -> VanishingModulus
    where
        F: Fn(u32) -> Rat + Send + Sync + 'static,
    {
        VanishingModulus {
            delta: Arc::new(delta),
        }
    }

    pub fn delta(&self, k: u32) -> Rat {
        let d = (self.delta)(k);
        assert!(d.is_positive(), "vanishing modulus must be positive");
        d
    }
}

/// Extend `f : (0,1) → ℝ` across 0 with value 0.
///
/// A point certified apart from 0 evaluates through `f`; a point
/// certified below `δ_{k+1}` takes value 0, sound because `|f| < 2^{−k−1}`
/// there; anything else needs a better code or lower precision.
pub fn one_point_extend<F>(f: F, nu: &VanishingModulus, x: &RealCode, k: u32) -> ExtendOutcome
where
    F: Fn(&RealCode) -> RealCode,
{
    let p = k + 3;
    let xa = x.approx(p);
    if xa.abs() > Rat::pow2(-(p as i32) + 1) {
        return ExtendOutcome::Value {
            value: f(x).approx(k),
            precision: k,
        };
    }
    if &xa + &Rat::pow2(-(p as i32)) < nu.delta(k + 1) {
        return ExtendOutcome::Value {
            value: Rat::zero(),
            precision: k,
        };
    }
    ExtendOutcome::NeedFuel
}

pub const DEGREE_CAP: u64 = 4096;

/// A polynomial in Bernstein form with a certified sup-error bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyApprox {
    coefficients: Vec<Rat>,
    degree: u64,
    /// Certified bound `2^{−error_exp}` on `sup |F − p|` over `[0,1]`.
    pub error_exp: u32,
}

impl PolyApprox {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    /// Exact rational evaluation of `Σ c_i C(m,i) x^i (1−x)^{m−i}`.
    ///
    /// With `x = u/q` the integer terms `T_i = C(m,i) u^i (q−u)^{m−i}`
    /// satisfy `T_{i+1} = T_i (m−i) u / ((i+1)(q−u))` with exact
    /// division, so the whole sum needs one rational reduction at the end.
    pub fn eval_exact(&self, x: &Rat) -> Rat {
        let m = self.degree;
        if m == 0 {
            return self.coefficients[0].clone();
        }
        let u = x.numer().clone();
        let q = x.denom().clone();
        let v: BigInt = &q - &u;
        if u.is_zero() {
            return self.coefficients[0].clone();
        }
        if v.is_zero() {
            return self.coefficients[m as usize].clone();
        }
        let common: BigInt = self
            .coefficients
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut term = num_traits::Pow::pow(&v, m as u32);
        let mut sum = BigInt::zero();
        for i in 0..=m {
            let scaled = self.coefficients[i as usize].numer() * (&common / self.coefficients[i as usize].denom());
            sum += &scaled * &term;
            if i < m {
                term = term * (m - i) * &u / (&v * (i + 1));
            }
        }
        let denom = common * num_traits::Pow::pow(&q, m as u32);
        Rat::new(sum, denom).expect("positive denominator")
    }
}

/// Sample `F` on the uniform degree-`m` grid: `c_i = [F(i/m)](prec)`.
pub fn bernstein_at_degree<F>(f: F, m: u64, sample_precision: u32, error_exp: u32) -> PolyApprox
where
    F: Fn(&Rat) -> RealCode,
{
    let coefficients = (0..=m)
        .map(|i| {
            let node = Rat::new(i.into(), m.max(1).into()).unwrap();
            f(&node).approx(sample_precision)
        })
        .collect();
    PolyApprox {
        coefficients,
        degree: m,
        error_exp,
    }
}

/// Bernstein approximation to within `2^{−n}` on `[0,1]`.
///
/// Degree `m = 4^{ω(n+2)}` makes `ω_F(m^{−1/2}) ≤ 2^{−(n+2)}`, so the
/// classical estimate `|B_m F − F| ≤ (3/2)·ω_F(m^{−1/2})` plus the
/// coefficient sampling slack `2^{−(n+3)}` stays below `2^{−n}`.
pub fn bernstein_approx<F>(f: F, omega: &Modulus, n: u32) -> Result<PolyApprox, ExtendError>
where
    F: Fn(&Rat) -> RealCode,
{
    let exponent = omega.at(n + 2);
    let degree = 4u64
        .checked_pow(exponent)
        .ok_or(ExtendError::DegreeBudgetExceeded {
            degree: u64::MAX,
            cap: DEGREE_CAP,
        })?;
    if degree > DEGREE_CAP {
        return Err(ExtendError::DegreeBudgetExceeded {
            degree,
            cap: DEGREE_CAP,
        });
    }
    Ok(bernstein_at_degree(f, degree, n + 3, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleStatus {
    Pass,
    Marginal,
    Violation,
}

/// Per-point comparison of `F` against `p` on enumerated set points.
#[derive(Clone, Debug)]
pub struct RestrictReport {
    pub samples: Vec<(Rat, SampleStatus)>,
    pub violations: u64,
}

/// Check `|F − p| < 2^{−n}` on the first `samples` enumerated points of
/// `S`, each replaced by its rational approximant at precision `n+3`.
/// Statuses are certified: `Violation` and `Pass` hold for the true
/// values, `Marginal` means the margin was thinner than the slack.
pub fn restrict_check<F>(
    p: &PolyApprox,
    f: F,
    set: &SepClosedSet,
    n: u32,
    samples: u64,
) -> RestrictReport
where
    F: Fn(&Rat) -> RealCode,
{
    let slack = Rat::pow2(-(n as i32) - 3);
    let bound = Rat::pow2(-(n as i32));
    let mut report = RestrictReport {
        samples: Vec::new(),
        violations: 0,
    };
    for idx in 0..samples {
        let Some(point) = set.point(idx) else { break };
        let xq = point.approx(n + 3);
        let d = (f(&xq).approx(n + 3) - p.eval_exact(&xq)).abs();
        let status = if &d - &slack >= bound {
            report.violations += 1;
            SampleStatus::Violation
        } else if &d + &slack < bound {
            SampleStatus::Pass
        } else {
            SampleStatus::Marginal
        };
        report.samples.push((xq, status));
    }
    report
}

/// A potential on a sequence space, with a prefix modulus: sequences
/// agreeing on their first `ω(k)` entries have values within `2^{−k}`.
#[derive(Clone)]
pub struct Potential<S> {
    evaluator: Arc<dyn Fn(&S) -> RealCode + Send + Sync>,
    modulus: Modulus,
}

pub type CantorPotential = Potential<BinSeq>;
pub type BairePotential = Potential<BaireSeq>;

impl<S> Potential<S> {
    pub fn new<F>(evaluator: F, modulus: Modulus) -> Potential<S>
    where
        F: Fn(&S) -> RealCode + Send + Sync + 'static,
    {
        Potential {
            evaluator: Arc::new(evaluator),
            modulus,
        }
    }

    pub fn eval(&self, s: &S) -> RealCode {
        (self.evaluator)(s)
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }
}

/// The certificate accompanying a minimizer: every scanned candidate's
/// value approximant was at least `min_approx`, all at the stated
/// working precision, which implies `P(f*) ≤ inf P + 2^{−k}` through the
/// prefix modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkelandCertificate {
    pub depth: u32,
    pub scanned: u64,
    pub work_precision: u32,
    pub epsilon_exp: u32,
    pub min_approx: Rat,
}

#[derive(Clone)]
pub struct EkelandOutcome<S> {
    pub minimizer: S,
    pub value: RealCode,
    pub certificate: EkelandCertificate,
}

/// Exhaustive `ε`-minimizer search on Cantor space: evaluate the
/// potential on every depth-`ω(k+1)` binary prefix (extended by zeros)
/// and return the lexicographically least minimizer of the value
/// approximants at working precision `k+3`.
pub fn ekeland_search(
    p: &CantorPotential,
    k: u32,
    fan_budget: u32,
) -> Result<EkelandOutcome<BinSeq>, ExtendError> {
    let depth = p.modulus().at(k + 1);
    if depth > fan_budget {
        return Err(ExtendError::DepthBudgetExceeded {
            depth,
            budget: fan_budget,
        });
    }
    let wp = k + 3;
    let mut best: Option<(Rat, u64)> = None;
    let total = 1u64 << depth;
    for code in 0..total {
        let bits: Vec<u8> = (0..depth).rev().map(|b| ((code >> b) & 1) as u8).collect();
        let candidate = BinSeq::from_bits(&bits);
        let val = p.eval(&candidate).approx(wp);
        match &best {
            Some((cur, _)) if *cur <= val => {}
            _ => best = Some((val, code)),
        }
    }
    let (min_approx, code) = best.expect("at least the all-zero candidate");
    let bits: Vec<u8> = (0..depth).rev().map(|b| ((code >> b) & 1) as u8).collect();
    let minimizer = BinSeq::from_bits(&bits);
    let value = p.eval(&minimizer);
    Ok(EkelandOutcome {
        minimizer,
        value,
        certificate: EkelandCertificate {
            depth,
            scanned: total,
            work_precision: wp,
            epsilon_exp: k,
            min_approx,
        },
    })
}

/// Re-verify an Ekeland certificate by re-enumerating the candidates.
pub fn verify_ekeland_certificate(
    p: &CantorPotential,
    outcome: &EkelandOutcome<BinSeq>,
) -> bool {
    let cert = &outcome.certificate;
    let total = 1u64 << cert.depth;
    for code in 0..total {
        let bits: Vec<u8> = (0..cert.depth).rev().map(|b| ((code >> b) & 1) as u8).collect();
        let g = BinSeq::from_bits(&bits);
        let val = p.eval(&g).approx(cert.work_precision);
        // Exhaustive optimality at the working precision; this implies
        // the ε-certificate `P(f*) ≤ P(g) + 2^{−k}` with room to spare.
        if cert.min_approx > val {
            return false;
        }
    }
    true
}

/// Bounded-branching Ekeland search on Baire space. The branching bound
/// is a declared hypothesis: minimizers outside `{0..B−1}^ℕ` are out of
/// reach, and the unbounded problem is refused by contract.
pub fn ekeland_search_baire(
    p: &BairePotential,
    branching: u64,
    k: u32,
    fan_budget: u32,
) -> Result<EkelandOutcome<BaireSeq>, ExtendError> {
    assert!(branching >= 1, "branching bound must be at least 1");
    let depth = p.modulus().at(k + 1);
    if depth > fan_budget {
        return Err(ExtendError::DepthBudgetExceeded {
            depth,
            budget: fan_budget,
        });
    }
    let total = branching
        .checked_pow(depth)
        .filter(|&t| t <= 1u64 << fan_budget.min(62))
        .ok_or(ExtendError::SearchSpaceTooLarge { branching, depth })?;
    let wp = k + 3;
    let mut best: Option<(Rat, Vec<u64>)> = None;
    let mut entries = vec![0u64; depth as usize];
    for _ in 0..total {
        let candidate = BaireSeq::from_entries(&entries, 0);
        let val = p.eval(&candidate).approx(wp);
        match &best {
            Some((cur, _)) if *cur <= val => {}
            _ => best = Some((val, entries.clone())),
        }
        // Next prefix in lexicographic order (most significant first).
        for slot in (0..entries.len()).rev() {
            entries[slot] += 1;
            if entries[slot] < branching {
                break;
            }
            entries[slot] = 0;
        }
    }
    let (min_approx, prefix) = best.unwrap_or((
        p.eval(&BaireSeq::from_entries(&[], 0)).approx(wp),
        Vec::new(),
    ));
    let minimizer = BaireSeq::from_entries(&prefix, 0);
    let value = p.eval(&minimizer);
    Ok(EkelandOutcome {
        minimizer,
        value,
        certificate: EkelandCertificate {
            depth,
            scanned: total,
            work_precision: wp,
            epsilon_exp: k,
            min_approx,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::real_from_rational;
    use crate::seq::embed_real;

    fn two_interval_set() -> SepClosedSet {
        SepClosedSet::union(
            &SepClosedSet::rationals_in(Rat::zero(), Rat::ratio(1, 3)),
            &SepClosedSet::rationals_in(Rat::ratio(2, 3), Rat::one()),
        )
    }

    /// 0 on the left part, 1 on the right part; any positive gap keeps
    /// this uniformly continuous on the set with modulus ω(k) = k + 2.
    fn step_on_parts() -> PartialFnOnSet {
        PartialFnOnSet::new(
            |x: &RealCode| {
                let q = x.approx(4);
                if q < Rat::ratio(1, 2) {
                    real_from_rational(Rat::zero())
                } else {
                    real_from_rational(Rat::one())
                }
            },
            two_interval_set(),
            Modulus::shifted(2),
        )
    }

    #[test]
    fn tietze_interpolates_across_the_gap() {
        let f = step_on_parts();
        let x = real_from_rational(Rat::ratio(1, 2));
        match tietze_extend(&f, &x, 4, 4000).unwrap() {
            ExtendOutcome::Value { value, precision } => {
                assert_eq!(precision, 4);
                // Interpolation oracle: endpoints snap to 1/3 and 2/3
                // (both enumerated), so the midpoint value is 1/2.
                assert!((value - Rat::ratio(1, 2)).abs() <= Rat::pow2(-4));
            }
            ExtendOutcome::NeedFuel => panic!("expected a value"),
        }
    }

    #[test]
    fn tietze_passes_members_through() {
        let f = step_on_parts();
        let x = real_from_rational(Rat::ratio(1, 6));
        match tietze_extend(&f, &x, 4, 4000).unwrap() {
            ExtendOutcome::Value { value, .. } => assert_eq!(value, Rat::zero()),
            ExtendOutcome::NeedFuel => panic!("expected a value"),
        }
    }

    #[test]
    fn tietze_clamps_at_boundary() {
        let f = PartialFnOnSet::new(
            |_| real_from_rational(Rat::zero()),
            SepClosedSet::from_rationals(vec![Rat::zero()], true),
            Modulus::identity(),
        );
        let x = real_from_rational(Rat::one());
        match tietze_extend(&f, &x, 4, 100).unwrap() {
            ExtendOutcome::Value { value, .. } => assert_eq!(value, Rat::zero()),
            ExtendOutcome::NeedFuel => panic!("expected a value"),
        }
    }

    #[test]
    fn tietze_agreement_on_witnessed_members() {
        let f = step_on_parts();
        let k = 6;
        for n in 0..50 {
            let point = f.set().point(n).unwrap();
            if let MembershipOutcome::WitnessedUpTo { .. } =
                member_search(&point, f.set(), k + 2, 4000)
            {
                let extended = tietze_extend(&f, &point, k, 4000).unwrap();
                let direct = f.eval(&point).approx(k);
                let value = extended.value().expect("member evaluates");
                assert!((value - &direct).abs() < Rat::pow2(-(k as i32) + 1));
            }
        }
    }

    #[test]
    fn tietze_rejects_modulus_violations() {
        // Values jump by 1 across points only 1/32 apart while the
        // declared modulus is 1-Lipschitz: the queried pair must trip
        // the check at level 4.
        let set = SepClosedSet::from_rationals(
            vec![Rat::ratio(31, 64), Rat::ratio(33, 64)],
            true,
        );
        let f = PartialFnOnSet::new(
            |x: &RealCode| {
                let q = x.approx(12);
                if q < Rat::ratio(1, 2) {
                    real_from_rational(Rat::zero())
                } else {
                    real_from_rational(Rat::one())
                }
            },
            set,
            Modulus::identity(),
        );
        let x = real_from_rational(Rat::ratio(1, 2));
        match tietze_extend(&f, &x, 6, 100) {
            Err(ExtendError::InconsistentModulus { .. }) => {}
            other => panic!("expected modulus violation, got {other:?}"),
        }
    }

    #[test]
    fn one_point_extension_examples() {
        let square = |x: &RealCode| real::mul(x, x);
        let nu = VanishingModulus::from_fn(|k| Rat::pow2(-(k.div_ceil(2) as i32)));

        let at_zero = one_point_extend(square, &nu, &real_from_rational(Rat::zero()), 4);
        assert_eq!(at_zero.value(), Some(&Rat::zero()));

        let at_half = one_point_extend(square, &nu, &real_from_rational(Rat::ratio(1, 2)), 6);
        let v = at_half.value().expect("apart from zero");
        assert!((v - &Rat::ratio(1, 4)).abs() < Rat::pow2(-6));

        // Below-threshold branch: x = 2^{−10} with δ_4 = 2^{−2}.
        let tiny = one_point_extend(square, &nu, &real_from_rational(Rat::pow2(-10)), 3);
        assert_eq!(tiny.value(), Some(&Rat::zero()));
    }

    #[test]
    fn one_point_threshold_branch_is_sound() {
        let square = |x: &RealCode| real::mul(x, x);
        let nu = VanishingModulus::from_fn(|k| Rat::pow2(-(k.div_ceil(2) as i32)));
        for k in 0..=8u32 {
            let delta = nu.delta(k + 1);
            for j in 1..=16i64 {
                let x = &delta * &Rat::ratio(j, 17);
                let out = one_point_extend(square, &nu, &real_from_rational(x.clone()), k);
                if let Some(v) = out.value() {
                    // |f̃(x) − f̃(0)| < 2^{−k+1}: true value x² < δ²  ≤ 2^{−k−1}.
                    assert!(v.abs() < Rat::pow2(-(k as i32) + 1), "x = {x}, v = {v}");
                }
            }
        }
    }

    #[test]
    fn bernstein_reproduces_identity_exactly() {
        let p = bernstein_approx(
            |q| real_from_rational(q.clone()),
            &Modulus::identity(),
            2,
        )
        .unwrap();
        for i in 0..=16i64 {
            let x = Rat::ratio(i, 16);
            assert_eq!(p.eval_exact(&x), x);
        }
    }

    #[test]
    fn bernstein_degree_two_of_square() {
        // Direct Bernstein formula: B₂(x²) = (x + x²)/2, value 3/8 at 1/2.
        let p = bernstein_at_degree(
            |q| real_from_rational(q * q),
            2,
            8,
            0,
        );
        let half = Rat::ratio(1, 2);
        assert_eq!(p.eval_exact(&half), Rat::ratio(3, 8));
        let err = (p.eval_exact(&half) - &half * &half).abs();
        assert_eq!(err, Rat::ratio(1, 8));
        // Spot-check the closed form on the whole dyadic grid.
        for i in 0..=8i64 {
            let x = Rat::ratio(i, 8);
            let expect = (&x + &(&x * &x)) * Rat::ratio(1, 2);
            assert_eq!(p.eval_exact(&x), expect);
        }
    }

    #[test]
    fn bernstein_constant_reproduction() {
        let p = bernstein_approx(
            |_| real_from_rational(Rat::ratio(1, 2)),
            &Modulus::constant(0),
            3,
        )
        .unwrap();
        for i in 0..=8i64 {
            assert_eq!(p.eval_exact(&Rat::ratio(i, 8)), Rat::ratio(1, 2));
        }
    }

    #[test]
    fn bernstein_degree_budget() {
        // ω(k) = k + 4 forces degree 4^9 past the cap at n = 3.
        let out = bernstein_approx(
            |q| real_from_rational(q.clone()),
            &Modulus::shifted(4),
            3,
        );
        assert!(matches!(out, Err(ExtendError::DegreeBudgetExceeded { .. })));
    }

    #[test]
    fn restrict_check_flags_zero_polynomial() {
        let zero = PolyApprox {
            coefficients: vec![Rat::zero(), Rat::zero()],
            degree: 1,
            error_exp: 1,
        };
        let set = SepClosedSet::rationals_in(Rat::zero(), Rat::one());
        let report = restrict_check(&zero, |_| real_from_rational(Rat::one()), &set, 1, 20);
        assert_eq!(report.violations, 20);
    }

    #[test]
    fn restrict_check_empty_prefix_is_vacuous() {
        let zero = PolyApprox {
            coefficients: vec![Rat::zero()],
            degree: 0,
            error_exp: 1,
        };
        let set = SepClosedSet::from_rationals(vec![], false);
        let report = restrict_check(&zero, |_| real_from_rational(Rat::one()), &set, 1, 20);
        assert!(report.samples.is_empty());
        assert_eq!(report.violations, 0);
    }

    #[test]
    fn restrict_check_accepts_bernstein_output() {
        let f = |q: &Rat| real_from_rational(Rat::one() - q);
        let p = bernstein_approx(f, &Modulus::identity(), 3).unwrap();
        let set = SepClosedSet::rationals_in(Rat::zero(), Rat::one());
        let report = restrict_check(&p, f, &set, 3, 50);
        assert_eq!(report.violations, 0);
    }

    #[test]
    fn ekeland_embedding_potential() {
        let p = CantorPotential::new(|f: &BinSeq| embed_real(f), Modulus::shifted(1));
        let out = ekeland_search(&p, 3, 16).unwrap();
        assert_eq!(out.certificate.depth, 5);
        assert!(out.minimizer.support().unwrap().iter().all(|&b| b == 0));
        assert_eq!(out.value.approx(10), Rat::zero());
        assert_eq!(out.certificate.min_approx, Rat::zero());
        assert!(verify_ekeland_certificate(&p, &out));
    }

    #[test]
    fn ekeland_first_bit_potential() {
        let p = CantorPotential::new(
            |f: &BinSeq| {
                real_from_rational(if f.at(0) == 0 { Rat::zero() } else { Rat::one() })
            },
            Modulus::constant(1),
        );
        let out = ekeland_search(&p, 3, 16).unwrap();
        assert_eq!(out.certificate.depth, 1);
        assert_eq!(out.minimizer.at(0), 0);
        assert_eq!(out.value.approx(6), Rat::zero());
    }

    #[test]
    fn ekeland_constant_potential_tie_break() {
        let c = Rat::ratio(2, 7);
        let cc = c.clone();
        let p = CantorPotential::new(
            move |_: &BinSeq| real_from_rational(cc.clone()),
            Modulus::constant(3),
        );
        let out = ekeland_search(&p, 2, 16).unwrap();
        assert!(out.minimizer.support().unwrap().iter().all(|&b| b == 0));
        assert_eq!(out.value.approx(8), c);
    }

    #[test]
    fn ekeland_depth_budget() {
        let p = CantorPotential::new(|f: &BinSeq| embed_real(f), Modulus::shifted(1));
        assert!(matches!(
            ekeland_search(&p, 20, 16),
            Err(ExtendError::DepthBudgetExceeded { .. })
        ));
    }

    #[test]
    fn ekeland_optimality_is_exhaustive() {
        let p = CantorPotential::new(
            |f: &BinSeq| {
                // Value favors a 1 in position 1: r(f) shifted to reward
                // specific patterns, still prefix-determined at depth 4.
                let penalty = if f.at(1) == 1 { Rat::zero() } else { Rat::ratio(1, 2) };
                real_from_rational(penalty + Rat::ratio(f.at(0) as i64, 4))
            },
            Modulus::constant(4),
        );
        let out = ekeland_search(&p, 4, 16).unwrap();
        // Brute-force oracle over all depth-4 prefixes.
        let mut best: Option<(Rat, Vec<u8>)> = None;
        for code in 0..16u64 {
            let bits: Vec<u8> = (0..4).rev().map(|b| ((code >> b) & 1) as u8).collect();
            let g = BinSeq::from_bits(&bits);
            let val = p.eval(&g).approx(7);
            match &best {
                Some((cur, _)) if *cur <= val => {}
                _ => best = Some((val, bits)),
            }
        }
        let (expect_val, expect_bits) = best.unwrap();
        assert_eq!(out.certificate.min_approx, expect_val);
        assert_eq!(out.minimizer.support().unwrap(), &expect_bits[..]);
    }

    #[test]
    fn ekeland_baire_first_entry() {
        let p = BairePotential::new(
            |g: &BaireSeq| real_from_rational(Rat::pow2(-(g.at(0) as i32))),
            Modulus::constant(1),
        );
        let out = ekeland_search_baire(&p, 4, 2, 16).unwrap();
        assert_eq!(out.minimizer.at(0), 3);
        assert_eq!(out.value.approx(8), Rat::ratio(1, 8));
        assert_eq!(out.certificate.scanned, 4);
    }

    #[test]
    fn ekeland_baire_degenerate_branching() {
        let p = BairePotential::new(
            |g: &BaireSeq| real_from_rational(Rat::from_int(g.at(0) as i64)),
            Modulus::constant(2),
        );
        let out = ekeland_search_baire(&p, 1, 2, 16).unwrap();
        assert_eq!(out.minimizer.prefix(4), crate::seq::FinSeq::new(vec![0, 0, 0, 0]));
        assert_eq!(out.certificate.scanned, 1);
    }

    #[test]
    fn ekeland_baire_agrees_with_cantor_on_binary() {
        let cantor = CantorPotential::new(|f: &BinSeq| embed_real(f), Modulus::shifted(1));
        let baire = BairePotential::new(
            |g: &BaireSeq| {
                let g = g.clone();
                embed_real(&BinSeq::from_fn(move |n| g.at(n).min(1) as u8))
            },
            Modulus::shifted(1),
        );
        let co = ekeland_search(&cantor, 3, 16).unwrap();
        let bo = ekeland_search_baire(&baire, 2, 3, 16).unwrap();
        assert_eq!(co.certificate.min_approx, bo.certificate.min_approx);
        assert_eq!(
            co.minimizer.prefix(co.certificate.depth as u64),
            bo.minimizer.prefix(bo.certificate.depth as u64)
        );
    }
}
