//! Separably closed sets: closed subsets of `[0,1]` coded by a countable
//! dense point sequence.
//!
//! Membership `x ∈ S̄` means every `2^{−k}`-ball around `x` meets the
//! sequence — a `∀∃` statement that no finite procedure decides. All
//! queries here are therefore fuel-bounded and three-valued at heart:
//! witnessed up to a level, or no witness at some level within fuel.

use std::fmt;
use std::sync::Mutex;
use std::sync::Arc;

use crate::rational::Rat;
use crate::real::{real_from_rational, RealCode};

enum PointSource {
    Finite(Vec<RealCode>),
    // Restartable stream: produced prefix is memoized so indexing is
    // stable and cheap on rescans.
    Stream(Mutex<StreamState>),
}

struct StreamState {
    produced: Vec<RealCode>,
    iter: Box<dyn Iterator<Item = RealCode> + Send>,
    done: bool,
}

/// A separably closed set `S̄ ⊆ [0,1]`, coded by its dense sequence.
/// The `exhaustive` flag marks finitely-presented sets whose enumeration
/// prefix is complete; only then may a positive lower distance bound be
/// reported.
#[derive(Clone)]
pub struct SepClosedSet {
    points: Arc<PointSource>,
    exhaustive: bool,
}

impl SepClosedSet {
    pub fn from_points(points: Vec<RealCode>, exhaustive: bool) -> SepClosedSet {
        SepClosedSet {
            points: Arc::new(PointSource::Finite(points)),
            exhaustive,
        }
    }

    pub fn from_rationals(points: Vec<Rat>, exhaustive: bool) -> SepClosedSet {
        SepClosedSet::from_points(points.into_iter().map(real_from_rational).collect(), exhaustive)
    }

    pub fn from_stream<I>(iter: I) -> SepClosedSet
    where
        I: Iterator<Item = RealCode> + Send + 'static,
    {
        SepClosedSet {
            points: Arc::new(PointSource::Stream(Mutex::new(StreamState {
                produced: Vec::new(),
                iter: Box::new(iter),
                done: false,
            }))),
            exhaustive: false,
        }
    }

    /// All rationals of `[lo, hi]` in a fixed zig-zag order: ascending
    /// denominator, then ascending numerator, reduced forms only.
    pub fn rationals_in(lo: Rat, hi: Rat) -> SepClosedSet {
        assert!(lo <= hi);
        SepClosedSet::from_stream(rationals_between(lo, hi).map(real_from_rational))
    }

    /// Interleave two enumerations (even indices from the first).
    pub fn union(left: &SepClosedSet, right: &SepClosedSet) -> SepClosedSet {
        let (left, right) = (left.clone(), right.clone());
        let mut i = 0u64;
        let iter = std::iter::from_fn(move || {
            let pick = if i % 2 == 0 { &left } else { &right };
            let other = if i % 2 == 0 { &right } else { &left };
            let idx = i / 2;
            i += 1;
            pick.point(idx).or_else(|| other.point(idx))
        });
        SepClosedSet::from_stream(iter)
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// The `n`-th enumerated point, or `None` past the end of a finite
    /// enumeration.
    pub fn point(&self, n: u64) -> Option<RealCode> {
        match self.points.as_ref() {
            PointSource::Finite(v) => v.get(n as usize).cloned(),
            PointSource::Stream(state) => {
                let mut state = state.lock().unwrap();
                while state.produced.len() <= n as usize && !state.done {
                    match state.iter.next() {
                        Some(x) => state.produced.push(x),
                        None => state.done = true,
                    }
                }
                state.produced.get(n as usize).cloned()
            }
        }
    }
}

impl fmt::Debug for SepClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SepClosedSet(exhaustive = {})", self.exhaustive)
    }
}

fn rationals_between(lo: Rat, hi: Rat) -> impl Iterator<Item = Rat> + Send {
    let mut denom: i64 = 0;
    let mut numers: std::vec::IntoIter<i64> = Vec::new().into_iter();
    std::iter::from_fn(move || loop {
        if let Some(p) = numers.next() {
            return Some(Rat::ratio(p, denom));
        }
        denom += 1;
        if denom > 1_000_000 {
            return None;
        }
        let lo_p = (&lo * &Rat::from_int(denom)).ceil_int();
        let hi_p = (&hi * &Rat::from_int(denom)).ceil_int();
        let denom_big = num_bigint::BigInt::from(denom);
        let mut batch = Vec::new();
        let mut p = lo_p.clone();
        loop {
            let q = Rat::new(p.clone(), denom_big.clone()).unwrap();
            if q > hi {
                break;
            }
            if q >= lo {
                // Skip non-reduced forms: they appeared at a smaller
                // denominator already.
                if q.denom() == &denom_big {
                    batch.push(i64::try_from(&p).expect("desk-scale numerator"));
                }
            }
            p += 1;
            if p > hi_p {
                break;
            }
        }
        numers = batch.into_iter();
    })
}

/// Outcome of a fuel-bounded membership search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipOutcome {
    /// For each level `k ≤ K`, witness index `n_k` with
    /// `|x − x_{n_k}| < 2^{−k}` certified at precision `k+3`.
    WitnessedUpTo { level: u32, witnesses: Vec<u64> },
    /// No enumerated point among the first `fuel` certifies the `2^{−k}`
    /// ball at the stated level.
    NoWitnessAt { level: u32, fuel: u64 },
}

/// For each level `k ≤ K`, find the first index `n < fuel` with a
/// certified witness `|x − x_n| < 2^{−k}`: the distance of approximants
/// must clear `2^{−k} − 2^{−k−2}`, leaving slack for the approximation
/// error at the working precision `K+3 ≥ k+3`.
///
/// The level thresholds are nested, so one pass over the enumeration
/// suffices: each point is tested against the least still-unwitnessed
/// level, and higher levels fail exactly when the whole prefix fails
/// them. The reported witness per level equals the one a per-level
/// rescan would find.
pub fn member_search(
    x: &RealCode,
    set: &SepClosedSet,
    max_level: u32,
    fuel: u64,
) -> MembershipOutcome {
    let p = max_level + 3;
    let xa = x.approx(p);
    let thresholds: Vec<Rat> = (0..=max_level)
        .map(|k| Rat::pow2(-(k as i32)) - Rat::pow2(-(k as i32) - 2))
        .collect();
    let mut witnesses = Vec::with_capacity(max_level as usize + 1);
    let mut next_level = 0u32;
    'scan: for n in 0..fuel {
        let Some(point) = set.point(n) else { break };
        let d = (&xa - &point.approx(p)).abs();
        while d < thresholds[next_level as usize] {
            witnesses.push(n);
            next_level += 1;
            if next_level > max_level {
                break 'scan;
            }
        }
    }
    if next_level > max_level {
        MembershipOutcome::WitnessedUpTo {
            level: max_level,
            witnesses,
        }
    } else {
        MembershipOutcome::NoWitnessAt {
            level: next_level,
            fuel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetError {
    EmptyEnumeration,
}

impl fmt::Display for SetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetError::EmptyEnumeration => write!(f, "the set enumerates no points within fuel"),
        }
    }
}

impl std::error::Error for SetError {}

/// Working precision for distance bounds: approximants at `2^{−9}` give
/// a combined slack of `2^{−8}` per distance.
const DIST_PRECISION: u32 = 9;

/// Certified bounds on `d(x, S̄)` from the first `fuel` points. The lower
/// bound is 0 unless the enumeration is declared exhaustive — later
/// points may come arbitrarily close.
pub fn dist_bounds(x: &RealCode, set: &SepClosedSet, fuel: u64) -> Result<(Rat, Rat), SetError> {
    let slack = Rat::pow2(-(DIST_PRECISION as i32 - 1));
    let xa = x.approx(DIST_PRECISION);
    let mut min_d: Option<Rat> = None;
    for n in 0..fuel {
        let Some(point) = set.point(n) else { break };
        let d = (&xa - &point.approx(DIST_PRECISION)).abs();
        min_d = Some(match min_d {
            None => d,
            Some(cur) => cur.min(d),
        });
    }
    let Some(min_d) = min_d else {
        return Err(SetError::EmptyEnumeration);
    };
    let upper = &min_d + &slack;
    let lower = if set.is_exhaustive() {
        (min_d - slack).max(Rat::zero())
    } else {
        Rat::zero()
    };
    Ok((lower, upper))
}

/// A rational interval around `x` free of scanned points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapOutcome {
    /// No point among the scanned prefix is certified inside `(lo, hi)`;
    /// each endpoint is within `2^{−k}` of an enumerated point or is an
    /// ambient endpoint 0/1.
    GapInterval { lo: Rat, hi: Rat },
    /// Some scanned point could not be separated from `x` at this
    /// precision.
    Inconclusive,
}

/// Search the complement: split the first `fuel` points into those
/// certified left and right of `x` at precision `k+3`, and snap the gap
/// endpoints to the innermost certified approximants (or to 0/1 when a
/// side is empty).
pub fn complement_gap(x: &RealCode, set: &SepClosedSet, k: u32, fuel: u64) -> GapOutcome {
    match complement_gap_indexed(x, set, k, fuel) {
        IndexedGap::Gap { lo, hi, .. } => GapOutcome::GapInterval { lo, hi },
        IndexedGap::Inconclusive => GapOutcome::Inconclusive,
    }
}

/// Gap search that also reports which enumerated points the endpoints
/// snapped to; the extension pipeline queries the coded function there.
pub(crate) enum IndexedGap {
    Gap {
        lo: Rat,
        hi: Rat,
        left_index: Option<u64>,
        right_index: Option<u64>,
    },
    Inconclusive,
}

pub(crate) fn complement_gap_indexed(
    x: &RealCode,
    set: &SepClosedSet,
    k: u32,
    fuel: u64,
) -> IndexedGap {
    let p = k + 3;
    let separation = Rat::pow2(-(p as i32) + 1);
    let xa = x.approx(p);
    let mut left: Option<(Rat, u64)> = None;
    let mut right: Option<(Rat, u64)> = None;
    for n in 0..fuel {
        let Some(point) = set.point(n) else { break };
        let pa = point.approx(p);
        let delta = &pa - &xa;
        if delta.abs() <= separation {
            return IndexedGap::Inconclusive;
        }
        if delta.is_negative() {
            if left.as_ref().map(|(lo, _)| &pa > lo).unwrap_or(true) {
                left = Some((pa, n));
            }
        } else if right.as_ref().map(|(hi, _)| &pa < hi).unwrap_or(true) {
            right = Some((pa, n));
        }
    }
    let (lo, left_index) = match left {
        Some((pa, n)) => (pa, Some(n)),
        None => (Rat::zero(), None),
    };
    let (hi, right_index) = match right {
        Some((pa, n)) => (pa, Some(n)),
        None => (Rat::one(), None),
    };
    IndexedGap::Gap {
        lo,
        hi,
        left_index,
        right_index,
    }
}
