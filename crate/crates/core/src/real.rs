//! Real numbers coded as fast-converging Cauchy sequences of rationals.
//!
//! A [`RealCode`] is a total map from a precision index `k` to a rational
//! approximant `q_k`, subject to the fast-Cauchy condition
//! `|q_n − q_{n+i}| < 2^{−n}` for all `n, i`. Every constructor here
//! preserves that condition by shifting the precision at which operands
//! are sampled; [`hat_normalize`] turns an arbitrary rational sequence
//! into a valid code by freezing it at the first violation.
//!
//! Approximants are memoized per code. The cache is only an optimization:
//! generators are pure, so recomputation yields the same value and codes
//! are safe to share across threads.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::rational::Rat;

/// How a code was built; informational only, never consulted by arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Constant,
    Arithmetic,
    Embedded,
    Normalized,
}

struct Inner {
    generator: Box<dyn Fn(u32) -> Rat + Send + Sync>,
    cache: Mutex<BTreeMap<u32, Rat>>,
    provenance: Provenance,
}

/// A real number as a fast-converging Cauchy sequence of rationals.
#[derive(Clone)]
pub struct RealCode {
    inner: Arc<Inner>,
}

impl RealCode {
    pub fn from_fn<F>(provenance: Provenance, generator: F) -> RealCode
    where
        F: Fn(u32) -> Rat + Send + Sync + 'static,
    {
        RealCode {
            inner: Arc::new(Inner {
                generator: Box::new(generator),
                cache: Mutex::new(BTreeMap::new()),
                provenance,
            }),
        }
    }

    /// The `k`-th approximant `[x](k)`. The returned rational is within
    /// `2^{−k}` of the coded real.
    pub fn approx(&self, k: u32) -> Rat {
        if let Some(hit) = self.inner.cache.lock().unwrap().get(&k) {
            return hit.clone();
        }
        // Compute outside the lock: generators may recursively query
        // other codes (or this one at other indices).
        let value = (self.inner.generator)(k);
        self.inner
            .cache
            .lock()
            .unwrap()
            .entry(k)
            .or_insert(value)
            .clone()
    }

    pub fn provenance(&self) -> Provenance {
        self.inner.provenance
    }
}

impl fmt::Debug for RealCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealCode({:?}, q_4 = {})", self.provenance(), self.approx(4))
    }
}

/// The constant sequence at `q`.
pub fn real_from_rational(q: Rat) -> RealCode {
    RealCode::from_fn(Provenance::Constant, move |_| q.clone())
}

/// Make any rational sequence a real: scan indices `m = 1, 2, …` for the
/// first `m` such that some `n < m` has `|raw(n) − raw(m)| ≥ 2^{−n}`, and
/// freeze the output at `raw(m−1)` from there on. A sequence that is
/// already fast-Cauchy passes through unchanged.
pub fn hat_normalize<F>(raw: F) -> RealCode
where
    F: Fn(u32) -> Rat + Send + Sync + 'static,
{
    let memo: Mutex<Vec<Rat>> = Mutex::new(Vec::new());
    RealCode::from_fn(Provenance::Normalized, move |k| {
        let mut seen = memo.lock().unwrap();
        while seen.len() <= k as usize {
            let next = raw(seen.len() as u32);
            seen.push(next);
        }
        for m in 1..=k as usize {
            for n in 0..m {
                if (&seen[n] - &seen[m]).abs() >= Rat::pow2(-(n as i32)) {
                    return seen[m - 1].clone();
                }
            }
        }
        seen[k as usize].clone()
    })
}

/// `z(k) = x(k+1) + y(k+1)`.
pub fn add(x: &RealCode, y: &RealCode) -> RealCode {
    let (x, y) = (x.clone(), y.clone());
    RealCode::from_fn(Provenance::Arithmetic, move |k| {
        x.approx(k + 1) + y.approx(k + 1)
    })
}

pub fn neg(x: &RealCode) -> RealCode {
    let x = x.clone();
    RealCode::from_fn(Provenance::Arithmetic, move |k| -x.approx(k))
}

pub fn sub(x: &RealCode, y: &RealCode) -> RealCode {
    add(x, &neg(y))
}

pub fn abs(x: &RealCode) -> RealCode {
    let x = x.clone();
    RealCode::from_fn(Provenance::Arithmetic, move |k| x.approx(k).abs())
}

/// `z(k) = x(k+p)·y(k+p)` where the shift `p` is computed from the
/// operand bound `B = ⌈|x(0)|⌉ + ⌈|y(0)|⌉ + 2`: fast-Cauchy forces
/// `|x| ≤ |x(0)| + 1`, so `p = ⌈log₂ B⌉ + 1` absorbs the cross terms.
pub fn mul(x: &RealCode, y: &RealCode) -> RealCode {
    let bound = x.approx(0).abs().ceil_int() + y.approx(0).abs().ceil_int() + 2;
    let shift = Rat::new(bound, 1.into()).unwrap().ceil_log2() + 1;
    let (x, y) = (x.clone(), y.clone());
    RealCode::from_fn(Provenance::Arithmetic, move |k| {
        x.approx(k + shift) * y.approx(k + shift)
    })
}

/// Multiply by an exact rational.
pub fn scale(x: &RealCode, q: &Rat) -> RealCode {
    if q.is_zero() {
        return real_from_rational(Rat::zero());
    }
    let shift = q.abs().ceil_log2();
    let (x, q) = (x.clone(), q.clone());
    RealCode::from_fn(Provenance::Arithmetic, move |k| &x.approx(k + shift) * &q)
}

/// Add an exact rational.
pub fn shift_by(x: &RealCode, q: &Rat) -> RealCode {
    let (x, q) = (x.clone(), q.clone());
    RealCode::from_fn(Provenance::Arithmetic, move |k| x.approx(k) + q.clone())
}

/// Which side of an apartness test fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApartSign {
    /// `x < y` certified.
    Negative,
    /// `x > y` certified.
    Positive,
}

/// Outcome of comparing two codes at finite precision. Equality of codes
/// is refutable but never confirmable, so the positive outcome only says
/// the approximants stayed within the apartness threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealComparison {
    Apart { sign: ApartSign, precision: u32 },
    IndistinguishableAt(u32),
}

/// Declare apartness at precision `k` when `|x(k) − y(k)| > 2^{−k+2}`.
/// The threshold leaves one bit of slack over the coded-equality band
/// `2^{−k+1}`, so `Apart` soundly refutes equality of the reals.
pub fn eq_upto(x: &RealCode, y: &RealCode, k: u32) -> RealComparison {
    let diff = x.approx(k) - y.approx(k);
    if diff.abs() > Rat::pow2(-(k as i32) + 2) {
        let sign = match diff.sign() {
            Ordering::Less => ApartSign::Negative,
            _ => ApartSign::Positive,
        };
        RealComparison::Apart { sign, precision: k }
    } else {
        RealComparison::IndistinguishableAt(k)
    }
}
