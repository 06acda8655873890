//! Workbench for exact real arithmetic and second-order codings of
//! continuous functions.
//!
//! The central objects are:
//!
//! * [`rational::Rat`] — arbitrary-precision rationals, the only scalar
//!   type used anywhere (no floating point).
//! * [`real::RealCode`] — a real number coded as a fast-converging Cauchy
//!   sequence of rationals: `|q_n − q_{n+i}| < 2^{−n}` for all `n, i`.
//! * [`seq`] — Cantor space `2^ℕ`, Baire space `ℕ^ℕ`, finite sequences,
//!   and depth-bounded tree searches.
//! * [`fncode`] — associates and neighborhood-condition codes for
//!   continuous (partial) functions, with evaluation, construction from
//!   a modulus of uniform continuity, and modulus extraction.
//! * [`sepclosed`] — closed sets coded by countable dense sequences,
//!   with fuel-bounded membership and gap search.
//! * [`extend`] — extension and approximation pipelines: Tietze-style
//!   gap interpolation, one-point extension, Bernstein approximation,
//!   and exhaustive minimizer search on Cantor/Baire prefixes.
//! * [`oracle`] — fuel-bounded approximants of type-two search
//!   functionals, a dovetailing domain decider, and the dual-strategy
//!   dispatch combinator.
//!
//! Every search that would be unbounded in principle carries an explicit
//! fuel or depth budget, and exhaustion is a first-class outcome rather
//! than an error.

pub mod extend;
pub mod fncode;
pub mod oracle;
pub mod rational;
pub mod real;
pub mod sepclosed;
pub mod seq;

pub use rational::Rat;
pub use real::RealCode;
