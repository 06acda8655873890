//! Coding round trips over the whole function suite.
//!
//! Underhead: compiling a function-with-modulus into a neighborhood
//! code loses at most one precision bit — evaluating the code at any
//! dyadic point returns a value within `2^{−k+1}` of the function.
//! Overhead: a modulus recovered from the compiled code is a valid
//! modulus for the original function (sampled; the acceptance suite
//! covers this direction at volume).

use cauchy_cli::builtins::SUITE;
use cauchy_core::fncode::{code_from_modulus, eval_code, modulus_from_code, CodeOutcome};
use cauchy_core::rational::Rat;
use cauchy_core::real::real_from_rational;

#[test]
fn coding_underhead_on_the_suite() {
    // Blocks for k ≤ 6 under the identity modulus end at index 515.
    let fuel = 600u64;
    for f in SUITE {
        let code = code_from_modulus(f.code_fn(), &f.modulus(), 6);
        for k in 0..=6u32 {
            for i in 0..=(1u64 << 6) {
                let x = Rat::new(i.into(), (1u64 << 6).into()).unwrap();
                match eval_code(&code, &real_from_rational(x.clone()), k, fuel) {
                    CodeOutcome::Value { value, .. } => {
                        let err = (value - f.eval_exact(&x)).abs();
                        assert!(
                            err <= Rat::pow2(-(k as i32) + 1),
                            "{} at x = {x}, k = {k}: error {err}",
                            f.name
                        );
                    }
                    other => panic!("{} at x = {x}, k = {k}: {other:?}", f.name),
                }
            }
        }
    }
}

#[test]
fn coding_overhead_on_the_suite() {
    for f in SUITE {
        let code = code_from_modulus(f.code_fn(), &f.modulus(), 5);
        for k in 0..=2u32 {
            let kp = modulus_from_code(&code, k, 1 << 12).expect("covering subfamily exists");
            // Validity on a dyadic sweep: adjacent pairs strictly closer
            // than 2^{−kp}.
            let depth = kp + 1;
            let step = Rat::pow2(-(depth as i32 + 1));
            for i in 0..(1u64 << depth) {
                let x = Rat::new(i.into(), (1u64 << depth).into()).unwrap();
                let y = &x + &step;
                let gap = (f.eval_exact(&x) - f.eval_exact(&y)).abs();
                assert!(
                    gap < Rat::pow2(-(k as i32)),
                    "{}: modulus w({k}) = {kp} violated at {x}",
                    f.name
                );
            }
        }
    }
}
