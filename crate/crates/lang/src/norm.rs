//! Normal-order reduction and bracket abstraction.
//!
//! Reduction rules: `Π x y ▷ x`, `Σ x y z ▷ x z (y z)`, the recursor
//! `R₀ f m 0 ▷ m` and `R₀ f m (n+1) ▷ f n (R₀ f m n)`, and numeral
//! arithmetic for `+ * < =`. Normal order (leftmost-outermost) finds the
//! normal form whenever one exists within the step budget; the budget is
//! purely pragmatic since every well-typed term here normalizes.

use std::fmt;

use crate::check::{typecheck, TypeError};
use crate::term::{Const, Term};
use crate::ty::FiniteType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormError {
    BudgetExceeded { steps: u64 },
    IllTyped(TypeError),
}

impl fmt::Display for NormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormError::BudgetExceeded { steps } => {
                write!(f, "no normal form within {steps} reduction steps")
            }
            NormError::IllTyped(e) => write!(f, "ill-typed term: {e}"),
        }
    }
}

impl std::error::Error for NormError {}

/// One leftmost-outermost step, or `None` if `t` is in normal form.
fn step(t: &Term) -> Option<Term> {
    let (head, args) = t.spine();
    match head {
        Term::Const(Const::Pi(_, _)) if args.len() >= 2 => {
            return Some(Term::apply_all(args[0].clone(), args[2..].iter().map(|a| (*a).clone())));
        }
        Term::Const(Const::Sigma(_, _, _)) if args.len() >= 3 => {
            let x = args[0].clone();
            let y = args[1].clone();
            let z = args[2].clone();
            let contracted = Term::app(Term::app(x, z.clone()), Term::app(y, z));
            return Some(Term::apply_all(
                contracted,
                args[3..].iter().map(|a| (*a).clone()),
            ));
        }
        Term::Const(Const::Rec0) if args.len() >= 3 => {
            if let Some(n) = args[2].as_numeral() {
                let f = args[0].clone();
                let m = args[1].clone();
                let contracted = if n == 0 {
                    m
                } else {
                    // R₀ f m (n+1) = f n (R₀ f m n)
                    let prev = Term::apply_all(
                        Term::Const(Const::Rec0),
                        [f.clone(), m, Term::num(n - 1)],
                    );
                    Term::apply_all(f, [Term::num(n - 1), prev])
                };
                return Some(Term::apply_all(
                    contracted,
                    args[3..].iter().map(|a| (*a).clone()),
                ));
            }
        }
        Term::Const(c @ (Const::Plus | Const::Times | Const::Less | Const::EqNat))
            if args.len() >= 2 =>
        {
            if let (Some(a), Some(b)) = (args[0].as_numeral(), args[1].as_numeral()) {
                let value = match c {
                    Const::Plus => a + b,
                    Const::Times => a * b,
                    Const::Less => u64::from(a < b),
                    Const::EqNat => u64::from(a == b),
                    _ => unreachable!(),
                };
                return Some(Term::apply_all(
                    Term::num(value),
                    args[2..].iter().map(|a| (*a).clone()),
                ));
            }
        }
        _ => {}
    }
    // No head redex: recurse left to right, outermost first.
    match t {
        Term::App(f, a) => {
            if let Some(f2) = step(f) {
                return Some(Term::app(f2, (**a).clone()));
            }
            step(a).map(|a2| Term::app((**f).clone(), a2))
        }
        _ => None,
    }
}

/// Reduce to normal form within the step budget.
pub fn normalize(t: &Term, step_budget: u64) -> Result<Term, NormError> {
    let mut current = t.clone();
    for _ in 0..step_budget {
        match step(&current) {
            Some(next) => current = next,
            None => return Ok(current),
        }
    }
    if step(&current).is_none() {
        Ok(current)
    } else {
        Err(NormError::BudgetExceeded {
            steps: step_budget,
        })
    }
}

/// Bracket abstraction: compile away one variable, producing a
/// combinator term with no free occurrence of it. The β-law
/// `normalize((λx.body) a) = normalize(body[x := a])` is the contract.
///
/// Rules (with type bookkeeping):
/// `[x]t = Π t` when `x` is not free in `t`; `[x]x = Σ Π Π`;
/// `[x](t s) = Σ [x]t [x]s`.
pub fn lambda_abstract(var: &str, var_ty: &FiniteType, body: &Term) -> Result<Term, NormError> {
    if !body.contains_var(var) {
        let body_ty = typecheck(body).map_err(NormError::IllTyped)?;
        return Ok(Term::app(
            Term::Const(Const::Pi(body_ty, var_ty.clone())),
            body.clone(),
        ));
    }
    match body {
        Term::Var { name, ty } if name == var => {
            // I_τ = Σ_{τ, τ→τ, τ} Π_{τ, τ→τ} Π_{τ, τ}
            let tau = ty.clone();
            let tau_to_tau = FiniteType::arrow(tau.clone(), tau.clone());
            Ok(Term::apply_all(
                Term::Const(Const::Sigma(tau.clone(), tau_to_tau.clone(), tau.clone())),
                [
                    Term::Const(Const::Pi(tau.clone(), tau_to_tau)),
                    Term::Const(Const::Pi(tau.clone(), tau.clone())),
                ],
            ))
        }
        Term::App(f, a) => {
            let a_ty = typecheck(a).map_err(NormError::IllTyped)?;
            let f_ty = typecheck(f).map_err(NormError::IllTyped)?;
            let cod = match f_ty {
                FiniteType::Arrow(_, cod) => *cod,
                ground => {
                    return Err(NormError::IllTyped(TypeError::NotAFunction {
                        term: f.to_string(),
                        ty: ground,
                    }))
                }
            };
            let ft = lambda_abstract(var, var_ty, f)?;
            let at = lambda_abstract(var, var_ty, a)?;
            Ok(Term::apply_all(
                Term::Const(Const::Sigma(var_ty.clone(), a_ty, cod)),
                [ft, at],
            ))
        }
        // A variable occurrence of `var` is handled above; any other leaf
        // with `var` free is impossible.
        _ => unreachable!("leaf contains the abstracted variable"),
    }
}
