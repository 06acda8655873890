//! The associate translation: quantifiers over degree-2 functionals
//! become quantifiers over type-1 associate variables, and every
//! application of a translated variable becomes an application of the
//! reserved evaluation symbol `EVALASSOC : 1 → 1 → 0` to the associate
//! and the (packed) arguments. Material of degree ≤ 1 passes through
//! unchanged, so the pass is idempotent.
//!
//! A degree-2 type unfolds as `τ₁ → … → τ_k → 0` with every `τᵢ` of
//! degree ≤ 1. Multiple or ground arguments are packed into a single
//! sequence with the reserved symbols `MERGE : 1 → 1 → 1` and
//! `LIFT : 0 → 1`. Degree-3 quantifiers have no countable
//! representation here and are rejected.

use std::collections::BTreeMap;
use std::fmt;

use crate::formula::Formula;
use crate::term::{Const, Term};
use crate::ty::FiniteType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EcfError {
    DegreeTooHigh {
        var: String,
        ty: FiniteType,
        degree: u32,
    },
    /// A translated variable occurs without its full argument list, so
    /// there is no ground application to rewrite.
    UnsaturatedOccurrence { var: String, expected_args: usize },
}

impl fmt::Display for EcfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcfError::DegreeTooHigh { var, ty, degree } => {
                write!(f, "quantified variable {var}:{ty} has degree {degree} > 2")
            }
            EcfError::UnsaturatedOccurrence { var, expected_args } => {
                write!(f, "{var} must be applied to {expected_args} argument(s) to be translated")
            }
        }
    }
}

impl std::error::Error for EcfError {}

#[derive(Clone)]
struct TranslatedVar {
    arg_types: Vec<FiniteType>,
}

type Env = BTreeMap<String, Option<TranslatedVar>>;

/// Pack an argument list into one type-1 term.
fn pack_args(args: Vec<(Term, FiniteType)>) -> Term {
    let coerce = |(t, ty): (Term, FiniteType)| -> Term {
        if ty.is_ground() {
            Term::app(Term::Const(Const::Lift), t)
        } else {
            t
        }
    };
    let mut iter = args.into_iter();
    let first = coerce(iter.next().expect("degree-2 type has at least one argument"));
    iter.fold(first, |acc, next| {
        Term::apply_all(Term::Const(Const::Merge), [acc, coerce(next)])
    })
}

fn translate_term(t: &Term, env: &Env) -> Result<Term, EcfError> {
    let (head, args) = t.spine();
    if let Term::Var { name, .. } = head {
        if let Some(Some(translated)) = env.get(name) {
            let expected = translated.arg_types.len();
            if args.len() != expected {
                return Err(EcfError::UnsaturatedOccurrence {
                    var: name.clone(),
                    expected_args: expected,
                });
            }
            let mut packed_args = Vec::with_capacity(expected);
            for (arg, ty) in args.iter().zip(&translated.arg_types) {
                packed_args.push((translate_term(arg, env)?, ty.clone()));
            }
            let associate = Term::var(name, FiniteType::pure(1));
            return Ok(Term::apply_all(
                Term::Const(Const::EvalAssoc),
                [associate, pack_args(packed_args)],
            ));
        }
    }
    match t {
        Term::Var { .. } | Term::Const(_) => Ok(t.clone()),
        Term::App(f, a) => Ok(Term::app(translate_term(f, env)?, translate_term(a, env)?)),
    }
}

fn translate(phi: &Formula, env: &mut Env) -> Result<Formula, EcfError> {
    match phi {
        Formula::Atom { rel, lhs, rhs } => Ok(Formula::Atom {
            rel: *rel,
            lhs: translate_term(lhs, env)?,
            rhs: translate_term(rhs, env)?,
        }),
        Formula::Not(a) => Ok(Formula::Not(Box::new(translate(a, env)?))),
        Formula::And(a, b) => Ok(Formula::And(
            Box::new(translate(a, env)?),
            Box::new(translate(b, env)?),
        )),
        Formula::Or(a, b) => Ok(Formula::Or(
            Box::new(translate(a, env)?),
            Box::new(translate(b, env)?),
        )),
        Formula::Implies(a, b) => Ok(Formula::Implies(
            Box::new(translate(a, env)?),
            Box::new(translate(b, env)?),
        )),
        Formula::ForAll { var, ty, body } | Formula::Exists { var, ty, body } => {
            let degree = ty.degree();
            let (entry, new_ty) = match degree {
                0 | 1 => (None, ty.clone()),
                2 => (
                    Some(TranslatedVar {
                        arg_types: ty.argument_chain(),
                    }),
                    FiniteType::pure(1),
                ),
                d => {
                    return Err(EcfError::DegreeTooHigh {
                        var: var.clone(),
                        ty: ty.clone(),
                        degree: d,
                    })
                }
            };
            let shadowed = env.insert(var.clone(), entry);
            let body = translate(body, env);
            match shadowed {
                Some(prev) => {
                    env.insert(var.clone(), prev);
                }
                None => {
                    env.remove(var);
                }
            }
            let body = Box::new(body?);
            Ok(match phi {
                Formula::ForAll { .. } => Formula::ForAll {
                    var: var.clone(),
                    ty: new_ty,
                    body,
                },
                _ => Formula::Exists {
                    var: var.clone(),
                    ty: new_ty,
                    body,
                },
            })
        }
    }
}

/// Translate every degree-2 quantifier; degree ≤ 1 material is fixed.
pub fn ecf_translate(phi: &Formula) -> Result<Formula, EcfError> {
    translate(phi, &mut Env::new())
}
