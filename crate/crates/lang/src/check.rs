//! Typechecking. Variables carry their types, so checking is synthesis
//! plus application compatibility.

use std::fmt;

use crate::formula::Formula;
use crate::term::Term;
use crate::ty::FiniteType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeError {
    Mismatch {
        function: String,
        expected: FiniteType,
        argument: String,
        found: FiniteType,
    },
    NotAFunction {
        term: String,
        ty: FiniteType,
    },
    /// The same variable name occurs at two different types.
    InconsistentVariable {
        name: String,
        first: FiniteType,
        second: FiniteType,
    },
    /// Atoms relate ground terms only.
    NonGroundAtom {
        term: String,
        ty: FiniteType,
    },
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeError::Mismatch {
                function,
                expected,
                argument,
                found,
            } => write!(
                f,
                "{function} expects an argument of type {expected}, but {argument} has type {found}"
            ),
            TypeError::NotAFunction { term, ty } => {
                write!(f, "{term} of ground-free type {ty} cannot be applied", )
            }
            TypeError::InconsistentVariable { name, first, second } => {
                write!(f, "variable {name} used at both {first} and {second}")
            }
            TypeError::NonGroundAtom { term, ty } => {
                write!(f, "atom over non-ground term {term} of type {ty}")
            }
        }
    }
}

impl std::error::Error for TypeError {}

/// Principal type of a term.
pub fn typecheck(t: &Term) -> Result<FiniteType, TypeError> {
    match t {
        Term::Var { ty, .. } => Ok(ty.clone()),
        Term::Const(c) => Ok(c.ty()),
        Term::App(f, a) => {
            let fty = typecheck(f)?;
            let aty = typecheck(a)?;
            match fty {
                FiniteType::Arrow(dom, cod) => {
                    if *dom == aty {
                        Ok(*cod)
                    } else {
                        Err(TypeError::Mismatch {
                            function: f.to_string(),
                            expected: *dom,
                            argument: a.to_string(),
                            found: aty,
                        })
                    }
                }
                ground => Err(TypeError::NotAFunction {
                    term: f.to_string(),
                    ty: ground,
                }),
            }
        }
    }
}

fn check_var_consistency(t: &Term, scope: &mut Vec<(String, FiniteType)>) -> Result<(), TypeError> {
    match t {
        Term::Var { name, ty } => {
            if let Some((_, prior)) = scope.iter().rev().find(|(n, _)| n == name) {
                if prior != ty {
                    return Err(TypeError::InconsistentVariable {
                        name: name.clone(),
                        first: prior.clone(),
                        second: ty.clone(),
                    });
                }
            } else {
                scope.push((name.clone(), ty.clone()));
            }
            Ok(())
        }
        Term::Const(_) => Ok(()),
        Term::App(f, a) => {
            check_var_consistency(f, scope)?;
            check_var_consistency(a, scope)
        }
    }
}

/// Well-formedness of a formula: every atom relates ground terms, each
/// variable occurs at a single type per scope, and bound occurrences
/// match their binder's type.
pub fn check_formula(phi: &Formula) -> Result<(), TypeError> {
    fn go(phi: &Formula, scope: &mut Vec<(String, FiniteType)>) -> Result<(), TypeError> {
        match phi {
            Formula::Atom { lhs, rhs, .. } => {
                for side in [lhs, rhs] {
                    check_var_consistency(side, scope)?;
                    let ty = typecheck(side)?;
                    if !ty.is_ground() {
                        return Err(TypeError::NonGroundAtom {
                            term: side.to_string(),
                            ty,
                        });
                    }
                }
                Ok(())
            }
            Formula::Not(a) => go(a, scope),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                go(a, scope)?;
                go(b, scope)
            }
            Formula::ForAll { var, ty, body } | Formula::Exists { var, ty, body } => {
                scope.push((var.clone(), ty.clone()));
                let result = go(body, scope);
                scope.pop();
                result
            }
        }
    }
    go(phi, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Rel;
    use crate::term::Const;

    #[test]
    fn application_of_sequence_to_number() {
        let t = Term::app(
            Term::var("f", FiniteType::pure(1)),
            Term::var("n", FiniteType::Ground),
        );
        assert_eq!(typecheck(&t).unwrap(), FiniteType::Ground);
    }

    #[test]
    fn pi_combinator_shape() {
        let t = Term::Const(Const::Pi(FiniteType::Ground, FiniteType::Ground));
        assert_eq!(
            typecheck(&t).unwrap(),
            FiniteType::arrow(
                FiniteType::Ground,
                FiniteType::arrow(FiniteType::Ground, FiniteType::Ground)
            )
        );
    }

    #[test]
    fn ground_terms_do_not_apply() {
        let t = Term::app(
            Term::var("n", FiniteType::Ground),
            Term::var("m", FiniteType::Ground),
        );
        assert!(matches!(typecheck(&t), Err(TypeError::NotAFunction { .. })));
    }

    #[test]
    fn recursor_full_application_is_ground() {
        let step = Term::var(
            "f",
            FiniteType::arrow(
                FiniteType::Ground,
                FiniteType::arrow(FiniteType::Ground, FiniteType::Ground),
            ),
        );
        let t = Term::apply_all(Term::Const(Const::Rec0), [step, Term::num(0), Term::num(3)]);
        assert_eq!(typecheck(&t).unwrap(), FiniteType::Ground);
    }

    #[test]
    fn mismatch_reports_both_types() {
        let t = Term::app(
            Term::var("f", FiniteType::pure(1)),
            Term::var("g", FiniteType::pure(1)),
        );
        match typecheck(&t) {
            Err(TypeError::Mismatch { expected, found, .. }) => {
                assert_eq!(expected, FiniteType::Ground);
                assert_eq!(found, FiniteType::pure(1));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn formula_checks_scope_types() {
        let good = Formula::forall(
            "x",
            FiniteType::pure(1),
            Formula::atom(
                Rel::Eq,
                Term::app(Term::var("x", FiniteType::pure(1)), Term::num(0)),
                Term::num(0),
            ),
        );
        assert!(check_formula(&good).is_ok());

        let bad = Formula::forall(
            "x",
            FiniteType::pure(1),
            Formula::atom(Rel::Eq, Term::var("x", FiniteType::Ground), Term::num(0)),
        );
        assert!(matches!(
            check_formula(&bad),
            Err(TypeError::InconsistentVariable { .. })
        ));
    }

    #[test]
    fn formula_rejects_non_ground_atoms() {
        let bad = Formula::atom(
            Rel::Eq,
            Term::var("f", FiniteType::pure(1)),
            Term::var("g", FiniteType::pure(1)),
        );
        assert!(matches!(
            check_formula(&bad),
            Err(TypeError::NonGroundAtom { .. })
        ));
    }
}
