//! Formulas: atoms over ground terms under the usual connectives and
//! typed quantifiers. Equality of terms at higher types is not an atom;
//! the parser unfolds it into its quantified ground form.

use std::collections::BTreeSet;
use std::fmt;

use crate::term::{Term, TermPrinter};
use crate::ty::FiniteType;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Eq,
    Less,
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rel::Eq => write!(f, "="),
            Rel::Less => write!(f, "<"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum Formula {
    Atom { rel: Rel, lhs: Term, rhs: Term },
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll { var: String, ty: FiniteType, body: Box<Formula> },
    Exists { var: String, ty: FiniteType, body: Box<Formula> },
}

impl Formula {
    pub fn atom(rel: Rel, lhs: Term, rhs: Term) -> Formula {
        Formula::Atom { rel, lhs, rhs }
    }

    pub fn forall(var: &str, ty: FiniteType, body: Formula) -> Formula {
        Formula::ForAll {
            var: var.to_string(),
            ty,
            body: Box::new(body),
        }
    }

    pub fn exists(var: &str, ty: FiniteType, body: Formula) -> Formula {
        Formula::Exists {
            var: var.to_string(),
            ty,
            body: Box::new(body),
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Atom { .. } => true,
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::ForAll { .. } | Formula::Exists { .. } => false,
        }
    }

    /// Free variables (term-level occurrences minus quantifier scopes).
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut BTreeSet::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut BTreeSet<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom { lhs, rhs, .. } => {
                for name in lhs.free_vars().union(&rhs.free_vars()) {
                    if !bound.contains(name) {
                        out.insert(name.clone());
                    }
                }
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::ForAll { var, body, .. } | Formula::Exists { var, body, .. } => {
                let fresh = bound.insert(var.clone());
                body.collect_free(bound, out);
                if fresh {
                    bound.remove(var);
                }
            }
        }
    }

    /// Largest degree among quantified variable types.
    pub fn max_quantified_degree(&self) -> u32 {
        match self {
            Formula::Atom { .. } => 0,
            Formula::Not(a) => a.max_quantified_degree(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.max_quantified_degree().max(b.max_quantified_degree())
            }
            Formula::ForAll { ty, body, .. } | Formula::Exists { ty, body, .. } => {
                ty.degree().max(body.max_quantified_degree())
            }
        }
    }

    /// Substitute a term for a free variable. Quantifier-free scopes
    /// only; the single internal caller guarantees that.
    pub(crate) fn substitute_term(&self, name: &str, replacement: &Term) -> Formula {
        match self {
            Formula::Atom { rel, lhs, rhs } => Formula::Atom {
                rel: *rel,
                lhs: lhs.substitute(name, replacement),
                rhs: rhs.substitute(name, replacement),
            },
            Formula::Not(a) => Formula::Not(Box::new(a.substitute_term(name, replacement))),
            Formula::And(a, b) => Formula::And(
                Box::new(a.substitute_term(name, replacement)),
                Box::new(b.substitute_term(name, replacement)),
            ),
            Formula::Or(a, b) => Formula::Or(
                Box::new(a.substitute_term(name, replacement)),
                Box::new(b.substitute_term(name, replacement)),
            ),
            Formula::Implies(a, b) => Formula::Implies(
                Box::new(a.substitute_term(name, replacement)),
                Box::new(b.substitute_term(name, replacement)),
            ),
            Formula::ForAll { .. } | Formula::Exists { .. } => {
                unreachable!("substitution is only applied to quantifier-free bodies")
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Implies,
    Or,
    And,
    Unary,
}

struct FormulaPrinter {
    seen: BTreeSet<String>,
}

impl FormulaPrinter {
    fn print(&mut self, phi: &Formula, level: Level) -> String {
        let (text, mine) = self.render(phi);
        if mine < level {
            format!("({text})")
        } else {
            text
        }
    }

    fn render(&mut self, phi: &Formula) -> (String, Level) {
        match phi {
            Formula::Atom { rel, lhs, rhs } => {
                let mut printer = TermPrinter { seen: &mut self.seen };
                let l = printer.print(lhs);
                let r = printer.print(rhs);
                (format!("{l} {rel} {r}"), Level::Unary)
            }
            Formula::Not(a) => {
                let inner = self.print(a, Level::Unary);
                (format!("~{inner}"), Level::Unary)
            }
            Formula::And(a, b) => {
                let l = self.print(a, Level::Unary);
                let r = self.print(b, Level::And);
                (format!("{l} /\\ {r}"), Level::And)
            }
            Formula::Or(a, b) => {
                let l = self.print(a, Level::And);
                let r = self.print(b, Level::Or);
                (format!("{l} \\/ {r}"), Level::Or)
            }
            Formula::Implies(a, b) => {
                let l = self.print(a, Level::Or);
                let r = self.print(b, Level::Implies);
                (format!("{l} => {r}"), Level::Implies)
            }
            Formula::ForAll { var, ty, body } | Formula::Exists { var, ty, body } => {
                let keyword = if matches!(phi, Formula::ForAll { .. }) {
                    "ALL"
                } else {
                    "EX"
                };
                let shadowed = self.seen.insert(var.clone());
                let inner = self.print(body, Level::Implies);
                if shadowed {
                    self.seen.remove(var);
                }
                (format!("{keyword} {var}:{ty} . {inner}"), Level::Implies)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printer = FormulaPrinter {
            seen: BTreeSet::new(),
        };
        write!(f, "{}", printer.print(self, Level::Implies))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Const;

    #[test]
    fn quantifier_free_detection() {
        let atom = Formula::atom(Rel::Eq, Term::num(1), Term::num(1));
        assert!(atom.is_quantifier_free());
        let q = Formula::forall("x", FiniteType::Ground, atom.clone());
        assert!(!q.is_quantifier_free());
        assert!(Formula::And(Box::new(atom.clone()), Box::new(atom)).is_quantifier_free());
    }

    #[test]
    fn display_quantifiers_and_connectives() {
        let x = Term::var("x", FiniteType::pure(1));
        let n = Term::var("n", FiniteType::Ground);
        let atom = Formula::atom(Rel::Eq, Term::app(x, n), Term::num(0));
        let phi = Formula::forall(
            "x",
            FiniteType::pure(1),
            Formula::exists("n", FiniteType::Ground, atom),
        );
        assert_eq!(phi.to_string(), "ALL x:0 -> 0 . EX n:0 . x n = 0");
    }

    #[test]
    fn free_vars_respect_binding() {
        let x = Term::var("x", FiniteType::Ground);
        let y = Term::var("y", FiniteType::Ground);
        let atom = Formula::atom(Rel::Less, x, y);
        let phi = Formula::forall("x", FiniteType::Ground, atom);
        assert_eq!(phi.free_vars().into_iter().collect::<Vec<_>>(), vec!["y".to_string()]);
    }

    #[test]
    fn max_quantified_degree_scans() {
        let atom = Formula::atom(Rel::Eq, Term::num(0), Term::num(0));
        let phi = Formula::forall(
            "Y",
            FiniteType::pure(2),
            Formula::exists("f", FiniteType::pure(1), atom),
        );
        assert_eq!(phi.max_quantified_degree(), 2);
    }

    #[test]
    fn precedence_printing() {
        let a = Formula::atom(Rel::Eq, Term::num(0), Term::num(0));
        let b = Formula::atom(Rel::Less, Term::num(0), Term::num(1));
        let or_then_imp = Formula::Implies(
            Box::new(Formula::Or(Box::new(a.clone()), Box::new(b.clone()))),
            Box::new(a.clone()),
        );
        assert_eq!(or_then_imp.to_string(), "0 = 0 \\/ 0 < 1 => 0 = 0");
        let imp_in_or = Formula::Or(
            Box::new(a.clone()),
            Box::new(Formula::Implies(Box::new(b), Box::new(a))),
        );
        assert_eq!(imp_in_or.to_string(), "0 = 0 \\/ (0 < 1 => 0 = 0)");
        assert!(Term::Const(Const::Num(0)).to_string() == "0");
    }
}
