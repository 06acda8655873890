//! Terms: variables, constants, and application. There is no primitive
//! lambda; abstraction is compiled to the combinators by
//! [`crate::norm::lambda_abstract`].

use std::collections::BTreeSet;
use std::fmt;

use crate::ty::FiniteType;

/// Term constants. The combinators carry their type indices explicitly;
/// the concrete syntax for them is `PI[s,t]` and `SIGMA[r,s,t]`.
#[derive(Clone, PartialEq, Eq)]
pub enum Const {
    /// Numerals; `0` and `1` are the primitive ones.
    Num(u64),
    Plus,
    Times,
    Less,
    EqNat,
    /// `Π_{σ,τ} : σ → τ → σ` (the K shape).
    Pi(FiniteType, FiniteType),
    /// `Σ_{ρ,σ,τ} : (ρ → σ → τ) → (ρ → σ) → ρ → τ` (the S shape).
    Sigma(FiniteType, FiniteType, FiniteType),
    /// `R₀ : (0 → 0 → 0) → 0 → 0 → 0`, with `R₀ f m 0 = m` and
    /// `R₀ f m (n+1) = f n (R₀ f m n)`.
    Rec0,
    /// Reserved evaluation symbol `1 → 1 → 0`, produced by the
    /// associate-translation pass.
    EvalAssoc,
    /// Reserved sequence-pairing symbol `1 → 1 → 1` for packing several
    /// translated arguments.
    Merge,
    /// Reserved embedding `0 → 1` of a number as a constant sequence.
    Lift,
}

impl Const {
    pub fn ty(&self) -> FiniteType {
        use FiniteType as T;
        match self {
            Const::Num(_) => T::Ground,
            Const::Plus | Const::Times | Const::Less | Const::EqNat => {
                T::arrow(T::Ground, T::arrow(T::Ground, T::Ground))
            }
            Const::Pi(sigma, tau) => {
                T::arrow(sigma.clone(), T::arrow(tau.clone(), sigma.clone()))
            }
            Const::Sigma(rho, sigma, tau) => T::arrow(
                T::arrow(rho.clone(), T::arrow(sigma.clone(), tau.clone())),
                T::arrow(
                    T::arrow(rho.clone(), sigma.clone()),
                    T::arrow(rho.clone(), tau.clone()),
                ),
            ),
            Const::Rec0 => {
                let step = T::arrow(T::Ground, T::arrow(T::Ground, T::Ground));
                T::arrow(step, T::arrow(T::Ground, T::arrow(T::Ground, T::Ground)))
            }
            Const::EvalAssoc => T::arrow(T::pure(1), T::arrow(T::pure(1), T::Ground)),
            Const::Merge => T::arrow(T::pure(1), T::arrow(T::pure(1), T::pure(1))),
            Const::Lift => T::arrow(T::Ground, T::pure(1)),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum Term {
    Var { name: String, ty: FiniteType },
    Const(Const),
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str, ty: FiniteType) -> Term {
        Term::Var {
            name: name.to_string(),
            ty,
        }
    }

    pub fn num(n: u64) -> Term {
        Term::Const(Const::Num(n))
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    pub fn apply_all(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            Term::Const(Const::Num(n)) => Some(*n),
            _ => None,
        }
    }

    /// Application spine: head and arguments, left to right.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut cursor = self;
        while let Term::App(f, a) = cursor {
            args.push(a.as_ref());
            cursor = f;
        }
        args.reverse();
        (cursor, args)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free_vars(&mut out);
        out
    }

    fn collect_free_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var { name, .. } => {
                out.insert(name.clone());
            }
            Term::Const(_) => {}
            Term::App(f, a) => {
                f.collect_free_vars(out);
                a.collect_free_vars(out);
            }
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            Term::Var { name: n, .. } => n == name,
            Term::Const(_) => false,
            Term::App(f, a) => f.contains_var(name) || a.contains_var(name),
        }
    }

    /// Replace every occurrence of the named variable. Terms have no
    /// binders, so substitution is plain replacement.
    pub fn substitute(&self, name: &str, replacement: &Term) -> Term {
        match self {
            Term::Var { name: n, .. } if n == name => replacement.clone(),
            Term::Var { .. } | Term::Const(_) => self.clone(),
            Term::App(f, a) => Term::app(
                f.substitute(name, replacement),
                a.substitute(name, replacement),
            ),
        }
    }
}

/// Printing tracks which variables are already introduced (bound by an
/// enclosing quantifier or previously printed): the first free
/// occurrence carries its type annotation, later ones are bare. The
/// parser registers annotations in the same left-to-right order, so
/// print∘parse is the identity.
pub(crate) struct TermPrinter<'a> {
    pub seen: &'a mut BTreeSet<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Add,
    Mul,
    App,
    Atom,
}

impl TermPrinter<'_> {
    pub fn print(&mut self, t: &Term) -> String {
        self.print_at(t, Level::Add)
    }

    fn print_at(&mut self, t: &Term, level: Level) -> String {
        let (text, mine) = self.render(t);
        if mine < level {
            format!("({text})")
        } else {
            text
        }
    }

    fn render(&mut self, t: &Term) -> (String, Level) {
        match t.spine() {
            (Term::Const(Const::Plus), args) if args.len() == 2 => {
                let lhs = self.print_at(args[0], Level::Add);
                let rhs = self.print_at(args[1], Level::Mul);
                (format!("{lhs} + {rhs}"), Level::Add)
            }
            (Term::Const(Const::Times), args) if args.len() == 2 => {
                let lhs = self.print_at(args[0], Level::Mul);
                let rhs = self.print_at(args[1], Level::App);
                (format!("{lhs} * {rhs}"), Level::Mul)
            }
            (head, args) if !args.is_empty() => {
                let mut text = self.print_at(head, Level::Atom);
                for arg in args {
                    text.push(' ');
                    text.push_str(&self.print_at(arg, Level::Atom));
                }
                (text, Level::App)
            }
            (Term::Var { name, ty }, _) => {
                if self.seen.contains(name) {
                    (name.clone(), Level::Atom)
                } else {
                    self.seen.insert(name.clone());
                    (format!("{name}:{ty}"), Level::Atom)
                }
            }
            (Term::Const(c), _) => {
                let text = match c {
                    Const::Num(n) => n.to_string(),
                    Const::Plus => "(+)".to_string(),
                    Const::Times => "(*)".to_string(),
                    Const::Less => "(<)".to_string(),
                    Const::EqNat => "(=)".to_string(),
                    Const::Pi(s, t) => format!("PI[{s},{t}]"),
                    Const::Sigma(r, s, t) => format!("SIGMA[{r},{s},{t}]"),
                    Const::Rec0 => "R0".to_string(),
                    Const::EvalAssoc => "EVALASSOC".to_string(),
                    Const::Merge => "MERGE".to_string(),
                    Const::Lift => "LIFT".to_string(),
                };
                (text, Level::Atom)
            }
            (Term::App(_, _), _) => unreachable!("spine strips applications"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = BTreeSet::new();
        let mut printer = TermPrinter { seen: &mut seen };
        write!(f, "{}", printer.print(self))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
