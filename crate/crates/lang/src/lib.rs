//! A small higher-order arithmetic language: finite types over a single
//! ground type, combinator terms with a type-0 recursor, and first-order
//! formulas with typed quantifiers.
//!
//! The pipeline stages are deliberately plain source-to-source passes:
//!
//! * [`parse`] — concrete syntax with positioned errors;
//! * [`check`] — principal types for terms, well-formedness for formulas;
//! * [`norm`] — normal-order reduction with combinator, recursor, and
//!   numeral rules, plus bracket abstraction;
//! * [`ecf`] — replace quantifiers over degree-2 functionals by
//!   quantifiers over type-1 associate variables, rewriting applications
//!   to a reserved evaluation symbol;
//! * [`qfac`] — skolemize `(∀x)(∃y)A` into `(∃Y)(∀x)A(x, Y(x))` for
//!   quantifier-free `A`.

pub mod check;
pub mod ecf;
pub mod formula;
pub mod norm;
pub mod parse;
pub mod qfac;
pub mod term;
pub mod ty;

pub use check::{typecheck, TypeError};
pub use ecf::{ecf_translate, EcfError};
pub use formula::{Formula, Rel};
pub use norm::{lambda_abstract, normalize, NormError};
pub use parse::{parse_formula, parse_term, parse_type, ParseError};
pub use qfac::{qfac_skolemize, QfacError};
pub use term::{Const, Term};
pub use ty::FiniteType;
