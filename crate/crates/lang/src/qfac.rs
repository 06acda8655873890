//! Quantifier-free choice as a syntactic pass: skolemize
//! `(∀x^σ)(∃y^τ)A(x,y)` into `(∃Y^{σ→τ})(∀x^σ)A(x, Y(x))` when `A` is
//! quantifier-free.

use std::fmt;

use crate::formula::Formula;
use crate::term::Term;
use crate::ty::FiniteType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QfacError {
    /// Input is not of the `∀∃(quantifier-free)` shape.
    ShapeMismatch { reason: String },
}

impl fmt::Display for QfacError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QfacError::ShapeMismatch { reason } => write!(f, "shape mismatch: {reason}"),
        }
    }
}

impl std::error::Error for QfacError {}

fn skolem_name(y: &str, avoid: &std::collections::BTreeSet<String>, x: &str) -> String {
    let mut chars = y.chars();
    let base: String = match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => "Y".to_string(),
    };
    let mut candidate = base.clone();
    let mut salt = 0u32;
    while candidate == y || candidate == x || avoid.contains(&candidate) {
        salt += 1;
        candidate = format!("{base}{salt}");
    }
    candidate
}

/// Skolemize one `∀∃` block with a quantifier-free matrix.
pub fn qfac_skolemize(phi: &Formula) -> Result<Formula, QfacError> {
    let Formula::ForAll { var: x, ty: sigma, body } = phi else {
        return Err(QfacError::ShapeMismatch {
            reason: "expected a leading universal quantifier".to_string(),
        });
    };
    let Formula::Exists { var: y, ty: tau, body: matrix } = body.as_ref() else {
        return Err(QfacError::ShapeMismatch {
            reason: "expected an existential quantifier under the universal".to_string(),
        });
    };
    if !matrix.is_quantifier_free() {
        return Err(QfacError::ShapeMismatch {
            reason: "the matrix must be quantifier-free".to_string(),
        });
    }
    let avoid = matrix.free_vars();
    let skolem = skolem_name(y, &avoid, x);
    let skolem_ty = FiniteType::arrow(sigma.clone(), tau.clone());
    let applied = Term::app(
        Term::var(&skolem, skolem_ty.clone()),
        Term::var(x, sigma.clone()),
    );
    let new_matrix = matrix.substitute_term(y, &applied);
    Ok(Formula::exists(
        &skolem,
        skolem_ty,
        Formula::forall(x, sigma.clone(), new_matrix),
    ))
}
