//! Finite types: the ground type `0` closed under arrows.

use std::fmt;

/// A finite type: `0`, or `σ → τ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FiniteType {
    Ground,
    Arrow(Box<FiniteType>, Box<FiniteType>),
}

impl FiniteType {
    pub fn arrow(from: FiniteType, to: FiniteType) -> FiniteType {
        FiniteType::Arrow(Box::new(from), Box::new(to))
    }

    /// The pure type `n`: `0` is ground and `n+1 ≡ n → 0`.
    pub fn pure(n: u32) -> FiniteType {
        (0..n).fold(FiniteType::Ground, |acc, _| {
            FiniteType::arrow(acc, FiniteType::Ground)
        })
    }

    /// Type degree: `deg(0) = 0`, `deg(σ→τ) = max(deg(σ)+1, deg(τ))`.
    /// Pure type `n` has degree `n`.
    pub fn degree(&self) -> u32 {
        match self {
            FiniteType::Ground => 0,
            FiniteType::Arrow(from, to) => (from.degree() + 1).max(to.degree()),
        }
    }

    pub fn is_ground(&self) -> bool {
        matches!(self, FiniteType::Ground)
    }

    /// Curried argument list and (always ground) final codomain:
    /// `τ₁ → … → τ_k → 0` yields `[τ₁, …, τ_k]`.
    pub fn argument_chain(&self) -> Vec<FiniteType> {
        let mut args = Vec::new();
        let mut cursor = self;
        while let FiniteType::Arrow(from, to) = cursor {
            args.push((**from).clone());
            cursor = to;
        }
        args
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::Ground => write!(f, "0"),
            FiniteType::Arrow(from, to) => {
                // Arrows associate to the right; parenthesize the domain
                // when it is itself an arrow.
                match from.as_ref() {
                    FiniteType::Ground => write!(f, "0 -> {to}"),
                    arrow => write!(f, "({arrow}) -> {to}"),
                }
            }
        }
    }
}

impl fmt::Debug for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
