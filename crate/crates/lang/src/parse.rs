//! Concrete syntax.
//!
//! Types:    `0`, `1`, `2`, … (pure types) and `t -> t`, right-associative.
//! Terms:    application by juxtaposition (`f x y`) or with parentheses
//!           (`f(x, y)`); infix `+` and `*`; numerals; variables
//!           annotated `name:type` on their first occurrence; constants
//!           `R0`, `PI[s,t]`, `SIGMA[r,s,t]`, `EVALASSOC`, `MERGE`,
//!           `LIFT`, and the operator sections `(+) (*) (<) (=)`.
//! Formulas: atoms `t = s` and `t < s`, connectives `~  /\  \/  =>`,
//!           quantifiers `ALL x:T . phi` and `EX x:T . phi`.
//!
//! Equality between terms of arrow type is accepted and unfolded at
//! parse time into the quantified ground form
//! `ALL z1 … . t z1 … = s z1 …`.
//!
//! Errors carry the byte offset of the offending token.

use std::collections::BTreeMap;
use std::fmt;

use crate::check::typecheck;
use crate::formula::{Formula, Rel};
use crate::term::{Const, Term};
use crate::ty::FiniteType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Number(u64),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Dot,
    Comma,
    Arrow,
    Plus,
    Star,
    Less,
    Equals,
    Tilde,
    AndOp,
    OrOp,
    ImpliesOp,
}

struct Lexer;

impl Lexer {
    /// Tokens with their byte spans; spans drive both error positions
    /// and the adjacency rule for call syntax.
    fn tokenize(text: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
        let bytes = text.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            let tok = match c {
                '(' => {
                    i += 1;
                    Tok::LParen
                }
                ')' => {
                    i += 1;
                    Tok::RParen
                }
                '[' => {
                    i += 1;
                    Tok::LBracket
                }
                ']' => {
                    i += 1;
                    Tok::RBracket
                }
                ':' => {
                    i += 1;
                    Tok::Colon
                }
                '.' => {
                    i += 1;
                    Tok::Dot
                }
                ',' => {
                    i += 1;
                    Tok::Comma
                }
                '+' => {
                    i += 1;
                    Tok::Plus
                }
                '*' => {
                    i += 1;
                    Tok::Star
                }
                '<' => {
                    i += 1;
                    Tok::Less
                }
                '~' => {
                    i += 1;
                    Tok::Tilde
                }
                '=' => {
                    if bytes.get(i + 1) == Some(&b'>') {
                        i += 2;
                        Tok::ImpliesOp
                    } else {
                        i += 1;
                        Tok::Equals
                    }
                }
                '-' => {
                    if bytes.get(i + 1) == Some(&b'>') {
                        i += 2;
                        Tok::Arrow
                    } else {
                        return Err(ParseError {
                            offset: i,
                            message: "expected '->'".to_string(),
                        });
                    }
                }
                '/' => {
                    if bytes.get(i + 1) == Some(&b'\\') {
                        i += 2;
                        Tok::AndOp
                    } else {
                        return Err(ParseError {
                            offset: i,
                            message: "expected '/\\'".to_string(),
                        });
                    }
                }
                '\\' => {
                    if bytes.get(i + 1) == Some(&b'/') {
                        i += 2;
                        Tok::OrOp
                    } else {
                        return Err(ParseError {
                            offset: i,
                            message: "expected '\\/'".to_string(),
                        });
                    }
                }
                d if d.is_ascii_digit() => {
                    let mut end = i;
                    while end < bytes.len() && (bytes[end] as char).is_ascii_digit() {
                        end += 1;
                    }
                    let n: u64 = text[i..end].parse().map_err(|_| ParseError {
                        offset: i,
                        message: "numeral too large".to_string(),
                    })?;
                    i = end;
                    Tok::Number(n)
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let mut end = i;
                    while end < bytes.len()
                        && ((bytes[end] as char).is_ascii_alphanumeric() || bytes[end] == b'_')
                    {
                        end += 1;
                    }
                    let word = text[i..end].to_string();
                    i = end;
                    Tok::Ident(word)
                }
                other => {
                    return Err(ParseError {
                        offset: i,
                        message: format!("unexpected character {other:?}"),
                    });
                }
            };
            tokens.push((tok, start, i));
        }
        Ok(tokens)
    }
}

struct Parser {
    tokens: Vec<(Tok, usize, usize)>,
    pos: usize,
    end_offset: usize,
    /// Quantifier bindings, innermost last.
    bound: Vec<(String, FiniteType)>,
    /// Free variables registered by annotation, in first-seen order.
    free: BTreeMap<String, FiniteType>,
    /// Counter for fresh variables introduced by equality unfolding.
    fresh: u32,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            tokens: Lexer::tokenize(text)?,
            pos: 0,
            end_offset: text.len(),
            bound: Vec::new(),
            free: BTreeMap::new(),
            fresh: 0,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, o, _)| *o)
            .unwrap_or(self.end_offset)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// `f(a)` call syntax applies only when the parenthesis touches the
    /// head; `f (a)` is ordinary juxtaposition of a parenthesized term.
    fn adjacent_lparen(&self) -> bool {
        match (self.tokens.get(self.pos), self.pos.checked_sub(1).and_then(|p| self.tokens.get(p))) {
            (Some((Tok::LParen, start, _)), Some((_, _, prev_end))) => start == prev_end,
            _ => false,
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            offset: self.offset(),
            message,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn snapshot(&self) -> (usize, BTreeMap<String, FiniteType>, u32) {
        (self.pos, self.free.clone(), self.fresh)
    }

    fn restore(&mut self, snap: (usize, BTreeMap<String, FiniteType>, u32)) {
        self.pos = snap.0;
        self.free = snap.1;
        self.fresh = snap.2;
    }

    // ------------------------------------------------------------------
    // Types

    fn parse_type(&mut self) -> Result<FiniteType, ParseError> {
        let lhs = self.parse_type_atom()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.parse_type()?;
            Ok(FiniteType::arrow(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_type_atom(&mut self) -> Result<FiniteType, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Number(n)) => {
                self.pos += 1;
                let n = u32::try_from(n)
                    .map_err(|_| self.error("pure type index too large".to_string()))?;
                Ok(FiniteType::pure(n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.parse_type()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(self.error("expected a type".to_string())),
        }
    }

    // ------------------------------------------------------------------
    // Terms

    fn lookup_var(&self, name: &str) -> Option<FiniteType> {
        self.bound
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.clone())
            .or_else(|| self.free.get(name).cloned())
    }

    fn parse_term(&mut self) -> Result<Term, ParseError> {
        self.parse_additive()
    }

    fn parse_additive(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.parse_multiplicative()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            let rhs = self.parse_multiplicative()?;
            acc = Term::apply_all(Term::Const(Const::Plus), [acc, rhs]);
        }
        Ok(acc)
    }

    fn parse_multiplicative(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.parse_application()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.parse_application()?;
            acc = Term::apply_all(Term::Const(Const::Times), [acc, rhs]);
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Number(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn parse_application(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.parse_postfix()?;
        while self.starts_atom() {
            // Identifiers that begin a quantifier or another construct
            // never reach here: quantifier keywords are consumed by the
            // formula layer before term parsing starts.
            let arg = self.parse_postfix()?;
            acc = Term::app(acc, arg);
        }
        Ok(acc)
    }

    fn parse_postfix(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.parse_atom()?;
        while self.adjacent_lparen() {
            // f(a, b) sugar for f a b.
            self.pos += 1;
            let mut args = vec![self.parse_term()?];
            while self.peek() == Some(&Tok::Comma) {
                self.pos += 1;
                args.push(self.parse_term()?);
            }
            self.expect(Tok::RParen, "')'")?;
            acc = Term::apply_all(acc, args);
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Number(n)) => {
                self.pos += 1;
                Ok(Term::num(n))
            }
            Some(Tok::Ident(word)) => {
                self.pos += 1;
                match word.as_str() {
                    "R0" => Ok(Term::Const(Const::Rec0)),
                    "EVALASSOC" => Ok(Term::Const(Const::EvalAssoc)),
                    "MERGE" => Ok(Term::Const(Const::Merge)),
                    "LIFT" => Ok(Term::Const(Const::Lift)),
                    "PI" => {
                        self.expect(Tok::LBracket, "'[' with the type indices of PI")?;
                        let s = self.parse_type()?;
                        self.expect(Tok::Comma, "','")?;
                        let t = self.parse_type()?;
                        self.expect(Tok::RBracket, "']'")?;
                        Ok(Term::Const(Const::Pi(s, t)))
                    }
                    "SIGMA" => {
                        self.expect(Tok::LBracket, "'[' with the type indices of SIGMA")?;
                        let r = self.parse_type()?;
                        self.expect(Tok::Comma, "','")?;
                        let s = self.parse_type()?;
                        self.expect(Tok::Comma, "','")?;
                        let t = self.parse_type()?;
                        self.expect(Tok::RBracket, "']'")?;
                        Ok(Term::Const(Const::Sigma(r, s, t)))
                    }
                    "ALL" | "EX" => Err(ParseError {
                        offset: self.tokens[self.pos - 1].1,
                        message: format!("quantifier {word} cannot start a term"),
                    }),
                    _ => {
                        if self.peek() == Some(&Tok::Colon) {
                            self.pos += 1;
                            let ty = self.parse_type()?;
                            match self.lookup_var(&word) {
                                Some(prior) if prior != ty => Err(ParseError {
                                    offset: self.tokens[self.pos - 1].1,
                                    message: format!(
                                        "variable {word} already has type {prior}, annotated {ty}"
                                    ),
                                }),
                                Some(_) => Ok(Term::var(&word, ty)),
                                None => {
                                    self.free.insert(word.clone(), ty.clone());
                                    Ok(Term::var(&word, ty))
                                }
                            }
                        } else {
                            match self.lookup_var(&word) {
                                Some(ty) => Ok(Term::var(&word, ty)),
                                None => Err(ParseError {
                                    offset: self.tokens[self.pos - 1].1,
                                    message: format!(
                                        "unknown variable {word}: annotate its first occurrence as {word}:type"
                                    ),
                                }),
                            }
                        }
                    }
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                // Operator sections (+) (*) (<) (=).
                let section = match self.peek() {
                    Some(Tok::Plus) => Some(Const::Plus),
                    Some(Tok::Star) => Some(Const::Times),
                    Some(Tok::Less) => Some(Const::Less),
                    Some(Tok::Equals) => Some(Const::EqNat),
                    _ => None,
                };
                if let Some(c) = section {
                    self.pos += 1;
                    self.expect(Tok::RParen, "')'")?;
                    return Ok(Term::Const(c));
                }
                let t = self.parse_term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            _ => Err(self.error("expected a term".to_string())),
        }
    }

    // ------------------------------------------------------------------
    // Formulas

    fn parse_formula(&mut self) -> Result<Formula, ParseError> {
        self.parse_implies()
    }

    fn parse_implies(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_or()?;
        if self.peek() == Some(&Tok::ImpliesOp) {
            self.pos += 1;
            let rhs = self.parse_implies()?;
            Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn parse_or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_and()?;
        while self.peek() == Some(&Tok::OrOp) {
            self.pos += 1;
            let rhs = self.parse_and()?;
            acc = Formula::Or(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_unary()?;
        while self.peek() == Some(&Tok::AndOp) {
            self.pos += 1;
            let rhs = self.parse_unary()?;
            acc = Formula::And(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                let inner = self.parse_unary()?;
                Ok(Formula::Not(Box::new(inner)))
            }
            Some(Tok::Ident(word)) if word == "ALL" || word == "EX" => {
                self.pos += 1;
                let name = match self.advance() {
                    Some(Tok::Ident(n)) => n,
                    _ => return Err(self.error("expected a variable name".to_string())),
                };
                self.expect(Tok::Colon, "':' with the bound variable's type")?;
                let ty = self.parse_type()?;
                self.expect(Tok::Dot, "'.'")?;
                self.bound.push((name.clone(), ty.clone()));
                let body = self.parse_formula();
                self.bound.pop();
                let body = body?;
                Ok(if word == "ALL" {
                    Formula::forall(&name, ty, body)
                } else {
                    Formula::exists(&name, ty, body)
                })
            }
            _ => self.parse_atom_or_paren(),
        }
    }

    fn parse_atom_or_paren(&mut self) -> Result<Formula, ParseError> {
        let snap = self.snapshot();
        match self.parse_relational_atom() {
            Ok(atom) => Ok(atom),
            Err(atom_err) => {
                self.restore(snap);
                if self.peek() == Some(&Tok::LParen) {
                    let paren_snap = self.snapshot();
                    self.pos += 1;
                    match self.parse_formula() {
                        Ok(phi) => {
                            self.expect(Tok::RParen, "')'")?;
                            Ok(phi)
                        }
                        Err(_) => {
                            self.restore(paren_snap);
                            Err(atom_err)
                        }
                    }
                } else {
                    Err(atom_err)
                }
            }
        }
    }

    fn parse_relational_atom(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_term()?;
        let rel = match self.peek() {
            Some(Tok::Equals) => Rel::Eq,
            Some(Tok::Less) => Rel::Less,
            _ => return Err(self.error("expected '=' or '<'".to_string())),
        };
        let rel_offset = self.offset();
        self.pos += 1;
        let rhs = self.parse_term()?;
        self.make_atom(rel, lhs, rhs, rel_offset)
    }

    /// Build an atom, unfolding higher-type equality into its quantified
    /// ground form.
    fn make_atom(
        &mut self,
        rel: Rel,
        lhs: Term,
        rhs: Term,
        rel_offset: usize,
    ) -> Result<Formula, ParseError> {
        let positioned = |message: String| ParseError {
            offset: rel_offset,
            message,
        };
        let lty = typecheck(&lhs).map_err(|e| positioned(e.to_string()))?;
        let rty = typecheck(&rhs).map_err(|e| positioned(e.to_string()))?;
        if lty != rty {
            return Err(positioned(format!(
                "cannot relate a {lty} to a {rty}"
            )));
        }
        if lty.is_ground() {
            return Ok(Formula::atom(rel, lhs, rhs));
        }
        if rel == Rel::Less {
            return Err(positioned(format!(
                "'<' relates ground terms only, got type {lty}"
            )));
        }
        // Unfold t =_τ s as ALL z1 … zk . t z1 … zk = s z1 … zk.
        let arg_types = lty.argument_chain();
        let mut avoid = lhs.free_vars();
        avoid.extend(rhs.free_vars());
        let mut fresh_vars = Vec::new();
        for arg_ty in &arg_types {
            let name = loop {
                self.fresh += 1;
                let candidate = format!("z{}", self.fresh);
                if !avoid.contains(&candidate) {
                    break candidate;
                }
            };
            avoid.insert(name.clone());
            fresh_vars.push((name, arg_ty.clone()));
        }
        let applied = |mut t: Term| {
            for (name, ty) in &fresh_vars {
                t = Term::app(t, Term::var(name, ty.clone()));
            }
            t
        };
        let mut phi = Formula::atom(Rel::Eq, applied(lhs), applied(rhs));
        for (name, ty) in fresh_vars.into_iter().rev() {
            phi = Formula::forall(&name, ty, phi);
        }
        Ok(phi)
    }
}

/// Parse a complete term; all free variables must be annotated at their
/// first occurrence.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.parse_term()?;
    if !p.at_end() {
        return Err(p.error("trailing input after term".to_string()));
    }
    Ok(t)
}

/// Parse a complete formula.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let phi = p.parse_formula()?;
    if !p.at_end() {
        return Err(p.error("trailing input after formula".to_string()));
    }
    Ok(phi)
}

pub fn parse_type(text: &str) -> Result<FiniteType, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.parse_type()?;
    if !p.at_end() {
        return Err(p.error("trailing input after type".to_string()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::check_formula;

    #[test]
    fn parse_recursor_application() {
        let t = parse_term("R0 f:0->0->0 m:0 0").unwrap();
        let (head, args) = t.spine();
        assert_eq!(head, &Term::Const(Const::Rec0));
        assert_eq!(args.len(), 3);
        assert_eq!(args[2], &Term::num(0));
    }

    #[test]
    fn parse_quantifier_nest() {
        let phi = parse_formula("ALL x:1 . EX n:0 . x(n) = 0").unwrap();
        match &phi {
            Formula::ForAll { var, ty, body } => {
                assert_eq!(var, "x");
                assert_eq!(ty, &FiniteType::pure(1));
                assert!(matches!(body.as_ref(), Formula::Exists { .. }));
            }
            other => panic!("expected a universal, got {other:?}"),
        }
        assert!(check_formula(&phi).is_ok());
    }

    #[test]
    fn syntax_error_offsets() {
        let err = parse_term("x:1(").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse_term("x(").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.message.contains("unknown variable"));
        let err = parse_formula("ALL x 0 . x = 0").unwrap_err();
        assert_eq!(err.offset, 6);
    }

    #[test]
    fn unknown_variable_requires_annotation() {
        let err = parse_term("f 0").unwrap_err();
        assert!(err.message.contains("unknown variable"));
        assert!(parse_term("f:0->0 0").is_ok());
    }

    #[test]
    fn juxtaposition_and_call_sugar_agree() {
        let a = parse_term("f:0->0->0 1 2").unwrap();
        let b = parse_term("f:0->0->0(1, 2)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn call_requires_adjacency() {
        // With a space, the parenthesized term is a juxtaposed argument
        // of the application spine, not a call on the previous atom.
        let spaced = parse_term("f:0->0->0 0 (R0 g:0->0->0 m:0 0)").unwrap();
        let (head, args) = spaced.spine();
        assert_eq!(head, &Term::var("f", parse_type("0->0->0").unwrap()));
        assert_eq!(args.len(), 2);
        let (inner_head, inner_args) = args[1].spine();
        assert_eq!(inner_head, &Term::Const(Const::Rec0));
        assert_eq!(inner_args.len(), 3);
    }

    #[test]
    fn infix_precedence() {
        let t = parse_term("1 + 2 * 3").unwrap();
        assert_eq!(t.to_string(), "1 + 2 * 3");
        let (head, _) = t.spine();
        assert_eq!(head, &Term::Const(Const::Plus));
    }

    #[test]
    fn operator_sections() {
        let t = parse_term("(+) 1 2").unwrap();
        assert_eq!(t, parse_term("1 + 2").unwrap());
        let lt = parse_term("(<) 0 1").unwrap();
        let (head, args) = lt.spine();
        assert_eq!(head, &Term::Const(Const::Less));
        assert_eq!(args.len(), 2);
    }

    #[test]
    fn combinator_indices() {
        let t = parse_term("PI[0,0]").unwrap();
        assert_eq!(
            t,
            Term::Const(Const::Pi(FiniteType::Ground, FiniteType::Ground))
        );
        let s = parse_term("SIGMA[0,0->0,0]").unwrap();
        assert!(matches!(s, Term::Const(Const::Sigma(_, _, _))));
    }

    #[test]
    fn parenthesized_formula_vs_term() {
        let a = parse_formula("(x:0 + 1) = 2").unwrap();
        assert!(matches!(a, Formula::Atom { .. }));
        let b = parse_formula("(x:0 = 1) /\\ x < 2").unwrap();
        assert!(matches!(b, Formula::And(_, _)));
    }

    #[test]
    fn connective_precedence_and_negation() {
        let phi = parse_formula("~0 = 1 /\\ 0 = 0 \\/ 0 < 1 => 1 = 1").unwrap();
        // ((~(0=1) /\ 0=0) \/ 0<1) => 1=1
        match phi {
            Formula::Implies(lhs, _) => match *lhs {
                Formula::Or(l, _) => assert!(matches!(*l, Formula::And(_, _))),
                other => panic!("expected or, got {other:?}"),
            },
            other => panic!("expected implication, got {other:?}"),
        }
    }

    #[test]
    fn higher_type_equality_unfolds() {
        let phi = parse_formula("f:1 = g:1").unwrap();
        match &phi {
            Formula::ForAll { ty, body, .. } => {
                assert_eq!(ty, &FiniteType::Ground);
                assert!(matches!(body.as_ref(), Formula::Atom { .. }));
            }
            other => panic!("expected unfolded equality, got {other:?}"),
        }
        assert!(check_formula(&phi).is_ok());

        // Two-argument chain unfolds to two quantifiers.
        let phi2 = parse_formula("F:0->0->0 = G:0->0->0").unwrap();
        let text = phi2.to_string();
        assert!(text.starts_with("ALL z1:0 . ALL z2:0 ."), "{text}");
    }

    #[test]
    fn higher_type_less_is_rejected() {
        let err = parse_formula("f:1 < g:1").unwrap_err();
        assert!(err.message.contains("ground"));
    }

    #[test]
    fn bound_variable_annotations_must_match() {
        assert!(parse_formula("ALL x:0 . x:0 = 0").is_ok());
        let err = parse_formula("ALL x:0 . x:1 = 0").unwrap_err();
        assert!(err.message.contains("already has type"));
    }

    #[test]
    fn print_parse_round_trip() {
        let samples = [
            "R0 f:0->0->0 m:0 0",
            "ALL x:1 . EX n:0 . x n = 0",
            "1 + 2 * 3 = 7 => 0 < 1",
            "ALL Y:2 . EX f:1 . Y f = 0",
            "~(0 = 1) /\\ (0 < 1 \\/ 0 = 0)",
            "PI[0,0] 1 2 = 1",
            "EVALASSOC a:1 f:1 = 0",
        ];
        for text in samples {
            let phi = parse_formula(text);
            let term = parse_term(text);
            match (phi, term) {
                (Ok(phi), _) => {
                    let printed = phi.to_string();
                    let back = parse_formula(&printed).unwrap_or_else(|e| {
                        panic!("reparse of {printed:?} failed: {e}")
                    });
                    assert_eq!(back, phi, "round trip through {printed:?}");
                }
                (_, Ok(t)) => {
                    let printed = t.to_string();
                    let back = parse_term(&printed).unwrap();
                    assert_eq!(back, t);
                }
                (Err(e), Err(_)) => panic!("sample {text:?} parse failed: {e}"),
            }
        }
    }
}
