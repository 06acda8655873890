//! Text file formats consumed and produced by the CLI.
//!
//! * Real snapshot: header `realcode k_max=<K>`, then `K+1` lines `k p/q`.
//! * Neighborhood code: one `a r b s` quadruple per line, `#` comments.
//! * Associate: one `[sigma] v` entry per line, `#` comments.
//! * Closed set: optional `exhaustive` header, then one `p/q` per line.
//! * Tabulated function: optional `modulus shift=<s>` header, then one
//!   `x f(x)` pair per line; evaluation snaps to the nearest node.

use std::fmt;

use cauchy_core::fncode::{Associate, Modulus, NbhdCode, Quad};
use cauchy_core::rational::Rat;
use cauchy_core::real::{real_from_rational, RealCode};
use cauchy_core::sepclosed::SepClosedSet;
use cauchy_core::seq::FinSeq;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn render_snapshot(x: &RealCode, k_max: u32) -> String {
    let mut out = format!("realcode k_max={k_max}\n");
    for k in 0..=k_max {
        out.push_str(&format!("{k} {}\n", x.approx(k)));
    }
    out
}

/// Parse a raw approximant listing (snapshot body). Missing indices are
/// rejected; the result maps `k` to its listed rational, clamping past
/// the end so the sequence is total.
pub fn parse_raw_sequence(text: &str) -> Result<Vec<Rat>, FormatError> {
    let mut entries: Vec<(u32, Rat)> = Vec::new();
    for (line_no, line) in content_lines(text) {
        if line.starts_with("realcode") {
            continue;
        }
        let mut parts = line.split_whitespace();
        let k: u32 = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| err(line_no, "expected `k p/q`"))?;
        let q: Rat = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| err(line_no, "expected `k p/q`"))?;
        if parts.next().is_some() {
            return Err(err(line_no, "trailing input after `k p/q`"));
        }
        entries.push((k, q));
    }
    entries.sort_by_key(|(k, _)| *k);
    let mut out = Vec::new();
    for (expect, (k, q)) in entries.into_iter().enumerate() {
        if k as usize != expect {
            return Err(err(0, format!("missing index {expect} in sequence")));
        }
        out.push(q);
    }
    if out.is_empty() {
        return Err(err(0, "empty sequence"));
    }
    Ok(out)
}

pub fn render_code(code: &NbhdCode, limit: u64) -> String {
    let mut out = String::from("# a r b s\n");
    for quad in code.prefix(limit) {
        out.push_str(&format!("{quad}\n"));
    }
    out
}

pub fn parse_code(text: &str) -> Result<NbhdCode, FormatError> {
    let mut quads = Vec::new();
    for (line_no, line) in content_lines(text) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(err(line_no, "expected `a r b s`"));
        }
        let parse = |text: &str| -> Result<Rat, FormatError> {
            text.parse().map_err(|e| err(line_no, format!("{e}")))
        };
        let (a, r, b, s) = (
            parse(parts[0])?,
            parse(parts[1])?,
            parse(parts[2])?,
            parse(parts[3])?,
        );
        if !r.is_positive() || !s.is_positive() {
            return Err(err(line_no, "radius and slack must be positive"));
        }
        quads.push(Quad::new(a, r, b, s));
    }
    Ok(NbhdCode::from_quads(quads))
}

pub fn render_associate(alpha: &Associate) -> String {
    let mut out = String::from("# [sigma] v\n");
    for (sigma, v) in alpha.entries() {
        out.push_str(&format!("{sigma} {v}\n"));
    }
    out
}

pub fn parse_associate(text: &str) -> Result<Associate, FormatError> {
    let mut alpha = Associate::new();
    for (line_no, line) in content_lines(text) {
        let (sigma_text, v_text) = line
            .rsplit_once(' ')
            .ok_or_else(|| err(line_no, "expected `[sigma] v`"))?;
        let sigma: FinSeq = sigma_text
            .trim()
            .parse()
            .map_err(|e| err(line_no, format!("{e}")))?;
        let v: u64 = v_text
            .trim()
            .parse()
            .map_err(|_| err(line_no, "expected a natural number value"))?;
        alpha.insert(sigma, v);
    }
    Ok(alpha)
}

pub fn parse_set(text: &str) -> Result<SepClosedSet, FormatError> {
    let mut exhaustive = false;
    let mut points = Vec::new();
    for (line_no, line) in content_lines(text) {
        if line == "exhaustive" {
            if !points.is_empty() {
                return Err(err(line_no, "`exhaustive` must come before the points"));
            }
            exhaustive = true;
            continue;
        }
        let q: Rat = line.parse().map_err(|e| err(line_no, format!("{e}")))?;
        points.push(q);
    }
    Ok(SepClosedSet::from_rationals(points, exhaustive))
}

pub fn render_set(points: &[Rat], exhaustive: bool) -> String {
    let mut out = String::new();
    if exhaustive {
        out.push_str("exhaustive\n");
    }
    for q in points {
        out.push_str(&format!("{q}\n"));
    }
    out
}

/// Tree file: one finite sequence per line (e.g. `[0,1,0]`); the tree
/// is the prefix closure of the listed nodes.
pub fn parse_tree_nodes(text: &str) -> Result<Vec<FinSeq>, FormatError> {
    let mut nodes = Vec::new();
    for (line_no, line) in content_lines(text) {
        let node: FinSeq = line.parse().map_err(|e| err(line_no, format!("{e}")))?;
        nodes.push(node);
    }
    Ok(nodes)
}

/// A tabulated function: nodes with values, evaluated by snapping the
/// query to the nearest node (ties to the smaller node).
pub struct TabulatedFn {
    nodes: Vec<(Rat, Rat)>,
    pub modulus: Modulus,
}

impl TabulatedFn {
    pub fn eval_exact(&self, x: &Rat) -> Rat {
        let mut best: Option<(&Rat, &Rat, Rat)> = None;
        for (node, value) in &self.nodes {
            let d = (x - node).abs();
            let better = match &best {
                None => true,
                Some((bn, _, bd)) => &d < bd || (&d == bd && node < bn),
            };
            if better {
                best = Some((node, value, d));
            }
        }
        best.expect("tabulated function has at least one node").1.clone()
    }

    pub fn code_fn(&self) -> impl Fn(&Rat) -> RealCode + Send + Sync + 'static {
        let nodes = self.nodes.clone();
        move |x: &Rat| {
            let table = TabulatedFn {
                nodes: nodes.clone(),
                modulus: Modulus::identity(),
            };
            real_from_rational(table.eval_exact(x))
        }
    }
}

pub fn parse_tabulated(text: &str) -> Result<TabulatedFn, FormatError> {
    let mut modulus = Modulus::identity();
    let mut nodes = Vec::new();
    for (line_no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("modulus") {
            let rest = rest.trim();
            let shift = rest
                .strip_prefix("shift=")
                .and_then(|s| s.parse::<u32>().ok())
                .ok_or_else(|| err(line_no, "expected `modulus shift=<s>`"))?;
            modulus = Modulus::shifted(shift);
            continue;
        }
        let mut parts = line.split_whitespace();
        let x: Rat = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| err(line_no, "expected `x f(x)`"))?;
        let v: Rat = parts
            .next()
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| err(line_no, "expected `x f(x)`"))?;
        nodes.push((x, v));
    }
    if nodes.is_empty() {
        return Err(err(0, "tabulated function needs at least one node"));
    }
    Ok(TabulatedFn { nodes, modulus })
}
