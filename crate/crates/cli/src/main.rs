//! Workbench CLI. Exit codes: 0 pass, 1 check failure, 2 usage or
//! configuration error. Fuel exhaustion prints as inconclusive and does
//! not fail a run.

use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

use cauchy_cli::{acceptance, builtins, formats, scenario};
use cauchy_core::extend::{
    bernstein_approx, ekeland_search, ekeland_search_baire, one_point_extend, restrict_check,
    tietze_extend, ExtendOutcome, PartialFnOnSet, VanishingModulus,
};
use cauchy_core::fncode::{
    code_from_modulus, eval_assoc, eval_code, modulus_from_code, totality_report,
};
use cauchy_core::oracle::{
    domain_decider_trace, mu_search_trace, suslin_depth_check, kappa0_search, Fuel, Probe, Refuter,
};
use cauchy_core::rational::Rat;
use cauchy_core::real::{
    abs, add, eq_upto, hat_normalize, mul, neg, real_from_rational, RealCode, RealComparison,
};
use cauchy_core::sepclosed::{complement_gap, dist_bounds, member_search, SepClosedSet};
use cauchy_core::seq::{BaireSeq, BinSeq};
use cauchy_lang::{
    check::check_formula, ecf_translate, normalize, parse_formula, parse_term, qfac_skolemize,
    typecheck,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cauchy", version, about = "Exact reals, second-order function codes, and fuel-bounded searches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    budgets: Budgets,
}

#[derive(Args, Clone, Copy)]
struct Budgets {
    /// Search budget for fuel-bounded operations.
    #[arg(long, global = true, default_value_t = 100_000)]
    fuel: u64,
    /// Depth budget for fan and prefix searches.
    #[arg(long, global = true, default_value_t = 16)]
    depth: u32,
    /// Output precision index k (results certified to 2^-k).
    #[arg(long, global = true, default_value_t = 8)]
    precision: u32,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build and inspect real-number codes.
    Real {
        #[command(subcommand)]
        op: RealOp,
    },
    /// Evaluate and construct function codes.
    Code {
        #[command(subcommand)]
        op: CodeOp,
    },
    /// Query separably closed sets.
    Set {
        #[command(subcommand)]
        op: SetOp,
    },
    /// Extension pipelines over closed sets.
    Extend {
        #[command(subcommand)]
        op: ExtendOp,
    },
    /// Minimizer search on sequence-space prefixes.
    Ekeland {
        /// Named potential (embed, first-bit, const:<p/q>; with
        /// --branching: entry-decay, first-entry, binary-embed).
        #[arg(long)]
        potential: String,
        /// Precision index of the certificate.
        #[arg(short, default_value_t = 3)]
        k: u32,
        /// Branching bound: search bounded Baire prefixes instead.
        #[arg(long)]
        branching: Option<u64>,
    },
    /// Fuel-bounded search functionals with step transcripts.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Parse, check, normalize, and translate language input.
    Lang {
        #[command(subcommand)]
        op: LangOp,
    },
    /// Run a named scenario pipeline.
    Scenario {
        /// One of: tietze, heine, weierstrass, onepoint, ekeland-cantor,
        /// ekeland-baire, ecf-demo, oracle-demo.
        name: String,
    },
    /// Run the acceptance criteria.
    Accept {
        /// Only run criteria whose name contains this tag.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Subcommand)]
enum RealOp {
    /// Snapshot of the constant code at a rational.
    Const { value: String },
    /// Snapshot of a sum.
    Add { lhs: String, rhs: String },
    /// Snapshot of a product.
    Mul { lhs: String, rhs: String },
    /// Snapshot of a negation.
    Neg { value: String },
    /// Snapshot of an absolute value.
    Abs { value: String },
    /// Snapshot of the binary embedding r(f) of a bit string.
    Embed { bits: String },
    /// Normalize a raw approximant file into a valid code.
    Hat { file: String },
    /// Compare two rationals as codes at the precision budget.
    Cmp { lhs: String, rhs: String },
}

#[derive(Subcommand)]
enum CodeOp {
    /// Evaluate a neighborhood-code file at a rational point.
    Eval {
        #[arg(long)]
        code: String,
        #[arg(long)]
        at: String,
    },
    /// Evaluate an associate file on a bit string.
    AssocEval {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        input: String,
    },
    /// Compile a named function with modulus into a code file.
    FromModulus {
        #[arg(long)]
        function: String,
        #[arg(long, default_value = "identity")]
        modulus: String,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Extract a uniform-continuity modulus value from a code file.
    Modulus {
        #[arg(long)]
        code: String,
        #[arg(short, default_value_t = 2)]
        k: u32,
    },
    /// Report which dyadic grid points a code covers.
    Totality {
        #[arg(long)]
        code: String,
        #[arg(long, default_value_t = 4)]
        grid_depth: u32,
    },
}

#[derive(Subcommand)]
enum SetOp {
    /// Fuel-bounded membership witnesses level by level.
    Member {
        #[arg(long)]
        set: String,
        #[arg(long)]
        at: String,
        #[arg(long, default_value_t = 5)]
        level: u32,
    },
    /// Certified distance bounds from the enumeration prefix.
    Dist {
        #[arg(long)]
        set: String,
        #[arg(long)]
        at: String,
    },
    /// Search the complement for a rational gap interval.
    Gap {
        #[arg(long)]
        set: String,
        #[arg(long)]
        at: String,
    },
}

#[derive(Subcommand)]
enum ExtendOp {
    /// Extend a function from a closed set to queried points.
    Tietze {
        /// Set file, or builtin:unit / builtin:left-half / builtin:two-interval.
        #[arg(long)]
        set: String,
        /// Named builtin function, `table:<file>`, or two-interval-step.
        #[arg(long, default_value = "two-interval-step")]
        function: String,
        /// Query points p/q (repeatable); a depth-N dyadic grid when omitted.
        #[arg(long)]
        at: Vec<String>,
        #[arg(long, default_value_t = 4)]
        grid_depth: u32,
    },
    /// Extend across 0 with an explicit vanishing modulus.
    OnePoint {
        #[arg(long)]
        at: String,
    },
    /// Bernstein approximation of a named function.
    Bernstein {
        #[arg(long)]
        function: String,
        #[arg(short, default_value_t = 3)]
        n: u32,
        /// Check the result on the first points of this set.
        #[arg(long)]
        check_set: Option<String>,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Least-zero search with a step transcript.
    Mu {
        /// Comma-separated entries, e.g. 1,1,0,1.
        #[arg(long)]
        sequence: String,
        /// Value of the sequence beyond the listed entries.
        #[arg(long, default_value_t = 1)]
        tail: u64,
    },
    /// Existence-of-zero search (agrees with mu on witnesses).
    Exists2 {
        #[arg(long)]
        sequence: String,
        #[arg(long, default_value_t = 1)]
        tail: u64,
    },
    /// Bounded-depth survival check for a named prefix predicate.
    Suslin {
        /// One of: accept-all, reject-nonempty, identity-only.
        #[arg(long)]
        predicate: String,
    },
    /// Exhaustive comprehension under a declared modulus depth.
    Kappa0 {
        /// One of: first-bit, third-bit-flip, never.
        #[arg(long)]
        functional: String,
        #[arg(long, default_value_t = 3)]
        modulus_depth: u32,
    },
    /// Dovetailed domain deciding on the prefix family, with transcript.
    Decide {
        /// The prefix sigma defining the domain, e.g. 01.
        #[arg(long)]
        sigma: String,
        /// The queried point as a bit string.
        #[arg(long)]
        x: String,
    },
    /// Depth-bounded binary path search on a tree file (one node per
    /// line, prefix closure of the listed set).
    Wkl {
        #[arg(long)]
        tree: String,
    },
}

#[derive(Subcommand)]
enum LangOp {
    /// Parse a formula (or term) and pretty-print it.
    Parse { file: Option<String> },
    /// Typecheck a term or well-formedness-check a formula.
    Check { file: Option<String> },
    /// Normalize a term; --fuel bounds the reduction steps.
    Norm { file: Option<String> },
    /// Translate type-two quantifiers to associate quantifiers.
    Ecf { file: Option<String> },
    /// Skolemize a forall-exists formula with quantifier-free matrix.
    Qfac { file: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_rat(text: &str) -> Result<Rat, String> {
    text.parse::<Rat>().map_err(|e| format!("{e}"))
}

fn parse_bits(text: &str) -> Result<Vec<u8>, String> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(format!("expected a bit string, found {other:?}")),
        })
        .collect()
}

fn parse_sequence(text: &str, tail: u64) -> Result<BaireSeq, String> {
    let entries: Vec<u64> = text
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{e}")))
        .collect::<Result<_, _>>()?;
    Ok(BaireSeq::from_entries(&entries, tail))
}

fn load_set(spec: &str) -> Result<SepClosedSet, String> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtins::set(name).ok_or_else(|| format!("unknown builtin set {name:?}"));
    }
    let text = fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?;
    formats::parse_set(&text).map_err(|e| format!("{spec}: {e}"))
}

fn read_source(file: &Option<String>) -> Result<String, String> {
    match file {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn print_transcript(probes: &[Probe]) {
    for p in probes {
        println!("{} {} {} {}", p.step, p.kind, p.input, p.outcome);
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let b = cli.budgets;
    match cli.command {
        Command::Real { op } => run_real(op, &b),
        Command::Code { op } => run_code(op, &b),
        Command::Set { op } => run_set(op, &b),
        Command::Extend { op } => run_extend(op, &b),
        Command::Ekeland {
            potential,
            k,
            branching,
        } => run_ekeland(&potential, k, branching, &b),
        Command::Oracle { op } => run_oracle(op, &b),
        Command::Lang { op } => run_lang(op, &b),
        Command::Scenario { name } => {
            let params = scenario::ScenarioParams {
                fuel: b.fuel,
                depth: b.depth,
                precision: b.precision,
                seed: b.seed,
            };
            let report = scenario::run_scenario(&name, &params)?;
            match b.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(if report.any_failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Accept { filter } => {
            if let Some(f) = &filter {
                let known = [
                    "fast-cauchy",
                    "tietze",
                    "weierstrass-bernstein",
                    "heine-modulus",
                    "one-point",
                    "ekeland",
                    "oracle-agreement",
                    "dovetail-decider",
                    "system-t-ecf",
                    "determinism",
                ];
                if !known.iter().any(|k| k.contains(f.as_str())) {
                    eprintln!("warning: filter {f:?} matches no criterion");
                }
            }
            let report = acceptance::run_all(filter.as_deref(), b.seed);
            match b.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(if report.any_failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn run_real(op: RealOp, b: &Budgets) -> Result<ExitCode, String> {
    let k = b.precision;
    let snapshot = |x: &RealCode| print!("{}", formats::render_snapshot(x, k));
    match op {
        RealOp::Const { value } => snapshot(&real_from_rational(parse_rat(&value)?)),
        RealOp::Add { lhs, rhs } => snapshot(&add(
            &real_from_rational(parse_rat(&lhs)?),
            &real_from_rational(parse_rat(&rhs)?),
        )),
        RealOp::Mul { lhs, rhs } => snapshot(&mul(
            &real_from_rational(parse_rat(&lhs)?),
            &real_from_rational(parse_rat(&rhs)?),
        )),
        RealOp::Neg { value } => snapshot(&neg(&real_from_rational(parse_rat(&value)?))),
        RealOp::Abs { value } => snapshot(&abs(&real_from_rational(parse_rat(&value)?))),
        RealOp::Embed { bits } => snapshot(&cauchy_core::seq::embed_real(&BinSeq::from_bits(
            &parse_bits(&bits)?,
        ))),
        RealOp::Hat { file } => {
            let text = fs::read_to_string(&file).map_err(|e| format!("{file}: {e}"))?;
            let raw = formats::parse_raw_sequence(&text).map_err(|e| format!("{file}: {e}"))?;
            snapshot(&hat_normalize(move |k| {
                raw.get(k as usize)
                    .cloned()
                    .unwrap_or_else(|| raw.last().expect("nonempty").clone())
            }));
        }
        RealOp::Cmp { lhs, rhs } => {
            let x = real_from_rational(parse_rat(&lhs)?);
            let y = real_from_rational(parse_rat(&rhs)?);
            match eq_upto(&x, &y, k) {
                RealComparison::Apart { sign, precision } => {
                    println!("apart {sign:?} at precision {precision}")
                }
                RealComparison::IndistinguishableAt(p) => {
                    println!("indistinguishable at precision {p}")
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_code(op: CodeOp, b: &Budgets) -> Result<ExitCode, String> {
    match op {
        CodeOp::Eval { code, at } => {
            let text = fs::read_to_string(&code).map_err(|e| format!("{code}: {e}"))?;
            let code = formats::parse_code(&text).map_err(|e| format!("{e}"))?;
            let x = real_from_rational(parse_rat(&at)?);
            let outcome = eval_code(&code, &x, b.precision, b.fuel);
            println!("{outcome:?}");
        }
        CodeOp::AssocEval { assoc, input } => {
            let text = fs::read_to_string(&assoc).map_err(|e| format!("{assoc}: {e}"))?;
            let alpha = formats::parse_associate(&text).map_err(|e| format!("{e}"))?;
            let bits = parse_bits(&input)?;
            let f = BaireSeq::from(&BinSeq::from_bits(&bits));
            let outcome = eval_assoc(&alpha, &f, b.fuel.min(1 << 20));
            println!("{outcome:?}");
        }
        CodeOp::FromModulus {
            function,
            modulus,
            kmax,
            output,
        } => {
            let f = builtins::function(&function)
                .ok_or_else(|| format!("unknown function {function:?}"))?;
            let omega = builtins::modulus(&modulus)
                .ok_or_else(|| format!("unknown modulus {modulus:?}"))?;
            let code = code_from_modulus(f.code_fn(), &omega, kmax);
            let rendered = formats::render_code(&code, 1 << 20);
            match output {
                Some(path) => fs::write(&path, rendered).map_err(|e| format!("{path}: {e}"))?,
                None => print!("{rendered}"),
            }
        }
        CodeOp::Modulus { code, k } => {
            let text = fs::read_to_string(&code).map_err(|e| format!("{code}: {e}"))?;
            let code = formats::parse_code(&text).map_err(|e| format!("{e}"))?;
            match modulus_from_code(&code, k, b.fuel) {
                Some(kp) => println!("omega({k}) = {kp}"),
                None => println!("need-fuel: no covering subfamily within {}", b.fuel),
            }
        }
        CodeOp::Totality { code, grid_depth } => {
            let text = fs::read_to_string(&code).map_err(|e| format!("{code}: {e}"))?;
            let code = formats::parse_code(&text).map_err(|e| format!("{e}"))?;
            let report = totality_report(&code, b.precision, grid_depth, b.fuel);
            println!(
                "covered {}/{} grid points (fraction {})",
                report.covered,
                report.total,
                report.covered_fraction()
            );
            for witness in report.uncovered.iter().take(16) {
                println!("uncovered {witness}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_set(op: SetOp, b: &Budgets) -> Result<ExitCode, String> {
    match op {
        SetOp::Member { set, at, level } => {
            let set = load_set(&set)?;
            let x = real_from_rational(parse_rat(&at)?);
            let outcome = member_search(&x, &set, level, b.fuel);
            println!("{outcome:?}");
        }
        SetOp::Dist { set, at } => {
            let set = load_set(&set)?;
            let x = real_from_rational(parse_rat(&at)?);
            let (lower, upper) = dist_bounds(&x, &set, b.fuel).map_err(|e| format!("{e}"))?;
            println!("distance in [{lower}, {upper}]");
        }
        SetOp::Gap { set, at } => {
            let set = load_set(&set)?;
            let x = real_from_rational(parse_rat(&at)?);
            let outcome = complement_gap(&x, &set, b.precision, b.fuel);
            println!("{outcome:?}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_partial_fn(function: &str, set: SepClosedSet) -> Result<PartialFnOnSet, String> {
    if function == "two-interval-step" {
        let (step, omega) = builtins::two_interval_step();
        return Ok(PartialFnOnSet::new(step, set, omega));
    }
    if let Some(path) = function.strip_prefix("table:") {
        let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let table = formats::parse_tabulated(&text).map_err(|e| format!("{path}: {e}"))?;
        let modulus = table.modulus.clone();
        let eval = table.code_fn();
        return Ok(PartialFnOnSet::new(
            move |x: &RealCode| eval(&x.approx(12)),
            set,
            modulus,
        ));
    }
    let f = builtins::function(function).ok_or_else(|| format!("unknown function {function:?}"))?;
    Ok(PartialFnOnSet::new(f.real_fn(), set, f.modulus()))
}

fn run_extend(op: ExtendOp, b: &Budgets) -> Result<ExitCode, String> {
    match op {
        ExtendOp::Tietze {
            set,
            function,
            at,
            grid_depth,
        } => {
            let set = load_set(&set)?;
            let f = load_partial_fn(&function, set)?;
            let points: Vec<Rat> = if at.is_empty() {
                (0..=(1u64 << grid_depth))
                    .map(|i| Rat::new(i.into(), (1u64 << grid_depth).into()).unwrap())
                    .collect()
            } else {
                at.iter().map(|p| parse_rat(p)).collect::<Result<_, _>>()?
            };
            let mut inconclusive = 0u64;
            for q in points {
                let x = real_from_rational(q.clone());
                match tietze_extend(&f, &x, b.precision, b.fuel).map_err(|e| format!("{e}"))? {
                    ExtendOutcome::Value { value, precision } => {
                        println!("{q} {value} {precision}")
                    }
                    ExtendOutcome::NeedFuel => {
                        inconclusive += 1;
                        println!("{q} need-fuel -");
                    }
                }
            }
            if inconclusive > 0 {
                eprintln!("note: {inconclusive} points inconclusive at fuel {}", b.fuel);
            }
        }
        ExtendOp::OnePoint { at } => {
            let square = |x: &RealCode| mul(x, x);
            let nu = VanishingModulus::from_fn(|k| Rat::pow2(-(k.div_ceil(2) as i32)));
            let x = parse_rat(&at)?;
            match one_point_extend(square, &nu, &real_from_rational(x.clone()), b.precision) {
                ExtendOutcome::Value { value, precision } => println!("{x} {value} {precision}"),
                ExtendOutcome::NeedFuel => println!("{x} need-fuel -"),
            }
        }
        ExtendOp::Bernstein {
            function,
            n,
            check_set,
        } => {
            let f = builtins::function(&function)
                .ok_or_else(|| format!("unknown function {function:?}"))?;
            let poly =
                bernstein_approx(f.code_fn(), &f.modulus(), n).map_err(|e| format!("{e}"))?;
            println!(
                "# degree {}, certified error bound 2^-{}",
                poly.degree(),
                poly.error_exp
            );
            for (i, c) in poly.coefficients().iter().enumerate() {
                println!("c{i} {c}");
            }
            if let Some(spec) = check_set {
                let set = load_set(&spec)?;
                let report = restrict_check(&poly, f.code_fn(), &set, n, 50);
                println!(
                    "# restriction check: {} samples, {} violations",
                    report.samples.len(),
                    report.violations
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_ekeland(
    potential: &str,
    k: u32,
    branching: Option<u64>,
    b: &Budgets,
) -> Result<ExitCode, String> {
    match branching {
        None => {
            let p = builtins::cantor_potential(potential)
                .ok_or_else(|| format!("unknown potential {potential:?}"))?;
            let out = ekeland_search(&p, k, b.depth).map_err(|e| format!("{e}"))?;
            println!(
                "minimizer {}",
                out.minimizer.prefix(out.certificate.depth as u64)
            );
            println!("value {}", out.value.approx(k + 3));
            println!(
                "certificate: depth {}, {} candidates, min approximant {}, epsilon 2^-{}",
                out.certificate.depth,
                out.certificate.scanned,
                out.certificate.min_approx,
                out.certificate.epsilon_exp
            );
        }
        Some(bound) => {
            let p = builtins::baire_potential(potential)
                .ok_or_else(|| format!("unknown potential {potential:?}"))?;
            let out =
                ekeland_search_baire(&p, bound, k, b.depth).map_err(|e| format!("{e}"))?;
            println!(
                "minimizer {}",
                out.minimizer.prefix(out.certificate.depth as u64)
            );
            println!("value {}", out.value.approx(k + 3));
            println!(
                "certificate: depth {}, {} candidates, min approximant {}, epsilon 2^-{}",
                out.certificate.depth,
                out.certificate.scanned,
                out.certificate.min_approx,
                out.certificate.epsilon_exp
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(op: OracleOp, b: &Budgets) -> Result<ExitCode, String> {
    match op {
        OracleOp::Mu { sequence, tail } | OracleOp::Exists2 { sequence, tail } => {
            let f = parse_sequence(&sequence, tail)?;
            let (outcome, probes) = mu_search_trace(&f, Fuel(b.fuel.min(1 << 20)));
            print_transcript(&probes);
            println!("{outcome:?}");
        }
        OracleOp::Suslin { predicate } => {
            let f = builtins::suslin_predicate(&predicate)
                .ok_or_else(|| format!("unknown predicate {predicate:?}"))?;
            let outcome = suslin_depth_check(move |s| f(s), b.depth.min(8) as u64);
            println!("{outcome:?}");
        }
        OracleOp::Kappa0 {
            functional,
            modulus_depth,
        } => {
            let y = builtins::kappa0_functional(&functional)
                .ok_or_else(|| format!("unknown functional {functional:?}"))?;
            match kappa0_search(move |f| y(f), modulus_depth) {
                Ok(outcome) => println!("{outcome:?}"),
                Err(e) => {
                    println!("{e}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        OracleOp::Decide { sigma, x } => {
            let sigma: Vec<u64> = parse_bits(&sigma)?.into_iter().map(u64::from).collect();
            let bits = parse_bits(&x)?;
            let mut alpha = cauchy_core::fncode::Associate::new();
            alpha.insert(cauchy_core::seq::FinSeq::new(sigma.clone()), 1);
            let refuter: Refuter = Arc::new(move |x: &BinSeq, t: u64| {
                (t as usize) < sigma.len() && x.at(t) as u64 != sigma[t as usize]
            });
            let point = BinSeq::from_bits(&bits);
            let (outcome, probes) =
                domain_decider_trace(&alpha, &refuter, &point, Fuel(b.fuel.min(1 << 16)));
            print_transcript(&probes);
            match outcome {
                Ok(o) => println!("{o:?}"),
                Err(e) => {
                    println!("{e}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        OracleOp::Wkl { tree } => {
            let text = fs::read_to_string(&tree).map_err(|e| format!("{tree}: {e}"))?;
            let nodes = formats::parse_tree_nodes(&text).map_err(|e| format!("{tree}: {e}"))?;
            let tree = cauchy_core::seq::DecidableTree::from_nodes(2, &nodes);
            match cauchy_core::seq::wkl_search(&tree, b.depth as u64) {
                Ok(outcome) => println!("{outcome:?}"),
                Err(e) => {
                    println!("{e}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_lang(op: LangOp, b: &Budgets) -> Result<ExitCode, String> {
    let source = match &op {
        LangOp::Parse { file }
        | LangOp::Check { file }
        | LangOp::Norm { file }
        | LangOp::Ecf { file }
        | LangOp::Qfac { file } => read_source(file)?,
    };
    let text = source.trim();
    match op {
        LangOp::Parse { .. } => match parse_formula(text) {
            Ok(phi) => println!("{phi}"),
            Err(formula_err) => match parse_term(text) {
                Ok(t) => println!("{t}"),
                Err(_) => return Err(format!("{formula_err}")),
            },
        },
        LangOp::Check { .. } => match parse_formula(text) {
            Ok(phi) => {
                check_formula(&phi).map_err(|e| format!("{e}"))?;
                println!("well-formed formula");
            }
            Err(formula_err) => {
                let t = parse_term(text).map_err(|_| format!("{formula_err}"))?;
                let ty = typecheck(&t).map_err(|e| format!("{e}"))?;
                println!("term of type {ty}");
            }
        },
        LangOp::Norm { .. } => {
            let t = parse_term(text).map_err(|e| format!("{e}"))?;
            let n = normalize(&t, b.fuel).map_err(|e| format!("{e}"))?;
            println!("{n}");
        }
        LangOp::Ecf { .. } => {
            let phi = parse_formula(text).map_err(|e| format!("{e}"))?;
            let out = ecf_translate(&phi).map_err(|e| format!("{e}"))?;
            println!("{out}");
        }
        LangOp::Qfac { .. } => {
            let phi = parse_formula(text).map_err(|e| format!("{e}"))?;
            let out = qfac_skolemize(&phi).map_err(|e| format!("{e}"))?;
            println!("{out}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
