//! Command-line front end: Macaulay calculus, single-segment classification,
//! ideal queries (Hilbert tables, lexification, Gotzmann, componentwise),
//! lex enumeration, and the exhaustive verification suites.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 a verification suite or
//! self-audit found a counterexample.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use lexgotz::classify::{classify, LinearQuotientsOutcome, EXHAUSTIVE_ORDER_CAP};
use lexgotz::ideal::{is_componentwise_lexsegment, is_gotzmann_oracle, MonomialIdeal};
use lexgotz::macaulay::{derivative, macaulay_expand, upper_shift};
use lexgotz::monomial::{default_enum_cap, enumerate_md, LexSegment, Monomial};
use lexgotz::verify::{
    classify_agreement_suite, completely_gotzmann_suite, derivative_collision_suite,
    derivative_vanishing_suite, initial_gotzmann_suite, resolution_triple_suite, run_form_suite,
    run_gotzmann_suite, shadow_law_suite, taylor_shape_suite, SuiteOutcome,
};

#[derive(Parser)]
#[command(
    name = "lexgotz",
    version,
    about = "Classify lexsegment monomial ideals with exact arithmetic"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Macaulay expansion of a at degree d and both operator values.
    Expand { a: BigUint, d: u32 },

    /// Print the upper shift of a at degree d (or the derivative).
    Shift {
        a: BigUint,
        d: u32,
        /// Print the derivative instead of the upper shift.
        #[arg(long)]
        derivative: bool,
    },

    /// Classify the lexsegment L(u, v) of a degree-d monomial pair.
    Segment {
        /// Number of variables of the ambient ring.
        #[arg(short, long)]
        n: usize,
        /// Larger end of the segment, e.g. "x1*x3^2" or "[1,0,2]".
        #[arg(short, long)]
        u: String,
        /// Smaller end of the segment.
        #[arg(short, long)]
        v: String,
        /// Re-derive the Gotzmann verdict from the growth oracle and fail
        /// with exit code 3 if it disagrees with the classifier.
        #[arg(long)]
        oracle: bool,
        /// Enumeration cap (monomials per graded piece).
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
        /// Generator count above which the order search stays heuristic.
        #[arg(long, default_value_t = EXHAUSTIVE_ORDER_CAP)]
        exhaustive_cap: usize,
    },

    /// Query a monomial ideal given as JSON (from a file, or stdin if omitted).
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },

    /// Run an exhaustive verification suite against brute-force oracles.
    Verify {
        /// Suite to run.
        suite: SuiteName,
        /// Ambient variable bound for sweep suites.
        #[arg(long)]
        n: Option<usize>,
        /// Degree bound.
        #[arg(long)]
        d: Option<u32>,
        /// Value bound for the derivative-vanishing suite.
        #[arg(long)]
        c: Option<u64>,
        /// Value bound for the derivative-collision suite.
        #[arg(long)]
        b: Option<u64>,
        /// Enumeration cap (monomials per graded piece).
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
        /// Generator count above which the order search stays heuristic.
        #[arg(long, default_value_t = EXHAUSTIVE_ORDER_CAP)]
        exhaustive_cap: usize,
    },

    /// List degree-d monomials in n variables in descending lex order.
    Enumerate {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: u32,
        /// Start of a segment to list instead of all of M_d.
        #[arg(short, long, requires = "v")]
        u: Option<String>,
        /// End of the segment.
        #[arg(short, long, requires = "u")]
        v: Option<String>,
        /// Enumeration cap (monomials per graded piece).
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
    },
}

#[derive(Subcommand)]
enum IdealOp {
    /// Print H(I, q) and H(S/I, q) for q = 0..=Q.
    Hilbert {
        /// Highest degree to tabulate.
        #[arg(long)]
        to: u32,
        /// Path to the ideal JSON ("-" or omitted reads stdin).
        path: Option<PathBuf>,
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
    },
    /// Print the generators of the lexification, computed through degree Q.
    Lexify {
        /// Horizon degree; must be at least the largest generator degree.
        #[arg(long)]
        to: u32,
        path: Option<PathBuf>,
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
    },
    /// Decide the Gotzmann property of an equigenerated ideal by the growth oracle.
    Gotzmann {
        path: Option<PathBuf>,
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
    },
    /// Decide whether every graded component is a lexsegment.
    Componentwise {
        path: Option<PathBuf>,
        #[arg(long, default_value_t = default_enum_cap())]
        cap: u64,
    },
}

/// Verification suites runnable from the command line.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    DerivativeCollision,
    DerivativeVanishing,
    ShadowLaw,
    CompletelyGotzmann,
    RunGotzmann,
    RunForm,
    ResolutionTriple,
    TaylorShape,
    ClassifyAgreement,
    InitialGotzmann,
    All,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Expand { a, d } => cmd_expand(a, d, cli.json),
        Command::Shift { a, d, derivative } => cmd_shift(a, d, derivative, cli.json),
        Command::Segment {
            n,
            u,
            v,
            oracle,
            cap,
            exhaustive_cap,
        } => cmd_segment(n, &u, &v, oracle, cap, exhaustive_cap, cli.json),
        Command::Ideal { op } => cmd_ideal(op, cli.json),
        Command::Verify {
            suite,
            n,
            d,
            c,
            b,
            cap,
            exhaustive_cap,
        } => cmd_verify(suite, n, d, c, b, cap, exhaustive_cap, cli.json),
        Command::Enumerate { n, d, u, v, cap } => cmd_enumerate(n, d, u, v, cap, cli.json),
    }
}

fn big_number(v: &BigUint) -> serde_json::Number {
    v.to_string()
        .parse()
        .expect("decimal integer literal is a valid JSON number")
}

fn cmd_expand(a: BigUint, d: u32, json: bool) -> Result<i32, Box<dyn std::error::Error>> {
    if d == 0 {
        return Err("degree must be at least 1".into());
    }
    let e = macaulay_expand(a.clone(), d);
    let shifted = e.upper_shift_value();
    let deriv = e.derivative_value();
    if json {
        let terms: Vec<Value> = e
            .terms()
            .iter()
            .map(|(top, bottom)| json!({ "top": big_number(top), "bottom": bottom }))
            .collect();
        let out = json!({
            "a": big_number(&a),
            "d": d,
            "terms": terms,
            "upper_shift": big_number(&shifted),
            "derivative": big_number(&deriv),
        });
        println!("{out}");
    } else if e.is_empty() {
        println!("{a} = {e}; {a}^<{d}> = {shifted}");
    } else {
        println!("{a} = {e}; {a}^<{d}> = {shifted}; {a}^({d}) = {deriv}");
    }
    Ok(0)
}

fn cmd_shift(
    a: BigUint,
    d: u32,
    want_derivative: bool,
    json: bool,
) -> Result<i32, Box<dyn std::error::Error>> {
    if d == 0 {
        return Err("degree must be at least 1".into());
    }
    let value = if want_derivative {
        derivative(a.clone(), d)
    } else {
        upper_shift(a.clone(), d)
    };
    if json {
        let key = if want_derivative { "derivative" } else { "upper_shift" };
        let out = json!({ "a": big_number(&a), "d": d, key: big_number(&value) });
        println!("{out}");
    } else {
        println!("{value}");
    }
    Ok(0)
}

fn cmd_segment(
    n: usize,
    u: &str,
    v: &str,
    oracle: bool,
    cap: u64,
    exhaustive_cap: usize,
    json: bool,
) -> Result<i32, Box<dyn std::error::Error>> {
    let u = Monomial::parse(u, n)?;
    let v = Monomial::parse(v, n)?;
    let seg = LexSegment::new(u.clone(), v.clone())?;
    let report = classify(&seg, cap, exhaustive_cap)?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!("segment: L({u}, {v}) in {n} variables");
        if report.dropped_variables > 0 {
            println!(
                "normalized: dropped {} unused leading variable(s); classifying {} in {} variables",
                report.dropped_variables,
                report.segment,
                report.segment.ambient()
            );
        }
        println!("initial: {}", report.initial);
        println!("completely: {}", report.completely);
        println!("gotzmann: {}", report.gotzmann);
        println!("route: {}", report.route.as_str());
        match &report.linear_quotients {
            LinearQuotientsOutcome::Order(order) => {
                let names: Vec<String> = order.iter().map(|m| m.to_string()).collect();
                println!("linear quotients: found: {}", names.join(", "));
            }
            LinearQuotientsOutcome::NoneExhaustive => {
                println!("linear quotients: none (all orders exhausted)");
            }
            LinearQuotientsOutcome::NoneHeuristic => {
                println!("linear quotients: undetermined (heuristic orders only)");
            }
        }
        println!(
            "componentwise lexsegment: {}",
            report.componentwise_lexsegment
        );
        println!("taylor minimal: {}", report.taylor_minimal);
        println!(
            "a = {}, b = {}, c = {}, j = {}",
            report.numbers.a, report.numbers.b, report.numbers.c, report.numbers.j
        );
    }
    if oracle {
        let ideal = MonomialIdeal::from_segment(&report.segment, cap)?;
        let verdict = is_gotzmann_oracle(&ideal, cap)?;
        if verdict != report.gotzmann {
            eprintln!(
                "oracle disagreement: classifier says {}, growth oracle says {} for {}",
                report.gotzmann, verdict, report.segment
            );
            return Ok(3);
        }
        if !json {
            println!("oracle: agrees");
        }
    }
    Ok(0)
}

fn read_ideal(path: Option<PathBuf>) -> Result<MonomialIdeal, Box<dyn std::error::Error>> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(MonomialIdeal::from_json(&text)?)
}

fn cmd_ideal(op: IdealOp, json: bool) -> Result<i32, Box<dyn std::error::Error>> {
    match op {
        IdealOp::Hilbert { to, path, cap } => {
            let ideal = read_ideal(path)?;
            let table = ideal.hilbert_table(to, cap, false)?;
            let quotient = ideal.hilbert_table(to, cap, true)?;
            if json {
                let out = json!({
                    "n": ideal.ambient(),
                    "to": to,
                    "ideal": table.to_json(),
                    "quotient": quotient.to_json(),
                });
                println!("{out}");
            } else {
                for ((d, h), (_, q)) in table.values.iter().zip(quotient.values.iter()) {
                    println!("H(I,{d}) = {h}, H(S/I,{d}) = {q}");
                }
            }
        }
        IdealOp::Lexify { to, path, cap } => {
            let ideal = read_ideal(path)?;
            let lex = ideal.lexify(to, cap)?;
            if json {
                println!("{}", lex.to_json());
            } else {
                println!("{lex}");
            }
        }
        IdealOp::Gotzmann { path, cap } => {
            let ideal = read_ideal(path)?;
            let d = ideal
                .is_equigenerated()
                .ok_or(lexgotz::Error::NotEquigenerated)?;
            let verdict = is_gotzmann_oracle(&ideal, cap)?;
            if json {
                println!("{}", json!({ "d": d, "gotzmann": verdict }));
            } else {
                println!("gotzmann: {verdict} (generated in degree {d})");
            }
        }
        IdealOp::Componentwise { path, cap } => {
            let ideal = read_ideal(path)?;
            let report = is_componentwise_lexsegment(&ideal, cap)?;
            if json {
                let witness = report
                    .witness
                    .as_ref()
                    .map(|s| json!({ "u": s.u().to_string(), "v": s.v().to_string() }))
                    .unwrap_or(Value::Null);
                let out = json!({
                    "holds": report.holds,
                    "witness": witness,
                    "failed_degree": report.failed_degree,
                });
                println!("{out}");
            } else if report.holds {
                match &report.witness {
                    Some(w) => println!("componentwise lexsegment: true, witness {w}"),
                    None => println!("componentwise lexsegment: true"),
                }
            } else {
                match report.failed_degree {
                    Some(q) => println!(
                        "componentwise lexsegment: false (component in degree {q} is not a lexsegment)"
                    ),
                    None => println!("componentwise lexsegment: false"),
                }
            }
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: SuiteName,
    n: Option<usize>,
    d: Option<u32>,
    c: Option<u64>,
    b: Option<u64>,
    cap: u64,
    exhaustive_cap: usize,
    json: bool,
) -> Result<i32, Box<dyn std::error::Error>> {
    let suites: Vec<SuiteName> = if suite == SuiteName::All {
        vec![
            SuiteName::DerivativeCollision,
            SuiteName::DerivativeVanishing,
            SuiteName::ShadowLaw,
            SuiteName::CompletelyGotzmann,
            SuiteName::RunGotzmann,
            SuiteName::RunForm,
            SuiteName::ResolutionTriple,
            SuiteName::TaylorShape,
            SuiteName::ClassifyAgreement,
            SuiteName::InitialGotzmann,
        ]
    } else {
        vec![suite]
    };
    let mut outcomes: Vec<SuiteOutcome> = Vec::new();
    for s in suites {
        let outcome = run_suite(s, n, d, c, b, cap, exhaustive_cap)?;
        eprintln!("{}: {} cases scanned", outcome.suite, outcome.cases);
        outcomes.push(outcome);
    }
    if json {
        if outcomes.len() == 1 {
            println!("{}", outcomes[0].to_json());
        } else {
            let all: Vec<Value> = outcomes.iter().map(|o| o.to_json()).collect();
            println!("{}", Value::Array(all));
        }
    } else {
        for o in &outcomes {
            println!("{o}");
        }
    }
    Ok(if outcomes.iter().all(|o| o.passed()) { 0 } else { 3 })
}

fn run_suite(
    suite: SuiteName,
    n: Option<usize>,
    d: Option<u32>,
    c: Option<u64>,
    b: Option<u64>,
    cap: u64,
    exhaustive_cap: usize,
) -> Result<SuiteOutcome, Box<dyn std::error::Error>> {
    let sweep_n = n.unwrap_or(4);
    let progress = |name: &'static str| {
        move |count: u64| eprintln!("[{name}] {count} cases...")
    };
    Ok(match suite {
        SuiteName::DerivativeCollision => derivative_collision_suite(
            b.unwrap_or(2000),
            d.unwrap_or(8),
            &mut progress("derivative-collision"),
        ),
        SuiteName::DerivativeVanishing => derivative_vanishing_suite(
            c.unwrap_or(2000),
            d.unwrap_or(12),
            &mut progress("derivative-vanishing"),
        ),
        SuiteName::ShadowLaw => shadow_law_suite(
            n.unwrap_or(5),
            d.unwrap_or(5),
            cap,
            &mut progress("shadow-law"),
        )?,
        SuiteName::CompletelyGotzmann => completely_gotzmann_suite(
            sweep_n,
            d.unwrap_or(4),
            cap,
            &mut progress("completely-gotzmann"),
        )?,
        SuiteName::RunGotzmann => {
            run_gotzmann_suite(sweep_n, d.unwrap_or(4), cap, &mut progress("run-gotzmann"))?
        }
        SuiteName::RunForm => run_form_suite(
            sweep_n,
            d.unwrap_or(4),
            cap,
            exhaustive_cap,
            &mut progress("run-form"),
        )?,
        SuiteName::ResolutionTriple => resolution_triple_suite(
            sweep_n,
            d.unwrap_or(4),
            cap,
            exhaustive_cap,
            &mut progress("resolution-triple"),
        )?,
        SuiteName::TaylorShape => taylor_shape_suite(
            sweep_n,
            d.unwrap_or(4),
            cap,
            exhaustive_cap,
            &mut progress("taylor-shape"),
        )?,
        SuiteName::ClassifyAgreement => classify_agreement_suite(
            sweep_n,
            d.unwrap_or(4),
            cap,
            exhaustive_cap,
            &mut progress("classify-agreement"),
        )?,
        SuiteName::InitialGotzmann => initial_gotzmann_suite(
            sweep_n,
            d.unwrap_or(4),
            cap,
            &mut progress("initial-gotzmann"),
        )?,
        SuiteName::All => unreachable!("expanded by the caller"),
    })
}

fn cmd_enumerate(
    n: usize,
    d: u32,
    u: Option<String>,
    v: Option<String>,
    cap: u64,
    json: bool,
) -> Result<i32, Box<dyn std::error::Error>> {
    if n == 0 {
        return Err("need at least one variable".into());
    }
    let members = match (u, v) {
        (Some(u), Some(v)) => {
            let u = Monomial::parse(&u, n)?;
            let v = Monomial::parse(&v, n)?;
            if u.degree() != d || v.degree() != d {
                return Err(format!("segment ends must have degree {d}").into());
            }
            LexSegment::new(u, v)?.monomials(cap)?
        }
        _ => enumerate_md(n, d, cap)?,
    };
    if json {
        let names: Vec<Value> = members
            .iter()
            .map(|m| Value::from(m.to_string()))
            .collect();
        println!("{}", Value::Array(names));
    } else {
        for m in &members {
            println!("{m}");
        }
    }
    Ok(0)
}
