//! Command-line front end: every subcommand is a thin shell over the
//! library, reading and writing canonical JSON.
//!
//! Exit codes: 0 = success / affirmative verdict, 1 = negative verdict
//! (infeasible row, failed predicate, unequal census sets), 2 = input
//! error, with a diagnostic naming the offending field on stderr.

mod jsonio;

use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};

use dforms::betti::{
    ek_betti, feasible_from_m, feasible_linear, Feasibility, LinearBettiRow, MSequence,
};
use dforms::duality::{murai_dual, psi_dual};
use dforms::macaulay::{macaulay_rep, osequence_violation};
use dforms::oracle::characterization_census;
use dforms::stability::{is_block_stable, is_p_borel, is_stable, is_strongly_stable};
use dforms::star::{phi, psi, star};
use dforms::{Basis, Monomial, MonomialSpace, YMonomial};

use jsonio::{
    biguint_from_value, err, field, ideal_from_value, ideal_to_value, monomial_to_value,
    number_from_bigint, number_from_biguint, object, space_from_value, u32_from_value, InputError,
    SCHEMA,
};

#[derive(Parser)]
#[command(
    name = "dforms",
    version,
    about = "Exact combinatorics of degree-d forms: Betti row feasibility, stability classification, monomial dualities"
)]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OneBased {
    /// Read and write x-side monomials in the 1-based convention x1, x2, ...
    #[arg(long)]
    one_based: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a one-row Betti table is achievable by an ideal with
    /// d-linear resolution; JSON input {"n":..,"d":..,"row":[..]}.
    CheckBetti { input: String },
    /// Build the canonical witness from an m-sequence; JSON input
    /// {"d":..,"m":[..]} with optional "n".
    Witness { input: String },
    /// Eliahou-Kervaire Betti table of a stable ideal (ideal JSON).
    EkBetti { input: String },
    /// Stability flags of a monomial space; JSON input {"d":..,"members":[..]}.
    Classify {
        input: String,
        /// Also report Borel-fixedness in characteristic p.
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        one_based: OneBased,
    },
    /// The star product of two equal-degree monomials (text form).
    Star {
        u: String,
        v: String,
        /// Cross-check: expected common degree.
        #[arg(long)]
        d: Option<u32>,
        #[command(flatten)]
        one_based: OneBased,
    },
    /// Image of a y-monomial (text like "y1^2 y3" or an exponent vector
    /// like `[2,0,1]`) under the graded isomorphism into the d-forms.
    Phi {
        w: String,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        one_based: OneBased,
    },
    /// Image of a degree-d monomial under the inverse isomorphism.
    Psi {
        u: String,
        #[command(flatten)]
        one_based: OneBased,
    },
    /// Dualize an ideal: `psi` sends an x0-side ideal generated in one
    /// degree to its y-side partner; `murai` runs the
    /// stretch/Alexander-dual/compress pipeline on an x1-side ideal.
    Dual {
        #[arg(long, value_parser = ["psi", "murai"])]
        side: String,
        /// Path to the ideal JSON ("-" for stdin).
        #[arg(long = "in")]
        input: String,
    },
    /// Macaulay representation and growth bound.
    Macaulay {
        #[command(subcommand)]
        op: MacaulayOp,
    },
    /// Check the O-sequence growth conditions on a sequence of naturals.
    Osequence {
        entries: Vec<String>,
        /// Also check the cap w_1 <= d.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Exhaustive census of the characterization theorem over a bounded
    /// monomial universe.
    Census {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        max_index: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum MacaulayOp {
    /// The d-th Macaulay representation of a.
    Rep { a: String, d: u32 },
    /// The growth bound `a^<d>`.
    Bound { a: String, d: u32 },
}

fn read_source(arg: &str) -> Result<String, InputError> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| err(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        Ok(arg.to_string())
    }
}

fn read_file_or_stdin(path: &str) -> Result<String, InputError> {
    if path == "-" {
        read_source("-")
    } else {
        std::fs::read_to_string(path).map_err(|e| err(format!("cannot read '{path}': {e}")))
    }
}

fn parse_json(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| err(format!("malformed JSON: {e}")))
}

fn base_of(one_based: &OneBased) -> u32 {
    if one_based.one_based {
        1
    } else {
        0
    }
}

/// Verdict-bearing output: the payload plus the exit code.
struct Outcome {
    value: Value,
    negative: bool,
}

fn affirmative(value: Value) -> Outcome {
    Outcome {
        value,
        negative: false,
    }
}

fn verdict(value: Value, affirmative: bool) -> Outcome {
    Outcome {
        value,
        negative: !affirmative,
    }
}

fn msequence_value(m: &MSequence) -> Value {
    Value::Array(
        m.entries()
            .iter()
            .map(|v| Value::Number(number_from_bigint(v)))
            .collect(),
    )
}

fn feasibility_value(verdict_: &Feasibility) -> Outcome {
    match verdict_ {
        Feasibility::Feasible { m, witness } => {
            let mut obj = Map::new();
            obj.insert("schema".into(), Value::from(SCHEMA));
            obj.insert("feasible".into(), Value::from(true));
            obj.insert("m".into(), msequence_value(m));
            obj.insert("witness".into(), ideal_to_value(witness));
            obj.insert("roundtrip".into(), Value::from("ok"));
            verdict(Value::Object(obj), true)
        }
        Feasibility::Infeasible { m, violation } => {
            let mut obj = Map::new();
            obj.insert("schema".into(), Value::from(SCHEMA));
            obj.insert("feasible".into(), Value::from(false));
            obj.insert("m".into(), msequence_value(m));
            obj.insert("violation".into(), Value::from(violation.to_string()));
            verdict(Value::Object(obj), false)
        }
    }
}

fn run_check_betti(input: &str) -> Result<Outcome, InputError> {
    let value = parse_json(&read_source(input)?)?;
    let obj = object(&value, "input")?;
    let n = u32_from_value(field(obj, "n")?, "n")?;
    let d = u32_from_value(field(obj, "d")?, "d")?;
    let row_value = field(obj, "row")?
        .as_array()
        .ok_or_else(|| err("field 'row' must be an array of naturals"))?;
    let row: Vec<BigUint> = row_value
        .iter()
        .map(|v| biguint_from_value(v, "row"))
        .collect::<Result<_, _>>()?;
    let row = LinearBettiRow::new(n, d, row).map_err(|e| err(e.to_string()))?;
    Ok(feasibility_value(&feasible_linear(&row)))
}

fn run_witness(input: &str) -> Result<Outcome, InputError> {
    let value = parse_json(&read_source(input)?)?;
    let obj = object(&value, "input")?;
    let d = u32_from_value(field(obj, "d")?, "d")?;
    let m_value = field(obj, "m")?
        .as_array()
        .ok_or_else(|| err("field 'm' must be an array of integers"))?;
    let mut entries: Vec<BigInt> = Vec::with_capacity(m_value.len());
    for v in m_value {
        match v {
            Value::Number(num) => entries.push(
                BigInt::from_str(&num.to_string())
                    .map_err(|_| err(format!("field 'm' must hold integers, got {num}")))?,
            ),
            other => return Err(err(format!("field 'm' must hold integers, got {other}"))),
        }
    }
    let n = match obj.get("n") {
        Some(v) => u32_from_value(v, "n")?,
        None => entries.len() as u32,
    };
    if n == 0 {
        return Err(err("field 'n' must be positive"));
    }
    if entries.len() > n as usize + 1 {
        return Err(err(format!(
            "field 'm' has {} entries, more than n+1 = {}",
            entries.len(),
            n + 1
        )));
    }
    entries.resize(n as usize + 1, BigInt::from(0));
    let m = MSequence::new(n, entries).map_err(|e| err(e.to_string()))?;
    Ok(feasibility_value(&feasible_from_m(m, d)))
}

fn run_ek_betti(input: &str) -> Result<Outcome, InputError> {
    let value = parse_json(&read_source(input)?)?;
    let ideal = ideal_from_value(&value)?;
    let table = ek_betti(&ideal).map_err(|e| err(e.to_string()))?;
    let entries: Vec<Value> = table
        .entries()
        .map(|(&(i, j), beta)| {
            Value::Array(vec![
                Value::from(i),
                Value::from(j),
                Value::Number(number_from_biguint(beta)),
            ])
        })
        .collect();
    Ok(affirmative(json!({
        "schema": SCHEMA,
        "n": ideal.vars(),
        "table": entries,
    })))
}

fn run_classify(input: &str, p: Option<u64>, base: u32) -> Result<Outcome, InputError> {
    let value = parse_json(&read_source(input)?)?;
    let space = space_from_value(&value, base)?;
    let mut obj = Map::new();
    obj.insert("schema".into(), Value::from(SCHEMA));
    obj.insert("stable".into(), Value::from(is_stable(&space)));
    obj.insert(
        "strongly_stable".into(),
        Value::from(is_strongly_stable(&space)),
    );
    obj.insert("block_stable".into(), Value::from(is_block_stable(&space)));
    if let Some(p) = p {
        let borel = is_p_borel(&space, p).map_err(|e| err(e.to_string()))?;
        obj.insert("p".into(), Value::from(p));
        obj.insert("p_borel".into(), Value::from(borel));
    }
    Ok(affirmative(Value::Object(obj)))
}

fn monomial_output(m: &Monomial, base: u32) -> Value {
    json!({
        "schema": SCHEMA,
        "result": m.format_with('x', base),
        "pairs": monomial_to_value(m, base),
    })
}

fn run_star(u: &str, v: &str, d: Option<u32>, base: u32) -> Result<Outcome, InputError> {
    let u = Monomial::parse_with(u, 'x', base).map_err(|e| err(e.to_string()))?;
    let v = Monomial::parse_with(v, 'x', base).map_err(|e| err(e.to_string()))?;
    if let Some(d) = d {
        if u.degree() != d || v.degree() != d {
            return Err(err(format!(
                "--d {d} does not match the factor degrees {} and {}",
                u.degree(),
                v.degree()
            )));
        }
    }
    let product = star(&u, &v).map_err(|e| err(e.to_string()))?;
    Ok(affirmative(monomial_output(&product, base)))
}

fn run_phi(w: &str, d: u32, base: u32) -> Result<Outcome, InputError> {
    let w = w.trim();
    let y = if w.starts_with('[') {
        let value = parse_json(w)?;
        let arr = value
            .as_array()
            .ok_or_else(|| err("exponent vector must be a JSON array"))?;
        if arr.len() != d as usize {
            return Err(err(format!(
                "exponent vector has length {}, expected d = {d}",
                arr.len()
            )));
        }
        let exps = arr
            .iter()
            .map(|v| u32_from_value(v, "w"))
            .collect::<Result<Vec<_>, _>>()?;
        YMonomial::new(exps)
    } else {
        YMonomial::parse(w, d).map_err(|e| err(e.to_string()))?
    };
    Ok(affirmative(monomial_output(&phi(&y), base)))
}

fn run_psi(u: &str, base: u32) -> Result<Outcome, InputError> {
    let u = Monomial::parse_with(u, 'x', base).map_err(|e| err(e.to_string()))?;
    let y = psi(&u);
    Ok(affirmative(json!({
        "schema": SCHEMA,
        "result": y.to_string(),
        "exponents": y.exponents(),
    })))
}

fn run_dual(side: &str, path: &str) -> Result<Outcome, InputError> {
    let value = parse_json(&read_file_or_stdin(path)?)?;
    let ideal = ideal_from_value(&value)?;
    let dual = match side {
        "psi" => {
            if ideal.basis() != Basis::XZero {
                return Err(err(format!(
                    "field 'basis': the psi side expects \"x0\" (ideal of K[x_0..x_m]), got \"{}\"",
                    ideal.basis().tag()
                )));
            }
            let d = ideal
                .single_degree()
                .ok_or_else(|| err("psi dual requires an ideal generated in a single degree"))?;
            let space = MonomialSpace::from_members(d, ideal.gens().cloned())
                .map_err(|e| err(e.to_string()))?;
            psi_dual(&space, ideal.vars() - 1).map_err(|e| err(e.to_string()))?
        }
        "murai" => {
            if ideal.basis() != Basis::XOne {
                return Err(err(format!(
                    "field 'basis': the murai side expects \"x1\" (ideal of K[x_1..x_n]), got \"{}\"",
                    ideal.basis().tag()
                )));
            }
            murai_dual(&ideal).map_err(|e| err(e.to_string()))?
        }
        _ => unreachable!("clap restricts the values"),
    };
    Ok(affirmative(ideal_to_value(&dual)))
}

fn parse_biguint_arg(a: &str) -> Result<BigUint, InputError> {
    BigUint::from_str(a).map_err(|_| err(format!("'{a}' is not a nonnegative integer")))
}

fn run_macaulay(op: &MacaulayOp) -> Result<Outcome, InputError> {
    match op {
        MacaulayOp::Rep { a, d } => {
            let a = parse_biguint_arg(a)?;
            let rep = macaulay_rep(&a, *d).map_err(|e| err(e.to_string()))?;
            let ks: Vec<Value> = rep
                .ks()
                .iter()
                .map(|k| Value::Number(number_from_biguint(k)))
                .collect();
            Ok(affirmative(json!({
                "schema": SCHEMA,
                "a": Value::Number(number_from_biguint(&a)),
                "d": d,
                "ks": ks,
            })))
        }
        MacaulayOp::Bound { a, d } => {
            let a = parse_biguint_arg(a)?;
            let bound = macaulay_rep(&a, *d)
                .map_err(|e| err(e.to_string()))?
                .bound();
            Ok(affirmative(json!({
                "schema": SCHEMA,
                "a": Value::Number(number_from_biguint(&a)),
                "d": d,
                "bound": Value::Number(number_from_biguint(&bound)),
            })))
        }
    }
}

fn run_osequence(entries: &[String], cap: Option<u32>) -> Result<Outcome, InputError> {
    if entries.is_empty() {
        return Err(err("osequence needs at least one entry"));
    }
    let values = entries
        .iter()
        .map(|e| parse_biguint_arg(e))
        .collect::<Result<Vec<_>, _>>()?;
    let violation = osequence_violation(&values);
    let mut obj = Map::new();
    obj.insert("schema".into(), Value::from(SCHEMA));
    obj.insert(
        "entries".into(),
        Value::Array(
            values
                .iter()
                .map(|v| Value::Number(number_from_biguint(v)))
                .collect(),
        ),
    );
    obj.insert("osequence".into(), Value::from(violation.is_none()));
    if let Some(index) = violation {
        obj.insert("violated_index".into(), Value::from(index));
    }
    let mut ok = violation.is_none();
    if let Some(d) = cap {
        let w1 = values.get(1).cloned().unwrap_or_default();
        let cap_ok = w1 <= BigUint::from(d);
        obj.insert("cap".into(), Value::from(d));
        obj.insert("cap_ok".into(), Value::from(cap_ok));
        ok &= cap_ok;
    }
    Ok(verdict(Value::Object(obj), ok))
}

fn run_census(d: u32, max_index: u32, jobs: usize) -> Result<Outcome, InputError> {
    let report = characterization_census(d, max_index, jobs).map_err(|e| err(e.to_string()))?;
    let value = json!({
        "schema": SCHEMA,
        "d": report.d,
        "max_index": report.max_idx,
        "sets_equal": report.sets_equal,
        "counts": {
            "subsets": report.subset_count,
            "strongly_stable_spaces": report.strongly_stable_spaces,
            "block_stable_spaces": report.block_stable_spaces,
            "strongly_stable_profiles": report.strongly_stable_profiles.len(),
            "block_stable_profiles": report.block_stable_profiles.len(),
            "osequences": report.osequences.len(),
        },
    });
    Ok(verdict(value, report.sets_equal))
}

fn dispatch(command: &Command) -> Result<Outcome, InputError> {
    match command {
        Command::CheckBetti { input } => run_check_betti(input),
        Command::Witness { input } => run_witness(input),
        Command::EkBetti { input } => run_ek_betti(input),
        Command::Classify {
            input,
            p,
            one_based,
        } => run_classify(input, *p, base_of(one_based)),
        Command::Star { u, v, d, one_based } => run_star(u, v, *d, base_of(one_based)),
        Command::Phi { w, d, one_based } => run_phi(w, *d, base_of(one_based)),
        Command::Psi { u, one_based } => run_psi(u, base_of(one_based)),
        Command::Dual { side, input } => run_dual(side, input),
        Command::Macaulay { op } => run_macaulay(op),
        Command::Osequence { entries, cap } => run_osequence(entries, *cap),
        Command::Census { d, max_index, jobs } => run_census(*d, *max_index, *jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(outcome) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&outcome.value).expect("serializable")
            } else {
                serde_json::to_string(&outcome.value).expect("serializable")
            };
            println!("{rendered}");
            if outcome.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let diagnostic = json!({ "schema": SCHEMA, "error": e.0 });
            eprintln!(
                "{}",
                serde_json::to_string(&diagnostic).expect("serializable")
            );
            ExitCode::from(2)
        }
    }
}
