//! Command-line front end: argument model, dispatch and rendering.
//!
//! Every command reads one JSON input document (see [`InputDoc`]) and
//! produces either a JSON value or DOT text.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::branch::{
    char_ladder, is_tschirnhausen_normal, semigroup, tschirnhausen_normalize, zariski_invariant, PuiseuxParam,
};
use crate::curvering::intersection_multiplicity;
use crate::dicritical::{
    contact, contact_value_formula, d1_membership, d1_zariski_bound_check, dicritical_test, merle_intersection,
    solve_separatrix_family, special_intersection, special_separatrix, specialize_family, ContactValue,
    DicriticalProblem,
};
use crate::error::{Error, Result};
use crate::graph::emit_dual_graph_dot;
use crate::json::{self, InputDoc};
use crate::kernel::{format_rational, parse_rational, Rational};
use crate::oneform::{azevedo_decompose, nu};
use crate::selftest;
use crate::semiroot::{canonical_semiroots, leading_term, semiroot_expand, SemirootSystem};

#[derive(Debug, Parser)]
#[command(
    name = "planebranch",
    version,
    about = "Invariants of plane branches and separatrices of dicritical foliations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Indentation of the JSON output; 0 prints a single line.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
}

#[derive(Debug, Args, Clone)]
pub struct InputArg {
    /// JSON input document.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args, Clone)]
pub struct TriplePoint {
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub j: usize,
}

#[derive(Debug, Subcommand, Clone)]
pub enum Command {
    /// Characteristic exponents, semigroup, Milnor number and Zariski invariant.
    Info(InputArg),
    /// Canonical semiroots F₀,…,F_{g+1}.
    Semiroots(InputArg),
    /// Semiroot expansion of `poly` and its value.
    Expand(InputArg),
    /// Writes `form` as H₁(n x dy − m y dx) + dH₂.
    Azevedo {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Dicriticality criterion for H₁ω_ij + dH₂.
    Dicritical {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        at: TriplePoint,
    },
    /// Separatrix family of H₁ω_ij + dH₂ up to t^order.
    Separatrices {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        at: TriplePoint,
        #[arg(long)]
        order: usize,
        /// Also report the special member, its contact and intersection with the branch.
        #[arg(long)]
        special: bool,
        /// Specialize the family at this parameter, given as "p/q".
        #[arg(long, allow_hyphen_values = true)]
        at_u: Option<String>,
    },
    /// Contact of `branch` with `other`.
    Contact(InputArg),
    /// ν(form) and/or I(F, poly).
    Value(InputArg),
    /// Zariski invariant; with `form`, the 𝒟₁ checks as well.
    Zariski(InputArg),
    /// Schematic dual graph of F₀⋯F_{g+1}.
    Graph {
        #[command(flatten)]
        input: InputArg,
        /// Print DOT text instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Runs the golden suite; exits nonzero on any mismatch.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
    },
}

/// Result of a command.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Json(Value),
    Text(String),
    /// A JSON report for a run that must exit nonzero.
    Failed(Value),
}

impl Output {
    pub fn render(&self, indent: usize) -> String {
        match self {
            Output::Json(v) | Output::Failed(v) => render_json(v, indent),
            Output::Text(t) => t.clone(),
        }
    }

    pub fn success(&self) -> bool {
        !matches!(self, Output::Failed(_))
    }
}

pub fn render_json(v: &Value, indent: usize) -> String {
    if indent == 0 {
        return v.to_string();
    }
    let pad = vec![b' '; indent];
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, serde_json::ser::PrettyFormatter::with_indent(&pad));
    v.serialize(&mut ser).expect("JSON values always serialize");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

pub fn error_document(e: &Error) -> Value {
    json!({ "error": e.kind(), "detail": e.to_string() })
}

fn load(input: &InputArg) -> Result<InputDoc> {
    let text =
        std::fs::read_to_string(&input.input).map_err(|e| Error::Parse(format!("{}: {e}", input.input.display())))?;
    InputDoc::parse(&text)
}

fn need<T>(v: Option<T>, key: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("input lacks \"{key}\"")))
}

fn branch(doc: &InputDoc) -> Result<&PuiseuxParam<Rational>> {
    doc.branch.as_ref().ok_or_else(|| Error::Parse("input lacks \"branch\"".into()))
}

fn system(doc: &InputDoc) -> Result<SemirootSystem> {
    canonical_semiroots(branch(doc)?)
}

fn problem(doc: &InputDoc, at: &TriplePoint) -> Result<DicriticalProblem> {
    let h1 = need(doc.h1.clone(), "H1")?;
    let h2 = need(doc.h2.clone(), "H2")?;
    DicriticalProblem::new(system(doc)?, at.i, at.j, h1, h2)
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Info(input) => info(&load(input)?).map(Output::Json),
        Command::Semiroots(input) => {
            let s = system(&load(input)?)?;
            let polys: Vec<Value> = s.all().iter().map(json::wpoly_to_json).collect();
            Ok(Output::Json(json!({ "semiroots": polys, "v": s.semigroup().v })))
        }
        Command::Expand(input) => expand(&load(input)?).map(Output::Json),
        Command::Azevedo { input, n, m } => {
            let doc = load(input)?;
            let pair = azevedo_decompose(&need(doc.form, "form")?, *n, *m)?;
            Ok(Output::Json(json!({
                "H1": json::wpoly_to_json(&pair.h1),
                "H2": json::wpoly_to_json(&pair.h2),
                "n": n,
                "m": m,
            })))
        }
        Command::Dicritical { input, at } => {
            let v = dicritical_test(&problem(&load(input)?, at)?)?;
            Ok(Output::Json(json!({
                "I_F_H1": v.i_h1,
                "v_i_plus_v_j": v.vij,
                "lhs": v.lhs(),
                "I_F_H2": v.i_h2,
                "dicritical": v.dicritical,
            })))
        }
        Command::Separatrices { input, at, order, special, at_u } => {
            separatrices(&load(input)?, at, *order, *special, at_u.as_deref()).map(Output::Json)
        }
        Command::Contact(input) => {
            let doc = load(input)?;
            let (p, q) = (branch(&doc)?, need(doc.other.as_ref(), "other")?);
            let c = contact(p, q);
            let mut out = json!({ "contact": contact_json(&c) });
            if let ContactValue::Exact(cv) = &c {
                let s = canonical_semiroots(p)?;
                let n_other = char_ladder(q)?.v0();
                out["intersection"] = json!(merle_intersection(s.ladder(), s.semigroup(), cv, n_other)?);
            }
            Ok(Output::Json(out))
        }
        Command::Value(input) => value(&load(input)?).map(Output::Json),
        Command::Zariski(input) => zariski(&load(input)?).map(Output::Json),
        Command::Graph { input, dot } => {
            let l = char_ladder(branch(&load(input)?)?)?;
            let text = emit_dual_graph_dot(&l);
            Ok(if *dot { Output::Text(text) } else { Output::Json(json!({ "genus": l.genus(), "dot": text })) })
        }
        Command::Selftest { seed } => {
            let reports = selftest::run_all(*seed);
            let all = reports.iter().all(|r| r.passed());
            let items: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "criterion": r.id, "title": r.title, "passed": r.passed(), "checks": r.checks, "failures": r.failures }))
                .collect();
            let doc = json!({ "passed": all, "seed": seed, "criteria": items });
            Ok(if all { Output::Json(doc) } else { Output::Failed(doc) })
        }
    }
}

fn info(doc: &InputDoc) -> Result<Value> {
    let p = branch(doc)?;
    let l = char_ladder(p)?;
    let s = semigroup(&l);
    let mut out = json::ladder_to_json(&l, &s);
    out["tschirnhausen_normal"] = json!(is_tschirnhausen_normal(p));
    out["lambda"] = match zariski_invariant(&tschirnhausen_normalize(p)) {
        Ok(z) => json!(z.lambda),
        Err(Error::InsufficientTruncation(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(out)
}

fn expand(doc: &InputDoc) -> Result<Value> {
    let s = system(doc)?;
    let h = need(doc.poly.as_ref(), "poly")?;
    let e = semiroot_expand(&s, h);
    let terms: Vec<Value> = e.terms.iter().map(|(d, c)| json!([d, json::rational_to_json(c)])).collect();
    let value = match leading_term(&s, &e) {
        Ok((_, v)) => json!(v),
        Err(Error::NoFiniteValue) => json!("infinite"),
        Err(err) => return Err(err),
    };
    Ok(json!({ "terms": terms, "x_valid_below": e.x_valid_below, "value": value }))
}

fn contact_json(c: &ContactValue) -> Value {
    match c {
        ContactValue::Exact(v) => json::rational_to_json(v),
        ContactValue::AtLeast(v) => json!({ "at_least": format_rational(v) }),
        ContactValue::Infinite => json!("infinite"),
    }
}

fn separatrices(doc: &InputDoc, at: &TriplePoint, order: usize, special: bool, at_u: Option<&str>) -> Result<Value> {
    let p = problem(doc, at)?;
    eprintln!("solving the separatrix family up to t^{order}");
    let f = solve_separatrix_family(&p, order)?;
    let mut out = json::family_to_json(&f);
    if let Some(u) = at_u {
        let u0 = parse_rational(u)?;
        out["specialized"] = json::param_to_json(&specialize_family(&f, &u0)?);
    }
    if special {
        let star = special_separatrix(&p, &f)?;
        let src = p.system().source();
        let nu_w = nu(&p.form(), src)?;
        out["special"] = json!({
            "param": json::param_to_json(&star),
            "contact": contact_json(&contact(src, &star)),
            "contact_formula": json::rational_to_json(&contact_value_formula(&p, nu_w)?),
            "I_F_Fstar": special_intersection(&p, nu_w)?,
            "nu": nu_w,
        });
    }
    Ok(out)
}

fn value(doc: &InputDoc) -> Result<Value> {
    let p = branch(doc)?;
    if doc.form.is_none() && doc.poly.is_none() {
        return Err(Error::Parse("input lacks \"form\" and \"poly\"".into()));
    }
    let mut out = json!({});
    if let Some(w) = &doc.form {
        out["nu"] = json!(nu(w, p)?);
    }
    if let Some(h) = &doc.poly {
        out["intersection"] = json!(intersection_multiplicity(p, h)?);
    }
    Ok(out)
}

fn zariski(doc: &InputDoc) -> Result<Value> {
    let p = branch(doc)?;
    let z = zariski_invariant(p)?;
    let mut out = json!({ "lambda": z.lambda, "flagged": z.flagged });
    if let Some(w) = &doc.form {
        let s = canonical_semiroots(p)?;
        let report = d1_membership(&s, w)?;
        out["d1_member"] = json!(report.member());
        out["d1_failures"] = json!(report.failures);
        if report.member() {
            let (holds, excess, _) = d1_zariski_bound_check(&s, w)?;
            out["nu_minus_v0"] = json!(excess);
            out["bound_holds"] = json!(holds);
        }
    }
    Ok(out)
}
