//! Command-line front end: argument model, report assembly and exit codes.
//!
//! Every run yields a [`Report`]. Exit status is 0 when all checks pass,
//! 1 when a mathematical check fails and 2 when the input is rejected.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hasse::coaction::verify_d8;
use hasse::corpus::{self, DEFAULT_SEED};
use hasse::frobenius::{self, FrobeniusError, FrobeniusStatus};
use hasse::group::FiniteGroup;
use hasse::hasse::{check_associativity, hasse_algebra, GradedAlgebraTable};
use hasse::io::{load_algebra, load_group, parse_generating_set};
use hasse::length::LengthTable;
use hasse::scalar::{format_rational, parse_rational};
use hasse::screen::dual_reflection_screen;
use hasse::series::cyclotomic_factor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser, Serialize)]
#[command(name = "hasse", version, about = "Length functions, Hasse algebras and Frobenius checks for finite groups")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for randomized sweeps; echoed in every report.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct GroupArgs {
    /// Group document path or builtin:NAME (trivial, cyclic:n, dihedral:n,
    /// symmetric:n, quaternion, product:A,B).
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct GeneratedArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArgs,
    /// Comma-separated element labels.
    #[arg(long, allow_hyphen_values = true)]
    pub gens: String,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct AlgebraArgs {
    /// Group for a Hasse algebra; needs --gens.
    #[arg(long, requires = "gens", required_unless_present = "algebra")]
    pub group: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gens: Option<String>,
    /// Algebra document with explicit structure constants or weights.
    #[arg(long, conflicts_with_all = ["group", "gens"])]
    pub algebra: Option<PathBuf>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Order, center and element orders.
    GroupInfo(GroupArgs),
    /// Length and one reduced word for every element.
    Lengths(GeneratedArgs),
    /// Poincaré polynomial, palindrome test and cyclotomic certificate.
    Poincare(GeneratedArgs),
    /// Multiplication table of a (skew) Hasse algebra.
    Hasse(AlgebraArgs),
    /// Frobenius test, Nakayama automorphism and beta scalars.
    Frobenius(AlgebraArgs),
    /// Screen all generating sets for dual reflection group candidates.
    Screen {
        #[command(flatten)]
        #[serde(flatten)]
        group: GroupArgs,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Checklist for the builtin dihedral coaction model.
    VerifyD8 {
        #[arg(long = "N", default_value_t = 8)]
        n: usize,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        a: String,
    },
    /// Every worked example; with --sweep also the full property sweep.
    Corpus {
        #[arg(long)]
        sweep: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    CheckFailed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
        }
    }

    fn from_passed(passed: bool) -> Self {
        if passed {
            Status::Ok
        } else {
            Status::CheckFailed
        }
    }
}

pub const INPUT_ERROR_EXIT: i32 = 2;

#[derive(Debug)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub data: Value,
}

impl Report {
    /// The text body, or one self-describing JSON document.
    pub fn render(&self, config: &RunConfig) -> String {
        match config.format {
            Format::Text => self.text.clone(),
            Format::Structured => {
                let doc = json!({
                    "tool": "hasse",
                    "version": env!("CARGO_PKG_VERSION"),
                    "seed": config.seed,
                    "config": config,
                    "status": self.status,
                    "report": self.data,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Renders an input error in the requested format.
pub fn render_error(config: &RunConfig, err: &anyhow::Error) -> String {
    match config.format {
        Format::Text => format!("error: {err:#}\n"),
        Format::Structured => {
            let doc = json!({
                "tool": "hasse",
                "version": env!("CARGO_PKG_VERSION"),
                "seed": config.seed,
                "config": config,
                "status": "input_error",
                "error": format!("{err:#}"),
            });
            serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
        }
    }
}

pub fn run(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::GroupInfo(g) => group_info(&load_group(&g.group)?),
        Command::Lengths(args) => {
            let (group, table) = length_table(args)?;
            lengths(&group, &table)
        }
        Command::Poincare(args) => {
            let (group, table) = length_table(args)?;
            poincare(&group, &table)
        }
        Command::Hasse(args) => hasse_table(&algebra(args)?),
        Command::Frobenius(args) => frobenius_report(&algebra(args)?),
        Command::Screen { group, max_size } => screen(&load_group(&group.group)?, *max_size),
        Command::VerifyD8 { n, q, a } => {
            let q = parse_rational(q).with_context(|| format!("--q: bad rational {q:?}"))?;
            let a = parse_rational(a).with_context(|| format!("--a: bad rational {a:?}"))?;
            let report = verify_d8(&q, &a, *n)?;
            let mut text = String::new();
            for c in &report.checks {
                writeln!(text, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
                writeln!(text, "       {}", c.detail)?;
            }
            Ok(Report {
                status: Status::from_passed(report.all_passed()),
                text,
                data: serde_json::to_value(&report)?,
            })
        }
        Command::Corpus { sweep } => corpus_report(config.seed, *sweep),
    }
}

fn length_table(args: &GeneratedArgs) -> Result<(FiniteGroup, LengthTable)> {
    let group = load_group(&args.group.group)?;
    let gens = parse_generating_set(&group, &args.gens)?;
    let table = LengthTable::new(&group, &gens).context("--gens")?;
    Ok((group, table))
}

fn algebra(args: &AlgebraArgs) -> Result<GradedAlgebraTable> {
    match (&args.algebra, &args.group, &args.gens) {
        (Some(path), _, _) => Ok(load_algebra(path)?),
        (None, Some(g), Some(gens)) => {
            let group = load_group(g)?;
            let gens = parse_generating_set(&group, gens)?;
            Ok(hasse_algebra(&group, &gens).context("--gens")?)
        }
        _ => bail!("give --algebra FILE, or --group with --gens"),
    }
}

fn labels(group: &FiniteGroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&g| group.label(g).to_string()).collect()
}

fn group_info(group: &FiniteGroup) -> Result<Report> {
    let center = group.center();
    let mut text = String::new();
    writeln!(text, "order: {}", group.order())?;
    writeln!(text, "abelian: {}", group.is_abelian())?;
    let center_note = if center.len() == group.order() { " (all of G)" } else { "" };
    writeln!(text, "center: {{{}}}{center_note}", labels(group, &center).join(", "))?;
    writeln!(text, "element orders:")?;
    for g in group.elements() {
        writeln!(text, "  {:>12}  {}", group.label(g), group.element_order(g))?;
    }
    let data = json!({
        "order": group.order(),
        "abelian": group.is_abelian(),
        "center": labels(group, &center),
        "elements": group.elements().map(|g| json!({
            "label": group.label(g),
            "order": group.element_order(g),
        })).collect::<Vec<_>>(),
    });
    Ok(Report { status: Status::Ok, text, data })
}

fn word_string(group: &FiniteGroup, word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        labels(group, word).join(" ")
    }
}

fn lengths(group: &FiniteGroup, table: &LengthTable) -> Result<Report> {
    let mut text = String::new();
    let mut rows = Vec::new();
    for g in group.elements() {
        let word = table.reduced_word(g);
        writeln!(text, "{:>12}  {}  {}", group.label(g), table.length(g), word_string(group, &word))?;
        rows.push(json!({
            "label": group.label(g),
            "length": table.length(g),
            "word": labels(group, &word),
        }));
    }
    let data = json!({
        "generating_set": table.generating_set().labels(group),
        "elements": rows,
    });
    Ok(Report { status: Status::Ok, text, data })
}

fn poincare(group: &FiniteGroup, table: &LengthTable) -> Result<Report> {
    let p = table.poincare_polynomial();
    let palindrome = p.is_palindrome()?;
    let cert = cyclotomic_factor(&p)?;
    let top = table.unique_max();
    let mut text = String::new();
    writeln!(text, "p(t) = {p}")?;
    writeln!(text, "palindrome: {palindrome}")?;
    match top {
        Some(m) => writeln!(text, "top element: {} (length {})", group.label(m), table.length(m))?,
        None => writeln!(text, "top element: none unique")?,
    }
    match &cert {
        Some(c) => {
            let pairs: Vec<String> = c.factors.iter().map(|(n, k)| format!("({n},{k})")).collect();
            writeln!(text, "cyclotomic: {c}  [{}]", pairs.join(" "))?
        }
        None => writeln!(text, "cyclotomic: no")?,
    }
    let data = json!({
        "polynomial": p,
        "display": p.to_string(),
        "palindrome": palindrome,
        "top": top.map(|m| group.label(m)),
        "certificate": cert,
    });
    Ok(Report { status: Status::Ok, text, data })
}

fn hasse_table(a: &GradedAlgebraTable) -> Result<Report> {
    let group = a.group();
    let assoc = check_associativity(a);
    let grading = a.check_grading();
    let mut text = String::new();
    writeln!(text, "dimension: {}", a.dim())?;
    writeln!(text, "Hilbert series: {}", a.hilbert_series())?;
    let mut products = Vec::new();
    for (g, h, c) in a.entries() {
        if g == group.identity() || h == group.identity() {
            continue;
        }
        let gh = group.mul(g, h);
        let coeff = if c.is_integer() && *c == num::One::one() { String::new() } else { format!("{} ", format_rational(c)) };
        writeln!(text, "  {} * {} = {coeff}{}", group.label(g), group.label(h), group.label(gh))?;
        products.push(json!([group.label(g), group.label(h), group.label(gh), format_rational(c)]));
    }
    let assoc_text = match assoc {
        Ok(()) => "ok".to_string(),
        Err((g, h, k)) => format!("fails at ({}, {}, {})", group.label(g), group.label(h), group.label(k)),
    };
    let grading_text = match grading {
        Ok(()) => "ok".to_string(),
        Err((g, h)) => format!("fails at ({}, {})", group.label(g), group.label(h)),
    };
    writeln!(text, "associativity: {assoc_text}")?;
    writeln!(text, "grading: {grading_text}")?;
    let data = json!({
        "dimension": a.dim(),
        "hilbert_series": a.hilbert_series(),
        "products": products,
        "associativity": assoc_text,
        "grading": grading_text,
    });
    Ok(Report { status: Status::from_passed(assoc.is_ok() && grading.is_ok()), text, data })
}

fn frobenius_report(a: &GradedAlgebraTable) -> Result<Report> {
    let group = a.group();
    let palindrome = a.lengths().poincare_polynomial().is_palindrome()?;
    let mut text = String::new();
    let analysis = match frobenius::analyze(a) {
        Ok(an) => an,
        Err(e @ (FrobeniusError::NoUniqueTop | FrobeniusError::NotFrobenius)) => bail!(e),
        Err(e) => {
            writeln!(text, "consistency failure: {e}")?;
            return Ok(Report { status: Status::CheckFailed, text, data: json!({ "error": e.to_string() }) });
        }
    };
    // A Hasse-type table with a palindromic Poincaré polynomial must be Frobenius.
    let expected_frobenius = palindrome && a.top().is_some();
    let frob = analysis.status == FrobeniusStatus::Frobenius;
    writeln!(text, "frobenius: {frob} ({})", analysis.status)?;
    writeln!(text, "palindrome: {palindrome}")?;
    if let Some(m) = analysis.top {
        writeln!(text, "m: {} (length {})", group.label(m), a.degree(m))?;
    }
    let mut data = json!({
        "frobenius": frob,
        "status": analysis.status,
        "palindrome": palindrome,
        "top": analysis.top.map(|m| group.label(m)),
    });
    if let (Some(mu), Some(beta)) = (&analysis.nakayama, &analysis.beta) {
        let symmetric = analysis.symmetric.unwrap_or(false);
        writeln!(text, "symmetric: {symmetric}")?;
        writeln!(text, "nakayama: {}", mu.cycle_notation(group))?;
        if let Some((order, count)) = analysis.degree_one_order {
            writeln!(text, "nakayama order on degree one: {order} (divides {count}!)")?;
        }
        writeln!(text, "nakayama is conjugation by m: {}", analysis.is_conjugation.unwrap_or(false))?;
        writeln!(text, "beta:")?;
        for g in group.elements() {
            writeln!(text, "  {:>12}  {}", group.label(g), format_rational(&beta[g]))?;
        }
        if let Some(partner) = &analysis.pairing_partner {
            writeln!(text, "pairing partners:")?;
            for g in group.elements() {
                writeln!(text, "  {:>12}  {}", group.label(g), group.label(partner[g]))?;
            }
        }
        data["symmetric"] = json!(symmetric);
        data["nakayama"] = json!({
            "cycles": mu.cycle_notation(group),
            "images": group.elements().map(|g| group.label(mu.perm()[g])).collect::<Vec<_>>(),
            "beta": beta.iter().map(format_rational).collect::<Vec<_>>(),
            "degree_one_order": analysis.degree_one_order.map(|(o, _)| o),
            "is_conjugation": analysis.is_conjugation,
        });
        data["pairing_partners"] = json!(analysis
            .pairing_partner
            .as_ref()
            .map(|p| group.elements().map(|g| group.label(p[g])).collect::<Vec<_>>()));
    }
    let consistent = frob == expected_frobenius
        && analysis.pairing_partner.is_some() == frob
        && analysis.is_conjugation.unwrap_or(true);
    Ok(Report { status: Status::from_passed(consistent), text, data })
}

fn screen(group: &FiniteGroup, max_size: Option<usize>) -> Result<Report> {
    let report = dual_reflection_screen(group, max_size)?;
    let verified = report.verify();
    let mut text = String::new();
    writeln!(text, "subsets scanned: {}", report.scanned)?;
    for r in hasse::screen::Rejection::ALL {
        writeln!(text, "  rejected, {}: {}", r.describe(), report.rejected.get(r))?;
    }
    writeln!(text, "candidate polynomials: {}", report.candidates.len())?;
    for b in &report.candidates {
        writeln!(text, "  p(t) = {}  [{}]  {} candidate sets", b.polynomial, b.certificate, b.sets.len())?;
        for s in &b.sets {
            writeln!(text, "    {{{}}}  m = {} (length {})", s.labels.join(", "), s.top_label, s.top_length)?;
        }
    }
    if let Err(e) = &verified {
        writeln!(text, "report inconsistency: {e}")?;
    }
    Ok(Report { status: Status::from_passed(verified.is_ok()), text, data: serde_json::to_value(&report)? })
}

fn corpus_report(seed: u64, sweep: bool) -> Result<Report> {
    let report = corpus::run_corpus(seed);
    let mut text = String::new();
    for case in &report.cases {
        writeln!(text, "[{}] {}", if case.passed() { "PASS" } else { "FAIL" }, case.name)?;
        for c in case.checks.iter().filter(|c| !c.passed) {
            writeln!(text, "       {}: {}", c.name, c.detail)?;
        }
    }
    let mut passed = report.all_passed();
    let mut data = json!({ "corpus": report });
    if sweep {
        let s = corpus::property_sweep(
            &corpus::standard_groups(),
            corpus::SWEEP_MAX_SIZE,
            corpus::TWISTS_PER_INSTANCE,
            seed,
        );
        writeln!(
            text,
            "[{}] property sweep: {} groups, {} generating sets, {} Frobenius, {} twists, {} violations",
            if s.violations.is_empty() { "PASS" } else { "FAIL" },
            s.groups,
            s.generating_sets,
            s.frobenius,
            s.twists,
            s.violations.len()
        )?;
        for v in &s.violations {
            writeln!(text, "       {v}")?;
        }
        passed &= s.violations.is_empty();
        data["sweep"] = serde_json::to_value(&s)?;
    }
    writeln!(text, "{}", if passed { "all checks passed" } else { "some checks failed" })?;
    Ok(Report { status: Status::from_passed(passed), text, data })
}
