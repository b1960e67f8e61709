//! `braidkh`: command-line front end for braidkh-core.
//!
//! Exit status is 0 on success, 2 when the answer is a mathematical "no"
//! (unequal braids, a nontrivial braid, flype pair with different SKh) and 1
//! on any error, including bad usage.

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use braidkh_core::burau::{bigelow_kernel_word, burau_kernel_check, burau_matrix, char_poly};
use braidkh_core::complex::ComplexOptions;
use braidkh_core::garside::{left_normal_form, words_equal};
use braidkh_core::homology::{kh_with, skh_with};
use braidkh_core::invariants::{
    check_crossings, flype_pair, is_cyclic_rotation, is_trivial, veering_report,
    words_equal_homological, PlamenevskayaClass,
};
use braidkh_core::{AnnularClosureDiagram, BraidWord, GradedDims, Verdict};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

const NON_CONJUGACY_CITATION: &str =
    "non-conjugacy of the pair is not checked here; see Birman-Menasco [Tab. 2, MR2468377]";

#[derive(Parser)]
#[command(
    name = "braidkh",
    version,
    about = "Annular Khovanov homology of braid closures"
)]
struct Cli {
    /// Emit one key-sorted JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time (text and JSON); off by default so output is
    /// byte-for-byte reproducible.
    #[arg(long, global = true)]
    timing: bool,
    /// Refuse homology computations on more crossings than this.
    #[arg(long, global = true, default_value_t = braidkh_core::complex::DEFAULT_MAX_CROSSINGS)]
    max_crossings: usize,
    /// Strand count; defaults to one more than the largest generator index.
    #[arg(long, global = true)]
    strands: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sutured annular Khovanov homology SKh of the closure.
    Skh {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Khovanov homology Kh of the closure in S^3.
    Kh {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Word problem: are the two words the same braid?
    Equal {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long, value_enum, default_value_t = Method::Skh)]
        method: Method,
    },
    /// Is the word the trivial braid (homological test)?
    Trivial {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Plamenevskaya class of the word and of its mirror.
    Plam {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Burau matrix of the word.
    Burau {
        /// The braid word; omit together with --bigelow.
        #[arg(allow_hyphen_values = true, required_unless_present = "bigelow")]
        word: Option<String>,
        /// Use Bigelow's B5 element of the Burau kernel.
        #[arg(long, conflicts_with = "word")]
        bigelow: bool,
        /// Also print det(λ - Ψ(w)).
        #[arg(long)]
        charpoly: bool,
    },
    /// The flype pair σ1^u σ2^v σ1^w σ2^s and σ1^u σ2^s σ1^w σ2^v in B3.
    Flype {
        #[arg(long, allow_hyphen_values = true)]
        u: i32,
        #[arg(long, allow_hyphen_values = true)]
        v: i32,
        #[arg(long, allow_hyphen_values = true)]
        w: i32,
        /// Sign of the single crossing: `+` or `-`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign, action = clap::ArgAction::Set)]
        sign: bool,
        /// Compare the SKh of the two words.
        #[arg(long)]
        check: bool,
    },
    /// Dump one resolution of the closure (debugging aid).
    Resolve {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Vertex of the cube; bit t is the smoothing at crossing t.
        vertex: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Skh,
    Garside,
    Both,
}

fn parse_sign(s: &str) -> std::result::Result<bool, String> {
    match s {
        "+" | "+1" | "1" | "positive" => Ok(true),
        "-" | "-1" | "negative" => Ok(false),
        _ => Err(format!("expected + or -, got `{s}`")),
    }
}

/// What a subcommand produced: text lines, the JSON payload and the exit
/// status.
struct Outcome {
    lines: Vec<String>,
    fields: Map<String, Value>,
    negative: bool,
}

impl Outcome {
    fn new(command: &str, input: Value) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("input".into(), input);
        for key in ["dims", "total", "verdict", "time_ms"] {
            fields.insert(key.into(), Value::Null);
        }
        Outcome {
            lines: Vec::new(),
            fields,
            negative: false,
        }
    }

    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    fn dims(&mut self, dims: &GradedDims) {
        self.set("dims", dims_json(dims));
        self.set("total", json!(dims.total()));
    }
}

fn dims_json(dims: &GradedDims) -> Value {
    Value::Array(
        dims.iter()
            .map(|(d, n)| match d.k {
                Some(k) => json!([d.i, d.j, k, n]),
                None => json!([d.i, d.j, n]),
            })
            .collect(),
    )
}

fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    // Words may start with `-`, so positionals accept hyphens; anything that
    // is not a negative letter must have been meant as a flag.
    let trimmed = text.trim_start();
    if trimmed.starts_with('-') && !trimmed[1..].starts_with(|c: char| c.is_ascii_digit()) {
        bail!("unexpected argument `{text}` (unknown flag?)");
    }
    BraidWord::parse(text, strands).with_context(|| format!("cannot parse braid word `{text}`"))
}

fn options(cli: &Cli) -> ComplexOptions {
    ComplexOptions {
        max_crossings: cli.max_crossings,
    }
}

fn guarded(cli: &Cli, w: &BraidWord) -> Result<()> {
    check_crossings(w, options(cli)).map_err(Into::into)
}

fn homology_command(cli: &Cli, name: &str, text: &str, annular: bool) -> Result<Outcome> {
    let w = parse_word(text, cli.strands)?;
    guarded(cli, &w)?;
    let d = AnnularClosureDiagram::new(&w);
    let dims = if annular {
        skh_with(&d, options(cli))?
    } else {
        kh_with(&d, options(cli))?
    };
    let mut out = Outcome::new(name, json!([w.to_string()]));
    out.set("strands", json!(w.strands()));
    out.line(dims.poincare_polynomial());
    out.line(format!("total {}", dims.total()));
    out.dims(&dims);
    Ok(out)
}

fn verdict_line(label: &str, equal: bool) -> String {
    format!("{label}: {}", if equal { "equal" } else { "unequal" })
}

fn equal_command(cli: &Cli, first: &str, second: &str, method: Method) -> Result<Outcome> {
    let a = parse_word(first, cli.strands)?;
    let b = parse_word(second, cli.strands)?;
    if a.strands() != b.strands() {
        bail!(
            "strand count mismatch: {} vs {} (pass --strands to compare in a common B_n)",
            a.strands(),
            b.strands()
        );
    }
    let mut out = Outcome::new("equal", json!([a.to_string(), b.to_string()]));
    let homological = if method != Method::Garside {
        let difference = a.concat(&b.inverse())?.free_reduce();
        guarded(cli, &difference)?;
        let decision = words_equal_homological(&a, &b, options(cli))?;
        out.line(format!("skh: {}", decision.verdict.as_str()));
        out.set("skh", json!(decision.verdict.as_str()));
        if let Some((computed, trivial)) = &decision.witness {
            out.line(format!("  SKh of difference: {computed}"));
            out.line(format!("  SKh of trivial:    {trivial}"));
            out.dims(computed);
        }
        Some(decision.verdict.is_equal())
    } else {
        None
    };
    let garside = if method != Method::Skh {
        let equal = words_equal(&a, &b)?;
        out.line(verdict_line("garside", equal));
        out.set("garside", json!(if equal { "equal" } else { "unequal" }));
        Some(equal)
    } else {
        None
    };
    let equal = match (homological, garside) {
        (Some(h), Some(g)) => {
            if h != g {
                bail!("DISAGREE: skh says {h}, garside says {g}");
            }
            out.line("AGREE");
            out.set("agree", json!(true));
            h
        }
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => unreachable!("some method is always selected"),
    };
    out.set("verdict", json!(if equal { "equal" } else { "unequal" }));
    out.negative = !equal;
    Ok(out)
}

fn trivial_command(cli: &Cli, text: &str) -> Result<Outcome> {
    let w = parse_word(text, cli.strands)?;
    if w.is_pure() {
        guarded(cli, &w)?;
    }
    let decision = is_trivial(&w, options(cli))?;
    let mut out = Outcome::new("trivial", json!([w.to_string()]));
    out.line(format!("verdict: {}", decision.verdict.as_str()));
    if let Some((computed, trivial)) = &decision.witness {
        out.line(format!("SKh:         {computed}"));
        out.line(format!("trivial SKh: {trivial}"));
        out.dims(computed);
    }
    out.set("verdict", json!(decision.verdict.as_str()));
    out.negative = decision.verdict != Verdict::Equal;
    Ok(out)
}

fn psi_json(psi: &PlamenevskayaClass) -> Value {
    json!({"i": psi.i, "j": psi.j, "nonzero": psi.nonzero})
}

fn psi_line(label: &str, psi: &PlamenevskayaClass) -> String {
    let state = if psi.nonzero { "nonzero" } else { "0" };
    format!("{label} = {state} at (i, j) = ({}, {})", psi.i, psi.j)
}

fn plam_command(cli: &Cli, text: &str) -> Result<Outcome> {
    let w = parse_word(text, cli.strands)?;
    guarded(cli, &w)?;
    let report = veering_report(&w, options(cli))?;
    let mut out = Outcome::new("plam", json!([w.to_string()]));
    out.line(psi_line("psi(w)", &report.psi));
    out.line(psi_line("psi(mirror w)", &report.mirror_psi));
    let certified = report.certifies_trivial();
    out.line(if certified {
        "certificate: both classes nonzero, so w is right- and left-veering, hence trivial"
    } else {
        "no certificate: triviality needs both classes nonzero"
    });
    out.set("psi", psi_json(&report.psi));
    out.set("mirror_psi", psi_json(&report.mirror_psi));
    out.set("certificate", json!(certified));
    Ok(out)
}

fn burau_command(cli: &Cli, word: Option<&str>, bigelow: bool, charpoly: bool) -> Result<Outcome> {
    let fixture = bigelow_kernel_word();
    let w = match word {
        Some(text) => parse_word(text, cli.strands)?,
        None => {
            debug_assert!(bigelow);
            fixture.clone()
        }
    };
    let is_fixture = w == fixture;
    let m = burau_matrix(&w);
    let mut out = Outcome::new("burau", json!([w.to_string()]));
    out.line(format!(
        "Burau matrix of a {}-letter word in B_{}:",
        w.len(),
        w.strands()
    ));
    let rows: Vec<Vec<String>> = (0..m.size())
        .map(|r| (0..m.size()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    for row in &rows {
        out.line(format!("  [ {} ]", row.join(" | ")));
    }
    let identity = burau_kernel_check(&w);
    out.line(format!(
        "identity matrix: {}",
        if identity { "yes" } else { "no" }
    ));
    out.set("matrix", json!(rows));
    out.set("identity", json!(identity));
    if charpoly {
        let p = char_poly(&m);
        out.line(format!("det(L - M) = {p}"));
        out.set("charpoly", json!(p.to_string()));
    }
    if is_fixture {
        let trivial = left_normal_form(&w).is_identity();
        out.line(format!(
            "garside: {} (left normal form {} the identity)",
            if trivial { "trivial" } else { "nontrivial" },
            if trivial { "is" } else { "is not" }
        ));
        out.line(format!(
            "note: Bigelow's B5 kernel element. Telling it apart from the trivial braid by SKh \
             is out of computational range ({} crossings, a 2^{} cube), so it is not attempted.",
            w.len(),
            w.len()
        ));
        out.set("garside_trivial", json!(trivial));
    }
    Ok(out)
}

fn flype_command(cli: &Cli, u: i32, v: i32, w: i32, sign: bool, check: bool) -> Result<Outcome> {
    let (p, q) = flype_pair(u, v, w, sign);
    let mut out = Outcome::new(
        "flype",
        json!({"u": u, "v": v, "w": w, "sign": if sign { "+" } else { "-" }}),
    );
    out.line(format!("first:  {p}"));
    out.line(format!("second: {q}"));
    let rotation = is_cyclic_rotation(&q, &p.reverse());
    out.line(format!(
        "second is a cyclic rotation of reverse(first): {}",
        if rotation { "yes" } else { "no" }
    ));
    out.set("first", json!(p.to_string()));
    out.set("second", json!(q.to_string()));
    if check {
        guarded(cli, &p)?;
        let sp = skh_with(&AnnularClosureDiagram::new(&p), options(cli))?;
        let sq = skh_with(&AnnularClosureDiagram::new(&q), options(cli))?;
        let equal = sp == sq;
        out.line(format!("SKh(first):  {sp}"));
        out.line(format!("SKh(second): {sq}"));
        out.line(verdict_line("SKh", equal));
        out.dims(&sp);
        out.set("verdict", json!(if equal { "equal" } else { "unequal" }));
        out.negative = !equal;
    }
    out.line(NON_CONJUGACY_CITATION);
    Ok(out)
}

fn resolve_command(cli: &Cli, text: &str, vertex: u64) -> Result<Outcome> {
    let w = parse_word(text, cli.strands)?;
    let d = AnnularClosureDiagram::new(&w);
    let state = d.resolve(vertex)?;
    let c = d.crossing_count();
    let mut out = Outcome::new("resolve", json!([w.to_string(), vertex]));
    let bits: String = (0..c)
        .map(|t| if vertex >> t & 1 == 1 { '1' } else { '0' })
        .collect();
    out.line(format!(
        "vertex {vertex} (bits by crossing: {}) on {} strands, {c} crossings",
        if bits.is_empty() { "-" } else { &bits },
        w.strands()
    ));
    out.line(format!(
        "{} circles, {} essential; braid-like vertex is {}",
        state.circles.len(),
        state.essential_count(),
        d.braidlike_vertex()
    ));
    let mut circles = Vec::new();
    for (idx, circle) in state.circles.iter().enumerate() {
        out.line(format!(
            "circle {idx}: winding {}, closure arcs {}, nodes {:?}",
            circle.winding, circle.cut_crossings, circle.nodes
        ));
        circles.push(json!({
            "winding": circle.winding,
            "closure_arcs": circle.cut_crossings,
            "nodes": circle.nodes,
        }));
    }
    out.set("circles", Value::Array(circles));
    Ok(out)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Skh { word } => homology_command(cli, "skh", word, true),
        Command::Kh { word } => homology_command(cli, "kh", word, false),
        Command::Equal {
            first,
            second,
            method,
        } => equal_command(cli, first, second, *method),
        Command::Trivial { word } => trivial_command(cli, word),
        Command::Plam { word } => plam_command(cli, word),
        Command::Burau {
            word,
            bigelow,
            charpoly,
        } => burau_command(cli, word.as_deref(), *bigelow, *charpoly),
        Command::Flype {
            u,
            v,
            w,
            sign,
            check,
        } => flype_command(cli, *u, *v, *w, *sign, *check),
        Command::Resolve { word, vertex } => resolve_command(cli, word, *vertex),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(mut out) => {
            let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            if cli.json {
                if cli.timing {
                    out.set("time_ms", json!(elapsed_ms));
                }
                println!("{}", Value::Object(out.fields));
            } else {
                for line in &out.lines {
                    println!("{line}");
                }
                if cli.timing {
                    println!("time {elapsed_ms:.1} ms");
                }
            }
            if out.negative {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
