//! Command-line front end.
//!
//! Every command prints JSON lines: a header echoing the arguments with the
//! SHA-256 of each input file, then one line per result, then a short
//! human-readable summary unless `--json` is given. Exit codes are 0 when
//! everything passes, 1 when a check fails and 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cacti::{Cactus, CactusJson};
use crate::exactq::{format_rational, Matrix, Rational};
use crate::fatgraph::{ChordDiagram, FatGraph, FatGraphJson};
use crate::frob2tqft::{dw_center_algebra, dw_partition_brute, CobordismWord, FiniteGroup, FrobeniusAlgebra};
use crate::gbv::{Convention, GradedOperatorAlgebra, Report, DELTA};
use crate::hochschild::{
    bracket_table, cup_table, hochschild_cohomology, hochschild_homology, DGAlgebra, DGBimodule, ProductTable,
    DEFAULT_TRUNCATION,
};
use crate::io::StructureConstants;
use crate::operad::{check_algebra, EndomorphismAssignment, Preset};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "loopforge", version, about = "Exact string-topology combinatorics and algebra")]
struct Cli {
    /// Print only JSON lines, without the closing summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fat graphs and chord diagrams.
    #[command(subcommand)]
    Fatgraph(FatgraphCmd),
    /// Frobenius algebras and 2D TQFTs.
    #[command(subcommand)]
    Tqft(TqftCmd),
    /// Truncated Hochschild homology and cohomology.
    #[command(subcommand)]
    Hochschild(HochschildCmd),
    /// Axiom checkers.
    #[command(subcommand)]
    Check(CheckCmd),
    /// The cacti operad.
    #[command(subcommand)]
    Cacti(CactiCmd),
}

#[derive(Subcommand, Debug)]
enum FatgraphCmd {
    /// Boundary cycles, Euler characteristic and genus.
    Analyze {
        path: String,
        /// Comma-separated boundary-cycle indices of the incoming circles.
        #[arg(long)]
        chord: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum TqftCmd {
    /// Matrix of a cobordism word.
    Eval {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        word: String,
    },
    /// Dijkgraaf-Witten invariant of a closed surface, with the brute-force count.
    Dw {
        /// Built-in name (z<n>, s3, klein4, ...) or a Cayley-table file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        genus: usize,
    },
    /// Closed-surface invariant of a Frobenius algebra.
    Surface {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        genus: usize,
    },
}

#[derive(Args, Debug)]
struct HochschildArgs {
    #[arg(long)]
    algebra: String,
    /// Degree window `a..b`.
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    truncation: usize,
    /// `regular` (the algebra) or `dual` (its linear dual).
    #[arg(long, default_value = "regular")]
    coefficients: String,
}

#[derive(Subcommand, Debug)]
enum HochschildCmd {
    Homology {
        #[command(flatten)]
        args: HochschildArgs,
    },
    Cohomology {
        #[command(flatten)]
        args: HochschildArgs,
        /// Cup product table `HH^p × HH^q`, given as `p,q`.
        #[arg(long)]
        cup: Option<String>,
        /// Gerstenhaber bracket table `HH^p × HH^q`, given as `p,q`.
        #[arg(long)]
        bracket: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Algebra over Comm, Ass, Lie or Poisson.
    Operad {
        #[arg(long)]
        preset: Preset,
        #[arg(long)]
        algebra: String,
    },
    /// BV, BV_{n+1} or Gerstenhaber structure.
    Gbv {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = DELTA)]
        delta: String,
        /// `gbv`, `sw` or `both`.
        #[arg(long, default_value = "gbv")]
        convention: String,
        /// Check the BV_{n+1} identities instead.
        #[arg(long)]
        nplus1: Option<u32>,
        /// Check only that the file's bracket is a Gerstenhaber bracket of this degree.
        #[arg(long, allow_hyphen_values = true)]
        gerstenhaber: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum CactiCmd {
    /// Arcs of the pinching map.
    Trace { path: String },
    /// `first ∘_i second` in canonical form.
    Compose {
        first: String,
        i: usize,
        second: String,
        /// Also compare `first ∘_i (second ∘_j third)` with
        /// `(first ∘_i second) ∘_{i+j-1} third`, given as `j third`.
        #[arg(long, num_args = 2, value_names = ["J", "THIRD"])]
        assoc: Option<Vec<String>>,
    },
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Reads input files and remembers their digests.
#[derive(Default)]
struct Inputs {
    seen: Vec<(String, String)>,
}

impl Inputs {
    fn read(&mut self, path: &str) -> Result<String, InputError> {
        let bytes = std::fs::read(path).map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
        self.seen.push((path.to_string(), hex::encode(Sha256::digest(&bytes))));
        String::from_utf8(bytes).map_err(|_| InputError(format!("{path} is not UTF-8")))
    }

    fn constants(&mut self, path: &str) -> Result<StructureConstants, InputError> {
        StructureConstants::parse(&self.read(path)?).map_err(|e| InputError(format!("{path}: {e}")))
    }

    fn cactus(&mut self, path: &str) -> Result<Cactus, InputError> {
        CactusJson::parse(&self.read(path)?).map_err(|e| InputError(format!("{path}: {e}")))
    }
}

struct Outcome {
    results: Vec<Value>,
    summary: Vec<String>,
    passed: bool,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            results: Vec::new(),
            summary: Vec::new(),
            passed: true,
        }
    }

    fn push(&mut self, v: impl Serialize) {
        self.results.push(serde_json::to_value(v).expect("serializable"));
    }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(q).collect()).collect()
}

fn parse_window(s: &str) -> Result<RangeInclusive<i64>, InputError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| InputError(format!("window {s:?} must look like a..b")))?;
    let a = a.trim().parse::<i64>().map_err(|_| InputError(format!("bad window start {a:?}")))?;
    let b = b
        .trim()
        .trim_start_matches('=')
        .parse::<i64>()
        .map_err(|_| InputError(format!("bad window end {b:?}")))?;
    Ok(a..=b)
}

fn parse_pair(s: &str) -> Result<(i64, i64), InputError> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| InputError(format!("expected p,q, found {s:?}")))?;
    match v[..] {
        [p, q] => Ok((p, q)),
        _ => Err(InputError(format!("expected p,q, found {s:?}"))),
    }
}

fn fatgraph_analyze(inputs: &mut Inputs, path: &str, chord: Option<&str>) -> Result<Outcome, InputError> {
    let g: FatGraph = FatGraphJson::parse(&inputs.read(path)?).map_err(|e| InputError(format!("{path}: {e}")))?;
    let p = g.boundary_cycles();
    let (genus, n) = g.genus()?;
    let mut out = Outcome::new();
    out.push(json!({
        "boundary_cycles": g.cycle_labels(&p),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "euler_characteristic": g.euler_characteristic(),
        "genus": genus,
        "boundary_components": n,
    }));
    out.summary.push(format!("boundary cycles {}", g.format_cycles(&p)));
    out.summary
        .push(format!("chi = {}, genus = {genus}, boundary components = {n}", g.euler_characteristic()));
    if let Some(list) = chord {
        let incoming: Vec<usize> = list
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| InputError(format!("--chord expects indices like 0,1, found {list:?}")))?;
        match ChordDiagram::validate(&g, &incoming) {
            Ok(d) => {
                let r = d.reduction()?;
                let rp = r.graph.boundary_cycles();
                let (dg, dp, dq) = d.diagram_type();
                out.push(json!({
                    "chord_diagram": {
                        "type": [dg, dp, dq],
                        "ghost_edges": d.ghost_edge_count(),
                        "reduced_boundary_cycles": r.graph.cycle_labels(&rp),
                        "reduced_incoming": r.incoming,
                    }
                }));
                out.summary.push(format!(
                    "chord diagram of type ({dg}; {dp}, {dq}); reduced cycles {}",
                    r.graph.format_cycles(&rp)
                ));
            }
            Err(e) => {
                out.push(json!({"chord_diagram": {"valid": false, "reason": e.to_string()}}));
                out.summary.push(format!("not a chord diagram: {e}"));
                out.passed = false;
            }
        }
    }
    Ok(out)
}

fn frobenius(inputs: &mut Inputs, path: &str) -> Result<FrobeniusAlgebra, InputError> {
    let sc = inputs.constants(path)?;
    FrobeniusAlgebra::from_constants(&sc).map_err(|e| InputError(format!("{path}: {e}")))
}

fn group(inputs: &mut Inputs, name: &str) -> Result<FiniteGroup, InputError> {
    if std::path::Path::new(name).is_file() {
        let text = inputs.read(name)?;
        return FiniteGroup::parse(&text).map_err(|e| InputError(format!("{name}: {e}")));
    }
    Ok(FiniteGroup::builtin(name)?)
}

fn tqft(inputs: &mut Inputs, cmd: &TqftCmd) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    match cmd {
        TqftCmd::Eval { algebra, word } => {
            let f = frobenius(inputs, algebra)?;
            let w = CobordismWord::parse(&inputs.read(word)?).map_err(|e| InputError(format!("{word}: {e}")))?;
            let m = f.eval(&w);
            out.push(json!({"inputs": w.inputs(), "outputs": w.outputs(), "matrix": matrix_rows(&m)}));
            out.summary.push(format!("{} x {} matrix", m.rows(), m.cols()));
        }
        TqftCmd::Dw { group: name, genus } => {
            let g = group(inputs, name)?;
            let brute = dw_partition_brute(&g, *genus)?;
            let z = dw_center_algebra(&g).closed_surface_invariant(*genus);
            let agree = z == brute;
            out.push(json!({
                "group": name,
                "order": g.order(),
                "genus": genus,
                "invariant": q(&z),
                "brute_force": q(&brute),
                "agree": agree,
            }));
            out.summary.push(format!("Z(genus {genus}) = {}", q(&z)));
            out.summary.push(if agree {
                "brute-force bundle count agrees".to_string()
            } else {
                format!("brute-force bundle count disagrees: {}", q(&brute))
            });
            out.passed = agree;
        }
        TqftCmd::Surface { algebra, genus } => {
            let f = frobenius(inputs, algebra)?;
            match f.surface_invariant_checked(*genus) {
                Ok(z) => {
                    out.push(json!({"genus": genus, "invariant": q(&z), "routes_agree": true}));
                    out.summary.push(format!("Z(genus {genus}) = {}", q(&z)));
                }
                Err((a, b)) => {
                    out.push(json!({"genus": genus, "handle": q(&a), "word": q(&b), "routes_agree": false}));
                    out.summary.push(format!("handle route {} differs from word route {}", q(&a), q(&b)));
                    out.passed = false;
                }
            }
        }
    }
    Ok(out)
}

fn table_json(name: &str, t: &ProductTable) -> Value {
    let entries: Vec<Vec<Vec<String>>> = t
        .entries
        .iter()
        .map(|row| row.iter().map(|v| v.iter().map(q).collect()).collect())
        .collect();
    json!({name: {"degrees": [t.degrees.0, t.degrees.1, t.degrees.2], "entries": entries}})
}

fn hochschild(inputs: &mut Inputs, cmd: &HochschildCmd) -> Result<Outcome, InputError> {
    let (args, cohomology) = match cmd {
        HochschildCmd::Homology { args } => (args, false),
        HochschildCmd::Cohomology { args, .. } => (args, true),
    };
    let sc = inputs.constants(&args.algebra)?;
    let a = DGAlgebra::from_constants(&sc).map_err(|e| InputError(format!("{}: {e}", args.algebra)))?;
    let m = match args.coefficients.as_str() {
        "regular" => DGBimodule::regular(&a),
        "dual" => DGBimodule::dual(&a)?,
        other => return Err(InputError(format!("unknown coefficients {other:?} (regular, dual)"))),
    };
    let window = parse_window(&args.window)?;
    let report = if cohomology {
        hochschild_cohomology(&a, &m, args.truncation, window.clone())?
    } else {
        hochschild_homology(&a, &m, args.truncation, window.clone())?
    };
    let mut out = Outcome::new();
    for (k, d) in &report.dims {
        out.push(json!({"degree": k, "dim": d}));
    }
    out.push(json!({"truncation": report.truncation, "stable": report.stable}));
    let dims: Vec<String> = report.dims_in_order().iter().map(|d| d.to_string()).collect();
    out.summary.push(format!(
        "HH{} dims {} on {}..{} ({})",
        if cohomology { "^*" } else { "_*" },
        dims.join(" "),
        window.start(),
        window.end(),
        if report.stable { "stable" } else { "not stable at this truncation" }
    ));
    if let HochschildCmd::Cohomology { cup, bracket, .. } = cmd {
        if (cup.is_some() || bracket.is_some()) && args.coefficients != "regular" {
            return Err(InputError("--cup and --bracket need regular coefficients".into()));
        }
        if let Some(s) = cup {
            let (p, r) = parse_pair(s)?;
            let t = cup_table(&a, args.truncation, p, r)?;
            out.summary.push(format!("cup HH^{p} x HH^{r} -> HH^{}", p + r));
            out.results.push(table_json("cup", &t));
        }
        if let Some(s) = bracket {
            let (p, r) = parse_pair(s)?;
            let t = bracket_table(&a, args.truncation, p, r)?;
            out.summary.push(format!("bracket HH^{p} x HH^{r} -> HH^{}", p + r - 1));
            out.results.push(table_json("bracket", &t));
        }
    }
    Ok(out)
}

fn gbv_lines(out: &mut Outcome, convention: Option<Convention>, r: &Report) {
    for c in &r.clauses {
        out.push(json!({
            "check": r.check,
            "convention": convention,
            "clause": c.name,
            "passed": c.passed,
            "witness": c.witness,
        }));
    }
    let label = match convention {
        Some(c) => format!("{} ({})", r.check, serde_json::to_value(c).unwrap().as_str().unwrap()),
        None => r.check.clone(),
    };
    out.summary.push(match r.failures()[..] {
        [] => format!("{label}: all {} clauses pass", r.clauses.len()),
        ref f => format!("{label}: fails {}", f.join(", ")),
    });
    out.passed &= r.passed();
}

fn check(inputs: &mut Inputs, cmd: &CheckCmd) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    match cmd {
        CheckCmd::Operad { preset, algebra } => {
            let sc = inputs.constants(algebra)?;
            let a = EndomorphismAssignment::from_constants(&sc)?;
            let r = check_algebra(*preset, &a)?;
            for c in &r.clauses {
                out.push(c);
            }
            let failed: Vec<&str> = r.clauses.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
            out.summary.push(if failed.is_empty() {
                format!("{preset}: all {} clauses pass", r.clauses.len())
            } else {
                format!("{preset}: fails {}", failed.join(", "))
            });
            out.passed = r.passed();
        }
        CheckCmd::Gbv {
            algebra,
            delta,
            convention,
            nplus1,
            gerstenhaber,
        } => {
            let sc = inputs.constants(algebra)?;
            let a = GradedOperatorAlgebra::from_constants(&sc).map_err(|e| InputError(format!("{algebra}: {e}")))?;
            let conventions: Vec<Convention> = match convention.as_str() {
                "both" => Convention::ALL.to_vec(),
                c => vec![c.parse::<Convention>()?],
            };
            if let Some(n) = gerstenhaber {
                let b = a.bracket().ok_or_else(|| InputError(format!("{algebra} has no bracket")))?;
                let r = a.check_gerstenhaber(b, *n)?;
                gbv_lines(&mut out, None, &r);
                return Ok(out);
            }
            for c in conventions {
                let r = match nplus1 {
                    Some(n) => a.check_bv_nplus1(*n, c)?,
                    None => a.check_bv(delta, c)?,
                };
                gbv_lines(&mut out, Some(c), &r);
            }
        }
    }
    Ok(out)
}

fn trace_json(c: &Cactus) -> Value {
    serde_json::to_value(c.pinching_trace()).expect("serializable")
}

fn cactus_json(c: &Cactus) -> Value {
    serde_json::to_value(CactusJson::from_cactus(c)).expect("serializable")
}

fn cacti(inputs: &mut Inputs, cmd: &CactiCmd) -> Result<Outcome, InputError> {
    let mut out = Outcome::new();
    match cmd {
        CactiCmd::Trace { path } => {
            let c = inputs.cactus(path)?;
            let t = c.pinching_trace();
            for a in &t.arcs {
                out.push(a);
            }
            out.push(json!({"total": q(&t.total)}));
            let lobes: Vec<String> = t.lobe_sequence().iter().map(|l| l.to_string()).collect();
            out.summary.push(format!(
                "{} arc{} visiting lobes {}, total length {}",
                t.arcs.len(),
                if t.arcs.len() == 1 { "" } else { "s" },
                lobes.join(" "),
                q(&t.total)
            ));
        }
        CactiCmd::Compose {
            first,
            i,
            second,
            assoc,
        } => {
            let f = inputs.cactus(first)?;
            let g = inputs.cactus(second)?;
            let fg = f.compose(*i, &g)?;
            out.push(json!({"composed": cactus_json(&fg.canonical_form()), "trace": trace_json(&fg)}));
            out.summary.push(format!(
                "composite has {} lobes, total circumference {}",
                fg.lobe_count(),
                q(&fg.total_circumference())
            ));
            if let Some(v) = assoc {
                let j: usize = v[0]
                    .parse()
                    .map_err(|_| InputError(format!("--assoc expects an index, found {:?}", v[0])))?;
                let h = inputs.cactus(&v[1])?;
                let lhs = f.compose(*i, &g.compose(j, &h)?)?;
                let rhs = fg.compose(i + j - 1, &h)?;
                let equal = lhs.canonical_form() == rhs.canonical_form();
                out.push(json!({"associativity": if equal { "equal" } else { "different" }}));
                out.summary.push(if equal { "equal" } else { "different" }.to_string());
                out.passed = equal;
            }
        }
    }
    Ok(out)
}

/// Caps rayon's global pool at `LOOPFORGE_THREADS` if set.
fn configure_threads() -> Result<(), InputError> {
    if let Ok(v) = std::env::var("LOOPFORGE_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| InputError(format!("LOOPFORGE_THREADS must be a positive integer, found {v:?}")))?;
        // a pool that already exists (e.g. in tests) is left alone
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return if code == 0 { EXIT_PASS } else { EXIT_INPUT };
        }
    };
    let mut inputs = Inputs::default();
    let result = configure_threads().and_then(|_| match &cli.command {
        Command::Fatgraph(FatgraphCmd::Analyze { path, chord }) => fatgraph_analyze(&mut inputs, path, chord.as_deref()),
        Command::Tqft(c) => tqft(&mut inputs, c),
        Command::Hochschild(c) => hochschild(&mut inputs, c),
        Command::Check(c) => check(&mut inputs, c),
        Command::Cacti(c) => cacti(&mut inputs, c),
    });
    match result {
        Ok(outcome) => {
            let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
            let digests: Vec<Value> = inputs.seen.iter().map(|(p, d)| json!({"path": p, "sha256": d})).collect();
            let _ = writeln!(out, "{}", json!({"command": echo, "inputs": digests}));
            for r in &outcome.results {
                let _ = writeln!(out, "{r}");
            }
            if !cli.json {
                for s in &outcome.summary {
                    let _ = writeln!(out, "# {s}");
                }
                let _ = writeln!(out, "# {}", if outcome.passed { "PASS" } else { "FAIL" });
            }
            if outcome.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
