//! `cocover`: build coalgebras, report their properties, compute covering
//! coalgebras and verify the structure theorems on a corpus.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 mathematical
//! precondition failed, 3 internal consistency failure or counterexample.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{ArgGroup, Args, Parser, Subcommand};
use cocover::exec::Execution;
use cocover::fdmod::{is_codense_cover, oracle, FDModule, Side};
use cocover::json::{self, CoverJson};
use cocover::props::{self, CorpusEntry, Flag, PropertyReport, Verdict};
use cocover::quotient::covering_coalgebra;
use cocover::{parse_quiver, Algebra, Coalgebra, Error, FieldSpec};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cocover", version, about = "Finite-dimensional coalgebras and their covering coalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a coalgebra from a quiver file or a builtin family and write its JSON.
    Build {
        #[command(flatten)]
        source: Source,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify a coalgebra: non-singular, hereditary, cosemisimple, …
    Report {
        #[command(flatten)]
        source: Source,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the covering coalgebra D → C with small codense kernel.
    Cover {
        #[command(flatten)]
        source: Source,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the structure theorems on one or more coalgebras.
    Verify {
        /// Coalgebra JSON files (`-` for stdin).
        inputs: Vec<PathBuf>,
        #[arg(long = "quiver", value_name = "FILE")]
        quivers: Vec<PathBuf>,
        #[arg(long = "family", value_name = "NAME")]
        families: Vec<String>,
        #[arg(long)]
        field: Option<FieldSpec>,
        #[arg(long)]
        maxlen: Option<usize>,
        /// Also compare the fast predicates with exhaustive oracles (finite fields only).
        #[arg(long)]
        oracle: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Where a coalgebra comes from: a JSON file, a quiver file or a family.
#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("origin").required(true).multiple(false)))]
struct Source {
    /// Coalgebra JSON file (`-` for stdin).
    #[arg(group = "origin")]
    input: Option<PathBuf>,
    /// Quiver text file; builds its path coalgebra.
    #[arg(long, group = "origin")]
    quiver: Option<PathBuf>,
    /// `matrix:n`, `dividedpower:n` or `triangular`.
    #[arg(long, group = "origin")]
    family: Option<String>,
    /// `q` or `fp:p` (built coalgebras only).
    #[arg(long)]
    field: Option<FieldSpec>,
    /// Bound on path length (quivers with cycles).
    #[arg(long)]
    maxlen: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Lib(e) if e.is_precondition() => 2,
            Failure::Lib(e) if e.is_internal() => 3,
            Failure::Lib(Error::Parse { .. } | Error::InvalidField(_) | Error::InvalidScalar(_)) => 1,
            Failure::Lib(
                Error::DuplicateLabel(_) | Error::DanglingEndpoint { .. } | Error::Malformed(_),
            ) => 1,
            Failure::Lib(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Build { source, output } => {
            let c = source.load()?;
            emit(output.as_deref(), &json::coalgebra_to_json(&c))?;
            let status = match c.validate() {
                Ok(()) => "valid".to_string(),
                Err(v) => format!("invalid: {v:?}"),
            };
            eprintln!("dim {} over {}: {status}", c.dim(), c.field());
            Ok(0)
        }
        Command::Report { source, json, output } => {
            let c = source.load()?;
            let report = props::coalgebra_report(&c);
            let text = if json { json::to_string(&report) } else { report_text(&report) };
            emit(output.as_deref(), &text)?;
            for (flag, e) in report.internal_failures() {
                eprintln!("internal failure in {flag}: {e}");
            }
            Ok(if report.internal_failures().is_empty() { 0 } else { 3 })
        }
        Command::Cover { source, json, output } => {
            let c = source.load()?;
            let r = covering_coalgebra(&c)?;
            let text = if json {
                json::to_string(&CoverJson::from(&r))
            } else {
                let f = r.flags;
                format!(
                    "C: dim {}\nD: dim {}\nkernel: dim {}\nsurjective: {}\nkernel_small: {}\ncodense: {}\nmaximal_checked: {}\n",
                    c.dim(),
                    r.d.dim(),
                    r.kernel.dim(),
                    f.surjective,
                    f.kernel_small,
                    f.codense,
                    f.maximal_checked
                )
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { inputs, quivers, families, field, maxlen, oracle, json, output } => {
            let mut corpus: Vec<(String, Coalgebra)> = Vec::new();
            for p in &inputs {
                corpus.push((p.display().to_string(), json::coalgebra_from_json(&read(p)?)?));
            }
            for q in &quivers {
                corpus.push((q.display().to_string(), from_quiver(q, field.unwrap_or(FieldSpec::Rationals), maxlen)?));
            }
            for name in &families {
                corpus.push((name.clone(), family(name, field.unwrap_or(FieldSpec::Rationals))?));
            }
            if corpus.is_empty() {
                return Err(Failure::Usage("nothing to verify: give files, --quiver or --family".into()));
            }
            if oracle {
                if let Some((name, _)) = corpus.iter().find(|(_, c)| c.field().order().is_none()) {
                    return Err(Failure::Usage(format!("--oracle needs a finite field; {name} is over q")));
                }
            }
            let entries = props::verify_corpus(&corpus, Execution::default());
            let oracles: Vec<OracleRun> = if oracle {
                corpus.iter().map(|(name, c)| run_oracles(name, c)).collect()
            } else {
                Vec::new()
            };
            let text = if json {
                json::to_string(&VerifyJson { entries: &entries, oracles: &oracles })
            } else {
                verify_text(&entries, &oracles)
            };
            emit(output.as_deref(), &text)?;
            Ok(verify_code(&entries, &oracles))
        }
    }
}

impl Source {
    fn load(&self) -> Result<Coalgebra, Failure> {
        let f = self.field.unwrap_or(FieldSpec::Rationals);
        if let Some(p) = &self.input {
            let c = json::coalgebra_from_json(&read(p)?)?;
            if self.field.is_some_and(|g| g != c.field()) {
                return Err(Failure::Usage(format!("{} is over {}, not {f}", p.display(), c.field())));
            }
            Ok(c)
        } else if let Some(q) = &self.quiver {
            from_quiver(q, f, self.maxlen)
        } else if let Some(name) = &self.family {
            family(name, f)
        } else {
            Err(Failure::Usage("give a coalgebra file, --quiver or --family".into()))
        }
    }
}

fn read(p: &Path) -> Result<String, Failure> {
    let io_err = |e: io::Error| Failure::Usage(format!("{}: {e}", p.display()));
    if p.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(p).map_err(io_err)
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("stdout: {e}"))),
    }
}

fn from_quiver(p: &Path, f: FieldSpec, maxlen: Option<usize>) -> Result<Coalgebra, Failure> {
    let q = parse_quiver(&read(p)?)?;
    Ok(Coalgebra::path_coalgebra(f, &q, maxlen)?)
}

fn family(name: &str, f: FieldSpec) -> Result<Coalgebra, Failure> {
    let size = |s: &str| {
        s.parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::Usage(format!("bad size in family `{name}`")))
    };
    match name.split_once(':') {
        Some(("matrix", n)) => Ok(Coalgebra::matrix_coalgebra(f, size(n)?)),
        Some(("dividedpower", n)) => Ok(Coalgebra::truncated_divided_power(f, size(n)?)),
        None if name == "triangular" => Ok(Algebra::triangular_example(f).opposite().dual_coalgebra()),
        _ => Err(Failure::Usage(format!(
            "unknown family `{name}` (expected matrix:n, dividedpower:n or triangular)"
        ))),
    }
}

fn flag_text<T: std::fmt::Display + Copy>(f: &Flag<T>) -> String {
    match f {
        Flag::Value(v) => v.to_string(),
        Flag::Failed { error, .. } => format!("error: {error}"),
    }
}

fn report_text(r: &PropertyReport) -> String {
    let rows = [
        ("dim", r.dim.to_string()),
        ("non_singular", flag_text(&r.non_singular)),
        ("cosemisimple", flag_text(&r.cosemisimple)),
        ("cosemiprime", flag_text(&r.cosemiprime)),
        ("hereditary", flag_text(&r.hereditary)),
        ("coprime_simple", flag_text(&r.coprime_simple)),
        ("copolyform_left", flag_text(&r.copolyform_left)),
        ("copolyform_right", flag_text(&r.copolyform_right)),
        ("self_injective_dual", flag_text(&r.self_injective_dual)),
        ("coradical_dim", flag_text(&r.coradical_dim)),
        ("radical_dim", flag_text(&r.radical_dim)),
        (
            "cover",
            match &r.cover_summary {
                Flag::Value(s) => format!(
                    "D dim {}, kernel dim {}, small {}, codense {}, maximal {}",
                    s.d_dim, s.kernel_dim, s.flags.kernel_small, s.flags.codense, s.flags.maximal_checked
                ),
                Flag::Failed { error, .. } => format!("error: {error}"),
            },
        ),
    ];
    rows.iter().map(|(k, v)| format!("{k:<20}{v}\n")).collect()
}

/// One oracle comparison on one coalgebra.
#[derive(Serialize)]
struct OracleCheck {
    check: String,
    /// `None` when the enumeration was too large to run.
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct OracleRun {
    name: String,
    checks: Vec<OracleCheck>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    entries: &'a [CorpusEntry],
    oracles: &'a [OracleRun],
}

/// Compares smallness, essentiality, copolyformness and codensity on `C`
/// (both sides) with their exhaustive definitions.
fn run_oracles(name: &str, c: &Coalgebra) -> OracleRun {
    let a = Arc::new(c.dual_algebra());
    let mut checks = Vec::new();
    for side in [Side::Left, Side::Right] {
        let mut push = |check: &str, r: Result<bool, Error>| {
            checks.push(OracleCheck {
                check: format!("{side:?} {check}"),
                agrees: match r {
                    Ok(b) => Some(b),
                    Err(Error::TooLarge(_)) => None,
                    Err(_) => Some(false),
                },
            })
        };
        let m = match FDModule::from_coalgebra(c, a.clone(), side) {
            Ok(m) => m,
            Err(e) => {
                push("module", Err(e));
                continue;
            }
        };
        push(
            "small and essential submodules",
            oracle::brute_force_submodules(&m).and_then(|subs| {
                for s in subs {
                    let sub = m.submodule(s)?;
                    if sub.is_small()? != oracle::is_small(&sub)?
                        || sub.is_essential()? != oracle::is_essential(&sub)?
                    {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        );
        push("copolyform", m.is_copolyform().and_then(|x| Ok(x == oracle::is_copolyform(&m)?)));
        push(
            "codense projective cover",
            m.projective_cover()
                .and_then(|pc| Ok(is_codense_cover(&pc.map)? == oracle::is_codense(&pc.map)?)),
        );
    }
    OracleRun { name: name.to_string(), checks }
}

fn verdict_text(v: &Flag<Verdict>) -> String {
    match v {
        Flag::Value(Verdict::Ok) => "ok".into(),
        Flag::Value(Verdict::Counterexample(d)) => format!("COUNTEREXAMPLE: {d}"),
        Flag::Value(Verdict::NotApplicable(d)) => format!("n/a ({d})"),
        Flag::Failed { error, .. } => format!("error: {error}"),
    }
}

fn verify_text(entries: &[CorpusEntry], oracles: &[OracleRun]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("{}\n", e.name));
        let hierarchy = if e.hierarchy_violations.is_empty() {
            "ok".to_string()
        } else {
            format!("COUNTEREXAMPLE: {}", e.hierarchy_violations.join("; "))
        };
        let rows = [
            ("hierarchy", hierarchy),
            ("nonsingular_equivalences", verdict_text(&e.nonsingular_equivalences)),
            ("cosemisimple_flat", verdict_text(&e.cosemisimple_flat)),
            ("coprime_dichotomy", verdict_text(&e.coprime_dichotomy)),
            ("cocommutative", verdict_text(&e.cocommutative)),
        ];
        for (k, v) in rows {
            out.push_str(&format!("  {k:<26}{v}\n"));
        }
        if let Some(run) = oracles.iter().find(|r| r.name == e.name) {
            for c in &run.checks {
                let v = match c.agrees {
                    Some(true) => "agrees",
                    Some(false) => "DISAGREES",
                    None => "skipped (too large)",
                };
                out.push_str(&format!("  oracle: {}: {v}\n", c.check));
            }
        }
    }
    out
}

fn checks(e: &CorpusEntry) -> [&Flag<Verdict>; 4] {
    [&e.nonsingular_equivalences, &e.cosemisimple_flat, &e.coprime_dichotomy, &e.cocommutative]
}

fn verify_code(entries: &[CorpusEntry], oracles: &[OracleRun]) -> u8 {
    let counterexample = |v: &Flag<Verdict>| match v {
        Flag::Value(v) => v.is_violation(),
        Flag::Failed { internal, .. } => *internal,
    };
    let failed = |v: &Flag<Verdict>| matches!(v, Flag::Failed { .. });
    let bad = entries.iter().any(|e| {
        !e.hierarchy_violations.is_empty()
            || checks(e).into_iter().any(counterexample)
            || !e.report.internal_failures().is_empty()
    }) || oracles.iter().flat_map(|r| &r.checks).any(|c| c.agrees == Some(false));
    if bad {
        3
    } else if entries.iter().any(|e| checks(e).into_iter().any(failed)) {
        2
    } else {
        0
    }
}
