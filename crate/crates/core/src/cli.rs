//! Command-line front end.
//!
//! Exit codes: 0 when the top-level verdict passes (or a non-check command
//! succeeds), 1 when a well-formed check fails, 2 when input is rejected.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::axioms::{check_bases, check_circuit_axioms, AxiomId, Verdict, Witness};
use crate::cryptomorphism::{bases_from_circuits, circuits_from_bases, dual, fundamental_circuit};
use crate::error::Error;
use crate::graph::{matroid_from_graph, Multigraph};
use crate::ground::{
    enumerate_admissible_subsets, AdmissibleOrdering, AdmissibleSet, Kind, SetCollection,
    SignedElement,
};
use crate::oracle::{enumerate_symplectic, random_collection};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "symplectic",
    version,
    about = "Check and convert symplectic matroids given by bases, circuits or graphs"
)]
struct Cli {
    /// Report encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Circuits,
    Bases,
}

impl From<Target> for Kind {
    fn from(t: Target) -> Kind {
        match t {
            Target::Circuits => Kind::Circuits,
            Target::Bases => Kind::Bases,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Maximality Property of a bases file.
    CheckBases {
        file: PathBuf,
        /// Replay the failing witness from an earlier JSON report instead.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Check SC1–SC4 on a circuits file.
    CheckCircuits {
        file: PathBuf,
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Convert between bases and circuits.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
    },
    /// Build the circuit family of a multigraph (and its bases).
    FromGraph {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Circuits)]
        emit: Target,
    },
    /// The unique circuit inside B ∪ {x}.
    FundamentalCircuit {
        file: PathBuf,
        /// Comma-separated basis, e.g. 1,-2,3
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
        #[arg(long, allow_hyphen_values = true)]
        element: i64,
    },
    /// Star every member of a collection.
    Dual { file: PathBuf },
    /// List admissible k-subsets, or every symplectic matroid of rank k.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        symplectic_only: bool,
    },
    /// Reproducible random sample of admissible k-subsets.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
}

/// On-disk collection of bases or circuits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub kind: String,
    pub sets: Vec<Vec<i64>>,
}

impl InstanceFile {
    pub fn from_collection(c: &SetCollection) -> Self {
        InstanceFile {
            n: c.n(),
            kind: c.kind().to_string(),
            sets: c.iter().map(set_values).collect(),
        }
    }

    /// Validates the file; the error is a one-line diagnostic.
    pub fn to_collection(&self) -> Result<SetCollection, String> {
        let kind = match self.kind.as_str() {
            "bases" => Kind::Bases,
            "circuits" => Kind::Circuits,
            other => {
                return Err(format!(
                    "field `kind`: expected \"bases\" or \"circuits\", found {other:?}"
                ))
            }
        };
        let sets = self
            .sets
            .iter()
            .enumerate()
            .map(|(i, s)| {
                AdmissibleSet::from_values(self.n, s.iter().copied()).map_err(|e| match e {
                    Error::Inadmissible { .. } => format!("sets[{i}]: {e}"),
                    _ => format!("sets[{i}] = {s:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        SetCollection::new(self.n, kind, sets).map_err(|e| format!("field `n`: {e}"))
    }
}

/// On-disk multigraph; edge `i` is the `i`-th entry of `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<Multigraph, String> {
        Multigraph::new(
            self.vertices.iter().cloned(),
            self.edges.iter().map(|[u, v]| (u.as_str(), v.as_str())),
        )
        .map_err(|e| format!("field `edges`: {e}"))
    }
}

/// JSON form of a [`Witness`]; sets are lists of signed integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessRepr {
    EmptyCollection,
    MixedCardinality {
        first: Vec<i64>,
        second: Vec<i64>,
    },
    IncomparableMaxima {
        /// Lower half of the ordering.
        ordering: Vec<i64>,
        /// Full chain, for reading only.
        #[serde(default)]
        chain: Vec<i64>,
        first: Vec<i64>,
        second: Vec<i64>,
    },
    EmptyCircuit,
    NestedCircuits {
        smaller: Vec<i64>,
        larger: Vec<i64>,
    },
    FailedElimination {
        first: Vec<i64>,
        second: Vec<i64>,
        element: i64,
    },
    SpanningSet {
        set: Vec<i64>,
        rank: usize,
    },
    FailedExchange {
        x: Vec<i64>,
        y: Vec<i64>,
        element: i64,
    },
}

fn set_values(s: &AdmissibleSet) -> Vec<i64> {
    s.values().into_iter().map(i64::from).collect()
}

impl From<&Witness> for WitnessRepr {
    fn from(w: &Witness) -> Self {
        let v = set_values;
        match w {
            Witness::EmptyCollection => WitnessRepr::EmptyCollection,
            Witness::MixedCardinality { first, second } => WitnessRepr::MixedCardinality {
                first: v(first),
                second: v(second),
            },
            Witness::IncomparableMaxima {
                ordering,
                first,
                second,
            } => WitnessRepr::IncomparableMaxima {
                ordering: ordering
                    .lower_half()
                    .iter()
                    .map(|e| e.value() as i64)
                    .collect(),
                chain: ordering
                    .full_chain()
                    .iter()
                    .map(|e| e.value() as i64)
                    .collect(),
                first: v(first),
                second: v(second),
            },
            Witness::EmptyCircuit => WitnessRepr::EmptyCircuit,
            Witness::NestedCircuits { smaller, larger } => WitnessRepr::NestedCircuits {
                smaller: v(smaller),
                larger: v(larger),
            },
            Witness::FailedElimination {
                first,
                second,
                element,
            } => WitnessRepr::FailedElimination {
                first: v(first),
                second: v(second),
                element: element.value() as i64,
            },
            Witness::SpanningSet { set, rank } => WitnessRepr::SpanningSet {
                set: v(set),
                rank: *rank,
            },
            Witness::FailedExchange { x, y, element } => WitnessRepr::FailedExchange {
                x: v(x),
                y: v(y),
                element: element.value() as i64,
            },
        }
    }
}

impl WitnessRepr {
    /// Rebuilds the witness over `E±n`.
    pub fn to_witness(&self, n: usize) -> Result<Witness, Error> {
        let s = |v: &Vec<i64>| AdmissibleSet::from_values(n, v.iter().copied());
        let e = |v: i64| SignedElement::new(v, n);
        Ok(match self {
            WitnessRepr::EmptyCollection => Witness::EmptyCollection,
            WitnessRepr::MixedCardinality { first, second } => Witness::MixedCardinality {
                first: s(first)?,
                second: s(second)?,
            },
            WitnessRepr::IncomparableMaxima {
                ordering,
                first,
                second,
                ..
            } => Witness::IncomparableMaxima {
                ordering: AdmissibleOrdering::new(ordering.iter().copied())?,
                first: s(first)?,
                second: s(second)?,
            },
            WitnessRepr::EmptyCircuit => Witness::EmptyCircuit,
            WitnessRepr::NestedCircuits { smaller, larger } => Witness::NestedCircuits {
                smaller: s(smaller)?,
                larger: s(larger)?,
            },
            WitnessRepr::FailedElimination {
                first,
                second,
                element,
            } => Witness::FailedElimination {
                first: s(first)?,
                second: s(second)?,
                element: e(*element)?,
            },
            WitnessRepr::SpanningSet { set, rank } => Witness::SpanningSet {
                set: s(set)?,
                rank: *rank,
            },
            WitnessRepr::FailedExchange { x, y, element } => Witness::FailedExchange {
                x: s(x)?,
                y: s(y)?,
                element: e(*element)?,
            },
        })
    }
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "axiom": v.axiom().tag(),
        "status": if v.passed() { "pass" } else { "fail" },
        "witness": v.witness().map(WitnessRepr::from),
    })
}

fn witness_lines(w: &Witness) -> Vec<String> {
    match w {
        Witness::IncomparableMaxima {
            ordering,
            first,
            second,
        } => vec![
            format!("ordering: {ordering}"),
            format!("incomparable maximal bases: {first} and {second}"),
        ],
        other => vec![other.to_string()],
    }
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!(
        "{}: {}",
        v.axiom(),
        if v.passed() { "pass" } else { "fail" }
    );
    if let Some(w) = v.witness() {
        for line in witness_lines(w) {
            s.push_str("\n  ");
            s.push_str(&line);
        }
    }
    s
}

enum Outcome {
    Pass,
    Fail,
}

struct Session<'a> {
    format: Format,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

type Step = Result<Outcome, String>;

impl Session<'_> {
    fn emit(
        &mut self,
        text: impl FnOnce() -> String,
        json: impl FnOnce() -> Value,
    ) -> Result<(), String> {
        let body = match self.format {
            Format::Text => text(),
            Format::Json => json().to_string(),
        };
        writeln!(self.out, "{body}").map_err(|e| format!("writing output: {e}"))
    }

    fn emit_instance(&mut self, c: &SetCollection) -> Result<(), String> {
        let body = serde_json::to_string(&InstanceFile::from_collection(c))
            .map_err(|e| format!("encoding output: {e}"))?;
        writeln!(self.out, "{body}").map_err(|e| format!("writing output: {e}"))
    }
}

fn read_to_string(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_instance(path: &Path) -> Result<SetCollection, String> {
    let text = read_to_string(path)?;
    let file: InstanceFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    file.to_collection()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn load_kind(path: &Path, kind: Kind) -> Result<SetCollection, String> {
    let c = load_instance(path)?;
    if c.kind() != kind {
        return Err(format!(
            "{}: field `kind`: expected \"{kind}\", found \"{}\"",
            path.display(),
            c.kind()
        ));
    }
    Ok(c)
}

/// Pulls the first failing witness out of a report, a verdict or a bare witness.
fn load_witness(path: &Path, n: usize) -> Result<(Option<AxiomId>, Witness), String> {
    let text = read_to_string(path)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let failing = |v: &Value| v.get("status").and_then(Value::as_str) == Some("fail");
    let verdict = if let Some(list) = value.get("verdicts").and_then(Value::as_array) {
        list.iter().find(|v| failing(v)).cloned()
    } else if let Some(v) = value.get("verdict") {
        failing(v).then(|| v.clone())
    } else if value.get("witness").is_some() {
        failing(&value).then(|| value.clone())
    } else {
        Some(json!({ "witness": value }))
    };
    let verdict =
        verdict.ok_or_else(|| format!("{}: report holds no failing verdict", path.display()))?;
    let axiom = verdict
        .get("axiom")
        .and_then(Value::as_str)
        .map(str::parse::<AxiomId>)
        .transpose()
        .map_err(|e| format!("{}: field `axiom`: {e}", path.display()))?;
    let repr: WitnessRepr = serde_json::from_value(verdict["witness"].clone())
        .map_err(|e| format!("{}: field `witness`: {e}", path.display()))?;
    let witness = repr
        .to_witness(n)
        .map_err(|e| format!("{}: field `witness`: {e}", path.display()))?;
    Ok((axiom, witness))
}

fn replay(session: &mut Session<'_>, coll: &SetCollection, path: &Path) -> Step {
    let (axiom, witness) = load_witness(path, coll.n())?;
    let reproduced = witness.replay(coll).map_err(|e| e.to_string())?;
    let tag = axiom.map(AxiomId::tag).unwrap_or("witness");
    session.emit(
        || {
            if reproduced {
                format!("replay: {tag} failure reproduced\n  {witness}")
            } else {
                format!("replay: {tag} witness does not reproduce")
            }
        },
        || {
            json!({
                "command": "replay",
                "axiom": axiom.map(AxiomId::tag),
                "reproduced": reproduced,
                "witness": WitnessRepr::from(&witness),
            })
        },
    )?;
    Ok(if reproduced {
        Outcome::Fail
    } else {
        Outcome::Pass
    })
}

fn cmd_check_bases(s: &mut Session<'_>, file: &Path, replay_path: Option<&Path>) -> Step {
    let bases = load_kind(file, Kind::Bases)?;
    if let Some(p) = replay_path {
        return replay(s, &bases, p);
    }
    let verdict = check_bases(&bases).map_err(|e| e.to_string())?;
    let rank = bases.cardinality();
    s.emit(
        || {
            if verdict.passed() {
                format!("symplectic: true, rank {}", rank.unwrap_or(0))
            } else {
                format!("symplectic: false\n{}", verdict_text(&verdict))
            }
        },
        || {
            json!({
                "command": "check-bases",
                "n": bases.n(),
                "symplectic": verdict.passed(),
                "rank": rank,
                "verdict": verdict_json(&verdict),
            })
        },
    )?;
    Ok(if verdict.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_check_circuits(s: &mut Session<'_>, file: &Path, replay_path: Option<&Path>) -> Step {
    let circuits = load_kind(file, Kind::Circuits)?;
    if let Some(p) = replay_path {
        return replay(s, &circuits, p);
    }
    let report = check_circuit_axioms(&circuits);
    s.emit(
        || {
            let mut lines: Vec<String> =
                report.verdicts().iter().map(|v| verdict_text(v)).collect();
            lines.push(format!(
                "circuit axioms: {}, rank {}",
                if report.passed() { "pass" } else { "fail" },
                report.rank
            ));
            lines.join("\n")
        },
        || {
            json!({
                "command": "check-circuits",
                "n": circuits.n(),
                "passed": report.passed(),
                "rank": report.rank,
                "verdicts": report.verdicts().iter().map(|v| verdict_json(v)).collect::<Vec<_>>(),
            })
        },
    )?;
    Ok(if report.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_convert(s: &mut Session<'_>, to: Target, file: &Path) -> Step {
    let coll = load_instance(file)?;
    let converted = match (coll.kind(), Kind::from(to)) {
        (Kind::Bases, Kind::Circuits) => circuits_from_bases(&coll),
        (Kind::Circuits, Kind::Bases) => bases_from_circuits(&coll),
        (from, _) => {
            return Err(format!(
                "{}: field `kind`: file already holds {from}",
                file.display()
            ))
        }
    }
    .map_err(|e| format!("{}: {e}", file.display()))?;
    s.emit_instance(&converted)?;
    Ok(Outcome::Pass)
}

fn cmd_from_graph(s: &mut Session<'_>, file: &Path, emit: Target) -> Step {
    let text = read_to_string(file)?;
    let gf: GraphFile =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let g = gf
        .to_graph()
        .map_err(|e| format!("{}: {e}", file.display()))?;
    match matroid_from_graph(&g) {
        Ok(m) => {
            s.emit_instance(match emit {
                Target::Circuits => &m.circuits,
                Target::Bases => &m.bases,
            })?;
            Ok(Outcome::Pass)
        }
        Err(Error::Construction(verdict)) => {
            let _ = writeln!(s.err, "construction failed: {}", verdict);
            s.emit(
                || verdict_text(&verdict),
                || json!({ "command": "from-graph", "verdict": verdict_json(&verdict) }),
            )?;
            Ok(Outcome::Fail)
        }
        Err(e) => Err(format!("{}: {e}", file.display())),
    }
}

fn parse_list(list: &str) -> Result<Vec<i64>, String> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| format!("--basis: {t:?} is not an integer"))
        })
        .collect()
}

fn cmd_fundamental_circuit(s: &mut Session<'_>, file: &Path, basis: &str, element: i64) -> Step {
    let bases = load_kind(file, Kind::Bases)?;
    let values = parse_list(basis)?;
    let b = AdmissibleSet::from_values(bases.n(), values.iter().copied())
        .map_err(|e| format!("--basis: {e}"))?;
    let x = SignedElement::new(element, bases.n()).map_err(|e| format!("--element: {e}"))?;
    let c = fundamental_circuit(&bases, &b, x).map_err(|e| e.to_string())?;
    s.emit(
        || c.to_string(),
        || {
            json!({
                "command": "fundamental-circuit",
                "basis": set_values(&b),
                "element": element,
                "circuit": set_values(&c),
            })
        },
    )?;
    Ok(Outcome::Pass)
}

fn cmd_enumerate(s: &mut Session<'_>, n: usize, k: usize, symplectic_only: bool) -> Step {
    if symplectic_only {
        let found = enumerate_symplectic(n, k).map_err(|e| e.to_string())?;
        s.emit(
            || {
                found
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            },
            || {
                json!({
                    "n": n,
                    "k": k,
                    "count": found.len(),
                    "collections": found
                        .iter()
                        .map(|c| c.iter().map(set_values).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })
            },
        )?;
    } else {
        let sets = enumerate_admissible_subsets(n, k).map_err(|e| e.to_string())?;
        s.emit(
            || {
                sets.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            },
            || {
                json!({
                    "n": n,
                    "k": k,
                    "count": sets.len(),
                    "sets": sets.iter().map(set_values).collect::<Vec<_>>(),
                })
            },
        )?;
    }
    Ok(Outcome::Pass)
}

fn execute(cli: Cli, s: &mut Session<'_>) -> Step {
    match cli.command {
        Command::CheckBases { file, replay } => cmd_check_bases(s, &file, replay.as_deref()),
        Command::CheckCircuits { file, replay } => cmd_check_circuits(s, &file, replay.as_deref()),
        Command::Convert { to, file } => cmd_convert(s, to, &file),
        Command::FromGraph { file, emit } => cmd_from_graph(s, &file, emit),
        Command::FundamentalCircuit {
            file,
            basis,
            element,
        } => cmd_fundamental_circuit(s, &file, &basis, element),
        Command::Dual { file } => {
            let c = load_instance(&file)?;
            s.emit_instance(&dual(&c))?;
            Ok(Outcome::Pass)
        }
        Command::Enumerate {
            n,
            k,
            symplectic_only,
        } => cmd_enumerate(s, n, k, symplectic_only),
        Command::Random { n, k, count, seed } => {
            let c = random_collection(n, k, count, seed).map_err(|e| e.to_string())?;
            s.emit_instance(&c)?;
            Ok(Outcome::Pass)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let mut session = Session {
        format: cli.format,
        out,
        err,
    };
    match execute(cli, &mut session) {
        Ok(Outcome::Pass) => EXIT_PASS,
        Ok(Outcome::Fail) => EXIT_FAIL,
        Err(diagnostic) => {
            let _ = writeln!(session.err, "error: {diagnostic}");
            EXIT_INPUT
        }
    }
}
