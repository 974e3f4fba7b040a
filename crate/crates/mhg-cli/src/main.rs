//! Command-line front end: admissible parameters, completions, obstacle
//! catalogues and the verification suites.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mhg::completion::{dispatch_complete, CompletionError, Completer, DispatchOptions};
use mhg::graph::EdgeLabelledGraph;
use mhg::obstacles::{enumerate_obstacles, verify_obstacle_closure, Decider, ObstacleError};
use mhg::oracle::{antipodal_suite, exhaustive_suite, sampled_suite, sir_property_suite, OracleError, Report, SuiteOptions};
use mhg::params::{
    admissibility_verdict, completion_parameters, enumerate_admissible, magic_bounds, magic_set, Ext, HensonConstraint, Kind,
    ParamError, ParameterSet, DEFAULT_DELTA_BOUND,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "mhg", version, about = "Metrically homogeneous graph classes: admissibility, completion, obstacles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List admissible parameter sets of one diameter.
    Admissible {
        #[arg(long)]
        delta: u32,
        /// Leave out the bipartite rows (K1 = inf).
        #[arg(long)]
        no_bipartite: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Complete a partial graph read from a JSON file (`-` for stdin).
    Complete {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        /// Override the magic parameter.
        #[arg(long)]
        magic: Option<u32>,
        /// Comma-separated pode vertices (antipodal classes).
        #[arg(long, value_delimiter = ',')]
        pode: Option<Vec<usize>>,
        /// Include the completion trace.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate the minimal non-completable labelled cycles.
    Obstacles {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = DeciderArg::Engine)]
        decider: DeciderArg,
    },
    /// Run a verification suite against the brute-force oracle.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        params: OptionalParamArgs,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        /// Random inputs instead of the exhaustive sweep; needs --seed.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Perturb one fork rule of the engine (mutation check).
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeciderArg {
    Engine,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Optimality,
    Parity,
    Aut,
    Sir,
    Oracle,
    Obstacles,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    delta: Ext,
    #[arg(long)]
    k1: Ext,
    #[arg(long)]
    k2: Ext,
    #[arg(long)]
    c0: Ext,
    #[arg(long)]
    c1: Ext,
    /// Henson constraint: K<n>, I<n>, A<n> (antipodal clique) or clique
    /// sizes such as 2+1. Repeatable.
    #[arg(long)]
    henson: Vec<String>,
}

#[derive(Args)]
struct OptionalParamArgs {
    #[arg(long)]
    delta: Ext,
    #[arg(long, requires_all = ["k2", "c0", "c1"])]
    k1: Option<Ext>,
    #[arg(long)]
    k2: Option<Ext>,
    #[arg(long)]
    c0: Option<Ext>,
    #[arg(long)]
    c1: Option<Ext>,
    #[arg(long)]
    henson: Vec<String>,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

const NO_COMPLETION: u8 = 1;
const INVALID_PARAMS: u8 = 2;
const IO: u8 = 3;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<ParamError> for Failure {
    fn from(e: ParamError) -> Self {
        fail(INVALID_PARAMS, e.to_string())
    }
}

impl From<CompletionError> for Failure {
    fn from(e: CompletionError) -> Self {
        match e {
            CompletionError::Graph(_) | CompletionError::NotSymmetric | CompletionError::BadPode(_) => {
                fail(IO, e.to_string())
            }
            _ => fail(INVALID_PARAMS, e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Completion(c) => c.into(),
            OracleError::Graph(_) => fail(IO, e.to_string()),
            _ => fail(INVALID_PARAMS, e.to_string()),
        }
    }
}

impl From<ObstacleError> for Failure {
    fn from(e: ObstacleError) -> Self {
        match e {
            ObstacleError::Malformed(_) => fail(IO, e.to_string()),
            ObstacleError::Completion(c) => c.into(),
            ObstacleError::Oracle(o) => o.into(),
            _ => fail(INVALID_PARAMS, e.to_string()),
        }
    }
}

fn parse_henson(s: &str) -> Result<HensonConstraint, Failure> {
    let bad = || fail(INVALID_PARAMS, format!("bad Henson constraint {s:?}"));
    let size = |t: &str| t.parse::<u32>().map_err(|_| bad());
    match s.chars().next() {
        Some('K' | 'k') => Ok(HensonConstraint::clique(size(&s[1..])?)),
        Some('I' | 'i') => Ok(HensonConstraint::anticlique(size(&s[1..])?)),
        Some('A' | 'a') => Ok(HensonConstraint::antipodal_clique(size(&s[1..])?)),
        _ => Ok(HensonConstraint::new(s.split('+').map(size).collect::<Result<_, _>>()?)),
    }
}

fn build_params(delta: Ext, k1: Ext, k2: Ext, c0: Ext, c1: Ext, henson: &[String]) -> Result<ParameterSet, Failure> {
    let henson = henson.iter().map(|s| parse_henson(s)).collect::<Result<_, _>>()?;
    let p = ParameterSet::new(delta, k1, k2, c0, c1).with_henson(henson);
    let v = admissibility_verdict(&p);
    if !v.admissible {
        return Err(fail(INVALID_PARAMS, format!("parameters {p} are not admissible: {}", v.failed_conditions.join("; "))));
    }
    Ok(p)
}

impl ParamArgs {
    fn params(&self) -> Result<ParameterSet, Failure> {
        build_params(self.delta, self.k1, self.k2, self.c0, self.c1, &self.henson)
    }
}

impl OptionalParamArgs {
    /// The given parameter set, or every admissible primitive set of the
    /// diameter when only `--delta` is given.
    fn params(&self) -> Result<Vec<ParameterSet>, Failure> {
        match (self.k1, self.k2, self.c0, self.c1) {
            (Some(k1), Some(k2), Some(c0), Some(c1)) => {
                Ok(vec![build_params(self.delta, k1, k2, c0, c1, &self.henson)?])
            }
            _ => {
                let d = checked_delta(self.delta)?;
                Ok(enumerate_admissible(d, false)
                    .into_iter()
                    .filter(|(_, v)| v.kind == Kind::Primitive)
                    .map(|(p, _)| p)
                    .collect())
            }
        }
    }
}

fn checked_delta(delta: Ext) -> Result<u32, Failure> {
    match delta.finite() {
        Some(d) if (3..=DEFAULT_DELTA_BOUND).contains(&d) => Ok(d),
        _ => Err(fail(INVALID_PARAMS, format!("delta must be in 3..={DEFAULT_DELTA_BOUND}, got {delta}"))),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn cmd_admissible(delta: u32, no_bipartite: bool, format: Format) -> Result<(String, u8), Failure> {
    let d = checked_delta(Ext::Fin(delta))?;
    let rows = enumerate_admissible(d, !no_bipartite);
    let m_column = |p: &ParameterSet, kind: Kind| -> Option<Vec<u32>> {
        (kind == Kind::Primitive).then(|| completion_parameters(p).unwrap_or_default())
    };
    let out = match format {
        Format::Json => {
            let records: Vec<_> = rows
                .iter()
                .map(|(p, v)| {
                    json!({
                        "params": p,
                        "case": v.case.to_string(),
                        "kind": v.kind,
                        "magic_bounds": magic_bounds(p),
                        "magic": m_column(p, v.kind),
                    })
                })
                .collect();
            to_json(&records)
        }
        Format::Text => {
            let mut s = format!("{:>4} {:>4} {:>4} {:>4} {:>6} {}\n", "K1", "K2", "C0", "C1", "M", "Case");
            for (p, v) in &rows {
                let m = match m_column(p, v.kind) {
                    Some(ms) => ms.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                    None => "--".into(),
                };
                let [k1, k2, c0, c1] = [p.k1, p.k2, p.c0, p.c1].map(|e| e.to_string());
                writeln!(s, "{k1:>4} {k2:>4} {c0:>4} {c1:>4} {m:>6} {}", v.case).unwrap();
            }
            s.pop();
            s
        }
    };
    Ok((out, 0))
}

fn read_graph(path: &PathBuf) -> Result<EdgeLabelledGraph, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| fail(IO, format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| fail(IO, format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| fail(IO, format!("{}: malformed graph: {e}", path.display())))
}

fn cmd_complete(
    input: &PathBuf,
    params: &ParamArgs,
    magic: Option<u32>,
    pode: Option<&[usize]>,
    trace: bool,
    format: Format,
) -> Result<(String, u8), Failure> {
    let p = params.params()?;
    let g = read_graph(input)?;
    let pode = match pode {
        None => None,
        Some(vs) => {
            let mut mask = vec![false; g.n()];
            for &v in vs {
                *mask.get_mut(v).ok_or_else(|| fail(IO, format!("pode vertex {v} out of range")))? = true;
            }
            Some(mask)
        }
    };
    let mut r = dispatch_complete(&g, &p, &DispatchOptions { pode, magic })?;
    if !trace {
        r.trace.clear();
    }
    let code = if r.is_success() { 0 } else { NO_COMPLETION };
    let out = match format {
        Format::Json => to_json(&r),
        Format::Text => {
            let mut s = format!("status {:?}\n", r.status);
            for (u, v, d) in r.graph.edges() {
                writeln!(s, "{u} {v} {d}").unwrap();
            }
            if let Some(c) = &r.certificate {
                writeln!(s, "certificate {}", serde_json::to_string(c).unwrap()).unwrap();
            }
            for e in &r.trace {
                let w = e.witness.map_or("-".to_string(), |w| w.to_string());
                writeln!(s, "t={} {} {} := {} via {w}", e.time, e.edge[0], e.edge[1], e.dist).unwrap();
            }
            s.pop();
            s
        }
    };
    Ok((out, code))
}

fn cmd_obstacles(params: &ParamArgs, max_len: usize, decider: DeciderArg) -> Result<(String, u8), Failure> {
    let p = params.params()?;
    let decider = match decider {
        DeciderArg::Engine => Decider::Engine,
        DeciderArg::Oracle => Decider::Oracle,
    };
    let cat = enumerate_obstacles(&p, max_len, decider)?;
    Ok((to_json(&cat), 0))
}

fn cmd_verify(
    suite: Suite,
    params: &OptionalParamArgs,
    max_vertices: usize,
    samples: Option<usize>,
    seed: Option<u64>,
    inject_fault: bool,
) -> Result<(String, u8), Failure> {
    let sampled = samples.is_some() || suite == Suite::Obstacles;
    let seed = match (sampled, seed) {
        (true, None) => return Err(fail(INVALID_PARAMS, "sampled workloads need --seed")),
        (_, s) => s.unwrap_or(0),
    };
    let opts = SuiteOptions {
        connected_only: false,
        check_automorphisms: suite == Suite::Aut,
        check_clauses: matches!(suite, Suite::Optimality | Suite::Parity),
    };
    let mut runs = Vec::new();
    let mut total = Report::default();
    for p in params.params()? {
        let kind = admissibility_verdict(&p).kind;
        let mut report = Report::default();
        match suite {
            Suite::Sir => {
                for m in completion_parameters(&p)? {
                    report.merge(sir_property_suite(&p, m, max_vertices.min(4))?);
                }
            }
            Suite::Obstacles => {
                let cat = enumerate_obstacles(&p, 5, Decider::Engine)?;
                report.merge(verify_obstacle_closure(&p, &cat, samples.unwrap_or(1000), seed)?);
            }
            _ => {
                if kind.is_antipodal() {
                    if inject_fault || samples.is_some() {
                        return Err(fail(INVALID_PARAMS, "antipodal classes run only the exhaustive suite"));
                    }
                    report.merge(antipodal_suite(&p, (max_vertices / 2).clamp(1, 3))?);
                    runs.push(json!({"params": p, "checked": report.checked, "violations": report.violations.len()}));
                    total.merge(report);
                    continue;
                }
                let magics = match kind {
                    Kind::Primitive => completion_parameters(&p)?,
                    _ => magic_set(&p)?,
                };
                for m in magics {
                    let mut engine = Completer::new(&p, m)?;
                    if inject_fault {
                        engine = engine.with_fault();
                    }
                    report.merge(match samples {
                        Some(k) => sampled_suite(&engine, max_vertices, k, seed, opts)?,
                        None => exhaustive_suite(&engine, max_vertices, opts)?,
                    });
                }
            }
        }
        // The clause suites report only their own clause (and equivalence).
        let keep = |clause: &str| match suite {
            Suite::Optimality => !clause.starts_with("parity"),
            Suite::Parity => !clause.starts_with("optimality"),
            _ => true,
        };
        report.violations.retain(|v| keep(&v.clause));
        runs.push(json!({"params": p, "checked": report.checked, "violations": report.violations.len()}));
        total.merge(report);
    }
    let code = if total.is_clean() { 0 } else { NO_COMPLETION };
    let out = json!({
        "suite": format!("{:?}", suite).to_lowercase(),
        "seed": sampled.then_some(seed),
        "fault_injected": inject_fault,
        "checked": total.checked,
        "violation_count": total.violations.len(),
        "runs": runs,
        "violations": total.violations,
        "skipped": total.skipped,
    });
    Ok((to_json(&out), code))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Admissible { delta, no_bipartite, format } => cmd_admissible(delta, no_bipartite, format),
        Command::Complete { input, params, magic, pode, trace, format } => {
            cmd_complete(&input, &params, magic, pode.as_deref(), trace, format)
        }
        Command::Obstacles { params, max_len, decider } => cmd_obstacles(&params, max_len, decider),
        Command::Verify { suite, params, max_vertices, samples, seed, inject_fault } => {
            cmd_verify(suite, &params, max_vertices, samples, seed, inject_fault)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INVALID_PARAMS } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            // A closed pipe is not an error of ours.
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
