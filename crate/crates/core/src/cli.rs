//! Command-line front end: argument model, input detection, dispatch and
//! report rendering. The binary is a thin wrapper around [`run`].

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cover::{
    cover_ideal_by_intersection, cover_ideal_from_covers, kprime_cover_ideal, min_patrols,
    minimal_covers_bruteforce, CoverRoute, PatrolSolution, PatrolSource, BRUTE_FORCE_LIMIT,
};
use crate::error::Error;
use crate::graph::{KPrimeSpec, LoopGraph};
use crate::invariants::{cm_by_loop_saturation, invariants, InvariantReport};
use crate::monomial::MonomialIdeal;
use crate::quotient::{find_linear_order, resolution_shifts, CertificateJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_SIZE_GUARD: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    CoverIdeal,
    Invariants,
    LinearQuotients,
    CmCheck,
    Patrol,
    OracleVerify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum RouteChoice {
    #[default]
    Auto,
    Bruteforce,
    Intersection,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    Path(PathBuf),
    Inline(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub input: InputSource,
    pub format: OutputFormat,
    pub route: RouteChoice,
    pub base_ideal: Option<PathBuf>,
    pub loops: Option<Vec<usize>>,
}

impl Command {
    pub fn new(verb: Verb, input: InputSource) -> Self {
        Command {
            verb,
            input,
            format: OutputFormat::Text,
            route: RouteChoice::Auto,
            base_ideal: None,
            loops: None,
        }
    }
}

/// Everything the binary needs to finish: exit status plus the two streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Ideals of vertex covers for graphs with loops.
#[derive(Debug, Parser)]
#[command(name = "loopcover", version)]
pub struct Cli {
    #[command(subcommand)]
    verb: VerbArgs,
}

#[derive(Debug, Subcommand)]
enum VerbArgs {
    /// Print the minimal generators of the ideal of vertex covers
    CoverIdeal(CommonArgs),
    /// Report h, q, pd, depth, dim, reg and the Cohen-Macaulay flag
    Invariants(CommonArgs),
    /// Search for an ordering with linear quotients and print its shifts
    LinearQuotients(CommonArgs),
    /// Cohen-Macaulay verdict, optionally with the loop-saturation test
    CmCheck(CommonArgs),
    /// Minimum number of patrols and every optimal placement
    Patrol(CommonArgs),
    /// Run every applicable route and compare
    OracleVerify(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Graph, K′ or ideal JSON file
    #[arg(long, conflicts_with = "json", required_unless_present = "json")]
    input: Option<PathBuf>,
    /// Inline graph, K′ or ideal JSON
    #[arg(long)]
    json: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long, value_enum, default_value_t = RouteChoice::Auto)]
    route: RouteChoice,
    /// Ideal JSON of the loopless cover ideal, for cm-check saturation
    #[arg(long)]
    base_ideal: Option<PathBuf>,
    /// Comma-separated loop vertices replacing the input's loops
    #[arg(long, value_delimiter = ',')]
    loops: Option<Vec<usize>>,
}

impl From<Cli> for Command {
    fn from(cli: Cli) -> Self {
        let (verb, args) = match cli.verb {
            VerbArgs::CoverIdeal(a) => (Verb::CoverIdeal, a),
            VerbArgs::Invariants(a) => (Verb::Invariants, a),
            VerbArgs::LinearQuotients(a) => (Verb::LinearQuotients, a),
            VerbArgs::CmCheck(a) => (Verb::CmCheck, a),
            VerbArgs::Patrol(a) => (Verb::Patrol, a),
            VerbArgs::OracleVerify(a) => (Verb::OracleVerify, a),
        };
        let input = match (args.input, args.json) {
            (Some(p), _) => InputSource::Path(p),
            (None, Some(j)) => InputSource::Inline(j),
            (None, None) => unreachable!("clap requires one input source"),
        };
        Command {
            verb,
            input,
            format: args.format,
            route: args.route,
            base_ideal: args.base_ideal,
            loops: args.loops,
        }
    }
}

/// Parsed input document.
#[derive(Debug, Clone)]
pub enum Input {
    Graph(LoopGraph),
    KPrime(KPrimeSpec),
    Ideal(MonomialIdeal),
}

/// Distinguishes the three JSON formats by their keys.
pub fn parse_input(text: &str) -> Result<Input, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("input must be a JSON object".into()))?;
    let decode = |what: &str, e: serde_json::Error| Error::Validation(format!("{what}: {e}"));
    if obj.contains_key("alphas") {
        serde_json::from_value(value).map(Input::KPrime).map_err(|e| decode("K′ spec", e))
    } else if obj.contains_key("gens") {
        serde_json::from_value(value).map(Input::Ideal).map_err(|e| decode("ideal", e))
    } else if obj.contains_key("n") {
        serde_json::from_value(value).map(Input::Graph).map_err(|e| decode("graph", e))
    } else {
        Err(Error::Parse(
            "unrecognized input: expected \"alphas\", \"gens\" or \"n\"".into(),
        ))
    }
}

#[derive(Debug)]
enum Failure {
    Engine(Error),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuard { .. } | Error::Inconclusive(_) => EXIT_SIZE_GUARD,
        _ => EXIT_VALIDATION,
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match dispatch(cmd) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Engine(e)) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Disagreement(report)) => Outcome {
            code: EXIT_DISAGREEMENT,
            stdout: report,
            stderr: "error: routes disagree\n".into(),
        },
    }
}

fn read_text(source: &InputSource) -> Result<String, Error> {
    match source {
        InputSource::Inline(s) => Ok(s.clone()),
        InputSource::Path(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", p.display()))),
    }
}

fn load(cmd: &Command) -> Result<Input, Error> {
    let input = parse_input(&read_text(&cmd.input)?)?;
    match (&cmd.loops, input) {
        (None, input) => Ok(input),
        (Some(l), Input::Graph(g)) => Ok(Input::Graph(g.with_loops(l.iter().copied())?)),
        (Some(l), Input::KPrime(s)) => Ok(Input::KPrime(s.with_loops(l.iter().copied())?)),
        (Some(_), Input::Ideal(i)) if cmd.verb == Verb::CmCheck => Ok(Input::Ideal(i)),
        (Some(_), Input::Ideal(_)) => Err(Error::Validation(
            "--loops applies to graph and K′ inputs (or cm-check saturation)".into(),
        )),
    }
}

/// `I_c` of a graph or spec, and the route that produced it.
fn cover_ideal(input: &Input, route: RouteChoice) -> Result<(MonomialIdeal, CoverRoute), Error> {
    let graph_route = |g: &LoopGraph, route: RouteChoice| match route {
        RouteChoice::Bruteforce => Ok((
            cover_ideal_from_covers(&minimal_covers_bruteforce(g)?, g.n())?,
            CoverRoute::Bruteforce,
        )),
        RouteChoice::Auto | RouteChoice::Intersection => {
            Ok((cover_ideal_by_intersection(g)?, CoverRoute::Intersection))
        }
        RouteChoice::ClosedForm => Err(Error::Validation(
            "the closed-form route needs a K′ specification".into(),
        )),
    };
    match input {
        Input::Graph(g) => graph_route(g, route),
        Input::KPrime(spec) => match route {
            RouteChoice::Auto | RouteChoice::ClosedForm => {
                Ok((kprime_cover_ideal(spec), CoverRoute::ClosedForm))
            }
            other => graph_route(&spec.expand(), other),
        },
        Input::Ideal(_) => Err(Error::Validation(
            "this command needs a graph or K′ input, not an ideal".into(),
        )),
    }
}

/// The ideal a command analyses: the input ideal itself, or `I_c` of a graph.
fn subject(input: &Input, route: RouteChoice) -> Result<MonomialIdeal, Error> {
    match input {
        Input::Ideal(i) => {
            if route != RouteChoice::Auto {
                return Err(Error::Validation("--route does not apply to ideal input".into()));
            }
            Ok(i.clone())
        }
        other => cover_ideal(other, route).map(|(i, _)| i),
    }
}

fn context(input: &Input) -> Option<&KPrimeSpec> {
    match input {
        Input::KPrime(s) => Some(s),
        _ => None,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command) -> Result<String, Failure> {
    let input = load(cmd)?;
    let out = match cmd.verb {
        Verb::CoverIdeal => render_cover_ideal(cmd, &input)?,
        Verb::Invariants => {
            let ideal = subject(&input, cmd.route)?;
            let report = invariants(&ideal, context(&input))?;
            match cmd.format {
                OutputFormat::Json => to_json(&report),
                OutputFormat::Text => invariant_text(&report),
            }
        }
        Verb::LinearQuotients => render_linear_quotients(cmd, &input)?,
        Verb::CmCheck => return render_cm_check(cmd, &input),
        Verb::Patrol => {
            let solution = match (&input, cmd.route) {
                (Input::Ideal(i), RouteChoice::Auto) => min_patrols(PatrolSource::Ideal(i))?,
                (Input::KPrime(s), RouteChoice::Auto | RouteChoice::ClosedForm) => {
                    min_patrols(PatrolSource::KPrime(s))?
                }
                (other, route) => min_patrols(PatrolSource::Ideal(&subject(other, route)?))?,
            };
            match cmd.format {
                OutputFormat::Json => to_json(&solution),
                OutputFormat::Text => patrol_text(&solution),
            }
        }
        Verb::OracleVerify => return render_oracle(cmd, &input),
    };
    Ok(out)
}

fn render_cover_ideal(cmd: &Command, input: &Input) -> Result<String, Error> {
    let (ideal, route) = cover_ideal(input, cmd.route)?;
    Ok(match cmd.format {
        OutputFormat::Json => {
            let j = ideal.to_json();
            to_json(&json!({ "n": j.n, "gens": j.gens, "route": route.name() }))
        }
        OutputFormat::Text => {
            let mut s = format!("route: {}\ngenerators: {}\n", route.name(), ideal.len());
            for g in ideal.gens() {
                let _ = writeln!(s, "{}", g.compact());
            }
            s
        }
    })
}

fn invariant_text(r: &InvariantReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "undetermined".into());
    let mut s = String::new();
    let _ = writeln!(s, "route: {}", serde_json::to_value(r.route).unwrap().as_str().unwrap());
    let _ = writeln!(s, "n: {}", r.n);
    let _ = writeln!(s, "h: {}", r.h);
    let _ = writeln!(s, "q: {}", opt(r.q.map(|v| v.to_string())));
    let _ = writeln!(s, "pd: {}", opt(r.pd.map(|v| v.to_string())));
    let _ = writeln!(s, "depth: {}", opt(r.depth.map(|v| v.to_string())));
    let _ = writeln!(s, "dim: {}", r.dim);
    let _ = writeln!(s, "reg: {}", opt(r.reg.map(|v| v.to_string())));
    if let Some(b) = r.reg_bounds {
        let _ = writeln!(s, "reg bounds: [{}, {}]", b.lo, b.hi);
    }
    let cm = match r.cm {
        Some(c) => c.to_string(),
        None => "inconclusive".into(),
    };
    let _ = writeln!(s, "cohen-macaulay: {cm}");
    s
}

fn render_linear_quotients(cmd: &Command, input: &Input) -> Result<String, Error> {
    let ideal = subject(input, cmd.route)?;
    let cert = find_linear_order(&ideal)?;
    let shifts = cert.as_ref().map(resolution_shifts).transpose()?;
    Ok(match cmd.format {
        OutputFormat::Json => to_json(&json!({
            "exists": cert.is_some(),
            "certificate": cert.clone().map(CertificateJson::from),
            "shifts": shifts.as_ref().map(|s| &s.shifts),
        })),
        OutputFormat::Text => match (cert, shifts) {
            (Some(c), Some(sh)) => {
                let mut s = format!("linear quotients: yes\nq: {}\n", c.q);
                let order: Vec<String> = c.order.iter().map(|m| m.compact()).collect();
                let _ = writeln!(s, "order: {}", order.join(", "));
                let steps: Vec<String> = c.steps.iter().map(|st| st.compact()).collect();
                let _ = writeln!(s, "steps: {}", steps.join(", "));
                s.push_str("shifts:\n");
                for (i, row) in sh.shifts.iter().enumerate() {
                    let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(s, "  {i}: {}", row.join(" "));
                }
                s
            }
            _ => "linear quotients: no ordering exists\n".into(),
        },
    })
}

fn render_cm_check(cmd: &Command, input: &Input) -> Result<String, Failure> {
    let ideal = subject(input, cmd.route)?;
    let report = invariants(&ideal, context(input))?;

    let saturation = match &cmd.base_ideal {
        None => None,
        Some(path) => {
            let text = read_text(&InputSource::Path(path.clone()))?;
            let base = match parse_input(&text)? {
                Input::Ideal(i) => i,
                _ => {
                    return Err(Error::Validation("--base-ideal must hold ideal JSON".into()).into())
                }
            };
            let loops: BTreeSet<usize> = match (&cmd.loops, input) {
                (Some(l), _) => l.iter().copied().collect(),
                (None, Input::Graph(g)) => g.loops().clone(),
                (None, Input::KPrime(s)) => s.loops().clone(),
                (None, Input::Ideal(_)) => {
                    return Err(Error::Validation(
                        "saturation needs a loop set: pass --loops or a graph input".into(),
                    )
                    .into())
                }
            };
            Some(cm_by_loop_saturation(&base, &loops))
        }
    };

    // A satisfied saturation test on a graph input promises a principal,
    // Cohen-Macaulay cover ideal; anything else is a correctness alarm.
    let alarm = matches!(
        (&saturation, input),
        (Some(v), Input::Graph(_) | Input::KPrime(_))
            if v.satisfied && !(ideal.is_principal() && report.cm == Some(true))
    );

    let out = match cmd.format {
        OutputFormat::Json => to_json(&json!({
            "cm": report.cm,
            "route": report.route,
            "depth": report.depth,
            "dim": report.dim,
            "saturation": saturation,
        })),
        OutputFormat::Text => {
            let mut s = match report.cm {
                Some(c) => format!("cohen-macaulay: {c}\n"),
                None => "cohen-macaulay: inconclusive\n".into(),
            };
            let _ = writeln!(
                s,
                "route: {}",
                serde_json::to_value(report.route).unwrap().as_str().unwrap()
            );
            if let Some(v) = &saturation {
                let _ = writeln!(s, "loop saturation: {}", if v.satisfied { "satisfied" } else { "not satisfied" });
                if let Some(w) = &v.witness {
                    let mono = crate::monomial::Monomial::from_indices(ideal.n(), w)
                        .map(|m| m.compact())
                        .unwrap_or_default();
                    let _ = writeln!(s, "witness: {mono}");
                }
            }
            s
        }
    };
    if alarm {
        return Err(Failure::Disagreement(out));
    }
    Ok(out)
}

fn patrol_text(sol: &PatrolSolution) -> String {
    if sol.nothing_to_cover {
        return "nothing to cover\ncovering number: 0\n".into();
    }
    let mut s = format!(
        "covering number: {}\noptimal covers: {}\n",
        sol.covering_number,
        sol.optimal_covers.len()
    );
    for c in &sol.optimal_covers {
        let _ = writeln!(s, "{c}");
    }
    s
}

/// Checks the structural facts every cover ideal must satisfy.
fn structural_problems(g: &LoopGraph, ideal: &MonomialIdeal) -> Vec<String> {
    let mut problems = Vec::new();
    for gen in ideal.gens() {
        let support: BTreeSet<usize> = gen.support().into_iter().collect();
        if !g.is_minimal_vertex_cover(&support) {
            problems.push(format!("{} is not a minimal vertex cover", gen.compact()));
        }
        if let Some(k) = g.loops().iter().find(|&&k| gen.exponent(k) == 0) {
            problems.push(format!("loop variable X{k} does not divide {}", gen.compact()));
        }
    }
    problems
}

fn render_oracle(cmd: &Command, input: &Input) -> Result<String, Failure> {
    let (graph, spec) = match input {
        Input::Graph(g) => (g.clone(), None),
        Input::KPrime(s) => (s.expand(), Some(s)),
        Input::Ideal(_) => {
            return Err(Error::Validation("oracle-verify needs a graph or K′ input".into()).into())
        }
    };
    let mut results: Vec<(CoverRoute, MonomialIdeal)> = Vec::new();
    if graph.n() <= BRUTE_FORCE_LIMIT {
        let covers = minimal_covers_bruteforce(&graph)?;
        results.push((CoverRoute::Bruteforce, cover_ideal_from_covers(&covers, graph.n())?));
        results.push((CoverRoute::Intersection, cover_ideal_by_intersection(&graph)?));
    }
    if let Some(s) = spec {
        results.push((CoverRoute::ClosedForm, kprime_cover_ideal(s)));
    }
    if results.len() < 2 {
        return Err(Error::SizeGuard {
            what: "vertex count",
            actual: graph.n(),
            limit: BRUTE_FORCE_LIMIT,
            hint: "at least two routes are needed to compare",
        }
        .into());
    }

    let reference = &results[0].1;
    let agree = results.iter().all(|(_, i)| i == reference);
    let problems = structural_problems(&graph, reference);
    let ok = agree && problems.is_empty();
    let routes: Vec<&str> = results.iter().map(|(r, _)| r.name()).collect();

    let out = match cmd.format {
        OutputFormat::Json => {
            let per_route: serde_json::Map<String, Value> = results
                .iter()
                .map(|(r, i)| (r.name().to_string(), serde_json::to_value(i).unwrap()))
                .collect();
            to_json(&json!({
                "agree": ok,
                "routes": routes,
                "results": per_route,
                "problems": problems,
            }))
        }
        OutputFormat::Text => {
            let mut s = if ok {
                format!("routes agree: {} ({} generators)\n", routes.join(", "), reference.len())
            } else {
                "routes disagree\n".to_string()
            };
            if !agree {
                for (r, i) in &results {
                    let _ = writeln!(s, "  {}: {}", r.name(), i.compact());
                }
            }
            for p in &problems {
                let _ = writeln!(s, "  {p}");
            }
            s
        }
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Disagreement(out))
    }
}
