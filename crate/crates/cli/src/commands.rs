//! The subcommands, as functions from file contents to printed output.

use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;
use tropical_cones::cone::{dehomogenize, homogenize};
use tropical_cones::dd::{self, DdOptions, EliminationTrace, Method};
use tropical_cones::extremality::{self, format_zero_one};
use tropical_cones::hypergraph::scc_oracle;
use tropical_cones::instances::{random_system, RandomSpec};
use tropical_cones::minscc::min_scc_count;
use tropical_cones::IneqSystem;

use crate::formats::{self, ParseError, VRep};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Semantic(String),
    #[error("cross-check failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 1,
            CliError::Semantic(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<tropical_cones::Error> for CliError {
    fn from(e: tropical_cones::Error) -> Self {
        CliError::Semantic(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// What a command prints on standard output, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

/// A named input, so errors can point at the file.
#[derive(Clone, Copy, Debug)]
pub struct Input<'a> {
    pub path: &'a str,
    pub text: &'a str,
}

impl Input<'_> {
    fn parse<T>(&self, f: impl FnOnce(&str) -> std::result::Result<T, ParseError>) -> Result<T> {
        f(self.text).map_err(|source| CliError::Parse { path: self.path.to_string(), source })
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExtremeOptions {
    pub method: Method,
    pub affine: bool,
    pub stats: bool,
    pub jobs: usize,
}

pub fn extreme(input: Input, options: &ExtremeOptions) -> Result<Output> {
    let dd_options = DdOptions { method: options.method, jobs: options.jobs.max(1) };
    let (vrep, trace) = if options.affine {
        let affine = input.parse(formats::parse_affine_hrep)?;
        let out = dd::run(&homogenize(&affine), &dd_options, None)?;
        let (points, rays) = dehomogenize(&out.generators)?;
        (VRep::Affine { dim: affine.dim(), points, rays }, out.trace)
    } else {
        let system = input.parse(formats::parse_hrep)?;
        let out = dd::run(&system, &dd_options, None)?;
        (VRep::Cone { dim: system.dim(), rays: out.generators.canonical() }, out.trace)
    };
    let mut stdout = formats::print_vrep(&vrep);
    if options.stats {
        stdout.push_str(&trace_summary(&trace));
    }
    Ok(Output::ok(stdout))
}

/// The trace as `#` comment lines, so the output stays a valid V-rep file.
pub fn trace_summary(trace: &EliminationTrace) -> String {
    let mut out = String::new();
    for (i, s) in trace.steps.iter().enumerate() {
        writeln!(
            out,
            "# step {} row {} le {} gt {} generated {} kept {} size {}",
            i + 1,
            s.row + 1,
            s.le_count,
            s.gt_count,
            s.generated,
            s.kept,
            s.size_after
        )
        .unwrap();
    }
    writeln!(out, "# final {} mean_intermediate {:.2}", trace.final_count(), trace.mean_intermediate()).unwrap();
    out
}

/// Extremality of one vector. Types are printed 1-based.
pub fn check(input: Input, vector: &str, oracle: bool) -> Result<Output> {
    let system = input.parse(formats::parse_hrep)?;
    let g = formats::parse_vector(vector)
        .map_err(|e| CliError::Usage(format!("vector literal, column {}: {}", e.column, e.message)))?;
    if g.len() != system.dim() {
        return Err(CliError::Semantic(format!(
            "the vector has {} entries but the system has dimension {}",
            g.len(),
            system.dim()
        )));
    }
    if g.is_zero() {
        return Err(CliError::Semantic("the zero vector spans no ray".into()));
    }
    if !system.satisfies(&g)? {
        return Ok(Output { stdout: "not a member\n".into(), code: 2 });
    }
    let t = extremality::extreme_type(&g, &system)?;
    let verdict = |t: Option<usize>| match t {
        Some(t) => format!("extreme, type {}", t + 1),
        None => "not extreme".to_string(),
    };
    let mut stdout = verdict(t);
    stdout.push('\n');
    if !oracle {
        return Ok(Output::ok(stdout));
    }
    let witness = extremality::oracle_witness(&g, &system)?;
    let mut elements: Vec<String> =
        extremality::zero_one_tangent_elements(&g, &system)?.iter().map(|x| format_zero_one(x)).collect();
    elements.sort_by(|a, b| b.cmp(a));
    let coords: Vec<String> = g.support().iter().map(|i| (i + 1).to_string()).collect();
    writeln!(stdout, "oracle: {}", verdict(witness)).unwrap();
    writeln!(stdout, "oracle elements over coordinates {}: {}", coords.join(" "), elements.join(" ")).unwrap();
    if witness != t {
        return Err(CliError::Mismatch(format!("hypergraph test says {}, enumeration says {}", verdict(t), verdict(witness))));
    }
    Ok(Output::ok(stdout))
}

/// `3 minimal SCCs: {x} {y} {t}`.
pub fn minscc(input: Input, oracle: bool) -> Result<Output> {
    let h = input.parse(formats::parse_hypergraph)?;
    let r = min_scc_count(&h.graph);
    let classes = r.minimal_classes();
    let shown: Vec<String> = classes.iter().map(|c| format!("{{{}}}", h.names(c).replace(' ', ", "))).collect();
    let noun = if r.nb == 1 { "minimal SCC" } else { "minimal SCCs" };
    let mut stdout = if shown.is_empty() {
        format!("{} {noun}\n", r.nb)
    } else {
        format!("{} {noun}: {}\n", r.nb, shown.join(" "))
    };
    if oracle {
        let expected = scc_oracle(&h.graph).minimal_classes();
        if expected != classes {
            let show = |cs: &[Vec<usize>]| cs.iter().map(|c| format!("{{{}}}", h.names(c))).collect::<Vec<_>>().join(" ");
            return Err(CliError::Mismatch(format!(
                "algorithm found {}, brute force found {}",
                show(&classes),
                show(&expected)
            )));
        }
        stdout.push_str("oracle: agrees\n");
    }
    Ok(Output::ok(stdout))
}

pub const CSV_HEADER: [&str; 8] =
    ["label", "d", "n", "final_count", "mean_intermediate", "time_ms_hypergraph", "time_ms_residuation", "ratio"];

/// A random family for `bench`: `count` systems drawn with seeds
/// `seed, seed + 1, …`.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomFamily {
    pub label: Option<String>,
    pub spec: RandomSpec,
    pub count: usize,
}

impl RandomFamily {
    /// Parses `key=value` pairs: `d`, `n`, `count`, `seed`, `density`,
    /// `range=LO:HI` and `label`.
    pub fn parse(pairs: &[String]) -> Result<Self> {
        let mut family = RandomFamily { label: None, spec: RandomSpec::new(5, 5, 0), count: 10 };
        for pair in pairs {
            let (key, value) =
                pair.split_once('=').ok_or_else(|| CliError::Usage(format!("expected key=value, found `{pair}`")))?;
            let bad = || CliError::Usage(format!("invalid value for `{key}`: `{value}`"));
            match key {
                "d" => family.spec.d = value.parse().map_err(|_| bad())?,
                "n" => family.spec.n = value.parse().map_err(|_| bad())?,
                "count" => family.count = value.parse().map_err(|_| bad())?,
                "seed" => family.spec.seed = value.parse().map_err(|_| bad())?,
                "density" => family.spec.density = value.parse().map_err(|_| bad())?,
                "range" => {
                    let (lo, hi) = value.split_once(':').ok_or_else(bad)?;
                    family.spec.coeff_range = (lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?);
                }
                "label" => family.label = Some(value.to_string()),
                _ => return Err(CliError::Usage(format!("unknown key `{key}`"))),
            }
        }
        if family.count == 0 {
            return Err(CliError::Usage("count must be at least 1".into()));
        }
        family.spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(family)
    }

    /// The label names the coefficient distribution so rows are
    /// self-describing.
    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| {
            let (lo, hi) = self.spec.coeff_range;
            format!("random density={} range={lo}:{hi} count={} seed={}", self.spec.density, self.count, self.spec.seed)
        })
    }

    pub fn systems(&self) -> Result<Vec<IneqSystem>> {
        (0..self.count as u64)
            .map(|i| Ok(random_system(&RandomSpec { seed: self.spec.seed.wrapping_add(i), ..self.spec.clone() })?))
            .collect()
    }
}

/// Measurements of one benchmark row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub label: String,
    pub d: usize,
    pub n: usize,
    pub final_count: f64,
    pub mean_intermediate: f64,
    pub time_ms_hypergraph: f64,
    pub time_ms_residuation: f64,
}

impl BenchRow {
    pub fn ratio(&self) -> f64 {
        self.time_ms_hypergraph / self.time_ms_residuation
    }

    fn record(&self) -> [String; 8] {
        [
            self.label.clone(),
            self.d.to_string(),
            self.n.to_string(),
            format!("{:.2}", self.final_count),
            format!("{:.2}", self.mean_intermediate),
            format!("{:.3}", self.time_ms_hypergraph),
            format!("{:.3}", self.time_ms_residuation),
            format!("{:.4}", self.ratio()),
        ]
    }
}

/// Runs both pipelines on every system; counts and times are averaged.
/// Fails with a mismatch if the two pipelines disagree.
pub fn bench_systems(label: String, systems: &[IneqSystem]) -> Result<BenchRow> {
    let first = systems.first().ok_or_else(|| CliError::Usage("nothing to benchmark".into()))?;
    let (mut finals, mut inter, mut th, mut tr) = (0.0, 0.0, 0.0, 0.0);
    for s in systems {
        let start = Instant::now();
        let fast = dd::run(s, &DdOptions::default(), None)?;
        th += start.elapsed().as_secs_f64() * 1e3;
        let start = Instant::now();
        let slow = dd::run(s, &DdOptions { method: Method::Residuation, jobs: 1 }, None)?;
        tr += start.elapsed().as_secs_f64() * 1e3;
        if fast.generators.canonical() != slow.generators.canonical() {
            return Err(CliError::Mismatch("hypergraph and residuation pipelines disagree".into()));
        }
        finals += fast.trace.final_count() as f64;
        inter += fast.trace.mean_intermediate();
    }
    let k = systems.len() as f64;
    Ok(BenchRow {
        label,
        d: first.dim(),
        n: first.len(),
        final_count: finals / k,
        mean_intermediate: inter / k,
        time_ms_hypergraph: th / k,
        time_ms_residuation: tr / k,
    })
}

pub fn write_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for row in rows {
        w.write_record(row.record()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn bench(families: &[RandomFamily], files: &[Input]) -> Result<Output> {
    let mut rows = Vec::new();
    for f in families {
        rows.push(bench_systems(f.label(), &f.systems()?)?);
    }
    for input in files {
        let system = input.parse(formats::parse_hrep)?;
        rows.push(bench_systems(input.path.to_string(), &[system])?);
    }
    if rows.is_empty() {
        return Err(CliError::Usage("give --random KEY=VALUE... or H-rep files".into()));
    }
    Ok(Output::ok(write_csv(&rows)))
}

/// `U(n + d, d − 1)` for `n` inequalities in dimension `d`, or `U(n, d)`
/// itself with `raw`.
pub fn bound(n: usize, d: usize, raw: bool) -> Result<Output> {
    let value = if raw { dd::upper_bound(n, d)? } else { dd::tropical_bound(n, d)? };
    Ok(Output::ok(format!("{value}\n")))
}
