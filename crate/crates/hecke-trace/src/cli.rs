//! Front-end logic behind the `hecke-trace` binary: per-weight trace
//! reports, the cross-method verification grid, and stable text/JSON
//! renderings.
//!
//! Reports are plain data with a versioned schema (`hecke-trace/1`);
//! rendering is deterministic, byte-stable across runs and across worker
//! counts. Resource ceilings come from environment variables only; all
//! mathematical inputs arrive via flags.

use rayon::prelude::*;
use serde::Serialize;

use crate::chambers::{classify_chamber, ChamberClassification};
use crate::kostant::trace_kostant;
use crate::laurent::LaurentPoly;
use crate::product::trace_product;
use crate::residue::{residue_terms, trace_residue};
use crate::roots::{build_type_a, WeightVector};
use crate::series::{eta_series, TruncatedSeries};
use crate::tesler::tesler_weighted_sum;
use crate::Error;

/// Version tag carried by every JSON report.
pub const SCHEMA: &str = "hecke-trace/1";

pub const ENV_MAX_N: &str = "HECKE_TRACE_MAX_N";
pub const ENV_MAX_COORD: &str = "HECKE_TRACE_MAX_COORD";
pub const ENV_MAX_DEGREE: &str = "HECKE_TRACE_MAX_DEGREE";

/// Hard ceilings on problem size, read from the environment.
#[derive(Clone, Copy, Debug)]
pub struct ResourceCaps {
    pub max_n: usize,
    pub max_coord: i64,
    pub max_degree: usize,
}

impl Default for ResourceCaps {
    fn default() -> Self {
        ResourceCaps { max_n: 8, max_coord: 64, max_degree: 64 }
    }
}

impl ResourceCaps {
    pub fn from_env() -> Self {
        fn read<T: std::str::FromStr>(key: &str, default: T) -> T {
            std::env::var(key)
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(default)
        }
        let d = ResourceCaps::default();
        ResourceCaps {
            max_n: read(ENV_MAX_N, d.max_n),
            max_coord: read(ENV_MAX_COORD, d.max_coord),
            max_degree: read(ENV_MAX_DEGREE, d.max_degree),
        }
    }

    fn check_n(&self, n: usize) -> Result<(), Error> {
        if n > self.max_n {
            return Err(Error::ResourceLimit {
                what: "n",
                got: n as i64,
                limit: self.max_n as i64,
                env: ENV_MAX_N,
            });
        }
        Ok(())
    }

    fn check_coords(&self, lambda: &WeightVector) -> Result<(), Error> {
        for &a in lambda.coords() {
            if a.abs() > self.max_coord {
                return Err(Error::ResourceLimit {
                    what: "coordinate magnitude",
                    got: a.abs(),
                    limit: self.max_coord,
                    env: ENV_MAX_COORD,
                });
            }
        }
        Ok(())
    }

    fn check_degree(&self, degree: usize) -> Result<(), Error> {
        if degree > self.max_degree {
            return Err(Error::ResourceLimit {
                what: "series degree",
                got: degree as i64,
                limit: self.max_degree as i64,
                env: ENV_MAX_DEGREE,
            });
        }
        Ok(())
    }
}

/// Trace pipelines selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Kostant,
    Residue,
    Product,
    Series,
    All,
}

impl Method {
    fn expand(self) -> Vec<&'static str> {
        match self {
            Method::Kostant => vec!["kostant"],
            Method::Residue => vec!["residue"],
            Method::Product => vec!["product"],
            Method::Series => vec!["series"],
            Method::All => vec!["kostant", "residue", "product", "series"],
        }
    }
}

/// One method's result inside a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MethodOutcome {
    Ok { value: LaurentPoly },
    Skipped { reason: String },
    Error { code: &'static str, reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct MethodReport {
    pub method: &'static str,
    #[serde(flatten)]
    pub outcome: MethodOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueTermReport {
    pub w: String,
    pub sign: i8,
    pub exponent: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub schema: &'static str,
    pub n: usize,
    pub lambda: Vec<i64>,
    pub classification: String,
    pub methods: Vec<MethodReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue_terms: Option<Vec<ResidueTermReport>>,
    /// Present only when several methods ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct TraceRequest {
    pub n: usize,
    pub lambda: WeightVector,
    pub method: Method,
    /// Truncation cap for the series pipeline; defaults to the weight's
    /// total degree.
    pub degree: Option<usize>,
    pub verbose: bool,
}

fn run_one_method(
    name: &str,
    n: usize,
    lambda: &WeightVector,
    degree: Option<usize>,
    caps: &ResourceCaps,
) -> Result<LaurentPoly, Error> {
    match name {
        "kostant" => {
            let sys = build_type_a(n)?;
            Ok(trace_kostant(&sys, lambda))
        }
        "residue" => trace_residue(n, lambda),
        "product" => trace_product(n, lambda),
        "series" => {
            let needed = lambda.total().max(0) as usize;
            let degree = degree.unwrap_or(needed);
            caps.check_degree(degree)?;
            let series = eta_series(n, degree)?;
            series.coefficient(lambda)
        }
        other => unreachable!("unknown method {other}"),
    }
}

/// Runs the requested pipeline(s) on a single weight. `Err` is reserved for
/// inputs that cannot run at all (resource ceilings, bad rank); per-method
/// failures are reported inside the `TraceReport`.
pub fn run_trace(req: &TraceRequest) -> Result<TraceReport, Error> {
    let caps = ResourceCaps::from_env();
    if req.n < 2 {
        return Err(Error::RankTooSmall(req.n));
    }
    if req.lambda.len() != req.n - 1 {
        return Err(Error::InvalidInput(format!(
            "lambda has {} coordinates, expected {}",
            req.lambda.len(),
            req.n - 1
        )));
    }
    caps.check_n(req.n)?;
    caps.check_coords(&req.lambda)?;

    let classification = classify_chamber(&req.lambda);
    let names = req.method.expand();
    let mut methods = Vec::with_capacity(names.len());
    let mut values: Vec<&LaurentPoly> = Vec::new();
    for name in &names {
        let outcome = match run_one_method(name, req.n, &req.lambda, req.degree, &caps) {
            Ok(value) => MethodOutcome::Ok { value },
            Err(e) => MethodOutcome::Error { code: e.code(), reason: e.to_string() },
        };
        methods.push(MethodReport { method: name, outcome });
    }
    for report in &methods {
        if let MethodOutcome::Ok { value } = &report.outcome {
            values.push(value);
        }
    }
    let agree = if names.len() > 1 {
        Some(values.len() == names.len() && values.windows(2).all(|w| w[0] == w[1]))
    } else {
        None
    };
    let residue_terms = if req.verbose
        && names.contains(&"residue")
        && matches!(classification, ChamberClassification::Interior { .. })
    {
        residue_terms(req.n, &req.lambda).ok().map(|terms| {
            terms
                .into_iter()
                .map(|t| ResidueTermReport {
                    w: t.perm.to_string(),
                    sign: t.sign,
                    exponent: t.exponent,
                })
                .collect()
        })
    } else {
        None
    };
    Ok(TraceReport {
        schema: SCHEMA,
        n: req.n,
        lambda: req.lambda.coords().to_vec(),
        classification: classification.to_string(),
        methods,
        residue_terms,
        agree,
    })
}

/// Exit-code contract: 0 success, 2 usage (handled by the argument parser),
/// 3 unmet preconditions, 4 violated internal identities.
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::NonDivisible => 4,
        _ => 3,
    }
}

pub fn exit_code_for_trace(report: &TraceReport) -> i32 {
    let mut code = 0;
    for m in &report.methods {
        if let MethodOutcome::Error { code: c, .. } = &m.outcome {
            code = code.max(if *c == "NonDivisible" { 4 } else { 3 });
        }
    }
    // A disagreement between pipelines that all ran is an identity
    // violation; a missing value is already covered by its error code.
    if code == 0 && report.agree == Some(false) {
        code = 4;
    }
    code
}

/// Grid specification for [`run_verify`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct VerifyConfig {
    /// Largest `n`; the grid covers `2..=n_max`.
    pub n_max: usize,
    /// Coordinates range over `0..=coord_cap`.
    pub coord_cap: i64,
    /// Truncation cap for the series comparisons; weights beyond it are
    /// skipped for that method only.
    pub series_degree: usize,
    /// Worker threads (0 = library default). The report is byte-identical
    /// for every value.
    #[serde(skip)]
    pub jobs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyCase {
    pub n: usize,
    pub lambda: Vec<i64>,
    pub classification: String,
    pub methods: Vec<MethodReport>,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub cases: usize,
    pub agreed: usize,
    pub method_runs: usize,
    pub method_skips: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub grid: VerifyConfig,
    pub empty: bool,
    pub pass: bool,
    pub summary: VerifySummary,
    pub cases: Vec<VerifyCase>,
}

fn verify_case(n: usize, lambda: WeightVector, series: &TruncatedSeries) -> VerifyCase {
    let sys = build_type_a(n).expect("n >= 2");
    let classification = classify_chamber(&lambda);
    let interior = matches!(classification, ChamberClassification::Interior { .. });
    let reference = trace_kostant(&sys, &lambda);

    let mut methods = Vec::with_capacity(5);
    methods.push(MethodReport {
        method: "kostant",
        outcome: MethodOutcome::Ok { value: reference.clone() },
    });
    let gated = |res: Result<LaurentPoly, Error>| match res {
        Ok(value) => MethodOutcome::Ok { value },
        Err(e) => MethodOutcome::Error { code: e.code(), reason: e.to_string() },
    };
    let skip = |reason: &str| MethodOutcome::Skipped { reason: reason.to_string() };

    methods.push(MethodReport {
        method: "residue",
        outcome: if interior {
            gated(trace_residue(n, &lambda))
        } else {
            skip("weight is not interior to a valley chamber")
        },
    });
    methods.push(MethodReport {
        method: "product",
        outcome: if interior {
            gated(trace_product(n, &lambda))
        } else {
            skip("weight is not interior to a valley chamber")
        },
    });
    methods.push(MethodReport {
        method: "series",
        outcome: if lambda.total() <= series.degree_cap() as i64 {
            gated(series.coefficient(&lambda))
        } else {
            skip("total degree exceeds the grid's series cap")
        },
    });
    methods.push(MethodReport {
        method: "tesler",
        outcome: MethodOutcome::Ok { value: tesler_weighted_sum(&lambda.to_hooks()).raw },
    });

    let agree = methods.iter().all(|m| match &m.outcome {
        MethodOutcome::Ok { value } => *value == reference,
        MethodOutcome::Skipped { .. } => true,
        MethodOutcome::Error { .. } => false,
    });
    VerifyCase {
        n,
        lambda: lambda.coords().to_vec(),
        classification: classification.to_string(),
        methods,
        agree,
    }
}

/// Runs every method on every weight of the grid and reports per-case
/// agreement against the Kostant reference. Methods whose preconditions a
/// weight does not meet are marked skipped, not failed.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport, Error> {
    let caps = ResourceCaps::from_env();
    caps.check_n(cfg.n_max)?;
    if cfg.coord_cap > caps.max_coord {
        return Err(Error::ResourceLimit {
            what: "coordinate cap",
            got: cfg.coord_cap,
            limit: caps.max_coord,
            env: ENV_MAX_COORD,
        });
    }
    caps.check_degree(cfg.series_degree)?;
    if cfg.coord_cap < 0 {
        return Err(Error::InvalidInput("coordinate cap must be non-negative".into()));
    }

    let mut inputs: Vec<(usize, WeightVector)> = Vec::new();
    for n in 2..=cfg.n_max {
        let rank = n - 1;
        let mut coords = vec![0i64; rank];
        loop {
            inputs.push((n, WeightVector::new(coords.clone())));
            // odometer over [0, cap]^rank, least-significant coordinate last
            let mut k = rank;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                coords[k] += 1;
                if coords[k] <= cfg.coord_cap {
                    break;
                }
                coords[k] = 0;
                if k == 0 {
                    k = rank;
                    break;
                }
            }
            if k == rank {
                break;
            }
        }
    }

    let eval = |inputs: &[(usize, WeightVector)]| -> Vec<VerifyCase> {
        let mut series_by_n: Vec<Option<TruncatedSeries>> = vec![None; cfg.n_max + 1];
        for &(n, _) in inputs {
            if series_by_n[n].is_none() {
                series_by_n[n] = Some(eta_series(n, cfg.series_degree).expect("n >= 2"));
            }
        }
        inputs
            .par_iter()
            .map(|(n, lambda)| {
                verify_case(*n, lambda.clone(), series_by_n[*n].as_ref().unwrap())
            })
            .collect()
    };
    let cases = if cfg.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(|| eval(&inputs))
    } else {
        eval(&inputs)
    };

    let agreed = cases.iter().filter(|c| c.agree).count();
    let method_runs = cases
        .iter()
        .flat_map(|c| &c.methods)
        .filter(|m| matches!(m.outcome, MethodOutcome::Ok { .. }))
        .count();
    let method_skips = cases
        .iter()
        .flat_map(|c| &c.methods)
        .filter(|m| matches!(m.outcome, MethodOutcome::Skipped { .. }))
        .count();
    let empty = cases.is_empty();
    let pass = cases.iter().all(|c| c.agree);
    Ok(VerifyReport {
        schema: SCHEMA,
        grid: *cfg,
        empty,
        pass,
        summary: VerifySummary { cases: cases.len(), agreed, method_runs, method_skips },
        cases,
    })
}

pub fn exit_code_for_verify(report: &VerifyReport) -> i32 {
    if report.pass {
        0
    } else {
        4
    }
}

fn outcome_line(m: &MethodReport) -> String {
    match &m.outcome {
        MethodOutcome::Ok { value } => format!("{}: {}", m.method, value),
        MethodOutcome::Skipped { reason } => format!("{}: skipped ({reason})", m.method),
        MethodOutcome::Error { code, reason } => format!("{}: error[{code}] {reason}", m.method),
    }
}

pub fn render_trace_text(report: &TraceReport) -> String {
    let mut out = String::new();
    let lambda: Vec<String> = report.lambda.iter().map(|x| x.to_string()).collect();
    out.push_str(&format!(
        "n = {}, lambda = ({}), {}\n",
        report.n,
        lambda.join(","),
        report.classification
    ));
    if let Some(terms) = &report.residue_terms {
        for t in terms {
            out.push_str(&format!("  w={} sign={:+} exponent={}\n", t.w, t.sign, t.exponent));
        }
    }
    for m in &report.methods {
        out.push_str(&outcome_line(m));
        out.push('\n');
    }
    if let Some(agree) = report.agree {
        out.push_str(if agree { "verdict: AGREE\n" } else { "verdict: DISAGREE\n" });
    }
    out
}

pub fn render_trace_json(report: &TraceReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for case in &report.cases {
        let lambda: Vec<String> = case.lambda.iter().map(|x| x.to_string()).collect();
        let verdict = if case.agree { "AGREE" } else { "DISAGREE" };
        out.push_str(&format!("n={} lambda=({}) {}\n", case.n, lambda.join(","), verdict));
        if !case.agree {
            for m in &case.methods {
                out.push_str(&format!("  {}\n", outcome_line(m)));
            }
        }
    }
    let s = &report.summary;
    if report.empty {
        out.push_str("grid is empty; vacuous pass\n");
    }
    out.push_str(&format!(
        "{}: {}/{} cases agree ({} method runs, {} skips)\n",
        if report.pass { "PASS" } else { "FAIL" },
        s.agreed,
        s.cases,
        s.method_runs,
        s.method_skips
    ));
    out
}

pub fn render_verify_json(report: &VerifyReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}
