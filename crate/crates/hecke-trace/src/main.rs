//! `hecke-trace`: exact trace values on the extended affine Hecke algebra
//! of type A, from the command line.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hecke_trace::chambers::{classify_chamber, wset, wset_direct};
use hecke_trace::cli::{
    self, exit_code_for_error, exit_code_for_trace, exit_code_for_verify, Method, TraceRequest,
    VerifyConfig, SCHEMA,
};
use hecke_trace::kostant::{enumerate_kostant, trace_kostant};
use hecke_trace::roots::{build_type_a, WeightVector};
use hecke_trace::tesler::{enumerate_tesler, tesler_weighted_sum};
use hecke_trace::{Error, LaurentPoly};

#[derive(Parser)]
#[command(
    name = "hecke-trace",
    version,
    about = "Exact trace values on the extended affine Hecke algebra of type A"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct WeightArgs {
    /// Rank parameter: the root system is A_{n-1}.
    #[arg(long)]
    n: usize,
    /// Weight as comma-separated simple-root coordinates, e.g. 3,1,2.
    #[arg(long, conflicts_with = "hooks")]
    lambda: Option<String>,
    /// Weight as comma-separated hook sums (converted by prefix sums).
    #[arg(long)]
    hooks: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the trace of the translation element for -lambda.
    Trace {
        #[command(flatten)]
        weight: WeightArgs,
        /// Pipeline to run; `all` cross-checks every pipeline.
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Truncation cap for the series pipeline (default: the weight's
        /// total degree).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print the per-permutation residue summands.
        #[arg(long)]
        verbose: bool,
    },
    /// Cross-check all pipelines over a grid of weights.
    Verify {
        /// Largest n; the grid covers 2..=n_max.
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Coordinates range over 0..=cap.
        #[arg(long, default_value_t = 4)]
        cap: i64,
        /// Series truncation cap; weights beyond it skip that comparison.
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Worker threads (0 = library default); output is identical for
        /// every value.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate Kostant partitions of a weight.
    Kostant {
        #[command(flatten)]
        weight: WeightArgs,
        /// Dump the partitions one per line as multiplicity vectors.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate Tesler matrices with the given hook sums.
    Tesler {
        /// Hook-sum vector, comma separated, e.g. 1,1.
        #[arg(long)]
        hooks: String,
        /// Dump the matrices one per line.
        #[arg(long)]
        list: bool,
        /// Print the raw weighted sum and its divided form.
        #[arg(long)]
        sum: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify a weight against the valley-chamber family.
    Chamber {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the permutation set attached to a chamber.
    Wset {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Use the brute-force cone-containment filter instead of the
        /// doubling recursions.
        #[arg(long)]
        direct: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn parse_int_list(text: &str, what: &str) -> Vec<i64> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .unwrap_or_else(|_| usage_error(&format!("invalid {what} entry {p:?}")))
        })
        .collect()
}

impl WeightArgs {
    fn resolve(&self) -> WeightVector {
        let lambda = match (&self.lambda, &self.hooks) {
            (Some(l), None) => WeightVector::new(parse_int_list(l, "--lambda")),
            (None, Some(h)) => WeightVector::from_hooks(&parse_int_list(h, "--hooks")),
            (None, None) => usage_error("one of --lambda or --hooks is required"),
            (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
        };
        if lambda.len() != self.n - 1 {
            usage_error(&format!(
                "weight has {} coordinates but n = {} needs {}",
                lambda.len(),
                self.n,
                self.n - 1
            ));
        }
        lambda
    }
}

fn fail(e: &Error, format: Format) -> ! {
    if format == Format::Json {
        #[derive(Serialize)]
        struct ErrorReport<'a> {
            schema: &'static str,
            error: ErrorBody<'a>,
        }
        #[derive(Serialize)]
        struct ErrorBody<'a> {
            code: &'static str,
            reason: &'a str,
        }
        let report = ErrorReport {
            schema: SCHEMA,
            error: ErrorBody { code: e.code(), reason: &e.to_string() },
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    }
    eprintln!("error[{}]: {e}", e.code());
    std::process::exit(exit_code_for_error(e));
}

fn main() {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Trace { weight, method, degree, format, verbose } => {
            if weight.n < 2 {
                usage_error("--n must be at least 2");
            }
            let req = TraceRequest {
                n: weight.n,
                lambda: weight.resolve(),
                method,
                degree,
                verbose,
            };
            match cli::run_trace(&req) {
                Ok(report) => {
                    match format {
                        Format::Text => print!("{}", cli::render_trace_text(&report)),
                        Format::Json => print!("{}", cli::render_trace_json(&report)),
                    }
                    std::process::exit(exit_code_for_trace(&report));
                }
                Err(e) => fail(&e, format),
            }
        }
        Cmd::Verify { n_max, cap, degree, jobs, format } => {
            let cfg = VerifyConfig { n_max, coord_cap: cap, series_degree: degree, jobs };
            match cli::run_verify(&cfg) {
                Ok(report) => {
                    match format {
                        Format::Text => print!("{}", cli::render_verify_text(&report)),
                        Format::Json => print!("{}", cli::render_verify_json(&report)),
                    }
                    std::process::exit(exit_code_for_verify(&report));
                }
                Err(e) => fail(&e, format),
            }
        }
        Cmd::Kostant { weight, list, format } => {
            if weight.n < 2 {
                usage_error("--n must be at least 2");
            }
            let lambda = weight.resolve();
            let sys = match build_type_a(weight.n) {
                Ok(sys) => sys,
                Err(e) => fail(&e, format),
            };
            let partitions = enumerate_kostant(&sys, &lambda);
            let trace = trace_kostant(&sys, &lambda);
            #[derive(Serialize)]
            struct KostantReport {
                schema: &'static str,
                n: usize,
                lambda: Vec<i64>,
                count: usize,
                trace: LaurentPoly,
                #[serde(skip_serializing_if = "Option::is_none")]
                partitions: Option<Vec<Vec<u32>>>,
            }
            let report = KostantReport {
                schema: SCHEMA,
                n: weight.n,
                lambda: lambda.coords().to_vec(),
                count: partitions.len(),
                trace,
                partitions: list.then(|| {
                    partitions.iter().map(|p| p.multiplicities().to_vec()).collect()
                }),
            };
            match format {
                Format::Text => {
                    println!("n = {}, lambda = ({lambda})", report.n);
                    println!("partitions: {}", report.count);
                    if list {
                        for p in &partitions {
                            println!("{p}");
                        }
                    }
                    println!("trace: {}", report.trace);
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
        }
        Cmd::Tesler { hooks, list, sum, format } => {
            let b = parse_int_list(&hooks, "--hooks");
            let matrices = enumerate_tesler(&b);
            let weighted = sum.then(|| tesler_weighted_sum(&b));
            #[derive(Serialize)]
            struct TeslerReport {
                schema: &'static str,
                hooks: Vec<i64>,
                lambda: Vec<i64>,
                count: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                matrices: Option<Vec<Vec<Vec<u32>>>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                raw_sum: Option<LaurentPoly>,
                #[serde(skip_serializing_if = "Option::is_none")]
                divided: Option<LaurentPoly>,
                #[serde(skip_serializing_if = "Option::is_none")]
                divisible: Option<bool>,
            }
            let lambda = WeightVector::from_hooks(&b);
            let report = TeslerReport {
                schema: SCHEMA,
                hooks: b.clone(),
                lambda: lambda.coords().to_vec(),
                count: matrices.len(),
                matrices: list.then(|| matrices.iter().map(|m| m.rows().to_vec()).collect()),
                raw_sum: weighted.as_ref().map(|w| w.raw.clone()),
                divided: weighted.as_ref().and_then(|w| w.divided.clone()),
                divisible: weighted.as_ref().map(|w| !w.non_divisible()),
            };
            match format {
                Format::Text => {
                    println!("hooks = ({}), lambda = ({lambda})", join_i64(&b));
                    println!("matrices: {}", report.count);
                    if list {
                        for m in &matrices {
                            println!("{m}");
                        }
                    }
                    if let Some(w) = &weighted {
                        println!("raw sum: {}", w.raw);
                        match &w.divided {
                            Some(p) => println!("divided: {p}"),
                            None => println!("divided: not divisible"),
                        }
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
        }
        Cmd::Chamber { weight, format } => {
            if weight.n < 2 {
                usage_error("--n must be at least 2");
            }
            let lambda = weight.resolve();
            let classification = classify_chamber(&lambda);
            #[derive(Serialize)]
            struct ChamberReport {
                schema: &'static str,
                n: usize,
                lambda: Vec<i64>,
                classification: String,
            }
            let report = ChamberReport {
                schema: SCHEMA,
                n: weight.n,
                lambda: lambda.coords().to_vec(),
                classification: classification.to_string(),
            };
            match format {
                Format::Text => println!("{}", report.classification),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
        }
        Cmd::Wset { n, m, direct, format } => {
            let result = if direct { wset_direct(n, m) } else { wset(n, m) };
            let set = match result {
                Ok(set) => set,
                Err(e) => fail(&e, format),
            };
            #[derive(Serialize)]
            struct WsetReport {
                schema: &'static str,
                n: usize,
                m: usize,
                direct: bool,
                count: usize,
                permutations: Vec<String>,
            }
            let perms: Vec<String> = set.iter().map(|w| w.to_string()).collect();
            let report = WsetReport {
                schema: SCHEMA,
                n,
                m,
                direct,
                count: perms.len(),
                permutations: perms,
            };
            match format {
                Format::Text => {
                    for w in &report.permutations {
                        println!("{w}");
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
            }
        }
    }
}

fn join_i64(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}
