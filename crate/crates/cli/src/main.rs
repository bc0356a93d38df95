use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

#[cfg(feature = "parallel")]
use anyhow::Context;
use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use jsbranch::cores::{core_and_weight, is_rectangle_le_n};
use jsbranch::crystal::build_component;
use jsbranch::js::{chi_by_branching, chi_direct, js_set};
use jsbranch::paths::branching;
use jsbranch::qseries::fermionic_series;
use jsbranch::verify::{verify, Suite, VerificationReport, VerifyParams};
use jsbranch::{Method, Partition};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "jsbranch", version, about = "Level-1 affine sl(n) branching functions and Jantzen-Seitz partitions")]
struct Cli {
    /// Output format. Defaults to json, or dot for `crystal graph`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for the data-parallel kernels.
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of b^{L_k + L_(j-k)}_{L_j, L_0}(q).
    Branching {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "fow")]
        method: MethodArg,
    },
    /// The fermionic lattice sum labelled by L_s + L_t.
    Fermionic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        order: usize,
    },
    /// Jantzen-Seitz partitions.
    Js {
        #[command(subcommand)]
        command: JsCommand,
    },
    /// The crystal component of the empty partition.
    Crystal {
        #[command(subcommand)]
        command: CrystalCommand,
    },
    /// n-core, n-weight and rectangle shape of a partition.
    Core {
        #[arg(long)]
        n: usize,
        /// Parts such as "5,5,4,1,1", "5^2,4,1^2", or "-" for the empty partition.
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Cross-verification suites. Exits nonzero if any case fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        max_size: usize,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum JsCommand {
    /// JS(n, core, weight), lexicographically decreasing.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        core: String,
        #[arg(long)]
        weight: usize,
    },
    /// The generating series of #JS(n, core, d).
    Chi {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        core: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: ChiMethod,
        /// Branching-function evaluator used by the branching side.
        #[arg(long, default_value = "fow")]
        via: Method,
    },
}

#[derive(Subcommand)]
enum CrystalCommand {
    /// Vertices and f-arrows up to a partition size.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: usize,
    },
}

#[derive(Clone, Copy)]
enum MethodArg {
    One(Method),
    All,
}

impl std::str::FromStr for MethodArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(MethodArg::All)
        } else {
            s.parse().map(MethodArg::One)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChiMethod {
    Direct,
    Branching,
    Both,
}

#[derive(Serialize)]
struct Row {
    method: String,
    coeffs: Vec<u64>,
}

#[derive(Serialize)]
struct Table {
    rows: Vec<Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
}

impl Table {
    fn new(rows: Vec<Row>) -> Self {
        let verdict = (rows.len() > 1).then(|| {
            if rows.windows(2).all(|w| w[0].coeffs == w[1].coeffs) {
                "AGREE"
            } else {
                "DISAGREE"
            }
        });
        Table { rows, verdict }
    }

    fn agrees(&self) -> bool {
        self.verdict != Some("DISAGREE")
    }

    fn render(&self, format: Format) -> Result<String> {
        let mut out = String::new();
        match format {
            Format::Json => out = json_line(self)?,
            Format::Csv => {
                let width = self.rows.iter().map(|r| r.coeffs.len()).max().unwrap_or(0);
                let header: Vec<String> = (0..width).map(|d| format!("q{d}")).collect();
                let _ = writeln!(out, "method,{}", header.join(","));
                for row in &self.rows {
                    let _ = writeln!(out, "{},{}", row.method, join(&row.coeffs, ","));
                }
            }
            Format::Text => {
                let pad = self.rows.iter().map(|r| r.method.len()).max().unwrap_or(0);
                for row in &self.rows {
                    let _ = writeln!(out, "{:<pad$}  {}", row.method, join(&row.coeffs, " "));
                }
                if let Some(v) = self.verdict {
                    let _ = writeln!(out, "{v}");
                }
            }
            Format::Dot => bail!("dot output is only available for `crystal graph`"),
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct CoreInfo {
    core: Partition,
    weight: usize,
    rectangle: Option<[usize; 2]>,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    suite: &'a str,
    cases: usize,
    failures: &'a [jsbranch::verify::Failure],
    passed: bool,
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn parse_partition(text: &str) -> Result<Partition> {
    Ok(text.parse()?)
}

fn configure_jobs(jobs: Option<usize>) -> Result<()> {
    let Some(k) = jobs else { return Ok(()) };
    if k == 0 {
        bail!("--jobs must be at least 1");
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .context("configuring the worker pool")?;
    #[cfg(not(feature = "parallel"))]
    if k > 1 {
        eprintln!("warning: built without the parallel feature; --jobs {k} ignored");
    }
    Ok(())
}

/// Renders the command's output. The flag is false when a requested
/// comparison or verification failed.
fn run(cli: Cli) -> Result<(String, bool)> {
    configure_jobs(cli.jobs)?;
    let format = cli.format;
    let plain = format.unwrap_or(Format::Json);
    match cli.command {
        Command::Branching { n, j, k, order, method } => {
            let methods = match method {
                MethodArg::One(m) => vec![m],
                MethodArg::All => Method::ALL.to_vec(),
            };
            let mut rows = Vec::new();
            for m in methods {
                let series = branching(n, j, k, order, m)?;
                rows.push(Row { method: m.name().to_string(), coeffs: series.coeffs });
            }
            let table = Table::new(rows);
            Ok((table.render(plain)?, table.agrees()))
        }
        Command::Fermionic { n, s, t, order } => {
            let sum = fermionic_series(n, s, t, order)?;
            let report = sum.report(n, s, t);
            let out = match plain {
                Format::Json => json_line(&report)?,
                Format::Csv => format!("exponent,coefficient\n{}", {
                    let mut body = String::new();
                    for (d, c) in report.coeffs.iter().enumerate() {
                        let _ = writeln!(body, "{d},{c}");
                    }
                    body
                }),
                Format::Text => format!(
                    "{}\npoints visited: {}\n",
                    report.coeffs.join(" "),
                    report.points_visited
                ),
                Format::Dot => bail!("dot output is only available for `crystal graph`"),
            };
            Ok((out, true))
        }
        Command::Js { command: JsCommand::List { n, core, weight } } => {
            let mu = parse_partition(&core)?;
            let set = js_set(n, &mu, weight)?;
            let out = match plain {
                Format::Json => json_line(&set)?,
                Format::Csv => {
                    let mut out = String::from("partition\n");
                    for lam in &set {
                        let _ = writeln!(out, "\"{lam}\"");
                    }
                    out
                }
                Format::Text => set.iter().map(|lam| format!("{lam}\n")).collect(),
                Format::Dot => bail!("dot output is only available for `crystal graph`"),
            };
            Ok((out, true))
        }
        Command::Js { command: JsCommand::Chi { n, core, order, method, via } } => {
            let mu = parse_partition(&core)?;
            let mut rows = Vec::new();
            if method != ChiMethod::Branching {
                rows.push(Row { method: "direct".into(), coeffs: chi_direct(n, &mu, order)? });
            }
            if method != ChiMethod::Direct {
                rows.push(Row { method: "branching".into(), coeffs: chi_by_branching(n, &mu, order, via)? });
            }
            let table = Table::new(rows);
            Ok((table.render(plain)?, table.agrees()))
        }
        Command::Crystal { command: CrystalCommand::Graph { n, max_size } } => {
            let graph = build_component(n, max_size)?;
            let out = match format.unwrap_or(Format::Dot) {
                Format::Dot | Format::Text => graph.to_dot(),
                Format::Json => json_line(&graph.to_json())?,
                Format::Csv => {
                    let mut out = String::from("from,i,to\n");
                    for e in graph.edges() {
                        let v = graph.vertices();
                        let _ = writeln!(out, "\"{}\",{},\"{}\"", v[e.from].partition, e.i, v[e.to].partition);
                    }
                    out
                }
            };
            Ok((out, true))
        }
        Command::Core { n, partition } => {
            let lam = parse_partition(&partition)?;
            if n < 2 {
                return Err(jsbranch::Error::InvalidRank(n).into());
            }
            let (core, weight) = core_and_weight(&lam, n);
            let rectangle = is_rectangle_le_n(&core, n).map(|(k, l)| [k, l]);
            let info = CoreInfo { core, weight, rectangle };
            let out = match plain {
                Format::Json => json_line(&info)?,
                Format::Csv => format!(
                    "core,weight,rectangle\n\"{}\",{},{}\n",
                    info.core,
                    info.weight,
                    info.rectangle.map_or("".into(), |[k, l]| format!("\"{k}^{l}\""))
                ),
                Format::Text => format!(
                    "core: {}\nweight: {}\nrectangle: {}\n",
                    info.core,
                    info.weight,
                    info.rectangle.map_or("none".into(), |[k, l]| format!("({k}^{l})"))
                ),
                Format::Dot => bail!("dot output is only available for `crystal graph`"),
            };
            Ok((out, true))
        }
        Command::Verify { suite, n, max_size, order } => {
            let start = Instant::now();
            let reports = verify(suite, VerifyParams { n, max_size, order })?;
            for r in &reports {
                eprintln!("{}: {:.1} ms", r.suite, r.wall_time_ms);
            }
            eprintln!("total: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
            let ok = reports.iter().all(VerificationReport::passed);
            Ok((render_reports(&reports, plain)?, ok))
        }
    }
}

/// Wall times go to stderr so that stdout stays byte-stable.
fn render_reports(reports: &[VerificationReport], format: Format) -> Result<String> {
    let rows: Vec<ReportOut> = reports
        .iter()
        .map(|r| ReportOut { suite: &r.suite, cases: r.cases, failures: &r.failures, passed: r.passed() })
        .collect();
    let mut out = String::new();
    match format {
        Format::Json => out = json_line(&rows)?,
        Format::Csv => {
            out.push_str("suite,cases,failures,passed\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{},{}", r.suite, r.cases, r.failures.len(), r.passed);
            }
        }
        Format::Text => {
            for r in &rows {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{verdict} {}: {} cases, {} failures", r.suite, r.cases, r.failures.len());
                for f in r.failures {
                    let _ = writeln!(out, "  {}: expected {}, got {}", f.case, f.expected, f.actual);
                }
            }
        }
        Format::Dot => bail!("dot output is only available for `crystal graph`"),
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
