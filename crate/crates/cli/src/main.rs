//! `duflo`: command-line front end for the induced Duflo order toolkit.
//!
//! Exit status: 0 on success, 1 on a domain error, 2 on a usage error,
//! 3 when `verify` finds a failing property.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use duflo_core::engine::{self, induced_order, offsprings_dual, offsprings_recursive};
use duflo_core::oracle::offsprings_bruteforce;
use duflo_core::rs::{cell, hook_length_count, rs_pair, rs_trace};
use duflo_core::suite::{self, SuiteKind};
use duflo_core::{Diagram, Tableau, Word};

#[derive(Parser, Debug)]
#[command(name = "duflo", version, about = "Robinson–Schensted cells and the induced Duflo order")]
struct Cli {
    /// Output format; `dot` applies to `poset` only.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Dual,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Fast,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Insertion and recording tableaux of a word, e.g. "[2,5,1,4,3]".
    Rs {
        word: String,
        /// Also print the prefix tableaux.
        #[arg(long)]
        trace: bool,
    },
    /// All words whose insertion tableau is the given tableau.
    Cell { tableau: String },
    /// Size of the cell, by the hook-length formula.
    Cellsize { tableau: String },
    /// Offsprings of a tableau.
    Offsprings {
        tableau: String,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// Upper covers of a standard tableau in the induced order.
    Descendants { tableau: String },
    /// Whether the first standard tableau lies below the second.
    Order { lower: String, upper: String },
    /// Export the induced order on standard tableaux of size n.
    Poset {
        #[arg(long)]
        n: usize,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest n accepted.
        #[arg(long, default_value_t = 8)]
        ceiling: usize,
    },
    /// Covers of a partition in the dominance order, e.g. "3,2,1".
    DiagramDescendants { partition: String },
    /// Restrict a word or tableau to the entries of [i, j].
    Project {
        operand: String,
        #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
        range: Vec<u32>,
    },
    /// Run the named property suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Suite::Fast)]
        suite: Suite,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
    Verification(String),
}

impl From<duflo_core::Error> for Failure {
    fn from(e: duflo_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse<T: std::str::FromStr<Err = duflo_core::Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse()?)
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn emit_json(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn sorted_strings<T: Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|t| t.to_string()).collect::<BTreeSet<_>>().into_iter().collect()
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Poset { .. }) {
        return Err(Failure::Usage("--format dot applies only to `poset`".into()));
    }
    match cli.command {
        Command::Rs { word, trace } => {
            let w: Word = parse(&word)?;
            let pair = rs_pair(&w)?;
            let steps = trace_strings(&w);
            Ok(match format {
                Format::Json => {
                    let mut v = json!({
                        "schema": 1,
                        "word": w.to_string(),
                        "T": pair.insertion.to_string(),
                        "Q": pair.recording.to_string(),
                    });
                    if trace {
                        v["trace"] = json!(steps);
                    }
                    emit_json(v)
                }
                _ => {
                    let mut out = String::new();
                    if trace {
                        out += &lines(steps.iter().enumerate().map(|(k, t)| format!("{}: {t}", k + 1)));
                    }
                    out + &format!("T: {}\nQ: {}\n", pair.insertion, pair.recording)
                }
            })
        }
        Command::Cell { tableau } => {
            let t: Tableau = parse(&tableau)?;
            let members = sorted_strings(cell(&t).members);
            Ok(match format {
                Format::Json => {
                    emit_json(json!({"schema": 1, "tableau": t.to_string(), "size": members.len(), "words": members}))
                }
                _ => lines(members),
            })
        }
        Command::Cellsize { tableau } => {
            let t: Tableau = parse(&tableau)?;
            let size = hook_length_count(&t.shape());
            Ok(match format {
                Format::Json => emit_json(json!({"schema": 1, "tableau": t.to_string(), "size": size as u64})),
                _ => format!("{size}\n"),
            })
        }
        Command::Offsprings { tableau, method } => {
            let t: Tableau = parse(&tableau)?;
            let set = match method {
                Method::Recursive => offsprings_recursive(&t),
                Method::Dual => offsprings_dual(&t),
                Method::Brute => offsprings_bruteforce(&t)?,
            };
            let items = sorted_strings(set.offsprings);
            Ok(match format {
                Format::Json => emit_json(json!({"schema": 1, "tableau": t.to_string(), "offsprings": items})),
                _ => lines(items),
            })
        }
        Command::Descendants { tableau } => {
            let t: Tableau = parse(&tableau)?;
            let items = sorted_strings(engine::duflo_descendants(&t)?);
            Ok(match format {
                Format::Json => emit_json(json!({"schema": 1, "tableau": t.to_string(), "descendants": items})),
                _ => lines(items),
            })
        }
        Command::Order { lower, upper } => {
            let (t, s): (Tableau, Tableau) = (parse(&lower)?, parse(&upper)?);
            if !t.is_standard() || !s.is_standard() || t.size() != s.size() {
                return Err(Failure::Domain(format!("`{t}` and `{s}` must be standard tableaux of equal size")));
            }
            let answer = induced_order(t.size()).leq(&t, &s)?;
            Ok(match format {
                Format::Json => {
                    emit_json(json!({"schema": 1, "lower": t.to_string(), "upper": s.to_string(), "leq": answer}))
                }
                _ => format!("{answer}\n"),
            })
        }
        Command::Poset { n, out, ceiling } => {
            if n < 1 || n > ceiling {
                return Err(Failure::Usage(format!("--n must lie in 1..={ceiling}, got {n}")));
            }
            let poset = induced_order(n);
            let text = match format {
                Format::Json => emit_json(poset.to_json(true)),
                _ => poset.to_dot(),
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::DiagramDescendants { partition } => {
            let d: Diagram = parse(&partition)?;
            let items = sorted_strings(d.descendants());
            Ok(match format {
                Format::Json => emit_json(json!({"schema": 1, "diagram": d.to_string(), "descendants": items})),
                _ => lines(items),
            })
        }
        Command::Project { operand, range } => {
            let (i, j) = (range[0], range[1]);
            let result = if operand.trim_start().starts_with('[') {
                let w: Word = parse(&operand)?;
                engine::project_word(&w, i, j)?.to_string()
            } else {
                let t: Tableau = parse(&operand)?;
                if i < 1 || i > j || j as usize > t.size() || !t.is_standard() {
                    return Err(Failure::Domain(format!("interval [{i},{j}] does not fit `{t}`")));
                }
                t.project(i, j).to_string()
            };
            Ok(match format {
                Format::Json => {
                    emit_json(json!({"schema": 1, "operand": operand.trim(), "range": [i, j], "result": result}))
                }
                _ => format!("{result}\n"),
            })
        }
        Command::Verify { n, suite } => {
            if n > 7 {
                return Err(Failure::Usage(format!("--n must be at most 7, got {n}")));
            }
            let kind = match suite {
                Suite::Fast => SuiteKind::Fast,
                Suite::Full => SuiteKind::Full,
            };
            let report = suite::verify(n, kind);
            let text = match format {
                Format::Json => emit_json(json!({
                    "schema": 1,
                    "n": report.n,
                    "words": report.words,
                    "tableaux": report.tableaux,
                    "passed": report.passed(),
                    "results": report.results.iter().map(|r| json!({
                        "name": r.name,
                        "criterion": r.criterion,
                        "n": r.n,
                        "passed": r.passed,
                        "detail": r.detail,
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut out = format!("n = {}: {} words, {} tableaux\n", report.n, report.words, report.tableaux);
                    for r in &report.results {
                        let size = r.n.map(|m| format!(" [n={m}]")).unwrap_or_default();
                        let mark = if r.passed { "PASS" } else { "FAIL" };
                        out += &format!("{mark} {}{size}: {}\n", r.name, r.detail);
                    }
                    let failed = report.results.iter().filter(|r| !r.passed).count();
                    out + &format!("{} properties, {failed} failed\n", report.results.len())
                }
            };
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

fn trace_strings(w: &Word) -> Vec<String> {
    rs_trace(w).iter().map(|t| t.to_string()).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(out) => write_stdout(&out, ExitCode::SUCCESS),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(report)) => write_stdout(&report, ExitCode::from(3)),
    }
}

/// Writes `text` to standard output; a closed pipe is not an error.
fn write_stdout(text: &str, status: ExitCode) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
        _ => status,
    }
}
