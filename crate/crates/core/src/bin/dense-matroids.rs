use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dense_matroids::analysis::{critical_elements, fullness, line_minor, weakly_round, FullnessParams};
use dense_matroids::geometry::ProjectiveGeometry;
use dense_matroids::harness::{growth_table, projection_atlas, run_suite, SuiteConfig, SUITES};
use dense_matroids::io::ConstructionDocument;
use dense_matroids::kernel::set_flat_cap;
use dense_matroids::{AnalysisVerdict, ElemSet, Error, FieldSpec, Matroid};

#[derive(Parser)]
#[command(name = "dense-matroids", version, about = "Projective geometries, their projections and density questions about them")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Closure budget for flat enumeration.
    #[arg(long, global = true)]
    cap_flats: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Document for PG(n-1, q).
    Pg {
        #[arg(short)]
        q: u32,
        #[arg(short)]
        n: usize,
    },
    /// Appends k truncations to a document.
    Truncate {
        #[arg(short)]
        k: usize,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Extends on each flat in turn, then contracts the new elements.
    Project {
        /// Comma-separated elements; repeat for a k-element projection.
        #[arg(long, required = true, value_delimiter = ';')]
        flat: Vec<String>,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Number of points.
    Eps {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Rank of a set.
    Rank {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// Flats of rank k.
    Flats {
        #[arg(default_value = "-")]
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Searches for a U_{2,m}-minor.
    CheckLineMinor {
        #[arg(short)]
        m: usize,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Compares ε with the (q,k)-full threshold.
    Fullness {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        k: u32,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Searches for a cover by a rank-(r-2) set and a rank-(r-1) set.
    WeaklyRound {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Elements whose contraction leaves the matroid not overfull.
    Critical {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        k: u32,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Runs a verification suite; exit status 1 if any instance fails.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        big: bool,
        #[arg(long)]
        samples: Option<usize>,
        /// Extra construction documents, used by the axioms suite.
        #[arg(long)]
        input: Vec<String>,
    },
    /// Achieved values of d for k-element projections.
    Atlas {
        #[arg(short)]
        q: u32,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 400)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Growth-rate formulas against measured truncations.
    GrowthTable {
        #[arg(short)]
        q: u32,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
    },
}

/// A failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Replay { .. } | Error::UnknownSuite(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_input(file: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if file == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
    } else {
        text = fs::read_to_string(file).map_err(|e| usage(format!("reading {file}: {e}")))?;
    }
    Ok(text)
}

fn load_doc(file: &str) -> Result<ConstructionDocument, Failure> {
    Ok(ConstructionDocument::parse(&read_input(file)?)?)
}

fn load(file: &str) -> Result<Matroid, Failure> {
    Ok(load_doc(file)?.replay()?.matroid)
}

fn parse_set(text: &str) -> Result<ElemSet, Failure> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&e| e < dense_matroids::bitset::CAPACITY)
                .ok_or_else(|| usage(format!("bad element `{s}`")))
        })
        .collect()
}

fn verdict_text(v: &AnalysisVerdict) -> String {
    let kind = serde_json::to_value(v.kind).expect("kinds serialise");
    let mut out = kind.as_str().unwrap_or_default().to_string();
    if let Some(w) = &v.witness {
        out.push('\n');
        out.push_str(&serde_json::to_string(w).expect("evidence serialises"));
    }
    out
}

/// Output text and whether the command counts as passed.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let json = cli.format == Format::Json;
    let pretty = |v: serde_json::Value| serde_json::to_string_pretty(&v).expect("json");
    let out = match &cli.command {
        Command::Pg { q, n } => {
            let field = FieldSpec::of_order(*q)?;
            ProjectiveGeometry::new(*n, &field)?;
            ConstructionDocument::pg(&field, *n).to_canonical_json()
        }
        Command::Truncate { k, file } => {
            let doc = load_doc(file)?.truncate(*k);
            doc.replay()?;
            doc.to_canonical_json()
        }
        Command::Project { flat, file } => {
            let mut doc = load_doc(file)?;
            let before = doc.replay()?.added;
            for f in flat {
                doc = doc.extend(&parse_set(f)?);
            }
            let added = doc.replay()?.added - before;
            let doc = doc.contract(&added);
            doc.replay()?;
            doc.to_canonical_json()
        }
        Command::Eps { file } => {
            let eps = load(file)?.epsilon();
            if json {
                pretty(json!({ "epsilon": eps }))
            } else {
                eps.to_string()
            }
        }
        Command::Rank { file, set } => {
            let m = load(file)?;
            let x: ElemSet = set.iter().collect();
            let r = m.rank_of(&x)?;
            if json {
                pretty(json!({ "set": x, "rank": r }))
            } else {
                r.to_string()
            }
        }
        Command::Flats { file, k } => {
            let flats = load(file)?.flats_of_rank(*k)?;
            if json {
                pretty(json!(flats.iter().map(|f| f.members).collect::<Vec<_>>()))
            } else {
                flats.iter().map(|f| f.members.to_string()).collect::<Vec<_>>().join("\n")
            }
        }
        Command::CheckLineMinor { m, file } => {
            let v = line_minor(&load(file)?, *m)?;
            if json {
                pretty(json!(v))
            } else {
                verdict_text(&v)
            }
        }
        Command::Fullness { q, k, file } => {
            let m = load(file)?;
            let params = FullnessParams::new(*q, *k)?;
            let status = fullness(&m, params);
            let (eps, t) = (m.epsilon(), params.threshold(m.rank()));
            if json {
                pretty(json!({ "fullness": status, "epsilon": eps, "threshold": t }))
            } else {
                format!("{} (ε = {eps}, threshold {t})", serde_json::to_value(status).expect("json").as_str().unwrap_or_default())
            }
        }
        Command::WeaklyRound { file } => {
            let v = weakly_round(&load(file)?)?;
            if json {
                pretty(json!(v))
            } else {
                verdict_text(&v)
            }
        }
        Command::Critical { q, k, file } => {
            let crit = critical_elements(&load(file)?, FullnessParams::new(*q, *k)?)?;
            if json {
                pretty(json!({ "critical": crit }))
            } else {
                crit.to_string()
            }
        }
        Command::Verify {
            suite,
            seed,
            big,
            samples,
            input,
        } => {
            let inputs = input.iter().map(|f| load_doc(f)).collect::<Result<Vec<_>, _>>()?;
            let config = SuiteConfig {
                seed: *seed,
                big: *big,
                samples: *samples,
                inputs,
            };
            let report = run_suite(suite, &config).map_err(|e| match e {
                Error::UnknownSuite(name) => {
                    let names: Vec<&str> = SUITES.iter().map(|s| s.0).collect();
                    usage(format!("unknown suite `{name}`; known: {}", names.join(", ")))
                }
                other => other.into(),
            })?;
            let text = if json {
                eprintln!("wall {} ms", report.wall_ms);
                report.to_json(false)
            } else {
                report.to_table(true)
            };
            return Ok((text, report.passed()));
        }
        Command::Atlas { q, k, budget, seed } => {
            let entries = projection_atlas(*q, *k, *budget, *seed)?;
            if json {
                pretty(json!(entries))
            } else {
                let mut lines = vec!["d  ε(N\\C)  ε(N/C)  construction".to_string()];
                for e in entries {
                    lines.push(format!(
                        "{}  {}  {}  {}",
                        e.d,
                        e.eps_deleted,
                        e.eps_contracted,
                        e.construction.to_canonical_json()
                    ));
                }
                lines.join("\n")
            }
        }
        Command::GrowthTable { q, k, n } => {
            if FieldSpec::of_order(*q).is_err() {
                return Err(usage(format!("{q} is not a prime power")));
            }
            let rows = growth_table(*q, *k, *n);
            if json {
                pretty(json!(rows))
            } else {
                let mut lines = vec![format!("{:>3} {:>14} {:>14} {:>10} {:>8}", "n", "h(n)", "truncation", "measured", "gap")];
                for r in rows {
                    let measured = r.measured.map_or("-".to_string(), |m| m.to_string());
                    lines.push(format!(
                        "{:>3} {:>14} {:>14} {:>10} {:>8}",
                        r.n, r.h, r.truncation_formula, measured, r.gap
                    ));
                }
                lines.join("\n")
            }
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(cap) = cli.cap_flats {
        set_flat_cap(cap);
    }
    match run(&cli) {
        Ok((mut text, passed)) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &text),
                None => io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
