use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symplectic_hodge::model::{corpus, corpus_model, ErrorKind, ModelFile};
use symplectic_hodge::report::{run_compute, ComputeError, Report};
use symplectic_hodge::verify::{run_verify, VerifyConfig};

const EXIT_INPUT: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(name = "symhodge", version, about = "Exact symplectic cohomology of Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full report for a model file or a built-in model.
    Compute {
        /// Path to a model file, or the name of a built-in model.
        model: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Only show per-degree data of this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every identity and theorem on the corpus and seeded random structures.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dimension of random structures; repeatable. Defaults to 4, 6 and 8.
        #[arg(long = "dim")]
        dims: Vec<usize>,
        /// Random structures per dimension.
        #[arg(long)]
        count: Option<usize>,
    },
    /// List the built-in models, or print one as a model file.
    Corpus {
        #[arg(long)]
        list: bool,
        name: Option<String>,
    },
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => EXIT_INPUT,
        ErrorKind::Validation => EXIT_VALIDATION,
        ErrorKind::Inconsistent => EXIT_INCONSISTENT,
    }
}

fn load(model: &str) -> Result<ModelFile, ExitCode> {
    let path = Path::new(model);
    let loaded = if path.exists() { ModelFile::load(path) } else { corpus_model(model) };
    loaded.map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(exit_code(e.kind()))
    })
}

fn render(report: &Report, json: bool, degree: Option<usize>) -> String {
    let report = match degree {
        Some(k) => report.restricted_to_degree(k),
        None => report.clone(),
    };
    if json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), ExitCode> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", p.display());
            ExitCode::from(EXIT_INPUT)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn compute(model: &str, json: bool, degree: Option<usize>, out: Option<&Path>) -> Result<(), ExitCode> {
    let file = load(model)?;
    if let Some(k) = degree {
        if k > file.dim {
            eprintln!("error: degree {k} exceeds the dimension {}", file.dim);
            return Err(ExitCode::from(EXIT_INPUT));
        }
    }
    match run_compute(&file) {
        Ok(report) => emit(&render(&report, json, degree), out),
        Err(ComputeError::ChecksFailed { failures, report }) => {
            emit(&render(&report, json, degree), out)?;
            for f in failures {
                eprintln!("internal inconsistency: {f}");
            }
            Err(ExitCode::from(EXIT_INCONSISTENT))
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(exit_code(e.kind())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { model, json, degree, out } => compute(&model, json, degree, out.as_deref()),
        Command::Verify { seed, dims, count } => {
            let dims = if dims.is_empty() { vec![4, 6, 8] } else { dims };
            if let Some(d) = dims.iter().find(|&&d| d % 2 != 0 || !(2..=10).contains(&d)) {
                eprintln!("error: --dim must be even and between 2 and 10, found {d}");
                return ExitCode::from(EXIT_INPUT);
            }
            let mut config = VerifyConfig::new(seed, dims);
            config.count = count;
            let summary = run_verify(&config);
            print!("{}", summary.render());
            if summary.all_passed() {
                Ok(())
            } else {
                Err(ExitCode::from(EXIT_INCONSISTENT))
            }
        }
        Command::Corpus { list, name } => match (list, name) {
            (_, Some(name)) => match corpus_model(&name) {
                Ok(m) => {
                    print!("{}", m.to_text());
                    Ok(())
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Err(ExitCode::from(EXIT_INPUT))
                }
            },
            _ => {
                for m in corpus() {
                    println!("{:<10} dim {}  {}", m.name, m.dim, m.structure);
                }
                Ok(())
            }
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
