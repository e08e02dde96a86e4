//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 conjecture violation, 4 internal error.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use molien::decompose::{decompose, find_threshold, ThresholdOutcome};
use molien::error::MolienError;
use molien::finite::{dimension_sum_check, molien_finite, parse_group_file, FiniteGroupRep};
use molien::molien::{molien_so3, presentation_exponent, MolienQuery};
use molien::output::{
    decomposition_string, fraction_string, presented_fraction_string, symbol, table_row,
    FractionDoc, OutputDocument, ThresholdDoc,
};
use molien::verify::run_suite;

const EXIT_VERIFICATION: u8 = 2;
const EXIT_CONJECTURE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "molien",
    about = "Exact Molien generating functions for SO(3) covariants of N vectors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Canonical,
    Presented,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct RenderOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Use plain "t" instead of the Greek lambda in text output
    #[arg(long)]
    ascii: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Molien function g(N, L)
    Compute {
        n_vectors: u32,
        target_l: u32,
        /// Presentation over (1-t^2)^(3N-3) as in the published tables, or
        /// the fully reduced fraction
        #[arg(long, value_enum, default_value = "presented")]
        form: Form,
        #[command(flatten)]
        render: RenderOpts,
    },
    /// Decompose g(N, L) into fractions with nonnegative numerators
    Decompose {
        n_vectors: u32,
        target_l: u32,
        #[command(flatten)]
        render: RenderOpts,
    },
    /// Print decomposition rows for L = 0..=l_max
    Table {
        n_vectors: u32,
        #[arg(long, default_value_t = 10)]
        l_max: u32,
        #[command(flatten)]
        render: RenderOpts,
    },
    /// Scan for the L beyond which the decomposition shape is stable
    Threshold {
        n_vectors: u32,
        #[arg(long, default_value_t = 60)]
        ceiling: u32,
        #[arg(long, default_value_t = 30)]
        window: u32,
        #[command(flatten)]
        render: RenderOpts,
    },
    /// Run a verification suite
    Verify {
        /// sumrule, coupling, quadrature, tables or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Series truncation order for the symbolic suites
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        render: RenderOpts,
    },
    /// Molien functions for a finite group action
    Finite {
        /// Built-in group: ci or trivial
        #[arg(long, default_value = "ci", conflicts_with = "file")]
        group: String,
        /// Load a group definition file instead of a built-in
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        /// Irrep label; omit to print all irreps
        #[arg(long)]
        irrep: Option<String>,
        /// Number of copies of the base representation space
        #[arg(long, default_value_t = 1)]
        copies: u32,
        #[command(flatten)]
        render: RenderOpts,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(MolienError::ConjectureViolation(msg)) => {
            eprintln!("conjecture violation: {msg}");
            ExitCode::from(EXIT_CONJECTURE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn default_quad_order() -> usize {
    std::env::var("MOLIEN_QUAD_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(256)
}

fn run(command: Command) -> Result<u8, MolienError> {
    match command {
        Command::Compute {
            n_vectors,
            target_l,
            form,
            render,
        } => {
            if n_vectors < 1 {
                eprintln!("error: N must be at least 1");
                return Ok(1);
            }
            let g = molien_so3(MolienQuery::new(n_vectors, target_l));
            let mut doc = OutputDocument::new("compute");
            doc.n_vectors = Some(n_vectors);
            doc.target_l = Some(target_l);
            let sym = symbol(render.ascii);
            let text;
            match form {
                Form::Canonical => {
                    text = fraction_string(&g, sym);
                    doc.fractions = Some(vec![FractionDoc::from_fraction(&g)]);
                    doc.options = Some(vec![("form".into(), "canonical".into())]);
                }
                Form::Presented => {
                    let e = presentation_exponent(n_vectors);
                    let num = g.present_over_quadratic(e)?;
                    text = presented_fraction_string(e, &num, sym);
                    doc.fractions = Some(vec![FractionDoc::from_presented(e, &num)]);
                    doc.options = Some(vec![("form".into(), "presented".into())]);
                }
            }
            emit(&doc, &text, render.format);
            Ok(0)
        }
        Command::Decompose {
            n_vectors,
            target_l,
            render,
        } => {
            if n_vectors < 1 {
                eprintln!("error: N must be at least 1");
                return Ok(1);
            }
            let d = decompose(n_vectors, target_l)?;
            d.validate()?;
            let mut doc = OutputDocument::new("decompose");
            doc.n_vectors = Some(n_vectors);
            doc.target_l = Some(target_l);
            doc.fractions = Some(
                d.fractions
                    .iter()
                    .map(|(e, num)| FractionDoc::from_presented(*e, num))
                    .collect(),
            );
            emit(
                &doc,
                &decomposition_string(&d, symbol(render.ascii)),
                render.format,
            );
            Ok(0)
        }
        Command::Table {
            n_vectors,
            l_max,
            render,
        } => {
            if n_vectors < 1 {
                eprintln!("error: N must be at least 1");
                return Ok(1);
            }
            let mut rows = Vec::new();
            let mut text_rows = Vec::new();
            for l in 0..=l_max {
                let d = decompose(n_vectors, l)?;
                rows.push(table_row(&d));
                text_rows.push(format!(
                    "{} {} {}",
                    n_vectors,
                    l,
                    decomposition_string(&d, symbol(render.ascii))
                ));
            }
            let mut doc = OutputDocument::new("table");
            doc.n_vectors = Some(n_vectors);
            doc.options = Some(vec![("l_max".into(), l_max.to_string())]);
            doc.rows = Some(rows);
            emit(&doc, &text_rows.join("\n"), render.format);
            Ok(0)
        }
        Command::Threshold {
            n_vectors,
            ceiling,
            window,
            render,
        } => {
            if n_vectors < 1 || ceiling <= window || window < 1 {
                eprintln!("error: need N >= 1 and ceiling > window >= 1");
                return Ok(1);
            }
            let outcome = find_threshold(n_vectors, ceiling, window)?;
            let mut doc = OutputDocument::new("threshold");
            doc.n_vectors = Some(n_vectors);
            let text;
            match &outcome {
                ThresholdOutcome::Stable(r) => {
                    text = format!(
                        "N={} stable above L={} with {} fractions (scanned to L={})",
                        r.n_vectors, r.first_stable_l, r.stable_k, r.scan_ceiling
                    );
                    doc.threshold = Some(ThresholdDoc {
                        stable: true,
                        first_stable_l: Some(r.first_stable_l),
                        stable_k: Some(r.stable_k),
                        scan_ceiling: ceiling,
                        stability_window: window,
                    });
                }
                ThresholdOutcome::Inconclusive { .. } => {
                    text = format!(
                        "N={n_vectors} inconclusive: no stable run of {window} below L={ceiling}"
                    );
                    doc.threshold = Some(ThresholdDoc {
                        stable: false,
                        first_stable_l: None,
                        stable_k: None,
                        scan_ceiling: ceiling,
                        stability_window: window,
                    });
                }
            }
            emit(&doc, &text, render.format);
            Ok(0)
        }
        Command::Verify {
            suite,
            order,
            seed,
            render,
        } => {
            let Some(checks) = run_suite(&suite, order, seed, default_quad_order()) else {
                eprintln!("error: unknown suite {suite:?}");
                return Ok(1);
            };
            let all_passed = checks.iter().all(|c| c.passed);
            let mut doc = OutputDocument::new("verify");
            doc.options = Some(vec![
                ("suite".into(), suite.clone()),
                ("order".into(), order.to_string()),
                ("seed".into(), seed.to_string()),
            ]);
            let text = checks
                .iter()
                .map(|c| {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    match &c.detail {
                        Some(d) => format!("{status} {} ({d})", c.name),
                        None => format!("{status} {}", c.name),
                    }
                })
                .collect::<Vec<_>>()
                .join("\n");
            doc.checks = Some(checks);
            emit(&doc, &text, render.format);
            Ok(if all_passed { 0 } else { EXIT_VERIFICATION })
        }
        Command::Finite {
            group,
            file,
            irrep,
            copies,
            render,
        } => {
            let base = match &file {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| MolienError::GroupFile(format!("{}: {e}", path.display())))?;
                    parse_group_file(&text)?
                }
                None => match group.as_str() {
                    "ci" => FiniteGroupRep::c_i(),
                    "trivial" => FiniteGroupRep::trivial(),
                    other => {
                        eprintln!("error: unknown built-in group {other:?}");
                        return Ok(1);
                    }
                },
            };
            let rep = if copies > 1 {
                base.expand(copies)
            } else {
                base
            };
            let labels: Vec<String> = match irrep {
                Some(l) => vec![l],
                None => rep.irrep_labels().iter().map(|s| s.to_string()).collect(),
            };
            let sym = symbol(render.ascii);
            let mut doc = OutputDocument::new("finite");
            doc.options = Some(vec![
                ("group".into(), rep.name.clone()),
                ("copies".into(), copies.to_string()),
            ]);
            let mut fractions = Vec::new();
            let mut lines = Vec::new();
            for label in &labels {
                let g = molien_finite(&rep, label)?;
                lines.push(format!("{label}: {}", fraction_string(&g, sym)));
                fractions.push(FractionDoc::from_fraction(&g));
            }
            if let Some(deg) = dimension_sum_check(&rep, 12)? {
                eprintln!("warning: dimension sum rule fails at degree {deg}");
            }
            doc.fractions = Some(fractions);
            doc.rows = Some(lines.clone());
            emit(&doc, &lines.join("\n"), render.format);
            Ok(0)
        }
    }
}

fn emit(doc: &OutputDocument, text: &str, format: Format) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", doc.to_json()),
    }
}
