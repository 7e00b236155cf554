//! `kostka` — command-line front end for the tableau combinatorics engine.
//!
//! Conventions shared by every verb: rectangle sequences are comma lists of
//! `ROWSxCOLS` specs (`4x3,2x3`), shapes are comma lists of parts
//! (`5,4,3,3,2,1`), and tableaux are read in the text format (one row per
//! line, entries separated by spaces, `.` for cells of the inner shape) from
//! a file argument or standard input. Output ordering is deterministic:
//! identical invocations produce byte-identical output.
//!
//! Exit codes: 0 on success (including queries that answer "no"), 1 when a
//! verification finds a counterexample or a polynomial comparison fails, 2
//! on malformed input or usage errors.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use kostka_core::catabolism::{ctype, is_catabolizable, CatMode};
use kostka_core::cyclage::{build_poset, PosetKind};
use kostka_core::embed::{image_contains_by_width, theta_tab};
use kostka_core::lrwords::enumerate_lrt;
use kostka_core::poly::{kostka_foulkes, kostka_poly, verify_duality, verify_monotonicity, PolyReport};
use kostka_core::transpose::tr_tab;
use kostka_core::verify::run_suite;
use kostka_core::{Partition, RectSeq, Tableau};

#[derive(Parser)]
#[command(
    name = "kostka",
    version,
    about = "Tableaux compatible with rectangle sequences: enumeration, charge polynomials, cyclage posets, embeddings, catabolism, and exhaustive verification suites"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Work with compatible (generalized Littlewood-Richardson) tableaux
    Lrt {
        #[command(subcommand)]
        cmd: LrtCmd,
    },
    /// Charge generating polynomials and their identities
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Cyclage and cocyclage posets
    Poset {
        #[command(subcommand)]
        cmd: PosetCmd,
    },
    /// Embeddings between compatible-tableau sets of comparable sequences
    Embed {
        #[command(subcommand)]
        cmd: EmbedCmd,
    },
    /// Print the catabolism multi-type of a tableau
    Ctype {
        /// Tableau file (text format); standard input when omitted or `-`
        tableau: Option<PathBuf>,
    },
    /// Run the catabolism recursion of a sequence on a tableau
    Catabolize {
        /// Rectangle sequence, e.g. `4x3,2x3`
        #[arg(long)]
        rects: String,
        /// Remove keys by rows or by columns
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Print the remainder after each step
        #[arg(long)]
        trace: bool,
        /// Tableau file (text format); standard input when omitted or `-`
        tableau: Option<PathBuf>,
    },
    /// Transpose a compatible tableau along its rectangle sequence
    Transpose {
        /// Rectangle sequence, e.g. `2x3,2x3,3x2`
        #[arg(long)]
        rects: String,
        /// Tableau file (text format); standard input when omitted or `-`
        tableau: Option<PathBuf>,
    },
    /// Run an exhaustive verification suite over a bounded catalog
    Verify {
        /// One of: charge-comp, embedding-thm, embed-image, poset-transpose,
        /// poly-transpose, atom-thm, std-props, atom-conjecture
        suite: String,
        /// Catalog bound: total cells per sequence (content size for
        /// atom-conjecture); capped at 12
        #[arg(long, default_value_t = 8)]
        max_cells: usize,
    },
}

#[derive(Subcommand)]
enum LrtCmd {
    /// Print every compatible tableau of a shape, in enumeration order
    Enumerate {
        /// Shape as a comma list of parts, e.g. `5,4,3,3,2,1`
        #[arg(long)]
        shape: String,
        /// Rectangle sequence, e.g. `4x3,2x3`
        #[arg(long)]
        rects: String,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// The charge generating polynomial over compatible tableaux of a shape
    Kostka {
        /// Shape as a comma list of parts
        #[arg(long)]
        shape: String,
        /// Rectangle sequence
        #[arg(long)]
        rects: String,
    },
    /// The normalized Kostka-Foulkes polynomial (cocharge over a content)
    Kf {
        /// Shape as a comma list of parts
        #[arg(long)]
        shape: String,
        /// Content as a comma list of parts
        #[arg(long)]
        mu: String,
    },
    /// Check the transpose identity for every shape of a sequence
    Dual {
        /// Rectangle sequence
        #[arg(long)]
        rects: String,
    },
    /// Check coefficientwise monotonicity between two comparable sequences
    Mono {
        /// The dominating sequence (smaller polynomials)
        #[arg(long)]
        greater: String,
        /// The dominated sequence (larger polynomials)
        #[arg(long)]
        smaller: String,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Write a poset over the compatible tableaux of a sequence
    Export {
        /// Rectangle sequence
        #[arg(long)]
        rects: String,
        /// Which relation to build
        #[arg(long, value_enum)]
        order: OrderArg,
        /// Output format
        #[arg(long, value_enum)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum EmbedCmd {
    /// Apply the embedding from one sequence into a comparable smaller one
    Apply {
        /// Source rectangle sequence (must dominate the target)
        #[arg(long)]
        from: String,
        /// Target rectangle sequence
        #[arg(long)]
        to: String,
        /// Tableau file (text format); standard input when omitted or `-`
        tableau: Option<PathBuf>,
    },
    /// Test membership of a tableau in the refinement image of a sequence
    ImageTest {
        /// Rectangle sequence
        #[arg(long)]
        rects: String,
        /// Tableau file (text format); standard input when omitted or `-`
        tableau: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum OrderArg {
    /// Cocyclage, graded by charge
    Cocyclage,
    /// The strong cocyclage relation
    Strong,
    /// Cyclage, graded by cocharge
    Cyclage,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum ModeArg {
    Row,
    Col,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_rects(s: &str) -> Result<RectSeq> {
    RectSeq::parse(s).map_err(|e| anyhow!("malformed rect spec {s:?}: {e}"))
}

fn parse_shape(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("malformed shape {s:?}: bad part {t:?}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| anyhow!("malformed shape {s:?}: {e}"))
}

fn read_tableau(path: &Option<PathBuf>) -> Result<Tableau> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .with_context(|| format!("reading tableau file {}", p.display()))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading a tableau from standard input")?;
            s
        }
    };
    Tableau::parse_text(&text).map_err(|e| anyhow!("malformed tableau: {e}"))
}

/// Print a per-shape polynomial comparison and map its outcome to an exit
/// code: 0 when every shape agrees, 1 otherwise.
fn print_report(report: &PolyReport) -> ExitCode {
    println!("{}", report.description);
    for chk in &report.checks {
        let verdict = if chk.ok { "ok" } else { "MISMATCH" };
        println!("{}: {} | {}  {verdict}", chk.shape, chk.lhs, chk.rhs);
    }
    if report.passed() {
        println!("PASS");
        ExitCode::SUCCESS
    } else {
        println!("FAIL: {} shapes disagree", report.failures().count());
        ExitCode::from(1)
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Lrt { cmd: LrtCmd::Enumerate { shape, rects } } => {
            let shape = parse_shape(&shape)?;
            let r = parse_rects(&rects)?;
            let tabs = enumerate_lrt(&shape, &r);
            for (i, t) in tabs.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{}", t.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Poly { cmd } => match cmd {
            PolyCmd::Kostka { shape, rects } => {
                let poly = kostka_poly(&parse_shape(&shape)?, &parse_rects(&rects)?)?;
                println!("{poly}");
                Ok(ExitCode::SUCCESS)
            }
            PolyCmd::Kf { shape, mu } => {
                let poly = kostka_foulkes(&parse_shape(&shape)?, &parse_shape(&mu)?)?;
                println!("{poly}");
                Ok(ExitCode::SUCCESS)
            }
            PolyCmd::Dual { rects } => {
                let report = verify_duality(&parse_rects(&rects)?)?;
                Ok(print_report(&report))
            }
            PolyCmd::Mono { greater, smaller } => {
                let report =
                    verify_monotonicity(&parse_rects(&greater)?, &parse_rects(&smaller)?)?;
                Ok(print_report(&report))
            }
        },
        Cmd::Poset { cmd: PosetCmd::Export { rects, order, format } } => {
            let kind = match order {
                OrderArg::Cocyclage => PosetKind::Cocyclage,
                OrderArg::Strong => PosetKind::StrongCocyclage,
                OrderArg::Cyclage => PosetKind::Cyclage,
            };
            let poset = build_poset(&parse_rects(&rects)?, kind)?;
            match format {
                FormatArg::Dot => print!("{}", poset.to_dot()),
                FormatArg::Json => println!("{}", serde_json::to_string_pretty(&poset.to_json())?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Embed { cmd } => match cmd {
            EmbedCmd::Apply { from, to, tableau } => {
                let t = read_tableau(&tableau)?;
                let u = theta_tab(&t, &parse_rects(&from)?, &parse_rects(&to)?)?;
                print!("{}", u.to_text());
                Ok(ExitCode::SUCCESS)
            }
            EmbedCmd::ImageTest { rects, tableau } => {
                let t = read_tableau(&tableau)?;
                let member = image_contains_by_width(&t, &parse_rects(&rects)?)?;
                println!("{member}");
                Ok(ExitCode::SUCCESS)
            }
        },
        Cmd::Ctype { tableau } => {
            let t = read_tableau(&tableau)?;
            println!("{}", ctype(&t)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Catabolize { rects, mode, trace, tableau } => {
            let t = read_tableau(&tableau)?;
            let r = parse_rects(&rects)?;
            let m = match mode {
                ModeArg::Row => CatMode::Row,
                ModeArg::Col => CatMode::Col,
            };
            let outcome = is_catabolizable(&t, &r, m)?;
            if trace {
                for (i, step) in outcome.steps.iter().enumerate() {
                    println!(
                        "step {}: removed the {}x{} key at letter {}",
                        i + 1,
                        step.rect.rows,
                        step.rect.cols,
                        step.lo
                    );
                    let text = step.after.to_text();
                    if text.is_empty() {
                        println!("(empty)");
                    } else {
                        print!("{text}");
                    }
                    println!();
                }
            }
            if outcome.ok {
                println!("catabolizable");
            } else {
                let reason = outcome.reason.unwrap_or_else(|| "unknown".into());
                println!("not catabolizable: {reason}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Transpose { rects, tableau } => {
            let t = read_tableau(&tableau)?;
            let u = tr_tab(&t, &parse_rects(&rects)?)?;
            print!("{}", u.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, max_cells } => {
            let capped = max_cells.min(12);
            if capped < max_cells {
                eprintln!(
                    "warning: --max-cells capped at 12; orbit sizes grow factorially with the number of rectangles"
                );
            }
            let report = run_suite(&suite, capped)?;
            println!("{}", report.summary_line());
            for note in &report.notes {
                println!("note: {note}");
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{}", serde_json::to_string_pretty(&report.to_json())?);
                Ok(ExitCode::from(1))
            }
        }
    }
}
