//! Command-line front end: algebra facts, blade-group generation and
//! classification, gamma bases, CPT group derivation, and the claims
//! harness.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use clifford_cpt::blade::{AlgebraSignature, CenterType};
use clifford_cpt::ext::derive_ext_group;
use clifford_cpt::gamma::{brauer_weyl_basis, fixture_basis, FixtureName, GammaBasis};
use clifford_cpt::group::{classify_salingaros, BladeGroup};
use clifford_cpt::verify::run_all_checks;

#[derive(Parser)]
#[command(
    name = "clifford-cpt",
    version,
    about = "Exact engine for Clifford algebra finite groups, gamma bases, and CPT symmetry groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Structural facts about Cl(p,q): center, volume-element square, ring class
    Algebra {
        p: u32,
        q: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Generate the blade group G(p,q) and its invariants
    Group {
        p: u32,
        q: u32,
        /// Also print the Salingaros classification
        #[arg(long)]
        classify: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Gamma-matrix basis: tensor-product construction for (p,q), or an
    /// embedded fixture
    Rep {
        p: Option<u32>,
        q: Option<u32>,
        /// canonical | weyl | majorana | majorana31 | sitter
        #[arg(long, conflicts_with_all = ["p", "q"])]
        fixture: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Extended automorphism (CPT) group of a fixture basis
    Cpt {
        /// canonical | weyl | majorana | majorana31 | sitter
        #[arg(long)]
        basis: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the claims registry and report match / typo-suspected / mismatch
    Verify {
        /// Only run claims whose id starts with this prefix
        #[arg(long)]
        filter: Option<String>,
        /// Also write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn signature(p: u32, q: u32) -> Result<AlgebraSignature, String> {
    if p + q > 10 {
        return Err(format!(
            "p + q = {} exceeds the supported range 1..=10",
            p + q
        ));
    }
    AlgebraSignature::new(p, q).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Algebra { p, q, format } => {
            let sig = signature(p, q)?;
            let center = sig.center_type();
            let volume_square = sig.volume_square();
            if format == Format::Json {
                let value = serde_json::json!({
                    "p": sig.p(),
                    "q": sig.q(),
                    "n": sig.n(),
                    "center": match center {
                        CenterType::Trivial => "trivial",
                        CenterType::TwoElement => "two-element",
                    },
                    "volume_square": volume_square,
                    "ring": sig.ring_class().to_string(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                );
            } else {
                println!("{sig}: n = {}", sig.n());
                let center_text = match center {
                    CenterType::Trivial => "{1} (trivial)".to_string(),
                    CenterType::TwoElement => "{1, ω}".to_string(),
                };
                println!("  center:    {center_text}");
                println!("  ω²:        {volume_square:+}");
                println!("  ring:      {}", sig.ring_class());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Group {
            p,
            q,
            classify,
            format,
        } => {
            let sig = signature(p, q)?;
            let group = BladeGroup::generate(sig).map_err(|e| e.to_string())?;
            let structure = group.table.order_structure().map_err(|e| e.to_string())?;
            let (_, center) = group.table.center();
            let label = if classify {
                Some(
                    classify_salingaros(&group.table)
                        .map_err(|e| e.to_string())?
                        .to_string(),
                )
            } else {
                None
            };
            if format == Format::Json {
                let mut value = serde_json::json!({
                    "signature": { "p": sig.p(), "q": sig.q() },
                    "group": group.table.to_json(),
                    "order_structure": [structure.involutions, structure.order4],
                    "center": center.to_string(),
                });
                if let Some(label) = label {
                    value["salingaros"] = serde_json::Value::String(label);
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                );
            } else {
                println!("G({p},{q}): order {}", group.order());
                println!("  order structure: {structure}");
                println!("  center:          {center}");
                if let Some(label) = label {
                    println!("  salingaros:      {label}");
                }
                println!("{}", render::cayley_table(&group.table));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rep {
            p,
            q,
            fixture,
            format,
        } => {
            let basis = resolve_basis(p, q, fixture)?;
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&basis.to_json()).expect("serializable")
                );
            } else {
                println!(
                    "{} basis of {} (dim {})",
                    basis.name,
                    basis.sig,
                    basis.dim()
                );
                for i in 1..=basis.sig.n() {
                    println!("{} =", basis.labels[(i - 1) as usize]);
                    print!("{}", basis.gamma(i));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cpt { basis, format } => {
            let name = FixtureName::parse(&basis)
                .ok_or_else(|| format!("unknown basis '{basis}' (expected canonical, weyl, majorana, majorana31, or sitter)"))?;
            let basis = fixture_basis(name).map_err(|e| e.to_string())?;
            let ext = derive_ext_group(&basis).map_err(|e| e.to_string())?;
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&ext.to_json()).expect("serializable")
                );
            } else {
                print!("{}", render::ext_group(&basis, &ext));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            filter,
            json,
            format,
        } => {
            let report = run_all_checks(filter.as_deref());
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&report).expect("serializable");
                std::fs::write(&path, body)
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            if format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

fn resolve_basis(
    p: Option<u32>,
    q: Option<u32>,
    fixture: Option<String>,
) -> Result<GammaBasis, String> {
    match (p, q, fixture) {
        (Some(p), Some(q), None) => {
            let sig = signature(p, q)?;
            brauer_weyl_basis(sig).map_err(|e| e.to_string())
        }
        (None, None, Some(name)) => {
            let name = FixtureName::parse(&name).ok_or_else(|| {
                format!("unknown fixture '{name}' (expected canonical, weyl, majorana, majorana31, or sitter)")
            })?;
            fixture_basis(name).map_err(|e| e.to_string())
        }
        _ => Err("provide either p and q, or --fixture NAME".to_string()),
    }
}
