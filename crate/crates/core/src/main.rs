use affine_schur::eval::{eval_hecke, eval_schur, eval_tensor};
use affine_schur::schur::SchurAlgebra;
use affine_schur::suite::{run_suite, Suite, SuiteConfig};
use affine_schur::{HeckeAlgebra, Params, Specialization, TensorModule, Variant};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "affine-schur", version, about = "Verification harness for the affine Hecke algebra of type C and its Schur duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hecke,
    Tensor,
    Schur,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(long, value_parser = |s: &str| s.parse::<Suite>().map_err(|e| e.to_string()))]
        suite: Suite,
        /// Defaults to 3, or 2 for variant ii.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value = "jj", value_parser = |s: &str| s.parse::<Variant>().map_err(|e| e.to_string()))]
        variant: Variant,
        #[arg(long, default_value = "generic", value_parser = |s: &str| s.parse::<Specialization>().map_err(|e| e.to_string()))]
        spec: Specialization,
        /// Coordinates range over [-window*n, window*n].
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        /// Directory for generated tables such as certificates.
        #[arg(long, env = "AFFINE_SCHUR_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value = "jj", value_parser = |s: &str| s.parse::<Variant>().map_err(|e| e.to_string()))]
        variant: Variant,
        #[arg(long, default_value = "generic", value_parser = |s: &str| s.parse::<Specialization>().map_err(|e| e.to_string()))]
        spec: Specialization,
    },
}

fn eval(kind: Kind, expr: &str, r: usize, d: usize, variant: Variant, spec: Specialization) -> affine_schur::Result<String> {
    let p = Params::new(spec);
    Ok(match kind {
        Kind::Hecke => eval_hecke(&HeckeAlgebra::new(d, p)?, expr)?.to_string(),
        Kind::Tensor => eval_tensor(&TensorModule::new(r, d, variant, p)?, expr)?.to_string(),
        Kind::Schur => {
            let s = SchurAlgebra::new(r, d, variant, p)?;
            s.describe(&eval_schur(&s, expr)?)
        }
    })
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify {
            suite,
            r,
            d,
            variant,
            spec,
            window,
            max_len,
            format,
            cache_dir,
        } => {
            let r = r.unwrap_or(if variant == Variant::II { 2 } else { 3 });
            let mut cfg = SuiteConfig::new(suite).with_rd(r, d).with_variant(variant).with_spec(spec).with_window(window);
            cfg.max_len = max_len;
            cfg.cache_dir = cache_dir;
            match run_suite(&cfg) {
                Ok(report) => {
                    match format {
                        Format::Json => println!("{}", report.to_json()),
                        Format::Md => print!("{}", report.to_markdown()),
                    }
                    if report.all_passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Eval { kind, expr, r, d, variant, spec } => match eval(kind, &expr, r, d, variant, spec) {
            Ok(text) => {
                println!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
