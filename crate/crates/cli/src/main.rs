//! `socle`: structure constants of the tensor categories `T_{aleph_t}` from
//! the command line.

mod cache;
mod parse;
mod render;
mod selfcheck;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use socle_core::category::{self, CategoryContext};
use socle_core::{schur, Error};

use render::Format;

const CACHE_ENV_VAR: &str = "SOCLE_CACHE_PATH";

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "socle",
    about = "Exact socle filtrations, Littlewood-Richardson coefficients, and \
             Hom/Ext data for the tensor categories T_{aleph_t}"
)]
struct Cli {
    /// Ambient t (the category is T_{aleph_t})
    #[arg(long, global = true, default_value_t = 0)]
    t: usize,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// LR-coefficient cache file (also via SOCLE_CACHE_PATH)
    #[arg(long, global = true)]
    cache_path: Option<PathBuf>,
    /// Ignore any cache file
    #[arg(long, global = true, default_value_t = false)]
    no_cache: bool,
    /// Maximum total box count for guarded enumerations
    #[arg(long, global = true)]
    max_boxes: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Socle filtration of an indecomposable injective ~V_label
    Socle {
        /// Label, slots joined by ';' in descending order: "∅;(1,1);(1,1);(1)"
        label: String,
    },
    /// Littlewood-Richardson coefficient N^eta_{mu,nu}
    Lr { eta: String, mu: String, nu: String },
    /// Iterated coproduct of a Schur function, optionally truncated
    Coproduct {
        lambda: String,
        /// Number of tensor slots
        k: usize,
        /// Comma-separated box counts per slot (truncation)
        #[arg(long)]
        boxes: Option<String>,
    },
    /// Defect d(i,j) of two poset indices
    Defect { i: String, j: String },
    /// Partial-order test i <= j on the index poset
    Order { i: String, j: String },
    /// Block membership: do two simple labels share a block?
    Block { a: String, b: String },
    /// dim Hom(X_i, X_j)
    Homdim { i: String, j: String },
    /// dim Ext^q between two simple labels (t = 0 only)
    Extdim {
        t_prime: String,
        t_label: String,
        q: u64,
    },
    /// Decompose a generator X_i into indecomposable injectives
    Decompose { i: String },
    /// Run the oracle-equivalence suites
    Selfcheck {
        /// Maximum t for the socle suite
        #[arg(long, default_value_t = 2)]
        max_t: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundsExceeded(_) => 3,
            Error::UnsupportedProduct(_) | Error::UnsupportedContext(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn context(cli: &Cli) -> Result<CategoryContext, Failure> {
    match cli.max_boxes {
        Some(b) => CategoryContext::with_max_boxes(cli.t, b).map_err(Into::into),
        None => CategoryContext::new(cli.t).map_err(Into::into),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let cache_path = if cli.no_cache {
        None
    } else {
        cli.cache_path
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from))
    };
    if let Some(path) = &cache_path {
        if path.exists() {
            cache::load(path).map_err(Failure::input)?;
        }
    }

    let format: Format = cli.format.into();
    let code = dispatch(cli, format)?;

    if let Some(path) = &cache_path {
        cache::save(path).map_err(Failure::input)?;
    }
    Ok(code)
}

fn dispatch(cli: &Cli, format: Format) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Socle { label } => {
            let ctx = context(cli)?;
            let inj = parse::parse_injective_label(label, cli.t).map_err(Failure::input)?;
            let layers = category::injective_socle_layers(&ctx, &inj)?;
            match format {
                Format::Text => print!("{}", render::socle_text(&inj, &layers)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&render::socle_json(cli.t, &inj, &layers))
                        .expect("serializable")
                ),
                Format::Latex => print!("{}", render::socle_latex(&layers)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lr { eta, mu, nu } => {
            let eta = parse::parse_partition(eta).map_err(Failure::input)?;
            let mu = parse::parse_partition(mu).map_err(Failure::input)?;
            let nu = parse::parse_partition(nu).map_err(Failure::input)?;
            let value = schur::lr_coefficient(&eta, &mu, &nu);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "eta": eta.parts(), "mu": mu.parts(), "nu": nu.parts(),
                        "value": value,
                    })
                ),
                _ => println!("{value}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Coproduct { lambda, k, boxes } => {
            let lambda = parse::parse_partition(lambda).map_err(Failure::input)?;
            if *k == 0 {
                return Err(Failure::input("slot count k must be at least 1"));
            }
            let terms = match boxes {
                Some(counts_arg) => {
                    let counts: Vec<u64> = counts_arg
                        .split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<u64>()
                                .map_err(|_| Failure::input(format!("bad box count {x:?}")))
                        })
                        .collect::<Result<_, _>>()?;
                    if counts.len() != *k {
                        return Err(Failure::input(format!(
                            "{} box counts given for {k} slots",
                            counts.len()
                        )));
                    }
                    schur::truncated_coproduct(&lambda, &counts)?
                }
                None => schur::iterated_coproduct(&lambda, *k),
            };
            match format {
                Format::Json => {
                    let arr: Vec<_> = terms
                        .iter()
                        .map(|t| {
                            json!({
                                "slots": t.slots.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                                "coeff": t.coeff,
                            })
                        })
                        .collect();
                    println!("{}", json!({ "lambda": lambda.parts(), "terms": arr }));
                }
                _ => {
                    for t in &terms {
                        let slots: Vec<String> =
                            t.slots.iter().map(|p| p.to_string()).collect();
                        println!("{}  x{}", slots.join(" ⊗ "), t.coeff);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Defect { i, j } => {
            let i = parse::parse_index(i, cli.t).map_err(Failure::input)?;
            let j = parse::parse_index(j, cli.t).map_err(Failure::input)?;
            let d = category::defect(&i, &j);
            match format {
                Format::Json => println!("{}", json!({ "defect": d })),
                _ => match d {
                    Some(d) => println!("{d}"),
                    None => println!("incomparable"),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Order { i, j } => {
            let i = parse::parse_index(i, cli.t).map_err(Failure::input)?;
            let j = parse::parse_index(j, cli.t).map_err(Failure::input)?;
            let v = category::leq(&i, &j);
            match format {
                Format::Json => println!("{}", json!({ "leq": v })),
                _ => println!("{v}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Block { a, b } => {
            let a = parse::parse_label(a, cli.t).map_err(Failure::input)?;
            let b = parse::parse_label(b, cli.t).map_err(Failure::input)?;
            let v = category::same_block(&a, &b);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({ "same_block": v, "content_a": a.content(), "content_b": b.content() })
                ),
                _ => println!("{v}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homdim { i, j } => {
            let ctx = context(cli)?;
            let i = parse::parse_index(i, cli.t).map_err(Failure::input)?;
            let j = parse::parse_index(j, cli.t).map_err(Failure::input)?;
            let v = category::hom_dim(&ctx, &i, &j)?;
            match format {
                Format::Json => println!("{}", json!({ "hom_dim": v })),
                _ => println!("{v}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extdim { t_prime, t_label, q } => {
            if cli.t != 0 {
                return Err(Failure::from(Error::UnsupportedContext(
                    "extdim requires t = 0".into(),
                )));
            }
            let tp = parse::parse_label(t_prime, 0).map_err(Failure::input)?;
            let tl = parse::parse_label(t_label, 0).map_err(Failure::input)?;
            let v = category::ext_dim_t0(&tp, &tl, *q)?;
            match format {
                Format::Json => println!("{}", json!({ "ext_dim": v, "q": q })),
                _ => println!("{v}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { i } => {
            let ctx = context(cli)?;
            let i = parse::parse_index(i, cli.t).map_err(Failure::input)?;
            let dec = category::decompose_injective_index(&ctx, &i)?;
            match format {
                Format::Json => {
                    let arr: Vec<_> = dec
                        .iter()
                        .map(|(l, m)| json!({ "label": render::label_json(l.socle()), "mult": m }))
                        .collect();
                    println!("{}", json!({ "summands": arr }));
                }
                _ => {
                    for (l, m) in &dec {
                        println!("{m} x {l}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selfcheck { max_t } => {
            let boxes = cli.max_boxes.unwrap_or(6);
            let reports = selfcheck::run(boxes, *max_t);
            let mut failed = false;
            for r in &reports {
                let status = if r.mismatches == 0 { "ok" } else { "FAIL" };
                println!(
                    "{status}: {} ({} cases, {} mismatches)",
                    r.name, r.cases, r.mismatches
                );
                failed |= r.mismatches > 0;
            }
            if failed {
                println!("self-check FAILED");
                Ok(ExitCode::from(1))
            } else {
                println!("all checks passed");
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
