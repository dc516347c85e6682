use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use posetkit::drawing::{dominance_svg, DEFAULT_SCALE};
use posetkit::oracle::{brute_led_downset, critical_pairs, enumerate_classes, is_diametrally_reversing, le_graph_diameter};
use posetkit::revlex::diametral_pair;
use posetkit::{
    count_antichains, led_boolean, led_chain_union, led_downset, led_upper_bound, realizer, reversal_distance,
    Error, LatticeExtension, Poset, DEFAULT_CAP,
};

/// Linear extension diameters of downset lattices.
#[derive(Parser)]
#[command(name = "posetkit", version)]
struct Cli {
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// led of the Boolean lattice B_N.
    LedBool {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=10_000))]
        n: u32,
    },
    /// led of the downset lattice of a 2-dimensional poset.
    LedDownset {
        file: PathBuf,
        /// Also print α, β, γ, δ and the nonzero δ₁, δ₂ entries.
        #[arg(long)]
        breakdown: bool,
        /// Only the enumeration bound; works for any dimension.
        #[arg(long)]
        upper_bound_only: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// The σ-revlex diametral pair of the downset lattice.
    Diametral {
        file: PathBuf,
        /// Write a dominance drawing here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_lattice: usize,
        /// Pixels per rank unit in the drawing.
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: u32,
    },
    /// Brute-force results.
    Oracle {
        file: PathBuf,
        #[arg(value_enum)]
        query: OracleQuery,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Number of antichains of a 2-dimensional poset.
    CountAntichains { file: PathBuf },
    /// led of the downset lattice of disjoint chains with the given lengths.
    LedChains {
        #[arg(value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum OracleQuery {
    Diameter,
    Classes,
    Critical,
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    version: &'static str,
    input_digest: Option<String>,
    result: Value,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotTwoDimensional => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

fn read_poset(path: &Path) -> Result<(Poset, String), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure::Usage(format!("{}: not UTF-8", path.display())))?;
    let digest = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    Ok((Poset::parse(&text)?, digest))
}

fn downsets(l: &LatticeExtension) -> Vec<Vec<usize>> {
    l.order().iter().map(|d| d.set().to_one_based()).collect()
}

fn run(command: &Command) -> Result<(Option<String>, Value), Failure> {
    Ok(match command {
        Command::LedBool { n } => (None, json!({ "n": n, "led": led_boolean(*n).to_string() })),

        Command::LedChains { lengths } => {
            (None, json!({ "lengths": lengths, "led": led_chain_union(lengths).to_string() }))
        }

        Command::LedDownset { file, breakdown, upper_bound_only, cap } => {
            let (p, digest) = read_poset(file)?;
            if *upper_bound_only {
                let bound = led_upper_bound(&p, *cap)?;
                return Ok((Some(digest), json!({ "elements": p.len(), "upper_bound": bound.to_string() })));
            }
            let b = led_downset(&p)?;
            let mut result = json!({ "elements": p.len(), "led": b.led.to_string() });
            if *breakdown {
                result["breakdown"] = json!({
                    "sigma": b.sigma,
                    "alpha": b.alpha.to_string(),
                    "beta": b.beta.to_string(),
                    "gamma": b.gamma.to_string(),
                    "delta": b.delta.to_string(),
                    "delta1": b.delta1_entries(),
                    "delta2": b.delta2_entries(),
                });
            }
            (Some(digest), result)
        }

        Command::Diametral { file, svg, max_lattice, scale } => {
            let (p, digest) = read_poset(file)?;
            let r = realizer(&p)?;
            let (l1, l2) = diametral_pair(&p, *max_lattice)?;
            let distance = reversal_distance(&l1, &l2)?;
            if let Some(path) = svg {
                let drawing = dominance_svg(&p, &l1, &l2, *scale)?;
                std::fs::write(path, drawing).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let result = json!({
                "sigma": r.sigma,
                "sigma_bar": r.sigma_bar,
                "downsets": l1.len(),
                "l1": downsets(&l1),
                "l2": downsets(&l2),
                "distance": distance.to_string(),
                "svg": svg.as_ref().map(|s| s.display().to_string()),
            });
            (Some(digest), result)
        }

        Command::Oracle { file, query, cap } => {
            let (p, digest) = read_poset(file)?;
            let result = match query {
                OracleQuery::Diameter => {
                    let g = le_graph_diameter(&p, *cap)?;
                    let d = brute_led_downset(&p, *cap)?;
                    let pairs: Vec<Value> =
                        d.pairs.iter().map(|(a, b)| json!([downsets(a), downsets(b)])).collect();
                    json!({
                        "extension_graph": {
                            "diameter": g.diameter.to_string(),
                            "extensions": g.extensions.to_string(),
                            "pairs": g.pairs,
                        },
                        "downset_lattice": {
                            "led": d.led.to_string(),
                            "extensions": d.extensions.to_string(),
                            "pairs": pairs,
                        },
                    })
                }
                OracleQuery::Classes => {
                    let classes = enumerate_classes(&p, *cap)?;
                    let list: Vec<Value> = classes
                        .iter()
                        .map(|c| {
                            json!({
                                "d": c.d,
                                "i": c.i,
                                "components": c.components,
                                "size": c.pairs.len().to_string(),
                            })
                        })
                        .collect();
                    json!({ "count": classes.len().to_string(), "classes": list })
                }
                OracleQuery::Critical => {
                    let pairs: Vec<[usize; 2]> =
                        critical_pairs(&p).iter().map(|c| [c.x.one_based(), c.y.one_based()]).collect();
                    json!({ "pairs": pairs, "diametrally_reversing": is_diametrally_reversing(&p, *cap)? })
                }
            };
            (Some(digest), result)
        }

        Command::CountAntichains { file } => {
            let (p, digest) = read_poset(file)?;
            let sigma = realizer(&p)?.sigma;
            let t = count_antichains(&p, &sigma)?;
            (Some(digest), json!({ "sigma": t.sigma, "per_element": t.per_element.iter().map(|v| v.to_string()).collect::<Vec<_>>(), "antichains": t.total.to_string() }))
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let outcome = run(&cli.command);
    if cli.verbose {
        eprintln!("elapsed: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    match outcome {
        Ok((input_digest, result)) => {
            let report = RunReport {
                command: std::env::args().skip(1).collect(),
                version: env!("CARGO_PKG_VERSION"),
                input_digest,
                result,
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
