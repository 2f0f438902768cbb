use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use grdisc_cli::instance_io::{parse_instance, parse_ordering, serialize_instance};
use grdisc_cli::record::{
    certificate_record, construction_record, result_record, result_text, violation_witness,
};
use grdisc_cli::sweep::{run_sweep, sweep_csv, SweepConfig};
use grdisc_cli::{parse_rational, CliError};
use grdisc_core::constructions::{
    default_cap_multiplier, extremal_graph, extremal_hypergraph, random_uniform, ExtremalMode,
};
use grdisc_core::oracle::DEFAULT_DP_CAP;
use grdisc_core::{
    certify, evaluate_ordering, exact_grdisc_dp_capped, exact_grdisc_enum, first_deletion_bound,
    DiscContext, GreedyVariant,
};

/// Graded-discrepancy vertex orderings of graphs and k-uniform hypergraphs.
///
/// Exit codes: 0 success / within bound, 1 bound violation (a witness is
/// printed), 2 usage or parse error, 3 resource limit.
#[derive(Parser)]
#[command(name = "grdisc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// Min-degree while N <= 0, max-degree while N > 0.
    Proof,
    /// Minimize |N| at every step.
    Exact,
}

impl From<VariantArg> for GreedyVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Proof => GreedyVariant::ProofRule,
            VariantArg::Exact => GreedyVariant::ExactGreedy,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    ExtremalGraph,
    ExtremalHypergraph,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Rounded,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a greedy vertex ordering and its prefix profile.
    Order {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "proof")]
        variant: VariantArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Exact graded discrepancy of a small instance (subset DP).
    Exact {
        #[arg(long)]
        input: PathBuf,
        /// Cross-check against full permutation enumeration (n <= 8).
        #[arg(long)]
        enum_check: bool,
    },
    /// Build a family instance or a seeded random instance.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Uniformity (extremal-hypergraph and random families).
        #[arg(long)]
        k: Option<usize>,
        /// Density as `a/b` or decimal (extremal families).
        #[arg(long)]
        p: Option<String>,
        /// Edge count (random family).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Filler degree-cap multiplier (extremal-hypergraph).
        #[arg(long)]
        cap_multiplier: Option<String>,
        #[arg(long)]
        out: PathBuf,
        /// Sidecar construction report; stderr when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run a (n, p, seed, variant) grid and emit a deterministic CSV.
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<String>,
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        #[arg(long, value_delimiter = ',', default_values_t = vec!["proof".to_string(), "exact".to_string()])]
        variants: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute the profile of an ordering file against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        ordering: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    std::process::exit(code);
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    Ok(fs::read_to_string(path)?)
}

fn dp_cap() -> usize {
    std::env::var("GRDISC_DP_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DP_CAP)
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Order {
            input,
            variant,
            out,
            format,
        } => {
            let h = parse_instance(&read(&input)?)?;
            let started = Instant::now();
            let result = grdisc_core::order(&h, variant.into())?;
            let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
            let ctx = DiscContext::for_hypergraph(&h)?;
            let fdb = first_deletion_bound(&h).unwrap_or(0);
            let record = result_record(&h, &result, fdb, ctx.denom(), elapsed_ms);
            let rendered = match format {
                FormatArg::Json => serde_json::to_string_pretty(&record).unwrap() + "\n",
                FormatArg::Text => result_text(&record),
            };
            match out {
                Some(path) => fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
            if result.certificate.within_bound {
                Ok(0)
            } else {
                let witness = violation_witness(&h, &result, ctx.denom());
                println!("{}", serde_json::to_string(&witness).unwrap());
                Ok(1)
            }
        }
        Command::Exact { input, enum_check } => {
            let h = parse_instance(&read(&input)?)?;
            let dp = exact_grdisc_dp_capped(&h, dp_cap())?;
            let ctx = DiscContext::for_hypergraph(&h)?;
            let denom = ctx.denom();
            println!(
                "exact grdisc (scaled): {} (value {}/{})",
                dp.scaled, dp.scaled, denom
            );
            let witness: Vec<String> = dp.ordering.iter().map(|v| v.to_string()).collect();
            println!("witness ordering: {}", witness.join(" "));
            if enum_check {
                if h.vertex_count() > grdisc_core::oracle::ENUM_CAP {
                    return Err(CliError::Usage(format!(
                        "--enum-check needs n <= {}, instance has n = {}",
                        grdisc_core::oracle::ENUM_CAP,
                        h.vertex_count()
                    )));
                }
                let en = exact_grdisc_enum(&h)?;
                if en == dp.scaled {
                    println!("enumeration cross-check: agree ({en})");
                } else {
                    println!(
                        "enumeration cross-check: MISMATCH (dp {} vs enumeration {})",
                        dp.scaled, en
                    );
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Construct {
            family,
            n,
            k,
            p,
            m,
            seed,
            mode,
            cap_multiplier,
            out,
            report,
        } => {
            let (graph, report_value, comments) = match family {
                FamilyArg::ExtremalGraph => {
                    let p = parse_rational(&p.ok_or_else(|| {
                        CliError::Usage("--p is required for extremal-graph".into())
                    })?)?;
                    let mode = match mode {
                        ModeArg::Strict => ExtremalMode::Strict,
                        ModeArg::Rounded => ExtremalMode::Rounded,
                    };
                    let (g, _spec, rep) = extremal_graph(n, &p, mode)?;
                    (g, construction_record(&rep), vec![])
                }
                FamilyArg::ExtremalHypergraph => {
                    let k = k.ok_or_else(|| {
                        CliError::Usage("--k is required for extremal-hypergraph".into())
                    })?;
                    let p = parse_rational(&p.ok_or_else(|| {
                        CliError::Usage("--p is required for extremal-hypergraph".into())
                    })?)?;
                    let mult = match cap_multiplier {
                        Some(s) => parse_rational(&s)?,
                        None => default_cap_multiplier(),
                    };
                    let (g, _spec, rep) = extremal_hypergraph(n, k, &p, &mult)?;
                    (g, construction_record(&rep), vec![])
                }
                FamilyArg::Random => {
                    let k =
                        k.ok_or_else(|| CliError::Usage("--k is required for random".into()))?;
                    let m =
                        m.ok_or_else(|| CliError::Usage("--m is required for random".into()))?;
                    let generated = random_uniform(n, k, m, seed)?;
                    let comment = format!(
                        "generator: {} seed: {}",
                        generated.generator, generated.seed
                    );
                    let rep = serde_json::json!({
                        "n": n, "k": k, "m": m,
                        "generator": generated.generator,
                        "seed": generated.seed,
                    });
                    (generated.hypergraph, rep, vec![comment])
                }
            };
            fs::write(&out, serialize_instance(&graph, &comments))?;
            let report_text = serde_json::to_string_pretty(&report_value).unwrap();
            match report {
                Some(path) => fs::write(path, report_text + "\n")?,
                None => eprintln!("{report_text}"),
            }
            Ok(0)
        }
        Command::Sweep {
            k,
            n,
            p,
            seeds,
            variants,
            out,
        } => {
            if n.is_empty() || p.is_empty() || variants.is_empty() || seeds == 0 {
                return Err(CliError::Usage("sweep grids must be non-empty".into()));
            }
            let mut densities = Vec::with_capacity(p.len());
            for s in &p {
                let d = parse_rational(s)?;
                if d < grdisc_core::constructions::rational(0, 1)
                    || d > grdisc_core::constructions::rational(1, 1)
                {
                    return Err(CliError::Usage(format!("density {s} outside [0, 1]")));
                }
                densities.push(d);
            }
            let mut parsed_variants = Vec::with_capacity(variants.len());
            for v in &variants {
                parsed_variants.push(match v.as_str() {
                    "proof" => GreedyVariant::ProofRule,
                    "exact" => GreedyVariant::ExactGreedy,
                    other => {
                        return Err(CliError::Usage(format!(
                            "unknown variant `{other}` (expected proof|exact)"
                        )))
                    }
                });
            }
            let cfg = SweepConfig {
                k,
                ns: n,
                densities,
                seeds,
                variants: parsed_variants,
            };
            let rows = run_sweep(&cfg);
            fs::write(&out, sweep_csv(&rows))?;
            let failures = rows.iter().filter(|r| r.error.is_some()).count();
            let violations = rows
                .iter()
                .filter(|r| r.within_bound == Some(false))
                .count();
            eprintln!(
                "{} rows written to {} ({} errors, {} bound violations)",
                rows.len(),
                out.display(),
                failures,
                violations
            );
            Ok(if violations > 0 { 1 } else { 0 })
        }
        Command::Verify { input, ordering } => {
            let h = parse_instance(&read(&input)?)?;
            let order_ids = parse_ordering(&read(&ordering)?)?;
            let profile = evaluate_ordering(&h, &order_ids)?;
            let cert = certify(&profile);
            let ctx = DiscContext::for_hypergraph(&h)?;
            let record = certificate_record(&cert, ctx.denom());
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
            Ok(if cert.within_bound { 0 } else { 1 })
        }
    }
}
