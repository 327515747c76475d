//! `posetw`: widths, chains and compressions on the Boolean lattice.
//!
//! Batch, non-interactive: families come from files in the `n=` line
//! format, results go to stdout (`--json` where structured output
//! matters), diagnostics to stderr. Exit codes: 0 success/verified,
//! 1 domain error, 2 usage error, 3 counterexample found, 4 skipped.

mod fam;

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use posetw_core::chains::{insert_and_update, is_skipless_partition, sd_partition, ChainPartition};
use posetw_core::compress::{compress_fully_with, classify_fixed_point, FixedPointClass};
use posetw_core::verify::{merge_reports, Shard, StatementId, VerificationReport, Verdict, VerifyParams};
use posetw_core::width::width;
use posetw_core::{gk, goldwasser, heavy, order, OrderKind, SetFamily, SubsetMask};

#[derive(Parser)]
#[command(name = "posetw", version, about = "Widths, chains and compressions on the Boolean lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two subsets under a total order
    Order {
        /// binary | lex | colex | simplicial | level-colex
        #[arg(long, default_value = "binary")]
        order: String,
        a: String,
        b: String,
        #[arg(short)]
        n: u32,
    },
    /// Rank of a subset in an order, or the subset at a rank (--unrank)
    Rank {
        #[arg(long, default_value = "binary")]
        order: String,
        /// Subset text, e.g. "{1,3}" or 0x5
        set: Option<String>,
        #[arg(long, conflicts_with = "set")]
        unrank: Option<u64>,
        #[arg(short)]
        n: u32,
    },
    /// The first d subsets of an order, as a family file
    Segment {
        #[arg(long, default_value = "binary")]
        order: String,
        #[arg(short)]
        d: u64,
        #[arg(short)]
        n: u32,
    },
    /// Exact width and a maximum antichain of a family
    Width {
        family: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Partition a convex family into width-many skipless chains
    SdPartition {
        family: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Insert a set into a downset, reporting whether the width grew
    Insert {
        family: PathBuf,
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Greene-Kleitman symmetric chain decomposition
    Scd {
        #[command(subcommand)]
        command: ScdCommand,
    },
    /// Width of the binary downset C(d), with optional witness antichain
    BinaryWidth {
        d: u64,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check alpha(C(d)) <= alpha(B(n)) for every prefix size d
    AlphaScan {
        #[arg(short)]
        n: u32,
    },
    /// Compress a family to its fixed point and classify it
    Compress {
        family: PathBuf,
        /// Print each effective compression step
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Heavy families of r-sets
    Heavy {
        #[command(subcommand)]
        command: HeavyCommand,
    },
    /// Run a statement verifier and report
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum ScdCommand {
    /// The full symmetric chain through a set
    Chain {
        set: String,
        #[arg(short)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum HeavyCommand {
    /// Is the family of r-sets heavy, and how large is its downset?
    Check {
        family: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// k disjoint copies of the first r levels of B(2r-1)
    Construct {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        k: u32,
    },
    /// Exhaustive f_r(t) search over [n_max]
    Search {
        #[arg(short)]
        r: u32,
        #[arg(short)]
        t: u32,
        #[arg(short)]
        n_max: u32,
        /// Override the search-space guard
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement id, e.g. thm-maxwidth, lemma-special, conj-daykin-frankl
    statement: String,
    #[arg(short)]
    n: Option<u32>,
    /// Sample count for sampled ranges
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only shard <shard> of <shards> (for external distribution)
    #[arg(long, requires = "shard")]
    shards: Option<u64>,
    #[arg(long, requires = "shards")]
    shard: Option<u64>,
    /// Override search-space guards
    #[arg(long)]
    force: bool,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn parse_order(text: &str) -> Result<OrderKind> {
    OrderKind::from_str(text)
        .map_err(|_| anyhow!("unknown order `{text}` (binary, lex, colex, simplicial, level-colex)"))
}

fn parse_set(text: &str, n: u32) -> Result<SubsetMask> {
    SubsetMask::parse(text, n).with_context(|| format!("parsing set `{text}` over [{n}]"))
}

fn set_strings(f: &SetFamily) -> Vec<String> {
    f.members().map(|m| m.to_string()).collect()
}

fn chain_strings(p: &ChainPartition) -> Vec<Vec<String>> {
    p.chains()
        .into_iter()
        .map(|chain| chain.into_iter().map(|m| m.to_string()).collect())
        .collect()
}

fn print_chains(chains: &[Vec<String>]) {
    for chain in chains {
        println!("{}", chain.join(" < "));
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Order { order, a, b, n } => {
            let kind = parse_order(&order)?;
            let (a, b) = (parse_set(&a, n)?, parse_set(&b, n)?);
            let word = match order::compare(kind, a, b)? {
                Ordering::Less => "Less",
                Ordering::Equal => "Equal",
                Ordering::Greater => "Greater",
            };
            println!("{word}");
            Ok(0)
        }
        Command::Rank { order, set, unrank, n } => {
            let kind = parse_order(&order)?;
            match (set, unrank) {
                (Some(text), None) => {
                    println!("{}", order::rank(kind, parse_set(&text, n)?));
                }
                (None, Some(i)) => {
                    println!("{}", order::unrank(kind, i, n)?);
                }
                _ => bail!("pass a set to rank or --unrank <i>"),
            }
            Ok(0)
        }
        Command::Segment { order, d, n } => {
            let kind = parse_order(&order)?;
            print!("{}", fam::to_string(&order::initial_segment(kind, d, n)?));
            Ok(0)
        }
        Command::Width { family, json } => {
            let f = fam::read(&family)?;
            let result = width(&f);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "width": result.width,
                        "witness": set_strings(&result.witness),
                    })
                );
            } else {
                println!("w={}", result.width);
                println!("witness: {}", set_strings(&result.witness).join(" "));
            }
            Ok(0)
        }
        Command::SdPartition { family, json } => {
            let f = fam::read(&family)?;
            let p = sd_partition(&f)?;
            let chains = chain_strings(&p);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "width": p.chain_count(),
                        "chains": chains,
                        "skipless": is_skipless_partition(&p),
                    })
                );
            } else {
                print_chains(&chains);
            }
            Ok(0)
        }
        Command::Insert { family, set, json } => {
            let d = fam::read(&family)?;
            if !d.is_downset() {
                bail!("the input family must be a downset");
            }
            let y = parse_set(&set, d.ground_size())?;
            let p = sd_partition(&d)?;
            let (next, grew) = insert_and_update(&p, y)?;
            let chains = chain_strings(&next);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "width_changed": grew,
                        "width": next.chain_count(),
                        "chains": chains,
                        "skipless": is_skipless_partition(&next),
                    })
                );
            } else {
                println!("width_changed={grew}");
                print_chains(&chains);
            }
            Ok(0)
        }
        Command::Scd { command: ScdCommand::Chain { set, n } } => {
            for m in gk::chain_of(parse_set(&set, n)?) {
                println!("{m}");
            }
            Ok(0)
        }
        Command::BinaryWidth { d, n, witness, json } => {
            if d < 1 || d > 1u64 << n {
                bail!("d must be in 1..=2^{n}");
            }
            let w = goldwasser::goldwasser_width(d);
            let antichain =
                if witness || json { Some(goldwasser::goldwasser_antichain(d, n)?) } else { None };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "d": d,
                        "n": n,
                        "width": w,
                        "witness": antichain.as_ref().map(set_strings),
                    })
                );
            } else {
                println!("w={w}");
                if let Some(a) = antichain {
                    println!("witness: {}", set_strings(&a).join(" "));
                }
            }
            Ok(0)
        }
        Command::AlphaScan { n } => {
            let bound = goldwasser::alpha_boolean_lattice(n)?;
            let mut violations = 0u64;
            let mut specials = 0u64;
            for d in 1..=1u64 << n {
                if gk::is_special(SubsetMask::new((d - 1) as u32, n)?) {
                    specials += 1;
                }
                let alpha = posetw_core::Rational::new(d as i128, specials as i128);
                if alpha > bound {
                    println!("d={d} alpha={alpha} > alpha(B({n}))={bound}");
                    violations += 1;
                }
            }
            println!("alpha-scan n={n}: {} prefixes checked, {violations} violations", 1u64 << n);
            Ok(if violations > 0 { 3 } else { 0 })
        }
        Command::Compress { family, trace, json } => {
            let f = fam::read(&family)?;
            let mut trace_lines = Vec::new();
            let (fixed, steps) = compress_fully_with(&f, |i, before, after| {
                if trace {
                    let removed = before.difference(after).expect("same ground");
                    let added = after.difference(before).expect("same ground");
                    trace_lines.push(format!(
                        "step {}: i={i} removed=[{}] added=[{}]",
                        trace_lines.len() + 1,
                        set_strings(&removed).join(" "),
                        set_strings(&added).join(" "),
                    ));
                }
            });
            let class = classify_fixed_point(&fixed)?;
            let class_text = match class {
                FixedPointClass::InitialSegment => "initial-segment".to_string(),
                FixedPointClass::OddExceptional(r) => format!("odd-exceptional(r={r})"),
                FixedPointClass::EvenExceptional(r) => format!("even-exceptional(r={r})"),
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "steps": steps,
                        "class": class_text,
                        "fixed_point": set_strings(&fixed),
                        "n": fixed.ground_size(),
                    })
                );
            } else {
                for line in &trace_lines {
                    println!("{line}");
                }
                println!("steps={steps}");
                println!("class={class_text}");
                print!("{}", fam::to_string(&fixed));
            }
            Ok(0)
        }
        Command::Heavy { command } => run_heavy(command),
        Command::Verify(args) => run_verify(args),
    }
}

fn run_heavy(command: HeavyCommand) -> Result<u8> {
    match command {
        HeavyCommand::Check { family, json } => {
            let t = fam::read(&family)?;
            let verdict = heavy::is_heavy(&t)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "is_heavy": verdict.is_heavy,
                        "t": verdict.t,
                        "downset_size": verdict.downset_size,
                        "width": verdict.width(),
                        "width_witness": set_strings(&verdict.width_witness),
                    })
                );
            } else {
                println!(
                    "heavy={} t={} downset_size={} width={}",
                    verdict.is_heavy,
                    verdict.t,
                    verdict.downset_size,
                    verdict.width()
                );
                println!("witness: {}", set_strings(&verdict.width_witness).join(" "));
            }
            Ok(0)
        }
        HeavyCommand::Construct { r, k } => {
            print!("{}", fam::to_string(&heavy::heavy_construction(r, k)?));
            Ok(0)
        }
        HeavyCommand::Search { r, t, n_max, force, json } => {
            let shards = thread_count() as u64;
            let mut parts = Vec::new();
            std::thread::scope(|scope| {
                let handles: Vec<_> = (0..shards)
                    .map(|index| {
                        scope.spawn(move || {
                            heavy::search_f_r_sharded(r, t, n_max, force, index, shards, |_, _| {})
                        })
                    })
                    .collect();
                for handle in handles {
                    parts.push(handle.join().expect("search thread"));
                }
            });
            let mut best: Option<heavy::SearchResult> = None;
            let mut examined = 0u64;
            for part in parts {
                let part = part?;
                examined += part.families_examined;
                best = match best {
                    None => Some(part),
                    Some(cur) => {
                        // Prefer larger downsets; tie-break toward the
                        // enumeration-earlier family for determinism.
                        if part.best_size > cur.best_size
                            || (part.best_size == cur.best_size
                                && part.best_family.as_ref().map(|f| f.bits().to_vec())
                                    < cur.best_family.as_ref().map(|f| f.bits().to_vec()))
                        {
                            Some(part)
                        } else {
                            Some(cur)
                        }
                    }
                };
            }
            let mut result = best.expect("at least one shard");
            result.families_examined = examined;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "r": result.r,
                        "t": result.t,
                        "n_max": result.n_max,
                        "best_size": result.best_size,
                        "best_family": result.best_family.as_ref().map(set_strings),
                        "exhaustive": result.exhaustive,
                        "families_examined": result.families_examined,
                    })
                );
            } else {
                println!(
                    "r={} t={} n_max={} best_size={} exhaustive={} families_examined={}",
                    result.r, result.t, result.n_max, result.best_size, result.exhaustive,
                    result.families_examined,
                );
                match &result.best_family {
                    Some(f) => println!("best: {}", set_strings(f).join(" ")),
                    None => println!("best: none (no heavy family of these parameters)"),
                }
            }
            Ok(0)
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<u8> {
    let id = StatementId::from_str(&args.statement)
        .map_err(|_| anyhow!("unknown statement `{}`; known: {}", args.statement, known_statements()))?;
    let base = VerifyParams {
        n: args.n,
        samples: args.samples,
        seed: args.seed,
        shard: Shard::default(),
        force: args.force,
    };

    let started = Instant::now();
    let mut report = match (args.shards, args.shard) {
        (Some(count), Some(index)) => {
            if count == 0 || index >= count {
                bail!("--shard must be below --shards");
            }
            let params = VerifyParams { shard: Shard { index, count }, ..base };
            posetw_core::verify::verify(id, &params)?
        }
        _ => {
            // prop-r3 asserts the global search maximum, which only an
            // unsharded run sees.
            let shards =
                if id == StatementId::PropR3 { 1 } else { thread_count() as u64 };
            let mut parts = Vec::new();
            std::thread::scope(|scope| {
                let base = &base;
                let handles: Vec<_> = (0..shards)
                    .map(|index| {
                        scope.spawn(move || {
                            let params = VerifyParams {
                                shard: Shard { index, count: shards },
                                ..base.clone()
                            };
                            posetw_core::verify::verify(id, &params)
                        })
                    })
                    .collect();
                for handle in handles {
                    parts.push(handle.join().expect("verify thread"));
                }
            });
            let parts: Result<Vec<VerificationReport>, _> = parts.into_iter().collect();
            merge_reports(parts?).expect("at least one shard")
        }
    };
    report.elapsed_ms = started.elapsed().as_millis() as u64;

    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!(
            "statement={} params={} instances={} counterexamples={} elapsed_ms={} verdict={:?}",
            report.statement_id,
            report.params,
            report.instances_checked,
            report.counterexamples.len(),
            report.elapsed_ms,
            report.verdict,
        );
        for ce in &report.counterexamples {
            println!("counterexample: {ce}");
        }
    }
    Ok(match report.verdict {
        Verdict::Verified => 0,
        Verdict::CounterexampleFound => 3,
        Verdict::Skipped => 4,
    })
}

fn known_statements() -> String {
    StatementId::ALL.iter().map(|id| id.as_str()).collect::<Vec<_>>().join(", ")
}

/// Worker count: POSETW_THREADS if set, else the logical core count.
fn thread_count() -> usize {
    std::env::var("POSETW_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|v| v.get()).unwrap_or(1))
}
