//! `friezemod`: solution checks, reducibility verdicts and the two summary
//! tables for the equation `M_n(a_1, ..., a_n) = ±Id` over `Z/NZ`.
//!
//! Exit codes: 0 when every requested verdict was decided, 2 on invalid
//! input, 3 when a work budget ran out (an `unknown` verdict).
//!
//! Table generation is parallel across rows/cells; the worker count comes
//! from `FRIEZEMOD_JOBS` (which overrides `--jobs`) and does not affect the
//! output bytes.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use friezemod_core::dynomial::{two_dynomial_primes, two_dynomial_row, DynomialRecord};
use friezemod_core::monomial::{assemble_monomial_table, monomial_column, table_k_max};
use friezemod_core::nt::primes_up_to;
use friezemod_core::render;
use friezemod_core::solution::enumerate_solutions;
use friezemod_core::{
    check_solution, find_reduction, CTuple, Error, Modulus, ReductionOutcome, WorkBudget,
};

const FORMAT_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "friezemod", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Md,
    Csv,
    Json,
}

#[derive(Args)]
struct CommonTable {
    /// Output format.
    #[arg(long, value_enum, default_value_t = TableFormat::Md)]
    format: TableFormat,
    /// Worker threads (0 = all cores). FRIEZEMOD_JOBS overrides this flag.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Work limit, counted in candidate-tuple solution tests.
    #[arg(long, default_value_t = WorkBudget::DEFAULT_LIMIT)]
    max_work: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a tuple solves the equation, reporting the sign.
    Check {
        #[arg(long)]
        modulus: u64,
        /// Comma-separated integers, reduced mod N on parse.
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Search for a certified reduction of a solution of size >= 3.
    Reduce {
        #[arg(long)]
        modulus: u64,
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        /// Work limit, counted in candidate-tuple solution tests.
        #[arg(long, default_value_t = WorkBudget::DEFAULT_LIMIT)]
        max_work: u64,
        /// Print residues as representatives in (-N/2, N/2].
        #[arg(long)]
        balanced: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Minimal monomial sizes: rows k, one column per prime.
    MonomialTable {
        /// Explicit comma-separated list of primes.
        #[arg(long, value_delimiter = ',', conflicts_with = "primes_up_to")]
        primes: Option<Vec<u64>>,
        /// All primes up to this bound.
        #[arg(long)]
        primes_up_to: Option<u64>,
        /// Extend rows to k = max prime - 1 instead of (max prime - 1)/2.
        #[arg(long)]
        all_k: bool,
        #[command(flatten)]
        table: CommonTable,
    },
    /// Reducibility of the minimal 2-dynomial solutions for primes
    /// congruent to ±1 mod 12.
    Dynomial2Table {
        /// Largest prime to include.
        #[arg(long)]
        up_to: u64,
        /// Print residues as representatives in (-N/2, N/2].
        #[arg(long)]
        balanced: bool,
        /// Additionally validate the bundled published reducing parts.
        #[arg(long)]
        verify_paper_witnesses: bool,
        #[command(flatten)]
        table: CommonTable,
    },
    /// All solutions of one size, up to rotation/reversal equivalence.
    Enumerate {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        size: usize,
        /// Keep only solutions certified irreducible by the search.
        #[arg(long)]
        irreducible_only: bool,
        #[command(flatten)]
        table: CommonTable,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::WorkLimitExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Thread pool honoring FRIEZEMOD_JOBS over --jobs; 0 means all cores.
fn thread_pool(jobs_flag: usize) -> rayon::ThreadPool {
    let jobs = std::env::var("FRIEZEMOD_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(jobs_flag);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if jobs > 0 {
        builder = builder.num_threads(jobs);
    }
    builder.build().expect("failed to build thread pool")
}

fn envelope(command: &str, inputs: Value, result: Value, work_spent: u64) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "work_spent": work_spent,
    })
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Check {
            modulus,
            tuple,
            format,
        } => {
            let m = Modulus::new(modulus)?;
            let t = CTuple::parse(m, &tuple)?;
            let verdict = check_solution(&t);
            match format {
                TextFormat::Text => {
                    if verdict.is_solution {
                        let sign = verdict.sign.expect("solutions carry a sign");
                        let ambiguous = if verdict.ambiguous {
                            " (sign ambiguous: Id = -Id mod 2)"
                        } else {
                            ""
                        };
                        println!("solution (sign {sign}){ambiguous}");
                    } else {
                        println!("not a solution");
                    }
                }
                TextFormat::Json => {
                    let env = envelope(
                        "check",
                        json!({ "modulus": modulus, "tuple": render::tuple_json(&t) }),
                        render::solution_verdict_json(&verdict),
                        1,
                    );
                    println!("{env}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Reduce {
            modulus,
            tuple,
            max_work,
            balanced,
            format,
        } => {
            let m = Modulus::new(modulus)?;
            let t = CTuple::parse(m, &tuple)?;
            let budget = WorkBudget::new(max_work);
            let outcome = find_reduction(&t, &budget)?;
            let code = match &outcome {
                ReductionOutcome::Unknown { .. } => ExitCode::from(3),
                _ => ExitCode::SUCCESS,
            };
            match format {
                TextFormat::Text => match &outcome {
                    ReductionOutcome::Reducible(w) => {
                        println!("reducible");
                        println!(
                            "transform: rotation={} reflected={}",
                            w.transform.rotation, w.transform.reflected
                        );
                        println!("left:  {}", render::fmt_tuple(&w.left, balanced));
                        println!("right: {}", render::fmt_tuple(&w.right, balanced));
                    }
                    ReductionOutcome::Irreducible => println!("irreducible"),
                    ReductionOutcome::Unknown { work_spent } => {
                        println!("unknown (work limit reached after {work_spent} tests)");
                    }
                },
                TextFormat::Json => {
                    let env = envelope(
                        "reduce",
                        json!({
                            "modulus": modulus,
                            "tuple": render::tuple_json(&t),
                            "max_work": max_work,
                        }),
                        render::reduction_outcome_json(&outcome),
                        budget.spent(),
                    );
                    println!("{env}");
                }
            }
            Ok(code)
        }

        Command::MonomialTable {
            primes,
            primes_up_to: up_to,
            all_k,
            table,
        } => {
            let mut primes: Vec<u64> = match (primes, up_to) {
                (Some(list), None) => list,
                (None, Some(bound)) => primes_up_to(bound),
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "pass --primes or --primes-up-to".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
            };
            primes.sort_unstable();
            primes.dedup();
            if primes.is_empty() {
                return Err(Error::InvalidInput("no primes selected".into()));
            }
            let k_max = table_k_max(&primes, all_k);
            let pool = thread_pool(table.jobs);
            let columns = pool.install(|| {
                primes
                    .par_iter()
                    .map(|&p| monomial_column(p, k_max))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            // One unit per power tested during the order searches.
            let work: u64 = columns
                .iter()
                .flat_map(|c| c.sizes.iter())
                .map(|&s| s as u64)
                .sum();
            if work > table.max_work {
                return Err(Error::WorkLimitExceeded(table.max_work));
            }
            let out = assemble_monomial_table(columns, k_max);
            match table.format {
                TableFormat::Md => print!("{}", out.to_markdown()),
                TableFormat::Csv => print!("{}", out.to_csv()),
                TableFormat::Json => {
                    let env = envelope(
                        "monomial-table",
                        json!({ "primes": out.primes, "all_k": all_k }),
                        out.to_json(),
                        work,
                    );
                    println!("{env}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Dynomial2Table {
            up_to,
            balanced,
            verify_paper_witnesses,
            table,
        } => {
            let primes = two_dynomial_primes(up_to);
            let pool = thread_pool(table.jobs);
            let rows: Vec<DynomialRecord> = pool.install(|| {
                primes
                    .par_iter()
                    .map(|&p| two_dynomial_row(p))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            // One unit per power tested in the order search per row.
            let work: u64 = rows.iter().map(|r| r.size as u64).sum();
            if work > table.max_work {
                return Err(Error::WorkLimitExceeded(table.max_work));
            }
            let verified = if verify_paper_witnesses {
                Some(verify_reference_witnesses(up_to)?)
            } else {
                None
            };
            match table.format {
                TableFormat::Md => print!("{}", render::two_dynomial_markdown(&rows, balanced)),
                TableFormat::Csv => print!("{}", render::two_dynomial_csv(&rows, balanced)),
                TableFormat::Json => {
                    let mut result = json!({ "rows": render::two_dynomial_json(&rows) });
                    if let Some(count) = verified {
                        result["verified_reference_witnesses"] = json!(count);
                    }
                    let env = envelope(
                        "dynomial2-table",
                        json!({ "up_to": up_to, "balanced": balanced }),
                        result,
                        work,
                    );
                    println!("{env}");
                }
            }
            if let (Some(count), true) = (verified, table.format != TableFormat::Json) {
                eprintln!("verified {count} bundled reference witnesses");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Enumerate {
            modulus,
            size,
            irreducible_only,
            table,
        } => {
            let m = Modulus::new(modulus)?;
            let budget = WorkBudget::new(table.max_work);
            let solutions = enumerate_solutions(m, size, true, &budget)?;
            let mut kept = Vec::new();
            let mut unknown = Vec::new();
            for t in solutions {
                if !irreducible_only {
                    kept.push(t);
                    continue;
                }
                if t.len() < 3 {
                    // (0,0) is not considered irreducible.
                    continue;
                }
                match find_reduction(&t, &budget)? {
                    ReductionOutcome::Irreducible => kept.push(t),
                    ReductionOutcome::Reducible(_) => {}
                    ReductionOutcome::Unknown { .. } => unknown.push(t),
                }
            }
            match table.format {
                TableFormat::Md => {
                    for t in &kept {
                        println!("{t}");
                    }
                    for t in &unknown {
                        println!("{t} (unknown: work limit)");
                    }
                }
                TableFormat::Csv => {
                    println!("tuple,verdict");
                    for t in &kept {
                        println!("\"{t}\",{}", if irreducible_only { "irreducible" } else { "solution" });
                    }
                    for t in &unknown {
                        println!("\"{t}\",unknown");
                    }
                }
                TableFormat::Json => {
                    let env = envelope(
                        "enumerate",
                        json!({
                            "modulus": modulus,
                            "size": size,
                            "irreducible_only": irreducible_only,
                        }),
                        json!({
                            "solutions": kept.iter().map(render::tuple_json).collect::<Vec<_>>(),
                            "unknown": unknown.iter().map(render::tuple_json).collect::<Vec<_>>(),
                        }),
                        budget.spent(),
                    );
                    println!("{env}");
                }
            }
            if unknown.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
    }
}

/// Replays the bundled published reducing parts up to `limit`: each must be
/// a solution of the stated size and must reduce the minimal 2-dynomial
/// tuple of its row. Returns how many were checked.
fn verify_reference_witnesses(limit: u64) -> Result<usize, Error> {
    let mut count = 0usize;
    for row in friezemod_core::reference::two_dynomial_reference() {
        if row.n > limit {
            continue;
        }
        let Some(witness) = row.witness else { continue };
        let m = Modulus::new(row.n)?;
        let part = witness.tuple(m);
        if part.len() != witness.length {
            return Err(Error::InvalidInput(format!(
                "reference witness for N = {} has the wrong length",
                row.n
            )));
        }
        if !check_solution(&part).is_solution {
            return Err(Error::InvalidInput(format!(
                "reference witness for N = {} is not a solution",
                row.n
            )));
        }
        // Complement: boundary 2 - r at both ends, interior from the
        // dynomial tuple; together they must rebuild the minimal solution.
        let dynomial = CTuple::alternating(m, 2, row.size)?;
        let left_len = row.size + 2 - part.len();
        let two = m.residue(2);
        let r = part.residue(0);
        let left = CTuple::new(
            m,
            (0..left_len).map(|i| {
                if i == 0 || i == left_len - 1 {
                    (two - r).rep() as i128
                } else if i % 2 == 1 {
                    -2
                } else {
                    2
                }
            }),
        )?;
        if !check_solution(&left).is_solution {
            return Err(Error::InvalidInput(format!(
                "reference complement for N = {} is not a solution",
                row.n
            )));
        }
        if left.oplus(&part)? != dynomial {
            return Err(Error::InvalidInput(format!(
                "reference witness for N = {} does not rebuild the minimal solution",
                row.n
            )));
        }
        count += 1;
    }
    Ok(count)
}
