use std::env;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use permpat::cache::{avoidance_class_cached, AvoidanceCache};
use permpat::classifier::{
    emit_table, enumerate_coincidental_vincular, enumerate_nat_co, is_nat_co, Table, TableKind,
};
use permpat::oracle::{
    avoidance_class, verify_coincidence, OracleConfig, ScanMode, DEFAULT_BUDGET,
};
use permpat::{
    bar_set, barred_witness, bond_set, boycotts, classical_occurrences, parse_barred,
    parse_pattern, parse_permutation, parse_vincular, vincular_occurrences, BarredSemantics, Error,
    Occurrence, Pattern,
};

const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_BUDGET: u8 = 70;

/// Classical, barred and vincular permutation patterns.
#[derive(Parser, Debug)]
#[command(name = "permpat", version)]
struct Cli {
    /// Print a JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// How a barred pattern's letters are matched (subset or role).
    #[arg(long, global = true, default_value = "subset")]
    semantics: BarredSemantics,

    /// Maximum elementary containment checks per scan.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Allow scan lengths 9 and 10.
    #[arg(long, global = true)]
    extended: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Does the permutation contain the pattern?
    Contains { pattern: String, perm: String },
    /// Avoiders of all given patterns, length by length.
    Avoiders {
        #[arg(required = true)]
        patterns: Vec<String>,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// bar(v) of a vincular pattern.
    Bar { vincular: String },
    /// bond(b) of a barred pattern.
    Bond { barred: String },
    /// Boycotts of a barred pattern.
    Boycotts { barred: String },
    /// Is the barred pattern naturally coincidental?
    Natco { barred: String },
    #[command(subcommand)]
    Enumerate(Enumerate),
    /// Compare Av(barred set) with Av(vincular set) up to a length.
    Verify {
        #[arg(long, num_args = 1..)]
        barred: Vec<String>,
        #[arg(long, num_args = 1..)]
        vincular: Vec<String>,
        #[arg(long)]
        max_n: usize,
    },
    /// Regenerate table 1, 2 or 3.
    Tables {
        #[arg(long)]
        which: u8,
    },
}

#[derive(Subcommand, Debug)]
enum Enumerate {
    /// Nat-co barred patterns of one length, or of every length.
    Natco {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Coincidental vincular patterns up to a length.
    Covinc {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

struct Answer {
    command: &'static str,
    input: Value,
    result: Value,
    text: String,
    exit: u8,
}

impl Answer {
    fn new(command: &'static str, input: Value, result: Value, text: String) -> Self {
        Answer {
            command,
            input,
            result,
            text,
            exit: 0,
        }
    }
}

fn one_based(o: &Occurrence) -> Vec<usize> {
    o.positions().iter().map(|p| p + 1).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

fn lines(items: &[String]) -> String {
    items.join("\n")
}

fn run(cli: &Cli) -> permpat::Result<Answer> {
    let config = OracleConfig {
        budget: cli.budget,
        allow_extended: cli.extended,
        semantics: cli.semantics,
    };
    let answer = match &cli.command {
        Command::Contains { pattern, perm } => {
            let p = parse_pattern(pattern)?;
            let w = parse_permutation(perm)?;
            let witness = match &p {
                Pattern::Classical(c) => classical_occurrences(&w, c).into_iter().next(),
                Pattern::Vincular(v) => vincular_occurrences(&w, v).into_iter().next(),
                Pattern::Barred(b) => barred_witness(&w, b, cli.semantics),
            };
            let found = witness.is_some();
            Answer::new(
                "contains",
                json!({ "pattern": p.to_string(), "perm": w.to_string(), "semantics": cli.semantics.as_str() }),
                json!({ "contains": found, "witness": witness.as_ref().map(one_based) }),
                found.to_string(),
            )
        }
        Command::Avoiders {
            patterns,
            max_n,
            count_only,
        } => {
            let ps = patterns
                .iter()
                .map(|t| parse_pattern(t))
                .collect::<permpat::Result<Vec<_>>>()?;
            let mode = if *count_only {
                ScanMode::Count
            } else {
                ScanMode::Collect
            };
            let class = match env::var_os("PERMPAT_CACHE") {
                Some(path) => {
                    let path = PathBuf::from(path);
                    let mut cache = AvoidanceCache::load(&path)?;
                    let class = avoidance_class_cached(&ps, *max_n, mode, &config, &mut cache)?;
                    cache.save(&path)?;
                    class
                }
                None => avoidance_class(&ps, *max_n, mode, &config)?,
            };
            let mut text = Vec::new();
            let mut levels = Vec::new();
            for level in &class.levels {
                let members = level.members.as_ref().map(|ms| strings(ms));
                text.push(format!("{}\t{}", level.length, level.count));
                if let Some(ms) = &members {
                    if !ms.is_empty() {
                        text.push(ms.join(" "));
                    }
                }
                levels.push(json!({ "m": level.length, "count": level.count, "members": members }));
            }
            Answer::new(
                "avoiders",
                json!({
                    "patterns": strings(&ps),
                    "max_n": max_n,
                    "count_only": count_only,
                    "semantics": cli.semantics.as_str(),
                }),
                json!({ "counts": class.counts(), "levels": levels }),
                lines(&text),
            )
        }
        Command::Bar { vincular } => {
            let v = parse_vincular(vincular)?;
            let out = strings(&bar_set(&v)?);
            Answer::new(
                "bar",
                json!({ "vincular": v.to_string() }),
                json!(out),
                lines(&out),
            )
        }
        Command::Bond { barred } => {
            let b = parse_barred(barred)?;
            let out = strings(&bond_set(&b));
            Answer::new(
                "bond",
                json!({ "barred": b.to_string() }),
                json!(out),
                lines(&out),
            )
        }
        Command::Boycotts { barred } => {
            let b = parse_barred(barred)?;
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for x in boycotts(&b) {
                let set = |s: std::collections::BTreeSet<u32>| s.into_iter().collect::<Vec<u32>>();
                let (all, u, bars) = (
                    set(x.values()),
                    set(x.unbarred_values()),
                    set(x.barred_values()),
                );
                text.push(format!(
                    "bars {}..{}  X={all:?}  U={u:?}  B={bars:?}",
                    x.start + 1,
                    x.end + 1
                ));
                rows.push(json!({
                    "start": x.start + 1,
                    "end": x.end + 1,
                    "X": all,
                    "U": u,
                    "B": bars,
                }));
            }
            Answer::new(
                "boycotts",
                json!({ "barred": b.to_string() }),
                json!(rows),
                lines(&text),
            )
        }
        Command::Natco { barred } => {
            let b = parse_barred(barred)?;
            let r = is_nat_co(&b);
            let failed: Vec<&str> = r.failed_conditions.iter().map(|c| c.id()).collect();
            let mut text = r.verdict.to_string();
            if !failed.is_empty() {
                text.push_str(&format!("\nfailed: {}", failed.join(", ")));
            }
            Answer::new(
                "natco",
                json!({ "barred": b.to_string() }),
                json!({
                    "natco": r.verdict,
                    "boycott_count": r.boycott_count,
                    "failed_conditions": failed,
                }),
                text,
            )
        }
        Command::Enumerate(Enumerate::Natco { n }) => {
            let lengths: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (3..=7).collect(),
            };
            let mut out = Vec::new();
            for n in lengths {
                out.extend(strings(&enumerate_nat_co(n)?));
            }
            Answer::new(
                "enumerate natco",
                json!({ "n": n }),
                json!({ "count": out.len(), "patterns": out }),
                lines(&out),
            )
        }
        Command::Enumerate(Enumerate::Covinc { max_n }) => {
            let out = strings(&enumerate_coincidental_vincular(*max_n)?);
            Answer::new(
                "enumerate covinc",
                json!({ "max_n": max_n }),
                json!({ "count": out.len(), "patterns": out }),
                lines(&out),
            )
        }
        Command::Verify {
            barred,
            vincular,
            max_n,
        } => {
            let bs = barred
                .iter()
                .map(|t| parse_barred(t))
                .collect::<permpat::Result<Vec<_>>>()?;
            let vs = vincular
                .iter()
                .map(|t| parse_vincular(t))
                .collect::<permpat::Result<Vec<_>>>()?;
            let r = verify_coincidence(&bs, &vs, *max_n, &config)?;
            let text = match (&r.witness, r.witness_side) {
                (Some(w), Some(side)) => {
                    format!(
                        "COUNTEREXAMPLE {w} (length {}, avoids the {} side only)",
                        w.len(),
                        side.as_str()
                    )
                }
                _ => format!("EQUAL up to length {max_n}"),
            };
            let mut answer = Answer::new(
                "verify",
                json!({
                    "barred": strings(&bs),
                    "vincular": strings(&vs),
                    "max_n": max_n,
                    "semantics": cli.semantics.as_str(),
                }),
                json!({
                    "status": if r.is_equal() { "equal" } else { "counterexample" },
                    "bound": r.bound,
                    "witness": r.witness.as_ref().map(|w| w.to_string()),
                    "witness_side": r.witness_side.map(|s| s.as_str()),
                }),
                text,
            );
            if !r.is_equal() {
                answer.exit = EXIT_COUNTEREXAMPLE;
            }
            answer
        }
        Command::Tables { which } => {
            let kind = TableKind::from_number(*which)?;
            let (result, text) = match emit_table(kind) {
                Table::Census(c) => {
                    let mut text: Vec<String> = c
                        .cells
                        .iter()
                        .map(|((n, bars), count)| format!("n={n}\tbars={bars}\t{count}"))
                        .collect();
                    text.push(format!("total\t{}", c.total()));
                    let cells: Vec<Value> = c
                        .cells
                        .iter()
                        .map(|((n, bars), count)| json!({ "n": n, "bars": bars, "count": count }))
                        .collect();
                    (json!({ "cells": cells, "total": c.total() }), text)
                }
                Table::Samples(cells) => {
                    let text = cells
                        .iter()
                        .map(|((n, bars), b)| format!("n={n}\tbars={bars}\t{b}"))
                        .collect();
                    let rows: Vec<Value> = cells
                        .iter()
                        .map(|((n, bars), b)| json!({ "n": n, "bars": bars, "pattern": b.to_string() }))
                        .collect();
                    (json!(rows), text)
                }
                Table::Coincidental(groups) => {
                    let text = groups
                        .iter()
                        .map(|(n, vs)| format!("n={n}\t{}", strings(vs).join(" ")))
                        .collect();
                    let rows: Vec<Value> = groups
                        .iter()
                        .map(|(n, vs)| json!({ "n": n, "patterns": strings(vs) }))
                        .collect();
                    (json!(rows), text)
                }
            };
            Answer::new("tables", json!({ "which": which }), result, lines(&text))
        }
    };
    Ok(answer)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(answer) => {
            if cli.json {
                let out = json!({
                    "command": answer.command,
                    "input": answer.input,
                    "result": answer.result,
                    "elapsed_ms": start.elapsed().as_millis() as u64,
                });
                println!("{out}");
            } else if !answer.text.is_empty() {
                println!("{}", answer.text);
            }
            ExitCode::from(answer.exit)
        }
        Err(e) => {
            eprintln!("permpat: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            })
        }
    }
}
