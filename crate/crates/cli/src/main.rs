use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use grigorchuk::bench::run_bench;
use grigorchuk::conjugacy::build_conj_tree;
use grigorchuk::norm::{norm, norm_approx};
use grigorchuk::selftest::run_selftest;
use grigorchuk::splitting::{split, split_shifted};
use grigorchuk::word_problem::{build_wp_tree, is_trivial};
use grigorchuk::{CosetId, Engine, Error, Parity, Word};

/// Word problem, splitting and conjugacy in the first Grigorchuk group.
#[derive(Parser)]
#[command(name = "grig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced form of a word.
    Reduce { word: String },
    /// Decide whether a word is trivial.
    Wp {
        word: String,
        /// Write the decision tree as JSON.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Write the decision tree as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the sections of a word (of `wa` when the word is odd).
    Split { word: String },
    /// Print the weighted length of a word.
    Norm {
        word: String,
        /// Print the exact value as c0 + c1α + c2α².
        #[arg(long)]
        exact: bool,
    },
    /// Print the K-coset of a word, or the whole quotient.
    Coset {
        word: Option<String>,
        /// Write the lift table as CSV (i,j,lifted).
        #[arg(long)]
        lift_csv: Option<PathBuf>,
    },
    /// Decide whether two words are conjugate.
    Conj {
        u: String,
        v: String,
        /// Write the decision tree as JSON.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Write the decision tree as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the built-in consistency checks.
    Selftest {
        #[arg(long)]
        json: bool,
    },
    /// Time the conjugacy decision on random pairs and fit growth exponents.
    Bench {
        #[arg(long, default_value_t = 1000)]
        max_len: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// CSV output (n,tree_size,visited,millis).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Parse(Error),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. } => Failure::Parse(e),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Other(e.to_string())
    }
}

fn word(s: &str) -> Result<Word, Failure> {
    s.parse::<Word>().map_err(Failure::Parse)
}

fn engine() -> Result<&'static Engine, Failure> {
    Ok(Engine::shared()?)
}

fn write(path: &Option<PathBuf>, contents: impl FnOnce() -> String) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, contents())?;
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Reduce { word: w } => println!("{}", word(&w)?),
        Command::Wp { word: w, tree, dot } => {
            let w = word(&w)?;
            if tree.is_some() || dot.is_some() {
                let t = build_wp_tree(&w);
                write(&tree, || t.to_json())?;
                write(&dot, || t.to_dot())?;
            }
            println!("{}", if is_trivial(&w) { "YES" } else { "NO" });
        }
        Command::Split { word: w } => {
            let w = word(&w)?;
            match w.a_parity() {
                Parity::Even => println!("{}", split(&w)?),
                Parity::Odd => println!("odd; split({w}a) = {}", split_shifted(&w)?),
            }
        }
        Command::Norm { word: w, exact } => {
            let w = word(&w)?;
            if exact {
                println!("{}", norm::<BigRational>(&w));
            } else {
                println!("{:.6}", norm_approx::<f64>(&w));
            }
        }
        Command::Coset { word: w, lift_csv } => {
            let e = engine()?;
            let q = e.quotient();
            match w {
                Some(w) => {
                    let x = q.coset_of(&word(&w)?);
                    println!("{x} ({})", q.parity(x));
                }
                None => {
                    for x in CosetId::all() {
                        println!("{x}\t{}\t{}", q.representative(x), q.parity(x));
                    }
                }
            }
            write(&lift_csv, || e.lift().to_csv())?;
        }
        Command::Conj { u, v, tree, dot } => {
            let (u, v) = (word(&u)?, word(&v)?);
            let e = engine()?;
            let q = e.q_set(&u, &v)?;
            if tree.is_some() || dot.is_some() {
                let t = build_conj_tree(e, &u, &v);
                write(&tree, || t.to_json())?;
                write(&dot, || t.to_dot())?;
            }
            println!("{}, Q = {q}", if q.is_empty() { "NO" } else { "YES" });
        }
        Command::Selftest { json } => {
            let report = run_selftest();
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            if !report.passed() {
                eprintln!("failed checks: {}", report.failed_names().join(", "));
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench { max_len, samples, seed, out } => {
            let report = run_bench(engine()?, max_len, samples, seed)?;
            write(&out, || report.to_csv())?;
            println!("records: {}", report.records.len());
            println!("tree size exponent: {:.3}", report.size_exponent);
            println!("time exponent: {:.3}", report.time_exponent);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
