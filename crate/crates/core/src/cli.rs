//! Command-line front end.
//!
//! Exit codes: 0 for sat / entailed / success, 1 for unsat / not entailed,
//! 2 for any error. Models go to stdout, diagnostics and statistics to
//! stderr.

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::asp::emit_text;
use crate::model::{ABoxRepresentation, Fact, KnowledgeBase, Vocabulary};
use crate::normalize::normalize;
use crate::oracle::{enumerate_bounded_models_bruteforce, BruteForceModels, ModelChecker};
use crate::parser::{parse_axiom, parse_kb, print_kb};
use crate::reasoner::{axiomatize_bm, Models, Reasoner};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    /// One fact per line, each model closed by a `---` line.
    #[default]
    Facts,
    /// One JSON object per model.
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Solver {
    /// Solve with the built-in engine.
    #[default]
    Internal,
    /// Print the program instead of solving it.
    EmitOnly,
}

#[derive(Debug, Clone, clap::Args)]
struct SolveArgs {
    /// Knowledge base file (`-` for stdin).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Do not check models against the knowledge base.
    #[arg(long)]
    no_verify: bool,
    #[arg(long, value_enum, default_value_t)]
    solver: Solver,
    /// Enumerate candidate interpretations directly instead of compiling
    /// (small vocabularies only; the cap is read from
    /// BOUNDED_DL_BRUTEFORCE_CAP).
    #[arg(long, conflicts_with = "solver")]
    oracle: bool,
    /// Print solver statistics to stderr.
    #[arg(long)]
    stats: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide bounded-model satisfiability; prints a model when there is one.
    CheckSat(SolveArgs),
    /// Print bounded models.
    Models {
        #[command(flatten)]
        args: SolveArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
    /// Decide bounded-model entailment; prints a countermodel when it fails.
    Entails {
        #[command(flatten)]
        args: SolveArgs,
        /// Axiom over the vocabulary of the knowledge base.
        #[arg(long)]
        axiom: String,
    },
    /// Print the answer set program.
    Translate { file: PathBuf },
    /// Print the normalized knowledge base.
    Normalize { file: PathBuf },
    /// Print the knowledge base with the axioms fixing the domain to its
    /// individuals.
    Axiomatize { file: PathBuf },
}

#[derive(Debug, Parser)]
#[command(
    name = "bounded-dl",
    version,
    about = "Bounded-model reasoning for SROIQ knowledge bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn read_kb(path: &PathBuf) -> std::result::Result<KnowledgeBase, String> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("<stdin>: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_kb(&text).map_err(|e| format!("{}:{e}", path.display()))
}

/// Facts of a model, one per line, in the syntax of `.kb` files.
pub fn format_facts(model: &ABoxRepresentation) -> String {
    let mut out = String::new();
    for f in model.iter() {
        out.push_str(&format!("{f}.\n"));
    }
    out.push_str("---\n");
    out
}

/// `{"concepts": {name: [ind]}, "roles": {name: [[ind, ind]]}}` over every
/// name of `vocab`.
pub fn format_json(model: &ABoxRepresentation, vocab: &Vocabulary) -> String {
    let mut concepts: Map<String, Value> = vocab
        .concepts
        .iter()
        .map(|c| (c.clone(), json!([])))
        .collect();
    let mut roles: Map<String, Value> =
        vocab.roles.iter().map(|r| (r.clone(), json!([]))).collect();
    for f in model.iter() {
        match f {
            Fact::Concept(c, a) => push(&mut concepts, c, json!(a)),
            Fact::Role(r, a, b) => push(&mut roles, r, json!([a, b])),
        }
    }
    let obj = json!({ "concepts": concepts, "roles": roles });
    format!("{obj}\n")
}

fn push(map: &mut Map<String, Value>, key: &str, v: Value) {
    if let Some(Value::Array(xs)) = map.get_mut(key) {
        xs.push(v);
    }
}

struct Printer {
    format: Format,
    vocabulary: Vocabulary,
}

impl Printer {
    fn model(&self, out: &mut dyn Write, m: &ABoxRepresentation) -> io::Result<()> {
        match self.format {
            Format::Facts => out.write_all(format_facts(m).as_bytes()),
            Format::JsonLines => out.write_all(format_json(m, &self.vocabulary).as_bytes()),
        }
    }
}

enum Outcome {
    Yes,
    No,
}

/// Models from the compiled program or from the oracle.
// One lives per command, so the size gap between the variants is harmless.
#[allow(clippy::large_enum_variant)]
enum Source {
    Oracle(std::iter::Take<BruteForceModels>),
    Pipeline(Models),
}

impl Source {
    fn open(kb: &KnowledgeBase, args: &SolveArgs, limit: Option<usize>) -> Result<Self> {
        if args.oracle {
            let it = enumerate_bounded_models_bruteforce(kb)?;
            return Ok(Source::Oracle(it.take(limit.unwrap_or(usize::MAX))));
        }
        let reasoner = if args.no_verify {
            Reasoner::unverified()
        } else {
            Reasoner::new()
        };
        Ok(Source::Pipeline(reasoner.enumerate_models(kb, limit)?))
    }

    fn report(&self, args: &SolveArgs, err: &mut dyn Write) {
        if let (true, Source::Pipeline(m)) = (args.stats, self) {
            let _ = writeln!(err, "stats: {}", m.stats());
        }
    }
}

impl Iterator for Source {
    type Item = Result<ABoxRepresentation>;

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            Source::Oracle(it) => it.next().map(Ok),
            Source::Pipeline(it) => it.next(),
        }
    }
}

fn emit_program(kb: &KnowledgeBase, out: &mut dyn Write) -> Result<()> {
    let t = Reasoner::new().compile(kb)?;
    let _ = out.write_all(emit_text(&t.program).as_bytes());
    Ok(())
}

fn execute(
    cmd: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<Outcome, String> {
    let fail = |e: crate::Error| e.to_string();
    match cmd {
        Command::CheckSat(args) => {
            let kb = read_kb(&args.file)?;
            if args.solver == Solver::EmitOnly {
                emit_program(&kb, out).map_err(fail)?;
                return Ok(Outcome::Yes);
            }
            let printer = Printer {
                format: args.format,
                vocabulary: kb.vocabulary.clone(),
            };
            let mut source = Source::open(&kb, &args, Some(1)).map_err(fail)?;
            let first = source.next().transpose().map_err(fail)?;
            source.report(&args, err);
            match first {
                Some(m) => {
                    let _ = writeln!(out, "sat");
                    let _ = printer.model(out, &m);
                    Ok(Outcome::Yes)
                }
                None => {
                    let _ = writeln!(out, "unsat");
                    Ok(Outcome::No)
                }
            }
        }
        Command::Models { args, limit } => {
            let kb = read_kb(&args.file)?;
            if args.solver == Solver::EmitOnly {
                emit_program(&kb, out).map_err(fail)?;
                return Ok(Outcome::Yes);
            }
            let printer = Printer {
                format: args.format,
                vocabulary: kb.vocabulary.clone(),
            };
            let limit = limit.map(|n| n as usize);
            let mut source = Source::open(&kb, &args, limit).map_err(fail)?;
            for m in source.by_ref() {
                let m = m.map_err(fail)?;
                printer.model(out, &m).map_err(|e| e.to_string())?;
            }
            source.report(&args, err);
            Ok(Outcome::Yes)
        }
        Command::Entails { args, axiom } => {
            let kb = read_kb(&args.file)?;
            let ax = parse_axiom(&axiom, &kb.vocabulary).map_err(|e| format!("--axiom: {e}"))?;
            if args.solver == Solver::EmitOnly {
                emit_program(&kb, out).map_err(fail)?;
                return Ok(Outcome::Yes);
            }
            let query = ModelChecker::for_axioms([&ax], &kb.vocabulary).map_err(fail)?;
            let printer = Printer {
                format: args.format,
                vocabulary: kb.vocabulary.clone(),
            };
            let mut source = Source::open(&kb, &args, None).map_err(fail)?;
            for m in source.by_ref() {
                let m = m.map_err(fail)?;
                if !query.is_model_abox(&m).map_err(fail)? {
                    source.report(&args, err);
                    let _ = writeln!(out, "not entailed");
                    let _ = printer.model(out, &m);
                    return Ok(Outcome::No);
                }
            }
            source.report(&args, err);
            let _ = writeln!(out, "entailed");
            Ok(Outcome::Yes)
        }
        Command::Translate { file } => {
            let kb = read_kb(&file)?;
            emit_program(&kb, out).map_err(fail)?;
            Ok(Outcome::Yes)
        }
        Command::Normalize { file } => {
            let kb = read_kb(&file)?;
            let _ = write!(out, "{}", normalize(&kb));
            Ok(Outcome::Yes)
        }
        Command::Axiomatize { file } => {
            let kb = read_kb(&file)?;
            let bm = axiomatize_bm(&kb).map_err(fail)?;
            let _ = out.write_all(print_kb(&bm).as_bytes());
            Ok(Outcome::Yes)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(Outcome::Yes) => 0,
        Ok(Outcome::No) => 1,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
