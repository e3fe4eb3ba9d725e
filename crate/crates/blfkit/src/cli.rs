//! Command-line driver. [`run`] does all the work so tests can call it in process.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use blfkit_core::blf::{family_nonisomorphic, family_torelli, Verdict};
use blfkit_core::equivalence::{search_equivalent, Budget};
use blfkit_core::{CycleSystem, Error, SurfaceModel};
use clap::{Parser, Subcommand, ValueEnum};

use crate::doc::{self, DocError, Parsed};
use crate::report::{Invariants, Search, Validation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "blfkit", version, about = "Cycle systems of broken Lefschetz fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the monodromy lies in the kernel of the capping map.
    Validate {
        file: PathBuf,
        /// Run the exact kernel test, not just the homology obstruction.
        #[arg(long)]
        exact: bool,
    },
    /// Print numerical invariants as JSON.
    Invariants { file: PathBuf },
    /// Apply one Hurwitz move and print the resulting document.
    Move {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        /// 1-based position for elementary transformations.
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        inverse: bool,
        /// Twist word for simultaneous action, e.g. `t(a1) t(b2)^-1`.
        #[arg(long)]
        word: Option<String>,
    },
    /// Bounded search for a sequence of moves relating two systems.
    Search {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 20_000)]
        states: usize,
    },
    /// Print a member of a built-in family.
    Family {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run the built-in checks.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Elem,
    Rot,
    Simact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Torelli,
    Nonisomorphic,
}

/// A failure with its exit code.
struct Fail(i32, String);

impl From<DocError> for Fail {
    fn from(e: DocError) -> Self {
        Fail(EXIT_USAGE, e.to_string())
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BadParams(_) | Error::IndexOutOfRange { .. } | Error::EmptyCycles => EXIT_USAGE,
            Error::NotInDomain => EXIT_DOMAIN,
            _ => EXIT_INTERNAL,
        };
        Fail(code, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    let mut s = String::new();
    let r = if path == Path::new("-") {
        io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    r.map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn load(path: &Path) -> Result<Parsed, Fail> {
    doc::parse(&read(path)?).map_err(|e| Fail(EXIT_USAGE, format!("{}:{e}", path.display())))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// Size the rayon pool from BLFKIT_THREADS, once per process.
fn configure_threads() -> Result<(), Fail> {
    let Ok(v) = std::env::var("BLFKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Fail(EXIT_USAGE, format!("BLFKIT_THREADS must be a positive integer, got `{v}`")))?;
    // Fails only if the pool already exists, which is fine.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn execute(cmd: Command) -> Result<(i32, String), Fail> {
    match cmd {
        Command::Validate { file, exact } => {
            let p = load(&file)?;
            let r = p.system.validate(exact);
            let code = match r.verdict {
                Verdict::Valid => EXIT_OK,
                Verdict::Invalid(_) => EXIT_INVALID,
                Verdict::DomainFail => EXIT_DOMAIN,
            };
            Ok((code, json(&Validation::from(&r))))
        }
        Command::Invariants { file } => {
            let p = load(&file)?;
            Ok((EXIT_OK, json(&Invariants::of(&p.system))))
        }
        Command::Move { file, op, index, inverse, word } => {
            let p = load(&file)?;
            let w = &p.system;
            let out = match op {
                Op::Elem => {
                    let i = index.ok_or_else(|| Fail(EXIT_USAGE, "--op=elem needs --index".into()))?;
                    w.elementary_transformation(i, inverse)?
                }
                Op::Rot if inverse => w.rotation_inverse()?,
                Op::Rot => w.rotation()?,
                Op::Simact => {
                    let text = word.ok_or_else(|| Fail(EXIT_USAGE, "--op=simact needs --word".into()))?;
                    let mut h = doc::parse_word(&text, &p)
                        .map_err(|e| Fail(EXIT_USAGE, format!("--word: {e}")))?;
                    if inverse {
                        h = h.inverse();
                    }
                    w.simultaneous_action(&h)?
                }
            };
            Ok((EXIT_OK, doc::print(&doc::from_system(&out, p.doc.metadata.clone()))))
        }
        Command::Search { file1, file2, depth, states } => {
            let (p1, p2) = (load(&file1)?, load(&file2)?);
            let g = p1.system.genus();
            if p2.system.genus() != g {
                return Err(Error::ModelMismatch { left: g, right: p2.system.genus() }.into());
            }
            let budget = Budget::standard(g, depth, states);
            let names = SurfaceModel::standard(g, 0)?.generator_names();
            let r = search_equivalent(&p1.system, &p2.system, &budget)?;
            Ok((EXIT_OK, json(&Search::of(&r, &names))))
        }
        Command::Family { kind, genus, n } => {
            let w: CycleSystem = match kind {
                Kind::Torelli => family_torelli(genus, n)?,
                Kind::Nonisomorphic => family_nonisomorphic(genus, n)?,
            };
            let name = match kind {
                Kind::Torelli => "torelli",
                Kind::Nonisomorphic => "nonisomorphic",
            };
            let meta = vec![("family".to_string(), format!("{name} genus={genus} n={n}"))];
            Ok((EXIT_OK, doc::print(&doc::from_system(&w, meta))))
        }
        Command::Selftest => {
            let checks = crate::selftest::run_all();
            let mut out = String::new();
            for c in &checks {
                out.push_str(&c.line());
                out.push('\n');
            }
            let ok = checks.iter().all(|c| c.pass);
            Ok((if ok { EXIT_OK } else { EXIT_INTERNAL }, out))
        }
    }
}

/// Run with the given arguments (program name first); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = configure_threads().and_then(|()| {
        std::panic::catch_unwind(|| execute(cli.command))
            .unwrap_or_else(|_| Err(Fail(EXIT_INTERNAL, "internal error".into())))
    });
    match result {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "blfkit: {msg}");
            code
        }
    }
}
