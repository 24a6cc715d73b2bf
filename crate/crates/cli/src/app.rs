//! Subcommand dispatch. Exit codes: 0 success, 1 mathematical negative,
//! 2 input error. Results go to `out`, diagnostics to `err`.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand};
use downup_core::derivation::{apply_deriv, check_deriv, decompose, hh1_coords};
use downup_core::morphism::{
    apply_images, check_endo, check_surjective_unlocalized, classify, compose, invert,
    ClassifiedEndo, GenImages, Surjectivity,
};
use downup_core::{Case, Element, Error};

use crate::files::{self, format_morphism, FileError};
use crate::parse::{InputError, Session};

pub const SUCCESS: i32 = 0;
pub const NEGATIVE: i32 = 1;
pub const INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "downup",
    version,
    about = "Exact arithmetic in localized down-up algebras"
)]
struct Cli {
    /// 1: generic r, s; 2: r = q, s = 1/q.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    case: u8,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normalize an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Endomorphisms given by a morphism file.
    #[command(subcommand)]
    Endo(EndoCmd),
    /// Derivations given by a derivation file.
    #[command(subcommand)]
    Deriv(DerivCmd),
    /// Is the expression central?
    Center {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Bounded surjectivity check for an endomorphism of the unlocalized algebra.
    Surjective {
        #[arg(long)]
        file: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Read expressions and `let name = expr` bindings from stdin.
    Repl,
}

#[derive(Subcommand, Debug)]
enum EndoCmd {
    Check {
        #[arg(long)]
        file: String,
        /// Check only the defining relations, not invertibility of x and y images.
        #[arg(long)]
        unlocalized: bool,
    },
    Classify {
        #[arg(long)]
        file: String,
    },
    Apply {
        #[arg(long)]
        file: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Prints the morphism `file ∘ with`.
    Compose {
        #[arg(long)]
        file: String,
        #[arg(long)]
        with: String,
    },
    Invert {
        #[arg(long)]
        file: String,
    },
}

#[derive(Subcommand, Debug)]
enum DerivCmd {
    Check {
        #[arg(long)]
        file: String,
    },
    Apply {
        #[arg(long)]
        file: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    Decompose {
        #[arg(long)]
        file: String,
    },
    Hh1 {
        #[arg(long)]
        file: String,
    },
}

/// Outcome of a command body; errors carry their exit code.
enum Fail {
    Input(String),
    Negative(String),
}

impl From<InputError> for Fail {
    fn from(e: InputError) -> Fail {
        Fail::Input(e.to_string())
    }
}

impl From<FileError> for Fail {
    fn from(e: FileError) -> Fail {
        Fail::Input(e.to_string())
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        match e {
            Error::NotAutomorphism { .. }
            | Error::NotClassifiable(_)
            | Error::NotADerivation(_) => Fail::Negative(e.to_string()),
            other => Fail::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(String, i32), Fail>;

fn ok(text: impl Into<String>) -> Outcome {
    Ok((text.into(), SUCCESS))
}

fn negative(text: impl Into<String>) -> Outcome {
    Ok((text.into(), NEGATIVE))
}

fn load_morphism(session: &Session, path: &str) -> Result<GenImages, Fail> {
    Ok(files::parse_morphism(session, &files::read(path)?)?)
}

fn load_classified(session: &Session, path: &str) -> Result<ClassifiedEndo, Fail> {
    let g = load_morphism(session, path)?;
    Ok(classify(session.algebra(), &g)?)
}

fn describe(m: &ClassifiedEndo) -> String {
    format!("# {m}\n{}", format_morphism(&m.images()))
}

fn run_endo(session: &Session, cmd: &EndoCmd) -> Outcome {
    let alg = session.algebra();
    match cmd {
        EndoCmd::Check { file, unlocalized } => {
            let g = load_morphism(session, file)?;
            if check_endo(alg, &g, !unlocalized) {
                ok("endomorphism: true")
            } else {
                negative("endomorphism: false")
            }
        }
        EndoCmd::Classify { file } => ok(load_classified(session, file)?.to_string()),
        EndoCmd::Apply { file, expr } => {
            let g = load_morphism(session, file)?;
            if !check_endo(alg, &g, true) {
                return negative("NotAnEndomorphism: images violate the defining relations or x, y do not map to units");
            }
            let e = session.eval_str(expr)?;
            ok(apply_images(alg, &g, &e)?.to_string())
        }
        EndoCmd::Compose { file, with } => {
            let f = load_classified(session, file)?;
            let g = load_classified(session, with)?;
            ok(describe(&compose(alg, &f, &g)?).trim_end())
        }
        EndoCmd::Invert { file } => {
            let m = load_classified(session, file)?;
            ok(describe(&invert(alg, &m)?).trim_end())
        }
    }
}

fn run_deriv(session: &Session, cmd: &DerivCmd) -> Outcome {
    let alg = session.algebra();
    let (DerivCmd::Check { file }
    | DerivCmd::Apply { file, .. }
    | DerivCmd::Decompose { file }
    | DerivCmd::Hh1 { file }) = cmd;
    let spec = files::parse_derivation(session, &files::read(file)?)?;
    let valid = check_deriv(alg, &spec);
    if let DerivCmd::Check { .. } = cmd {
        return if valid {
            ok("derivation: true")
        } else {
            negative("derivation: false")
        };
    }
    if !valid {
        return negative("NotADerivation: the values on d and u violate the defining relations");
    }
    match cmd {
        DerivCmd::Apply { expr, .. } => {
            let e = session.eval_str(expr)?;
            ok(apply_deriv(alg, &spec, &e).to_string())
        }
        DerivCmd::Decompose { .. } => {
            let d = decompose(alg, &spec)?;
            ok(format!("t = {}\nmu1 = {}\nmu2 = {}", d.t, d.mu1, d.mu2))
        }
        _ => {
            let (m1, m2) = hh1_coords(alg, &spec)?;
            ok(format!("mu1 = {m1}, mu2 = {m2}"))
        }
    }
}

fn run_command(session: &Session, cmd: &Cmd) -> Outcome {
    let alg = session.algebra();
    match cmd {
        Cmd::Eval { expr } => ok(session.eval_str(expr)?.to_string()),
        Cmd::Endo(c) => run_endo(session, c),
        Cmd::Deriv(c) => run_deriv(session, c),
        Cmd::Center { expr } => {
            if alg.is_central(&session.eval_str(expr)?) {
                ok("central: true")
            } else {
                negative("central: false")
            }
        }
        Cmd::Surjective { file, bound } => {
            let g = load_morphism(session, file)?;
            if !check_endo(alg, &g, false) {
                return negative("NotAnEndomorphism: images violate the defining relations");
            }
            match check_surjective_unlocalized(alg, &g, *bound) {
                Surjectivity::NotSurjectiveAtBound => {
                    negative(Surjectivity::NotSurjectiveAtBound.to_string())
                }
                v => ok(v.to_string()),
            }
        }
        Cmd::Repl => unreachable!("handled by dispatch"),
    }
}

fn valid_binding_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_alphanumeric() || c == '_')
        && !name.chars().all(|c| "druxyzsq".contains(c))
}

/// One REPL line; `None` means quit.
fn repl_line(session: &mut Session, line: &str) -> Option<Result<String, String>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Some(Ok(String::new()));
    }
    if line == ":quit" || line == ":q" {
        return None;
    }
    if let Some(rest) = line.strip_prefix("let ") {
        let Some((name, expr)) = rest.split_once('=') else {
            return Some(Err("expected 'let <name> = <expr>'".into()));
        };
        let name = name.trim();
        if !valid_binding_name(name) {
            return Some(Err(format!("'{name}' cannot be bound")));
        }
        return Some(match session.eval_str(expr) {
            Ok(v) => {
                let text = format!("{name} = {v}");
                session.bind(name, v);
                Ok(text)
            }
            Err(e) => Err(e.to_string()),
        });
    }
    Some(
        session
            .eval_str(line)
            .map(|v: Element| v.to_string())
            .map_err(|e| e.to_string()),
    )
}

fn repl(
    session: &mut Session,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    for line in input.lines() {
        let Ok(line) = line else {
            let _ = writeln!(err, "error: cannot read input");
            return INPUT_ERROR;
        };
        match repl_line(session, &line) {
            None => break,
            Some(Ok(text)) if text.is_empty() => {}
            Some(Ok(text)) => {
                let _ = writeln!(out, "{text}");
            }
            Some(Err(msg)) => {
                let _ = writeln!(err, "error: {msg}");
            }
        }
    }
    SUCCESS
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn dispatch<I, T>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { SUCCESS };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let case = if cli.case == 2 { Case::Two } else { Case::One };
    let mut session = Session::new(case);
    if let Cmd::Repl = cli.cmd {
        return repl(&mut session, input, out, err);
    }
    match run_command(&session, &cli.cmd) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(Fail::Negative(msg)) => {
            let _ = writeln!(out, "{msg}");
            NEGATIVE
        }
        Err(Fail::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            INPUT_ERROR
        }
    }
}
