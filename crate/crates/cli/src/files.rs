//! Morphism files (`d = ...`, `u = ...`) and derivation files
//! (`D(d) = ...`, `D(u) = ...`). Blank lines and `#` comments are ignored.

use std::fmt;

use downup_core::derivation::DerivSpec;
use downup_core::morphism::GenImages;
use downup_core::Element;

use crate::parse::{InputError, Session};

#[derive(Debug)]
pub enum FileError {
    Io(String, std::io::Error),
    Format { line: usize, msg: String },
    Expr { line: usize, err: InputError },
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            FileError::Format { line, msg } => write!(f, "line {line}: {msg}"),
            FileError::Expr { line, err } => write!(f, "line {line}: {err}"),
        }
    }
}

impl std::error::Error for FileError {}

/// Reads `lhs = expr` lines; `keys` are the accepted left-hand sides with
/// whitespace removed.
fn read_pairs(session: &Session, text: &str, keys: [&str; 2]) -> Result<[Element; 2], FileError> {
    let mut found: [Option<Element>; 2] = [None, None];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (lhs, rhs) = content.split_once('=').ok_or_else(|| FileError::Format {
            line,
            msg: "expected '<lhs> = <expr>'".into(),
        })?;
        let key: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        let slot = keys
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| FileError::Format {
                line,
                msg: format!("left-hand side must be {} or {}", keys[0], keys[1]),
            })?;
        if found[slot].is_some() {
            return Err(FileError::Format {
                line,
                msg: format!("{} given twice", keys[slot]),
            });
        }
        let value = session
            .eval_str(rhs)
            .map_err(|err| FileError::Expr { line, err })?;
        found[slot] = Some(value);
    }
    match found {
        [Some(a), Some(b)] => Ok([a, b]),
        [a, _] => Err(FileError::Format {
            line: text.lines().count(),
            msg: format!("missing {}", keys[if a.is_none() { 0 } else { 1 }]),
        }),
    }
}

pub fn parse_morphism(session: &Session, text: &str) -> Result<GenImages, FileError> {
    let [d, u] = read_pairs(session, text, ["d", "u"])?;
    Ok(GenImages::new(d, u))
}

pub fn parse_derivation(session: &Session, text: &str) -> Result<DerivSpec, FileError> {
    let [dd, du] = read_pairs(session, text, ["D(d)", "D(u)"])?;
    Ok(DerivSpec::new(dd, du))
}

pub fn read(path: &str) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|e| FileError::Io(path.to_string(), e))
}

/// Text form of generator images, readable back by [`parse_morphism`].
pub fn format_morphism(g: &GenImages) -> String {
    format!("d = {}\nu = {}\n", g.d, g.u)
}
