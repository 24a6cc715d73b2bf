//! Runs the `downup` binary on each `golden/<name>.args` (one argument per
//! line, `{dir}` standing for the golden directory, optional
//! `<name>.stdin`) and compares against `<name>.expected`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn cases() -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir())
        .expect("golden directory")
        .filter_map(|e| {
            let p = e.ok()?.path();
            if p.extension()? != "args" {
                return None;
            }
            Some(p.file_stem()?.to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
}

/// The observed transcript for one case.
pub fn run(name: &str) -> String {
    let d = dir();
    let dir_text = d.to_string_lossy().into_owned();
    let args: Vec<String> = fs::read_to_string(d.join(format!("{name}.args")))
        .expect("args file")
        .lines()
        .map(|l| l.replace("{dir}", &dir_text))
        .collect();
    let stdin = fs::read(d.join(format!("{name}.stdin"))).unwrap_or_default();
    let mut child = Command::new(env!("CARGO_BIN_EXE_downup"))
        .args(&args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn downup");
    child.stdin.take().unwrap().write_all(&stdin).unwrap();
    let out = child.wait_with_output().expect("downup output");
    let text = |b: &[u8]| String::from_utf8_lossy(b).replace(&dir_text, "{dir}");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        text(&out.stdout),
        text(&out.stderr)
    )
}

/// Compares every case; with `DOWNUP_BLESS=1` missing expectations are written instead.
pub fn check_all() -> Vec<(String, Result<(), String>)> {
    let bless = std::env::var("DOWNUP_BLESS").is_ok_and(|v| v == "1");
    cases()
        .into_iter()
        .map(|name| {
            let got = run(&name);
            let path = dir().join(format!("{name}.expected"));
            let verdict = match fs::read_to_string(&path) {
                Ok(want) if want == got => Ok(()),
                Ok(want) => Err(format!("expected:\n{want}\ngot:\n{got}")),
                Err(_) if bless => {
                    fs::write(&path, &got).expect("write expectation");
                    Ok(())
                }
                Err(_) => Err(format!("no expectation pinned; got:\n{got}")),
            };
            (name, verdict)
        })
        .collect()
}
