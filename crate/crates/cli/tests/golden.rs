#[path = "support/golden.rs"]
mod golden;

#[test]
fn cli_matches_pinned_transcripts() {
    let failures: Vec<String> = golden::check_all()
        .into_iter()
        .filter_map(|(name, r)| r.err().map(|e| format!("[{name}]\n{e}")))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
