//! Byte-for-byte CLI reports. Regenerate with `UPDATE_GOLDEN=1 cargo test --test golden`.

mod common;

use std::path::PathBuf;

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

#[test]
fn cli_reports_match_goldens() {
    let bless = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, args) in common::golden_cases() {
        let (code, out) = ringlogic::cli::execute(args.iter().copied());
        let text = out;
        if bless {
            std::fs::create_dir_all(path(name).parent().unwrap()).unwrap();
            std::fs::write(path(name), &text).unwrap();
            std::fs::write(path(name).with_extension("code"), format!("{code}\n")).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(path(name)).unwrap_or_default();
        let want_code = std::fs::read_to_string(path(name).with_extension("code")).unwrap_or_default();
        if text != want || format!("{code}\n") != want_code {
            stale.push(name);
        }
    }
    assert!(stale.is_empty(), "reports differ from goldens: {stale:?}");
}

#[test]
fn every_subcommand_has_a_golden() {
    let covered: std::collections::BTreeSet<&str> = common::golden_cases()
        .iter()
        .filter_map(|(_, args)| args.iter().find(|a| !a.starts_with("--")).copied())
        .collect();
    for sub in [
        "homs", "exists", "pushout", "colimit", "ideal", "radical", "closure", "crad", "gc-check", "sat", "classify",
        "resultant", "cover", "diamor", "rprod", "purity", "member",
    ] {
        assert!(covered.contains(sub), "{sub}");
    }
}
