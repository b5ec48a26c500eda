//! Replays the checked-in fuzz seed corpora through the fuzz targets'
//! assertions.

use std::fs;
use std::path::{Path, PathBuf};

use proptest::prelude::*;
use triplewise::ordering::alternatives_in;
use triplewise::profile_file::{parse_lenient, parse_profile_file, render_profile_file};
use triplewise::{parse_ordering, AlternativeSet};

fn ordering_target(text: &str) {
    let alts = AlternativeSet::from_names(["x", "y", "z"]).unwrap();
    if let Ok(o) = parse_ordering(text, &alts) {
        let shown = o.display(&alts).to_string();
        assert_eq!(parse_ordering(&shown, &alts).unwrap(), o, "{text:?}");
    }
    if let Ok(inferred) = alternatives_in(text) {
        let o = parse_ordering(text, &inferred).expect("inferred alternatives parse");
        assert_eq!(o.len(), inferred.len());
    }
}

fn profile_target(text: &str) {
    let strict = parse_profile_file(text);
    let (lenient, errors) = parse_lenient(text);
    if let Ok(file) = &strict {
        assert!(errors.is_empty());
        assert_eq!(lenient.as_ref().map(|f| &f.profile), Some(&file.profile));
        let again = parse_profile_file(&render_profile_file(&file.profile)).unwrap();
        assert_eq!(again.profile, file.profile);
    }
}

fn corpus(target: &str) -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
}

fn replay(target: &str, run: fn(&str)) {
    let files = corpus(target);
    assert!(!files.is_empty(), "{target} has no seeds");
    for f in files {
        let bytes = fs::read(&f).unwrap();
        if let Ok(text) = std::str::from_utf8(&bytes) {
            run(text);
        }
    }
}

#[test]
fn parse_ordering_seeds() {
    replay("parse_ordering", ordering_target);
}

#[test]
fn parse_profile_file_seeds() {
    replay("parse_profile_file", profile_target);
}

proptest! {
    #[test]
    fn ordering_target_holds(s in "[xyzq ,>=]{0,12}") {
        ordering_target(&s);
    }

    #[test]
    fn profile_target_holds(lines in prop::collection::vec(
        "(#.*|alternatives: [xyz ]{0,8}|[0-9-]{0,2}: ?[xyz>= ]{0,8}|\u{feff}|)", 0..8)) {
        profile_target(&lines.join("\n"));
        profile_target(&lines.join("\r\n"));
    }
}
