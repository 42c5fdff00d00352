use std::path::PathBuf;

use forestnet::io::{parse_network, print_network};

fn golden_files() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "net"))
        .collect();
    files.sort();
    files
}

#[test]
fn corpus_has_fifty_files() {
    assert_eq!(golden_files().len(), 50);
}

#[test]
fn golden_files_round_trip_byte_for_byte() {
    for f in golden_files() {
        let text = std::fs::read_to_string(&f).unwrap();
        let n = parse_network(&text).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        assert_eq!(print_network(&n), text, "{}", f.display());
    }
}

#[test]
fn shuffled_statements_print_canonically() {
    for f in golden_files() {
        let text = std::fs::read_to_string(&f).unwrap();
        let mut lines: Vec<&str> = text.lines().collect();
        lines.reverse();
        let shuffled = format!("# reversed\n\n{}\n", lines.join("\n"));
        assert_eq!(print_network(&parse_network(&shuffled).unwrap()), text, "{}", f.display());
    }
}

#[test]
fn corpus_covers_several_shapes() {
    let nets: Vec<_> =
        golden_files().iter().map(|f| parse_network(&std::fs::read_to_string(f).unwrap()).unwrap()).collect();
    assert!(nets.iter().any(|n| n.root_count() == 1 && n.hybrids().is_empty()));
    assert!(nets.iter().any(|n| n.root_count() >= 3));
    assert!(nets.iter().any(|n| n.is_arboreal() && n.root_count() >= 2));
    assert!(nets.iter().any(|n| !n.is_binary()));
}
