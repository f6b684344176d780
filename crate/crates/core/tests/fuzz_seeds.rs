//! Replays the checked-in fuzz corpus seeds on stable. Every seed is a valid
//! input, so each must parse and survive a render/parse round trip.

use boolclass::classifier::{expand_generator_pattern, ClassIndex};
use boolclass::format::{
    parse_member_list_json, parse_member_rows_csv, parse_op_table_csv, parse_op_table_json,
    parse_rule, render_member_list_json, render_op_table_csv, render_rule,
};
use boolclass::TruthTable;
use std::fs;
use std::path::PathBuf;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .filter(|p| {
            p.file_name()
                .unwrap()
                .to_string_lossy()
                .starts_with("seed-")
        })
        .map(|p| (p.display().to_string(), fs::read(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn split(data: &[u8]) -> (u8, &str) {
    let (&first, rest) = data.split_first().expect("framed seed");
    (first, std::str::from_utf8(rest).unwrap())
}

#[test]
fn truth_table_seeds() {
    for (name, data) in seeds("parse_truth_table") {
        let (selector, text) = split(&data);
        let f = match selector % 3 {
            0 => TruthTable::parse_bits(text),
            1 => TruthTable::parse_hex(text),
            _ => TruthTable::parse_decimal(u32::from(selector / 3 % 6) + 1, text),
        }
        .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            TruthTable::parse_bits(&f.to_bit_string()).unwrap(),
            f,
            "{name}"
        );
    }
}

#[test]
fn rule_seeds() {
    for (name, data) in seeds("parse_rule") {
        let (n, text) = split(&data);
        let f = parse_rule(u32::from(n % 12), text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_rule(f.n(), &render_rule(&f)).unwrap(), f, "{name}");
    }
}

#[test]
fn op_table_csv_seeds() {
    for (name, data) in seeds("op_table_csv") {
        let (k, text) = split(&data);
        let class = ClassIndex::new(3, u64::from(k % 16) + 1).unwrap();
        let table = parse_op_table_csv(text, class).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(table.is_consistent(), "{name}");
        assert_eq!(
            parse_op_table_csv(&render_op_table_csv(&table), class).unwrap(),
            table
        );
    }
}

#[test]
fn op_table_json_seeds() {
    for (name, data) in seeds("op_table_json") {
        let table = parse_op_table_json(std::str::from_utf8(&data).unwrap())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(table.is_consistent(), "{name}");
    }
}

#[test]
fn member_csv_seeds() {
    for (name, data) in seeds("member_list_csv") {
        let (n, text) = split(&data);
        let groups = parse_member_rows_csv(u32::from(n % 8) + 1, text)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(!groups.is_empty(), "{name}");
    }
}

#[test]
fn member_json_seeds() {
    for (name, data) in seeds("member_list_json") {
        let list = parse_member_list_json(std::str::from_utf8(&data).unwrap())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            parse_member_list_json(&render_member_list_json(&list)).unwrap(),
            list
        );
    }
}

#[test]
fn pattern_seeds() {
    for (name, data) in seeds("generator_pattern") {
        let text = std::str::from_utf8(&data).unwrap();
        let members = expand_generator_pattern(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(members.len(), 1 << text.matches('-').count(), "{name}");
    }
}
