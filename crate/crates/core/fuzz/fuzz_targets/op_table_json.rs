#![no_main]

use boolclass::format::{parse_op_table_json, render_op_table_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = parse_op_table_json(text) {
        assert_eq!(
            parse_op_table_json(&render_op_table_json(&table)).unwrap(),
            table
        );
    }
});
