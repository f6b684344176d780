#![no_main]

use boolclass::classifier::ClassIndex;
use boolclass::format::{parse_op_table_csv, render_op_table_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let class = ClassIndex::new(3, u64::from(k % 16) + 1).unwrap();
    if let Ok(table) = parse_op_table_csv(text, class) {
        let again = parse_op_table_csv(&render_op_table_csv(&table), class).unwrap();
        assert_eq!(again, table);
    }
});
