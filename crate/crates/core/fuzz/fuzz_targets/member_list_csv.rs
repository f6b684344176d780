#![no_main]

use boolclass::format::{parse_member_rows_csv, render_member_list_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = u32::from(n % 8) + 1;
    if let Ok(groups) = parse_member_rows_csv(n, text) {
        for g in groups {
            let again = parse_member_rows_csv(n, &render_member_list_csv(&g)).unwrap();
            assert_eq!(again, vec![g]);
        }
    }
});
