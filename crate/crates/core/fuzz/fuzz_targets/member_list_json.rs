#![no_main]

use boolclass::format::{parse_member_list_json, render_member_list_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = parse_member_list_json(text) {
        assert_eq!(
            parse_member_list_json(&render_member_list_json(&list)).unwrap(),
            list
        );
    }
});
