#![no_main]

use boolclass::format::{parse_rule, render_rule};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(f) = parse_rule(u32::from(n % 12), text) {
        assert_eq!(parse_rule(f.n(), &render_rule(&f)).unwrap(), f);
    }
});
