#![no_main]

use boolclass::classifier::expand_generator_pattern;
use libfuzzer_sys::fuzz_target;

// Keeps each run to at most 2^12 expansions.
const FREE_LIMIT: usize = 12;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.bytes().filter(|&b| b == b'-').count() > FREE_LIMIT {
        return;
    }
    if let Ok(members) = expand_generator_pattern(text) {
        assert_eq!(
            members.len(),
            1 << text.bytes().filter(|&b| b == b'-').count()
        );
        assert!(members.windows(2).all(|w| w[0] < w[1]));
    }
});
