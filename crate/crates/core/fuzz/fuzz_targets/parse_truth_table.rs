#![no_main]

use boolclass::classifier::classify;
use boolclass::TruthTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let parsed = match selector % 3 {
        0 => TruthTable::parse_bits(text),
        1 => TruthTable::parse_hex(text),
        _ => TruthTable::parse_decimal(u32::from(selector / 3 % 6) + 1, text),
    };
    let Ok(f) = parsed else {
        return;
    };
    assert_eq!(TruthTable::parse_bits(&f.to_bit_string()).unwrap(), f);
    if let Ok(hex) = f.to_hex_string() {
        assert_eq!(TruthTable::parse_hex(&hex).unwrap(), f);
    }
    if let Ok(dec) = f.to_decimal_string() {
        assert_eq!(TruthTable::parse_decimal(f.n(), &dec).unwrap(), f);
    }
    let k = classify(&f);
    assert_eq!(classify(&f.complement()), k.complement_partner());
});
