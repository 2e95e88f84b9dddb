#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_core::literal::parse_poly;

// Display output must parse back to the same polynomial.
fuzz_target!(|text: &str| {
    if text.len() > 400 {
        return;
    }
    let Ok(p) = parse_poly(text) else { return };
    let shown = p.to_string();
    assert_eq!(parse_poly(&shown).unwrap(), p, "{shown}");
});
