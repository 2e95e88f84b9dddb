#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_core::literal::parse_point;

fuzz_target!(|text: &str| {
    if text.len() > 200 {
        return;
    }
    let Ok(p) = parse_point(text) else { return };
    assert_eq!(parse_point(&p.to_string()).unwrap(), p);
});
