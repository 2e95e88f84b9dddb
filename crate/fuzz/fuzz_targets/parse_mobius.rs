#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_core::literal::{parse_mobius, parse_points};

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(m) = parse_mobius(&text) {
        _ = m.is_involution();
    }
    _ = parse_points(&text);
});
