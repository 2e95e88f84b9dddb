#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_cli::relfile::parse_relation_file;

fuzz_target!(|data: &[u8]| {
    let ..=4096 = data.len() else { return };
    let Ok(text) = std::str::from_utf8(data) else { return };
    _ = parse_relation_file(text);
});
