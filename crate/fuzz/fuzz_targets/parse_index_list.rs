#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_core::literal::parse_index_list;

fuzz_target!(|text: &str| {
    _ = parse_index_list(text);
});
