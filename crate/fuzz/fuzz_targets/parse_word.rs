#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_core::literal::{parse_word, parse_words};

fuzz_target!(|text: &str| {
    if text.len() > 400 {
        return;
    }
    if let Ok(w) = parse_word(text) {
        let list: Vec<String> = w.letters().iter().map(|l| l.point().to_string()).collect();
        assert_eq!(parse_word(&format!("[{}]", list.join(", "))).unwrap(), w);
    }
    _ = parse_words(text);
});
