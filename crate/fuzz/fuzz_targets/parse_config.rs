#![no_main]

use libfuzzer_sys::fuzz_target;
use polylog_cli::config::parse_config;

fuzz_target!(|text: &str| {
    let Ok(cfg) = parse_config(text) else { return };
    // a config that parses must also produce a usable context and alphabet
    cfg.context().unwrap();
    cfg.sigma_config().unwrap();
});
