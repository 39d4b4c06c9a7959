#![no_main]

use branchdual::job::{parse_golden, parse_jobs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_jobs(text);
    let _ = parse_golden(text);
});
