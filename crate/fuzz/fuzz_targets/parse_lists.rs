#![no_main]

use branchdual::expr::{parse_exponents, parse_op_list, parse_series_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = parse_series_list(text) {
        let joined = list
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        assert_eq!(parse_series_list(&joined).unwrap(), list);
    }
    if let Ok(list) = parse_op_list(text) {
        let joined = list
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        assert_eq!(parse_op_list(&joined).unwrap(), list);
    }
    let _ = parse_exponents(text);
});
