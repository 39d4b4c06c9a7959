#![no_main]

use branchdual::expr::{parse_expression, parse_op, parse_series, Expr};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match parse_expression(text) {
        Ok(Expr::Series(s)) => assert_eq!(parse_series(&s.to_string()).unwrap(), s),
        Ok(Expr::Op(g)) => assert_eq!(parse_op(&g.to_string()).unwrap(), g),
        Err(_) => {}
    }
});
