#![no_main]

use branchdual::expr::parse_characteristic;
use branchdual::semigroup::saturation_from_characteristic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ch) = parse_characteristic(text) {
        if ch.e0 < 200 && ch.betas.iter().all(|&b| b < 200) {
            let _ = saturation_from_characteristic(&ch);
        }
    }
});
