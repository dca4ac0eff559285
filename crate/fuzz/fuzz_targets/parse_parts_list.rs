#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalk_core::batch::PartsList;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(parts) = PartsList::from_json_str(text) else {
        return;
    };
    let again =
        PartsList::from_json_str(&parts.to_json_string()).expect("serialized parts list reparses");
    assert_eq!(again, parts);
    if parts.half_width <= 16 {
        for i in 0..parts.steps.len().min(4) {
            let _ = parts.lift_step(i);
        }
    }
});
