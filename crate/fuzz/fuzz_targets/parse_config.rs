#![no_main]

use libfuzzer_sys::fuzz_target;
use qwalk_core::batch::RunConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cfg) = RunConfig::from_json_str(text) else {
        return;
    };
    let again =
        RunConfig::from_json_str(&cfg.to_json_string()).expect("serialized config reparses");
    assert_eq!(again.to_json_string(), cfg.to_json_string());
    if cfg.half_width <= 64 {
        // Table construction must report errors, never panic.
        let _ = cfg.walk_spec().map(|spec| spec.validate());
    }
});
