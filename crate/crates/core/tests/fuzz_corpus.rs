//! Replays the checked-in fuzz seeds through the fuzzed entry points.

use std::fs;
use std::path::Path;

use qwalk_core::batch::{PartsList, RunConfig};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.display().to_string(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn config_seeds_parse_and_round_trip() {
    for (name, text) in seeds("parse_config") {
        let cfg = RunConfig::from_json_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again = RunConfig::from_json_str(&cfg.to_json_string()).unwrap();
        assert_eq!(again.to_json_string(), cfg.to_json_string(), "{name}");
        cfg.walk_spec().unwrap().validate().unwrap();
    }
}

#[test]
fn parts_seeds_parse_round_trip_and_lift() {
    for (name, text) in seeds("parse_parts_list") {
        let parts = PartsList::from_json_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            PartsList::from_json_str(&parts.to_json_string()).unwrap(),
            parts,
            "{name}"
        );
        for i in 0..parts.steps.len() {
            parts.lift_step(i).unwrap();
        }
    }
}
