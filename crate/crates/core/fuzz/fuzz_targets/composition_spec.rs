#![no_main]
use libfuzzer_sys::fuzz_target;

use degexclude::split::{parse_indices, CompositionSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_indices(text);
    if let Ok(spec) = text.parse::<CompositionSpec>() {
        let again: CompositionSpec = spec.to_string().parse().expect("display round trips");
        assert_eq!(again, spec);
        assert_eq!(spec.compose().degree_sequence(), spec.predicted_degrees());
    }
});
