#![no_main]
use libfuzzer_sys::fuzz_target;

use degexclude::graph6;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = graph6::decode(text) {
        let again = graph6::decode(&graph6::encode(&g)).expect("re-encoded graph decodes");
        assert_eq!(g, again);
        assert_eq!(g.degree_sequence().sum(), 2 * g.size() as u64);
    }
});
