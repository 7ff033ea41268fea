#![no_main]
use libfuzzer_sys::fuzz_target;

use degexclude::DegreeSequence;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(d) = text.parse::<DegreeSequence>() else {
        return;
    };
    assert_eq!(d.to_string().parse::<DegreeSequence>().unwrap(), d);
    if d.len() <= 32 && d.is_graphical() {
        let g = d.realize_one().expect("graphical sequences realize");
        assert_eq!(g.degree_sequence(), d);
    }
});
