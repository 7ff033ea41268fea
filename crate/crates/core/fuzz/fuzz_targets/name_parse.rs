#![no_main]
use libfuzzer_sys::fuzz_target;

use degexclude::classify::ExclusionTarget;
use degexclude::verify::{Claim, Mutant};
use degexclude::GraphFamily;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = text.parse::<GraphFamily>() {
        assert_eq!(f.to_string().parse::<GraphFamily>().unwrap(), f);
        let _ = f.construct();
    }
    if let Ok(t) = text.parse::<ExclusionTarget>() {
        assert_eq!(t.to_string().parse::<ExclusionTarget>().unwrap(), t);
    }
    if let Ok(c) = text.parse::<Claim>() {
        assert_eq!(c.to_string().parse::<Claim>().unwrap(), c);
    }
    let _ = text.parse::<Mutant>();
});
