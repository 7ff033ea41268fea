#![no_main]
use libfuzzer_sys::fuzz_target;

use degexclude::graph6;

fuzz_target!(|data: &[u8]| {
    if let Ok(graphs) = graph6::read_lines(std::io::Cursor::new(data)) {
        let mut buf = Vec::new();
        graph6::write_lines(&mut buf, &graphs).unwrap();
        assert_eq!(
            graph6::read_lines(std::io::Cursor::new(buf)).unwrap(),
            graphs
        );
    }
});
