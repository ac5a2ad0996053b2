//! Feed arbitrary bytes to the SLF parser: it must reject or accept without
//! panicking, and errors must point at a line of the input.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match flatlat::parse_slf(text) {
        Ok(s) => {
            assert!(s.size() >= 1);
        }
        Err(e) => {
            assert!(e.line >= 1);
            assert!(e.line <= text.lines().count().max(1));
        }
    }
});
