//! Parse → emit → parse must be the identity on everything the parser
//! accepts: labels are whitespace-split tokens, so any accepted input can be
//! re-emitted losslessly.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(s) = flatlat::parse_slf(text) else { return };
    let emitted = flatlat::emit_slf(&s);
    let back = flatlat::parse_slf(&emitted).expect("emitted SLF must parse");
    assert_eq!(back, s, "round trip must preserve the structure");
    assert_eq!(flatlat::emit_slf(&back), emitted, "second emit must be stable");
});
