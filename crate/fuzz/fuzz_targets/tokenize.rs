#![no_main]

use jaxpr_decompiler::lexer::tokenize;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(tokens) = tokenize(data) {
        // Token texts plus the gaps between them rebuild the input.
        let mut end = 0;
        for tok in &tokens {
            assert!(tok.offset >= end);
            assert_eq!(&data[tok.offset..tok.offset + tok.text.len()], tok.text);
            end = tok.offset + tok.text.len();
        }
    }
});
