#![no_main]

use jaxpr_decompiler::lexer::tokenize;
use jaxpr_decompiler::parser::parse_params;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(tokens) = tokenize(data) {
        if let Ok((_, end)) = parse_params(&tokens, 0) {
            assert!(end <= tokens.len());
        }
    }
});
