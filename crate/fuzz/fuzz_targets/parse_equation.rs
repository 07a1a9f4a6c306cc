#![no_main]

use jaxpr_decompiler::lexer::tokenize;
use jaxpr_decompiler::parser::parse_equation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(tokens) = tokenize(data) {
        let _ = parse_equation(&tokens, 0);
    }
});
