#![no_main]

use jaxpr_decompiler::parse_source;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(program) = parse_source(data) {
        let printed = program.to_string();
        let reparsed = parse_source(&printed).expect("printed program reparses");
        assert_eq!(program, reparsed);
    }
});
