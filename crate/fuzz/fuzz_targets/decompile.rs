#![no_main]

use jaxpr_decompiler::{decompile, Dialect, EmitConfig};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    for dialect in Dialect::ALL {
        let config = EmitConfig { dialect, strict: false, ..EmitConfig::default() };
        if let Ok((python, _)) = decompile(data, &config) {
            assert!(python.ends_with('\n') && !python.ends_with("\n\n"));
        }
    }
});
