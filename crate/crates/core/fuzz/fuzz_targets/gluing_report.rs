#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    zipfold_core::fuzzing::gluing_report(data);
});
