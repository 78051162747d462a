#![no_main]

use affine_critical::cli::RunConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = RunConfig::from_json(s) {
        assert_eq!(RunConfig::from_json(&c.to_json()).unwrap(), c);
    }
});
