#![no_main]

use affine_critical::{AffineSystem, AffineWeight};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(w) = AffineWeight::from_json(s) else { return };
    assert_eq!(AffineWeight::from_json(&w.to_json()).unwrap(), w);
    let sys = AffineSystem::preset("A2").unwrap();
    if sys.check_weight(&w).is_ok() {
        let _ = affine_critical::subgeneric::detect_subgeneric(&sys, &w);
        let _ = sys.affine_coords(&(&w - sys.rho()));
    }
});
