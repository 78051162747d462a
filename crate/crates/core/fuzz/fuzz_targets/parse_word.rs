#![no_main]

use affine_critical::weyl::dot;
use affine_critical::{AffineSystem, ReflectionWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(word) = ReflectionWord::from_json(s) else { return };
    let sys = AffineSystem::preset("B2").unwrap();
    let minus_rho = sys.rho().scale(&affine_critical::rational::q(-1));
    if let Ok(w) = dot(&sys, &word, &minus_rho) {
        assert_eq!(w, minus_rho);
    }
});
