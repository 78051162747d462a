#![no_main]

use affine_critical::root_data::CartanSpec;
use affine_critical::FiniteRootSystem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(spec) = CartanSpec::from_json(s) else { return };
    if let Ok(rs) = FiniteRootSystem::from_cartan(&spec.cartan) {
        assert!(!rs.positive_roots().is_empty());
        assert_eq!(rs.highest_root().len(), rs.rank());
    }
});
