#![no_main]

use grr_core::perm::parse_perm_lines;
use grr_core::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(perms) = parse_perm_lines(text) {
        for p in perms {
            let back: Permutation = p.to_string().parse().expect("display parses");
            assert_eq!(back, p);
            assert!((&p * &p.inverse()).is_identity());
        }
    }
});
