#![no_main]

use grr_core::group::{parse_gtab, to_gtab_string};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_gtab(text) {
        // anything accepted is a valid group and survives a round trip
        let again = parse_gtab(&to_gtab_string(&g)).expect("serialized table parses");
        assert_eq!(again.order(), g.order());
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }
});
