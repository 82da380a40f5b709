#![no_main]

use grr_core::group::{Descriptor, GroupSource};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = text.parse::<Descriptor>() {
        let shown = d.to_string();
        assert_eq!(shown.parse::<Descriptor>().expect("display parses"), d);
    }
    // never touches the filesystem: only the classification is exercised
    let _ = text.parse::<GroupSource>();
});
