#![no_main]

use grr_census::parse_manifest;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_manifest(text) {
        let mut out = String::new();
        if let Some(v) = m.version {
            out.push_str(&format!("version {v}\n"));
        }
        for e in &m.entries {
            out.push_str(e);
            out.push('\n');
        }
        assert_eq!(parse_manifest(&out).expect("normalized manifest parses"), m);
    }
});
