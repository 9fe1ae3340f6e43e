//! Turns text must either parse and print back unchanged, or be rejected.
//!
//! ```not_rust
//! cargo +nightly fuzz run parse_turns
//! ```

#![no_main]

use dragoncurve::Curve;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(curve) = text.parse::<Curve>() {
        let body = text.strip_suffix('\n').map(|s| s.strip_suffix('\r').unwrap_or(s)).unwrap_or(text);
        assert_eq!(curve.to_string(), body);
        assert_eq!(curve.to_line().parse::<Curve>().unwrap(), curve);
    }
});
