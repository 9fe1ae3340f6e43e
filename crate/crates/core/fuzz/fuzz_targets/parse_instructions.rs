#![no_main]

use dragoncurve::{dragon_fold, dragon_unfold, Instructions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(rs) = text.parse::<Instructions>() else {
        return;
    };
    assert_eq!(rs.to_string().parse::<Instructions>().unwrap(), rs);
    // Curves double per instruction; only build the small ones.
    if rs.len() <= 14 {
        assert_eq!(dragon_unfold(&rs), dragon_fold(&rs));
    }
});
