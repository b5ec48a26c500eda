#![no_main]

use libfuzzer_sys::fuzz_target;
use triplewise::profile_file::{parse_lenient, parse_profile_file, render_profile_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let strict = parse_profile_file(text);
    let (lenient, errors) = parse_lenient(text);
    if let Ok(file) = &strict {
        assert!(errors.is_empty());
        assert_eq!(lenient.as_ref().map(|f| &f.profile), Some(&file.profile));
        let again = parse_profile_file(&render_profile_file(&file.profile)).unwrap();
        assert_eq!(again.profile, file.profile);
        let _ = triplewise::aggregate(&file.profile);
    }
});
