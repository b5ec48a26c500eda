#![no_main]

use libfuzzer_sys::fuzz_target;
use triplewise::ordering::alternatives_in;
use triplewise::{parse_ordering, AlternativeSet};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let alts = AlternativeSet::from_names(["x", "y", "z"]).unwrap();
    if let Ok(o) = parse_ordering(text, &alts) {
        let shown = o.display(&alts).to_string();
        assert_eq!(parse_ordering(&shown, &alts).unwrap(), o);
    }
    if let Ok(inferred) = alternatives_in(text) {
        let o = parse_ordering(text, &inferred).expect("inferred alternatives parse");
        assert_eq!(o.len(), inferred.len());
    }
});
