#![no_main]

use descent_core::free_algebra::Word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<Word>() {
        let again: Word = w.to_string().parse().expect("display output parses");
        assert_eq!(again, w);
    }
});
