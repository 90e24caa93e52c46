#![no_main]

use descent_core::Subset;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(s) = data.parse::<Subset>() {
        let again: Subset = s.to_string().parse().expect("display output parses");
        assert_eq!(again, s);
        assert!(s.elements().windows(2).all(|p| p[0] < p[1]));
    }
});
