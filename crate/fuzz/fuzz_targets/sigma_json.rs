#![no_main]

use descent_core::filtration::SigmaElement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (n, text) = input;
    let n = usize::from(n % 12);
    if let Ok(a) = SigmaElement::from_json_str(text, n) {
        let back = SigmaElement::from_json_str(&a.to_json_string(), n).expect("own output parses");
        assert_eq!(back, a);
    }
});
