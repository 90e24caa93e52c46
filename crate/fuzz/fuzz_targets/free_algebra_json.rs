#![no_main]

use descent_core::free_algebra::FreeAlgebraElement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (alphabet, text) = input;
    let alphabet = usize::from(alphabet);
    if let Ok(e) = FreeAlgebraElement::from_json_str(text, alphabet) {
        let back = FreeAlgebraElement::from_json_str(&e.to_json_string(), alphabet)
            .expect("own output parses");
        assert_eq!(back, e);
    }
});
