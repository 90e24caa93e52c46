#![no_main]

use descent_core::GroupAlgebraElement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (n, text) = input;
    let n = usize::from(n % 10);
    if let Ok(a) = GroupAlgebraElement::from_json_str(text, n) {
        let back =
            GroupAlgebraElement::from_json_str(&a.to_json_string(), n).expect("own output parses");
        assert_eq!(back, a);
    }
});
