#![no_main]

use descent_core::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(q) = data.parse::<Rational>() {
        let again: Rational = q.to_string().parse().expect("display output parses");
        assert_eq!(again, q);
        assert_eq!(&q - &q, Rational::from(0));
    }
});
