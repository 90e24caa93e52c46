#![no_main]

use descent_core::Composition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(c) = data.parse::<Composition>() {
        let again: Composition = c.to_string().parse().expect("display output parses");
        assert_eq!(again, c);
        assert_eq!(c.parts().iter().sum::<usize>(), c.weight());
    }
});
