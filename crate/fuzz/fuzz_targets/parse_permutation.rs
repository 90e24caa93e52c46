#![no_main]

use descent_core::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<Permutation>() {
        let again: Permutation = w.to_string().parse().expect("display output parses");
        assert_eq!(again, w);
        assert!(w.compose(&w.inverse()).expect("same size").is_identity());
        assert_eq!(w.clrm_prime().weight(), w.size());
    }
});
