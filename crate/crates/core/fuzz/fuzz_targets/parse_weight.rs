#![no_main]

use libfuzzer_sys::fuzz_target;
use modrep::{Rank, Weight};

// First byte picks the rank; the rest is the weight text.
fuzz_target!(|data: &[u8]| {
    let Some((&l, rest)) = data.split_first() else {
        return;
    };
    let Ok(rank) = Rank::new(usize::from(l % 64) + 1) else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(w) = Weight::parse(text, rank) {
        assert_eq!(w.rank(), rank);
        assert_eq!(Weight::parse(&w.to_sparse_string(), rank).unwrap(), w);
        assert_eq!(Weight::parse(&w.to_dense_string(), rank).unwrap(), w);
    }
});
