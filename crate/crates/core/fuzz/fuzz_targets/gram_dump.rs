#![no_main]

use libfuzzer_sys::fuzz_target;
use modrep::linalg::IntMatrix;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = IntMatrix::from_dump(text) {
        let again = IntMatrix::from_dump(&m.to_dump()).expect("dump of a parsed matrix must parse");
        assert_eq!(again, m);
    }
});
