#![no_main]

use libfuzzer_sys::fuzz_target;
use modrep_cli::config::FileConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cfg) = FileConfig::from_toml_str(text) {
        assert_ne!(cfg.threads, Some(0));
        let merged = FileConfig::default().overridden_by(cfg.clone());
        assert_eq!(merged, cfg);
    }
});
