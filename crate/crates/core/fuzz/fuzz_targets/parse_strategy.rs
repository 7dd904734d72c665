#![no_main]

use capgame::mgmg::{conforms_lemma1, lemma2_counts, summarize, MgmgStrategy};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(f) = text.parse::<MgmgStrategy>() else { return };
    assert_eq!(f.to_string(), text.trim());
    let s = summarize(&f);
    assert_eq!(s.seg, s.udp.len() + s.ddp.len() + 1);
    if conforms_lemma1(&f) {
        assert_eq!(lemma2_counts(s.seg, f.start(), f.scale()).unwrap(), (s.n_gold, s.n_mine));
    }
});
