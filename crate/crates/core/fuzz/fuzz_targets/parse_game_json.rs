#![no_main]

use capgame::json::{game_to_json, parse_game};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // bound the profile count so valid inputs stay cheap to re-validate
    if text.len() > 4096 {
        return;
    }
    if let Ok(game) = parse_game(text) {
        let again = parse_game(&game_to_json(&game)).expect("written games parse");
        assert_eq!(again, game);
    }
});
