//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero when any
//! criterion fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use capgame::bimatrix::{support_enumeration, Bimatrix, MixedStrategy};
use capgame::mgmg::{
    conforms_lemma1, is_perfect_cover, lemma2_counts, pad_segments, summarize, theorem_payoffs, MgmgParams,
    MgmgStrategy,
};
use capgame::rational::{int, ratio};
use capgame::verify::Oracle;
use capgame::{CapabilityGame, CapabilityProfile, PayoffVectorSet, Rational};
use capgame_cli::commands::{cmd_game_ctf, read_game};
use capgame_cli::{Cell, Mode};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const PAIRS: [((i64, i64), (i64, i64)); 3] = [((1, 2), (-3, 4)), ((1, 4), (-1, 2)), ((3, 5), (-7, 10))];

type Check = Result<String, String>;

/// Name, check and optional runtime budget.
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn load(name: &str) -> CapabilityGame {
    read_game(&fixture(name)).expect("fixture parses")
}

fn params(m: usize, (rho, mu): ((i64, i64), (i64, i64)), ca: usize, cb: usize) -> MgmgParams {
    MgmgParams::new(m, ratio(rho.0, rho.1), ratio(mu.0, mu.1), ca, cb).expect("valid parameters")
}

fn set(items: &[(i64, i64)]) -> PayoffVectorSet {
    items.iter().map(|&(a, b)| vec![int(a), int(b)]).collect()
}

fn random_conforming(rng: &mut StdRng, m: usize) -> MgmgStrategy {
    let mut bits = vec![rng.gen::<bool>()];
    for i in 0..4 * m - 1 {
        let cur = *bits.last().unwrap();
        let allowed = if cur { i % 4 == 0 } else { i % 4 == 2 };
        bits.push(if allowed && rng.gen::<bool>() { !cur } else { cur });
    }
    MgmgStrategy::from_bits(bits).unwrap()
}

fn nonmonotone_game_reproduction() -> Check {
    let game = load("nonmonotone.json");
    let expected = [("(1,1)", set(&[(1, 2)])), ("(2,1)", set(&[(0, 2)]))];
    for mode in [Mode::Pure, Mode::Mixed] {
        let table = cmd_game_ctf(&game, mode).map_err(|e| e.to_string())?;
        let col = table.column("payoffs").unwrap();
        if table.rows().len() != expected.len() {
            return Err(format!("{mode:?}: {} rows", table.rows().len()));
        }
        for (row, (profile, want)) in table.rows().iter().zip(&expected) {
            if row[0] != Cell::Text((*profile).into()) || row[col] != Cell::PayoffSet(want.clone()) {
                return Err(format!("{mode:?}: row {row:?}"));
            }
        }
    }
    Ok("f(1,1) = {(1, 2)}, f(2,1) = {(0, 2)} in pure and mixed modes".into())
}

fn theorem_oracle_equivalence() -> Check {
    let oracle = Oracle::default();
    let mut checked = 0;
    for m in 1..=2 {
        for pair in PAIRS {
            for ca in 1..=2 * m + 2 {
                for cb in 1..=2 * m + 2 {
                    let p = params(m, pair, ca, cb);
                    let report = oracle.verify_theorem(&p).map_err(|e| e.to_string())?;
                    if !report.matched {
                        return Err(format!(
                            "M={m} rho={} mu={} C=({ca},{cb}): predicted {} observed {}",
                            p.rho(),
                            p.mu(),
                            report.predicted,
                            report.observed
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} parameter points, predicted = observed"))
}

fn lemma2_counts_suite() -> Check {
    let mut checked = 0;
    let mut check = |f: &MgmgStrategy| -> Result<(), String> {
        let s = summarize(f);
        let want = lemma2_counts(s.seg, f.start(), f.scale()).map_err(|e| e.to_string())?;
        checked += 1;
        if (s.n_gold, s.n_mine) == want {
            Ok(())
        } else {
            Err(format!("{f}: counted {:?}, formula {want:?}", (s.n_gold, s.n_mine)))
        }
    };
    for m in 1..=2 {
        for mask in 0..1u64 << (4 * m) {
            let f = MgmgStrategy::from_mask(m, mask);
            if conforms_lemma1(&f) {
                check(&f)?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x2024);
    for _ in 0..1000 {
        let m = rng.gen_range(1..=5);
        check(&random_conforming(&mut rng, m))?;
    }
    Ok(format!("{checked} conforming strategies"))
}

fn lemma3_suite() -> Check {
    let oracle = Oracle::default();
    let mut checked = 0;
    for m in 1..=2 {
        for pair in PAIRS {
            for ca in 1..=2 * m + 1 {
                for cb in 1..=2 * m + 1 {
                    let p = params(m, pair, ca, cb);
                    if !oracle.verify_lemma3(&p).map_err(|e| e.to_string())? {
                        return Err(format!("M={m} rho={} mu={} C=({ca},{cb})", p.rho(), p.mu()));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} strict capability profiles, all equilibria cover every gold site"))
}

fn padding_postconditions() -> Check {
    let mut rng = StdRng::seed_from_u64(0x0a11);
    let mut checked = 0;
    while checked < 500 {
        let m = rng.gen_range(2..=3);
        let fp = random_conforming(&mut rng, m);
        if fp.segments() > 2 * m - 1 || is_perfect_cover(&fp, 4 * m - 4, 4 * m - 1).unwrap() {
            continue;
        }
        let ca = rng.gen_range(fp.segments()..=2 * m - 1);
        let f = pad_segments(&fp, ca).map_err(|e| format!("{fp} cap {ca}: {e}"))?;
        let gold = summarize(&f).gold_sites;
        let superset = summarize(&fp).gold_sites.iter().all(|i| gold.contains(i));
        if f.segments() != ca || !superset || f.start() != fp.start() || !conforms_lemma1(&f) {
            return Err(format!("{fp} cap {ca} -> {f}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} random inputs, all four postconditions hold"))
}

fn social_welfare_identity() -> Check {
    let mut checked = 0;
    for m in 1..=2usize {
        for pair in PAIRS {
            for c in 1..=2 * m + 2 {
                let p = params(m, pair, c, c);
                let (rho, mu) = (p.rho().clone(), p.mu().clone());
                let clamped = c.min(2 * m + 1) as i64;
                let want = (int(2) * &rho - &mu - int(1)) * int(clamped - 1) + int(2) * (mu + int(1)) * int(m as i64);
                for y in theorem_payoffs(&p).map_err(|e| e.to_string())?.iter() {
                    let total: Rational = y.iter().fold(int(0), |a, v| a + v);
                    if total != want {
                        return Err(format!("M={m} C={c}: sum {total} vs {want}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} payoff vectors"))
}

fn non_monotonicity_witness() -> Check {
    let game = load("nonmonotone.json");
    let f = |c: Vec<usize>| game.ctf_pure(&CapabilityProfile(c)).map(|s| s.component(0));
    let low = f(vec![1, 1]).map_err(|e| e.to_string())?;
    let high = f(vec![2, 1]).map_err(|e| e.to_string())?;
    match (low.first(), high.last()) {
        (Some(min_low), Some(max_high)) if min_low > max_high => {
            Ok(format!("min f_1(1,1) = {min_low} > max f_1(2,1) = {max_high}"))
        }
        _ => Err(format!("f_1(1,1) = {low:?}, f_1(2,1) = {high:?}")),
    }
}

fn matching_pennies_sanity() -> Check {
    let game = load("matching_pennies.json");
    let g = Bimatrix::from_game(&game, &CapabilityProfile(vec![2, 2])).map_err(|e| e.to_string())?;
    let eqs = support_enumeration(&g).map_err(|e| e.to_string())?;
    let uniform = MixedStrategy::uniform(2);
    match eqs.as_slice() {
        [e] if e.x == uniform && e.y == uniform && e.values == (int(0), int(0)) => {
            Ok("single equilibrium, uniform/uniform, values (0, 0)".into())
        }
        other => Err(format!("{other:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("capability-restricted game transfer function", nonmonotone_game_reproduction, Some(Duration::from_secs(1))),
        (
            "closed-form payoffs equal brute-force equilibria",
            theorem_oracle_equivalence,
            Some(Duration::from_secs(60)),
        ),
        ("gold and mine counts of conforming strategies", lemma2_counts_suite, None),
        ("strict-space equilibria cover all gold", lemma3_suite, None),
        ("segment padding postconditions", padding_postconditions, None),
        ("equal-capability social welfare identity", social_welfare_identity, None),
        ("capability increase lowers player 1 payoff", non_monotonicity_witness, None),
        ("matching pennies mixed equilibrium", matching_pennies_sanity, None),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let took = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, budget) {
            if took > *limit {
                result = Err(format!("exceeded runtime budget of {}s", limit.as_secs()));
            }
        }
        total += took;
        match result {
            Ok(detail) => println!("PASS  {}  {name}: {detail} ({:.2}s)", i + 1, took.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}  {name}: {detail} ({:.2}s)", i + 1, took.as_secs_f64());
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed ({:.2}s)",
        criteria.len() - failed,
        total.as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
