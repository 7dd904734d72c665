use capgame::bimatrix::{expected_payoff, is_mixed_ne, support_enumeration, Bimatrix, MixedStrategy};
use capgame::rational::int;
use capgame::{CapabilityGame, CapabilityProfile, Player, PureProfile, Rational};
use num_traits::One;
use proptest::prelude::*;

/// Random game with up to three players and three actions each; payoffs in
/// a small integer range so that ties (and degeneracy) occur often.
fn arb_game(max_players: usize) -> impl Strategy<Value = CapabilityGame> {
    prop::collection::vec((1usize..=3, any::<bool>()), 1..=max_players)
        .prop_flat_map(|shape| {
            let n = shape.len();
            let count: usize = shape.iter().map(|(k, _)| *k).product();
            (Just(shape), prop::collection::vec(prop::collection::vec(-3i64..=3, n), count))
        })
        .prop_map(|(shape, payoffs)| {
            let players = shape
                .iter()
                .map(|&(k, split)| {
                    let cutoffs = if split && k > 1 { vec![1, k] } else { vec![k] };
                    Player::new((0..k).map(|a| format!("a{a}")), cutoffs)
                })
                .collect();
            let payoffs = payoffs.into_iter().map(|y| y.into_iter().map(int).collect()).collect();
            CapabilityGame::new(players, payoffs).unwrap()
        })
}

fn all_profiles(sizes: &[usize]) -> Vec<Vec<usize>> {
    sizes.iter().fold(vec![vec![]], |acc, &k| {
        acc.into_iter()
            .flat_map(|p| {
                (0..k).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect()
    })
}

/// Straight transcription of the equilibrium condition, written separately
/// from the library's predicate.
fn brute_is_ne(g: &CapabilityGame, sizes: &[usize], s: &[usize]) -> bool {
    (0..sizes.len()).all(|i| {
        let here = g.payoff(&PureProfile(s.to_vec()))[i].clone();
        (0..sizes[i]).all(|alt| {
            let mut d = s.to_vec();
            d[i] = alt;
            g.payoff(&PureProfile(d))[i] <= here
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_is_exactly_the_brute_force_set(g in arb_game(3)) {
        for c in g.capability_profiles() {
            let sizes = g.restricted_sizes(&c).unwrap();
            let found = g.enumerate_pure_ne(&c).unwrap();
            let expected: Vec<PureProfile> = all_profiles(&sizes)
                .into_iter()
                .filter(|s| brute_is_ne(&g, &sizes, s))
                .map(PureProfile)
                .collect();
            prop_assert_eq!(&found, &expected);
            for s in all_profiles(&sizes) {
                let p = PureProfile(s);
                prop_assert_eq!(g.is_pure_ne(&c, &p).unwrap(), found.contains(&p));
            }
            let ctf = g.ctf_pure(&c).unwrap();
            prop_assert_eq!(ctf.len(), found.iter().map(|s| g.payoff(s).to_vec()).collect::<std::collections::BTreeSet<_>>().len());
        }
    }

    #[test]
    fn raising_capability_never_creates_equilibria_for_a_fixed_profile(g in arb_game(3)) {
        for c in g.capability_profiles() {
            for i in 0..g.num_players() {
                if c.0[i] == g.player(i).max_capability() {
                    continue;
                }
                let mut higher = c.clone();
                higher.0[i] += 1;
                let sizes = g.restricted_sizes(&c).unwrap();
                for s in all_profiles(&sizes) {
                    let p = PureProfile(s);
                    if g.is_pure_ne(&higher, &p).unwrap() {
                        prop_assert!(g.is_pure_ne(&c, &p).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_equilibria_are_sound_normalized_and_contain_pure_ones(g in arb_game(2).prop_filter("two players", |g| g.num_players() == 2)) {
        for c in g.capability_profiles() {
            let bm = Bimatrix::from_game(&g, &c).unwrap();
            let eqs = support_enumeration(&bm).unwrap();
            prop_assert!(!eqs.is_empty());
            for e in &eqs {
                let sum = |m: &MixedStrategy| m.probabilities().iter().fold(Rational::from_integer(0.into()), |a, v| a + v);
                prop_assert!(sum(&e.x).is_one() && sum(&e.y).is_one());
                prop_assert!(is_mixed_ne(&bm, &e.x, &e.y).unwrap());
                prop_assert_eq!(expected_payoff(&bm, &e.x, &e.y).unwrap(), e.values.clone());
            }
            for s in g.enumerate_pure_ne(&c).unwrap() {
                let y = g.payoff(&s);
                let hit = eqs.iter().any(|e| {
                    e.x.as_pure() == Some(s.0[0])
                        && e.y.as_pure() == Some(s.0[1])
                        && e.values == (y[0].clone(), y[1].clone())
                });
                prop_assert!(hit, "pure equilibrium {} missing at {}", s, c);
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic(g in arb_game(3)) {
        let c = CapabilityProfile(g.players().iter().map(|p| p.max_capability()).collect());
        prop_assert_eq!(g.enumerate_pure_ne(&c).unwrap(), g.enumerate_pure_ne(&c).unwrap());
    }
}
