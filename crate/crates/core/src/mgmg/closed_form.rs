//! Closed-form equilibrium payoffs.
//!
//! With `C' = min(C, 2M + 1)` and class bit `t`:
//!
//! ```text
//! u_A = floor((C_A'+t-1)/2) rho - floor((C_A'-t)/2) mu + floor((C_B'-t)/2) (rho-1) + (mu+1) M
//! u_B = floor((C_B'-t)/2) rho - floor((C_B'+t-1)/2) mu + floor((C_A'+t-1)/2) (rho-1) + (mu+1) M
//! ```

use num_traits::One;

use super::MgmgParams;
use crate::error::Result;
use crate::game::PayoffVectorSet;
use crate::rational::Rational;

fn r(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Class bits the regime admits: both when neither or both capabilities
/// exceed `2M`, otherwise the one forced by which player is limited.
pub fn admissible_classes(params: &MgmgParams) -> Vec<u8> {
    let big = 2 * params.m();
    match (params.ca() > big, params.cb() > big) {
        (false, true) => vec![0],
        (true, false) => vec![1],
        _ => vec![0, 1],
    }
}

/// Closed-form payoff pair for class `t`, without regime checks.
pub fn theorem_payoff(params: &MgmgParams, t: u8) -> (Rational, Rational) {
    let t = t as usize;
    let ca = params.effective(params.ca());
    let cb = params.effective(params.cb());
    let (rho, mu) = (params.rho(), params.mu());
    let one = Rational::one();
    let base = (mu + &one) * r(params.m());
    let a_gold = r((ca + t - 1) / 2);
    let a_mine = r((ca - t) / 2);
    let b_gold = r((cb - t) / 2);
    let b_mine = r((cb + t - 1) / 2);
    let ua = &a_gold * rho - a_mine * mu + &b_gold * (rho - &one) + &base;
    let ub = b_gold * rho - b_mine * mu + a_gold * (rho - &one) + base;
    (ua, ub)
}

/// The predicted set of equilibrium payoff pairs.
pub fn theorem_payoffs(params: &MgmgParams) -> Result<PayoffVectorSet> {
    params.require_theorem()?;
    Ok(admissible_classes(params)
        .into_iter()
        .map(|t| {
            let (ua, ub) = theorem_payoff(params, t);
            vec![ua, ub]
        })
        .collect())
}

/// Equilibrium social welfare when both players have capability `c`:
/// `(2 rho - mu - 1)(min(c, 2M + 1) - 1) + 2 (mu + 1) M`.
pub fn social_welfare_equal_cap(m: usize, rho: &Rational, mu: &Rational, c: usize) -> Result<Rational> {
    let params = MgmgParams::new(m, rho.clone(), mu.clone(), c, c)?;
    params.require_theorem()?;
    let one = Rational::one();
    let slope = r(2) * rho - mu - &one;
    Ok(slope * r(params.effective(c) - 1) + r(2 * m) * (mu + one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rational::{int, ratio};

    fn params(m: usize, ca: usize, cb: usize) -> MgmgParams {
        MgmgParams::new(m, ratio(1, 2), ratio(-3, 4), ca, cb).unwrap()
    }

    fn set(pairs: &[(Rational, Rational)]) -> PayoffVectorSet {
        pairs.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect()
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(theorem_payoffs(&params(1, 1, 1)).unwrap(), set(&[(ratio(1, 4), ratio(1, 4))]));
        assert_eq!(theorem_payoffs(&params(1, 3, 1)).unwrap(), set(&[(ratio(3, 2), ratio(-1, 4))]));
        assert_eq!(theorem_payoffs(&params(1, 3, 3)).unwrap(), set(&[(int(1), int(1))]));
    }

    #[test]
    fn both_large_classes_agree() {
        for m in 1..6 {
            let p = params(m, 2 * m + 1, 2 * m + 3);
            assert_eq!(theorem_payoff(&p, 0), theorem_payoff(&p, 1));
            let v = ratio(2 * m as i64, 1) * p.rho();
            assert_eq!(theorem_payoff(&p, 0), (v.clone(), v));
        }
    }

    #[test]
    fn both_small_generic_case_has_two_classes() {
        let p = MgmgParams::new(2, ratio(1, 4), ratio(-1, 2), 2, 2).unwrap();
        assert_eq!(theorem_payoffs(&p).unwrap().len(), 2);
    }

    #[test]
    fn classes_by_regime() {
        assert_eq!(admissible_classes(&params(1, 1, 2)), vec![0, 1]);
        assert_eq!(admissible_classes(&params(1, 2, 3)), vec![0]);
        assert_eq!(admissible_classes(&params(1, 3, 2)), vec![1]);
        assert_eq!(admissible_classes(&params(1, 3, 3)), vec![0, 1]);
    }

    #[test]
    fn welfare_examples() {
        let (rho, mu) = (ratio(1, 2), ratio(-3, 4));
        for m in 1..5 {
            let expected = int(2 * m as i64) * (&mu + int(1));
            assert_eq!(social_welfare_equal_cap(m, &rho, &mu, 1).unwrap(), expected);
        }
        assert_eq!(social_welfare_equal_cap(1, &rho, &mu, 1).unwrap(), ratio(1, 2));
        // C = 3 at M = 1: (3/4) * 2 + 1/2 = 2 = 2 * (2 M rho)
        assert_eq!(social_welfare_equal_cap(1, &rho, &mu, 3).unwrap(), int(2));
        for c in 1..6 {
            let total: Vec<Rational> = theorem_payoffs(&params(1, c, c))
                .unwrap()
                .iter()
                .map(|y| &y[0] + &y[1])
                .collect();
            let w = social_welfare_equal_cap(1, &rho, &mu, c).unwrap();
            assert!(total.iter().all(|v| *v == w));
        }
    }

    #[test]
    fn hypothesis_enforced() {
        let p = MgmgParams::new(1, ratio(1, 2), ratio(-1, 2), 1, 1).unwrap();
        assert!(matches!(theorem_payoffs(&p), Err(Error::ParamsOutOfTheorem(_))));
        assert!(social_welfare_equal_cap(1, &ratio(1, 2), &ratio(-1, 2), 1).is_err());
    }
}
