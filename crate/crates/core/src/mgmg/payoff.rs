use num_traits::Zero;

use super::{type_of, MgmgParams, MgmgStrategy, ResourceType};
use crate::error::{Error, Result};
use crate::rational::Rational;

fn check_lengths(a: &MgmgStrategy, b: &MgmgStrategy) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// Exact payoffs `(u_A, u_B)` of a strategy profile.
pub fn payoff(a: &MgmgStrategy, b: &MgmgStrategy, params: &MgmgParams) -> Result<(Rational, Rational)> {
    check_lengths(a, b)?;
    if a.len() != params.locations() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: params.locations(),
        });
    }
    let mut ua = Rational::zero();
    let mut ub = Rational::zero();
    for i in 0..a.len() {
        let (ca, cb) = (a.covers(i), b.covers(i));
        let value = params.delay(type_of(i), ca as usize + cb as usize);
        match (ca, cb) {
            (true, true) => {
                ua += &value;
                ub += value;
            }
            (true, false) => ua += value,
            (false, true) => ub += value,
            (false, false) => {}
        }
    }
    Ok((ua, ub))
}

/// `T(f_A, f_B)`: gold sites covered by at least one player.
pub fn total_gold_covered(a: &MgmgStrategy, b: &MgmgStrategy) -> Result<usize> {
    check_lengths(a, b)?;
    Ok((0..a.len())
        .filter(|&i| type_of(i) == ResourceType::Gold && (a.covers(i) || b.covers(i)))
        .count())
}

/// Both players together cover all `2M` gold sites.
pub fn is_complete_gold_coverage(a: &MgmgStrategy, b: &MgmgStrategy) -> Result<bool> {
    Ok(total_gold_covered(a, b)? == 2 * a.scale())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn s(text: &str) -> MgmgStrategy {
        text.parse().unwrap()
    }

    fn params(m: usize) -> MgmgParams {
        MgmgParams::new(m, ratio(1, 2), ratio(-3, 4), 1, 1).unwrap()
    }

    #[test]
    fn payoff_examples() {
        // each covers one exclusive gold and one mine: 1 + mu
        assert_eq!(payoff(&s("0000"), &s("1111"), &params(1)).unwrap(), (ratio(1, 4), ratio(1, 4)));
        // shared gold rho plus a mine
        assert_eq!(payoff(&s("0000"), &s("0000"), &params(1)).unwrap(), (ratio(-1, 4), ratio(-1, 4)));
        // perfect cover against the constant 0 line
        assert_eq!(payoff(&s("1001"), &s("0000"), &params(1)).unwrap(), (ratio(3, 2), ratio(-1, 4)));
    }

    #[test]
    fn payoff_symmetric_for_identical_strategies() {
        let p = params(2);
        for mask in (0..256u64).step_by(7) {
            let f = MgmgStrategy::from_mask(2, mask);
            let (ua, ub) = payoff(&f, &f, &p).unwrap();
            assert_eq!(ua, ub);
        }
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            payoff(&s("0000"), &s("00000000"), &params(1)),
            Err(Error::LengthMismatch { left: 4, right: 8 })
        ));
        assert!(payoff(&s("00000000"), &s("00000000"), &params(1)).is_err());
        assert!(is_complete_gold_coverage(&s("0000"), &s("00000000")).is_err());
    }

    #[test]
    fn complete_gold_coverage_examples() {
        assert!(is_complete_gold_coverage(&s("0000"), &s("1111")).unwrap());
        assert!(!is_complete_gold_coverage(&s("0000"), &s("0000")).unwrap());
        for mask in 0..16 {
            assert!(is_complete_gold_coverage(&s("1001"), &MgmgStrategy::from_mask(1, mask)).unwrap());
        }
    }
}
