//! Membership in Arnold's classes (N+) and (M-), defined for odd n >= 3:
//!
//! - n is in (N+) when N | phi(n) and 2^(phi(n)/N) = +1 mod n;
//! - n is in (M-) when M | phi(n) and 2^(phi(n)/M) = -1 mod n.
//!
//! These definitional tests are the ground truth the residue-pattern
//! classifier in [`crate::theorems`] is checked against.

use crate::arith::{euler_phi, factorize, order_of_two, pow_mod};
use crate::error::{Error, Result};

/// One table row: totient, period, and the maximal class indices of n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassRecord {
    pub n: u64,
    pub phi: u64,
    /// Multiplicative order of 2 mod n; the common cycle length.
    pub period_t: u64,
    /// Largest N with n in (N+); always at least 1.
    pub n_max: u64,
    /// Largest M with n in (M-), when the minus class is nonempty.
    pub m_max: Option<u64>,
}

fn require_odd_class_member(n: u64) -> Result<()> {
    if n % 2 == 0 {
        return Err(Error::EvenInput(n));
    }
    if n < 3 {
        return Err(Error::BelowMinimum(n));
    }
    Ok(())
}

fn phi_of(n: u64) -> Result<u64> {
    Ok(euler_phi(&factorize(n)?))
}

/// True when class_index divides phi(n) and 2^(phi(n)/class_index) = 1 mod n.
pub fn is_in_plus(n: u64, class_index: u64) -> Result<bool> {
    require_odd_class_member(n)?;
    let phi = phi_of(n)?;
    if class_index == 0 || phi % class_index != 0 {
        return Ok(false);
    }
    Ok(pow_mod(2, phi / class_index, n) == 1)
}

/// True when class_index divides phi(n) and 2^(phi(n)/class_index) = -1 mod n
/// (the residue n - 1).
pub fn is_in_minus(n: u64, class_index: u64) -> Result<bool> {
    require_odd_class_member(n)?;
    let phi = phi_of(n)?;
    if class_index == 0 || phi % class_index != 0 {
        return Ok(false);
    }
    Ok(pow_mod(2, phi / class_index, n) == n - 1)
}

/// Largest N with n in (N+): the cycle count phi(n) / T, where T is the
/// order of 2 mod n. Never fails for odd n >= 3 since N = 1 always works.
pub fn maximal_plus(n: u64) -> Result<u64> {
    require_odd_class_member(n)?;
    let phi = phi_of(n)?;
    let t = order_of_two(n, &factorize(phi)?)?;
    Ok(phi / t)
}

/// Largest M with n in (M-), or None when -1 is not a power of 2 mod n.
///
/// -1 lies in the subgroup generated by 2 exactly when the order T is even
/// and 2^(T/2) = -1; the largest valid M is then 2 phi(n) / T. The exhaustive
/// divisor search stays in the verification harness as the oracle for this
/// shortcut.
pub fn maximal_minus(n: u64) -> Result<Option<u64>> {
    require_odd_class_member(n)?;
    let phi = phi_of(n)?;
    let t = order_of_two(n, &factorize(phi)?)?;
    if t % 2 == 0 && pow_mod(2, t / 2, n) == n - 1 {
        Ok(Some(2 * phi / t))
    } else {
        Ok(None)
    }
}

/// Assemble phi, the period, and both maximal class indices for one n.
pub fn class_record(n: u64) -> Result<ClassRecord> {
    require_odd_class_member(n)?;
    let phi = phi_of(n)?;
    let t = order_of_two(n, &factorize(phi)?)?;
    let n_max = phi / t;
    let m_max = if t % 2 == 0 && pow_mod(2, t / 2, n) == n - 1 {
        Some(2 * n_max)
    } else {
        None
    };
    Ok(ClassRecord { n, phi, period_t: t, n_max, m_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::divisors;

    #[test]
    fn plus_membership_known_values() {
        assert!(is_in_plus(7, 2).unwrap()); // 2^3 = 8 = 1 mod 7
        assert!(!is_in_plus(15, 4).unwrap()); // 2^2 = 4 mod 15
        assert!(is_in_plus(65, 4).unwrap()); // 2^12 = 1 mod 65
        assert!(is_in_plus(3, 1).unwrap()); // Euler's theorem
    }

    #[test]
    fn minus_membership_known_values() {
        assert!(is_in_minus(3, 2).unwrap()); // 2^1 = -1 mod 3
        assert!(is_in_minus(9, 2).unwrap()); // 2^3 = 8 = -1 mod 9
        assert!(!is_in_minus(7, 2).unwrap()); // -1 not a power of 2 mod 7
    }

    #[test]
    fn non_divisor_index_is_plain_false() {
        assert!(!is_in_plus(9, 4).unwrap()); // 4 does not divide phi(9) = 6
        assert!(!is_in_minus(9, 4).unwrap());
        assert!(!is_in_plus(9, 0).unwrap());
    }

    #[test]
    fn domain_errors() {
        assert_eq!(is_in_plus(4, 2), Err(Error::EvenInput(4)));
        assert_eq!(is_in_minus(4, 2), Err(Error::EvenInput(4)));
        assert_eq!(maximal_plus(1), Err(Error::BelowMinimum(1)));
        assert_eq!(class_record(2), Err(Error::EvenInput(2)));
    }

    #[test]
    fn maximal_plus_known_values() {
        assert_eq!(maximal_plus(3).unwrap(), 1);
        assert_eq!(maximal_plus(7).unwrap(), 2);
        assert_eq!(maximal_plus(73).unwrap(), 8);
    }

    #[test]
    fn maximal_minus_known_values() {
        assert_eq!(maximal_minus(3).unwrap(), Some(2));
        assert_eq!(maximal_minus(7).unwrap(), None);
        assert_eq!(maximal_minus(65).unwrap(), Some(8)); // 2^6 = 64 = -1 mod 65
    }

    #[test]
    fn maximal_minus_matches_divisor_search() {
        // Independent oracle: scan every divisor of phi(n) for the minus
        // congruence and keep the largest hit.
        for n in (3u64..400).step_by(2) {
            let phi = euler_phi(&factorize(n).unwrap());
            let searched = divisors(phi)
                .into_iter()
                .filter(|&m| is_in_minus(n, m).unwrap())
                .max();
            assert_eq!(maximal_minus(n).unwrap(), searched, "n = {n}");
        }
    }

    #[test]
    fn class_record_known_values() {
        let r3 = class_record(3).unwrap();
        assert_eq!((r3.phi, r3.period_t, r3.n_max, r3.m_max), (2, 2, 1, Some(2)));
        let r9 = class_record(9).unwrap();
        assert_eq!((r9.phi, r9.period_t, r9.n_max, r9.m_max), (6, 6, 1, Some(2)));
        let r511 = class_record(511).unwrap();
        assert_eq!((r511.phi, r511.period_t, r511.n_max, r511.m_max), (432, 9, 48, None));
    }

    #[test]
    fn class_record_invariants_small_sweep() {
        for n in (3u64..600).step_by(2) {
            let r = class_record(n).unwrap();
            assert_eq!(r.phi, r.n_max * r.period_t);
            assert_eq!(pow_mod(2, r.phi / r.n_max, n), 1);
            if let Some(m) = r.m_max {
                assert_eq!(m % 2, 0);
                assert_eq!(r.phi % m, 0);
                assert_eq!(pow_mod(2, r.phi / m, n), n - 1);
                assert_eq!(m, 2 * r.n_max);
            }
        }
    }
}
