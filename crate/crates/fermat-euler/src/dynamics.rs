//! The doubling permutation x -> 2x mod n on the Euler group of an odd n,
//! its cycle decomposition, and the relation phi(n) = N * T between the
//! cycle count N and the common cycle length T.
//!
//! The doubling map permutes the full residue ring, but only its restriction
//! to the residues coprime to n is treated here; that is where every cycle
//! has the same length.

use crate::arith::{euler_phi, factorize, gcd, order_of_two, pow_mod};
use crate::classes::maximal_plus;
use crate::error::{Error, Result};

/// Enumeration guard: groups with phi(n) above this are not materialized.
pub const GROUP_ENUMERATION_LIMIT: u64 = 10_000_000;

/// Full cycle decomposition of the doubling map on the Euler group.
///
/// Cycles are canonical: each is listed in doubling order starting from its
/// smallest member, and cycles are sorted by that leading element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    pub n: u64,
    /// Common length of every cycle; the order of 2 mod n.
    pub period_t: u64,
    /// Number of cycles; phi(n) = cycle_count * period_t.
    pub cycle_count: u64,
    pub cycles: Vec<Vec<u64>>,
}

fn check_enumerable(n: u64) -> Result<u64> {
    if n % 2 == 0 {
        return Err(Error::EvenInput(n));
    }
    if n < 3 {
        return Err(Error::BelowMinimum(n));
    }
    let phi = euler_phi(&factorize(n)?);
    if phi > GROUP_ENUMERATION_LIMIT {
        return Err(Error::GroupTooLarge { n, phi, limit: GROUP_ENUMERATION_LIMIT });
    }
    Ok(phi)
}

/// Ascending residues in [1, n) coprime to n; phi(n) of them.
pub fn euler_group(n: u64) -> Result<Vec<u64>> {
    let phi = check_enumerable(n)?;
    let mut members = Vec::with_capacity(phi as usize);
    for x in 1..n {
        if gcd(x, n) == 1 {
            members.push(x);
        }
    }
    debug_assert_eq!(members.len() as u64, phi);
    Ok(members)
}

/// Decompose the doubling permutation into cycles.
///
/// Scanning group members in ascending order makes each discovered cycle
/// start at its smallest element and orders cycles by leading element, so
/// the output is canonical with no post-processing.
pub fn cycle_decomposition(n: u64) -> Result<CycleStructure> {
    let members = euler_group(n)?;
    let mut visited = vec![false; members.len()];
    let mut cycles: Vec<Vec<u64>> = Vec::new();
    for start_index in 0..members.len() {
        if visited[start_index] {
            continue;
        }
        let start = members[start_index];
        let mut cycle = Vec::new();
        let mut x = start;
        loop {
            let slot = members.binary_search(&x).expect("orbit stays coprime to n");
            visited[slot] = true;
            cycle.push(x);
            x = x * 2 % n;
            if x == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    let period_t = cycles.first().map_or(0, |c| c.len()) as u64;
    let cycle_count = cycles.len() as u64;
    Ok(CycleStructure { n, period_t, cycle_count, cycles })
}

/// Check that all cycles share one length T, that phi(n) = N * T, and that
/// 2^(phi(n)/N) = 1 mod n. Holds for every odd n >= 3.
pub fn verify_theorem_a(n: u64) -> Result<bool> {
    let structure = cycle_decomposition(n)?;
    let phi = euler_phi(&factorize(n)?);
    let uniform = structure
        .cycles
        .iter()
        .all(|c| c.len() as u64 == structure.period_t);
    let product = structure.cycle_count * structure.period_t == phi;
    let congruence = pow_mod(2, phi / structure.cycle_count, n) == 1;
    Ok(uniform && product && congruence)
}

/// Cross-check helper: the cycle count must equal the maximal plus index
/// and the period must equal the order of 2.
pub fn matches_class_structure(structure: &CycleStructure) -> Result<bool> {
    let n = structure.n;
    let phi = euler_phi(&factorize(n)?);
    let t = order_of_two(n, &factorize(phi)?)?;
    Ok(structure.period_t == t && structure.cycle_count == maximal_plus(n)?)
}
