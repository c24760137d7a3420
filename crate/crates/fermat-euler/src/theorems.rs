//! Residue-pattern classification of odd n into (2^k+), (2^k-), or neither,
//! decided from the mod-8 kinds of its distinct prime divisors instead of
//! from modular exponentiation.
//!
//! The rule table, with omega the number of distinct primes and kinds
//! I/II/III/IV for residues 1/3/5/7 mod 8:
//!
//! - omega > k: always Plus (rule th:1).
//! - k = 1: composite n is Plus; a prime power is Plus for kinds I and IV
//!   and Minus for kinds II and III (rule prop:2).
//! - omega = k >= 2: one of th:2..th:6 fires, keyed on the kind counts.
//! - omega = k - 1 = 1 (k = 2): a prime power lies in (4+) or (4-) exactly
//!   for kind I, split by the quarter-power sign (rule lem:3.1).
//! - omega = k - 1 >= 2: one of th:7..th:10 fires; th:8 additionally
//!   consults the quarter-power class of the kind-I prime.
//! - omega < k - 1 with only kind II/IV primes: Neither, since 2^k cannot
//!   divide phi(n) (rule remark-§2).
//! - omega < k - 1 otherwise: outside the rule table; no verdict is
//!   invented. The definitional oracle can still decide such inputs.

use std::fmt;

use crate::arith::{is_prime, pow_mod, Factorization, Mod8Kind};
use crate::error::{Error, Result};

/// Classification outcome for one (n, k) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// n is in (2^k+).
    Plus,
    /// n is in (2^k-).
    Minus,
    /// n is in neither class (including the case 2^k does not divide phi).
    Neither,
    /// No rule covers this input; the pattern alone does not decide it.
    OutsidePaperScope,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Plus => "Plus",
            Verdict::Minus => "Minus",
            Verdict::Neither => "Neither",
            Verdict::OutsidePaperScope => "OutsidePaperScope",
        };
        write!(f, "{s}")
    }
}

/// Identifier of the rule that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Th1,
    Th2,
    Th3,
    Th4,
    Th5,
    Th6,
    Th7,
    Th8,
    Th9,
    Th10,
    /// Half-power sign of a prime power; decides the k = 1 prime case.
    Prop2,
    /// Quarter-power criterion for prime powers at k = 2.
    Lemma31,
    /// The small-omega divisibility remark: 2^k cannot divide phi.
    Remark,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Th1 => "th:1",
            Rule::Th2 => "th:2",
            Rule::Th3 => "th:3",
            Rule::Th4 => "th:4",
            Rule::Th5 => "th:5",
            Rule::Th6 => "th:6",
            Rule::Th7 => "th:7",
            Rule::Th8 => "th:8",
            Rule::Th9 => "th:9",
            Rule::Th10 => "th:10",
            Rule::Prop2 => "prop:2",
            Rule::Lemma31 => "lem:3.1",
            Rule::Remark => "remark-§2",
        };
        write!(f, "{s}")
    }
}

/// A verdict together with the rule that produced it. `source` is None
/// exactly for [`Verdict::OutsidePaperScope`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub verdict: Verdict,
    pub source: Option<Rule>,
}

impl TheoremVerdict {
    fn decided(verdict: Verdict, rule: Rule) -> Self {
        TheoremVerdict { verdict, source: Some(rule) }
    }

    fn outside() -> Self {
        TheoremVerdict { verdict: Verdict::OutsidePaperScope, source: None }
    }
}

/// Sign of 2 raised to half the prime-power totient:
/// 2^(phi(p^a)/2) = +1 mod p^a for p = +-1 mod 8, and -1 for p = +-3 mod 8.
pub fn prime_power_half_sign(p: u64, a: u32) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    debug_assert!(a >= 1);
    Ok(match p % 8 {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => unreachable!("odd prime has odd residue mod 8"),
    })
}

/// Which of (4+) / (4-) a prime power with p = 1 mod 8 belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarterClass {
    FourPlus,
    FourMinus,
}

/// Quarter-power class of a prime p = 1 mod 8: FourPlus when
/// 2^((p-1)/4) = +1 mod p, FourMinus when it is -1. One of the two always
/// holds, and the same sign lifts to every power p^a.
pub fn prime_quarter_class(p: u64) -> Result<QuarterClass> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p % 8 != 1 {
        return Err(Error::NotOneMod8(p));
    }
    let quarter = pow_mod(2, (p - 1) / 4, p);
    if quarter == 1 {
        Ok(QuarterClass::FourPlus)
    } else if quarter == p - 1 {
        Ok(QuarterClass::FourMinus)
    } else {
        // 2^((p-1)/2) = 1 for p = 1 mod 8, so its square root is +-1.
        unreachable!("quarter power of 2 mod a kind-I prime is a sign");
    }
}

/// Counts of distinct primes per mod-8 kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueProfile {
    counts: [usize; 4],
}

impl ResidueProfile {
    /// Number of distinct primes of the given kind.
    pub fn count(&self, kind: Mod8Kind) -> usize {
        self.counts[kind as usize]
    }

    /// Total number of distinct primes.
    pub fn omega(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The kind multiset expanded in ascending order, e.g. [II, II, IV].
    pub fn kinds(&self) -> Vec<Mod8Kind> {
        let mut out = Vec::with_capacity(self.omega());
        for kind in Mod8Kind::ALL {
            out.extend(std::iter::repeat_n(kind, self.count(kind)));
        }
        out
    }

    /// Ascending kind multiset rendered as Roman numerals, e.g. "II,II,IV".
    pub fn kinds_string(&self) -> String {
        self.kinds()
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Tally the mod-8 kinds of the distinct primes of an odd factorization.
pub fn residue_profile(f: &Factorization) -> Result<ResidueProfile> {
    if !f.is_odd() {
        return Err(Error::EvenInput(f.value()));
    }
    let mut counts = [0usize; 4];
    for &(p, _) in f.factors() {
        let kind = match p % 8 {
            1 => Mod8Kind::I,
            3 => Mod8Kind::II,
            5 => Mod8Kind::III,
            7 => Mod8Kind::IV,
            _ => unreachable!("odd prime has odd residue mod 8"),
        };
        counts[kind as usize] += 1;
    }
    Ok(ResidueProfile { counts })
}

/// Decide membership of the factored odd n >= 3 in (2^k+)/(2^k-) from its
/// residue profile, per the rule table in the module docs.
///
/// Only two inputs ever require an exponentiation at classification time:
/// the quarter-power class of a kind-I prime (rules th:8 and lem:3.1).
pub fn classify_by_theorems(f: &Factorization, k: u32) -> Result<TheoremVerdict> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let profile = residue_profile(f)?;
    let omega = profile.omega() as u32;
    if omega == 0 {
        return Err(Error::BelowMinimum(1));
    }

    let c1 = profile.count(Mod8Kind::I) as u32;
    let c2 = profile.count(Mod8Kind::II) as u32;
    let c3 = profile.count(Mod8Kind::III) as u32;
    let c4 = profile.count(Mod8Kind::IV) as u32;

    if omega > k {
        return Ok(TheoremVerdict::decided(Verdict::Plus, Rule::Th1));
    }

    if k == 1 {
        // omega = k = 1: a single prime power, decided by the half sign.
        let (p, _) = f.factors()[0];
        let verdict = match p % 8 {
            1 | 7 => Verdict::Plus,
            _ => Verdict::Minus,
        };
        return Ok(TheoremVerdict::decided(verdict, Rule::Prop2));
    }

    if omega == k {
        let td = TheoremVerdict::decided;
        return Ok(if c1 > 0 {
            td(Verdict::Plus, Rule::Th2)
        } else if c3 == omega || c4 == omega {
            td(Verdict::Plus, Rule::Th3)
        } else if c2 == omega {
            td(Verdict::Minus, Rule::Th4)
        } else if c3 == 0 {
            // Kinds II and IV both present, nothing else.
            td(Verdict::Neither, Rule::Th6)
        } else if c3 == 1 {
            // r = k - 1 primes of kind II/IV against one of kind III.
            td(Verdict::Neither, Rule::Th5)
        } else {
            // 0 < r < k - 1: at least two kind-III primes in the mix.
            td(Verdict::Plus, Rule::Th5)
        });
    }

    if omega + 1 == k {
        if omega == 1 {
            // k = 2: prime powers meet (4+)/(4-) only through kind I.
            let (p, _) = f.factors()[0];
            return Ok(if p % 8 == 1 {
                match prime_quarter_class(p)? {
                    QuarterClass::FourPlus => {
                        TheoremVerdict::decided(Verdict::Plus, Rule::Lemma31)
                    }
                    QuarterClass::FourMinus => {
                        TheoremVerdict::decided(Verdict::Minus, Rule::Lemma31)
                    }
                }
            } else {
                TheoremVerdict::decided(Verdict::Neither, Rule::Lemma31)
            });
        }

        let td = TheoremVerdict::decided;
        return Ok(if c1 >= 2 || (c1 >= 1 && c3 >= 1) {
            td(Verdict::Plus, Rule::Th7)
        } else if c1 == 1 {
            // One kind-I prime, the rest kind II/IV: the quarter class of
            // the kind-I prime settles it.
            let (p, _) = f
                .factors()
                .iter()
                .find(|&&(p, _)| p % 8 == 1)
                .copied()
                .expect("profile counted a kind-I prime");
            match prime_quarter_class(p)? {
                QuarterClass::FourPlus => td(Verdict::Plus, Rule::Th8),
                QuarterClass::FourMinus => td(Verdict::Neither, Rule::Th8),
            }
        } else if c3 == omega {
            if k == 3 {
                td(Verdict::Minus, Rule::Th9)
            } else {
                td(Verdict::Plus, Rule::Th9)
            }
        } else {
            // No kind I, r = c3 kind-III primes, the rest kind II/IV.
            if c3 <= 2 {
                td(Verdict::Neither, Rule::Th10)
            } else {
                td(Verdict::Plus, Rule::Th10)
            }
        });
    }

    // omega < k - 1.
    if c2 + c4 == omega {
        // Only kind II/IV primes: phi has 2-adic valuation omega < k.
        return Ok(TheoremVerdict::decided(Verdict::Neither, Rule::Remark));
    }
    Ok(TheoremVerdict::outside())
}

/// Verdicts for every k in [1, omega + 1], plus one extra entry at
/// k = omega + 2 when the profile has only kind II/IV primes — that entry
/// stands for all larger k, where the divisibility remark pins Neither.
pub fn classify_all_k(f: &Factorization) -> Result<Vec<(u32, TheoremVerdict)>> {
    let profile = residue_profile(f)?;
    let omega = profile.omega() as u32;
    if omega == 0 {
        return Err(Error::BelowMinimum(1));
    }
    let mut out = Vec::new();
    for k in 1..=omega + 1 {
        out.push((k, classify_by_theorems(f, k)?));
    }
    let all_ii_iv =
        profile.count(Mod8Kind::II) + profile.count(Mod8Kind::IV) == profile.omega();
    if all_ii_iv {
        out.push((omega + 2, classify_by_theorems(f, omega + 2)?));
    }
    Ok(out)
}

/// Verdict for a triple product of distinct primes at k = 3, read straight
/// from the kind-triple tables:
///
/// - (II, II, II) is Minus;
/// - (I, I, X), (I, III, X), (I, II, II), (I, II, IV), (I, IV, IV),
///   (IV, IV, IV), and (III, III, X) are Plus;
/// - (III, II, II), (III, II, IV), (III, IV, IV), (II, IV, II), and
///   (II, IV, IV) are Neither.
///
/// The tables cover all 64 ordered kind triples up to permutation. This is
/// an independent encoding kept for cross-checking [`classify_by_theorems`].
pub fn triple_kind_fixture(kinds: [Mod8Kind; 3]) -> Verdict {
    use Mod8Kind::{I, II, III, IV};
    let mut sorted = kinds;
    sorted.sort();
    match sorted {
        [II, II, II] => Verdict::Minus,
        // Neither row: one III among II/IV, or II mixed with IV.
        [II, II, III] | [II, III, IV] | [III, IV, IV] | [II, II, IV] | [II, IV, IV] => {
            Verdict::Neither
        }
        // Plus rows; (III, III, X) sorts to [II, III, III] when X is II.
        [I, _, _] | [II, III, III] | [III, III, _] | [IV, IV, IV] => Verdict::Plus,
        other => unreachable!("kind triple {other:?} missing from the tables"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    fn classify_n(n: u64, k: u32) -> TheoremVerdict {
        classify_by_theorems(&factorize(n).unwrap(), k).unwrap()
    }

    #[test]
    fn half_sign_known_values() {
        assert_eq!(prime_power_half_sign(7, 1).unwrap(), 1);
        assert_eq!(prime_power_half_sign(3, 2).unwrap(), -1); // 2^3 = -1 mod 9
        assert_eq!(prime_power_half_sign(5, 1).unwrap(), -1); // 2^2 = -1 mod 5
        assert_eq!(prime_power_half_sign(2, 1), Err(Error::NotOddPrime(2)));
        assert_eq!(prime_power_half_sign(15, 1), Err(Error::NotOddPrime(15)));
    }

    #[test]
    fn half_sign_matches_exponentiation() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
            for a in 1..=3u32 {
                let pa = p.pow(a);
                let phi = (p - 1) * p.pow(a - 1);
                let expected = pow_mod(2, phi / 2, pa);
                match prime_power_half_sign(p, a).unwrap() {
                    1 => assert_eq!(expected, 1, "p={p} a={a}"),
                    -1 => assert_eq!(expected, pa - 1, "p={p} a={a}"),
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn quarter_class_known_values() {
        assert_eq!(prime_quarter_class(17).unwrap(), QuarterClass::FourMinus); // 2^4 = 16
        assert_eq!(prime_quarter_class(73).unwrap(), QuarterClass::FourPlus); // 2^18 = 1
        assert_eq!(prime_quarter_class(5), Err(Error::NotOneMod8(5)));
        assert_eq!(prime_quarter_class(21), Err(Error::NotOddPrime(21)));
    }

    #[test]
    fn residue_profile_known_values() {
        let profile = residue_profile(&factorize(33).unwrap()).unwrap(); // 3 * 11
        assert_eq!(profile.count(Mod8Kind::II), 2);
        assert_eq!(profile.omega(), 2);

        let profile = residue_profile(&factorize(65).unwrap()).unwrap(); // 5 * 13
        assert_eq!(profile.count(Mod8Kind::III), 2);
        assert_eq!(profile.omega(), 2);

        let profile = residue_profile(&factorize(3 * 7 * 17).unwrap()).unwrap();
        assert_eq!(profile.count(Mod8Kind::I), 1);
        assert_eq!(profile.count(Mod8Kind::II), 1);
        assert_eq!(profile.count(Mod8Kind::IV), 1);
        assert_eq!(profile.omega(), 3);
        assert_eq!(profile.kinds_string(), "I,II,IV");

        assert_eq!(
            residue_profile(&factorize(6).unwrap()),
            Err(Error::EvenInput(6))
        );
    }

    #[test]
    fn classify_known_values() {
        // 3 * 11 * 19: every prime of kind II.
        let v = classify_n(3 * 11 * 19, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Minus, Some(Rule::Th4)));

        // 5 * 13: both kind III, two primes at k = 3.
        let v = classify_n(65, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Minus, Some(Rule::Th9)));

        // 3 * 7: kinds II and IV mixed.
        let v = classify_n(21, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Th6)));

        // 3 * 5: one kind-III prime against one of kind II.
        let v = classify_n(15, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Th5)));

        // 7 * 73: a kind-I prime present.
        let v = classify_n(511, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Th2)));

        // 7 * 23: all kind IV.
        let v = classify_n(161, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Th3)));

        // Single prime of kind II at k = 1.
        let v = classify_n(3, 1);
        assert_eq!((v.verdict, v.source), (Verdict::Minus, Some(Rule::Prop2)));
    }

    #[test]
    fn classify_prime_powers_at_k2() {
        let v = classify_n(73, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Lemma31)));
        let v = classify_n(17, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Minus, Some(Rule::Lemma31)));
        let v = classify_n(9, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Lemma31)));
        let v = classify_n(5, 2);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Lemma31)));
    }

    #[test]
    fn classify_small_omega_cases() {
        // 3 * 7 at k = 4: omega = 2 < k - 1, only kinds II/IV.
        let v = classify_n(21, 4);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Remark)));

        // 73 at k = 3: omega = 1 < k - 1 with a kind-I prime — not covered.
        let v = classify_n(73, 3);
        assert_eq!(v.verdict, Verdict::OutsidePaperScope);
        assert_eq!(v.source, None);

        // 5 at k = 3: kind III below the diagonal — not covered either.
        let v = classify_n(5, 3);
        assert_eq!(v.verdict, Verdict::OutsidePaperScope);
    }

    #[test]
    fn classify_k_minus_one_rules() {
        // 17 * 89: two kind-I primes at k = 3.
        let v = classify_n(17 * 89, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Th7)));

        // 73 * 7: 73 is in (4+), 7 of kind IV.
        let v = classify_n(73 * 7, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Th8)));

        // 17 * 7: 17 is in (4-), 7 of kind IV.
        let v = classify_n(17 * 7, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Th8)));

        // 3 * 7 at k = 3: no kind III at all (r = 0).
        let v = classify_n(21, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Th10)));

        // 5 * 3 at k = 3: one kind III (r = 1).
        let v = classify_n(15, 3);
        assert_eq!((v.verdict, v.source), (Verdict::Neither, Some(Rule::Th10)));

        // 5 * 13 * 29 * 3 at k = 5: r = 3 kind-III primes beat the bound.
        let v = classify_n(5 * 13 * 29 * 3, 5);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Th10)));

        // 5 * 13 * 29 at k = 4: all kind III above k = 3.
        let v = classify_n(5 * 13 * 29, 4);
        assert_eq!((v.verdict, v.source), (Verdict::Plus, Some(Rule::Th9)));
    }

    #[test]
    fn classify_domain_errors() {
        let f = factorize(15).unwrap();
        assert_eq!(classify_by_theorems(&f, 0), Err(Error::ZeroK));
        let even = factorize(6).unwrap();
        assert_eq!(classify_by_theorems(&even, 2), Err(Error::EvenInput(6)));
        let one = factorize(1).unwrap();
        assert_eq!(classify_by_theorems(&one, 2), Err(Error::BelowMinimum(1)));
    }

    #[test]
    fn classify_all_k_shape() {
        // 21 = 3 * 7 is all kind II/IV, so the remark entry is appended.
        let rows = classify_all_k(&factorize(21).unwrap()).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows.last().unwrap().0, 4);
        assert_eq!(rows.last().unwrap().1.source, Some(Rule::Remark));

        // 65 = 5 * 13 has kind-III primes: k runs 1..=3 only.
        let rows = classify_all_k(&factorize(65).unwrap()).unwrap();
        assert_eq!(rows.len(), 3);
    }

    #[test]
    fn triple_fixture_known_values() {
        use Mod8Kind::{I, II, III, IV};
        assert_eq!(triple_kind_fixture([II, II, II]), Verdict::Minus);
        assert_eq!(triple_kind_fixture([IV, IV, IV]), Verdict::Plus);
        assert_eq!(triple_kind_fixture([III, II, IV]), Verdict::Neither);
        assert_eq!(triple_kind_fixture([I, II, IV]), Verdict::Plus);
        assert_eq!(triple_kind_fixture([III, III, II]), Verdict::Plus);
    }
}
