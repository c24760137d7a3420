//! Exhaustive verification of every class-theoretic claim against the
//! definitional modular-exponentiation oracle, at caller-chosen desk scale.
//!
//! Each check sweeps a range, counts cases, and records the first
//! counterexample if one appears. A clean run is the regression gate for
//! the whole crate; the CLI exposes these suites under `verify`.

use std::collections::HashMap;

use crate::arith::{
    divisors, euler_phi, factorize, is_prime, order_of_two, pow_mod, Factorization, Mod8Kind,
};
use crate::classes::{class_record, is_in_minus, is_in_plus, maximal_minus, maximal_plus};
use crate::dynamics::{cycle_decomposition, euler_group, verify_theorem_a};
use crate::error::Result;
use crate::theorems::{
    classify_by_theorems, prime_quarter_class, residue_profile, triple_kind_fixture,
    QuarterClass, ResidueProfile, Verdict,
};

/// Which property suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// The four definitional class properties plus maximality.
    Props,
    /// Classifier-vs-oracle equivalence and the fixture tables.
    Theorems,
    /// Cycle decomposition and the phi = N * T relation.
    Dynamics,
    /// Everything.
    All,
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

struct Tally {
    name: &'static str,
    checked: u64,
    failed: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, checked: 0, failed: 0, first_failure: None }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            checked: self.checked,
            failed: self.failed,
            first_failure: self.first_failure,
            note: None,
        }
    }

    fn finish_with_note(self, note: String) -> CheckReport {
        let mut report = self.finish();
        report.note = Some(note);
        report
    }
}

fn odd_values(max_n: u64) -> impl Iterator<Item = u64> {
    (3..=max_n).step_by(2)
}

fn odd_primes_below(cap: u64) -> Vec<u64> {
    (3..cap).step_by(2).filter(|&p| is_prime(p)).collect()
}

/// The rule table decides (profile, k) exactly when n has at least k - 1
/// distinct primes, or when every prime is of kind II or IV. Everything
/// else is outside scope. Encoded independently of the dispatcher.
pub fn rule_table_covers(profile: &ResidueProfile, k: u32) -> bool {
    let omega = profile.omega() as u32;
    let all_ii_iv =
        profile.count(Mod8Kind::II) + profile.count(Mod8Kind::IV) == profile.omega();
    omega + 1 >= k || all_ii_iv
}

/// Master equivalence: every Plus/Minus/Neither verdict must match the
/// definitional test of (2^k+)/(2^k-), and OutsidePaperScope must appear
/// exactly off the covered region. The note reports how many pairs fell
/// outside scope.
pub fn check_oracle_equivalence(max_n: u64, max_k: u32) -> Result<CheckReport> {
    let mut tally = Tally::new("classifier equals definitional oracle");
    let mut outside = 0u64;
    for n in odd_values(max_n) {
        let f = factorize(n)?;
        let profile = residue_profile(&f)?;
        for k in 1..=max_k {
            let verdict = classify_by_theorems(&f, k)?.verdict;
            let covered = rule_table_covers(&profile, k);
            let plus = is_in_plus(n, 1u64 << k)?;
            let minus = is_in_minus(n, 1u64 << k)?;
            let ok = match verdict {
                Verdict::Plus => covered && plus && !minus,
                Verdict::Minus => covered && minus && !plus,
                Verdict::Neither => covered && !plus && !minus,
                Verdict::OutsidePaperScope => {
                    outside += 1;
                    !covered
                }
            };
            tally.case(ok, || {
                format!(
                    "n={n} k={k}: verdict {verdict}, oracle plus={plus} minus={minus}, covered={covered}"
                )
            });
        }
    }
    Ok(tally.finish_with_note(format!(
        "{outside} pairs outside scope (omega < k-1 with a kind-I or kind-III prime)"
    )))
}

/// The four definitional properties, maximality by exhaustive divisor
/// search, and the record invariants, for odd n up to max_n.
pub fn check_section1_properties(max_n: u64) -> Result<Vec<CheckReport>> {
    let mut chain = Tally::new("plus classes closed under divisors");
    let mut odd_minus = Tally::new("odd minus classes empty");
    let mut minus_descent = Tally::new("minus classes closed under odd quotients");
    let mut double_minus = Tally::new("(2N-) contained in (N+)");
    let mut maximality = Tally::new("maximal indices match divisor search");
    let mut record = Tally::new("class record invariants");

    for n in odd_values(max_n) {
        let phi = euler_phi(&factorize(n)?);
        let phi_divisors = divisors(phi);
        let mut plus: HashMap<u64, bool> = HashMap::new();
        let mut minus: HashMap<u64, bool> = HashMap::new();
        for &d in &phi_divisors {
            plus.insert(d, is_in_plus(n, d)?);
            minus.insert(d, is_in_minus(n, d)?);
        }

        for &big in &phi_divisors {
            if plus[&big] {
                for &small in &divisors(big) {
                    chain.case(plus[&small], || {
                        format!("n={n}: in ({big}+) but not ({small}+)")
                    });
                }
            }
            if big % 2 == 1 {
                odd_minus.case(!minus[&big], || format!("n={n}: odd M={big} in minus"));
            }
            if minus[&big] {
                for &small in &divisors(big) {
                    if (big / small) % 2 == 1 {
                        minus_descent.case(minus[&small], || {
                            format!("n={n}: in ({big}-) but not ({small}-)")
                        });
                    }
                }
            }
            if big % 2 == 0 && minus[&big] {
                double_minus.case(plus[&(big / 2)], || {
                    format!("n={n}: in ({big}-) but not ({}+)", big / 2)
                });
            }
        }

        let searched_plus = phi_divisors.iter().copied().filter(|d| plus[d]).max();
        let searched_minus = phi_divisors.iter().copied().filter(|d| minus[d]).max();
        let n_max = maximal_plus(n)?;
        let m_max = maximal_minus(n)?;
        maximality.case(searched_plus == Some(n_max), || {
            format!("n={n}: maximal_plus={n_max}, search found {searched_plus:?}")
        });
        maximality.case(searched_minus == m_max, || {
            format!("n={n}: maximal_minus={m_max:?}, search found {searched_minus:?}")
        });
        if let Some(m) = m_max {
            maximality.case(m == 2 * n_max, || {
                format!("n={n}: m_max={m} is not twice n_max={n_max}")
            });
        }

        let r = class_record(n)?;
        let minus_ok = match r.m_max {
            Some(m) => m % 2 == 0 && r.phi % m == 0 && pow_mod(2, r.phi / m, n) == n - 1,
            None => true,
        };
        record.case(
            r.phi == r.n_max * r.period_t && pow_mod(2, r.phi / r.n_max, n) == 1 && minus_ok,
            || format!("n={n}: inconsistent record {r:?}"),
        );
    }

    Ok(vec![
        chain.finish(),
        odd_minus.finish(),
        minus_descent.finish(),
        double_minus.finish(),
        maximality.finish(),
        record.finish(),
    ])
}

/// Half-power signs: 2^(phi(p^a)/2) mod p^a must be +1 for kinds I/IV and
/// -1 for kinds II/III, for primes up to max_prime and a in 1..=3.
pub fn check_prop2_signs(max_prime: u64) -> Result<CheckReport> {
    let mut tally = Tally::new("half-power sign of prime powers");
    for p in odd_primes_below(max_prime.saturating_add(1)) {
        for a in 1..=3u32 {
            let Some(pa) = checked_power(p, a) else { continue };
            let phi = (p - 1) * p.pow(a - 1);
            let sign = crate::theorems::prime_power_half_sign(p, a)?;
            let got = pow_mod(2, phi / 2, pa);
            let expected = if sign == 1 { 1 } else { pa - 1 };
            tally.case(got == expected, || {
                format!("p={p} a={a}: half power {got}, expected {expected}")
            });
        }
    }
    Ok(tally.finish())
}

/// Quarter-power criterion, both directions: p^a lies in (4+) or (4-)
/// exactly when p = 1 mod 8, and for those primes the sign of the quarter
/// power of p^a agrees with the prime's quarter class, for a in 1..=2.
pub fn check_lemma_quarter(max_prime: u64) -> Result<CheckReport> {
    let mut tally = Tally::new("quarter-power membership criterion");
    for p in odd_primes_below(max_prime.saturating_add(1)) {
        for a in 1..=2u32 {
            let Some(pa) = checked_power(p, a) else { continue };
            let phi = (p - 1) * p.pow(a - 1);
            let in_four = phi % 4 == 0 && {
                let q = pow_mod(2, phi / 4, pa);
                q == 1 || q == pa - 1
            };
            tally.case(in_four == (p % 8 == 1), || {
                format!("p={p} a={a}: (4+-) membership {in_four}")
            });
            if p % 8 == 1 {
                let lifted = pow_mod(2, phi / 4, pa);
                let expected = match prime_quarter_class(p)? {
                    QuarterClass::FourPlus => 1,
                    QuarterClass::FourMinus => pa - 1,
                };
                tally.case(lifted == expected, || {
                    format!("p={p} a={a}: quarter sign does not lift")
                });
            }
        }
    }
    Ok(tally.finish())
}

fn checked_power(p: u64, a: u32) -> Option<u64> {
    let mut value = 1u64;
    for _ in 0..a {
        value = value.checked_mul(p)?;
    }
    (value <= crate::arith::MAX_INPUT).then_some(value)
}

/// Every kind-count profile on the diagonal omega = k and the first
/// subdiagonal omega = k - 1 must satisfy exactly one rule hypothesis.
/// The hypotheses are restated here independently of the dispatcher.
pub fn check_profile_exhaustiveness(max_k: u32) -> CheckReport {
    let mut tally = Tally::new("rule hypotheses partition the profiles");
    let profiles = |omega: u32| -> Vec<(u32, u32, u32, u32)> {
        let mut out = Vec::new();
        for c1 in 0..=omega {
            for c2 in 0..=omega - c1 {
                for c3 in 0..=omega - c1 - c2 {
                    out.push((c1, c2, c3, omega - c1 - c2 - c3));
                }
            }
        }
        out
    };

    for k in 2..=max_k {
        let omega = k;
        for (c1, c2, c3, c4) in profiles(omega) {
            let hypotheses = [
                c1 >= 1,                                    // at least one kind I
                c1 == 0 && (c3 == omega || c4 == omega),    // all III or all IV
                c2 == omega,                                // all II
                c1 == 0 && c3 >= 1 && c3 < omega && c2 + c4 >= 1, // III against II/IV
                c1 == 0 && c3 == 0 && c2 >= 1 && c4 >= 1,   // II and IV mixed
            ];
            let fired = hypotheses.iter().filter(|&&h| h).count();
            tally.case(fired == 1, || {
                format!("omega=k={k}: profile ({c1},{c2},{c3},{c4}) fired {fired} rules")
            });
        }
    }

    for k in 3..=max_k {
        let omega = k - 1;
        for (c1, c2, c3, c4) in profiles(omega) {
            let hypotheses = [
                c1 >= 2 || (c1 >= 1 && c3 >= 1), // two kind I, or kind I with kind III
                c1 == 1 && c3 == 0,              // one kind I among II/IV
                c1 == 0 && c3 == omega,          // all III
                c1 == 0 && c3 < omega,           // no kind I, r = c3 kind III
            ];
            let fired = hypotheses.iter().filter(|&&h| h).count();
            tally.case(fired == 1, || {
                format!("omega=k-1={omega}: profile ({c1},{c2},{c3},{c4}) fired {fired} rules")
            });
        }
    }
    tally.finish()
}

/// Definitional verdict of a hand-built prime-power product at class 2^k,
/// computed from the known parts without refactorizing.
fn definitional_verdict(parts: &[(u64, u32)], k: u32) -> Verdict {
    let n: u64 = parts.iter().map(|&(p, a)| p.pow(a)).product();
    let phi: u64 = parts.iter().map(|&(p, a)| (p - 1) * p.pow(a - 1)).product();
    let index = 1u64 << k;
    if phi % index != 0 {
        return Verdict::Neither;
    }
    let power = pow_mod(2, phi / index, n);
    if power == 1 {
        Verdict::Plus
    } else if power == n - 1 {
        Verdict::Minus
    } else {
        Verdict::Neither
    }
}

fn classifier_verdict(parts: Vec<(u64, u32)>, k: u32) -> Result<Verdict> {
    let f = Factorization::from_parts(parts)?;
    Ok(classify_by_theorems(&f, k)?.verdict)
}

/// The (4+-) catalogue: triple and quadruple products are Plus; pair
/// products follow the kind table; prime powers need p = 1 mod 8; and no
/// n = 5 or 7 mod 8 is ever in (4-).
pub fn check_four_class_fixtures(prime_cap: u64, max_n: u64) -> Result<CheckReport> {
    let mut tally = Tally::new("(4+-) fixture catalogue");
    let primes = odd_primes_below(prime_cap);

    // More than two distinct primes: always Plus.
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            for l in j + 1..primes.len() {
                let parts = vec![(primes[i], 1), (primes[j], 1), (primes[l], 1)];
                let ok = definitional_verdict(&parts, 2) == Verdict::Plus
                    && classifier_verdict(parts.clone(), 2)? == Verdict::Plus;
                tally.case(ok, || format!("triple {parts:?} not in (4+)"));
            }
        }
    }
    let quad_primes: Vec<u64> = primes.iter().copied().take_while(|&p| p < 60).collect();
    for i in 0..quad_primes.len() {
        for j in i + 1..quad_primes.len() {
            for l in j + 1..quad_primes.len() {
                for m in l + 1..quad_primes.len() {
                    let parts = vec![
                        (quad_primes[i], 1),
                        (quad_primes[j], 1),
                        (quad_primes[l], 1),
                        (quad_primes[m], 1),
                    ];
                    let ok = definitional_verdict(&parts, 2) == Verdict::Plus
                        && classifier_verdict(parts.clone(), 2)? == Verdict::Plus;
                    tally.case(ok, || format!("quadruple {parts:?} not in (4+)"));
                }
            }
        }
    }

    // Two distinct primes: the kind pair decides.
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let (p, q) = (primes[i], primes[j]);
            let mut pair = [p % 8, q % 8];
            pair.sort_unstable();
            let expected = match pair {
                [1, _] => Verdict::Plus,
                [5, 5] | [7, 7] => Verdict::Plus,
                [3, 3] => Verdict::Minus,
                [3, 5] | [3, 7] | [5, 7] => Verdict::Neither,
                _ => unreachable!("odd primes have odd residues"),
            };
            for (a, b) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
                let parts = vec![(p, a), (q, b)];
                let ok = definitional_verdict(&parts, 2) == expected
                    && classifier_verdict(parts.clone(), 2)? == expected;
                tally.case(ok, || format!("pair {parts:?}: expected {expected}"));
            }
        }
    }

    // Prime powers: membership in (4+)/(4-) forces p = 1 mod 8.
    for &p in &primes {
        for a in 1..=3u32 {
            let Some(_) = checked_power(p, a) else { continue };
            let verdict = definitional_verdict(&[(p, a)], 2);
            let in_four = verdict == Verdict::Plus || verdict == Verdict::Minus;
            tally.case(in_four == (p % 8 == 1), || {
                format!("p={p} a={a}: (4+-) membership {in_four}")
            });
        }
    }

    // Every odd n = 5 or 7 mod 8 stays out of (4-).
    for n in odd_values(max_n) {
        if n % 8 == 5 || n % 8 == 7 {
            tally.case(!is_in_minus(n, 4)?, || format!("n={n} = {} mod 8 in (4-)", n % 8));
        }
    }
    Ok(tally.finish())
}

/// The (8+-) catalogue: kind-triple tables for triple products and the
/// quarter-class pair table for two-prime products.
pub fn check_eight_class_fixtures(prime_cap: u64) -> Result<CheckReport> {
    let mut tally = Tally::new("(8+-) fixture catalogue");
    let primes = odd_primes_below(prime_cap);

    // Triple products, exponent 1: fixture table, classifier, and oracle
    // must all agree.
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            for l in j + 1..primes.len() {
                let parts = vec![(primes[i], 1), (primes[j], 1), (primes[l], 1)];
                let kinds = [
                    Mod8Kind::of_prime(primes[i])?,
                    Mod8Kind::of_prime(primes[j])?,
                    Mod8Kind::of_prime(primes[l])?,
                ];
                let expected = triple_kind_fixture(kinds);
                let ok = definitional_verdict(&parts, 3) == expected
                    && classifier_verdict(parts.clone(), 3)? == expected;
                tally.case(ok, || format!("triple {parts:?}: expected {expected}"));
            }
        }
    }

    // Exponent lifting on a smaller triple range.
    let small: Vec<u64> = primes.iter().copied().take_while(|&p| p < 50).collect();
    for i in 0..small.len() {
        for j in i + 1..small.len() {
            for l in j + 1..small.len() {
                let kinds = [
                    Mod8Kind::of_prime(small[i])?,
                    Mod8Kind::of_prime(small[j])?,
                    Mod8Kind::of_prime(small[l])?,
                ];
                let expected = triple_kind_fixture(kinds);
                for a in 1..=2u32 {
                    for b in 1..=2u32 {
                        for c in 1..=2u32 {
                            let parts = vec![(small[i], a), (small[j], b), (small[l], c)];
                            let ok = definitional_verdict(&parts, 3) == expected
                                && classifier_verdict(parts.clone(), 3)? == expected;
                            tally.case(ok, || {
                                format!("triple {parts:?}: expected {expected}")
                            });
                        }
                    }
                }
            }
        }
    }

    // Two-prime products at k = 3, per the pair table.
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let (p, q) = (primes[i], primes[j]);
            let (rp, rq) = (p % 8, q % 8);
            let quarter_plus = |prime: u64| -> Result<bool> {
                Ok(prime_quarter_class(prime)? == QuarterClass::FourPlus)
            };
            // One kind-I prime against a kind II/IV prime: its quarter
            // class decides. Kind III against II/IV is absent from the
            // pair table and left to the master equivalence check.
            let expected: Option<Verdict> = if rp == 5 && rq == 5 {
                Some(Verdict::Minus)
            } else if (rp == 1 && (rq == 1 || rq == 5)) || (rq == 1 && (rp == 1 || rp == 5)) {
                // Kind I beside kind I or III is Plus; the both-kind-I case
                // is also the row for two quarter-class primes.
                Some(Verdict::Plus)
            } else if rp == 1 && (rq == 3 || rq == 7) {
                Some(if quarter_plus(p)? { Verdict::Plus } else { Verdict::Neither })
            } else if rq == 1 && (rp == 3 || rp == 7) {
                Some(if quarter_plus(q)? { Verdict::Plus } else { Verdict::Neither })
            } else if (rp == 3 || rp == 7) && (rq == 3 || rq == 7) {
                Some(Verdict::Neither)
            } else {
                None
            };
            if let Some(expected) = expected {
                for (a, b) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
                    let parts = vec![(p, a), (q, b)];
                    let ok = definitional_verdict(&parts, 3) == expected
                        && classifier_verdict(parts.clone(), 3)? == expected;
                    tally.case(ok, || format!("pair {parts:?}: expected {expected}"));
                }
            }
        }
    }
    Ok(tally.finish())
}

/// All 64 ordered kind triples must be covered by the triple tables and
/// receive a decided verdict from the classifier.
pub fn check_triple_coverage() -> Result<CheckReport> {
    let mut tally = Tally::new("all 64 ordered kind triples decided");
    // Three distinct primes of each kind, so repeated kinds stay distinct.
    let witnesses = |kind: Mod8Kind| -> [u64; 3] {
        match kind {
            Mod8Kind::I => [17, 41, 73],
            Mod8Kind::II => [3, 11, 19],
            Mod8Kind::III => [5, 13, 29],
            Mod8Kind::IV => [7, 23, 31],
        }
    };
    for first in Mod8Kind::ALL {
        for second in Mod8Kind::ALL {
            for third in Mod8Kind::ALL {
                let mut used = [0usize; 4];
                let mut parts = Vec::new();
                for kind in [first, second, third] {
                    let slot = &mut used[kind as usize];
                    parts.push((witnesses(kind)[*slot], 1u32));
                    *slot += 1;
                }
                parts.sort_unstable();
                let expected = triple_kind_fixture([first, second, third]);
                let verdict = classifier_verdict(parts.clone(), 3)?;
                let oracle = definitional_verdict(&parts, 3);
                let ok = verdict != Verdict::OutsidePaperScope
                    && verdict == expected
                    && oracle == expected;
                tally.case(ok, || {
                    format!(
                        "triple ({first},{second},{third}) -> {parts:?}: fixture {expected}, classifier {verdict}, oracle {oracle}"
                    )
                });
            }
        }
    }
    Ok(tally.finish())
}

/// Products of kind-II prime powers are 1 or 3 mod 8 — the residue fact
/// behind the (4-) exclusions for n = 5 or 7 mod 8.
pub fn check_kind_square_closure(prime_cap: u64) -> Result<CheckReport> {
    let mut tally = Tally::new("kind-II products are 1 or 3 mod 8");
    let kind_ii: Vec<u64> =
        odd_primes_below(prime_cap).into_iter().filter(|&p| p % 8 == 3).collect();
    for i in 0..kind_ii.len() {
        for j in i + 1..kind_ii.len() {
            for a in 1..=2u32 {
                for b in 1..=2u32 {
                    let residue = (kind_ii[i] as u128).pow(a) * (kind_ii[j] as u128).pow(b) % 8;
                    tally.case(residue == 1 || residue == 3, || {
                        format!(
                            "{}^{a} * {}^{b} = {residue} mod 8",
                            kind_ii[i], kind_ii[j]
                        )
                    });
                }
            }
        }
    }
    Ok(tally.finish())
}

/// Cycle checks: the relation phi = N * T with the congruence, the cycle
/// count equal to the maximal plus index, the period equal to the order of
/// 2, and the cycles forming a canonical doubling partition of the group.
pub fn check_dynamics(max_n: u64) -> Result<Vec<CheckReport>> {
    let mut relation = Tally::new("phi = N * T with unit congruence");
    let mut partition = Tally::new("cycles partition the Euler group");

    for n in odd_values(max_n) {
        relation.case(verify_theorem_a(n)?, || format!("n={n}: relation fails"));

        let structure = cycle_decomposition(n)?;
        let phi = euler_phi(&factorize(n)?);
        let order = order_of_two(n, &factorize(phi)?)?;
        relation.case(
            structure.cycle_count == maximal_plus(n)? && structure.period_t == order,
            || format!("n={n}: N or T disagrees with the class record"),
        );

        let mut members: Vec<u64> = structure.cycles.iter().flatten().copied().collect();
        members.sort_unstable();
        let canonical = structure.cycles.iter().all(|cycle| {
            cycle[0] == *cycle.iter().min().unwrap()
                && cycle.windows(2).all(|w| w[1] == w[0] * 2 % n)
                && cycle[0] == cycle[cycle.len() - 1] * 2 % n
        });
        partition.case(
            members == euler_group(n)? && canonical,
            || format!("n={n}: cycles are not a canonical partition"),
        );
    }
    Ok(vec![relation.finish(), partition.finish()])
}

/// Run one suite (or all of them) over odd n in [3, max_n] and k up to
/// max_k. Fixture prime caps follow max_n, topping out at 500 for the kind
/// catalogues and 10^4 for the residue closure.
pub fn run_suite(suite: Suite, max_n: u64, max_k: u32) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    if matches!(suite, Suite::Props | Suite::All) {
        reports.extend(check_section1_properties(max_n)?);
    }
    if matches!(suite, Suite::Theorems | Suite::All) {
        reports.push(check_oracle_equivalence(max_n, max_k)?);
        reports.push(check_profile_exhaustiveness(max_k));
        reports.push(check_prop2_signs(max_n)?);
        reports.push(check_lemma_quarter(max_n)?);
        let cap = max_n.min(500);
        reports.push(check_four_class_fixtures(cap, max_n)?);
        reports.push(check_eight_class_fixtures(cap)?);
        reports.push(check_triple_coverage()?);
        reports.push(check_kind_square_closure(max_n.min(10_000))?);
    }
    if matches!(suite, Suite::Dynamics | Suite::All) {
        reports.extend(check_dynamics(max_n)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_clean_at_small_scale() {
        let reports = run_suite(Suite::All, 300, 4).unwrap();
        assert!(!reports.is_empty());
        for report in &reports {
            assert!(
                report.passed(),
                "{} failed: {:?}",
                report.name,
                report.first_failure
            );
            assert!(report.checked > 0, "{} checked nothing", report.name);
        }
    }

    #[test]
    fn scope_predicate_matches_known_cases() {
        let profile = residue_profile(&factorize(73).unwrap()).unwrap();
        assert!(rule_table_covers(&profile, 2));
        assert!(!rule_table_covers(&profile, 3)); // kind I below the diagonal

        let profile = residue_profile(&factorize(21).unwrap()).unwrap();
        assert!(rule_table_covers(&profile, 7)); // all kind II/IV

        let profile = residue_profile(&factorize(15).unwrap()).unwrap();
        assert!(rule_table_covers(&profile, 3)); // omega = k - 1
        assert!(!rule_table_covers(&profile, 4)); // kind III below the diagonal
    }

    #[test]
    fn triple_coverage_is_complete() {
        let report = check_triple_coverage().unwrap();
        assert_eq!(report.checked, 64);
        assert!(report.passed(), "{:?}", report.first_failure);
    }
}
