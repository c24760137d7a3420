//! Naive oracles for cross-checking: every function here recomputes its
//! answer by the most literal method available, independent of the library
//! implementations under test.

#![allow(dead_code)]

pub fn naive_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// phi(n) by counting coprime residues one at a time.
pub fn naive_phi(n: u64) -> u64 {
    (1..=n).filter(|&x| naive_gcd(x, n) == 1).count() as u64
}

/// Multiplicative order of 2 mod n by linear doubling scan.
pub fn naive_order_of_two(n: u64) -> u64 {
    assert!(n % 2 == 1 && n >= 3);
    let mut x = 2 % n;
    let mut t = 1u64;
    while x != 1 {
        x = x * 2 % n;
        t += 1;
    }
    t
}

/// Primality by trial division.
pub fn naive_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// 2^exp mod n by literal repeated multiplication; fine for small exponents.
pub fn naive_pow2_mod(exp: u64, n: u64) -> u64 {
    let mut x = 1u64 % n;
    for _ in 0..exp {
        x = x * 2 % n;
    }
    x
}

/// Membership of n in (class_index +) by the naive route end to end.
pub fn naive_is_in_plus(n: u64, class_index: u64) -> bool {
    let phi = naive_phi(n);
    class_index >= 1 && phi % class_index == 0 && naive_pow2_mod(phi / class_index, n) == 1
}

/// Membership of n in (class_index -) by the naive route end to end.
pub fn naive_is_in_minus(n: u64, class_index: u64) -> bool {
    let phi = naive_phi(n);
    class_index >= 1 && phi % class_index == 0 && naive_pow2_mod(phi / class_index, n) == n - 1
}

/// Ascending divisors by scanning every candidate.
pub fn naive_divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}
