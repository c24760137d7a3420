//! Arnold's Fermat-Euler classes for odd integers, with a residue-pattern
//! classifier and a brute-force verification harness.
//!
//! An odd n belongs to the class (N+) when N divides phi(n) and
//! 2^(phi(n)/N) = +1 mod n, and to (M-) when M divides phi(n) and
//! 2^(phi(n)/M) = -1 mod n. The doubling map x -> 2x mod n permutes the
//! Euler group of n in cycles of one common length T, giving phi(n) = N * T
//! where the cycle count N is the largest valid plus index.
//!
//! For the classes (2^k+)/(2^k-) membership is decided by the mod-8
//! residues of the distinct prime divisors alone (plus, in two cases, the
//! quarter-power sign of a prime congruent to 1 mod 8). The crate keeps two
//! independent routes to every verdict:
//!
//! - [`classes`] tests membership definitionally by modular exponentiation;
//! - [`theorems`] decides it from the residue pattern.
//!
//! [`verify`] sweeps desk-scale ranges confirming the two routes agree,
//! [`dynamics`] materializes the doubling permutation, and [`table`] emits
//! the classical class table as CSV or JSON.

pub mod arith;
pub mod classes;
pub mod dynamics;
pub mod error;
pub mod table;
pub mod theorems;
pub mod verify;

pub use arith::{euler_phi, factorize, mod_pow, order_of_two, Factorization, Mod8Kind};
pub use classes::{class_record, is_in_minus, is_in_plus, maximal_minus, maximal_plus, ClassRecord};
pub use dynamics::{cycle_decomposition, euler_group, verify_theorem_a, CycleStructure};
pub use error::{Error, Result};
pub use table::{build_table, write_csv, write_json, TableRow};
pub use theorems::{
    classify_all_k, classify_by_theorems, prime_power_half_sign, prime_quarter_class,
    residue_profile, triple_kind_fixture, QuarterClass, ResidueProfile, Rule, TheoremVerdict,
    Verdict,
};
pub use verify::{run_suite, CheckReport, Suite};
