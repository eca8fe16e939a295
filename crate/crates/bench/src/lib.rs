//! Deterministic input generators shared by the benchmarks.

use hyperoct::SignedPermutation;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

/// A uniformly random element of `B_n`.
pub fn random_signed_permutation(n: usize, rng: &mut impl Rng) -> SignedPermutation {
    let mut values: Vec<i32> = (1..=n as i32).collect();
    values.shuffle(rng);
    let window = values
        .into_iter()
        .map(|v| if rng.random::<bool>() { -v } else { v })
        .collect();
    SignedPermutation::from_window(window).expect("signed arrangement of 1..=n")
}

/// A uniformly random integer with exactly `digits` decimal digits.
pub fn random_big_decimal(digits: usize, rng: &mut impl Rng) -> BigUint {
    assert!(digits > 0);
    let mut text = String::with_capacity(digits);
    text.push(char::from_digit(rng.random_range(1..10), 10).unwrap());
    for _ in 1..digits {
        text.push(char::from_digit(rng.random_range(0..10), 10).unwrap());
    }
    text.parse().expect("decimal digit string")
}
