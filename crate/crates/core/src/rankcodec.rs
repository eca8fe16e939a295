//! Ranking and unranking of signed permutations.
//!
//! Sorting `B_n` lexicographically under the value order
//! `1 < 2 < ... < n < -n < ... < -1` assigns each element a rank in
//! `1..=2^n * n!`. The inversion code tracks that order digit for digit:
//! reading `(inv_1, ..., inv_n)` as the fixed-width numeral
//! `inv_1 : ... : inv_n` gives exactly `rank - 1`. So ranking is a base
//! conversion ([`rank`]), and unranking is the reverse conversion followed by
//! a code-to-permutation decode ([`unrank`]).
//!
//! Decoding splits each digit into an unsigned Lehmer offset and a sign
//! ([`split_digit`]), rebuilds the unsigned permutation by
//! selection-and-deletion ([`decode_lehmer`]), and signs it positionwise.
//! [`unrank_trace`] exposes all the intermediate stages.

use crate::numeral::place_value;
use crate::numeral::HyperNumeral;
use crate::sigperm::{InversionCode, SignedPermutation};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from ranking, unranking, and code decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    /// Ranks live in `1..=2^n * n!` for the requested degree.
    #[error("rank {rank} out of range 1..={max}")]
    OutOfRange { rank: BigUint, max: BigUint },
    /// A digit handed to [`split_digit`] exceeds its positional bound.
    #[error("digit {digit} at position {position} exceeds bound {bound}")]
    DigitOutOfRange {
        position: usize,
        digit: u32,
        bound: u32,
    },
    /// A Lehmer offset must address one of the values still undecided.
    #[error(
        "offset {offset} at position {position} out of range for {remaining} remaining values"
    )]
    OffsetOutOfRange {
        position: usize,
        offset: u32,
        remaining: usize,
    },
}

/// Splits the numeral digit in place `position` into an unsigned Lehmer
/// offset and a sign.
///
/// Digits `0..=position` map to themselves with sign `+1`; the upper half
/// `position+1..=2*position+1` folds back down in reverse with sign `-1`, so
/// the offset always lands in `0..=position`.
pub fn split_digit(position: usize, digit: u32) -> Result<(u32, i8), RankError> {
    let bound = 2 * position as u32 + 1;
    if digit > bound {
        return Err(RankError::DigitOutOfRange {
            position,
            digit,
            bound,
        });
    }
    if digit <= position as u32 {
        Ok((digit, 1))
    } else {
        Ok((1 + 2 * position as u32 - digit, -1))
    }
}

/// The split of a whole code: per window position, the unsigned Lehmer
/// offset and the sign of the window entry.
///
/// Both sequences run in window order (position 1 first), i.e. most
/// significant digit first. Offsets shrink towards the right: the offset for
/// position `i` lies in `0..=n-i`, and the last one is always 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedLehmerPair {
    offsets: Vec<u32>,
    signs: Vec<i8>,
}

impl SignedLehmerPair {
    /// Splits every entry of a code; valid codes always split.
    pub fn from_code(code: &InversionCode) -> Self {
        let n = code.degree();
        let mut offsets = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for (idx, &entry) in code.entries().iter().enumerate() {
            let (offset, sign) =
                split_digit(n - 1 - idx, entry).expect("code entries satisfy the digit bounds");
            offsets.push(offset);
            signs.push(sign);
        }
        Self { offsets, signs }
    }

    /// Lehmer offsets in window order.
    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    /// Signs in window order, each `+1` or `-1`.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn degree(&self) -> usize {
        self.offsets.len()
    }
}

/// Rebuilds the unsigned permutation whose inversion table is `offsets`.
///
/// Walks `1..=n` as a live list: each offset selects (0-based) and deletes
/// one remaining value. Offset `t` must therefore be smaller than the number
/// of values still in the list.
pub fn decode_lehmer(offsets: &[u32]) -> Result<Vec<u32>, RankError> {
    let n = offsets.len();
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut values = Vec::with_capacity(n);
    for (idx, &offset) in offsets.iter().enumerate() {
        if offset as usize >= pool.len() {
            return Err(RankError::OffsetOutOfRange {
                position: idx + 1,
                offset,
                remaining: pool.len(),
            });
        }
        values.push(pool.remove(offset as usize));
    }
    Ok(values)
}

/// Every intermediate stage of turning a code (or rank) into a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrankTrace {
    /// The inversion code, i.e. the digits of `rank - 1`.
    pub code: InversionCode,
    /// The digits split into Lehmer offsets and signs.
    pub lehmer: SignedLehmerPair,
    /// The unsigned permutation decoded from the offsets.
    pub unsigned: Vec<u32>,
    /// The final window: `unsigned` signed positionwise.
    pub permutation: SignedPermutation,
}

/// The 1-based position of `p` in the lexicographic ordering of its group:
/// its code read as a numeral, plus one.
pub fn rank(p: &SignedPermutation) -> BigUint {
    p.code().to_numeral().to_integer() + BigUint::one()
}

/// The permutation of degree `n` at rank `k`, with `1 <= k <= 2^n * n!`.
pub fn unrank(k: &BigUint, n: usize) -> Result<SignedPermutation, RankError> {
    unrank_trace(k, n).map(|trace| trace.permutation)
}

/// [`unrank`], but returning all intermediate stages.
pub fn unrank_trace(k: &BigUint, n: usize) -> Result<UnrankTrace, RankError> {
    let max = place_value(n);
    if k.is_zero() || k > &max {
        return Err(RankError::OutOfRange {
            rank: k.clone(),
            max,
        });
    }
    let numeral = HyperNumeral::from_integer(&(k - BigUint::one()))
        .with_width(n)
        .expect("rank - 1 < B_n fits in n digits");
    Ok(decode_trace(InversionCode::from_numeral(&numeral)))
}

/// The permutation whose inversion code is `code`.
pub fn decode(code: &InversionCode) -> SignedPermutation {
    decode_trace(code.clone()).permutation
}

/// [`decode`], but returning all intermediate stages.
pub fn decode_trace(code: InversionCode) -> UnrankTrace {
    let lehmer = SignedLehmerPair::from_code(&code);
    let unsigned =
        decode_lehmer(lehmer.offsets()).expect("offsets from a valid code fit their pools");
    let window = unsigned
        .iter()
        .zip(lehmer.signs())
        .map(|(&v, &s)| s as i32 * v as i32)
        .collect();
    let permutation =
        SignedPermutation::from_window(window).expect("signed Lehmer decode yields a window");
    UnrankTrace {
        code,
        lehmer,
        unsigned,
        permutation,
    }
}
