//! Brute-force ground truth for ranking.
//!
//! This module enumerates a whole group `B_n`, sorts it lexicographically
//! under the value order `1 < 2 < ... < n < -n < ... < -1`, and reads ranks
//! off positions in the sorted list. It deliberately shares no logic with
//! [`crate::rankcodec`] or the inversion formulas in [`crate::sigperm`]: its
//! only job is to catch bugs in them, so a correlated mistake must be
//! impossible.
//!
//! Everything here is exponential in `n` and guarded by [`DEGREE_GUARD`].

use crate::sigperm::{PermutationError, SignedPermutation};
use num_bigint::BigUint;
use std::cmp::Ordering;
use thiserror::Error;

/// Largest degree the enumeration helpers accept by default; `B_6` already
/// has 46080 elements.
pub const DEGREE_GUARD: usize = 6;

/// Errors from the enumeration helpers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// Enumerating `B_n` materializes all `2^n * n!` elements.
    #[error("degree {degree} exceeds the enumeration guard {guard}")]
    DegreeTooLarge { degree: usize, guard: usize },
}

/// The total order `1 < 2 < ... < n < -n < -(n-1) < ... < -1` on the signed
/// values of degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedValueOrder {
    degree: usize,
}

impl SignedValueOrder {
    pub fn new(degree: usize) -> Self {
        Self { degree }
    }

    /// Sort key of a signed value: positives map to `0..n` in increasing
    /// order, negatives to `n..2n` in the order `-n, -(n-1), ..., -1`.
    pub fn key(&self, v: i32) -> usize {
        let n = self.degree as i32;
        assert!(v != 0 && v.abs() <= n, "value {v} outside +-1..={n}");
        if v > 0 {
            (v - 1) as usize
        } else {
            (2 * n + v) as usize
        }
    }

    pub fn compare(&self, a: i32, b: i32) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// Lexicographic comparison of window words under [`SignedValueOrder`].
pub fn compare_lex(
    a: &SignedPermutation,
    b: &SignedPermutation,
) -> Result<Ordering, PermutationError> {
    if a.degree() != b.degree() {
        return Err(PermutationError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let order = SignedValueOrder::new(a.degree());
    Ok(key_vector(&order, a).cmp(&key_vector(&order, b)))
}

fn key_vector(order: &SignedValueOrder, p: &SignedPermutation) -> Vec<usize> {
    p.window().iter().map(|&v| order.key(v)).collect()
}

/// All `2^n * n!` elements of `B_n`, in unspecified but deterministic order.
pub fn enumerate_all(n: usize) -> Result<Vec<SignedPermutation>, OracleError> {
    enumerate_all_guarded(n, DEGREE_GUARD)
}

/// [`enumerate_all`] with an explicit guard bound.
pub fn enumerate_all_guarded(
    n: usize,
    guard: usize,
) -> Result<Vec<SignedPermutation>, OracleError> {
    if n > guard {
        return Err(OracleError::DegreeTooLarge { degree: n, guard });
    }
    let mut unsigned = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    permute(n, &mut prefix, &mut used, &mut unsigned);
    let mut all = Vec::with_capacity(unsigned.len() << n);
    for word in &unsigned {
        for mask in 0u32..1 << n {
            let window = word
                .iter()
                .enumerate()
                .map(|(idx, &v)| if mask >> idx & 1 == 1 { -v } else { v })
                .collect();
            all.push(
                SignedPermutation::from_window(window)
                    .expect("signed arrangement of 1..=n is a window"),
            );
        }
    }
    Ok(all)
}

fn permute(n: usize, prefix: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<Vec<i32>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            prefix.push(v as i32);
            permute(n, prefix, used, out);
            prefix.pop();
            used[v] = false;
        }
    }
}

/// All of `B_n` in lexicographic order.
pub fn sorted_all(n: usize) -> Result<Vec<SignedPermutation>, OracleError> {
    sorted_all_guarded(n, DEGREE_GUARD)
}

/// [`sorted_all`] with an explicit guard bound.
pub fn sorted_all_guarded(n: usize, guard: usize) -> Result<Vec<SignedPermutation>, OracleError> {
    let mut all = enumerate_all_guarded(n, guard)?;
    let order = SignedValueOrder::new(n);
    all.sort_by_cached_key(|p| key_vector(&order, p));
    Ok(all)
}

/// The rank of `p` by sheer force: one plus the number of elements of its
/// group that precede it. No inversion statistic is consulted.
pub fn reference_rank(p: &SignedPermutation) -> Result<BigUint, OracleError> {
    let n = p.degree();
    let order = SignedValueOrder::new(n);
    let mut keys: Vec<Vec<usize>> = enumerate_all(n)?
        .iter()
        .map(|q| key_vector(&order, q))
        .collect();
    keys.sort_unstable();
    let position = keys
        .binary_search(&key_vector(&order, p))
        .expect("every valid window occurs in the enumeration");
    Ok(BigUint::from(position as u64 + 1))
}
