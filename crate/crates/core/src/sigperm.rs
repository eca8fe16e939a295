//! Signed permutations, their inversion statistic, and inversion codes.
//!
//! An element of the hyperoctahedral group `B_n` is a permutation `pi` of
//! `{-n, ..., -1, 1, ..., n}` with `pi(-v) = -pi(v)`; it is determined by its
//! window `(pi(1), ..., pi(n))`, whose absolute values must read as a
//! permutation of `1..n`. The group acts on `R^n` by signed coordinate
//! permutation, `e_k -> sign(pi(k)) * e_|pi(k)|`, which makes `B_n` the
//! symmetry group of the n-dimensional cross-polytope.
//!
//! Each window position `i` carries an inversion count `inv_i`, bounded by
//! `0 <= inv_i <= 2(n - i) + 1`. The vector `(inv_1, ..., inv_n)` is the
//! inversion code ([`InversionCode`]); it determines the permutation, and
//! read as a fixed-width numeral it drives ranking ([`crate::rankcodec`]).
//! The count has two equivalent faces, kept as separate implementations so
//! they can police each other:
//!
//! * [`SignedPermutation::inv_by_counting`] tallies window comparisons, and
//! * [`SignedPermutation::inv_by_roots`] counts positive roots of the type B
//!   root system that position `i` contributes and that the permutation's
//!   action sends to negative roots.

use crate::numeral::HyperNumeral;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from building or parsing signed permutations and inversion codes.
///
/// Window positions are 1-based, matching the notation `pi(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    /// Window entries are signed values; zero has no sign to carry.
    #[error("window entry at position {position} is zero")]
    ZeroEntry { position: usize },
    /// An entry's absolute value must lie in `1..=degree`.
    #[error("window entry {value} at position {position} is out of range for degree {degree}")]
    ValueOutOfRange {
        position: usize,
        value: i32,
        degree: usize,
    },
    /// Two entries share an absolute value, so this is not a permutation.
    #[error("absolute value {value} appears more than once in the window")]
    DuplicateValue { value: u32 },
    /// Composition needs both factors to act on the same `1..=n`.
    #[error("degree mismatch: cannot compose degree {left} with degree {right}")]
    DegreeMismatch { left: usize, right: usize },
    /// Text that does not parse as a window or an inversion code.
    #[error("malformed text {text:?}")]
    Malformed { text: String },
    /// A code entry exceeds its positional bound `2(n - i) + 1`.
    #[error("code entry {value} at position {position} exceeds bound {bound}")]
    CodeEntryOutOfRange {
        position: usize,
        value: u32,
        bound: u32,
    },
}

/// A signed permutation in window form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Validates a window `(pi(1), ..., pi(n))`: no zeros, absolute values in
    /// range and pairwise distinct.
    pub fn from_window(window: Vec<i32>) -> Result<Self, PermutationError> {
        let degree = window.len();
        let mut seen = vec![false; degree + 1];
        for (idx, &value) in window.iter().enumerate() {
            let position = idx + 1;
            if value == 0 {
                return Err(PermutationError::ZeroEntry { position });
            }
            let abs = value.unsigned_abs() as usize;
            if abs > degree {
                return Err(PermutationError::ValueOutOfRange {
                    position,
                    value,
                    degree,
                });
            }
            if seen[abs] {
                return Err(PermutationError::DuplicateValue { value: abs as u32 });
            }
            seen[abs] = true;
        }
        Ok(Self { window })
    }

    /// The identity of `B_n`, window `(1, 2, ..., n)`.
    pub fn identity(degree: usize) -> Self {
        Self {
            window: (1..=degree as i32).collect(),
        }
    }

    /// Number of letters `n`; the group `B_n` has `2^n * n!` elements.
    pub fn degree(&self) -> usize {
        self.window.len()
    }

    /// The window `(pi(1), ..., pi(n))`.
    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `pi(v)` for `v` in `{-n, ..., -1, 1, ..., n}`, using `pi(-v) = -pi(v)`.
    pub fn image(&self, v: i32) -> i32 {
        let abs = v.unsigned_abs() as usize;
        assert!(
            v != 0 && abs <= self.degree(),
            "value {v} outside +-1..={}",
            self.degree()
        );
        let w = self.window[abs - 1];
        if v > 0 {
            w
        } else {
            -w
        }
    }

    /// `self . other`, the permutation `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermutationError> {
        if self.degree() != other.degree() {
            return Err(PermutationError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let window = other.window.iter().map(|&v| self.image(v)).collect();
        Ok(Self { window })
    }

    /// The group inverse: `pi(i) = v` becomes `pi^-1(|v|) = sign(v) * i`.
    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.degree()];
        for (idx, &v) in self.window.iter().enumerate() {
            let i = (idx + 1) as i32;
            window[v.unsigned_abs() as usize - 1] = if v > 0 { i } else { -i };
        }
        Self { window }
    }

    /// `inv_i` by direct window comparisons.
    ///
    /// With `j = |pi(i)|`: when `pi(i) = j`, count later positions whose
    /// absolute value is smaller than `j`; when `pi(i) = -j`, count one for
    /// the sign itself, plus one per smaller later absolute value, plus two
    /// per larger one.
    pub fn inv_by_counting(&self, i: usize) -> u32 {
        assert!(
            1 <= i && i <= self.degree(),
            "position {i} outside 1..={}",
            self.degree()
        );
        let v = self.window[i - 1];
        let j = v.unsigned_abs();
        let mut smaller = 0u32;
        let mut larger = 0u32;
        for &w in &self.window[i..] {
            if w.unsigned_abs() < j {
                smaller += 1;
            } else {
                larger += 1;
            }
        }
        if v > 0 {
            smaller
        } else {
            1 + smaller + 2 * larger
        }
    }

    /// `inv_i` by root counting: the number of roots in
    /// [`positive_roots`]`(n, i)` that the permutation's action on `R^n`
    /// sends to negative roots.
    pub fn inv_by_roots(&self, i: usize) -> u32 {
        assert!(
            1 <= i && i <= self.degree(),
            "position {i} outside 1..={}",
            self.degree()
        );
        positive_roots(self.degree(), i)
            .into_iter()
            .filter(|&root| self.apply_to_root(root).is_negative_root())
            .count() as u32
    }

    /// The inversion code `(inv_1, ..., inv_n)`.
    pub fn code(&self) -> InversionCode {
        InversionCode {
            entries: (1..=self.degree())
                .map(|i| self.inv_by_counting(i))
                .collect(),
        }
    }

    /// Image of a root under the action `e_k -> sign(pi(k)) * e_|pi(k)|`,
    /// extended linearly.
    pub fn apply_to_root(&self, root: Root) -> RootVector {
        let axis = |k: usize| -> (usize, i32) {
            assert!(
                1 <= k && k <= self.degree(),
                "axis {k} outside 1..={}",
                self.degree()
            );
            let v = self.window[k - 1];
            (v.unsigned_abs() as usize, v.signum())
        };
        let terms = match root {
            Root::E(i) => vec![axis(i)],
            Root::Plus(i, j) => vec![axis(i), axis(j)],
            Root::Minus(i, j) => {
                let (b, c) = axis(j);
                vec![axis(i), (b, -c)]
            }
        };
        RootVector::from_terms(terms)
    }
}

/// Window entries separated by spaces, e.g. `1 -3 4 2`.
impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.window {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses a window from space- or comma-separated signed integers. The empty
/// string is the unique element of `B_0`.
impl FromStr for SignedPermutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let window = s
            .replace(',', " ")
            .split_whitespace()
            .map(|part| {
                part.parse::<i32>()
                    .map_err(|_| PermutationError::Malformed {
                        text: s.to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_window(window)
    }
}

/// A root of the type B root system on `{e_1, ..., e_n}`, restricted to the
/// shapes that occur as positive roots: `e_i`, `e_i + e_j`, `e_i - e_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Root {
    /// `e_i`
    E(usize),
    /// `e_i + e_j`
    Plus(usize, usize),
    /// `e_i - e_j`
    Minus(usize, usize),
}

/// The positive roots contributed by window position `i` in degree `n`:
/// `e_i` together with `e_i + e_j` and `e_i - e_j` for every `j` in
/// `i+1..=n`. There are `2(n - i) + 1` of them, which is exactly the upper
/// bound on `inv_i`.
pub fn positive_roots(n: usize, i: usize) -> Vec<Root> {
    assert!(1 <= i && i <= n, "position {i} outside 1..={n}");
    let mut roots = Vec::with_capacity(2 * (n - i) + 1);
    roots.push(Root::E(i));
    for j in i + 1..=n {
        roots.push(Root::Plus(i, j));
        roots.push(Root::Minus(i, j));
    }
    roots
}

/// An integer vector written in the basis `e_1, ..., e_n`, as produced by
/// applying a signed permutation to a [`Root`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVector {
    terms: Vec<(usize, i32)>,
}

impl RootVector {
    /// Sums the given `(axis, coefficient)` terms into sorted-by-axis form,
    /// dropping axes whose coefficients cancel.
    pub fn from_terms(terms: Vec<(usize, i32)>) -> Self {
        let mut terms = terms;
        terms.sort_by_key(|&(axis, _)| axis);
        let mut summed: Vec<(usize, i32)> = Vec::with_capacity(terms.len());
        for (axis, coeff) in terms {
            match summed.last_mut() {
                Some((last, c)) if *last == axis => *c += coeff,
                _ => summed.push((axis, coeff)),
            }
        }
        summed.retain(|&(_, c)| c != 0);
        Self { terms: summed }
    }

    /// Nonzero `(axis, coefficient)` pairs, sorted by axis.
    pub fn terms(&self) -> &[(usize, i32)] {
        &self.terms
    }

    /// Whether this vector is a negative root: `-e_a`, `-e_a - e_b`, or
    /// `-e_a + e_b` with `a < b`. Vectors that are not roots at all return
    /// false.
    pub fn is_negative_root(&self) -> bool {
        match *self.terms.as_slice() {
            [(_, c)] => c == -1,
            [(_, ca), (_, cb)] => ca == -1 && (cb == 1 || cb == -1),
            _ => false,
        }
    }
}

/// The inversion code `(inv_1, ..., inv_n)` of a signed permutation.
///
/// Entry `i` (1-based) is bounded by `2(n - i) + 1`, so the entries read in
/// order are precisely the digits `d_{n-1} ... d_0` of an n-digit
/// hyperoctahedral numeral: `inv_i` lands in place `n - i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InversionCode {
    entries: Vec<u32>,
}

impl InversionCode {
    /// Validates entries against the positional bounds, reporting the first
    /// offender.
    pub fn from_entries(entries: Vec<u32>) -> Result<Self, PermutationError> {
        let n = entries.len();
        for (idx, &value) in entries.iter().enumerate() {
            let bound = 2 * (n - 1 - idx) as u32 + 1;
            if value > bound {
                return Err(PermutationError::CodeEntryOutOfRange {
                    position: idx + 1,
                    value,
                    bound,
                });
            }
        }
        Ok(Self { entries })
    }

    /// The entries `(inv_1, ..., inv_n)`.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// The code read as a fixed-width numeral, `inv_i` in place `n - i`.
    /// Entry order and digit order coincide, and the bounds match place for
    /// place, so this cannot fail.
    pub fn to_numeral(&self) -> HyperNumeral {
        HyperNumeral::from_digits_fixed(self.entries.clone())
            .expect("code bounds match numeral digit bounds")
    }

    /// Reads a fixed-width numeral back as a code of degree equal to its
    /// width.
    pub fn from_numeral(numeral: &HyperNumeral) -> Self {
        Self {
            entries: numeral.digits().to_vec(),
        }
    }
}

/// Entries separated by colons, e.g. `0:4:1:0`; empty for degree 0.
impl fmt::Display for InversionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                f.write_str(":")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses colon-separated entries, keeping the written width (leading zeros
/// are meaningful in a code). The empty string is the degree-0 code.
impl FromStr for InversionCode {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text.is_empty() {
            return Self::from_entries(Vec::new());
        }
        let entries = text
            .split(':')
            .map(|part| {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(PermutationError::Malformed {
                        text: s.to_string(),
                    });
                }
                part.parse::<u32>()
                    .map_err(|_| PermutationError::Malformed {
                        text: s.to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_entries(entries)
    }
}
