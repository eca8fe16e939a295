//! The hyperoctahedral number system.
//!
//! A mixed-radix positional system over the base sequence `B_i = 2^i * i!`,
//! so `B = (1, 2, 8, 48, 384, ...)`. A digit string `d_k : ... : d_1 : d_0`
//! denotes `sum d_i * B_i`, and the representation is unique once every
//! digit obeys `0 <= d_i <= 2i + 1`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from constructing, parsing, or formatting numerals.
///
/// Digit positions are always reported as the distance from the right end of
/// the digit string (so position 0 is the least significant digit `d_0`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumeralError {
    /// A digit exceeds its positional bound `2i + 1`.
    #[error("invalid digit {value} at position {position}: bound is {bound}")]
    InvalidDigit {
        position: usize,
        value: u32,
        bound: u32,
    },
    /// An empty digit sequence where a canonical numeral was expected.
    #[error("empty digit sequence")]
    Empty,
    /// Text that is neither a colon-separated nor a compact digit string.
    #[error("malformed numeral text {text:?}")]
    Malformed { text: String },
    /// Compact style writes one character per digit, so it stops at 9.
    #[error("digit {value} at position {position} has no single-character form; compact style requires digits <= 9")]
    CompactOverflow { position: usize, value: u32 },
    /// The value needs more digits than the requested fixed width.
    #[error("value does not fit in {width} digits")]
    WidthOverflow { width: usize },
}

/// `B_i = 2^i * i!`, the i-th place value (and the order of the group `B_i`).
///
/// Computed as the running product `2 * 4 * ... * 2i`, which is also the
/// divisor chain used when converting to this system.
pub fn place_value(i: usize) -> BigUint {
    let mut b = BigUint::one();
    for j in 1..=i as u64 {
        b *= 2 * j;
    }
    b
}

/// A number written in the hyperoctahedral system.
///
/// Digits are stored most significant first, matching the written form
/// `d_k : ... : d_1 : d_0`; the digit at distance `i` from the *right* end is
/// `d_i` and satisfies `0 <= d_i <= 2i + 1`. Callers never index from the
/// right themselves: use [`HyperNumeral::digit`].
///
/// Canonical numerals have no leading zero (zero itself is the single digit
/// `0`). A fixed-width numeral keeps its leading zeros and its width is just
/// [`HyperNumeral::width`]; that variant is what inversion codes map onto.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperNumeral {
    digits: Vec<u32>,
}

impl HyperNumeral {
    /// The canonical zero, a single `0` digit.
    pub fn zero() -> Self {
        Self { digits: vec![0] }
    }

    /// Largest digit allowed at `position` (distance from the right): `2i + 1`.
    pub fn digit_bound(position: usize) -> u32 {
        2 * position as u32 + 1
    }

    /// Validates a most-significant-first digit sequence and canonicalizes it
    /// by stripping leading zeros.
    ///
    /// The first offending position (leftmost, i.e. highest) is reported.
    pub fn from_digits(digits: Vec<u32>) -> Result<Self, NumeralError> {
        if digits.is_empty() {
            return Err(NumeralError::Empty);
        }
        Self::check_bounds(&digits)?;
        Ok(Self {
            digits: canonical_digits(digits),
        })
    }

    /// Validates a digit sequence keeping its width, leading zeros included.
    ///
    /// An empty sequence is the width-0 representation of zero.
    pub fn from_digits_fixed(digits: Vec<u32>) -> Result<Self, NumeralError> {
        Self::check_bounds(&digits)?;
        Ok(Self { digits })
    }

    fn check_bounds(digits: &[u32]) -> Result<(), NumeralError> {
        let width = digits.len();
        for (idx, &d) in digits.iter().enumerate() {
            let position = width - 1 - idx;
            let bound = Self::digit_bound(position);
            if d > bound {
                return Err(NumeralError::InvalidDigit {
                    position,
                    value: d,
                    bound,
                });
            }
        }
        Ok(())
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of stored digits (leading zeros count for fixed-width values).
    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// The digit `d_i`, i.e. at distance `i` from the right; zero beyond the
    /// stored width.
    pub fn digit(&self, i: usize) -> u32 {
        if i < self.digits.len() {
            self.digits[self.digits.len() - 1 - i]
        } else {
            0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// True when there is no leading zero (zero itself is the single digit 0).
    pub fn is_canonical(&self) -> bool {
        self.digits.len() == 1 || self.digits.first() != Some(&0)
    }

    /// The same value re-padded to exactly `width` digits.
    pub fn with_width(&self, width: usize) -> Result<Self, NumeralError> {
        let first_nonzero = self.digits.iter().position(|&d| d != 0);
        let significant = match first_nonzero {
            Some(s) => &self.digits[s..],
            None => &[],
        };
        if significant.len() > width {
            return Err(NumeralError::WidthOverflow { width });
        }
        let mut digits = vec![0; width - significant.len()];
        digits.extend_from_slice(significant);
        Ok(Self { digits })
    }

    /// Writes `n` in the hyperoctahedral system by the division chain:
    /// divide by 2, the quotient by 4, then by 6, and so on; the remainders
    /// are the digits `d_0, d_1, d_2, ...` and the chain stops at quotient 0.
    pub fn from_integer(n: &BigUint) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let mut reversed = Vec::new();
        let mut quotient = n.clone();
        let mut divisor = 2u64;
        while !quotient.is_zero() {
            let (next, remainder) = quotient.div_rem(&BigUint::from(divisor));
            reversed.push(remainder.to_u32().expect("remainder below a u32 divisor"));
            quotient = next;
            divisor += 2;
        }
        reversed.reverse();
        Self { digits: reversed }
    }

    /// Evaluates the digit string back to an integer by Horner's scheme:
    /// starting from the most significant digit, fold `acc = acc * 2i + d`,
    /// where `i` walks the positions below the accumulated prefix.
    pub fn to_integer(&self) -> BigUint {
        let k = self.digits.len();
        if k == 0 {
            return BigUint::zero();
        }
        let mut acc = BigUint::from(self.digits[0]);
        for (idx, &d) in self.digits.iter().enumerate().skip(1) {
            acc = acc * (2 * (k - idx) as u64) + d;
        }
        acc
    }

    /// The numeral of `self + 1`, computed digit-wise.
    ///
    /// Carries propagate left whenever a digit would pass its bound `2i + 1`;
    /// the width grows only when the carry walks off the high end, so
    /// fixed-width values keep their padding.
    pub fn successor(&self) -> Self {
        let mut digits = self.digits.clone();
        let mut position = 0usize;
        loop {
            if position == digits.len() {
                digits.insert(0, 1);
                break;
            }
            let idx = digits.len() - 1 - position;
            if digits[idx] < Self::digit_bound(position) {
                digits[idx] += 1;
                break;
            }
            digits[idx] = 0;
            position += 1;
        }
        Self { digits }
    }

    /// Renders the numeral in the requested style.
    ///
    /// Colon style (`7:0:2:3:1`) always works and is the [`fmt::Display`]
    /// form. Compact style juxtaposes one character per digit (`1501`) and is
    /// only available while every digit is at most 9.
    pub fn format(&self, style: NumeralStyle) -> Result<String, NumeralError> {
        if self.digits.is_empty() {
            return Ok("0".to_string());
        }
        match style {
            NumeralStyle::Colon => Ok(self
                .digits
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(":")),
            NumeralStyle::Compact => {
                let width = self.digits.len();
                let mut out = String::with_capacity(width);
                for (idx, &d) in self.digits.iter().enumerate() {
                    if d > 9 {
                        return Err(NumeralError::CompactOverflow {
                            position: width - 1 - idx,
                            value: d,
                        });
                    }
                    out.push(char::from_digit(d, 10).unwrap());
                }
                Ok(out)
            }
        }
    }
}

/// Text styles for [`HyperNumeral::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumeralStyle {
    /// `d_k : ... : d_0` with decimal digit groups; unambiguous for any digit.
    Colon,
    /// Juxtaposed single characters; only defined when all digits are <= 9.
    Compact,
}

fn canonical_digits(mut digits: Vec<u32>) -> Vec<u32> {
    let first_nonzero = digits.iter().position(|&d| d != 0);
    match first_nonzero {
        Some(0) => digits,
        Some(s) => digits.split_off(s),
        None => vec![0],
    }
}

impl fmt::Display for HyperNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            &self
                .format(NumeralStyle::Colon)
                .expect("colon style is total"),
        )
    }
}

/// Parses either style: colon-separated decimal groups (`7:0:2:3:1`) or a
/// compact string with one character per digit (`1501`). The result is
/// canonical; use [`HyperNumeral::from_digits_fixed`] to keep leading zeros.
impl FromStr for HyperNumeral {
    type Err = NumeralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let malformed = || NumeralError::Malformed {
            text: s.to_string(),
        };
        if text.is_empty() {
            return Err(malformed());
        }
        let digits = if text.contains(':') {
            text.split(':')
                .map(|part| {
                    if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(malformed());
                    }
                    part.parse::<u32>().map_err(|_| malformed())
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(malformed))
                .collect::<Result<Vec<_>, _>>()?
        };
        Self::from_digits(digits)
    }
}
