//! Signed permutations of the hyperoctahedral group `B_n` and the matching
//! mixed-radix number system.
//!
//! The group `B_n` has `2^n * n!` elements. Writing those cardinalities as a
//! base sequence `B_i = 2^i * i!` yields a positional number system in which
//! every natural number has a unique digit string with `0 <= d_i <= 2i + 1`
//! ([`numeral`]). Coding a signed permutation by its per-position inversion
//! counts ([`sigperm`]) produces exactly such a digit string, which turns the
//! lexicographic ordering of `B_n` into ordinary integer order: rank and
//! unrank become base conversions ([`rankcodec`]). A brute-force
//! enumeration oracle ([`oracle`]) is kept around for cross-checks.
//!
//! ```
//! use hyperoct::{rank, unrank, BigUint, HyperNumeral, SignedPermutation};
//!
//! let n = HyperNumeral::from_integer(&BigUint::from(2711u32));
//! assert_eq!(n.to_string(), "7:0:2:3:1");
//!
//! let p: SignedPermutation = "1 -3 4 2".parse()?;
//! assert_eq!(p.code().to_string(), "0:4:1:0");
//! assert_eq!(rank(&p), BigUint::from(35u32));
//! assert_eq!(unrank(&BigUint::from(35u32), 4)?, p);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod numeral;
pub mod oracle;
pub mod rankcodec;
pub mod sigperm;

pub use num_bigint::BigUint;

pub use numeral::{place_value, HyperNumeral, NumeralError, NumeralStyle};
pub use rankcodec::{
    decode, decode_lehmer, decode_trace, rank, split_digit, unrank, unrank_trace, RankError,
    SignedLehmerPair, UnrankTrace,
};
pub use sigperm::{
    positive_roots, InversionCode, PermutationError, Root, RootVector, SignedPermutation,
};
