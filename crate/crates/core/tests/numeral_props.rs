//! Properties of the numeral system, plus the frozen decimal table fixture.

use hyperoct::{place_value, BigUint, HyperNumeral, NumeralStyle};
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

/// The first ninety numbers, `decimal compact` per line.
const TABLE: &str = include_str!("data/numeral_table.txt");

#[test]
fn table_fixture_both_directions() {
    let mut rows = 0;
    for line in TABLE.lines() {
        let (decimal, compact) = line.split_once(' ').expect("two columns");
        let n: BigUint = decimal.parse().unwrap();
        let written = HyperNumeral::from_integer(&n);
        assert_eq!(
            written.format(NumeralStyle::Compact).unwrap(),
            compact,
            "writing {decimal}"
        );
        let read: HyperNumeral = compact.parse().unwrap();
        assert_eq!(read.to_integer(), n, "reading {compact}");
        assert_eq!(read, written);
        rows += 1;
    }
    assert_eq!(rows, 90);
}

#[test]
fn width_law_holds_up_to_ten_thousand() {
    // B_k <= n < B_{k+1} forces exactly k+1 digits
    let mut width = 1usize;
    let mut upper = place_value(1);
    for n in 0u32..=10_000 {
        let n = BigUint::from(n);
        if n >= upper {
            width += 1;
            upper = place_value(width);
        }
        assert_eq!(HyperNumeral::from_integer(&n).width(), width, "at {n}");
    }
}

#[test]
fn successor_agrees_with_increment_up_to_ten_thousand() {
    let mut numeral = HyperNumeral::zero();
    for n in 0u32..=10_000 {
        assert_eq!(numeral.to_integer(), BigUint::from(n), "at {n}");
        numeral = numeral.successor();
    }
}

proptest! {
    #[test]
    fn round_trip_u64(n in any::<u64>()) {
        let n = BigUint::from(n);
        prop_assert_eq!(HyperNumeral::from_integer(&n).to_integer(), n);
    }

    #[test]
    fn digits_of_converted_values_are_canonical_and_bounded(n in any::<u64>()) {
        let numeral = HyperNumeral::from_integer(&BigUint::from(n));
        prop_assert!(numeral.is_canonical());
        let width = numeral.width();
        for (idx, &d) in numeral.digits().iter().enumerate() {
            prop_assert!(d <= HyperNumeral::digit_bound(width - 1 - idx));
        }
    }

    #[test]
    fn colon_text_round_trips(n in any::<u64>()) {
        let numeral = HyperNumeral::from_integer(&BigUint::from(n));
        let text = numeral.format(NumeralStyle::Colon).unwrap();
        prop_assert_eq!(text.parse::<HyperNumeral>().unwrap(), numeral);
    }

    #[test]
    fn compact_text_round_trips_when_legal(n in any::<u64>()) {
        let numeral = HyperNumeral::from_integer(&BigUint::from(n));
        if let Ok(text) = numeral.format(NumeralStyle::Compact) {
            prop_assert_eq!(text.parse::<HyperNumeral>().unwrap(), numeral);
        }
    }

    #[test]
    fn successor_matches_addition(n in any::<u64>()) {
        let numeral = HyperNumeral::from_integer(&BigUint::from(n));
        prop_assert_eq!(
            numeral.successor().to_integer(),
            BigUint::from(n) + BigUint::one()
        );
    }

    #[test]
    fn padding_preserves_value(n in any::<u64>(), extra in 0usize..6) {
        let numeral = HyperNumeral::from_integer(&BigUint::from(n));
        let padded = numeral.with_width(numeral.width() + extra).unwrap();
        prop_assert_eq!(padded.width(), numeral.width() + extra);
        prop_assert_eq!(padded.to_integer(), numeral.to_integer());
    }

    #[test]
    fn digit_vector_round_trips(n in any::<u64>()) {
        let numeral = HyperNumeral::from_integer(&BigUint::from(n));
        let rebuilt = HyperNumeral::from_digits(numeral.digits().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, numeral);
    }
}

proptest! {
    // fewer cases: thousand-digit decimals make every operation big
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn round_trip_huge(text in "[1-9][0-9]{0,999}") {
        let n: BigUint = text.parse().unwrap();
        prop_assert_eq!(HyperNumeral::from_integer(&n).to_integer(), n);
    }
}

#[test]
fn places_divide_each_other() {
    // B_{i+1} = B_i * 2(i+1), the divisor chain of from_integer
    let mut b = BigUint::one();
    for i in 0usize..40 {
        assert_eq!(place_value(i), b);
        b *= 2 * (i as u64 + 1);
    }
    assert!(place_value(21).to_u64().is_none(), "B_21 overflows u64");
    assert!(place_value(0).is_one());
    assert!(!place_value(0).is_zero());
}
