use std::cmp::Ordering;

use combdyn::sharkovsky::{compare_naturals, match_initial_segment};
use combdyn::{initial_segment, sharkovsky_compare, SharkovskyElement};
use proptest::prelude::*;

// Rank in the ordering written out by rows: odd m > 1 times 2^k for k = 0, 1,
// .. and then the powers of two descending. Larger rank means Sharkovsky-greater.
fn naive_rank(n: u64) -> (u8, i64, i64) {
    let k = n.trailing_zeros() as i64;
    let m = (n >> k) as i64;
    if m == 1 {
        (0, k, 0)
    } else {
        (1, -k, -m)
    }
}

#[test]
fn segments_are_downward_closed() {
    for n in 1..=128u64 {
        let el = SharkovskyElement::finite(n).unwrap();
        let seg = initial_segment(el, 128);
        for a in 1..=128u64 {
            let inside = seg.contains(&a);
            assert_eq!(inside, compare_naturals(a, n) != Ordering::Greater, "{a} in S({n})");
        }
    }
}

#[test]
fn extremes() {
    for cap in 3..=64u64 {
        let max = (1..=cap).max_by(|a, b| compare_naturals(*a, *b)).unwrap();
        let min = (1..=cap).min_by(|a, b| compare_naturals(*a, *b)).unwrap();
        assert_eq!((max, min), (3, 1), "cap {cap}");
    }
}

#[test]
fn sorted_prefix_and_suffix() {
    let mut v: Vec<u64> = (1..=20).collect();
    v.sort_by(|a, b| compare_naturals(*a, *b));
    assert_eq!(&v[..5], &[1, 2, 4, 8, 16]);
    assert_eq!(*v.last().unwrap(), 3);
}

#[test]
fn two_infinity_sits_between() {
    let inf = SharkovskyElement::TwoInfinity;
    for n in 1..=256u64 {
        let el = SharkovskyElement::finite(n).unwrap();
        let want = if n.is_power_of_two() { Ordering::Less } else { Ordering::Greater };
        assert_eq!(sharkovsky_compare(el, inf), want, "{n}");
    }
    assert_eq!(initial_segment(inf, 40), vec![1, 2, 4, 8, 16, 32]);
    // the window cannot tell 8 from 2^inf, so the finite answer wins
    assert_eq!(match_initial_segment(&[1, 2, 4, 8], 12), Some(SharkovskyElement::finite(8).unwrap()));
    assert_eq!(match_initial_segment(&[1, 2, 4], 12), Some(SharkovskyElement::finite(4).unwrap()));
    assert_eq!(match_initial_segment(&[1, 3], 12), None);
}

proptest! {
    #[test]
    fn agrees_with_row_ranking(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        prop_assert_eq!(compare_naturals(a, b), naive_rank(a).cmp(&naive_rank(b)));
    }

    #[test]
    fn parse_round_trip(n in 1u64..u64::MAX) {
        let el = SharkovskyElement::finite(n).unwrap();
        prop_assert_eq!(el.to_string().parse::<SharkovskyElement>().unwrap(), el);
    }
}
