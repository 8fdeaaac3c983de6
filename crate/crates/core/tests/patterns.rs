use combdyn::spectral::{charpoly_spectral_radius, power_iteration};
use combdyn::{
    double_pattern, markov_graph, pattern_entropy, pattern_of_cycle, patterns_of_period, spectral_radius,
    Pattern, Rational,
};
use proptest::prelude::*;

#[test]
fn every_row_covers_something() {
    for n in 2..=8 {
        for p in patterns_of_period(n) {
            let m = markov_graph(&p);
            assert!((0..m.size()).all(|i| m.row(i).contains(&1)), "{p}");
        }
    }
}

#[test]
fn zero_entropy_patterns() {
    // the doubling tower has radius 1
    let mut p = Pattern::fixed_point();
    for _ in 0..3 {
        p = double_pattern(&p);
        assert_eq!(pattern_entropy(&p), 0.0, "{p}");
    }
    for n in 1..=8 {
        for p in patterns_of_period(n) {
            let h = pattern_entropy(&p);
            let rho = spectral_radius(&markov_graph(&p));
            assert!(h >= 0.0);
            assert_eq!(h == 0.0, rho <= 1.0 + 1e-12, "{p}: h {h}, rho {rho}");
        }
    }
    // only periods 1, 2, 4, 8 carry zero-entropy patterns
    for n in [3, 5, 6, 7] {
        assert!(patterns_of_period(n).iter().all(|p| pattern_entropy(p) > 0.0), "period {n}");
    }
}

#[test]
fn spectral_routes_agree_through_period_seven() {
    for n in 1..=7 {
        for p in patterns_of_period(n) {
            let m = markov_graph(&p);
            let a = power_iteration(&m).unwrap();
            let b = charpoly_spectral_radius(&m);
            assert!((a - b).abs() <= 1e-9, "{p}: {a} vs {b}");
        }
    }
}

fn cycle_from(images: &[usize]) -> Pattern {
    Pattern::new(images.to_vec()).unwrap()
}

fn random_cycle(n: usize, seed: u64) -> Vec<usize> {
    // Sattolo's algorithm gives a uniformly random cyclic permutation
    let mut state = seed | 1;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut items: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = (next() % i as u64) as usize;
        items.swap(i, j);
    }
    // items is a cycle order; turn it into images
    let mut images = vec![0; n];
    for t in 0..n {
        images[items[t] - 1] = items[(t + 1) % n];
    }
    images
}

proptest! {
    #[test]
    fn rescaling_and_reflection(n in 2usize..9, seed in any::<u64>(), scale in 1i64..50, shift in -100i64..100) {
        let images = random_cycle(n, seed);
        let p = cycle_from(&images);
        // points i ↦ scale·i² + shift keep their order on positive i
        let points: Vec<Rational> =
            (1..=n as i64).map(|i| Rational::from_integer((scale * i * i + shift).into())).collect();
        let succ: Vec<usize> = images.iter().map(|&j| j - 1).collect();
        prop_assert_eq!(pattern_of_cycle(&points, &succ).unwrap(), p.clone());
        let reflected: Vec<Rational> = points.iter().rev().map(|x| -x).collect();
        let flipped: Vec<usize> = (0..n).map(|i| n - 1 - succ[n - 1 - i]).collect();
        prop_assert_eq!(pattern_of_cycle(&reflected, &flipped).unwrap(), p.clone());
        prop_assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
    }
}
