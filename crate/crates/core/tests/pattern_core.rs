mod common;

use permpat::{normalize, parse_pattern, BarredPattern, Pattern, Permutation};
use proptest::prelude::*;

fn perm_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

proptest! {
    #[test]
    fn normalize_is_idempotent_and_order_invariant(
        values in proptest::collection::btree_set(-1000i64..1000, 1..12)
            .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
    ) {
        let p = normalize(&values).unwrap();
        prop_assert_eq!(normalize(p.letters()).unwrap(), p.clone());
        let shifted: Vec<i64> = values.iter().map(|x| 3 * x + 7).collect();
        prop_assert_eq!(normalize(&shifted).unwrap(), p.clone());
        let cubed: Vec<f64> = values.iter().map(|&x| (x as f64).powi(3) - 0.5).collect();
        prop_assert_eq!(normalize(&cubed).unwrap(), p);
    }

    #[test]
    fn delete_undoes_insert(p in perm_strategy(9), site_frac in 0.0..1.0f64, rank_frac in 0.0..1.0f64) {
        let n = p.len();
        let site = ((n + 1) as f64 * site_frac) as usize;
        let rank = 1 + ((n + 1) as f64 * rank_frac) as u32;
        let grown = p.insert_at_site(site, rank).unwrap();
        prop_assert_eq!(grown.len(), n + 1);
        prop_assert_eq!(grown.letters()[site], rank);
        prop_assert_eq!(grown.delete_positions(&[site]).unwrap(), p);
    }

    #[test]
    fn unbarred_plus_barred_is_whole(p in perm_strategy(8), mask in 1u32..255) {
        let n = p.len();
        prop_assume!(n >= 2);
        let bars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        prop_assume!(!bars.is_empty() && bars.len() < n);
        let b = BarredPattern::new(p, bars).unwrap();
        prop_assert_eq!(b.unbarred_pattern().len() + b.bar_count(), b.len());
    }
}

#[test]
fn exhaustive_text_round_trip() {
    let mut checked = 0;
    for n in 1..=5 {
        let mut patterns: Vec<Pattern> = Permutation::all(n).map(Pattern::Classical).collect();
        patterns.extend(common::all_barred(n).into_iter().map(Pattern::Barred));
        patterns.extend(common::all_vincular(n).into_iter().map(Pattern::Vincular));
        for p in patterns {
            let text = p.to_string();
            assert_eq!(parse_pattern(&text).unwrap(), p, "{text}");
            checked += 1;
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn spaced_round_trip_for_long_patterns() {
    let letters: Vec<u32> = vec![12, 1, 11, 2, 10, 3, 9, 4, 8, 5, 7, 6];
    let base = Permutation::new(letters).unwrap();
    let cases = [
        Pattern::Classical(base.clone()),
        Pattern::Barred(BarredPattern::new(base.clone(), [1, 5, 6]).unwrap()),
        Pattern::Vincular(permpat::VincularPattern::new(base, [0, 2, 3, 12]).unwrap()),
    ];
    for p in cases {
        let text = p.to_string();
        assert!(text.contains(' '));
        assert_eq!(parse_pattern(&text).unwrap(), p, "{text}");
    }
}
