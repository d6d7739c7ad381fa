//! Property tests for the structural invariants: ring axioms of truncated
//! series, geometric-series inverses, bijection round trips, and encoding
//! round trips.

use proptest::prelude::*;

use hookforge::hook_strip::{to_external, to_internal, HookedPartition};
use hookforge::partition::{Cell, HookSide, Partition};
use hookforge::pp::{hg_compose, hg_decompose, HookMultiplicity};
use hookforge::series::{geom_expand, ContentMonomial, Series, TruncSeries};

fn arb_partition(max_part: usize, max_rows: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_part, 0..=max_rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn arb_monomial() -> impl Strategy<Value = ContentMonomial> {
    proptest::collection::btree_map(-4i64..=4, 1u32..=2, 1..=3)
        .prop_map(ContentMonomial::from_exponents)
}

fn arb_series(cap: usize) -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec((arb_monomial(), -3i128..=3), 0..=4).prop_map(move |terms| {
        let mut s = TruncSeries::zero(cap);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    })
}

proptest! {
    #[test]
    fn series_multiplication_commutes_and_associates(
        a in arb_series(9),
        b in arb_series(9),
        c in arb_series(9),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Series::one(9)), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn truncation_is_a_ring_morphism(a in arb_series(9), b in arb_series(9), cap in 0usize..=9) {
        prop_assert_eq!(a.mul(&b).truncate(cap), a.truncate(cap).mul(&b.truncate(cap)));
        prop_assert_eq!(a.add(&b).truncate(cap), a.truncate(cap).add(&b.truncate(cap)));
    }

    #[test]
    fn geometric_series_inverts_its_factor(m in arb_monomial(), cap in 1usize..=10) {
        let g = geom_expand(&m, cap).unwrap();
        let mut one_minus = TruncSeries::one(cap);
        one_minus.add_term(m, -1);
        prop_assert!(g.mul(&one_minus).is_one());
    }

    #[test]
    fn geometric_products_count_things(
        ms in proptest::collection::btree_set(arb_monomial(), 1..=4),
    ) {
        let cap = 8;
        let mut product = TruncSeries::one(cap);
        for m in &ms {
            product = product.mul(&geom_expand(m, cap).unwrap());
        }
        prop_assert!(product.sorted_terms().iter().all(|&(_, v)| v > 0));
    }

    #[test]
    fn partition_text_round_trip(lambda in arb_partition(30, 8)) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn hook_multiplicities_round_trip(
        lambda in arb_partition(4, 4).prop_filter("nonempty", |l| !l.is_empty()),
        seed in proptest::collection::vec(0u32..=2, 16),
    ) {
        let mult = lambda
            .cells()
            .zip(seed)
            .filter(|&(_, m)| m > 0)
            .collect::<std::collections::BTreeMap<Cell, u32>>();
        let hm = HookMultiplicity { shape: lambda, mult };
        let filling = hg_compose(&hm);
        prop_assert_eq!(filling.size, hm.weight());
        prop_assert_eq!(hg_decompose(&filling).unwrap(), hm);
    }

    #[test]
    fn strip_moves_round_trip(
        lambda in arb_partition(5, 5),
        row in 0usize..8,
        col in 0usize..8,
    ) {
        let cell = Cell::new(row, col);
        prop_assume!(!lambda.contains(cell));
        let hp = HookedPartition::new(lambda, cell, HookSide::External).unwrap();
        let up = to_internal(&hp).unwrap();
        prop_assert_eq!(up.lambda.size(), hp.lambda.size() + hp.stats.hook_len);
        prop_assert_eq!((up.stats.arm, up.stats.leg), (hp.stats.arm, hp.stats.leg));
        prop_assert_eq!(to_external(&up).unwrap(), hp);
    }
}
