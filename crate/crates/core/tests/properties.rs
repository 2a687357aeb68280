use proptest::prelude::*;

use supermodular::cones::{cone_contains, cone_of, generator_combination, RationalVector};
use supermodular::games::{marginal_vector, random_supermodular, RandomGameParams};
use supermodular::linalg::{integer_rank, rank};
use supermodular::permutograph::{
    bfs_distance, covering_of_set, diameter, inversions_between, inversions_in_set,
};
use supermodular::rational::int;
use supermodular::relations::{
    galois_enums_to_relation, hasse, incomparable_pairs, linear_extensions, preposet_closure,
};
use supermodular::{EnumSet, Enumeration, Relation};

fn relation(n: usize) -> impl Strategy<Value = Relation> {
    prop::collection::vec(0u32..(1 << n), n).prop_map(|rows| Relation::from_rows(rows).unwrap())
}

fn enum_set(n: usize) -> impl Strategy<Value = EnumSet> {
    let all = Enumeration::all(n).unwrap();
    prop::collection::vec(any::<bool>(), all.len()).prop_map(move |keep| {
        EnumSet::from_members(
            n,
            all.iter()
                .zip(&keep)
                .filter(|(_, k)| **k)
                .map(|(p, _)| p.clone()),
        )
        .unwrap()
    })
}

fn enumeration(n: usize) -> impl Strategy<Value = Enumeration> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Enumeration::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn galois_maps_are_antitone(s1 in enum_set(4), s2 in enum_set(4)) {
        let union = s1.union(&s2).unwrap();
        prop_assert!(galois_enums_to_relation(&union).is_subset(&galois_enums_to_relation(&s1)));
        let (t1, t2) = (galois_enums_to_relation(&s1), galois_enums_to_relation(&s2));
        let meet = t1.intersection(&t2);
        prop_assert!(linear_extensions(&t1).unwrap().is_subset(&linear_extensions(&meet).unwrap()));
    }

    #[test]
    fn galois_closures_are_extensive_and_idempotent(s in enum_set(4), t in relation(4)) {
        let closed = linear_extensions(&galois_enums_to_relation(&s)).unwrap();
        prop_assert!(s.is_subset(&closed));
        prop_assert_eq!(linear_extensions(&galois_enums_to_relation(&closed)).unwrap(), closed);
        let lt = linear_extensions(&t).unwrap();
        let back = galois_enums_to_relation(&lt);
        prop_assert!(t.is_subset(&back));
        prop_assert_eq!(galois_enums_to_relation(&linear_extensions(&back).unwrap()), back);
    }

    #[test]
    fn bareiss_matches_rational_rank(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 6), 0..7)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let exact: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        prop_assert_eq!(integer_rank(&refs), rank(&exact));
    }

    #[test]
    fn distance_is_inversion_count(p in enumeration(5), q in enumeration(5)) {
        prop_assert_eq!(bfs_distance(&p, &q).unwrap(), inversions_between(&p, &q).unwrap().len());
    }

    #[test]
    fn poset_based_sets_have_diameter_equal_to_inversions(t in relation(4)) {
        let s = linear_extensions(&t).unwrap();
        prop_assume!(!s.is_empty());
        let inv = inversions_in_set(&s).unwrap();
        prop_assert_eq!(diameter(&s).unwrap(), inv.len());
        let poset = galois_enums_to_relation(&s);
        let incomparable: Vec<_> = incomparable_pairs(&poset).into_iter().collect();
        let labels: Vec<_> = inv.iter().map(|p| (p.lo(), p.hi())).collect();
        prop_assert_eq!(labels, incomparable);
        prop_assert_eq!(covering_of_set(&s).unwrap().without_diagonal(), hasse(&poset).unwrap().without_diagonal());
    }

    #[test]
    fn braid_cone_membership_matches_generators(t in relation(4), x in prop::collection::vec(-3i64..=3, 4)) {
        let cone = cone_of(&preposet_closure(&t));
        let x = RationalVector::from_ints(&x);
        prop_assert_eq!(cone_contains(&cone, &x).unwrap(), generator_combination(&cone, &x).unwrap().is_some());
    }

    #[test]
    fn marginal_vectors_are_linear(s1 in any::<u64>(), s2 in any::<u64>(), p in enumeration(4), a in 0i64..4, b in 0i64..4) {
        let g = random_supermodular(s1, RandomGameParams::new(4, 3, 3)).unwrap();
        let h = random_supermodular(s2, RandomGameParams::new(4, 3, 3)).unwrap();
        let combo = g.combine(&int(a), &h, &int(b)).unwrap();
        let expected = marginal_vector(&g, &p).unwrap().scale(&int(a)).add(&marginal_vector(&h, &p).unwrap().scale(&int(b)));
        prop_assert_eq!(marginal_vector(&combo, &p).unwrap(), expected);
    }
}
