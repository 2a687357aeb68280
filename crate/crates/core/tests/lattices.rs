use supermodular::permutograph::{adjacency_label, bfs_distance, inversions_between, neighbours};
use supermodular::relations::{
    all_posets, all_preposets, all_total_preposets, classify, linear_extensions,
};
use supermodular::setsystems::{
    all_topologies, chains_union, count_linear_extensions, distinguishes_points, downsets_of,
    enums_of_system, is_chain_lattice_member, is_topology, ordered_partition_count,
    relation_of_system,
};
use supermodular::worked::crown_poset;
use supermodular::{EnumSet, Enumeration};

#[test]
fn exhaustive_counts() {
    let counts: Vec<_> = (1..=4)
        .map(|n| {
            (
                all_posets(n).unwrap().len(),
                all_preposets(n).unwrap().len(),
                all_topologies(n).unwrap().len(),
                all_total_preposets(n).unwrap().len(),
            )
        })
        .collect();
    assert_eq!(
        counts,
        [
            (1, 1, 1, 1),
            (3, 4, 4, 3),
            (19, 29, 29, 13),
            (219, 355, 355, 75)
        ]
    );
    assert_eq!(
        (1..=5).map(ordered_partition_count).collect::<Vec<_>>(),
        [1, 3, 13, 75, 541]
    );
}

#[test]
fn birkhoff_correspondence() {
    for n in 1..=4 {
        for t in all_preposets(n).unwrap() {
            let d = downsets_of(&t);
            assert!(is_topology(&d));
            assert_eq!(relation_of_system(&d), t);
            assert_eq!(distinguishes_points(&d), classify(&t).is_poset);
        }
        for d in all_topologies(n).unwrap() {
            assert_eq!(downsets_of(&relation_of_system(&d)), d);
        }
    }
}

#[test]
fn down_set_counting_matches_backtracking() {
    for t in all_posets(4).unwrap() {
        assert_eq!(
            count_linear_extensions(&t).unwrap(),
            linear_extensions(&t).unwrap().len() as u128
        );
    }
    assert_eq!(count_linear_extensions(&crown_poset()).unwrap(), 48);
}

#[test]
fn poset_based_sets_are_those_with_topological_chain_unions() {
    let all = Enumeration::all(3).unwrap();
    let mut members_not_based = 0;
    for mask in 1u32..64 {
        let s = EnumSet::from_members(
            3,
            all.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p.clone()),
        )
        .unwrap();
        let based = supermodular::relations::is_poset_based(&s).unwrap();
        let d = chains_union(&s);
        assert_eq!(
            is_topology(&d) && is_chain_lattice_member(&s).unwrap(),
            based
        );
        if based {
            assert!(is_chain_lattice_member(&s).unwrap());
            assert_eq!(enums_of_system(&d).unwrap(), s);
        } else if is_chain_lattice_member(&s).unwrap() {
            members_not_based += 1;
        }
    }
    assert!(members_not_based > 0);
}

#[test]
fn geodesic_steps_flip_exactly_the_inversions() {
    let all = Enumeration::all(4).unwrap();
    for p in &all {
        for q in &all {
            let inv = inversions_between(p, q).unwrap();
            let d = bfs_distance(p, q).unwrap();
            for s in neighbours(p) {
                let label = adjacency_label(p, &s).unwrap().unwrap();
                let closer = bfs_distance(&s, q).unwrap() + 1 == d;
                assert_eq!(closer, inv.contains(&label));
            }
        }
    }
}
