use std::collections::BTreeSet;

use supermodular::faces::{
    components, descriptors, extreme_rays, extreme_rays_with, face_dimension, is_extreme,
    random_pair, same_descriptors, trial_seeds, Adjacency,
};
use supermodular::games::{
    core_vertices, exactness_check, random_supermodular, tightness_classes, RandomGameParams,
};
use supermodular::permutograph::graph_edges;
use supermodular::setsystems::distinguishes_points;

#[test]
fn one_descriptor_determines_the_face() {
    for (i, seed) in trial_seeds(99, 200).into_iter().enumerate() {
        let n = 3 + i % 2;
        let (_, a, b) = random_pair(seed, n).unwrap();
        let (ba, bb) = (descriptors(&a).unwrap(), descriptors(&b).unwrap());
        let same = same_descriptors(&ba, &bb);
        assert!(same.iter().all(|&x| x == same[0]), "seed {seed}: {same:?}");
        if same[0] {
            assert_eq!(face_dimension(&a).unwrap(), face_dimension(&b).unwrap());
        }
    }
}

#[test]
fn subgraph_components_are_rank_test_blocks() {
    for seed in 0..60 {
        let n = 3 + (seed % 2) as usize;
        let g = random_supermodular(seed, RandomGameParams::new(n, 3, 2)).unwrap();
        let b = descriptors(&g).unwrap();
        assert_eq!(components(n, &b.per_sg_edges).unwrap(), b.en_part);
        let ambient: Vec<_> = graph_edges(n).unwrap();
        for block in &b.en_part {
            let induced: BTreeSet<_> = ambient
                .iter()
                .filter(|(p, q, _)| block.contains(p) && block.contains(q))
                .map(|(p, q, _)| (p.clone(), q.clone()))
                .collect();
            let inside: BTreeSet<_> = b
                .per_sg_edges
                .iter()
                .filter(|(p, _)| block.contains(p))
                .cloned()
                .collect();
            assert_eq!(inside, induced);
        }
    }
}

#[test]
fn cores_are_exact_with_topological_tightness() {
    for seed in 0..60 {
        let g = random_supermodular(seed, RandomGameParams::new(4, 4, 3)).unwrap();
        assert!(exactness_check(&g).unwrap());
        for (_, t, top) in tightness_classes(&g).unwrap() {
            assert!(top && distinguishes_points(&t));
        }
        assert!(!core_vertices(&g).unwrap().is_empty());
    }
}

#[test]
fn rays_are_extreme_and_distinct() {
    for n in [3, 4] {
        let rays = extreme_rays(n, false).unwrap();
        let mut bundles = Vec::new();
        for r in &rays {
            assert!(is_extreme(r).unwrap());
            bundles.push(descriptors(r).unwrap());
        }
        for i in 0..bundles.len() {
            for j in i + 1..bundles.len() {
                assert_ne!(bundles[i], bundles[j]);
            }
        }
        assert_eq!(
            extreme_rays_with(n, false, Adjacency::Combinatorial).unwrap(),
            rays
        );
    }
    assert_eq!(extreme_rays(3, false).unwrap().len(), 5);
}
