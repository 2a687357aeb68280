//! The five combinatorial descriptors of the face of the supermodular cone
//! generated by a game, and the comparators lining them up with face
//! inclusion.

mod dimension;
mod harness;
mod polymatroid;
mod rays;

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::cones::{cone_of, cone_subset, BraidCone};
use crate::error::{invalid, same_ground, Result};
use crate::games::{
    ci_structure, core_vertices, delta, marginal_vector, require_supermodular, tightness_class,
    vertex_poset_differences, ElementaryTriplet, Game,
};
use crate::ground::Subset;
use crate::permutograph::{EnumSet, Enumeration};
use crate::rational::{int, Rational};
use crate::relations::{galois_enums_to_relation, Relation};
use crate::setsystems::SetSystem;

pub use dimension::{face_dimension, is_extreme, standardize};
pub use harness::{random_pair, run_harness, trial_seeds, PairKind, Trial, MAX_HARNESS_DEFAULT};
pub use polymatroid::{
    flats_closure, flats_equivalence_classes, is_polymatroid, partition_equivalence,
    partition_equivalence_classes, submodular_reflect,
};
pub use rays::{
    double_description, extreme_rays, extreme_rays_with, Adjacency, MAX_RAYS_DEFAULT,
    MAX_RAYS_FORCED,
};

/// An edge of the permutohedral graph, endpoints in increasing order.
pub type Edge = (Enumeration, Enumeration);

/// `EnPart`, `FanPos`, `TiStr`, `InStr` and `PerSG` of one supermodular game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceDescriptorBundle {
    pub n: usize,
    pub en_part: BTreeSet<EnumSet>,
    pub fan_pos: BTreeSet<Relation>,
    pub ti_str: BTreeSet<SetSystem>,
    pub in_str: BTreeSet<ElementaryTriplet>,
    pub per_sg_edges: BTreeSet<Edge>,
}

/// Outcome of every condition of the face-inclusion theorem for one ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceReport {
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub v: bool,
    pub vi: bool,
    pub vii: bool,
    pub viii: bool,
    pub ix: bool,
    pub agreement: bool,
}

impl FaceReport {
    pub fn conditions(&self) -> [(&'static str, bool); 8] {
        [
            ("ii", self.ii),
            ("iii", self.iii),
            ("iv", self.iv),
            ("v", self.v),
            ("vi", self.vi),
            ("vii", self.vii),
            ("viii", self.viii),
            ("ix", self.ix),
        ]
    }
}

/// Edges `π ~ ρ` of the permutohedral graph whose elementary difference
/// `Δγ(π(i), π(i+1) | π(1..i-1))` vanishes.
pub fn permutohedral_subgraph(g: &Game) -> Result<BTreeSet<Edge>> {
    let n = g.ground_size();
    let mut edges = BTreeSet::new();
    for pi in Enumeration::all(n)? {
        let mut prefix = Subset::EMPTY;
        for i in 0..n.saturating_sub(1) {
            let rho = pi.swapped(i);
            if pi < rho {
                let t = ElementaryTriplet::new(pi.at(i), pi.at(i + 1), prefix)?;
                if delta(g, &t).is_zero() {
                    edges.insert((pi.clone(), rho));
                }
            }
            prefix = prefix.with(pi.at(i));
        }
    }
    Ok(edges)
}

pub fn descriptors(g: &Game) -> Result<FaceDescriptorBundle> {
    let vertices = core_vertices(g)?;
    let mut en_part = BTreeSet::new();
    let mut fan_pos = BTreeSet::new();
    let mut ti_str = BTreeSet::new();
    for (y, fiber) in &vertices {
        fan_pos.insert(galois_enums_to_relation(fiber));
        ti_str.insert(tightness_class(g, y)?);
        en_part.insert(fiber.clone());
    }
    Ok(FaceDescriptorBundle {
        n: g.ground_size(),
        en_part,
        fan_pos,
        ti_str,
        in_str: ci_structure(g)?,
        per_sg_edges: permutohedral_subgraph(g)?,
    })
}

/// Connected components of a subgraph on all `n!` enumerations.
pub fn components(n: usize, edges: &BTreeSet<Edge>) -> Result<BTreeSet<EnumSet>> {
    let nodes = Enumeration::all(n)?;
    let idx = |p: &Enumeration| {
        nodes
            .binary_search(p)
            .expect("node of the permutohedral graph")
    };
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        parent[ra] = rb;
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Enumeration>> = Default::default();
    for (i, p) in nodes.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(p.clone());
    }
    groups
        .into_values()
        .map(|m| EnumSet::from_members(n, m))
        .collect()
}

/// (v): every block of `b` lies inside a block of `a`.
pub fn refines_enpart(b: &FaceDescriptorBundle, a: &FaceDescriptorBundle) -> Result<bool> {
    same_ground(b.n, a.n)?;
    Ok(b.en_part
        .iter()
        .all(|s| a.en_part.iter().any(|t| s.is_subset(t))))
}

/// (vi): every tightness class of `b` lies inside one of `a`.
pub fn refines_tistr(b: &FaceDescriptorBundle, a: &FaceDescriptorBundle) -> Result<bool> {
    same_ground(b.n, a.n)?;
    Ok(b.ti_str
        .iter()
        .all(|s| a.ti_str.iter().any(|t| s.is_subset(t))))
}

/// (vii): `InStr(b) ⊆ InStr(a)`.
pub fn instr_subset(b: &FaceDescriptorBundle, a: &FaceDescriptorBundle) -> Result<bool> {
    same_ground(b.n, a.n)?;
    Ok(b.in_str.is_subset(&a.in_str))
}

/// (viii): `PerSG(b)` is a subgraph of `PerSG(a)`.
pub fn subgraph_rel(b: &FaceDescriptorBundle, a: &FaceDescriptorBundle) -> Result<bool> {
    same_ground(b.n, a.n)?;
    Ok(b.per_sg_edges.is_subset(&a.per_sg_edges))
}

/// (ix): for every poset `R` of `b` some poset `Q` of `a` has `Q ⊆ R`.
pub fn fanpos_sparser(a: &FaceDescriptorBundle, b: &FaceDescriptorBundle) -> Result<bool> {
    same_ground(a.n, b.n)?;
    Ok(b.fan_pos
        .iter()
        .all(|r| a.fan_pos.iter().any(|q| q.is_subset(r))))
}

/// Normal cones at the core vertices, built from edge directions between vertices.
pub fn normal_fan(g: &Game) -> Result<Vec<BraidCone>> {
    core_vertices(g)?
        .keys()
        .map(|y| Ok(cone_of(&vertex_poset_differences(g, y)?)))
        .collect()
}

/// (iv): every normal cone of `γB` lies inside a normal cone of `γA`.
pub fn normal_fan_refines(gb: &Game, ga: &Game) -> Result<bool> {
    same_ground(gb.ground_size(), ga.ground_size())?;
    let (fb, fa) = (normal_fan(gb)?, normal_fan(ga)?);
    for cb in &fb {
        let mut found = false;
        for ca in &fa {
            if cone_subset(cb, ca)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A supermodular `γC` and `α ∈ (0,1)` with `γB = (1−α)γA + αγC`, if one exists.
///
/// `γC = (1−β)γA + βγB` with `β > 1` taken halfway to the largest ratio that
/// keeps every strictly positive difference of `γB` non-negative.
pub fn interior_witness(ga: &Game, gb: &Game) -> Result<Option<(Game, Rational)>> {
    same_ground(ga.ground_size(), gb.ground_size())?;
    require_supermodular(ga)?;
    require_supermodular(gb)?;
    if ga == gb {
        return Ok(Some((ga.clone(), crate::rational::ratio(1, 2))));
    }
    let mut bound: Option<Rational> = None;
    for t in crate::games::all_triplets(ga.ground_size()) {
        let (da, db) = (delta(ga, &t), delta(gb, &t));
        if db.is_zero() {
            if !da.is_zero() {
                return Ok(None);
            }
        } else if da > db {
            // Δ_β = da + β(db − da) stays positive while β < da / (da − db).
            let limit = &da / (&da - &db);
            bound = Some(match bound {
                Some(b) if b < limit => b,
                _ => limit,
            });
        }
    }
    let beta = match bound {
        Some(b) => (b + Rational::one()) / int(2),
        None => int(2),
    };
    let gc = ga.combine(&(Rational::one() - &beta), gb, &beta)?;
    if !crate::games::is_supermodular(&gc) {
        return Ok(None);
    }
    Ok(Some((gc, Rational::one() / beta)))
}

/// Checks `cor(γB) = (1−α)·cor(γA) ⊕ α·cor(γC)` for `γB = (1−α)γA + αγC`,
/// vertexwise through marginal vectors and on every support value.
pub fn minkowski_check(ga: &Game, gc: &Game, alpha: &Rational) -> Result<bool> {
    same_ground(ga.ground_size(), gc.ground_size())?;
    if !alpha.is_positive() || *alpha >= Rational::one() {
        return Err(invalid("α must lie strictly between 0 and 1"));
    }
    require_supermodular(ga)?;
    require_supermodular(gc)?;
    let one_minus = Rational::one() - alpha;
    let gb = ga.combine(&one_minus, gc, alpha)?;
    if !crate::games::is_supermodular(&gb) {
        return Ok(false);
    }
    for pi in Enumeration::all(ga.ground_size())? {
        let lhs = marginal_vector(&gb, &pi)?;
        let rhs = marginal_vector(ga, &pi)?
            .scale(&one_minus)
            .add(&marginal_vector(gc, &pi)?.scale(alpha));
        if lhs != rhs {
            return Ok(false);
        }
    }
    let (vb, va, vc) = (core_vertices(&gb)?, core_vertices(ga)?, core_vertices(gc)?);
    let support = |v: &std::collections::BTreeMap<crate::cones::RationalVector, EnumSet>,
                   s: Subset| {
        v.keys()
            .map(|y| y.sum_over(s))
            .min()
            .expect("cores are non-empty")
    };
    for s in Subset::all(ga.ground_size()) {
        let sum = &one_minus * support(&va, s) + alpha * support(&vc, s);
        if support(&vb, s) != sum || *gb.value(s) != sum {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates conditions (ii)–(ix) for "the face of `γA` lies in the face of `γB`".
pub fn theorem_report(ga: &Game, gb: &Game) -> Result<FaceReport> {
    same_ground(ga.ground_size(), gb.ground_size())?;
    let (ba, bb) = (descriptors(ga)?, descriptors(gb)?);
    let witness = interior_witness(ga, gb)?;
    let ii = witness.is_some();
    let iii = match &witness {
        Some((gc, alpha)) => minkowski_check(ga, gc, alpha)?,
        None => false,
    };
    let mut r = FaceReport {
        ii,
        iii,
        iv: normal_fan_refines(gb, ga)?,
        v: refines_enpart(&bb, &ba)?,
        vi: refines_tistr(&bb, &ba)?,
        vii: instr_subset(&bb, &ba)?,
        viii: subgraph_rel(&bb, &ba)?,
        ix: fanpos_sparser(&ba, &bb)?,
        agreement: false,
    };
    let all = r.conditions();
    r.agreement = all.iter().all(|(_, v)| *v == all[0].1);
    Ok(r)
}

/// Whether two bundles describe the same face, descriptor by descriptor.
pub fn same_descriptors(a: &FaceDescriptorBundle, b: &FaceDescriptorBundle) -> [bool; 5] {
    [
        a.en_part == b.en_part,
        a.fan_pos == b.fan_pos,
        a.ti_str == b.ti_str,
        a.in_str == b.in_str,
        a.per_sg_edges == b.per_sg_edges,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{all_triplets, unanimity_game};

    fn square(n: usize) -> Game {
        Game::from_fn(n, |s| int((s.len() * s.len()) as i64)).unwrap()
    }

    #[test]
    fn zero_game_bundle() {
        let b = descriptors(&Game::zero(3)).unwrap();
        assert_eq!(b.en_part.len(), 1);
        assert_eq!(b.in_str.len(), all_triplets(3).len());
        assert_eq!(
            b.per_sg_edges.len(),
            crate::permutograph::graph_edges(3).unwrap().len()
        );
    }

    #[test]
    fn strict_game_bundle() {
        let b = descriptors(&square(3)).unwrap();
        assert_eq!(b.en_part.len(), 6);
        assert!(b.en_part.iter().all(|s| s.len() == 1));
        assert!(b.per_sg_edges.is_empty() && b.in_str.is_empty());
        assert_eq!(components(3, &b.per_sg_edges).unwrap(), b.en_part);
    }

    #[test]
    fn comparators() {
        let zero = descriptors(&Game::zero(3)).unwrap();
        let sq = descriptors(&square(3)).unwrap();
        assert!(refines_enpart(&zero, &zero).unwrap());
        assert!(refines_enpart(&sq, &zero).unwrap());
        assert!(!refines_enpart(&zero, &sq).unwrap());
        assert!(refines_tistr(&sq, &zero).unwrap());
        assert!(instr_subset(&sq, &zero).unwrap());
        assert!(!instr_subset(&zero, &sq).unwrap());
        assert!(subgraph_rel(&sq, &zero).unwrap());
        assert!(fanpos_sparser(&zero, &sq).unwrap());
        assert!(!fanpos_sparser(&sq, &zero).unwrap());
        let two = descriptors(&Game::zero(2)).unwrap();
        assert!(refines_enpart(&two, &zero).is_err());
    }

    #[test]
    fn witnesses() {
        let u = unanimity_game(2, Subset(0b11)).unwrap();
        let z = Game::zero(2);
        let (gc, alpha) = interior_witness(&u, &u).unwrap().unwrap();
        assert_eq!(
            (gc, alpha.clone()),
            (u.clone(), crate::rational::ratio(1, 2))
        );
        let (gc, alpha) = interior_witness(&z, &u).unwrap().unwrap();
        assert!(crate::games::is_supermodular(&gc));
        assert!(minkowski_check(&z, &gc, &alpha).unwrap());
        assert!(interior_witness(&u, &z).unwrap().is_none());
        assert!(minkowski_check(&z, &u, &crate::rational::ratio(1, 2)).unwrap());
        assert!(minkowski_check(&u, &u, &crate::rational::ratio(1, 3)).unwrap());
        assert!(minkowski_check(&z, &u, &int(1)).is_err());
    }

    #[test]
    fn reports() {
        let g = square(3);
        let r = theorem_report(&g, &g).unwrap();
        assert!(r.agreement && r.ii);
        let up = theorem_report(&Game::zero(3), &g).unwrap();
        assert!(up.agreement && up.vii);
        let down = theorem_report(&g, &Game::zero(3)).unwrap();
        assert!(down.agreement && !down.vii);
    }
}
