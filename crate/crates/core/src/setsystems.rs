//! Families of subsets: down-set classes of preposets, finite topologies,
//! maximal chains of enumerations and down-set based counting.

use std::collections::{BTreeSet, HashMap};

use crate::error::{guard, same_ground, Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::permutograph::{EnumSet, Enumeration};
use crate::relations::{classify, is_contraction, Relation};

/// A family of subsets of an `n`-element ground set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetSystem {
    n: usize,
    members: BTreeSet<Subset>,
}

impl SetSystem {
    pub fn empty(n: usize) -> Self {
        SetSystem {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn from_members<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Result<Self> {
        let members: BTreeSet<Subset> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|s| !s.fits(n)) {
            return Err(crate::error::invalid(format!(
                "{bad} is outside the ground set"
            )));
        }
        Ok(SetSystem { n, members })
    }

    pub fn power_set(n: usize) -> Self {
        SetSystem {
            n,
            members: Subset::all(n).collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.contains(&s)
    }

    pub fn insert(&mut self, s: Subset) {
        debug_assert!(s.fits(self.n));
        self.members.insert(s);
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &SetSystem) -> bool {
        self.n == other.n && self.members.is_subset(&other.members)
    }

    /// Members sorted by size, then lexicographically; the serialization order.
    pub fn sorted(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.members.iter().copied().collect();
        v.sort_by_key(|s| s.size_lex_key());
        v
    }

    pub fn display(&self, ground: &GroundSet) -> String {
        let parts: Vec<String> = self.sorted().into_iter().map(|s| ground.show(s)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `D_T`: subsets closed under `T`-predecessors.
pub fn downsets_of(t: &Relation) -> SetSystem {
    let n = t.ground_size();
    let preds: Vec<Subset> = (0..n).map(|v| t.column(v)).collect();
    let members = Subset::all(n).filter(|d| d.iter().all(|v| preds[v].is_subset_of(*d)));
    SetSystem {
        n,
        members: members.collect(),
    }
}

/// `D^⊳`: pairs `(u, v)` such that every member containing `v` contains `u`.
pub fn relation_of_system(d: &SetSystem) -> Relation {
    let n = d.n;
    let mut r = Relation::empty(n);
    for u in 0..n {
        for v in 0..n {
            if d.iter().all(|s| !s.contains(v) || s.contains(u)) {
                r.insert(u, v);
            }
        }
    }
    r
}

/// Contains `∅` and `N` and is closed under pairwise `∩` and `∪`.
pub fn is_topology(d: &SetSystem) -> bool {
    if !d.contains(Subset::EMPTY) || !d.contains(Subset::full(d.n)) {
        return false;
    }
    let m: Vec<Subset> = d.iter().collect();
    m.iter().enumerate().all(|(i, a)| {
        m[i + 1..]
            .iter()
            .all(|b| d.contains(a.intersection(*b)) && d.contains(a.union(*b)))
    })
}

/// For all distinct `u, v` some member contains exactly one of them.
pub fn distinguishes_points(d: &SetSystem) -> bool {
    (0..d.n).all(|u| (u + 1..d.n).all(|v| d.iter().any(|s| s.contains(u) != s.contains(v))))
}

/// The chain of prefixes `∅ ⊂ {π(1)} ⊂ … ⊂ N`.
pub fn max_chain(pi: &Enumeration) -> SetSystem {
    let mut members = BTreeSet::from([Subset::EMPTY]);
    let mut cur = Subset::EMPTY;
    for e in pi.order() {
        cur = cur.with(e);
        members.insert(cur);
    }
    SetSystem {
        n: pi.len(),
        members,
    }
}

fn prefixes(pi: &Enumeration) -> impl Iterator<Item = Subset> + '_ {
    pi.order().scan(Subset::EMPTY, |cur, e| {
        *cur = cur.with(e);
        Some(*cur)
    })
}

/// Union of the maximal chains of the members of `S`.
pub fn chains_union(s: &EnumSet) -> SetSystem {
    let mut out = SetSystem::empty(s.ground_size());
    for pi in s.iter() {
        out.insert(Subset::EMPTY);
        for p in prefixes(pi) {
            out.insert(p);
        }
    }
    out
}

/// Enumerations whose whole chain lies inside `D`.
pub fn enums_of_system(d: &SetSystem) -> Result<EnumSet> {
    let members = Enumeration::all(d.n)?
        .into_iter()
        .filter(|pi| d.contains(Subset::EMPTY) && prefixes(pi).all(|p| d.contains(p)));
    EnumSet::from_members(d.n, members)
}

/// Whether `S` is closed in the chain lattice: `S = enums(⋃ C_π)`.
pub fn is_chain_lattice_member(s: &EnumSet) -> Result<bool> {
    Ok(enums_of_system(&chains_union(s))? == *s)
}

/// Whether topology `DR` is a reduction of topology `DT`.
pub fn is_reduction(dt: &SetSystem, dr: &SetSystem) -> Result<bool> {
    same_ground(dt.n, dr.n)?;
    if !is_topology(dt) || !is_topology(dr) {
        return Err(Error::NotTopology);
    }
    is_contraction(&relation_of_system(dt), &relation_of_system(dr))
}

/// Number of linear extensions of a poset, by counting maximal chains of its
/// down-set lattice.
pub fn count_linear_extensions(t: &Relation) -> Result<u128> {
    if !classify(t).is_poset {
        return Err(Error::NotPoset);
    }
    guard("down-set counting", t.ground_size(), 24)?;
    let d = downsets_of(t);
    let mut ways: HashMap<Subset, u128> = HashMap::with_capacity(d.len());
    let mut order = d.sorted();
    order.sort_by_key(|s| s.len());
    for s in order {
        let w = if s.is_empty() {
            1
        } else {
            s.iter().filter_map(|x| ways.get(&s.without(x))).sum()
        };
        ways.insert(s, w);
    }
    Ok(ways[&Subset::full(t.ground_size())])
}

/// Every topology on `n` points (exhaustive over families, `n ≤ 4`).
pub fn all_topologies(n: usize) -> Result<Vec<SetSystem>> {
    guard("exhaustive topology enumeration", n, 4)?;
    let full = Subset::full(n);
    let inner: Vec<Subset> = Subset::all(n)
        .filter(|s| !s.is_empty() && *s != full)
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << inner.len() {
        let mut d = SetSystem::empty(n);
        d.insert(Subset::EMPTY);
        d.insert(full);
        for (k, s) in inner.iter().enumerate() {
            if bits >> k & 1 == 1 {
                d.insert(*s);
            }
        }
        if is_topology(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

/// Number of ordered set partitions of an `n`-set (Fubini numbers).
pub fn ordered_partition_count(n: usize) -> u128 {
    // a(n) = Σ_k C(n,k) a(n-k)
    let mut a = vec![1u128];
    for m in 1..=n {
        let mut binom = 1u128;
        let mut total = 0u128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            total += binom * a[m - k];
        }
        a.push(total);
    }
    a[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{linear_extensions, toset_of};

    fn g3() -> GroundSet {
        GroundSet::letters(3).unwrap()
    }

    fn sys(n: usize, sets: &[&[&str]]) -> SetSystem {
        let g = GroundSet::letters(n).unwrap();
        SetSystem::from_members(n, sets.iter().map(|s| g.subset_of(s).unwrap())).unwrap()
    }

    #[test]
    fn downsets() {
        assert_eq!(downsets_of(&Relation::diagonal(3)), SetSystem::power_set(3));
        let ab = toset_of(&Enumeration::identity(2));
        assert_eq!(downsets_of(&ab), sys(2, &[&[], &["a"], &["a", "b"]]));
        let t = Relation::reflexive_from(3, [(0, 1)]).unwrap();
        let d = downsets_of(&t);
        assert_eq!(d.len(), 6);
        let g = g3();
        assert!(!d.contains(g.subset_of(&["b"]).unwrap()));
        assert!(!d.contains(g.subset_of(&["b", "c"]).unwrap()));
    }

    #[test]
    fn relation_from_systems() {
        assert_eq!(
            relation_of_system(&SetSystem::power_set(3)),
            Relation::diagonal(3)
        );
        assert_eq!(
            relation_of_system(&sys(3, &[&[], &["a", "b", "c"]])),
            Relation::full(3)
        );
        assert_eq!(
            relation_of_system(&sys(2, &[&[], &["a"], &["a", "b"]])),
            toset_of(&Enumeration::identity(2))
        );
    }

    #[test]
    fn topologies() {
        assert!(is_topology(&sys(3, &[&[], &["a", "b", "c"]])));
        assert!(is_topology(&SetSystem::power_set(3)));
        let g = g3();
        let mut d = SetSystem::power_set(3);
        d.members.remove(&g.subset_of(&["b"]).unwrap());
        d.members.remove(&g.subset_of(&["a", "c"]).unwrap());
        assert!(!is_topology(&d));
        assert!(distinguishes_points(&d));
        assert!(distinguishes_points(&SetSystem::power_set(3)));
        assert!(!distinguishes_points(&sys(3, &[&[], &["a", "b", "c"]])));
        assert!(distinguishes_points(&max_chain(&Enumeration::identity(3))));
    }

    #[test]
    fn chains() {
        let g = g3();
        let cba = Enumeration::parse(&g, "cba").unwrap();
        assert_eq!(
            max_chain(&cba),
            sys(3, &[&[], &["c"], &["b", "c"], &["a", "b", "c"]])
        );
        assert_eq!(max_chain(&Enumeration::identity(1)).len(), 2);
        assert_eq!(
            chains_union(&EnumSet::singleton(cba.clone())),
            max_chain(&cba)
        );
        assert_eq!(
            chains_union(&EnumSet::all(3).unwrap()),
            SetSystem::power_set(3)
        );
        assert_eq!(
            enums_of_system(&SetSystem::power_set(3)).unwrap(),
            EnumSet::all(3).unwrap()
        );
        assert!(enums_of_system(&sys(3, &[&[], &["a", "b", "c"]]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn chain_lattice() {
        let g = g3();
        let s = EnumSet::from_members(
            3,
            [
                Enumeration::parse(&g, "abc").unwrap(),
                Enumeration::parse(&g, "cba").unwrap(),
            ],
        )
        .unwrap();
        assert!(is_chain_lattice_member(&s).unwrap());
        let mut most = EnumSet::all(3).unwrap();
        most.remove(&Enumeration::identity(3));
        assert!(!is_chain_lattice_member(&most).unwrap());
        let t = Relation::reflexive_from(3, [(0, 2)]).unwrap();
        assert!(is_chain_lattice_member(&linear_extensions(&t).unwrap()).unwrap());
    }

    #[test]
    fn reductions() {
        let p = SetSystem::power_set(2);
        assert!(is_reduction(&p, &p).unwrap());
        let chain = sys(2, &[&[], &["a"], &["a", "b"]]);
        assert!(!is_reduction(&p, &chain).unwrap());
        // Reductions only collapse pairs; Δ and a chain are incomparable.
        assert!(!is_reduction(&chain, &p).unwrap());
        assert!(is_reduction(&chain, &sys(2, &[&[], &["a", "b"]])).unwrap());
        assert!(matches!(
            is_reduction(&p, &sys(2, &[&["a"]])),
            Err(Error::NotTopology)
        ));
    }

    #[test]
    fn counting() {
        assert_eq!(count_linear_extensions(&Relation::diagonal(3)).unwrap(), 6);
        assert_eq!(
            count_linear_extensions(&toset_of(&Enumeration::identity(4))).unwrap(),
            1
        );
        assert!(count_linear_extensions(&Relation::full(2)).is_err());
        let fubini: Vec<u128> = (1..=4).map(ordered_partition_count).collect();
        assert_eq!(fubini, vec![1, 3, 13, 75]);
    }
}
