//! Binary relations on the ground set: closures, classification, the Galois
//! connection between sets of enumerations and relations, linear extensions,
//! contraction of preposets, Hasse diagrams and poset dimension.

use std::collections::BTreeSet;

use crate::error::{guard, invalid, same_ground, Error, Result};
use crate::ground::{GroundSet, Subset, MAX_GROUND};
use crate::permutograph::{inversions_in_set, EnumSet, Enumeration};

/// Largest ground set on which [`poset_dimension`] searches realizers.
pub const MAX_DIMENSION_GROUND: usize = 6;

/// A relation on an `n`-element ground set; row `u` holds the `v` with `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    n: usize,
    rows: Vec<u32>,
}

/// Properties reported by [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
    pub acyclic_offdiagonal: bool,
    pub is_poset: bool,
    pub is_preposet: bool,
    pub is_toset: bool,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        Relation {
            n,
            rows: vec![0; n],
        }
    }

    /// The diagonal `Δ`.
    pub fn diagonal(n: usize) -> Self {
        Relation {
            n,
            rows: (0..n).map(|u| 1 << u).collect(),
        }
    }

    /// The full relation `N × N`.
    pub fn full(n: usize) -> Self {
        let all = Subset::full(n).mask();
        Relation {
            n,
            rows: vec![all; n],
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        let mut r = Relation::empty(n);
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(invalid(format!(
                    "pair ({u},{v}) outside a {n}-element ground set"
                )));
            }
            r.insert(u, v);
        }
        Ok(r)
    }

    /// `Δ ∪ pairs`.
    pub fn reflexive_from<I: IntoIterator<Item = (usize, usize)>>(
        n: usize,
        pairs: I,
    ) -> Result<Self> {
        Ok(Relation::from_pairs(n, pairs)?.union(&Relation::diagonal(n)))
    }

    /// Builds a relation from per-element successor bitmasks.
    pub fn from_rows(rows: Vec<u32>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| !Subset(*r).fits(n)) {
            return Err(invalid("row mask outside the ground set"));
        }
        Ok(Relation { n, rows })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
    }

    /// Successors of `u` as a mask.
    pub fn row(&self, u: usize) -> Subset {
        Subset(self.rows[u])
    }

    /// Predecessors of `v` as a mask.
    pub fn column(&self, v: usize) -> Subset {
        Subset(
            (0..self.n)
                .filter(|&u| self.contains(u, v))
                .fold(0, |m, u| m | 1 << u),
        )
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in Subset(self.rows[u]).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn off_diagonal_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs().into_iter().filter(|(u, v)| u != v).collect()
    }

    pub fn union(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.n, other.n);
        Relation {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        debug_assert_eq!(self.n, other.n);
        Relation {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Relation) -> Relation {
        Relation {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// The opposite relation `T^op`.
    pub fn opposite(&self) -> Relation {
        let mut r = Relation::empty(self.n);
        for (u, v) in self.pairs() {
            r.insert(v, u);
        }
        r
    }

    pub fn without_diagonal(&self) -> Relation {
        self.difference(&Relation::diagonal(self.n))
    }

    pub fn display(&self, ground: &GroundSet) -> String {
        let parts: Vec<String> = self
            .off_diagonal_pairs()
            .iter()
            .map(|&(u, v)| format!("({},{})", ground.label(u), ground.label(v)))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Smallest transitive relation containing `r`.
pub fn transitive_closure(r: &Relation) -> Relation {
    let mut rows = r.rows.clone();
    for k in 0..r.n {
        for u in 0..r.n {
            if rows[u] >> k & 1 == 1 {
                rows[u] |= rows[k];
            }
        }
    }
    Relation { n: r.n, rows }
}

fn has_cycle(r: &Relation) -> bool {
    let c = transitive_closure(r);
    (0..r.n).any(|u| c.contains(u, u))
}

pub fn classify(r: &Relation) -> RelationFlags {
    let n = r.n;
    let reflexive = (0..n).all(|u| r.contains(u, u));
    let transitive = transitive_closure(r) == *r;
    let antisymmetric = r
        .off_diagonal_pairs()
        .into_iter()
        .all(|(u, v)| !r.contains(v, u));
    let acyclic_offdiagonal = !has_cycle(&r.without_diagonal());
    let is_preposet = reflexive && transitive;
    let is_poset = is_preposet && antisymmetric;
    let total = (0..n).all(|u| (0..n).all(|v| r.contains(u, v) || r.contains(v, u)));
    RelationFlags {
        reflexive,
        transitive,
        antisymmetric,
        acyclic_offdiagonal,
        is_poset,
        is_preposet,
        is_toset: is_poset && total,
    }
}

/// `tr(T ∪ Δ)`.
pub fn preposet_closure(t: &Relation) -> Relation {
    transitive_closure(&t.union(&Relation::diagonal(t.n)))
}

/// `tr(T ∪ Δ)` when `T ∖ Δ` is acyclic, otherwise `N × N`.
pub fn precedes_closure(t: &Relation) -> Relation {
    if has_cycle(&t.without_diagonal()) {
        Relation::full(t.n)
    } else {
        preposet_closure(t)
    }
}

/// The total order `T_π`.
pub fn toset_of(pi: &Enumeration) -> Relation {
    let n = pi.len();
    let mut r = Relation::empty(n);
    let mut placed = 0u32;
    for v in pi.order() {
        placed |= 1 << v;
        for u in Subset(placed).iter() {
            r.insert(u, v);
        }
    }
    r
}

/// Intersection of `T_π` over `π ∈ S`; `N × N` for the empty set.
pub fn galois_enums_to_relation(s: &EnumSet) -> Relation {
    s.iter().fold(Relation::full(s.ground_size()), |acc, pi| {
        acc.intersection(&toset_of(pi))
    })
}

/// `L(T)`: all enumerations whose toset contains `T`, in lexicographic order.
pub fn linear_extensions(t: &Relation) -> Result<EnumSet> {
    let n = t.n;
    guard(
        "listing linear extensions",
        n,
        crate::permutograph::MAX_ENUM_GROUND,
    )?;
    let strict = t.without_diagonal();
    let mut out = Vec::new();
    if !has_cycle(&strict) {
        // preds[v]: elements that must come before v.
        let preds: Vec<u32> = (0..n).map(|v| strict.column(v).mask()).collect();
        let mut cur: Vec<usize> = Vec::with_capacity(n);
        extend_rec(n, &preds, 0, &mut cur, &mut |order| {
            out.push(Enumeration::new(order.to_vec()).expect("backtracking yields permutations"));
            true
        });
    }
    EnumSet::from_members(n, out)
}

/// Backtracking over orders consonant with `preds`; the visitor returns
/// `false` to stop early.
fn extend_rec(
    n: usize,
    preds: &[u32],
    placed: u32,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == n {
        return visit(cur);
    }
    for v in 0..n {
        if placed >> v & 1 == 0 && preds[v] & !placed == 0 {
            cur.push(v);
            let go_on = extend_rec(n, preds, placed | 1 << v, cur, visit);
            cur.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// Whether `S` is the set of linear extensions of its Galois relation.
pub fn is_poset_based(s: &EnumSet) -> Result<bool> {
    let t = galois_enums_to_relation(s);
    Ok(linear_extensions(&t)? == *s)
}

/// Whether the preposet `R` arises as `tr(T ∪ Q)` for some `Q ⊆ T^op`.
pub fn is_contraction(t: &Relation, r: &Relation) -> Result<bool> {
    same_ground(t.n, r.n)?;
    if !classify(t).is_preposet || !classify(r).is_preposet {
        return Err(Error::NotPreposet);
    }
    let q = r.intersection(&t.opposite());
    Ok(transitive_closure(&t.union(&q)) == *r)
}

/// Covering pairs `u ⋖ v` of a poset.
pub fn hasse(t: &Relation) -> Result<Relation> {
    if !classify(t).is_poset {
        return Err(Error::NotPoset);
    }
    let strict = t.without_diagonal();
    let mut h = Relation::empty(t.n);
    for (u, v) in strict.pairs() {
        let between = strict.row(u).intersection(strict.column(v));
        if between.is_empty() {
            h.insert(u, v);
        }
    }
    Ok(h)
}

/// Minimum number of linear extensions whose intersection is `T`.
pub fn poset_dimension(t: &Relation) -> Result<usize> {
    if !classify(t).is_poset {
        return Err(Error::NotPoset);
    }
    guard("poset dimension search", t.n, MAX_DIMENSION_GROUND)?;
    let ext: Vec<Relation> = linear_extensions(t)?.iter().map(toset_of).collect();
    for k in 1..=ext.len() {
        if realizer_exists(t, &ext, k, 0, &Relation::full(t.n)) {
            return Ok(k);
        }
    }
    Err(Error::Inconsistent(
        "no realizer among linear extensions".into(),
    ))
}

fn realizer_exists(t: &Relation, ext: &[Relation], k: usize, start: usize, acc: &Relation) -> bool {
    if k == 0 {
        return acc == t;
    }
    (start..ext.len()).any(|i| realizer_exists(t, ext, k - 1, i + 1, &acc.intersection(&ext[i])))
}

/// Height in the lattice of poset-based sets: `|Inv(S)|`, or `-1` for `∅`.
pub fn height_of(s: &EnumSet) -> Result<i64> {
    if !is_poset_based(s)? {
        return Err(Error::NotPosetBased);
    }
    if s.is_empty() {
        return Ok(-1);
    }
    Ok(inversions_in_set(s)?.len() as i64)
}

/// All reflexive relations on `n` points satisfying `keep`.
fn reflexive_relations(n: usize, keep: impl Fn(&RelationFlags) -> bool) -> Result<Vec<Relation>> {
    guard("exhaustive relation enumeration", n, 4)?;
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << off.len() {
        let mut r = Relation::diagonal(n);
        for (k, &(u, v)) in off.iter().enumerate() {
            if bits >> k & 1 == 1 {
                r.insert(u, v);
            }
        }
        if keep(&classify(&r)) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Every poset on the labelled `n`-element set (exhaustive, `n ≤ 4`).
pub fn all_posets(n: usize) -> Result<Vec<Relation>> {
    reflexive_relations(n, |f| f.is_poset)
}

/// Every preposet on the labelled `n`-element set (exhaustive, `n ≤ 4`).
pub fn all_preposets(n: usize) -> Result<Vec<Relation>> {
    reflexive_relations(n, |f| f.is_preposet)
}

/// Total preposets, i.e. ordered set partitions (faces of the permutohedron).
pub fn all_total_preposets(n: usize) -> Result<Vec<Relation>> {
    reflexive_relations(n, |f| f.is_preposet).map(|v| {
        v.into_iter()
            .filter(|r| (0..n).all(|u| (0..n).all(|w| r.contains(u, w) || r.contains(w, u))))
            .collect()
    })
}

/// Incomparable pairs of a relation.
pub fn incomparable_pairs(t: &Relation) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for u in 0..t.n {
        for v in u + 1..t.n {
            if !t.contains(u, v) && !t.contains(v, u) {
                out.insert((u, v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutograph::halfspace_set;

    fn e(s: &str) -> Enumeration {
        Enumeration::parse(&GroundSet::letters(s.len()).unwrap(), s).unwrap()
    }

    #[test]
    fn closures() {
        let d = Relation::diagonal(3);
        assert_eq!(transitive_closure(&d), d);
        let chain = Relation::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(transitive_closure(&chain).contains(0, 2));
        let cyc = Relation::from_pairs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(transitive_closure(&cyc), Relation::full(2));
        assert_eq!(preposet_closure(&Relation::empty(3)), Relation::diagonal(3));
        assert_eq!(
            preposet_closure(&chain),
            Relation::reflexive_from(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
        );
        let ab = Relation::from_pairs(2, [(0, 1)]).unwrap();
        assert_eq!(
            precedes_closure(&ab),
            Relation::reflexive_from(2, [(0, 1)]).unwrap()
        );
        assert_eq!(precedes_closure(&cyc), Relation::full(2));
        assert_eq!(precedes_closure(&d), d);
    }

    #[test]
    fn classification() {
        let f = classify(&Relation::diagonal(3));
        assert!(f.is_poset && f.is_preposet && !f.is_toset);
        assert!(classify(&toset_of(&e("abc"))).is_toset);
        let full = classify(&Relation::full(2));
        assert!(full.is_preposet && !full.is_poset && !full.acyclic_offdiagonal);
        for pi in Enumeration::all(3).unwrap() {
            assert!(classify(&toset_of(&pi)).is_toset);
        }
    }

    #[test]
    fn tosets() {
        assert_eq!(
            toset_of(&e("ab")),
            Relation::reflexive_from(2, [(0, 1)]).unwrap()
        );
        assert_eq!(
            toset_of(&e("cba")),
            Relation::reflexive_from(3, [(2, 1), (2, 0), (1, 0)]).unwrap()
        );
    }

    #[test]
    fn galois_connection() {
        let pi = e("bca");
        assert_eq!(
            galois_enums_to_relation(&EnumSet::singleton(pi.clone())),
            toset_of(&pi)
        );
        assert_eq!(
            galois_enums_to_relation(&EnumSet::all(3).unwrap()),
            Relation::diagonal(3)
        );
        assert_eq!(
            galois_enums_to_relation(&EnumSet::empty(3)),
            Relation::full(3)
        );
    }

    #[test]
    fn extensions() {
        assert_eq!(linear_extensions(&Relation::diagonal(3)).unwrap().len(), 6);
        let pi = e("cab");
        assert_eq!(
            linear_extensions(&toset_of(&pi)).unwrap(),
            EnumSet::singleton(pi)
        );
        assert!(linear_extensions(&Relation::full(2)).unwrap().is_empty());
    }

    #[test]
    fn poset_based_sets() {
        assert!(is_poset_based(&EnumSet::all(3).unwrap()).unwrap());
        let s = EnumSet::from_members(3, [e("abc"), e("cba")]).unwrap();
        assert!(!is_poset_based(&s).unwrap());
        assert!(is_poset_based(&halfspace_set(3, 0, 1).unwrap()).unwrap());
        assert!(is_poset_based(&EnumSet::empty(3)).unwrap());
    }

    #[test]
    fn contractions() {
        let t = Relation::reflexive_from(2, [(0, 1)]).unwrap();
        assert!(is_contraction(&t, &t).unwrap());
        assert!(is_contraction(&t, &Relation::full(2)).unwrap());
        assert!(!is_contraction(&Relation::diagonal(2), &t).unwrap());
        assert!(matches!(
            is_contraction(&Relation::empty(2), &t),
            Err(Error::NotPreposet)
        ));
    }

    #[test]
    fn hasse_diagrams() {
        let chain = toset_of(&e("abc"));
        assert_eq!(hasse(&chain).unwrap().pairs(), vec![(0, 1), (1, 2)]);
        assert!(hasse(&Relation::diagonal(3)).unwrap().is_empty());
        assert!(matches!(hasse(&Relation::full(2)), Err(Error::NotPoset)));
    }

    #[test]
    fn dimensions() {
        assert_eq!(poset_dimension(&toset_of(&e("bac"))).unwrap(), 1);
        assert_eq!(poset_dimension(&Relation::diagonal(2)).unwrap(), 2);
        assert!(matches!(
            poset_dimension(&Relation::full(2)),
            Err(Error::NotPoset)
        ));
        assert!(matches!(
            poset_dimension(&Relation::diagonal(7)),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn heights() {
        assert_eq!(height_of(&EnumSet::all(3).unwrap()).unwrap(), 3);
        assert_eq!(height_of(&EnumSet::singleton(e("abc"))).unwrap(), 0);
        assert_eq!(height_of(&EnumSet::empty(3)).unwrap(), -1);
        let s = EnumSet::from_members(3, [e("abc"), e("cba")]).unwrap();
        assert!(matches!(height_of(&s), Err(Error::NotPosetBased)));
    }
}
