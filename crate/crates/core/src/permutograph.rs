//! Enumerations of the ground set, rank vectors, and the permutohedral graph
//! whose edges are adjacent transpositions labelled by the swapped pair.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{guard, invalid, same_ground, Error, Result};
use crate::ground::GroundSet;
use crate::relations::Relation;

/// Largest ground set for which all `n!` enumerations are materialized.
pub const MAX_ENUM_GROUND: usize = 8;

/// A bijection from positions `0..n` to ground elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Enumeration {
    order: Vec<u8>,
}

impl Enumeration {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(invalid("enumeration of an empty ground set"));
        }
        let mut seen = vec![false; n];
        for &e in &order {
            if e >= n || seen[e] {
                return Err(invalid(format!("{order:?} is not a permutation")));
            }
            seen[e] = true;
        }
        Ok(Enumeration {
            order: order.into_iter().map(|e| e as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Enumeration {
            order: (0..n as u8).collect(),
        }
    }

    /// Parses `|a|b|c|` style text (pipes optional for one-letter labels).
    pub fn parse(ground: &GroundSet, text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_matches('|');
        let parts: Vec<String> = if trimmed.contains('|') {
            trimmed.split('|').map(|s| s.trim().to_string()).collect()
        } else {
            trimmed.chars().map(|c| c.to_string()).collect()
        };
        let order = parts
            .iter()
            .map(|p| ground.index_of(p))
            .collect::<Result<Vec<_>>>()?;
        if order.len() != ground.len() {
            return Err(invalid(format!(
                "{text:?} does not list every element once"
            )));
        }
        Enumeration::new(order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn at(&self, pos: usize) -> usize {
        self.order[pos] as usize
    }

    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().map(|&e| e as usize)
    }

    /// Position (0-based) of every element.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &e) in self.order.iter().enumerate() {
            pos[e as usize] = i;
        }
        pos
    }

    /// Whether `u` is placed strictly before `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        let pos = self.positions();
        pos[u] < pos[v]
    }

    /// Swaps the entries at positions `i` and `i + 1`.
    pub fn swapped(&self, i: usize) -> Enumeration {
        let mut order = self.order.clone();
        order.swap(i, i + 1);
        Enumeration { order }
    }

    /// All `n!` enumerations in lexicographic order.
    pub fn all(n: usize) -> Result<Vec<Enumeration>> {
        guard("enumerating all orderings", n, MAX_ENUM_GROUND)?;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Enumeration>) {
            if cur.len() == n {
                out.push(Enumeration { order: cur.clone() });
                return;
            }
            for e in 0..n {
                if !used[e] {
                    used[e] = true;
                    cur.push(e as u8);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[e] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        Ok(out)
    }

    pub fn display(&self, ground: &GroundSet) -> String {
        let mut s = String::from("|");
        for e in self.order() {
            s.push_str(ground.label(e));
            s.push('|');
        }
        s
    }
}

impl fmt::Display for Enumeration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for e in self.order() {
            write!(f, "{e}|")?;
        }
        Ok(())
    }
}

/// A set of enumerations of one ground set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumSet {
    n: usize,
    members: BTreeSet<Enumeration>,
}

impl EnumSet {
    pub fn empty(n: usize) -> Self {
        EnumSet {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn from_members<I: IntoIterator<Item = Enumeration>>(n: usize, members: I) -> Result<Self> {
        let members: BTreeSet<Enumeration> = members.into_iter().collect();
        for m in &members {
            same_ground(n, m.len())?;
        }
        Ok(EnumSet { n, members })
    }

    /// The set of all enumerations, `Σ(N)`.
    pub fn all(n: usize) -> Result<Self> {
        Ok(EnumSet {
            n,
            members: Enumeration::all(n)?.into_iter().collect(),
        })
    }

    pub fn singleton(pi: Enumeration) -> Self {
        EnumSet {
            n: pi.len(),
            members: BTreeSet::from([pi]),
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

    pub fn contains(&self, pi: &Enumeration) -> bool {
        self.members.contains(pi)
    }

    pub fn insert(&mut self, pi: Enumeration) -> Result<bool> {
        same_ground(self.n, pi.len())?;
        Ok(self.members.insert(pi))
    }

    pub fn remove(&mut self, pi: &Enumeration) -> bool {
        self.members.remove(pi)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Enumeration> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &EnumSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &EnumSet) -> Result<EnumSet> {
        same_ground(self.n, other.n)?;
        Ok(EnumSet {
            n: self.n,
            members: self.members.union(&other.members).cloned().collect(),
        })
    }

    /// Complement within `Σ(N)`.
    pub fn complement(&self) -> Result<EnumSet> {
        let all = Enumeration::all(self.n)?;
        Ok(EnumSet {
            n: self.n,
            members: all.into_iter().filter(|p| !self.contains(p)).collect(),
        })
    }
}

/// An unordered pair `{u, v}` of distinct ground elements; the label of an
/// edge of the permutohedral graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelPair {
    lo: usize,
    hi: usize,
}

impl LabelPair {
    pub fn new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(invalid("a label pair needs two distinct elements"));
        }
        Ok(LabelPair {
            lo: u.min(v),
            hi: u.max(v),
        })
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn display(self, ground: &GroundSet) -> String {
        format!("{{{},{}}}", ground.label(self.lo), ground.label(self.hi))
    }
}

fn check_pair(pi: &Enumeration, rho: &Enumeration) -> Result<()> {
    same_ground(pi.len(), rho.len())
}

/// 1-based position of each ground element in `pi`.
pub fn rank_vector(pi: &Enumeration) -> Vec<usize> {
    pi.positions().into_iter().map(|p| p + 1).collect()
}

/// The label `{π(i), π(i+1)}` when `rho` is `pi` with positions `i, i+1` swapped.
pub fn adjacency_label(pi: &Enumeration, rho: &Enumeration) -> Result<Option<LabelPair>> {
    check_pair(pi, rho)?;
    let diff: Vec<usize> = (0..pi.len()).filter(|&i| pi.at(i) != rho.at(i)).collect();
    if diff.len() == 2 && diff[1] == diff[0] + 1 {
        let i = diff[0];
        if pi.at(i) == rho.at(i + 1) && pi.at(i + 1) == rho.at(i) {
            return Ok(Some(LabelPair::new(pi.at(i), pi.at(i + 1))?));
        }
    }
    Ok(None)
}

/// `Inv[π, ρ]`: pairs whose relative order differs between the two.
pub fn inversions_between(pi: &Enumeration, rho: &Enumeration) -> Result<BTreeSet<LabelPair>> {
    check_pair(pi, rho)?;
    let (p, r) = (pi.positions(), rho.positions());
    let n = pi.len();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if (p[u] < p[v]) != (r[u] < r[v]) {
                out.insert(LabelPair { lo: u, hi: v });
            }
        }
    }
    Ok(out)
}

fn inversion_count(p: &[usize], r: &[usize]) -> usize {
    let n = p.len();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if (p[u] < p[v]) != (r[u] < r[v]) {
                k += 1;
            }
        }
    }
    k
}

/// The graph neighbours of `pi`, one per adjacent transposition.
pub fn neighbours(pi: &Enumeration) -> impl Iterator<Item = Enumeration> + '_ {
    (0..pi.len().saturating_sub(1)).map(|i| pi.swapped(i))
}

/// Shortest-path length in the permutohedral graph by breadth-first search.
pub fn bfs_distance(pi: &Enumeration, rho: &Enumeration) -> Result<usize> {
    check_pair(pi, rho)?;
    guard("breadth-first search", pi.len(), MAX_ENUM_GROUND)?;
    let mut dist: HashMap<Enumeration, usize> = HashMap::new();
    dist.insert(pi.clone(), 0);
    let mut queue = VecDeque::from([pi.clone()]);
    while let Some(cur) = queue.pop_front() {
        let d = dist[&cur];
        if cur == *rho {
            return Ok(d);
        }
        for next in neighbours(&cur) {
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Err(Error::Inconsistent(
        "permutohedral graph is disconnected".into(),
    ))
}

/// Whether `sigma` lies on a geodesic from `pi` to `rho`.
pub fn is_between(pi: &Enumeration, sigma: &Enumeration, rho: &Enumeration) -> Result<bool> {
    check_pair(pi, sigma)?;
    check_pair(sigma, rho)?;
    let (p, s, r) = (pi.positions(), sigma.positions(), rho.positions());
    Ok(between_positions(&p, &s, &r))
}

fn between_positions(p: &[usize], s: &[usize], r: &[usize]) -> bool {
    let n = p.len();
    for u in 0..n {
        for v in u + 1..n {
            // A pair agreeing in π and ρ must agree in σ as well.
            let pu = p[u] < p[v];
            if pu == (r[u] < r[v]) && pu != (s[u] < s[v]) {
                return false;
            }
        }
    }
    true
}

/// Every enumeration between two members stays in the set.
pub fn is_geodetically_convex(s: &EnumSet) -> Result<bool> {
    if s.len() <= 1 {
        return Ok(true);
    }
    let all = Enumeration::all(s.ground_size())?;
    let all_pos: Vec<Vec<usize>> = all.iter().map(Enumeration::positions).collect();
    let inside: Vec<bool> = all.iter().map(|p| s.contains(p)).collect();
    let members: Vec<Vec<usize>> = s.iter().map(Enumeration::positions).collect();
    for (i, p) in members.iter().enumerate() {
        for r in &members[i + 1..] {
            for (k, sp) in all_pos.iter().enumerate() {
                if !inside[k] && between_positions(p, sp, r) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `Inv(S)`: labels of edges with both endpoints in `S`.
pub fn inversions_in_set(s: &EnumSet) -> Result<BTreeSet<LabelPair>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut out = BTreeSet::new();
    for pi in s.iter() {
        for i in 0..pi.len().saturating_sub(1) {
            if s.contains(&pi.swapped(i)) {
                out.insert(LabelPair::new(pi.at(i), pi.at(i + 1))?);
            }
        }
    }
    Ok(out)
}

/// `Cov(S)`: ordered pairs `(u, v)` labelling a boundary edge, `u` first on the
/// inside endpoint.
pub fn covering_of_set(s: &EnumSet) -> Result<Relation> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut rel = Relation::empty(s.ground_size());
    for pi in s.iter() {
        for i in 0..pi.len().saturating_sub(1) {
            if !s.contains(&pi.swapped(i)) {
                rel.insert(pi.at(i), pi.at(i + 1));
            }
        }
    }
    Ok(rel)
}

/// `S_{u≺v}`: enumerations placing `u` strictly before `v`.
pub fn halfspace_set(n: usize, u: usize, v: usize) -> Result<EnumSet> {
    if u == v || u >= n || v >= n {
        return Err(invalid("halfspace needs two distinct ground elements"));
    }
    let members = Enumeration::all(n)?
        .into_iter()
        .filter(|p| p.precedes(u, v));
    EnumSet::from_members(n, members)
}

/// Image of `S` under exchanging the labels `u` and `v` in every enumeration.
pub fn transpose_action(s: &EnumSet, p: LabelPair) -> Result<EnumSet> {
    let (u, v) = (p.lo(), p.hi());
    if v >= s.ground_size() {
        return Err(invalid("label pair outside the ground set"));
    }
    let mapped = s.iter().map(|pi| Enumeration {
        order: pi
            .order
            .iter()
            .map(|&e| match e as usize {
                x if x == u => v as u8,
                x if x == v => u as u8,
                _ => e,
            })
            .collect(),
    });
    EnumSet::from_members(s.ground_size(), mapped)
}

/// `S_{π:ρ}`: enumerations strictly closer to `pi` than to its neighbour `rho`.
pub fn closer_set(pi: &Enumeration, rho: &Enumeration) -> Result<EnumSet> {
    if adjacency_label(pi, rho)?.is_none() {
        return Err(Error::NotAdjacent);
    }
    let (p, r) = (pi.positions(), rho.positions());
    let members = Enumeration::all(pi.len())?.into_iter().filter(|s| {
        let sp = s.positions();
        inversion_count(&sp, &p) < inversion_count(&sp, &r)
    });
    EnumSet::from_members(pi.len(), members)
}

/// Largest graph distance between two members of a non-empty set.
pub fn diameter(s: &EnumSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let pos: Vec<Vec<usize>> = s.iter().map(Enumeration::positions).collect();
    let mut best = 0;
    for (i, p) in pos.iter().enumerate() {
        for r in &pos[i + 1..] {
            best = best.max(inversion_count(p, r));
        }
    }
    Ok(best)
}

/// All edges of the permutohedral graph as ordered pairs `(π, ρ)` with `π < ρ`.
pub fn graph_edges(n: usize) -> Result<Vec<(Enumeration, Enumeration, LabelPair)>> {
    let mut out = Vec::new();
    for pi in Enumeration::all(n)? {
        for i in 0..n.saturating_sub(1) {
            let rho = pi.swapped(i);
            if pi < rho {
                let label = LabelPair::new(pi.at(i), pi.at(i + 1))?;
                out.push((pi.clone(), rho, label));
            }
        }
    }
    Ok(out)
}

/// DOT rendering of a subgraph of the permutohedral graph on all `n!` nodes.
pub fn to_dot<'a, I>(ground: &GroundSet, edges: I) -> Result<String>
where
    I: IntoIterator<Item = &'a (Enumeration, Enumeration)>,
{
    let mut out = String::from("graph permutohedron {\n");
    for pi in Enumeration::all(ground.len())? {
        out.push_str(&format!("  \"{}\";\n", pi.display(ground)));
    }
    for (pi, rho) in edges {
        let label = adjacency_label(pi, rho)?
            .ok_or_else(|| invalid("subgraph edge is not an adjacent transposition"))?;
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
            pi.display(ground),
            rho.display(ground),
            label.display(ground)
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
