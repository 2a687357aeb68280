//! Set functions over the ground set ("games"), elementary imsets and the
//! supermodular machinery: marginal vectors, core vertices, tightness classes
//! and conditional-independence structures.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cones::RationalVector;
use crate::error::{invalid, same_ground, Error, Result};
use crate::ground::{GroundSet, Subset, MAX_GROUND};
use crate::permutograph::{EnumSet, Enumeration};
use crate::rational::{int, Rational};
use crate::relations::{galois_enums_to_relation, transitive_closure, Relation};
use crate::setsystems::{is_topology, SetSystem};

/// An exact set function `γ : 2^N → Q` with `γ(∅) = 0`, indexed by subset mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Game {
    n: usize,
    values: Vec<Rational>,
}

impl Game {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(invalid(format!(
                "games need 1..={MAX_GROUND} players, got {n}"
            )));
        }
        if values.len() != 1 << n {
            return Err(invalid(format!(
                "a game on {n} elements needs {} values, got {}",
                1 << n,
                values.len()
            )));
        }
        if !values[0].is_zero() {
            return Err(invalid("the value of the empty set must be 0"));
        }
        Ok(Game { n, values })
    }

    pub fn zero(n: usize) -> Self {
        Game {
            n,
            values: vec![Rational::zero(); 1 << n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Subset) -> Rational) -> Result<Self> {
        Game::new(n, Subset::all(n).map(&mut f).collect())
    }

    pub fn from_ints(n: usize, values: &[i64]) -> Result<Self> {
        Game::new(n, values.iter().map(|&v| int(v)).collect())
    }

    /// The basis game `δ_A`, one at `A` and zero elsewhere (`A ≠ ∅`).
    pub fn basis(n: usize, a: Subset) -> Result<Self> {
        if a.is_empty() || !a.fits(n) {
            return Err(invalid(
                "basis games need a non-empty subset of the ground set",
            ));
        }
        let mut g = Game::zero(n);
        g.values[a.mask() as usize] = int(1);
        Ok(g)
    }

    /// The modular game `S ↦ Σ_{i∈S} w_i`.
    pub fn modular(weights: &[Rational]) -> Result<Self> {
        let n = weights.len();
        Game::from_fn(n, |s| s.iter().map(|i| &weights[i]).sum())
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn value(&self, s: Subset) -> &Rational {
        &self.values[s.mask() as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn add(&self, other: &Game) -> Result<Game> {
        same_ground(self.n, other.n)?;
        Ok(Game {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &Rational) -> Game {
        Game {
            n: self.n,
            values: self.values.iter().map(|a| a * k).collect(),
        }
    }

    /// `α·self + β·other`.
    pub fn combine(&self, alpha: &Rational, other: &Game, beta: &Rational) -> Result<Game> {
        self.scale(alpha).add(&other.scale(beta))
    }

    /// Modular games are exactly those with every elementary difference zero.
    pub fn is_modular(&self) -> bool {
        all_triplets(self.n)
            .iter()
            .all(|t| delta(self, t).is_zero())
    }

    pub fn display(&self, ground: &GroundSet) -> String {
        let parts: Vec<String> = Subset::all(self.n)
            .skip(1)
            .map(|s| format!("{}={}", ground.show(s), self.value(s)))
            .collect();
        parts.join(" ")
    }
}

/// An elementary triplet `(a, b | C)` with `a < b` and `C ∩ {a, b} = ∅`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryTriplet {
    a: usize,
    b: usize,
    c: Subset,
}

impl ElementaryTriplet {
    pub fn new(a: usize, b: usize, c: Subset) -> Result<Self> {
        if a == b {
            return Err(invalid("elementary triplets need a ≠ b"));
        }
        if c.contains(a) || c.contains(b) {
            return Err(invalid("conditioning set must avoid a and b"));
        }
        Ok(ElementaryTriplet {
            a: a.min(b),
            b: a.max(b),
            c,
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> Subset {
        self.c
    }

    pub fn ac(&self) -> Subset {
        self.c.with(self.a)
    }

    pub fn bc(&self) -> Subset {
        self.c.with(self.b)
    }

    pub fn abc(&self) -> Subset {
        self.c.with(self.a).with(self.b)
    }

    pub fn display(&self, ground: &GroundSet) -> String {
        let c = if self.c.is_empty() {
            "∅".to_string()
        } else {
            ground.show(self.c)
        };
        format!("({},{}|{})", ground.label(self.a), ground.label(self.b), c)
    }
}

/// The elementary imset `u_(a,b|C) = δ_abC + δ_C − δ_aC − δ_bC`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryImset {
    pub coefficients: BTreeMap<Subset, i32>,
}

pub fn imset(t: &ElementaryTriplet) -> ElementaryImset {
    let coefficients = BTreeMap::from([(t.abc(), 1), (t.c(), 1), (t.ac(), -1), (t.bc(), -1)]);
    ElementaryImset { coefficients }
}

/// All `C(n,2)·2^(n-2)` elementary triplets ordered by `(a, b, C)`.
pub fn all_triplets(n: usize) -> Vec<ElementaryTriplet> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let rest = Subset::full(n).without(a).without(b);
            for c in rest.subsets() {
                out.push(ElementaryTriplet { a, b, c });
            }
        }
    }
    out.sort();
    out
}

/// `Δγ(a,b|C) = ⟨γ, u_(a,b|C)⟩`.
pub fn delta(g: &Game, t: &ElementaryTriplet) -> Rational {
    g.value(t.abc()) + g.value(t.c()) - g.value(t.ac()) - g.value(t.bc())
}

pub fn is_supermodular(g: &Game) -> bool {
    all_triplets(g.n).iter().all(|t| !delta(g, t).is_negative())
}

/// `γ(D ∪ E) + γ(D ∩ E) ≥ γ(D) + γ(E)` for all `D, E`.
pub fn is_supermodular_by_pairs(g: &Game) -> bool {
    Subset::all(g.n).all(|d| {
        Subset::all(g.n)
            .all(|e| g.value(d.union(e)) + g.value(d.intersection(e)) >= g.value(d) + g.value(e))
    })
}

pub(crate) fn require_supermodular(g: &Game) -> Result<()> {
    if is_supermodular(g) {
        Ok(())
    } else {
        Err(Error::NotSupermodular)
    }
}

/// `u_B(S) = 1` if `B ⊆ S`, else `0`.
pub fn unanimity_game(n: usize, b: Subset) -> Result<Game> {
    if b.is_empty() || !b.fits(n) {
        return Err(invalid("unanimity games need a non-empty subset"));
    }
    Game::from_fn(n, |s| int(b.is_subset_of(s) as i64))
}

/// Consecutive differences of `γ` along the prefix chain of `pi`.
pub fn marginal_vector(g: &Game, pi: &Enumeration) -> Result<RationalVector> {
    same_ground(g.n, pi.len())?;
    let mut out = RationalVector::zeros(g.n);
    let mut prefix = Subset::EMPTY;
    for e in pi.order() {
        let next = prefix.with(e);
        out.0[e] = g.value(next) - g.value(prefix);
        prefix = next;
    }
    Ok(out)
}

/// Vertices of the core, each with the enumerations mapped onto it.
pub fn core_vertices(g: &Game) -> Result<BTreeMap<RationalVector, EnumSet>> {
    require_supermodular(g)?;
    marginal_fibers(g)
}

/// Groups all enumerations by marginal vector without checking supermodularity.
pub fn marginal_fibers(g: &Game) -> Result<BTreeMap<RationalVector, EnumSet>> {
    let mut out: BTreeMap<RationalVector, EnumSet> = BTreeMap::new();
    for pi in Enumeration::all(g.n)? {
        let m = marginal_vector(g, &pi)?;
        out.entry(m)
            .or_insert_with(|| EnumSet::empty(g.n))
            .insert(pi)?;
    }
    Ok(out)
}

/// Subsets on which `y` meets `γ` with equality.
pub fn tightness_class(g: &Game, y: &RationalVector) -> Result<SetSystem> {
    same_ground(g.n, y.len())?;
    SetSystem::from_members(
        g.n,
        Subset::all(g.n).filter(|&s| y.sum_over(s) == *g.value(s)),
    )
}

/// `Σz = γ(N)` and `Σ_{ℓ∈S} z_ℓ ≥ γ(S)` for every `S`.
pub fn core_contains(g: &Game, z: &RationalVector) -> Result<bool> {
    same_ground(g.n, z.len())?;
    let full = Subset::full(g.n);
    Ok(
        z.sum_over(full) == *g.value(full)
            && Subset::all(g.n).all(|s| z.sum_over(s) >= *g.value(s)),
    )
}

/// Whether `γ(S) = min_y Σ_{ℓ∈S} y_ℓ` over the core vertices, for every `S`.
pub fn exactness_check(g: &Game) -> Result<bool> {
    let vertices = core_vertices(g)?;
    Ok(Subset::all(g.n).all(|s| {
        vertices
            .keys()
            .map(|y| y.sum_over(s))
            .min()
            .is_some_and(|m| m == *g.value(s))
    }))
}

/// `InStr(γ)`: triplets with zero elementary difference.
pub fn ci_structure(g: &Game) -> Result<BTreeSet<ElementaryTriplet>> {
    require_supermodular(g)?;
    Ok(all_triplets(g.n)
        .into_iter()
        .filter(|t| delta(g, t).is_zero())
        .collect())
}

/// Whether some core vertex has both `aC` and `bC` tight.
pub fn ci_via_tightness(g: &Game, t: &ElementaryTriplet) -> Result<bool> {
    let vertices = core_vertices(g)?;
    Ok(vertices
        .keys()
        .any(|y| y.sum_over(t.ac()) == *g.value(t.ac()) && y.sum_over(t.bc()) == *g.value(t.bc())))
}

fn vertex_fiber(
    g: &Game,
    y: &RationalVector,
) -> Result<(BTreeMap<RationalVector, EnumSet>, EnumSet)> {
    same_ground(g.n, y.len())?;
    let vertices = core_vertices(g)?;
    let fiber = vertices.get(y).cloned().ok_or(Error::NotVertex)?;
    Ok((vertices, fiber))
}

/// Poset of the normal cone at vertex `y`, as the Galois relation of its fiber.
pub fn vertex_poset_galois(g: &Game, y: &RationalVector) -> Result<Relation> {
    let (_, fiber) = vertex_fiber(g, y)?;
    Ok(galois_enums_to_relation(&fiber))
}

/// The same poset from edge directions: `tr(R) ∪ Δ` with `(u, v) ∈ R` when
/// some vertex `z` has `z − y = k(χ_u − χ_v)`, `k > 0`.
pub fn vertex_poset_differences(g: &Game, y: &RationalVector) -> Result<Relation> {
    let (vertices, _) = vertex_fiber(g, y)?;
    let mut r = Relation::diagonal(g.n);
    for z in vertices.keys() {
        let d = z.sub(y);
        let pos: Vec<usize> = (0..g.n).filter(|&i| d.0[i].is_positive()).collect();
        let neg: Vec<usize> = (0..g.n).filter(|&i| d.0[i].is_negative()).collect();
        if pos.len() == 1 && neg.len() == 1 && d.0[pos[0]] == -d.0[neg[0]].clone() {
            r.insert(pos[0], neg[0]);
        }
    }
    Ok(transitive_closure(&r))
}

/// Both constructions, failing if they disagree.
pub fn vertex_poset(g: &Game, y: &RationalVector) -> Result<Relation> {
    let a = vertex_poset_galois(g, y)?;
    let b = vertex_poset_differences(g, y)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "fiber poset {:?} differs from edge-direction poset {:?}",
            a.off_diagonal_pairs(),
            b.off_diagonal_pairs()
        )));
    }
    Ok(a)
}

/// Parameters for [`random_supermodular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomGameParams {
    pub n: usize,
    /// Number of unanimity terms `u_B`, `|B| ≥ 2`.
    pub terms: usize,
    /// Coefficients are drawn from `1..=max_coeff`; modular weights from
    /// `-max_coeff..=max_coeff`.
    pub max_coeff: u32,
}

impl RandomGameParams {
    pub fn new(n: usize, terms: usize, max_coeff: u32) -> Self {
        RandomGameParams {
            n,
            terms,
            max_coeff,
        }
    }
}

/// A seeded random supermodular game: a non-negative integer combination of
/// unanimity games on subsets with at least two elements plus a modular game.
///
/// The generator is ChaCha8 seeded from `seed` alone.
pub fn random_supermodular(seed: u64, params: RandomGameParams) -> Result<Game> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_supermodular_with(&mut rng, params)
}

pub fn random_supermodular_with<R: Rng>(rng: &mut R, params: RandomGameParams) -> Result<Game> {
    let n = params.n;
    if n == 0 || n > MAX_GROUND {
        return Err(invalid(format!(
            "random games need 1..={MAX_GROUND} players"
        )));
    }
    let max = params.max_coeff.max(1) as i64;
    let weights: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-max..=max))).collect();
    let mut g = Game::modular(&weights)?;
    let big: Vec<Subset> = Subset::all(n).filter(|s| s.len() >= 2).collect();
    if !big.is_empty() {
        for _ in 0..params.terms {
            let b = big[rng.gen_range(0..big.len())];
            let k = int(rng.gen_range(1..=max));
            g = g.add(&unanimity_game(n, b)?.scale(&k))?;
        }
    }
    Ok(g)
}

/// Tightness classes at all core vertices, and whether each is a topology.
pub fn tightness_classes(g: &Game) -> Result<Vec<(RationalVector, SetSystem, bool)>> {
    let vertices = core_vertices(g)?;
    vertices
        .keys()
        .map(|y| {
            let t = tightness_class(g, y)?;
            let top = is_topology(&t);
            Ok((y.clone(), t, top))
        })
        .collect()
}
