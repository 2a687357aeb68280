//! Braid cones `{x : x_u ≤ x_v for (u, v) ∈ T}` represented by canonical
//! preposets, with Weyl chambers as the cones of tosets.

use std::fmt;

use num_traits::Zero;

use crate::error::{same_ground, Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::linalg;
use crate::permutograph::{rank_vector, EnumSet, Enumeration};
use crate::rational::{self, int, Rational};
use crate::relations::{
    classify, galois_enums_to_relation, is_contraction, is_poset_based, preposet_closure, toset_of,
    Relation,
};
use crate::setsystems::downsets_of;

/// A vector in `Q^N`, one exact entry per ground element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zeros(n: usize) -> Self {
        RationalVector(vec![Rational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RationalVector(v.iter().map(|&x| int(x)).collect())
    }

    /// The incidence vector `χ_A`.
    pub fn indicator(n: usize, a: Subset) -> Self {
        RationalVector((0..n).map(|i| int(a.contains(i) as i64)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ_{ℓ ∈ S} x_ℓ`.
    pub fn sum_over(&self, s: Subset) -> Rational {
        s.iter().map(|i| &self.0[i]).sum()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn display(&self, ground: &GroundSet) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{}:{}", ground.label(i), v))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rational::format).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl From<Vec<usize>> for RationalVector {
    fn from(v: Vec<usize>) -> Self {
        RationalVector(v.into_iter().map(|x| int(x as i64)).collect())
    }
}

/// The braid cone of a preposet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidCone {
    preposet: Relation,
}

impl BraidCone {
    pub fn preposet(&self) -> &Relation {
        &self.preposet
    }

    pub fn ground_size(&self) -> usize {
        self.preposet.ground_size()
    }
}

pub fn cone_of(t: &Relation) -> BraidCone {
    BraidCone {
        preposet: preposet_closure(t),
    }
}

pub fn cone_contains(c: &BraidCone, x: &RationalVector) -> Result<bool> {
    same_ground(c.ground_size(), x.len())?;
    Ok(c.preposet
        .pairs()
        .into_iter()
        .all(|(u, v)| x.0[u] <= x.0[v]))
}

/// `χ_N` followed by `-χ_D` for every down-set `D` (in mask order).
pub fn cone_generators(c: &BraidCone) -> Vec<RationalVector> {
    let n = c.ground_size();
    let mut out = vec![RationalVector::indicator(n, Subset::full(n))];
    for d in downsets_of(&c.preposet).iter() {
        out.push(RationalVector::indicator(n, d).scale(&int(-1)));
    }
    out
}

/// Non-negative coefficients expressing `x` over [`cone_generators`], if any.
pub fn generator_combination(c: &BraidCone, x: &RationalVector) -> Result<Option<Vec<Rational>>> {
    same_ground(c.ground_size(), x.len())?;
    linalg_guard(c.ground_size())?;
    let gens: Vec<Vec<Rational>> = cone_generators(c).into_iter().map(|g| g.0).collect();
    Ok(linalg::nonnegative_combination(&gens, &x.0))
}

fn linalg_guard(n: usize) -> Result<()> {
    crate::error::guard("generator feasibility", n, 5)
}

/// `C1 ⊆ C2`, which holds iff the preposet of `C2` is inside that of `C1`.
pub fn cone_subset(c1: &BraidCone, c2: &BraidCone) -> Result<bool> {
    same_ground(c1.ground_size(), c2.ground_size())?;
    Ok(c2.preposet.is_subset(&c1.preposet))
}

/// Whether `cr` is a face of `ct`.
pub fn is_face_of(cr: &BraidCone, ct: &BraidCone) -> Result<bool> {
    same_ground(cr.ground_size(), ct.ground_size())?;
    is_contraction(&ct.preposet, &cr.preposet)
}

pub fn is_full_dimensional(c: &BraidCone) -> bool {
    classify(&c.preposet).antisymmetric
}

/// The Weyl chamber `{x : x_π(1) ≤ … ≤ x_π(n)}`.
pub fn weyl_chamber(pi: &Enumeration) -> BraidCone {
    cone_of(&toset_of(pi))
}

/// Whether the rank vector of `pi` lies in the interior of its chamber.
pub fn is_interior_rank_vector(pi: &Enumeration) -> bool {
    let r = rank_vector(pi);
    (1..pi.len()).all(|i| r[pi.at(i - 1)] < r[pi.at(i)])
}

/// The cone equal to the union of the chambers of `S`, when that union is convex.
pub fn chamber_union_cone(s: &EnumSet) -> Result<Option<BraidCone>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_poset_based(s)? {
        return Ok(None);
    }
    Ok(Some(cone_of(&galois_enums_to_relation(s))))
}
