//! Small worked examples with known answers, and a replay that recomputes them.

use crate::cones::RationalVector;
use crate::error::Result;
use crate::faces::{
    extreme_rays, flats_equivalence_classes, is_extreme, is_polymatroid,
    partition_equivalence_classes, submodular_reflect,
};
use crate::games::{
    core_vertices, delta, marginal_fibers, marginal_vector, tightness_class, ElementaryTriplet,
    Game,
};
use crate::ground::{GroundSet, Subset};
use crate::permutograph::{bfs_distance, diameter, inversions_in_set, Enumeration};
use crate::rational::{int, Rational};
use crate::relations::{hasse, incomparable_pairs, linear_extensions, poset_dimension, Relation};
use crate::setsystems::{chains_union, count_linear_extensions, SetSystem};

/// One recomputed value next to the value it should have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn show_vector(x: &RationalVector) -> String {
    let parts: Vec<String> = x.0.iter().map(Rational::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// `2δ_N + Σ_{|S|=2} δ_S` over `{a,b,c}` (indicator sum, values by cardinality 0,0,1,2).
pub fn pair_sum_game() -> Game {
    Game::from_ints(3, &[0, 0, 0, 1, 0, 1, 1, 2]).expect("fixed game")
}

/// `2δ_N + δ_ab + δ_ac`, whose core has four vertices.
pub fn four_vertex_game() -> Game {
    Game::from_ints(3, &[0, 0, 0, 1, 0, 1, 0, 2]).expect("fixed game")
}

/// `3δ_N + 2δ_ac + 2δ_bc + δ_a − δ_b`: not supermodular.
pub fn non_supermodular_game() -> Game {
    Game::from_ints(3, &[0, 1, -1, 0, 0, 2, 2, 3]).expect("fixed game")
}

/// Poset on `{a..f}` with `a<e, a<f, b<d, b<f, c<d, c<e`; the smallest of dimension 3.
pub fn crown_poset() -> Relation {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    Relation::reflexive_from(6, [(a, e), (a, f), (b, d), (b, f), (c, d), (c, e)])
        .expect("fixed poset")
}

/// An extreme polymatroid `h` on `{a..e}` sharing its lattice of flats with
/// [`twin_polymatroid_prime`].
pub fn twin_polymatroid() -> Game {
    let g = GroundSet::letters(5).expect("five letters");
    let special3: Vec<Subset> = ["abd", "abe", "ace", "ade"]
        .iter()
        .map(|s| subset(&g, s))
        .collect();
    let (a, ab, bc) = (subset(&g, "a"), subset(&g, "ab"), subset(&g, "bc"));
    Game::from_fn(5, |s| {
        int(match s.len() {
            0 => 0,
            1 if s == a => 2,
            1 => 4,
            2 if s == ab => 5,
            2 if s != bc => 6,
            3 if special3.contains(&s) => 7,
            _ => 8,
        })
    })
    .expect("fixed game")
}

/// `h` with the value on `{a}` raised to 3.
pub fn twin_polymatroid_prime() -> Game {
    let mut v = twin_polymatroid().values().to_vec();
    v[1] = int(3);
    Game::new(5, v).expect("fixed game")
}

fn subset(g: &GroundSet, s: &str) -> Subset {
    let labels: Vec<String> = s.chars().map(String::from).collect();
    g.subset_of(&labels).expect("known labels")
}

fn intersection_closed(d: &SetSystem) -> bool {
    d.iter()
        .all(|s| d.iter().all(|t| d.contains(s.intersection(t))))
}

/// Recomputes every worked example; callers decide how to report failures.
pub fn replay() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let g3 = GroundSet::letters(3)?;

    let pairs = pair_sum_game();
    let cba = Enumeration::parse(&g3, "|c|b|a|")?;
    let cab = Enumeration::parse(&g3, "|c|a|b|")?;
    out.push(Check::new(
        "marginal vector of |c|b|a|",
        "[1,1,0]",
        show_vector(&marginal_vector(&pairs, &cba)?),
    ));
    out.push(Check::new(
        "marginal vector of |c|a|b|",
        "[1,1,0]",
        show_vector(&marginal_vector(&pairs, &cab)?),
    ));
    out.push(Check::new(
        "core vertices of 2δ_N+δ_ab+δ_ac",
        4,
        core_vertices(&four_vertex_game())?.len(),
    ));

    let bad = non_supermodular_game();
    let abc = ElementaryTriplet::new(0, 1, subset(&g3, "c"))?;
    out.push(Check::new(
        "Δγ(a,b|c) of the non-supermodular game",
        -1,
        delta(&bad, &abc),
    ));
    let y = RationalVector::from_ints(&[1, 1, 1]);
    let tight = tightness_class(&bad, &y)?;
    let expected = SetSystem::from_members(
        3,
        ["", "a", "ac", "bc", "abc"].iter().map(|s| subset(&g3, s)),
    )?;
    out.push(Check::new(
        "tightness class at [1,1,1]",
        expected.display(&g3),
        tight.display(&g3),
    ));
    out.push(Check::new(
        "tightness class closed under ∩",
        false,
        intersection_closed(&tight),
    ));
    let fibers = marginal_fibers(&bad)?;
    let fiber = fibers
        .get(&y)
        .cloned()
        .unwrap_or_else(|| crate::EnumSet::empty(3));
    let fiber_text: Vec<String> = fiber.iter().map(|p| p.display(&g3)).collect();
    out.push(Check::new(
        "enumerations with marginal vector [1,1,1]",
        "|a|c|b|",
        fiber_text.join(" "),
    ));
    let bc = subset(&g3, "bc");
    out.push(Check::new(
        "bc tight but off the fiber's chains",
        true,
        tight.contains(bc) && !chains_union(&fiber).contains(bc),
    ));

    let g6 = GroundSet::letters(6)?;
    let t = crown_poset();
    let s = linear_extensions(&t)?;
    out.push(Check::new("|L(T)| for the crown poset", 48, s.len()));
    out.push(Check::new(
        "|L(T)| by down-set counting",
        48,
        count_linear_extensions(&t)?,
    ));
    out.push(Check::new("|Inv(L(T))|", 9, inversions_in_set(&s)?.len()));
    out.push(Check::new(
        "incomparable pairs of T",
        9,
        incomparable_pairs(&t).len(),
    ));
    out.push(Check::new("diam(L(T))", 8, diameter(&s)?));
    let p = Enumeration::parse(&g6, "|a|c|e|b|f|d|")?;
    let q = Enumeration::parse(&g6, "|b|c|d|a|f|e|")?;
    out.push(Check::new(
        "dist(|a|c|e|b|f|d|, |b|c|d|a|f|e|)",
        8,
        bfs_distance(&p, &q)?,
    ));
    out.push(Check::new("poset dimension of T", 3, poset_dimension(&t)?));
    out.push(Check::new(
        "Hasse arrows of T",
        6,
        hasse(&t)?.off_diagonal_pairs().len(),
    ));

    let (h, h2) = (twin_polymatroid(), twin_polymatroid_prime());
    out.push(Check::new("h differs from h′", true, h != h2));
    out.push(Check::new("h is a polymatroid", true, is_polymatroid(&h)));
    out.push(Check::new("h′ is a polymatroid", true, is_polymatroid(&h2)));
    out.push(Check::new(
        "h spans an extreme ray",
        true,
        is_extreme(&submodular_reflect(&h))?,
    ));
    out.push(Check::new(
        "h′ spans an extreme ray",
        true,
        is_extreme(&submodular_reflect(&h2))?,
    ));
    out.push(Check::new(
        "h and h′ have the same flats equivalence",
        true,
        flats_equivalence_classes(&h)?
            .into_values()
            .collect::<Vec<_>>()
            == flats_equivalence_classes(&h2)?
                .into_values()
                .collect::<Vec<_>>(),
    ));

    let levels = partition_equivalence_classes(3, &[Subset::full(3)])?;
    out.push(Check::new(
        "cardinality classes over {a,b,c}",
        4,
        levels.len(),
    ));
    let constant_on_levels = extreme_rays(3, false)?
        .iter()
        .filter(|r| {
            levels
                .iter()
                .all(|class| class.iter().all(|s| r.value(*s) == r.value(class[0])))
        })
        .count();
    out.push(Check::new(
        "rays at n=3 constant on cardinality classes",
        2,
        constant_on_levels,
    ));
    Ok(out)
}
