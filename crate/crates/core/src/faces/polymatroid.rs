use std::collections::BTreeMap;

use num_traits::Signed;

use crate::error::{invalid, Error, Result};
use crate::games::{all_triplets, delta, Game};
use crate::ground::Subset;

/// `b(S) = γ(N) − γ(N ∖ S)`; swaps supermodular and submodular games.
pub fn submodular_reflect(g: &Game) -> Game {
    let full = Subset::full(g.ground_size());
    Game::from_fn(g.ground_size(), |s| {
        g.value(full) - g.value(full.difference(s))
    })
    .expect("reflection keeps b(∅) = 0")
}

/// `h(∅) = 0`, non-decreasing and submodular.
pub fn is_polymatroid(h: &Game) -> bool {
    let n = h.ground_size();
    let monotone = Subset::all(n).all(|s| (0..n).all(|t| h.value(s) <= h.value(s.with(t))));
    monotone && all_triplets(n).iter().all(|t| !delta(h, t).is_positive())
}

/// `cl_h(S) = {t : h(S ∪ t) = h(S)}`.
pub fn flats_closure(h: &Game, s: Subset) -> Result<Subset> {
    if !is_polymatroid(h) {
        return Err(Error::NotPolymatroid);
    }
    if !s.fits(h.ground_size()) {
        return Err(invalid("subset outside the ground set"));
    }
    Ok((0..h.ground_size())
        .filter(|&t| h.value(s.with(t)) == h.value(s))
        .fold(Subset::EMPTY, |c, t| c.with(t)))
}

/// Classes of `S ∼ T ⟺ cl_h(S) = cl_h(T)`, keyed by the common closure.
pub fn flats_equivalence_classes(h: &Game) -> Result<BTreeMap<Subset, Vec<Subset>>> {
    let mut out: BTreeMap<Subset, Vec<Subset>> = BTreeMap::new();
    for s in Subset::all(h.ground_size()) {
        out.entry(flats_closure(h, s)?).or_default().push(s);
    }
    Ok(out)
}

fn check_blocks(blocks: &[Subset]) -> Result<()> {
    let mut seen = Subset::EMPTY;
    for b in blocks {
        if b.is_empty() {
            return Err(invalid("partition blocks must be non-empty"));
        }
        if !b.intersection(seen).is_empty() {
            return Err(invalid("partition blocks overlap"));
        }
        seen = seen.union(*b);
    }
    Ok(())
}

/// `S ∼ T` iff `|S ∩ A_i| = |T ∩ A_i|` for every block `A_i`.
pub fn partition_equivalence(blocks: &[Subset], s: Subset, t: Subset) -> Result<bool> {
    check_blocks(blocks)?;
    Ok(blocks
        .iter()
        .all(|a| s.intersection(*a).len() == t.intersection(*a).len()))
}

/// Equivalence classes of the block-count equivalence on all subsets.
pub fn partition_equivalence_classes(n: usize, blocks: &[Subset]) -> Result<Vec<Vec<Subset>>> {
    check_blocks(blocks)?;
    let mut out: BTreeMap<Vec<usize>, Vec<Subset>> = BTreeMap::new();
    for s in Subset::all(n) {
        let key = blocks.iter().map(|a| s.intersection(*a).len()).collect();
        out.entry(key).or_default().push(s);
    }
    Ok(out.into_values().collect())
}
