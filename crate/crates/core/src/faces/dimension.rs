use num_traits::Zero;

use crate::error::{Error, Result};
use crate::games::{ci_structure, imset, Game};
use crate::ground::Subset;
use crate::linalg::integer_rank;

/// Dimension of the face of the supermodular cone generated by `γ`: the
/// nullity of the tight elementary imsets on the `2^n − 1` non-empty coordinates.
pub fn face_dimension(g: &Game) -> Result<usize> {
    let n = g.ground_size();
    let tight = ci_structure(g)?;
    let rows: Vec<Vec<i64>> = tight
        .iter()
        .map(|t| {
            let mut row = vec![0i64; (1 << n) - 1];
            for (s, k) in imset(t).coefficients {
                if !s.is_empty() {
                    row[s.mask() as usize - 1] += k as i64;
                }
            }
            row
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Ok((1 << n) - 1 - integer_rank(&refs))
}

/// Lower standardization: `γ'(S) = γ(S) − Σ_{i∈S} γ({i})`.
pub fn standardize(g: &Game) -> Game {
    let n = g.ground_size();
    Game::from_fn(n, |s| {
        let singles: crate::rational::Rational = s
            .iter()
            .map(|i| g.value(Subset::singleton(i)).clone())
            .sum();
        g.value(s) - singles
    })
    .expect("standardization keeps γ(∅) = 0")
}

/// Whether `γ` spans an extreme ray modulo the modular games.
pub fn is_extreme(g: &Game) -> Result<bool> {
    let d = face_dimension(g)?;
    if g.is_modular() {
        return Err(Error::Modular);
    }
    debug_assert!(!standardize(g).values().iter().all(Zero::is_zero));
    Ok(d == g.ground_size() + 1)
}
