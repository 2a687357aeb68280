use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{guard, Result};
use crate::games::{random_supermodular_with, Game, RandomGameParams};
use crate::rational::int;

use super::{theorem_report, FaceReport};

/// Largest ground set the randomized harness accepts without forcing.
pub const MAX_HARNESS_DEFAULT: usize = 4;

/// How a random pair was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairKind {
    /// Two independent games.
    Independent,
    /// `γB = γA + γX`, so the face of `γA` lies in that of `γB`.
    Sum,
    /// `γA = γB + γX`, the reverse.
    ReverseSum,
    /// `γB` is a positive multiple of `γA` plus a modular game: equal faces.
    Rescaled,
}

fn sparse_game(rng: &mut ChaCha8Rng, n: usize) -> Result<Game> {
    let terms = rng.gen_range(0..=n + 1);
    random_supermodular_with(rng, RandomGameParams::new(n, terms, 3))
}

/// The pair drawn for one trial seed.
pub fn random_pair(seed: u64, n: usize) -> Result<(PairKind, Game, Game)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = match rng.gen_range(0..4) {
        0 => PairKind::Independent,
        1 => PairKind::Sum,
        2 => PairKind::ReverseSum,
        _ => PairKind::Rescaled,
    };
    let a = sparse_game(&mut rng, n)?;
    let x = sparse_game(&mut rng, n)?;
    let pair = match kind {
        PairKind::Independent => (a, x),
        PairKind::Sum => {
            let b = a.add(&x)?;
            (a, b)
        }
        PairKind::ReverseSum => (a.add(&x)?, a),
        PairKind::Rescaled => {
            let k = int(rng.gen_range(2..=4));
            let shift = random_supermodular_with(&mut rng, RandomGameParams::new(n, 0, 3))?;
            let b = a.scale(&k).add(&shift)?;
            (a, b)
        }
    };
    Ok((kind, pair.0, pair.1))
}

/// One harness trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial {
    pub seed: u64,
    pub kind: PairKind,
    pub report: FaceReport,
}

/// Trial seeds derived from the master seed; fixed for a given `(seed, trials)`.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.gen()).collect()
}

/// Runs `trials` random pairs and returns every report in seed order.
pub fn run_harness(n: usize, trials: usize, seed: u64, force: bool) -> Result<Vec<Trial>> {
    let limit = if force {
        MAX_HARNESS_DEFAULT + 1
    } else {
        MAX_HARNESS_DEFAULT
    };
    guard("face-inclusion harness", n, limit)?;
    trial_seeds(seed, trials)
        .into_iter()
        .map(|s| {
            let (kind, a, b) = random_pair(s, n)?;
            Ok(Trial {
                seed: s,
                kind,
                report: theorem_report(&a, &b)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_mixed() {
        let a = run_harness(3, 40, 7, false).unwrap();
        assert_eq!(a, run_harness(3, 40, 7, false).unwrap());
        assert!(a.iter().all(|t| t.report.agreement));
        assert!(a.iter().any(|t| t.report.ii) && a.iter().any(|t| !t.report.ii));
        assert!(run_harness(6, 1, 0, true).is_err());
    }
}
