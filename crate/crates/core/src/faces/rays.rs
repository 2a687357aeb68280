//! Extreme rays of the standardized supermodular cone by the double
//! description method, in exact integer arithmetic.
//!
//! Coordinates are the subsets with at least two elements (the empty set and
//! singletons are pinned to zero); the inequalities are the elementary
//! differences `Δγ(a,b|C) ≥ 0`, processed in canonical triplet order.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{guard, invalid, Error, Result};
use crate::games::{all_triplets, Game};
use crate::ground::Subset;
use crate::linalg;
use crate::rational::{int, Rational};

/// Largest `n` accepted without the long-run override.
pub const MAX_RAYS_DEFAULT: usize = 4;
/// Largest `n` accepted at all.
pub const MAX_RAYS_FORCED: usize = 5;

/// How two rays are tested for adjacency in the current cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjacency {
    /// Rank of the jointly tight inequalities equals `d - 2`.
    Rank,
    /// No third ray is tight on every inequality the pair shares.
    Combinatorial,
}

/// Extreme rays of `{γ : γ(∅) = γ({i}) = 0, Δγ ≥ 0}` as primitive integer games.
pub fn extreme_rays(n: usize, force: bool) -> Result<Vec<Game>> {
    extreme_rays_with(n, force, Adjacency::Rank)
}

pub fn extreme_rays_with(n: usize, force: bool, test: Adjacency) -> Result<Vec<Game>> {
    if n < 2 {
        return Err(invalid("extreme rays need at least two elements"));
    }
    guard(
        "extreme-ray enumeration",
        n,
        if force {
            MAX_RAYS_FORCED
        } else {
            MAX_RAYS_DEFAULT
        },
    )?;
    let coords: Vec<Subset> = Subset::all(n).filter(|s| s.len() >= 2).collect();
    let index = |s: Subset| coords.iter().position(|&c| c == s);
    let rows: Vec<Vec<i64>> = all_triplets(n)
        .iter()
        .map(|t| {
            let mut row = vec![0i64; coords.len()];
            for (s, k) in [(t.abc(), 1), (t.c(), 1), (t.ac(), -1), (t.bc(), -1)] {
                if let Some(i) = index(s) {
                    row[i] += k;
                }
            }
            row
        })
        .collect();
    let rays = double_description(&rows, coords.len(), test)?;
    let mut games: Vec<Game> = rays
        .into_iter()
        .map(|r| {
            let mut values = vec![Rational::zero(); 1 << n];
            for (i, s) in coords.iter().enumerate() {
                values[s.mask() as usize] = int(r[i]);
            }
            Game::new(n, values)
        })
        .collect::<Result<_>>()?;
    games.sort_by(|a, b| a.values().cmp(b.values()));
    Ok(games)
}

struct Ray {
    v: Vec<i64>,
    zeros: u128,
}

fn dot(a: &[i64], r: &[i64]) -> i128 {
    a.iter().zip(r).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn primitive(v: Vec<i128>) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    let g = if g == 0 { 1 } else { g };
    v.into_iter()
        .map(|x| i64::try_from(x / g).map_err(|_| Error::Overflow("double description")))
        .collect()
}

/// Extreme rays of the pointed full-dimensional cone `{x ∈ Q^d : rows·x ≥ 0}`.
pub fn double_description(rows: &[Vec<i64>], d: usize, test: Adjacency) -> Result<Vec<Vec<i64>>> {
    if rows.len() > 128 {
        return Err(invalid("at most 128 inequalities are supported"));
    }
    // Initial simplicial cone from the first d independent rows.
    let mut basis: Vec<usize> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut trial: Vec<&[i64]> = basis.iter().map(|&j| rows[j].as_slice()).collect();
        trial.push(row);
        if linalg::integer_rank(&trial) > basis.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    if basis.len() < d {
        return Err(invalid(
            "inequality system does not describe a pointed cone",
        ));
    }
    let a0: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&j| rows[j].iter().map(|&x| int(x)).collect())
        .collect();
    let inv = linalg::inverse(&a0).ok_or_else(|| Error::Inconsistent("singular basis".into()))?;
    let mut processed: u128 = basis.iter().fold(0, |m, &j| m | 1 << j);
    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for col in 0..d {
        let entries: Vec<Rational> = inv.iter().map(|row| row[col].clone()).collect();
        let lcm = entries
            .iter()
            .fold(num_bigint::BigInt::one(), |l, q| l.lcm(q.denom()));
        let scaled: Vec<i128> = entries
            .iter()
            .map(|q| {
                let v = q.numer() * (&lcm / q.denom());
                i128::try_from(v).map_err(|_| Error::Overflow("double description"))
            })
            .collect::<Result<_>>()?;
        let v = primitive(scaled)?;
        let zeros = basis
            .iter()
            .filter(|&&j| dot(&rows[j], &v) == 0)
            .fold(0u128, |m, &j| m | 1 << j);
        rays.push(Ray { v, zeros });
    }
    for (k, row) in rows.iter().enumerate() {
        if processed >> k & 1 == 1 {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < 0).collect();
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros & rays[q].zeros;
                if (common.count_ones() as usize) + 2 < d {
                    continue;
                }
                let adjacent = match test {
                    Adjacency::Rank => {
                        let tight: Vec<&[i64]> = (0..rows.len())
                            .filter(|&j| common >> j & 1 == 1)
                            .map(|j| rows[j].as_slice())
                            .collect();
                        linalg::integer_rank(&tight) == d - 2
                    }
                    Adjacency::Combinatorial => !rays
                        .iter()
                        .enumerate()
                        .any(|(i, r)| i != p && i != q && r.zeros & common == common),
                };
                if !adjacent {
                    continue;
                }
                let combo: Vec<i128> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(&x, &y)| vals[p] * y as i128 - vals[q] * x as i128)
                    .collect();
                let v = primitive(combo)?;
                next.push(Ray {
                    v,
                    zeros: common | 1 << k,
                });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            match vals[i].signum() {
                1 => next.push(r),
                0 => next.push(Ray {
                    zeros: r.zeros | 1 << k,
                    v: r.v,
                }),
                _ => {}
            }
        }
        rays = next;
        processed |= 1 << k;
    }
    debug_assert!(rays
        .iter()
        .all(|r| rows.iter().all(|row| !dot(row, &r.v).is_negative())));
    Ok(rays.into_iter().map(|r| r.v).collect())
}
