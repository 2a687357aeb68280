//! Ground sets and subsets encoded as bitmasks over the canonical label order.

use std::fmt;

use crate::error::{invalid, Result};

/// Largest ground set any structure in this crate accepts.
pub const MAX_GROUND: usize = 16;

/// A finite non-empty set of labelled elements.
///
/// Elements are addressed by index `0..n`; the label order is only used to
/// read and write files.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(invalid("ground set must be non-empty"));
        }
        if labels.len() > MAX_GROUND {
            return Err(invalid(format!(
                "ground set has {} elements, at most {MAX_GROUND} supported",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(invalid("labels must be non-empty"));
            }
            if labels[..i].contains(l) {
                return Err(invalid(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet { labels })
    }

    /// The ground set `{a, b, c, ...}` with `n` single-letter labels.
    pub fn letters(n: usize) -> Result<Self> {
        if n == 0 || n > 26 {
            return Err(invalid(format!("cannot build {n} letter labels")));
        }
        GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| invalid(format!("unknown label {label:?}")))
    }

    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut mask = 0u32;
        for l in labels {
            let bit = 1u32 << self.index_of(l.as_ref())?;
            if mask & bit != 0 {
                return Err(invalid(format!("label {:?} repeated in set", l.as_ref())));
            }
            mask |= bit;
        }
        Ok(Subset(mask))
    }

    pub fn subset_labels(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Compact rendering such as `ac` (or `{x,y}` for multi-character labels).
    pub fn show(&self, s: Subset) -> String {
        if s.is_empty() {
            return "∅".to_string();
        }
        let parts = self.subset_labels(s);
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            parts.concat()
        } else {
            format!("{{{}}}", parts.join(","))
        }
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }
}

/// A subset of the ground set as a bitmask; bit `i` stands for element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Subset::full(n))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of an `n`-element ground set in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << n).map(Subset)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }

    /// Sort key (size first, then lexicographic on the sorted element lists).
    pub fn size_lex_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.iter().collect())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
