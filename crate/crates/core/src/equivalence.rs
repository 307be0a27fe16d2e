//! Equivalence relations on `{1, …, n}` in canonical block form.
//!
//! Used for the kernels and cokernels of partitions and as the element type
//! of the join semilattice `Eq(n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivalenceError {
    #[error("point {0} is outside 1..={1}")]
    OutOfRange(usize, usize),
    #[error("point {0} appears more than once")]
    Duplicate(usize),
    #[error("point {0} is missing")]
    Missing(usize),
    #[error("degree must be at least 1")]
    EmptyDegree,
    #[error("cannot parse equivalence from {0:?}")]
    Parse(String),
}

/// An equivalence relation on `{1, …, n}`.
///
/// Stored as a restricted growth string: `labels[x]` is the class of point
/// `x + 1`, with classes numbered in order of their least element. Two
/// equivalences are equal iff their label vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "EquivalenceRepr", into = "EquivalenceRepr")]
pub struct Equivalence {
    labels: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct EquivalenceRepr {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<EquivalenceRepr> for Equivalence {
    type Error = EquivalenceError;

    fn try_from(r: EquivalenceRepr) -> Result<Self, Self::Error> {
        Equivalence::from_blocks(r.n, &r.blocks)
    }
}

impl From<Equivalence> for EquivalenceRepr {
    fn from(e: Equivalence) -> Self {
        EquivalenceRepr {
            n: e.n(),
            blocks: e.blocks(),
        }
    }
}

fn canonical_labels(raw: impl IntoIterator<Item = usize>) -> Vec<u8> {
    let mut remap: Vec<Option<u8>> = Vec::new();
    let mut next = 0u8;
    raw.into_iter()
        .map(|r| {
            if r >= remap.len() {
                remap.resize(r + 1, None);
            }
            *remap[r].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

impl Equivalence {
    /// The equality relation Δ (all classes singletons).
    pub fn discrete(n: usize) -> Self {
        Equivalence {
            labels: (0..n as u8).collect(),
        }
    }

    /// The universal relation (a single class).
    pub fn full(n: usize) -> Self {
        Equivalence { labels: vec![0; n] }
    }

    /// Builds an equivalence from arbitrary class labels, one per point.
    pub fn from_class_labels(raw: &[usize]) -> Self {
        Equivalence {
            labels: canonical_labels(raw.iter().copied()),
        }
    }

    /// Builds an equivalence from 1-based blocks that must cover `1..=n` exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, EquivalenceError> {
        if n == 0 {
            return Err(EquivalenceError::EmptyDegree);
        }
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x == 0 || x > n {
                    return Err(EquivalenceError::OutOfRange(x, n));
                }
                if raw[x - 1] != usize::MAX {
                    return Err(EquivalenceError::Duplicate(x));
                }
                raw[x - 1] = b;
            }
        }
        if let Some(x) = raw.iter().position(|&r| r == usize::MAX) {
            return Err(EquivalenceError::Missing(x + 1));
        }
        Ok(Self::from_class_labels(&raw))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Class label of the 0-based point `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Number of classes, written ‖ε‖.
    pub fn class_count(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Classes as sorted lists of 1-based points, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.class_count()];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(x + 1);
        }
        blocks
    }

    pub fn is_discrete(&self) -> bool {
        self.class_count() == self.n()
    }

    /// Whether the 0-based points `x` and `y` are related.
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    /// The join `self ∨ other`: the smallest equivalence containing both.
    pub fn join(&self, other: &Equivalence) -> Equivalence {
        assert_eq!(self.n(), other.n(), "join of equivalences on different sets");
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for rel in [self, other] {
            let mut first: Vec<Option<usize>> = vec![None; n];
            for x in 0..n {
                let l = rel.labels[x] as usize;
                match first[l] {
                    None => first[l] = Some(x),
                    Some(y) => {
                        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                        if rx != ry {
                            parent[rx.max(ry)] = rx.min(ry);
                        }
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Equivalence::from_class_labels(&roots)
    }

    /// Whether `self ⊆ other` as relations.
    pub fn refines(&self, other: &Equivalence) -> bool {
        assert_eq!(self.n(), other.n());
        (0..self.n()).all(|x| {
            (0..x).all(|y| !self.related(x, y) || other.related(x, y))
        })
    }

    /// All equivalences on `{1, …, n}` in lexicographic order of their
    /// restricted growth strings (Bell(n) of them).
    pub fn enumerate(n: usize) -> Vec<Equivalence> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fn grow(n: usize, current: &mut Vec<u8>, max: i32, out: &mut Vec<Equivalence>) {
            if current.len() == n {
                out.push(Equivalence {
                    labels: current.clone(),
                });
                return;
            }
            for l in 0..=(max + 1) {
                current.push(l as u8);
                grow(n, current, max.max(l), out);
                current.pop();
            }
        }
        if n > 0 {
            grow(n, &mut current, -1, &mut out);
        }
        out
    }
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "," } else { "" };
        let text: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", text.join("|"))
    }
}

impl fmt::Debug for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Eq({self})")
    }
}

impl FromStr for Equivalence {
    type Err = EquivalenceError;

    /// Parses `"12|3|4"` (single-digit points) or `"1,10|2,3,…"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut blocks = Vec::new();
        for part in s.trim().split('|') {
            let part = part.trim();
            let block: Option<Vec<usize>> = if part.contains(',') {
                part.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
            } else {
                part.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
            };
            match block {
                Some(block) if !block.is_empty() => blocks.push(block),
                _ => return Err(EquivalenceError::Parse(s.to_string())),
            }
        }
        let n = blocks.iter().map(Vec::len).sum();
        Equivalence::from_blocks(n, &blocks)
    }
}
