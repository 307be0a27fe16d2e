//! Partitions of `{1..n} ∪ {1'..n'}` and the diagram monoids inside `P_n`.
//!
//! Vertices are written `+k` (upper) and `-k` (lower). Internally a
//! partition is a restricted growth string over the vertex order
//! `1, 1', 2, 2', …, n, n'`, so blocks are numbered by their least vertex and
//! equality of partitions is equality of label vectors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equivalence::Equivalence;

/// Largest supported degree (labels are stored as `u8`).
pub const MAX_DEGREE: usize = 120;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("degree must be between 1 and {MAX_DEGREE}, got {0}")]
    BadDegree(usize),
    #[error("vertex {0} is outside ±1..=±{1}")]
    OutOfRange(i32, usize),
    #[error("vertex {0} appears more than once")]
    Duplicate(i32),
    #[error("vertex {0} is missing")]
    Missing(i32),
    #[error("cannot multiply partitions of degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("unknown diagram family {0:?}")]
    UnknownFamily(String),
    #[error("enumerating {family}_{n} exceeds the bound n ≤ {bound}")]
    BoundExceeded {
        family: DiagramFamily,
        n: usize,
        bound: usize,
    },
}

fn key(v: i32) -> usize {
    let k = v.unsigned_abs() as usize - 1;
    if v > 0 {
        2 * k
    } else {
        2 * k + 1
    }
}

fn vertex(key: usize) -> i32 {
    let k = (key / 2 + 1) as i32;
    if key % 2 == 0 {
        k
    } else {
        -k
    }
}

fn rgs(raw: impl IntoIterator<Item = usize>, size_hint: usize) -> Vec<u8> {
    let mut remap = vec![u8::MAX; size_hint];
    let mut next = 0u8;
    raw.into_iter()
        .map(|r| {
            if remap[r] == u8::MAX {
                remap[r] = next;
                next += 1;
            }
            remap[r]
        })
        .collect()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// A set partition of `{1..n} ∪ {1'..n'}` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    labels: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = DiagramError;

    fn try_from(r: PartitionRepr) -> Result<Self, DiagramError> {
        Partition::new(r.n, &r.blocks)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr {
            n: p.n(),
            blocks: p.blocks(),
        }
    }
}

impl Partition {
    /// Canonicalizes a list of blocks of signed vertices.
    pub fn new(n: usize, blocks: &[Vec<i32>]) -> Result<Self, DiagramError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(DiagramError::BadDegree(n));
        }
        let mut raw = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            for &v in block {
                if v == 0 || v.unsigned_abs() as usize > n {
                    return Err(DiagramError::OutOfRange(v, n));
                }
                let k = key(v);
                if raw[k] != usize::MAX {
                    return Err(DiagramError::Duplicate(v));
                }
                raw[k] = b;
            }
        }
        if let Some(k) = raw.iter().position(|&r| r == usize::MAX) {
            return Err(DiagramError::Missing(vertex(k)));
        }
        Ok(Partition {
            labels: rgs(raw, blocks.len()),
        })
    }

    /// Builds a partition from arbitrary block labels in vertex order
    /// `1, 1', 2, 2', …`; labels must be below `2n`.
    pub fn from_raw_labels(raw: &[usize]) -> Self {
        assert!(raw.len() % 2 == 0 && !raw.is_empty(), "need 2n labels");
        Partition {
            labels: rgs(raw.iter().copied(), raw.len()),
        }
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            labels: (0..2 * n).map(|k| (k / 2) as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len() / 2
    }

    /// Block labels in vertex order `1, 1', 2, 2', …`.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Block label of upper vertex `k` (1-based).
    pub fn upper(&self, k: usize) -> usize {
        self.labels[2 * (k - 1)] as usize
    }

    /// Block label of lower vertex `k'` (1-based).
    pub fn lower(&self, k: usize) -> usize {
        self.labels[2 * (k - 1) + 1] as usize
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks in canonical order, each sorted as `1 < 1' < 2 < 2' < …`.
    pub fn blocks(&self) -> Vec<Vec<i32>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (k, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(vertex(k));
        }
        blocks
    }

    /// The product `self · other` and the number of floating components of
    /// the product graph (components lying entirely in the middle row).
    pub fn multiply_floats(&self, other: &Partition) -> Result<(Partition, u32), DiagramError> {
        if self.n() != other.n() {
            return Err(DiagramError::DegreeMismatch(self.n(), other.n()));
        }
        Ok(self.mul_floats(other))
    }

    /// As [`Partition::multiply_floats`], panicking on a degree mismatch.
    pub fn mul_floats(&self, other: &Partition) -> (Partition, u32) {
        let n = self.n();
        assert_eq!(n, other.n(), "degree mismatch");
        // 0..n: upper row of self; n..2n: middle; 2n..3n: lower row of other
        let mut uf = UnionFind::new(3 * n);
        let mut first = vec![usize::MAX; 2 * n];
        for (k, &l) in self.labels.iter().enumerate() {
            let v = if k % 2 == 0 { k / 2 } else { n + k / 2 };
            let l = l as usize;
            if first[l] == usize::MAX {
                first[l] = v;
            } else {
                uf.union(first[l], v);
            }
        }
        first.fill(usize::MAX);
        for (k, &l) in other.labels.iter().enumerate() {
            let v = if k % 2 == 0 { n + k / 2 } else { 2 * n + k / 2 };
            let l = l as usize;
            if first[l] == usize::MAX {
                first[l] = v;
            } else {
                uf.union(first[l], v);
            }
        }
        let mut outer = vec![false; 3 * n];
        let raw: Vec<usize> = (0..2 * n)
            .map(|k| {
                let v = if k % 2 == 0 { k / 2 } else { 2 * n + k / 2 };
                let r = uf.find(v);
                outer[r] = true;
                r
            })
            .collect();
        let mut floats = 0;
        let mut counted = vec![false; 3 * n];
        for v in n..2 * n {
            let r = uf.find(v);
            if !outer[r] && !counted[r] {
                counted[r] = true;
                floats += 1;
            }
        }
        (
            Partition {
                labels: rgs(raw, 3 * n),
            },
            floats,
        )
    }

    pub fn mul(&self, other: &Partition) -> Partition {
        self.mul_floats(other).0
    }

    /// The involution `a*`: reflect the diagram top to bottom.
    pub fn star(&self) -> Partition {
        let raw: Vec<usize> = (0..self.labels.len()).map(|k| self.labels[k ^ 1] as usize).collect();
        Partition::from_raw_labels(&raw)
    }

    fn block_shape(&self) -> Vec<(usize, usize)> {
        let mut shape = vec![(0, 0); self.block_count()];
        for (k, &l) in self.labels.iter().enumerate() {
            if k % 2 == 0 {
                shape[l as usize].0 += 1;
            } else {
                shape[l as usize].1 += 1;
            }
        }
        shape
    }

    /// Number of transversals (blocks meeting both rows).
    pub fn rank(&self) -> usize {
        self.block_shape().iter().filter(|&&(u, l)| u > 0 && l > 0).count()
    }

    /// Upper vertices lying in transversals.
    pub fn dom(&self) -> Vec<usize> {
        let shape = self.block_shape();
        (1..=self.n()).filter(|&k| shape[self.upper(k)].1 > 0).collect()
    }

    /// Lower vertices lying in transversals (as unprimed points).
    pub fn codom(&self) -> Vec<usize> {
        let shape = self.block_shape();
        (1..=self.n()).filter(|&k| shape[self.lower(k)].0 > 0).collect()
    }

    /// Restriction of the block partition to the upper row.
    pub fn ker(&self) -> Equivalence {
        let raw: Vec<usize> = (1..=self.n()).map(|k| self.upper(k)).collect();
        Equivalence::from_class_labels(&raw)
    }

    /// Restriction of the block partition to the lower row.
    pub fn coker(&self) -> Equivalence {
        let raw: Vec<usize> = (1..=self.n()).map(|k| self.lower(k)).collect();
        Equivalence::from_class_labels(&raw)
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            rank: self.rank(),
            dom: self.dom(),
            codom: self.codom(),
            ker: self.ker(),
            coker: self.coker(),
        }
    }

    /// No two blocks cross in the boundary order `1, …, n, n', …, 1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.n();
        let around: Vec<u8> = (1..=n)
            .map(|k| self.labels[2 * (k - 1)])
            .chain((1..=n).rev().map(|k| self.labels[2 * (k - 1) + 1]))
            .collect();
        let blocks = self.block_count();
        for a in 0..blocks as u8 {
            for b in a + 1..blocks as u8 {
                // collapse the boundary word to the runs of a and b; they
                // cross exactly when the runs alternate a, b, a, b
                let mut runs = 0;
                let mut last = None;
                for &x in &around {
                    if (x == a || x == b) && last != Some(x) {
                        runs += 1;
                        last = Some(x);
                    }
                }
                if runs >= 4 {
                    return false;
                }
            }
        }
        true
    }

    pub fn in_family(&self, family: DiagramFamily) -> bool {
        let shape = self.block_shape();
        let sizes_at_most_two = || shape.iter().all(|&(u, l)| u + l <= 2);
        let sizes_two = || shape.iter().all(|&(u, l)| u + l == 2);
        let injective = || shape.iter().all(|&(u, l)| u <= 1 && l <= 1);
        match family {
            DiagramFamily::P => true,
            DiagramFamily::PB => sizes_at_most_two(),
            DiagramFamily::B => sizes_two(),
            DiagramFamily::PP => self.is_planar(),
            DiagramFamily::TL => sizes_two() && self.is_planar(),
            DiagramFamily::Mz => sizes_at_most_two() && self.is_planar(),
            DiagramFamily::T => shape.iter().all(|&(_, l)| l == 1),
            DiagramFamily::I => injective(),
            DiagramFamily::Sym => injective() && shape.iter().all(|&(u, l)| u == 1 && l == 1),
        }
    }
}

/// Numerical and relational invariants of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub rank: usize,
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: Equivalence,
    pub coker: Equivalence,
}

fn write_vertex(f: &mut fmt::Formatter<'_>, v: i32) -> fmt::Result {
    if v > 0 {
        write!(f, "{v}")
    } else {
        write!(f, "{}'", -v)
    }
}

impl fmt::Display for Partition {
    /// Blocks separated by `|`; vertices separated by commas once `n ≥ 10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = self.n() >= 10;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, &v) in block.iter().enumerate() {
                if sep && j > 0 {
                    write!(f, ",")?;
                }
                write_vertex(f, v)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({self})")
    }
}

impl FromStr for Partition {
    type Err = DiagramError;

    /// Parses `"14|23(4'5')|56|1'2'6'|3'"`; parentheses and spaces are
    /// ignored. Vertices are single digits unless the string contains a
    /// comma or a `0`, in which case they are comma-separated numbers
    /// (`"1,10|2,3'|..."`).
    /// The degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let err = || DiagramError::Parse(s.to_string());
        // from degree 10 on every string mentions a `0`
        let separated = s.contains(',') || s.contains('0');
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let part: String = part.chars().filter(|c| !"() ".contains(*c)).collect();
            let mut block = Vec::new();
            if separated {
                for tok in part.split(',') {
                    let (num, lower) = match tok.strip_suffix('\'') {
                        Some(t) => (t, true),
                        None => (tok, false),
                    };
                    let v: i32 = num.parse().map_err(|_| err())?;
                    block.push(if lower { -v } else { v });
                }
            } else {
                let chars: Vec<char> = part.chars().collect();
                let mut i = 0;
                while i < chars.len() {
                    let d = chars[i].to_digit(10).ok_or_else(err)? as i32;
                    if chars.get(i + 1) == Some(&'\'') {
                        block.push(-d);
                        i += 2;
                    } else {
                        block.push(d);
                        i += 1;
                    }
                }
            }
            if block.is_empty() {
                return Err(err());
            }
            blocks.push(block);
        }
        let n = blocks.iter().flatten().map(|v| v.unsigned_abs() as usize).max().ok_or_else(err)?;
        Partition::new(n, &blocks)
    }
}

/// The diagram monoids realized inside `P_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DiagramFamily {
    /// All partitions.
    P,
    /// Partial Brauer: blocks of size at most 2.
    PB,
    /// Brauer: blocks of size exactly 2.
    B,
    /// Planar partitions.
    PP,
    /// Temperley–Lieb: planar Brauer.
    TL,
    /// Motzkin: planar partial Brauer.
    Mz,
    /// Full transformations: every block has exactly one lower vertex,
    /// except lower singletons outside the image.
    T,
    /// Partial injections.
    I,
    /// Permutations.
    Sym,
}

impl DiagramFamily {
    pub const ALL: [DiagramFamily; 9] = [
        DiagramFamily::P,
        DiagramFamily::PB,
        DiagramFamily::B,
        DiagramFamily::PP,
        DiagramFamily::TL,
        DiagramFamily::Mz,
        DiagramFamily::T,
        DiagramFamily::I,
        DiagramFamily::Sym,
    ];

    /// Largest degree enumerated without an explicit override.
    pub fn default_bound(self) -> usize {
        match self {
            DiagramFamily::P | DiagramFamily::PB | DiagramFamily::PP | DiagramFamily::Mz => 4,
            DiagramFamily::B | DiagramFamily::TL | DiagramFamily::T | DiagramFamily::I | DiagramFamily::Sym => 5,
        }
    }
}

impl fmt::Display for DiagramFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagramFamily::P => "P",
            DiagramFamily::PB => "PB",
            DiagramFamily::B => "B",
            DiagramFamily::PP => "PP",
            DiagramFamily::TL => "TL",
            DiagramFamily::Mz => "Mz",
            DiagramFamily::T => "T",
            DiagramFamily::I => "I",
            DiagramFamily::Sym => "Sym",
        };
        f.write_str(s)
    }
}

impl FromStr for DiagramFamily {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, DiagramError> {
        DiagramFamily::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .or(match s {
                "M" | "Motzkin" => Some(DiagramFamily::Mz),
                "S" => Some(DiagramFamily::Sym),
                _ => None,
            })
            .ok_or_else(|| DiagramError::UnknownFamily(s.to_string()))
    }
}

/// All members of `family` of degree `n`, sorted, within the default bound.
pub fn enumerate_family(family: DiagramFamily, n: usize) -> Result<Vec<Partition>, DiagramError> {
    if n > family.default_bound() {
        return Err(DiagramError::BoundExceeded {
            family,
            n,
            bound: family.default_bound(),
        });
    }
    enumerate_family_unbounded(family, n)
}

/// As [`enumerate_family`] without the size guard.
pub fn enumerate_family_unbounded(family: DiagramFamily, n: usize) -> Result<Vec<Partition>, DiagramError> {
    if n == 0 || n > MAX_DEGREE {
        return Err(DiagramError::BadDegree(n));
    }
    let mut out = match family {
        DiagramFamily::P => all_partitions(n),
        DiagramFamily::PP => all_partitions(n).into_iter().filter(Partition::is_planar).collect(),
        DiagramFamily::B => matchings(n, false),
        DiagramFamily::TL => matchings(n, false).into_iter().filter(Partition::is_planar).collect(),
        DiagramFamily::PB => matchings(n, true),
        DiagramFamily::Mz => matchings(n, true).into_iter().filter(Partition::is_planar).collect(),
        DiagramFamily::T => maps(n, false, false),
        DiagramFamily::I => maps(n, true, true),
        DiagramFamily::Sym => maps(n, false, true),
    };
    out.sort();
    Ok(out)
}

fn all_partitions(n: usize) -> Vec<Partition> {
    Equivalence::enumerate(2 * n)
        .into_iter()
        .map(|e| Partition {
            labels: e.labels().to_vec(),
        })
        .collect()
}

/// Perfect matchings (`partial = false`) or partial matchings of the 2n
/// vertices, as partitions with blocks of size 2 (resp. at most 2).
fn matchings(n: usize, partial: bool) -> Vec<Partition> {
    fn go(raw: &mut Vec<usize>, next: usize, partial: bool, out: &mut Vec<Partition>) {
        let Some(i) = raw.iter().position(|&r| r == usize::MAX) else {
            out.push(Partition::from_raw_labels(raw));
            return;
        };
        if partial {
            raw[i] = next;
            go(raw, next + 1, partial, out);
        }
        for j in i + 1..raw.len() {
            if raw[j] == usize::MAX {
                raw[i] = next;
                raw[j] = next;
                go(raw, next + 1, partial, out);
                raw[j] = usize::MAX;
            }
        }
        raw[i] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; 2 * n], 0, partial, &mut out);
    out
}

/// Full transformations, partial injections or permutations of `{1..n}`,
/// acting on the right, as partitions: the block of an image point `y` is
/// its preimage together with `y'`.
fn maps(n: usize, partial: bool, injective: bool) -> Vec<Partition> {
    let none = n; // image value meaning "undefined"
    let options = if partial { n + 1 } else { n };
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        let mut used = vec![false; n];
        let ok = !injective
            || f.iter().all(|&y| {
                if y == none {
                    return true;
                }
                let fresh = !used[y];
                used[y] = true;
                fresh
            });
        if ok {
            out.push(map_partition(&f));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            f[i] += 1;
            if f[i] < options {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Partition of the map `x ↦ f[x]` on `0..n`, with `f[x] == n` meaning undefined.
pub(crate) fn map_partition(f: &[usize]) -> Partition {
    let n = f.len();
    // block of lower y' is y; undefined upper points get blocks n + x
    let raw: Vec<usize> = (0..2 * n)
        .map(|k| {
            let x = k / 2;
            if k % 2 == 1 {
                x
            } else if f[x] < n {
                f[x]
            } else {
                n + x
            }
        })
        .collect();
    Partition::from_raw_labels(&raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_from_blocks() {
        let id = Partition::new(2, &[vec![1, -1], vec![2, -2]]).unwrap();
        assert_eq!(id, Partition::identity(2));
        assert_eq!(
            Partition::new(2, &[vec![1], vec![2, -2]]),
            Err(DiagramError::Missing(-1))
        );
        assert_eq!(
            Partition::new(2, &[vec![1, 3], vec![2, -2, -1]]),
            Err(DiagramError::OutOfRange(3, 2))
        );
    }

    #[test]
    fn text_and_json_forms() {
        let a = Partition::new(6, &[vec![1, 4], vec![2, 3, -4, -5], vec![5, 6], vec![-1, -2, -6], vec![-3]]).unwrap();
        assert_eq!(a, p("14|23(4'5')|56|1'2'6'|3'"));
        assert_eq!(a.to_string(), "14|1'2'6'|234'5'|3'|56");
        assert_eq!(p(&a.to_string()), a);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":6,"blocks":[[1,4],[-1,-2,-6],[2,3,-4,-5],[-3],[5,6]]}"#);
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), a);
        let big = Partition::identity(11);
        assert_eq!(p(&big.to_string()), big);
    }

    #[test]
    fn identity_is_neutral_with_no_floats() {
        for a in enumerate_family(DiagramFamily::P, 2).unwrap() {
            assert_eq!(Partition::identity(2).mul_floats(&a), (a.clone(), 0));
            assert_eq!(a.mul_floats(&Partition::identity(2)), (a.clone(), 0));
        }
    }

    #[test]
    fn star_reflects() {
        assert_eq!(Partition::identity(3).star(), Partition::identity(3));
        assert_eq!(p("12|1'|2'").star(), p("1'2'|1|2"));
    }

    #[test]
    fn invariants_of_identity_and_singletons() {
        let id = Partition::identity(3).invariants();
        assert_eq!(id.rank, 3);
        assert_eq!(id.dom, vec![1, 2, 3]);
        assert!(id.ker.is_discrete() && id.coker.is_discrete());
        let s = p("1|2|3|1'|2'|3'");
        assert_eq!(s.rank(), 0);
        assert!(s.dom().is_empty() && s.codom().is_empty());
    }

    #[test]
    fn transposition_membership() {
        let t = p("12'|21'");
        for f in [DiagramFamily::B, DiagramFamily::I, DiagramFamily::Sym, DiagramFamily::T] {
            assert!(t.in_family(f), "{f}");
        }
        assert!(!t.in_family(DiagramFamily::PP));
        let id = Partition::identity(4);
        assert!(DiagramFamily::ALL.iter().all(|&f| id.in_family(f)));
    }

    #[test]
    fn family_sizes() {
        let size = |f, n| enumerate_family(f, n).unwrap().len();
        assert_eq!(size(DiagramFamily::P, 2), 15);
        assert_eq!(size(DiagramFamily::P, 3), 203);
        assert_eq!(size(DiagramFamily::B, 3), 15);
        assert_eq!(size(DiagramFamily::B, 4), 105);
        assert_eq!(size(DiagramFamily::TL, 3), 5);
        assert_eq!(size(DiagramFamily::TL, 4), 14);
        assert_eq!(size(DiagramFamily::PB, 2), 10);
        assert_eq!(size(DiagramFamily::PB, 3), 76);
        assert_eq!(size(DiagramFamily::PP, 2), 14);
        assert_eq!(size(DiagramFamily::PP, 3), 132);
        assert_eq!(size(DiagramFamily::Mz, 2), 9);
        assert_eq!(size(DiagramFamily::Mz, 3), 51);
        assert_eq!(size(DiagramFamily::T, 3), 27);
        assert_eq!(size(DiagramFamily::I, 3), 34);
        assert_eq!(size(DiagramFamily::Sym, 4), 24);
        assert!(matches!(
            enumerate_family(DiagramFamily::P, 5),
            Err(DiagramError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn enumerations_match_filters_of_p() {
        for n in 1..=3 {
            let all = enumerate_family(DiagramFamily::P, n).unwrap();
            for f in DiagramFamily::ALL {
                let filtered: Vec<Partition> = all.iter().filter(|a| a.in_family(f)).cloned().collect();
                assert_eq!(filtered, enumerate_family(f, n).unwrap(), "{f}_{n}");
            }
        }
    }

    #[test]
    fn families_closed_under_product_and_star() {
        for f in DiagramFamily::ALL {
            let els = enumerate_family(f, 3).unwrap();
            for a in &els {
                assert!(a.star().in_family(f) || matches!(f, DiagramFamily::T), "{f}");
                for b in &els {
                    assert!(a.mul(b).in_family(f), "{f}: {a} · {b}");
                }
            }
        }
    }

    #[test]
    fn planarity_of_small_examples() {
        assert!(p("12|1'2'").is_planar());
        assert!(!p("12'|21'").is_planar());
        // {1,3} and {2,4} cross on the boundary
        assert!(!p("13|24|1'|2'|3'|4'").is_planar());
        assert!(p("14|23|1'|2'|3'|4'").is_planar());
    }
}
