//! Partial transformations of `{1..n}`, acting on the right: `x(fg) = (xf)g`.
//!
//! Full transformations and partial injections also embed in `P_n`
//! ([`PartialMap::to_partition`]); arbitrary partial maps do not compose like
//! partitions, so `PT_n` is kept as its own element type.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{map_partition, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("image {0} is outside 1..={1}")]
    OutOfRange(usize, usize),
    #[error("degree must be between 1 and 255")]
    BadDegree,
    #[error("cannot compose maps of degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("cannot parse partial map from {0:?}")]
    Parse(String),
    #[error("only full transformations and partial injections embed in P_n")]
    NotDiagram,
}

/// A partial map on `{1..n}`. `images[x]` is the image of `x + 1` (1-based),
/// or `None` where undefined.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialMap {
    images: Vec<Option<u8>>,
}

/// Which kind of partial maps to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapFamily {
    /// All partial maps.
    PT,
    /// Total maps.
    T,
    /// Partial injections.
    I,
    /// Permutations.
    Sym,
}

impl PartialMap {
    /// Builds a map from 1-based images (`None` = undefined).
    pub fn new(images: &[Option<usize>]) -> Result<Self, TransformError> {
        let n = images.len();
        if n == 0 || n > 255 {
            return Err(TransformError::BadDegree);
        }
        let images = images
            .iter()
            .map(|&y| match y {
                None => Ok(None),
                Some(y) if (1..=n).contains(&y) => Ok(Some(y as u8)),
                Some(y) => Err(TransformError::OutOfRange(y, n)),
            })
            .collect::<Result<_, _>>()?;
        Ok(PartialMap { images })
    }

    pub fn identity(n: usize) -> Self {
        PartialMap {
            images: (1..=n as u8).map(Some).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn image_of(&self, x: usize) -> Option<usize> {
        self.images[x - 1].map(usize::from)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &PartialMap) -> Result<PartialMap, TransformError> {
        if self.n() != other.n() {
            return Err(TransformError::DegreeMismatch(self.n(), other.n()));
        }
        Ok(self.then(other))
    }

    /// As [`PartialMap::compose`], panicking on a degree mismatch.
    pub fn then(&self, other: &PartialMap) -> PartialMap {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        PartialMap {
            images: self
                .images
                .iter()
                .map(|y| y.and_then(|y| other.images[y as usize - 1]))
                .collect(),
        }
    }

    /// Size of the image.
    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.n() + 1];
        self.images.iter().flatten().filter(|&&y| !std::mem::replace(&mut seen[y as usize], true)).count()
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.n() + 1];
        self.images.iter().flatten().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn in_family(&self, f: MapFamily) -> bool {
        match f {
            MapFamily::PT => true,
            MapFamily::T => self.is_total(),
            MapFamily::I => self.is_injective(),
            MapFamily::Sym => self.is_total() && self.is_injective(),
        }
    }

    /// Inverse of a partial injection.
    pub fn inverse(&self) -> Option<PartialMap> {
        if !self.is_injective() {
            return None;
        }
        let mut images = vec![None; self.n()];
        for (x, y) in self.images.iter().enumerate() {
            if let Some(y) = y {
                images[*y as usize - 1] = Some(x as u8 + 1);
            }
        }
        Some(PartialMap { images })
    }

    /// The diagram of a full transformation or partial injection: the block
    /// of an image point `y` is its preimage together with `y'`.
    pub fn to_partition(&self) -> Result<Partition, TransformError> {
        if !self.is_total() && !self.is_injective() {
            return Err(TransformError::NotDiagram);
        }
        let n = self.n();
        let f: Vec<usize> = self.images.iter().map(|y| y.map_or(n, |y| y as usize - 1)).collect();
        Ok(map_partition(&f))
    }

    /// All maps of degree `n` in `f`, sorted.
    pub fn enumerate(f: MapFamily, n: usize) -> Result<Vec<PartialMap>, TransformError> {
        if n == 0 || n > 8 {
            return Err(TransformError::BadDegree);
        }
        let options = n + 1; // value n stands for "undefined"
        let mut out = Vec::new();
        let mut code = vec![0usize; n];
        'outer: loop {
            let m = PartialMap {
                images: code.iter().map(|&c| if c == n { None } else { Some(c as u8 + 1) }).collect(),
            };
            if m.in_family(f) {
                out.push(m);
            }
            for c in code.iter_mut() {
                *c += 1;
                if *c < options {
                    continue 'outer;
                }
                *c = 0;
            }
            break;
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for PartialMap {
    /// `[1,1,-]`: images in order, `-` where undefined.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .map(|y| y.map_or("-".to_string(), |y| y.to_string()))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PT{self}")
    }
}

impl FromStr for PartialMap {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, TransformError> {
        let err = || TransformError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(err)?;
        let images = inner
            .split(',')
            .map(|t| match t.trim() {
                "-" => Ok(None),
                t => t.parse().map(Some).map_err(|_| err()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        PartialMap::new(&images)
    }
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapFamily::PT => "PT",
            MapFamily::T => "T",
            MapFamily::I => "I",
            MapFamily::Sym => "Sym",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_family, DiagramFamily};

    #[test]
    fn sizes() {
        let size = |f, n| PartialMap::enumerate(f, n).unwrap().len();
        assert_eq!(size(MapFamily::PT, 3), 64);
        assert_eq!(size(MapFamily::T, 3), 27);
        assert_eq!(size(MapFamily::I, 3), 34);
        assert_eq!(size(MapFamily::Sym, 3), 6);
        assert_eq!(size(MapFamily::I, 4), 209);
    }

    #[test]
    fn right_action_composition() {
        let a: PartialMap = "[1,1,3]".parse().unwrap();
        let b: PartialMap = "[1,2,2]".parse().unwrap();
        assert_eq!(a.then(&b).to_string(), "[1,1,2]");
        assert_eq!(b.then(&a).to_string(), "[1,1,1]");
        let c: PartialMap = "[2,-,-]".parse().unwrap();
        assert_eq!(a.then(&c).to_string(), "[2,2,-]");
        assert_eq!(a.rank(), 2);
        assert_eq!(c.rank(), 1);
    }

    #[test]
    fn embedding_agrees_with_partition_product() {
        for (mf, df) in [(MapFamily::T, DiagramFamily::T), (MapFamily::I, DiagramFamily::I)] {
            for n in 1..=3 {
                let maps = PartialMap::enumerate(mf, n).unwrap();
                let mut images: Vec<Partition> = maps.iter().map(|m| m.to_partition().unwrap()).collect();
                for a in &maps {
                    let pa = a.to_partition().unwrap();
                    assert!(pa.in_family(df));
                    assert_eq!(pa.rank(), a.rank());
                    for b in &maps {
                        assert_eq!(pa.mul(&b.to_partition().unwrap()), a.then(b).to_partition().unwrap());
                    }
                }
                images.sort();
                assert_eq!(images, enumerate_family(df, n).unwrap());
            }
        }
    }

    #[test]
    fn general_partial_maps_do_not_compose_as_partitions() {
        // 1,2 ↦ 1 then 1 undefined, 2 ↦ 2: the composite is empty, but the
        // partition product leaves {1,2} as an upper block
        let a: PartialMap = "[1,1]".parse().unwrap();
        let b: PartialMap = "[-,2]".parse().unwrap();
        assert_eq!(a.then(&b).to_string(), "[-,-]");
        assert!(b.to_partition().is_ok());
        let prod = a.to_partition().unwrap().mul(&b.to_partition().unwrap());
        assert_eq!(prod.to_string(), "12|1'|2'");
    }

    #[test]
    fn inverse_of_injection() {
        let a: PartialMap = "[3,-,1]".parse().unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(inv.to_string(), "[3,-,1]");
        assert_eq!(a.then(&inv).then(&a), a);
        assert!("[1,1]".parse::<PartialMap>().unwrap().inverse().is_none());
    }
}
