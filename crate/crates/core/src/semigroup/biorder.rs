use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::FiniteSemigroup;

/// The biordered set of idempotents: the two arrow pre-orders and the
/// partial product on basic pairs. Indices are element indices of the
/// underlying semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiorderTable {
    pub idempotents: Vec<usize>,
    /// `(e, f)` with `e = ef`.
    pub left_arrows: Vec<(usize, usize)>,
    /// `(e, f)` with `e = fe`.
    pub right_arrows: Vec<(usize, usize)>,
    /// `(e, f) → ef` for every basic pair.
    pub basic_products: BTreeMap<(usize, usize), usize>,
}

impl BiorderTable {
    /// `e →_l f`, i.e. `e = ef`.
    pub fn left(&self, e: usize, f: usize) -> bool {
        self.left_arrows.binary_search(&(e, f)).is_ok()
    }

    /// `e →_r f`, i.e. `e = fe`.
    pub fn right(&self, e: usize, f: usize) -> bool {
        self.right_arrows.binary_search(&(e, f)).is_ok()
    }

    pub fn is_basic(&self, e: usize, f: usize) -> bool {
        self.basic_products.contains_key(&(e, f))
    }

    pub fn product(&self, e: usize, f: usize) -> Option<usize> {
        self.basic_products.get(&(e, f)).copied()
    }
}

pub fn biordered_set<T>(s: &FiniteSemigroup<T>) -> BiorderTable {
    let idempotents = s.idempotents();
    let mut left_arrows = Vec::new();
    let mut right_arrows = Vec::new();
    for &e in &idempotents {
        for &f in &idempotents {
            if s.mul(e, f) == e {
                left_arrows.push((e, f));
            }
            if s.mul(f, e) == e {
                right_arrows.push((e, f));
            }
        }
    }
    let mut basic_products = BTreeMap::new();
    for &e in &idempotents {
        for &f in &idempotents {
            let basic = s.mul(e, f) == e || s.mul(f, e) == e || s.mul(f, e) == f || s.mul(e, f) == f;
            if basic {
                basic_products.insert((e, f), s.mul(e, f));
            }
        }
    }
    BiorderTable {
        idempotents,
        left_arrows,
        right_arrows,
        basic_products,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semilattice_basic_pairs_are_comparable_pairs() {
        // subsets of {0,1} under intersection: 1 = {0} and 2 = {1} are incomparable
        let s = FiniteSemigroup::build(vec![0u8, 1, 2, 3], |a, b| a & b, true).unwrap();
        let b = biordered_set(&s);
        assert_eq!(b.idempotents.len(), 4);
        assert_eq!(b.basic_products.len(), 14);
        assert!(!b.is_basic(1, 2));
        for (&(e, f), &p) in &b.basic_products {
            assert_eq!(p, s.mul(e, f));
            assert!(s.is_idempotent(p));
        }
    }

    #[test]
    fn identity_is_above_everything() {
        let s = FiniteSemigroup::build(vec![0u8, 1, 2], |a, b| *a.min(b), true).unwrap();
        let one = s.identity().unwrap();
        let b = biordered_set(&s);
        for &e in &b.idempotents {
            assert!(b.left(e, one) && b.right(e, one));
            assert_eq!(b.product(e, one), Some(e));
        }
    }

    #[test]
    fn rectangular_band_pairs() {
        // 2×2 rectangular band: (i,j)(k,l) = (i,l)
        let elems = vec![(0u8, 0u8), (0, 1), (1, 0), (1, 1)];
        let s = FiniteSemigroup::build(elems, |a, b| (a.0, b.1), true).unwrap();
        let b = biordered_set(&s);
        // (0,0)→_l (1,0) since (0,0)(1,0) = (0,0)
        assert!(b.left(0, 2));
        assert!(!b.right(0, 2));
        // (0,0) and (1,1) are not related by any arrow
        assert!(!b.is_basic(0, 3));
    }
}
