use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{FiniteSemigroup, GreenStructure};

/// Isomorphism-invariant summary of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: usize,
    /// Element order → number of elements of that order.
    pub element_orders: BTreeMap<usize, usize>,
    pub is_abelian: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl GroupSummary {
    pub fn trivial() -> Self {
        GroupSummary {
            order: 1,
            element_orders: BTreeMap::from([(1, 1)]),
            is_abelian: true,
        }
    }

    /// Summary of the group on `0..n` with operation `mul` and identity `id`.
    pub fn from_operation<F: Fn(usize, usize) -> usize>(n: usize, id: usize, mul: F) -> Self {
        let mut element_orders = BTreeMap::new();
        for g in 0..n {
            let mut x = g;
            let mut k = 1;
            while x != id {
                x = mul(x, g);
                k += 1;
                assert!(k <= n, "element {g} has no finite order; not a group");
            }
            *element_orders.entry(k).or_insert(0) += 1;
        }
        let is_abelian = (0..n).all(|a| (0..a).all(|b| mul(a, b) == mul(b, a)));
        GroupSummary {
            order: n,
            element_orders,
            is_abelian,
        }
    }

    /// Summary of the direct product `self × other`.
    pub fn direct_product(&self, other: &GroupSummary) -> GroupSummary {
        let mut element_orders = BTreeMap::new();
        for (&a, &ma) in &self.element_orders {
            for (&b, &mb) in &other.element_orders {
                *element_orders.entry(lcm(a, b)).or_insert(0) += ma * mb;
            }
        }
        GroupSummary {
            order: self.order * other.order,
            element_orders,
            is_abelian: self.is_abelian && other.is_abelian,
        }
    }

    pub fn exponent(&self) -> usize {
        self.element_orders.keys().fold(1, |acc, &k| lcm(acc, k))
    }
}

/// Summary of the Schützenberger group of H-class `h`: the permutations of
/// `H` induced by right translations `x ↦ xu` with `u ∈ S¹` and `Hu = H`.
pub fn schutz_group<T>(s: &FiniteSemigroup<T>, g: &GreenStructure, h: usize) -> GroupSummary {
    let members: Vec<usize> = (0..s.len()).filter(|&x| g.h_class()[x] == h).collect();
    assert!(!members.is_empty(), "no H-class with id {h}");
    let rep = members[0];
    let pos = |x: usize| members.iter().position(|&m| m == x);

    // Identity translation covers u = 1 when S has no identity of its own.
    let identity: Vec<usize> = (0..members.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut perms = vec![identity];
    for u in 0..s.len() {
        if pos(s.mul(rep, u)).is_none() {
            continue;
        }
        let perm: Option<Vec<usize>> = members.iter().map(|&x| pos(s.mul(x, u))).collect();
        let perm = perm.expect("right translation stabilising one point of H must stabilise H");
        if seen.insert(perm.clone()) {
            perms.push(perm);
        }
    }
    let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("translations are closed");
    let compose = |a: usize, b: usize| {
        // act by perms[a] first, then perms[b]
        let p: Vec<usize> = perms[a].iter().map(|&x| perms[b][x]).collect();
        index_of(&p)
    };
    GroupSummary::from_operation(perms.len(), 0, compose)
}

#[cfg(test)]
mod tests {
    use super::super::green_structure;
    use super::*;

    #[test]
    fn cyclic_group_summary() {
        let s = FiniteSemigroup::build((0..6u8).collect(), |a, b| (a + b) % 6, true).unwrap();
        let g = green_structure(&s).unwrap();
        let sum = schutz_group(&s, &g, 0);
        assert_eq!(sum.order, 6);
        assert_eq!(sum.element_orders, BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert!(sum.is_abelian);
        assert_eq!(sum.exponent(), 6);
    }

    #[test]
    fn non_group_h_class_of_size_two() {
        // full transformations of {0,1,2}, composed left to right
        let mut elems = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    elems.push([a, b, c]);
                }
            }
        }
        let s = FiniteSemigroup::build(
            elems,
            |f, g| [g[f[0] as usize], g[f[1] as usize], g[f[2] as usize]],
            true,
        )
        .unwrap();
        let g = green_structure(&s).unwrap();
        // kernel {0,1}|{2}, image {0,1}: the image is not a transversal of the kernel
        let x = s.index_of(&[0, 0, 1]).unwrap();
        let h = g.h_class()[x];
        assert!(!g.is_group_h(h));
        let members: Vec<usize> = (0..s.len()).filter(|&y| g.h_class()[y] == h).collect();
        assert_eq!(members.len(), 2);
        let sum = schutz_group(&s, &g, h);
        assert_eq!(sum.order, 2);
        assert_eq!(sum.element_orders, BTreeMap::from([(1, 1), (2, 1)]));

        // brute force: distinct translations of H by u in S that map H into H
        let mut translations = HashSet::new();
        for u in 0..s.len() {
            let img: Vec<usize> = members.iter().map(|&y| s.mul(y, u)).collect();
            if img.iter().all(|y| members.contains(y)) {
                translations.insert(img);
            }
        }
        assert_eq!(translations.len(), 2);
    }

    #[test]
    fn direct_product_summary() {
        let z2 = GroupSummary::from_operation(2, 0, |a, b| (a + b) % 2);
        let z3 = GroupSummary::from_operation(3, 0, |a, b| (a + b) % 3);
        let z6 = GroupSummary::from_operation(6, 0, |a, b| (a + b) % 6);
        assert_eq!(z2.direct_product(&z3), z6);
        assert_eq!(z2.direct_product(&GroupSummary::trivial()), z2);
    }

    #[test]
    fn symmetric_group_is_not_abelian() {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let sum = GroupSummary::from_operation(6, 0, |a, b| {
            let (p, q) = (perms[a], perms[b]);
            idx([q[p[0]], q[p[1]], q[p[2]]])
        });
        assert!(!sum.is_abelian);
        assert_eq!(sum.element_orders, BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
    }
}
