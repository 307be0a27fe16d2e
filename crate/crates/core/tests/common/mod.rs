//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's Green's, closure or twisting code; only element types and
//! raw multiplication tables are borrowed.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use twistkit_core::diagram::{enumerate_family, DiagramFamily, Partition};
use twistkit_core::semigroup::FiniteSemigroup;
use twistkit_core::twisting::diagram_semigroup;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap_or_else(|e| panic!("bad partition {s:?}: {e}"))
}

pub fn family(f: DiagramFamily, n: usize) -> Arc<FiniteSemigroup<Partition>> {
    Arc::new(diagram_semigroup(f, n).unwrap())
}

/// Composes two partitions by gluing `a`'s lower row to `b`'s upper row
/// and collecting components; returns the blocks of the product and the
/// number of components that live entirely in the middle row.
pub fn compose(a: &Partition, b: &Partition) -> (Partition, u32) {
    let n = a.n();
    // vertices: upper 0..n, middle n..2n, lower 2n..3n
    let mut parent: Vec<usize> = (0..3 * n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let join = |p: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (find(p, x), find(p, y));
        if rx != ry {
            p[rx] = ry;
        }
    };
    let vertex = |v: i32, top: usize| {
        if v > 0 {
            top + v as usize - 1
        } else {
            top + n + (-v) as usize - 1
        }
    };
    for block in a.blocks() {
        for w in block.windows(2) {
            join(&mut parent, vertex(w[0], 0), vertex(w[1], 0));
        }
    }
    for block in b.blocks() {
        for w in block.windows(2) {
            join(&mut parent, vertex(w[0], n), vertex(w[1], n));
        }
    }
    let mut groups: HashMap<usize, Vec<i32>> = HashMap::new();
    let mut touches_outside: HashMap<usize, bool> = HashMap::new();
    for x in 0..3 * n {
        let r = find(&mut parent, x);
        let outside = x < n || x >= 2 * n;
        *touches_outside.entry(r).or_insert(false) |= outside;
        if x < n {
            groups.entry(r).or_default().push(x as i32 + 1);
        } else if x >= 2 * n {
            groups.entry(r).or_default().push(-((x - 2 * n) as i32 + 1));
        }
    }
    let floats = touches_outside.values().filter(|&&t| !t).count() as u32;
    let blocks: Vec<Vec<i32>> = groups.into_values().collect();
    (Partition::new(n, &blocks).unwrap(), floats)
}

/// Relabels class ids in order of first occurrence.
pub fn normalize(labels: &[usize]) -> Vec<usize> {
    let mut map = HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// Green's relations from principal ideals, computed as explicit sets.
pub struct NaiveGreen {
    pub r: Vec<usize>,
    pub l: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
    pub j: Vec<usize>,
    /// `j_set[a]` = S¹aS¹ as a sorted vector.
    pub j_set: Vec<BTreeSet<usize>>,
    pub idempotent: Vec<bool>,
    pub regular: Vec<bool>,
}

impl NaiveGreen {
    pub fn leq_j(&self, a: usize, b: usize) -> bool {
        self.j_set[b].contains(&a)
    }
}

pub fn naive_green(n: usize, mul: impl Fn(usize, usize) -> usize) -> NaiveGreen {
    let right: Vec<BTreeSet<usize>> = (0..n)
        .map(|a| std::iter::once(a).chain((0..n).map(|s| mul(a, s))).collect())
        .collect();
    let left: Vec<BTreeSet<usize>> = (0..n)
        .map(|a| std::iter::once(a).chain((0..n).map(|s| mul(s, a))).collect())
        .collect();
    let j_set: Vec<BTreeSet<usize>> = (0..n)
        .map(|a| left[a].iter().flat_map(|&x| right[x].iter().copied()).collect())
        .collect();
    let label = |sets: &[BTreeSet<usize>]| {
        let mut ids: HashMap<&BTreeSet<usize>, usize> = HashMap::new();
        sets.iter()
            .map(|s| {
                let next = ids.len();
                *ids.entry(s).or_insert(next)
            })
            .collect::<Vec<usize>>()
    };
    let r = label(&right);
    let l = label(&left);
    let j = label(&j_set);
    let h = normalize(&(0..n).map(|x| r[x] * n + l[x]).collect::<Vec<_>>());
    // a D b iff the R-class of a meets the L-class of b
    let mut d = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if d[a] != usize::MAX {
            continue;
        }
        for b in 0..n {
            if (0..n).any(|c| r[c] == r[a] && l[c] == l[b]) {
                d[b] = next;
            }
        }
        next += 1;
    }
    let idempotent: Vec<bool> = (0..n).map(|a| mul(a, a) == a).collect();
    let regular: Vec<bool> = (0..n).map(|a| (0..n).any(|b| mul(mul(a, b), a) == a)).collect();
    NaiveGreen {
        r,
        l,
        h,
        d,
        j,
        j_set,
        idempotent,
        regular,
    }
}

pub fn naive_green_of<T>(s: &FiniteSemigroup<T>) -> NaiveGreen {
    naive_green(s.len(), |a, b| s.mul(a, b))
}

/// Elements with a two-sided inverse relative to `one`.
pub fn units(n: usize, one: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..n)
        .filter(|&a| (0..n).any(|b| mul(a, b) == one && mul(b, a) == one))
        .collect()
}

/// Closure of `gens` under multiplication, by repeated squaring of the set.
pub fn generated(gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    loop {
        let new: Vec<usize> = set
            .iter()
            .flat_map(|&x| set.iter().map(move |&y| (x, y)))
            .map(|(x, y)| mul(x, y))
            .filter(|z| !set.contains(z))
            .collect();
        if new.is_empty() {
            return set;
        }
        set.extend(new);
    }
}

/// Tightness by brute force: every product `ab` is `a'b` with zero twist,
/// and `ab'` with zero twist.
pub fn naive_tight(n: usize, mul: impl Fn(usize, usize) -> usize, phi: impl Fn(usize, usize) -> u32) -> (bool, bool) {
    let mut left = true;
    let mut right = true;
    for a in 0..n {
        for b in 0..n {
            let ab = mul(a, b);
            left &= (0..n).any(|x| mul(x, b) == ab && phi(x, b) == 0);
            right &= (0..n).any(|x| mul(a, x) == ab && phi(a, x) == 0);
        }
    }
    (left, right)
}

/// Sizes of the diagram families from their definitions, by filtering all
/// set partitions of `2n` points.
pub fn count_by_filter(f: DiagramFamily, n: usize) -> usize {
    enumerate_family(DiagramFamily::P, n)
        .unwrap()
        .into_iter()
        .filter(|a| {
            let blocks = a.blocks();
            let sizes_ok = match f {
                DiagramFamily::B | DiagramFamily::TL => blocks.iter().all(|b| b.len() == 2),
                DiagramFamily::PB | DiagramFamily::Mz => blocks.iter().all(|b| b.len() <= 2),
                _ => true,
            };
            sizes_ok
                && match f {
                    DiagramFamily::TL | DiagramFamily::Mz | DiagramFamily::PP => is_planar(&blocks, n),
                    _ => true,
                }
        })
        .count()
}

/// Non-crossing test on the boundary order 1..n, n'..1'.
pub fn is_planar(blocks: &[Vec<i32>], n: usize) -> bool {
    let pos = |v: i32| if v > 0 { v as usize - 1 } else { 2 * n - (-v) as usize };
    let sets: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().map(|&v| pos(v)).collect()).collect();
    for (i, x) in sets.iter().enumerate() {
        for y in sets.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, y)| y) {
            for &a in x {
                for &c in x {
                    for &b in y {
                        for &d in y {
                            if a < b && b < c && c < d {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}
