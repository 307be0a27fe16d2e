use serde::{Deserialize, Serialize};

use super::{FiniteSemigroup, SemigroupError, DEFAULT_GREEN_LIMIT};

/// Green's relations of a finite semigroup.
///
/// Every class map assigns dense ids numbered by first occurrence along the
/// element order, so two structures over the same element list are equal
/// exactly when they describe the same partitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenStructure {
    r_class: Vec<usize>,
    l_class: Vec<usize>,
    h_class: Vec<usize>,
    j_class: Vec<usize>,
    d_class: Vec<usize>,
    /// For each J-class, the sorted list of J-classes below or equal to it.
    j_down: Vec<Vec<usize>>,
    /// Cover pairs `(lower, upper)` of the J-order.
    j_covers: Vec<(usize, usize)>,
    group_h: Vec<bool>,
    idempotent: Vec<bool>,
    regular: Vec<bool>,
}

/// Renumbers class labels by first occurrence; returns the new labels and
/// the old-to-new map.
fn normalize(raw: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let max = raw.iter().copied().max().map_or(0, |m| m + 1);
    let mut map = vec![usize::MAX; max];
    let mut next = 0;
    let labels = raw
        .iter()
        .map(|&r| {
            if map[r] == usize::MAX {
                map[r] = next;
                next += 1;
            }
            map[r]
        })
        .collect();
    (labels, map)
}

fn class_count(labels: &[usize]) -> usize {
    labels.iter().copied().max().map_or(0, |m| m + 1)
}

/// Strongly connected components of a graph on `0..n` whose `k`-th successor
/// of `v` is `succ(v, k)` for `k < degree`. Components are numbered in the
/// order Tarjan's algorithm completes them, so every edge goes from a
/// component to one with an equal or smaller number.
fn tarjan<F: Fn(usize, usize) -> usize>(n: usize, degree: usize, succ: F) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut comps = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut k)) = call.last_mut() {
            if *k < degree {
                let w = succ(v, *k);
                *k += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = comps;
                        if w == v {
                            break;
                        }
                    }
                    comps += 1;
                }
            }
        }
    }
    comp
}

/// Cover relation of a partial order given by its down-sets.
fn covers_from_down(down: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let k = down.len();
    let words = k.div_ceil(64).max(1);
    let strict: Vec<Vec<u64>> = down
        .iter()
        .enumerate()
        .map(|(c, d)| {
            let mut bits = vec![0u64; words];
            for &x in d.iter().filter(|&&x| x != c) {
                bits[x / 64] |= 1 << (x % 64);
            }
            bits
        })
        .collect();
    let mut covers = Vec::new();
    for upper in 0..k {
        let mut candidates = strict[upper].clone();
        for &mid in down[upper].iter().filter(|&&x| x != upper) {
            for (w, bits) in candidates.iter_mut().zip(&strict[mid]) {
                *w &= !bits;
            }
        }
        for lower in 0..k {
            if candidates[lower / 64] >> (lower % 64) & 1 == 1 {
                covers.push((lower, upper));
            }
        }
    }
    covers.sort_unstable();
    covers
}

impl GreenStructure {
    /// Assembles a structure from raw class maps, a J-order predicate on the
    /// raw J labels, and per-element idempotent/regular flags. Labels are
    /// renormalized; group H-classes are those containing an idempotent.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts<F>(
        r_class: &[usize],
        l_class: &[usize],
        h_class: &[usize],
        j_class: &[usize],
        d_class: &[usize],
        j_leq: F,
        idempotent: Vec<bool>,
        regular: Vec<bool>,
    ) -> Self
    where
        F: Fn(usize, usize) -> bool,
    {
        let (r, _) = normalize(r_class);
        let (l, _) = normalize(l_class);
        let (h, _) = normalize(h_class);
        let (d, _) = normalize(d_class);
        let (j, map) = normalize(j_class);
        let k = class_count(&j);
        let mut raw_of = vec![0; k];
        for (raw, &new) in map.iter().enumerate() {
            if new != usize::MAX {
                raw_of[new] = raw;
            }
        }
        let j_down: Vec<Vec<usize>> = (0..k)
            .map(|upper| (0..k).filter(|&lower| j_leq(raw_of[lower], raw_of[upper])).collect())
            .collect();
        let j_covers = covers_from_down(&j_down);
        let mut group_h = vec![false; class_count(&h)];
        for (x, &is_e) in idempotent.iter().enumerate() {
            if is_e {
                group_h[h[x]] = true;
            }
        }
        GreenStructure {
            r_class: r,
            l_class: l,
            h_class: h,
            j_class: j,
            d_class: d,
            j_down,
            j_covers,
            group_h,
            idempotent,
            regular,
        }
    }

    pub fn size(&self) -> usize {
        self.r_class.len()
    }

    pub fn r_class(&self) -> &[usize] {
        &self.r_class
    }
    pub fn l_class(&self) -> &[usize] {
        &self.l_class
    }
    pub fn h_class(&self) -> &[usize] {
        &self.h_class
    }
    pub fn j_class(&self) -> &[usize] {
        &self.j_class
    }
    pub fn d_class(&self) -> &[usize] {
        &self.d_class
    }

    pub fn r_count(&self) -> usize {
        class_count(&self.r_class)
    }
    pub fn l_count(&self) -> usize {
        class_count(&self.l_class)
    }
    pub fn h_count(&self) -> usize {
        class_count(&self.h_class)
    }
    pub fn j_count(&self) -> usize {
        class_count(&self.j_class)
    }
    pub fn d_count(&self) -> usize {
        class_count(&self.d_class)
    }

    /// Whether J-class `lower` lies below or equals J-class `upper`.
    pub fn j_leq(&self, lower: usize, upper: usize) -> bool {
        self.j_down[upper].binary_search(&lower).is_ok()
    }

    /// `a ≤_J b` for elements.
    pub fn elem_leq_j(&self, a: usize, b: usize) -> bool {
        self.j_leq(self.j_class[a], self.j_class[b])
    }

    pub fn j_covers(&self) -> &[(usize, usize)] {
        &self.j_covers
    }

    pub fn is_group_h(&self, h: usize) -> bool {
        self.group_h[h]
    }

    pub fn group_h_flags(&self) -> &[bool] {
        &self.group_h
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.idempotent[x]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.idempotent[x]).collect()
    }

    pub fn idempotent_flags(&self) -> &[bool] {
        &self.idempotent
    }

    pub fn regular_flags(&self) -> &[bool] {
        &self.regular
    }

    /// Whether the J-orders of `self` and `other` are isomorphic posets.
    /// Backtracking over classes, pruned by up/down-set sizes.
    pub fn j_order_isomorphic(&self, other: &GreenStructure) -> bool {
        let k = self.j_count();
        if k != other.j_count() {
            return false;
        }
        let sig = |g: &GreenStructure, c: usize| {
            let up = (0..k).filter(|&u| g.j_leq(c, u)).count();
            (g.j_down[c].len(), up)
        };
        let a_sig: Vec<_> = (0..k).map(|c| sig(self, c)).collect();
        let b_sig: Vec<_> = (0..k).map(|c| sig(other, c)).collect();
        let mut sorted_a = a_sig.clone();
        let mut sorted_b = b_sig.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return false;
        }
        let mut image = vec![usize::MAX; k];
        let mut used = vec![false; k];
        self.extend_iso(other, 0, &a_sig, &b_sig, &mut image, &mut used)
    }

    fn extend_iso(
        &self,
        other: &GreenStructure,
        c: usize,
        a_sig: &[(usize, usize)],
        b_sig: &[(usize, usize)],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = a_sig.len();
        if c == k {
            return true;
        }
        for t in 0..k {
            if used[t] || a_sig[c] != b_sig[t] {
                continue;
            }
            let consistent = (0..c).all(|p| {
                self.j_leq(p, c) == other.j_leq(image[p], t) && self.j_leq(c, p) == other.j_leq(t, image[p])
            });
            if !consistent {
                continue;
            }
            image[c] = t;
            used[t] = true;
            if self.extend_iso(other, c + 1, a_sig, b_sig, image, used) {
                return true;
            }
            used[t] = false;
        }
        image[c] = usize::MAX;
        false
    }

    pub fn is_regular(&self, x: usize) -> bool {
        self.regular[x]
    }

    pub fn regular_elements(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.regular[x]).collect()
    }

    pub fn is_regular_semigroup(&self) -> bool {
        self.regular.iter().all(|&r| r)
    }

    /// Members of each class of the given class map, in element order.
    pub fn members(classes: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); class_count(classes)];
        for (x, &c) in classes.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Whether a D-class (given by id) contains an idempotent.
    pub fn is_regular_d(&self, d: usize) -> bool {
        (0..self.size()).any(|x| self.d_class[x] == d && self.idempotent[x])
    }
}

/// Green's relations of `s` with the default size limit.
pub fn green_structure<T>(s: &FiniteSemigroup<T>) -> Result<GreenStructure, SemigroupError> {
    green_structure_with_limit(s, DEFAULT_GREEN_LIMIT)
}

/// Green's relations via strongly connected components of the right, left
/// and two-sided Cayley graphs (all elements used as generators).
///
/// D is computed independently as the join of R and L, so `d_class` and
/// `j_class` agreeing is a genuine check on finite inputs.
pub fn green_structure_with_limit<T>(
    s: &FiniteSemigroup<T>,
    limit: usize,
) -> Result<GreenStructure, SemigroupError> {
    let n = s.len();
    if n > limit {
        return Err(SemigroupError::TooLarge { size: n, limit });
    }
    let r_raw = tarjan(n, n, |v, k| s.mul(v, k));
    let l_raw = tarjan(n, n, |v, k| s.mul(k, v));
    let j_raw = tarjan(n, 2 * n, |v, k| if k < n { s.mul(v, k) } else { s.mul(k - n, v) });

    let (r, _) = normalize(&r_raw);
    let (l, _) = normalize(&l_raw);
    let h_pairs: Vec<usize> = {
        let lc = class_count(&l);
        r.iter().zip(&l).map(|(&a, &b)| a * lc + b).collect()
    };

    // D = R ∨ L by union-find over elements sharing an R- or L-class.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for classes in [&r, &l] {
        let mut first = vec![usize::MAX; class_count(classes)];
        for x in 0..n {
            let c = classes[x];
            if first[c] == usize::MAX {
                first[c] = x;
            } else {
                let (a, b) = (find(&mut parent, x), find(&mut parent, first[c]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let d_raw: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();

    // J-order: reachability in the condensation, processed in completion order.
    let k = class_count(&j_raw);
    let words = k.div_ceil(64).max(1);
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); k];
    {
        let mut seen = vec![vec![false; k]; k];
        for v in 0..n {
            let cv = j_raw[v];
            for t in 0..n {
                for w in [s.mul(v, t), s.mul(t, v)] {
                    let cw = j_raw[w];
                    if cw != cv && !seen[cv][cw] {
                        seen[cv][cw] = true;
                        succs[cv].push(cw);
                    }
                }
            }
        }
    }
    let mut reach: Vec<Vec<u64>> = vec![vec![0; words]; k];
    for c in 0..k {
        reach[c][c / 64] |= 1 << (c % 64);
        for &d in &succs[c] {
            debug_assert!(d < c);
            let (lo, hi) = reach.split_at_mut(c);
            for (w, bits) in hi[0].iter_mut().zip(&lo[d]) {
                *w |= bits;
            }
        }
    }
    let j_leq = |lower: usize, upper: usize| reach[upper][lower / 64] >> (lower % 64) & 1 == 1;

    let idempotent: Vec<bool> = (0..n).map(|x| s.is_idempotent(x)).collect();
    let mut regular_d = vec![false; n];
    for x in 0..n {
        if idempotent[x] {
            regular_d[d_raw[x]] = true;
        }
    }
    let regular = (0..n).map(|x| regular_d[d_raw[x]]).collect();

    Ok(GreenStructure::from_parts(
        &r, &l, &h_pairs, &j_raw, &d_raw, j_leq, idempotent, regular,
    ))
}

/// Outcome of the stability scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stability {
    pub stable: bool,
    /// Least pair `(a, b)` violating `a J ab ⟺ a R ab` or `a J ba ⟺ a L ba`.
    pub witness: Option<(usize, usize)>,
}

/// Checks `a J ab ⟺ a R ab` and `a J ba ⟺ a L ba` over all pairs.
pub fn is_stable<T>(s: &FiniteSemigroup<T>, g: &GreenStructure) -> Stability {
    let n = s.len();
    for a in 0..n {
        for b in 0..n {
            let ab = s.mul(a, b);
            let ba = s.mul(b, a);
            let right = (g.j_class[a] == g.j_class[ab]) == (g.r_class[a] == g.r_class[ab]);
            let left = (g.j_class[a] == g.j_class[ba]) == (g.l_class[a] == g.l_class[ba]);
            if !(right && left) {
                return Stability {
                    stable: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    Stability {
        stable: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u8) -> FiniteSemigroup<u8> {
        FiniteSemigroup::build((0..n).collect(), |a, b| (a + b) % n, true).unwrap()
    }

    /// Full transformations of {0,1}, composed left to right.
    fn t2() -> FiniteSemigroup<[u8; 2]> {
        let elems = vec![[0, 1], [1, 0], [0, 0], [1, 1]];
        FiniteSemigroup::build(elems, |f, g| [g[f[0] as usize], g[f[1] as usize]], true).unwrap()
    }

    #[test]
    fn group_has_one_class() {
        let s = cyclic(6);
        let g = green_structure(&s).unwrap();
        assert_eq!(g.j_count(), 1);
        assert_eq!(g.h_count(), 1);
        assert!(g.is_group_h(0));
        assert_eq!(g.idempotents(), vec![0]);
        assert!(g.is_regular_semigroup());
    }

    #[test]
    fn t2_structure() {
        let s = t2();
        let g = green_structure(&s).unwrap();
        // units {id, swap} above the constants
        assert_eq!(g.j_count(), 2);
        assert_eq!(g.j_class(), &[0, 0, 1, 1]);
        assert_eq!(g.j_covers(), &[(1, 0)]);
        // the two constants share a kernel (R) but not an image (L)
        assert!(g.r_class()[2] == g.r_class()[3]);
        assert!(g.l_class()[2] != g.l_class()[3]);
        assert_eq!(g.d_class(), g.j_class());
        assert_eq!(g.idempotents(), vec![0, 2, 3]);
    }

    #[test]
    fn null_semigroup_is_not_regular() {
        // {0, a} with all products 0
        let s = FiniteSemigroup::build(vec![0u8, 1], |_, _| 0, true).unwrap();
        let g = green_structure(&s).unwrap();
        assert!(g.is_regular(0));
        assert!(!g.is_regular(1));
        assert_eq!(g.j_covers(), &[(0, 1)]);
    }

    #[test]
    fn limit_is_enforced() {
        let s = cyclic(5);
        assert_eq!(
            green_structure_with_limit(&s, 4).unwrap_err(),
            SemigroupError::TooLarge { size: 5, limit: 4 }
        );
    }

    #[test]
    fn chain_semilattice_order() {
        // meet on a 4-chain: the order is the chain itself
        let s = FiniteSemigroup::build(vec![3u8, 2, 1, 0], |a, b| *a.min(b), true).unwrap();
        let g = green_structure(&s).unwrap();
        assert_eq!(g.j_count(), 4);
        assert_eq!(g.j_covers(), &[(1, 0), (2, 1), (3, 2)]);
        assert!(g.j_leq(3, 0));
        assert!(!g.j_leq(0, 3));
        assert!(is_stable(&s, &g).stable);
    }
}
