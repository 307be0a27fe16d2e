//! Twistings `Φ: S × S → ℕ` of a finite semigroup and their axiom checks.
//!
//! A twisting is stored as a full value table over an enumerated base, so
//! every verifier is an exhaustive scan. Scans run in parallel over the first
//! element and always report the least failing tuple in index order.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::{enumerate_family, DiagramError, DiagramFamily, Partition};
use crate::equivalence::Equivalence;
use crate::matrix::Matrix;
use crate::report::{Alternative, VerificationReport, Witness};
use crate::semigroup::{Element, FiniteSemigroup, SemigroupError};
use crate::transform::PartialMap;

/// Largest `|S|³` checked exhaustively by [`Twisting::verify_cocycle`].
pub const CUBE_BUDGET: u64 = 50_000_000;
/// Random triples used above the budget.
pub const SAMPLE_TRIPLES: usize = 100_000;
pub const SAMPLE_SEED: u64 = 0x5eed_0f_c0c7_c1e5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistingError {
    #[error("not a twisting: value at ({a_label}, {b_label}) would be {value}")]
    Negative {
        a: usize,
        b: usize,
        a_label: String,
        b_label: String,
        value: i64,
    },
    #[error("no involution attached to twisting {0}")]
    NoInvolution(String),
    #[error("involution does not map the base into itself (image of {0})")]
    InvolutionEscapes(String),
    #[error("value table has wrong size")]
    BadTable,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Rank-like functions used for rigid twistings `m - r(a) - r(b) + r(ab)`.
pub trait Ranked {
    fn rank_value(&self) -> i64;
    /// The `m` of the rank-based twisting (the rank of the identity).
    fn degree(&self) -> i64;
}

impl Ranked for Partition {
    fn rank_value(&self) -> i64 {
        self.rank() as i64
    }
    fn degree(&self) -> i64 {
        self.n() as i64
    }
}

impl Ranked for PartialMap {
    fn rank_value(&self) -> i64 {
        self.rank() as i64
    }
    fn degree(&self) -> i64 {
        self.n() as i64
    }
}

impl Ranked for Matrix {
    fn rank_value(&self) -> i64 {
        self.rank() as i64
    }
    fn degree(&self) -> i64 {
        self.n() as i64
    }
}

/// `Eq(n)` under join, ranked by the number of classes.
impl Ranked for Equivalence {
    fn rank_value(&self) -> i64 {
        self.class_count() as i64
    }
    fn degree(&self) -> i64 {
        self.n() as i64
    }
}

/// The data `(r, m)` of a rigid twisting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidData {
    pub r: Vec<i64>,
    pub m: i64,
}

/// A twisting of an enumerated finite semigroup.
#[derive(Debug, Clone)]
pub struct Twisting<T> {
    name: String,
    base: Arc<FiniteSemigroup<T>>,
    table: Vec<u32>,
    involution: Option<Vec<usize>>,
    rigid: Option<RigidData>,
}

impl<T: Element> Twisting<T> {
    /// Wraps a value table (row-major, `table[a * n + b] = Φ(a,b)`).
    /// No axioms are checked.
    pub fn from_table(name: impl Into<String>, base: Arc<FiniteSemigroup<T>>, table: Vec<u32>) -> Result<Self, TwistingError> {
        if table.len() != base.len() * base.len() {
            return Err(TwistingError::BadTable);
        }
        Ok(Twisting {
            name: name.into(),
            base,
            table,
            involution: None,
            rigid: None,
        })
    }

    pub fn from_fn<F>(name: impl Into<String>, base: Arc<FiniteSemigroup<T>>, f: F) -> Self
    where
        F: Fn(usize, usize) -> u32 + Sync,
    {
        let n = base.len();
        let table: Vec<u32> = (0..n * n).into_par_iter().map(|k| f(k / n, k % n)).collect();
        Twisting {
            name: name.into(),
            base,
            table,
            involution: None,
            rigid: None,
        }
    }

    /// `Φ_{r,m}(a,b) = m - r(a) - r(b) + r(ab)`, rejected with the least
    /// pair where it would be negative.
    pub fn rigid(name: impl Into<String>, base: Arc<FiniteSemigroup<T>>, r: Vec<i64>, m: i64) -> Result<Self, TwistingError> {
        let n = base.len();
        assert_eq!(r.len(), n, "one r value per element");
        let bad = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                let v = m - r[a] - r[b] + r[base.mul(a, b)];
                (v < 0).then_some((a, b, v))
            })
        });
        if let Some((a, b, value)) = bad {
            return Err(TwistingError::Negative {
                a,
                b,
                a_label: base.element(a).to_string(),
                b_label: base.element(b).to_string(),
                value,
            });
        }
        let mut t = Self::from_fn(name, base.clone(), |a, b| (m - r[a] - r[b] + r[base.mul(a, b)]) as u32);
        t.rigid = Some(RigidData { r, m });
        Ok(t)
    }

    /// The rigid twisting with `r = rank`, `m = n`.
    pub fn rank_based(base: Arc<FiniteSemigroup<T>>) -> Result<Self, TwistingError>
    where
        T: Ranked,
    {
        let r: Vec<i64> = base.elements().iter().map(Ranked::rank_value).collect();
        let m = base.element(0).degree();
        Self::rigid("rank", base, r, m)
    }

    /// The constant zero twisting.
    pub fn trivial(base: Arc<FiniteSemigroup<T>>) -> Self {
        let n = base.len();
        let mut t = Self::from_table("trivial", base, vec![0; n * n]).expect("table has the right size");
        t.rigid = Some(RigidData { r: vec![0; n], m: 0 });
        t.involution = None;
        t
    }

    /// `Φ + k` pointwise.
    pub fn shifted(&self, k: u32) -> Self {
        Twisting {
            name: format!("shift:{k}:{}", self.name),
            base: self.base.clone(),
            table: self.table.iter().map(|&v| v + k).collect(),
            involution: self.involution.clone(),
            rigid: self.rigid.as_ref().map(|d| RigidData {
                r: d.r.clone(),
                m: d.m + k as i64,
            }),
        }
    }

    /// Attaches an involution given on elements.
    pub fn with_involution<F: Fn(&T) -> T>(mut self, star: F) -> Result<Self, TwistingError> {
        let map = self
            .base
            .elements()
            .iter()
            .map(|x| {
                self.base
                    .index_of(&star(x))
                    .ok_or_else(|| TwistingError::InvolutionEscapes(x.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.involution = Some(map);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Arc<FiniteSemigroup<T>> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn value(&self, a: usize, b: usize) -> u32 {
        self.table[a * self.base.len() + b]
    }

    /// `Φ(a,b)` on elements; `None` if either is outside the base.
    pub fn eval(&self, a: &T, b: &T) -> Option<u32> {
        Some(self.value(self.base.index_of(a)?, self.base.index_of(b)?))
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    pub fn rigid_data(&self) -> Option<&RigidData> {
        self.rigid.as_ref()
    }

    fn label(&self, x: usize) -> String {
        self.base.element(x).to_string()
    }

    fn witness(&self, elements: Vec<usize>, values: Vec<i64>) -> Witness {
        Witness {
            labels: elements.iter().map(|&x| self.label(x)).collect(),
            elements,
            values,
            ..Witness::default()
        }
    }

    /// `Φ(a_1, …, a_k)`: zero for `k ≤ 1`, otherwise
    /// `Φ(a_1, …, a_{k-1}) + Φ(a_1⋯a_{k-1}, a_k)`.
    pub fn phi_chain(&self, word: &[usize]) -> u64 {
        let Some((&first, rest)) = word.split_first() else {
            return 0;
        };
        let mut prod = first;
        let mut total = 0u64;
        for &x in rest {
            total += u64::from(self.value(prod, x));
            prod = self.base.mul(prod, x);
        }
        total
    }

    fn cocycle_fails(&self, a: usize, b: usize, c: usize) -> Option<Witness> {
        let s = &self.base;
        let lhs = self.value(a, b) + self.value(s.mul(a, b), c);
        let rhs = self.value(a, s.mul(b, c)) + self.value(b, c);
        (lhs != rhs).then(|| self.witness(vec![a, b, c], vec![lhs as i64, rhs as i64]))
    }

    /// The cocycle identity `Φ(a,b) + Φ(ab,c) = Φ(a,bc) + Φ(b,c)`, exhaustively when
    /// `|S|³ ≤ CUBE_BUDGET` and on a fixed-seed sample otherwise.
    pub fn verify_cocycle(&self) -> VerificationReport {
        self.verify_cocycle_with_budget(CUBE_BUDGET)
    }

    pub fn verify_cocycle_with_budget(&self, budget: u64) -> VerificationReport {
        let n = self.base.len();
        let cube = (n as u64).pow(3);
        if cube <= budget {
            let w = (0..n)
                .into_par_iter()
                .find_map_first(|a| (0..n).find_map(|b| (0..n).find_map(|c| self.cocycle_fails(a, b, c))));
            return VerificationReport::new("cocycle", w).with_counts(0, cube);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut w = None;
        for _ in 0..SAMPLE_TRIPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if let Some(found) = self.cocycle_fails(a, b, c) {
                w = Some(found);
                break;
            }
        }
        VerificationReport::new("cocycle", w)
            .with_counts(0, SAMPLE_TRIPLES as u64)
            .sampled()
    }

    /// For fixed `b`, the set `{a'b : Φ(a',b) = 0}`.
    fn zero_left_products(&self, b: usize) -> Vec<bool> {
        let mut z = vec![false; self.base.len()];
        for a in 0..self.base.len() {
            if self.value(a, b) == 0 {
                z[self.base.mul(a, b)] = true;
            }
        }
        z
    }

    /// For fixed `a`, the set `{ab' : Φ(a,b') = 0}`.
    fn zero_right_products(&self, a: usize) -> Vec<bool> {
        let mut z = vec![false; self.base.len()];
        for b in 0..self.base.len() {
            if self.value(a, b) == 0 {
                z[self.base.mul(a, b)] = true;
            }
        }
        z
    }

    /// The `a' ≠ a` with `a'b = ab`, and their values `Φ(a',b)`.
    pub fn left_alternatives(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        let ab = self.base.mul(a, b);
        (0..self.base.len())
            .filter(|&x| x != a && self.base.mul(x, b) == ab)
            .map(|x| (x, self.value(x, b)))
            .collect()
    }

    /// The `b' ≠ b` with `ab' = ab`, and their values `Φ(a,b')`.
    pub fn right_alternatives(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        let ab = self.base.mul(a, b);
        (0..self.base.len())
            .filter(|&x| x != b && self.base.mul(a, x) == ab)
            .map(|x| (x, self.value(a, x)))
            .collect()
    }

    fn alternatives(&self, alts: Vec<(usize, u32)>) -> Vec<Alternative> {
        alts.into_iter()
            .map(|(x, v)| Alternative {
                element: x,
                label: self.label(x),
                value: v as i64,
            })
            .collect()
    }

    /// Tightness on the left (every `ab` can be written `a'b` with
    /// `Φ(a',b) = 0`) and on the right (`ab'` with `Φ(a,b') = 0`).
    pub fn verify_tight(&self) -> (VerificationReport, VerificationReport) {
        let n = self.base.len();
        let pairs = (n * n) as u64;
        let zl: Vec<Vec<bool>> = (0..n).into_par_iter().map(|b| self.zero_left_products(b)).collect();
        let wa = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                (!zl[b][self.base.mul(a, b)]).then(|| Witness {
                    alternatives: self.alternatives(self.left_alternatives(a, b)),
                    ..self.witness(vec![a, b], vec![self.value(a, b) as i64])
                })
            })
        });
        let zr: Vec<Vec<bool>> = (0..n).into_par_iter().map(|a| self.zero_right_products(a)).collect();
        let wb = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                (!zr[a][self.base.mul(a, b)]).then(|| Witness {
                    alternatives: self.alternatives(self.right_alternatives(a, b)),
                    ..self.witness(vec![a, b], vec![self.value(a, b) as i64])
                })
            })
        });
        (
            VerificationReport::new("tight-left", wa).with_counts(pairs, 0),
            VerificationReport::new("tight-right", wb).with_counts(pairs, 0),
        )
    }

    pub fn is_tight(&self) -> bool {
        let (a, b) = self.verify_tight();
        a.pass && b.pass
    }

    /// `Φ(a,b) = Φ(b*,a*)` for the attached involution.
    pub fn verify_star_symmetry(&self) -> Result<VerificationReport, TwistingError> {
        let star = self
            .involution
            .as_ref()
            .ok_or_else(|| TwistingError::NoInvolution(self.name.clone()))?;
        let n = self.base.len();
        let w = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                let (l, r) = (self.value(a, b), self.value(star[b], star[a]));
                (l != r).then(|| self.witness(vec![a, b], vec![l as i64, r as i64]))
            })
        });
        Ok(VerificationReport::new("star-symmetric", w).with_counts((n * n) as u64, 0))
    }

    /// Derived properties: monotonicity along the left and right orders
    /// (`a ≤_L b ⇒ Φ(a,c) ≥ Φ(b,c)`, equality when `a L b`, and dually),
    /// `Φ` vanishing on the identity, rewriting of triples `abc` as `yc'`
    /// with zero twists, and `a ≤_L e ⇒ Φ(a,e) = Φ(e,e)`,
    /// `a ≤_R e ⇒ Φ(e,a) = Φ(e,e)` for idempotents `e`.
    ///
    /// Monotonicity and triple rewriting follow from tightness and are
    /// skipped for loose twistings; the idempotent properties need only the
    /// cocycle identity.
    pub fn verify_consequences(&self) -> Vec<VerificationReport> {
        let s = &self.base;
        let n = s.len();
        let tight = self.is_tight();
        // below_l[b][a]: a ∈ S¹b; below_r[b][a]: a ∈ bS¹
        let below_l: Vec<Vec<bool>> = (0..n).into_par_iter().map(|b| s.left_ideal(b)).collect();
        let below_r: Vec<Vec<bool>> = (0..n).into_par_iter().map(|b| s.right_ideal(b)).collect();
        let mut out = Vec::new();

        if tight {
            let left = (0..n).into_par_iter().find_map_first(|a| {
                (0..n).filter(|&b| below_l[b][a]).find_map(|b| {
                    let same = below_l[a][b];
                    (0..n).find_map(|c| {
                        let (x, y) = (self.value(a, c), self.value(b, c));
                        (x < y || (same && x != y)).then(|| self.witness(vec![a, b, c], vec![x as i64, y as i64]))
                    })
                })
            });
            out.push(VerificationReport::new("left-order", left).with_counts(0, (n as u64).pow(3)));
            let right = (0..n).into_par_iter().find_map_first(|a| {
                (0..n).filter(|&b| below_r[b][a]).find_map(|b| {
                    let same = below_r[a][b];
                    (0..n).find_map(|c| {
                        let (x, y) = (self.value(c, a), self.value(c, b));
                        (x < y || (same && x != y)).then(|| self.witness(vec![a, b, c], vec![x as i64, y as i64]))
                    })
                })
            });
            out.push(VerificationReport::new("right-order", right).with_counts(0, (n as u64).pow(3)));
        } else {
            out.push(VerificationReport::skipped("left-order", "twisting is loose"));
            out.push(VerificationReport::skipped("right-order", "twisting is loose"));
        }

        match s.identity() {
            Some(one) => {
                let w = (0..n).find_map(|a| {
                    let (l, r) = (self.value(one, a), self.value(a, one));
                    (l != 0 || r != 0).then(|| self.witness(vec![a], vec![l as i64, r as i64]))
                });
                out.push(VerificationReport::new("identity-zero", w).with_counts(n as u64, 0));
            }
            None => out.push(VerificationReport::skipped("identity-zero", "base has no identity")),
        }

        if tight {
            let triple = (0..n).into_par_iter().find_map_first(|b| {
                let zb = self.zero_left_products(b);
                let mut reach = vec![false; n];
                for y in (0..n).filter(|&y| zb[y]) {
                    for c in 0..n {
                        if self.value(y, c) == 0 {
                            reach[s.mul(y, c)] = true;
                        }
                    }
                }
                (0..n).find_map(|a| {
                    let ab = s.mul(a, b);
                    (0..n).find_map(|c| (!reach[s.mul(ab, c)]).then(|| self.witness(vec![a, b, c], vec![])))
                })
            });
            out.push(VerificationReport::new("triple-rewrite", triple).with_counts(0, (n as u64).pow(3)));
        } else {
            out.push(VerificationReport::skipped("triple-rewrite", "twisting is loose"));
        }

        let idem = s.idempotents();
        let left_witness = idem.iter().find_map(|&e| {
            let ee = self.value(e, e);
            (0..n)
                .filter(|&a| below_l[e][a])
                .find_map(|a| (self.value(a, e) != ee).then(|| self.witness(vec![a, e], vec![self.value(a, e) as i64, ee as i64])))
        });
        out.push(VerificationReport::new("idempotent-left", left_witness).with_counts((n * idem.len()) as u64, 0));
        let right_witness = idem.iter().find_map(|&e| {
            let ee = self.value(e, e);
            (0..n)
                .filter(|&a| below_r[e][a])
                .find_map(|a| (self.value(e, a) != ee).then(|| self.witness(vec![a, e], vec![self.value(e, a) as i64, ee as i64])))
        });
        out.push(VerificationReport::new("idempotent-right", right_witness).with_counts((n * idem.len()) as u64, 0));
        out
    }

    /// Least idempotents `(e, f)` with `ef` idempotent and
    /// `Φ(e,f) ≠ Φ(e,e) + Φ(f,f) - Φ(ef,ef)`. Every rigid twisting satisfies
    /// that identity, so a hit proves the twisting is not rigid.
    pub fn rigidity_obstruction(&self) -> Option<(usize, usize)> {
        let s = &self.base;
        let idem = s.idempotents();
        for &e in &idem {
            for &f in &idem {
                let ef = s.mul(e, f);
                if !s.is_idempotent(ef) {
                    continue;
                }
                let lhs = self.value(e, f) as i64;
                let rhs = self.value(e, e) as i64 + self.value(f, f) as i64 - self.value(ef, ef) as i64;
                if lhs != rhs {
                    return Some((e, f));
                }
            }
        }
        None
    }

    /// Least index pair whose values differ between two twistings of the same base.
    pub fn first_difference(&self, other: &Twisting<T>) -> Option<(usize, usize)> {
        let n = self.base.len();
        (0..n * n)
            .find(|&k| self.table[k] != other.table[k])
            .map(|k| (k / n, k % n))
    }
}

impl Twisting<Partition> {
    /// The number of floating components of the product graph, with the
    /// diagram involution attached when the base is closed under it.
    pub fn canonical(base: Arc<FiniteSemigroup<Partition>>) -> Self {
        let els = base.elements();
        let t = Self::from_fn("canonical", base.clone(), |a, b| els[a].mul_floats(&els[b]).1);
        let closed = t.clone().with_involution(Partition::star);
        closed.unwrap_or(t)
    }

    /// Enumerates `family` at degree `n` and builds its canonical twisting.
    pub fn canonical_family(family: DiagramFamily, n: usize) -> Result<Self, TwistingError> {
        Ok(Self::canonical(Arc::new(diagram_semigroup(family, n)?)))
    }
}

/// The diagram monoid `family_n` as a materialized semigroup.
pub fn diagram_semigroup(family: DiagramFamily, n: usize) -> Result<FiniteSemigroup<Partition>, TwistingError> {
    let els = enumerate_family(family, n)?;
    Ok(FiniteSemigroup::build(els, Partition::mul, true)?)
}
