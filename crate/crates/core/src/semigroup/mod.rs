//! Finite semigroups given by an explicit multiplication table.
//!
//! Elements are kept in the order they were supplied; every structural
//! computation works on dense indices into that list.

mod biorder;
mod closure;
mod green;
mod schutz;

pub use biorder::{biordered_set, BiorderTable};
pub use closure::{closure_under_right_mul, idempotent_closure};
pub use green::{green_structure, green_structure_with_limit, is_stable, GreenStructure, Stability};
pub use schutz::{schutz_group, GroupSummary};

use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Element types the analysis layers work with: hashable, printable and
/// shareable across threads.
pub trait Element: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {}

impl<T: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static> Element for T {}

/// Default largest size for which associativity is checked exhaustively.
pub const ASSOC_EXHAUSTIVE_BOUND: usize = 512;
/// Number of random triples checked above [`ASSOC_EXHAUSTIVE_BOUND`].
pub const ASSOC_SAMPLE_TRIPLES: usize = 100_000;
/// Fixed seed for sampled associativity checks.
pub const ASSOC_SAMPLE_SEED: u64 = 0x7457_6973_745f_6b69;
/// Default largest semigroup handed to the Green's relations engine.
pub const DEFAULT_GREEN_LIMIT: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("element {index} duplicates element {first}")]
    Duplicate { index: usize, first: usize },
    #[error("not closed: product of elements {left} and {right} is not in the element list")]
    NotClosed { left: usize, right: usize },
    #[error("associativity fails on elements ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("semigroup of size {size} exceeds the limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("multiplication table has wrong shape or out-of-range entries")]
    BadTable,
}

/// How associativity is checked when materializing a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocCheck {
    /// Trust the element source.
    Skip,
    /// Exhaustive up to the bound, then a fixed-seed sample of random triples.
    Bounded { exhaustive_bound: usize, samples: usize },
}

impl Default for AssocCheck {
    fn default() -> Self {
        AssocCheck::Bounded {
            exhaustive_bound: ASSOC_EXHAUSTIVE_BOUND,
            samples: ASSOC_SAMPLE_TRIPLES,
        }
    }
}

/// A materialized finite semigroup.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    table: Vec<u32>,
    identity: Option<usize>,
}

impl<T: Clone + Eq + Hash + Debug> FiniteSemigroup<T> {
    /// Materializes the semigroup on `elements` under `mul`.
    ///
    /// With `check_assoc` set, associativity is verified exhaustively when
    /// there are at most [`ASSOC_EXHAUSTIVE_BOUND`] elements, and on a
    /// fixed-seed random sample otherwise.
    pub fn build<F>(elements: Vec<T>, mul: F, check_assoc: bool) -> Result<Self, SemigroupError>
    where
        F: Fn(&T, &T) -> T,
    {
        let check = if check_assoc {
            AssocCheck::default()
        } else {
            AssocCheck::Skip
        };
        Self::build_with(elements, mul, check)
    }

    pub fn build_with<F>(elements: Vec<T>, mul: F, check: AssocCheck) -> Result<Self, SemigroupError>
    where
        F: Fn(&T, &T) -> T,
    {
        if elements.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, x) in elements.iter().enumerate() {
            if let Some(&first) = index.get(x) {
                return Err(SemigroupError::Duplicate { index: i, first });
            }
            index.insert(x.clone(), i);
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let ab = mul(a, b);
                match index.get(&ab) {
                    Some(&k) => table.push(k as u32),
                    None => return Err(SemigroupError::NotClosed { left: i, right: j }),
                }
            }
        }
        let mut s = FiniteSemigroup {
            elements,
            index,
            table,
            identity: None,
        };
        s.check_associativity(check)?;
        s.identity = s.find_identity();
        Ok(s)
    }

    /// Rebuilds a semigroup from a previously computed table (row-major,
    /// `table[i * n + j] = i·j`). Associativity is not re-checked.
    pub fn from_table(elements: Vec<T>, table: Vec<u32>) -> Result<Self, SemigroupError> {
        let n = elements.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != n * n || table.iter().any(|&k| k as usize >= n) {
            return Err(SemigroupError::BadTable);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, x) in elements.iter().enumerate() {
            if let Some(&first) = index.get(x) {
                return Err(SemigroupError::Duplicate { index: i, first });
            }
            index.insert(x.clone(), i);
        }
        let mut s = FiniteSemigroup {
            elements,
            index,
            table,
            identity: None,
        };
        s.identity = s.find_identity();
        Ok(s)
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }
}

impl<T> FiniteSemigroup<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j] as usize
    }

    /// Product of a word of element indices; `None` for the empty word
    /// unless the semigroup has an identity.
    pub fn mul_word(&self, word: &[usize]) -> Option<usize> {
        let mut it = word.iter();
        let first = match it.next() {
            Some(&x) => x,
            None => return self.identity,
        };
        Some(it.fold(first, |acc, &x| self.mul(acc, x)))
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mul(i, i) == i
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_idempotent(i)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Membership flags of the principal left ideal `S¹b`.
    pub fn left_ideal(&self, b: usize) -> Vec<bool> {
        let mut out = vec![false; self.len()];
        out[b] = true;
        for s in 0..self.len() {
            out[self.mul(s, b)] = true;
        }
        out
    }

    /// Membership flags of the principal right ideal `bS¹`.
    pub fn right_ideal(&self, b: usize) -> Vec<bool> {
        let mut out = vec![false; self.len()];
        out[b] = true;
        for s in 0..self.len() {
            out[self.mul(b, s)] = true;
        }
        out
    }

    /// Exhaustive associativity scan; returns the least failing triple.
    pub fn find_associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn check_associativity(&self, check: AssocCheck) -> Result<(), SemigroupError> {
        let (bound, samples) = match check {
            AssocCheck::Skip => return Ok(()),
            AssocCheck::Bounded {
                exhaustive_bound,
                samples,
            } => (exhaustive_bound, samples),
        };
        let n = self.len();
        if n <= bound {
            if let Some((a, b, c)) = self.find_associativity_failure() {
                return Err(SemigroupError::NotAssociative(a, b, c));
            }
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
        for _ in 0..samples {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(SemigroupError::NotAssociative(a, b, c));
            }
        }
        Ok(())
    }

    fn find_identity(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }
}
