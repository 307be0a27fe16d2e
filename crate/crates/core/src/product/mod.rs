//! Twisted products `M ×_Φ^q S` with `(i,a)(j,b) = (i + j + Φ(a,b)q, ab)`.
//!
//! When `M` is finite the product is materialized as a [`FiniteSemigroup`]
//! whose element `(i, a)` sits at index `i_index * |S| + a`. The predictors
//! in the submodules assemble structure from `M` and `S` alone and are
//! refused for loose twistings.

mod biorder;
mod closure;
mod green;
mod idempotents;
mod regular;

pub use closure::{ig_closure_windowed, WindowVerdict, WindowedClosure};
pub use idempotents::{GroupPrediction, OmegaEntry, OmegaSet};
pub use regular::RegularPrediction;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eggbox::Tint;
use crate::monoid::{CommMonoid, MElem, MonoidError};
use crate::semigroup::{
    green_structure, Element, FiniteSemigroup, GreenStructure, SemigroupError, ASSOC_EXHAUSTIVE_BOUND,
};
use crate::twisting::Twisting;

/// Largest product materialized by default.
pub const MATERIALIZE_BOUND: usize = 5_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("q = {0} is not an element of {1}")]
    QNotInM(String, String),
    #[error("product has {size} elements, above the bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("operation needs a finite monoid M, got {0}")]
    NotFinite(String),
    #[error("twisting {0} is loose; the product predictors need a tight twisting")]
    Loose(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("product is not associative at elements ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// An element `(m, a)` of a twisted product; `a` indexes the base.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwistedElement {
    pub m: MElem,
    pub a: usize,
}

impl fmt::Display for TwistedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, s{})", self.m, self.a)
    }
}

/// How the tightness of the twisting is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tightness {
    Verified,
    Loose,
    /// Declared tight by the caller without a check.
    Asserted,
}

/// The twisted product `M ×_Φ^q S`.
#[derive(Debug, Clone)]
pub struct TwistedProduct<T> {
    m: CommMonoid,
    phi: Twisting<T>,
    q: MElem,
    tightness: Tightness,
    m_elements: Vec<MElem>,
    materialized: Option<FiniteSemigroup<TwistedElement>>,
}

impl<T: Element> TwistedProduct<T> {
    /// Builds the product with the default materialization bound.
    pub fn new(m: CommMonoid, phi: Twisting<T>, q: MElem) -> Result<Self, ProductError> {
        Self::with_bound(m, phi, q, MATERIALIZE_BOUND)
    }

    pub fn with_bound(m: CommMonoid, phi: Twisting<T>, q: MElem, bound: usize) -> Result<Self, ProductError> {
        if !m.contains(&q) {
            return Err(ProductError::QNotInM(m.label(&q), m.to_string()));
        }
        let tightness = if phi.is_tight() {
            Tightness::Verified
        } else {
            Tightness::Loose
        };
        let mut product = TwistedProduct {
            m,
            phi,
            q,
            tightness,
            m_elements: Vec::new(),
            materialized: None,
        };
        if product.m.is_finite() {
            product.m_elements = product.m.elements()?;
            let size = product.m_elements.len() * product.phi.len();
            if size > bound {
                return Err(ProductError::TooLarge { size, bound });
            }
            product.materialized = Some(product.materialize()?);
        }
        Ok(product)
    }

    /// Marks the twisting as tight without checking it.
    pub fn assume_tight(mut self) -> Self {
        if self.tightness == Tightness::Loose {
            self.tightness = Tightness::Asserted;
        }
        self
    }

    fn materialize(&self) -> Result<FiniteSemigroup<TwistedElement>, ProductError> {
        let s = self.phi.base();
        let (k, n) = (self.m_elements.len(), s.len());
        let m_index = |x: &MElem| self.m.index_of(x).expect("monoid closed under addition");
        let mut add = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                add[i * k + j] = m_index(&self.m.add(&self.m_elements[i], &self.m_elements[j])?);
            }
        }
        let max_phi = self.phi.table().iter().copied().max().unwrap_or(0);
        let mut twist = Vec::with_capacity(max_phi as usize + 1);
        for t in 0..=max_phi {
            twist.push(m_index(&self.m.scalar(u64::from(t), &self.q)?));
        }
        let elements: Vec<TwistedElement> = (0..k * n)
            .map(|x| TwistedElement {
                m: self.m_elements[x / n].clone(),
                a: x % n,
            })
            .collect();
        let size = k * n;
        let mut table = Vec::with_capacity(size * size);
        for x in 0..size {
            let (i, a) = (x / n, x % n);
            for y in 0..size {
                let (j, b) = (y / n, y % n);
                let m = add[add[i * k + j] * k + twist[self.phi.value(a, b) as usize]];
                table.push((m * n + s.mul(a, b)) as u32);
            }
        }
        let t = FiniteSemigroup::from_table(elements, table)?;
        if size <= ASSOC_EXHAUSTIVE_BOUND {
            if let Some((a, b, c)) = t.find_associativity_failure() {
                return Err(ProductError::NotAssociative(a, b, c));
            }
        }
        Ok(t)
    }

    pub fn monoid(&self) -> &CommMonoid {
        &self.m
    }

    pub fn twisting(&self) -> &Twisting<T> {
        &self.phi
    }

    pub fn base(&self) -> &Arc<FiniteSemigroup<T>> {
        self.phi.base()
    }

    pub fn q(&self) -> &MElem {
        &self.q
    }

    pub fn tightness(&self) -> Tightness {
        self.tightness
    }

    pub fn is_tight(&self) -> bool {
        self.tightness != Tightness::Loose
    }

    pub fn semigroup(&self) -> Option<&FiniteSemigroup<TwistedElement>> {
        self.materialized.as_ref()
    }

    /// The materialized product, or an error for infinite `M`.
    pub fn finite(&self) -> Result<&FiniteSemigroup<TwistedElement>, ProductError> {
        self.materialized
            .as_ref()
            .ok_or_else(|| ProductError::NotFinite(self.m.to_string()))
    }

    pub fn m_elements(&self) -> &[MElem] {
        &self.m_elements
    }

    /// Index of `(m_elements[i], a)` in the materialized product.
    pub fn index(&self, i: usize, a: usize) -> usize {
        i * self.phi.len() + a
    }

    /// `(M index, S index)` of a materialized element.
    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.phi.len(), x % self.phi.len())
    }

    pub fn index_of(&self, x: &TwistedElement) -> Option<usize> {
        Some(self.index(self.m.index_of(&x.m)?, x.a))
    }

    /// `Φ(a,b)·q`.
    pub fn twist(&self, a: usize, b: usize) -> Result<MElem, ProductError> {
        Ok(self.m.scalar(u64::from(self.phi.value(a, b)), &self.q)?)
    }

    /// The defining product, evaluated directly (works for infinite `M`).
    pub fn mul_elems(&self, x: &TwistedElement, y: &TwistedElement) -> Result<TwistedElement, ProductError> {
        let m = self.m.add(&self.m.add(&x.m, &y.m)?, &self.twist(x.a, y.a)?)?;
        Ok(TwistedElement {
            m,
            a: self.base().mul(x.a, y.a),
        })
    }

    /// `(0, 1)` when it is a two-sided identity.
    pub fn identity(&self) -> Option<TwistedElement> {
        let one = self.base().identity()?;
        let n = self.phi.len();
        let neutral = (0..n).all(|a| self.phi.value(one, a) == 0 && self.phi.value(a, one) == 0);
        neutral.then(|| TwistedElement {
            m: self.m.zero(),
            a: one,
        })
    }

    /// Human-readable `(m, a)`.
    pub fn label_elem(&self, x: &TwistedElement) -> String {
        format!("({}, {})", self.m.label(&x.m), self.base().element(x.a))
    }

    pub fn label(&self, x: usize) -> String {
        let (i, a) = self.split(x);
        format!("({}, {})", self.m.label(&self.m_elements[i]), self.base().element(a))
    }

    pub fn tint(&self, x: usize) -> Tint {
        match (&self.m, &self.m_elements[self.split(x).0]) {
            (CommMonoid::ZeroInf, MElem::Num(0)) => Tint::Zero,
            (CommMonoid::ZeroInf, MElem::Inf) => Tint::Inf,
            _ => Tint::None,
        }
    }

    /// Egg-box of the generic Green's structure, tinted by first coordinate.
    pub fn eggbox(&self) -> Result<crate::eggbox::EggBox, ProductError> {
        let g = self.generic_green()?;
        Ok(crate::eggbox::layout(&g, |x| self.label(x), Some(|x| self.tint(x))))
    }

    /// `M` as a materialized semigroup (finite `M` only), in element order.
    pub fn m_semigroup(&self) -> Result<FiniteSemigroup<MElem>, ProductError> {
        if !self.m.is_finite() {
            return Err(ProductError::NotFinite(self.m.to_string()));
        }
        let m = &self.m;
        Ok(FiniteSemigroup::build(
            self.m_elements.clone(),
            |x, y| m.add(x, y).expect("elements of M"),
            false,
        )?)
    }

    pub fn generic_green(&self) -> Result<GreenStructure, ProductError> {
        Ok(green_structure(self.finite()?)?)
    }

    fn require_tight(&self) -> Result<(), ProductError> {
        if self.is_tight() {
            Ok(())
        } else {
            Err(ProductError::Loose(self.phi.name().to_string()))
        }
    }

    /// `k·q` for a signed `k`; negative multiples need `q` to be a unit.
    pub fn signed_multiple(&self, k: i64) -> Result<MElem, ProductError> {
        let base = self.m.scalar(k.unsigned_abs(), &self.q)?;
        if k >= 0 {
            return Ok(base);
        }
        self.m
            .neg(&base)?
            .ok_or_else(|| ProductError::Precondition(format!("q = {} is not a unit", self.m.label(&self.q))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DiagramFamily;
    use crate::twisting::diagram_semigroup;

    fn zeroinf_p2() -> TwistedProduct<crate::diagram::Partition> {
        let phi = Twisting::canonical_family(DiagramFamily::P, 2).unwrap();
        TwistedProduct::new(CommMonoid::ZeroInf, phi, MElem::Inf).unwrap()
    }

    #[test]
    fn sizes_and_identity() {
        let t = zeroinf_p2();
        assert_eq!(t.finite().unwrap().len(), 30);
        let one = t.identity().unwrap();
        assert_eq!(t.finite().unwrap().identity(), t.index_of(&one));
        assert_eq!(t.tightness(), Tightness::Verified);

        let b3 = Arc::new(diagram_semigroup(DiagramFamily::B, 3).unwrap());
        let rank = Twisting::rank_based(b3).unwrap();
        let t = TwistedProduct::new(CommMonoid::ZMod(2), rank, MElem::Num(1)).unwrap();
        assert_eq!(t.finite().unwrap().len(), 30);
    }

    #[test]
    fn q_must_belong_to_m() {
        let phi = Twisting::canonical_family(DiagramFamily::P, 2).unwrap();
        let err = TwistedProduct::new(CommMonoid::ZMod(2), phi, MElem::Inf).unwrap_err();
        assert!(matches!(err, ProductError::QNotInM(..)));
    }

    #[test]
    fn table_matches_formula() {
        let t = zeroinf_p2();
        let s = t.finite().unwrap();
        for x in 0..s.len() {
            for y in 0..s.len() {
                let direct = t.mul_elems(s.element(x), s.element(y)).unwrap();
                assert_eq!(s.element(s.mul(x, y)), &direct);
            }
        }
    }

    #[test]
    fn infinite_monoid_is_not_materialized() {
        let phi = Twisting::canonical_family(DiagramFamily::P, 2).unwrap();
        let t = TwistedProduct::new(CommMonoid::Nat, phi, MElem::Num(1)).unwrap();
        assert!(t.semigroup().is_none());
        let x = TwistedElement { m: MElem::Num(2), a: 0 };
        let y = t.mul_elems(&x, &x).unwrap();
        assert_eq!(y.m, MElem::Num(4 + t.twisting().value(0, 0) as i64));
    }
}
