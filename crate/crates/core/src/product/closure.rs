//! Idempotent-generated submonoids of products, exact for finite `M` and
//! windowed for ℕ and ℤ.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::monoid::CommMonoid;
use crate::report::{VerificationReport, Witness};
use crate::semigroup::{idempotent_closure, Element};
use crate::twisting::{Ranked, Twisting};

use super::{ProductError, TwistedProduct};

impl<T: Element> TwistedProduct<T> {
    /// `⟨E(T)⟩` by closure of the materialized product, sorted.
    pub fn ig_closure(&self) -> Result<Vec<usize>, ProductError> {
        Ok(idempotent_closure(self.finite()?))
    }

    /// For a rigid `Φ_{r,m}` over a group `M`: `{((r(a)-m)q, a) : a ∈ ⟨E(S)⟩}`.
    pub fn ig_predict_rigid(&self) -> Result<Vec<usize>, ProductError> {
        self.finite()?;
        if !self.m.is_group() {
            return Err(ProductError::Precondition(format!("{} is not a group", self.m)));
        }
        let rigid = self
            .phi
            .rigid_data()
            .ok_or_else(|| ProductError::Precondition(format!("twisting {} is not rigid", self.phi.name())))?;
        let mut out = Vec::new();
        for a in idempotent_closure(self.base()) {
            let m = self.signed_multiple(rigid.r[a] - rigid.m)?;
            out.push(self.index(self.m.index_of(&m).expect("closed"), a));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Closure against the rigid-over-group prediction.
    pub fn crosscheck_ig(&self) -> Result<VerificationReport, ProductError> {
        let found: BTreeSet<usize> = self.ig_closure()?.into_iter().collect();
        let predicted: BTreeSet<usize> = self.ig_predict_rigid()?.into_iter().collect();
        let witness = found.symmetric_difference(&predicted).next().map(|&x| Witness {
            elements: vec![x],
            labels: vec![self.label(x)],
            note: if found.contains(&x) {
                "in the closure but not predicted".to_string()
            } else {
                "predicted but not in the closure".to_string()
            },
            ..Witness::default()
        });
        Ok(VerificationReport::new("idempotent-generated", witness).with_counts(found.len() as u64, 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WindowVerdict {
    /// The inner window matches `{(0,1)} ∪ (window × Sing(S))` exactly.
    Confirmed,
    /// Predicted elements not reached inside the margin; not a refutation.
    Inconclusive { missing: Vec<(i64, usize)> },
    Refuted { element: (i64, usize), note: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowedClosure {
    pub monoid: String,
    pub k: i64,
    pub margin: i64,
    /// Everything reached inside the computation window, sorted.
    pub elements: Vec<(i64, usize)>,
    /// Reached elements in the inner window.
    pub inner_count: usize,
    pub predicted_count: usize,
    pub verdict: WindowVerdict,
}

/// Breadth-first closure of the idempotents of `M ×_Φ^1 S` for `M` in
/// {ℕ, ℤ}, restricted to first coordinates in `[0, K]` (ℕ, exact since
/// coordinates never decrease) or `[-K-n, K+n]` (ℤ, `n` the degree).
/// The verdict compares the inner window `[0,K]` or `[-K,K]` with
/// `{(0,1)} ∪ (window × Sing(S))`.
pub fn ig_closure_windowed<T: Element + Ranked>(
    phi: &Twisting<T>,
    monoid: &CommMonoid,
    k: i64,
) -> Result<WindowedClosure, ProductError> {
    let s = phi.base();
    let one = s
        .identity()
        .ok_or_else(|| ProductError::Precondition("base has no identity".to_string()))?;
    if k < 0 {
        return Err(ProductError::Precondition("window cap must be non-negative".to_string()));
    }
    let degree = s.element(0).degree();
    let (lo, hi, inner_lo, margin) = match monoid {
        CommMonoid::Nat => (0, k, 0, 0),
        CommMonoid::Int => (-k - degree, k + degree, -k, degree),
        other => return Err(ProductError::Precondition(format!("windowed closure needs N or Z, got {other}"))),
    };
    let inside = |m: i64| (lo..=hi).contains(&m);
    let gens: Vec<(i64, usize)> = s
        .idempotents()
        .into_iter()
        .filter_map(|e| {
            let v = i64::from(phi.value(e, e));
            match monoid {
                CommMonoid::Nat => (v == 0).then_some((0, e)),
                _ => Some((-v, e)),
            }
        })
        .filter(|&(m, _)| inside(m))
        .collect();

    let mut seen: BTreeSet<(i64, usize)> = gens.iter().copied().collect();
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for &(m, a) in &frontier {
            for &(g, e) in &gens {
                let y = (m + g + i64::from(phi.value(a, e)), s.mul(a, e));
                if inside(y.0) && seen.insert(y) {
                    next.insert(y);
                }
            }
        }
        frontier = next;
    }

    let n = s.len();
    let is_unit = |a: usize| (0..n).any(|b| s.mul(a, b) == one && s.mul(b, a) == one);
    let units: Vec<bool> = (0..n).map(is_unit).collect();
    let predicted = |(m, a): (i64, usize)| (m == 0 && a == one) || !units[a];
    let inner: Vec<(i64, usize)> = seen.iter().copied().filter(|&(m, _)| (inner_lo..=k).contains(&m)).collect();
    let singular = units.iter().filter(|&&u| !u).count();
    let predicted_count = 1 + singular * (k - inner_lo + 1) as usize;

    let verdict = if let Some(&x) = inner.iter().find(|&&x| !predicted(x)) {
        WindowVerdict::Refuted {
            element: x,
            note: format!("({}, {}) is generated but not predicted", x.0, s.element(x.1)),
        }
    } else {
        let mut missing = Vec::new();
        for m in inner_lo..=k {
            for a in 0..n {
                if predicted((m, a)) && !seen.contains(&(m, a)) {
                    missing.push((m, a));
                }
            }
        }
        match (missing.first(), monoid) {
            (None, _) => WindowVerdict::Confirmed,
            (Some(&x), CommMonoid::Nat) => WindowVerdict::Refuted {
                element: x,
                note: format!("({}, {}) is predicted but not generated", x.0, s.element(x.1)),
            },
            _ => WindowVerdict::Inconclusive { missing },
        }
    };
    Ok(WindowedClosure {
        monoid: monoid.to_string(),
        k,
        margin,
        elements: seen.into_iter().collect(),
        inner_count: inner.len(),
        predicted_count,
        verdict,
    })
}
