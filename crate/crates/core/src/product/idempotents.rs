//! Idempotents and maximal subgroups of a tight product.
//!
//! The idempotents are indexed by `Ω = {(i,e) : i ≤_J Φ(e,e)q}` over pairs
//! of idempotents of `M` and `S`; `(i,e)` resolves to the unique idempotent
//! `(p,e)` with `p` in the H-class of `i` and `i = p + Φ(e,e)q`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::monoid::{CommMonoid, MElem};
use crate::report::{VerificationReport, Witness};
use crate::semigroup::{schutz_group, Element, GreenStructure, GroupSummary};

use super::{ProductError, TwistedElement, TwistedProduct};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaEntry {
    pub i: MElem,
    /// Base index of the idempotent `e`.
    pub e: usize,
    /// First coordinate of the resolved idempotent `(p, e)`.
    pub p: MElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSet {
    pub entries: Vec<OmegaEntry>,
    /// `|E(M)|·|E(S)|`, the size of the full candidate set.
    pub candidates: usize,
}

impl OmegaSet {
    /// Whether every pair of idempotents lies in `Ω`.
    pub fn is_onto(&self) -> bool {
        self.entries.len() == self.candidates
    }

    pub fn get(&self, i: &MElem, e: usize) -> Option<&OmegaEntry> {
        self.entries.iter().find(|x| &x.i == i && x.e == e)
    }

    pub fn resolved(&self) -> Vec<TwistedElement> {
        self.entries
            .iter()
            .map(|x| TwistedElement { m: x.p.clone(), a: x.e })
            .collect()
    }
}

/// Outcome of the group H-class predictor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPrediction {
    pub is_group: bool,
    pub summary: Option<GroupSummary>,
}

impl<T: Element> TwistedProduct<T> {
    /// `Ω` with each pair resolved. Works symbolically for ℕ and ℤ.
    pub fn omega_idempotents(&self) -> Result<OmegaSet, ProductError> {
        self.require_tight()?;
        let s = self.base();
        let m_idem = self.m.idempotents()?;
        let s_idem = s.idempotents();
        let mut entries = Vec::new();
        for i in &m_idem {
            for &e in &s_idem {
                let t = self.twist(e, e)?;
                if !self.m.leq_j(i, &t)? {
                    continue;
                }
                let p = self.resolve(i, &t)?;
                entries.push(OmegaEntry { i: i.clone(), e, p });
            }
        }
        Ok(OmegaSet {
            entries,
            candidates: m_idem.len() * s_idem.len(),
        })
    }

    /// The unique `p` in the H-class of `i` with `p + t = i`.
    fn resolve(&self, i: &MElem, t: &MElem) -> Result<MElem, ProductError> {
        if self.m == CommMonoid::Int {
            let neg = self.m.neg(t)?.expect("ℤ is a group");
            return Ok(self.m.add(i, &neg)?);
        }
        let members = self.m.h_class(i)?.members.expect("finite H-class");
        for p in members {
            if &self.m.add(&p, t)? == i {
                return Ok(p);
            }
        }
        panic!(
            "no idempotent over ({}, {}) although the pair lies in the index set",
            self.m.label(i),
            self.m.label(t)
        );
    }

    /// The idempotent `ε(i,e)`, if `(i,e) ∈ Ω`.
    pub fn epsilon(&self, i: &MElem, e: usize) -> Result<Option<TwistedElement>, ProductError> {
        let omega = self.omega_idempotents()?;
        Ok(omega.get(i, e).map(|x| TwistedElement { m: x.p.clone(), a: e }))
    }

    /// Brute-force `E(T)` against the resolved set, and the onto criterion:
    /// every pair of idempotents occurs iff `q` is a unit or `Φ(e,e) = 0`
    /// for all idempotents `e`.
    pub fn crosscheck_idempotents(&self) -> Result<Vec<VerificationReport>, ProductError> {
        let t = self.finite()?;
        let omega = self.omega_idempotents()?;
        let brute: BTreeSet<usize> = t.idempotents().into_iter().collect();
        let mut resolved = BTreeSet::new();
        for x in omega.resolved() {
            resolved.insert(self.index_of(&x).expect("resolved idempotent lies in T"));
        }
        let diff = brute.symmetric_difference(&resolved).next().copied();
        let witness = diff.map(|x| Witness {
            elements: vec![x],
            labels: vec![self.label(x)],
            note: if brute.contains(&x) {
                "idempotent missing from the resolved set".to_string()
            } else {
                "resolved element is not idempotent".to_string()
            },
            ..Witness::default()
        });
        let same = VerificationReport::new("idempotents", witness).with_counts(t.len() as u64, 0);

        let predicted_onto = self.m.is_unit(&self.q)?
            || self.base().idempotents().iter().all(|&e| self.phi.value(e, e) == 0);
        let onto_witness = (predicted_onto != omega.is_onto()).then(|| Witness {
            note: format!(
                "{} of {} pairs resolved, criterion predicts onto = {predicted_onto}",
                omega.entries.len(),
                omega.candidates
            ),
            ..Witness::default()
        });
        let onto = VerificationReport::new("idempotents-onto", onto_witness);
        Ok(vec![same, onto])
    }

    /// Whether the H-class `H_i × H'` is a group, with its summary.
    /// `s_h` is an H-class id of the base under `gs`.
    pub fn predict_group_h(
        &self,
        i: &MElem,
        s_h: usize,
        gs: &GreenStructure,
    ) -> Result<GroupPrediction, ProductError> {
        self.require_tight()?;
        let hm = self.m.h_class(i)?;
        let members: Vec<usize> = (0..gs.size()).filter(|&a| gs.h_class()[a] == s_h).collect();
        let phi_h = self.phi.value(members[0], members[0]);
        for &a in &members {
            for &b in &members {
                if self.phi.value(a, b) != phi_h {
                    return Err(ProductError::Precondition(format!(
                        "twisting is not constant on the H-class of {}",
                        self.base().element(a)
                    )));
                }
            }
        }
        let is_group = hm.is_group && gs.is_group_h(s_h) && self.m.leq_j(i, &self.twist(members[0], members[0])?)?;
        if !is_group {
            return Ok(GroupPrediction {
                is_group,
                summary: None,
            });
        }
        let m_members = hm.members.ok_or_else(|| ProductError::NotFinite(self.m.to_string()))?;
        let pos: HashMap<&MElem, usize> = m_members.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let mut m_id = 0;
        for (k, x) in m_members.iter().enumerate() {
            if &self.m.add(x, x)? == x {
                m_id = k;
            }
        }
        let m_group = GroupSummary::from_operation(m_members.len(), m_id, |a, b| {
            pos[&self.m.add(&m_members[a], &m_members[b]).expect("elements of M")]
        });
        let s_group = schutz_group(self.base(), gs, s_h);
        Ok(GroupPrediction {
            is_group,
            summary: Some(m_group.direct_product(&s_group)),
        })
    }

    /// For every H-class of the product: the group flag matches the
    /// predictor, and the Schützenberger group summary equals the product
    /// of the summaries of the two factors.
    pub fn crosscheck_schutzenberger(&self) -> Result<Vec<VerificationReport>, ProductError> {
        self.require_tight()?;
        let t = self.finite()?;
        let gt = self.generic_green()?;
        let gm = self.m_green()?;
        let gs = self.s_green()?;
        let m_sg = self.m_semigroup()?;
        let reps = GreenStructure::members(gt.h_class());
        let mut group_bad = None;
        let mut schutz_bad = None;
        for (h, members) in reps.iter().enumerate() {
            let x = members[0];
            let (i, a) = self.split(x);
            let s_h = gs.h_class()[a];
            let predicted = self.predict_group_h(&self.m_elements[i], s_h, &gs)?;
            if group_bad.is_none() && predicted.is_group != gt.is_group_h(h) {
                group_bad = Some(Witness {
                    elements: vec![x],
                    labels: vec![self.label(x)],
                    note: format!("group: generic {}, predicted {}", gt.is_group_h(h), predicted.is_group),
                    ..Witness::default()
                });
            }
            if let Some(summary) = &predicted.summary {
                if summary.order != members.len() && group_bad.is_none() {
                    group_bad = Some(Witness {
                        elements: vec![x],
                        labels: vec![self.label(x)],
                        note: format!("group of order {} predicted for an H-class of size {}", summary.order, members.len()),
                        ..Witness::default()
                    });
                }
            }
            let generic = schutz_group(t, &gt, h);
            let product = schutz_group(&m_sg, &gm, gm.h_class()[i]).direct_product(&schutz_group(self.base(), &gs, s_h));
            if schutz_bad.is_none() && generic != product {
                schutz_bad = Some(Witness {
                    elements: vec![x],
                    labels: vec![self.label(x)],
                    note: format!("generic {generic:?}, product {product:?}"),
                    ..Witness::default()
                });
            }
        }
        let n = reps.len() as u64;
        Ok(vec![
            VerificationReport::new("group-h", group_bad).with_counts(n, 0),
            VerificationReport::new("schutzenberger", schutz_bad).with_counts(n, 0),
        ])
    }
}
