//! Regular elements and D-classes of a tight product.

use serde::{Deserialize, Serialize};

use crate::monoid::{CommMonoid, MElem};
use crate::report::{VerificationReport, Witness};
use crate::semigroup::{Element, GreenStructure};

use super::{ProductError, TwistedProduct};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularPrediction {
    /// `Φ(D)` per D-class of the base (Green ids), the least `Φ(e,e)` over
    /// its idempotents; `None` for D-classes without idempotents.
    pub phi_d: Vec<Option<u32>>,
    /// Predicted regularity per product element (finite `M` only).
    pub regular: Option<Vec<bool>>,
    /// Regular D-classes as (first element of the `H^M`-class, base D id).
    pub regular_d: Option<Vec<(MElem, usize)>>,
    pub is_regular: bool,
}

impl<T: Element> TwistedProduct<T> {
    fn m_is_regular(&self, i: &MElem) -> Result<bool, ProductError> {
        Ok(self.m.h_class(i)?.is_group)
    }

    fn m_regular_monoid(&self) -> Result<bool, ProductError> {
        match self.m {
            CommMonoid::Nat => Ok(false),
            CommMonoid::Int => Ok(true),
            _ => {
                for x in &self.m_elements {
                    if !self.m_is_regular(x)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// `(i,a)` is regular iff `i` and `a` are and `i ≤_J Φ(D_a)q`; the
    /// product is regular iff `M` and `S` are and `q` is a unit or every
    /// `Φ(D)` is zero.
    pub fn predict_regular(&self) -> Result<RegularPrediction, ProductError> {
        self.require_tight()?;
        let gs = self.s_green()?;
        let mut phi_d: Vec<Option<u32>> = vec![None; gs.d_count()];
        for e in gs.idempotents() {
            let d = gs.d_class()[e];
            let v = self.phi.value(e, e);
            phi_d[d] = Some(phi_d[d].map_or(v, |old| old.min(v)));
        }
        let s_regular = phi_d.iter().all(Option::is_some);
        let all_zero = phi_d.iter().flatten().all(|&v| v == 0);
        let is_regular = self.m_regular_monoid()? && s_regular && (self.m.is_unit(&self.q)? || all_zero);

        let (regular, regular_d) = if self.m.is_finite() {
            let mut cache = Vec::with_capacity(self.m_elements.len() * gs.d_count());
            for i in &self.m_elements {
                let reg_i = self.m_is_regular(i)?;
                for phi in &phi_d {
                    let ok = match phi {
                        Some(v) if reg_i => self.m.leq_j(i, &self.m.scalar(u64::from(*v), &self.q)?)?,
                        _ => false,
                    };
                    cache.push(ok);
                }
            }
            let dn = gs.d_count();
            let n = self.phi.len();
            let regular: Vec<bool> = (0..self.m_elements.len() * n)
                .map(|x| {
                    let (i, a) = self.split(x);
                    cache[i * dn + gs.d_class()[a]]
                })
                .collect();
            let gm = self.m_green()?;
            let mut regular_d = Vec::new();
            for h in GreenStructure::members(gm.h_class()) {
                for d in 0..dn {
                    if cache[h[0] * dn + d] {
                        regular_d.push((self.m_elements[h[0]].clone(), d));
                    }
                }
            }
            (Some(regular), Some(regular_d))
        } else {
            (None, None)
        };
        Ok(RegularPrediction {
            phi_d,
            regular,
            regular_d,
            is_regular,
        })
    }

    /// Predicted `Reg(T)` and regularity of `T` against the generic engine.
    pub fn crosscheck_regular(&self) -> Result<Vec<VerificationReport>, ProductError> {
        let g = self.generic_green()?;
        let p = self.predict_regular()?;
        let predicted = p.regular.expect("finite M");
        let bad = (0..g.size()).find(|&x| g.is_regular(x) != predicted[x]).map(|x| Witness {
            elements: vec![x],
            labels: vec![self.label(x)],
            note: format!("generic regular: {}, predicted: {}", g.is_regular(x), predicted[x]),
            ..Witness::default()
        });
        let whole = (g.is_regular_semigroup() != p.is_regular).then(|| Witness {
            note: format!("generic regular: {}, predicted: {}", g.is_regular_semigroup(), p.is_regular),
            ..Witness::default()
        });
        Ok(vec![
            VerificationReport::new("regular-elements", bad).with_counts(g.size() as u64, 0),
            VerificationReport::new("regular-semigroup", whole),
        ])
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::DiagramFamily;
    use crate::monoid::{CommMonoid, MElem};
    use crate::product::TwistedProduct;
    use crate::twisting::Twisting;

    #[test]
    fn zeroinf_p2_regularity() {
        let phi = Twisting::canonical_family(DiagramFamily::P, 2).unwrap();
        let t = TwistedProduct::new(CommMonoid::ZeroInf, phi, MElem::Inf).unwrap();
        let p = t.predict_regular().unwrap();
        let mut values: Vec<u32> = p.phi_d.iter().map(|v| v.unwrap()).collect();
        values.sort();
        assert_eq!(values, vec![0, 0, 1]);
        assert!(!p.is_regular);
        assert_eq!(p.regular_d.unwrap().len(), 5);
        assert!(t.crosscheck_regular().unwrap().iter().all(|r| r.pass));
    }
}
