//! Biordered set of a tight product compared with `E(M) × E(S)`.

use std::collections::HashMap;

use crate::monoid::MElem;
use crate::report::{VerificationReport, Witness};
use crate::semigroup::{biordered_set, Element};

use super::{ProductError, TwistedElement, TwistedProduct};

impl<T: Element> TwistedProduct<T> {
    /// Four checks over all pairs of idempotents:
    /// `biorder-arrows` (`ε(i,e) →_l ε(j,f)` iff `i = i+j` and `e →_l f`,
    /// dually for `→_r`), `biorder-basic` (`ε(i,e)ε(j,f) = ε(i+j, ef)` on
    /// basic pairs), `biorder-onto` (the pair map is onto exactly under the
    /// unit-or-untwisted criterion), and, when `M` is a group,
    /// `biorder-group` (projection to `E(S)` is an isomorphism).
    pub fn crosscheck_biorder(&self) -> Result<Vec<VerificationReport>, ProductError> {
        self.require_tight()?;
        let t = self.finite()?;
        let s = self.base();
        let omega = self.omega_idempotents()?;
        let bt = biordered_set(t);
        let bs = biordered_set(s.as_ref());

        let mut by_pair: HashMap<(MElem, usize), usize> = HashMap::new();
        let mut pairs: Vec<(MElem, usize, usize)> = Vec::new();
        for entry in &omega.entries {
            let x = self
                .index_of(&TwistedElement { m: entry.p.clone(), a: entry.e })
                .expect("resolved idempotent lies in T");
            by_pair.insert((entry.i.clone(), entry.e), x);
            pairs.push((entry.i.clone(), entry.e, x));
        }

        let witness2 = |x: usize, y: usize, note: String| Witness {
            elements: vec![x, y],
            labels: vec![self.label(x), self.label(y)],
            note,
            ..Witness::default()
        };
        let mut arrows_bad = None;
        let mut basic_bad = None;
        let mut checked = 0u64;
        'outer: for (i, e, x) in &pairs {
            for (j, f, y) in &pairs {
                checked += 1;
                let i_below_j = &self.m.add(i, j)? == i;
                let left = bt.left(*x, *y) == (i_below_j && bs.left(*e, *f));
                let right = bt.right(*x, *y) == (i_below_j && bs.right(*e, *f));
                if arrows_bad.is_none() && !(left && right) {
                    arrows_bad = Some(witness2(*x, *y, "arrow relation differs from the componentwise one".into()));
                }
                if bt.is_basic(*x, *y) && basic_bad.is_none() {
                    let sum = self.m.add(i, j)?;
                    let ef = s.mul(*e, *f);
                    let expect = by_pair.get(&(sum.clone(), ef)).copied();
                    if expect != bt.product(*x, *y) {
                        basic_bad = Some(witness2(
                            *x,
                            *y,
                            format!(
                                "basic product is {}, expected the idempotent over ({}, {})",
                                self.label(bt.product(*x, *y).expect("basic")),
                                self.m.label(&sum),
                                s.element(ef)
                            ),
                        ));
                    }
                }
                if arrows_bad.is_some() && basic_bad.is_some() {
                    break 'outer;
                }
            }
        }
        let mut reports = vec![
            VerificationReport::new("biorder-arrows", arrows_bad).with_counts(checked, 0),
            VerificationReport::new("biorder-basic", basic_bad).with_counts(checked, 0),
        ];

        let predicted_onto = self.m.is_unit(&self.q)?
            || s.idempotents().iter().all(|&e| self.phi.value(e, e) == 0);
        let onto_bad = (predicted_onto != omega.is_onto()).then(|| Witness {
            note: format!(
                "{} of {} idempotent pairs reached, criterion predicts onto = {predicted_onto}",
                omega.entries.len(),
                omega.candidates
            ),
            ..Witness::default()
        });
        reports.push(VerificationReport::new("biorder-onto", onto_bad));

        if self.m.is_group() {
            reports.push(self.group_biorder_iso(&pairs, &bt, &bs));
        }
        Ok(reports)
    }

    /// With `M` a group, `ε(0,e) ↦ e` is a bijection `E(T) → E(S)`
    /// preserving both arrows and basic products.
    fn group_biorder_iso(
        &self,
        pairs: &[(MElem, usize, usize)],
        bt: &crate::semigroup::BiorderTable,
        bs: &crate::semigroup::BiorderTable,
    ) -> VerificationReport {
        let s = self.base();
        let to_s: HashMap<usize, usize> = pairs.iter().map(|(_, e, x)| (*x, *e)).collect();
        let bijective = to_s.len() == bt.idempotents.len() && pairs.len() == bs.idempotents.len();
        let mut bad = (!bijective).then(|| Witness {
            note: format!("{} idempotents in T, {} in S", bt.idempotents.len(), bs.idempotents.len()),
            ..Witness::default()
        });
        for &x in &bt.idempotents {
            for &y in &bt.idempotents {
                if bad.is_some() {
                    break;
                }
                let (e, f) = (to_s[&x], to_s[&y]);
                let same = bt.left(x, y) == bs.left(e, f)
                    && bt.right(x, y) == bs.right(e, f)
                    && bt.is_basic(x, y) == bs.is_basic(e, f)
                    && bt.product(x, y).map(|z| to_s[&z]) == bs.product(e, f);
                if !same {
                    bad = Some(Witness {
                        elements: vec![x, y],
                        labels: vec![self.label(x), self.label(y)],
                        note: format!("differs from ({}, {}) in E(S)", s.element(e), s.element(f)),
                        ..Witness::default()
                    });
                }
            }
        }
        VerificationReport::new("biorder-group", bad)
    }
}

#[cfg(test)]
mod tests {
    use crate::diagram::DiagramFamily;
    use crate::monoid::{CommMonoid, MElem};
    use crate::product::TwistedProduct;
    use crate::twisting::Twisting;

    #[test]
    fn biorder_checks_pass_on_tight_products() {
        let phi = Twisting::canonical_family(DiagramFamily::P, 2).unwrap();
        for (m, q) in [(CommMonoid::ZeroInf, MElem::Inf), (CommMonoid::ZMod(2), MElem::Num(1))] {
            let t = TwistedProduct::new(m, phi.clone(), q).unwrap();
            for r in t.crosscheck_biorder().unwrap() {
                assert!(r.pass, "{r}");
            }
        }
    }
}
