//! Green's relations of a product from those of `M` and `S`, plus the
//! stability transfer and the basic monoid laws of the product.

use crate::report::{VerificationReport, Witness};
use crate::semigroup::{green_structure, is_stable, Element, GreenStructure};

use super::{ProductError, TwistedProduct};

/// Raw per-element class labels assembled componentwise.
struct FormulaClasses {
    r: Vec<usize>,
    l: Vec<usize>,
    h: Vec<usize>,
    j: Vec<usize>,
    d: Vec<usize>,
}

impl<T: Element> TwistedProduct<T> {
    pub(crate) fn m_green(&self) -> Result<GreenStructure, ProductError> {
        Ok(green_structure(&self.m_semigroup()?)?)
    }

    pub(crate) fn s_green(&self) -> Result<GreenStructure, ProductError> {
        Ok(green_structure(self.base())?)
    }

    fn formula_classes(&self, gm: &GreenStructure, gs: &GreenStructure) -> FormulaClasses {
        let (k, n) = (self.m_elements.len(), self.phi.len());
        let pair = |mc: usize, sc: usize, count: usize| mc * count + sc;
        let mut out = FormulaClasses {
            r: Vec::with_capacity(k * n),
            l: Vec::with_capacity(k * n),
            h: Vec::with_capacity(k * n),
            j: Vec::with_capacity(k * n),
            d: Vec::with_capacity(k * n),
        };
        for i in 0..k {
            // M is commutative, so all its relations coincide with H = J
            let mc = gm.j_class()[i];
            for a in 0..n {
                out.r.push(pair(mc, gs.r_class()[a], gs.r_count()));
                out.l.push(pair(mc, gs.l_class()[a], gs.l_count()));
                out.h.push(pair(mc, gs.h_class()[a], gs.h_count()));
                out.j.push(pair(mc, gs.j_class()[a], gs.j_count()));
                out.d.push(pair(mc, gs.d_class()[a], gs.d_count()));
            }
        }
        out
    }

    fn assemble(
        &self,
        gm: &GreenStructure,
        gs: &GreenStructure,
        idempotent: Vec<bool>,
        regular: Vec<bool>,
    ) -> GreenStructure {
        let c = self.formula_classes(gm, gs);
        let sj = gs.j_count();
        let j_leq = |lower: usize, upper: usize| {
            gm.j_leq(lower / sj, upper / sj) && gs.j_leq(lower % sj, upper % sj)
        };
        GreenStructure::from_parts(&c.r, &c.l, &c.h, &c.j, &c.d, j_leq, idempotent, regular)
    }

    /// Green's structure assembled from `M` and `S`: each class is a product
    /// of an `H^M`-class with the matching class of `S`, and the J-order is
    /// the product order. Idempotent and regular flags come from the
    /// idempotent and regularity predictors.
    pub fn predict_green(&self) -> Result<GreenStructure, ProductError> {
        self.require_tight()?;
        self.finite()?;
        let gm = self.m_green()?;
        let gs = self.s_green()?;
        let omega = self.omega_idempotents()?;
        let mut idempotent = vec![false; self.m_elements.len() * self.phi.len()];
        for entry in &omega.entries {
            let x = self.index(self.m.index_of(&entry.p).expect("p lies in M"), entry.e);
            idempotent[x] = true;
        }
        let regular = self.predict_regular()?.regular.expect("finite M");
        Ok(self.assemble(&gm, &gs, idempotent, regular))
    }

    /// Compares the predicted structure with the generic computation. For a
    /// loose twisting only the class partitions and J-order given by the
    /// product formula are compared, and a mismatch is the expected outcome.
    pub fn crosscheck_green(&self) -> Result<VerificationReport, ProductError> {
        let generic = self.generic_green()?;
        let size = generic.size() as u64;
        let (check, predicted, compare_flags) = if self.is_tight() {
            ("green-product", self.predict_green()?, true)
        } else {
            let gm = self.m_green()?;
            let gs = self.s_green()?;
            let formula = self.assemble(
                &gm,
                &gs,
                generic.idempotent_flags().to_vec(),
                generic.regular_flags().to_vec(),
            );
            ("green-product-formula", formula, false)
        };
        let witness = self.green_mismatch(&generic, &predicted, compare_flags);
        Ok(VerificationReport::new(check, witness).with_counts(size * size, 0))
    }

    fn green_mismatch(
        &self,
        generic: &GreenStructure,
        predicted: &GreenStructure,
        compare_flags: bool,
    ) -> Option<Witness> {
        let relations: [(&str, &[usize], &[usize]); 5] = [
            ("R", generic.r_class(), predicted.r_class()),
            ("L", generic.l_class(), predicted.l_class()),
            ("H", generic.h_class(), predicted.h_class()),
            ("D", generic.d_class(), predicted.d_class()),
            ("J", generic.j_class(), predicted.j_class()),
        ];
        for (name, gen, pred) in relations {
            if let Some(x) = (0..gen.len()).find(|&x| gen[x] != pred[x]) {
                let y = (0..x)
                    .find(|&y| (gen[y] == gen[x]) != (pred[y] == pred[x]))
                    .unwrap_or(x);
                let related = gen[y] == gen[x];
                return Some(Witness {
                    elements: vec![y, x],
                    labels: vec![self.label(y), self.label(x)],
                    note: format!(
                        "{name}-related {} but predicted {}",
                        if related { "generically" } else { "not generically" },
                        if related { "unrelated" } else { "related" }
                    ),
                    ..Witness::default()
                });
            }
        }
        let k = generic.j_count();
        let reps = GreenStructure::members(generic.j_class());
        for lower in 0..k {
            for upper in 0..k {
                if generic.j_leq(lower, upper) != predicted.j_leq(lower, upper) {
                    let (x, y) = (reps[lower][0], reps[upper][0]);
                    return Some(Witness {
                        elements: vec![x, y],
                        labels: vec![self.label(x), self.label(y)],
                        note: format!(
                            "J-order: generic says {}, prediction says {}",
                            generic.j_leq(lower, upper),
                            predicted.j_leq(lower, upper)
                        ),
                        ..Witness::default()
                    });
                }
            }
        }
        if compare_flags {
            let flags = [
                ("idempotent", generic.idempotent_flags(), predicted.idempotent_flags()),
                ("regular", generic.regular_flags(), predicted.regular_flags()),
            ];
            for (name, gen, pred) in flags {
                if let Some(x) = (0..gen.len()).find(|&x| gen[x] != pred[x]) {
                    return Some(Witness {
                        elements: vec![x],
                        labels: vec![self.label(x)],
                        note: format!("{name}: generic {}, predicted {}", gen[x], pred[x]),
                        ..Witness::default()
                    });
                }
            }
        }
        None
    }

    /// The product is stable exactly when `S` is.
    pub fn check_stability_transfer(&self) -> Result<VerificationReport, ProductError> {
        let t = self.finite()?;
        let gt = self.generic_green()?;
        let stable_t = is_stable(t, &gt);
        if !self.is_tight() {
            return Ok(VerificationReport::skipped(
                "stability-transfer",
                format!("predictor skipped, twisting is loose; product stable: {}", stable_t.stable),
            ));
        }
        let stable_s = is_stable(self.base(), &self.s_green()?);
        let witness = (stable_t.stable != stable_s.stable).then(|| {
            let mut w = Witness {
                note: format!("product stable: {}, base stable: {}", stable_t.stable, stable_s.stable),
                ..Witness::default()
            };
            if let Some((a, b)) = stable_t.witness {
                w.elements = vec![a, b];
                w.labels = vec![self.label(a), self.label(b)];
            }
            w
        });
        let n = t.len() as u64;
        Ok(VerificationReport::new("stability-transfer", witness).with_counts(n * n, 0))
    }

    /// Exhaustive checks that `(0,1)` is the identity, `M×{1}` is a copy of
    /// `M`, `{w}×S` is closed whenever `2w = w = w + q`, and
    /// `(i,a) = (i,1)(0,a)`.
    pub fn verify_product_laws(&self) -> Result<Vec<VerificationReport>, ProductError> {
        let t = self.finite()?;
        let (k, n) = (self.m_elements.len(), self.phi.len());
        let zero = self.m.index_of(&self.m.zero()).expect("0 lies in M");
        let pair_witness = |x: usize, y: usize, note: &str| Witness {
            elements: vec![x, y],
            labels: vec![self.label(x), self.label(y)],
            note: note.to_string(),
            ..Witness::default()
        };
        let mut reports = Vec::new();

        let Some(one) = self.identity().map(|e| e.a) else {
            for check in ["identity", "m-submonoid", "generated"] {
                reports.push(VerificationReport::skipped(check, "(0,1) is not an identity"));
            }
            reports.push(self.idempotent_fibres()?);
            return Ok(reports);
        };
        let e = self.index(zero, one);
        let bad = (0..t.len()).find(|&x| t.mul(e, x) != x || t.mul(x, e) != x);
        reports.push(
            VerificationReport::new("identity", bad.map(|x| pair_witness(e, x, "(0,1) does not fix this element")))
                .with_counts(t.len() as u64, 0),
        );

        let mut bad = None;
        'm: for i in 0..k {
            for j in 0..k {
                let sum = self.m.add(&self.m_elements[i], &self.m_elements[j])?;
                let expect = self.index(self.m.index_of(&sum).expect("closed"), one);
                if t.mul(self.index(i, one), self.index(j, one)) != expect {
                    bad = Some(pair_witness(self.index(i, one), self.index(j, one), "product leaves M×{1}"));
                    break 'm;
                }
            }
        }
        reports.push(VerificationReport::new("m-submonoid", bad).with_counts((k * k) as u64, 0));

        let mut bad = None;
        'g: for i in 0..k {
            for a in 0..n {
                if t.mul(self.index(i, one), self.index(zero, a)) != self.index(i, a) {
                    bad = Some(pair_witness(self.index(i, one), self.index(zero, a), "(i,1)(0,a) differs from (i,a)"));
                    break 'g;
                }
            }
        }
        reports.push(VerificationReport::new("generated", bad).with_counts((k * n) as u64, 0));
        reports.push(self.idempotent_fibres()?);
        Ok(reports)
    }

    /// `{w}×S` is closed for every `w` with `2w = w = w + q`.
    fn idempotent_fibres(&self) -> Result<VerificationReport, ProductError> {
        let t = self.finite()?;
        let n = self.phi.len();
        let mut bad = None;
        let mut pairs = 0u64;
        'w: for (wi, w) in self.m_elements.iter().enumerate() {
            if &self.m.add(w, w)? != w || &self.m.add(w, &self.q)? != w {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    pairs += 1;
                    let (x, y) = (self.index(wi, a), self.index(wi, b));
                    if self.split(t.mul(x, y)).0 != wi {
                        bad = Some(Witness {
                            elements: vec![x, y],
                            labels: vec![self.label(x), self.label(y)],
                            note: "product leaves the fibre".to_string(),
                            ..Witness::default()
                        });
                        break 'w;
                    }
                }
            }
        }
        Ok(VerificationReport::new("fibre-submonoid", bad).with_counts(pairs, 0))
    }
}
