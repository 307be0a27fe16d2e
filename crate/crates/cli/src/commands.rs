//! Subcommand implementations. Each returns `Ok(true)` when every check
//! it ran passed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use twistkit_core::diagram::{enumerate_family, Partition};
use twistkit_core::eggbox::{layout, Format, Tint};
use twistkit_core::equivalence::Equivalence;
use twistkit_core::matrix::Matrix;
use twistkit_core::monoid::{CommMonoid, MElem};
use twistkit_core::product::{ig_closure_windowed, ProductError, TwistedProduct, WindowVerdict};
use twistkit_core::report::VerificationReport;
use twistkit_core::semigroup::{green_structure, is_stable, schutz_group, Element, FiniteSemigroup, GreenStructure};
use twistkit_core::transform::{MapFamily, PartialMap};
use twistkit_core::twisting::{diagram_semigroup, Ranked, Twisting};

use crate::cache::{Cache, Payload};
use crate::error::CliError;
use crate::spec::{BaseSpec, ProductSpec, TwistSpec};

/// Largest base monoid the CLI builds.
pub const BASE_BOUND: usize = 5_000;

pub enum AnyTwisting {
    Diagram(Twisting<Partition>),
    Maps(Twisting<PartialMap>),
    Matrices(Twisting<Matrix>),
    Eq(Twisting<Equivalence>),
}

macro_rules! with_twisting {
    ($any:expr, $t:ident => $body:expr) => {
        match $any {
            AnyTwisting::Diagram($t) => $body,
            AnyTwisting::Maps($t) => $body,
            AnyTwisting::Matrices($t) => $body,
            AnyTwisting::Eq($t) => $body,
        }
    };
}

fn bounded<T: Element>(els: Vec<T>, what: &BaseSpec) -> Result<Vec<T>, CliError> {
    if els.len() > BASE_BOUND {
        return Err(CliError::Bound(format!(
            "{what} has {} elements, above the bound {BASE_BOUND}",
            els.len()
        )));
    }
    Ok(els)
}

fn map_elements(n: usize, base: &BaseSpec) -> Result<Vec<PartialMap>, CliError> {
    // (n+1)^n partial maps: degree 5 is already 7776
    if n > 4 {
        return Err(CliError::Bound(format!("{base} is above the bound {BASE_BOUND}")));
    }
    Ok(PartialMap::enumerate(MapFamily::PT, n)?)
}

fn eq_elements(n: usize, base: &BaseSpec) -> Result<Vec<Equivalence>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("Eq needs n ≥ 1".into()));
    }
    // Bell(9) = 21147
    if n > 8 {
        return Err(CliError::Bound(format!("{base} is above the bound {BASE_BOUND}")));
    }
    bounded(Equivalence::enumerate(n), base)
}

fn semigroup<T: Element>(els: Vec<T>, mul: impl Fn(&T, &T) -> T + Sync) -> Result<Arc<FiniteSemigroup<T>>, CliError> {
    Ok(Arc::new(FiniteSemigroup::build(els, mul, true)?))
}

fn with_star<T: Element>(t: Twisting<T>, star: Option<fn(&T) -> T>) -> Twisting<T> {
    match star {
        Some(f) => t.clone().with_involution(f).unwrap_or(t),
        None => t,
    }
}

fn twisting_on<T: Element + Ranked>(
    base: Arc<FiniteSemigroup<T>>,
    spec: &TwistSpec,
    canonical: Option<fn(Arc<FiniteSemigroup<T>>) -> Twisting<T>>,
    star: Option<fn(&T) -> T>,
) -> Result<Twisting<T>, CliError> {
    Ok(match spec {
        TwistSpec::Canonical => {
            let c = canonical.ok_or_else(|| CliError::Usage("the canonical twisting needs a diagram family".into()))?;
            c(base)
        }
        TwistSpec::Rank => with_star(Twisting::rank_based(base)?, star),
        TwistSpec::Trivial => with_star(Twisting::trivial(base), star),
        TwistSpec::Shift(k, inner) => twisting_on(base, inner, canonical, star)?.shifted(*k),
    })
}

fn equivalence_star(e: &Equivalence) -> Equivalence {
    e.clone()
}

pub fn build_twisting(base: &BaseSpec, spec: &TwistSpec) -> Result<AnyTwisting, CliError> {
    Ok(match *base {
        BaseSpec::Diagram(f, n) => {
            let s = Arc::new(diagram_semigroup(f, n)?);
            AnyTwisting::Diagram(twisting_on(s, spec, Some(Twisting::canonical), Some(Partition::star))?)
        }
        BaseSpec::PartialMaps(n) => {
            let s = semigroup(map_elements(n, base)?, PartialMap::then)?;
            AnyTwisting::Maps(twisting_on(s, spec, None, None)?)
        }
        BaseSpec::Matrices { n, p } => {
            let els = Matrix::enumerate_with_bound(n, p, BASE_BOUND as u64)?;
            let s = semigroup(els, Matrix::mul)?;
            AnyTwisting::Matrices(twisting_on(s, spec, None, Some(Matrix::transpose))?)
        }
        BaseSpec::Eq(n) => {
            let s = semigroup(eq_elements(n, base)?, Equivalence::join)?;
            AnyTwisting::Eq(twisting_on(s, spec, None, Some(equivalence_star))?)
        }
    })
}

/// Green's structure of `s`, through the cache. A cached entry is used only
/// when its table matches `s` exactly.
fn cached_green<T>(cache: &Cache, key: &str, s: &FiniteSemigroup<T>) -> Result<GreenStructure, CliError> {
    if let Some(p) = cache.load(key) {
        if p.table == s.table() && p.green.size() == s.len() {
            return Ok(p.green);
        }
        eprintln!("warning: cache entry for {key:?} does not match, recomputing");
    }
    let green = green_structure(s)?;
    cache.store(
        key,
        &Payload {
            table: s.table().to_vec(),
            green: green.clone(),
        },
    );
    Ok(green)
}

fn print_reports(reports: &[VerificationReport]) -> bool {
    for r in reports {
        println!("{r}");
    }
    reports.iter().all(|r| r.pass)
}

pub fn enumerate(base: &BaseSpec, json: bool) -> Result<bool, CliError> {
    fn emit<T: serde::Serialize + std::fmt::Display>(base: &BaseSpec, els: &[T], json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(els).expect("elements serialize"));
        } else {
            println!("# {base}: {} elements", els.len());
            for x in els {
                println!("{x}");
            }
        }
    }
    match *base {
        BaseSpec::Diagram(f, n) => emit(base, &enumerate_family(f, n)?, json),
        BaseSpec::PartialMaps(n) => emit(base, &map_elements(n, base)?, json),
        BaseSpec::Matrices { n, p } => emit(base, &Matrix::enumerate_with_bound(n, p, BASE_BOUND as u64)?, json),
        BaseSpec::Eq(n) => emit(base, &eq_elements(n, base)?, json),
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Cocycle,
    Tight,
    Star,
    Consequences,
}

impl std::str::FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cocycle" => Ok(Check::Cocycle),
            "tight" => Ok(Check::Tight),
            "star" => Ok(Check::Star),
            "consequences" => Ok(Check::Consequences),
            other => Err(format!("unknown check {other:?} (expected cocycle, tight, star or consequences)")),
        }
    }
}

pub fn verify(base: &BaseSpec, twisting: &TwistSpec, checks: &[Check], json: bool) -> Result<bool, CliError> {
    let any = build_twisting(base, twisting)?;
    let mut reports = Vec::new();
    let mut lines = Vec::new();
    with_twisting!(&any, phi => {
        for check in checks {
            match check {
                Check::Cocycle => {
                    let r = phi.verify_cocycle();
                    lines.push(r.to_string());
                    reports.push(r);
                }
                Check::Tight => {
                    let (l, r) = phi.verify_tight();
                    lines.push(format!("tight: {}/{}", l.status(), r.status()));
                    for x in [&l, &r].into_iter().filter(|x| !x.pass) {
                        lines.push(x.to_string());
                    }
                    reports.extend([l, r]);
                }
                Check::Star => match phi.verify_star_symmetry() {
                    Ok(r) => {
                        lines.push(r.to_string());
                        reports.push(r);
                    }
                    Err(e) => {
                        let r = VerificationReport::skipped("star-symmetric", e.to_string());
                        lines.push(r.to_string());
                        reports.push(r);
                    }
                },
                Check::Consequences => {
                    for r in phi.verify_consequences() {
                        lines.push(r.to_string());
                        reports.push(r);
                    }
                }
            }
        }
    });
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    } else {
        println!("# {base}, twisting {twisting}");
        for l in lines {
            println!("{l}");
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sections {
    pub green: bool,
    pub idempotents: bool,
    pub regular: bool,
    pub schutz: bool,
    pub biorder: bool,
    pub stability: bool,
}

impl Sections {
    fn any(&self) -> bool {
        self.green || self.idempotents || self.regular || self.schutz || self.biorder || self.stability
    }

    fn all() -> Self {
        Sections {
            green: true,
            idempotents: true,
            regular: true,
            schutz: true,
            biorder: true,
            stability: true,
        }
    }
}

fn build_product<T: Element>(phi: &Twisting<T>, spec: &ProductSpec) -> Result<(CommMonoid, TwistedProduct<T>), CliError> {
    let m = spec.monoid.build()?;
    let q = m.parse_elem(&spec.q).map_err(|e| CliError::Usage(e.to_string()))?;
    let t = TwistedProduct::new(m.clone(), phi.clone(), q)?;
    Ok((m, t))
}

fn green_key(spec: &ProductSpec, m: &CommMonoid) -> String {
    format!("green|{spec}|{}", serde_json::to_string(m).expect("monoid serializes"))
}

/// Runs `f`, turning the loose-twisting error into a skipped line.
fn predictor<R>(section: &str, r: Result<R, ProductError>) -> Result<Option<R>, CliError> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(ProductError::Loose(name)) => {
            println!("{section}: skipped, twisting {name} is loose");
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn product(spec: &ProductSpec, sections: Sections, crosscheck: bool, cache: &Cache) -> Result<bool, CliError> {
    let any = build_twisting(&spec.base, &spec.twisting)?;
    with_twisting!(&any, phi => product_on(phi, spec, sections, crosscheck, cache))
}

fn product_on<T: Element>(
    phi: &Twisting<T>,
    spec: &ProductSpec,
    mut sections: Sections,
    crosscheck: bool,
    cache: &Cache,
) -> Result<bool, CliError> {
    let (m, t) = build_product(phi, spec)?;
    println!("product: {spec}");
    println!("base: {} elements", phi.len());
    println!("twisting: {} ({:?})", phi.name(), t.tightness());
    match t.semigroup() {
        Some(s) => println!("size: {}", s.len()),
        None => println!("size: infinite"),
    }
    if crosscheck && !sections.any() {
        sections = Sections::all();
    }
    let finite = t.semigroup().is_some();
    let need_finite = |section: &str| -> Result<(), CliError> {
        if finite {
            Ok(())
        } else {
            Err(CliError::Usage(format!("--{section} needs a finite monoid, got {m}")))
        }
    };
    let green = if finite && (sections.green || sections.schutz || sections.stability) {
        Some(cached_green(cache, &green_key(spec, &m), t.finite()?)?)
    } else {
        None
    };
    let mut ok = true;

    if sections.green {
        need_finite("green")?;
        let g = green.as_ref().expect("computed above");
        println!(
            "green: {} R, {} L, {} H, {} D, {} J; {} J-covers; regular: {}",
            g.r_count(),
            g.l_count(),
            g.h_count(),
            g.d_count(),
            g.j_count(),
            g.j_covers().len(),
            g.is_regular_semigroup()
        );
        if crosscheck {
            ok &= print_reports(&[t.crosscheck_green()?]);
        }
    }
    if sections.idempotents {
        if let Some(omega) = predictor("idempotents", t.omega_idempotents())? {
            println!(
                "idempotents: {} of {} index pairs, onto: {}",
                omega.entries.len(),
                omega.candidates,
                omega.is_onto()
            );
            for x in omega.resolved() {
                println!("  {}", t.label_elem(&x));
            }
            if crosscheck {
                need_finite("idempotents --crosscheck")?;
                ok &= print_reports(&t.crosscheck_idempotents()?);
            }
        }
    }
    if sections.regular {
        if let Some(p) = predictor("regular", t.predict_regular())? {
            let values: Vec<String> = p.phi_d.iter().map(|v| v.map_or("-".to_string(), |v| v.to_string())).collect();
            println!("regular: {}; base D-class twists [{}]", p.is_regular, values.join(", "));
            if let Some(d) = &p.regular_d {
                println!("regular D-classes: {}", d.len());
            }
            if crosscheck {
                need_finite("regular --crosscheck")?;
                ok &= print_reports(&t.crosscheck_regular()?);
            }
        }
    }
    if sections.schutz {
        need_finite("schutz")?;
        let s = t.finite()?;
        let g = green.as_ref().expect("computed above");
        for (d, members) in GreenStructure::members(g.d_class()).iter().enumerate() {
            if let Some(&x) = members.iter().find(|&&x| g.is_group_h(g.h_class()[x])) {
                let gs = schutz_group(s, g, g.h_class()[x]);
                let orders: Vec<String> = gs.element_orders.iter().map(|(o, c)| format!("{o}:{c}")).collect();
                println!(
                    "D{d}: group of order {}, abelian: {}, element orders {{{}}}",
                    gs.order,
                    gs.is_abelian,
                    orders.join(", ")
                );
            }
        }
        if crosscheck {
            if let Some(reports) = predictor("schutz", t.crosscheck_schutzenberger())? {
                ok &= print_reports(&reports);
            }
        }
    }
    if sections.biorder {
        need_finite("biorder")?;
        let count = t.finite()?.idempotents().len();
        println!("biorder: {count} idempotents");
        if crosscheck {
            if let Some(reports) = predictor("biorder", t.crosscheck_biorder())? {
                ok &= print_reports(&reports);
            }
        }
    }
    if sections.stability {
        need_finite("stability")?;
        let g = green.as_ref().expect("computed above");
        println!("stable: {}", is_stable(t.finite()?, g).stable);
        if crosscheck {
            ok &= print_reports(&[t.check_stability_transfer()?]);
        }
    }
    if crosscheck && sections.green && sections.stability {
        ok &= print_reports(&t.verify_product_laws()?);
    }
    Ok(ok)
}

pub enum EggSource {
    Spec(ProductSpec),
    Base(BaseSpec),
}

pub fn eggbox(source: &EggSource, format: Format, out: Option<&PathBuf>, cache: &Cache) -> Result<bool, CliError> {
    let text = match source {
        EggSource::Spec(spec) => {
            let any = build_twisting(&spec.base, &spec.twisting)?;
            with_twisting!(&any, phi => {
                let (m, t) = build_product(phi, spec)?;
                let g = cached_green(cache, &green_key(spec, &m), t.finite()?)?;
                layout(&g, |x| t.label(x), Some(|x| t.tint(x))).render(format)
            })
        }
        EggSource::Base(base) => {
            let any = build_twisting(base, &TwistSpec::Trivial)?;
            with_twisting!(&any, phi => {
                let s = phi.base();
                let g = cached_green(cache, &format!("green|base|{base}"), s)?;
                layout(&g, |x| s.element(x).to_string(), None::<fn(usize) -> Tint>).render(format)
            })
        }
    };
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

pub fn ig(spec: &ProductSpec, window: Option<i64>, list: bool) -> Result<bool, CliError> {
    let any = build_twisting(&spec.base, &spec.twisting)?;
    with_twisting!(&any, phi => ig_on(phi, spec, window, list))
}

fn ig_on<T: Element + Ranked>(phi: &Twisting<T>, spec: &ProductSpec, window: Option<i64>, list: bool) -> Result<bool, CliError> {
    let m = spec.monoid.build()?;
    if let Some(k) = window {
        let q = m.parse_elem(&spec.q).map_err(|e| CliError::Usage(e.to_string()))?;
        if q != MElem::Num(1) {
            return Err(CliError::Usage("windowed closures use q = 1".into()));
        }
        let w = ig_closure_windowed(phi, &m, k)?;
        println!("product: {spec}");
        println!("window: [{}, {k}], computed with margin {}", if m == CommMonoid::Nat { 0 } else { -k }, w.margin);
        println!("generated in window: {}, predicted: {}", w.inner_count, w.predicted_count);
        let mut out = String::new();
        if list {
            for (i, a) in &w.elements {
                let _ = writeln!(out, "  ({i}, {})", phi.base().element(*a));
            }
        }
        print!("{out}");
        return Ok(match &w.verdict {
            WindowVerdict::Confirmed => {
                println!("verdict: confirmed");
                true
            }
            WindowVerdict::Inconclusive { missing } => {
                println!("verdict: inconclusive, {} predicted elements not reached", missing.len());
                true
            }
            WindowVerdict::Refuted { note, .. } => {
                println!("verdict: refuted, {note}");
                false
            }
        });
    }
    let (_, t) = build_product(phi, spec)?;
    let closure = t.ig_closure()?;
    println!("product: {spec}");
    println!("idempotent-generated submonoid: {} elements", closure.len());
    if list {
        for &x in &closure {
            println!("  {}", t.label(x));
        }
    }
    match t.crosscheck_ig() {
        Ok(r) => Ok(print_reports(&[r])),
        Err(ProductError::Precondition(why)) => {
            println!("idempotent-generated: prediction skipped, {why}");
            Ok(true)
        }
        Err(e) => Err(e.into()),
    }
}
