//! Invariant suite over a ring catalog. Each check reports the number of
//! cases it examined and the first counterexample, if any.

use crate::catalog::{self, Entry, MODULE_RING_LIMIT};
use crate::classify::{
    classify, is_quasi_frobenius, is_sg_semisimple, residue_field_is_sgp, ClassificationReport,
};
use crate::error::{Error, Result};
use crate::homology::{
    check_complete_resolution, ext1, is_strongly_gorenstein_projective,
    strongly_complete_resolution, Obstruction, SgpVerdict,
};
use crate::module::{free_summand_split, hom_set, is_isomorphic, Module, Presentation};
use crate::ring::{parse_ring_spec, Elem, Ideal, Ring, RingSpec};

/// Pairwise module checks run over local rings up to this order.
pub const PAIRWISE_RING_LIMIT: usize = 16;

/// Hom re-check and kernel/image counting run over rings up to this order.
pub const HOM_RING_LIMIT: usize = 8;

/// A deliberate classifier fault, for testing the harness itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    NegateQuasiFrobenius,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VerifyReport {
    pub catalog_size: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }
}

struct Ctx {
    entries: Vec<Entry>,
    reports: Vec<ClassificationReport>,
    /// Rings outside the catalog may be built for named checks.
    full: bool,
}

impl Ctx {
    fn find(&self, text: &str) -> Result<Option<Ring>> {
        let name = parse_ring_spec(text)?.to_string();
        if let Some(e) = self.entries.iter().find(|e| e.name == name) {
            return Ok(Some(e.ring.clone()));
        }
        if self.full {
            return Ring::parse(text).map(Some);
        }
        Ok(None)
    }

    fn local_rings(&self, limit: usize) -> Result<Vec<&Entry>> {
        let mut out = Vec::new();
        for e in &self.entries {
            if e.ring.size() <= limit && e.ring.is_local()? {
                out.push(e);
            }
        }
        Ok(out)
    }

    fn report(&self, ring: &Ring) -> Option<&ClassificationReport> {
        self.entries
            .iter()
            .position(|e| e.ring == *ring)
            .map(|i| &self.reports[i])
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn done(self, name: &'static str) -> CheckOutcome {
        CheckOutcome {
            name,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

type Check = fn(&Ctx) -> Result<Tally>;

const CHECKS: &[(&str, Check)] = &[
    ("ideal_lattice_fixpoint", ideal_lattice_fixpoint),
    ("double_annihilator_contains", double_annihilator_contains),
    ("decomposition_bijection", decomposition_bijection),
    ("zmod_quasi_frobenius", zmod_quasi_frobenius),
    ("implication_chain", implication_chain),
    ("z4_example", z4_example),
    ("chain_rings_of_length_three", chain_rings_of_length_three),
    ("prime_power_quotients", prime_power_quotients),
    ("gf2_truncated_polynomials", gf2_truncated_polynomials),
    ("non_qf_control", non_qf_control),
    ("route_agreement", route_agreement),
    ("witnesses_over_z8", witnesses_over_z8),
    ("principal_annihilators", principal_annihilators),
    ("cyclic_quotient_ideals", cyclic_quotient_ideals),
    ("ext_vanishes_over_qf", ext_vanishes_over_qf),
    ("witness_cardinality_law", witness_cardinality_law),
    ("sgp_direct_sums", sgp_direct_sums),
    ("free_summand_split", free_summand_split_check),
    ("isomorphism_equivalence", isomorphism_equivalence),
    ("hom_kernel_image_counts", hom_kernel_image_counts),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs the suite on the default catalog.
pub fn verify_default(fault: Option<Fault>) -> Result<VerifyReport> {
    run(catalog::default_catalog()?, true, fault)
}

/// Runs the suite on the given rings only.
pub fn verify_catalog(specs: &[RingSpec], fault: Option<Fault>) -> Result<VerifyReport> {
    run(catalog::build(specs)?, false, fault)
}

fn run(entries: Vec<Entry>, full: bool, fault: Option<Fault>) -> Result<VerifyReport> {
    let mut reports = Vec::with_capacity(entries.len());
    for e in &entries {
        let mut r = classify(&e.ring)?;
        if fault == Some(Fault::NegateQuasiFrobenius) {
            r.quasi_frobenius = !r.quasi_frobenius;
        }
        reports.push(r);
    }
    let ctx = Ctx {
        entries,
        reports,
        full,
    };
    let mut checks = Vec::with_capacity(CHECKS.len());
    for (name, check) in CHECKS {
        checks.push(check(&ctx)?.done(name));
    }
    Ok(VerifyReport {
        catalog_size: ctx.entries.len(),
        checks,
    })
}

fn ideal_lattice_fixpoint(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx
        .entries
        .iter()
        .filter(|e| e.ring.size() <= MODULE_RING_LIMIT)
    {
        let r = &e.ring;
        let ideals = r.ideals()?;
        let mut ok = r
            .elements()
            .all(|x| ideals.contains(&Ideal::generated(r, &[x])));
        for i in &ideals {
            for j in &ideals {
                ok &= ideals.contains(&i.sum(j));
            }
        }
        t.case(ok, || e.name.clone());
    }
    Ok(t)
}

fn double_annihilator_contains(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in &ctx.entries {
        for i in e.ring.ideals()? {
            t.case(i.is_subset(&i.annihilator().annihilator()), || {
                format!("{}: {i}", e.name)
            });
        }
    }
    Ok(t)
}

fn decomposition_bijection(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx
        .entries
        .iter()
        .filter(|e| e.ring.size() <= MODULE_RING_LIMIT)
    {
        let d = e.ring.idempotent_decomposition()?;
        t.case(d.check_product_map().is_ok(), || e.name.clone());
    }
    Ok(t)
}

fn zmod_quasi_frobenius(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (e, r) in ctx.entries.iter().zip(&ctx.reports) {
        if let Some(RingSpec::Zmod(_)) = e.ring.spec() {
            t.case(r.quasi_frobenius, || {
                format!("{}: quasi_frobenius=false", e.name)
            });
        }
    }
    Ok(t)
}

fn implication_chain(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (e, r) in ctx.entries.iter().zip(&ctx.reports) {
        let ok = (!r.semisimple || r.sg_semisimple) && (!r.sg_semisimple || r.quasi_frobenius);
        t.case(ok, || {
            format!(
                "{}: semisimple={} sg_semisimple={} quasi_frobenius={}",
                e.name, r.semisimple, r.sg_semisimple, r.quasi_frobenius
            )
        });
    }
    Ok(t)
}

/// Looks up the (possibly faulted) report, classifying rings outside the catalog.
fn report_for(ctx: &Ctx, ring: &Ring) -> Result<ClassificationReport> {
    Ok(match ctx.report(ring) {
        Some(r) => r.clone(),
        None => classify(ring)?,
    })
}

fn z4_example(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    if let Some(r) = ctx.find("Z/4")? {
        let rep = report_for(ctx, &r)?;
        t.case(
            !rep.semisimple && rep.quasi_frobenius && rep.sg_semisimple,
            || format!("Z/4: {}", flags(&rep)),
        );
    }
    Ok(t)
}

fn flags(r: &ClassificationReport) -> String {
    format!(
        "semisimple={} quasi_frobenius={} sg_semisimple={}",
        r.semisimple, r.quasi_frobenius, r.sg_semisimple
    )
}

fn chain_rings_of_length_three(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (name, expect) in [("Z/8", ["(2)", "(4)"]), ("Z/27", ["(3)", "(9)"])] {
        let Some(r) = ctx.find(name)? else { continue };
        let rep = report_for(ctx, &r)?;
        let cert: Vec<String> = rep
            .certificates
            .sg_semisimple
            .as_ref()
            .map(|c| c.ideals.to_vec())
            .unwrap_or_default();
        t.case(
            rep.quasi_frobenius && !rep.sg_semisimple && cert == expect,
            || format!("{name}: {} certificate {cert:?}", flags(&rep)),
        );
    }
    Ok(t)
}

fn prime_power_quotients(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for p in [2u64, 3, 5] {
        for (e, expect) in [(2, true), (3, false)] {
            let name = format!("Z/{}", p.pow(e));
            let Some(r) = ctx.find(&name)? else { continue };
            let rep = report_for(ctx, &r)?;
            t.case(rep.quasi_frobenius && rep.sg_semisimple == expect, || {
                format!("{name}: {}", flags(&rep))
            });
        }
    }
    Ok(t)
}

fn gf2_truncated_polynomials(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (name, expect) in [("GF(2)[x]/(x^2)", true), ("GF(2)[x]/(x^3)", false)] {
        let Some(r) = ctx.find(name)? else { continue };
        let rep = report_for(ctx, &r)?;
        t.case(rep.sg_semisimple == expect, || {
            format!("{name}: {}", flags(&rep))
        });
    }
    Ok(t)
}

fn non_qf_control(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    let name = RingSpec::gf2_square_zero_plane().to_string();
    let Some(r) = ctx.find(&name)? else {
        return Ok(t);
    };
    let rep = report_for(ctx, &r)?;
    let cert = rep
        .certificates
        .quasi_frobenius
        .as_ref()
        .map(|c| c.ideal.clone());
    t.case(
        !rep.quasi_frobenius && cert.as_deref() == Some("(b1)"),
        || format!("{name}: {} certificate {cert:?}", flags(&rep)),
    );
    let residue = Module::quotient_ring(&r.local_maximal_ideal()?)?;
    let e = ext1(&residue, &Module::free(&r, 1)?)?;
    t.case(!e.is_zero(), || format!("{name}: Ext^1(R/m, R) = 0"));
    Ok(t)
}

fn route_agreement(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx.local_rings(MODULE_RING_LIMIT)? {
        let by_ideals = is_sg_semisimple(&e.ring)?.is_ok();
        let by_modules = residue_field_is_sgp(&e.ring)?;
        t.case(by_ideals == by_modules, || {
            format!("{}: ideal count {by_ideals}, R/m {by_modules}", e.name)
        });
    }
    Ok(t)
}

fn module(r: &Ring, rel: &str) -> Result<Module> {
    Module::from_presentation(Presentation::parse(r, rel)?)
}

fn witnesses_over_z8(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    let Some(r) = ctx.find("Z/8")? else {
        return Ok(t);
    };
    let z2 = is_strongly_gorenstein_projective(&module(&r, "2")?)?;
    t.case(
        !z2.decision && z2.obstruction == Some(Obstruction::Cardinality),
        || format!("Z/8: Z/2 verdict {:?}", z2.obstruction),
    );
    let z4 = is_strongly_gorenstein_projective(&module(&r, "4")?)?;
    t.case(!z4.decision, || "Z/8: Z/4 judged SGP".into());
    let sum = is_strongly_gorenstein_projective(&module(&r, "2,0;0,4")?)?;
    let ok = match &sum.witness {
        Some(w) if sum.decision => {
            let res = strongly_complete_resolution(w)?;
            w.rank() == 2 && w.verify() && check_complete_resolution(&res).passes()
        }
        _ => false,
    };
    t.case(ok, || "Z/8: Z/2+Z/4 lacks a verified rank-2 witness".into());
    Ok(t)
}

/// Principal ideals `xR` for nonzero zero-divisors `x`, one per ideal.
fn zero_divisor_ideals(r: &Ring) -> Vec<Ideal> {
    let mut out: Vec<Ideal> = Vec::new();
    for x in r.elements().filter(|&x| x != Elem::ZERO && !r.is_unit(x)) {
        let i = Ideal::generated(r, &[x]);
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

fn sgp(m: &Module) -> Result<SgpVerdict> {
    is_strongly_gorenstein_projective(m)
}

fn principal_annihilators(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx.local_rings(MODULE_RING_LIMIT)? {
        for i in zero_divisor_ideals(&e.ring) {
            let (xr, _) = Module::from_ideal(&i)?;
            if !sgp(&xr)?.decision {
                continue;
            }
            let ann = i.annihilator();
            let (ann_m, _) = Module::from_ideal(&ann)?;
            let ok = is_isomorphic(&ann_m, &xr)?.is_some() && ann.annihilator() == ann;
            t.case(ok, || format!("{}: xR = {i}", e.name));
        }
    }
    Ok(t)
}

fn cyclic_quotient_ideals(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx.local_rings(MODULE_RING_LIMIT)? {
        let r = &e.ring;
        for i in r
            .ideals()?
            .into_iter()
            .filter(|i| !i.is_zero() && !i.is_whole())
        {
            if !sgp(&Module::quotient_ring(&i)?)?.decision {
                continue;
            }
            let ok = match i.principal_generator() {
                Some(x) => !r.is_unit(x) && sgp(&Module::from_ideal(&i)?.0)?.decision,
                None => false,
            };
            t.case(ok, || format!("{}: I = {i}", e.name));
        }
    }
    Ok(t)
}

fn module_rings(ctx: &Ctx) -> impl Iterator<Item = &Entry> {
    ctx.entries
        .iter()
        .filter(|e| e.ring.size() <= MODULE_RING_LIMIT)
}

fn ext_vanishes_over_qf(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in module_rings(ctx) {
        if is_quasi_frobenius(&e.ring)?.is_err() {
            continue;
        }
        let free = Module::free(&e.ring, 1)?;
        for (name, m) in catalog::modules(&e.ring)? {
            let g = ext1(&m, &free)?;
            t.case(g.is_zero(), || {
                format!("{}: Ext^1({name}, R) has order {}", e.name, g.order)
            });
        }
    }
    Ok(t)
}

fn witness_cardinality_law(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx.local_rings(MODULE_RING_LIMIT)? {
        for (name, m) in catalog::modules(&e.ring)? {
            if let Some(w) = sgp(&m)?.witness {
                let n = e.ring.size().pow(w.rank() as u32);
                t.case(n == m.cardinality().pow(2) && w.verify(), || {
                    format!("{}: witness for {name}", e.name)
                });
            }
        }
    }
    Ok(t)
}

type NamedModules<'a> = (&'a Entry, Vec<(String, Module)>);

/// Local rings small enough for pairwise checks, with their module catalogs.
fn small_local_modules(ctx: &Ctx) -> Result<Vec<NamedModules<'_>>> {
    ctx.local_rings(PAIRWISE_RING_LIMIT)?
        .into_iter()
        .map(|e| Ok((e, catalog::modules(&e.ring)?)))
        .collect()
}

fn sgp_direct_sums(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (e, mods) in small_local_modules(ctx)? {
        let mut good = Vec::new();
        for (name, m) in &mods {
            if sgp(m)?.decision && !good.iter().any(|(_, g)| same_presentation(g, m)) {
                good.push((name.clone(), m.clone()));
            }
        }
        for (i, (a, m)) in good.iter().enumerate() {
            for (b, n) in &good[i..] {
                let s = m.direct_sum(n)?;
                match sgp(&s) {
                    Ok(v) => t.case(v.decision, || format!("{}: {a} + {b}", e.name)),
                    Err(Error::GuardExceeded { .. }) => {}
                    Err(err) => return Err(err),
                }
            }
        }
    }
    Ok(t)
}

fn same_presentation(a: &Module, b: &Module) -> bool {
    a.rank() == b.rank() && a.relations() == b.relations()
}

fn free_summand_split_check(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (e, mods) in small_local_modules(ctx)? {
        if is_quasi_frobenius(&e.ring)?.is_err() {
            continue;
        }
        let free = Module::free(&e.ring, 1)?;
        for (name, m) in mods {
            let m = m.direct_sum(&free)?;
            let (rank, n) = free_summand_split(&m)?;
            let resum = Module::free(&e.ring, rank)?.direct_sum(&n)?;
            let ok = rank >= 1
                && is_isomorphic(&resum, &m)?.is_some()
                && n.elements().all(|x| !n.has_zero_annihilator(x));
            t.case(ok, || format!("{}: {name} + R", e.name));
        }
    }
    Ok(t)
}

fn isomorphism_equivalence(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for (e, mods) in small_local_modules(ctx)? {
        let n = mods.len();
        let mut iso = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                iso[i][j] = is_isomorphic(&mods[i].1, &mods[j].1)?.is_some();
            }
        }
        for i in 0..n {
            t.case(iso[i][i], || {
                format!("{}: {} not reflexive", e.name, mods[i].0)
            });
            for j in 0..n {
                t.case(iso[i][j] == iso[j][i], || {
                    format!("{}: {} ~ {} not symmetric", e.name, mods[i].0, mods[j].0)
                });
                for k in 0..n {
                    t.case(!(iso[i][j] && iso[j][k]) || iso[i][k], || {
                        format!(
                            "{}: {} ~ {} ~ {} not transitive",
                            e.name, mods[i].0, mods[j].0, mods[k].0
                        )
                    });
                }
            }
        }
    }
    Ok(t)
}

fn hom_kernel_image_counts(ctx: &Ctx) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx
        .entries
        .iter()
        .filter(|e| e.ring.size() <= HOM_RING_LIMIT)
    {
        let mods = catalog::modules(&e.ring)?;
        for (a, m) in &mods {
            for (b, n) in &mods {
                for h in hom_set(m, n)? {
                    let (k, _) = h.kernel()?;
                    let (im, _) = h.image()?;
                    let (c, _) = h.cokernel()?;
                    let ok = h.check_linear()
                        && k.cardinality() * im.cardinality() == m.cardinality()
                        && c.cardinality() * im.cardinality() == n.cardinality();
                    t.case(ok, || {
                        format!("{}: hom {a} -> {b} {:?}", e.name, h.image_literals())
                    });
                }
            }
        }
    }
    Ok(t)
}
