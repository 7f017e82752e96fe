//! Serializable reports and their text rendering.

use std::fmt::Write as _;
use std::io::Write;

use qfring::classify::{ClassificationReport, SCHEMA_VERSION};
use qfring::homology::{
    check_complete_resolution, free_resolution, strongly_complete_resolution, CompletenessReport,
    Obstruction, EXT_TEST_OBJECT,
};
use qfring::verify::{CheckOutcome, VerifyReport};
use qfring::{is_strongly_gorenstein_projective, Error, Module, Result, Ring, SgpVerdict};
use serde::Serialize;

pub fn emit<T: Serialize>(
    out: &mut impl Write,
    json: bool,
    rep: &T,
    text: fn(&T) -> String,
) -> Result<()> {
    let body = if json {
        serde_json::to_string_pretty(rep).map_err(|e| Error::Internal(e.to_string()))? + "\n"
    } else {
        text(rep)
    };
    out.write_all(body.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Error::Internal(format!("writing output: {e}")))
}

fn spec_of(r: &Ring) -> String {
    r.spec()
        .map_or_else(|| r.label().to_string(), |s| s.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring: {}", r.spec);
    let _ = writeln!(s, "order: {}", r.order);
    let _ = writeln!(s, "local: {}", yes_no(r.local));
    for (i, f) in r.factors.iter().enumerate() {
        let _ = writeln!(
            s,
            "factor {i}: order {}, {} ideals, maximal ideal of order {}",
            f.order, f.ideal_count, f.max_ideal_order
        );
    }
    let c = &r.certificates;
    let _ = write!(s, "semisimple: {}", yes_no(r.semisimple));
    if let Some(x) = &c.semisimple {
        let _ = write!(s, " (radical contains {x})");
    }
    let _ = write!(s, "\nquasi_frobenius: {}", yes_no(r.quasi_frobenius));
    if let Some(q) = &c.quasi_frobenius {
        let _ = write!(
            s,
            " (I = {}, Ann(I) = {}, Ann(Ann(I)) = {})",
            q.ideal, q.annihilator, q.double_annihilator
        );
    }
    let _ = write!(s, "\nsg_semisimple: {}", yes_no(r.sg_semisimple));
    if let Some(g) = &c.sg_semisimple {
        let _ = write!(
            s,
            " (factor {} has nonzero proper ideals {} and {})",
            g.factor, g.ideals[0], g.ideals[1]
        );
    }
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct IdealRow {
    ideal: String,
    order: usize,
    annihilator: String,
    double_annihilator: String,
}

#[derive(Serialize)]
pub struct IdealsReport {
    schema_version: u32,
    spec: String,
    order: usize,
    ideals: Vec<IdealRow>,
}

pub fn ideals(r: &Ring) -> Result<IdealsReport> {
    let ideals = r
        .ideals()?
        .iter()
        .map(|i| {
            let a = i.annihilator();
            IdealRow {
                ideal: i.to_string(),
                order: i.len(),
                double_annihilator: a.annihilator().to_string(),
                annihilator: a.to_string(),
            }
        })
        .collect();
    Ok(IdealsReport {
        schema_version: SCHEMA_VERSION,
        spec: spec_of(r),
        order: r.size(),
        ideals,
    })
}

pub fn ideals_text(r: &IdealsReport) -> String {
    let mut s = format!("ring: {} ({} ideals)\n", r.spec, r.ideals.len());
    for i in &r.ideals {
        let _ = writeln!(
            s,
            "{:<12} order {:<5} Ann {:<12} Ann(Ann) {}",
            i.ideal, i.order, i.annihilator, i.double_annihilator
        );
    }
    s
}

#[derive(Serialize)]
pub struct FactorRow {
    idempotent: String,
    order: usize,
    ring: String,
}

#[derive(Serialize)]
pub struct DecompositionReport {
    schema_version: u32,
    spec: String,
    order: usize,
    factors: Vec<FactorRow>,
}

pub fn decomposition(r: &Ring) -> Result<DecompositionReport> {
    let d = r.idempotent_decomposition()?;
    d.check_product_map()?;
    let factors = d
        .idempotents()
        .iter()
        .zip(d.factors())
        .map(|(&e, f)| FactorRow {
            idempotent: r.fmt_elem(e),
            order: f.size(),
            ring: f.label().to_string(),
        })
        .collect();
    Ok(DecompositionReport {
        schema_version: SCHEMA_VERSION,
        spec: spec_of(r),
        order: r.size(),
        factors,
    })
}

pub fn decomposition_text(r: &DecompositionReport) -> String {
    let mut s = format!(
        "ring: {} = product of {} local factors\n",
        r.spec,
        r.factors.len()
    );
    for (i, f) in r.factors.iter().enumerate() {
        let _ = writeln!(
            s,
            "factor {i}: e = {}, order {}, {}",
            f.idempotent, f.order, f.ring
        );
    }
    s
}

#[derive(Serialize)]
pub struct PeriodicRow {
    map: Vec<String>,
    window: usize,
    report: CompletenessReport,
}

#[derive(Serialize)]
pub struct VerdictRow {
    ring: String,
    relations: String,
    module_order: usize,
    sgp: bool,
    rank: Option<usize>,
    embedding: Vec<String>,
    projection: Vec<String>,
    obstruction: Option<Obstruction>,
    ext1_order: Option<usize>,
    resolution: Option<PeriodicRow>,
    components: Vec<VerdictRow>,
}

#[derive(Serialize)]
pub struct SgpReport {
    schema_version: u32,
    #[serde(flatten)]
    verdict: VerdictRow,
    ext_test_object: &'static str,
}

fn verdict_row(m: &Module, v: &SgpVerdict) -> Result<VerdictRow> {
    let mut row = VerdictRow {
        ring: spec_of(m.ring()),
        relations: m.presentation().to_string(),
        module_order: m.cardinality(),
        sgp: v.decision,
        rank: None,
        embedding: Vec::new(),
        projection: Vec::new(),
        obstruction: v.obstruction,
        ext1_order: v.ext1_order,
        resolution: None,
        components: Vec::new(),
    };
    if let Some(w) = &v.witness {
        row.rank = Some(w.rank());
        row.embedding = w.embedding().image_literals();
        row.projection = w.projection().image_literals();
        if v.decision {
            let res = strongly_complete_resolution(w)?;
            row.resolution = Some(PeriodicRow {
                map: res.matrix_literals(),
                window: res.window(),
                report: check_complete_resolution(&res),
            });
        }
    }
    if !v.components.is_empty() {
        let d = m.ring().idempotent_decomposition()?;
        let parts = m.decompose_over_product(&d)?;
        for (p, c) in parts.iter().zip(&v.components) {
            row.components.push(verdict_row(p, c)?);
        }
    }
    Ok(row)
}

pub fn sgp(m: &Module) -> Result<SgpReport> {
    let v = is_strongly_gorenstein_projective(m)?;
    Ok(SgpReport {
        schema_version: SCHEMA_VERSION,
        verdict: verdict_row(m, &v)?,
        ext_test_object: EXT_TEST_OBJECT,
    })
}

fn verdict_text(s: &mut String, v: &VerdictRow, indent: &str) {
    let rel = if v.relations.is_empty() {
        "-"
    } else {
        &v.relations
    };
    let _ = writeln!(s, "{indent}ring: {}", v.ring);
    let _ = writeln!(
        s,
        "{indent}relations: {rel} (module of order {})",
        v.module_order
    );
    let _ = writeln!(s, "{indent}sgp: {}", v.sgp);
    if let Some(o) = v.obstruction {
        let _ = writeln!(s, "{indent}obstruction: {}", o.as_str());
    }
    if let Some(n) = v.rank {
        let _ = writeln!(s, "{indent}witness rank: {n}");
        let _ = writeln!(s, "{indent}embedding: {}", v.embedding.join(" "));
        let _ = writeln!(s, "{indent}projection: {}", v.projection.join(" "));
    }
    if let Some(e) = v.ext1_order {
        let _ = writeln!(s, "{indent}|Ext^1(M,R)|: {e}");
    }
    if let Some(p) = &v.resolution {
        let r = &p.report;
        let _ = writeln!(s, "{indent}periodic map f: {}", p.map.join(" "));
        let _ = writeln!(
            s,
            "{indent}  Im f = Ker f: {} (|Im| {}, |Ker| {})",
            yes_no(r.exact),
            r.image_order,
            r.kernel_order
        );
        let _ = writeln!(
            s,
            "{indent}  dual exact: {} (|Im| {}, |Ker| {})",
            yes_no(r.dual_exact),
            r.dual_image_order,
            r.dual_kernel_order
        );
    }
    for (i, c) in v.components.iter().enumerate() {
        let _ = writeln!(s, "{indent}component {i}:");
        verdict_text(s, c, &format!("{indent}  "));
    }
}

pub fn sgp_text(r: &SgpReport) -> String {
    let mut s = String::new();
    verdict_text(&mut s, &r.verdict, "");
    s
}

#[derive(Serialize)]
pub struct ResolutionReport {
    schema_version: u32,
    ring: String,
    relations: String,
    length: usize,
    ranks: Vec<usize>,
    maps: Vec<Vec<String>>,
}

pub fn resolution(m: &Module, length: usize) -> Result<ResolutionReport> {
    let res = free_resolution(m, length)?;
    Ok(ResolutionReport {
        schema_version: SCHEMA_VERSION,
        ring: spec_of(m.ring()),
        relations: m.presentation().to_string(),
        length,
        ranks: res.ranks(),
        maps: res.maps(),
    })
}

pub fn resolution_text(r: &ResolutionReport) -> String {
    let mut s = format!("ring: {}\n", r.ring);
    for (i, n) in r.ranks.iter().enumerate() {
        let _ = writeln!(s, "P{i} = R^{n}");
    }
    for (i, m) in r.maps.iter().enumerate() {
        let _ = writeln!(s, "syzygy {} -> P{i}: {}", i + 1, m.join(" "));
    }
    s
}

#[derive(Serialize)]
pub struct VerifyJson {
    schema_version: u32,
    catalog_size: usize,
    passed: bool,
    checks: Vec<CheckOutcome>,
    first_failure: Option<CheckOutcome>,
}

pub fn verify(rep: VerifyReport) -> VerifyJson {
    VerifyJson {
        schema_version: SCHEMA_VERSION,
        catalog_size: rep.catalog_size,
        passed: rep.all_passed(),
        first_failure: rep.first_failure().cloned(),
        checks: rep.checks,
    }
}

pub fn verify_text(r: &VerifyJson) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        let _ = write!(s, "{status} {:<30} {:>6} cases", c.name, c.cases);
        if let Some(x) = &c.counterexample {
            let _ = write!(s, "  counterexample: {x}");
        }
        s.push('\n');
    }
    match &r.first_failure {
        None => {
            let _ = writeln!(
                s,
                "all {} checks passed on {} rings",
                r.checks.len(),
                r.catalog_size
            );
        }
        Some(c) => {
            let _ = writeln!(
                s,
                "first counterexample: {}: {}",
                c.name,
                c.counterexample.as_deref().unwrap_or("")
            );
        }
    }
    s
}
