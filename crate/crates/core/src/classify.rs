//! Ring classes: semisimple, quasi-Frobenius (equivalently G-semisimple)
//! and SG-semisimple, each with a certificate when it fails.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::is_strongly_gorenstein_projective;
use crate::module::Module;
use crate::ring::{Elem, Ideal, Ring};

pub const SCHEMA_VERSION: u32 = 1;

/// Factors up to this order are cross-checked through the module route.
pub const ROUTE_CHECK_LIMIT: usize = 64;

/// Failure certificate of the double-annihilator test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QfFailure {
    pub ideal: Ideal,
    pub annihilator: Ideal,
    pub double_annihilator: Ideal,
}

/// A local factor with two distinct nonzero proper ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgFailure {
    pub factor: usize,
    pub ideals: [Ideal; 2],
}

/// `Ok(())` when the radical is zero, else its least nonzero element.
pub fn is_semisimple(r: &Ring) -> Result<std::result::Result<(), Elem>> {
    let rad = r.jacobson_radical()?;
    Ok(match rad.elements().iter().find(|&&x| x != Elem::ZERO) {
        Some(&x) => Err(x),
        None => Ok(()),
    })
}

/// `Ann(Ann(I)) = I` for every ideal; otherwise the first ideal in lattice
/// order where it fails.
pub fn is_quasi_frobenius(r: &Ring) -> Result<std::result::Result<(), QfFailure>> {
    for i in r.ideals()? {
        let ann = i.annihilator();
        let double = ann.annihilator();
        if double != i {
            return Ok(Err(QfFailure {
                ideal: i,
                annihilator: ann,
                double_annihilator: double,
            }));
        }
    }
    Ok(Ok(()))
}

/// Nonzero proper ideals of a ring, in lattice order.
fn nonzero_proper(r: &Ring) -> Result<Vec<Ideal>> {
    Ok(r.ideals()?
        .into_iter()
        .filter(|i| !i.is_zero() && !i.is_whole())
        .collect())
}

/// Every local factor has at most one nonzero proper ideal. A failure names
/// the two smallest nonzero proper ideals of the factor, larger first.
pub fn is_sg_semisimple(r: &Ring) -> Result<std::result::Result<(), SgFailure>> {
    let d = r.idempotent_decomposition()?;
    for (k, f) in d.factors().iter().enumerate() {
        let mut ideals = nonzero_proper(f)?.into_iter();
        if let (Some(a), Some(b)) = (ideals.next(), ideals.next()) {
            return Ok(Err(SgFailure {
                factor: k,
                ideals: [b, a],
            }));
        }
    }
    Ok(Ok(()))
}

/// The module route for a local ring: `R/m` is strongly Gorenstein projective.
pub fn residue_field_is_sgp(local: &Ring) -> Result<bool> {
    let m = local.local_maximal_ideal()?;
    Ok(is_strongly_gorenstein_projective(&Module::quotient_ring(&m)?)?.decision)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSummary {
    pub order: usize,
    pub ideal_count: usize,
    pub max_ideal_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QfCertificate {
    pub ideal: String,
    pub annihilator: String,
    pub double_annihilator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SgCertificate {
    pub factor: usize,
    pub ideals: [String; 2],
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    /// A nonzero element of the radical.
    pub semisimple: Option<String>,
    pub quasi_frobenius: Option<QfCertificate>,
    pub sg_semisimple: Option<SgCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub spec: String,
    pub order: usize,
    pub local: bool,
    pub factors: Vec<FactorSummary>,
    pub semisimple: bool,
    pub quasi_frobenius: bool,
    pub sg_semisimple: bool,
    pub certificates: Certificates,
}

/// Runs all three classifiers, checks `semisimple => SG => QF`, and on
/// factors of order at most [`ROUTE_CHECK_LIMIT`] requires the ideal count
/// and the `R/m` route to agree.
pub fn classify(r: &Ring) -> Result<ClassificationReport> {
    let d = r.idempotent_decomposition()?;
    let mut factors = Vec::with_capacity(d.len());
    for f in d.factors() {
        let ideal_count = f.ideals()?.len();
        factors.push(FactorSummary {
            order: f.size(),
            ideal_count,
            max_ideal_order: f.local_maximal_ideal()?.len(),
        });
        if f.size() <= ROUTE_CHECK_LIMIT {
            let by_ideals = ideal_count <= 3;
            let by_modules = residue_field_is_sgp(f)?;
            if by_ideals != by_modules {
                return Err(Error::internal(format!(
                    "SG routes disagree on factor {}: ideal count {by_ideals}, R/m {by_modules}",
                    f.label()
                )));
            }
        }
    }

    let ss = is_semisimple(r)?;
    let qf = is_quasi_frobenius(r)?;
    let sg = is_sg_semisimple(r)?;
    let (semisimple, quasi_frobenius, sg_semisimple) = (ss.is_ok(), qf.is_ok(), sg.is_ok());
    if (semisimple && !sg_semisimple) || (sg_semisimple && !quasi_frobenius) {
        return Err(Error::internal(format!(
            "implication chain broken on {}: semisimple {semisimple}, SG {sg_semisimple}, QF {quasi_frobenius}",
            r.label()
        )));
    }

    let certificates = Certificates {
        semisimple: ss.err().map(|x| r.fmt_elem(x)),
        quasi_frobenius: qf.err().map(|c| QfCertificate {
            ideal: c.ideal.to_string(),
            annihilator: c.annihilator.to_string(),
            double_annihilator: c.double_annihilator.to_string(),
        }),
        sg_semisimple: sg.err().map(|c| SgCertificate {
            factor: c.factor,
            ideals: c.ideals.map(|i| i.to_string()),
        }),
    };
    Ok(ClassificationReport {
        schema_version: SCHEMA_VERSION,
        spec: r.label().to_string(),
        order: r.size(),
        local: d.is_trivial(),
        factors,
        semisimple,
        quasi_frobenius,
        sg_semisimple,
        certificates,
    })
}
