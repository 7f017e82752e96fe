use std::ops::ControlFlow;

use serde::Serialize;

use super::ext::ext1;
use crate::error::{Error, Result};
use crate::module::{for_each_hom, is_isomorphic, structure::exact_log, Module, ModuleHom};

/// Why a module is not strongly Gorenstein projective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    /// No `n` with `|R|^n = |M|^2`.
    Cardinality,
    NoEmbeddingWithSelfCokernel,
    ExtNonzero,
}

impl Obstruction {
    pub fn as_str(self) -> &'static str {
        match self {
            Obstruction::Cardinality => "cardinality",
            Obstruction::NoEmbeddingWithSelfCokernel => "no_embedding_with_self_cokernel",
            Obstruction::ExtNonzero => "ext_nonzero",
        }
    }
}

/// A short exact sequence `0 -> M -> R^n -> M -> 0`.
#[derive(Clone, Debug)]
pub struct SgpWitness {
    module: Module,
    rank: usize,
    embedding: ModuleHom,
    projection: ModuleHom,
    ext_vanishes: bool,
}

impl SgpWitness {
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `M -> R^n`.
    pub fn embedding(&self) -> &ModuleHom {
        &self.embedding
    }

    /// `R^n -> M`.
    pub fn projection(&self) -> &ModuleHom {
        &self.projection
    }

    pub fn ext_vanishes(&self) -> bool {
        self.ext_vanishes
    }

    /// Re-checks exactness and the cardinality law.
    pub fn verify(&self) -> bool {
        let m = self.module.cardinality();
        let free = self.embedding.target().cardinality();
        free == m * m
            && self.embedding.is_injective()
            && self.projection.is_surjective()
            && self.embedding.image_members() == self.projection.kernel_members()
    }
}

/// Searches for `0 -> M -> R^n -> M -> 0`. Injective homs `M -> R^n` are
/// tried in canonical order; the first whose cokernel is isomorphic to `M`
/// gives the witness. Local rings only.
pub fn find_sgp_witness(m: &Module) -> Result<std::result::Result<SgpWitness, Obstruction>> {
    let ring = m.ring();
    if !ring.is_local()? {
        return Err(Error::NonLocalRing);
    }
    let square = m.cardinality() * m.cardinality();
    let Some(n) = exact_log(ring.size(), square) else {
        return Ok(Err(Obstruction::Cardinality));
    };
    let free = Module::free(ring, n)?;
    let mut found: Option<SgpWitness> = None;
    let mut failure = None;
    for_each_hom(m, &free, |imgs| {
        let emb = ModuleHom::unchecked(m, &free, imgs.to_vec());
        if !emb.is_injective() {
            return ControlFlow::Continue(());
        }
        let attempt = emb.cokernel().and_then(|(q, proj)| {
            Ok(match is_isomorphic(&q, m)? {
                Some(iso) => Some(proj.then(&iso)?),
                None => None,
            })
        });
        match attempt {
            Ok(Some(projection)) => {
                found = Some(SgpWitness {
                    module: m.clone(),
                    rank: n,
                    embedding: emb,
                    projection,
                    ext_vanishes: false,
                });
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    match found {
        Some(w) if !w.verify() => Err(Error::internal("witness sequence is not exact")),
        Some(w) => Ok(Ok(w)),
        None => Ok(Err(Obstruction::NoEmbeddingWithSelfCokernel)),
    }
}

/// Test object used for the Ext condition.
pub const EXT_TEST_OBJECT: &str = "R: Ext^1(M, -) commutes with direct sums of copies of R \
for finitely presented M, and every projective is a summand of a free module";

/// Decision for strong Gorenstein projectivity.
#[derive(Clone, Debug)]
pub struct SgpVerdict {
    pub decision: bool,
    pub witness: Option<SgpWitness>,
    pub obstruction: Option<Obstruction>,
    /// `|Ext^1(M, R)|`, when it was computed.
    pub ext1_order: Option<usize>,
    /// Verdicts over the local factors, for a non-local ring.
    pub components: Vec<SgpVerdict>,
}

/// Over a local ring: a witness sequence exists and `Ext^1(M, R) = 0`.
/// Over a product of local rings: every component `e_i M` passes.
pub fn is_strongly_gorenstein_projective(m: &Module) -> Result<SgpVerdict> {
    let ring = m.ring();
    if !ring.is_local()? {
        let d = ring.idempotent_decomposition()?;
        let components = m
            .decompose_over_product(&d)?
            .iter()
            .map(is_strongly_gorenstein_projective)
            .collect::<Result<Vec<_>>>()?;
        let obstruction = components.iter().find_map(|c| c.obstruction);
        let ext1_order = components
            .iter()
            .map(|c| c.ext1_order)
            .product::<Option<usize>>();
        return Ok(SgpVerdict {
            decision: obstruction.is_none(),
            witness: None,
            obstruction,
            ext1_order,
            components,
        });
    }
    let mut witness = match find_sgp_witness(m)? {
        Ok(w) => w,
        Err(o) => {
            return Ok(SgpVerdict {
                decision: false,
                witness: None,
                obstruction: Some(o),
                ext1_order: None,
                components: Vec::new(),
            })
        }
    };
    let ext = ext1(m, &Module::free(ring, 1)?)?;
    witness.ext_vanishes = ext.is_zero();
    let decision = witness.ext_vanishes;
    Ok(SgpVerdict {
        decision,
        witness: Some(witness),
        obstruction: (!decision).then_some(Obstruction::ExtNonzero),
        ext1_order: Some(ext.order),
        components: Vec::new(),
    })
}
