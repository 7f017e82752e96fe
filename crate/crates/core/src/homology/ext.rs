use serde::Serialize;

use super::resolution::free_resolution;
use crate::error::{Error, Result};
use crate::module::{absorb_with, ModElem, Module};
use crate::ring::{Elem, Ideal, Ring};

/// A finite Ext group, described by its order and annihilator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtGroup {
    pub order: usize,
    pub annihilator: Ideal,
}

impl ExtGroup {
    pub fn is_zero(&self) -> bool {
        self.order == 1
    }

    pub fn summary(&self) -> ExtSummary {
        ExtSummary {
            order: self.order,
            annihilator: self.annihilator.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtSummary {
    pub order: usize,
    pub annihilator: String,
}

/// Tuples of `Q^g`, first coordinate least significant.
struct Power<'a> {
    q: &'a Module,
    g: usize,
    count: usize,
}

impl<'a> Power<'a> {
    fn new(q: &'a Module, g: usize) -> Result<Self> {
        let limit = q.ring().limits().max_module_tuples;
        let count = (q.cardinality() as u128)
            .checked_pow(g as u32)
            .unwrap_or(u128::MAX);
        if count > limit as u128 {
            return Err(Error::guard("Hom(P, Q) elements", count, limit as u128));
        }
        Ok(Power {
            q,
            g,
            count: count as usize,
        })
    }

    fn decode(&self, mut t: usize) -> Vec<ModElem> {
        let n = self.q.cardinality();
        (0..self.g)
            .map(|_| {
                let x = ModElem((t % n) as u32);
                t /= n;
                x
            })
            .collect()
    }

    fn encode(&self, xs: &[ModElem]) -> usize {
        let n = self.q.cardinality();
        xs.iter().rev().fold(0, |acc, x| acc * n + x.index())
    }

    fn combine(&self, coeffs: &[Elem], phi: &[ModElem]) -> ModElem {
        coeffs.iter().zip(phi).fold(ModElem::ZERO, |acc, (&c, &y)| {
            self.q.add(acc, self.q.scale(c, y))
        })
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<ModElem> = x.iter().zip(&y).map(|(&p, &r)| self.q.add(p, r)).collect();
        self.encode(&s)
    }

    fn scale(&self, r: Elem, a: usize) -> usize {
        let x: Vec<ModElem> = self
            .decode(a)
            .into_iter()
            .map(|p| self.q.scale(r, p))
            .collect();
        self.encode(&x)
    }
}

/// `Ext^1(M, Q)` from a minimal resolution `P_2 -> P_1 -> P_0 -> M`: the
/// cocycles in `Hom(P_1, Q) = Q^{g1}` vanishing on the second syzygy,
/// modulo the coboundaries `φ ∘ d_1`. Non-local rings are handled factor
/// by factor.
pub fn ext1(m: &Module, q: &Module) -> Result<ExtGroup> {
    let ring = m.ring();
    if ring != q.ring() {
        return Err(Error::RingMismatch);
    }
    if !ring.is_local()? {
        return ext1_over_product(ring, m, q);
    }
    let res = free_resolution(m, 2)?;
    let omega1 = &res.syzygies()[0];
    let omega2 = &res.syzygies()[1];
    let g0 = omega1.target().rank();
    let g1 = omega2.target().rank();
    // d_1 : P_1 -> P_0 sends e_j to the j-th generator of Ω^1.
    let d1: Vec<Vec<Elem>> = omega1
        .images()
        .iter()
        .map(|&y| omega1.target().coords(y).to_vec())
        .collect();
    let d2: Vec<Vec<Elem>> = omega2
        .images()
        .iter()
        .map(|&y| omega2.target().coords(y).to_vec())
        .collect();
    debug_assert_eq!(d1.len(), g1);

    let cochains = Power::new(q, g1)?;
    let cocycles: Vec<bool> = (0..cochains.count)
        .map(|t| {
            let psi = cochains.decode(t);
            d2.iter()
                .all(|col| cochains.combine(col, &psi) == ModElem::ZERO)
        })
        .collect();

    let sources = Power::new(q, g0)?;
    let mut boundary = vec![false; cochains.count];
    boundary[0] = true;
    let mut list = vec![0u32];
    for i in 0..g0 {
        // Image of the i-th coordinate generator set {y e_i : y ∈ Q}.
        let shifted: Vec<u32> = q
            .elements()
            .map(|y| {
                let mut phi = vec![ModElem::ZERO; g0];
                phi[i] = y;
                let row: Vec<ModElem> = d1.iter().map(|col| sources.combine(col, &phi)).collect();
                cochains.encode(&row) as u32
            })
            .collect();
        absorb_with(&mut boundary, &mut list, shifted, |a, b| {
            cochains.add(a as usize, b as usize) as u32
        });
    }
    if boundary.iter().zip(&cocycles).any(|(&b, &z)| b && !z) {
        return Err(Error::internal("a coboundary is not a cocycle"));
    }
    let z_order = cocycles.iter().filter(|&&z| z).count();
    if z_order % list.len() != 0 {
        return Err(Error::internal("coboundaries do not divide cocycles"));
    }
    let cycles: Vec<usize> = (0..cochains.count).filter(|&t| cocycles[t]).collect();
    let annihilator = ring
        .elements()
        .filter(|&r| cycles.iter().all(|&t| boundary[cochains.scale(r, t)]))
        .collect();
    Ok(ExtGroup {
        order: z_order / list.len(),
        annihilator: Ideal::from_elements(ring, annihilator),
    })
}

fn ext1_over_product(ring: &Ring, m: &Module, q: &Module) -> Result<ExtGroup> {
    let d = ring.idempotent_decomposition()?;
    let ms = m.decompose_over_product(&d)?;
    let qs = q.decompose_over_product(&d)?;
    let parts = ms
        .iter()
        .zip(&qs)
        .map(|(a, b)| ext1(a, b))
        .collect::<Result<Vec<_>>>()?;
    let annihilator = ring
        .elements()
        .filter(|&r| {
            parts
                .iter()
                .enumerate()
                .all(|(i, p)| p.annihilator.contains(d.project(i, r)))
        })
        .collect();
    Ok(ExtGroup {
        order: parts.iter().map(|p| p.order).product(),
        annihilator: Ideal::from_elements(ring, annihilator),
    })
}
