use std::ops::ControlFlow;

use super::hom::{for_each_hom, submodule, ModuleHom};
use super::{ModElem, Module, Presentation};
use crate::error::{Error, Result};
use crate::ring::{IdempotentDecomposition, Ring};

fn count(members: &[bool]) -> usize {
    members.iter().filter(|&&b| b).count()
}

/// `log_base(n)` when `n` is an exact power of `base`.
pub(crate) fn exact_log(base: usize, mut n: usize) -> Option<usize> {
    let mut k = 0;
    if base < 2 {
        return (n == 1).then_some(0);
    }
    while n > 1 {
        if !n.is_multiple_of(base) {
            return None;
        }
        n /= base;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Minimal generators of the submodule `S` given by `members`, over a local
/// ring: elements of `S` are taken in canonical order whenever they are
/// new modulo `mS` plus the span so far.
pub(crate) fn minimal_generators_of(ambient: &Module, members: &[bool]) -> Result<Vec<ModElem>> {
    let ring = ambient.ring();
    let m = ring.local_maximal_ideal()?;
    let residue = ring.size() / m.len();
    let spanning = ambient.greedy_generators(members);

    let mut covered = vec![false; ambient.cardinality()];
    covered[0] = true;
    let mut list = vec![0u32];
    for &g in &spanning {
        for &a in m.generators() {
            ambient.absorb_cyclic(&mut covered, &mut list, ambient.scale(a, g));
        }
    }
    let dim = exact_log(residue, count(members) / list.len())
        .filter(|_| count(members).is_multiple_of(list.len()))
        .ok_or_else(|| Error::internal("S/mS is not a vector space over R/m"))?;

    let mut gens = Vec::with_capacity(dim);
    for x in ambient.elements() {
        if members[x.index()] && !covered[x.index()] {
            gens.push(x);
            ambient.absorb_cyclic(&mut covered, &mut list, x);
        }
    }
    if gens.len() != dim || ambient.span(&gens) != members {
        return Err(Error::internal("greedy choice does not realize dim S/mS"));
    }
    Ok(gens)
}

impl Module {
    /// Minimal generating set; the ring must be local.
    pub fn minimal_generators(&self) -> Result<Vec<ModElem>> {
        if !self.ring().is_local()? {
            return Err(Error::NonLocalRing);
        }
        let all = vec![true; self.cardinality()];
        minimal_generators_of(self, &all)
    }

    pub fn minimal_generator_count(&self) -> Result<usize> {
        Ok(self.minimal_generators()?.len())
    }

    /// Free over a local ring; componentwise over a product.
    pub fn is_projective(&self) -> Result<bool> {
        let ring = self.ring();
        if ring.is_local()? {
            let g = self.minimal_generator_count()?;
            return Ok(ring.size().checked_pow(g as u32) == Some(self.cardinality()));
        }
        let d = ring.idempotent_decomposition()?;
        for c in self.decompose_over_product(&d)? {
            if !c.is_projective()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Components `e_i M` over the factor rings, with the entries of the
    /// presentation pushed through each projection. The assembled map
    /// `M -> Π e_i M` is checked to be a bijection.
    pub fn decompose_over_product(&self, d: &IdempotentDecomposition) -> Result<Vec<Module>> {
        if d.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        let k = self.rank();
        let mut parts = Vec::with_capacity(d.len());
        for (i, f) in d.factors().iter().enumerate() {
            let cols = self
                .relations()
                .iter()
                .map(|c| c.iter().map(|&a| d.project(i, a)).collect())
                .collect();
            parts.push(Module::from_presentation(Presentation::new(f, k, cols)?)?);
        }
        let total: usize = parts.iter().map(Module::cardinality).product();
        if total != self.cardinality() {
            return Err(Error::internal("component orders do not multiply out"));
        }
        let mut seen = vec![false; total];
        for x in self.elements() {
            let mut idx = 0;
            for (i, p) in parts.iter().enumerate() {
                let c: Vec<_> = self.coords(x).iter().map(|&a| d.project(i, a)).collect();
                idx = idx * p.cardinality() + p.from_coords(&c).index();
            }
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::internal("product decomposition is not injective"));
            }
        }
        Ok(parts)
    }
}

/// Splits `M ≅ R^r ⊕ N` with every element of `N` having nonzero
/// annihilator. Needs a local quasi-Frobenius ring, where an element with
/// zero annihilator spans a free summand.
pub fn free_summand_split(m: &Module) -> Result<(usize, Module)> {
    let ring = m.ring();
    if !ring.is_local()? || !double_annihilator_holds(ring)? {
        return Err(Error::Precondition(
            "free summand splitting needs a local quasi-Frobenius ring".into(),
        ));
    }
    let free = Module::free(ring, 1)?;
    let mut rank = 0;
    let mut n = m.clone();
    while let Some(x) = n.elements().find(|&x| n.has_zero_annihilator(x)) {
        let mut retraction = None;
        for_each_hom(&n, &free, |imgs| {
            let rho = ModuleHom::unchecked(&n, &free, imgs.to_vec());
            if rho.apply(x) == free.generator(0) {
                retraction = Some(rho);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        let rho = retraction.ok_or_else(|| Error::internal("no retraction onto a free summand"))?;
        let members = rho.kernel_members();
        let gens = minimal_generators_of(&n, &members)?;
        n = submodule(&n, &members, gens)?.0;
        rank += 1;
    }
    if ring.size().pow(rank as u32) * n.cardinality() != m.cardinality() {
        return Err(Error::internal("free summand split lost elements"));
    }
    Ok((rank, n))
}

fn double_annihilator_holds(ring: &Ring) -> Result<bool> {
    Ok(ring
        .ideals()?
        .iter()
        .all(|i| i.annihilator().annihilator() == *i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::is_isomorphic;

    fn ring(s: &str) -> Ring {
        Ring::parse(s).unwrap()
    }

    fn module(r: &Ring, rel: &str) -> Module {
        Module::from_presentation(Presentation::parse(r, rel).unwrap()).unwrap()
    }

    #[test]
    fn minimal_generator_counts() {
        let r = ring("Z/8");
        assert_eq!(module(&r, "2,0;0,4").minimal_generator_count().unwrap(), 2);
        assert_eq!(
            Module::free(&r, 2)
                .unwrap()
                .minimal_generator_count()
                .unwrap(),
            2
        );
        assert_eq!(Module::zero(&r).minimal_generator_count().unwrap(), 0);
        // A redundant presentation collapses.
        let m = module(&r, "1,0;0,0");
        assert_eq!(m.rank(), 2);
        assert_eq!(m.minimal_generator_count().unwrap(), 1);
        let z6 = ring("Z/6");
        assert!(matches!(
            Module::free(&z6, 1).unwrap().minimal_generators(),
            Err(Error::NonLocalRing)
        ));
    }

    #[test]
    fn projectivity() {
        let r = ring("Z/4");
        assert!(Module::free(&r, 1).unwrap().is_projective().unwrap());
        assert!(!module(&r, "2").is_projective().unwrap());
        let p = ring("Z/4 x Z/3");
        assert!(Module::free(&p, 1).unwrap().is_projective().unwrap());
        // Z/4 x 0 is projective over the product; Z/2 x Z/3 is not.
        assert!(module(&p, "(0,1)").is_projective().unwrap());
        assert!(!module(&p, "(2,0)").is_projective().unwrap());
    }

    #[test]
    fn decomposition_of_z6_over_z12() {
        let r = ring("Z/12");
        let d = r.idempotent_decomposition().unwrap();
        let parts = module(&r, "6").decompose_over_product(&d).unwrap();
        let sizes: Vec<(usize, usize)> = parts
            .iter()
            .map(|p| (p.ring().size(), p.cardinality()))
            .collect();
        assert_eq!(sizes, [(3, 3), (4, 2)]);
        let free = Module::free(&r, 2)
            .unwrap()
            .decompose_over_product(&d)
            .unwrap();
        assert!(free.iter().all(|p| p.is_projective().unwrap()));
        let zero = Module::zero(&r).decompose_over_product(&d).unwrap();
        assert!(zero.iter().all(Module::is_zero));
    }

    #[test]
    fn free_summands() {
        let r = ring("Z/4");
        let (k, n) = free_summand_split(&module(&r, "0,0;0,2")).unwrap();
        assert_eq!(k, 1);
        assert!(is_isomorphic(&n, &module(&r, "2")).unwrap().is_some());
        let (k, n) = free_summand_split(&module(&r, "2")).unwrap();
        assert_eq!((k, n.cardinality()), (0, 2));
        let (k, n) = free_summand_split(&Module::free(&ring("Z/8"), 2).unwrap()).unwrap();
        assert_eq!((k, n.is_zero()), (2, true));
        let sc = Ring::from_spec(&crate::RingSpec::gf2_square_zero_plane()).unwrap();
        assert!(matches!(
            free_summand_split(&Module::free(&sc, 1).unwrap()),
            Err(Error::Precondition(_))
        ));
        assert!(free_summand_split(&Module::free(&ring("Z/6"), 1).unwrap()).is_err());
    }

    #[test]
    fn exact_logs() {
        assert_eq!(exact_log(2, 8), Some(3));
        assert_eq!(exact_log(8, 4), None);
        assert_eq!(exact_log(5, 1), Some(0));
    }
}
