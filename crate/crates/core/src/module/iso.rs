use std::ops::ControlFlow;

use super::hom::{for_each_hom, submodule, ModuleHom};
use super::{ModElem, Module};
use crate::error::{Error, Result};

/// Returns an isomorphism `m1 -> m2` if one exists.
///
/// Modules are first compared by order, annihilator and (over a local
/// ring) minimal generator count. The witness is the first bijective hom
/// in canonical order. When the direct search exceeds the hom guard over a
/// local ring, `m1` is replaced by a minimal presentation and the first
/// bijection from that presentation is pulled back.
pub fn is_isomorphic(m1: &Module, m2: &Module) -> Result<Option<ModuleHom>> {
    if m1.ring() != m2.ring() {
        return Err(Error::RingMismatch);
    }
    if m1.cardinality() != m2.cardinality() || m1.annihilator() != m2.annihilator() {
        return Ok(None);
    }
    let local = m1.ring().is_local()?;
    if local && m1.minimal_generator_count()? != m2.minimal_generator_count()? {
        return Ok(None);
    }
    match first_bijection(m1, m2) {
        Err(Error::GuardExceeded { .. }) if local => {}
        other => return other,
    }
    let all = vec![true; m1.cardinality()];
    let (small, cover) = submodule(m1, &all, m1.minimal_generators()?)?;
    let Some(h) = first_bijection(&small, m2)? else {
        return Ok(None);
    };
    // cover: small -> m1 is bijective; invert it on the generators of m1.
    let mut inverse = vec![ModElem::ZERO; m1.cardinality()];
    for x in small.elements() {
        inverse[cover.apply(x).index()] = x;
    }
    let images = m1
        .generators()
        .iter()
        .map(|g| h.apply(inverse[g.index()]))
        .collect();
    Ok(Some(ModuleHom::unchecked(m1, m2, images)))
}

fn first_bijection(m1: &Module, m2: &Module) -> Result<Option<ModuleHom>> {
    let mut found = None;
    for_each_hom(m1, m2, |imgs| {
        let h = ModuleHom::unchecked(m1, m2, imgs.to_vec());
        if h.is_surjective() {
            found = Some(h);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Presentation;
    use crate::ring::{Elem, Ideal, Ring};

    fn module(r: &Ring, rel: &str) -> Module {
        Module::from_presentation(Presentation::parse(r, rel).unwrap()).unwrap()
    }

    #[test]
    fn ideal_versus_quotient() {
        let r = Ring::parse("Z/4").unwrap();
        let (two_r, _) = Module::from_ideal(&Ideal::generated(&r, &[Elem(2)])).unwrap();
        let w = is_isomorphic(&two_r, &module(&r, "2")).unwrap().unwrap();
        assert!(w.is_bijective() && w.check_linear());

        let r = Ring::parse("Z/8").unwrap();
        assert!(is_isomorphic(&module(&r, "2"), &module(&r, "4"))
            .unwrap()
            .is_none());
        let (two_r, _) = Module::from_ideal(&Ideal::generated(&r, &[Elem(2)])).unwrap();
        assert!(is_isomorphic(&two_r, &module(&r, "4")).unwrap().is_some());
    }

    #[test]
    fn same_order_different_structure() {
        let r = Ring::parse("Z/8").unwrap();
        let a = module(&r, "2,0;0,4");
        assert!(module(&r, "1").is_zero());
        assert!(is_isomorphic(&a, &Module::free(&r, 1).unwrap())
            .unwrap()
            .is_none());
        let swapped = module(&r, "4,0;0,2");
        assert!(is_isomorphic(&a, &swapped).unwrap().is_some());
    }

    #[test]
    fn padding_is_invisible() {
        let r = Ring::parse("Z/8").unwrap();
        let m = module(&r, "2,0;0,4");
        let padded = m.direct_sum(&Module::zero(&r)).unwrap();
        assert!(is_isomorphic(&m, &padded).unwrap().is_some());
        let redundant = module(&r, "2,0,0;0,4,0;0,0,1");
        assert!(is_isomorphic(&redundant, &m).unwrap().is_some());
    }
}
