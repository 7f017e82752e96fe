use serde::Serialize;

use super::sgp::SgpWitness;
use crate::error::{Error, Result};
use crate::module::{is_isomorphic, ModuleHom};
use crate::ring::Ring;

/// The periodic complex `... -> R^n -f-> R^n -f-> R^n -> ...`.
#[derive(Clone, Debug)]
pub struct StronglyCompleteResolution {
    ring: Ring,
    rank: usize,
    map: ModuleHom,
    window: usize,
}

/// Cardinalities and exactness of `f` and of its transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub image_order: usize,
    pub kernel_order: usize,
    pub exact: bool,
    pub dual_image_order: usize,
    pub dual_kernel_order: usize,
    pub dual_exact: bool,
}

impl CompletenessReport {
    pub fn passes(&self) -> bool {
        self.exact && self.dual_exact
    }
}

/// `f = embedding ∘ projection`, checked to satisfy `Im f = Ker f` and
/// `Im f ≅ M`. One period suffices since the complex repeats.
pub fn strongly_complete_resolution(w: &SgpWitness) -> Result<StronglyCompleteResolution> {
    let f = w.projection().then(w.embedding())?;
    if f.image_members() != f.kernel_members() {
        return Err(Error::internal("witness map is not exact at R^n"));
    }
    let (image, _) = f.image()?;
    if is_isomorphic(&image, w.module())?.is_none() {
        return Err(Error::internal(
            "image of the witness map is not the module",
        ));
    }
    Ok(StronglyCompleteResolution {
        ring: w.module().ring().clone(),
        rank: w.rank(),
        map: f,
        window: 1,
    })
}

impl StronglyCompleteResolution {
    /// Wraps an arbitrary endomorphism of a free module, for checking.
    pub fn from_map(map: ModuleHom) -> Result<Self> {
        let src = map.source();
        let tgt = map.target();
        if !src.relations().is_empty() || !tgt.relations().is_empty() || src.rank() != tgt.rank() {
            return Err(Error::Precondition(
                "map must be an endomorphism of R^n".into(),
            ));
        }
        Ok(StronglyCompleteResolution {
            ring: src.ring().clone(),
            rank: src.rank(),
            map,
            window: 0,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn map(&self) -> &ModuleHom {
        &self.map
    }

    /// Number of periods verified at construction.
    pub fn window(&self) -> usize {
        self.window
    }

    /// Columns of `f` as element literals of `R^n`.
    pub fn matrix_literals(&self) -> Vec<String> {
        self.map.image_literals()
    }

    /// `Hom(-, R)` applied to `f`: under `Hom(R^n, R) = R^n` this is the
    /// transpose matrix.
    pub fn dual_map(&self) -> ModuleHom {
        let p = self.map.target();
        let cols: Vec<&[crate::Elem]> = self.map.images().iter().map(|&y| p.coords(y)).collect();
        let images = (0..self.rank)
            .map(|i| {
                let row: Vec<_> = cols.iter().map(|c| c[i]).collect();
                p.from_coords(&row)
            })
            .collect();
        ModuleHom::unchecked(p, p, images)
    }
}

/// Reports exactness of `f` and of its dual. Failures are data, not errors.
pub fn check_complete_resolution(res: &StronglyCompleteResolution) -> CompletenessReport {
    let f = res.map();
    let g = res.dual_map();
    CompletenessReport {
        image_order: f.image_order(),
        kernel_order: f.kernel_order(),
        exact: f.image_members() == f.kernel_members(),
        dual_image_order: g.image_order(),
        dual_kernel_order: g.kernel_order(),
        dual_exact: g.image_members() == g.kernel_members(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::find_sgp_witness;
    use crate::module::{Module, Presentation};
    use crate::ring::Elem;

    fn mult(r: &Ring, c: u32) -> StronglyCompleteResolution {
        let f = Module::free(r, 1).unwrap();
        let h = ModuleHom::new(&f, &f, vec![f.from_coords(&[Elem(c)])]).unwrap();
        StronglyCompleteResolution::from_map(h).unwrap()
    }

    #[test]
    fn doubling_on_z4() {
        let r = Ring::parse("Z/4").unwrap();
        let m = Module::from_presentation(Presentation::parse(&r, "2").unwrap()).unwrap();
        let w = find_sgp_witness(&m).unwrap().unwrap();
        let res = strongly_complete_resolution(&w).unwrap();
        assert_eq!(res.matrix_literals(), ["2"]);
        let rep = check_complete_resolution(&res);
        assert!(rep.passes());
        assert_eq!(
            (rep.image_order, rep.kernel_order, rep.dual_image_order),
            (2, 2, 2)
        );
    }

    #[test]
    fn controls() {
        let r = Ring::parse("Z/8").unwrap();
        let rep = check_complete_resolution(&mult(&r, 2));
        assert!(!rep.exact);
        assert_eq!((rep.image_order, rep.kernel_order), (4, 2));
        let rep = check_complete_resolution(&mult(&r, 1));
        assert!(!rep.exact);
        assert_eq!((rep.image_order, rep.kernel_order), (8, 1));
    }

    #[test]
    fn rank_two_over_z8() {
        let r = Ring::parse("Z/8").unwrap();
        let m = Module::from_presentation(Presentation::parse(&r, "2,0;0,4").unwrap()).unwrap();
        let w = find_sgp_witness(&m).unwrap().unwrap();
        let res = strongly_complete_resolution(&w).unwrap();
        let rep = check_complete_resolution(&res);
        assert!(rep.passes());
        assert_eq!((rep.image_order, rep.kernel_order), (8, 8));
    }
}
