use crate::error::{Error, Result};
use crate::module::{Module, ModuleHom};

/// The surjection `R^g -> M` onto the minimal generators. Local rings only.
pub fn free_cover(m: &Module) -> Result<ModuleHom> {
    let gens = m.minimal_generators()?;
    let free = Module::free(m.ring(), gens.len())?;
    ModuleHom::new(&free, m, gens)
}

/// Minimal free resolution `... -> P_1 -> P_0 -> M`.
///
/// `syzygies[i]` is the kernel of the map out of `P_i`, included into
/// `P_i`; its generator images are the columns of the next differential.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    module: Module,
    augmentation: ModuleHom,
    differentials: Vec<ModuleHom>,
    syzygies: Vec<ModuleHom>,
}

/// Resolves `m` to `length` free terms, verifying `Im d_{i+1} = Ker d_i`
/// elementwise at each stage. Once a syzygy vanishes the remaining terms
/// are zero.
pub fn free_resolution(m: &Module, length: usize) -> Result<FreeResolution> {
    if length == 0 {
        return Err(Error::Precondition(
            "resolution length must be at least 1".into(),
        ));
    }
    let ring = m.ring();
    let augmentation = free_cover(m)?;
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut prev = augmentation.clone();
    for i in 0..length {
        let (k, inclusion) = prev.kernel()?;
        syzygies.push(inclusion.clone());
        if i + 1 == length {
            break;
        }
        let free = Module::free(ring, k.rank())?;
        // k carries a minimal presentation, so its generators cover it minimally.
        let d = ModuleHom::unchecked(&free, inclusion.target(), inclusion.images().to_vec());
        if d.image_members() != prev.kernel_members() {
            return Err(Error::internal(format!(
                "resolution is not exact at stage {i}"
            )));
        }
        if d.then(&prev)?.images().iter().any(|y| y.0 != 0) {
            return Err(Error::internal(format!("d o d is nonzero at stage {i}")));
        }
        differentials.push(d.clone());
        prev = d;
    }
    Ok(FreeResolution {
        module: m.clone(),
        augmentation,
        differentials,
        syzygies,
    })
}

impl FreeResolution {
    pub fn module(&self) -> &Module {
        &self.module
    }

    /// `P_0 -> M`.
    pub fn augmentation(&self) -> &ModuleHom {
        &self.augmentation
    }

    /// `d_i : P_i -> P_{i-1}` for `i = 1 .. length-1`.
    pub fn differentials(&self) -> &[ModuleHom] {
        &self.differentials
    }

    /// Inclusions `Ω^{i+1} -> P_i` for `i = 0 .. length-1`.
    pub fn syzygies(&self) -> &[ModuleHom] {
        &self.syzygies
    }

    pub fn length(&self) -> usize {
        self.syzygies.len()
    }

    /// Ranks of `P_0 .. P_{length-1}`.
    pub fn ranks(&self) -> Vec<usize> {
        std::iter::once(self.augmentation.source().rank())
            .chain(self.differentials.iter().map(|d| d.source().rank()))
            .collect()
    }

    /// Columns of each syzygy inclusion as element literals of `P_i`.
    pub fn maps(&self) -> Vec<Vec<String>> {
        self.syzygies
            .iter()
            .map(ModuleHom::image_literals)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Presentation;
    use crate::ring::Ring;

    fn module(r: &str, rel: &str) -> Module {
        let r = Ring::parse(r).unwrap();
        Module::from_presentation(Presentation::parse(&r, rel).unwrap()).unwrap()
    }

    #[test]
    fn covers() {
        assert_eq!(free_cover(&module("Z/4", "2")).unwrap().source().rank(), 1);
        assert_eq!(
            free_cover(&module("Z/8", "2,0;0,4"))
                .unwrap()
                .source()
                .rank(),
            2
        );
        let c = free_cover(&module("Z/8", "0,0;0,0")).unwrap();
        assert!(c.is_bijective());
        assert!(matches!(
            free_cover(&module("Z/6", "2")),
            Err(Error::NonLocalRing)
        ));
    }

    #[test]
    fn periodic_resolutions() {
        let r = free_resolution(&module("Z/4", "2"), 3).unwrap();
        assert_eq!(r.ranks(), [1, 1, 1]);
        assert_eq!(r.maps(), [["2"], ["2"], ["2"]]);
        let r = free_resolution(&module("Z/8", "2"), 3).unwrap();
        assert_eq!(r.ranks(), [1, 1, 1]);
        assert_eq!(r.maps(), [["2"], ["4"], ["2"]]);
    }

    #[test]
    fn projective_resolution_stops() {
        let r = free_resolution(&module("Z/8", "0,0;0,0"), 3).unwrap();
        assert_eq!(r.ranks(), [2, 0, 0]);
        assert!(r.syzygies()[0].source().is_zero());
    }
}
