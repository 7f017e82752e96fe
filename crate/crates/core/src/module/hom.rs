use std::ops::ControlFlow;

use super::{ModElem, Module, Presentation, TupleSpace};
use crate::error::{Error, Result};
use crate::ring::Elem;

/// A hom given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    source: Module,
    target: Module,
    images: Vec<ModElem>,
}

impl ModuleHom {
    /// Checks that every source relation maps to zero.
    pub fn new(source: &Module, target: &Module, images: Vec<ModElem>) -> Result<ModuleHom> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if images.len() != source.rank() {
            return Err(Error::Precondition(format!(
                "{} images for {} generators",
                images.len(),
                source.rank()
            )));
        }
        if images.iter().any(|x| x.index() >= target.cardinality()) {
            return Err(Error::Precondition("image outside the target".into()));
        }
        if source
            .relations()
            .iter()
            .any(|col| combine(target, col, &images) != ModElem::ZERO)
        {
            return Err(Error::Precondition(
                "images violate a source relation".into(),
            ));
        }
        Ok(ModuleHom::unchecked(source, target, images))
    }

    pub(crate) fn unchecked(source: &Module, target: &Module, images: Vec<ModElem>) -> ModuleHom {
        ModuleHom {
            source: source.clone(),
            target: target.clone(),
            images,
        }
    }

    pub fn identity(m: &Module) -> ModuleHom {
        ModuleHom::unchecked(m, m, m.generators())
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleHom {
        ModuleHom::unchecked(source, target, vec![ModElem::ZERO; source.rank()])
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn images(&self) -> &[ModElem] {
        &self.images
    }

    pub fn apply(&self, x: ModElem) -> ModElem {
        combine(&self.target, self.source.coords(x), &self.images)
    }

    /// Image of every source element, indexed by element.
    pub fn table(&self) -> Vec<ModElem> {
        self.source.elements().map(|x| self.apply(x)).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if !same_module(&self.target, &other.source) {
            return Err(Error::Precondition(
                "composing homs with mismatched modules".into(),
            ));
        }
        let images = self.images.iter().map(|&y| other.apply(y)).collect();
        Ok(ModuleHom::unchecked(&self.source, &other.target, images))
    }

    pub fn kernel_members(&self) -> Vec<bool> {
        self.table()
            .into_iter()
            .map(|y| y == ModElem::ZERO)
            .collect()
    }

    pub fn image_members(&self) -> Vec<bool> {
        self.target.span(&self.images)
    }

    pub fn kernel_order(&self) -> usize {
        self.kernel_members().iter().filter(|&&b| b).count()
    }

    pub fn image_order(&self) -> usize {
        self.image_members().iter().filter(|&&b| b).count()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == self.target.cardinality()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.cardinality() == self.target.cardinality() && self.is_surjective()
    }

    /// Kernel as a module, with its inclusion into the source.
    pub fn kernel(&self) -> Result<(Module, ModuleHom)> {
        let members = self.kernel_members();
        let gens = sub_generators(&self.source, &members)?;
        submodule(&self.source, &members, gens)
    }

    /// Image as a module, with its inclusion into the target.
    pub fn image(&self) -> Result<(Module, ModuleHom)> {
        let members = self.image_members();
        let gens = sub_generators(&self.target, &members)?;
        submodule(&self.target, &members, gens)
    }

    /// Target modulo the image, with the projection from the target.
    pub fn cokernel(&self) -> Result<(Module, ModuleHom)> {
        let t = &self.target;
        let mut cols = t.relations().to_vec();
        cols.extend(self.images.iter().map(|&y| t.coords(y).to_vec()));
        let q = Module::from_presentation(Presentation::new(t.ring(), t.rank(), cols)?)?;
        let proj = ModuleHom::unchecked(t, &q, q.generators());
        Ok((q, proj))
    }

    /// Exhaustive additivity and scalar-equivariance check on all elements.
    pub fn check_linear(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        let table = self.table();
        let additive = s.elements().all(|a| {
            s.elements()
                .all(|b| table[s.add(a, b).index()] == t.add(table[a.index()], table[b.index()]))
        });
        additive
            && s.ring().elements().all(|r| {
                s.elements()
                    .all(|a| table[s.scale(r, a).index()] == t.scale(r, table[a.index()]))
            })
    }

    /// Images as element literals of the target.
    pub fn image_literals(&self) -> Vec<String> {
        self.images
            .iter()
            .map(|&y| self.target.fmt_elem(y))
            .collect()
    }
}

/// Modules share one value (clones of the same construction).
pub(crate) fn same_module(a: &Module, b: &Module) -> bool {
    std::sync::Arc::ptr_eq(&a.0, &b.0)
}

/// `Σ coeffs[i] · elems[i]` in `m`.
pub(crate) fn combine(m: &Module, coeffs: &[Elem], elems: &[ModElem]) -> ModElem {
    coeffs
        .iter()
        .zip(elems)
        .fold(ModElem::ZERO, |acc, (&c, &x)| m.add(acc, m.scale(c, x)))
}

/// Visits every hom in canonical order: lexicographic on the image tuple,
/// first generator most significant. Relation columns are checked as soon
/// as their last nonzero entry is assigned.
pub fn for_each_hom<F>(source: &Module, target: &Module, mut visit: F) -> Result<()>
where
    F: FnMut(&[ModElem]) -> ControlFlow<()>,
{
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch);
    }
    let k = source.rank();
    let limit = source.ring().limits().max_hom_candidates;
    let candidates = (target.cardinality() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if candidates > limit {
        return Err(Error::guard("hom candidates", candidates, limit));
    }
    let mut due: Vec<Vec<&[Elem]>> = vec![Vec::new(); k];
    for col in source.relations() {
        if let Some(last) = col.iter().rposition(|&a| a != Elem::ZERO) {
            due[last].push(&col[..=last]);
        }
    }
    let mut images = vec![ModElem::ZERO; k];
    let _ = search(target, &due, &mut images, 0, &mut visit);
    Ok(())
}

fn search<F>(
    target: &Module,
    due: &[Vec<&[Elem]>],
    images: &mut Vec<ModElem>,
    depth: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[ModElem]) -> ControlFlow<()>,
{
    if depth == images.len() {
        return visit(images);
    }
    for y in target.elements() {
        images[depth] = y;
        if due[depth]
            .iter()
            .all(|col| combine(target, col, &images[..=depth]) == ModElem::ZERO)
        {
            search(target, due, images, depth + 1, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// All homs `source -> target` in canonical order.
pub fn hom_set(source: &Module, target: &Module) -> Result<Vec<ModuleHom>> {
    let mut out = Vec::new();
    for_each_hom(source, target, |imgs| {
        out.push(ModuleHom::unchecked(source, target, imgs.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Minimal generators over a local ring, greedy otherwise.
pub(crate) fn sub_generators(ambient: &Module, members: &[bool]) -> Result<Vec<ModElem>> {
    if ambient.ring().nonunits_closed_under_addition() {
        super::structure::minimal_generators_of(ambient, members)
    } else {
        Ok(ambient.greedy_generators(members))
    }
}

/// Presents the submodule spanned by `gens` (whose span must be `members`):
/// relations are all of `{r in R^g : Σ r_i gens_i = 0}`, reduced greedily.
pub(crate) fn submodule(
    ambient: &Module,
    members: &[bool],
    gens: Vec<ModElem>,
) -> Result<(Module, ModuleHom)> {
    let ring = ambient.ring();
    let g = gens.len();
    let space = TupleSpace::new(ring, g)?;
    let free = Module::free(ring, g)?;
    let syzygies: Vec<bool> = (0..space.count() as u32)
        .map(|t| combine(ambient, &space.decode(t), &gens) == ModElem::ZERO)
        .collect();
    let order = members.iter().filter(|&&b| b).count();
    let syz_order = syzygies.iter().filter(|&&b| b).count();
    if order * syz_order != space.count() {
        return Err(Error::internal("generators do not span the submodule"));
    }
    // Free module elements coincide with tuples, so indices carry over.
    let cols = free
        .greedy_generators(&syzygies)
        .into_iter()
        .map(|x| free.coords(x).to_vec())
        .collect();
    let sub = Module::from_presentation(Presentation::new(ring, g, cols)?)?;
    if sub.cardinality() != order {
        return Err(Error::internal(
            "submodule presentation has the wrong order",
        ));
    }
    let inclusion = ModuleHom::unchecked(&sub, ambient, gens);
    Ok((sub, inclusion))
}
