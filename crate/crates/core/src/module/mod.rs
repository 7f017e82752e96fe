//! Finitely presented modules over finite rings.
//!
//! A module is `R^k` modulo the span of its relation columns. Elements are
//! the cosets, each represented by its least member; tuples of `R^k` are
//! ordered with the last coordinate most significant.

mod hom;
mod iso;
pub(crate) mod structure;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::spec::Cursor;
use crate::ring::{Elem, Ideal, Ring};

pub use hom::{for_each_hom, hom_set, ModuleHom};
pub use iso::is_isomorphic;
pub use structure::free_summand_split;

/// Relation matrix over a ring: `generators` rows, one column per relation.
#[derive(Clone)]
pub struct Presentation {
    ring: Ring,
    generators: usize,
    relations: Vec<Vec<Elem>>,
}

impl Presentation {
    /// `relations` are columns of length `generators`.
    pub fn new(ring: &Ring, generators: usize, relations: Vec<Vec<Elem>>) -> Result<Self> {
        for col in &relations {
            if col.len() != generators {
                return Err(Error::Precondition(format!(
                    "relation column of length {} for {generators} generators",
                    col.len()
                )));
            }
            if let Some(e) = col.iter().find(|e| !ring.contains(**e)) {
                return Err(Error::Precondition(format!(
                    "entry {} is not a ring element",
                    e.0
                )));
            }
        }
        Ok(Presentation {
            ring: ring.clone(),
            generators,
            relations,
        })
    }

    pub fn free(ring: &Ring, rank: usize) -> Self {
        Presentation {
            ring: ring.clone(),
            generators: rank,
            relations: Vec::new(),
        }
    }

    /// Reads the matrix format: rows separated by `;`, entries by `,`,
    /// each entry an element literal. Blank text is the zero module.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(Presentation::free(ring, 0));
        }
        let mut cur = Cursor::new(text)?;
        let mut rows: Vec<Vec<Elem>> = vec![Vec::new()];
        loop {
            rows.last_mut().unwrap().push(ring.parse_elem_at(&mut cur)?);
            if cur.eat(b',') {
                continue;
            }
            if cur.eat(b';') {
                rows.push(Vec::new());
                continue;
            }
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            return Err(Error::parse(cur.pos, "expected ',' or ';'"));
        }
        let width = rows[0].len();
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::parse(
                0,
                format!("row {i} has {} entries, expected {width}", rows[i].len()),
            ));
        }
        let columns = (0..width)
            .map(|j| rows.iter().map(|r| r[j]).collect())
            .collect();
        Presentation::new(ring, rows.len(), columns)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &[Vec<Elem>] {
        &self.relations
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.generators)
            .map(|i| {
                self.relations
                    .iter()
                    .map(|c| self.ring.fmt_elem(c[i]))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// A module element, identified by the index of its coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModElem(pub u32);

impl ModElem {
    pub const ZERO: ModElem = ModElem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Arithmetic on raw tuples of `R^k`, encoded with coordinate 0 least significant.
#[derive(Clone)]
pub(crate) struct TupleSpace {
    ring: Ring,
    rank: usize,
    count: usize,
}

impl TupleSpace {
    pub(crate) fn new(ring: &Ring, rank: usize) -> Result<Self> {
        let limit = ring.limits().max_module_tuples;
        let count = (ring.size() as u128)
            .checked_pow(rank as u32)
            .unwrap_or(u128::MAX);
        if count > limit as u128 {
            return Err(Error::guard("module tuple space", count, limit as u128));
        }
        Ok(TupleSpace {
            ring: ring.clone(),
            rank,
            count: count as usize,
        })
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }

    pub(crate) fn encode(&self, coords: &[Elem]) -> u32 {
        let n = self.ring.size();
        coords
            .iter()
            .rev()
            .fold(0usize, |acc, c| acc * n + c.index()) as u32
    }

    pub(crate) fn decode(&self, mut idx: u32) -> Vec<Elem> {
        let n = self.ring.size() as u32;
        (0..self.rank)
            .map(|_| {
                let d = Elem(idx % n);
                idx /= n;
                d
            })
            .collect()
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<Elem> = x
            .iter()
            .zip(&y)
            .map(|(&p, &q)| self.ring.add(p, q))
            .collect();
        self.encode(&sum)
    }

    pub(crate) fn scale(&self, r: Elem, a: u32) -> u32 {
        let x: Vec<Elem> = self
            .decode(a)
            .into_iter()
            .map(|p| self.ring.mul(r, p))
            .collect();
        self.encode(&x)
    }
}

/// Grows `list`/`members` by the cosets `S + y`; see `ring::ideal::absorb`.
pub(crate) fn absorb_with(
    members: &mut [bool],
    list: &mut Vec<u32>,
    new: impl IntoIterator<Item = u32>,
    add: impl Fn(u32, u32) -> u32,
) {
    for y in new {
        if members[y as usize] {
            continue;
        }
        let len = list.len();
        for i in 0..len {
            let z = add(list[i], y);
            if !members[z as usize] {
                members[z as usize] = true;
                list.push(z);
            }
        }
    }
}

struct ModuleInner {
    pres: Presentation,
    space: TupleSpace,
    /// Tuple index of each element's least representative, ascending.
    reps: Vec<u32>,
    class_of: Vec<u32>,
    /// Representative coordinates, `rank` per element.
    coords: Vec<Elem>,
}

/// A finite module with enumerated elements. Cloning is cheap.
#[derive(Clone)]
pub struct Module(Arc<ModuleInner>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module(R^{} / [{}] over {}, |M|={})",
            self.rank(),
            self.0.pres,
            self.ring().label(),
            self.cardinality()
        )
    }
}

impl Module {
    pub fn from_presentation(pres: Presentation) -> Result<Module> {
        let space = TupleSpace::new(&pres.ring, pres.generators)?;
        let t = space.count();
        let mut members = vec![false; t];
        members[0] = true;
        let mut span = vec![0u32];
        for col in &pres.relations {
            let c = space.encode(col);
            let cyclic: Vec<u32> = pres.ring.elements().map(|r| space.scale(r, c)).collect();
            absorb_with(&mut members, &mut span, cyclic, |a, b| space.add(a, b));
        }
        let mut class_of = vec![u32::MAX; t];
        let mut reps = Vec::with_capacity(t / span.len());
        for rep in 0..t as u32 {
            if class_of[rep as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(rep);
            for &s in &span {
                class_of[space.add(rep, s) as usize] = id;
            }
        }
        let coords = reps.iter().flat_map(|&r| space.decode(r)).collect();
        Ok(Module(Arc::new(ModuleInner {
            pres,
            space,
            reps,
            class_of,
            coords,
        })))
    }

    pub fn free(ring: &Ring, rank: usize) -> Result<Module> {
        Module::from_presentation(Presentation::free(ring, rank))
    }

    pub fn zero(ring: &Ring) -> Module {
        Module::free(ring, 0).expect("zero module fits any guard")
    }

    /// `R/I`, presented by the generators of `I`.
    pub fn quotient_ring(ideal: &Ideal) -> Result<Module> {
        let cols = ideal.generators().iter().map(|&g| vec![g]).collect();
        Module::from_presentation(Presentation::new(ideal.ring(), 1, cols)?)
    }

    /// The ideal as a submodule of `R`, with its inclusion.
    pub fn from_ideal(ideal: &Ideal) -> Result<(Module, ModuleHom)> {
        let ring = ideal.ring();
        let free = Module::free(ring, 1)?;
        let mut members = vec![false; free.cardinality()];
        for &x in ideal.elements() {
            members[free.from_coords(&[x]).index()] = true;
        }
        let gens = if ring.nonunits_closed_under_addition() {
            structure::minimal_generators_of(&free, &members)?
        } else {
            free.greedy_generators(&members)
        };
        hom::submodule(&free, &members, gens)
    }

    /// Block-diagonal presentation of `self ⊕ other`.
    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let (k1, k2) = (self.rank(), other.rank());
        let zero = self.ring().zero();
        let mut cols = Vec::new();
        for c in self.relations() {
            let mut col = c.clone();
            col.resize(k1 + k2, zero);
            cols.push(col);
        }
        for c in other.relations() {
            let mut col = vec![zero; k1];
            col.extend_from_slice(c);
            cols.push(col);
        }
        Module::from_presentation(Presentation::new(self.ring(), k1 + k2, cols)?)
    }

    pub fn direct_sum_all(ring: &Ring, parts: &[Module]) -> Result<Module> {
        parts
            .iter()
            .try_fold(Module::zero(ring), |acc, m| acc.direct_sum(m))
    }

    pub fn ring(&self) -> &Ring {
        &self.0.pres.ring
    }

    pub fn presentation(&self) -> &Presentation {
        &self.0.pres
    }

    pub fn relations(&self) -> &[Vec<Elem>] {
        &self.0.pres.relations
    }

    /// Number of generators in the presentation.
    pub fn rank(&self) -> usize {
        self.0.pres.generators
    }

    pub fn cardinality(&self) -> usize {
        self.0.reps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cardinality() == 1
    }

    /// Number of tuples of `R^k`, i.e. `|R|^k`.
    pub fn tuple_count(&self) -> usize {
        self.0.space.count()
    }

    pub fn elements(&self) -> impl Iterator<Item = ModElem> + Clone {
        (0..self.cardinality() as u32).map(ModElem)
    }

    pub fn coords(&self, x: ModElem) -> &[Elem] {
        let k = self.rank();
        &self.0.coords[x.index() * k..(x.index() + 1) * k]
    }

    pub fn from_coords(&self, coords: &[Elem]) -> ModElem {
        debug_assert_eq!(coords.len(), self.rank());
        ModElem(self.0.class_of[self.0.space.encode(coords) as usize])
    }

    pub fn generator(&self, i: usize) -> ModElem {
        let mut c = vec![self.ring().zero(); self.rank()];
        c[i] = self.ring().one();
        self.from_coords(&c)
    }

    pub fn generators(&self) -> Vec<ModElem> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    pub fn add(&self, a: ModElem, b: ModElem) -> ModElem {
        let t = self
            .0
            .space
            .add(self.0.reps[a.index()], self.0.reps[b.index()]);
        ModElem(self.0.class_of[t as usize])
    }

    pub fn neg(&self, a: ModElem) -> ModElem {
        let r = self.ring();
        let c: Vec<Elem> = self.coords(a).iter().map(|&x| r.neg(x)).collect();
        self.from_coords(&c)
    }

    pub fn scale(&self, r: Elem, a: ModElem) -> ModElem {
        let t = self.0.space.scale(r, self.0.reps[a.index()]);
        ModElem(self.0.class_of[t as usize])
    }

    /// Membership table of the submodule generated by `gens`.
    pub fn span(&self, gens: &[ModElem]) -> Vec<bool> {
        let mut members = vec![false; self.cardinality()];
        members[0] = true;
        let mut list = vec![0u32];
        for &g in gens {
            self.absorb_cyclic(&mut members, &mut list, g);
        }
        members
    }

    pub(crate) fn absorb_cyclic(&self, members: &mut [bool], list: &mut Vec<u32>, g: ModElem) {
        let cyclic: Vec<u32> = self.ring().elements().map(|r| self.scale(r, g).0).collect();
        absorb_with(members, list, cyclic, |a, b| {
            self.add(ModElem(a), ModElem(b)).0
        });
    }

    /// Repeatedly picks the least member not yet generated.
    pub(crate) fn greedy_generators(&self, members: &[bool]) -> Vec<ModElem> {
        let mut span = vec![false; self.cardinality()];
        span[0] = true;
        let mut list = vec![0u32];
        let mut gens = Vec::new();
        for x in self.elements() {
            if members[x.index()] && !span[x.index()] {
                gens.push(x);
                self.absorb_cyclic(&mut span, &mut list, x);
            }
        }
        gens
    }

    /// `Ann(M) = {r : r g = 0 for every generator g}`.
    pub fn annihilator(&self) -> Ideal {
        let gens = self.generators();
        let r = self.ring();
        let elements = r
            .elements()
            .filter(|&a| gens.iter().all(|&g| self.scale(a, g) == ModElem::ZERO))
            .collect();
        Ideal::from_elements(r, elements)
    }

    /// `Ann(x) = {r : r x = 0}`.
    pub fn element_annihilator(&self, x: ModElem) -> Ideal {
        let r = self.ring();
        let elements = r
            .elements()
            .filter(|&a| self.scale(a, x) == ModElem::ZERO)
            .collect();
        Ideal::from_elements(r, elements)
    }

    /// True when `r x = 0` forces `r = 0`.
    pub fn has_zero_annihilator(&self, x: ModElem) -> bool {
        self.ring()
            .elements()
            .skip(1)
            .all(|a| self.scale(a, x) != ModElem::ZERO)
    }

    /// Literal of the representative: the ring literal for one generator,
    /// a tuple otherwise.
    pub fn fmt_elem(&self, x: ModElem) -> String {
        let r = self.ring();
        match self.rank() {
            0 => "0".into(),
            1 => r.fmt_elem(self.coords(x)[0]),
            _ => {
                let parts: Vec<String> = self.coords(x).iter().map(|&c| r.fmt_elem(c)).collect();
                format!("({})", parts.join(","))
            }
        }
    }
}
