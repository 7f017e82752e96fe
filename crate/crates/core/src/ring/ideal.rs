use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::{Elem, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct IdealData {
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

/// An ideal of a finite ring: its sorted element set plus a generating list.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} |I|={}", self, self.len())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|&g| self.ring.fmt_elem(g))
            .collect();
        write!(f, "({})", gens.join(","))
    }
}

/// Adds the cosets `S + y` for every `y` in `new` not already present.
/// When `S` is a union of cosets of a group containing `new`, the result is
/// the subgroup sum.
pub(crate) fn absorb(
    ring: &Ring,
    members: &mut [bool],
    list: &mut Vec<Elem>,
    new: impl IntoIterator<Item = Elem>,
) {
    for y in new {
        if members[y.index()] {
            continue;
        }
        let len = list.len();
        for i in 0..len {
            let z = ring.add(list[i], y);
            if !members[z.index()] {
                members[z.index()] = true;
                list.push(z);
            }
        }
    }
}

fn sorted(mut v: Vec<Elem>) -> Vec<Elem> {
    v.sort_unstable();
    v
}

impl Ring {
    fn principal_elements(&self, x: Elem) -> Vec<Elem> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for s in self.elements() {
            let y = self.mul(x, s);
            if !seen[y.index()] {
                seen[y.index()] = true;
                out.push(y);
            }
        }
        sorted(out)
    }

    /// The full ideal lattice, sorted by cardinality then element list.
    pub fn ideals(&self) -> Result<Vec<Ideal>> {
        let data = self
            .0
            .lattice
            .get_or_init(|| self.compute_lattice())
            .clone()?;
        Ok(data
            .into_iter()
            .map(|d| Ideal {
                ring: self.clone(),
                elements: d.elements,
                generators: d.generators,
            })
            .collect())
    }

    fn compute_lattice(&self) -> Result<Vec<IdealData>> {
        let limit = self.limits().max_lattice_size;
        if self.size() > limit {
            return Err(Error::guard(
                "ideal lattice ring",
                self.size() as u128,
                limit as u128,
            ));
        }
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut all: Vec<IdealData> = Vec::new();
        let mut principals: Vec<Vec<Elem>> = Vec::new();
        for x in self.elements() {
            let els = self.principal_elements(x);
            if seen.insert(els.clone()) {
                principals.push(els.clone());
                all.push(IdealData {
                    elements: els,
                    generators: vec![x],
                });
            }
        }
        // Every ideal of a finite ring is a finite sum of principal ideals.
        let mut queue: VecDeque<usize> = (0..all.len()).collect();
        while let Some(i) = queue.pop_front() {
            for p in &principals {
                let base = &all[i].elements;
                let mut members = vec![false; self.size()];
                for e in base {
                    members[e.index()] = true;
                }
                let mut list = base.clone();
                absorb(self, &mut members, &mut list, p.iter().copied());
                let list = sorted(list);
                if seen.insert(list.clone()) {
                    let generators = self.choose_generators(&list);
                    all.push(IdealData {
                        elements: list,
                        generators,
                    });
                    queue.push_back(all.len() - 1);
                }
            }
        }
        all.sort_by(|a, b| (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements)));
        Ok(all)
    }

    /// A single generator when the set is principal, else a greedy list.
    fn choose_generators(&self, elements: &[Elem]) -> Vec<Elem> {
        if let Some(&x) = elements
            .iter()
            .find(|&&x| self.principal_elements(x).len() == elements.len())
        {
            return vec![x];
        }
        let mut members = vec![false; self.size()];
        members[0] = true;
        let mut list = vec![Elem::ZERO];
        let mut gens = Vec::new();
        for &x in elements {
            if !members[x.index()] {
                gens.push(x);
                absorb(self, &mut members, &mut list, self.principal_elements(x));
            }
        }
        gens
    }

    /// Maximal elements of the proper-ideal poset.
    pub fn maximal_ideals(&self) -> Result<Vec<Ideal>> {
        let ideals = self.ideals()?;
        let n = self.size();
        let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.len() < n).collect();
        Ok(proper
            .iter()
            .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
            .map(|i| (*i).clone())
            .collect())
    }

    /// Runs both locality tests (one maximal ideal; non-units closed under
    /// addition) and requires them to agree.
    pub fn is_local(&self) -> Result<bool> {
        let by_lattice = self.maximal_ideals()?.len() == 1;
        let by_units = self.nonunits_closed_under_addition();
        if by_lattice != by_units {
            return Err(Error::internal(format!(
                "locality tests disagree on {}: lattice {by_lattice}, non-units {by_units}",
                self.label()
            )));
        }
        Ok(by_lattice)
    }

    /// The maximal ideal of a local ring (its non-units), without the lattice.
    pub fn local_maximal_ideal(&self) -> Result<Ideal> {
        if !self.nonunits_closed_under_addition() {
            return Err(Error::NonLocalRing);
        }
        Ok(Ideal::from_elements(self, self.nonunits()))
    }

    pub fn jacobson_radical(&self) -> Result<Ideal> {
        let maxes = self.maximal_ideals()?;
        let elements = self
            .elements()
            .filter(|&x| maxes.iter().all(|m| m.contains(x)))
            .collect();
        Ok(Ideal::from_elements(self, elements))
    }
}

impl Ideal {
    /// Smallest ideal containing `gens`: the additive closure of all `g * s`.
    pub fn generated(ring: &Ring, gens: &[Elem]) -> Ideal {
        let mut members = vec![false; ring.size()];
        members[0] = true;
        let mut list = vec![Elem::ZERO];
        for &g in gens {
            absorb(ring, &mut members, &mut list, ring.principal_elements(g));
        }
        Ideal {
            ring: ring.clone(),
            elements: sorted(list),
            generators: gens.to_vec(),
        }
    }

    /// Wraps an element set already known to be an ideal, choosing generators.
    pub(crate) fn from_elements(ring: &Ring, elements: Vec<Elem>) -> Ideal {
        let elements = sorted(elements);
        let generators = ring.choose_generators(&elements);
        Ideal {
            ring: ring.clone(),
            elements,
            generators,
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::generated(ring, &[])
    }

    pub fn whole(ring: &Ring) -> Ideal {
        Ideal::generated(ring, &[ring.one()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.ring.size()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// A single generator if the ideal is principal (least in canonical order).
    pub fn principal_generator(&self) -> Option<Elem> {
        self.elements
            .iter()
            .copied()
            .find(|&x| self.ring.principal_elements(x).len() == self.len())
    }

    /// `{x : x*g = 0 for all g in I}`; testing against generators suffices.
    pub fn annihilator(&self) -> Ideal {
        let r = &self.ring;
        let elements = r
            .elements()
            .filter(|&x| self.generators.iter().all(|&g| r.mul(x, g) == Elem::ZERO))
            .collect();
        Ideal::from_elements(r, elements)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        let sum = Ideal::generated(&self.ring, &gens);
        Ideal::from_elements(&self.ring, sum.elements)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Ideal::from_elements(&self.ring, elements)
    }
}
