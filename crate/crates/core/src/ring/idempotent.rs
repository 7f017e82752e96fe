use super::{Elem, Ring};
use crate::error::{Error, Result};

/// Splitting of a finite commutative ring into local factors `e_i R`.
#[derive(Clone, Debug)]
pub struct IdempotentDecomposition {
    ring: Ring,
    idempotents: Vec<Elem>,
    factors: Vec<Ring>,
}

impl Ring {
    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Primitive idempotents are the atoms of `e <= f  <=>  ef = e`.
    pub fn idempotent_decomposition(&self) -> Result<IdempotentDecomposition> {
        let all = self.idempotents();
        let primitive: Vec<Elem> = all
            .iter()
            .copied()
            .filter(|&e| e != Elem::ZERO)
            .filter(|&e| {
                !all.iter()
                    .any(|&f| f != Elem::ZERO && f != e && self.mul(e, f) == f)
            })
            .collect();

        let sum = primitive
            .iter()
            .fold(Elem::ZERO, |acc, &e| self.add(acc, e));
        if sum != self.one() {
            return Err(Error::internal("primitive idempotents do not sum to 1"));
        }
        for (i, &e) in primitive.iter().enumerate() {
            for &f in &primitive[i + 1..] {
                if self.mul(e, f) != Elem::ZERO {
                    return Err(Error::internal("primitive idempotents are not orthogonal"));
                }
            }
        }

        let factors: Vec<Ring> = if primitive.len() == 1 {
            vec![self.clone()]
        } else {
            primitive.iter().map(|&e| self.corner(e)).collect()
        };
        if factors.iter().map(Ring::size).product::<usize>() != self.size() {
            return Err(Error::internal("factor cardinalities do not multiply out"));
        }
        if let Some(f) = factors.iter().find(|f| !f.nonunits_closed_under_addition()) {
            return Err(Error::internal(format!(
                "factor {} is not local",
                f.label()
            )));
        }
        Ok(IdempotentDecomposition {
            ring: self.clone(),
            idempotents: primitive,
            factors,
        })
    }
}

impl IdempotentDecomposition {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    pub fn factors(&self) -> &[Ring] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.len() == 1
    }

    /// `x -> e_i x`, as an element of factor `i`.
    pub fn project(&self, i: usize, x: Elem) -> Elem {
        match self.factors[i].parent_embedding() {
            Some(_) => {
                let y = self.ring.mul(self.idempotents[i], x);
                let (_, members) = self.factors[i].parent_embedding().unwrap();
                Elem(members.binary_search(&y).expect("e*x lies in eR") as u32)
            }
            None => x,
        }
    }

    /// Factor element back into the ring.
    pub fn embed(&self, i: usize, x: Elem) -> Elem {
        match self.factors[i].parent_embedding() {
            Some((_, members)) => members[x.index()],
            None => x,
        }
    }

    /// Checks that `x -> (e_i x)_i` is a bijection onto the product of the
    /// factors that preserves addition and multiplication. Exhaustive.
    pub fn check_product_map(&self) -> Result<()> {
        let r = &self.ring;
        let image =
            |x: Elem| -> Vec<Elem> { (0..self.len()).map(|i| self.project(i, x)).collect() };
        let images: Vec<Vec<Elem>> = r.elements().map(image).collect();
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != r.size() {
            return Err(Error::internal("product map is not injective"));
        }
        for a in r.elements() {
            for b in r.elements() {
                let (ia, ib) = (&images[a.index()], &images[b.index()]);
                let sum = &images[r.add(a, b).index()];
                let prod = &images[r.mul(a, b).index()];
                for (i, f) in self.factors.iter().enumerate() {
                    if f.add(ia[i], ib[i]) != sum[i] || f.mul(ia[i], ib[i]) != prod[i] {
                        return Err(Error::internal("product map does not preserve operations"));
                    }
                }
            }
        }
        Ok(())
    }
}
