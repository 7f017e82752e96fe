//! The ring and module catalog used by property suites.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::module::Module;
use crate::ring::{Ring, RingSpec};

/// Largest product allowed when pairing catalog rings.
pub const MAX_PAIR_ORDER: u128 = 256;

/// Module catalogs are built only over rings up to this order.
pub const MODULE_RING_LIMIT: usize = 64;

/// Base rings: `Z/n` for `2 <= n <= 64`, the non-prime fields up to 16,
/// `F_p[x]/(x^e)` for `p` in {2,3} and `e` in {2,3}, and the square-zero
/// plane over GF(2).
pub fn base_specs() -> Vec<RingSpec> {
    let mut out: Vec<RingSpec> = (2..=64).map(RingSpec::zmod).collect();
    for q in [4, 8, 9, 16] {
        out.push(RingSpec::gf_order(q).expect("prime power"));
    }
    for p in [2, 3] {
        for e in [2, 3] {
            let mut modulus = vec![0; e + 1];
            modulus[e] = 1;
            out.push(RingSpec::poly(RingSpec::zmod(p), "x", &modulus));
        }
    }
    out.push(RingSpec::gf2_square_zero_plane());
    out
}

/// Base rings plus unordered pairs (repetition allowed) of order at most
/// [`MAX_PAIR_ORDER`].
pub fn default_specs() -> Vec<RingSpec> {
    let base = base_specs();
    let mut out = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            let order = a.cardinality().unwrap() * b.cardinality().unwrap();
            if order <= MAX_PAIR_ORDER {
                out.push(RingSpec::product([a.clone(), b.clone()]));
            }
        }
    }
    dedup(out)
}

fn dedup(specs: Vec<RingSpec>) -> Vec<RingSpec> {
    let mut seen = BTreeSet::new();
    specs
        .into_iter()
        .filter(|s| seen.insert(s.to_string()))
        .collect()
}

/// A built catalog entry.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub ring: Ring,
}

pub fn build(specs: &[RingSpec]) -> Result<Vec<Entry>> {
    specs
        .iter()
        .map(|s| {
            Ok(Entry {
                name: s.to_string(),
                ring: Ring::from_spec(s)?,
            })
        })
        .collect()
}

pub fn default_catalog() -> Result<Vec<Entry>> {
    build(&default_specs())
}

/// `R/I` and `I` for every ideal `I`, named by the ideal's generators.
pub fn modules(ring: &Ring) -> Result<Vec<(String, Module)>> {
    let mut out = Vec::new();
    for i in ring.ideals()? {
        out.push((format!("R/{i}"), Module::quotient_ring(&i)?));
        out.push((i.to_string(), Module::from_ideal(&i)?.0));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        let base = base_specs();
        assert_eq!(base.len(), 63 + 4 + 4 + 1);
        let all = default_specs();
        assert!(all.len() > base.len());
        assert!(all
            .iter()
            .all(|s| s.cardinality().unwrap() <= MAX_PAIR_ORDER));
        assert!(all.iter().any(|s| s.to_string() == "Z/16 x Z/16"));
        assert!(!all.iter().any(|s| s.to_string() == "Z/16 x Z/17"));
    }

    #[test]
    fn module_catalog_of_z4() {
        let r = Ring::parse("Z/4").unwrap();
        let names: Vec<String> = modules(&r).unwrap().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["R/(0)", "(0)", "R/(2)", "(2)", "R/(1)", "(1)"]);
    }
}
