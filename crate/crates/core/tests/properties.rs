use std::collections::BTreeSet;

use proptest::prelude::*;
use qfring::homology::{ext1, free_resolution, is_strongly_gorenstein_projective};
use qfring::module::{free_summand_split, hom_set};
use qfring::ring::parse_ring_spec;
use qfring::{classify, is_isomorphic, Elem, Ideal, Module, Presentation, Ring, RingSpec};

const SMALL: &[&str] = &[
    "Z/2",
    "Z/4",
    "Z/6",
    "Z/8",
    "Z/9",
    "Z/12",
    "GF(4)",
    "GF(2)[x]/(x^2)",
    "GF(2)[x]/(x^3)",
    "Z/2 x Z/4",
    "Z/3 x Z/3",
];

const LOCAL_QF: &[&str] = &[
    "Z/4",
    "Z/8",
    "Z/9",
    "GF(2)[x]/(x^2)",
    "GF(2)[x]/(x^3)",
    "GF(4)",
];

fn ring_of(list: &'static [&'static str]) -> impl Strategy<Value = Ring> {
    (0..list.len()).prop_map(move |i| Ring::parse(list[i]).unwrap())
}

fn any_small_ring() -> impl Strategy<Value = Ring> {
    prop_oneof![
        ring_of(SMALL),
        Just(Ring::from_spec(&RingSpec::gf2_square_zero_plane()).unwrap())
    ]
}

/// Generators and relation entries, reduced modulo the ring size later.
fn matrix() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    matrix_up_to(2)
}

fn matrix_up_to(rank: usize) -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (0usize..=rank, 0usize..=2).prop_flat_map(|(k, l)| {
        (
            Just(k),
            prop::collection::vec(prop::collection::vec(any::<u32>(), k), l),
        )
    })
}

fn present(r: &Ring, (k, cols): &(usize, Vec<Vec<u32>>)) -> Module {
    let n = r.size() as u32;
    let cols = cols
        .iter()
        .map(|c| c.iter().map(|&a| Elem(a % n)).collect())
        .collect();
    Module::from_presentation(Presentation::new(r, *k, cols).unwrap()).unwrap()
}

/// Brute-force column span in `R^k`, as a set of coordinate tuples.
fn column_span(r: &Ring, k: usize, cols: &[Vec<Elem>]) -> BTreeSet<Vec<Elem>> {
    let mut span: BTreeSet<Vec<Elem>> = [vec![Elem::ZERO; k]].into();
    loop {
        let mut next = span.clone();
        for v in &span {
            for c in cols {
                for s in r.elements() {
                    let w: Vec<Elem> = v
                        .iter()
                        .zip(c)
                        .map(|(&a, &b)| r.add(a, r.mul(s, b)))
                        .collect();
                    next.insert(w);
                }
            }
        }
        if next.len() == span.len() {
            return span;
        }
        span = next;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn spec_printing_round_trips(ns in prop::collection::vec(2u64..30, 2..4)) {
        let spec = RingSpec::product(ns.iter().map(|&n| RingSpec::zmod(n)));
        prop_assert_eq!(parse_ring_spec(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn element_literals_round_trip(r in any_small_ring(), i in any::<u32>()) {
        let x = Elem(i % r.size() as u32);
        prop_assert_eq!(r.parse_elem(&r.fmt_elem(x)).unwrap(), x);
    }

    #[test]
    fn generated_ideals_are_closed(r in any_small_ring(), gens in prop::collection::vec(any::<u32>(), 0..3)) {
        let gens: Vec<Elem> = gens.iter().map(|&g| Elem(g % r.size() as u32)).collect();
        let i = Ideal::generated(&r, &gens);
        prop_assert!(gens.iter().all(|&g| i.contains(g)));
        for &a in i.elements() {
            prop_assert!(i.contains(r.neg(a)));
            for &b in i.elements() {
                prop_assert!(i.contains(r.add(a, b)));
            }
            prop_assert!(r.elements().all(|s| i.contains(r.mul(s, a))));
        }
        prop_assert!(r.ideals().unwrap().contains(&i));
        prop_assert!(i.is_subset(&i.annihilator().annihilator()));
    }

    #[test]
    fn lattice_is_closed_under_sums(r in any_small_ring()) {
        let ideals = r.ideals().unwrap();
        for a in &ideals {
            for b in &ideals {
                prop_assert!(ideals.contains(&a.sum(b)));
                prop_assert!(ideals.contains(&a.intersection(b)));
            }
        }
    }

    #[test]
    fn decomposition_is_a_ring_isomorphism(r in any_small_ring()) {
        let d = r.idempotent_decomposition().unwrap();
        prop_assert!(d.check_product_map().is_ok());
        let sum = d.idempotents().iter().fold(Elem::ZERO, |acc, &e| r.add(acc, e));
        prop_assert_eq!(sum, r.one());
        prop_assert!(d.factors().iter().all(|f| f.is_local().unwrap()));
    }

    #[test]
    fn order_times_span_is_the_tuple_count(r in any_small_ring(), mat in matrix()) {
        let m = present(&r, &mat);
        let cols: Vec<Vec<Elem>> = m.relations().to_vec();
        let span = column_span(&r, m.rank(), &cols);
        prop_assert_eq!(m.cardinality() * span.len(), r.size().pow(m.rank() as u32));
    }

    #[test]
    fn homs_are_linear_and_split_orders(r in ring_of(SMALL), a in matrix(), b in matrix(), pick in any::<usize>()) {
        let (m, n) = (present(&r, &a), present(&r, &b));
        let homs = hom_set(&m, &n).unwrap();
        prop_assert!(!homs.is_empty());
        let h = &homs[pick % homs.len()];
        prop_assert!(h.check_linear());
        let (k, _) = h.kernel().unwrap();
        let (im, _) = h.image().unwrap();
        let (c, _) = h.cokernel().unwrap();
        prop_assert_eq!(k.cardinality() * im.cardinality(), m.cardinality());
        prop_assert_eq!(c.cardinality() * im.cardinality(), n.cardinality());
    }

    #[test]
    fn isomorphism_is_an_equivalence(r in ring_of(SMALL), a in matrix(), b in matrix(), c in matrix()) {
        let ms = [present(&r, &a), present(&r, &b), present(&r, &c)];
        let iso = |i: usize, j: usize| is_isomorphic(&ms[i], &ms[j]).unwrap();
        for i in 0..3 {
            let w = iso(i, i).unwrap();
            prop_assert!(w.is_bijective() && w.check_linear());
            for j in 0..3 {
                prop_assert_eq!(iso(i, j).is_some(), iso(j, i).is_some());
                for k in 0..3 {
                    if iso(i, j).is_some() && iso(j, k).is_some() {
                        prop_assert!(iso(i, k).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn free_summand_split_re_sums(r in ring_of(LOCAL_QF), mat in matrix()) {
        let m = present(&r, &mat);
        let (rank, n) = free_summand_split(&m).unwrap();
        let resum = Module::free(&r, rank).unwrap().direct_sum(&n).unwrap();
        prop_assert!(is_isomorphic(&resum, &m).unwrap().is_some());
        prop_assert!(n.elements().all(|x| !n.has_zero_annihilator(x)));
    }

    #[test]
    fn resolutions_are_complexes(r in ring_of(LOCAL_QF), mat in matrix()) {
        let m = present(&r, &mat);
        let res = free_resolution(&m, 3).unwrap();
        let mut prev = res.augmentation().clone();
        for d in res.differentials() {
            prop_assert!(d.then(&prev).unwrap().images().iter().all(|y| y.0 == 0));
            prop_assert_eq!(d.image_members(), prev.kernel_members());
            prev = d.clone();
        }
    }

    #[test]
    fn ext_vanishes_over_quasi_frobenius_rings(r in ring_of(SMALL), mat in matrix()) {
        prop_assume!(classify(&r).unwrap().quasi_frobenius);
        let m = present(&r, &mat);
        prop_assert!(ext1(&m, &Module::free(&r, 1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn sgp_is_closed_under_sums(r in ring_of(&["Z/4", "Z/8", "GF(2)[x]/(x^2)", "Z/2 x Z/4"]), a in matrix_up_to(1), b in matrix_up_to(1)) {
        let (m, n) = (present(&r, &a), present(&r, &b));
        let vm = is_strongly_gorenstein_projective(&m).unwrap();
        let vn = is_strongly_gorenstein_projective(&n).unwrap();
        for v in [&vm, &vn] {
            if let Some(w) = &v.witness {
                let free = w.embedding().target().cardinality();
                prop_assert_eq!(free, w.module().cardinality().pow(2));
                prop_assert!(w.verify());
            }
        }
        if vm.decision && vn.decision {
            let s = m.direct_sum(&n).unwrap();
            prop_assert!(is_strongly_gorenstein_projective(&s).unwrap().decision);
        }
    }

    #[test]
    fn projectivity_is_componentwise(r in ring_of(&["Z/6", "Z/12", "Z/2 x Z/4", "Z/3 x Z/3"]), mat in matrix()) {
        let m = present(&r, &mat);
        let d = r.idempotent_decomposition().unwrap();
        let parts = m.decompose_over_product(&d).unwrap();
        let total: usize = parts.iter().map(Module::cardinality).product();
        prop_assert_eq!(total, m.cardinality());
        let each = parts.iter().all(|p| p.is_projective().unwrap());
        prop_assert_eq!(m.is_projective().unwrap(), each);
    }
}

#[test]
fn every_zmod_is_quasi_frobenius() {
    for n in 2..=64 {
        let r = Ring::from_spec(&RingSpec::zmod(n)).unwrap();
        assert!(classify(&r).unwrap().quasi_frobenius, "Z/{n}");
    }
}
