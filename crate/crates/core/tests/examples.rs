//! Worked examples for each public operation, checked through the public API.

use qfring::homology::{
    check_complete_resolution, ext1, find_sgp_witness, free_cover, free_resolution,
    strongly_complete_resolution, Obstruction, StronglyCompleteResolution,
};
use qfring::module::{free_summand_split, hom_set};
use qfring::ring::{parse_ring_spec, ElementKind};
use qfring::{
    classify, is_isomorphic, is_strongly_gorenstein_projective, BuildOptions, Elem, Error, Ideal,
    Limits, Module, ModuleHom, Presentation, Ring, RingSpec,
};

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn module(r: &Ring, rel: &str) -> Module {
    Module::from_presentation(Presentation::parse(r, rel).unwrap()).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    let gens: Vec<Elem> = gens.iter().map(|g| r.parse_elem(g).unwrap()).collect();
    Ideal::generated(r, &gens)
}

fn literals(r: &Ring, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| r.fmt_elem(x)).collect()
}

#[test]
fn spec_parsing() {
    assert_eq!(parse_ring_spec("Z/4").unwrap(), RingSpec::Zmod(4));
    assert_eq!(
        parse_ring_spec("Z/4 x Z/3").unwrap(),
        RingSpec::Product(vec![RingSpec::Zmod(4), RingSpec::Zmod(3)])
    );
    assert_eq!(
        parse_ring_spec("GF(2)[x]/(x^2)").unwrap(),
        RingSpec::poly(RingSpec::Zmod(2), "x", &[0, 0, 1])
    );
    for text in ["Z/4 x Z/3", "Z/3[t]/(t^2-1)", "(Z/2 x Z/2)[x]/(x^2)"] {
        let s = parse_ring_spec(text).unwrap();
        assert_eq!(parse_ring_spec(&s.to_string()).unwrap(), s);
    }
    assert!(matches!(
        parse_ring_spec("Z/"),
        Err(Error::Parse { pos: 2, .. })
    ));
    assert!(matches!(parse_ring_spec("Z/1"), Err(Error::Validation(_))));
    assert!(matches!(
        parse_ring_spec("Z/4[x]/(2x^2+1)"),
        Err(Error::Validation(_))
    ));
}

#[test]
fn building() {
    assert_eq!(
        literals(&ring("Z/4"), &ring("Z/4").elements().collect::<Vec<_>>()),
        ["0", "1", "2", "3"]
    );
    let r = ring("GF(2)[x]/(x^2)");
    assert_eq!(
        literals(&r, &r.elements().collect::<Vec<_>>()),
        ["0", "1", "x", "1+x"]
    );
    let p = ring("Z/4 x Z/3");
    assert_eq!(p.size(), 12);
    let sizes = |r: &Ring| {
        let mut s: Vec<usize> = r
            .idempotent_decomposition()
            .unwrap()
            .factors()
            .iter()
            .map(Ring::size)
            .collect();
        s.sort();
        s
    };
    assert_eq!(sizes(&p), sizes(&ring("Z/12")));

    let tight = BuildOptions {
        limits: Limits {
            max_ring_size: 100,
            ..Limits::default()
        },
        ..BuildOptions::default()
    };
    assert!(matches!(
        Ring::build(&RingSpec::Zmod(101), &tight),
        Err(Error::GuardExceeded { .. })
    ));
    let bad = RingSpec::structure_constants(2, 2, vec![1, 0, 0, 1, 0, 1, 1, 1], vec![0, 1]);
    assert!(matches!(
        Ring::from_spec(&bad),
        Err(Error::AxiomViolation(_))
    ));
}

#[test]
fn arithmetic() {
    let r = ring("Z/4");
    assert_eq!(r.add(Elem(2), Elem(3)), Elem(1));
    let q = ring("GF(2)[x]/(x^2)");
    let x = q.parse_elem("x").unwrap();
    assert_eq!(q.mul(x, x), Elem::ZERO);
    let p = ring("Z/4 x Z/3");
    let a = p.parse_elem("(2,2)").unwrap();
    assert_eq!(p.fmt_elem(p.mul(a, a)), "(0,1)");
}

#[test]
fn element_kinds() {
    let r = ring("Z/9");
    assert_eq!(r.element_kind(Elem(2)), ElementKind::Unit);
    assert_eq!(r.element_kind(Elem(3)), ElementKind::ZeroDivisor);
    assert_eq!(r.element_kind(Elem(0)), ElementKind::Zero);
}

#[test]
fn ideals() {
    let z12 = ring("Z/12");
    assert_eq!(ideal(&z12, &["4"]).elements(), [Elem(0), Elem(4), Elem(8)]);
    let z8 = ring("Z/8");
    assert_eq!(
        ideal(&z8, &["2"]).elements(),
        [Elem(0), Elem(2), Elem(4), Elem(6)]
    );
    assert!(Ideal::generated(&z8, &[]).is_zero());

    let shown: Vec<String> = z12.ideals().unwrap().iter().map(Ideal::to_string).collect();
    assert_eq!(shown, ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
    let q = ring("GF(2)[x]/(x^2)");
    let shown: Vec<String> = q.ideals().unwrap().iter().map(Ideal::to_string).collect();
    assert_eq!(shown, ["(0)", "(x)", "(1)"]);
    assert_eq!(ring("Z/5").ideals().unwrap().len(), 2);
}

#[test]
fn annihilators() {
    let z8 = ring("Z/8");
    assert_eq!(ideal(&z8, &["2"]).annihilator(), ideal(&z8, &["4"]));
    let z4 = ring("Z/4");
    assert_eq!(ideal(&z4, &["2"]).annihilator(), ideal(&z4, &["2"]));
    assert!(Ideal::zero(&z4).annihilator().is_whole());
    assert!(Ideal::whole(&z4).annihilator().is_zero());
}

#[test]
fn maximal_ideals_and_radicals() {
    let z8 = ring("Z/8");
    assert_eq!(z8.maximal_ideals().unwrap(), [ideal(&z8, &["2"])]);
    assert!(z8.is_local().unwrap());
    let z12 = ring("Z/12");
    let shown: Vec<String> = z12
        .maximal_ideals()
        .unwrap()
        .iter()
        .map(Ideal::to_string)
        .collect();
    assert_eq!(shown, ["(3)", "(2)"]);
    assert!(!z12.is_local().unwrap());
    let z5 = ring("Z/5");
    assert!(z5.local_maximal_ideal().unwrap().is_zero());

    assert_eq!(z12.jacobson_radical().unwrap(), ideal(&z12, &["6"]));
    assert!(ring("Z/6").jacobson_radical().unwrap().is_zero());
    let z4 = ring("Z/4");
    assert_eq!(z4.jacobson_radical().unwrap(), ideal(&z4, &["2"]));
}

#[test]
fn idempotents() {
    let check = |s: &str, idem: &[u32], sizes: &[usize]| {
        let d = ring(s).idempotent_decomposition().unwrap();
        d.check_product_map().unwrap();
        let got: Vec<u32> = d.idempotents().iter().map(|e| e.0).collect();
        let got_sizes: Vec<usize> = d.factors().iter().map(Ring::size).collect();
        assert_eq!((got.as_slice(), got_sizes.as_slice()), (idem, sizes), "{s}");
    };
    check("Z/12", &[4, 9], &[3, 4]);
    check("Z/8", &[1], &[8]);
    check("Z/6", &[3, 4], &[2, 3]);
}

#[test]
fn presentations_and_sums() {
    let z4 = ring("Z/4");
    let z8 = ring("Z/8");
    assert_eq!(module(&z4, "2").cardinality(), 2);
    assert_eq!(module(&z8, "2,0;0,4").cardinality(), 8);
    assert!(module(&z8, "").is_zero());
    assert_eq!(Module::free(&z4, 1).unwrap().cardinality(), 4);
    assert_eq!(Module::free(&z8, 2).unwrap().cardinality(), 64);
    assert!(Module::free(&z8, 0).unwrap().is_zero());

    let s = module(&z8, "2").direct_sum(&module(&z8, "4")).unwrap();
    assert_eq!(s.cardinality(), 8);
    let m = module(&z8, "2,0;0,4");
    assert!(
        is_isomorphic(&m, &m.direct_sum(&Module::zero(&z8)).unwrap())
            .unwrap()
            .is_some()
    );
    let f = Module::free(&z4, 1).unwrap();
    assert_eq!(f.direct_sum(&f).unwrap().cardinality(), 16);
    assert!(matches!(f.direct_sum(&m), Err(Error::RingMismatch)));
}

#[test]
fn homs() {
    let z4 = ring("Z/4");
    let homs = hom_set(&module(&z4, "2"), &Module::free(&z4, 1).unwrap()).unwrap();
    let imgs: Vec<Vec<String>> = homs.iter().map(ModuleHom::image_literals).collect();
    assert_eq!(imgs, [["0"], ["2"]]);

    let z8 = ring("Z/8");
    let m = module(&z8, "2,0;0,4");
    assert_eq!(
        hom_set(&Module::free(&z8, 1).unwrap(), &m).unwrap().len(),
        m.cardinality()
    );
    let (two_r, inc) = Module::from_ideal(&ideal(&z8, &["2"])).unwrap();
    let homs = hom_set(&module(&z8, "2"), &two_r).unwrap();
    let images: Vec<Vec<String>> = homs
        .iter()
        .map(|h| h.then(&inc).unwrap().image_literals())
        .collect();
    assert_eq!(images, [["0"], ["4"]]);
}

#[test]
fn kernels_images_cokernels() {
    let z8 = ring("Z/8");
    let f = Module::free(&z8, 1).unwrap();
    let h = ModuleHom::new(&f, &f, vec![f.from_coords(&[Elem(2)])]).unwrap();
    let (k, inc) = h.kernel().unwrap();
    assert_eq!(k.cardinality(), 2);
    assert_eq!(inc.image_literals(), ["4"]);
    assert_eq!(h.image().unwrap().0.cardinality(), 4);
    assert_eq!(h.cokernel().unwrap().0.cardinality(), 2);
}

#[test]
fn isomorphisms() {
    let z4 = ring("Z/4");
    let (two_r, _) = Module::from_ideal(&ideal(&z4, &["2"])).unwrap();
    assert!(is_isomorphic(&two_r, &module(&z4, "2")).unwrap().is_some());
    let z8 = ring("Z/8");
    assert!(is_isomorphic(&module(&z8, "2"), &module(&z8, "4"))
        .unwrap()
        .is_none());
    let (two_r, _) = Module::from_ideal(&ideal(&z8, &["2"])).unwrap();
    let w = is_isomorphic(&two_r, &module(&z8, "4")).unwrap().unwrap();
    assert!(w.is_bijective() && w.check_linear());
}

#[test]
fn minimal_generators_and_projectivity() {
    let z8 = ring("Z/8");
    assert_eq!(module(&z8, "2,0;0,4").minimal_generator_count().unwrap(), 2);
    assert_eq!(
        Module::free(&z8, 3)
            .unwrap()
            .minimal_generator_count()
            .unwrap(),
        3
    );
    assert_eq!(Module::zero(&z8).minimal_generator_count().unwrap(), 0);
    assert!(matches!(
        Module::free(&ring("Z/6"), 1).unwrap().minimal_generators(),
        Err(Error::NonLocalRing)
    ));

    let z4 = ring("Z/4");
    assert!(Module::free(&z4, 1).unwrap().is_projective().unwrap());
    assert!(!module(&z4, "2").is_projective().unwrap());
    assert!(Module::free(&ring("Z/4 x Z/3"), 1)
        .unwrap()
        .is_projective()
        .unwrap());
}

#[test]
fn product_decomposition() {
    let z12 = ring("Z/12");
    let d = z12.idempotent_decomposition().unwrap();
    let parts = module(&z12, "6").decompose_over_product(&d).unwrap();
    let shape: Vec<(usize, usize)> = parts
        .iter()
        .map(|p| (p.ring().size(), p.cardinality()))
        .collect();
    assert_eq!(shape, [(3, 3), (4, 2)]);
    let parts = Module::free(&z12, 1)
        .unwrap()
        .decompose_over_product(&d)
        .unwrap();
    assert!(parts.iter().all(|p| p.is_projective().unwrap()));
    let parts = Module::zero(&z12).decompose_over_product(&d).unwrap();
    assert!(parts.iter().all(Module::is_zero));
}

#[test]
fn free_summands() {
    let z4 = ring("Z/4");
    let (k, n) = free_summand_split(&module(&z4, "0,0;0,2")).unwrap();
    assert_eq!(k, 1);
    assert!(is_isomorphic(&n, &module(&z4, "2")).unwrap().is_some());
    let (k, n) = free_summand_split(&module(&z4, "2")).unwrap();
    assert_eq!((k, n.cardinality()), (0, 2));
    let (k, n) = free_summand_split(&Module::free(&ring("Z/8"), 2).unwrap()).unwrap();
    assert_eq!((k, n.is_zero()), (2, true));
}

#[test]
fn covers_and_resolutions() {
    let z4 = ring("Z/4");
    let z8 = ring("Z/8");
    assert_eq!(free_cover(&module(&z4, "2")).unwrap().source().rank(), 1);
    assert_eq!(
        free_cover(&module(&z8, "2,0;0,4")).unwrap().source().rank(),
        2
    );
    assert!(free_cover(&Module::free(&z8, 2).unwrap())
        .unwrap()
        .is_bijective());

    let r = free_resolution(&module(&z4, "2"), 3).unwrap();
    assert_eq!(
        (r.ranks(), r.maps()),
        (vec![1, 1, 1], vec![vec!["2".to_string()]; 3])
    );
    let r = free_resolution(&module(&z8, "2"), 3).unwrap();
    assert_eq!(r.ranks(), [1, 1, 1]);
    assert_eq!(r.maps(), [["2"], ["4"], ["2"]]);
    let r = free_resolution(&Module::free(&z8, 1).unwrap(), 4).unwrap();
    assert_eq!(r.ranks(), [1, 0, 0, 0]);
}

#[test]
fn ext_groups() {
    let z4 = ring("Z/4");
    assert_eq!(
        ext1(&module(&z4, "2"), &Module::free(&z4, 1).unwrap())
            .unwrap()
            .order,
        1
    );
    let z8 = ring("Z/8");
    assert_eq!(
        ext1(&module(&z8, "2"), &Module::free(&z8, 1).unwrap())
            .unwrap()
            .order,
        1
    );
    let sc = Ring::from_spec(&RingSpec::gf2_square_zero_plane()).unwrap();
    let k = Module::quotient_ring(&sc.local_maximal_ideal().unwrap()).unwrap();
    assert!(!ext1(&k, &Module::free(&sc, 1).unwrap()).unwrap().is_zero());
}

#[test]
fn sgp_witnesses() {
    let z4 = ring("Z/4");
    let (m, _) = Module::from_ideal(&ideal(&z4, &["2"])).unwrap();
    let w = find_sgp_witness(&m).unwrap().unwrap();
    assert_eq!(
        (w.rank(), w.embedding().image_literals()),
        (1, vec!["2".to_string()])
    );
    let (q, _) = w.embedding().cokernel().unwrap();
    assert!(is_isomorphic(&q, &m).unwrap().is_some());

    let z8 = ring("Z/8");
    assert_eq!(
        find_sgp_witness(&module(&z8, "2")).unwrap().unwrap_err(),
        Obstruction::Cardinality
    );
    let w = find_sgp_witness(&module(&z8, "2,0;0,4")).unwrap().unwrap();
    assert_eq!(w.rank(), 2);
    assert_eq!(w.embedding().image_literals(), ["(4,0)", "(0,2)"]);
}

#[test]
fn sgp_decisions() {
    let z8 = ring("Z/8");
    let v = is_strongly_gorenstein_projective(&Module::free(&z8, 1).unwrap()).unwrap();
    assert!(v.decision);
    let v = is_strongly_gorenstein_projective(&module(&z8, "2")).unwrap();
    assert_eq!(
        (v.decision, v.obstruction),
        (false, Some(Obstruction::Cardinality))
    );
    let v = is_strongly_gorenstein_projective(&module(&z8, "2,0;0,4")).unwrap();
    assert!(v.decision);
    assert_eq!(v.ext1_order, Some(1));
}

#[test]
fn complete_resolutions() {
    let z4 = ring("Z/4");
    let w = find_sgp_witness(&module(&z4, "2")).unwrap().unwrap();
    let res = strongly_complete_resolution(&w).unwrap();
    assert_eq!(res.matrix_literals(), ["2"]);
    let rep = check_complete_resolution(&res);
    assert!(rep.passes());
    assert_eq!(
        (
            rep.image_order,
            rep.kernel_order,
            rep.dual_image_order,
            rep.dual_kernel_order
        ),
        (2, 2, 2, 2)
    );

    let z8 = ring("Z/8");
    let w = find_sgp_witness(&Module::free(&z8, 1).unwrap())
        .unwrap()
        .unwrap();
    let res = strongly_complete_resolution(&w).unwrap();
    assert!(check_complete_resolution(&res).passes());
    let w = find_sgp_witness(&module(&z8, "2,0;0,4")).unwrap().unwrap();
    let rep = check_complete_resolution(&strongly_complete_resolution(&w).unwrap());
    assert_eq!((rep.image_order, rep.kernel_order), (8, 8));

    let f = Module::free(&z8, 1).unwrap();
    let double = ModuleHom::new(&f, &f, vec![f.from_coords(&[Elem(2)])]).unwrap();
    let rep = check_complete_resolution(&StronglyCompleteResolution::from_map(double).unwrap());
    assert_eq!(
        (rep.exact, rep.image_order, rep.kernel_order),
        (false, 4, 2)
    );
    let rep = check_complete_resolution(
        &StronglyCompleteResolution::from_map(ModuleHom::identity(&f)).unwrap(),
    );
    assert_eq!(
        (rep.exact, rep.image_order, rep.kernel_order),
        (false, 8, 1)
    );
}

#[test]
fn classifications() {
    let r = |s: &str| {
        let c = classify(&ring(s)).unwrap();
        (c.semisimple, c.quasi_frobenius, c.sg_semisimple)
    };
    assert_eq!(r("Z/6"), (true, true, true));
    assert_eq!(r("Z/4"), (false, true, true));
    assert_eq!(r("GF(4)"), (true, true, true));
    assert_eq!(r("Z/8"), (false, true, false));
    assert_eq!(r("GF(2)[x]/(x^2)"), (false, true, true));
    assert_eq!(r("Z/12"), (false, true, true));
    assert_eq!(r("Z/27"), (false, true, false));
    assert_eq!(r("Z/5"), (true, true, true));
    let z4 = classify(&ring("Z/4")).unwrap();
    assert_eq!(z4.certificates.semisimple.as_deref(), Some("2"));
}
