use derangekit::constructors::affine::{agl1, frobenius_half};
use derangekit::constructors::matrix::VectorSpace;
use derangekit::constructors::*;
use derangekit::engine::subgroups::is_normal;
use derangekit::engine::*;
use derangekit::field::FiniteField;
use derangekit::structure::*;
use derangekit::PermGroup;

fn sl2_3_and_z6() -> (PermGroup, PermGroup) {
    let sl = reference::sl2_3_group();
    let z6 = normalizer(&sl, &sylow_subgroup(&sl, 3).unwrap()).unwrap();
    (sl, z6)
}

/// Unitriangular 3×3 matrices over GF(3).
fn heisenberg_27() -> PermGroup {
    let vs = VectorSpace::new(FiniteField::new(3, 1).unwrap(), 3).unwrap();
    let gens = [vs.elementary(1, 0, 1), vs.elementary(2, 1, 1)]
        .iter()
        .map(|m| vs.matrix_perm(m).unwrap())
        .collect();
    PermGroup::new(27, gens).unwrap()
}

#[test]
fn camina_examples() {
    let e = heisenberg_27();
    assert_eq!(e.order(), 27);
    assert!(is_camina_group(&e).unwrap());
    let z = center(&e).unwrap();
    assert!(is_camina_pair(&e, &z).unwrap());
    let s3 = symmetric(3);
    assert!(is_camina_pair(&s3, &alternating(3)).unwrap());
    let a5 = alternating(5);
    assert!(!is_camina_group(&a5).unwrap());
    assert!(is_camina_pair(&a5, &a5).is_err());
    assert!(is_camina_pair(&a5, &PermGroup::trivial(5)).is_err());
    // Abelian groups are not Camina groups.
    assert!(!is_camina_group(&cyclic(6)).unwrap());
}

#[test]
fn frobenius_iff_delta_in_kernel() {
    for g in [agl1(7, 1).unwrap(), frobenius_half(13, 1).unwrap()] {
        let n = frobenius_kernel(&g).unwrap().unwrap();
        let c = frobenius_iff_delta_in_n(&g, &g.stabilizer(0).unwrap(), &n).unwrap();
        assert!(c.frobenius && c.delta_in_n && c.agree);
    }
    assert_eq!(frobenius_half(13, 1).unwrap().order(), 78);
    // S4 = 2²:S3 is affine but not Frobenius; a 3-cycle fixes a point and
    // the 4-cycles are derangements outside the Klein group.
    let s4 = symmetric(4);
    let v4 = normal_subgroups(&s4)
        .unwrap()
        .into_iter()
        .map(|n| n.group)
        .find(|n| n.order() == 4)
        .unwrap();
    let c = frobenius_iff_delta_in_n(&s4, &s4.stabilizer(0).unwrap(), &v4).unwrap();
    assert!(!c.frobenius && !c.delta_in_n && c.agree);
    // A non-normal subgroup is rejected.
    let d8 = sylow_subgroup(&s4, 2).unwrap();
    assert!(frobenius_iff_delta_in_n(&s4, &s4.stabilizer(0).unwrap(), &d8).is_err());
}

#[test]
fn w_triples() {
    let (sl, z6) = sl2_3_and_z6();
    let l = center(&sl).unwrap();
    let m = w_triple_verify(&sl, &z6, &l).unwrap().unwrap();
    assert_eq!(m.order(), 8);
    assert!(is_normal(&sl, &m));
    // Regular representation of the same triple.
    let reg = regular_representation(&sl).unwrap();
    let to_reg = |h: &PermGroup| {
        let gens = h.generators().to_vec();
        let elems = sl.elements().unwrap();
        let imgs = gens
            .iter()
            .map(|s| {
                let img = elems
                    .iter()
                    .map(|e| sl.rank(&s.mul(e)).unwrap() as u32)
                    .collect();
                derangekit::Perm::from_images(img).unwrap()
            })
            .collect();
        reg.subgroup(imgs).unwrap()
    };
    let (rh, rl) = (to_reg(&z6), to_reg(&l));
    assert_eq!(w_triple_verify(&reg, &rh, &rl).unwrap().unwrap().order(), 8);
    // Frobenius triple (G, H, 1) gives the kernel, (G, H, H) gives G.
    let g = agl1(2, 3).unwrap();
    let h = g.stabilizer(0).unwrap();
    let one = PermGroup::trivial(8);
    let m = w_triple_verify(&g, &h, &one).unwrap().unwrap();
    assert_eq!(m.order(), 8);
    assert_eq!(w_triple_verify(&g, &h, &h).unwrap().unwrap().order(), g.order());
    // Not a W-triple: S4 with a point stabiliser and trivial L.
    let s4 = symmetric(4);
    let h = s4.stabilizer(0).unwrap();
    assert!(w_triple_verify(&s4, &h, &PermGroup::trivial(4)).unwrap().is_none());
    // L must be normal in H.
    let k = s4.subgroup(vec![derangekit::Perm::parse("(1,2)", 4).unwrap()]).unwrap().with_cap(s4.cap());
    let h = s4.stabilizer(3).unwrap();
    assert!(w_triple_verify(&s4, &h, &k).is_err());
}

#[test]
fn fingerprints_separate_groups_of_equal_order() {
    // All five groups of order 8.
    let z8 = cyclic(8);
    let z4z2 = direct_product(&cyclic(4), &cyclic(2)).unwrap();
    let e8 = direct_product(&direct_product(&cyclic(2), &cyclic(2)).unwrap(), &cyclic(2)).unwrap();
    let d8 = dihedral(4).unwrap();
    let q8 = reference::q8_group();
    let fps: Vec<_> = [&z8, &z4z2, &e8, &d8, &q8].iter().map(|g| fingerprint(g).unwrap()).collect();
    for i in 0..fps.len() {
        assert_eq!(fps[i].order, 8);
        for j in 0..i {
            assert_ne!(fps[i], fps[j], "groups {i} and {j}");
        }
    }
    // Groups of order 24 built here: SL2(3), S4, Z24, A4×Z2, D24, S3×Z4, Q8×Z3.
    let sl = reference::sl2_3_group();
    let others = [
        symmetric(4),
        cyclic(24),
        direct_product(&alternating(4), &cyclic(2)).unwrap(),
        dihedral(12).unwrap(),
        direct_product(&symmetric(3), &cyclic(4)).unwrap(),
        direct_product(&q8, &cyclic(3)).unwrap(),
    ];
    let f = fingerprint(&sl).unwrap();
    for o in &others {
        assert_eq!(o.order(), 24);
        assert_ne!(fingerprint(o).unwrap(), f);
    }
    // Order 60: A5 against Z60, D60, A4×Z5 and 5:4×3.
    let a5 = reference::a5();
    for o in [
        cyclic(60),
        dihedral(30).unwrap(),
        direct_product(&alternating(4), &cyclic(5)).unwrap(),
        direct_product(&agl1(5, 1).unwrap(), &cyclic(3)).unwrap(),
    ] {
        assert_ne!(fingerprint(&o).unwrap(), a5);
    }
    // Order 1512: L2(8):3 against L2(8)×3.
    let l = reference::l2_8_3();
    let l83 = direct_product(&psl2(2, 3).unwrap(), &cyclic(3)).unwrap();
    assert_ne!(fingerprint(&l83).unwrap(), l);
}

/// Every catalog group of a target's order, matched against what it is known
/// to be.
#[test]
fn fingerprints_against_the_catalog() {
    use derangekit::constructors::catalog::Catalog;
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let c = Catalog::new(root);
    let targets = [(8u128, reference::q8()), (24, reference::sl2_3()), (60, reference::a5()), (1512, reference::l2_8_3())];
    let isomorphic = ["A5", "A6/A5", "SL2aff_4/H", "L2_8_3"];
    let mut seen = 0;
    for name in c.names().unwrap() {
        let e = c.load(&name, derangekit::Tier::Extended).unwrap();
        let mut groups = vec![(name.clone(), e.group.clone())];
        groups.extend(e.subgroups.iter().map(|s| (format!("{name}/{}", s.key), s.group.clone())));
        for (label, g) in groups {
            let Some((_, f)) = targets.iter().find(|(o, _)| *o == g.order()) else { continue };
            seen += 1;
            assert_eq!(fingerprint(&g).unwrap() == *f, isomorphic.contains(&label.as_str()), "{label}");
        }
    }
    assert!(seen >= 10);
}

#[test]
fn case_split() {
    let d = dihedral(5).unwrap();
    let c = classify_unique_vanishing(&d, &sylow_subgroup(&d, 5).unwrap()).unwrap();
    assert_eq!(c.tag, CaseTag::FROBENIUS_INDEX2_ABELIAN_ODD);

    for (p, k) in [(3, 2), (2, 3)] {
        let g = agl1(p, k).unwrap();
        let c = classify_unique_vanishing(&g, &g.stabilizer(0).unwrap()).unwrap();
        assert_eq!(c.tag, CaseTag::FROB_QUOTIENT_c);
        assert_eq!(c.n_order, 1);
        assert_eq!(c.condition("centralizer_order_p_n"), Some(true));
        assert_eq!(c.condition("class_is_M_minus_N"), Some(true));
    }

    let s4 = symmetric(4);
    let c = classify_unique_vanishing(&s4, &sylow_subgroup(&s4, 2).unwrap()).unwrap();
    assert_eq!(c.tag, CaseTag::FROB_QUOTIENT_a);

    let (sl, z6) = sl2_3_and_z6();
    let c = classify_unique_vanishing(&sl, &z6).unwrap();
    assert_eq!(c.tag, CaseTag::FROB_QUOTIENT_c);
    assert_eq!((c.n_order, c.m_order), (2, 8));

    // 5²:SL2(3) with the stabiliser of a line-pair, 5²:6.
    let vs = VectorSpace::new(FiniteField::new(5, 1).unwrap(), 2).unwrap();
    let slp = vs.sl_gens().iter().map(|m| vs.matrix_perm(m).unwrap()).collect();
    let sl25 = PermGroup::new(25, slp).unwrap();
    let n = normalizer(&sl25, &sylow_subgroup(&sl25, 2).unwrap()).unwrap();
    assert_eq!(n.order(), 24);
    let mut gens = n.generators().to_vec();
    gens.extend(vs.translation_gens());
    let g = PermGroup::new(25, gens).unwrap();
    let h6 = normalizer(&n, &sylow_subgroup(&n, 3).unwrap()).unwrap();
    let mut hg = h6.generators().to_vec();
    hg.extend(vs.translation_gens());
    let h = g.subgroup(hg).unwrap();
    let c = classify_unique_vanishing(&g, &h).unwrap();
    assert_eq!(c.tag, CaseTag::FROB_QUOTIENT_b);
    assert_eq!(c.k_order, Some(25));

    let a5 = alternating(5);
    let d10 = normalizer(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap();
    let c = classify_unique_vanishing(&a5, &d10).unwrap();
    assert_eq!(c.tag, CaseTag::A5_CASE);
    assert_eq!(c.p, Some(3));

    let g = pgaml2(2, 3).unwrap();
    let c9 = sylow_subgroup(&psl2(2, 3).unwrap(), 3).unwrap();
    let h = normalizer(&g, &c9).unwrap();
    assert_eq!(h.order(), 54);
    let c = classify_unique_vanishing(&g, &h).unwrap();
    assert_eq!(c.tag, CaseTag::L28_CASE);

    // κ = 2 gives NONE without error.
    let c = classify_unique_vanishing(&a5, &a5.stabilizer(0).unwrap()).unwrap();
    assert_eq!(c.tag, CaseTag::NONE);
    assert_eq!(c.condition("kappa_is_1"), Some(false));
    assert!(c.to_json().contains("\"N_order\""));
}
