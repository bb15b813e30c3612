use derangekit::arith::factorize;
use derangekit::constructors::affine::{agl1, frobenius_half, Sl2AffineChar2};
use derangekit::constructors::families::regular_representation;
use derangekit::constructors::*;
use derangekit::derangements::{self, derangement_class_list, is_elusive, kappa};
use derangekit::engine::subgroups::*;
use derangekit::engine::{predicates, CosetAction};
use derangekit::field::FiniteField;
use derangekit::structure::{fingerprint, reference};
use derangekit::{Perm, Rational};

fn p(s: &str, n: usize) -> Perm {
    Perm::parse(s, n).unwrap()
}

/// Fixed-point-free elements of `S_n`, `Σ (-1)^k n!/k!`.
fn subfactorial(n: u64) -> u64 {
    let fact = |m: u64| (1..=m).product::<u64>() as i64;
    (0..=n).map(|k| if k % 2 == 0 { 1 } else { -1 } * fact(n) / fact(k)).sum::<i64>() as u64
}

#[test]
fn oracle_factorisation_and_field() {
    assert_eq!(factorize(29120).0, vec![(2, 6), (5, 1), (7, 1), (13, 1)]);
    let f = FiniteField::new(2, 6).unwrap();
    assert_eq!(f.polynomial().len(), 7);
    assert_eq!(f.mult_order(f.gamma()), 63);
}

#[test]
fn oracle_orders_and_classes() {
    let m11 = mathieu11();
    assert_eq!(m11.order(), 11 * 10 * 9 * 8);
    let t = m11.classes().unwrap();
    assert_eq!(t.len(), 10);
    assert_eq!(t.sizes.iter().sum::<u64>(), 7920);

    let a5 = alternating(5);
    let t = a5.classes().unwrap();
    assert_eq!(t.len(), 5);
    let fives: Vec<u64> = (0..5).filter(|&c| t.orders[c] == 5).map(|c| t.sizes[c]).collect();
    assert_eq!(fives, vec![12, 12]);

    let five = p("(1,2,3,4,5)", 5);
    let mut brute = 0;
    a5.for_each_element(|x| {
        brute += (x.mul(&five) == five.mul(x)) as u64;
        true
    })
    .unwrap();
    assert_eq!(centralizer(&a5, &five).unwrap().order(), brute as u128);
    assert_eq!(brute, 5);
}

#[test]
fn oracle_suzuki_order() {
    let s = derangekit::constructors::almost_simple::suzuki8().unwrap();
    assert_eq!(s.simple.order(), 29120);
    assert_eq!(s.extended.order(), 3 * 29120);
    assert_eq!(s.extended.degree(), 65);
}

#[test]
fn oracle_closures_and_cosets() {
    let g = agl1(5, 1).unwrap();
    let d = derangements::derangement_classes_on_points(&g).unwrap();
    let n = normal_closure(&g, &[d.classes[0].representative.clone()]).unwrap();
    assert_eq!(n.order(), 5);

    // SL2(3) as a regular group of degree 24.
    let s = regular_representation(&reference::sl2_3_group()).unwrap();
    assert_eq!(s.degree(), 24);
    assert_eq!(center(&s).unwrap().order(), 2);
    assert_eq!(fingerprint(&sylow_subgroup(&s, 2).unwrap()).unwrap(), reference::q8());

    let l = pgaml2(2, 3).unwrap();
    let d18 = normalizer(&l, &sylow_subgroup(&l, 3).unwrap()).unwrap();
    assert_eq!((l.order(), d18.order()), (1512, 54));
    assert_eq!(CosetAction::new(&l, &d18).unwrap().degree(), 28);

    let a5 = alternating(5);
    let d10 = normalizer(&a5, &a5.subgroup(vec![p("(1,2,3,4,5)", 5)]).unwrap()).unwrap();
    let img = CosetAction::new(&a5, &d10).unwrap().image().clone();
    assert!(predicates::is_primitive(&img));
    // A5 ≅ L2(5) on the six cosets of D10 is 2-transitive.
    assert!(predicates::is_2transitive(&img));
    let mut lens: Vec<usize> = predicates::suborbits(&img).iter().map(Vec::len).collect();
    lens.sort_unstable();
    assert_eq!(lens, vec![1, 5]);
}

#[test]
fn oracle_derangement_proportions() {
    let s4 = symmetric(4);
    let x = p("(1,2)(3,4)", 4);
    assert!(x.is_derangement() && x.order() == 2);
    assert_eq!(kappa(&s4, &s4.stabilizer(0).unwrap()).unwrap(), 2);

    for n in 2..=6u64 {
        let g = symmetric(n as usize);
        let d = derangements::delta(&g, &g.stabilizer(0).unwrap()).unwrap();
        assert_eq!(d, Rational::new(subfactorial(n) as i128, g.order() as i128), "S{n}");
    }
    let s5 = symmetric(5);
    assert_eq!(derangements::delta(&s5, &s5.stabilizer(0).unwrap()).unwrap(), Rational::new(44, 120));

    let a = agl1(5, 1).unwrap();
    let cc = derangements::cameron_cohen_check(&a, &a.stabilizer(0).unwrap()).unwrap();
    assert!(cc.equality && cc.sharply_2transitive && cc.holds);
    let s2 = symmetric(2);
    let cc = derangements::cameron_cohen_check(&s2, &s2.stabilizer(0).unwrap()).unwrap();
    assert_eq!(cc.delta, Rational::new(1, 2));
    assert!(cc.equality);
}

#[test]
fn oracle_frobenius_half_13() {
    let g = frobenius_half(13, 1).unwrap();
    assert_eq!(g.order(), 78);
    let list = derangement_class_list(&g, &g.stabilizer(0).unwrap()).unwrap();
    let sizes: Vec<u64> = list.iter().map(|c| c.size).collect();
    // Twelve translations in two orbits of the index-2 multiplier group.
    assert_eq!(sizes, vec![6, 6]);
}

#[test]
fn elusive_agl1_9() {
    let g = agl1(3, 2).unwrap();
    // AGL1(3) inside AGL1(9) is the setwise stabiliser of the prime field.
    let f9 = FiniteField::new(3, 2).unwrap();
    let line: Vec<usize> = (0..3u32).map(|a| f9.from_coeffs(&[a, 0]) as usize).collect();
    let k = g.set_stabilizer(&line).unwrap();
    assert_eq!(k.order(), 6);
    assert!(is_elusive(&g, &k).unwrap());
    assert!(derangements::prime_power_derangement(&g, &k).unwrap().is_some());
}

#[test]
fn sl2_affine_witnesses() {
    let s = Sl2AffineChar2::new(3).unwrap();
    assert_eq!(s.group.order(), 8u128.pow(3) * 63);
    let (z1, z2) = s.witnesses().unwrap();
    assert!(!is_conjugate_in(&s.group, &z1, &z2).unwrap());
    assert!(kappa(&s.group, &s.group.stabilizer(0).unwrap()).unwrap() >= 3);
    assert!(Sl2AffineChar2::new(5).is_err());
}

#[test]
fn caps_are_typed() {
    // |S10| = 3628800 fits both tiers, |S11| exceeds both, and the 2^23
    // boundary is tested with 8398080 = |3^4:Sp4(3).2| elsewhere.
    assert!(symmetric(10).checked_order().is_ok());
    for tier in [derangekit::Tier::Core, derangekit::Tier::Extended] {
        let big = symmetric(11).with_tier(tier);
        assert!(matches!(big.checked_order(), Err(derangekit::Error::CapExceeded { .. })));
    }
}
