use derangekit::chars::*;
use derangekit::constructors::affine::agl1;
use derangekit::constructors::*;
use derangekit::derangements::kappa;
use derangekit::engine::*;
use derangekit::structure::CaseTag;
use derangekit::{Cyc, PermGroup, Rational};

fn sorted_degrees(g: &PermGroup) -> Vec<u64> {
    let mut d = CharacterTable::new(g).unwrap().degrees;
    d.sort();
    d
}

fn column_orthogonality(t: &CharacterTable) {
    let k = t.len();
    for x in 0..k {
        for y in 0..k {
            let mut s = Cyc::zero(1);
            for row in &t.rows {
                s = &s + &(&row[x] * &row[y].conj());
            }
            let want = if x == y { t.centralizer_order(x) as i64 } else { 0 };
            assert_eq!(s, Cyc::from_int(1, want), "columns {x}, {y}");
        }
    }
}

#[test]
fn degrees_of_small_groups() {
    assert_eq!(sorted_degrees(&symmetric(3)), vec![1, 1, 2]);
    assert_eq!(sorted_degrees(&alternating(5)), vec![1, 3, 3, 4, 5]);
    assert_eq!(sorted_degrees(&dihedral(5).unwrap()), vec![1, 1, 2, 2]);
    assert_eq!(
        sorted_degrees(&mathieu11()),
        vec![1, 10, 10, 10, 11, 16, 16, 44, 45, 55]
    );
}

#[test]
fn orthogonality_and_row_order() {
    for g in [
        symmetric(4),
        alternating(5),
        dihedral(7).unwrap(),
        psl2(7, 1).unwrap(),
        agl1(3, 2).unwrap(),
        mathieu10().unwrap(),
    ] {
        let t = CharacterTable::new(&g).unwrap();
        column_orthogonality(&t);
        for a in 0..t.len() {
            for b in 0..t.len() {
                let ip = inner_product(&t, &ClassFunction::from_row(&t, a), &ClassFunction::from_row(&t, b)).unwrap();
                assert_eq!(ip, Rational::from_integer((a == b) as i128));
            }
        }
        assert!(t.rows[0].iter().all(|v| v.to_scalar() == Some(1)));
        assert!(t.degrees[1..].windows(2).all(|w| w[0] <= w[1]));
        assert!(burnside_check(&t) && mno_check(&t));
        // Deterministic: a second computation agrees exactly.
        assert_eq!(CharacterTable::new(&g).unwrap().rows, t.rows);
    }
}

#[test]
fn vanishing_counts() {
    let d = dihedral(5).unwrap();
    let t = CharacterTable::new(&d).unwrap();
    for i in 0..t.len() {
        let (n, cls) = ClassFunction::from_row(&t, i).vanishing_classes();
        if t.degrees[i] == 1 {
            assert_eq!(n, 0);
        } else {
            assert_eq!(n, 1);
            assert_eq!(t.class_orders[cls[0]], 2);
        }
    }
    let a5 = alternating(5);
    let t = CharacterTable::new(&a5).unwrap();
    let four = t.degrees.iter().position(|&d| d == 4).unwrap();
    let (n, cls) = ClassFunction::from_row(&t, four).vanishing_classes();
    assert_eq!(n, 1);
    assert_eq!(t.class_orders[cls[0]], 2);
}

#[test]
fn permutation_characters_count_fixed_points() {
    let a5 = alternating(5);
    let a4 = a5.stabilizer(4).unwrap();
    let pi = permutation_character(&a5, &a4).unwrap();
    let a = CosetAction::new(&a5, &a4).unwrap();
    let tc = a5.classes().unwrap();
    for c in 0..tc.len() {
        let fixed = a.image_of(&tc.reps[c]).unwrap().fixed_points().len() as i64;
        assert_eq!(pi.values[c], Cyc::from_int(1, fixed));
    }
    let t = CharacterTable::new(&a5).unwrap();
    let one = ClassFunction::trivial(t.len());
    assert_eq!(inner_product(&t, &pi, &one).unwrap(), Rational::from_integer(1));
    // n(1_H^G) = κ(G, H).
    for h in [a4, sylow_subgroup(&a5, 5).unwrap(), normalizer(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap()] {
        let n = permutation_character(&a5, &h).unwrap().vanishing_classes().0;
        assert_eq!(n, kappa(&a5, &h).unwrap());
    }
}

#[test]
fn frobenius_reciprocity_and_induction_degree() {
    let cases: Vec<(PermGroup, PermGroup)> = {
        let a5 = alternating(5);
        let s5 = symmetric(5);
        let m11 = mathieu11();
        let l = psl2(7, 1).unwrap();
        vec![
            (a5.clone(), a5.stabilizer(0).unwrap()),
            (a5.clone(), normalizer(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap()),
            (s5.clone(), s5.stabilizer(0).unwrap()),
            (s5.clone(), sylow_subgroup(&s5, 2).unwrap()),
            (m11.clone(), m11.stabilizer(0).unwrap()),
            (l.clone(), normalizer(&l, &sylow_subgroup(&l, 7).unwrap()).unwrap()),
        ]
    };
    let mut samples = 0;
    for (g, h) in &cases {
        let tg = CharacterTable::new(g).unwrap();
        let th = CharacterTable::new(h).unwrap();
        let index = (g.order() / h.order()) as i64;
        for p in 0..th.len() {
            let phi = ClassFunction::from_row(&th, p);
            let ind = induce(g, h, &phi).unwrap();
            assert_eq!(ind.degree(), Some(index * th.degrees[p] as i64));
            for c in 0..tg.len() {
                let chi = ClassFunction::from_row(&tg, c);
                let res = restrict(g, h, &chi).unwrap();
                assert_eq!(
                    inner_product(&tg, &ind, &chi).unwrap(),
                    inner_product(&th, &phi, &res).unwrap()
                );
                samples += 1;
            }
        }
    }
    assert!(samples >= 20);
}

#[test]
fn unique_vanishing_induced() {
    let d = dihedral(5).unwrap();
    let z5 = sylow_subgroup(&d, 5).unwrap();
    let hits = find_unique_vanishing_induced(&d, &[z5]).unwrap();
    // Four nontrivial linear φ, inducing in pairs to the two degree-2 rows.
    assert_eq!(hits.len(), 4);
    let mut chis: Vec<usize> = hits.iter().map(|h| h.chi).collect();
    chis.sort();
    chis.dedup();
    assert_eq!(chis.len(), 2);
    assert!(hits.iter().all(|h| h.tag == CaseTag::FROBENIUS_INDEX2_ABELIAN_ODD));

    // Irr(AGL1(8)) has degrees 1^7 and 7, so nothing induced from the
    // stabiliser (degree 8 φ^G) is irreducible.
    let g = agl1(2, 3).unwrap();
    assert!(find_unique_vanishing_induced(&g, &[g.stabilizer(0).unwrap()]).unwrap().is_empty());

    let a5 = alternating(5);
    let d10 = normalizer(&a5, &sylow_subgroup(&a5, 5).unwrap()).unwrap();
    assert_eq!(kappa(&a5, &d10).unwrap(), 1);
    assert!(find_unique_vanishing_induced(&a5, &[d10]).unwrap().is_empty());

    // S4 over D8: the two degree-3 rows are induced from linear φ and
    // vanish only on the 3-cycles.
    let s4 = symmetric(4);
    let hits = find_unique_vanishing_induced(&s4, &[sylow_subgroup(&s4, 2).unwrap()]).unwrap();
    assert!(!hits.is_empty());
    assert!(hits.iter().all(|h| h.tag == CaseTag::FROB_QUOTIENT_a));
}

#[test]
fn caps() {
    assert!(matches!(
        CharacterTable::new(&symmetric(10)),
        Err(derangekit::Error::CapExceeded { .. })
    ));
}
