use derangekit::arith;
use derangekit::chars::{inner_product, permutation_character, CharacterTable, ClassFunction};
use derangekit::constructors::{cyclic, direct_product};
use derangekit::derangements::{self, derangement_class_list, kappa};
use derangekit::engine::subgroups::{centralizer, normal_core};
use derangekit::engine::{predicates, Quotient};
use derangekit::field::FiniteField;
use derangekit::{Cyc, Perm, PermGroup, Rational};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

/// A group on 3 to 7 points from two random generators.
fn small_group() -> impl Strategy<Value = PermGroup> {
    (3usize..=7).prop_flat_map(|n| (perm(n), perm(n))).prop_map(|(a, b)| {
        let n = a.degree();
        PermGroup::new(n, vec![a, b]).unwrap()
    })
}

fn transitive_group() -> impl Strategy<Value = PermGroup> {
    small_group().prop_filter("transitive", |g| predicates::is_transitive(g) && g.order() > 1)
}

fn field() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(vec![(2, 1), (2, 3), (3, 2), (5, 1), (2, 4), (7, 2), (3, 3)])
        .prop_map(|(p, k)| FiniteField::new(p, k).unwrap())
}

fn cyc(e: u64) -> impl Strategy<Value = Cyc> {
    prop::collection::vec((0..e, -4i64..=4), 0..5).prop_map(move |terms| Cyc::from_exponents(e, &terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorisation_multiplies_back(n in 1u64..2_000_000) {
        let f = arith::factorize(n);
        prop_assert_eq!(f.value(), n);
        prop_assert!(f.primes().all(arith::is_prime));
        for d in arith::divisors(n) {
            prop_assert_eq!(n % d, 0);
        }
    }

    #[test]
    fn field_axioms(f in field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let q = f.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!((q as u64 - 1) % f.mult_order(a), 0);
        }
    }

    #[test]
    fn permutation_algebra((a, b, c) in (1usize..12).prop_flat_map(|n| (perm(n), perm(n), perm(n)))) {
        let n = a.degree();
        for i in 0..n {
            prop_assert_eq!(a.mul(&b).apply(i), a.apply(b.apply(i)));
        }
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order() as i64).is_identity());
        prop_assert_eq!(Perm::parse(&a.to_string(), n).unwrap(), a.clone());
        prop_assert_eq!(a.conjugate(&b).unwrap().cycle_type(), a.cycle_type());
    }

    #[test]
    fn classes_partition_the_group(g in small_group()) {
        let t = g.classes().unwrap();
        let order = g.order() as u64;
        prop_assert_eq!(t.sizes.iter().sum::<u64>(), order);
        for c in 0..t.len() {
            prop_assert_eq!(t.centralizer_order(c) * t.sizes[c], order);
            prop_assert_eq!(centralizer(&g, &t.reps[c]).unwrap().order() as u64, t.centralizer_order(c));
        }
        let elems = g.elements().unwrap();
        prop_assert_eq!(elems.len() as u64, order);
        for (r, x) in elems.iter().enumerate().step_by(7) {
            prop_assert_eq!(g.rank(x), Some(r as u64));
        }
    }

    /// Jordan and Cameron–Cohen on the points action, and the derangement
    /// classes against a direct count.
    #[test]
    fn derangement_counts(g in transitive_group()) {
        let h = g.stabilizer(0).unwrap();
        let list = derangement_class_list(&g, &h).unwrap();
        prop_assert!(!list.is_empty());
        let mut brute = 0u64;
        g.for_each_element(|x| { brute += x.is_derangement() as u64; true }).unwrap();
        prop_assert_eq!(list.iter().map(|c| c.size).sum::<u64>(), brute);
        let delta = derangements::delta(&g, &h).unwrap();
        let bound = Rational::new(1, g.degree() as i128);
        prop_assert!(delta >= bound);
        prop_assert_eq!(delta == bound, predicates::is_sharply_2transitive(&g));
        prop_assert!(derangements::prime_power_derangement(&g, &h).unwrap().is_some());
        let (n, _) = permutation_character(&g, &h).unwrap().vanishing_classes();
        prop_assert_eq!(n, list.len());
    }

    /// The derangements of `G/H` are the preimages of those of
    /// `(G/N)/(H/N)` for `N` the core of `H`.
    #[test]
    fn derangements_factor_through_the_core(g in transitive_group(), k in 2usize..=3) {
        let h = g.stabilizer(0).unwrap();
        let z = cyclic(k);
        let (g2, h2) = (direct_product(&g, &z).unwrap(), direct_product(&h, &z).unwrap());
        let n = normal_core(&g2, &h2).unwrap();
        let q = Quotient::new(&g2, &n).unwrap();
        let full = derangements::derangement_count(&g2, &h2).unwrap() as u128;
        let bar = derangements::derangement_count(q.group(), &q.map_subgroup(&h2).unwrap()).unwrap() as u128;
        prop_assert_eq!(full, bar * n.order());
        prop_assert!(full >= h2.order());
        // Δ(G × Z) = Δ(G) × Z and Z_k has k classes.
        prop_assert_eq!(kappa(&g2, &h2).unwrap(), k * kappa(&g, &h).unwrap());
    }

    #[test]
    fn character_tables_are_orthonormal(g in small_group().prop_filter("small", |g| g.order() <= 2520)) {
        let t = CharacterTable::new(&g).unwrap();
        prop_assert_eq!(t.len(), g.classes().unwrap().len());
        let squares: u64 = t.degrees.iter().map(|d| d * d).sum();
        prop_assert_eq!(squares as u128, g.order());
        for a in 0..t.len() {
            let ip = inner_product(&t, &ClassFunction::from_row(&t, a), &ClassFunction::from_row(&t, a)).unwrap();
            prop_assert_eq!(ip, Rational::from_integer(1));
        }
    }

    #[test]
    fn cyclotomic_ring_laws(
        (a, b, c) in prop::sample::select(vec![1u64, 3, 4, 5, 8, 12, 15]).prop_flat_map(|e| (cyc(e), cyc(e), cyc(e)))
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        let (x, y) = (&a * &b).to_complex();
        let ((p, q), (r, s)) = (a.to_complex(), b.to_complex());
        prop_assert!((x - (p * r - q * s)).abs() < 1e-6 && (y - (p * s + q * r)).abs() < 1e-6);
    }
}
