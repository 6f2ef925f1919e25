use proptest::prelude::*;

use pprir_core::ideal::{self, ideal_generated, principal_ideal, radical, Ideal};
use pprir_core::lattice::{all_ideals, Classification};
use pprir_core::zmodel::{self, z_contains, ZProductIdeal};
use pprir_core::{make_boolean, make_product, make_zn, quotient_ring, FiniteRing};

fn ring_strategy() -> impl Strategy<Value = FiniteRing> {
    prop_oneof![
        (2usize..=40).prop_map(|n| make_zn(n).unwrap()),
        (1usize..=4).prop_map(|k| make_boolean(k).unwrap()),
        (2usize..=6, 2usize..=6).prop_map(|(a, b)| {
            make_product(&[make_zn(a).unwrap(), make_zn(b).unwrap()]).unwrap()
        }),
    ]
}

fn ring_and_ideal() -> impl Strategy<Value = (FiniteRing, Ideal)> {
    ring_strategy().prop_flat_map(|r| {
        let n = r.order();
        proptest::collection::vec(0..n, 0..3).prop_map(move |gens| {
            let ids: Vec<_> = gens.iter().map(|&i| r.element(i).unwrap()).collect();
            let i = ideal_generated(&r, &ids);
            (r.clone(), i)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn axioms_hold_on_random_triples(r in ring_strategy(), seed in any::<[u16; 3]>()) {
        let n = r.order();
        let [a, b, c] = seed.map(|s| r.element(s as usize % n).unwrap());
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.mul(r.one(), a), a);
        prop_assert_eq!(r.add(a, r.zero()), a);
    }

    #[test]
    fn principal_equals_generated(r in ring_strategy(), i in any::<u16>()) {
        let a = r.element(i as usize % r.order()).unwrap();
        prop_assert_eq!(principal_ideal(&r, a), ideal_generated(&r, &[a]));
    }

    #[test]
    fn generated_sets_are_ideals((r, i) in ring_and_ideal()) {
        prop_assert!(Ideal::from_set(&r, i.members().clone()).is_ok());
        prop_assert_eq!(r.order() % i.len(), 0);
    }

    #[test]
    fn radical_laws((r, i) in ring_and_ideal()) {
        let rad = radical(&r, &i).unwrap();
        prop_assert!(i.is_subset(&rad));
        prop_assert_eq!(radical(&r, &rad).unwrap(), rad.clone());
        prop_assert_eq!(ideal::is_semiprime(&r, &i).unwrap(), rad == i);
    }

    #[test]
    fn prime_iff_maximal_iff_domain_quotient((r, i) in ring_and_ideal()) {
        prop_assume!(i.is_proper());
        let lat = all_ideals(&r);
        let prime = ideal::is_prime(&r, &i).unwrap();
        prop_assert_eq!(prime, lat.is_maximal(&i));
        let q = quotient_ring(&r, &i).unwrap();
        prop_assert_eq!(q.quotient().order() * i.len(), r.order());
        prop_assert_eq!(q.projection().kernel().unwrap(), i.clone());
        let qc = Classification::from_lattice(q.quotient(), &all_ideals(q.quotient()));
        prop_assert_eq!(prime, qc.is_domain);
        if prime {
            prop_assert!(ideal::is_semiprime(&r, &i).unwrap());
            prop_assert!(ideal::is_primary(&r, &i).unwrap());
        }
    }

    #[test]
    fn lattice_closed_under_sum(r in ring_strategy()) {
        let lat = all_ideals(&r);
        for a in lat.ideals() {
            for b in lat.ideals() {
                let s = ideal::sum_ideals(&r, a, b).unwrap();
                prop_assert!(lat.index_of(&s).is_some());
            }
        }
        let spec = lat.primes(&r);
        let mut dedup = spec.clone();
        dedup.dedup();
        prop_assert_eq!(spec.len(), dedup.len());
    }

    #[test]
    fn z_witness_always_validates(gens in proptest::collection::vec(0u64..200, 1..=3)) {
        let i = ZProductIdeal::new(&gens).unwrap();
        let w = zmodel::z_principal_witness(&i);
        prop_assert!(zmodel::z_witness_validates(&i, &w, zmodel::default_bound(&i)));
    }
}

#[test]
fn z_maximal_implies_prime() {
    for a in 0..=100u64 {
        for b in [0u64, 1, 2, 7, 9, 100] {
            let i = ZProductIdeal::new(&[a, b]).unwrap();
            if zmodel::z_is_maximal(&i) {
                assert!(zmodel::z_is_prime(&i), "{i}");
            }
        }
        let i = ZProductIdeal::new(&[a]).unwrap();
        assert!(!zmodel::z_is_maximal(&i) || zmodel::z_is_prime(&i));
    }
}

#[test]
fn z_containment_is_a_partial_order() {
    let grid: Vec<ZProductIdeal> = (0..=20u64)
        .flat_map(|a| {
            (0..=20u64)
                .step_by(4)
                .map(move |b| ZProductIdeal::new(&[a, b]).unwrap())
        })
        .collect();
    let leq = |x: &ZProductIdeal, y: &ZProductIdeal| z_contains(y, x).unwrap();
    for x in &grid {
        assert!(leq(x, x));
        for y in &grid {
            if leq(x, y) && leq(y, x) {
                assert_eq!(x, y);
            }
            for z in &grid {
                if leq(x, y) && leq(y, z) {
                    assert!(leq(x, z));
                }
            }
        }
    }
}
