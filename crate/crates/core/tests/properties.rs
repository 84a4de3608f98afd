//! Randomized invariance checks for Hurwitz moves and global conjugation.

use planar_mcg::factorization::Factorization;
use planar_mcg::filling::{euler_characteristic, h1};
use planar_mcg::pa_cert::growth_lengths;
use planar_mcg::{BraidLetter, BraidWord, Curve, MappingClass};
use proptest::prelude::*;

const CASES: u32 = 500;

fn braid(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len)
        .prop_map(|ls| BraidWord(ls.into_iter().map(|(i, inv)| BraidLetter::half(i, inv)).collect()))
}

fn curve(n: usize) -> impl Strategy<Value = Curve> {
    (1u32..(1 << n), braid(n, 3)).prop_map(move |(mask, w)| {
        let set: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        Curve::new(n, &set, &w).expect("valid curve")
    })
}

fn factorization() -> impl Strategy<Value = (Factorization, BraidWord)> {
    (2usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(curve(n), 2..=4), braid(n, 4))
            .prop_map(move |(cs, g)| (Factorization::new(n, cs).unwrap(), g))
    })
}

fn same_h1(a: &Factorization, b: &Factorization) -> bool {
    let (x, y) = (h1(a), h1(b));
    x.h1_rank == y.h1_rank && x.h1_torsion == y.h1_torsion && x.euler == y.euler
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, ..ProptestConfig::default() })]

    #[test]
    fn hurwitz_preserves_product_and_profile((f, _) in factorization(), pick in any::<prop::sample::Index>()) {
        let i = 1 + pick.index(f.len() - 1);
        let g = f.hurwitz_move(i).unwrap();
        prop_assert_eq!(g.product(), f.product());
        prop_assert_eq!(g.multiplicity_profile(), f.multiplicity_profile());
        prop_assert!(same_h1(&f, &g));
        prop_assert_eq!(euler_characteristic(&f), euler_characteristic(&g));
    }

    #[test]
    fn hurwitz_inverse_round_trips((f, _) in factorization(), pick in any::<prop::sample::Index>()) {
        let i = 1 + pick.index(f.len() - 1);
        prop_assert_eq!(&f.hurwitz_move(i).unwrap().hurwitz_inverse(i).unwrap(), &f);
        prop_assert_eq!(&f.hurwitz_inverse(i).unwrap().hurwitz_move(i).unwrap(), &f);
    }

    #[test]
    fn global_conjugation_conjugates_product((f, w) in factorization()) {
        let g = MappingClass::from_braid_word(f.n(), &w).unwrap();
        let h = f.global_conjugate(&g).unwrap();
        prop_assert_eq!(h.product(), g.conjugate(&f.product()).unwrap());
        prop_assert!(same_h1(&f, &h));
        prop_assert_eq!(euler_characteristic(&f), euler_characteristic(&h));
    }

    #[test]
    fn growth_commutes_with_conjugation((f, w) in factorization()) {
        // (g f g⁻¹)^k (g s) and g (f^k s) are the same curve
        let g = MappingClass::from_braid_word(f.n(), &w).unwrap();
        let phi = f.product();
        let seed = &f.curves()[0];
        let conj = g.conjugate(&phi).unwrap();
        let mut left = seed.apply(&g).unwrap();
        let mut right = seed.clone();
        for _ in 0..2 {
            left = left.apply(&conj).unwrap();
            right = right.apply(&phi).unwrap();
        }
        prop_assert_eq!(left, right.apply(&g).unwrap());
    }
}

#[test]
fn growth_ratios_agree_for_conjugate_pairs() {
    let b1 = Curve::convex(3, &[1, 2]).unwrap();
    let b2 = Curve::new(3, &[1, 2], &"s2^-1".parse().unwrap()).unwrap();
    let f = b1.twist().compose(&b2.twist()).unwrap();
    let g = MappingClass::from_braid_word(3, &"s1 s2 s2".parse().unwrap()).unwrap();
    let a = growth_lengths(&f, &b1, 12).unwrap();
    let b = growth_lengths(&g.conjugate(&f).unwrap(), &b1.apply(&g).unwrap(), 12).unwrap();
    let ra = planar_mcg::pa_cert::ratio(&a[12], &a[11]);
    let rb = planar_mcg::pa_cert::ratio(&b[12], &b[11]);
    assert!((ra - rb).abs() < 1e-9, "{ra} {rb}");
}
