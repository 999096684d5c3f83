mod common;

use std::collections::{BTreeMap, HashSet};

use common::{gl54, prime, super_weights, super_weights_for, sw};
use proptest::prelude::*;
use verp::caps::{
    cap_diagram, dual_coords, dual_simple, hat, kac_composition, lowest_weight, p_set,
    projective_filtration, projective_word, replay_word, sigma_to_standard, standard_to_sigma,
};
use verp::diagram::{encode, render_ascii};
use verp::enumerate::{default_window, shapes, super_weights as window};
use verp::superweight::{atypicality, beta, dominance_leq, SuperCoords};
use verp::translation::{KacClass, Kind};

#[test]
fn gl54_caps() {
    let cd = cap_diagram(&encode(&gl54()));
    assert_eq!(cd.render(), "caps: 9->0(inner), 6->1");
    assert_eq!(cd.free_circles, [3, 5]);
    let rendered: Vec<String> = p_set(&gl54())
        .iter()
        .map(|w| render_ascii(&encode(w), 3))
        .collect();
    assert_eq!(
        rendered,
        [
            "o<ox>>x<oo> @3 t1^-3 t2^2",
            "o<ox>>o<xo> @3 t1^-4 t2^3",
            "o<oo>>x<ox> @3 t1^-4 t2^3",
            "o<oo>>o<xx> @3 t1^-5 t2^4",
        ]
    );
}

#[test]
fn gl54_hat_lowest_dual() {
    let l = gl54();
    assert_eq!(
        hat(&l).coords(),
        &SuperCoords::new(vec![19, 19, 15, 15, 15], vec![-15, -15, -17, -22])
    );
    assert_eq!(
        lowest_weight(&l),
        SuperCoords::new(vec![15, 15, 11, 11, 11], vec![-10, -10, -12, -17])
    );
    assert_eq!(
        dual_coords(&l),
        SuperCoords::new(vec![-15, -15, -11, -11, -11], vec![10, 10, 12, 17])
    );
    assert_eq!(
        dual_simple(&l).coords(),
        &SuperCoords::new(vec![-11, -11, -11, -15, -15], vec![17, 12, 10, 10])
    );
    assert_eq!(standard_to_sigma(&l).coords(), &lowest_weight(&l));
}

#[test]
fn typical_weights_are_their_own_projective() {
    let l = sw(5, &[1], &[0]);
    assert_eq!(atypicality(&l), 0);
    assert_eq!(p_set(&l), std::slice::from_ref(&l));
    assert_eq!(hat(&l), l);
    let w = projective_word(&l);
    assert!(w.steps.is_empty());
    let z = sw(5, &[0], &[0]);
    let w = projective_word(&z);
    assert_eq!(w.base, sw(5, &[1], &[0]));
    assert_eq!(w.steps, [(Kind::E, 0)]);
}

#[test]
fn hat_is_injective_on_windows() {
    for pp in [5, 7] {
        let (lo, hi) = default_window(prime(pp));
        for s in shapes(prime(pp)) {
            let mut seen = HashSet::new();
            for l in window(s, lo, hi) {
                assert!(seen.insert(hat(&l)), "{l}");
            }
        }
    }
}

#[test]
fn every_gl11_label_is_a_lowest_weight() {
    let misses = (-5..5)
        .flat_map(|a| (-5..5).map(move |b| (a, b)))
        .filter(|&(a, b)| sigma_to_standard(&sw(5, &[a], &[b])).is_err())
        .count();
    assert_eq!(misses, 0);
}

proptest! {
    #[test]
    fn pset_shape(l in super_weights()) {
        let ps = p_set(&l);
        let k = atypicality(&l);
        prop_assert_eq!(ps.len(), 1 << k);
        prop_assert_eq!(&ps[0], &l);
        let h = hat(&l);
        prop_assert!(ps.contains(&h));
        for a in &ps {
            prop_assert!(dominance_leq(&l, a));
            prop_assert!(dominance_leq(a, &h));
            prop_assert!(kac_composition(a).contains(&l));
        }
        let f = projective_filtration(&l);
        prop_assert!(f.values().all(|&m| m == 1));
        prop_assert_eq!(f.len(), ps.len());
    }

    #[test]
    fn kac_factors_shape(l in super_weights()) {
        let k = kac_composition(&l);
        prop_assert!(k.contains(&l));
        for b in &k {
            prop_assert!(dominance_leq(b, &l));
            prop_assert!(p_set(b).contains(&l));
        }
    }

    #[test]
    fn dual_is_an_involution(l in super_weights()) {
        let d = dual_simple(&l);
        prop_assert_eq!(atypicality(&d), atypicality(&l));
        prop_assert_eq!(dual_simple(&d), l.clone());
        let raw = dual_coords(&l);
        prop_assert_eq!(raw.add(hat(&l).coords()), beta(l.shape()));
    }

    #[test]
    fn odd_reflection_roundtrip(l in super_weights()) {
        let k = standard_to_sigma(&l);
        prop_assert_eq!(sigma_to_standard(&k).unwrap(), l);
    }

    #[test]
    fn word_replay(l in super_weights_for(vec![5, 7])) {
        prop_assume!(atypicality(&l) <= 2);
        let want: KacClass = p_set(&l).into_iter().map(|a| (a, 1)).collect::<BTreeMap<_, _>>();
        prop_assert_eq!(replay_word(&projective_word(&l)), want);
    }
}
