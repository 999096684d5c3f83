mod common;

use common::{gl54, prime, super_weights, sw};
use proptest::prelude::*;
use verp::alcove::{level_rank_d_inverse, GLWeight};
use verp::superweight::{
    atypicality, beta, casimir_scalar, casimir_unsuper, dominance_leq, dominance_lt, form,
    is_typical, kac_irreducible, residue_data, rho2, rho_pairing, SuperCoords, SuperShape,
    SuperWeight,
};

#[test]
fn shapes_and_admissibility() {
    assert!(SuperShape::new(2, 3, prime(5)).is_err());
    assert!(SuperShape::new(0, 3, prime(7)).is_err());
    let s = SuperShape::new(2, 2, prime(5)).unwrap();
    assert!(SuperWeight::new(s, vec![4, 0], vec![0, 0]).is_err());
    assert!(SuperWeight::new(s, vec![0, 1], vec![0, 0]).is_err());
    assert!(SuperWeight::new(s, vec![0], vec![0, 0]).is_err());
    assert_eq!(sw(5, &[1, 0], &[-2]).to_string(), "(1,0|-2)");
}

#[test]
fn gl54_weight() {
    let l = gl54();
    assert_eq!(atypicality(&l), 2);
    let d = residue_data(&l);
    assert_eq!(d.a, [7, 6, 2, 9, 8]);
    assert_eq!(d.b, [9, 10, 4, 6]);
    assert_eq!((d.s, d.r), (3, 2));
    assert_eq!(beta(l.shape()), SuperCoords::new(vec![4; 5], vec![-5; 4]));
}

proptest! {
    #[test]
    fn pairing_matches_closed_form(l in super_weights()) {
        let m = l.shape().m() as i64;
        for i in 0..l.shape().m() {
            for j in 0..l.shape().n() {
                let closed = l.mu()[i] + l.nu()[j] + m - (i as i64 + 1) - (j as i64 + 1) + 1;
                prop_assert_eq!(rho_pairing(&l, i, j), closed);
            }
        }
        prop_assert_eq!(is_typical(&l), kac_irreducible(&l));
        prop_assert_eq!(is_typical(&l), atypicality(&l) == 0);
    }

    #[test]
    fn casimir_is_the_form(l in super_weights()) {
        let c = l.coords();
        let v = form(&c.add(&rho2(l.shape())), c).unwrap();
        let (value, residue) = casimir_scalar(&l);
        prop_assert_eq!(value, v);
        prop_assert_eq!(residue as i64, v.rem_euclid(l.p().as_i64()));
    }

    #[test]
    fn casimir_agrees_with_the_even_group(l in super_weights()) {
        // (μ|ν) is the super label of (μ, π) with ν = D(π)
        let (pi, _) = level_rank_d_inverse(&l.nu_weight());
        let mu: GLWeight = l.mu_weight();
        let p = l.p().as_i64();
        prop_assert_eq!(casimir_unsuper(&mu, &pi).rem_euclid(p), casimir_scalar(&l).0.rem_euclid(p));
    }

    #[test]
    fn dominance_is_a_partial_order(a in super_weights(), b in super_weights()) {
        prop_assert!(dominance_leq(&a, &a));
        prop_assert!(!dominance_lt(&a, &a));
        if dominance_leq(&a, &b) && dominance_leq(&b, &a) {
            prop_assert_eq!(a.degree(), b.degree());
            prop_assert_eq!(a.mu_degree(), b.mu_degree());
        }
    }
}
