use proptest::prelude::*;
use verp::alcove::{
    add_box, chi_rotate, is_admissible, level_rank_d, level_rank_d_inverse, phi_wedge, psi_data,
    remove_box, tensor_with_v, transpose, wedge_to_weight, GLWeight,
};
use verp::fusion::PrimeP;

fn p(x: i64) -> PrimeP {
    PrimeP::new(x).unwrap()
}

/// A prime, a rank below it, and an admissible weight of that rank.
fn weights() -> impl Strategy<Value = GLWeight> {
    prop::sample::select(vec![5i64, 7, 11, 13])
        .prop_flat_map(|pp| (Just(pp), 1usize..pp as usize))
        .prop_flat_map(|(pp, n)| {
            let width = pp - n as i64;
            (Just(pp), prop::collection::vec(0..=width, n), -30i64..30)
        })
        .prop_map(|(pp, mut steps, base)| {
            steps.sort_unstable_by(|a, b| b.cmp(a));
            let last = *steps.last().unwrap();
            GLWeight::new(p(pp), steps.iter().map(|x| x - last + base).collect()).unwrap()
        })
}

#[test]
fn goldens() {
    let (d, parity) = level_rank_d(&GLWeight::new(p(7), vec![6, 5, 2]).unwrap());
    assert_eq!(d.entries(), [5, 4, 2, 2]);
    assert_eq!(parity, 1);
    let t = psi_data(3, p(7)).unwrap();
    assert_eq!(t.psi.entries(), [3, -1, -1]);
    assert_eq!(t.a * 3 + t.b * 4, 1);
    assert!(is_admissible(&[6, 2, 2], 3, p(7)).unwrap());
    assert!(!is_admissible(&[7, 2, 2], 3, p(7)).unwrap());
    assert!(!is_admissible(&[1, 2], 2, p(7)).unwrap());
    assert!(is_admissible(&[1, 2], 3, p(7)).is_err());
    assert_eq!(transpose(&[3, 1, 0], 4), [2, 1, 1, 0]);
}

#[test]
fn psi_solves_bezout() {
    for pp in [5i64, 7, 11, 13] {
        for n in 1..pp as usize {
            let t = psi_data(n, p(pp)).unwrap();
            assert_eq!(t.a * n as i64 + t.b * (pp - n as i64), 1);
            assert!((0..n as i64).contains(&t.b));
            assert_eq!(t.psi.degree(), 1);
        }
    }
}

proptest! {
    #[test]
    fn boxes_are_adjoint(l in weights(), c in 0u32..13) {
        prop_assume!(c < l.p().get());
        if let Some(up) = add_box(&l, c) {
            prop_assert_eq!(up.degree(), l.degree() + 1);
            prop_assert_eq!(remove_box(&up, c), Some(l.clone()));
        }
        if let Some(down) = remove_box(&l, c) {
            prop_assert_eq!(add_box(&down, c), Some(l.clone()));
        }
    }

    #[test]
    fn tensor_with_v_is_boxes_of_all_contents(l in weights()) {
        let mut by_box: Vec<GLWeight> = (0..l.p().get()).filter_map(|c| add_box(&l, c)).collect();
        let mut direct = tensor_with_v(&l);
        by_box.sort_by(|a, b| a.entries().cmp(b.entries()));
        direct.sort_by(|a, b| a.entries().cmp(b.entries()));
        prop_assert_eq!(by_box, direct);
    }

    #[test]
    fn wedge_roundtrip(l in weights()) {
        let w = phi_wedge(&l);
        prop_assert_eq!(wedge_to_weight(&w, l.p()).unwrap(), l);
    }

    #[test]
    fn level_rank_is_an_involution(l in weights()) {
        let (d, parity) = level_rank_d(&l);
        prop_assert_eq!(d.rank(), l.p().get() as usize - l.rank());
        prop_assert_eq!(d.degree(), l.degree());
        prop_assert_eq!(parity as i64, l.degree().rem_euclid(2));
        prop_assert!(is_admissible(d.entries(), d.rank(), l.p()).unwrap());
        prop_assert_eq!(level_rank_d_inverse(&d).0, l);
    }

    #[test]
    fn level_rank_transposes_partitions(l in weights()) {
        // for λ_n = 0 the map is plain transposition into p - n rows
        let last = *l.entries().last().unwrap();
        let base = l.shifted(-last);
        let (d, _) = level_rank_d(&base);
        let mut t = vec![0i64; l.p().get() as usize - l.rank()];
        for (j, slot) in t.iter_mut().enumerate() {
            *slot = base.entries().iter().filter(|&&x| x > j as i64).count() as i64;
        }
        prop_assert_eq!(d.entries(), &t[..]);
    }

    #[test]
    fn chi_has_order_n_up_to_shift(l in weights(), k in -20i64..20) {
        let n = l.rank() as i64;
        let step = l.p().as_i64() - n;
        prop_assert_eq!(chi_rotate(&l, n), l.shifted(step));
        prop_assert_eq!(chi_rotate(&chi_rotate(&l, k), -k), l.clone());
        prop_assert_eq!(chi_rotate(&l, k).degree(), l.degree() + k * step);
        let r = chi_rotate(&l, k);
        prop_assert!(is_admissible(r.entries(), r.rank(), l.p()).unwrap());
    }
}
