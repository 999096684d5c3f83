#![allow(dead_code)]

use proptest::prelude::*;
use verp::fusion::PrimeP;
use verp::superweight::{SuperShape, SuperWeight};

pub fn prime(x: i64) -> PrimeP {
    PrimeP::new(x).unwrap()
}

pub fn sw(pp: i64, mu: &[i64], nu: &[i64]) -> SuperWeight {
    SuperWeight::new(
        SuperShape::new(mu.len(), nu.len(), prime(pp)).unwrap(),
        mu.to_vec(),
        nu.to_vec(),
    )
    .unwrap()
}

pub fn gl54() -> SuperWeight {
    sw(11, &[18, 18, 15, 12, 12], &[-13, -13, -17, -18])
}

/// An admissible rank-`n` weight from `n` gap sizes and a base.
pub fn alcove_entries(pp: i64, n: usize) -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(0..=pp - n as i64, n), -40i64..40).prop_map(|(mut v, base)| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let last = *v.last().unwrap();
        v.iter().map(|x| x - last + base).collect()
    })
}

pub fn super_weights_for(primes: Vec<i64>) -> impl Strategy<Value = SuperWeight> {
    prop::sample::select(primes)
        .prop_flat_map(|pp| (Just(pp), 1usize..pp as usize - 1))
        .prop_flat_map(|(pp, m)| (Just(pp), Just(m), 1usize..pp as usize - m))
        .prop_flat_map(|(pp, m, n)| (Just(pp), alcove_entries(pp, m), alcove_entries(pp, n)))
        .prop_map(|(pp, mu, nu)| sw(pp, &mu, &nu))
}

pub fn super_weights() -> impl Strategy<Value = SuperWeight> {
    super_weights_for(vec![5, 7, 11, 13])
}
