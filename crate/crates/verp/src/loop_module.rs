//! The loop-module model `∧^m U[t^±] ⊗ ∧^n U*[t^±]` with its Chevalley
//! generators, independent of the diagram rewrite rules.
//!
//! Dual vectors follow `v*_b(v_a) = (-1)^b δ_{ab}`. With that convention
//! `f_{p-1} v*_0 = -v*_{p-1} t^{-1}` and `e_{p-1} v*_{p-1} = -v*_0 t`, so the
//! basis vector attached to a weight carries the sign `(-1)^r`.

use std::collections::BTreeMap;

use crate::diagram::{encode, WeightDiagram};
use crate::superweight::{residue_data, SuperWeight};
use crate::translation::{apply_kind, Kind};

/// `c · (v_{a_1} ∧ ... ∧ v_{a_m}) t^{-s} ⊗ (v*_{b_1} ∧ ... ∧ v*_{b_n}) t^{r}`,
/// wedge factors kept in row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopVector {
    pub a: Vec<u32>,
    pub s: i64,
    pub b: Vec<u32>,
    pub r: i64,
    pub coeff: i64,
}

impl LoopVector {
    fn key(&self) -> (Vec<u32>, i64, Vec<u32>, i64) {
        (self.a.clone(), self.s, self.b.clone(), self.r)
    }
}

/// The vector of `λ`.
pub fn phi_super(lambda: &SuperWeight) -> LoopVector {
    let d = residue_data(lambda);
    let coeff = if d.r.rem_euclid(2) == 0 { 1 } else { -1 };
    LoopVector {
        a: d.a,
        s: d.s,
        b: d.b,
        r: d.r,
        coeff,
    }
}

/// Same data read straight off a diagram's decoding.
fn phi_diagram(d: &WeightDiagram) -> LoopVector {
    let shape = crate::superweight::SuperShape::new(d.m(), d.n(), d.p()).expect("valid diagram");
    phi_super(&crate::diagram::decode_unchecked(d, shape))
}

/// `f_c`: on `U`, `v_c ↦ v_{c+1}` and `v_{p-1} ↦ v_0 t^{-1}`; on `U*`,
/// `v*_{c+1} ↦ v*_c` and `v*_0 ↦ -v*_{p-1} t^{-1}`.
pub fn loop_f(c: u32, v: &LoopVector, p: u32) -> Vec<LoopVector> {
    let c = c % p;
    let up = (c + 1) % p;
    let wall = c == p - 1;
    let mut out = Vec::new();
    if let Some(i) = v.a.iter().position(|&x| x == c) {
        if !v.a.contains(&up) {
            let mut w = v.clone();
            w.a[i] = up;
            w.s += wall as i64;
            out.push(w);
        }
    }
    if let Some(j) = v.b.iter().position(|&x| x == up) {
        if !v.b.contains(&c) {
            let mut w = v.clone();
            w.b[j] = c;
            if wall {
                w.r -= 1;
                w.coeff = -w.coeff;
            }
            out.push(w);
        }
    }
    out
}

/// `e_c`: on `U`, `v_{c+1} ↦ v_c` and `v_0 ↦ v_{p-1} t`; on `U*`,
/// `v*_c ↦ v*_{c+1}` and `v*_{p-1} ↦ -v*_0 t`.
pub fn loop_e(c: u32, v: &LoopVector, p: u32) -> Vec<LoopVector> {
    let c = c % p;
    let up = (c + 1) % p;
    let wall = c == p - 1;
    let mut out = Vec::new();
    if let Some(i) = v.a.iter().position(|&x| x == up) {
        if !v.a.contains(&c) {
            let mut w = v.clone();
            w.a[i] = c;
            w.s -= wall as i64;
            out.push(w);
        }
    }
    if let Some(j) = v.b.iter().position(|&x| x == c) {
        if !v.b.contains(&up) {
            let mut w = v.clone();
            w.b[j] = up;
            if wall {
                w.r += 1;
                w.coeff = -w.coeff;
            }
            out.push(w);
        }
    }
    out
}

pub fn loop_apply(kind: Kind, c: u32, v: &LoopVector, p: u32) -> Vec<LoopVector> {
    match kind {
        Kind::F => loop_f(c, v, p),
        Kind::E => loop_e(c, v, p),
    }
}

/// Collects a formal sum, dropping cancelled terms.
pub fn normalize(
    terms: impl IntoIterator<Item = LoopVector>,
) -> BTreeMap<(Vec<u32>, i64, Vec<u32>, i64), i64> {
    let mut m = BTreeMap::new();
    for t in terms {
        *m.entry(t.key()).or_insert(0) += t.coeff;
    }
    m.retain(|_, c| *c != 0);
    m
}

/// Whether the diagram rules for `F_c` and `E_c` agree with `f_c`, `e_c`
/// on the vector of `λ`, labels and signs included.
pub fn phi_equivariance_check(lambda: &SuperWeight, c: u32) -> bool {
    let p = lambda.p().get();
    let d = encode(lambda);
    let v = phi_super(lambda);
    [Kind::F, Kind::E].into_iter().all(|kind| {
        let diagram_side = normalize(apply_kind(kind, c, &d).terms.iter().map(phi_diagram));
        let loop_side = normalize(loop_apply(kind, c, &v, p));
        diagram_side == loop_side
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::PrimeP;
    use crate::superweight::SuperShape;

    fn sw(m: usize, n: usize, p: i64, mu: &[i64], nu: &[i64]) -> SuperWeight {
        let s = SuperShape::new(m, n, PrimeP::new(p).unwrap()).unwrap();
        SuperWeight::new(s, mu.to_vec(), nu.to_vec()).unwrap()
    }

    #[test]
    fn small_actions() {
        let v = phi_super(&sw(1, 1, 5, &[0], &[0]));
        let f0 = loop_f(0, &v, 5);
        assert_eq!(
            f0,
            vec![LoopVector {
                a: vec![1],
                s: 0,
                b: vec![0],
                r: 0,
                coeff: 1
            }]
        );
        let f4 = loop_f(4, &v, 5);
        assert_eq!(
            f4,
            vec![LoopVector {
                a: vec![0],
                s: 0,
                b: vec![4],
                r: -1,
                coeff: -1
            }]
        );
        assert_eq!(phi_super(&sw(1, 1, 5, &[0], &[1])), f4[0]);
    }

    #[test]
    fn equivariance_examples() {
        let z = sw(1, 1, 5, &[0], &[0]);
        assert!((0..5).all(|c| phi_equivariance_check(&z, c)));
        let fig = sw(5, 4, 11, &[18, 18, 15, 12, 12], &[-13, -13, -17, -18]);
        assert!((0..11).all(|c| phi_equivariance_check(&fig, c)));
    }

    #[test]
    fn cartan_diagonal() {
        let v = phi_super(&sw(2, 1, 5, &[1, 0], &[-1]));
        for c in 0..5 {
            let ef = loop_f(c, &v, 5)
                .iter()
                .flat_map(|w| loop_e(c, w, 5))
                .collect::<Vec<_>>();
            let fe = loop_e(c, &v, 5)
                .iter()
                .flat_map(|w| loop_f(c, w, 5))
                .collect::<Vec<_>>();
            let mut both = ef;
            both.extend(fe.into_iter().map(|mut w| {
                w.coeff = -w.coeff;
                w
            }));
            let sum = normalize(both);
            assert!(sum
                .keys()
                .all(|k| *k == (v.a.clone(), v.s, v.b.clone(), v.r)));
        }
    }
}
