//! Finite windows of weights for exhaustive checks.

use crate::alcove::GLWeight;
use crate::fusion::PrimeP;
use crate::superweight::{SuperShape, SuperWeight};

/// Admissible rank-`n` weights with every entry in `lo..=hi`.
pub fn gl_weights(p: PrimeP, n: usize, lo: i64, hi: i64) -> Vec<GLWeight> {
    let bound = p.as_i64() - n as i64;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, lo: i64, hi: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        let floor = cur.first().map_or(lo, |&f| lo.max(f - bound));
        for x in (floor..=top).rev() {
            cur.push(x);
            go(n, lo, hi, bound, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(n, lo, hi, bound, &mut cur, &mut raw);
    out.extend(raw.into_iter().map(|e| GLWeight::from_trusted(p, e)));
    out
}

/// All `(m, n)` with `m, n >= 1` and `m + n < p`.
pub fn shapes(p: PrimeP) -> Vec<SuperShape> {
    let pp = p.get() as usize;
    (1..pp)
        .flat_map(|m| (1..pp - m).map(move |n| (m, n)))
        .map(|(m, n)| SuperShape::new(m, n, p).expect("m + n < p"))
        .collect()
}

/// Every label of `shape` with all entries of `μ` and `ν` in `lo..=hi`.
pub fn super_weights(shape: SuperShape, lo: i64, hi: i64) -> Vec<SuperWeight> {
    let p = shape.p();
    let mus = gl_weights(p, shape.m(), lo, hi);
    let nus = gl_weights(p, shape.n(), lo, hi);
    let mut out = Vec::with_capacity(mus.len() * nus.len());
    for mu in &mus {
        for nu in &nus {
            out.push(SuperWeight::from_trusted(
                shape,
                mu.entries().to_vec(),
                nu.entries().to_vec(),
            ));
        }
    }
    out
}

/// Calls `f` on every label of `shape` in the window without collecting.
pub fn for_each_super_weight(shape: SuperShape, lo: i64, hi: i64, mut f: impl FnMut(&SuperWeight)) {
    let p = shape.p();
    let mus = gl_weights(p, shape.m(), lo, hi);
    let nus = gl_weights(p, shape.n(), lo, hi);
    for mu in &mus {
        for nu in &nus {
            f(&SuperWeight::from_trusted(
                shape,
                mu.entries().to_vec(),
                nu.entries().to_vec(),
            ));
        }
    }
}

/// The window `-p..=p-1` of width `2p`.
pub fn default_window(p: PrimeP) -> (i64, i64) {
    (-p.as_i64(), p.as_i64() - 1)
}
