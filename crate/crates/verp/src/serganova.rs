//! Serganova's algorithm for classical `GL(m|n)` in characteristic `p`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::alcove::fmt_vec;
use crate::error::{Error, Result};
use crate::fusion::PrimeP;
use crate::superweight::{SuperCoords, SuperWeight};

/// `ε_i - δ_j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddRoot {
    pub i: usize,
    pub j: usize,
}

impl OddRoot {
    /// `self ⪯ other`: `i >= other.i` and `j <= other.j`.
    pub fn preceq(self, other: OddRoot) -> bool {
        self.i >= other.i && self.j <= other.j
    }
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-d{}", self.i, self.j)
    }
}

/// `(j ascending, i descending)`: `ε_m-δ_1, ..., ε_1-δ_1, ε_m-δ_2, ...`.
pub fn odd_root_order(m: usize, n: usize) -> Vec<OddRoot> {
    (1..=n)
        .flat_map(|j| (1..=m).rev().map(move |i| OddRoot { i, j }))
        .collect()
}

/// Whether `order` lists every odd root once and extends `⪯`.
pub fn is_linear_extension(order: &[OddRoot], m: usize, n: usize) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort();
    let mut all = odd_root_order(m, n);
    all.sort();
    sorted == all
        && (0..order.len()).all(|x| {
            (0..order.len()).all(|y| !order[x].preceq(order[y]) || x <= y || order[x] == order[y])
        })
}

/// A random linear extension of `⪯`, built by repeatedly picking a minimal
/// remaining root.
pub fn random_order<R: Rng>(m: usize, n: usize, rng: &mut R) -> Vec<OddRoot> {
    let mut left = odd_root_order(m, n);
    let mut out = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let minimal: Vec<usize> = (0..left.len())
            .filter(|&x| left.iter().all(|&o| o == left[x] || !o.preceq(left[x])))
            .collect();
        let pick = *minimal
            .choose(rng)
            .expect("a finite poset has minimal elements");
        out.push(left.remove(pick));
    }
    out
}

/// `⟨ρ, ε_a - δ_b⟩ = m - a - b + 1`.
fn rho_on(m: usize, r: OddRoot) -> i64 {
    m as i64 - r.i as i64 - r.j as i64 + 1
}

/// `⟨Σ_{i<k} β_i, β_k⟩ = -⟨ρ, β_k⟩` for every `k`, in the fixed order.
pub fn check_oddroot_lemma(m: usize, n: usize) -> bool {
    let order = odd_root_order(m, n);
    (0..order.len()).all(|k| {
        let bk = order[k];
        // ⟨ε_i - δ_j, ε_a - δ_b⟩ = [i = a] - [j = b]
        let lhs: i64 = order[..k]
            .iter()
            .map(|b| (b.i == bk.i) as i64 - (b.j == bk.j) as i64)
            .sum();
        lhs == -rho_on(m, bk)
    })
}

/// `λ ∈ Z^{m|n}` with each part nonincreasing; no alcove bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalWeight {
    coords: SuperCoords,
}

impl ClassicalWeight {
    pub fn new(mu: Vec<i64>, nu: Vec<i64>) -> Result<Self> {
        if mu.is_empty() || nu.is_empty() {
            return Err(Error::validation("bad-shape", "m and n must be positive"));
        }
        for part in [&mu, &nu] {
            if !part.windows(2).all(|w| w[0] >= w[1]) {
                return Err(Error::validation(
                    "not-monotone",
                    format!("{} is not nonincreasing", fmt_vec(part)),
                ));
            }
        }
        Ok(ClassicalWeight {
            coords: SuperCoords::new(mu, nu),
        })
    }

    pub fn coords(&self) -> &SuperCoords {
        &self.coords
    }

    pub fn m(&self) -> usize {
        self.coords.mu.len()
    }

    pub fn n(&self) -> usize {
        self.coords.nu.len()
    }
}

impl From<&SuperWeight> for ClassicalWeight {
    fn from(w: &SuperWeight) -> Self {
        ClassicalWeight {
            coords: w.coords().clone(),
        }
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}

/// `⟨x, ε_i - δ_j⟩ = x_{ε_i} + x_{δ_j}`.
fn pair(c: &SuperCoords, r: OddRoot) -> i64 {
    c.mu[r.i - 1] + c.nu[r.j - 1]
}

/// Runs the algorithm along `order`. The result is a raw vector: the
/// intermediate subtractions need not keep the parts monotone.
pub fn serganova_hat_with_order(
    lambda: &ClassicalWeight,
    p: PrimeP,
    order: &[OddRoot],
) -> SuperCoords {
    let mut c = lambda.coords.clone();
    for &r in order {
        if pair(&c, r).rem_euclid(p.as_i64()) != 0 {
            c.mu[r.i - 1] -= 1;
            c.nu[r.j - 1] += 1;
        }
    }
    c
}

pub fn serganova_hat(lambda: &ClassicalWeight, p: PrimeP) -> SuperCoords {
    serganova_hat_with_order(lambda, p, &odd_root_order(lambda.m(), lambda.n()))
}

/// `λ - Σ β_i`.
pub fn kac_lowest(lambda: &ClassicalWeight) -> SuperCoords {
    let (m, n) = (lambda.m() as i64, lambda.n() as i64);
    SuperCoords::new(
        lambda.coords.mu.iter().map(|x| x - n).collect(),
        lambda.coords.nu.iter().map(|x| x + m).collect(),
    )
}

/// `⟨λ + ρ, α⟩ ≢ 0 mod p` for every positive odd root `α`.
pub fn sh_nonzero(lambda: &ClassicalWeight, p: PrimeP) -> bool {
    let m = lambda.m();
    odd_root_order(m, lambda.n())
        .into_iter()
        .all(|r| (pair(&lambda.coords, r) + rho_on(m, r)).rem_euclid(p.as_i64()) != 0)
}
