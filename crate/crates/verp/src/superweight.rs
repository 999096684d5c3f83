//! Weights of `GL(L_m|L_n)`: the form, `ρ` and `β`, residues, atypicality,
//! the Casimir scalar and the dominance order.

use std::fmt;

use crate::alcove::{fmt_vec, is_admissible, GLWeight};
use crate::error::{Error, Result};
use crate::fusion::PrimeP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperShape {
    m: usize,
    n: usize,
    p: PrimeP,
}

impl SuperShape {
    pub fn new(m: usize, n: usize, p: PrimeP) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::validation("bad-shape", "m and n must be positive"));
        }
        if m + n >= p.get() as usize {
            return Err(Error::validation(
                "bad-shape",
                format!("m + n = {} must be below p = {p}", m + n),
            ));
        }
        Ok(SuperShape { m, n, p })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> PrimeP {
        self.p
    }
}

/// Raw coordinates in `Z^{m|n}`, with no alcove contract.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperCoords {
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
}

impl SuperCoords {
    pub fn new(mu: Vec<i64>, nu: Vec<i64>) -> Self {
        SuperCoords { mu, nu }
    }

    pub fn concat(&self) -> Vec<i64> {
        self.mu.iter().chain(&self.nu).copied().collect()
    }

    pub fn add(&self, other: &SuperCoords) -> SuperCoords {
        zip_with(self, other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SuperCoords) -> SuperCoords {
        zip_with(self, other, |a, b| a - b)
    }

    pub fn scale(&self, k: i64) -> SuperCoords {
        SuperCoords {
            mu: self.mu.iter().map(|x| x * k).collect(),
            nu: self.nu.iter().map(|x| x * k).collect(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.mu.iter().chain(&self.nu).sum()
    }
}

fn zip_with(a: &SuperCoords, b: &SuperCoords, f: impl Fn(i64, i64) -> i64) -> SuperCoords {
    assert_eq!(a.mu.len(), b.mu.len());
    assert_eq!(a.nu.len(), b.nu.len());
    SuperCoords {
        mu: a.mu.iter().zip(&b.mu).map(|(x, y)| f(*x, *y)).collect(),
        nu: a.nu.iter().zip(&b.nu).map(|(x, y)| f(*x, *y)).collect(),
    }
}

impl fmt::Display for SuperCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = fmt_vec(&self.mu);
        let b = fmt_vec(&self.nu);
        write!(f, "({}|{})", &a[1..a.len() - 1], &b[1..b.len() - 1])
    }
}

/// A label `(μ|ν)`: both parts admissible, for ranks `m` and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperWeight {
    shape: SuperShape,
    coords: SuperCoords,
}

impl SuperWeight {
    pub fn new(shape: SuperShape, mu: Vec<i64>, nu: Vec<i64>) -> Result<Self> {
        let p = shape.p;
        for (name, part, k) in [("mu", &mu, shape.m), ("nu", &nu, shape.n)] {
            if !is_admissible(part, k, p)? {
                return Err(Error::validation(
                    "not-admissible",
                    format!(
                        "{name} = {} is not in the alcove for p = {p}, rank {k}",
                        fmt_vec(part)
                    ),
                ));
            }
        }
        Ok(SuperWeight {
            shape,
            coords: SuperCoords { mu, nu },
        })
    }

    pub fn from_coords(shape: SuperShape, c: SuperCoords) -> Result<Self> {
        SuperWeight::new(shape, c.mu, c.nu)
    }

    pub(crate) fn from_trusted(shape: SuperShape, mu: Vec<i64>, nu: Vec<i64>) -> Self {
        debug_assert!(SuperWeight::new(shape, mu.clone(), nu.clone()).is_ok());
        SuperWeight {
            shape,
            coords: SuperCoords { mu, nu },
        }
    }

    pub fn shape(&self) -> SuperShape {
        self.shape
    }

    pub fn p(&self) -> PrimeP {
        self.shape.p
    }

    pub fn mu(&self) -> &[i64] {
        &self.coords.mu
    }

    pub fn nu(&self) -> &[i64] {
        &self.coords.nu
    }

    pub fn coords(&self) -> &SuperCoords {
        &self.coords
    }

    pub fn mu_weight(&self) -> GLWeight {
        GLWeight::new(self.shape.p, self.coords.mu.clone()).expect("validated")
    }

    pub fn nu_weight(&self) -> GLWeight {
        GLWeight::new(self.shape.p, self.coords.nu.clone()).expect("validated")
    }

    pub fn degree(&self) -> i64 {
        self.coords.degree()
    }

    pub fn mu_degree(&self) -> i64 {
        self.coords.mu.iter().sum()
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}

/// `2ρ = (m-1-n, m-3-n, ..., 1-m-n | n-1+m, ..., 1-n+m)`.
pub fn rho2(shape: SuperShape) -> SuperCoords {
    let (m, n) = (shape.m as i64, shape.n as i64);
    SuperCoords {
        mu: (0..m).map(|i| m - 1 - n - 2 * i).collect(),
        nu: (0..n).map(|j| n - 1 + m - 2 * j).collect(),
    }
}

/// `β = (n,...,n | -m,...,-m)`, the sum of the positive odd roots.
pub fn beta(shape: SuperShape) -> SuperCoords {
    SuperCoords {
        mu: vec![shape.n as i64; shape.m],
        nu: vec![-(shape.m as i64); shape.n],
    }
}

/// `Σ u_i v_i` over the `ε` coordinates minus the same over the `δ` ones.
pub fn form(u: &SuperCoords, v: &SuperCoords) -> Result<i64> {
    if u.mu.len() != v.mu.len() || u.nu.len() != v.nu.len() {
        return Err(Error::validation(
            "length-mismatch",
            "vectors of different shapes",
        ));
    }
    let even: i64 = u.mu.iter().zip(&v.mu).map(|(a, b)| a * b).sum();
    let odd: i64 = u.nu.iter().zip(&v.nu).map(|(a, b)| a * b).sum();
    Ok(even - odd)
}

/// The odd root `ε_i - δ_j` (0-based) as a coordinate vector.
pub fn odd_root(shape: SuperShape, i: usize, j: usize) -> SuperCoords {
    let mut c = SuperCoords {
        mu: vec![0; shape.m],
        nu: vec![0; shape.n],
    };
    c.mu[i] = 1;
    c.nu[j] = -1;
    c
}

/// `μ_i - i + 1 = a_i + p s_i` and `-m - ν_j + j = b_j + p r_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueData {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub s_parts: Vec<i64>,
    pub r_parts: Vec<i64>,
    pub s: i64,
    pub r: i64,
}

pub fn residue_data(lambda: &SuperWeight) -> ResidueData {
    let p = lambda.p().as_i64();
    let m = lambda.shape.m as i64;
    let mut d = ResidueData {
        a: vec![],
        b: vec![],
        s_parts: vec![],
        r_parts: vec![],
        s: 0,
        r: 0,
    };
    for (i, mu) in lambda.mu().iter().enumerate() {
        let x = mu - i as i64;
        d.a.push(x.rem_euclid(p) as u32);
        d.s_parts.push(x.div_euclid(p));
    }
    for (j, nu) in lambda.nu().iter().enumerate() {
        let y = -m - nu + j as i64 + 1;
        d.b.push(y.rem_euclid(p) as u32);
        d.r_parts.push(y.div_euclid(p));
    }
    d.s = d.s_parts.iter().sum();
    d.r = d.r_parts.iter().sum();
    d
}

/// `⟨λ + ρ, ε_i - δ_j⟩` (0-based), computed as `⟨2λ + 2ρ, α⟩ / 2`.
pub fn rho_pairing(lambda: &SuperWeight, i: usize, j: usize) -> i64 {
    let shape = lambda.shape;
    let twice = lambda.coords.scale(2).add(&rho2(shape));
    let v = form(&twice, &odd_root(shape, i, j)).expect("same shape");
    assert!(v % 2 == 0, "⟨2λ+2ρ, α⟩ = {v} is odd");
    v / 2
}

/// Number of `(i, j)` with `a_i = b_j`; cross-checked against the count of
/// odd roots with `⟨λ + ρ, α⟩ ≡ 0 mod p`.
pub fn atypicality(lambda: &SuperWeight) -> usize {
    let d = residue_data(lambda);
    let by_residue = d.a.iter().filter(|a| d.b.contains(a)).count();
    let p = lambda.p().as_i64();
    let by_form = (0..lambda.shape.m)
        .flat_map(|i| (0..lambda.shape.n).map(move |j| (i, j)))
        .filter(|&(i, j)| rho_pairing(lambda, i, j).rem_euclid(p) == 0)
        .count();
    assert_eq!(by_residue, by_form, "atypicality mismatch at {lambda}");
    by_residue
}

pub fn is_typical(lambda: &SuperWeight) -> bool {
    atypicality(lambda) == 0
}

/// Whether `K(λ)` is simple: `⟨λ + ρ, α⟩ ≢ 0` for every positive odd root,
/// checked against typicality.
pub fn kac_irreducible(lambda: &SuperWeight) -> bool {
    let p = lambda.p().as_i64();
    let direct = (0..lambda.shape.m)
        .all(|i| (0..lambda.shape.n).all(|j| rho_pairing(lambda, i, j).rem_euclid(p) != 0));
    assert_eq!(direct, is_typical(lambda));
    direct
}

/// `⟨λ + 2ρ, λ⟩` and its residue mod `p`.
pub fn casimir_scalar(lambda: &SuperWeight) -> (i64, u32) {
    let c = &lambda.coords;
    let v = form(&c.add(&rho2(lambda.shape)), c).expect("same shape");
    (v, lambda.p().residue(v))
}

/// `⟨(μ,π) + 2ρ, (μ,π)⟩` for `GL_{m + p - n}`, with `2ρ = (N-1, N-3, ..., 1-N)`.
pub fn casimir_unsuper(mu: &GLWeight, pi: &GLWeight) -> i64 {
    let v: Vec<i64> = mu.entries().iter().chain(pi.entries()).copied().collect();
    let big_n = v.len() as i64;
    v.iter()
        .enumerate()
        .map(|(i, x)| x * (x + big_n - 1 - 2 * i as i64))
        .sum()
}

/// `α ⪯ λ`: equal total degree and `|α_μ| <= |λ_μ|`.
pub fn dominance_leq(alpha: &SuperWeight, lambda: &SuperWeight) -> bool {
    alpha.shape == lambda.shape
        && alpha.degree() == lambda.degree()
        && alpha.mu_degree() <= lambda.mu_degree()
}

pub fn dominance_lt(alpha: &SuperWeight, lambda: &SuperWeight) -> bool {
    dominance_leq(alpha, lambda) && alpha.mu_degree() < lambda.mu_degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize, p: i64) -> SuperShape {
        SuperShape::new(m, n, PrimeP::new(p).unwrap()).unwrap()
    }

    fn sw(m: usize, n: usize, p: i64, mu: &[i64], nu: &[i64]) -> SuperWeight {
        SuperWeight::new(shape(m, n, p), mu.to_vec(), nu.to_vec()).unwrap()
    }

    #[test]
    fn rho_and_beta() {
        assert_eq!(rho2(shape(1, 1, 5)), SuperCoords::new(vec![-1], vec![1]));
        assert_eq!(
            rho2(shape(5, 4, 11)),
            SuperCoords::new(vec![0, -2, -4, -6, -8], vec![8, 6, 4, 2])
        );
        assert_eq!(
            rho2(shape(2, 2, 5)),
            SuperCoords::new(vec![-1, -3], vec![3, 1])
        );
        assert_eq!(beta(shape(1, 1, 5)), SuperCoords::new(vec![1], vec![-1]));
        assert_eq!(
            beta(shape(2, 3, 7)),
            SuperCoords::new(vec![3, 3], vec![-2, -2, -2])
        );
    }

    #[test]
    fn form_values() {
        let s = shape(1, 1, 5);
        let e = SuperCoords::new(vec![1], vec![0]);
        let d = SuperCoords::new(vec![0], vec![1]);
        assert_eq!(form(&e, &e).unwrap(), 1);
        assert_eq!(form(&d, &d).unwrap(), -1);
        let a = odd_root(s, 0, 0);
        assert_eq!(form(&a, &a).unwrap(), 0);
    }

    #[test]
    fn gl54_residues() {
        let l = sw(5, 4, 11, &[18, 18, 15, 12, 12], &[-13, -13, -17, -18]);
        let d = residue_data(&l);
        assert_eq!(d.a, vec![7, 6, 2, 9, 8]);
        assert_eq!(d.b, vec![9, 10, 4, 6]);
        assert_eq!((d.s, d.r), (3, 2));
        assert_eq!(atypicality(&l), 2);
        assert!(!kac_irreducible(&l));
    }

    #[test]
    fn small_residues() {
        let d = residue_data(&sw(1, 1, 5, &[0], &[1]));
        assert_eq!(
            (d.a.clone(), d.b.clone(), d.s, d.r),
            (vec![0], vec![4], 0, -1)
        );
        assert_eq!(atypicality(&sw(1, 1, 5, &[0], &[0])), 1);
        assert_eq!(atypicality(&sw(1, 1, 5, &[1], &[0])), 0);
        assert!(kac_irreducible(&sw(1, 1, 5, &[1], &[0])));
    }

    #[test]
    fn casimir() {
        assert_eq!(casimir_scalar(&sw(1, 1, 5, &[0], &[0])), (0, 0));
        assert_eq!(casimir_scalar(&sw(1, 1, 5, &[1], &[0])), (0, 0));
        let p = PrimeP::new(5).unwrap();
        let mu = GLWeight::new(p, vec![1]).unwrap();
        let pi = GLWeight::zero(p, 4).unwrap();
        assert_eq!(casimir_unsuper(&mu, &pi), 5);
    }

    #[test]
    fn dominance() {
        let a = sw(1, 1, 5, &[0], &[1]);
        let b = sw(1, 1, 5, &[1], &[0]);
        assert!(dominance_leq(&a, &a));
        assert!(dominance_leq(&a, &b));
        assert!(!dominance_leq(&sw(1, 1, 5, &[1], &[1]), &b));
    }
}
