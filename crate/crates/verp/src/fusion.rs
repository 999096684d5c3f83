//! Simple objects of the Verlinde category and their fusion.

use std::fmt;

use crate::error::{Error, Result};

/// An odd prime `p >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeP(u32);

impl PrimeP {
    pub fn new(p: i64) -> Result<Self> {
        if p < 5 {
            return Err(Error::validation(
                "bad-prime",
                format!("p = {p} must be a prime >= 5"),
            ));
        }
        if p > u32::MAX as i64 || !is_prime(p as u64) {
            return Err(Error::validation(
                "bad-prime",
                format!("p = {p} is not prime"),
            ));
        }
        Ok(PrimeP(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }

    /// Least nonnegative residue of `x`.
    pub fn residue(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }
}

impl fmt::Display for PrimeP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The simple object `L_n`, `1 <= n <= p-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VerSimple(u32);

impl VerSimple {
    pub fn new(n: i64, p: PrimeP) -> Result<Self> {
        if n < 1 || n >= p.as_i64() {
            return Err(Error::validation(
                "bad-simple",
                format!("index {n} outside 1..={}", p.get() - 1),
            ));
        }
        Ok(VerSimple(n as u32))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// `L_i ⊗ L_j` as a sorted list of summands, each of multiplicity one.
pub fn fuse_simples(i: VerSimple, j: VerSimple, p: PrimeP) -> Result<Vec<VerSimple>> {
    let pp = p.get();
    for x in [i, j] {
        if x.0 >= pp {
            return Err(Error::validation(
                "bad-simple",
                format!("index {} not below p = {pp}", x.0),
            ));
        }
    }
    let (i, j) = (i.0, j.0);
    let top = i.min(j).min(pp - i).min(pp - j);
    let base = i.abs_diff(j);
    let out: Vec<VerSimple> = (1..=top).map(|k| VerSimple(base + 2 * k - 1)).collect();
    assert!(
        out.windows(2).all(|w| w[0] < w[1]),
        "fusion produced a repeated summand"
    );
    Ok(out)
}

/// Whether `L_n` lies in the even part, i.e. has odd dimension.
pub fn is_even_object(n: VerSimple) -> bool {
    n.0 % 2 == 1
}
