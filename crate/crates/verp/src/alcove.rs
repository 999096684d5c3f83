//! Simple objects of `Ver_p(GL_n)`: the fundamental alcove, adding and
//! removing boxes by content, the invertible objects and level-rank duality.
//!
//! Note `S^{p-n+1} V = 0`, which is why every `λ + e_i` leaving the alcove
//! simply drops out of `V_λ ⊗ V`.

use std::fmt;

use crate::error::{Error, Result};
use crate::fusion::PrimeP;

/// A nonincreasing integer vector in the fundamental alcove
/// `λ_1 - λ_n <= p - n`, rank `1 <= n < p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLWeight {
    p: PrimeP,
    entries: Vec<i64>,
}

impl GLWeight {
    pub fn new(p: PrimeP, entries: Vec<i64>) -> Result<Self> {
        let n = entries.len();
        if !is_admissible(&entries, n, p)? {
            return Err(Error::validation(
                "not-admissible",
                format!(
                    "{} is not in the alcove for p = {p}, n = {n}",
                    fmt_vec(&entries)
                ),
            ));
        }
        Ok(GLWeight { p, entries })
    }

    pub(crate) fn from_trusted(p: PrimeP, entries: Vec<i64>) -> Self {
        debug_assert!(is_admissible(&entries, entries.len(), p).unwrap_or(false));
        GLWeight { p, entries }
    }

    pub fn zero(p: PrimeP, n: usize) -> Result<Self> {
        GLWeight::new(p, vec![0; n])
    }

    pub fn p(&self) -> PrimeP {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Tensor with `det^k`.
    pub fn shifted(&self, k: i64) -> GLWeight {
        GLWeight {
            p: self.p,
            entries: self.entries.iter().map(|x| x + k).collect(),
        }
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_vec(&self.entries))
    }
}

pub(crate) fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Nonincreasing with `λ_1 - λ_n <= p - n`. Errors on a length mismatch or a
/// rank outside `1..p`.
pub fn is_admissible(entries: &[i64], n: usize, p: PrimeP) -> Result<bool> {
    if entries.len() != n {
        return Err(Error::validation(
            "length-mismatch",
            format!("expected {n} entries, got {}", entries.len()),
        ));
    }
    if n == 0 || n >= p.get() as usize {
        return Err(Error::validation(
            "bad-rank",
            format!("rank {n} outside 1..{p}"),
        ));
    }
    let monotone = entries.windows(2).all(|w| w[0] >= w[1]);
    Ok(monotone && entries[0] - entries[n - 1] <= p.as_i64() - n as i64)
}

/// The content `λ_i + 1 - i` of the box added in row `i` (0-based index).
fn content(entries: &[i64], i: usize) -> i64 {
    entries[i] - i as i64
}

/// `F_c` on simples: the unique admissible `λ + e_i` whose new box has
/// content `≡ c`, if any.
pub fn add_box(lambda: &GLWeight, c: u32) -> Option<GLWeight> {
    let p = lambda.p;
    let e = &lambda.entries;
    let mut found = None;
    for i in 0..e.len() {
        if p.residue(content(e, i)) != c {
            continue;
        }
        let mut next = e.clone();
        next[i] += 1;
        if is_admissible(&next, next.len(), p).unwrap_or(false) {
            assert!(
                found.is_none(),
                "two boxes of content {c} addable to {lambda}"
            );
            found = Some(GLWeight { p, entries: next });
        }
    }
    found
}

/// `E_c` on simples: the unique admissible `μ` with `add_box(μ, c) = λ`.
pub fn remove_box(lambda: &GLWeight, c: u32) -> Option<GLWeight> {
    let p = lambda.p;
    let e = &lambda.entries;
    let mut found = None;
    for i in 0..e.len() {
        let mut prev = e.clone();
        prev[i] -= 1;
        if p.residue(content(&prev, i)) != c {
            continue;
        }
        if is_admissible(&prev, prev.len(), p).unwrap_or(false) {
            assert!(
                found.is_none(),
                "two boxes of content {c} removable from {lambda}"
            );
            found = Some(GLWeight { p, entries: prev });
        }
    }
    found
}

/// Summands of `V_λ ⊗ V`.
pub fn tensor_with_v(lambda: &GLWeight) -> Vec<GLWeight> {
    let p = lambda.p;
    let mut out = Vec::new();
    for i in 0..lambda.rank() {
        let mut next = lambda.entries.clone();
        next[i] += 1;
        if is_admissible(&next, next.len(), p).unwrap_or(false) {
            out.push(GLWeight { p, entries: next });
        }
    }
    out
}

/// `(v_{a_1} ∧ ... ∧ v_{a_n}) t^{-s}`; residues kept in row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedgeVector {
    pub residues: Vec<u32>,
    pub s: i64,
}

pub fn phi_wedge(lambda: &GLWeight) -> WedgeVector {
    let p = lambda.p.as_i64();
    let mut residues = Vec::with_capacity(lambda.rank());
    let mut s = 0;
    for i in 0..lambda.rank() {
        let x = content(&lambda.entries, i);
        residues.push(x.rem_euclid(p) as u32);
        s += x.div_euclid(p);
    }
    debug_assert!(distinct(&residues));
    WedgeVector { residues, s }
}

pub(crate) fn distinct(v: &[u32]) -> bool {
    let mut seen = 0u128;
    let mut big = std::collections::HashSet::new();
    v.iter().all(|&x| {
        if x < 128 {
            let bit = 1u128 << x;
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        } else {
            big.insert(x)
        }
    })
}

/// Rows of a strictly decreasing run `x_1 > ... > x_n` with `x_1 - x_n < p`
/// from the residue set and `s = Σ floor(x_i / p)`. Returns `(a_i, s_i)`.
pub(crate) fn arrange_descending(residues: &[u32], s: i64) -> Vec<(u32, i64)> {
    let n = residues.len() as i64;
    let mut c = residues.to_vec();
    c.sort_unstable_by(|x, y| y.cmp(x));
    let q = s.div_euclid(n);
    let k = s.rem_euclid(n) as usize;
    let n = n as usize;
    (0..n)
        .map(|i| {
            if i < k {
                (c[n - k + i], q + 1)
            } else {
                (c[i - k], q)
            }
        })
        .collect()
}

/// Inverse of [`phi_wedge`].
pub fn wedge_to_weight(w: &WedgeVector, p: PrimeP) -> Result<GLWeight> {
    let n = w.residues.len();
    if n == 0
        || n >= p.get() as usize
        || w.residues.iter().any(|&a| a >= p.get())
        || !distinct(&w.residues)
    {
        return Err(Error::validation(
            "bad-wedge",
            "residues must be distinct, in 0..p, at most p-1 of them",
        ));
    }
    let pp = p.as_i64();
    let entries = arrange_descending(&w.residues, w.s)
        .into_iter()
        .enumerate()
        .map(|(i, (a, si))| a as i64 + pp * si + i as i64)
        .collect();
    GLWeight::new(p, entries)
}

/// Tensor with `χ^k`, `χ = S^{p-n} V`. One step sends
/// `λ ↦ (λ_n + p - n, λ_1, ..., λ_{n-1})`; `n` steps add `p - n` to every entry.
pub fn chi_rotate(lambda: &GLWeight, k: i64) -> GLWeight {
    let n = lambda.rank();
    let step = lambda.p.as_i64() - n as i64;
    let q = k.div_euclid(n as i64);
    let r = k.rem_euclid(n as i64) as usize;
    let e = &lambda.entries;
    let entries = (0..n)
        .map(|i| {
            if i < r {
                e[n - r + i] + step * (q + 1)
            } else {
                e[i - r] + step * q
            }
        })
        .collect();
    GLWeight {
        p: lambda.p,
        entries,
    }
}

/// `det`, `χ` and `ψ = det^a ⊗ χ^b` with `a n + b (p - n) = 1`, `0 <= b < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibleTriple {
    pub det: GLWeight,
    pub chi: GLWeight,
    pub a: i64,
    pub b: i64,
    pub psi: GLWeight,
}

pub fn psi_data(n: usize, p: PrimeP) -> Result<InvertibleTriple> {
    if n == 0 || n >= p.get() as usize {
        return Err(Error::validation(
            "bad-rank",
            format!("rank {n} outside 1..{p}"),
        ));
    }
    let (ni, m) = (n as i64, p.as_i64() - n as i64);
    let b = (0..ni)
        .find(|b| (1 - b * m).rem_euclid(ni) == 0)
        .expect("n and p - n are coprime");
    let a = (1 - b * m) / ni;
    let det = GLWeight {
        p,
        entries: vec![1; n],
    };
    let mut chi = vec![0; n];
    chi[0] = m;
    let chi = GLWeight { p, entries: chi };
    let psi = chi_rotate(
        &GLWeight {
            p,
            entries: vec![a; n],
        },
        b,
    );
    Ok(InvertibleTriple {
        det,
        chi,
        a,
        b,
        psi,
    })
}

/// Transpose of a partition, padded or cut to `len` parts.
pub fn transpose(partition: &[i64], len: usize) -> Vec<i64> {
    (1..=len as i64)
        .map(|j| partition.iter().filter(|&&x| x >= j).count() as i64)
        .collect()
}

/// Level-rank duality `D`: a `GL_n` weight to a `GL_{p-n}` weight, together
/// with the parity `|λ| mod 2` of the accompanying `I` twist.
pub fn level_rank_d(lambda: &GLWeight) -> (GLWeight, u8) {
    let p = lambda.p;
    let n = lambda.rank();
    let last = lambda.entries[n - 1];
    let mu: Vec<i64> = lambda.entries.iter().map(|x| x - last).collect();
    let dual_rank = p.get() as usize - n;
    let t = GLWeight::from_trusted(p, transpose(&mu, dual_rank));
    let parity = lambda.degree().rem_euclid(2) as u8;
    (chi_rotate(&t, last), parity)
}

/// Inverse of [`level_rank_d`]: `D` applied at the complementary rank.
pub fn level_rank_d_inverse(kappa: &GLWeight) -> (GLWeight, u8) {
    level_rank_d(kappa)
}
