//! `GL(X)` for `X = X_1 ⊕ ... ⊕ X_k`: Borels indexed by `w ∈ S_k`, and the
//! relabeling `λ ↦ λ^w` with `L_w(λ) ≃ L(λ^w)`.

use std::fmt;

use crate::alcove::{level_rank_d, level_rank_d_inverse, GLWeight};
use crate::caps::{sigma_to_standard, standard_to_sigma};
use crate::error::{Error, Result};
use crate::fusion::PrimeP;
use crate::superweight::{SuperShape, SuperWeight};

/// Types `n_i` with `X_i ≃ L_{n_i}`, nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GLXShape {
    p: PrimeP,
    types: Vec<usize>,
}

impl GLXShape {
    pub fn new(p: PrimeP, types: Vec<usize>) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::validation("bad-shape", "at least one summand"));
        }
        if let Some(t) = types.iter().find(|&&t| t == 0 || t >= p.get() as usize) {
            return Err(Error::validation(
                "bad-shape",
                format!("type {t} outside 1..{p}"),
            ));
        }
        if !types.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::validation(
                "bad-shape",
                "types must be listed in nondecreasing order",
            ));
        }
        Ok(GLXShape { p, types })
    }

    pub fn p(&self) -> PrimeP {
        self.p
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn k(&self) -> usize {
        self.types.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TupleWeight {
    shape: GLXShape,
    parts: Vec<GLWeight>,
}

impl TupleWeight {
    pub fn new(shape: GLXShape, parts: Vec<Vec<i64>>) -> Result<Self> {
        if parts.len() != shape.k() {
            return Err(Error::validation(
                "length-mismatch",
                format!("{} parts for {} summands", parts.len(), shape.k()),
            ));
        }
        let parts = parts
            .into_iter()
            .zip(&shape.types)
            .map(|(e, &t)| {
                if e.len() != t {
                    return Err(Error::validation(
                        "length-mismatch",
                        format!("part of length {} for type {t}", e.len()),
                    ));
                }
                GLWeight::new(shape.p, e)
            })
            .collect::<Result<_>>()?;
        Ok(TupleWeight { shape, parts })
    }

    pub fn shape(&self) -> &GLXShape {
        &self.shape
    }

    pub fn parts(&self) -> &[GLWeight] {
        &self.parts
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.parts.iter().map(GLWeight::degree).collect()
    }
}

impl fmt::Display for TupleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `w ∈ S_k`, stored 0-based: `images[i] = w(i)`, the position of summand `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorelPermutation {
    images: Vec<usize>,
}

impl BorelPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || std::mem::replace(&mut seen[x], true) {
                return Err(Error::validation(
                    "bad-permutation",
                    format!("{images:?} is not a permutation"),
                ));
            }
        }
        Ok(BorelPermutation { images })
    }

    /// From one-line notation `w(1) w(2) ... w(k)`, 1-based.
    pub fn from_one_line(w: &[usize]) -> Result<Self> {
        if w.contains(&0) {
            return Err(Error::validation(
                "bad-permutation",
                "one-line notation is 1-based",
            ));
        }
        BorelPermutation::new(w.iter().map(|x| x - 1).collect())
    }

    pub fn identity(k: usize) -> Self {
        BorelPermutation {
            images: (0..k).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `w^{-1}(q)` for every position `q`: summands in the order `w` reads them.
    pub fn inverse_order(&self) -> Vec<usize> {
        let mut inv = vec![0; self.k()];
        for (i, &q) in self.images.iter().enumerate() {
            inv[q] = i;
        }
        inv
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BorelPermutation) -> BorelPermutation {
        BorelPermutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Whether `w` only permutes summands of equal type.
    pub fn in_classical_weyl_group(&self, shape: &GLXShape) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &q)| shape.types[i] == shape.types[q])
    }
}

fn check_same(a: &GLXShape, k: usize) -> Result<()> {
    if a.k() != k {
        return Err(Error::validation(
            "shape-mismatch",
            format!("{} summands against a permutation of {k}", a.k()),
        ));
    }
    Ok(())
}

/// `α_{w^{-1}(1)} >= ... >= α_{w^{-1}(k)}`.
pub fn is_w_dominant_vec(alpha: &[i64], w: &BorelPermutation) -> bool {
    let read: Vec<i64> = w.inverse_order().into_iter().map(|i| alpha[i]).collect();
    read.windows(2).all(|x| x[0] >= x[1])
}

pub fn is_w_dominant(lambda: &TupleWeight, w: &BorelPermutation) -> Result<bool> {
    check_same(&lambda.shape, w.k())?;
    Ok(is_w_dominant_vec(&lambda.degrees(), w))
}

/// `λ ⪯_w μ`: the degree difference `|μ| - |λ|` is `w`-dominant.
pub fn w_dominance_leq(
    lambda: &TupleWeight,
    mu: &TupleWeight,
    w: &BorelPermutation,
) -> Result<bool> {
    check_same(&lambda.shape, w.k())?;
    if lambda.shape != mu.shape {
        return Err(Error::validation(
            "shape-mismatch",
            "tuple weights of different shapes",
        ));
    }
    let diff: Vec<i64> = mu
        .degrees()
        .iter()
        .zip(lambda.degrees())
        .map(|(a, b)| a - b)
        .collect();
    Ok(is_w_dominant_vec(&diff, w))
}

/// Within each block of equal types, degrees read in `w`-order do not increase.
pub fn w_integrable(lambda: &TupleWeight, w: &BorelPermutation) -> Result<bool> {
    check_same(&lambda.shape, w.k())?;
    let deg = lambda.degrees();
    let order = w.inverse_order();
    let types = &lambda.shape.types;
    let mut blocks: Vec<usize> = types.clone();
    blocks.dedup();
    Ok(blocks.into_iter().all(|t| {
        let read: Vec<i64> = order
            .iter()
            .filter(|&&i| types[i] == t)
            .map(|&i| deg[i])
            .collect();
        read.windows(2).all(|x| x[0] >= x[1])
    }))
}

/// `λ^w = w·λ = (λ^{(w^{-1}(1))}, ..., λ^{(w^{-1}(k))})` for `w ∈ W_0`.
pub fn conjugate_relabel(lambda: &TupleWeight, w: &BorelPermutation) -> Result<TupleWeight> {
    check_same(&lambda.shape, w.k())?;
    if !w.in_classical_weyl_group(&lambda.shape) {
        return Err(Error::contract(
            "not-classical",
            "permutation moves a summand to a different type",
        ));
    }
    if !w_integrable(lambda, w)? {
        return Err(Error::contract(
            "not-integrable",
            format!("{lambda} is not w-integrable"),
        ));
    }
    let parts = w
        .inverse_order()
        .into_iter()
        .map(|i| lambda.parts[i].clone())
        .collect();
    Ok(TupleWeight {
        shape: lambda.shape.clone(),
        parts,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// The input labels the standard Borel (smaller type first).
    StandardToSigma,
    /// The input labels the Borel with the larger type first.
    SigmaToStandard,
}

/// Relabels a simple of `GL(L_m ⊕ L_r)`, `m < r`, across the odd
/// reflection. `a` has rank `m`, `b` rank `r`; the pair is read as `(a | D(b))`
/// for `GL(L_m|L_{p-r})`.
pub fn odd_reflect_pair(
    a: &GLWeight,
    b: &GLWeight,
    direction: Direction,
) -> Result<(GLWeight, GLWeight)> {
    let p = a.p();
    if b.p() != p {
        return Err(Error::validation(
            "shape-mismatch",
            "weights over different primes",
        ));
    }
    if a.rank() >= b.rank() {
        return Err(Error::contract(
            "not-odd",
            format!(
                "odd reflection needs rank {} below rank {}",
                a.rank(),
                b.rank()
            ),
        ));
    }
    let shape = SuperShape::new(a.rank(), p.get() as usize - b.rank(), p)?;
    let (nu, _) = level_rank_d(b);
    let label = SuperWeight::new(shape, a.entries().to_vec(), nu.into_entries())?;
    let out = match direction {
        Direction::StandardToSigma => standard_to_sigma(&label),
        Direction::SigmaToStandard => sigma_to_standard(&label)?,
    };
    let (b2, _) = level_rank_d_inverse(&out.nu_weight());
    Ok((out.mu_weight(), b2))
}

/// `λ^w`, via the leftmost-descent factorization of `w`.
pub fn borel_translate(lambda: &TupleWeight, w: &BorelPermutation) -> Result<TupleWeight> {
    borel_translate_with(lambda, w, &mut |descents: &[usize]| descents[0])
}

/// `λ^w` along the reduced factorization chosen by `pick`, which is handed
/// the current descent positions and returns one of them.
pub fn borel_translate_with(
    lambda: &TupleWeight,
    w: &BorelPermutation,
    pick: &mut dyn FnMut(&[usize]) -> usize,
) -> Result<TupleWeight> {
    check_same(&lambda.shape, w.k())?;
    if !w_integrable(lambda, w)? {
        return Err(Error::contract(
            "not-integrable",
            format!("{lambda} is not w-integrable"),
        ));
    }
    let types = &lambda.shape.types;
    let mut ord = w.inverse_order();
    let mut parts = lambda.parts.clone();
    loop {
        let descents: Vec<usize> = (0..ord.len().saturating_sub(1))
            .filter(|&q| ord[q] > ord[q + 1])
            .collect();
        if descents.is_empty() {
            break;
        }
        let q = pick(&descents);
        assert!(
            descents.contains(&q),
            "picked a position that is not a descent"
        );
        let (i, j) = (ord[q], ord[q + 1]);
        if types[i] == types[j] {
            parts.swap(i, j);
        } else {
            // `i` has the larger type and currently comes first
            let (a, b) = odd_reflect_pair(&parts[j], &parts[i], Direction::SigmaToStandard)?;
            parts[j] = a;
            parts[i] = b;
        }
        ord.swap(q, q + 1);
    }
    Ok(TupleWeight {
        shape: lambda.shape.clone(),
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64) -> PrimeP {
        PrimeP::new(x).unwrap()
    }

    fn tw(pp: i64, types: &[usize], parts: &[&[i64]]) -> TupleWeight {
        let s = GLXShape::new(p(pp), types.to_vec()).unwrap();
        TupleWeight::new(s, parts.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn dominance_and_integrability() {
        let swap = BorelPermutation::from_one_line(&[2, 1]).unwrap();
        let l = tw(5, &[1, 1], &[&[1], &[3]]);
        assert!(is_w_dominant(&l, &swap).unwrap());
        assert!(w_dominance_leq(&l, &l, &swap).unwrap());
        assert!(w_integrable(&l, &swap).unwrap());
        assert!(!w_integrable(&tw(5, &[1, 1], &[&[3], &[1]]), &swap).unwrap());
        assert!(w_integrable(
            &tw(5, &[1, 1], &[&[3], &[1]]),
            &BorelPermutation::identity(2)
        )
        .unwrap());
    }

    #[test]
    fn conjugate() {
        let swap = BorelPermutation::from_one_line(&[2, 1]).unwrap();
        let l = tw(5, &[1, 1], &[&[1], &[3]]);
        assert_eq!(
            conjugate_relabel(&l, &swap).unwrap(),
            tw(5, &[1, 1], &[&[3], &[1]])
        );
        assert_eq!(
            borel_translate(&l, &swap).unwrap(),
            tw(5, &[1, 1], &[&[3], &[1]])
        );
        let id = BorelPermutation::identity(2);
        let m = tw(5, &[1, 1], &[&[3], &[1]]);
        assert_eq!(conjugate_relabel(&m, &id).unwrap(), m);
        // w(1)=2, w(2)=3, w(3)=1: positions read summands 3, 1, 2
        let cyc = BorelPermutation::from_one_line(&[2, 3, 1]).unwrap();
        let t = tw(7, &[1, 1, 1], &[&[2], &[1], &[5]]);
        assert_eq!(
            conjugate_relabel(&t, &cyc).unwrap(),
            tw(7, &[1, 1, 1], &[&[5], &[2], &[1]])
        );
    }

    #[test]
    fn odd_pair() {
        let pp = p(5);
        let a = GLWeight::new(pp, vec![1]).unwrap();
        let b = GLWeight::zero(pp, 4).unwrap();
        let (a2, b2) = odd_reflect_pair(&a, &b, Direction::StandardToSigma).unwrap();
        assert_eq!(a2, GLWeight::new(pp, vec![0]).unwrap());
        assert_eq!(level_rank_d(&b2).0, GLWeight::new(pp, vec![1]).unwrap());
        assert_eq!(
            odd_reflect_pair(&a2, &b2, Direction::SigmaToStandard).unwrap(),
            (a, b)
        );
    }

    #[test]
    fn single_odd_reflection() {
        let swap = BorelPermutation::from_one_line(&[2, 1]).unwrap();
        let l = tw(5, &[1, 4], &[&[0], &[1, 0, 0, 0]]);
        let out = borel_translate(&l, &swap).unwrap();
        let (a, b) =
            odd_reflect_pair(&l.parts()[0], &l.parts()[1], Direction::SigmaToStandard).unwrap();
        assert_eq!(out.parts(), &[a, b]);
        assert_eq!(
            out.degrees().iter().sum::<i64>(),
            l.degrees().iter().sum::<i64>()
        );
    }
}
