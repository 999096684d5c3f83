//! Cap diagrams and what they control: `𝒫(λ)`, the standard filtration of
//! `P(λ)`, Kac composition factors, `λ̂`, lowest weights, duals, and the
//! translation word that builds `P(λ)` from a Kac module.

use std::collections::BTreeMap;

use crate::diagram::{decode_unchecked, encode, LaurentLabel, Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::superweight::{beta, SuperCoords, SuperWeight};
use crate::translation::{apply_kind, translate_class, KacClass, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cap {
    pub source: usize,
    pub tail: usize,
}

impl Cap {
    /// `t_1^{-1} t_2` when the clockwise walk passes from `p-1` to `0`.
    pub fn tau_label(&self) -> LaurentLabel {
        if self.source > self.tail {
            LaurentLabel::new(-1, 1)
        } else {
            LaurentLabel::new(0, 0)
        }
    }
}

/// Caps in construction order: cap `j` has no cap of larger index beneath it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapDiagram {
    pub base: WeightDiagram,
    pub caps: Vec<Cap>,
    pub free_circles: Vec<usize>,
}

/// Whether `v` lies strictly inside the clockwise interval `(from, to)`.
fn inside(v: usize, from: usize, to: usize, p: usize) -> bool {
    let off = (v + p - from) % p;
    off > 0 && off < (to + p - from) % p
}

impl CapDiagram {
    /// A cap is inner when no other cap sits under it.
    pub fn is_inner(&self, j: usize) -> bool {
        let p = self.base.symbols().len();
        let c = self.caps[j];
        self.caps
            .iter()
            .all(|o| !inside(o.source, c.source, c.tail, p))
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = (0..self.caps.len())
            .map(|j| {
                let c = self.caps[j];
                let tag = if self.is_inner(j) { "(inner)" } else { "" };
                format!("{}->{}{tag}", c.source, c.tail)
            })
            .collect();
        format!("caps: {}", parts.join(", "))
    }

    fn check(&self) {
        let d = &self.base;
        let p = d.symbols().len();
        for (j, c) in self.caps.iter().enumerate() {
            assert_eq!(d.symbol(c.source), Symbol::Cross);
            assert_eq!(d.symbol(c.tail), Symbol::Empty);
            for o in &self.caps[j + 1..] {
                let a = inside(o.source, c.source, c.tail, p);
                let b = inside(o.tail, c.source, c.tail, p);
                assert_eq!(a, b, "caps {c:?} and {o:?} cross");
            }
            for &f in &self.free_circles {
                assert!(
                    !inside(f, c.source, c.tail, p),
                    "free circle {f} under cap {c:?}"
                );
            }
        }
        assert_eq!(self.caps.len(), d.cross_count());
    }
}

fn build_caps(
    d: &WeightDiagram,
    clockwise: bool,
    open: Symbol,
    close: Symbol,
) -> (Vec<Cap>, Vec<usize>) {
    let p = d.symbols().len();
    let step = |k: usize| {
        if clockwise {
            (k + 1) % p
        } else {
            (k + p - 1) % p
        }
    };
    let mut used = vec![false; p];
    let mut caps = Vec::new();
    while let Some(start) = (0..p).find(|&k| d.symbol(k) == open && !used[k]) {
        let mut s = start;
        let mut k = start;
        let z = loop {
            k = step(k);
            if used[k] {
                continue;
            }
            let sym = d.symbol(k);
            if sym == open {
                s = k;
            } else if sym == close {
                break k;
            }
        };
        used[s] = true;
        used[z] = true;
        caps.push(Cap { source: s, tail: z });
    }
    let free = (0..p)
        .filter(|&k| d.symbol(k) == close && !used[k])
        .collect();
    (caps, free)
}

pub fn cap_diagram(d: &WeightDiagram) -> CapDiagram {
    let (caps, free_circles) = build_caps(d, true, Symbol::Cross, Symbol::Empty);
    let cd = CapDiagram {
        base: d.clone(),
        caps,
        free_circles,
    };
    cd.check();
    cd
}

fn swap_caps(d: &WeightDiagram, caps: &[Cap], mask: u64) -> WeightDiagram {
    let mut out = d.clone();
    for (j, c) in caps.iter().enumerate() {
        if mask >> j & 1 == 1 {
            out.set(c.source, Symbol::Empty);
            out.set(c.tail, Symbol::Cross);
            out = out.times(c.tau_label());
        }
    }
    out
}

/// `𝒫(λ)`, indexed by subsets of caps (the empty subset first).
pub fn p_set(lambda: &SuperWeight) -> Vec<SuperWeight> {
    let cd = cap_diagram(&encode(lambda));
    let k = cd.caps.len();
    (0..1u64 << k)
        .map(|mask| decode_unchecked(&swap_caps(&cd.base, &cd.caps, mask), lambda.shape()))
        .collect()
}

/// `[P(λ) : K(α)]`, which is 1 exactly on `𝒫(λ)`.
pub fn projective_filtration(lambda: &SuperWeight) -> BTreeMap<SuperWeight, u32> {
    let table: BTreeMap<SuperWeight, u32> = p_set(lambda).into_iter().map(|a| (a, 1)).collect();
    assert_eq!(table.len(), 1 << encode(lambda).cross_count());
    table
}

/// `{λ : α ∈ 𝒫(λ)}`, the composition factors of `K(α)`.
pub fn kac_composition(alpha: &SuperWeight) -> Vec<SuperWeight> {
    let d = encode(alpha);
    let k = d.cross_count();
    let slots: Vec<usize> = (0..d.symbols().len())
        .filter(|&v| matches!(d.symbol(v), Symbol::Cross | Symbol::Empty))
        .collect();
    let mut bare = d.clone();
    for &v in &slots {
        bare.set(v, Symbol::Empty);
    }
    let mut out = Vec::new();
    for_each_subset(slots.len(), k, &mut |pick: &[usize]| {
        let mut cand = bare.clone();
        for &t in pick {
            cand.set(slots[t], Symbol::Cross);
        }
        for w in 0..=k as i64 {
            let lam = decode_unchecked(&cand.times(LaurentLabel::new(w, -w)), alpha.shape());
            if lam.degree() == alpha.degree() && p_set(&lam).contains(alpha) && !out.contains(&lam)
            {
                out.push(lam);
            }
        }
    });
    out.sort();
    out
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// `λ̂`: every cross moved to its tail. The highest weight of `P(λ)`.
pub fn hat(lambda: &SuperWeight) -> SuperWeight {
    let cd = cap_diagram(&encode(lambda));
    let all = (1u64 << cd.caps.len()) - 1;
    decode_unchecked(&swap_caps(&cd.base, &cd.caps, all), lambda.shape())
}

/// Lowest weight of `L(λ)` as raw coordinates, `λ̂ - β`.
pub fn lowest_weight(lambda: &SuperWeight) -> SuperCoords {
    hat(lambda).coords().sub(&beta(lambda.shape()))
}

/// `β - λ̂`, the raw coordinates of the highest weight of `L(λ)^*`.
pub fn dual_coords(lambda: &SuperWeight) -> SuperCoords {
    beta(lambda.shape()).sub(hat(lambda).coords())
}

/// The label of `L(λ)^*`: `β - λ̂` read as a torus weight, each block
/// reversed to be nonincreasing.
pub fn dual_simple(lambda: &SuperWeight) -> SuperWeight {
    let mut c = dual_coords(lambda);
    c.mu.reverse();
    c.nu.reverse();
    SuperWeight::from_coords(lambda.shape(), c).expect("dual of an admissible label is admissible")
}

/// Highest-weight label of `L(λ)` for the opposite Borel, i.e. its lowest weight.
pub fn standard_to_sigma(lambda: &SuperWeight) -> SuperWeight {
    SuperWeight::from_coords(lambda.shape(), lowest_weight(lambda)).expect("λ̂ - β is admissible")
}

/// Inverse of [`standard_to_sigma`]: caps drawn counterclockwise on the
/// diagram of `κ + β`, then every cross moved back.
pub fn sigma_to_standard(kappa: &SuperWeight) -> Result<SuperWeight> {
    let shape = kappa.shape();
    let top = SuperWeight::from_coords(shape, kappa.coords().add(&beta(shape)))?;
    let d = encode(&top);
    let (mirrored, _) = build_caps(&d, false, Symbol::Cross, Symbol::Empty);
    let mut back = d.clone();
    for c in &mirrored {
        // the mirrored cap runs from the moved cross back to its old source
        let orig = Cap {
            source: c.tail,
            tail: c.source,
        };
        back.set(orig.tail, Symbol::Empty);
        back.set(orig.source, Symbol::Cross);
        back = back.times(orig.tau_label().inv());
    }
    let lambda = decode_unchecked(&back, shape);
    if hat(&lambda) != top {
        return Err(Error::contract(
            "no-preimage",
            format!("no standard label has lowest weight {kappa}"),
        ));
    }
    Ok(lambda)
}

/// `P(λ) = T_l ... T_1 K(base)`, steps listed in the order they are applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveWord {
    pub base: SuperWeight,
    pub steps: Vec<(Kind, u32)>,
}

pub fn projective_word(lambda: &SuperWeight) -> ProjectiveWord {
    let shape = lambda.shape();
    let d = encode(lambda);
    let p = d.symbols().len();
    let cd = cap_diagram(&d);
    let Some(&cap) = cd.caps.first() else {
        return ProjectiveWord {
            base: lambda.clone(),
            steps: vec![],
        };
    };
    debug_assert!(cd.is_inner(0));
    let k = cap.tail;
    let span = (k + p - cap.source) % p;
    let mut cur = d;
    let mut transit = Vec::new();
    for t in 0..span - 1 {
        let pos = (cap.source + t) % p;
        let kind = match cur.symbol(pos + 1) {
            Symbol::Left => Kind::F,
            Symbol::Right => Kind::E,
            s => panic!("{s:?} under an inner cap"),
        };
        let moved = apply_kind(kind, pos as u32, &cur);
        assert_eq!(moved.terms.len(), 1);
        cur = moved.terms.into_iter().next().unwrap();
        transit.push((kind.adjoint(), pos as u32));
    }
    let km1 = ((k + p - 1) % p) as u32;
    let merged = apply_kind(Kind::F, km1, &cur);
    assert_eq!(merged.terms.len(), 1);
    let lambda_prime = decode_unchecked(&merged.terms[0], shape);
    let mut word = projective_word(&lambda_prime);
    word.steps.push((Kind::E, km1));
    word.steps.extend(transit.into_iter().rev());
    word
}

/// Grothendieck class obtained by running the word on `[K(base)]`.
pub fn replay_word(word: &ProjectiveWord) -> KacClass {
    let mut class = KacClass::new();
    class.insert(word.base.clone(), 1);
    for &(kind, i) in &word.steps {
        class = translate_class(kind, i, &class);
    }
    class
}
