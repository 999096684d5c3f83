//! Batch invariant suites over weight windows, shared by the CLI.

use std::collections::{BTreeMap, HashSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::alcove::GLWeight;
use crate::borel::{
    borel_translate, borel_translate_with, conjugate_relabel, BorelPermutation, GLXShape,
    TupleWeight,
};
use crate::caps::{
    dual_simple, hat, kac_composition, p_set, projective_word, replay_word, sigma_to_standard,
    standard_to_sigma,
};
use crate::diagram::{decode, encode};
use crate::enumerate::{default_window, for_each_super_weight, gl_weights, shapes};
use crate::fusion::PrimeP;
use crate::loop_module::phi_equivariance_check;
use crate::serganova::{
    check_oddroot_lemma, kac_lowest, random_order, serganova_hat, serganova_hat_with_order,
    sh_nonzero, ClassicalWeight,
};
use crate::superweight::{
    atypicality, casimir_scalar, dominance_lt, kac_irreducible, residue_data, SuperWeight,
};
use crate::translation::{apply_kind, KacClass, Kind};

pub const SUITES: &[&str] = &[
    "roundtrip",
    "atypicality",
    "equivariance",
    "filtration",
    "projective-word",
    "serganova",
    "sigma",
    "borel",
    "kac-moody",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: u64,
    pub failed: u64,
    pub aborted: u64,
    /// The first few failures, verbatim.
    pub samples: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.samples.len() < 5 {
                self.samples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Options shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub p: PrimeP,
    pub lo: i64,
    pub hi: i64,
    /// Skip weights of higher atypicality in the word replay.
    pub max_atypicality: usize,
    pub samples: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(p: PrimeP) -> Self {
        let (lo, hi) = default_window(p);
        SuiteConfig {
            p,
            lo,
            hi,
            max_atypicality: 2,
            samples: 1000,
            seed: 7,
        }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    Some(match name {
        "roundtrip" => roundtrip(cfg),
        "atypicality" => atypicality_suite(cfg),
        "equivariance" => equivariance(cfg),
        "filtration" => filtration(cfg),
        "projective-word" => word_replay(cfg),
        "serganova" => serganova_suite(cfg),
        "sigma" => sigma(cfg),
        "borel" => borel(cfg),
        "kac-moody" => kac_moody(cfg),
        _ => return None,
    })
}

fn each(cfg: &SuiteConfig, mut f: impl FnMut(&SuperWeight)) {
    for shape in shapes(cfg.p) {
        for_each_super_weight(shape, cfg.lo, cfg.hi, &mut f);
    }
}

/// `decode ∘ encode = id`, which also makes `encode` injective; labels agree
/// with the residue data.
pub fn roundtrip(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("roundtrip");
    each(cfg, |l| {
        let d = encode(l);
        let d_ok = residue_data(l);
        let ok = d.s == d_ok.s
            && d.r == d_ok.r
            && decode(&d, l.shape().m(), l.shape().n()).as_ref() == Ok(l);
        rep.record(ok, || format!("{l}"));
    });
    rep
}

pub fn atypicality_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("atypicality");
    each(cfg, |l| {
        let crosses = encode(l).cross_count();
        let ok = crosses == atypicality(l) && kac_irreducible(l) == (crosses == 0);
        rep.record(ok, || format!("{l}"));
    });
    rep
}

pub fn equivariance(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("equivariance");
    each(cfg, |l| {
        for c in 0..cfg.p.get() {
            rep.record(phi_equivariance_check(l, c), || format!("{l} at c = {c}"));
        }
    });
    rep
}

/// `|𝒫(λ)| = 2^{#λ}`, BGG duality with `kac_composition`, dominance,
/// degree and Casimir linkage.
pub fn filtration(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("filtration");
    each(cfg, |l| {
        let ps = p_set(l);
        let distinct: HashSet<&SuperWeight> = ps.iter().collect();
        let k = encode(l).cross_count();
        rep.record(distinct.len() == 1 << k, || {
            format!("{l}: |P| = {}", distinct.len())
        });
        let cas = casimir_scalar(l).1;
        for a in &ps {
            let ok = (a == l || dominance_lt(l, a))
                && a.degree() == l.degree()
                && casimir_scalar(a).1 == cas
                && kac_composition(a).contains(l);
            rep.record(ok, || format!("{l} against {a}"));
        }
    });
    rep
}

pub fn word_replay(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("projective-word");
    each(cfg, |l| {
        if encode(l).cross_count() > cfg.max_atypicality {
            return;
        }
        let w = projective_word(l);
        let expect: KacClass = p_set(l).into_iter().map(|a| (a, 1)).collect();
        rep.record(replay_word(&w) == expect, || format!("{l}"));
    });
    rep
}

pub fn serganova_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("serganova");
    for m in 1..=6 {
        for n in 1..=6 {
            rep.record(check_oddroot_lemma(m, n), || {
                format!("lemma fails for ({m},{n})")
            });
        }
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let w = 2 * cfg.p.as_i64();
    for m in 1..=4usize {
        for n in 1..=4usize {
            if m + n >= cfg.p.get() as usize {
                continue;
            }
            for _ in 0..cfg.samples / 16 + 1 {
                let mut mu: Vec<i64> = (0..m).map(|_| rng.gen_range(-w..=w)).collect();
                let mut nu: Vec<i64> = (0..n).map(|_| rng.gen_range(-w..=w)).collect();
                mu.sort_unstable_by(|a, b| b.cmp(a));
                nu.sort_unstable_by(|a, b| b.cmp(a));
                let l = ClassicalWeight::new(mu, nu).expect("sorted");
                let hat = serganova_hat(&l, cfg.p);
                rep.record(sh_nonzero(&l, cfg.p) == (hat == kac_lowest(&l)), || {
                    format!("{l}")
                });
                let other = random_order(m, n, &mut rng);
                rep.record(serganova_hat_with_order(&l, cfg.p, &other) == hat, || {
                    format!("{l}: order dependence")
                });
            }
        }
    }
    each(cfg, |l| {
        if l.shape().m() <= 4 && l.shape().n() <= 4 {
            rep.record(
                sh_nonzero(&ClassicalWeight::from(l), cfg.p) == kac_irreducible(l),
                || format!("{l}"),
            );
        }
    });
    rep
}

/// `sigma_to_standard ∘ standard_to_sigma = id`, `hat` injective per
/// stratum, and `L(λ)^{**} = L(λ)`.
pub fn sigma(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("sigma");
    let mut seen: BTreeMap<SuperWeight, SuperWeight> = BTreeMap::new();
    each(cfg, |l| {
        let k = standard_to_sigma(l);
        rep.record(sigma_to_standard(&k).as_ref() == Ok(l), || {
            format!("{l} -> {k}")
        });
        rep.record(dual_simple(&dual_simple(l)) == *l, || {
            format!("{l}: dual is not an involution")
        });
        if let Some(prev) = seen.insert(hat(l), l.clone()) {
            rep.record(false, || format!("hat({prev}) = hat({l})"));
        }
    });
    rep
}

fn random_tuple<R: Rng>(rng: &mut R, p: PrimeP, types: &[usize], w: i64) -> TupleWeight {
    let shape = GLXShape::new(p, types.to_vec()).expect("sorted types");
    loop {
        let parts: Vec<Vec<i64>> = types
            .iter()
            .map(|&t| {
                let all = gl_weights(p, t, -w, w);
                all.choose(rng).expect("nonempty window").entries().to_vec()
            })
            .collect();
        if let Ok(t) = TupleWeight::new(shape.clone(), parts) {
            return t;
        }
    }
}

fn random_types<R: Rng>(rng: &mut R, p: PrimeP, k: usize, pool: &[usize]) -> Vec<usize> {
    let _ = p;
    let mut t: Vec<usize> = (0..k)
        .map(|_| *pool.choose(rng).expect("nonempty pool"))
        .collect();
    t.sort_unstable();
    t
}

/// `W_0` relabeling against plain permutation, and agreement of two random
/// reduced factorizations on mixed permutations.
pub fn borel(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("borel");
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let p = cfg.p;
    let pp = p.get() as usize;
    let pool: Vec<usize> = (1..pp).collect();
    let mut done = 0;
    while done < cfg.samples {
        let k = rng.gen_range(2..=4);
        let types = random_types(&mut rng, p, k, &pool[..2.min(pool.len())]);
        let shape = GLXShape::new(p, types.clone()).expect("sorted");
        let mut images: Vec<usize> = (0..k).collect();
        // shuffle inside each block only
        let mut start = 0;
        while start < k {
            let end = (start..k).find(|&i| types[i] != types[start]).unwrap_or(k);
            images[start..end].shuffle(&mut rng);
            start = end;
        }
        let w = BorelPermutation::new(images).expect("permutation");
        let lam = random_tuple(&mut rng, p, &types, p.as_i64());
        let _ = &shape;
        // make it integrable by sorting degrees along w inside blocks
        let lam = make_integrable(lam, &w);
        let a = borel_translate(&lam, &w);
        let b = conjugate_relabel(&lam, &w);
        rep.record(a.is_ok() && a == b, || {
            format!("{lam} under {:?}", w.inverse_order())
        });
        done += 1;
    }
    for _ in 0..cfg.samples / 10 + 1 {
        let k = rng.gen_range(2..=3);
        let types = random_types(&mut rng, p, k, &pool);
        let mut images: Vec<usize> = (0..k).collect();
        images.shuffle(&mut rng);
        let w = BorelPermutation::new(images).expect("permutation");
        let lam = make_integrable(random_tuple(&mut rng, p, &types, p.as_i64()), &w);
        let mut r1 = StdRng::seed_from_u64(rng.gen());
        let mut r2 = StdRng::seed_from_u64(rng.gen());
        let x = borel_translate_with(&lam, &w, &mut |d: &[usize]| *d.choose(&mut r1).unwrap());
        let y = borel_translate_with(&lam, &w, &mut |d: &[usize]| *d.choose(&mut r2).unwrap());
        rep.record(x.is_ok() && x == y, || {
            format!(
                "types {types:?}, w^-1 {:?}, λ = {lam}: {x:?} vs {y:?}",
                w.inverse_order()
            )
        });
    }
    rep
}

/// Reorders the parts inside each block so the degrees read in `w`-order
/// do not increase.
pub fn make_integrable(lam: TupleWeight, w: &BorelPermutation) -> TupleWeight {
    let types = lam.shape().types().to_vec();
    let order = w.inverse_order();
    let mut parts: Vec<GLWeight> = lam.parts().to_vec();
    let mut blocks = types.clone();
    blocks.dedup();
    for t in blocks {
        let slots: Vec<usize> = order.iter().copied().filter(|&i| types[i] == t).collect();
        let mut vals: Vec<GLWeight> = slots.iter().map(|&i| parts[i].clone()).collect();
        vals.sort_by_key(|v| std::cmp::Reverse(v.degree()));
        for (slot, v) in slots.into_iter().zip(vals) {
            parts[slot] = v;
        }
    }
    let entries = parts.into_iter().map(GLWeight::into_entries).collect();
    TupleWeight::new(lam.shape().clone(), entries).expect("same parts")
}

type Class = BTreeMap<SuperWeight, i64>;

fn act(kind: Kind, i: u32, class: &Class, inside: &dyn Fn(&SuperWeight) -> bool) -> Option<Class> {
    let mut out = Class::new();
    for (w, &c) in class {
        for t in apply_kind(kind, i, &encode(w)).terms {
            let x = crate::diagram::decode_unchecked(&t, w.shape());
            if !inside(&x) {
                return None;
            }
            *out.entry(x).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    Some(out)
}

fn commutator(
    a: (Kind, u32),
    b: (Kind, u32),
    l: &SuperWeight,
    inside: &dyn Fn(&SuperWeight) -> bool,
) -> Option<Class> {
    let start: Class = [(l.clone(), 1)].into_iter().collect();
    let ab = act(a.0, a.1, &act(b.0, b.1, &start, inside)?, inside)?;
    let ba = act(b.0, b.1, &act(a.0, a.1, &start, inside)?, inside)?;
    let mut out = ab;
    for (w, c) in ba {
        *out.entry(w).or_insert(0) -= c;
    }
    out.retain(|_, c| *c != 0);
    Some(out)
}

/// `[e_a, f_b] = 0` for `a ≠ b`, `[e_a, e_b] = [f_a, f_b] = 0` for
/// non-adjacent `a, b`, and `[e_c, f_c]` diagonal, on windowed shapes with
/// `m, n <= 2`. Probes leaving the window are aborted.
pub fn kac_moody(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("kac-moody");
    let p = cfg.p.get();
    let (lo, hi) = (cfg.lo, cfg.hi);
    let inside = |w: &SuperWeight| w.mu().iter().chain(w.nu()).all(|&x| lo <= x && x <= hi);
    let adjacent = |a: u32, b: u32| (a + p - b) % p <= 1 || (b + p - a) % p <= 1;
    for shape in shapes(cfg.p)
        .into_iter()
        .filter(|s| s.m() <= 2 && s.n() <= 2)
    {
        for_each_super_weight(shape, lo, hi, |l| {
            for a in 0..p {
                for b in 0..p {
                    let mut probes = vec![];
                    if a != b {
                        probes.push(((Kind::E, a), (Kind::F, b)));
                    }
                    if !adjacent(a, b) {
                        probes.push(((Kind::E, a), (Kind::E, b)));
                        probes.push(((Kind::F, a), (Kind::F, b)));
                    }
                    if a == b {
                        probes.push(((Kind::E, a), (Kind::F, a)));
                    }
                    for (x, y) in probes {
                        match commutator(x, y, l, &inside) {
                            None => rep.aborted += 1,
                            Some(c) => {
                                let ok = if x.1 == y.1 && x.0 != y.0 {
                                    c.keys().all(|w| w == l)
                                } else {
                                    c.is_empty()
                                };
                                rep.record(ok, || {
                                    format!("[{}{}, {}{}] on {l}", x.0, x.1, y.0, y.1)
                                });
                            }
                        }
                    }
                }
            }
        });
    }
    rep
}
