//! Translation functors `F_i`, `E_i` on weight diagrams and what they do to
//! Kac modules, simples and projectives.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{decode_unchecked, encode, LaurentLabel, Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::superweight::{dominance_lt, SuperWeight};

use Symbol::{Cross as X, Empty as O, Left as L, Right as R};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    F,
    E,
}

impl Kind {
    pub fn adjoint(self) -> Kind {
        match self {
            Kind::F => Kind::E,
            Kind::E => Kind::F,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::F => "F",
            Kind::E => "E",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "F" | "f" => Ok(Kind::F),
            "E" | "e" => Ok(Kind::E),
            _ => Err(Error::validation(
                "bad-kind",
                format!("functor kind {s:?} is neither F nor E"),
            )),
        }
    }
}

/// Zero, one or two diagrams; two terms are sorted so the first decodes to
/// the `⪯`-smaller weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSum {
    pub terms: Vec<WeightDiagram>,
}

impl DiagramSum {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

type Rule = (Symbol, Symbol, LaurentLabel);

fn f_rules(x: Symbol, y: Symbol, eps: i64) -> Vec<Rule> {
    let t1 = LaurentLabel::new(-eps, 0);
    let t2 = LaurentLabel::new(0, -eps);
    match (x, y) {
        (R, O) => vec![(O, R, t1)],
        (O, L) => vec![(L, O, t2)],
        (R, L) => vec![(O, X, t1), (X, O, t2)],
        (X, L) => vec![(L, X, t1)],
        (R, X) => vec![(X, R, t2)],
        (X, O) => vec![(L, R, t1)],
        (O, X) => vec![(L, R, t2)],
        _ => vec![],
    }
}

fn e_rules(x: Symbol, y: Symbol, eps: i64) -> Vec<Rule> {
    let t1 = LaurentLabel::new(eps, 0);
    let t2 = LaurentLabel::new(0, eps);
    match (x, y) {
        (L, O) => vec![(O, L, t2)],
        (O, R) => vec![(R, O, t1)],
        (L, R) => vec![(X, O, t1), (O, X, t2)],
        (X, R) => vec![(R, X, t2)],
        (L, X) => vec![(X, L, t1)],
        (X, O) => vec![(R, L, t2)],
        (O, X) => vec![(R, L, t1)],
        _ => vec![],
    }
}

fn apply(kind: Kind, i: u32, d: &WeightDiagram) -> DiagramSum {
    let pp = d.p().get();
    let i = i % pp;
    let j = (i + 1) % pp;
    let eps = (i == pp - 1) as i64;
    let (x, y) = (d.symbol(i as usize), d.symbol(j as usize));
    let rules = match kind {
        Kind::F => f_rules(x, y, eps),
        Kind::E => e_rules(x, y, eps),
    };
    let mut terms: Vec<WeightDiagram> = rules
        .into_iter()
        .map(|(nx, ny, l)| {
            let mut t = d.times(l);
            t.set(i as usize, nx);
            t.set(j as usize, ny);
            t
        })
        .collect();
    if terms.len() == 2 {
        let shape =
            crate::superweight::SuperShape::new(d.m(), d.n(), d.p()).expect("valid diagram");
        let deg = |t: &WeightDiagram| decode_unchecked(t, shape).mu_degree();
        terms.sort_by_key(deg);
    }
    DiagramSum { terms }
}

pub fn apply_f(i: u32, d: &WeightDiagram) -> DiagramSum {
    apply(Kind::F, i, d)
}

pub fn apply_e(i: u32, d: &WeightDiagram) -> DiagramSum {
    apply(Kind::E, i, d)
}

pub fn apply_kind(kind: Kind, i: u32, d: &WeightDiagram) -> DiagramSum {
    apply(kind, i, d)
}

/// Decoded terms of `T f_λ`, `⪯`-smaller first.
pub fn translate_weights(kind: Kind, i: u32, lambda: &SuperWeight) -> Vec<SuperWeight> {
    let shape = lambda.shape();
    apply(kind, i, &encode(lambda))
        .terms
        .iter()
        .map(|t| decode_unchecked(t, shape))
        .collect()
}

/// `T K(λ)`: either `K(μ)`, or an extension `0 → K(sub) → TK(λ) → K(quotient) → 0`
/// with `quotient ≺ sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacExtension {
    pub sub: SuperWeight,
    pub quotient: Option<SuperWeight>,
}

pub fn translate_kac(kind: Kind, i: u32, lambda: &SuperWeight) -> Option<KacExtension> {
    let mut w = translate_weights(kind, i, lambda);
    match w.len() {
        0 => None,
        1 => Some(KacExtension {
            sub: w.pop().unwrap(),
            quotient: None,
        }),
        _ => {
            let sub = w.pop().unwrap();
            let quotient = w.pop().unwrap();
            assert!(
                dominance_lt(&quotient, &sub),
                "two-term translation not ordered: {quotient} vs {sub}"
            );
            Some(KacExtension {
                sub,
                quotient: Some(quotient),
            })
        }
    }
}

/// `T L(λ)` is either zero or `L(μ)` for the returned `μ`; which of the two
/// happens is not visible on diagrams, so the result is only a candidate.
pub fn translate_simple(kind: Kind, i: u32, lambda: &SuperWeight) -> Result<SuperWeight> {
    let d = encode(lambda);
    let out = apply(kind, i, &d);
    match out.terms.len() {
        0 => Err(Error::contract(
            "translation-zero",
            format!("{kind}_{i} kills the diagram of {lambda}"),
        )),
        1 if out.terms[0].cross_count() <= d.cross_count() => {
            Ok(decode_unchecked(&out.terms[0], lambda.shape()))
        }
        _ => Err(Error::contract(
            "atypicality-increase",
            format!("{kind}_{i} raises the number of crosses of {lambda}"),
        )),
    }
}

/// `T P(λ) = P(μ)`, valid when `T f_λ ≠ 0` and the cross count does not drop.
pub fn translate_projective(kind: Kind, i: u32, lambda: &SuperWeight) -> Result<SuperWeight> {
    let d = encode(lambda);
    let out = apply(kind, i, &d);
    let first = out.terms.first().ok_or_else(|| {
        Error::contract(
            "translation-zero",
            format!("{kind}_{i} kills the diagram of {lambda}"),
        )
    })?;
    if first.cross_count() < d.cross_count() {
        return Err(Error::contract(
            "atypicality-decrease",
            format!("{kind}_{i} lowers the number of crosses of {lambda}"),
        ));
    }
    Ok(decode_unchecked(first, lambda.shape()))
}

/// A formal `Z`-combination of Kac classes `[K(λ)]`.
pub type KacClass = BTreeMap<SuperWeight, i64>;

pub fn translate_class(kind: Kind, i: u32, class: &KacClass) -> KacClass {
    let mut out = KacClass::new();
    for (w, &c) in class {
        for t in translate_weights(kind, i, w) {
            *out.entry(t).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}
