//! Circular weight diagrams: `p` vertices carrying `∘ < > ×` plus a label
//! `t_1^{-s} t_2^{r}`.

use std::fmt;

use crate::alcove::arrange_descending;
use crate::error::{Error, Result};
use crate::fusion::PrimeP;
use crate::superweight::{residue_data, SuperShape, SuperWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Empty,
    Right,
    Left,
    Cross,
}

impl Symbol {
    pub fn ascii(self) -> char {
        match self {
            Symbol::Empty => 'o',
            Symbol::Right => '>',
            Symbol::Left => '<',
            Symbol::Cross => 'x',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            'o' | '∘' | '0' | '.' => Some(Symbol::Empty),
            '>' => Some(Symbol::Right),
            '<' => Some(Symbol::Left),
            'x' | '×' | 'X' => Some(Symbol::Cross),
            _ => None,
        }
    }

    fn has_a(self) -> bool {
        matches!(self, Symbol::Right | Symbol::Cross)
    }

    fn has_b(self) -> bool {
        matches!(self, Symbol::Left | Symbol::Cross)
    }

    fn from_parts(a: bool, b: bool) -> Symbol {
        match (a, b) {
            (false, false) => Symbol::Empty,
            (true, false) => Symbol::Right,
            (false, true) => Symbol::Left,
            (true, true) => Symbol::Cross,
        }
    }
}

/// The monomial `t_1^{e1} t_2^{e2}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentLabel {
    pub e1: i64,
    pub e2: i64,
}

impl LaurentLabel {
    pub fn new(e1: i64, e2: i64) -> Self {
        LaurentLabel { e1, e2 }
    }

    pub fn inv(self) -> LaurentLabel {
        LaurentLabel {
            e1: -self.e1,
            e2: -self.e2,
        }
    }
}

impl std::ops::Mul for LaurentLabel {
    type Output = LaurentLabel;

    fn mul(self, other: LaurentLabel) -> LaurentLabel {
        LaurentLabel {
            e1: self.e1 + other.e1,
            e2: self.e2 + other.e2,
        }
    }
}

impl fmt::Display for LaurentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t1^{} t2^{}", self.e1, self.e2)
    }
}

/// Symbols indexed from vertex 0 clockwise; cuts are only views.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDiagram {
    p: PrimeP,
    symbols: Vec<Symbol>,
    pub s: i64,
    pub r: i64,
}

impl WeightDiagram {
    /// Builds a diagram, requiring at least one `∘` more than `×` (so that
    /// `m + n < p`) and at least one `>`-carrier and one `<`-carrier.
    pub fn new(p: PrimeP, symbols: Vec<Symbol>, s: i64, r: i64) -> Result<Self> {
        if symbols.len() != p.get() as usize {
            return Err(Error::validation(
                "bad-diagram",
                format!("{} symbols for p = {p}", symbols.len()),
            ));
        }
        let d = WeightDiagram { p, symbols, s, r };
        let (m, n) = (d.m(), d.n());
        if m == 0 || n == 0 || m + n >= p.get() as usize {
            return Err(Error::validation(
                "bad-diagram",
                format!("symbol counts give m = {m}, n = {n}, need both positive with m + n < {p}"),
            ));
        }
        Ok(d)
    }

    /// Reads `text` as the cut at vertex `k`, e.g. `"o<ox>>x<oo>"`.
    pub fn from_cut(p: PrimeP, text: &str, k: usize, s: i64, r: i64) -> Result<Self> {
        let cut: Vec<Symbol> = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                Symbol::from_char(c)
                    .ok_or_else(|| Error::validation("bad-symbol", format!("unknown symbol {c:?}")))
            })
            .collect::<Result<_>>()?;
        let pp = p.get() as usize;
        if cut.len() != pp || k >= pp {
            return Err(Error::validation(
                "bad-diagram",
                format!("need {pp} symbols and a cut vertex below {pp}"),
            ));
        }
        let mut symbols = vec![Symbol::Empty; pp];
        for (t, sym) in cut.into_iter().enumerate() {
            symbols[(k + t) % pp] = sym;
        }
        WeightDiagram::new(p, symbols, s, r)
    }

    pub fn p(&self) -> PrimeP {
        self.p
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, k: usize) -> Symbol {
        self.symbols[k % self.symbols.len()]
    }

    pub(crate) fn set(&mut self, k: usize, sym: Symbol) {
        let len = self.symbols.len();
        self.symbols[k % len] = sym;
    }

    pub fn m(&self) -> usize {
        self.symbols.iter().filter(|s| s.has_a()).count()
    }

    pub fn n(&self) -> usize {
        self.symbols.iter().filter(|s| s.has_b()).count()
    }

    pub fn cross_count(&self) -> usize {
        self.count(Symbol::Cross)
    }

    pub fn count(&self, sym: Symbol) -> usize {
        self.symbols.iter().filter(|&&s| s == sym).count()
    }

    /// `t_1^{-s} t_2^{r}`.
    pub fn label(&self) -> LaurentLabel {
        LaurentLabel {
            e1: -self.s,
            e2: self.r,
        }
    }

    pub fn times(&self, l: LaurentLabel) -> WeightDiagram {
        let mut d = self.clone();
        d.s -= l.e1;
        d.r += l.e2;
        d
    }
}

pub fn encode(lambda: &SuperWeight) -> WeightDiagram {
    let p = lambda.p();
    let d = residue_data(lambda);
    let pp = p.get() as usize;
    let mut has_a = vec![false; pp];
    let mut has_b = vec![false; pp];
    for &a in &d.a {
        has_a[a as usize] = true;
    }
    for &b in &d.b {
        has_b[b as usize] = true;
    }
    let symbols = (0..pp)
        .map(|k| Symbol::from_parts(has_a[k], has_b[k]))
        .collect();
    WeightDiagram {
        p,
        symbols,
        s: d.s,
        r: d.r,
    }
}

/// Recovers `λ` from its diagram; `m`, `n` must match the symbol counts.
pub fn decode(d: &WeightDiagram, m: usize, n: usize) -> Result<SuperWeight> {
    let (dm, dn) = (d.m(), d.n());
    if dm != m {
        return Err(Error::validation(
            "count-mismatch",
            format!("diagram has |A| = {dm} > or x symbols, expected m = {m}"),
        ));
    }
    if dn != n {
        return Err(Error::validation(
            "count-mismatch",
            format!("diagram has |B| = {dn} < or x symbols, expected n = {n}"),
        ));
    }
    let shape = SuperShape::new(m, n, d.p)?;
    Ok(decode_unchecked(d, shape))
}

pub(crate) fn decode_unchecked(d: &WeightDiagram, shape: SuperShape) -> SuperWeight {
    let pp = d.p.as_i64();
    let (m, n) = (shape.m() as i64, shape.n() as i64);
    let a_set: Vec<u32> = (0..d.symbols.len() as u32)
        .filter(|&k| d.symbols[k as usize].has_a())
        .collect();
    let mu = arrange_descending(&a_set, d.s)
        .into_iter()
        .enumerate()
        .map(|(i, (a, si))| a as i64 + pp * si + i as i64)
        .collect();
    // `y_j = -m - ν_j + j` increases with `j`; mirror it so the descending
    // arrangement applies: `-y_j = (p - 1 - b_j) + p(-r_j - 1) + ...`.
    let b_mirror: Vec<u32> = (0..d.symbols.len() as u32)
        .filter(|&k| d.symbols[k as usize].has_b())
        .map(|b| d.p.get() - 1 - b)
        .collect();
    let nu = arrange_descending(&b_mirror, -d.r - n)
        .into_iter()
        .enumerate()
        .map(|(j, (bm, t))| {
            let b = pp - 1 - bm as i64;
            let rj = -t - 1;
            -m + (j as i64 + 1) - (b + pp * rj)
        })
        .collect();
    SuperWeight::from_trusted(shape, mu, nu)
}

/// Symbols at `k, k+1, ..., k-1` (mod `p`).
pub fn cut(d: &WeightDiagram, k: usize) -> Vec<Symbol> {
    let pp = d.symbols.len();
    (0..pp).map(|t| d.symbols[(k + t) % pp]).collect()
}

/// `(σf)(k) = f(σ(k))`; the label is untouched.
pub fn permute(sigma: &[usize], d: &WeightDiagram) -> Result<WeightDiagram> {
    let pp = d.symbols.len();
    let mut seen = vec![false; pp];
    if sigma.len() != pp
        || sigma
            .iter()
            .any(|&x| x >= pp || std::mem::replace(&mut seen[x], true))
    {
        return Err(Error::validation(
            "bad-permutation",
            format!("not a permutation of 0..{pp}"),
        ));
    }
    let symbols = (0..pp).map(|k| d.symbols[sigma[k]]).collect();
    Ok(WeightDiagram {
        p: d.p,
        symbols,
        s: d.s,
        r: d.r,
    })
}

/// `"o<ox>>x<oo> @3 t1^-3 t2^2"`.
pub fn render_ascii(d: &WeightDiagram, k: usize) -> String {
    let body: String = cut(d, k).into_iter().map(Symbol::ascii).collect();
    format!("{body} @{} {}", k % d.symbols.len(), d.label())
}

/// Inverse of [`render_ascii`]; the cut and label parts may be omitted.
pub fn parse_ascii(p: PrimeP, text: &str) -> Result<WeightDiagram> {
    let bad = || {
        Error::validation(
            "bad-diagram",
            format!("cannot read {text:?} as a weight diagram"),
        )
    };
    let mut words = text.split_whitespace();
    let body = words.next().ok_or_else(bad)?;
    let (mut k, mut e1, mut e2) = (0usize, 0i64, 0i64);
    for w in words {
        if let Some(x) = w.strip_prefix('@') {
            k = x.parse().map_err(|_| bad())?;
        } else if let Some(x) = w.strip_prefix("t1^") {
            e1 = x.parse().map_err(|_| bad())?;
        } else if let Some(x) = w.strip_prefix("t2^") {
            e2 = x.parse().map_err(|_| bad())?;
        } else {
            return Err(bad());
        }
    }
    WeightDiagram::from_cut(p, body, k, -e1, e2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64) -> PrimeP {
        PrimeP::new(x).unwrap()
    }

    fn gl54() -> SuperWeight {
        let s = SuperShape::new(5, 4, p(11)).unwrap();
        SuperWeight::new(s, vec![18, 18, 15, 12, 12], vec![-13, -13, -17, -18]).unwrap()
    }

    #[test]
    fn gl54_codec() {
        let d = encode(&gl54());
        assert_eq!(render_ascii(&d, 3), "o<ox>>x<oo> @3 t1^-3 t2^2");
        let back = WeightDiagram::from_cut(p(11), "o<ox>>x<oo>", 3, 3, 2).unwrap();
        assert_eq!(back, d);
        assert_eq!(parse_ascii(p(11), "o<ox>>x<oo> @3 t1^-3 t2^2").unwrap(), d);
        assert_eq!(decode(&back, 5, 4).unwrap(), gl54());
    }

    #[test]
    fn small_codec() {
        let s = SuperShape::new(1, 1, p(5)).unwrap();
        let zero = SuperWeight::new(s, vec![0], vec![0]).unwrap();
        assert_eq!(render_ascii(&encode(&zero), 0), "xoooo @0 t1^0 t2^0");
        let one = SuperWeight::new(s, vec![1], vec![0]).unwrap();
        assert_eq!(render_ascii(&encode(&one), 0), "<>ooo @0 t1^0 t2^0");
        let d = WeightDiagram::from_cut(p(5), "<>ooo", 0, 0, 0).unwrap();
        assert_eq!(decode(&d, 1, 1).unwrap(), one);
        assert!(decode(&d, 2, 1).is_err());
    }

    #[test]
    fn permutation_of_gl54() {
        let d = encode(&gl54());
        let mut sigma: Vec<usize> = (0..11).collect();
        sigma[0] = 4;
        sigma[4] = 6;
        sigma[6] = 0;
        sigma[3] = 9;
        sigma[9] = 3;
        let e = permute(&sigma, &d).unwrap().times(LaurentLabel::new(1, -1));
        assert_eq!(render_ascii(&e, 0), "<o>xxoo>>o< @0 t1^-2 t2^1");
        assert_eq!(e.cross_count(), 2);
        assert_eq!(permute(&(0..11).collect::<Vec<_>>(), &d).unwrap(), d);
    }
}
