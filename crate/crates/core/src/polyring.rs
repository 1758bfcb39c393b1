//! Exact sparse polynomials in `x_1, ..., x_n` with integer coefficients,
//! the left `S_n` action, divided difference operators and Schubert
//! polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::symgroup::{canonical_word, reduced_subwords, Permutation, Word};

/// Exponent vector of a monomial over a fixed window.
///
/// Ordered graded-lexicographically: total degree first, then by the
/// exponent of `x_1`, `x_2`, ...
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn embed(&self, n: usize) -> Self {
        let mut e = self.0.clone();
        e.resize(n.max(e.len()), 0);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial: a finite map from monomials to nonzero integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n), c.into());
        p
    }

    /// The variable `x_i` (1-based); the window grows to hold it.
    pub fn var(i: usize, n: usize) -> Self {
        let n = n.max(i);
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(Monomial(e), BigInt::one());
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.n = p.n.max(e.len());
            p.add_term(Monomial(e), c);
        }
        p.normalize_window();
        p
    }

    pub fn window(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(&m.embed(self.n)).cloned().unwrap_or_default()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(Monomial::degree);
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    /// Re-expresses the polynomial over `m >= n` variables.
    pub fn embed(&self, m: usize) -> Self {
        if m <= self.n {
            return self.clone();
        }
        Polynomial {
            n: m,
            terms: self.terms.iter().map(|(k, c)| (k.embed(m), c.clone())).collect(),
        }
    }

    fn normalize_window(&mut self) {
        let n = self.n;
        if self.terms.keys().any(|m| m.0.len() != n) {
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(m, c)| (m.embed(n), c))
                .collect();
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.n.max(other.n);
        let mut out = self.embed(n);
        for (m, c) in &other.terms {
            out.add_term(m.embed(n), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let n = self.n.max(other.n);
        let a = self.embed(n);
        let b = other.embed(n);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                *acc.entry(Monomial(e)).or_default() += ca * cb;
            }
        }
        let mut out = Polynomial::zero(n);
        for (m, c) in acc {
            if !c.is_zero() {
                out.terms.insert(m, c);
            }
        }
        out
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one(self.n))
    }

    /// Integer value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.add(q)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.mul(q)
}

pub fn poly_scale(p: &Polynomial, k: &BigInt) -> Polynomial {
    p.scale(k)
}

pub fn constant_term(p: &Polynomial) -> BigInt {
    p.constant_term()
}

/// `(w P)(x_1, ..., x_n) = P(x_{w(1)}, ..., x_{w(n)})`, i.e. `x_j -> x_{w(j)}`.
pub fn act(w: &Permutation, p: &Polynomial) -> Polynomial {
    let n = p.n.max(w.window());
    let mut out = Polynomial::zero(n);
    for (m, c) in &p.terms {
        let mut e = vec![0; n];
        for (j, &x) in m.0.iter().enumerate() {
            e[w.image(j + 1) - 1] = x;
        }
        out.terms.insert(Monomial(e), c.clone());
    }
    out
}

fn swap_vars(p: &Polynomial, i: usize, j: usize) -> Polynomial {
    let mut out = Polynomial::zero(p.n);
    for (m, c) in &p.terms {
        let mut e = m.0.clone();
        e.swap(i - 1, j - 1);
        out.terms.insert(Monomial(e), c.clone());
    }
    out
}

/// `(P - s_ij P) / (x_i - x_j)`, computed by synthetic division in `x_i`.
///
/// Panics if `i == j` or if the division leaves a remainder; the latter can
/// only happen through an internal bug.
pub fn divided_difference(i: usize, j: usize, p: &Polynomial) -> Polynomial {
    assert!(i != j && i > 0 && j > 0, "divided difference needs distinct indices");
    let n = p.n.max(i).max(j);
    let p = p.embed(n);
    let numerator = p.sub(&swap_vars(&p, i, j));
    let (xi, xj) = (i - 1, j - 1);

    let top = numerator.terms.keys().map(|m| m.0[xi]).max().unwrap_or(0) as usize;
    let mut buckets: Vec<HashMap<Vec<u32>, BigInt>> = vec![HashMap::new(); top + 1];
    for (m, c) in &numerator.terms {
        buckets[m.0[xi] as usize].insert(m.0.clone(), c.clone());
    }
    let mut quotient: HashMap<Vec<u32>, BigInt> = HashMap::new();
    // c x_i^a r = c x_i^(a-1) r (x_i - x_j) + c x_i^(a-1) x_j r
    for a in (1..=top).rev() {
        let bucket = std::mem::take(&mut buckets[a]);
        for (mut e, c) in bucket {
            if c.is_zero() {
                continue;
            }
            e[xi] -= 1;
            *quotient.entry(e.clone()).or_default() += &c;
            e[xj] += 1;
            *buckets[a - 1].entry(e).or_default() += c;
        }
    }
    assert!(
        buckets[0].values().all(Zero::is_zero),
        "divided difference left a nonzero remainder"
    );
    let mut out = Polynomial::zero(n);
    for (e, c) in quotient {
        if !c.is_zero() {
            out.terms.insert(Monomial(e), c);
        }
    }
    out
}

/// Applies `d_{i1} ... d_{il}` (rightmost first) along a word, literally.
pub fn del_word(word: &Word, p: &Polynomial) -> Polynomial {
    let mut cur = p.clone();
    for &i in word.letters().iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = divided_difference(i, i + 1, &cur);
    }
    cur
}

/// `d_w` along the canonical reduced word of `w`.
pub fn del_perm(w: &Permutation, p: &Polynomial) -> Polynomial {
    del_word(&canonical_word(w), p)
}

/// `x_1^(n-1) x_2^(n-2) ... x_(n-1)`.
pub fn staircase(n: usize) -> Polynomial {
    let e: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut p = Polynomial::zero(n);
    p.terms.insert(Monomial(e), BigInt::one());
    p
}

/// The Schubert polynomial `d_{w^-1 w0} x^delta`, computed in the smallest
/// window holding `w` and returned over `w`'s window.
pub fn schubert(w: &Permutation) -> Polynomial {
    let m = w.support_window();
    let small = Permutation::from_images(&w.images()[..m]).expect("prefix of a permutation fixing the tail");
    let w0 = crate::symgroup::longest_element(m);
    let op = small.inverse().compose(&w0);
    del_perm(&op, &staircase(m)).embed(w.window())
}

/// Skew operator `d_{w/v}` applied to `P` directly: over the canonical word
/// `a_1 ... a_l` of `w`, sums `phi_J P` over positions `J` spelling a reduced
/// word of `v`, where `phi_J` uses `s_{a_k}` at `k in J` and `d_{a_k}`
/// elsewhere, then applies `v^{-1}`.
pub fn skew_direct_apply(w: &Permutation, v: &Permutation, p: &Polynomial) -> Polynomial {
    skew_direct_apply_with_word(&canonical_word(w), v, p)
}

/// As [`skew_direct_apply`] with an explicit reduced word for `w`.
pub fn skew_direct_apply_with_word(word: &Word, v: &Permutation, p: &Polynomial) -> Polynomial {
    let letters = word.letters();
    let n = p
        .n
        .max(v.window())
        .max(letters.iter().map(|&i| i + 1).max().unwrap_or(0));
    let p = p.embed(n);
    let mut total = Polynomial::zero(n);
    for positions in reduced_subwords(word, v) {
        let mut cur = p.clone();
        let mut next_in_j = positions.len();
        for k in (0..letters.len()).rev() {
            let a = letters[k];
            if next_in_j > 0 && positions[next_in_j - 1] == k {
                next_in_j -= 1;
                cur = swap_vars(&cur, a, a + 1);
            } else {
                cur = divided_difference(a, a + 1, &cur);
                if cur.is_zero() {
                    break;
                }
            }
        }
        total = total.add(&cur);
    }
    act(&v.inverse(), &total)
}

/// Random polynomial with `terms` terms of degree at most `max_degree` and
/// nonzero coefficients in `[-9, 9]`.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, n: usize, max_degree: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let mut c: i64 = rng.gen_range(1..=9);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        p.add_term(Monomial(e), BigInt::from(c));
    }
    p
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn small_number(&mut self) -> Result<usize> {
        let start = self.pos;
        self.number()?
            .to_usize()
            .ok_or_else(|| Error::parse(start, "number too large"))
    }

    // factor ('*' factor)*
    fn term(&mut self) -> Result<(BTreeMap<usize, u32>, BigInt)> {
        let mut exps = BTreeMap::new();
        let mut coeff = BigInt::one();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let at = self.pos;
                    let i = self.small_number()?;
                    if i == 0 {
                        return Err(Error::parse(at, "variables are numbered from 1"));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let at = self.pos;
                        e = u32::try_from(self.small_number()?).map_err(|_| Error::parse(at, "exponent too large"))?;
                    }
                    *exps.entry(i).or_insert(0) += e;
                }
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                _ => return Err(Error::parse(self.pos, "expected a number or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((exps, coeff));
            }
        }
    }
}

/// Parses `"3*x1^2*x2 - x3"`; the window is the largest variable index
/// (at least `min_window`).
pub fn parse_polynomial(text: &str, min_window: usize) -> Result<Polynomial> {
    let mut parser = PolyParser { s: text.as_bytes(), pos: 0 };
    let mut raw = Vec::new();
    let mut sign = BigInt::one();
    match parser.peek() {
        Some(b'-') => {
            sign = -sign;
            parser.pos += 1;
        }
        Some(b'+') => parser.pos += 1,
        None => return Err(Error::parse(0, "empty polynomial")),
        _ => {}
    }
    loop {
        let (exps, c) = parser.term()?;
        raw.push((exps, c * &sign));
        match parser.peek() {
            None => break,
            Some(b'+') => sign = BigInt::one(),
            Some(b'-') => sign = -BigInt::one(),
            Some(_) => return Err(Error::parse(parser.pos, "expected '+' or '-'")),
        }
        parser.pos += 1;
    }
    let n = raw
        .iter()
        .filter_map(|(e, _)| e.keys().next_back().copied())
        .max()
        .unwrap_or(0)
        .max(min_window);
    let mut p = Polynomial::zero(n);
    for (exps, c) in raw {
        let mut e = vec![0; n];
        for (i, x) in exps {
            e[i - 1] = x;
        }
        p.add_term(Monomial(e), c);
    }
    Ok(p)
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{compose, longest_element};

    fn poly(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn s(i: usize, n: usize) -> Permutation {
        Permutation::simple(i, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let p = poly("3*x1^2*x2 - x3", 3);
        assert_eq!(p.add(&Polynomial::zero(3)), p);
        assert_eq!(poly("x1", 1).mul(&poly("x1", 1)), poly("x1^2", 1));
        assert_eq!(poly("x1 + x2", 2).mul(&poly("x1 - x2", 2)), poly("x1^2 - x2^2", 2));
        assert_eq!(p.scale(&BigInt::from(0)), Polynomial::zero(3));
        assert_eq!(p.sub(&p), Polynomial::zero(3));
    }

    #[test]
    fn act_examples() {
        let p = poly("3*x1^2*x2 - x3", 3);
        assert_eq!(act(&Permutation::identity(3), &p), p);
        assert_eq!(act(&s(1, 2), &poly("x1^2*x2", 2)), poly("x2^2*x1", 2));
        let s1s2 = compose(&s(1, 3), &s(2, 3));
        assert_eq!(act(&s1s2, &poly("x1", 3)), poly("x2", 3));
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(divided_difference(1, 2, &poly("x1", 2)), Polynomial::one(2));
        assert_eq!(divided_difference(1, 2, &poly("x2", 2)), Polynomial::constant(2, -1));
        assert_eq!(divided_difference(1, 3, &poly("x1^2", 3)), poly("x1 + x3", 3));
    }

    #[test]
    #[should_panic]
    fn divided_difference_rejects_equal_indices() {
        divided_difference(2, 2, &poly("x1", 2));
    }

    #[test]
    fn del_word_examples() {
        let p = poly("3*x1^2*x2 - x3 + 7", 3);
        assert_eq!(del_perm(&Permutation::identity(3), &p), p);
        assert!(del_word(&Word(vec![1, 1]), &p).is_zero());
        assert_eq!(del_perm(&longest_element(3), &poly("x1^2*x2", 3)), Polynomial::one(3));
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(1), Polynomial::one(1));
        assert_eq!(staircase(2), poly("x1", 2));
        assert_eq!(staircase(3), poly("x1^2*x2", 3));
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&Permutation::identity(3)), Polynomial::one(3));
        assert_eq!(schubert(&longest_element(3)), poly("x1^2*x2", 3));
        assert_eq!(schubert(&s(1, 2)), poly("x1", 2));
        assert_eq!(schubert(&s(2, 3)), poly("x1 + x2", 3));
        // stability under embedding
        assert_eq!(schubert(&s(1, 4)), poly("x1", 4));
    }

    #[test]
    fn skew_direct_examples() {
        let p = poly("3*x1^2*x2 - x3 + 2*x2*x3^2", 3);
        let w = compose(&s(1, 3), &s(2, 3));
        assert_eq!(skew_direct_apply(&w, &Permutation::identity(3), &p), del_perm(&w, &p));
        assert_eq!(skew_direct_apply(&w, &s(2, 3), &poly("x1", 3)), Polynomial::one(3));
        assert_eq!(skew_direct_apply(&w, &w, &p), p);
        // v not below w
        assert!(skew_direct_apply(&s(1, 3), &s(2, 3), &p).is_zero());
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(constant_term(&Polynomial::zero(2)), BigInt::from(0));
        assert_eq!(constant_term(&Polynomial::constant(2, 5)), BigInt::from(5));
        assert_eq!(constant_term(&poly("x1 + 3", 2)), BigInt::from(3));
    }

    #[test]
    fn printing_is_graded_lex_descending() {
        let p = poly("x3 + 3*x1^2*x2 - 4 + x1*x2*x3", 3);
        assert_eq!(p.to_string(), "3*x1^2*x2 + x1*x2*x3 + x3 - 4");
        assert_eq!(poly("-x1 - 1", 1).to_string(), "-x1 - 1");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(parse_polynomial("x1 + * x2", 0), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_polynomial("x0", 0), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_polynomial("", 0), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_polynomial("x1 x2", 0), Err(Error::Parse { pos: 3, .. })));
    }
}
