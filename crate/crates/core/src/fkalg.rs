//! Words in the generators `x_ij` of the Fomin-Kirillov algebra, modulo only
//! `x_ji = -x_ij` and `x_ij^2 = 0`, with the braided Hopf operations:
//! `S_n` action and grading, coproduct, the actions `Delta_ab` and `nabla_ab`,
//! the pairing, the antipode and its reversed variant `sbar`.
//!
//! Commutation and three-term relations are deliberately not applied; equality
//! in the quotient algebra is decided by [`crate::fkcanon`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symgroup::{canonical_word, Permutation, Transposition};

/// A generator `x_ij` with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    i: u8,
    j: u8,
}

impl Gen {
    /// `x_ab` as a canonical generator and a sign (`-1` iff `a > b`).
    pub fn signed(a: usize, b: usize) -> Result<(Gen, i64)> {
        if a == b {
            return Err(Error::EqualIndices(a));
        }
        if a == 0 || b == 0 || a > 255 || b > 255 {
            return Err(Error::InvalidTransposition(a, b));
        }
        let g = Gen { i: a.min(b) as u8, j: a.max(b) as u8 };
        Ok((g, if a < b { 1 } else { -1 }))
    }

    /// `x_ij` for `i < j`; panics otherwise.
    pub fn new(i: usize, j: usize) -> Gen {
        assert!(0 < i && i < j && j <= 255, "generator x({i},{j}) is not canonical");
        Gen { i: i as u8, j: j as u8 }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn transposition(&self) -> Transposition {
        Transposition::new(self.i(), self.j()).unwrap()
    }

    /// `w(x_ij) = x_{w(i) w(j)}`, re-canonicalized.
    pub fn act(&self, w: &Permutation) -> (Gen, i64) {
        Gen::signed(w.image(self.i()), w.image(self.j())).unwrap()
    }

    /// Image of the point `k` under the transposition `s_ij`.
    pub fn swap_point(&self, k: usize) -> usize {
        if k == self.i() {
            self.j()
        } else if k == self.j() {
            self.i()
        } else {
            k
        }
    }

    fn act_gen(&self, t: Gen) -> (Gen, i64) {
        Gen::signed(t.swap_point(self.i()), t.swap_point(self.j())).unwrap()
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x({},{})", self.i, self.j)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `gen(i, j)`: canonical letter plus sign.
pub fn gen(i: usize, j: usize) -> Result<(FkWord, i64)> {
    let (g, sign) = Gen::signed(i, j)?;
    Ok((FkWord(vec![g]), sign))
}

/// A product of canonical generators with no two equal adjacent letters.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FkWord(Vec<Gen>);

impl FkWord {
    pub fn empty() -> Self {
        FkWord(Vec::new())
    }

    /// `None` when two adjacent letters coincide (the word is zero).
    pub fn new(letters: Vec<Gen>) -> Option<Self> {
        if letters.windows(2).any(|p| p[0] == p[1]) {
            None
        } else {
            Some(FkWord(letters))
        }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index appearing in the word.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(Gen::j).max().unwrap_or(0)
    }

    /// Product of the letters' transpositions, in letter order.
    pub fn sn_degree(&self, n: usize) -> Permutation {
        let n = n.max(self.max_index());
        self.0
            .iter()
            .fold(Permutation::identity(n), |p, g| p.right_mul_transposition(g.transposition()))
    }

    pub fn concat(&self, other: &FkWord) -> Option<FkWord> {
        if let (Some(a), Some(b)) = (self.0.last(), other.0.first()) {
            if a == b {
                return None;
            }
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Some(FkWord(v))
    }

    pub fn reversed(&self) -> FkWord {
        FkWord(self.0.iter().rev().copied().collect())
    }

    /// Relabels every letter; returns the word with its sign.
    pub fn act(&self, w: &Permutation) -> (FkWord, i64) {
        let mut sign = 1;
        let letters = self
            .0
            .iter()
            .map(|g| {
                let (h, s) = g.act(w);
                sign *= s;
                h
            })
            .collect();
        (FkWord(letters), sign)
    }

    fn act_gen(&self, t: Gen) -> (FkWord, i64) {
        let mut sign = 1;
        let letters = self
            .0
            .iter()
            .map(|g| {
                let (h, s) = g.act_gen(t);
                sign *= s;
                h
            })
            .collect();
        (FkWord(letters), sign)
    }
}

impl fmt::Debug for FkWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FkWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// An integer linear combination of [`FkWord`]s.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FkElement {
    terms: BTreeMap<FkWord, i64>,
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let v = e.get().checked_add(c).expect("coefficient overflow");
            if v == 0 {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl FkElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FkWord::empty())
    }

    pub fn from_word(w: FkWord) -> Self {
        Self::from_signed_word(w, 1)
    }

    pub fn from_signed_word(w: FkWord, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    /// The product of `x_{a_k b_k}` over signed index pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let mut sign = 1;
        let mut letters = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let (g, s) = Gen::signed(a, b)?;
            sign *= s;
            letters.push(g);
        }
        Ok(match FkWord::new(letters) {
            Some(w) => Self::from_signed_word(w, sign),
            None => Self::zero(),
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FkWord, i64)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: FkWord, c: i64) {
        add_into(&mut self.terms, w, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FkWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &FkWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the empty word.
    pub fn constant(&self) -> i64 {
        self.coefficient(&FkWord::empty())
    }

    /// All coefficients positive (letters are canonical by construction).
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// The common degree of all terms, if any.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(FkWord::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(FkWord::max_index).max().unwrap_or(0)
    }

    /// The common `S_n`-degree of all terms, if any.
    pub fn sn_degree(&self, n: usize) -> Option<Permutation> {
        let n = n.max(self.max_index());
        let mut it = self.terms.keys().map(|w| w.sn_degree(n));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn homogeneous_part(&self, degree: usize) -> FkElement {
        FkElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == degree)
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }

    pub fn add(&self, other: &FkElement) -> FkElement {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &FkElement) -> FkElement {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> FkElement {
        if k == 0 {
            return Self::zero();
        }
        FkElement {
            terms: self
                .terms
                .iter()
                .map(|(w, &c)| (w.clone(), c.checked_mul(k).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &FkElement) -> FkElement {
        let mut out = Self::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                if let Some(w) = a.concat(b) {
                    out.add_term(w, ca * cb);
                }
            }
        }
        out
    }

    pub fn act(&self, w: &Permutation) -> FkElement {
        let mut out = Self::zero();
        for (word, &c) in &self.terms {
            let (v, s) = word.act(w);
            out.add_term(v, c * s);
        }
        out
    }

    fn act_gen(&self, t: Gen) -> FkElement {
        let mut out = Self::zero();
        for (word, &c) in &self.terms {
            let (v, s) = word.act_gen(t);
            out.add_term(v, c * s);
        }
        out
    }

    pub fn reverse(&self) -> FkElement {
        FkElement::from_terms(self.terms.iter().map(|(w, &c)| (w.reversed(), c)))
    }

    fn map_words(&self, f: impl Fn(&FkWord) -> FkElement) -> FkElement {
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            for (v, d) in f(w).terms {
                out.add_term(v, c * d);
            }
        }
        out
    }

    pub fn coproduct(&self) -> FkTensor {
        let mut out = FkTensor::zero();
        for (w, &c) in &self.terms {
            for (k, d) in coproduct_word(w).terms {
                out.add_term(k, c * d);
            }
        }
        out
    }
}

impl fmt::Debug for FkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, first: bool, c: i64, body: &str, is_unit: bool) -> fmt::Result {
    match (first, c < 0) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let a = c.unsigned_abs();
    if is_unit {
        write!(f, "{a}")
    } else if a == 1 {
        f.write_str(body)
    } else {
        write!(f, "{a}*{body}")
    }
}

impl fmt::Display for FkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, &c)) in self.terms.iter().enumerate() {
            write_signed(f, k == 0, c, &w.to_string(), w.is_empty())?;
        }
        Ok(())
    }
}

/// An integer combination of pairs of words, for coproduct values.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FkTensor {
    terms: BTreeMap<(FkWord, FkWord), i64>,
}

impl FkTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        let mut t = Self::zero();
        t.add_term((FkWord::empty(), FkWord::empty()), 1);
        t
    }

    pub fn pure(a: &FkElement, b: &FkElement) -> Self {
        let mut t = Self::zero();
        for (x, ca) in a.terms() {
            for (y, cb) in b.terms() {
                t.add_term((x.clone(), y.clone()), ca * cb);
            }
        }
        t
    }

    pub fn add_term(&mut self, key: (FkWord, FkWord), c: i64) {
        add_into(&mut self.terms, key, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FkWord, &FkWord, i64)> {
        self.terms.iter().map(|((a, b), &c)| (a, b, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(P1 (x) P2)(Q1 (x) Q2) = P1 Q1 (x) s_{Q1}^{-1}(P2) Q2`.
    pub fn braided_mul(&self, other: &FkTensor) -> FkTensor {
        let mut out = FkTensor::zero();
        for ((p1, p2), &c) in &self.terms {
            for ((q1, q2), &d) in &other.terms {
                let Some(left) = p1.concat(q1) else { continue };
                let n = p2.max_index().max(q1.max_index());
                let (twisted, s) = p2.act(&q1.sn_degree(n).inverse());
                let Some(right) = twisted.concat(q2) else { continue };
                out.add_term((left, right), c * d * s);
            }
        }
        out
    }

    /// Untwisted swap of the two factors.
    pub fn swap(&self) -> FkTensor {
        let mut out = FkTensor::zero();
        for ((a, b), &c) in &self.terms {
            out.add_term((b.clone(), a.clone()), c);
        }
        out
    }

    /// Applies `f (x) g` factorwise.
    pub fn map(&self, f: impl Fn(&FkWord) -> FkElement, g: impl Fn(&FkWord) -> FkElement) -> FkTensor {
        let mut out = FkTensor::zero();
        for ((a, b), &c) in &self.terms {
            let fa = f(a);
            let gb = g(b);
            for (x, cx) in fa.terms() {
                for (y, cy) in gb.terms() {
                    out.add_term((x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }
}

impl fmt::Debug for FkTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FkTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((a, b), &c)) in self.terms.iter().enumerate() {
            write_signed(f, k == 0, c, &format!("{a} ⊗ {b}"), false)?;
        }
        Ok(())
    }
}

pub fn multiply(a: &FkElement, b: &FkElement) -> FkElement {
    a.multiply(b)
}

pub fn act(w: &Permutation, a: &FkElement) -> FkElement {
    a.act(w)
}

pub fn sn_degree(word: &FkWord, n: usize) -> Permutation {
    word.sn_degree(n)
}

pub fn reverse(a: &FkElement) -> FkElement {
    a.reverse()
}

fn coproduct_word(w: &FkWord) -> FkTensor {
    let mut acc = FkTensor::unit();
    for &g in w.letters() {
        let gw = FkWord(vec![g]);
        let mut next = FkTensor::zero();
        for ((a, b), &c) in &acc.terms {
            // (A (x) B)(g (x) 1) = A g (x) s_g(B)
            if let Some(ag) = a.concat(&gw) {
                let (bt, s) = b.act_gen(g);
                next.add_term((ag, bt), c * s);
            }
            // (A (x) B)(1 (x) g) = A (x) B g
            if let Some(bg) = b.concat(&gw) {
                next.add_term((a.clone(), bg), c);
            }
        }
        acc = next;
    }
    acc
}

/// The braided coproduct, `x_ij -> x_ij (x) 1 + 1 (x) x_ij`.
pub fn coproduct(a: &FkElement) -> FkTensor {
    a.coproduct()
}

/// `Delta_ab` for an arbitrary ordered pair `a != b`.
pub fn delta_gen(a: usize, b: usize, x: &FkElement) -> FkElement {
    let (target, sign) = Gen::signed(a, b).expect("delta needs distinct indices");
    x.map_words(|w| {
        let mut out = FkElement::zero();
        let letters = w.letters();
        // s_ab applied to the prefix g_1 ... g_(t-1)
        let mut twisted_prefix: Vec<Gen> = Vec::with_capacity(letters.len());
        let mut prefix_sign = 1;
        for (t, &g) in letters.iter().enumerate() {
            if g == target {
                let mut v = twisted_prefix.clone();
                v.extend_from_slice(&letters[t + 1..]);
                if let Some(word) = FkWord::new(v) {
                    out.add_term(word, sign * prefix_sign);
                }
            }
            let (h, s) = g.act_gen(target);
            twisted_prefix.push(h);
            prefix_sign *= s;
        }
        out
    })
}

/// `Delta_P(A) = Delta_{p1}( ... Delta_{pk}(A))` for `P = p1 ... pk`.
pub fn delta_op(p: &FkWord, a: &FkElement) -> FkElement {
    let mut cur = a.clone();
    for g in p.letters().iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = delta_gen(g.i(), g.j(), &cur);
    }
    cur
}

/// Linear extension of [`delta_op`] to an element `P`.
pub fn delta_elem(p: &FkElement, a: &FkElement) -> FkElement {
    let mut out = FkElement::zero();
    for (w, c) in p.terms() {
        out = out.add(&delta_op(w, a).scale(c));
    }
    out
}

/// Right action `(A) nabla_ab` for an arbitrary ordered pair `a != b`.
pub fn nabla_gen(x: &FkElement, a: usize, b: usize) -> FkElement {
    x.map_words(|w| {
        let mut out = FkElement::zero();
        let letters = w.letters();
        // (a', b') = s_{g_(t+1)} ... s_{g_k} applied to (a, b)
        let (mut ca, mut cb) = (a, b);
        for t in (0..letters.len()).rev() {
            let g = letters[t];
            let (target, sign) = Gen::signed(ca, cb).unwrap();
            if g == target {
                let mut v = letters[..t].to_vec();
                v.extend_from_slice(&letters[t + 1..]);
                if let Some(word) = FkWord::new(v) {
                    out.add_term(word, sign);
                }
            }
            ca = g.swap_point(ca);
            cb = g.swap_point(cb);
        }
        out
    })
}

/// `(A) nabla_P = (... ((A) nabla_{p1}) ...) nabla_{pk}`.
pub fn nabla_op(a: &FkElement, p: &FkWord) -> FkElement {
    let mut cur = a.clone();
    for g in p.letters() {
        if cur.is_zero() {
            break;
        }
        cur = nabla_gen(&cur, g.i(), g.j());
    }
    cur
}

pub fn nabla_elem(a: &FkElement, p: &FkElement) -> FkElement {
    let mut out = FkElement::zero();
    for (w, c) in p.terms() {
        out = out.add(&nabla_op(a, w).scale(c));
    }
    out
}

/// `<P, Q>`: the degree-zero part of `Delta_P(Q)`, summed over homogeneous
/// components of equal degree.
pub fn pairing(p: &FkElement, q: &FkElement) -> i64 {
    let mut total = 0i64;
    for (pw, pc) in p.terms() {
        for (qw, qc) in q.terms() {
            if pw.degree() != qw.degree() {
                continue;
            }
            let d = delta_op(pw, &FkElement::from_word(qw.clone())).constant();
            total += pc * qc * d;
        }
    }
    total
}

/// `<x_w, P>` via saturated chains: with `v_k = s_{g_k} ... s_{g_l}`, returns 1
/// iff `id < v_l < ... < v_1 = w^{-1}` is a chain of covers.
pub fn pairing_bruhat(w: &Permutation, p: &FkWord) -> i64 {
    let n = w.window().max(p.max_index());
    let mut v = Permutation::identity(n);
    let mut len = 0;
    for g in p.letters().iter().rev() {
        v = v.left_mul_transposition(g.transposition());
        len += 1;
        if v.length() != len {
            return 0;
        }
    }
    i64::from(v == w.embed(n).inverse())
}

fn antipode_word(w: &FkWord) -> FkElement {
    // S(P g) = S(g) * s_g(S(P))
    let mut acc = FkElement::one();
    for &g in w.letters() {
        let sg = FkElement::from_signed_word(FkWord(vec![g]), -1);
        acc = sg.multiply(&acc.act_gen(g));
    }
    acc
}

/// The braided antihomomorphism with `x_ij -> -x_ij`.
pub fn antipode(a: &FkElement) -> FkElement {
    a.map_words(antipode_word)
}

fn sbar_word(w: &FkWord) -> FkElement {
    // y_k = s_{g_l} ... s_{g_(k+1)} (g_k)
    let letters = w.letters();
    let n = w.max_index();
    let mut sigma = Permutation::identity(n);
    let mut sign = 1;
    let mut ys = vec![letters.first().copied().unwrap_or(Gen { i: 1, j: 2 }); letters.len()];
    for k in (0..letters.len()).rev() {
        let (y, s) = letters[k].act(&sigma);
        ys[k] = y;
        sign *= s;
        sigma = sigma.right_mul_transposition(letters[k].transposition());
    }
    match FkWord::new(ys) {
        Some(word) => FkElement::from_signed_word(word, sign),
        None => FkElement::zero(),
    }
}

/// `sbar(P) = (-1)^deg(P) rho(S(P))`, computed by the closed letterwise formula.
pub fn sbar(a: &FkElement) -> FkElement {
    a.map_words(sbar_word)
}

/// `x_w` from the canonical reduced word of `w`.
pub fn nilcoxeter_word(w: &Permutation) -> FkWord {
    FkWord(
        canonical_word(w)
            .letters()
            .iter()
            .map(|&a| Gen::new(a, a + 1))
            .collect(),
    )
}

/// `x_{a1,a1+1} ... x_{al,al+1}` for an arbitrary word (zero on adjacent repeats).
pub fn nilcoxeter_from_letters(letters: &[usize]) -> FkElement {
    match FkWord::new(letters.iter().map(|&a| Gen::new(a, a + 1)).collect()) {
        Some(w) => FkElement::from_word(w),
        None => FkElement::zero(),
    }
}

pub fn x_w(w: &Permutation) -> FkElement {
    FkElement::from_word(nilcoxeter_word(w))
}

/// Coordinates of an element of the nil-Coxeter subalgebra in the basis
/// `x_u`: words in simple letters `x_{a,a+1}` that are not reduced vanish.
/// `None` if some word uses a non-simple letter.
pub fn nilcoxeter_coordinates(a: &FkElement, n: usize) -> Option<BTreeMap<Permutation, i64>> {
    let n = n.max(a.max_index()).max(1);
    let mut out: BTreeMap<Permutation, i64> = BTreeMap::new();
    for (w, c) in a.terms() {
        let mut p = Permutation::identity(n);
        let mut reduced = true;
        for g in w.letters() {
            if g.j() != g.i() + 1 {
                return None;
            }
            if p.has_right_descent(g.i()) {
                reduced = false;
            }
            p = p.right_mul_simple(g.i());
        }
        if reduced {
            add_into(&mut out, p, c);
        }
    }
    Some(out)
}

/// Product of `x_ij` over a sequence of transpositions.
pub fn word_of_transpositions(ts: &[Transposition]) -> FkElement {
    match FkWord::new(ts.iter().map(|t| Gen::new(t.i(), t.j())).collect()) {
        Some(w) => FkElement::from_word(w),
        None => FkElement::zero(),
    }
}

/// All canonical generators of `FK_n` in lexicographic order.
pub fn generators(n: usize) -> Vec<Gen> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Gen::new(i, j));
        }
    }
    out
}

/// A random positive word of the given degree with no adjacent repeats.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize) -> FkWord {
    let gens = generators(n);
    let mut letters: Vec<Gen> = Vec::with_capacity(degree);
    while letters.len() < degree {
        let g = gens[rng.gen_range(0..gens.len())];
        if letters.last() != Some(&g) {
            letters.push(g);
        }
    }
    FkWord(letters)
}

/// A random element with up to `terms` terms, each of degree `degree`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize, terms: usize) -> FkElement {
    let mut e = FkElement::zero();
    for _ in 0..terms {
        let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        e.add_term(random_word(rng, n, degree), c);
    }
    e
}

// ---------------------------------------------------------------------------
// text and JSON formats

struct FkParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl FkParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "number too large"))
    }

    // [coeff ['*']] (x(i,j))+ | coeff
    fn term(&mut self) -> Result<(Vec<(usize, usize)>, i64)> {
        let mut coeff: i64 = 1;
        let mut pairs = Vec::new();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let at = self.pos;
            coeff = i64::try_from(self.number()?).map_err(|_| Error::parse(at, "coefficient too large"))?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if self.peek() != Some(b'x') {
                    return Err(Error::parse(self.pos, "expected a generator after '*'"));
                }
            }
        }
        while self.peek() == Some(b'x') {
            self.pos += 1;
            self.expect(b'(')?;
            let at = self.pos;
            let i = self.number()? as usize;
            self.expect(b',')?;
            let j = self.number()? as usize;
            self.expect(b')')?;
            if i == j {
                return Err(Error::parse(at, format!("generator x({i},{j}) has equal indices")));
            }
            if i == 0 || j == 0 || i > 255 || j > 255 {
                return Err(Error::parse(at, "generator indices must lie in 1..=255"));
            }
            pairs.push((i, j));
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        Ok((pairs, coeff))
    }
}

/// Parses signed integer combinations such as `"x(1,2)x(2,3) - 2*x(1,3) + 1"`.
/// Letters `x(j,i)` with `j > i` contribute a sign.
pub fn parse_element(text: &str) -> Result<FkElement> {
    let mut p = FkParser { s: text.as_bytes(), pos: 0 };
    let mut out = FkElement::zero();
    let mut sign = 1;
    match p.peek() {
        None => return Err(Error::parse(0, "empty element")),
        Some(b'-') => {
            sign = -1;
            p.pos += 1;
        }
        Some(b'+') => p.pos += 1,
        _ => {}
    }
    loop {
        p.skip_ws();
        let start = p.pos;
        let (pairs, c) = p.term()?;
        if pairs.is_empty() && p.pos == start {
            return Err(Error::parse(p.pos, "expected a term"));
        }
        out = out.add(&FkElement::from_pairs(&pairs)?.scale(sign * c));
        match p.peek() {
            None => break,
            Some(b'+') => sign = 1,
            Some(b'-') => sign = -1,
            Some(_) => return Err(Error::parse(p.pos, "expected '+' or '-'")),
        }
        p.pos += 1;
    }
    Ok(out)
}

/// Parses a single positive word; `"1"` is the empty word.
pub fn parse_word(text: &str) -> Result<FkWord> {
    let e = parse_element(text)?;
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((w, 1)), None) => Ok(w.clone()),
        _ => Err(Error::parse(0, format!("'{text}' is not a single positive word"))),
    }
}

impl FromStr for FkElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_element(s)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: i64,
    word: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTensorTerm {
    coeff: i64,
    left: Vec<[usize; 2]>,
    right: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct JsonTensor {
    terms: Vec<JsonTensorTerm>,
}

fn word_pairs(w: &FkWord) -> Vec<[usize; 2]> {
    w.letters().iter().map(|g| [g.i(), g.j()]).collect()
}

fn pairs_element(pairs: &[[usize; 2]]) -> Result<FkElement> {
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0], p[1])).collect();
    FkElement::from_pairs(&pairs)
}

impl FkElement {
    /// `{"terms":[{"coeff":c,"word":[[i,j],...]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|(w, &c)| JsonTerm { coeff: c, word: word_pairs(w) })
            .collect();
        serde_json::to_value(JsonElement { terms }).unwrap()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: JsonElement =
            serde_json::from_value(value.clone()).map_err(|e| Error::parse(0, e.to_string()))?;
        let mut out = FkElement::zero();
        for t in parsed.terms {
            out = out.add(&pairs_element(&t.word)?.scale(t.coeff));
        }
        Ok(out)
    }
}

impl FkTensor {
    /// `{"terms":[{"coeff":c,"left":[[i,j],...],"right":[[i,j],...]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), &c)| JsonTensorTerm { coeff: c, left: word_pairs(a), right: word_pairs(b) })
            .collect();
        serde_json::to_value(JsonTensor { terms }).unwrap()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: JsonTensor =
            serde_json::from_value(value.clone()).map_err(|e| Error::parse(0, e.to_string()))?;
        let mut out = FkTensor::zero();
        for t in parsed.terms {
            let pure = FkTensor::pure(&pairs_element(&t.left)?, &pairs_element(&t.right)?);
            for (a, b, c) in pure.terms() {
                out.add_term((a.clone(), b.clone()), c * t.coeff);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{compose, longest_element};

    fn e(s: &str) -> FkElement {
        parse_element(s).unwrap()
    }

    fn w(s: &str) -> FkWord {
        parse_word(s).unwrap()
    }

    fn perm(imgs: &[usize]) -> Permutation {
        Permutation::from_images(imgs).unwrap()
    }

    fn s(i: usize, n: usize) -> Permutation {
        Permutation::simple(i, n).unwrap()
    }

    #[test]
    fn gen_examples() {
        assert_eq!(gen(1, 2).unwrap(), (w("x(1,2)"), 1));
        assert_eq!(gen(2, 1).unwrap(), (w("x(1,2)"), -1));
        assert_eq!(gen(3, 3), Err(Error::EqualIndices(3)));
    }

    #[test]
    fn multiply_examples() {
        assert!(multiply(&e("x(1,2)"), &e("x(1,2)")).is_zero());
        assert_eq!(multiply(&e("x(1,2)"), &e("x(2,3)")), e("x(1,2)x(2,3)"));
        let b = e("x(1,2)x(2,3) - 3*x(1,3)");
        assert_eq!(multiply(&FkElement::one(), &b), b);
    }

    #[test]
    fn act_examples() {
        let s34 = Transposition::new(3, 4).unwrap().to_permutation(4);
        assert_eq!(act(&s34, &e("x(1,2)x(2,3)")), e("x(1,2)x(2,4)"));
        assert_eq!(act(&s(1, 2), &e("x(1,2)")), e("-x(1,2)"));
        let a = e("x(1,2)x(2,3) - x(1,3)");
        assert_eq!(act(&Permutation::identity(3), &a), a);
    }

    #[test]
    fn sn_degree_examples() {
        assert!(sn_degree(&FkWord::empty(), 3).is_identity());
        assert_eq!(sn_degree(&w("x(1,2)"), 2), s(1, 2));
        assert_eq!(sn_degree(&w("x(1,2)x(2,3)"), 3), perm(&[2, 3, 1]));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&FkElement::one()), FkTensor::unit());
        let one = FkElement::one();
        let x12 = e("x(1,2)");
        let want = FkTensor::pure(&x12, &one);
        let mut want = want;
        for (a, b, c) in FkTensor::pure(&one, &x12).terms() {
            want.add_term((a.clone(), b.clone()), c);
        }
        assert_eq!(coproduct(&x12), want);

        let got = coproduct(&e("x(1,2)x(2,3)"));
        let mut want = FkTensor::zero();
        for (a, b) in [
            ("x(1,2)x(2,3)", "1"),
            ("x(1,2)", "x(2,3)"),
            ("x(2,3)", "x(1,3)"),
            ("1", "x(1,2)x(2,3)"),
        ] {
            want.add_term((w(a), w(b)), 1);
        }
        assert_eq!(got, want);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_op(&w("x(1,2)"), &e("x(1,2)")), FkElement::one());
        assert!(delta_op(&w("x(1,2)"), &e("x(1,3)")).is_zero());
        assert_eq!(delta_op(&w("x(2,3)"), &e("x(1,2)x(2,3)x(1,2)")), e("x(1,3)x(1,2)"));
        // Delta_ba = -Delta_ab
        assert_eq!(delta_gen(2, 1, &e("x(1,2)")), e("-1"));
    }

    #[test]
    fn nabla_examples() {
        assert_eq!(nabla_op(&e("x(1,2)"), &w("x(1,2)")), FkElement::one());
        assert_eq!(nabla_op(&e("x(1,2)x(2,3)x(1,2)"), &w("x(2,3)")), e("x(2,3)x(1,2)"));
        assert_eq!(nabla_op(&e("x(1,2)x(2,3)"), &w("x(2,3)")), e("x(1,2)"));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&e("x(1,2)"), &e("x(1,2)")), 1);
        let s1s2 = compose(&s(1, 3), &s(2, 3));
        let s2s1 = compose(&s(2, 3), &s(1, 3));
        assert_eq!(pairing(&x_w(&s1s2), &x_w(&s2s1)), 1);
        assert_eq!(pairing(&x_w(&s1s2), &x_w(&s1s2)), 0);
        // degree mismatch
        assert_eq!(pairing(&e("x(1,2)"), &e("x(1,2)x(2,3)")), 0);
    }

    #[test]
    fn pairing_bruhat_examples() {
        assert_eq!(pairing_bruhat(&s(1, 2), &w("x(1,2)")), 1);
        for w_ in crate::symgroup::all_permutations(3) {
            assert_eq!(pairing_bruhat(&w_, &w("x(1,2)x(1,3)")), 0);
        }
        assert_eq!(pairing_bruhat(&perm(&[3, 1, 2]), &w("x(1,3)x(1,2)")), 1);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&FkElement::one()), FkElement::one());
        assert_eq!(antipode(&e("x(1,2)")), e("-x(1,2)"));
        assert_eq!(antipode(&e("x(1,2)x(2,3)x(3,4)")), e("-x(3,4)x(2,4)x(1,4)"));
    }

    #[test]
    fn sbar_examples() {
        assert_eq!(sbar(&e("x(1,2)x(2,3)x(3,4)")), e("x(1,4)x(2,4)x(3,4)"));
        assert_eq!(sbar(&e("x(1,2)")), e("x(1,2)"));
        assert_eq!(sbar(&e("x(1,2)x(2,3)x(1,2)")), e("x(2,3)x(1,3)x(1,2)"));
    }

    #[test]
    fn nilcoxeter_examples() {
        assert!(nilcoxeter_word(&Permutation::identity(3)).is_empty());
        assert_eq!(nilcoxeter_word(&compose(&s(1, 3), &s(2, 3))), w("x(1,2)x(2,3)"));
        assert_eq!(nilcoxeter_word(&longest_element(3)), w("x(1,2)x(2,3)x(1,2)"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&e("x(1,2)x(2,3)")), e("x(2,3)x(1,2)"));
        assert_eq!(reverse(&e("x(1,2)")), e("x(1,2)"));
        let a = e("x(1,2)x(2,3)x(1,4) - 2*x(3,4)");
        assert_eq!(reverse(&reverse(&a)), a);
    }

    #[test]
    fn text_format() {
        let a = e("x(1,2)x(2,4)x(3,4) + x(1,3)x(1,2)x(2,4)");
        assert_eq!(a.to_string(), "x(1,2)x(2,4)x(3,4) + x(1,3)x(1,2)x(2,4)");
        assert_eq!(e("x(2,1)"), e("-x(1,2)"));
        assert!(e("x(1,2)x(1,2)").is_zero());
        assert_eq!(e("2*x(1,3) - 1").to_string(), "-1 + 2*x(1,3)");
        assert_eq!(FkElement::zero().to_string(), "0");
        assert!(matches!(parse_element("x(1,1)"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_element("x(1,2) + "), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("x(1 2)"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn json_format() {
        let a = e("x(1,2)x(2,3) - 2*x(1,3) + 1");
        let j = a.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"terms":[{"coeff":1,"word":[]},{"coeff":1,"word":[[1,2],[2,3]]},{"coeff":-2,"word":[[1,3]]}]}"#
        );
        assert_eq!(FkElement::from_json(&j).unwrap(), a);
        let t = coproduct(&e("x(1,2)x(2,3)"));
        assert_eq!(FkTensor::from_json(&t.to_json()).unwrap(), t);
    }
}
