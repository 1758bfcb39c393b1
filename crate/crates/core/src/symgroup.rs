//! Symmetric group combinatorics: one-line permutations, reduced words,
//! Bruhat order, reflection orderings and reduced subword enumeration.
//!
//! Permutations are written in one-line notation with 1-based images and
//! compose as functions: `(u * v)(i) = u(v(i))`. Words are sequences of
//! simple-generator indices `1..n-1` and multiply left to right, so the word
//! `[a, b]` denotes `s_a * s_b`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// An element of `S_n` in one-line notation.
///
/// Equality is structural, so the window `n` is part of the value; use
/// [`Permutation::embed`] to compare across windows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    map: Vec<usize>,
}

/// A word in the simple generators `s_1, ..., s_{n-1}`; not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

/// The transposition `s_ij`, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidTransposition(a, b));
        }
        Ok(Transposition { i: a.min(b), j: a.max(b) })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn to_permutation(&self, n: usize) -> Permutation {
        let mut p = Permutation::identity(n.max(self.j));
        p.map.swap(self.i - 1, self.j - 1);
        p
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.i, self.j)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
            map.push(x - 1);
        }
        Ok(Permutation { map })
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.map.swap(i - 1, i);
        Ok(p)
    }

    pub fn window(&self) -> usize {
        self.map.len()
    }

    /// `w(i)` for 1-based `i`; points beyond the window are fixed.
    pub fn image(&self, i: usize) -> usize {
        match self.map.get(i - 1) {
            Some(&x) => x + 1,
            None => i,
        }
    }

    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x + 1).collect()
    }

    /// Same permutation viewed in `S_m` for `m >= n`, fixing the new points.
    pub fn embed(&self, m: usize) -> Self {
        let mut map = self.map.clone();
        map.extend(map.len()..m.max(map.len()));
        Permutation { map }
    }

    /// Smallest window containing every moved point (at least 1).
    pub fn support_window(&self) -> usize {
        self.map
            .iter()
            .enumerate()
            .rev()
            .find(|(i, &x)| *i != x)
            .map_or(1, |(i, _)| i + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.window().max(other.window());
        let a = self.embed(n);
        let b = other.embed(n);
        Permutation { map: b.map.iter().map(|&x| a.map[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x] = i;
        }
        Permutation { map }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let m = &self.map;
        let mut count = 0;
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if m[a] > m[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inversion pairs `(a, b)` with `a < b` and `w(a) > w(b)`, 1-based.
    pub fn inversions(&self) -> Vec<Transposition> {
        let m = &self.map;
        let mut out = Vec::new();
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if m[a] > m[b] {
                    out.push(Transposition { i: a + 1, j: b + 1 });
                }
            }
        }
        out
    }

    /// Is `s_i * self` shorter than `self`?
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        i >= 1 && i < self.window() && inv.map[i - 1] > inv.map[i]
    }

    /// Is `self * s_i` shorter than `self`?
    pub fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.window() && self.map[i - 1] > self.map[i]
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.window()).filter(|&i| inv.map[i - 1] > inv.map[i]).collect()
    }

    /// `s_i * self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let n = self.window().max(i + 1);
        let mut p = self.embed(n);
        for x in p.map.iter_mut() {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
        p
    }

    /// `self * s_i`: swaps the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let n = self.window().max(i + 1);
        let mut p = self.embed(n);
        p.map.swap(i - 1, i);
        p
    }

    /// `self * s_ij`.
    pub fn right_mul_transposition(&self, t: Transposition) -> Permutation {
        let mut p = self.embed(self.window().max(t.j));
        p.map.swap(t.i - 1, t.j - 1);
        p
    }

    /// `s_ij * self`.
    pub fn left_mul_transposition(&self, t: Transposition) -> Permutation {
        t.to_permutation(self.window()).compose(self)
    }

    /// One-line digit string, e.g. `3412`; windows above 9 use commas.
    pub fn to_one_line(&self) -> String {
        let imgs = self.images();
        if imgs.len() <= 9 {
            imgs.iter().map(|x| x.to_string()).collect()
        } else {
            imgs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

pub fn compose(u: &Permutation, v: &Permutation) -> Permutation {
    u.compose(v)
}

pub fn inverse(w: &Permutation) -> Permutation {
    w.inverse()
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

/// The product `s_{i1} * ... * s_{il}` in `S_n`.
pub fn from_word(word: &Word, n: usize) -> Result<Permutation> {
    let mut p = Permutation::identity(n);
    for &i in word.letters() {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        p = p.right_mul_simple(i);
    }
    Ok(p)
}

pub fn is_reduced(word: &Word, n: usize) -> Result<bool> {
    Ok(from_word(word, n)?.length() == word.len())
}

/// The lexicographically smallest reduced word: repeatedly strip the smallest
/// left descent.
pub fn canonical_word(w: &Permutation) -> Word {
    let mut cur = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    while let Some(&i) = cur.left_descents().first() {
        letters.push(i);
        cur = cur.left_mul_simple(i);
    }
    Word(letters)
}

/// The lexicographically largest reduced word.
pub fn max_word(w: &Permutation) -> Word {
    let mut cur = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    while let Some(&i) = cur.left_descents().last() {
        letters.push(i);
        cur = cur.left_mul_simple(i);
    }
    Word(letters)
}

/// All reduced words of `w` in lexicographic order.
pub fn all_reduced_words(w: &Permutation) -> Vec<Word> {
    fn go(w: &Permutation, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
        let desc = w.left_descents();
        if desc.is_empty() {
            out.push(Word(prefix.clone()));
            return;
        }
        for i in desc {
            prefix.push(i);
            go(&w.left_mul_simple(i), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedWordMode {
    One,
    All,
}

pub fn reduced_words(w: &Permutation, mode: ReducedWordMode) -> Vec<Word> {
    match mode {
        ReducedWordMode::One => vec![canonical_word(w)],
        ReducedWordMode::All => all_reduced_words(w),
    }
}

/// Bruhat order by the subword property along the canonical word of `w`:
/// if `s` is the first letter of the word, `v <= w` iff `min(v, s v) <= s w`.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> bool {
    let n = v.window().max(w.window());
    let mut v = v.embed(n);
    let word = canonical_word(&w.embed(n));
    for &s in word.letters() {
        if v.has_left_descent(s) {
            v = v.left_mul_simple(s);
        }
    }
    v.is_identity()
}

/// Pairs `(w * s_ij, s_ij)` with `w * s_ij` covered by `w`.
pub fn lower_covers(w: &Permutation) -> Vec<(Permutation, Transposition)> {
    let n = w.window();
    let l = w.length();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let t = Transposition { i, j };
            let v = w.right_mul_transposition(t);
            if v.length() + 1 == l {
                out.push((v, t));
            }
        }
    }
    out
}

/// Is `v` covered by `w`?
pub fn is_cover(v: &Permutation, w: &Permutation) -> bool {
    let n = v.window().max(w.window());
    let (v, w) = (v.embed(n), w.embed(n));
    if v.length() + 1 != w.length() {
        return false;
    }
    let diff: Vec<usize> = (0..n).filter(|&i| v.map[i] != w.map[i]).collect();
    diff.len() == 2
}

pub fn longest_element(n: usize) -> Permutation {
    Permutation { map: (0..n).rev().collect() }
}

/// The ordering `s12, s13, s23, s14, s24, s34, ..., s1n, ..., s(n-1)n`.
pub fn reflection_ordering(n: usize) -> Vec<Transposition> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 2..=n {
        for i in 1..j {
            out.push(Transposition { i, j });
        }
    }
    out
}

/// Checks that `order` lists every transposition of `S_n` once and that
/// `s_ik` sits between `s_ij` and `s_jk` for all `i < j < k`.
pub fn is_reflection_ordering(order: &[Transposition], n: usize) -> bool {
    let mut pos = vec![vec![usize::MAX; n + 1]; n + 1];
    for (p, t) in order.iter().enumerate() {
        if t.j > n || pos[t.i][t.j] != usize::MAX {
            return false;
        }
        pos[t.i][t.j] = p;
    }
    if order.len() != n * n.saturating_sub(1) / 2 {
        return false;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (a, b, c) = (pos[i][j], pos[i][k], pos[j][k]);
                if !((a < b && b < c) || (c < b && b < a)) {
                    return false;
                }
            }
        }
    }
    true
}

/// The reflection ordering induced by a reduced word `s_{i1} ... s_{iN}` of
/// `w0`: `t_k = s_{iN} ... s_{i(k+1)} s_{ik} s_{i(k+1)} ... s_{iN}`.
pub fn reflection_ordering_from_word(word: &Word, n: usize) -> Result<Vec<Transposition>> {
    let letters = word.letters();
    let mut out = Vec::with_capacity(letters.len());
    // suffix = s_{i(k+1)} ... s_{iN}
    let mut suffix = Permutation::identity(n);
    for &i in letters.iter().rev() {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        // t = suffix^{-1} s_i suffix swaps suffix^{-1}(i) and suffix^{-1}(i+1)
        let inv = suffix.inverse();
        out.push(Transposition::new(inv.image(i), inv.image(i + 1))?);
        suffix = suffix.left_mul_simple(i);
    }
    out.reverse();
    Ok(out)
}

/// All position sets `J` (0-based, increasing) such that the subword of
/// `word` at `J` is a reduced word for `u`.
pub fn reduced_subwords(word: &Word, u: &Permutation) -> Vec<Vec<usize>> {
    let letters = word.letters();
    let n = letters
        .iter()
        .map(|&i| i + 1)
        .max()
        .unwrap_or(1)
        .max(u.window());
    let u = u.embed(n);
    let target = u.length();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(target);
    // `rest` = p^{-1} u where p is the product of the chosen prefix; a letter
    // may be appended iff it is a left descent of `rest`.
    fn go(
        letters: &[usize],
        start: usize,
        rest: &Permutation,
        remaining: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(chosen.clone());
            return;
        }
        if letters.len() - start < remaining {
            return;
        }
        for k in start..letters.len() {
            let s = letters[k];
            if rest.has_left_descent(s) {
                chosen.push(k);
                go(letters, k + 1, &rest.left_mul_simple(s), remaining - 1, chosen, out);
                chosen.pop();
            }
        }
    }
    go(letters, 0, &u, target, &mut chosen, &mut out);
    out
}

/// Every permutation of `S_n`, in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation { map: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(imgs: &[usize]) -> Permutation {
        Permutation::from_images(imgs).unwrap()
    }

    fn s(i: usize, n: usize) -> Permutation {
        Permutation::simple(i, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let w = p(&[3, 4, 1, 2]);
        assert_eq!(compose(&w, &Permutation::identity(4)), w);
        assert_eq!(compose(&s(2, 3), &s(1, 3)), p(&[3, 1, 2]));
        assert_eq!(compose(&s(1, 3), &s(2, 3)), p(&[2, 3, 1]));
    }

    #[test]
    fn compose_embeds_smaller_window() {
        let a = s(1, 2);
        let b = s(2, 3);
        assert_eq!(compose(&a, &b), p(&[2, 3, 1]));
    }

    #[test]
    fn inverse_examples() {
        assert!(inverse(&Permutation::identity(3)).is_identity());
        assert_eq!(inverse(&p(&[3, 1, 2])), p(&[2, 3, 1]));
        let t = Transposition::new(1, 3).unwrap().to_permutation(4);
        assert_eq!(inverse(&t), t);
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&Permutation::identity(5)), 0);
        assert_eq!(length(&longest_element(4)), 6);
        assert_eq!(length(&p(&[3, 4, 1, 2])), 4);
    }

    #[test]
    fn from_word_examples() {
        assert!(from_word(&Word(vec![]), 4).unwrap().is_identity());
        assert_eq!(from_word(&Word(vec![2, 1, 3, 2]), 4).unwrap(), p(&[3, 4, 1, 2]));
        assert!(from_word(&Word(vec![1, 1]), 2).unwrap().is_identity());
        assert!(matches!(
            from_word(&Word(vec![3]), 3),
            Err(Error::GeneratorOutOfRange { index: 3, n: 3 })
        ));
        assert!(from_word(&Word(vec![0]), 3).is_err());
    }

    #[test]
    fn reduced_words_examples() {
        assert_eq!(reduced_words(&Permutation::identity(3), ReducedWordMode::All), vec![Word(vec![])]);
        assert_eq!(
            reduced_words(&longest_element(3), ReducedWordMode::All),
            vec![Word(vec![1, 2, 1]), Word(vec![2, 1, 2])]
        );
        assert_eq!(
            reduced_words(&p(&[3, 4, 1, 2]), ReducedWordMode::One),
            vec![Word(vec![2, 1, 3, 2])]
        );
    }

    // brute force: all words of length l(w) over 1..n-1 whose product is w
    fn brute_reduced_words(w: &Permutation) -> Vec<Word> {
        let n = w.window();
        let l = w.length();
        let mut out = Vec::new();
        let total = (n - 1).pow(l as u32);
        for code in 0..total {
            let mut c = code;
            let mut letters = vec![0; l];
            for k in (0..l).rev() {
                letters[k] = c % (n - 1) + 1;
                c /= n - 1;
            }
            let word = Word(letters);
            if from_word(&word, n).unwrap() == *w {
                out.push(word);
            }
        }
        out
    }

    #[test]
    fn reduced_words_match_brute_force_s4() {
        for w in all_permutations(4) {
            let fast = all_reduced_words(&w);
            assert_eq!(fast, brute_reduced_words(&w), "{w}");
            assert_eq!(fast[0], canonical_word(&w));
            assert_eq!(*fast.last().unwrap(), max_word(&w));
        }
    }

    #[test]
    fn bruhat_examples() {
        let w = p(&[3, 4, 1, 2]);
        assert!(bruhat_leq(&Permutation::identity(4), &w));
        let s1s2 = compose(&s(1, 3), &s(2, 3));
        let s2s1 = compose(&s(2, 3), &s(1, 3));
        assert!(!bruhat_leq(&s1s2, &s2s1));
        assert!(bruhat_leq(&s(2, 4), &w));
    }

    #[test]
    fn lower_covers_examples() {
        assert!(lower_covers(&Permutation::identity(3)).is_empty());
        let covers = lower_covers(&s(1, 2));
        assert_eq!(covers.len(), 1);
        assert!(covers[0].0.is_identity());
        assert_eq!(covers[0].1, Transposition::new(1, 2).unwrap());

        let w = compose(&s(1, 3), &s(2, 3));
        let mut got: Vec<Permutation> = lower_covers(&w).into_iter().map(|(v, _)| v).collect();
        got.sort();
        // brute force over all transpositions
        let mut want = Vec::new();
        for i in 1..=3 {
            for j in i + 1..=3 {
                let v = w.right_mul_transposition(Transposition::new(i, j).unwrap());
                if v.length() + 1 == w.length() {
                    want.push(v);
                }
            }
        }
        want.sort();
        assert_eq!(got, want);
        assert!(got.contains(&s(1, 3)) && got.contains(&s(2, 3)));
    }

    #[test]
    fn longest_element_examples() {
        assert_eq!(longest_element(1), p(&[1]));
        assert_eq!(longest_element(3), p(&[3, 2, 1]));
        assert_eq!(longest_element(4).length(), 6);
    }

    #[test]
    fn reflection_ordering_examples() {
        let t = |i, j| Transposition::new(i, j).unwrap();
        assert_eq!(reflection_ordering(3), vec![t(1, 2), t(1, 3), t(2, 3)]);
        assert_eq!(
            reflection_ordering(4),
            vec![t(1, 2), t(1, 3), t(2, 3), t(1, 4), t(2, 4), t(3, 4)]
        );
        for n in 2..=7 {
            assert!(is_reflection_ordering(&reflection_ordering(n), n));
        }
        assert!(!is_reflection_ordering(&[t(1, 3), t(1, 2), t(2, 3)], 3));
    }

    #[test]
    fn reflection_orderings_from_reduced_words_of_w0() {
        for n in 2..=5 {
            for word in all_reduced_words(&longest_element(n)) {
                let ord = reflection_ordering_from_word(&word, n).unwrap();
                assert!(is_reflection_ordering(&ord, n), "{word}");
            }
        }
    }

    #[test]
    fn reduced_subwords_examples() {
        assert_eq!(reduced_subwords(&Word(vec![2, 1, 2]), &Permutation::identity(3)), vec![Vec::<usize>::new()]);
        let u = compose(&s(1, 4), &s(3, 4));
        assert_eq!(reduced_subwords(&Word(vec![3, 2, 1, 2, 3]), &u), vec![vec![0, 2], vec![2, 4]]);
        assert_eq!(reduced_subwords(&Word(vec![1, 1]), &s(1, 2)), vec![vec![0], vec![1]]);
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(5).len(), 120);
    }

    #[test]
    fn display_round_trip() {
        let w = p(&[3, 4, 1, 2]);
        assert_eq!(w.to_string(), "3412");
        assert_eq!(Word(vec![2, 1, 3, 2]).to_string(), "2,1,3,2");
    }
}
