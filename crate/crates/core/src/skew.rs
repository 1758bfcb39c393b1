//! The skew elements `x_{w/v}` of `FK_n` by four methods, their action on
//! polynomials, and Schubert structure constants.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fkalg::{delta_op, nilcoxeter_word, x_w, FkElement, FkWord, Gen};
use crate::polyring::{constant_term, del_perm, divided_difference, poly_mul, schubert, Polynomial};
use crate::symgroup::{
    all_permutations, bruhat_leq, canonical_word, longest_element, max_word, reduced_subwords, Permutation,
    Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkewMethod {
    Signed,
    Pairing,
    Explicit,
    Recurrence,
}

impl SkewMethod {
    pub const ALL: [SkewMethod; 4] =
        [SkewMethod::Signed, SkewMethod::Pairing, SkewMethod::Explicit, SkewMethod::Recurrence];
}

impl fmt::Display for SkewMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SkewMethod::Signed => "signed",
            SkewMethod::Pairing => "pairing",
            SkewMethod::Explicit => "explicit",
            SkewMethod::Recurrence => "recurrence",
        })
    }
}

impl FromStr for SkewMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "signed" => Ok(SkewMethod::Signed),
            "pairing" => Ok(SkewMethod::Pairing),
            "explicit" => Ok(SkewMethod::Explicit),
            "recurrence" => Ok(SkewMethod::Recurrence),
            _ => Err(Error::parse(0, format!("unknown method '{s}'"))),
        }
    }
}

/// A request for `x_{w/v}` in a common window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewQuery {
    pub n: usize,
    pub w: Permutation,
    pub v: Permutation,
    pub method: SkewMethod,
}

impl SkewQuery {
    pub fn new(w: &Permutation, v: &Permutation, method: SkewMethod) -> Self {
        let n = w.window().max(v.window());
        SkewQuery { n, w: w.embed(n), v: v.embed(n), method }
    }

    pub fn run(&self) -> FkElement {
        skew(&self.w, &self.v, self.method)
    }
}

pub fn skew(w: &Permutation, v: &Permutation, method: SkewMethod) -> FkElement {
    match method {
        SkewMethod::Signed => skew_signed(w, v),
        SkewMethod::Pairing => skew_pairing(w, v),
        SkewMethod::Explicit => skew_explicit(w, v),
        SkewMethod::Recurrence => skew_recurrence(w, v),
    }
}

fn common(w: &Permutation, v: &Permutation) -> (Permutation, Permutation) {
    let n = w.window().max(v.window());
    (w.embed(n), v.embed(n))
}

fn signed_letter(a: usize, b: usize) -> (Gen, i64) {
    Gen::signed(a, b).expect("distinct indices")
}

/// `v^{-1} sum_J phi_J` over the canonical word of `w`, with the simple
/// reflections collected to the left so only `d_ab` letters remain.
pub fn skew_signed(w: &Permutation, v: &Permutation) -> FkElement {
    let (w, v) = common(w, v);
    let word = canonical_word(&w);
    let letters = word.letters();
    let mut out = FkElement::zero();
    for positions in reduced_subwords(&word, &v) {
        // pi d_a = d_{pi(a) pi(a+1)} pi
        let mut pi = v.inverse();
        let mut sign = 1;
        let mut gens = Vec::with_capacity(letters.len() - positions.len());
        let mut next = 0;
        for (k, &a) in letters.iter().enumerate() {
            if next < positions.len() && positions[next] == k {
                next += 1;
                pi = pi.right_mul_simple(a);
            } else {
                let (g, s) = signed_letter(pi.image(a), pi.image(a + 1));
                gens.push(g);
                sign *= s;
            }
        }
        debug_assert!(pi.is_identity());
        if let Some(fw) = FkWord::new(gens) {
            out.add_term(fw, sign);
        }
    }
    out
}

/// `Delta_{v^{-1}}(x_w)`.
pub fn skew_pairing(w: &Permutation, v: &Permutation) -> FkElement {
    let (w, v) = common(w, v);
    delta_op(&nilcoxeter_word(&v.inverse()), &x_w(&w))
}

/// Positive formula along the lexicographically largest reduced word of
/// `w0 v`.
pub fn skew_explicit(w: &Permutation, v: &Permutation) -> FkElement {
    let (w, v) = common(w, v);
    let w0 = longest_element(w.window());
    skew_explicit_with_word(&w, &max_word(&w0.compose(&v)), &v)
}

/// Positive formula along a given reduced word `i_1 ... i_l` of `w0 v`: with
/// `w_k = s_{i_k} ... s_{i_l}` and `y_k = w_{k+1}^{-1}(x_{i_k, i_k+1})`, sums
/// `prod_{k not in J} y_k` over positions `J` spelling a reduced word of `w0 w`.
pub fn skew_explicit_with_word(w: &Permutation, word: &Word, v: &Permutation) -> FkElement {
    let (w, v) = common(w, v);
    let n = w.window().max(word.letters().iter().map(|&i| i + 1).max().unwrap_or(0));
    let (w, _v) = (w.embed(n), v.embed(n));
    let letters = word.letters();
    let mut ys = vec![Gen::new(1, 2); letters.len()];
    let mut tail = Permutation::identity(n);
    for k in (0..letters.len()).rev() {
        let inv = tail.inverse();
        let (g, s) = signed_letter(inv.image(letters[k]), inv.image(letters[k] + 1));
        debug_assert_eq!(s, 1, "word is not reduced");
        ys[k] = g;
        tail = tail.left_mul_simple(letters[k]);
    }
    let w0 = longest_element(n);
    let mut out = FkElement::zero();
    for positions in reduced_subwords(word, &w0.compose(&w)) {
        let mut gens = Vec::with_capacity(letters.len() - positions.len());
        let mut next = 0;
        for (k, &y) in ys.iter().enumerate() {
            if next < positions.len() && positions[next] == k {
                next += 1;
            } else {
                gens.push(y);
            }
        }
        if let Some(fw) = FkWord::new(gens) {
            out.add_term(fw, 1);
        }
    }
    out
}

/// Positive recurrence, always peeling the smallest `i` with
/// `v^{-1}(i) < v^{-1}(i+1)`.
pub fn skew_recurrence(w: &Permutation, v: &Permutation) -> FkElement {
    let (w, v) = common(w, v);
    let mut memo = HashMap::new();
    recurrence(&w, &v, &mut memo)
}

fn recurrence(
    w: &Permutation,
    v: &Permutation,
    memo: &mut HashMap<(Permutation, Permutation), FkElement>,
) -> FkElement {
    if v.length() >= w.length() {
        return if v == w { FkElement::one() } else { FkElement::zero() };
    }
    if !bruhat_leq(v, w) {
        return FkElement::zero();
    }
    let key = (w.clone(), v.clone());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let vinv = v.inverse();
    let i = (1..v.window())
        .find(|&i| vinv.image(i) < vinv.image(i + 1))
        .expect("v shorter than w is not longest");
    let (a, b) = (vinv.image(i), vinv.image(i + 1));
    let v1 = v.left_mul_simple(i);
    let w1 = w.left_mul_simple(i);
    let xab = FkElement::from_word(FkWord::new(vec![Gen::new(a, b)]).unwrap());
    let mut out = xab.multiply(&recurrence(w, &v1, memo));
    if w1.length() == w.length() + 1 {
        out = out.add(&recurrence(&w1, &v1, memo));
    }
    memo.insert(key, out.clone());
    out
}

/// Each word `x_{i1 j1} ... x_{ik jk}` acts as `d_{i1 j1} ... d_{ik jk}`.
pub fn represent(a: &FkElement, p: &Polynomial) -> Polynomial {
    let n = p.window().max(a.max_index());
    let p = p.embed(n);
    let mut out = Polynomial::zero(n);
    for (word, c) in a.terms() {
        let mut cur = p.clone();
        for g in word.letters().iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = divided_difference(g.i(), g.j(), &cur);
        }
        out = out.add(&cur.scale(&BigInt::from(c)));
    }
    out
}

fn check_lengths(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<usize> {
    let lhs = u.length() + v.length();
    let rhs = w.length();
    if lhs != rhs {
        return Err(Error::LengthMismatch { lhs, rhs });
    }
    Ok(u.window().max(v.window()).max(w.window()))
}

fn to_i64(c: BigInt) -> Result<i64> {
    c.to_i64().ok_or(Error::Overflow("structure constant"))
}

/// `c_{uv}^w` as the constant `x_{w/v} . S_u`.
pub fn structure_constant(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<i64> {
    let n = check_lengths(u, v, w)?;
    let value = represent(&skew_explicit(&w.embed(n), &v.embed(n)), &schubert(&u.embed(n)));
    let c = value
        .as_constant()
        .ok_or_else(|| Error::Domain(format!("x_(w/v) applied to S_u is not constant: {value}")))?;
    to_i64(c)
}

/// `c_{uv}^w` as the constant term of `d_w (S_u S_v)`.
pub fn structure_constant_oracle(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<i64> {
    let n = check_lengths(u, v, w)?;
    let product = poly_mul(&schubert(&u.embed(n)), &schubert(&v.embed(n)));
    to_i64(constant_term(&del_perm(&w.embed(n), &product)))
}

/// `S_u S_v = sum_w c_{uv}^w S_w`, found over the smallest window from
/// `max(window) ` upward in which the expansion is exact.
pub fn schubert_expansion(u: &Permutation, v: &Permutation) -> Result<Vec<(Permutation, i64)>> {
    let base = u.support_window().max(v.support_window()).max(1);
    let target = u.length() + v.length();
    let max_window = base + u.length().max(v.length()) + 1;
    let shrink = |p: &Permutation| {
        Permutation::from_images(&p.images()[..p.support_window()]).expect("prefix of a permutation fixing the rest")
    };
    let (u, v) = (shrink(u), shrink(v));
    for n in base..=max_window.max(base + 1) {
        let (u_n, v_n) = (u.embed(n), v.embed(n));
        let product = poly_mul(&schubert(&u_n), &schubert(&v_n));
        let mut terms = Vec::new();
        let mut sum = Polynomial::zero(n);
        for w in all_permutations(n) {
            if w.length() != target {
                continue;
            }
            let c = structure_constant(&u_n, &v_n, &w)?;
            if c != 0 {
                sum = sum.add(&schubert(&w).scale(&BigInt::from(c)));
                terms.push((w, c));
            }
        }
        if sum == product {
            return Ok(terms);
        }
    }
    Err(Error::Domain(format!("no exact Schubert expansion of S_{u} S_{v} up to window {max_window}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fkalg::parse_element;
    use crate::symgroup::compose;

    fn e(s: &str) -> FkElement {
        parse_element(s).unwrap()
    }

    fn perm(imgs: &[usize]) -> Permutation {
        Permutation::from_images(imgs).unwrap()
    }

    fn s(i: usize, n: usize) -> Permutation {
        Permutation::simple(i, n).unwrap()
    }

    #[test]
    fn signed_examples() {
        let w = perm(&[3, 4, 1, 2]);
        assert_eq!(skew_signed(&w, &s(2, 4)), e("x(1,2)x(3,4)x(2,3) - x(2,3)x(1,3)x(2,4)"));
        assert_eq!(skew_signed(&w, &w), FkElement::one());
        assert!(skew_signed(&s(1, 3), &s(2, 3)).is_zero());
    }

    #[test]
    fn pairing_examples() {
        let s1s2 = compose(&s(1, 3), &s(2, 3));
        assert_eq!(skew_pairing(&s1s2, &s(2, 3)), e("x(1,3)"));
        let w = perm(&[3, 1, 4, 2]);
        assert_eq!(skew_pairing(&w, &Permutation::identity(4)), x_w(&w));
        assert!(skew_pairing(&s(1, 3), &s(2, 3)).is_zero());
    }

    #[test]
    fn explicit_examples() {
        let w = perm(&[3, 4, 1, 2]);
        assert_eq!(skew_explicit(&w, &s(2, 4)), e("x(1,2)x(2,4)x(3,4) + x(1,3)x(1,2)x(2,4)"));
        assert_eq!(skew_explicit(&w, &w), FkElement::one());
        assert_eq!(max_word(&longest_element(4).compose(&s(2, 4))), Word::new(vec![3, 2, 1, 2, 3]));
    }

    #[test]
    fn recurrence_examples() {
        let w = perm(&[3, 4, 1, 2]);
        assert_eq!(skew_recurrence(&w, &s(2, 4)), e("x(1,2)x(2,4)x(3,4) + x(1,3)x(1,2)x(2,4)"));
        assert_eq!(skew_recurrence(&w, &w), FkElement::one());
        let s1s2 = compose(&s(1, 3), &s(2, 3));
        assert_eq!(skew_recurrence(&s1s2, &s(1, 3)), e("x(2,3)"));
    }

    #[test]
    fn represent_examples() {
        let x1 = Polynomial::var(1, 3);
        assert_eq!(represent(&e("x(1,3)"), &x1), Polynomial::one(3));
        assert_eq!(represent(&FkElement::one(), &x1), x1);
    }

    #[test]
    fn structure_constant_examples() {
        let v = perm(&[2, 3, 1]);
        assert_eq!(structure_constant(&Permutation::identity(3), &v, &v), Ok(1));
        let w = perm(&[3, 1, 2]);
        assert_eq!(structure_constant(&s(1, 3), &s(1, 3), &w), Ok(1));
        assert_eq!(
            structure_constant(&s(1, 3), &s(2, 3), &w),
            structure_constant_oracle(&s(1, 3), &s(2, 3), &w)
        );
        let id = Permutation::identity(3);
        assert_eq!(structure_constant_oracle(&id, &id, &id), Ok(1));
        assert_eq!(structure_constant_oracle(&s(1, 3), &s(1, 3), &w), Ok(1));
        assert_eq!(
            structure_constant(&s(1, 3), &s(1, 3), &s(1, 3)),
            Err(Error::LengthMismatch { lhs: 2, rhs: 1 })
        );
    }

    #[test]
    fn expansion_of_s1_squared() {
        let terms = schubert_expansion(&s(1, 2), &s(1, 2)).unwrap();
        assert_eq!(terms, vec![(perm(&[3, 1, 2]), 1)]);
    }
}
