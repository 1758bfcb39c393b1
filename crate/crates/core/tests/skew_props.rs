use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewdd::fkalg::{coproduct, pairing, x_w, FkElement};
use skewdd::fkcanon::fk_equal;
use skewdd::polyring::{poly_mul, random_polynomial, schubert, skew_direct_apply, Polynomial};
use skewdd::skew::{
    represent, schubert_expansion, skew, skew_explicit, skew_explicit_with_word, structure_constant,
    structure_constant_oracle, SkewMethod,
};
use skewdd::symgroup::{
    all_permutations, all_reduced_words, bruhat_leq, longest_element, Permutation, Transposition,
};

fn term_words(a: &FkElement) -> Vec<Vec<(usize, usize)>> {
    a.terms().map(|(w, _)| w.letters().iter().map(|g| (g.i(), g.j())).collect()).collect()
}

#[test]
fn methods_agree_in_fk3_and_fk4() {
    for n in 3..=4 {
        let perms = all_permutations(n);
        for w in &perms {
            for v in &perms {
                let reference = skew(w, v, SkewMethod::Explicit);
                if !bruhat_leq(v, w) {
                    for m in SkewMethod::ALL {
                        assert!(fk_equal(&skew(w, v, m), &FkElement::zero()).unwrap(), "{m}: w = {w}, v = {v}");
                    }
                    continue;
                }
                for m in SkewMethod::ALL {
                    assert!(fk_equal(&skew(w, v, m), &reference).unwrap(), "{m}: w = {w}, v = {v}");
                }
            }
        }
    }
}

#[test]
fn methods_agree_on_polynomials_in_s5() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let perms = all_permutations(5);
    let polys: Vec<Polynomial> = (0..3).map(|_| random_polynomial(&mut rng, 5, 7, 6)).collect();
    let mut checked = 0;
    while checked < 60 {
        let w = perms.choose(&mut rng).unwrap();
        let v = perms.choose(&mut rng).unwrap();
        if !bruhat_leq(v, w) {
            continue;
        }
        checked += 1;
        for p in &polys {
            let want = skew_direct_apply(w, v, p);
            for m in SkewMethod::ALL {
                assert_eq!(represent(&skew(w, v, m), p), want, "{m}: w = {w}, v = {v}");
            }
        }
    }
}

#[test]
fn explicit_terms_are_positive_and_homogeneous() {
    let mut largest = 0;
    for n in 3..=5 {
        let perms = all_permutations(n);
        for w in &perms {
            for v in perms.iter().filter(|v| bruhat_leq(v, w)) {
                let x = skew_explicit(w, v);
                assert!(!x.is_zero() && x.is_positive(), "w = {w}, v = {v}: {x}");
                let degree = v.inverse().compose(w);
                for (word, c) in x.terms() {
                    assert!(c > 0);
                    largest = largest.max(c);
                    assert_eq!(word.degree(), w.length() - v.length());
                    assert_eq!(word.sn_degree(n), degree, "w = {w}, v = {v}, term {word}");
                    let letters: BTreeSet<_> = word.letters().iter().collect();
                    assert_eq!(letters.len(), word.degree(), "repeated letter in {word}");
                }
            }
        }
    }
    println!("largest coefficient in S3..S5: {largest}");
}

#[test]
fn recurrence_is_positive_in_s5() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let perms = all_permutations(5);
    let mut checked = 0;
    while checked < 200 {
        let w = perms.choose(&mut rng).unwrap();
        let v = perms.choose(&mut rng).unwrap();
        if !bruhat_leq(v, w) {
            continue;
        }
        checked += 1;
        assert!(skew(w, v, SkewMethod::Recurrence).is_positive(), "w = {w}, v = {v}");
    }
}

#[test]
fn coproduct_components_are_skew_elements() {
    let perms = all_permutations(4);
    for w in &perms {
        let cop = coproduct(&x_w(w));
        for v in &perms {
            let probe = x_w(&v.inverse());
            let mut comp = FkElement::zero();
            for (a, b, c) in cop.terms() {
                if a.degree() == v.length() {
                    let k = pairing(&probe, &FkElement::from_word(a.clone()));
                    comp = comp.add(&FkElement::from_word(b.clone()).scale(c * k));
                }
            }
            assert!(fk_equal(&comp, &skew_explicit(w, v)).unwrap(), "w = {w}, v = {v}");
        }
    }
}

#[test]
fn explicit_formula_is_independent_of_the_word() {
    let perms = all_permutations(4);
    let w0 = longest_element(4);
    let mut pairs = 0;
    let mut same_multiset = 0;
    for w in &perms {
        for v in perms.iter().filter(|v| bruhat_leq(v, w)) {
            let words = all_reduced_words(&w0.compose(v));
            let reference = skew_explicit(w, v);
            let mut ref_terms = term_words(&reference);
            ref_terms.sort();
            let mut all_same = true;
            for word in &words {
                let x = skew_explicit_with_word(w, word, v);
                assert!(x.is_positive());
                assert!(fk_equal(&x, &reference).unwrap(), "w = {w}, v = {v}, word {word}");
                let mut terms = term_words(&x);
                terms.sort();
                all_same &= terms == ref_terms;
            }
            pairs += 1;
            same_multiset += usize::from(all_same);
        }
    }
    println!("{same_multiset} of {pairs} pairs give identical term lists for every reduced word");
}

#[test]
fn structure_constants_match_the_oracle_on_s4() {
    let perms = all_permutations(4);
    for u in &perms {
        for v in &perms {
            for w in perms.iter().filter(|w| w.length() == u.length() + v.length()) {
                let c = structure_constant(u, v, w).unwrap();
                assert!(c >= 0);
                assert_eq!(c, structure_constant_oracle(u, v, w).unwrap(), "u = {u}, v = {v}, w = {w}");
            }
        }
    }
}

#[test]
fn expansions_reconstruct_products() {
    let perms = all_permutations(4);
    for u in &perms {
        for v in &perms {
            let expansion = schubert_expansion(u, v).unwrap();
            let n = expansion.iter().map(|(w, _)| w.window()).max().unwrap_or(4).max(4);
            let product = poly_mul(&schubert(&u.embed(n)), &schubert(&v.embed(n)));
            let sum = expansion.iter().fold(Polynomial::zero(n), |acc, (w, c)| {
                assert!(*c > 0);
                acc.add(&schubert(&w.embed(n)).scale(&BigInt::from(*c)))
            });
            assert_eq!(sum, product, "u = {u}, v = {v}");
        }
    }
}

#[test]
fn monk_rule() {
    // S_{s_r} S_u = sum of S_{u t_ab} over covers with a <= r < b
    let perms = all_permutations(4);
    for r in 1..=3 {
        let s_r = Permutation::simple(r, 4).unwrap();
        for u in &perms {
            let mut got: Vec<(Vec<usize>, i64)> = schubert_expansion(&s_r, u)
                .unwrap()
                .into_iter()
                .map(|(w, c)| (w.embed(5).images(), c))
                .collect();
            let mut want = Vec::new();
            for a in 1..=r {
                for b in r + 1..=5 {
                    let ut = u.embed(5).right_mul_transposition(Transposition::new(a, b).unwrap());
                    if ut.length() == u.length() + 1 {
                        want.push((ut.images(), 1));
                    }
                }
            }
            got.sort();
            want.sort();
            assert_eq!(got, want, "r = {r}, u = {u}");
        }
    }
}
