//! Seeded property suites over the whole library, reported per property.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fkalg::{
    antipode, coproduct, delta_gen, delta_op, generators, nabla_gen, nabla_op, nilcoxeter_coordinates,
    pairing, pairing_bruhat, random_word, sbar, word_of_transpositions, x_w, FkElement, FkTensor, FkWord,
};
use crate::fkcanon::{self, canonical_form_raw, fk_equal, relation_basis};
use crate::polyring::{act, del_perm, poly_mul, random_polynomial, skew_direct_apply, Polynomial};
use crate::skew::{
    represent, skew_explicit, skew_pairing, skew_recurrence, skew_signed, structure_constant,
    structure_constant_oracle,
};
use crate::symgroup::{
    all_permutations, all_reduced_words, bruhat_leq, is_cover, is_reflection_ordering, longest_element,
    reflection_ordering, reflection_ordering_from_word, Permutation, Transposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Leibniz,
    Hopf,
    Positivity,
    Agreement,
    Canon,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "leibniz" => Suite::Leibniz,
            "hopf" => Suite::Hopf,
            "positivity" => Suite::Positivity,
            "agreement" => Suite::Agreement,
            "canon" => Suite::Canon,
            "all" => Suite::All,
            _ => return Err(Error::parse(0, format!("unknown suite '{s}'"))),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub n: usize,
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n: 4, max_degree: 6, samples: 200, seed: 42 }
    }
}

/// Outcome of one property.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), checks: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn from_results(name: impl Into<String>, results: Vec<(bool, String)>) -> Self {
        let mut c = Check::new(name);
        for (ok, what) in results {
            c.record(ok, || what);
        }
        c
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for note in &self.notes {
            writeln!(out, "{note}").unwrap();
        }
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(out, "{status} {} ({} checks, {} failures)", c.name, c.checks, c.failures).unwrap();
            if let Some(f) = &c.first_failure {
                write!(out, ": {f}").unwrap();
            }
            out.push('\n');
        }
        let total: usize = self.checks.iter().map(|c| c.checks).sum();
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(out, "{} properties, {total} checks, {failed} failing", self.checks.len()).unwrap();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "pass": self.passed(),
            "notes": self.notes,
            "properties": self.checks.iter().map(|c| json!({
                "name": c.name,
                "checks": c.checks,
                "failures": c.failures,
                "pass": c.passed(),
                "first_failure": c.first_failure,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    if cfg.n < 2 {
        return Err(Error::Domain("verification needs n >= 2".into()));
    }
    match suite {
        Suite::Leibniz => leibniz(cfg),
        Suite::Hopf => hopf(cfg),
        Suite::Positivity => positivity(cfg),
        Suite::Agreement => agreement(cfg),
        Suite::Canon => canon(cfg),
        Suite::All => {
            let mut report = Report::default();
            for s in [Suite::Leibniz, Suite::Hopf, Suite::Positivity, Suite::Agreement, Suite::Canon] {
                report.extend(run(s, cfg)?);
            }
            Ok(report)
        }
    }
}

fn limit(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ResourceLimit(what.to_string()))
    }
}

/// `d_w(PQ) = sum_v v(d_{w/v} P) d_v Q`.
pub fn leibniz(cfg: &VerifyConfig) -> Result<Report> {
    limit(cfg.n <= 5, "leibniz suite supports n <= 5")?;
    let n = cfg.n;
    let perms = all_permutations(n);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(Polynomial, Polynomial)> = (0..cfg.samples)
        .map(|_| (random_polynomial(&mut rng, n, 3, 4), random_polynomial(&mut rng, n, 3, 4)))
        .collect();
    let results = perms
        .par_iter()
        .flat_map_iter(|w| {
            pairs.iter().map(move |(p, q)| {
                let lhs = del_perm(w, &poly_mul(p, q));
                let mut rhs = Polynomial::zero(n);
                for v in all_permutations(n) {
                    let skew = skew_direct_apply(w, &v, p);
                    if skew.is_zero() {
                        continue;
                    }
                    rhs = rhs.add(&poly_mul(&act(&v, &skew), &del_perm(&v, q)));
                }
                (lhs == rhs, format!("w = {w}, P = {p}, Q = {q}"))
            })
        })
        .collect();
    Ok(Report { checks: vec![Check::from_results("leibniz identity", results)], notes: vec![] })
}

fn word_elem(w: &FkWord) -> FkElement {
    FkElement::from_word(w.clone())
}

fn is_subsequence(sub: &FkWord, word: &FkWord) -> bool {
    let mut it = word.letters().iter();
    sub.letters().iter().all(|g| it.any(|h| h == g))
}

fn sign_deg(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn twist(a: &FkElement, q: &FkWord, n: usize) -> FkElement {
    a.act(&q.sn_degree(n).inverse())
}

/// Hopf identities in the free model plus the Bruhat statements for `x_w`.
pub fn hopf(cfg: &VerifyConfig) -> Result<Report> {
    limit(cfg.n <= 6 && cfg.max_degree <= 8, "hopf suite supports n <= 6, degree <= 8")?;
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let word = |rng: &mut ChaCha8Rng, lo: usize| {
        let d = rng.gen_range(lo.min(cfg.max_degree)..=cfg.max_degree);
        random_word(rng, n, d)
    };
    let mut c_closed = Check::new("sbar equals signed reversed antipode");
    let mut c_prod = Check::new("sbar(PQ) = s_Q^-1(sbar P) sbar Q");
    let mut c_inv = Check::new("sbar is an involution");
    let mut c_copr = Check::new("coproduct of sbar is flipped sbar (x) sbar");
    let mut c_dn = Check::new("Delta_ab sbar = sbar nabla_ab");
    let mut c_adj = Check::new("sbar and reversal are adjoint");
    let mut c_sym = Check::new("pairing is symmetric");
    let mut c_van = Check::new("pairing vanishes off matching degrees");
    let mut c_comm = Check::new("Delta_P and nabla_Q commute");
    let mut c_sub = Check::new("coproduct first factors are subwords");
    let mut c_mult = Check::new("coproduct is a braided homomorphism");
    let mut c_dcop = Check::new("Delta_P and nabla_P through the coproduct");
    let mut c_madj = Check::new("Delta_P, nabla_P adjoint to multiplication");
    let mut c_anti = Check::new("antipode is a braided antihomomorphism");

    for _ in 0..cfg.samples {
        let p = word(&mut rng, 0);
        let q = word(&mut rng, 0);
        let (pe, qe) = (word_elem(&p), word_elem(&q));
        let sp = sbar(&pe);

        c_closed.record(sp == antipode(&pe).reverse().scale(sign_deg(p.degree())), || format!("P = {p}"));
        let pq = pe.multiply(&qe);
        c_prod.record(sbar(&pq) == twist(&sp, &q, n).multiply(&sbar(&qe)), || format!("P = {p}, Q = {q}"));
        c_inv.record(sbar(&sp) == pe, || format!("P = {p}"));
        let flipped = coproduct(&pe).map(|a| sbar(&word_elem(a)), |b| sbar(&word_elem(b))).swap();
        c_copr.record(coproduct(&sp) == flipped, || format!("P = {p}"));
        for g in generators(n) {
            let (a, b) = (g.i(), g.j());
            c_dn.record(delta_gen(a, b, &sp) == sbar(&nabla_gen(&pe, a, b)), || format!("P = {p}, ab = {a}{b}"));
        }

        // a same-degree partner built from P's letters, so pairings are often nonzero
        let mut letters: Vec<_> = p.letters().to_vec();
        for k in (1..letters.len()).rev() {
            letters.swap(k, rng.gen_range(0..=k));
        }
        let r = FkWord::new(letters).map(|w| word_elem(&w)).unwrap_or_default();
        let rq = if r.is_zero() { word_elem(&random_word(&mut rng, n, p.degree())) } else { r };
        c_adj.record(pairing(&sp, &rq) == pairing(&pe, &rq.reverse()), || format!("P = {p}, Q = {rq}"));
        c_sym.record(pairing(&pe, &rq) == pairing(&rq, &pe), || format!("P = {p}, Q = {rq}"));
        for (rw, _) in rq.terms() {
            let val = pairing(&pe, &word_elem(rw));
            let ok = val == 0
                || (p.degree() == rw.degree() && p.sn_degree(n) == rw.sn_degree(n).inverse());
            c_van.record(ok, || format!("P = {p}, Q = {rw}"));
        }

        let p1 = word(&mut rng, 1);
        let d2 = rng.gen_range(1..=2);
        let p2 = random_word(&mut rng, n, d2);
        let left = nabla_op(&delta_op(&p1, &qe), &p2);
        let right = delta_op(&p1, &nabla_op(&qe, &p2));
        c_comm.record(left == right, || format!("P1 = {p1}, P2 = {p2}, Q = {q}"));

        let cop = coproduct(&pe);
        c_sub.record(cop.terms().all(|(a, _, _)| is_subsequence(a, &p)), || format!("P = {p}"));
        c_mult.record(coproduct(&pq) == cop.braided_mul(&coproduct(&qe)), || format!("P = {p}, Q = {q}"));

        let ds = rng.gen_range(0..=p.degree().min(3));
        let short = random_word(&mut rng, n, ds);
        let mut via_d = FkElement::zero();
        let mut via_n = FkElement::zero();
        for (a, b, c) in cop.terms() {
            let ea = word_elem(a);
            let eb = word_elem(b);
            via_d = via_d.add(&eb.scale(c * pairing(&word_elem(&short), &ea)));
            via_n = via_n.add(&ea.scale(c * pairing(&eb, &word_elem(&short))));
        }
        c_dcop.record(
            via_d == delta_op(&short, &pe) && via_n == nabla_op(&pe, &short),
            || format!("P = {short}, Q = {p}"),
        );

        // <R, Delta_S(Q)> = <R S, Q> and <(Q) nabla_S, R> = <Q, S R>
        let sw = word_elem(&short);
        let r_deg = p.degree() - short.degree();
        let rr = word_elem(&random_word(&mut rng, n, r_deg));
        let ok = pairing(&rr, &delta_op(&short, &pe)) == pairing(&rr.multiply(&sw), &pe)
            && pairing(&nabla_op(&pe, &short), &rr) == pairing(&pe, &sw.multiply(&rr));
        c_madj.record(ok, || format!("P = {p}, S = {short}, R = {rr}"));

        c_anti.record(
            antipode(&pq) == antipode(&qe).multiply(&twist(&antipode(&pe), &q, n)),
            || format!("P = {p}, Q = {q}"),
        );
    }

    let mut report = Report {
        checks: vec![
            c_closed, c_prod, c_inv, c_copr, c_dn, c_adj, c_sym, c_van, c_comm, c_sub, c_mult, c_dcop, c_madj,
            c_anti,
        ],
        notes: vec![],
    };
    report.extend(bruhat(cfg, &mut rng)?);
    Ok(report)
}

fn nil_equals(a: &FkElement, target: Option<&Permutation>, n: usize) -> bool {
    match nilcoxeter_coordinates(a, n) {
        None => false,
        Some(coords) => match target {
            None => coords.is_empty(),
            Some(v) => coords.len() == 1 && coords.get(&v.embed(n.max(v.window()))) == Some(&1),
        },
    }
}

/// Covers under `nabla`, saturated chains and the letters of `sbar(x_w)`.
pub fn bruhat(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let n = cfg.n.min(4);
    let perms = all_permutations(n);
    let mut c_cover = Check::new(format!("(x_w) nabla_ij = x_(w s_ij) on covers, S{n}"));
    let mut c_fact = Check::new(format!("(x_w) nabla_v = x_(w v) on reduced factorizations, S{n}"));
    let mut c_dual = Check::new(format!("<x_v, x_w> = [w = v^-1], S{n}"));
    for w in &perms {
        let xw = x_w(w);
        for g in generators(n) {
            let t = Transposition::new(g.i(), g.j()).unwrap();
            let ws = w.right_mul_transposition(t);
            let target = is_cover(&ws, w).then_some(&ws);
            c_cover.record(nil_equals(&nabla_gen(&xw, g.i(), g.j()), target, n), || format!("w = {w}, t = {t}"));
        }
        for v in &perms {
            let wv = w.compose(v);
            let target = (wv.length() + v.length() == w.length()).then_some(&wv);
            let got = nabla_op(&xw, &crate::fkalg::nilcoxeter_word(v));
            c_fact.record(nil_equals(&got, target, n), || format!("w = {w}, v = {v}"));
            let expect = i64::from(*w == v.inverse());
            c_dual.record(pairing(&x_w(v), &xw) == expect, || format!("v = {v}, w = {w}"));
        }
    }

    // every square-free word of degree l(w) against every w
    let gens = generators(n);
    let results: Vec<(bool, String)> = perms
        .par_iter()
        .flat_map_iter(|w| {
            let xw = x_w(w);
            let mut words = vec![Vec::new()];
            for _ in 0..w.length() {
                words = words
                    .into_iter()
                    .flat_map(|prefix: Vec<_>| {
                        let last = prefix.last().copied();
                        gens.iter().filter(move |&&g| last != Some(g)).map(move |&g| {
                            let mut next = prefix.clone();
                            next.push(g);
                            next
                        })
                    })
                    .collect();
            }
            words.into_iter().map(move |letters| {
                let p = FkWord::new(letters).unwrap();
                let ok = pairing(&xw, &word_elem(&p)) == pairing_bruhat(w, &p);
                (ok, format!("w = {w}, P = {p}"))
            })
        })
        .collect();
    let c_chain = Check::from_results(format!("<x_w, P> by saturated chains, S{n}"), results);

    let mut c_inv = Check::new("sbar(x_w) is positive on the inversion set");
    let big = cfg.n.max(5);
    let mut sample: Vec<Permutation> = perms.clone();
    for _ in 0..cfg.samples {
        let mut imgs: Vec<usize> = (1..=big).collect();
        for k in (1..big).rev() {
            imgs.swap(k, rng.gen_range(0..=k));
        }
        sample.push(Permutation::from_images(&imgs).unwrap());
    }
    for w in &sample {
        let s = sbar(&x_w(w));
        let mut letters: Vec<(usize, usize)> = s
            .terms()
            .flat_map(|(word, _)| word.letters().iter().map(|g| (g.i(), g.j())).collect::<Vec<_>>())
            .collect();
        letters.sort_unstable();
        let mut inversions: Vec<(usize, usize)> = w.inversions().iter().map(|t| (t.i(), t.j())).collect();
        inversions.sort_unstable();
        let ok = s.num_terms() == 1 && s.is_positive() && letters == inversions;
        c_inv.record(ok, || format!("w = {w}: {s}"));
    }
    Ok(Report { checks: vec![c_cover, c_fact, c_dual, c_chain, c_inv], notes: vec![] })
}

fn bruhat_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let perms = all_permutations(n);
    let mut out = Vec::new();
    for w in &perms {
        for v in &perms {
            if bruhat_leq(v, w) {
                out.push((w.clone(), v.clone()));
            }
        }
    }
    out
}

fn no_repeated_letter(a: &FkElement) -> bool {
    a.terms().all(|(w, _)| {
        let mut seen = w.letters().to_vec();
        seen.sort_unstable();
        seen.windows(2).all(|p| p[0] != p[1])
    })
}

/// Positivity, degrees and the no-repeat property of the positive formulas.
pub fn positivity(cfg: &VerifyConfig) -> Result<Report> {
    limit(cfg.n <= 5, "positivity suite supports n <= 5")?;
    let pairs = bruhat_pairs(cfg.n);
    let results: Vec<[(bool, String); 3]> = pairs
        .par_iter()
        .map(|(w, v)| {
            let e = skew_explicit(w, v);
            let r = skew_recurrence(w, v);
            let what = format!("w = {w}, v = {v}");
            let deg = w.length() - v.length();
            let positive = !e.is_zero() && e.is_positive() && !r.is_zero() && r.is_positive();
            let graded = [&e, &r].iter().all(|x| x.terms().all(|(t, _)| t.degree() == deg));
            [(positive, what.clone()), (graded, what.clone()), (no_repeated_letter(&e), what)]
        })
        .collect();
    let mut checks = vec![
        Check::new(format!("explicit and recurrence positive, all v <= w in S{}", cfg.n)),
        Check::new("every term has degree l(w) - l(v)"),
        Check::new("no letter repeats in explicit terms"),
    ];
    for row in results {
        for (c, (ok, what)) in checks.iter_mut().zip(row) {
            c.record(ok, || what);
        }
    }
    let notes = vec![format!("{} pairs v <= w in S{}", pairs.len(), cfg.n)];
    Ok(Report { checks, notes })
}

/// The four constructions agree: exactly in `FK_n` for `n <= 4`, through the
/// polynomial representation above that.
pub fn agreement(cfg: &VerifyConfig) -> Result<Report> {
    limit(cfg.n <= 5, "agreement suite supports n <= 5")?;
    let n = cfg.n;
    let pairs = bruhat_pairs(n);
    let exact = n <= fkcanon::limits().max_n;
    let mut report = Report::default();
    if exact {
        let results: Vec<Result<[(bool, String); 4]>> = pairs
            .par_iter()
            .map(|(w, v)| {
                let s = skew_signed(w, v);
                let p = skew_pairing(w, v);
                let e = skew_explicit(w, v);
                let r = skew_recurrence(w, v);
                let what = format!("w = {w}, v = {v}");
                Ok([
                    (fk_equal(&s, &p)?, what.clone()),
                    (fk_equal(&s, &e)?, what.clone()),
                    (fk_equal(&e, &r)?, what.clone()),
                    (e == r, what),
                ])
            })
            .collect();
        let mut checks = vec![
            Check::new(format!("signed = pairing in FK_{n}")),
            Check::new(format!("signed = explicit in FK_{n}")),
            Check::new(format!("explicit = recurrence in FK_{n}")),
            Check::new("explicit and recurrence identical as word sums"),
        ];
        for row in results {
            for (c, (ok, what)) in checks.iter_mut().zip(row?) {
                c.record(ok, || what);
            }
        }
        report.checks.extend(checks);

        // coproduct components: pair the left factor of Delta(x_w) against x_{v^-1}
        let perms = all_permutations(n);
        let results: Vec<Result<(bool, String)>> = perms
            .par_iter()
            .flat_map_iter(|w| {
                let cop: FkTensor = coproduct(&x_w(w));
                perms.clone().into_iter().map(move |v| {
                    let probe = x_w(&v.inverse());
                    let mut comp = FkElement::zero();
                    for (a, b, c) in cop.terms() {
                        if a.degree() == v.length() {
                            let k = pairing(&probe, &word_elem(a));
                            comp = comp.add(&word_elem(b).scale(c * k));
                        }
                    }
                    Ok((fk_equal(&comp, &skew_explicit(w, &v))?, format!("w = {w}, v = {v}")))
                })
            })
            .collect();
        let results = results.into_iter().collect::<Result<Vec<_>>>()?;
        report.checks.push(Check::from_results("coproduct components are x_(w/v)", results));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let polys: Vec<Polynomial> = (0..4).map(|_| random_polynomial(&mut rng, n, 6, 5)).collect();
        let step = (pairs.len() / cfg.samples.max(1)).max(1);
        let chosen: Vec<_> = pairs.iter().step_by(step).collect();
        let results = chosen
            .par_iter()
            .map(|(w, v)| {
                let e = skew_explicit(w, v);
                let forms = [skew_signed(w, v), skew_pairing(w, v), skew_recurrence(w, v)];
                let ok = polys.iter().all(|p| {
                    let want = represent(&e, p);
                    skew_direct_apply(w, v, p) == want && forms.iter().all(|f| represent(f, p) == want)
                });
                (ok, format!("w = {w}, v = {v}"))
            })
            .collect();
        report.checks.push(Check::from_results(format!("all methods agree on polynomials, S{n}"), results));
    }

    let perms = all_permutations(n.min(4));
    let triples: Vec<_> = perms
        .iter()
        .flat_map(|u| perms.iter().map(move |v| (u, v)))
        .flat_map(|(u, v)| {
            perms.iter().filter(move |w| u.length() + v.length() == w.length()).map(move |w| (u, v, w))
        })
        .collect();
    let results: Vec<Result<(bool, String)>> = triples
        .par_iter()
        .map(|(u, v, w)| {
            let c = structure_constant(u, v, w)?;
            let o = structure_constant_oracle(u, v, w)?;
            Ok((c == o && c >= 0, format!("u = {u}, v = {v}, w = {w}: {c} vs {o}")))
        })
        .collect();
    let results = results.into_iter().collect::<Result<Vec<_>>>()?;
    report.checks.push(Check::from_results("structure constants match the oracle and are >= 0", results));
    Ok(report)
}

/// Dimensions, ideal membership and identities decided by canonical forms.
pub fn canon(cfg: &VerifyConfig) -> Result<Report> {
    let n = cfg.n;
    let lim = fkcanon::limits();
    limit(n <= lim.max_n, &format!("canon suite needs n <= {}", lim.max_n))?;
    let top = cfg.max_degree.min(lim.max_degree).min(n * (n - 1) / 2 + 1);
    let mut report = Report::default();
    let dims: Vec<usize> = (0..=top).map(|d| fkcanon::graded_dimension(n, d)).collect::<Result<_>>()?;
    report.notes.push(
        dims.iter()
            .enumerate()
            .map(|(d, k)| format!("dim({n},{d})={k}"))
            .collect::<Vec<_>>()
            .join(" "),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut c_ideal = Check::new("canonical form kills random ideal elements");
    let max_rel = top.clamp(2, 5);
    let bases: Vec<_> = (2..=max_rel).map(|d| relation_basis(n, d)).collect();
    for _ in 0..cfg.samples {
        let d = rng.gen_range(0..bases.len());
        let mut elem = std::collections::BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4) {
            let r = &bases[d][rng.gen_range(0..bases[d].len())];
            let k: i64 = rng.gen_range(-3..=3);
            for (w, c) in r {
                *elem.entry(w.clone()).or_insert(0) += k * c;
            }
        }
        elem.retain(|_, c| *c != 0);
        let cf = canonical_form_raw(n, &elem)?;
        c_ideal.record(cf.is_zero(), || format!("{elem:?} -> {cf}"));
    }
    report.checks.push(c_ideal);

    let w0 = longest_element(n);
    let xw0 = x_w(&w0);
    let mut c_refl = Check::new("x_w0 equals products along reflection orderings");
    let fixed = reflection_ordering(n);
    c_refl.record(
        is_reflection_ordering(&fixed, n) && fk_equal(&xw0, &word_of_transpositions(&fixed))?,
        || "fixed ordering".into(),
    );
    let words = all_reduced_words(&w0);
    for _ in 0..cfg.samples.min(50) {
        let word = &words[rng.gen_range(0..words.len())];
        let order = reflection_ordering_from_word(word, n)?;
        let ok = is_reflection_ordering(&order, n) && fk_equal(&xw0, &word_of_transpositions(&order))?;
        c_refl.record(ok, || format!("word {word}"));
    }
    report.checks.push(c_refl);

    let mut c_words = Check::new(format!("x_w independent of the reduced word, S{n}"));
    for w in all_permutations(n) {
        let xw = x_w(&w);
        for word in all_reduced_words(&w) {
            let alt = crate::fkalg::nilcoxeter_from_letters(word.letters());
            c_words.record(fk_equal(&xw, &alt)?, || format!("w = {w}, word {word}"));
        }
    }
    report.checks.push(c_words);
    Ok(report)
}
