//! Canonical forms in `FK_n`, degree by degree.
//!
//! Words of degree `d` are indexed by their letter sequence read as base-`m`
//! digits, `m = n(n-1)/2`, with generators in lexicographic order. Degree 2 is
//! the span of all words modulo the quadratic relation instances. For `d >= 3`
//! a word is rewritten through the normal form of its suffix or of its prefix;
//! words where both routes apply contribute their difference as a relation.
//! Relations are kept as a reduced echelon form with the largest word as pivot,
//! so each word has a unique residue supported on normal words.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fkalg::{generators, FkElement, FkWord, Gen};

/// A word that may contain squares, with its coefficient map.
pub type RawElement = BTreeMap<Vec<Gen>, i64>;

type SparseVec = Vec<(u32, i64)>;

/// Hard bounds on the window and degree handled by the free functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Limits {
    pub max_n: usize,
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 4, max_degree: 6 }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits { max_n: usize::MAX, max_degree: usize::MAX }
    }

    fn check(&self, n: usize, d: usize) -> Result<()> {
        if n > self.max_n || d > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "FK_{n} in degree {d} exceeds limits n <= {}, d <= {}",
                self.max_n, self.max_degree
            )));
        }
        Ok(())
    }
}

fn global_limits() -> &'static RwLock<Limits> {
    static LIMITS: OnceLock<RwLock<Limits>> = OnceLock::new();
    LIMITS.get_or_init(|| RwLock::new(Limits::default()))
}

/// Current limits for [`canonical_form`], [`fk_equal`] and [`graded_dimension`].
pub fn limits() -> Limits {
    *global_limits().read().unwrap()
}

pub fn set_limits(l: Limits) {
    *global_limits().write().unwrap() = l;
}

/// Generators, words and their indices for one window.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    n: usize,
    gens: Vec<Gen>,
    index_of: HashMap<Gen, u32>,
}

impl GradedBasis {
    pub fn new(n: usize) -> Self {
        let gens = generators(n);
        let index_of = gens.iter().enumerate().map(|(k, &g)| (g, k as u32)).collect();
        GradedBasis { n, gens, index_of }
    }

    pub fn window(&self) -> usize {
        self.n
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn num_words(&self, d: usize) -> Result<usize> {
        let m = self.gens.len();
        let mut total: usize = 1;
        for _ in 0..d {
            total = total
                .checked_mul(m)
                .filter(|&t| t < u32::MAX as usize)
                .ok_or_else(|| Error::ResourceLimit(format!("too many words in FK_{} degree {d}", self.n)))?;
        }
        Ok(total)
    }

    pub fn index(&self, letters: &[Gen]) -> Option<u32> {
        let m = self.gens.len() as u64;
        let mut idx: u64 = 0;
        for g in letters {
            idx = idx * m + u64::from(*self.index_of.get(g)?);
        }
        u32::try_from(idx).ok()
    }

    pub fn letters(&self, mut idx: u32, d: usize) -> Vec<Gen> {
        let m = self.gens.len() as u32;
        let mut out = vec![self.gens.first().copied().unwrap_or_else(|| Gen::new(1, 2)); d];
        for slot in out.iter_mut().rev() {
            *slot = self.gens[(idx % m) as usize];
            idx /= m;
        }
        out
    }

    /// Degree-2 relation instances: squares, commutators of disjoint pairs and
    /// two three-term relations per triple.
    pub fn quadratic_relations(&self) -> Vec<RawElement> {
        let n = self.n;
        let g = |i, j| Gen::new(i, j);
        let mut out = Vec::new();
        for &a in &self.gens {
            out.push(BTreeMap::from([(vec![a, a], 1)]));
        }
        for (k, &a) in self.gens.iter().enumerate() {
            for &b in &self.gens[k + 1..] {
                let disjoint = a.i() != b.i() && a.i() != b.j() && a.j() != b.i() && a.j() != b.j();
                if disjoint {
                    out.push(BTreeMap::from([(vec![a, b], 1), (vec![b, a], -1)]));
                }
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    // x_ij x_jk + x_jk x_ki + x_ki x_ij
                    out.push(BTreeMap::from([
                        (vec![g(i, j), g(j, k)], 1),
                        (vec![g(j, k), g(i, k)], -1),
                        (vec![g(i, k), g(i, j)], -1),
                    ]));
                    // x_ji x_ik + x_ik x_kj + x_kj x_ji
                    out.push(BTreeMap::from([
                        (vec![g(i, j), g(i, k)], -1),
                        (vec![g(i, k), g(j, k)], -1),
                        (vec![g(j, k), g(i, j)], 1),
                    ]));
                }
            }
        }
        out
    }

    fn relation_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for r in self.quadratic_relations() {
            for (w, c) in r {
                for g in w {
                    hasher.update(format!("{g}"));
                }
                hasher.update(format!(":{c};"));
            }
            hasher.update(b"|");
        }
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// All `u r v` with `r` a quadratic relation and `deg u + 2 + deg v = d`.
pub fn relation_basis(n: usize, d: usize) -> Vec<RawElement> {
    assert!(d >= 2, "relations start in degree 2");
    let basis = GradedBasis::new(n);
    let rels = basis.quadratic_relations();
    let m = basis.num_generators();
    let mut out = Vec::new();
    for left in 0..=d - 2 {
        let right = d - 2 - left;
        let lw = m.pow(left as u32);
        let rw = m.pow(right as u32);
        for u in 0..lw {
            let u = basis.letters(u as u32, left);
            for r in &rels {
                for v in 0..rw {
                    let v = basis.letters(v as u32, right);
                    let elem = r
                        .iter()
                        .map(|(w, &c)| {
                            let mut word = u.clone();
                            word.extend_from_slice(w);
                            word.extend_from_slice(&v);
                            (word, c)
                        })
                        .collect();
                    out.push(elem);
                }
            }
        }
    }
    out
}

/// Echelon rows spanning the degree-`d` part of the relation ideal: one row
/// `p - NF(p)` per non-normal word `p`, pivot at `p`.
#[derive(Clone, Debug)]
pub struct ReducedRelationSpace {
    pub degree: usize,
    pub rows: Vec<Vec<(Vec<Gen>, i64)>>,
}

/// Elimination data for one degree.
#[derive(Debug)]
pub struct Level {
    degree: usize,
    normal: Vec<bool>,
    nf: Vec<SparseVec>,
    basis: Vec<u32>,
}

impl Level {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_normal(&self, idx: u32) -> bool {
        self.normal[idx as usize]
    }

    pub fn normal_form(&self, idx: u32) -> &[(u32, i64)] {
        &self.nf[idx as usize]
    }

    pub fn normal_words(&self) -> &[u32] {
        &self.basis
    }
}

fn checked(a: i64, b: i64, c: i64) -> Result<i64> {
    b.checked_mul(c)
        .and_then(|bc| a.checked_add(bc))
        .ok_or(Error::Overflow("canonical form elimination"))
}

/// Dense accumulator with a touched list, reused across words.
struct Accumulator {
    vals: Vec<i64>,
    touched: Vec<u32>,
}

impl Accumulator {
    fn new(size: usize) -> Self {
        Accumulator { vals: vec![0; size], touched: Vec::new() }
    }

    fn add_scaled(&mut self, v: &[(u32, i64)], k: i64) -> Result<()> {
        for &(col, c) in v {
            let slot = &mut self.vals[col as usize];
            if *slot == 0 {
                self.touched.push(col);
            }
            *slot = checked(*slot, c, k)?;
        }
        Ok(())
    }

    fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut out = Vec::with_capacity(self.touched.len());
        for &col in &self.touched {
            let c = std::mem::take(&mut self.vals[col as usize]);
            if c != 0 {
                out.push((col, c));
            }
        }
        self.touched.clear();
        out
    }
}

/// Reduced echelon form with unit pivots at the largest column of each row.
struct Echelon {
    degree: usize,
    pivot_row: HashMap<u32, usize>,
    rows: Vec<SparseVec>,
}

impl Echelon {
    fn new(degree: usize) -> Self {
        Echelon { degree, pivot_row: HashMap::new(), rows: Vec::new() }
    }

    fn reduce(&self, v: &[(u32, i64)], acc: &mut Accumulator) -> Result<SparseVec> {
        acc.add_scaled(v, 1)?;
        for &(col, c) in v {
            if let Some(&r) = self.pivot_row.get(&col) {
                // row = e_col + (non-pivot columns)
                acc.add_scaled(&self.rows[r], -c)?;
            }
        }
        Ok(acc.take())
    }

    fn insert(&mut self, v: &[(u32, i64)], acc: &mut Accumulator) -> Result<bool> {
        let mut row = self.reduce(v, acc)?;
        let Some(&(pivot, lead)) = row.last() else {
            return Ok(false);
        };
        let content = row.iter().fold(0i64, |g, &(_, c)| g.gcd(&c));
        let sign = if lead < 0 { -1 } else { 1 };
        for e in row.iter_mut() {
            e.1 = e.1 / content * sign;
        }
        let lead = row.last().unwrap().1;
        if lead != 1 {
            return Err(Error::NonUnitPivot { degree: self.degree, coeff: lead });
        }
        for other in self.rows.iter_mut() {
            if let Ok(k) = other.binary_search_by_key(&pivot, |e| e.0) {
                let c = other[k].1;
                acc.add_scaled(other, 1)?;
                acc.add_scaled(&row, -c)?;
                *other = acc.take();
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        Ok(true)
    }
}

fn build_low(basis: &GradedBasis, d: usize) -> Result<Level> {
    let total = basis.num_words(d)?;
    let mut normal = vec![true; total];
    let mut nf: Vec<SparseVec> = (0..total as u32).map(|w| vec![(w, 1)]).collect();
    if d == 2 {
        let mut acc = Accumulator::new(total);
        let mut ech = Echelon::new(2);
        for r in basis.quadratic_relations() {
            let mut v: SparseVec = r.iter().map(|(w, &c)| (basis.index(w).unwrap(), c)).collect();
            v.sort_unstable();
            ech.insert(&v, &mut acc)?;
        }
        for w in 0..total {
            nf[w] = ech.reduce(&nf[w], &mut acc)?;
            normal[w] = !ech.pivot_row.contains_key(&(w as u32));
        }
    }
    let basis_words = (0..total as u32).filter(|&w| normal[w as usize]).collect();
    Ok(Level { degree: d, normal, nf, basis: basis_words })
}

fn build_next(basis: &GradedBasis, prev: &Level) -> Result<Level> {
    let d = prev.degree + 1;
    let total = basis.num_words(d)?;
    let m = basis.num_generators() as u32;
    let base = (total / m as usize) as u32;
    let mut acc = Accumulator::new(total);
    let mut ech = Echelon::new(d);
    let mut in_c = vec![false; total];
    let mut r: Vec<SparseVec> = Vec::with_capacity(total);

    for w in 0..total as u32 {
        let (g, s) = (w / base, w % base);
        let (p, h) = (w / m, w % m);
        let suffix_route = if prev.normal[s as usize] {
            None
        } else {
            for &(c, x) in &prev.nf[s as usize] {
                acc.add_scaled(&r[(g * base + c) as usize], x)?;
            }
            Some(acc.take())
        };
        let prefix_route = if prev.normal[p as usize] {
            None
        } else {
            for &(c, x) in &prev.nf[p as usize] {
                acc.add_scaled(&r[(c * m + h) as usize], x)?;
            }
            Some(acc.take())
        };
        let value = match (suffix_route, prefix_route) {
            (Some(a), Some(b)) => {
                acc.add_scaled(&a, 1)?;
                acc.add_scaled(&b, -1)?;
                let diff = acc.take();
                if !diff.is_empty() {
                    ech.insert(&diff, &mut acc)?;
                }
                a
            }
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => {
                in_c[w as usize] = true;
                vec![(w, 1)]
            }
        };
        r.push(ech.reduce(&value, &mut acc)?);
    }

    let mut nf = Vec::with_capacity(total);
    for v in &r {
        nf.push(ech.reduce(v, &mut acc)?);
    }
    let normal: Vec<bool> =
        (0..total).map(|w| in_c[w] && !ech.pivot_row.contains_key(&(w as u32))).collect();
    let basis_words = (0..total as u32).filter(|&w| normal[w as usize]).collect();
    Ok(Level { degree: d, normal, nf, basis: basis_words })
}

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CachedLevel {
    version: u32,
    n: usize,
    degree: usize,
    relations: String,
    normal: Vec<u32>,
    reductions: Vec<(u32, Vec<(u32, i64)>)>,
}

fn cache_file(dir: &Path, n: usize, d: usize, hash: &str) -> PathBuf {
    dir.join(format!("fk{n}_deg{d}_{}.json", &hash[..16]))
}

impl CachedLevel {
    fn from_level(n: usize, hash: &str, level: &Level) -> Self {
        let reductions = level
            .nf
            .iter()
            .enumerate()
            .filter(|(w, _)| !level.normal[*w])
            .map(|(w, v)| (w as u32, v.clone()))
            .collect();
        CachedLevel {
            version: CACHE_VERSION,
            n,
            degree: level.degree,
            relations: hash.to_string(),
            normal: level.basis.clone(),
            reductions,
        }
    }

    fn into_level(self, total: usize) -> Result<Level> {
        let mut normal = vec![false; total];
        let mut nf: Vec<SparseVec> = vec![Vec::new(); total];
        for &w in &self.normal {
            let slot = normal.get_mut(w as usize).ok_or_else(|| Error::Cache("index out of range".into()))?;
            *slot = true;
            nf[w as usize] = vec![(w, 1)];
        }
        let mut seen = self.normal.len();
        for (w, v) in self.reductions {
            if (w as usize) >= total || normal[w as usize] {
                return Err(Error::Cache(format!("bad reduction entry for word {w}")));
            }
            if v.iter().any(|&(c, _)| (c as usize) >= total || !normal[c as usize]) {
                return Err(Error::Cache(format!("reduction of word {w} leaves the normal basis")));
            }
            nf[w as usize] = v;
            seen += 1;
        }
        if seen != total {
            return Err(Error::Cache("incomplete level".into()));
        }
        Ok(Level { degree: self.degree, normal, nf, basis: self.normal })
    }
}

type Slot = Arc<OnceLock<std::result::Result<Arc<Level>, Error>>>;

/// Lazily built elimination data for `FK_n`, one level per degree.
pub struct Canonicalizer {
    basis: GradedBasis,
    limits: Limits,
    cache_dir: Option<PathBuf>,
    levels: Mutex<Vec<Slot>>,
}

impl Canonicalizer {
    pub fn new(n: usize, limits: Limits) -> Self {
        Canonicalizer { basis: GradedBasis::new(n), limits, cache_dir: None, levels: Mutex::new(Vec::new()) }
    }

    /// Reads and writes each level as JSON under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    /// The process-wide instance for window `n`; limits are enforced by the
    /// free functions instead.
    pub fn shared(n: usize) -> Arc<Canonicalizer> {
        static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<Canonicalizer>>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        reg.lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::new(Canonicalizer::new(n, Limits::unbounded())))
            .clone()
    }

    pub fn window(&self) -> usize {
        self.basis.n
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn level(&self, d: usize) -> Result<Arc<Level>> {
        self.limits.check(self.basis.n, d)?;
        let slot = {
            let mut levels = self.levels.lock().unwrap();
            while levels.len() <= d {
                levels.push(Arc::new(OnceLock::new()));
            }
            levels[d].clone()
        };
        slot.get_or_init(|| self.build(d).map(Arc::new)).clone()
    }

    fn build(&self, d: usize) -> Result<Level> {
        let Some(dir) = &self.cache_dir else {
            return self.compute(d);
        };
        let hash = self.basis.relation_hash();
        let path = cache_file(dir, self.basis.n, d, &hash);
        if let Ok(bytes) = std::fs::read(&path) {
            let cached: CachedLevel =
                serde_json::from_slice(&bytes).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
            if cached.version != CACHE_VERSION
                || cached.n != self.basis.n
                || cached.degree != d
                || cached.relations != hash
            {
                return Err(Error::Cache(format!("{}: key mismatch", path.display())));
            }
            return cached.into_level(self.basis.num_words(d)?);
        }
        let level = self.compute(d)?;
        let json = serde_json::to_vec(&CachedLevel::from_level(self.basis.n, &hash, &level))
            .map_err(|e| Error::Cache(e.to_string()))?;
        std::fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
        std::fs::write(&path, json).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok(level)
    }

    fn compute(&self, d: usize) -> Result<Level> {
        if d <= 2 {
            build_low(&self.basis, d)
        } else {
            build_next(&self.basis, &*self.level(d - 1)?)
        }
    }

    pub fn graded_dimension(&self, d: usize) -> Result<usize> {
        Ok(self.level(d)?.dimension())
    }

    /// Words spanning the degree-`d` component, in index order.
    pub fn normal_words(&self, d: usize) -> Result<Vec<FkWord>> {
        let level = self.level(d)?;
        Ok(level
            .basis
            .iter()
            .map(|&w| FkWord::new(self.basis.letters(w, d)).expect("normal words are square-free"))
            .collect())
    }

    pub fn relation_space(&self, d: usize) -> Result<ReducedRelationSpace> {
        let level = self.level(d)?;
        let rows = (0..level.normal.len() as u32)
            .filter(|&w| !level.is_normal(w))
            .map(|w| {
                let mut row: Vec<(Vec<Gen>, i64)> = level
                    .normal_form(w)
                    .iter()
                    .map(|&(c, x)| (self.basis.letters(c, d), -x))
                    .collect();
                row.push((self.basis.letters(w, d), 1));
                row
            })
            .collect();
        Ok(ReducedRelationSpace { degree: d, rows })
    }

    fn reduce_indexed(&self, d: usize, terms: impl IntoIterator<Item = (u32, i64)>) -> Result<FkElement> {
        let level = self.level(d)?;
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for (w, c) in terms {
            for &(col, x) in level.normal_form(w) {
                let slot = acc.entry(col).or_insert(0);
                *slot = checked(*slot, c, x)?;
            }
        }
        Ok(FkElement::from_terms(
            acc.into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|(w, c)| (FkWord::new(self.basis.letters(w, d)).expect("normal words are square-free"), c)),
        ))
    }

    fn index_or_err(&self, letters: &[Gen]) -> Result<u32> {
        self.basis.index(letters).ok_or_else(|| Error::IndexOutOfWindow {
            index: letters.iter().map(Gen::j).max().unwrap_or(0),
            n: self.basis.n,
        })
    }

    pub fn canonical_form(&self, a: &FkElement) -> Result<FkElement> {
        let mut by_degree: BTreeMap<usize, Vec<(u32, i64)>> = BTreeMap::new();
        for (w, c) in a.terms() {
            by_degree.entry(w.degree()).or_default().push((self.index_or_err(w.letters())?, c));
        }
        let mut out = FkElement::zero();
        for (d, terms) in by_degree {
            out = out.add(&self.reduce_indexed(d, terms)?);
        }
        Ok(out)
    }

    pub fn canonical_form_raw(&self, a: &RawElement) -> Result<FkElement> {
        let mut by_degree: BTreeMap<usize, Vec<(u32, i64)>> = BTreeMap::new();
        for (w, &c) in a {
            by_degree.entry(w.len()).or_default().push((self.index_or_err(w)?, c));
        }
        let mut out = FkElement::zero();
        for (d, terms) in by_degree {
            out = out.add(&self.reduce_indexed(d, terms)?);
        }
        Ok(out)
    }

    pub fn fk_equal(&self, a: &FkElement, b: &FkElement) -> Result<bool> {
        Ok(self.canonical_form(&a.sub(b))?.is_zero())
    }
}

fn window_of(a: &FkElement) -> usize {
    a.max_index().max(2)
}

fn shared_checked(n: usize, degrees: impl Iterator<Item = usize>) -> Result<Arc<Canonicalizer>> {
    let l = limits();
    for d in degrees {
        l.check(n, d)?;
    }
    l.check(n, 0)?;
    Ok(Canonicalizer::shared(n))
}

/// Residue of `a` modulo the relations, supported on normal words.
pub fn canonical_form(a: &FkElement) -> Result<FkElement> {
    let n = window_of(a);
    shared_checked(n, a.terms().map(|(w, _)| w.degree()))?.canonical_form(a)
}

/// Canonical form of an element given by raw words, which may contain squares.
pub fn canonical_form_raw(n: usize, a: &RawElement) -> Result<FkElement> {
    shared_checked(n, a.keys().map(Vec::len))?.canonical_form_raw(a)
}

pub fn fk_equal(a: &FkElement, b: &FkElement) -> Result<bool> {
    let diff = a.sub(b);
    if diff.is_zero() {
        return Ok(true);
    }
    Ok(canonical_form(&diff)?.is_zero())
}

pub fn graded_dimension(n: usize, d: usize) -> Result<usize> {
    shared_checked(n.max(1), std::iter::once(d))?.graded_dimension(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fkalg::parse_element;

    fn e(s: &str) -> FkElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn relation_basis_sizes() {
        assert_eq!(relation_basis(3, 2).len(), 5);
        let r = relation_basis(2, 2);
        assert_eq!(r, vec![BTreeMap::from([(vec![Gen::new(1, 2), Gen::new(1, 2)], 1)])]);
        // 6 squares, 3 commutators, 8 three-term relations
        assert_eq!(relation_basis(4, 2).len(), 17);
        assert_eq!(relation_basis(3, 3).len(), 5 * 3 * 2);
    }

    #[test]
    fn canonical_form_examples() {
        let sq = BTreeMap::from([(vec![Gen::new(1, 2), Gen::new(1, 2)], 1)]);
        assert!(canonical_form_raw(3, &sq).unwrap().is_zero());
        assert!(canonical_form(&e("x(1,2)x(2,3) - x(2,3)x(1,3) - x(1,3)x(1,2)")).unwrap().is_zero());
        let a = e("x(1,2)x(3,4)x(2,3) - x(2,3)x(1,3)x(2,4) - x(1,2)x(2,4)x(3,4) - x(1,3)x(1,2)x(2,4)");
        assert!(canonical_form(&a).unwrap().is_zero());
    }

    #[test]
    fn fk_equal_examples() {
        assert!(fk_equal(&e("x(1,2)x(3,4)"), &e("x(3,4)x(1,2)")).unwrap());
        assert!(!fk_equal(&e("x(1,2)x(2,3)"), &e("x(2,3)x(1,2)")).unwrap());
        let a = e("x(1,2)x(2,3) + 3*x(1,3)");
        assert!(fk_equal(&a, &a).unwrap());
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(graded_dimension(3, 0).unwrap(), 1);
        assert_eq!(graded_dimension(3, 1).unwrap(), 3);
        assert_eq!(graded_dimension(3, 2).unwrap(), 4);
        assert_eq!(graded_dimension(2, 2).unwrap(), 0);
    }

    #[test]
    fn limits_are_enforced() {
        let c = Canonicalizer::new(4, Limits { max_n: 4, max_degree: 3 });
        assert!(matches!(c.level(4), Err(Error::ResourceLimit(_))));
        assert!(matches!(graded_dimension(5, 2), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn relation_space_rows_are_echelon() {
        let c = Canonicalizer::new(3, Limits::default());
        let space = c.relation_space(2).unwrap();
        assert_eq!(space.rows.len(), 5);
        let pivots: Vec<_> = space.rows.iter().map(|r| r.last().unwrap().0.clone()).collect();
        assert!(pivots.windows(2).all(|p| p[0] < p[1]));
    }
}
