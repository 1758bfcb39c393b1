#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use skewdd::fkalg::Gen;
use skewdd::fkcanon::RawElement;

/// Exact row reduction over the integers, one primitive row per pivot column.
#[derive(Default)]
pub struct DenseEchelon {
    rows: BTreeMap<usize, Vec<BigInt>>,
    width: usize,
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

impl DenseEchelon {
    pub fn new(width: usize) -> Self {
        DenseEchelon { rows: BTreeMap::new(), width }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot column from `row`.
    pub fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        for (&col, prow) in &self.rows {
            if row[col].is_zero() {
                continue;
            }
            let a = prow[col].clone();
            let b = row[col].clone();
            for k in 0..self.width {
                row[k] = &row[k] * &a - &prow[k] * &b;
            }
            primitive(&mut row);
        }
        row
    }

    pub fn insert(&mut self, row: Vec<BigInt>) -> bool {
        let mut row = self.reduce(row);
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if row[col].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        primitive(&mut row);
        self.rows.insert(col, row);
        true
    }

    pub fn contains(&self, row: Vec<BigInt>) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }
}

/// Generators of the window in lexicographic order.
pub fn gens(n: usize) -> Vec<Gen> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Gen::new(i, j));
        }
    }
    out
}

pub fn word_column(word: &[Gen], gens: &[Gen]) -> usize {
    word.iter().fold(0, |acc, g| acc * gens.len() + gens.iter().position(|h| h == g).unwrap())
}

pub fn dense_row(elem: &RawElement, gens: &[Gen], d: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); gens.len().pow(d as u32)];
    for (w, &c) in elem {
        row[word_column(w, gens)] += c;
    }
    row
}

/// `x_ab` as a generator with sign.
pub fn signed_gen(a: usize, b: usize) -> (Gen, i64) {
    if a < b {
        (Gen::new(a, b), 1)
    } else {
        (Gen::new(b, a), -1)
    }
}

fn add_signed(out: &mut RawElement, letters: &[(usize, usize)], c: i64) {
    let mut sign = c;
    let word: Vec<Gen> = letters
        .iter()
        .map(|&(a, b)| {
            let (g, s) = signed_gen(a, b);
            sign *= s;
            g
        })
        .collect();
    *out.entry(word).or_insert(0) += sign;
}

/// The defining quadratic relations, written out from their definition.
pub fn oracle_quadratic(n: usize) -> Vec<RawElement> {
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    for &(i, j) in pairs.iter().filter(|(i, j)| i < j) {
        let mut r = RawElement::new();
        add_signed(&mut r, &[(i, j), (i, j)], 1);
        out.push(r);
        for &(k, l) in pairs.iter().filter(|(k, l)| k < l && ![i, j].contains(k) && ![i, j].contains(l)) {
            let mut r = RawElement::new();
            add_signed(&mut r, &[(i, j), (k, l)], 1);
            add_signed(&mut r, &[(k, l), (i, j)], -1);
            out.push(r);
        }
    }
    for &(i, j) in pairs.iter().filter(|(i, j)| i != j) {
        for k in (1..=n).filter(|k| *k != i && *k != j) {
            // x_ij x_jk + x_jk x_ki + x_ki x_ij
            let mut r = RawElement::new();
            add_signed(&mut r, &[(i, j), (j, k)], 1);
            add_signed(&mut r, &[(j, k), (k, i)], 1);
            add_signed(&mut r, &[(k, i), (i, j)], 1);
            out.push(r);
        }
    }
    out
}

/// Relation space of degree `d`: every `u r v` with `r` quadratic and `u`, `v` words.
pub fn dense_relations(n: usize, d: usize) -> DenseEchelon {
    let g = gens(n);
    let mut ech = DenseEchelon::new(g.len().pow(d as u32));
    if d < 2 {
        return ech;
    }
    let quad = oracle_quadratic(n);
    for left in 0..=d - 2 {
        let right = d - 2 - left;
        for u in 0..g.len().pow(left as u32) {
            for v in 0..g.len().pow(right as u32) {
                let uw = column_word(u, left, &g);
                let vw = column_word(v, right, &g);
                for r in &quad {
                    let mut elem = RawElement::new();
                    for (w, &c) in r {
                        let mut full = uw.clone();
                        full.extend_from_slice(w);
                        full.extend_from_slice(&vw);
                        *elem.entry(full).or_insert(0) += c;
                    }
                    ech.insert(dense_row(&elem, &g, d));
                }
            }
        }
    }
    ech
}

pub fn column_word(mut idx: usize, len: usize, gens: &[Gen]) -> Vec<Gen> {
    let mut out = vec![gens[0]; len];
    for k in (0..len).rev() {
        out[k] = gens[idx % gens.len()];
        idx /= gens.len();
    }
    out
}

/// Dimension of the degree-`d` part of `FK_n` by dense elimination.
pub fn dense_dimension(n: usize, d: usize) -> usize {
    let m = gens(n).len();
    if d < 2 {
        return m.pow(d as u32);
    }
    m.pow(d as u32) - dense_relations(n, d).rank()
}
