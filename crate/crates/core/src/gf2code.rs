//! Binary linear codes stored as a reduced row-echelon generator matrix.
//!
//! Coordinates of `RM(1,m)` follow the canonical order of `V = F_2^m`:
//! coordinate `j` is the vector whose `i`-th component is bit `i` of `j`
//! (least significant bit first). All T-sets and subspaces elsewhere in the
//! crate are given in this indexing.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{input_err, Error, Result};
use crate::poly::{rat, Monomial, Poly4};

/// Largest dimension enumerated word by word (`2^26` codewords, the dual
/// of `RM(1,5)`).
pub const MAX_ENUM_DIMENSION: usize = 26;

/// Below this dimension enumeration stays on the calling thread.
const PARALLEL_MIN_DIMENSION: usize = 14;

/// A word of `F_2^n`, packed into 64-bit limbs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    n: usize,
    words: Vec<u64>,
}

fn limbs(n: usize) -> usize {
    n.div_ceil(64)
}

impl Codeword {
    pub fn zeros(n: usize) -> Self {
        Codeword { n, words: vec![0; limbs(n)] }
    }

    pub fn ones(n: usize) -> Self {
        let mut c = Codeword { n, words: vec![u64::MAX; limbs(n)] };
        c.mask_tail();
        c
    }

    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        let mut c = Codeword::zeros(n);
        for &i in support {
            if i >= n {
                return Err(input_err!("index {i} out of range for length {n}"));
            }
            c.set(i, true);
        }
        Ok(c)
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_str01(s: &str) -> Result<Self> {
        let mut c = Codeword::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => c.set(i, true),
                other => return Err(Error::Parse(format!("unexpected character '{other}' in codeword"))),
            }
        }
        Ok(c)
    }

    fn mask_tail(&mut self) {
        let r = self.n % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        let m = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Sorted indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        support_of(&self.words)
    }

    pub fn xor_assign(&mut self, other: &Codeword) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `wt(self AND mask)`.
    pub fn overlap(&self, mask: &Codeword) -> usize {
        overlap(&self.words, &mask.words)
    }

    /// The word `(c_p)_{p in positions}`.
    pub fn restrict(&self, positions: &[usize]) -> Codeword {
        let mut out = Codeword::zeros(positions.len());
        for (i, &p) in positions.iter().enumerate() {
            if self.get(p) {
                out.set(i, true);
            }
        }
        out
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Codeword) -> bool {
        self.overlap(other) % 2 == 1
    }
}

pub(crate) fn overlap(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(crate) fn popcount(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn support_of(words: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (li, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            out.push(li * 64 + b);
            w &= w - 1;
        }
    }
    out
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A binary linear code of length `n`. Generators are kept in reduced
/// row-echelon form, so two codes are equal iff their generator lists are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    n: usize,
    generators: Vec<Codeword>,
    pivots: Vec<usize>,
}

/// Row-reduces `rows` over GF(2); zero and dependent rows are dropped.
pub fn make_code(n: usize, rows: Vec<Codeword>) -> Result<BinaryCode> {
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(input_err!("row of length {} in a code of length {n}", bad.len()));
    }
    let mut rows = rows;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Ok(BinaryCode { n, generators: rows, pivots })
}

/// `RM(1,m)`: the affine functions on `F_2^m`, length `2^m`, dimension `m+1`.
pub fn reed_muller_1(m: usize) -> Result<BinaryCode> {
    if m < 1 {
        return Err(input_err!("RM(1,m) needs m >= 1, got {m}"));
    }
    if m > 20 {
        return Err(Error::Capacity(format!("RM(1,{m}) has length 2^{m}; lengths above 2^20 are not supported")));
    }
    let n = 1usize << m;
    let mut rows = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut r = Codeword::zeros(n);
        for j in 0..n {
            if (j >> i) & 1 == 1 {
                r.set(j, true);
            }
        }
        rows.push(r);
    }
    rows.push(Codeword::ones(n));
    make_code(n, rows)
}

/// The extended Hamming code `H_{2^m}`, defined as the exact dual of
/// `RM(1,m)` in canonical coordinates.
pub fn extended_hamming(m: usize) -> Result<BinaryCode> {
    if m < 2 {
        return Err(input_err!("extended Hamming code needs m >= 2, got {m}"));
    }
    Ok(reed_muller_1(m)?.dual())
}

impl BinaryCode {
    /// Zero code of length `n`.
    pub fn zero(n: usize) -> Self {
        BinaryCode { n, generators: Vec::new(), pivots: Vec::new() }
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Codeword] {
        &self.generators
    }

    /// `|C| = 2^k`.
    pub fn size(&self) -> BigInt {
        BigInt::one() << self.dimension()
    }

    pub fn contains(&self, word: &Codeword) -> bool {
        if word.len() != self.n {
            return false;
        }
        let mut w = word.clone();
        for (g, &p) in self.generators.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(g);
            }
        }
        w.is_zero()
    }

    /// The dual code: the GF(2) nullspace of the generator matrix.
    pub fn dual(&self) -> BinaryCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Codeword::zeros(self.n);
                v.set(f, true);
                for (g, &p) in self.generators.iter().zip(&self.pivots) {
                    if g.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        make_code(self.n, rows).expect("nullspace rows have the code length")
    }

    pub fn check_enumerable(&self) -> Result<()> {
        self.check_enumerable_with(MAX_ENUM_DIMENSION)
    }

    pub fn check_enumerable_with(&self, max_dimension: usize) -> Result<()> {
        let cap = max_dimension.min(MAX_ENUM_DIMENSION);
        if self.dimension() > cap {
            return Err(Error::Capacity(format!(
                "code of dimension {} has more than 2^{cap} codewords; use the transform route instead",
                self.dimension()
            )));
        }
        Ok(())
    }

    /// All `2^k` codewords in Gray-code message order: each word differs
    /// from the previous one by a single generator.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.check_enumerable()?;
        Ok(Codewords {
            code: self,
            next: 0,
            total: 1u64 << self.dimension(),
            current: Codeword::zeros(self.n),
        })
    }

    /// Calls `f` on codewords with Gray-code indices `start..end`.
    fn visit_range(&self, start: u64, end: u64, f: &mut impl FnMut(&[u64])) {
        if start >= end {
            return;
        }
        let mut buf = vec![0u64; limbs(self.n)];
        let gray = start ^ (start >> 1);
        for (i, g) in self.generators.iter().enumerate() {
            if (gray >> i) & 1 == 1 {
                for (a, b) in buf.iter_mut().zip(&g.words) {
                    *a ^= b;
                }
            }
        }
        let gens: Vec<&[u64]> = self.generators.iter().map(|g| g.words.as_slice()).collect();
        if buf.len() == 1 {
            // single-limb fast path (n <= 64)
            let gens1: Vec<u64> = gens.iter().map(|g| g[0]).collect();
            let mut w = buf[0];
            for s in start..end {
                f(std::slice::from_ref(&w));
                let nx = s + 1;
                if nx < end {
                    w ^= gens1[nx.trailing_zeros() as usize];
                }
            }
            return;
        }
        for s in start..end {
            f(&buf);
            let nx = s + 1;
            if nx < end {
                for (a, b) in buf.iter_mut().zip(gens[nx.trailing_zeros() as usize]) {
                    *a ^= b;
                }
            }
        }
    }

    /// Folds over every codeword, splitting the message space into
    /// contiguous ranges across the rayon pool. `merge` must be associative
    /// and commutative.
    pub fn fold_codewords<A, I, F, M>(&self, init: I, fold: F, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync,
        F: Fn(&mut A, &[u64]) + Sync,
        M: Fn(A, A) -> A + Sync,
    {
        self.check_enumerable()?;
        let k = self.dimension();
        let total = 1u64 << k;
        if k < PARALLEL_MIN_DIMENSION {
            let mut acc = init();
            self.visit_range(0, total, &mut |w| fold(&mut acc, w));
            return Ok(acc);
        }
        let chunks = (rayon::current_num_threads() * 8).next_power_of_two() as u64;
        let chunks = chunks.min(total);
        let step = total / chunks;
        Ok((0..chunks)
            .into_par_iter()
            .map(|ci| {
                let mut acc = init();
                self.visit_range(ci * step, (ci + 1) * step, &mut |w| fold(&mut acc, w));
                acc
            })
            .reduce(&init, &merge))
    }

    /// `A_i` = number of codewords of weight `i`, for `i = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let n = self.n;
        self.fold_codewords(
            || vec![0u64; n + 1],
            |acc, w| acc[popcount(w)] += 1,
            merge_counts,
        )
    }

    /// `sum_c x^(n - wt c) y^(wt c)`.
    pub fn weight_enumerator(&self) -> Result<Poly4> {
        let dist = self.weight_distribution()?;
        Ok(distribution_to_poly(self.n, &dist))
    }

    /// Sorted nonzero weights, computed by enumeration.
    pub fn nonzero_weights(&self) -> Result<Vec<usize>> {
        Ok(self
            .weight_distribution()?
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
            .collect())
    }

    /// Supports of the weight-`ell` codewords.
    pub fn shell(&self, ell: usize) -> Result<BlockSet> {
        if ell > self.n {
            return Err(input_err!("weight {ell} exceeds code length {}", self.n));
        }
        let blocks = self.fold_codewords(
            Vec::new,
            |acc: &mut Vec<Vec<usize>>, w| {
                if popcount(w) == ell {
                    acc.push(support_of(w));
                }
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        )?;
        BlockSet::new(self.n, blocks)
    }
}

pub(crate) fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

pub(crate) fn distribution_to_poly(n: usize, dist: &[u64]) -> Poly4 {
    Poly4::from_terms(
        dist.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (Monomial::xy((n - i) as u32, i as u32), rat(a))),
    )
}

/// Iterator returned by [`BinaryCode::codewords`].
pub struct Codewords<'a> {
    code: &'a BinaryCode,
    next: u64,
    total: u64,
    current: Codeword,
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next >= self.total {
            return None;
        }
        let out = self.current.clone();
        self.next += 1;
        if self.next < self.total {
            let i = self.next.trailing_zeros() as usize;
            self.current.xor_assign(&self.code.generators[i]);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

/// A multiset of blocks (sorted index sets) on the points `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSet {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockSet {
    /// Sorts each block and the block list; rejects out-of-range or
    /// repeated points. Repeated blocks are kept.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks = blocks;
        for b in blocks.iter_mut() {
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(input_err!("block {b:?} repeats a point"));
            }
            if let Some(&p) = b.last() {
                if p >= n {
                    return Err(input_err!("block {b:?} has a point outside 0..{n}"));
                }
            }
        }
        blocks.sort();
        Ok(BlockSet { n, blocks })
    }

    /// Number of points.
    pub fn points(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Common block size, if all blocks have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == first).then_some(first)
    }

    /// Image under the point permutation `i -> perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<BlockSet> {
        if perm.len() != self.n {
            return Err(input_err!("permutation of length {} on {} points", perm.len(), self.n));
        }
        BlockSet::new(
            self.n,
            self.blocks.iter().map(|b| b.iter().map(|&i| perm[i]).collect()).collect(),
        )
    }

    pub(crate) fn masks(&self) -> Vec<Vec<u64>> {
        self.blocks
            .iter()
            .map(|b| Codeword::from_support(self.n, b).expect("validated block").words)
            .collect()
    }
}
