//! Subset functions, the differentiation operator `gamma`, harmonic
//! functions and harmonic weight enumerators.
//!
//! A [`SubsetFn`] of degree `k` on `n` points assigns a rational value to
//! each k-subset of `0..n`. Its extension `f~(u)` sums `f` over the
//! k-subsets of `u`. Harmonic functions are the kernel of
//! `gamma(z) = sum of the (k-1)-subsets of z`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::gf2code::{extended_hamming, popcount, BinaryCode, BlockSet, Codeword};
use crate::linalg::kernel_basis;
use crate::poly::{rat, Monomial, Poly4};
use crate::subsets::{binomial, combinations, is_sorted_subset, subsets_of};

/// Largest support for which [`subset_weight_enumerator`] tabulates `f~`
/// over every sub-pattern of the support.
const TABLE_SUPPORT_MAX: usize = 12;

/// A function on the k-subsets of `0..n`; absent keys are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFn {
    n: usize,
    k: usize,
    values: BTreeMap<Vec<usize>, BigRational>,
}

impl SubsetFn {
    pub fn zero(n: usize, k: usize) -> Self {
        SubsetFn { n, k, values: BTreeMap::new() }
    }

    /// Keys may be unsorted; repeated keys are summed.
    pub fn from_values<I>(n: usize, k: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, BigRational)>,
    {
        let mut f = SubsetFn::zero(n, k);
        for (key, v) in values {
            f.add(key, v)?;
        }
        Ok(f)
    }

    pub fn add(&mut self, mut key: Vec<usize>, v: BigRational) -> Result<()> {
        key.sort_unstable();
        if key.len() != self.k || key.windows(2).any(|w| w[0] == w[1]) {
            return Err(input_err!("{key:?} is not a {}-subset", self.k));
        }
        if key.last().is_some_and(|&p| p >= self.n) {
            return Err(input_err!("{key:?} has a point outside 0..{}", self.n));
        }
        let slot = self.values.entry(key).or_insert_with(BigRational::zero);
        *slot += v;
        if slot.is_zero() {
            self.values.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree `k`.
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn get(&self, key: &[usize]) -> BigRational {
        self.values.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.values.iter()
    }

    /// Number of k-subsets with a nonzero value.
    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Sorted points occurring in some nonzero key.
    pub fn support_points(&self) -> Vec<usize> {
        let pts: BTreeSet<usize> = self.values.keys().flatten().copied().collect();
        pts.into_iter().collect()
    }

    /// `f~(u)`: the sum of `f` over the k-subsets of `u`.
    pub fn tilde(&self, u: &[usize]) -> BigRational {
        let support = self.support_points();
        let mut inter: Vec<usize> = u.iter().copied().filter(|p| support.binary_search(p).is_ok()).collect();
        inter.sort_unstable();
        inter.dedup();
        if inter.len() < self.k {
            return BigRational::zero();
        }
        if binomial(inter.len() as u64, self.k as u64) <= self.values.len() as u64 {
            subsets_of(&inter, self.k).fold(BigRational::zero(), |acc, s| match self.values.get(&s) {
                Some(v) => acc + v,
                None => acc,
            })
        } else {
            self.values
                .iter()
                .filter(|(key, _)| is_sorted_subset(key, &inter))
                .fold(BigRational::zero(), |acc, (_, v)| acc + v)
        }
    }

    /// Moves point `i` to `map[i]` on a ground set of `n` points.
    pub fn embed(&self, n: usize, map: &[usize]) -> Result<SubsetFn> {
        if map.len() != self.n {
            return Err(input_err!("embedding map has {} entries for {} points", map.len(), self.n));
        }
        let distinct: BTreeSet<_> = map.iter().collect();
        if distinct.len() != map.len() {
            return Err(input_err!("embedding map is not injective"));
        }
        SubsetFn::from_values(
            n,
            self.k,
            self.values.iter().map(|(key, v)| (key.iter().map(|&p| map[p]).collect(), v.clone())),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SubsetFnJson::from(self)).expect("subset function serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<SubsetFn> {
        let raw: SubsetFnJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct SubsetFnJson {
    n: usize,
    k: usize,
    values: Vec<SubsetValueJson>,
}

#[derive(Serialize, Deserialize)]
struct SubsetValueJson {
    subset: Vec<usize>,
    value: String,
}

impl From<&SubsetFn> for SubsetFnJson {
    fn from(f: &SubsetFn) -> Self {
        SubsetFnJson {
            n: f.n,
            k: f.k,
            values: f
                .values
                .iter()
                .map(|(s, v)| SubsetValueJson { subset: s.clone(), value: v.to_string() })
                .collect(),
        }
    }
}

impl TryFrom<SubsetFnJson> for SubsetFn {
    type Error = Error;
    fn try_from(raw: SubsetFnJson) -> Result<SubsetFn> {
        let mut f = SubsetFn::zero(raw.n, raw.k);
        for e in raw.values {
            let v: BigRational = e.value.parse().map_err(|_| Error::Parse(format!("bad value '{}'", e.value)))?;
            f.add(e.subset, v)?;
        }
        Ok(f)
    }
}

impl Serialize for SubsetFn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubsetFnJson::from(self).serialize(s)
    }
}

/// `(gamma f)(y) = sum of f(z) over k-subsets z containing y`.
pub fn gamma(f: &SubsetFn) -> Result<SubsetFn> {
    if f.k == 0 {
        return Err(input_err!("gamma is undefined on degree 0"));
    }
    let mut out: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
    for (z, v) in &f.values {
        for i in 0..z.len() {
            let mut y = z.clone();
            y.remove(i);
            *out.entry(y).or_insert_with(BigRational::zero) += v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(SubsetFn { n: f.n, k: f.k - 1, values: out })
}

/// A subset function in the kernel of `gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicFn(SubsetFn);

impl HarmonicFn {
    /// Fails with a verification error unless `gamma f = 0`.
    pub fn new(f: SubsetFn) -> Result<Self> {
        if f.k == 0 {
            return Err(input_err!("harmonic functions have degree at least 1"));
        }
        if !gamma(&f)?.is_zero() {
            return Err(Error::Verification(format!(
                "function of degree {} on {} points is not harmonic",
                f.k, f.n
            )));
        }
        Ok(HarmonicFn(f))
    }

    pub fn as_fn(&self) -> &SubsetFn {
        &self.0
    }

    pub fn into_inner(self) -> SubsetFn {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn tilde(&self, u: &[usize]) -> BigRational {
        self.0.tilde(u)
    }
}

/// Basis of `Harm_k` on `n` points by exact elimination on the `gamma`
/// matrix (rows: (k-1)-subsets, columns: k-subsets, both lexicographic).
/// Basis vectors are primitive integer vectors.
pub fn harm_basis(n: usize, k: usize, cap: u64) -> Result<Vec<HarmonicFn>> {
    if k == 0 || k > n {
        return Err(input_err!("harmonic basis needs 1 <= k <= n, got n={n}, k={k}"));
    }
    let cols = binomial(n as u64, k as u64);
    if cols > cap {
        return Err(Error::Capacity(format!("C({n},{k}) = {cols} exceeds the harmonic-basis cap {cap}")));
    }
    let col_sets: Vec<Vec<usize>> = combinations(n, k).collect();
    let row_index: BTreeMap<Vec<usize>, usize> = combinations(n, k - 1).enumerate().map(|(i, s)| (s, i)).collect();
    let mut matrix = vec![vec![BigRational::zero(); col_sets.len()]; row_index.len()];
    for (j, z) in col_sets.iter().enumerate() {
        for i in 0..z.len() {
            let mut y = z.clone();
            y.remove(i);
            matrix[row_index[&y]][j] = BigRational::one();
        }
    }
    kernel_basis(matrix, col_sets.len())
        .into_iter()
        .map(|v| {
            let f = SubsetFn::from_values(
                n,
                k,
                col_sets.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).map(|(s, c)| (s, rat(c))),
            )?;
            HarmonicFn::new(f)
        })
        .collect()
}

/// A standard Young tableau of shape `(n-k, k)`, given by its first `k`
/// columns: `top[i] < bottom[i]`, both rows increasing.
///
/// Its polytabloid `prod_i (bottom[i] - top[i])`, expanded as a signed sum
/// of k-subsets, is harmonic, and the polytabloids of all standard tableaux
/// form a basis of `Harm_k` with `±1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl Tableau {
    /// `f~(block)` for the polytabloid; factorizes over the columns.
    pub fn tilde_mask(&self, block: &[u64]) -> i64 {
        let has = |p: usize| (block[p / 64] >> (p % 64)) & 1 == 1;
        self.top
            .iter()
            .zip(&self.bottom)
            .map(|(&a, &b)| has(b) as i64 - has(a) as i64)
            .product()
    }

    pub fn to_fn(&self, n: usize) -> SubsetFn {
        let k = self.top.len();
        let mut f = SubsetFn::zero(n, k);
        for choice in 0u32..(1 << k) {
            let key: Vec<usize> = (0..k)
                .map(|i| if (choice >> i) & 1 == 1 { self.top[i] } else { self.bottom[i] })
                .collect();
            let sign = if choice.count_ones() % 2 == 0 { 1 } else { -1 };
            f.add(key, rat(sign)).expect("tableau entries are distinct points");
        }
        f
    }
}

/// Standard tableaux of shape `(n-k, k)`, ordered by their second row.
pub fn standard_tableaux(n: usize, k: usize) -> impl Iterator<Item = Tableau> {
    combinations(n, k).filter_map(move |bottom| {
        let top: Vec<usize> = (0..n).filter(|p| bottom.binary_search(p).is_err()).take(k).collect();
        (top.len() == k && top.iter().zip(&bottom).all(|(a, b)| a < b)).then_some(Tableau { top, bottom })
    })
}

/// The polytabloid basis of `Harm_k`; spans the same space as
/// [`harm_basis`] but needs no elimination.
pub fn specht_basis(n: usize, k: usize) -> Result<Vec<HarmonicFn>> {
    if k == 0 || k > n {
        return Err(input_err!("harmonic basis needs 1 <= k <= n, got n={n}, k={k}"));
    }
    Ok(standard_tableaux(n, k).map(|t| HarmonicFn(t.to_fn(n))).collect())
}

/// `sum_c f~(supp c) x^(n - wt c) y^(wt c)` for any subset function.
pub fn subset_weight_enumerator(code: &BinaryCode, f: &SubsetFn) -> Result<Poly4> {
    if f.n != code.len() {
        return Err(input_err!("function on {} points, code of length {}", f.n, code.len()));
    }
    code.check_enumerable()?;
    let n = code.len();
    let support = f.support_points();
    if support.len() > TABLE_SUPPORT_MAX {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for c in code.codewords()? {
            let v = f.tilde(&c.support());
            if !v.is_zero() {
                *acc.entry(c.weight()).or_insert_with(BigRational::zero) += v;
            }
        }
        return Ok(Poly4::from_terms(
            acc.into_iter().map(|(wt, v)| (Monomial::xy((n - wt) as u32, wt as u32), v)),
        ));
    }

    // f~ of every sub-pattern of the support, by a subset-sum transform
    let s = support.len();
    let mut table = vec![BigRational::zero(); 1 << s];
    for (key, v) in &f.values {
        let mask = key.iter().fold(0usize, |m, p| m | 1 << support.binary_search(p).unwrap());
        table[mask] = v.clone();
    }
    for bit in 0..s {
        for mask in 0..(1usize << s) {
            if mask & (1 << bit) != 0 {
                let lower = table[mask ^ (1 << bit)].clone();
                if !lower.is_zero() {
                    table[mask] += lower;
                }
            }
        }
    }

    let patterns = 1usize << s;
    let counts = code.fold_codewords(
        || vec![0u64; (n + 1) * patterns],
        |acc, w| {
            let mut pat = 0usize;
            for (i, &p) in support.iter().enumerate() {
                pat |= (((w[p / 64] >> (p % 64)) & 1) as usize) << i;
            }
            acc[popcount(w) * patterns + pat] += 1;
        },
        crate::gf2code::merge_counts,
    )?;
    let mut out = Poly4::zero();
    for (idx, &cnt) in counts.iter().enumerate() {
        if cnt == 0 {
            continue;
        }
        let (wt, pat) = (idx / patterns, idx % patterns);
        if table[pat].is_zero() {
            continue;
        }
        out.add_term(Monomial::xy((n - wt) as u32, wt as u32), &table[pat] * rat(cnt));
    }
    Ok(out)
}

/// The harmonic weight enumerator `w_{C,f}`.
pub fn hwe(code: &BinaryCode, f: &HarmonicFn) -> Result<Poly4> {
    subset_weight_enumerator(code, &f.0)
}

/// Computes `w_{C^perp,f}` from `w_{C,f}` without radicals.
///
/// `w_{C,f} = (xy)^k Z` with `Z` homogeneous of degree `n - 2k`, and
/// `Z_{C^perp,f} = (-1)^k 2^k / |C| * Z(x+y, x-y)`.
pub fn bachoc_transform(wcf: &Poly4, n: usize, k: usize, code_size: &BigInt) -> Result<Poly4> {
    if code_size <= &BigInt::zero() {
        return Err(input_err!("code size must be positive"));
    }
    if !wcf.is_xy_form_of_degree(n as u32) {
        return Err(input_err!("harmonic weight enumerator must be a form of degree {n} in x, y"));
    }
    let xyk = Monomial::xy(k as u32, k as u32);
    let z = wcf
        .div_monomial(xyk)
        .ok_or_else(|| input_err!("enumerator is not divisible by (xy)^{k}; f is not harmonic of degree {k}"))?;
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let factor = BigRational::new(BigInt::from(sign) << k, code_size.clone());
    Ok(z.macwilliams().scale(&factor).mul_monomial(xyk))
}

/// A 3-dimensional subspace `U` of `F_2^m`, with its 8 points as sorted
/// coordinate indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace3 {
    m: usize,
    basis: [usize; 3],
    points: [usize; 8],
}

impl Subspace3 {
    pub fn new(m: usize, basis: [usize; 3]) -> Result<Self> {
        if !(3..=20).contains(&m) {
            return Err(input_err!("a 3-dimensional subspace needs 3 <= m <= 20, got {m}"));
        }
        if basis.iter().any(|&b| b >= 1 << m) {
            return Err(input_err!("basis vector outside F_2^{m}"));
        }
        let mut points: Vec<usize> = (0..8usize)
            .map(|c| (0..3).filter(|i| (c >> i) & 1 == 1).fold(0, |acc, i| acc ^ basis[i]))
            .collect();
        points.sort_unstable();
        points.dedup();
        if points.len() != 8 {
            return Err(input_err!("basis {basis:?} is linearly dependent"));
        }
        Ok(Subspace3 { m, basis, points: points.try_into().unwrap() })
    }

    /// `span(e_1, e_2, e_3)`.
    pub fn standard(m: usize) -> Result<Self> {
        Self::new(m, [1, 2, 4])
    }

    pub fn random<R: Rng>(m: usize, rng: &mut R) -> Result<Self> {
        if !(3..=20).contains(&m) {
            return Err(input_err!("a 3-dimensional subspace needs 3 <= m <= 20, got {m}"));
        }
        loop {
            let basis = [rng.gen_range(1..1usize << m), rng.gen_range(1..1usize << m), rng.gen_range(1..1usize << m)];
            if let Ok(u) = Self::new(m, basis) {
                return Ok(u);
            }
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> [usize; 3] {
        self.basis
    }

    pub fn points(&self) -> &[usize; 8] {
        &self.points
    }
}

/// Image of `RM(1,m)` under restriction to `U`, and fiber sizes over the
/// weight-4 words of `H_8`.
#[derive(Debug, Clone)]
pub struct SubspaceRestriction {
    pub image: BinaryCode,
    /// For each weight-4 word `a` of `H_8`: the number of codewords of
    /// weight `2^(m-1)` whose restriction to `U` is `a`.
    pub fibers: BTreeMap<Codeword, u64>,
}

pub fn restrict_to_subspace(code: &BinaryCode, u: &Subspace3) -> Result<SubspaceRestriction> {
    let n = 1usize << u.m;
    if code.len() != n {
        return Err(input_err!("code length {} does not match 2^{}", code.len(), u.m));
    }
    let image = crate::gf2code::make_code(8, code.generators().iter().map(|g| g.restrict(&u.points)).collect())?;
    let h8 = extended_hamming(3)?;
    if image != h8 {
        return Err(Error::Verification(format!("restriction of the code to {:?} is not H_8", u.points)));
    }
    let mut fibers: BTreeMap<Codeword, u64> =
        h8.codewords()?.filter(|a| a.weight() == 4).map(|a| (a, 0)).collect();
    for c in code.codewords()? {
        if c.weight() == n / 2 {
            if let Some(cnt) = fibers.get_mut(&c.restrict(&u.points)) {
                *cnt += 1;
            }
        }
    }
    Ok(SubspaceRestriction { image, fibers })
}

/// The 14 supports of the weight-4 words of `H_8`: a 3-(8,4,1) design.
pub fn hamming8_weight4_blocks() -> BlockSet {
    extended_hamming(3).and_then(|h| h.shell(4)).expect("H_8 is small and well formed")
}

fn transposition(tau: (usize, usize)) -> Result<Vec<usize>> {
    let (a, b) = tau;
    if a == b || a >= 8 || b >= 8 {
        return Err(input_err!("({a} {b}) is not a transposition of 0..8"));
    }
    let mut perm: Vec<usize> = (0..8).collect();
    perm.swap(a, b);
    Ok(perm)
}

/// `|B ∩ B^tau|` for the H_8 blocks `B` and a transposition `tau`.
pub fn block_overlap(tau: (usize, usize)) -> Result<usize> {
    let b = hamming8_weight4_blocks();
    let bt = b.permuted(&transposition(tau)?)?;
    Ok(b.blocks().iter().filter(|x| bt.blocks().contains(x)).count())
}

/// The degree-4 harmonic function `sum_{z in B} z - sum_{z in B^tau} z`,
/// optionally moved onto the points of `U` (H_8 coordinate `i` goes to the
/// `i`-th smallest point of `U`).
pub fn corollary_f(tau: (usize, usize), u: Option<&Subspace3>) -> Result<HarmonicFn> {
    let b = hamming8_weight4_blocks();
    let bt = b.permuted(&transposition(tau)?)?;
    let f8 = SubsetFn::from_values(
        8,
        4,
        b.blocks()
            .iter()
            .map(|z| (z.clone(), rat(1)))
            .chain(bt.blocks().iter().map(|z| (z.clone(), rat(-1)))),
    )?;
    let f = match u {
        None => f8,
        Some(u) => f8.embed(1 << u.m, u.points())?,
    };
    HarmonicFn::new(f)
}

/// `sum over weight-4 words a of H_8 of f~(a)`, with `a` read on the points
/// of `U` (or on `0..8` when `u` is `None`).
pub fn h8_weight4_sum(f: &SubsetFn, u: Option<&Subspace3>) -> BigRational {
    let pts: Vec<usize> = match u {
        Some(u) => u.points().to_vec(),
        None => (0..8).collect(),
    };
    hamming8_weight4_blocks()
        .blocks()
        .iter()
        .map(|blk| f.tilde(&blk.iter().map(|&i| pts[i]).collect::<Vec<_>>()))
        .fold(BigRational::zero(), |acc, v| acc + v)
}

fn check_thm12_args(m: usize, k: usize) -> Result<()> {
    if !(3..=20).contains(&m) {
        return Err(input_err!("closed forms need 3 <= m <= 20, got {m}"));
    }
    if !(1..=4).contains(&k) {
        return Err(input_err!("closed forms are provided for 1 <= k <= 4, got {k}"));
    }
    Ok(())
}

/// Harmonic weight enumerators of `RM(1,m)` and its dual for a degree-`k`
/// harmonic `f` vanishing off `binom(U, k)`, given `s = sum f~(a)` over the
/// weight-4 words of `H_8`.
///
/// The primal side is `2^(m-3) s x^(2^(m-1)) y^(2^(m-1))`; the dual side is
/// obtained from it by [`bachoc_transform`]. Only `k = 4` is exercised by
/// the design argument; `k < 4` is experimental (the weight-4 blocks of
/// `H_8` form a 3-design, so `s = 0` for harmonic `f` of those degrees).
pub fn thm12_closed(m: usize, k: usize, s: &BigRational) -> Result<(Poly4, Poly4)> {
    check_thm12_args(m, k)?;
    let h = 1u32 << (m - 1);
    let primal = Poly4::term(s * rat(BigInt::one() << (m - 3)), Monomial::xy(h, h));
    let dual = bachoc_transform(&primal, 1 << m, k, &(BigInt::one() << (m + 1)))?;
    Ok((primal, dual))
}

/// `c * (xy)^k (x^2 - y^2)^(2^(m-1) - k)`.
fn xy_power_form(m: usize, k: usize, c: BigRational) -> Poly4 {
    let h = 1u32 << (m - 1);
    let x2_y2 = Poly4::from_terms([(Monomial::xy(2, 0), rat(1)), (Monomial::xy(0, 2), rat(-1))]);
    x2_y2.pow(h - k as u32).mul_monomial(Monomial::xy(k as u32, k as u32)).scale(&c)
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        rat(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Radical-free closed form of the dual side of [`thm12_closed`]:
/// `(-1)^k 2^(k-4) s (xy)^k (x^2 - y^2)^(2^(m-1) - k)`.
pub fn thm12_dual_closed(m: usize, k: usize, s: &BigRational) -> Result<Poly4> {
    check_thm12_args(m, k)?;
    let sign = if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
    Ok(xy_power_form(m, k, sign * pow2(k as i64 - 4) * s))
}

/// The dual-side formula with the leading constant `2^(2^(m-1) - 2)`
/// as it is usually printed, with the radicals cleared:
/// `(-1)^k 2^(k-2) s (xy)^k (x^2 - y^2)^(2^(m-1) - k)`. Kept to report its
/// disagreement with the transform.
pub fn thm12_printed_dual(m: usize, k: usize, s: &BigRational) -> Result<Poly4> {
    check_thm12_args(m, k)?;
    let sign = if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
    Ok(xy_power_form(m, k, sign * pow2(k as i64 - 2) * s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2code::{make_code, reed_muller_1};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64) -> BigRational {
        rat(n)
    }

    #[test]
    fn gamma_examples() {
        let f = SubsetFn::from_values(3, 2, [(vec![0, 1], r(1))]).unwrap();
        let g = gamma(&f).unwrap();
        assert_eq!(g.get(&[0]), r(1));
        assert_eq!(g.get(&[1]), r(1));
        assert_eq!(g.support_size(), 2);

        let f = SubsetFn::from_values(3, 1, [(vec![0], r(1)), (vec![1], r(-1))]).unwrap();
        assert!(gamma(&f).unwrap().is_zero());
        assert!(HarmonicFn::new(f).is_ok());

        assert!(gamma(&SubsetFn::zero(3, 0)).is_err());
        let g = SubsetFn::from_values(3, 1, [(vec![0], r(1))]).unwrap();
        assert!(matches!(HarmonicFn::new(g), Err(Error::Verification(_))));
    }

    #[test]
    fn subset_fn_validation() {
        assert!(SubsetFn::from_values(3, 2, [(vec![0, 0], r(1))]).is_err());
        assert!(SubsetFn::from_values(3, 2, [(vec![0, 3], r(1))]).is_err());
        assert!(SubsetFn::from_values(3, 2, [(vec![0], r(1))]).is_err());
        let f = SubsetFn::from_values(3, 1, [(vec![0], r(1)), (vec![0], r(-1))]).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn harm_basis_dimensions() {
        assert_eq!(harm_basis(4, 1, 100_000).unwrap().len(), 3);
        assert_eq!(harm_basis(8, 4, 100_000).unwrap().len(), 14);
        assert!(harm_basis(3, 3, 100_000).unwrap().is_empty());
        assert!(harm_basis(4, 0, 100_000).is_err());
        assert!(matches!(harm_basis(20, 4, 1000), Err(Error::Capacity(_))));
    }

    #[test]
    fn harm_basis_dimension_formula_small_n() {
        for n in 1..=10u64 {
            for k in 1..=4u64.min(n) {
                let basis = harm_basis(n as usize, k as usize, 100_000).unwrap();
                let expect = binomial(n, k).saturating_sub(binomial(n, k - 1));
                assert_eq!(basis.len() as u64, expect, "n={n} k={k}");
                assert_eq!(specht_basis(n as usize, k as usize).unwrap().len() as u64, expect);
            }
        }
    }

    /// Rank over Q of a set of subset functions, by elimination.
    fn rank(fs: &[SubsetFn]) -> usize {
        let keys: BTreeSet<Vec<usize>> = fs.iter().flat_map(|f| f.values().map(|(k, _)| k.clone())).collect();
        let keys: Vec<_> = keys.into_iter().collect();
        let rows: Vec<Vec<BigRational>> = keys.iter().map(|k| fs.iter().map(|f| f.get(k)).collect()).collect();
        fs.len() - kernel_basis(rows, fs.len()).len()
    }

    #[test]
    fn polytabloids_span_the_elimination_kernel() {
        for (n, k) in [(6, 2), (7, 3), (8, 3), (8, 4)] {
            let a: Vec<SubsetFn> = harm_basis(n, k, 100_000).unwrap().into_iter().map(HarmonicFn::into_inner).collect();
            let b: Vec<SubsetFn> = specht_basis(n, k).unwrap().into_iter().map(HarmonicFn::into_inner).collect();
            let both: Vec<SubsetFn> = a.iter().chain(&b).cloned().collect();
            assert_eq!(rank(&a), a.len());
            assert_eq!(rank(&b), b.len());
            assert_eq!(rank(&both), a.len(), "n={n} k={k}");
        }
        for f in specht_basis(9, 4).unwrap() {
            assert!(gamma(f.as_fn()).unwrap().is_zero());
        }
    }

    #[test]
    fn tableau_tilde_matches_expansion() {
        let n = 9;
        for t in standard_tableaux(n, 3).take(40) {
            let f = t.to_fn(n);
            for blk in combinations(n, 5).step_by(7) {
                let mask = Codeword::from_support(n, &blk).unwrap();
                assert_eq!(rat(t.tilde_mask(mask.words())), f.tilde(&blk));
            }
        }
    }

    #[test]
    fn tilde_examples() {
        let basis = harm_basis(8, 4, 100_000).unwrap();
        let all: Vec<usize> = (0..8).collect();
        for f in &basis {
            assert!(f.tilde(&all).is_zero());
            assert!(f.tilde(&[0, 1, 2]).is_zero());
        }
        let f = corollary_f((0, 1), None).unwrap();
        let b = hamming8_weight4_blocks();
        let bt = b.permuted(&transposition((0, 1)).unwrap()).unwrap();
        let only_b: Vec<_> = b.blocks().iter().filter(|x| !bt.blocks().contains(x)).collect();
        assert_eq!(only_b.len(), 8);
        for blk in only_b {
            assert_eq!(f.tilde(blk), r(1));
        }
    }

    #[test]
    fn tilde_of_full_domain_vanishes_via_gamma_identity() {
        // sum_y (gamma f)(y) over (k-1)-subsets of U equals k f~(U)
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let k = rng.gen_range(1..=4);
            let u: Vec<usize> = {
                let mut pts: Vec<usize> = (0..12).collect();
                for i in 0..8 {
                    let j = rng.gen_range(i..12);
                    pts.swap(i, j);
                }
                let mut p = pts[..8].to_vec();
                p.sort_unstable();
                p
            };
            let f = SubsetFn::from_values(
                12,
                k,
                subsets_of(&u, k).map(|s| (s, r(rng.gen_range(-5..=5)))),
            )
            .unwrap();
            let g = gamma(&f).unwrap();
            let lhs = subsets_of(&u, k - 1).fold(BigRational::zero(), |acc, y| acc + g.get(&y));
            assert_eq!(lhs, f.tilde(&u) * r(k as i64));
        }
    }

    #[test]
    fn hamming8_blocks_form_steiner_system() {
        let b = hamming8_weight4_blocks();
        assert_eq!(b.len(), 14);
        for t in combinations(8, 3) {
            let cover = b.blocks().iter().filter(|blk| is_sorted_subset(&t, blk)).count();
            assert_eq!(cover, 1);
        }
        for blk in b.blocks() {
            let comp: Vec<usize> = (0..8).filter(|p| !blk.contains(p)).collect();
            assert!(b.blocks().contains(&comp));
        }
    }

    #[test]
    fn corollary_f_for_every_transposition() {
        for (a, bb) in combinations(8, 2).map(|v| (v[0], v[1])) {
            assert_eq!(block_overlap((a, bb)).unwrap(), 6);
            let f = corollary_f((a, bb), None).unwrap();
            assert_eq!(f.degree(), 4);
            assert_eq!(f.as_fn().support_size(), 16);
            assert!(f.as_fn().values().all(|(_, v)| v == &r(1) || v == &r(-1)));
            assert_eq!(h8_weight4_sum(f.as_fn(), None), r(8));
        }
        assert!(corollary_f((3, 3), None).is_err());
        assert!(corollary_f((0, 8), None).is_err());
    }

    #[test]
    fn harmonic_enumerator_examples() {
        let rm3 = reed_muller_1(3).unwrap();
        let f = corollary_f((0, 1), None).unwrap();
        assert_eq!(hwe(&rm3, &f).unwrap(), Poly4::term(r(8), Monomial::xy(4, 4)));

        let u = Subspace3::standard(4).unwrap();
        let f4 = corollary_f((0, 1), Some(&u)).unwrap();
        let rm4 = reed_muller_1(4).unwrap();
        assert_eq!(hwe(&rm4, &f4).unwrap(), Poly4::term(r(16), Monomial::xy(8, 8)));

        // degree 1: the all-ones word contributes f~(full set) = 0
        for f in harm_basis(8, 1, 1000).unwrap() {
            let w = hwe(&rm3, &f).unwrap();
            assert!(w.coeff(&Monomial::xy(0, 8)).is_zero());
        }
        assert!(hwe(&rm4, &f).is_err());
    }

    #[test]
    fn enumerator_routes_agree_for_large_support() {
        let code = reed_muller_1(4).unwrap();
        let f = SubsetFn::from_values(16, 2, combinations(16, 2).map(|s| (s.clone(), r((s[0] * 3 + s[1]) as i64 % 5 - 2)))).unwrap();
        assert!(f.support_points().len() > TABLE_SUPPORT_MAX);
        let small = SubsetFn::from_values(16, 2, combinations(6, 2).map(|s| (s.clone(), r((s[0] + 2 * s[1]) as i64 % 3 - 1)))).unwrap();
        for g in [f, small] {
            let direct = code
                .codewords()
                .unwrap()
                .fold(Poly4::zero(), |acc, c| {
                    let wt = c.weight() as u32;
                    acc + Poly4::term(g.tilde(&c.support()), Monomial::xy(16 - wt, wt))
                });
            assert_eq!(subset_weight_enumerator(&code, &g).unwrap(), direct);
        }
    }

    #[test]
    fn bachoc_examples() {
        let p = Poly4::term(r(8), Monomial::xy(4, 4));
        assert_eq!(bachoc_transform(&p, 8, 4, &BigInt::from(16)).unwrap(), p);

        let p = Poly4::term(r(16), Monomial::xy(8, 8));
        let got = bachoc_transform(&p, 16, 4, &BigInt::from(32)).unwrap();
        assert_eq!(got, xy_power_form(4, 4, r(8)));
        let back = bachoc_transform(&got, 16, 4, &BigInt::from(2048)).unwrap();
        assert_eq!(back, p);

        assert!(bachoc_transform(&Poly4::term(r(1), Monomial::xy(8, 0)), 8, 1, &BigInt::from(16)).is_err());
        assert!(bachoc_transform(&Poly4::term(r(1), Monomial::xy(4, 3)), 8, 1, &BigInt::from(16)).is_err());
    }

    #[test]
    fn bachoc_identity_on_hamming_16() {
        let rm = reed_muller_1(4).unwrap();
        let h = rm.dual();
        let u = Subspace3::standard(4).unwrap();
        let f = corollary_f((2, 5), Some(&u)).unwrap();
        let primal = hwe(&rm, &f).unwrap();
        let dual = hwe(&h, &f).unwrap();
        assert_eq!(bachoc_transform(&primal, 16, 4, &rm.size()).unwrap(), dual);
        assert_eq!(dual, xy_power_form(4, 4, r(8)));
    }

    #[test]
    fn hwe_divisible_by_xy_power() {
        let h8 = extended_hamming(3).unwrap();
        for k in 1..=4 {
            for f in harm_basis(8, k, 1000).unwrap() {
                let w = hwe(&h8, &f).unwrap();
                let z = w.div_monomial(Monomial::xy(k as u32, k as u32));
                assert!(z.is_some(), "k = {k}");
                assert!(z.unwrap().is_xy_form_of_degree(8 - 2 * k as u32));
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let rm3 = reed_muller_1(3).unwrap();
        let all = Subspace3::standard(3).unwrap();
        let r3 = restrict_to_subspace(&rm3, &all).unwrap();
        assert_eq!(r3.fibers.len(), 14);
        assert!(r3.fibers.values().all(|&c| c == 1));
        for m in [4, 5] {
            let res = restrict_to_subspace(&reed_muller_1(m).unwrap(), &Subspace3::standard(m).unwrap()).unwrap();
            assert_eq!(res.image, extended_hamming(3).unwrap());
            assert!(res.fibers.values().all(|&c| c == 1 << (m - 3)));
        }
        // a code whose restriction is not H_8
        let bad = make_code(16, vec![Codeword::ones(16)]).unwrap();
        assert!(matches!(
            restrict_to_subspace(&bad, &Subspace3::standard(4).unwrap()),
            Err(Error::Verification(_))
        ));
    }

    #[test]
    fn subspace_validation() {
        assert!(Subspace3::new(4, [1, 2, 3]).is_err());
        assert!(Subspace3::new(3, [1, 2, 8]).is_err());
        assert!(Subspace3::new(2, [1, 2, 3]).is_err());
        let u = Subspace3::new(4, [3, 5, 9]).unwrap();
        assert_eq!(u.points()[0], 0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = Subspace3::random(6, &mut rng).unwrap();
        assert!(u.points().iter().all(|&p| p < 64));
    }

    #[test]
    fn thm12_examples() {
        let (p, d) = thm12_closed(3, 4, &r(8)).unwrap();
        assert_eq!(p, Poly4::term(r(8), Monomial::xy(4, 4)));
        assert_eq!(d, p);
        let (_, d4) = thm12_closed(4, 4, &r(8)).unwrap();
        assert_eq!(d4, xy_power_form(4, 4, r(8)));
        let (p0, d0) = thm12_closed(5, 4, &r(0)).unwrap();
        assert!(p0.is_zero() && d0.is_zero());
        for m in 3..=7 {
            for k in 1..=4 {
                let (_, d) = thm12_closed(m, k, &r(8)).unwrap();
                assert_eq!(d, thm12_dual_closed(m, k, &r(8)).unwrap());
                assert_ne!(d, thm12_printed_dual(m, k, &r(8)).unwrap());
            }
        }
        assert_eq!(thm12_printed_dual(3, 4, &r(8)).unwrap(), Poly4::term(r(32), Monomial::xy(4, 4)));
        assert!(thm12_closed(2, 4, &r(1)).is_err());
        assert!(thm12_closed(3, 5, &r(1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = corollary_f((1, 6), None).unwrap();
        let json = f.as_fn().to_json();
        assert!(json.starts_with(r#"{"n":8,"k":4,"values":[{"subset":[0,1,2,3],"#));
        assert_eq!(&SubsetFn::from_json(&json).unwrap(), f.as_fn());
        assert!(SubsetFn::from_json(r#"{"n":3,"k":1,"values":[{"subset":[5],"value":"1"}]}"#).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bachoc_identity_random_codes(
            n in 4usize..=10,
            rows in prop::collection::vec(any::<u16>(), 0..6),
            k in 1usize..=2,
            pick in any::<prop::sample::Index>(),
        ) {
            let code = make_code(
                n,
                rows.iter().map(|r| {
                    let s: Vec<usize> = (0..n).filter(|i| (r >> i) & 1 == 1).collect();
                    Codeword::from_support(n, &s).unwrap()
                }).collect(),
            ).unwrap();
            let basis = harm_basis(n, k, 1000).unwrap();
            prop_assume!(!basis.is_empty());
            let f = &basis[pick.index(basis.len())];
            let primal = hwe(&code, f).unwrap();
            let dual = hwe(&code.dual(), f).unwrap();
            prop_assert_eq!(&bachoc_transform(&primal, n, k, &code.size()).unwrap(), &dual);
            prop_assert_eq!(bachoc_transform(&dual, n, k, &code.dual().size()).unwrap(), primal);
        }
    }
}
