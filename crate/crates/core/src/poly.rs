//! Sparse polynomials in the four variables `w, z, x, y` with exact
//! rational coefficients.
//!
//! Every enumerator in the crate is a [`Poly4`]: Jacobi polynomials use all
//! four variables, weight enumerators and harmonic weight enumerators only
//! `x` and `y`. Terms are kept in a `BTreeMap` keyed by exponent tuple, so
//! equality is structural and iteration order is canonical.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input_err, Error, Result};

/// Sanity cap on a single exponent (code lengths never get close).
pub const MAX_EXPONENT: u32 = 1 << 20;

/// The four variables, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    W = 0,
    Z = 1,
    X = 2,
    Y = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::W, Var::Z, Var::X, Var::Y];

    pub fn name(self) -> &'static str {
        match self {
            Var::W => "w",
            Var::Z => "z",
            Var::X => "x",
            Var::Y => "y",
        }
    }

    fn from_name(s: &str) -> Option<Var> {
        match s {
            "w" => Some(Var::W),
            "z" => Some(Var::Z),
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            _ => None,
        }
    }
}

/// Exponent tuple `(e_w, e_z, e_x, e_y)`; ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u32; 4]);

impl Monomial {
    /// Panics if any exponent exceeds [`MAX_EXPONENT`].
    pub fn new(w: u32, z: u32, x: u32, y: u32) -> Self {
        Self::from_exps([w, z, x, y])
    }

    pub fn from_exps(exps: [u32; 4]) -> Self {
        assert!(
            exps.iter().all(|&e| e <= MAX_EXPONENT),
            "monomial exponent above sanity cap: {exps:?}"
        );
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial([0; 4])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v as usize] = 1;
        Monomial(e)
    }

    /// `x^a y^b`.
    pub fn xy(a: u32, b: u32) -> Self {
        Self::new(0, 0, a, b)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v as usize]
    }

    pub fn exps(&self) -> [u32; 4] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial::from_exps(e)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in `w, z, x, y` over the rationals. No stored
/// coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly4 {
    terms: BTreeMap<Monomial, BigRational>,
}

pub(crate) fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(rat(1), Monomial::var(v))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Poly4::zero();
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Poly4::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Sum of coefficients, i.e. the value at `w = z = x = y = 1`.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn eval(&self, at: &[BigRational; 4]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for var in Var::ALL {
                let e = m.exp(var);
                if e > 0 {
                    v *= num_traits::pow(at[var as usize].clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// Largest total degree of any term (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when only `x` and `y` occur and every term has `e_x + e_y = n`.
    pub fn is_xy_form_of_degree(&self, n: u32) -> bool {
        self.terms.keys().all(|m| {
            m.exp(Var::W) == 0 && m.exp(Var::Z) == 0 && m.exp(Var::X) + m.exp(Var::Y) == n
        })
    }

    pub fn scale(&self, c: &BigRational) -> Poly4 {
        if c.is_zero() {
            return Poly4::zero();
        }
        Poly4 {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`. Check [`Poly4::is_integral`] on the
    /// result where integrality is expected.
    pub fn scale_div(&self, d: &BigInt) -> Result<Poly4> {
        if d.is_zero() {
            return Err(input_err!("division of a polynomial by zero"));
        }
        Ok(self.scale(&BigRational::new(BigInt::one(), d.clone())))
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly4 {
        Poly4 {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Exact quotient by a monomial, or `None` if some term is not divisible.
    pub fn div_monomial(&self, m: Monomial) -> Option<Poly4> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            terms.insert(k.checked_div(m)?, v.clone());
        }
        Some(Poly4 { terms })
    }

    pub fn pow(&self, mut e: u32) -> Poly4 {
        let mut base = self.clone();
        let mut acc = Poly4::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution `v -> map[v]` for every variable. Each image
    /// must have total degree at most one.
    pub fn substitute(&self, map: &[Poly4; 4]) -> Result<Poly4> {
        for (v, image) in Var::ALL.iter().zip(map) {
            if image.total_degree() > 1 {
                return Err(input_err!(
                    "substitution image for {} is not a linear form: {image}",
                    v.name()
                ));
            }
        }
        let mut powers: HashMap<(usize, u32), Poly4> = HashMap::new();
        let mut out: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Poly4::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((v as usize, e))
                    .or_insert_with(|| map[v as usize].pow(e));
                prod = &prod * &*pw;
            }
            for (k, v) in prod.terms {
                *out.entry(k).or_insert_with(BigRational::zero) += v;
            }
        }
        Ok(Poly4::from_terms(out))
    }

    /// The MacWilliams substitution `w -> w+z, z -> w-z, x -> x+y, y -> x-y`.
    ///
    /// Equivalent to [`Poly4::substitute`] with that map, but works on each
    /// bihomogeneous component as a dense grid and runs a Horner scheme per
    /// axis, so degree-1024 enumerators transform in `O(n^2)` integer adds.
    pub fn macwilliams(&self) -> Poly4 {
        if self.is_zero() {
            return Poly4::zero();
        }
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));

        // (deg in w,z ; deg in x,y) -> entries (e_z, e_y, scaled numerator)
        let mut groups: BTreeMap<(u32, u32), Vec<(usize, usize, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let dw = m.exp(Var::W) + m.exp(Var::Z);
            let dx = m.exp(Var::X) + m.exp(Var::Y);
            let scaled = c.numer() * (&den / c.denom());
            groups.entry((dw, dx)).or_default().push((
                m.exp(Var::Z) as usize,
                m.exp(Var::Y) as usize,
                scaled,
            ));
        }

        let mut out = Poly4::zero();
        for ((dw, dx), entries) in groups {
            let rows = dw as usize + 1;
            let cols = dx as usize + 1;
            let mut grid = vec![vec![BigInt::zero(); cols]; rows];
            for (i, j, c) in entries {
                grid[i][j] = c;
            }
            for row in grid.iter_mut() {
                if row.iter().any(|c| !c.is_zero()) {
                    *row = hadamard_form(row);
                }
            }
            for j in 0..cols {
                let col: Vec<BigInt> = grid.iter().map(|r| r[j].clone()).collect();
                if col.iter().all(Zero::is_zero) {
                    continue;
                }
                for (i, c) in hadamard_form(&col).into_iter().enumerate() {
                    grid[i][j] = c;
                }
            }
            for (i, row) in grid.into_iter().enumerate() {
                for (j, c) in row.into_iter().enumerate() {
                    if !c.is_zero() {
                        let m = Monomial::new(dw - i as u32, i as u32, dx - j as u32, j as u32);
                        out.add_term(m, BigRational::new(c, den.clone()));
                    }
                }
            }
        }
        out
    }

    /// Canonical JSON encoding.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Poly4> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Given `p[j]` = coefficient of `u^(N-j) v^j` in a binary form of degree
/// `N`, returns the coefficients of `sum_j p[j] (u+v)^(N-j) (u-v)^j`.
fn hadamard_form(p: &[BigInt]) -> Vec<BigInt> {
    let n = p.len() - 1;
    // Horner from the top: S <- S*(u-v) + p[j]*(u+v)^(n-j).
    let mut s: Vec<BigInt> = Vec::with_capacity(n + 1);
    s.push(p[n].clone());
    let mut pascal: Vec<BigInt> = Vec::with_capacity(n + 1);
    pascal.push(BigInt::one());
    for j in (0..n).rev() {
        s.push(BigInt::zero());
        for r in (1..s.len()).rev() {
            let (lo, hi) = s.split_at_mut(r);
            hi[0] -= &lo[r - 1];
        }
        pascal.push(BigInt::zero());
        for r in (1..pascal.len()).rev() {
            let (lo, hi) = pascal.split_at_mut(r);
            hi[0] += &lo[r - 1];
        }
        let pj = &p[j];
        if pj.is_zero() {
            continue;
        }
        if pj.is_one() {
            for (a, b) in s.iter_mut().zip(&pascal) {
                *a += b;
            }
        } else if (-pj).is_one() {
            for (a, b) in s.iter_mut().zip(&pascal) {
                *a -= b;
            }
        } else {
            for (a, b) in s.iter_mut().zip(&pascal) {
                *a += pj * b;
            }
        }
    }
    s
}

impl Add for &Poly4 {
    type Output = Poly4;
    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly4 {
    type Output = Poly4;
    fn add(mut self, rhs: Poly4) -> Poly4 {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly4> for Poly4 {
    fn add_assign(&mut self, rhs: &Poly4) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly4 {
    type Output = Poly4;
    fn sub(mut self, rhs: Poly4) -> Poly4 {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Poly4> for Poly4 {
    fn sub_assign(&mut self, rhs: &Poly4) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        Poly4 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        -&self
    }
}

impl Mul for &Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: &Poly4) -> Poly4 {
        let (a, b) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if a.is_zero() {
            return Poly4::zero();
        }
        // Integer fast path: most enumerators have integral coefficients.
        if a.is_integral() && b.is_integral() {
            let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(b.len() * 2);
            for (ma, ca) in &a.terms {
                let ca = ca.numer();
                for (mb, cb) in &b.terms {
                    *acc.entry(ma.mul(*mb)).or_insert_with(BigInt::zero) += ca * cb.numer();
                }
            }
            return Poly4 {
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, BigRational::from_integer(c)))
                    .collect(),
            };
        }
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                *acc.entry(ma.mul(*mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Poly4::from_terms(acc)
    }
}

impl Mul for Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: Poly4) -> Poly4 {
        &self * &rhs
    }
}

impl From<Var> for Poly4 {
    fn from(v: Var) -> Self {
        Poly4::var(v)
    }
}

impl fmt::Display for Poly4 {
    /// Terms in descending lexicographic order, e.g. `x^8 + 14*x^4*y^4 + y^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly4 {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form: signed terms, each a
    /// `*`-separated product of rational constants and `v^e` powers.
    fn from_str(s: &str) -> Result<Poly4> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly4::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in '{s}'")));
            }
            let mut coeff = rat(sign);
            let mut exps = [0u32; 4];
            for factor in body.split('*') {
                if let Some(v) = factor.get(..1).and_then(Var::from_name) {
                    let e = match &factor[1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|d| d.parse::<u32>().ok())
                            .filter(|&e| e <= MAX_EXPONENT)
                            .ok_or_else(|| Error::Parse(format!("bad power '{factor}'")))?,
                    };
                    exps[v as usize] += e;
                } else {
                    let c = BigRational::from_str(factor)
                        .map_err(|_| Error::Parse(format!("bad factor '{factor}'")))?;
                    coeff *= c;
                }
            }
            out.add_term(Monomial::from_exps(exps), coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: [u32; 4],
    coeff: String,
}

impl Serialize for Poly4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            vars: Var::ALL.iter().map(|v| v.name().to_string()).collect(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.exps(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.vars != ["w", "z", "x", "y"] {
            return Err(D::Error::custom(format!(
                "expected vars [w,z,x,y], found {:?}",
                raw.vars
            )));
        }
        let mut p = Poly4::zero();
        for t in raw.terms {
            if t.exp.iter().any(|&e| e > MAX_EXPONENT) {
                return Err(D::Error::custom("exponent above sanity cap"));
            }
            let c = BigRational::from_str(&t.coeff)
                .map_err(|_| D::Error::custom(format!("bad coefficient '{}'", t.coeff)))?;
            p.add_term(Monomial(t.exp), c);
        }
        Ok(p)
    }
}
