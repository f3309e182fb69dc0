//! Jacobi polynomials `J_{C,T}`, their MacWilliams-type transform and the
//! closed forms for `RM(1,m)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::design::{DesignReport, Method, Witness};
use crate::error::{input_err, Error, Result};
use crate::gf2code::{merge_counts, overlap, popcount, BinaryCode, Codeword};
use crate::poly::{rat, Monomial, Poly4};
use crate::subsets::{binomial, combinations};
use crate::Limits;

/// Four distinct points of `F_2^m`, as sorted coordinate indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourSet {
    m: usize,
    points: [usize; 4],
}

impl FourSet {
    pub fn new(m: usize, mut points: [usize; 4]) -> Result<Self> {
        if m > 20 {
            return Err(input_err!("m = {m} is out of range"));
        }
        points.sort_unstable();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(input_err!("points {points:?} are not distinct"));
        }
        if points[3] >= 1 << m {
            return Err(input_err!("point {} lies outside F_2^{m}", points[3]));
        }
        Ok(FourSet { m, points })
    }

    /// `T1 = {0, e1, e2, e3}` for the independent class and
    /// `T2 = {0, e1, e2, e1+e2}` for the dependent one.
    pub fn canonical(m: usize, class: TClass) -> Result<Self> {
        if m < 3 {
            return Err(input_err!("canonical witnesses need m >= 3"));
        }
        match class {
            TClass::AffinelyIndependent => FourSet::new(m, [0, 1, 2, 4]),
            TClass::AffinelyDependent => FourSet::new(m, [0, 1, 2, 3]),
        }
    }

    /// A uniformly random 4-set of the requested class.
    pub fn random<R: Rng>(m: usize, class: TClass, rng: &mut R) -> Result<Self> {
        if m < 3 {
            return Err(input_err!("random 4-sets of both classes need m >= 3"));
        }
        let n = 1usize << m;
        match class {
            TClass::AffinelyDependent => {
                let v = sample(rng, n, 3);
                let (a, b, c) = (v.index(0), v.index(1), v.index(2));
                FourSet::new(m, [a, b, c, a ^ b ^ c])
            }
            TClass::AffinelyIndependent => loop {
                let v = sample(rng, n, 4);
                let t = FourSet::new(m, [v.index(0), v.index(1), v.index(2), v.index(3)])?;
                if classify_four_set(&t) == class {
                    return Ok(t);
                }
            },
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> [usize; 4] {
        self.points
    }

    /// Image under the translation `p -> p ^ v`.
    pub fn translate(&self, v: usize) -> Result<Self> {
        FourSet::new(self.m, self.points.map(|p| p ^ v))
    }
}

/// Whether the four points sum to zero in `F_2^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TClass {
    AffinelyIndependent,
    AffinelyDependent,
}

impl TClass {
    pub const ALL: [TClass; 2] = [TClass::AffinelyIndependent, TClass::AffinelyDependent];

    pub fn short_name(self) -> &'static str {
        match self {
            TClass::AffinelyIndependent => "indep",
            TClass::AffinelyDependent => "dep",
        }
    }
}

impl fmt::Display for TClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for TClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "indep" | "independent" => Ok(TClass::AffinelyIndependent),
            "dep" | "dependent" => Ok(TClass::AffinelyDependent),
            _ => Err(input_err!("unknown class '{s}' (expected indep or dep)")),
        }
    }
}

pub fn classify_four_set(t: &FourSet) -> TClass {
    let [a, b, c, d] = t.points;
    if a ^ b ^ c ^ d == 0 {
        TClass::AffinelyDependent
    } else {
        TClass::AffinelyIndependent
    }
}

/// Which code of the pair `RM(1,m)`, `H_{2^m}` a closed form describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Code,
    Dual,
}

fn t_mask(n: usize, t: &[usize]) -> Result<Codeword> {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(input_err!("reference set {t:?} repeats a point"));
    }
    Codeword::from_support(n, &sorted)
}

/// Histogram of `(|supp c ∩ T|, wt c)` over all codewords, flattened as
/// `m1 * (n + 1) + wt`.
fn jacobi_counts(code: &BinaryCode, mask: &Codeword) -> Result<Vec<u64>> {
    let n = code.len();
    let t = mask.weight();
    let tw = mask.words();
    code.fold_codewords(
        || vec![0u64; (t + 1) * (n + 1)],
        |acc, w| acc[overlap(w, tw) * (n + 1) + popcount(w)] += 1,
        merge_counts,
    )
}

/// `J_{C,T} = sum_c w^(m0) z^(m1) x^(n0) y^(n1)`, where `m1 = |supp c ∩ T|`
/// and `n1 = wt c - m1`.
pub fn jacobi(code: &BinaryCode, t: &[usize]) -> Result<Poly4> {
    let n = code.len();
    let mask = t_mask(n, t)?;
    let tl = t.len();
    let counts = jacobi_counts(code, &mask)?;
    Ok(Poly4::from_terms(counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(idx, &c)| {
        let (m1, wt) = (idx / (n + 1), idx % (n + 1));
        let n1 = wt - m1;
        let e = Monomial::new((tl - m1) as u32, m1 as u32, (n - tl - n1) as u32, n1 as u32);
        (e, rat(c))
    })))
}

/// `J(w+z, w-z, x+y, x-y) / |C|`. With `require_integral`, a fractional
/// coefficient is a verification error.
pub fn jacobi_transform(j: &Poly4, code_size: &BigInt, require_integral: bool) -> Result<Poly4> {
    if code_size <= &BigInt::zero() {
        return Err(input_err!("code size must be positive"));
    }
    let out = j.macwilliams().scale_div(code_size)?;
    if require_integral && !out.is_integral() {
        return Err(Error::Verification(format!(
            "transform with |C| = {code_size} has fractional coefficients"
        )));
    }
    Ok(out)
}

fn wzxy(c: BigInt, w: u32, z: u32, x: u32, y: u32) -> (Monomial, BigRational) {
    (Monomial::new(w, z, x, y), BigRational::from_integer(c))
}

fn check_m(m: usize) -> Result<()> {
    if !(3..=20).contains(&m) {
        return Err(input_err!("closed forms need 3 <= m <= 20, got {m}"));
    }
    Ok(())
}

/// `J_{RM(1,m),T}` for a 4-set `T` of the given class.
pub fn rm1_jacobi_closed(m: usize, class: TClass) -> Result<Poly4> {
    check_m(m)?;
    let n = 1u32 << m;
    let h = n / 2;
    let p = |e: usize| BigInt::one() << e;
    let terms = match class {
        TClass::AffinelyIndependent => vec![
            wzxy(p(0), 4, 0, n - 4, 0),
            wzxy(p(m - 3) - 1, 4, 0, h - 4, h),
            wzxy(p(m - 1), 3, 1, h - 3, h - 1),
            wzxy(p(m - 2) * 3, 2, 2, h - 2, h - 2),
            wzxy(p(m - 1), 1, 3, h - 1, h - 3),
            wzxy(p(m - 3) - 1, 0, 4, h, h - 4),
            wzxy(p(0), 0, 4, 0, n - 4),
        ],
        TClass::AffinelyDependent => vec![
            wzxy(p(0), 4, 0, n - 4, 0),
            wzxy(p(m - 2) - 1, 4, 0, h - 4, h),
            wzxy(p(m - 1) * 3, 2, 2, h - 2, h - 2),
            wzxy(p(m - 2) - 1, 0, 4, h, h - 4),
            wzxy(p(0), 0, 4, 0, n - 4),
        ],
    };
    Ok(Poly4::from_terms(terms))
}

/// `J_{H_{2^m},T}`, obtained by transforming [`rm1_jacobi_closed`].
pub fn rm1_dual_jacobi_closed(m: usize, class: TClass) -> Result<Poly4> {
    let j = rm1_jacobi_closed(m, class)?;
    jacobi_transform(&j, &(BigInt::one() << (m + 1)), true)
}

/// `wy - xz`.
fn wy_minus_xz() -> Poly4 {
    Poly4::from_terms([(Monomial::new(1, 0, 0, 1), rat(1)), (Monomial::new(0, 1, 1, 0), rat(-1))])
}

/// `J_{T1} - J_{T2}` for an independent `T1` and a dependent `T2`:
/// `-2^(m-3) x^(h-4) y^(h-4) (wy - xz)^4` on the code side and
/// `-(x^2 - y^2)^(h-4) (wy - xz)^4` on the dual side, `h = 2^(m-1)`.
pub fn jacobi_difference_closed(m: usize, side: Side) -> Result<Poly4> {
    check_m(m)?;
    let h = 1u32 << (m - 1);
    let quartic = wy_minus_xz().pow(4);
    Ok(match side {
        Side::Code => quartic
            .mul_monomial(Monomial::xy(h - 4, h - 4))
            .scale(&-rat(BigInt::one() << (m - 3))),
        Side::Dual => {
            let x2_y2 = Poly4::from_terms([(Monomial::xy(2, 0), rat(1)), (Monomial::xy(0, 2), rat(-1))]);
            -(&x2_y2.pow(h - 4) * &quartic)
        }
    })
}

/// Histogram of `wt(c|_T)` for `i = 0..=|T|` over the codewords not in
/// `exclude`.
pub fn restriction_profile(code: &BinaryCode, t: &[usize], exclude: &[Codeword]) -> Result<Vec<u64>> {
    let n = code.len();
    let mask = t_mask(n, t)?;
    if exclude.iter().any(|c| c.len() != n) {
        return Err(input_err!("excluded word has the wrong length"));
    }
    let excluded: Vec<&[u64]> = exclude.iter().map(Codeword::words).collect();
    let tw = mask.words();
    code.fold_codewords(
        || vec![0u64; t.len() + 1],
        |acc, w| {
            if !excluded.contains(&w) {
                acc[overlap(w, tw)] += 1;
            }
        },
        merge_counts,
    )
}

/// How [`jacobi_design_test`] chooses its reference sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Every t-subset, in lexicographic order.
    All,
    /// `count` uniformly random t-subsets drawn from a seeded generator.
    Sample { count: usize, seed: u64 },
}

/// The monomial of `J_{C,T}` counting weight-`ell` codewords with `T` in
/// their support.
pub fn design_monomial(n: usize, ell: usize, t: usize) -> Option<Monomial> {
    (t <= ell && ell <= n).then(|| Monomial::new(0, t as u32, (n - ell) as u32, (ell - t) as u32))
}

/// Decides whether the shell `C_ell` is a t-design from the coefficient of
/// `z^t x^(n-ell) y^(ell-t)` in `J_{C,T}` over the tested t-sets `T`.
///
/// Stops at the first `T` whose coefficient differs from the first one.
/// In sampled mode a positive verdict only covers the sampled sets.
pub fn jacobi_design_test(
    code: &BinaryCode,
    ell: usize,
    t: usize,
    mode: SampleMode,
    limits: &Limits,
) -> Result<DesignReport> {
    let n = code.len();
    if t == 0 || t > n {
        return Err(input_err!("need 1 <= t <= n, got t={t}, n={n}"));
    }
    if ell > n {
        return Err(input_err!("weight {ell} exceeds code length {n}"));
    }
    code.check_enumerable_with(limits.max_dimension)?;
    let dist = code.weight_distribution()?;
    if dist[ell] == 0 {
        return Ok(DesignReport::vacuous(t, Method::JacobiCoeff));
    }

    let sets: Box<dyn Iterator<Item = Vec<usize>>> = match mode {
        SampleMode::All => {
            let total = binomial(n as u64, t as u64);
            if total > limits.subset_cap {
                return Err(Error::Capacity(format!(
                    "C({n},{t}) = {total} reference sets exceed the cap {}; use sampling",
                    limits.subset_cap
                )));
            }
            Box::new(combinations(n, t))
        }
        SampleMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let drawn: Vec<Vec<usize>> = (0..count)
                .map(|_| {
                    let mut s = sample(&mut rng, n, t).into_vec();
                    s.sort_unstable();
                    s
                })
                .collect();
            Box::new(drawn.into_iter())
        }
    };

    let target = design_monomial(n, ell, t);
    let mut first: Option<(Vec<usize>, BigInt)> = None;
    for set in sets {
        let j = jacobi(code, &set)?;
        let c = target.map(|mono| j.coeff(&mono)).unwrap_or_else(BigRational::zero).to_integer();
        match &first {
            None => first = Some((set, c)),
            Some((t0, c0)) if *c0 != c => {
                let to_u64 = |v: &BigInt| u64::try_from(v).expect("coverage counts are small");
                return Ok(DesignReport::refuted(
                    t,
                    Method::JacobiCoeff,
                    Witness::Coverage { sets: [t0.clone(), set], counts: [to_u64(c0), to_u64(&c)] },
                ));
            }
            Some(_) => {}
        }
    }
    match first {
        None => Err(input_err!("no reference sets were tested")),
        Some((_, c)) => Ok(DesignReport::design(
            t,
            Method::JacobiCoeff,
            u64::try_from(&c).expect("coverage counts are small"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2code::{extended_hamming, make_code, reed_muller_1};
    use proptest::prelude::*;
    use rand::Rng;

    fn parse(s: &str) -> Poly4 {
        s.parse().unwrap()
    }

    #[test]
    fn jacobi_examples_m3() {
        let rm3 = reed_muller_1(3).unwrap();
        assert_eq!(jacobi(&rm3, &[]).unwrap(), rm3.weight_enumerator().unwrap());
        assert_eq!(
            jacobi(&rm3, &[0, 1, 2, 4]).unwrap(),
            parse("w^4*x^4 + 4*w^3*z*x*y^3 + 6*w^2*z^2*x^2*y^2 + 4*w*z^3*x^3*y + z^4*y^4")
        );
        assert_eq!(
            jacobi(&rm3, &[0, 1, 2, 3]).unwrap(),
            parse("w^4*x^4 + w^4*y^4 + 12*w^2*z^2*x^2*y^2 + z^4*x^4 + z^4*y^4")
        );
        assert!(jacobi(&rm3, &[0, 8]).is_err());
        assert!(jacobi(&rm3, &[1, 1]).is_err());
    }

    #[test]
    fn classification() {
        let c = |p| classify_four_set(&FourSet::new(3, p).unwrap());
        assert_eq!(c([0, 1, 2, 3]), TClass::AffinelyDependent);
        assert_eq!(c([0, 1, 2, 4]), TClass::AffinelyIndependent);
        assert_eq!(c([1, 2, 4, 7]), TClass::AffinelyDependent);
        assert!(FourSet::new(3, [0, 1, 1, 2]).is_err());
        assert!(FourSet::new(3, [0, 1, 2, 8]).is_err());
        let rm3 = reed_muller_1(3).unwrap();
        assert_eq!(
            jacobi(&rm3, &[1, 2, 4, 7]).unwrap(),
            rm1_jacobi_closed(3, TClass::AffinelyDependent).unwrap()
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            rm1_jacobi_closed(3, TClass::AffinelyIndependent).unwrap(),
            jacobi(&reed_muller_1(3).unwrap(), &[0, 1, 2, 4]).unwrap()
        );
        let dep4 = rm1_jacobi_closed(4, TClass::AffinelyDependent).unwrap();
        assert_eq!(dep4.coeff(&Monomial::new(2, 2, 6, 6)), rat(24));
        for m in 3..=10 {
            for class in TClass::ALL {
                let j = rm1_jacobi_closed(m, class).unwrap();
                assert_eq!(j.coefficient_sum(), rat(1u64 << (m + 1)));
            }
        }
        assert!(rm1_jacobi_closed(2, TClass::AffinelyIndependent).is_err());
    }

    #[test]
    fn dual_closed_forms_small_m() {
        for class in TClass::ALL {
            assert_eq!(
                rm1_dual_jacobi_closed(3, class).unwrap(),
                rm1_jacobi_closed(3, class).unwrap()
            );
            let t = FourSet::canonical(4, class).unwrap().points();
            assert_eq!(
                rm1_dual_jacobi_closed(4, class).unwrap(),
                jacobi(&extended_hamming(4).unwrap(), &t).unwrap()
            );
        }
    }

    #[test]
    fn transform_examples() {
        let rm3 = reed_muller_1(3).unwrap();
        let we = rm3.weight_enumerator().unwrap();
        assert_eq!(jacobi_transform(&we, &BigInt::from(16), true).unwrap(), we);
        let rm4 = reed_muller_1(4).unwrap();
        let h16 = extended_hamming(4).unwrap();
        for t in [[0, 1, 2, 4], [0, 1, 2, 3]] {
            let j = jacobi(&rm4, &t).unwrap();
            let jd = jacobi_transform(&j, &rm4.size(), true).unwrap();
            assert_eq!(jd, jacobi(&h16, &t).unwrap());
            assert_eq!(jacobi_transform(&jd, &h16.size(), true).unwrap(), j);
        }
        assert!(matches!(
            jacobi_transform(&parse("x"), &BigInt::from(2), true),
            Err(Error::Verification(_))
        ));
    }

    #[test]
    fn difference_identities() {
        assert_eq!(jacobi_difference_closed(3, Side::Code).unwrap(), -wy_minus_xz().pow(4));
        for m in 3..=8 {
            let code = &rm1_jacobi_closed(m, TClass::AffinelyIndependent).unwrap()
                - &rm1_jacobi_closed(m, TClass::AffinelyDependent).unwrap();
            assert_eq!(code, jacobi_difference_closed(m, Side::Code).unwrap());
            let dual = &rm1_dual_jacobi_closed(m, TClass::AffinelyIndependent).unwrap()
                - &rm1_dual_jacobi_closed(m, TClass::AffinelyDependent).unwrap();
            assert_eq!(dual, jacobi_difference_closed(m, Side::Dual).unwrap());
            let h = 1u32 << (m - 1);
            let gap = code.coeff(&Monomial::new(0, 4, h, h - 4));
            assert_eq!(gap, -rat(1u64 << (m - 3)));
        }
    }

    #[test]
    fn lemma_profiles_canonical() {
        for m in 3..=8 {
            let code = reed_muller_1(m).unwrap();
            let n = 1usize << m;
            let ex = [Codeword::zeros(n), Codeword::ones(n)];
            let p = |e: usize| 1u64 << e;
            let indep = restriction_profile(&code, &[0, 1, 2, 4], &ex).unwrap();
            assert_eq!(indep, vec![p(m - 3) - 1, p(m - 1), 3 * p(m - 2), p(m - 1), p(m - 3) - 1]);
            let dep = restriction_profile(&code, &[0, 1, 2, 3], &ex).unwrap();
            assert_eq!(dep, vec![p(m - 2) - 1, 0, 3 * p(m - 1), 0, p(m - 2) - 1]);
            assert_eq!(restriction_profile(&code, &[], &ex).unwrap(), vec![p(m + 1) - 2]);
        }
    }

    #[test]
    fn translation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 3..=6 {
            let code = reed_muller_1(m).unwrap();
            for class in TClass::ALL {
                for _ in 0..5 {
                    let t = FourSet::random(m, class, &mut rng).unwrap();
                    assert_eq!(classify_four_set(&t), class);
                    let v = rng.gen_range(0..1usize << m);
                    let tv = t.translate(v).unwrap();
                    assert_eq!(classify_four_set(&tv), class);
                    assert_eq!(jacobi(&code, &t.points()).unwrap(), jacobi(&code, &tv.points()).unwrap());
                }
            }
        }
    }

    #[test]
    fn jacobi_design_examples() {
        let lim = Limits::default();
        let rm3 = reed_muller_1(3).unwrap();
        let r = jacobi_design_test(&rm3, 4, 3, SampleMode::All, &lim).unwrap();
        assert!(r.is_design);
        assert_eq!(r.lambda, Some(1));

        for m in 3..=5 {
            let code = reed_muller_1(m).unwrap();
            let r = jacobi_design_test(&code, 1 << (m - 1), 4, SampleMode::All, &lim).unwrap();
            assert!(!r.is_design);
            let Some(Witness::Coverage { sets, counts }) = r.witness else { panic!("missing witness") };
            let classes: Vec<TClass> = sets
                .iter()
                .map(|s| classify_four_set(&FourSet::new(m, s.clone().try_into().unwrap()).unwrap()))
                .collect();
            assert_ne!(classes[0], classes[1]);
            assert_eq!(counts[0].abs_diff(counts[1]), 1 << (m - 3));
        }

        let h16 = extended_hamming(4).unwrap();
        let r = jacobi_design_test(&h16, 4, 3, SampleMode::All, &lim).unwrap();
        assert!(r.is_design);
        assert_eq!(r.lambda, Some(1));

        let r = jacobi_design_test(&h16, 5, 3, SampleMode::All, &lim).unwrap();
        assert!(r.vacuous && !r.is_design);

        let s = SampleMode::Sample { count: 30, seed: 0 };
        assert_eq!(
            jacobi_design_test(&h16, 8, 3, s, &lim).unwrap(),
            jacobi_design_test(&h16, 8, 3, s, &lim).unwrap()
        );
        let small = Limits { subset_cap: 100, ..lim };
        assert!(matches!(jacobi_design_test(&h16, 8, 4, SampleMode::All, &small), Err(Error::Capacity(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn transform_matches_dual_enumeration(
            n in 4usize..=12,
            rows in prop::collection::vec(any::<u16>(), 0..7),
            t_bits in any::<u16>(),
        ) {
            let code = make_code(
                n,
                rows.iter().map(|r| {
                    let s: Vec<usize> = (0..n).filter(|i| (r >> i) & 1 == 1).collect();
                    Codeword::from_support(n, &s).unwrap()
                }).collect(),
            ).unwrap();
            let t: Vec<usize> = (0..n).filter(|i| (t_bits >> i) & 1 == 1).take(4).collect();
            let j = jacobi(&code, &t).unwrap();
            prop_assert_eq!(j.coefficient_sum(), BigRational::from_integer(code.size()));
            let specialised = j.substitute(&[
                Poly4::var(crate::poly::Var::X),
                Poly4::var(crate::poly::Var::Y),
                Poly4::var(crate::poly::Var::X),
                Poly4::var(crate::poly::Var::Y),
            ]).unwrap();
            prop_assert_eq!(specialised, code.weight_enumerator().unwrap());
            let dual = code.dual();
            prop_assert_eq!(jacobi_transform(&j, &code.size(), true).unwrap(), jacobi(&dual, &t).unwrap());
        }
    }
}
