//! t-design tests by direct counting, by the harmonic criterion and by
//! Jacobi coefficients; the Assmus–Mattson bound; and the end-to-end check
//! that no shell of `RM(1,m)` or `H_{2^m}` is a 4-design.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{input_err, Error, Result};
use crate::gf2code::{extended_hamming, reed_muller_1, BinaryCode, BlockSet};
use crate::harmonic::{
    bachoc_transform, corollary_f, h8_weight4_sum, harm_basis, hwe, standard_tableaux, thm12_closed, Subspace3,
};
use crate::jacobi::{
    design_monomial, jacobi_design_test, jacobi_difference_closed, jacobi_transform, rm1_dual_jacobi_closed,
    rm1_jacobi_closed, SampleMode, Side, TClass,
};
use crate::poly::{rat, Monomial, Poly4};
use crate::subsets::{binomial, colex_rank, combinations, subsets_of};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    DirectCount,
    Delsarte,
    JacobiCoeff,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::DirectCount, Method::Delsarte, Method::JacobiCoeff];

    pub fn name(self) -> &'static str {
        match self {
            Method::DirectCount => "direct",
            Method::Delsarte => "delsarte",
            Method::JacobiCoeff => "jacobi",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| input_err!("unknown method '{s}' (expected direct, delsarte or jacobi)"))
    }
}

/// Evidence that a block set is not a t-design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two t-sets lying in different numbers of blocks.
    Coverage { sets: [Vec<usize>; 2], counts: [u64; 2] },
    /// A harmonic basis function of degree `k` whose extension does not sum
    /// to zero over the blocks.
    Harmonic { k: usize, index: usize, sum: BigRational },
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Coverage { sets, counts } => json!({ "sets": sets, "counts": counts }),
            Witness::Harmonic { k, index, sum } => {
                json!({ "k": k, "basis_index": index, "sum": sum.to_string() })
            }
        }
    }
}

/// Verdict of one design test. `is_design` holds exactly when `lambda` is
/// present; a refutation carries a witness unless the input was empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub is_design: bool,
    pub t: usize,
    pub lambda: Option<u64>,
    pub witness: Option<Witness>,
    pub method: Method,
    /// No blocks: nothing to test, never reported as a design.
    pub vacuous: bool,
}

impl DesignReport {
    pub(crate) fn design(t: usize, method: Method, lambda: u64) -> Self {
        DesignReport { is_design: true, t, lambda: Some(lambda), witness: None, method, vacuous: false }
    }

    pub(crate) fn refuted(t: usize, method: Method, witness: Witness) -> Self {
        DesignReport { is_design: false, t, lambda: None, witness: Some(witness), method, vacuous: false }
    }

    pub(crate) fn vacuous(t: usize, method: Method) -> Self {
        DesignReport { is_design: false, t, lambda: None, witness: None, method, vacuous: true }
    }

    /// One record per (shell, t).
    pub fn to_json(&self, code: &str, ell: Option<usize>) -> Value {
        json!({
            "code": code,
            "ell": ell,
            "t": self.t,
            "method": self.method.name(),
            "is_design": self.is_design,
            "lambda": self.lambda,
            "witness": self.witness.as_ref().map(Witness::to_json),
            "vacuous": self.vacuous,
        })
    }

    /// The compact record used by the Jacobi route.
    pub fn to_jacobi_json(&self) -> Value {
        let witnesses = match &self.witness {
            Some(Witness::Coverage { sets, .. }) => json!(sets),
            _ => Value::Null,
        };
        json!({ "design": self.is_design, "t": self.t, "lambda": self.lambda, "witnesses": witnesses })
    }
}

impl fmt::Display for DesignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] t={}: ", self.method, self.t)?;
        if self.vacuous {
            return f.write_str("vacuous (no blocks)");
        }
        match (&self.lambda, &self.witness) {
            (Some(l), _) => write!(f, "design, lambda={l}"),
            (None, Some(Witness::Coverage { sets, counts })) => write!(
                f,
                "not a design: {:?} in {} blocks, {:?} in {} blocks",
                sets[0], counts[0], sets[1], counts[1]
            ),
            (None, Some(Witness::Harmonic { k, index, sum })) => {
                write!(f, "not a design: harmonic basis function {index} of degree {k} sums to {sum}")
            }
            (None, None) => f.write_str("not a design"),
        }
    }
}

fn check_t(b: &BlockSet, t: usize) -> Result<()> {
    let n = b.points();
    if t == 0 || t > n {
        return Err(input_err!("need 1 <= t <= n, got t={t}, n={n}"));
    }
    Ok(())
}

/// `|B| C(k,t) / C(n,t)` for blocks of size `k`, or `None` if not integral.
fn double_count_lambda(blocks: usize, k: usize, n: usize, t: usize) -> Option<u64> {
    let num = BigInt::from(blocks) * BigInt::from(binomial(k as u64, t as u64));
    let den = BigInt::from(binomial(n as u64, t as u64));
    (&num % &den).is_zero().then(|| u64::try_from(num / den).expect("lambda fits in u64"))
}

/// Counts, for every t-subset of the points, the blocks containing it.
///
/// Repeated blocks count with multiplicity. The witness pair is the
/// lexicographically first least-covered and most-covered t-sets.
pub fn is_t_design(b: &BlockSet, t: usize, subset_cap: u64) -> Result<DesignReport> {
    check_t(b, t)?;
    if b.is_empty() {
        return Ok(DesignReport::vacuous(t, Method::DirectCount));
    }
    let n = b.points();
    let total = binomial(n as u64, t as u64);
    if total > subset_cap {
        return Err(Error::Capacity(format!(
            "C({n},{t}) = {total} exceeds the subset cap {subset_cap}; use the jacobi method"
        )));
    }
    let mut counts = vec![0u64; total as usize];
    for blk in b.blocks() {
        for s in subsets_of(blk, t) {
            counts[colex_rank(&s) as usize] += 1;
        }
    }
    let mut lo: Option<(Vec<usize>, u64)> = None;
    let mut hi: Option<(Vec<usize>, u64)> = None;
    for s in combinations(n, t) {
        let c = counts[colex_rank(&s) as usize];
        if lo.as_ref().is_none_or(|(_, l)| c < *l) {
            lo = Some((s.clone(), c));
        }
        if hi.as_ref().is_none_or(|(_, h)| c > *h) {
            hi = Some((s, c));
        }
    }
    let ((ls, lc), (hs, hc)) = (lo.expect("t <= n"), hi.expect("t <= n"));
    if lc == hc {
        Ok(DesignReport::design(t, Method::DirectCount, lc))
    } else {
        Ok(DesignReport::refuted(t, Method::DirectCount, Witness::Coverage { sets: [ls, hs], counts: [lc, hc] }))
    }
}

/// Harmonic criterion: blocks of a common size form a t-design iff
/// `sum_b f~(b) = 0` for every `f` in `Harm_k`, `1 <= k <= t`.
///
/// Runs over the polytabloid basis of each `Harm_k`; the witness names the
/// degree and the index of the tableau in [`standard_tableaux`] order.
/// Only meaningful for `t` up to the block size.
pub fn delsarte_test(b: &BlockSet, t: usize, subset_cap: u64) -> Result<DesignReport> {
    check_t(b, t)?;
    if b.is_empty() {
        return Ok(DesignReport::vacuous(t, Method::Delsarte));
    }
    let n = b.points();
    let size = b.uniform_size().ok_or_else(|| input_err!("the harmonic criterion needs blocks of one size"))?;
    let total = binomial(n as u64, t as u64);
    if total > subset_cap {
        return Err(Error::Capacity(format!("C({n},{t}) = {total} exceeds the subset cap {subset_cap}")));
    }
    let masks = b.masks();
    for k in 1..=t {
        for (index, tab) in standard_tableaux(n, k).enumerate() {
            let sum: i64 = masks.iter().map(|m| tab.tilde_mask(m)).sum();
            if sum != 0 {
                return Ok(DesignReport::refuted(t, Method::Delsarte, Witness::Harmonic { k, index, sum: rat(sum) }));
            }
        }
    }
    let lambda = double_count_lambda(b.len(), size, n, t)
        .ok_or_else(|| Error::Verification(format!("harmonic sums vanish but lambda is fractional for t={t}")))?;
    Ok(DesignReport::design(t, Method::Delsarte, lambda))
}

/// [`delsarte_test`] over the elimination basis of [`harm_basis`]; the
/// witness index refers to that basis.
pub fn delsarte_test_elimination(b: &BlockSet, t: usize, harm_cap: u64) -> Result<DesignReport> {
    check_t(b, t)?;
    if b.is_empty() {
        return Ok(DesignReport::vacuous(t, Method::Delsarte));
    }
    let n = b.points();
    let size = b.uniform_size().ok_or_else(|| input_err!("the harmonic criterion needs blocks of one size"))?;
    for k in 1..=t {
        for (index, f) in harm_basis(n, k, harm_cap)?.iter().enumerate() {
            let sum = b.blocks().iter().fold(BigRational::zero(), |acc, blk| acc + f.tilde(blk));
            if !sum.is_zero() {
                return Ok(DesignReport::refuted(t, Method::Delsarte, Witness::Harmonic { k, index, sum }));
            }
        }
    }
    let lambda = double_count_lambda(b.len(), size, n, t)
        .ok_or_else(|| Error::Verification(format!("harmonic sums vanish but lambda is fractional for t={t}")))?;
    Ok(DesignReport::design(t, Method::Delsarte, lambda))
}

/// Outcome of the Assmus–Mattson test: the largest admissible `t` and which
/// of the two conditions admits it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssmusMattson {
    /// 0 when no `t >= 1` qualifies.
    pub t: usize,
    /// At most `d - t` weights of the dual in `1..=n-t`.
    pub dual_weights_condition: bool,
    /// At most `d_dual - t` weights of the code in `1..=n-t`.
    pub code_weights_condition: bool,
    /// Minimum weights; `n + 1` stands for a code with no nonzero word.
    pub d: usize,
    pub d_dual: usize,
}

/// Assmus–Mattson from the nonzero weight sets of `C` and `C^perp`.
pub fn assmus_mattson_from_weights(n: usize, weights: &[usize], dual_weights: &[usize]) -> AssmusMattson {
    let d = weights.iter().copied().min().unwrap_or(n + 1);
    let d_dual = dual_weights.iter().copied().min().unwrap_or(n + 1);
    let in_range = |ws: &[usize], t: usize| ws.iter().filter(|&&w| 1 <= w && w <= n - t).count() as i64;
    let holds = |t: usize| {
        (
            in_range(dual_weights, t) <= d as i64 - t as i64,
            in_range(weights, t) <= d_dual as i64 - t as i64,
        )
    };
    for t in (1..=n).rev() {
        let (a, b) = holds(t);
        if a || b {
            return AssmusMattson { t, dual_weights_condition: a, code_weights_condition: b, d, d_dual };
        }
    }
    AssmusMattson { t: 0, dual_weights_condition: false, code_weights_condition: false, d, d_dual }
}

fn nonzero_weights_of(p: &Poly4, n: usize) -> Vec<usize> {
    (1..=n).filter(|&w| !p.coeff(&Monomial::xy((n - w) as u32, w as u32)).is_zero()).collect()
}

/// Assmus–Mattson for a code. Each weight set is enumerated when the code
/// is small enough, otherwise it is read off the MacWilliams transform of
/// the other side's weight enumerator.
pub fn assmus_mattson_t(code: &BinaryCode, limits: &Limits) -> Result<AssmusMattson> {
    let n = code.len();
    let dual = code.dual();
    let fits = |c: &BinaryCode| c.dimension() <= limits.max_dimension;
    let (we, we_dual) = match (fits(code), fits(&dual)) {
        (true, true) => (code.weight_enumerator()?, dual.weight_enumerator()?),
        (true, false) => {
            let we = code.weight_enumerator()?;
            let wd = jacobi_transform(&we, &code.size(), true)?;
            (we, wd)
        }
        (false, true) => {
            let wd = dual.weight_enumerator()?;
            let we = jacobi_transform(&wd, &dual.size(), true)?;
            (we, wd)
        }
        (false, false) => {
            return Err(Error::Capacity(format!(
                "neither the code (k={}) nor its dual (k={}) can be enumerated",
                code.dimension(),
                dual.dimension()
            )))
        }
    };
    Ok(assmus_mattson_from_weights(n, &nonzero_weights_of(&we, n), &nonzero_weights_of(&we_dual, n)))
}

/// Which refutation arguments [`verify_corollary`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Jacobi,
    Harmonic,
    Both,
}

impl Route {
    fn jacobi(self) -> bool {
        matches!(self, Route::Jacobi | Route::Both)
    }
    fn harmonic(self) -> bool {
        matches!(self, Route::Harmonic | Route::Both)
    }
    pub fn name(self) -> &'static str {
        match self {
            Route::Jacobi => "jacobi",
            Route::Harmonic => "harmonic",
            Route::Both => "both",
        }
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobi" => Ok(Route::Jacobi),
            "harmonic" => Ok(Route::Harmonic),
            "both" => Ok(Route::Both),
            _ => Err(input_err!("unknown route '{s}' (expected jacobi, harmonic or both)")),
        }
    }
}

/// `RM(1,m)` or its dual `H_{2^m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    ReedMuller,
    Hamming,
}

impl Family {
    pub fn label(self, m: usize) -> String {
        match self {
            Family::ReedMuller => format!("RM(1,{m})"),
            Family::Hamming => format!("H_{}", 1usize << m),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorollaryOptions {
    pub limits: Limits,
    /// Run the three direct tests on `RM(1,m)` shells up to this `m`.
    pub direct_rm_max_m: usize,
    /// Run the three direct tests on `H_{2^m}` shells up to this `m`.
    pub direct_dual_max_m: usize,
    /// Transposition used for the harmonic function.
    pub tau: (usize, usize),
    /// Subspace carrying the harmonic function; `span(e1,e2,e3)` if absent.
    pub subspace: Option<Subspace3>,
}

impl Default for CorollaryOptions {
    fn default() -> Self {
        CorollaryOptions {
            limits: Limits::default(),
            direct_rm_max_m: 5,
            direct_dual_max_m: 4,
            tau: (0, 1),
            subspace: None,
        }
    }
}

/// Everything established about one non-empty shell.
#[derive(Debug, Clone)]
pub struct ShellCheck {
    pub family: Family,
    pub ell: usize,
    pub size: BigInt,
    /// The zero word or the all-ones word: a single block that is a
    /// t-design for every t.
    pub trivial: bool,
    /// Coefficient of `z^4 x^(n-ell) y^(ell-4)` in `J_{T1} - J_{T2}`.
    pub jacobi_gap: Option<BigRational>,
    /// Coefficient of `x^(n-ell) y^ell` in the harmonic weight enumerator.
    pub harmonic_coeff: Option<BigRational>,
    /// Direct-count, harmonic and Jacobi verdicts for t = 3 and t = 4.
    pub reports: Vec<DesignReport>,
}

impl ShellCheck {
    /// Every run test that the shell is a 3-design.
    pub fn three_design(&self) -> bool {
        self.reports.iter().filter(|r| r.t == 3).all(|r| r.is_design)
    }

    /// The common 3-design lambda, if the direct tests ran and agree.
    pub fn lambda3(&self) -> Option<u64> {
        let ls: Vec<Option<u64>> = self.reports.iter().filter(|r| r.t == 3).map(|r| r.lambda).collect();
        match ls.first() {
            Some(&l) if ls.iter().all(|&x| x == l) => l,
            _ => None,
        }
    }

    pub fn four_design_refuted(&self) -> bool {
        let gap = self.jacobi_gap.as_ref().is_some_and(|g| !g.is_zero());
        let harm = self.harmonic_coeff.as_ref().is_some_and(|c| !c.is_zero());
        let direct = self.reports.iter().any(|r| r.t == 4 && !r.is_design);
        gap || harm || direct
    }
}

#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub m: usize,
    pub route: Route,
    /// The Assmus–Mattson t shared by `RM(1,m)` and `H_{2^m}`.
    pub assmus_mattson: AssmusMattson,
    pub shells: Vec<ShellCheck>,
    pub failures: Vec<String>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-(m, side) data shared by every shell.
struct SideData {
    gap_poly: Option<Poly4>,
    hwe: Option<Poly4>,
}

/// Checks, for every non-empty shell of `RM(1,m)` and `H_{2^m}`, that it is
/// a 3-design and not a 4-design.
///
/// Both families are handled for every `m` through closed forms; the
/// direct tests on actual block sets run only up to the `m` limits in
/// `opts`. Disagreements between methods are recorded as failures.
pub fn verify_corollary(m: usize, route: Route, opts: &CorollaryOptions) -> Result<CorollaryReport> {
    if !(3..=12).contains(&m) {
        return Err(input_err!("the corollary check supports 3 <= m <= 12, got {m}"));
    }
    let n = 1usize << m;
    let mut failures = Vec::new();
    let rm = reed_muller_1(m)?;
    let rm_we = rm.weight_enumerator()?;
    let h_we = jacobi_transform(&rm_we, &rm.size(), true)?;
    let am = assmus_mattson_from_weights(n, &nonzero_weights_of(&rm_we, n), &nonzero_weights_of(&h_we, n));
    if am.t < 3 {
        failures.push(format!("m={m}: Assmus-Mattson gives t={} < 3", am.t));
    }

    let u = match &opts.subspace {
        Some(u) if u.m() == m => u.clone(),
        Some(u) => return Err(input_err!("subspace lives in F_2^{}, not F_2^{m}", u.m())),
        None => Subspace3::standard(m)?,
    };

    let mut shells = Vec::new();
    for family in [Family::ReedMuller, Family::Hamming] {
        let label = family.label(m);
        let side = match family {
            Family::ReedMuller => Side::Code,
            Family::Hamming => Side::Dual,
        };
        let data = side_data(m, side, route, &u, opts, &rm, &mut failures)?;
        let direct_code = match family {
            Family::ReedMuller if m <= opts.direct_rm_max_m => Some(rm.clone()),
            Family::Hamming if m <= opts.direct_dual_max_m => Some(extended_hamming(m)?),
            _ => None,
        };
        let we = if family == Family::ReedMuller { &rm_we } else { &h_we };
        for (mono, count) in we.terms().rev() {
            let ell = mono.exp(crate::poly::Var::Y) as usize;
            let trivial = ell == 0 || ell == n;
            let jacobi_gap = data.gap_poly.as_ref().map(|g| match design_monomial(n, ell, 4) {
                Some(mono) => g.coeff(&mono),
                None => BigRational::zero(),
            });
            let harmonic_coeff = data.hwe.as_ref().map(|h| h.coeff(&Monomial::xy((n - ell) as u32, ell as u32)));
            let mut reports = Vec::new();
            if let Some(code) = &direct_code {
                let blocks = code.shell(ell)?;
                for t in [3, 4] {
                    let rs = [
                        is_t_design(&blocks, t, opts.limits.subset_cap)?,
                        delsarte_test(&blocks, t, opts.limits.subset_cap)?,
                        jacobi_design_test(code, ell, t, SampleMode::All, &opts.limits)?,
                    ];
                    if rs.iter().any(|r| r.is_design != rs[0].is_design || r.lambda != rs[0].lambda) {
                        failures.push(format!(
                            "{label} shell {ell}, t={t}: methods disagree ({}, {}, {})",
                            rs[0], rs[1], rs[2]
                        ));
                    }
                    reports.extend(rs);
                }
            }
            let check = ShellCheck {
                family,
                ell,
                size: count.to_integer(),
                trivial,
                jacobi_gap,
                harmonic_coeff,
                reports,
            };
            if !trivial {
                if !check.three_design() {
                    failures.push(format!("{label} shell {ell}: not confirmed as a 3-design"));
                }
                if !check.four_design_refuted() {
                    failures.push(format!("{label} shell {ell}: 4-design not refuted"));
                }
                for (what, v) in [("Jacobi gap", &check.jacobi_gap), ("harmonic coefficient", &check.harmonic_coeff)] {
                    if v.as_ref().is_some_and(Zero::is_zero) {
                        failures.push(format!("{label} shell {ell}: {what} vanishes"));
                    }
                }
                if family == Family::ReedMuller && ell == n / 2 && !check.reports.is_empty() {
                    let expect = middle_shell_lambda3(m);
                    if check.lambda3() != Some(expect) {
                        failures.push(format!("{label}: middle-shell lambda {:?}, expected {expect}", check.lambda3()));
                    }
                }
            }
            shells.push(check);
        }
    }
    Ok(CorollaryReport { m, route, assmus_mattson: am, shells, failures })
}

fn side_data(
    m: usize,
    side: Side,
    route: Route,
    u: &Subspace3,
    opts: &CorollaryOptions,
    rm: &BinaryCode,
    failures: &mut Vec<String>,
) -> Result<SideData> {
    let label = match side {
        Side::Code => Family::ReedMuller.label(m),
        Side::Dual => Family::Hamming.label(m),
    };
    let gap_poly = if route.jacobi() {
        let closed = jacobi_difference_closed(m, side)?;
        let (a, b) = match side {
            Side::Code => (
                rm1_jacobi_closed(m, TClass::AffinelyIndependent)?,
                rm1_jacobi_closed(m, TClass::AffinelyDependent)?,
            ),
            Side::Dual => (
                rm1_dual_jacobi_closed(m, TClass::AffinelyIndependent)?,
                rm1_dual_jacobi_closed(m, TClass::AffinelyDependent)?,
            ),
        };
        if &a - &b != closed {
            failures.push(format!("{label}: Jacobi difference does not match its closed form"));
        }
        Some(closed)
    } else {
        None
    };
    let hwe_poly = if route.harmonic() {
        let f = corollary_f(opts.tau, Some(u))?;
        let primal = hwe(rm, &f)?;
        let s = h8_weight4_sum(f.as_fn(), Some(u));
        let (closed_primal, closed_dual) = thm12_closed(m, 4, &s)?;
        if primal != closed_primal {
            failures.push(format!("{label}: harmonic enumerator differs from its closed form"));
        }
        match side {
            Side::Code => Some(primal),
            Side::Dual => {
                let dual = bachoc_transform(&primal, 1 << m, 4, &rm.size())?;
                if dual != closed_dual {
                    failures.push(format!("{label}: transformed harmonic enumerator differs from its closed form"));
                }
                if m <= opts.direct_dual_max_m && hwe(&rm.dual(), &f)? != dual {
                    failures.push(format!("{label}: harmonic enumerator differs from enumeration"));
                }
                Some(dual)
            }
        }
    } else {
        None
    };
    Ok(SideData { gap_poly, hwe: hwe_poly })
}

/// `(2^(m+1) - 2) C(2^(m-1), 3) / C(2^m, 3)`.
pub fn middle_shell_lambda3(m: usize) -> u64 {
    let n = 1u64 << m;
    let num = ((1u64 << (m + 1)) - 2) as u128 * binomial(n / 2, 3) as u128;
    (num / binomial(n, 3) as u128) as u64
}

/// `lambda C(n,t) = sum_b C(|b|,t)`.
pub fn lambda_consistent(b: &BlockSet, t: usize, lambda: u64) -> bool {
    let lhs = BigInt::from(lambda) * BigInt::from(binomial(b.points() as u64, t as u64));
    let rhs = b.blocks().iter().fold(BigInt::zero(), |acc, blk| acc + binomial(blk.len() as u64, t as u64));
    lhs == rhs
}
