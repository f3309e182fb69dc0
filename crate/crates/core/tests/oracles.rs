//! Cross-checks against brute-force oracles that share no code with the library:
//! codes are built as evaluation vectors of affine functions, and Jacobi
//! polynomials and design counts are tallied naively.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use rmdesign_core::design::{delsarte_test, is_t_design};
use rmdesign_core::gf2code::{extended_hamming, reed_muller_1};
use rmdesign_core::jacobi::{jacobi, rm1_dual_jacobi_closed, rm1_jacobi_closed};
use rmdesign_core::{Monomial, Poly4, TClass};

/// Words of RM(1,m) as bit vectors: the values of a.v + c over v in F_2^m.
fn rm1_words(m: usize) -> Vec<Vec<u8>> {
    let n = 1usize << m;
    let mut out = Vec::new();
    for a in 0..n {
        for c in 0..2u8 {
            out.push((0..n).map(|v| ((a & v).count_ones() as u8 + c) & 1).collect());
        }
    }
    out
}

/// Words of the dual of RM(1,m): every vector orthogonal to all RM(1,m) words.
fn dual_words(m: usize) -> Vec<Vec<u8>> {
    let n = 1usize << m;
    let rm = rm1_words(m);
    (0u64..1 << n)
        .map(|x| (0..n).map(|i| ((x >> i) & 1) as u8).collect::<Vec<u8>>())
        .filter(|w| rm.iter().all(|r| r.iter().zip(w).map(|(a, b)| a & b).sum::<u8>() % 2 == 0))
        .collect()
}

fn naive_jacobi(words: &[Vec<u8>], t: &[usize]) -> Poly4 {
    let mut counts: BTreeMap<[u32; 4], i64> = BTreeMap::new();
    for w in words {
        let inside = t.iter().filter(|&&i| w[i] == 1).count() as u32;
        let outside = w.iter().enumerate().filter(|(i, &b)| b == 1 && !t.contains(i)).count() as u32;
        let n = w.len() as u32;
        let tl = t.len() as u32;
        *counts.entry([tl - inside, inside, n - tl - outside, outside]).or_default() += 1;
    }
    let mut p = Poly4::zero();
    for (e, c) in counts {
        p.add_term(Monomial::from_exps(e), BigRational::from_integer(BigInt::from(c)));
    }
    p
}

#[test]
fn rm1_jacobi_matches_naive_tally() {
    for m in 3..=6 {
        let words = rm1_words(m);
        let code = reed_muller_1(m).unwrap();
        for (class, t) in [(TClass::AffinelyIndependent, [0, 1, 2, 4]), (TClass::AffinelyDependent, [0, 1, 2, 3])] {
            let naive = naive_jacobi(&words, &t);
            assert_eq!(jacobi(&code, &t).unwrap(), naive, "m={m} {class}");
            assert_eq!(rm1_jacobi_closed(m, class).unwrap(), naive, "m={m} {class}");
        }
        // a reference set far from the origin
        let t = [1, 6, (1 << m) - 3, (1 << m) - 1];
        assert_eq!(jacobi(&code, &t).unwrap(), naive_jacobi(&words, &t));
    }
}

#[test]
fn hamming_jacobi_matches_naive_tally() {
    for m in [3, 4] {
        let words = dual_words(m);
        assert_eq!(words.len(), 1 << ((1 << m) - m - 1));
        let code = extended_hamming(m).unwrap();
        for (class, t) in [(TClass::AffinelyIndependent, [0, 1, 2, 4]), (TClass::AffinelyDependent, [0, 1, 2, 3])] {
            let naive = naive_jacobi(&words, &t);
            assert_eq!(jacobi(&code, &t).unwrap(), naive);
            assert_eq!(rm1_dual_jacobi_closed(m, class).unwrap(), naive);
        }
    }
}

/// Counts blocks containing each t-subset by scanning all t-subsets as bitmasks.
fn naive_coverage(blocks: &[u64], n: usize, t: u32) -> (u64, u64) {
    let (mut lo, mut hi) = (u64::MAX, 0);
    for s in 0u64..1 << n {
        if s.count_ones() != t {
            continue;
        }
        let c = blocks.iter().filter(|&&b| b & s == s).count() as u64;
        lo = lo.min(c);
        hi = hi.max(c);
    }
    (lo, hi)
}

type ShellOf = Box<dyn Fn(usize) -> rmdesign_core::BlockSet>;

#[test]
fn shells_against_naive_coverage() {
    for m in [3, 4] {
        let n = 1 << m;
        let cases: Vec<(Vec<Vec<u8>>, ShellOf)> = vec![
            (rm1_words(m), Box::new(move |l| reed_muller_1(m).unwrap().shell(l).unwrap())),
            (dual_words(m), Box::new(move |l| extended_hamming(m).unwrap().shell(l).unwrap())),
        ];
        for (words, shell) in &cases {
            let mut weights: Vec<usize> = words.iter().map(|w| w.iter().filter(|&&b| b == 1).count()).collect();
            weights.sort();
            weights.dedup();
            for &ell in weights.iter().filter(|&&l| l > 0 && l < n) {
                let masks: Vec<u64> = words
                    .iter()
                    .filter(|w| w.iter().filter(|&&b| b == 1).count() == ell)
                    .map(|w| w.iter().enumerate().fold(0u64, |a, (i, &b)| a | ((b as u64) << i)))
                    .collect();
                let b = shell(ell);
                assert_eq!(b.len(), masks.len());
                for t in 1..=4u32 {
                    let (lo, hi) = naive_coverage(&masks, n, t);
                    let r = is_t_design(&b, t as usize, 1 << 24).unwrap();
                    assert_eq!(r.is_design, lo == hi, "m={m} ell={ell} t={t}");
                    if lo == hi {
                        assert_eq!(r.lambda, Some(lo));
                    }
                    if (t as usize) <= ell {
                        assert_eq!(delsarte_test(&b, t as usize, 1 << 24).unwrap().is_design, lo == hi);
                    }
                }
            }
        }
    }
}
