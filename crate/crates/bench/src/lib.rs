//! Fixtures shared by the benchmarks.

use rmdesign_core::gf2code::{extended_hamming, reed_muller_1};
use rmdesign_core::harmonic::{corollary_f, Subspace3};
use rmdesign_core::{BinaryCode, BlockSet, HarmonicFn};

pub fn rm(m: usize) -> BinaryCode {
    reed_muller_1(m).expect("valid m")
}

pub fn hamming(m: usize) -> BinaryCode {
    extended_hamming(m).expect("valid m")
}

/// The middle shell of `H_{2^m}`.
pub fn hamming_middle_shell(m: usize) -> BlockSet {
    hamming(m).shell(1 << (m - 1)).expect("enumerable")
}

pub fn embedded_corollary_f(m: usize) -> HarmonicFn {
    let u = Subspace3::standard(m).expect("m >= 3");
    corollary_f((0, 1), Some(&u)).expect("harmonic")
}
