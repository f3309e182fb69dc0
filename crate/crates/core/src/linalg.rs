//! Exact rational Gaussian elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Basis of the right kernel of `a` (`a.len()` rows, `cols` columns).
///
/// Reduces `a` to row-echelon form with partial pivoting (largest absolute
/// entry in the column), then reads off one kernel vector per free column.
/// Each vector is scaled to a primitive integer vector whose free-column
/// entry is positive.
pub(crate) fn kernel_basis(mut a: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let best = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r, &s| a[r][col].abs().cmp(&a[s][col].abs()).then(s.cmp(&r)));
        let Some(p) = best else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for v in a[rank].iter_mut().skip(col) {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let nz: Vec<usize> = (col..cols).filter(|&j| !a[rank][j].is_zero()).collect();
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &nz {
                row[j] -= &factor * &pivot_row[j];
            }
        }
        pivots.push(col);
        rank += 1;
    }

    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a[i][f].clone();
            }
            primitive(&v)
        })
        .collect()
}

/// Clears denominators and divides out the content.
fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}
