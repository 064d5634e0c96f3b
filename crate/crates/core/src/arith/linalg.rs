use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{primitive_integer_vector, Rational, RationalMatrix};

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for x in a.row_mut(row) {
            *x = &*x * &inv;
        }
        let pivot_row = a.row(row).to_vec();
        for r in 0..a.rows() {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for (x, p) in a.row_mut(r).iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).1.len()
}

/// Some solution of `m · x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn rational_solve(m: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let n = m.cols();
    let mut aug = RationalMatrix::zeros(m.rows(), n + 1);
    for r in 0..m.rows() {
        for c in 0..n {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[(r, n)].clone();
    }
    Some(x)
}

/// Basis of the right kernel of `m`, each vector integral with content 1 and
/// first nonzero entry positive.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    let (red, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red[(r, f)].clone();
            }
            let mut w = primitive_integer_vector(&v).expect("kernel vector is nonzero");
            if w.iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative())
            {
                w.iter_mut().for_each(|x| *x = -x.clone());
            }
            w
        })
        .collect()
}

pub fn determinant(m: &RationalMatrix) -> Rational {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a[(col, col)].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let factor = &a[(r, col)] / &pivot;
            let pivot_row = a.row(col).to_vec();
            for (x, p) in a.row_mut(r).iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    det
}
