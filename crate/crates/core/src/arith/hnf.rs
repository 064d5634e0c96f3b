//! Row-style Hermite normal form and what it buys us: integer feasibility of
//! affine systems and Z-bases of integer kernels.
//!
//! Convention, used everywhere in the crate: `U · M = H` with `U` unimodular
//! and `H` in row echelon form. Each pivot is positive, entries above a pivot
//! lie in `[0, pivot)`, and zero rows sit at the bottom.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

fn sub_row_multiple(m: &mut IntegerMatrix, target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let src = m.row(source).to_vec();
    for (x, s) in m.row_mut(target).iter_mut().zip(&src) {
        *x -= q * s;
    }
}

/// Returns `(H, U)` with `U · m = H`, `U` unimodular, `H` in Hermite normal form.
pub fn hermite_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut pivot_row = 0;
    for col in 0..m.cols() {
        if pivot_row == rows {
            break;
        }
        loop {
            let best = (pivot_row..rows)
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = h[(r, col)].div_floor(&h[(pivot_row, col)]);
                sub_row_multiple(&mut h, r, pivot_row, &q);
                sub_row_multiple(&mut u, r, pivot_row, &q);
                if !h[(r, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            for x in h.row_mut(pivot_row) {
                *x = -x.clone();
            }
            for x in u.row_mut(pivot_row) {
                *x = -x.clone();
            }
        }
        for r in 0..pivot_row {
            let q = h[(r, col)].div_floor(&h[(pivot_row, col)]);
            sub_row_multiple(&mut h, r, pivot_row, &q);
            sub_row_multiple(&mut u, r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Some integer `x` with `a · x = b`, or `None` when no integer solution exists.
pub fn solve_integer_affine(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    // U · Aᵀ = H, hence A · Uᵀ = Hᵀ. Solve Hᵀ y = b, then x = Uᵀ y.
    let (h, u) = hermite_normal_form(&a.transpose());
    let mut y = vec![BigInt::zero(); n];
    let mut pivots = Vec::new();
    for k in 0..n {
        match (0..h.cols()).find(|&c| !h[(k, c)].is_zero()) {
            Some(c) => pivots.push(c),
            None => break,
        }
    }
    for (k, &p) in pivots.iter().enumerate() {
        let mut rhs = b[p].clone();
        for (l, yl) in y.iter().enumerate().take(k) {
            rhs -= &h[(l, p)] * yl;
        }
        let (quot, rem) = rhs.div_rem(&h[(k, p)]);
        if !rem.is_zero() {
            return None;
        }
        y[k] = quot;
    }
    // Remaining equations must hold with the determined y.
    for (row, bi) in b.iter().enumerate() {
        let lhs: BigInt = (0..pivots.len()).map(|l| &h[(l, row)] * &y[l]).sum();
        if &lhs != bi {
            return None;
        }
    }
    Some(u.transpose().mul_vec(&y))
}

/// A Z-basis of `{x ∈ Zⁿ : a · x = 0}`, as rows.
pub fn integer_kernel_basis(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    if a.rows() == 0 {
        return IntegerMatrix::identity(n).to_rows();
    }
    let (h, u) = hermite_normal_form(&a.transpose());
    (0..n)
        .filter(|&r| h.row(r).iter().all(Zero::is_zero))
        .map(|r| u.row(r).to_vec())
        .collect()
}

/// Inverse of a unimodular integer matrix. Panics if `m` is not unimodular.
pub fn inverse_unimodular(m: &IntegerMatrix) -> IntegerMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let mut aug = super::RationalMatrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug[(r, c)] = super::Rational::from_integer(m[(r, c)].clone());
        }
        aug[(r, n + r)] = num_traits::One::one();
    }
    let (red, pivots) = super::rref(&aug);
    assert_eq!(pivots, (0..n).collect::<Vec<_>>(), "matrix is singular");
    let mut inv = IntegerMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let x = &red[(r, n + c)];
            assert!(x.is_integer(), "matrix is not unimodular");
            inv[(r, c)] = x.to_integer();
        }
    }
    inv
}
