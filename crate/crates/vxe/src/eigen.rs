//! Dense symmetric eigensolver.
//!
//! Householder reduction to tridiagonal form followed by the implicit-shift
//! QL iteration, ported from the classic EISPACK `tred2`/`tql2` pair (the
//! same lineage as the JAMA and Numerical Recipes eigensystem routines).
//! Both stages are deterministic: fixed elimination order, fixed shift
//! strategy, no randomness, so a given matrix always yields bit-identical
//! output on the same platform.
//!
//! Eigenvalues are returned in descending order. Each eigenvector is scaled
//! so that its largest-magnitude entry is positive, ties broken by lowest
//! index, which pins the sign freedom left by the factorization.

use crate::error::{Error, Result};
use crate::num::Real;

/// Maximum QL iterations per eigenvalue before giving up.
const MAX_QL_ITERATIONS: usize = 30;

/// Eigendecomposition of a symmetric matrix: `values` descending and
/// `vectors` column-major (`vectors[j * n + i]` is component `i` of the
/// eigenvector for `values[j]`).
pub(crate) struct SymEigen<R> {
    pub values: Vec<R>,
    pub vectors: Vec<R>,
}

/// Decomposes a symmetric `n × n` matrix given in row-major order.
///
/// Symmetry is assumed, not checked; only one triangle is meaningful to the
/// reduction. Fails with [`Error::ConvergenceFailure`] if any eigenvalue
/// needs more than [`MAX_QL_ITERATIONS`] QL steps, which does not happen for
/// well-scaled inputs such as adjacency matrices.
pub(crate) fn decompose_symmetric<R: Real>(a: &[R], n: usize) -> Result<SymEigen<R>> {
    assert_eq!(a.len(), n * n, "matrix shape mismatch");
    if n == 0 {
        return Ok(SymEigen {
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }
    // Column-major working copy; the input is symmetric so the transpose
    // copy is free of meaning and keeps every inner loop contiguous.
    let mut v = a.to_vec();
    let mut d = vec![R::zero(); n];
    let mut e = vec![R::zero(); n];
    tred2(&mut v, &mut d, &mut e, n);
    tql2(&mut v, &mut d, &mut e, n)?;
    sort_descending(&mut v, &mut d, n);
    normalize_signs(&mut v, n);
    Ok(SymEigen {
        values: d,
        vectors: v,
    })
}

/// Householder reduction of a symmetric matrix to tridiagonal form with
/// accumulation of the orthogonal transform. On exit `d` holds the diagonal,
/// `e[1..]` the subdiagonal, and `v` the accumulated transform, column-major.
fn tred2<R: Real>(v: &mut [R], d: &mut [R], e: &mut [R], n: usize) {
    macro_rules! at {
        ($r:expr, $c:expr) => {
            v[$c * n + $r]
        };
    }

    for j in 0..n {
        d[j] = at!(n - 1, j);
    }

    for i in (1..n).rev() {
        let mut h = R::zero();
        let mut scale = R::zero();
        for dk in d.iter().take(i) {
            scale += dk.abs();
        }
        if scale == R::zero() {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = at!(i - 1, j);
                at!(i, j) = R::zero();
                at!(j, i) = R::zero();
            }
        } else {
            // Scaled Householder vector and its norm.
            for dk in d.iter_mut().take(i) {
                *dk /= scale;
                h += *dk * *dk;
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > R::zero() {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = R::zero();
            }

            // Apply the similarity transform to the leading block.
            for j in 0..i {
                let f = d[j];
                at!(j, i) = f;
                let mut g = e[j] + at!(j, j) * f;
                for k in (j + 1)..i {
                    g += at!(k, j) * d[k];
                    e[k] += at!(k, j) * f;
                }
                e[j] = g;
            }
            let mut f = R::zero();
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    at!(k, j) = at!(k, j) - (f * e[k] + g * d[k]);
                }
                d[j] = at!(i - 1, j);
                at!(i, j) = R::zero();
            }
        }
        d[i] = h;
    }

    // Accumulate the transforms; row n-1 stashes the running diagonal.
    for i in 0..n.saturating_sub(1) {
        at!(n - 1, i) = at!(i, i);
        at!(i, i) = R::one();
        let h = d[i + 1];
        if h != R::zero() {
            for k in 0..=i {
                d[k] = at!(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = R::zero();
                for k in 0..=i {
                    g += at!(k, i + 1) * at!(k, j);
                }
                for k in 0..=i {
                    at!(k, j) = at!(k, j) - g * d[k];
                }
            }
        }
        for k in 0..=i {
            at!(k, i + 1) = R::zero();
        }
    }
    for j in 0..n {
        d[j] = at!(n - 1, j);
        at!(n - 1, j) = R::zero();
    }
    at!(n - 1, n - 1) = R::one();
    e[0] = R::zero();
}

/// Implicit-shift QL iteration on the tridiagonal `(d, e)` pair, rotating the
/// accumulated transform `v` (column-major) along with it.
fn tql2<R: Real>(v: &mut [R], d: &mut [R], e: &mut [R], n: usize) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = R::zero();

    let two = R::one() + R::one();
    let mut f = R::zero();
    let mut tst1 = R::zero();
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());

        // Find the first negligible subdiagonal entry at or after l.
        let mut m = l;
        while m < n {
            if e[m].abs() <= tst1 * R::epsilon() {
                break;
            }
            m += 1;
        }

        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter >= MAX_QL_ITERATIONS {
                    return Err(Error::ConvergenceFailure);
                }

                // Wilkinson-style shift.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (two * e[l]);
                let mut r = p.hypot(R::one());
                if p < R::zero() {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;

                // One QL sweep of Givens rotations, applied to v as well.
                p = d[m];
                let mut c = R::one();
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = R::zero();
                let mut s2 = R::zero();
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    // Columns i and i+1 are adjacent in column-major storage.
                    let (left, right) = v.split_at_mut((i + 1) * n);
                    let col_i = &mut left[i * n..];
                    let col_i1 = &mut right[..n];
                    for k in 0..n {
                        let h = col_i1[k];
                        col_i1[k] = s * col_i[k] + c * h;
                        col_i[k] = c * col_i[k] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= tst1 * R::epsilon() {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = R::zero();
    }
    Ok(())
}

/// Selection sort into descending eigenvalue order, swapping eigenvector
/// columns along. Stable for exact ties, so the output order is a pure
/// function of the input.
fn sort_descending<R: Real>(v: &mut [R], d: &mut [R], n: usize) {
    for i in 0..n.saturating_sub(1) {
        let mut k = i;
        let mut p = d[i];
        for (j, dj) in d.iter().enumerate().take(n).skip(i + 1) {
            if *dj > p {
                k = j;
                p = *dj;
            }
        }
        if k != i {
            d.swap(i, k);
            for r in 0..n {
                v.swap(i * n + r, k * n + r);
            }
        }
    }
}

/// Flips eigenvector signs so the largest-magnitude component of each column
/// is positive; among equal magnitudes the lowest index decides.
fn normalize_signs<R: Real>(v: &mut [R], n: usize) {
    for j in 0..n {
        let col = &mut v[j * n..(j + 1) * n];
        let mut best = 0;
        for (i, x) in col.iter().enumerate() {
            if x.abs() > col[best].abs() {
                best = i;
            }
        }
        if col[best] < R::zero() {
            for x in col.iter_mut() {
                *x = -*x;
            }
        }
    }
}
