use libm::{exp, log};

use super::ColorDensities;
use crate::DynamicsKind;

/// Exponentially weighted transition matrix of the color chain along a ray,
/// on pair states `(a, b)` indexed `3a + b`:
/// `π_t[(a, b), (b, d)] = p_d · exp(t · dX(b, d))`.
pub fn transfer_matrix(kind: DynamicsKind, densities: &ColorDensities, t: f64) -> [[f64; 9]; 9] {
    let mut m = [[0.0; 9]; 9];
    for a in 0..3 {
        for b in 0..3 {
            for d in 0..3 {
                let g = f64::from(kind.increment(b as u8, d as u8));
                m[3 * a + b][3 * b + d] = densities.get(d) * exp(t * g);
            }
        }
    }
    m
}

/// `log` of the top eigenvalue of [`transfer_matrix`] by power iteration.
///
/// The matrix is nonnegative, so the iteration runs on `π^(2^j)` obtained by
/// repeated squaring with rescaling; this keeps slowly separating spectra
/// (large `t`) cheap.
pub fn transfer_lambda(kind: DynamicsKind, densities: &ColorDensities, t: f64) -> f64 {
    let m = transfer_matrix(kind, densities, t);
    let mut q = m;
    for _ in 0..40 {
        q = mul(&q, &q);
        let scale = q.iter().flatten().fold(0.0f64, |a, &b| a.max(b));
        for x in q.iter_mut().flatten() {
            *x /= scale;
        }
    }
    // Columns of q are (nearly) parallel to the Perron vector.
    let mut v = [0.0; 9];
    for (i, row) in q.iter().enumerate() {
        v[i] = row.iter().sum();
    }
    let mut w = [0.0; 9];
    for i in 0..9 {
        w[i] = (0..9).map(|j| m[i][j] * v[j]).sum();
    }
    let num: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
    let den: f64 = v.iter().map(|b| b * b).sum();
    log(num / den)
}

fn mul(a: &[[f64; 9]; 9], b: &[[f64; 9]; 9]) -> [[f64; 9]; 9] {
    let mut c = [[0.0; 9]; 9];
    for i in 0..9 {
        for k in 0..9 {
            let x = a[i][k];
            if x == 0.0 {
                continue;
            }
            for j in 0..9 {
                c[i][j] += x * b[k][j];
            }
        }
    }
    c
}
