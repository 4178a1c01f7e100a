//! Cyclic Jacobi eigensolver for dense symmetric matrices (eigenvalues only).

/// Eigenvalues of a symmetric matrix (row-major, `n x n`), ascending.
/// Returns `None` when the off-diagonal mass has not dropped below `tol`
/// within `max_sweeps` full sweeps.
pub fn symmetric_eigenvalues(a: &[f64], n: usize, tol: f64, max_sweeps: usize) -> Option<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Some(Vec::new());
    }
    let mut m = a.to_vec();
    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(m[p * n + q].abs());
            }
        }
        if off <= tol {
            let mut eig: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
            eig.sort_by(|x, y| x.total_cmp(y));
            return Some(eig);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() <= tol * 1e-3 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = m[i * n + p];
                    let aiq = m[i * n + q];
                    m[i * n + p] = c * aip - s * aiq;
                    m[p * n + i] = m[i * n + p];
                    m[i * n + q] = s * aip + c * aiq;
                    m[q * n + i] = m[i * n + q];
                }
                m[p * n + p] = app - t * apq;
                m[q * n + q] = aqq + t * apq;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
            }
        }
    }
    None
}
