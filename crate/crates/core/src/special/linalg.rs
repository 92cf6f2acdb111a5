//! Dense symmetric eigensolver (cyclic Jacobi) for the small matrices that
//! arise in the Mathieu angular problem.

/// Eigen-decomposition of a symmetric matrix stored row-major.
/// Returns (eigenvalues ascending, eigenvectors as rows aligned with values).
pub fn jacobi_eigh(n: usize, a_in: &[f64]) -> (Vec<f64>, Vec<Vec<f64>>) {
    assert_eq!(a_in.len(), n * n);
    let mut a = a_in.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let idx = |r: usize, c: usize| r * n + c;
    for _sweep in 0..100 {
        let mut off = 0.0;
        for r in 0..n {
            for c in (r + 1)..n {
                off += a[idx(r, c)] * a[idx(r, c)];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + frob(n, &a)) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[idx(p, k)];
                    let vkq = v[idx(q, k)];
                    v[idx(p, k)] = c * vkp - s * vkq;
                    v[idx(q, k)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[idx(i, i)].partial_cmp(&a[idx(j, j)]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[idx(i, i)]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&i| (0..n).map(|k| v[idx(i, k)]).collect())
        .collect();
    (values, vectors)
}

fn frob(n: usize, a: &[f64]) -> f64 {
    a.iter().take(n * n).map(|x| x * x).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_known_matrix() {
        // [[2,1],[1,2]] -> eigenvalues 1, 3
        let (vals, vecs) = jacobi_eigh(2, &[2.0, 1.0, 1.0, 2.0]);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
        // check A v = lambda v for the first pair
        let v = &vecs[0];
        let av = [2.0 * v[0] + v[1], v[0] + 2.0 * v[1]];
        assert!((av[0] - vals[0] * v[0]).abs() < 1e-12);
        assert!((av[1] - vals[0] * v[1]).abs() < 1e-12);
    }

    #[test]
    fn tridiagonal_eigenvalues_match_analytic() {
        // Second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n+1)).
        let n = 8;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 2.0;
            if i + 1 < n {
                a[i * n + i + 1] = -1.0;
                a[(i + 1) * n + i] = -1.0;
            }
        }
        let (vals, _) = jacobi_eigh(n, &a);
        for (k, v) in vals.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((v - exact).abs() < 1e-10);
        }
    }
}
