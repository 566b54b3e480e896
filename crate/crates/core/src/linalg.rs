//! Small dense linear algebra for the basis machinery: Gauss-Jordan inverse,
//! rank, and smallest singular value via Jacobi iteration on AᵀA. Dimensions
//! here are tiny (the spaces of interest are 2- to 4-dimensional), so
//! simplicity beats sophistication.

/// Rank of the row matrix by Gaussian elimination with partial pivoting.
pub(crate) fn rank(rows: &[&[f64]], tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let (m, n) = (rows.len(), rows[0].len());
    let mut a: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    let mut col = 0;
    while rank < m && col < n {
        let (pivot, pval) = (rank..m)
            .map(|i| (i, a[i][col].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).expect("finite"))
            .expect("nonempty");
        if pval <= tol {
            col += 1;
            continue;
        }
        a.swap(rank, pivot);
        for i in (rank + 1)..m {
            let f = a[i][col] / a[rank][col];
            for j in col..n {
                a[i][j] -= f * a[rank][j];
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Inverse of a square matrix (columns-of-vectors layout is up to the
/// caller); `None` when numerically singular.
pub(crate) fn invert(a: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let mut aug: Vec<Vec<f64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for col in 0..n {
        let (pivot, pval) = (col..n)
            .map(|i| (i, aug[i][col].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).expect("finite"))?;
        if pval < 1e-300 {
            return None;
        }
        aug.swap(col, pivot);
        let d = aug[col][col];
        for j in 0..2 * n {
            aug[col][j] /= d;
        }
        for i in 0..n {
            if i != col {
                let f = aug[i][col];
                if f != 0.0 {
                    for j in 0..2 * n {
                        aug[i][j] -= f * aug[col][j];
                    }
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Smallest singular value of a square matrix, via cyclic Jacobi on AᵀA.
pub(crate) fn sigma_min(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    // gram[i][j] = Σ_k a[k][i]·a[k][j]
    let mut g = vec![vec![0.0; n]; n];
    for (i, gi) in g.iter_mut().enumerate() {
        for (j, gij) in gi.iter_mut().enumerate() {
            *gij = (0..n).map(|k| a[k][i] * a[k][j]).sum();
        }
    }
    for _sweep in 0..64 {
        let mut off = 0.0_f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(g[p][q].abs());
            }
        }
        if off < 1e-16 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if g[p][q].abs() < 1e-18 {
                    continue;
                }
                let theta = 0.5 * (2.0 * g[p][q]).atan2(g[p][p] - g[q][q]);
                let (s, c) = theta.sin_cos();
                for k in 0..n {
                    let (gkp, gkq) = (g[k][p], g[k][q]);
                    g[k][p] = c * gkp + s * gkq;
                    g[k][q] = -s * gkp + c * gkq;
                }
                for k in 0..n {
                    let (gpk, gqk) = (g[p][k], g[q][k]);
                    g[p][k] = c * gpk + s * gqk;
                    g[q][k] = -s * gpk + c * gqk;
                }
            }
        }
    }
    (0..n)
        .map(|i| g[i][i].max(0.0))
        .fold(f64::INFINITY, f64::min)
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_detects_dependence() {
        let r1 = [1.0, 2.0];
        let r2 = [2.0, 4.0];
        let r3 = [0.0, 1.0];
        assert_eq!(rank(&[&r1, &r2], 1e-12), 1);
        assert_eq!(rank(&[&r1, &r3], 1e-12), 2);
    }

    #[test]
    fn invert_round_trips() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let inv = invert(&a).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let e: f64 = (0..2).map(|k| a[i][k] * inv[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((e - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sigma_min_of_rotation_is_one() {
        let (s, c) = 0.7_f64.sin_cos();
        let a = vec![vec![c, -s], vec![s, c]];
        assert!((sigma_min(&a) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn sigma_min_of_skewed_matrix() {
        // columns (1,0) and (√2/2, √2/2): singular values from AᵀA
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let a = vec![vec![1.0, r], vec![0.0, r]];
        // eigenvalues of AᵀA = [[1, r],[r, 1]] are 1 ± r
        let expect = (1.0 - r).sqrt();
        assert!((sigma_min(&a) - expect).abs() < 1e-10);
    }
}
