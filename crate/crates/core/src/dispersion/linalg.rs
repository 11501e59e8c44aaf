//! Small dense complex helpers: LU determinant and solves are all the
//! dispersion module ever needs (matrices are at most 8×8).

use num_complex::Complex64;

/// Determinant by LU with partial pivoting; consumes its argument.
#[allow(clippy::needless_range_loop)]
pub(crate) fn det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, m[r][col].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if pivot_mag == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        for r in col + 1..n {
            let factor = m[r][col] / pivot;
            for c in col..n {
                let sub = factor * m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Max row sum norm.
pub(crate) fn inf_norm(m: &[Vec<Complex64>]) -> f64 {
    m.iter()
        .map(|row| row.iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_known_matrices() {
        let i = Complex64::new(0.0, 1.0);
        let m = vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(3.0, 0.0)],
        ];
        assert!((det(m) - Complex64::new(6.0, 0.0)).norm() < 1e-14);
        // det [[i, 1], [1, i]] = i² - 1 = -2
        let m = vec![
            vec![i, Complex64::new(1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0), i],
        ];
        assert!((det(m) + Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn singular_matrix_has_zero_det() {
        let row = vec![Complex64::new(1.0, 2.0), Complex64::new(-3.0, 0.5)];
        let m = vec![row.clone(), row];
        assert_eq!(det(m), Complex64::new(0.0, 0.0));
    }
}
