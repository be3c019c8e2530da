//! Cyclic Jacobi eigensolver for small Hermitian matrices, and eigenbases of
//! normal matrices built on top of it.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a Hermitian matrix.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as the columns of the second element.
pub fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    assert!(m.is_square(), "hermitian_eigen needs a square matrix");
    let n = m.rows();
    let mut a = m.clone();
    // Symmetrize so tiny asymmetries from upstream arithmetic cannot stall the sweep.
    for p in 0..n {
        a[(p, p)] = Complex64::from(a[(p, p)].re);
        for q in p + 1..n {
            let avg = (a[(p, q)] + a[(q, p)].conj()) * 0.5;
            a[(p, q)] = avg;
            a[(q, p)] = avg.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.max_abs().max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q, scale);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    (values, vectors)
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    hermitian_eigen(m).0
}

/// One complex Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, scale: f64) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag <= 1e-300 || mag <= 1e-18 * scale {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    // Phase-rotate q so the pivot becomes real, then do a real Jacobi step.
    let phase_conj = (apq / mag).conj();
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * mag);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.rows();

    // A <- A G with G = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on (p, q)
    let col_update = |m: &mut ComplexMatrix| {
        for k in 0..n {
            let mkp = m[(k, p)];
            let mkq = m[(k, q)] * phase_conj;
            m[(k, p)] = mkp * c - mkq * s;
            m[(k, q)] = mkp * s + mkq * c;
        }
    };
    col_update(a);
    col_update(v);
    // A <- G† A
    let phase = phase_conj.conj();
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)] * phase;
        a[(p, k)] = apk * c - aqk * s;
        a[(q, k)] = apk * s + aqk * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::from(a[(p, p)].re);
    a[(q, q)] = Complex64::from(a[(q, q)].re);
}

/// Eigen-decomposition of a normal matrix with a nondegenerate spectrum.
///
/// Eigenpairs come back sorted by eigenvalue phase in `[0, 2π)` (ties by
/// modulus), each eigenvector with its first non-negligible amplitude made
/// real and positive.
pub fn normal_eigen(m: &ComplexMatrix, min_gap: f64) -> Result<(Vec<Complex64>, Vec<Vec<Complex64>>)> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let scale = m.max_abs().max(1.0);
    let deviation = m.normality_deviation();
    if deviation > 1e-10 * scale {
        return Err(Error::NotNormal { deviation });
    }

    // H and K commute for normal M and share its eigenvectors.
    let adj = m.adjoint();
    let herm = (m + &adj).scale(Complex64::new(0.5, 0.0));
    let anti = (m - &adj).scale(Complex64::new(0.0, -0.5));

    for mix in [0.618_033_988_749_894_9, std::f64::consts::SQRT_2, 0.381_966_011_250_105_1, std::f64::consts::E] {
        let combo = &herm + &anti.scale(Complex64::from(mix));
        let (_, vecs) = hermitian_eigen(&combo);
        let pairs: Vec<(Complex64, Vec<Complex64>)> = (0..n)
            .map(|k| {
                let v = vecs.column(k);
                (m.sandwich(&v, &v), v)
            })
            .collect();

        let gap = min_pairwise_gap(pairs.iter().map(|(l, _)| *l));
        if gap < min_gap {
            return Err(Error::DegenerateBasis { gap });
        }
        let residual_ok = pairs.iter().all(|(lambda, v)| {
            let mv = m.matvec(v);
            mv.iter()
                .zip(v)
                .map(|(a, b)| (a - lambda * b).norm())
                .fold(0.0, f64::max)
                <= 1e-9 * scale
        });
        if !residual_ok {
            // accidental degeneracy of the Hermitian combination; try another mix
            continue;
        }

        let mut pairs = pairs;
        pairs.sort_by(|(a, _), (b, _)| {
            phase_key(*a)
                .total_cmp(&phase_key(*b))
                .then(a.norm().total_cmp(&b.norm()))
        });
        let (values, vectors) = pairs
            .into_iter()
            .map(|(l, mut v)| {
                fix_global_phase(&mut v);
                (l, v)
            })
            .unzip();
        return Ok((values, vectors));
    }
    Err(Error::DegenerateBasis { gap: 0.0 })
}

fn min_pairwise_gap(values: impl Iterator<Item = Complex64>) -> f64 {
    let values: Vec<Complex64> = values.collect();
    let mut gap = f64::INFINITY;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            gap = gap.min((values[i] - values[j]).norm());
        }
    }
    gap
}

/// Phase in [0, 2π), with values within 1e-10 of a full turn (or of a real
/// positive axis) snapped to 0 so real spectra order deterministically.
fn phase_key(z: Complex64) -> f64 {
    if z.norm() <= 1e-14 {
        return 0.0;
    }
    let mut arg = z.im.atan2(z.re);
    if arg < 0.0 {
        arg += TAU;
    }
    if arg.abs() < 1e-10 || (TAU - arg) < 1e-10 {
        0.0
    } else {
        arg
    }
}

pub(crate) fn fix_global_phase(v: &mut [Complex64]) {
    if let Some(lead) = v.iter().copied().find(|z| z.norm() > 1e-10) {
        let rot = lead.conj() / lead.norm();
        for z in v.iter_mut() {
            *z *= rot;
        }
        // exact zero imaginary part on the leading amplitude
        if let Some(first) = v.iter_mut().find(|z| z.norm() > 1e-10) {
            *first = Complex64::new(first.norm(), 0.0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::matrix::{sigma_x, sigma_y, sigma_z};
    use proptest::prelude::*;

    fn random_hermitian(n: usize, entries: &[(f64, f64)]) -> ComplexMatrix {
        let raw = ComplexMatrix::from_fn(n, n, |r, c| {
            let (a, b) = entries[r * n + c];
            Complex64::new(a, b)
        });
        (&raw + &raw.adjoint()).scale(Complex64::from(0.5))
    }

    proptest! {
        #[test]
        fn jacobi_reconstructs_hermitian(n in 1usize..7, seed in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 49)) {
            let h = random_hermitian(n, &seed);
            let (vals, vecs) = hermitian_eigen(&h);
            // V diag V† == H
            let d = ComplexMatrix::from_real_diagonal(&vals);
            let rebuilt = &(&vecs * &d) * &vecs.adjoint();
            prop_assert!(rebuilt.max_abs_diff(&h) < 1e-12);
            let gram = &vecs.adjoint() * &vecs;
            prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
            prop_assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn degenerate_hermitian_is_fine() {
        let (vals, _) = hermitian_eigen(&ComplexMatrix::identity(4));
        assert_eq!(vals, vec![1.0; 4]);
    }

    #[test]
    fn sigma_z_and_x_orderings() {
        let (vals, vecs) = normal_eigen(&sigma_z(), 1e-8).unwrap();
        assert!((vals[0] - 1.0).norm() < 1e-14 && (vals[1] + 1.0).norm() < 1e-14);
        assert!((vecs[0][0] - 1.0).norm() < 1e-14 && vecs[0][1].norm() < 1e-14);

        let (_, vecs) = normal_eigen(&sigma_x(), 1e-8).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((vecs[0][0] - h).norm() < 1e-12 && (vecs[0][1] - h).norm() < 1e-12);
        assert!((vecs[1][0] - h).norm() < 1e-12 && (vecs[1][1] + h).norm() < 1e-12);

        let (_, vecs) = normal_eigen(&sigma_y(), 1e-8).unwrap();
        assert!((vecs[0][1] - Complex64::new(0.0, h)).norm() < 1e-12);
    }

    #[test]
    fn degenerate_normal_matrix_is_refused() {
        let m = ComplexMatrix::from_real_diagonal(&[1.0, 1.0, -1.0]);
        assert!(matches!(normal_eigen(&m, 1e-8), Err(Error::DegenerateBasis { .. })));
    }

    #[test]
    fn non_normal_is_refused() {
        let m = ComplexMatrix::from_vec(2, 2, vec![
            Complex64::from(1.0),
            Complex64::from(1.0),
            Complex64::from(0.0),
            Complex64::from(2.0),
        ])
        .unwrap();
        assert!(matches!(normal_eigen(&m, 1e-8), Err(Error::NotNormal { .. })));
    }
}
