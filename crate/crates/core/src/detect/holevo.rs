//! Holevo capacities: the zero-temperature amplitude damping channel, and
//! canonical qubit channels symmetric about the z axis.

use crate::channels::AffineQubitChannel;
use crate::error::{check_range, Error, Result};
use crate::infotheory::binary_entropy;

const GRID: usize = 10_000;
const T_TOL: f64 = 1e-10;

/// C₁(γ, 1) = max over t ∈ [0, 1] of H[t(1−γ)] − H[(1 + √(1 − 4γ(1−γ)t²))/2].
pub fn holevo_gad_p1(gamma: f64) -> Result<f64> {
    check_range("gamma", gamma, 0.0, 1.0)?;
    let f = |t: f64| {
        let g = 0.5 * (1.0 + (1.0 - 4.0 * gamma * (1.0 - gamma) * t * t).max(0.0).sqrt());
        binary_entropy(t * (1.0 - gamma)) - binary_entropy(g)
    };
    let at = |k: usize| k as f64 / GRID as f64;
    let best = (0..=GRID)
        .max_by(|&a, &b| f(at(a)).total_cmp(&f(at(b))))
        .expect("grid is nonempty");
    let (lo, hi) = (at(best.saturating_sub(1)), at((best + 1).min(GRID)));
    let t = golden_max(f, lo, hi, T_TOL);
    Ok(f(t).max(f(at(best))).max(0.0))
}

/// Grid size for the convex-envelope computation in [`holevo_axial`].
pub const AXIAL_GRID: usize = 4001;

/// Holevo capacity of a canonical channel with λ₁ = λ₂.
///
/// Such a channel commutes with rotations about z, so an optimal ensemble
/// can be averaged over those rotations without changing the mean output
/// entropy; only the distribution of c = cos θ of the inputs matters. With
/// g(c) the output entropy of a pure input at height c,
///
/// χ = max over m ∈ [−1, 1] of H((1 + |λ₃m + t₃|)/2) − ǧ(m),
///
/// where ǧ is the lower convex envelope of g. The envelope is built on a
/// uniform grid of `points` nodes, and the maximum is refined by golden
/// section on the piecewise-linear envelope.
pub fn holevo_axial(ch: &AffineQubitChannel, points: usize) -> Result<f64> {
    ch.check_cp()?;
    if (ch.lambda1 - ch.lambda2).abs() > 1e-12 {
        return Err(Error::param(
            "lambda2",
            format!("axial symmetry needs λ1 = λ2, got {} and {}", ch.lambda1, ch.lambda2),
        ));
    }
    if points < 3 {
        return Err(Error::param("points", "at least 3 grid points are required"));
    }
    let (s, l3, t) = (ch.lambda1, ch.lambda3, ch.t3);
    let out_entropy = |c: f64| {
        let r = (s * s * (1.0 - c * c).max(0.0) + (l3 * c + t).powi(2)).sqrt();
        binary_entropy((0.5 * (1.0 + r)).min(1.0))
    };
    let xs: Vec<f64> = (0..points).map(|k| -1.0 + 2.0 * k as f64 / (points - 1) as f64).collect();
    let hull = lower_hull(&xs, &xs.iter().map(|&c| out_entropy(c)).collect::<Vec<_>>());
    let envelope = |m: f64| {
        let k = hull.partition_point(|&(x, _)| x <= m).clamp(1, hull.len() - 1);
        let ((x0, y0), (x1, y1)) = (hull[k - 1], hull[k]);
        y0 + (y1 - y0) * (m - x0) / (x1 - x0)
    };
    let chi = |m: f64| binary_entropy((0.5 * (1.0 + (l3 * m + t).abs())).min(1.0)) - envelope(m);
    let best = (0..points)
        .max_by(|&a, &b| chi(xs[a]).total_cmp(&chi(xs[b])))
        .expect("grid is nonempty");
    let (lo, hi) = (xs[best.saturating_sub(1)], xs[(best + 1).min(points - 1)]);
    let m = golden_max(chi, lo, hi, T_TOL);
    Ok(chi(m).max(chi(xs[best])).max(0.0))
}

/// Lower convex hull of points sorted by x (monotone chain).
fn lower_hull(xs: &[f64], ys: &[f64]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for (&x, &y) in xs.iter().zip(ys) {
        while hull.len() >= 2 {
            let (ax, ay) = hull[hull.len() - 2];
            let (bx, by) = hull[hull.len() - 1];
            // drop b when it lies on or above the chord from a to (x, y)
            if (bx - ax) * (y - ay) - (by - ay) * (x - ax) <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }
    hull
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            (d, fd) = (c, fc);
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            (c, fc) = (d, fd);
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::AffineQubitChannel;
    use crate::detect::detect_pauli_qubit;

    #[test]
    fn endpoints() {
        assert!((holevo_gad_p1(0.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(holevo_gad_p1(1.0).unwrap().abs() < 1e-12);
        assert!(holevo_gad_p1(-0.1).is_err());
    }

    #[test]
    fn matches_bounded_scalar_minimizer() {
        // bounded Brent minimization at xatol 1e-12, computed offline
        for (g, expected) in [(0.1, 0.8404965065644597), (0.5, 0.471729390598584), (0.9, 0.13230261338389124)] {
            assert!((holevo_gad_p1(g).unwrap() - expected).abs() < 1e-10, "γ={g}");
        }
    }

    #[test]
    fn axial_solver_reproduces_amplitude_damping() {
        for g in [0.1, 0.36, 0.5, 0.9] {
            let a = holevo_axial(&AffineQubitChannel::gad(g, 1.0).unwrap(), AXIAL_GRID).unwrap();
            let b = holevo_gad_p1(g).unwrap();
            assert!((a - b).abs() < 1e-6, "γ={g}: {a} vs {b}");
        }
    }

    #[test]
    fn axial_solver_limits() {
        let id = AffineQubitChannel::new(1.0, 1.0, 1.0, 0.0).unwrap();
        assert!((holevo_axial(&id, AXIAL_GRID).unwrap() - 1.0).abs() < 1e-12);
        // unital: C1 = 1 − H((1 − max|λ|)/2)
        let ch = AffineQubitChannel::new(0.5, 0.5, 0.8, 0.0).unwrap();
        let expected = 1.0 - binary_entropy(0.1);
        assert!((holevo_axial(&ch, AXIAL_GRID).unwrap() - expected).abs() < 1e-9);
        assert!(holevo_axial(&AffineQubitChannel::extremal(0.3, 0.9).unwrap(), AXIAL_GRID).is_err());
    }

    #[test]
    fn exceeds_detected_bound_inside() {
        for i in 1..100 {
            let g = i as f64 / 100.0;
            let c1 = holevo_gad_p1(g).unwrap();
            let cdet = detect_pauli_qubit(&AffineQubitChannel::gad(g, 1.0).unwrap()).unwrap().c_det_bits;
            assert!(c1 > cdet, "γ={g}: {c1} vs {cdet}");
        }
    }
}
