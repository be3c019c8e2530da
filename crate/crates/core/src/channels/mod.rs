//! The channel zoo: Pauli-family, damping, dephasing and rotated channels in
//! Kraus form, plus the canonical affine qubit representation.

mod affine;

pub use affine::{affine_to_kraus, kraus_to_affine, AffineForm, AffineQubitChannel};

use num_complex::Complex64;

use crate::error::{check_range, Error, Result};
use crate::qcore::{sigma_x, sigma_y, sigma_z, weyl_operator, ComplexMatrix, KrausChannel};

const SIMPLEX_TOL: f64 = 1e-12;

fn real(x: f64) -> Complex64 {
    Complex64::from(x)
}

/// Generalized Pauli channel ρ ↦ Σ q_ls U_ls ρ U_ls†, with `q[l][s]`.
///
/// Zero-weight terms are dropped from the Kraus list.
pub fn pauli_family_channel(d: usize, q: &[Vec<f64>]) -> Result<KrausChannel> {
    if d == 0 {
        return Err(Error::param("d", "must be positive"));
    }
    if q.len() != d || q.iter().any(|row| row.len() != d) {
        return Err(Error::param("q", format!("must be a {d}×{d} matrix of probabilities")));
    }
    let mut total = 0.0;
    for (l, row) in q.iter().enumerate() {
        for (s, &w) in row.iter().enumerate() {
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::param(format!("q[{l}][{s}]"), format!("must be nonnegative, got {w}")));
            }
            total += w;
        }
    }
    if (total - 1.0).abs() > SIMPLEX_TOL {
        return Err(Error::param("q", format!("entries must sum to 1, got {total}")));
    }
    let mut ops = Vec::new();
    for (l, row) in q.iter().enumerate() {
        for (s, &w) in row.iter().enumerate() {
            if w > 0.0 {
                ops.push(weyl_operator(d, l, s)?.scale(real(w.sqrt())));
            }
        }
    }
    KrausChannel::new(ops)
}

fn check_simplex(px: f64, py: f64, pz: f64) -> Result<()> {
    check_range("px", px, 0.0, 1.0)?;
    check_range("py", py, 0.0, 1.0)?;
    check_range("pz", pz, 0.0, 1.0)?;
    let sum = px + py + pz;
    if sum > 1.0 + SIMPLEX_TOL {
        return Err(Error::param("px+py+pz", format!("must not exceed 1 (simplex), got {sum}")));
    }
    Ok(())
}

/// Qubit Pauli weights as the d = 2 generalized-Pauli table:
/// q00 = 1−px−py−pz, q01 = px, q11 = py, q10 = pz.
pub fn pauli_weights(px: f64, py: f64, pz: f64) -> Result<Vec<Vec<f64>>> {
    check_simplex(px, py, pz)?;
    let p0 = (1.0 - px - py - pz).max(0.0);
    Ok(vec![vec![p0, px], vec![pz, py]])
}

/// ρ ↦ (1−px−py−pz)ρ + px σxρσx + py σyρσy + pz σzρσz
pub fn pauli_channel(px: f64, py: f64, pz: f64) -> Result<KrausChannel> {
    check_simplex(px, py, pz)?;
    let p0 = (1.0 - px - py - pz).max(0.0);
    let terms = [
        (p0, ComplexMatrix::identity(2)),
        (px, sigma_x()),
        (py, sigma_y()),
        (pz, sigma_z()),
    ];
    KrausChannel::new(
        terms
            .into_iter()
            .filter(|(w, _)| *w > 0.0)
            .map(|(w, s)| s.scale(real(w.sqrt())))
            .collect(),
    )
}

/// Generalized amplitude damping in Kraus form.
pub fn gad_channel(gamma: f64, p: f64) -> Result<KrausChannel> {
    check_range("gamma", gamma, 0.0, 1.0)?;
    check_range("p", p, 0.0, 1.0)?;
    let (sp, sq) = (p.sqrt(), (1.0 - p).sqrt());
    let (sg, sk) = (gamma.sqrt(), (1.0 - gamma).sqrt());
    let m = |a: f64, b: f64, c: f64, d: f64| ComplexMatrix::from_vec(2, 2, vec![real(a), real(b), real(c), real(d)]);
    let ops = vec![
        m(sp, 0.0, 0.0, sp * sk)?,
        m(0.0, sp * sg, 0.0, 0.0)?,
        m(sq * sk, 0.0, 0.0, sq)?,
        m(0.0, 0.0, sq * sg, 0.0)?,
    ];
    KrausChannel::new(ops.into_iter().filter(|a| a.max_abs() > 0.0).collect())
}

/// Three-level V-configuration decay: |1> and |2> relax to |0> with
/// probabilities γ01 and γ02.
pub fn vshape_qutrit_channel(gamma01: f64, gamma02: f64) -> Result<KrausChannel> {
    check_range("gamma01", gamma01, 0.0, 1.0)?;
    check_range("gamma02", gamma02, 0.0, 1.0)?;
    let a0 = ComplexMatrix::from_real_diagonal(&[1.0, (1.0 - gamma01).sqrt(), (1.0 - gamma02).sqrt()]);
    let mut a1 = ComplexMatrix::zeros(3, 3);
    a1[(0, 1)] = real(gamma01.sqrt());
    let mut a2 = ComplexMatrix::zeros(3, 3);
    a2[(0, 2)] = real(gamma02.sqrt());
    KrausChannel::new(vec![a0, a1, a2])
}

/// σ·n for n = (sinθ cosφ, sinθ sinφ, cosθ).
fn sigma_along(theta: f64, phi: f64) -> ComplexMatrix {
    let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let mut out = ComplexMatrix::zeros(2, 2);
    for (s, c) in [sigma_x(), sigma_y(), sigma_z()].iter().zip(n) {
        out = &out + &s.scale(real(c));
    }
    out
}

/// Dephasing along an arbitrary axis: ρ ↦ (1−p)ρ + p (σ·n) ρ (σ·n).
pub fn dephasing_axis_channel(p: f64, theta: f64, phi: f64) -> Result<KrausChannel> {
    check_range("p", p, 0.0, 1.0)?;
    check_range("theta", theta, 0.0, std::f64::consts::FRAC_PI_2)?;
    if !(phi.is_finite() && (0.0..=std::f64::consts::TAU).contains(&phi)) {
        return Err(Error::param("phi", format!("must lie in [0, 2π), got {phi}")));
    }
    let ops = [
        ComplexMatrix::identity(2).scale(real((1.0 - p).sqrt())),
        sigma_along(theta, phi).scale(real(p.sqrt())),
    ];
    KrausChannel::new(ops.into_iter().filter(|a| a.max_abs() > 0.0).collect())
}

/// Pauli channel followed by the σz rotation ρ ↦ e^{iφσz/2} ρ e^{−iφσz/2}.
pub fn rotated_pauli_channel(px: f64, py: f64, pz: f64, phi: f64) -> Result<KrausChannel> {
    let pauli = pauli_channel(px, py, pz)?;
    if !(phi.is_finite() && phi.abs() <= std::f64::consts::PI + 1e-12) {
        return Err(Error::param("phi", format!("must lie in [−π, π], got {phi}")));
    }
    let half = phi / 2.0;
    let rotation = ComplexMatrix::from_vec(
        2,
        2,
        vec![
            Complex64::from_polar(1.0, half),
            real(0.0),
            real(0.0),
            Complex64::from_polar(1.0, -half),
        ],
    )?;
    pauli.then(&KrausChannel::new(vec![rotation])?)
}
