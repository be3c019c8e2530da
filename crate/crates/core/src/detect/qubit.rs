//! Closed forms for qubit channels probed with the three Pauli bases.

use std::f64::consts::PI;

use super::{maximize_transition, DetectionResult};
use crate::channels::AffineQubitChannel;
use crate::error::{check_range, Error, Result};
use crate::infotheory::{binary_capacity, binary_entropy, BaOptions, TransitionMatrix};

/// (ε₀, ε₁) for the x, y and z measurements of a canonical channel:
/// ε₀ = (1 − |λ| − |t|)/2 and ε₁ = ε₀ + |t|.
pub fn pauli_epsilons(ch: &AffineQubitChannel) -> [(f64, f64); 3] {
    let t = ch.shift();
    let lambda = ch.lambdas();
    std::array::from_fn(|i| {
        let e0 = (0.5 * (1.0 - lambda[i].abs() - t[i].abs())).clamp(0.0, 1.0);
        (e0, (e0 + t[i].abs()).min(1.0))
    })
}

/// Transition matrix of one Pauli measurement, inputs ordered (+1, −1):
/// p(±|+1) = ½[1 ± (t + λ)], p(±|−1) = ½[1 ± (t − λ)].
pub fn pauli_transition(lambda: f64, t: f64) -> Result<TransitionMatrix> {
    let entries = vec![
        0.5 * (1.0 + t + lambda),
        0.5 * (1.0 + t - lambda),
        0.5 * (1.0 - t - lambda),
        0.5 * (1.0 - t + lambda),
    ];
    TransitionMatrix::from_noisy(2, 2, entries, 1e-12)
}

/// C_DET of a canonical qubit channel over the Pauli bases, computed from
/// the affine parameters without building Kraus operators.
pub fn detect_pauli_qubit(ch: &AffineQubitChannel) -> Result<DetectionResult> {
    ch.check_cp()?;
    let t = ch.shift();
    let options = BaOptions::default();
    let outcomes = ["x", "y", "z"]
        .into_iter()
        .zip(ch.lambdas())
        .zip(t)
        .map(|((label, lambda), ti)| maximize_transition(label, pauli_transition(lambda, ti)?, &options))
        .collect::<Result<Vec<_>>>()?;
    DetectionResult::from_outcomes(outcomes)
}

/// The two candidate terms for generalized amplitude damping:
/// `[1 − H((1 − √(1−γ))/2), C_B(γ·min{p,1−p}, γ·max{p,1−p})]`.
/// The first is shared by the x and y measurements, the second is z.
pub fn gad_detected_terms(gamma: f64, p: f64) -> Result<[f64; 2]> {
    check_range("gamma", gamma, 0.0, 1.0)?;
    check_range("p", p, 0.0, 1.0)?;
    let xy = 1.0 - binary_entropy(0.5 * (1.0 - (1.0 - gamma).sqrt()));
    let z = binary_capacity(gamma * p.min(1.0 - p), gamma * p.max(1.0 - p))?.capacity_bits;
    Ok([xy, z])
}

/// The two candidate terms for extremal channels, 0 ≤ α ≤ β ≤ π/2:
/// `[1 − H(sin²(α/2)), C_B(sin²((β−α)/2), sin²((β+α)/2))]`.
///
/// The x measurement (λ₁ = cos α) dominates y (λ₂ = cos β) because
/// α ≤ β, so the first entry is the better of the two equatorial bases.
pub fn extremal_detected_terms(alpha: f64, beta: f64) -> Result<[f64; 2]> {
    AffineQubitChannel::extremal(alpha, beta)?;
    let s2 = |x: f64| (0.5 * x).sin().powi(2);
    let xy = 1.0 - binary_entropy(s2(alpha));
    let z = binary_capacity(s2(beta - alpha), s2(beta + alpha))?.capacity_bits;
    Ok([xy, z])
}

/// Pauli-basis C_DET of dephasing along n = (sinθ cosφ, sinθ sinφ, cosθ).
pub fn dephasing_detected(p: f64, theta: f64, phi: f64) -> Result<f64> {
    check_range("p", p, 0.0, 1.0)?;
    check_range("theta", theta, 0.0, PI / 2.0)?;
    if !(phi.is_finite() && (0.0..=2.0 * PI).contains(&phi)) {
        return Err(Error::param("phi", format!("must lie in [0, 2π], got {phi}")));
    }
    let (st2, ct2) = (theta.sin().powi(2), theta.cos().powi(2));
    let flips = [
        p * (ct2 + st2 * phi.sin().powi(2)),
        p * (ct2 + st2 * phi.cos().powi(2)),
        p * st2,
    ];
    Ok(1.0 - flips.into_iter().map(binary_entropy).fold(f64::INFINITY, f64::min))
}

/// Pauli-basis C_DET of a Pauli channel followed by a σz rotation by φ.
pub fn rotated_pauli_detected(px: f64, py: f64, pz: f64, phi: f64) -> Result<f64> {
    crate::channels::pauli_weights(px, py, pz)?;
    if !(phi.is_finite() && phi.abs() <= PI + 1e-12) {
        return Err(Error::param("phi", format!("must lie in [−π, π], got {phi}")));
    }
    Ok(rotated_pauli_unchecked(px, py, pz, phi))
}

pub(crate) fn rotated_pauli_unchecked(px: f64, py: f64, pz: f64, phi: f64) -> f64 {
    let c = phi.cos();
    let base = 0.5 * (1.0 - c);
    let flips = [base + (py + pz) * c, base + (px + pz) * c, px + py];
    1.0 - flips
        .into_iter()
        .map(|f| binary_entropy(f.clamp(0.0, 1.0)))
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{dephasing_axis_channel, pauli_channel, rotated_pauli_channel};
    use crate::detect::{detect_capacity, DetectionConfig, Method};

    fn pauli_affine(px: f64, py: f64, pz: f64) -> AffineQubitChannel {
        AffineQubitChannel::new(1.0 - 2.0 * (py + pz), 1.0 - 2.0 * (px + pz), 1.0 - 2.0 * (px + py), 0.0).unwrap()
    }

    #[test]
    fn epsilons_of_amplitude_damping() {
        let e = pauli_epsilons(&AffineQubitChannel::gad(0.36, 1.0).unwrap());
        assert!((e[0].0 - 0.1).abs() < 1e-15 && (e[0].1 - 0.1).abs() < 1e-15);
        assert!(e[2].0.abs() < 1e-15 && (e[2].1 - 0.36).abs() < 1e-15);
        let id = pauli_epsilons(&AffineQubitChannel::new(1.0, 1.0, 1.0, 0.0).unwrap());
        assert!(id.iter().all(|&(a, b)| a == 0.0 && b == 0.0));
    }

    #[test]
    fn unital_reduces_to_entropy_formula() {
        let r = detect_pauli_qubit(&pauli_affine(0.15, 0.05, 0.1)).unwrap();
        let expected = 1.0 - [0.15, 0.25, 0.2].map(binary_entropy).into_iter().fold(f64::INFINITY, f64::min);
        assert!((r.c_det_bits - expected).abs() < 1e-12);
        assert!((r.c_det_bits - 0.3902).abs() < 1e-4);
    }

    #[test]
    fn epsilons_give_the_same_capacity_as_transitions() {
        for ch in [
            AffineQubitChannel::gad(0.36, 1.0).unwrap(),
            AffineQubitChannel::gad(0.7, 0.2).unwrap(),
            AffineQubitChannel::stretched(0.5, -0.3).unwrap(),
            AffineQubitChannel::extremal(0.4, 1.1).unwrap(),
        ] {
            let r = detect_pauli_qubit(&ch).unwrap();
            for (o, (e0, e1)) in r.per_basis.iter().zip(pauli_epsilons(&ch)) {
                let cb = binary_capacity(e0, e1).unwrap().capacity_bits;
                assert!((o.mutual_information_bits - cb).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn amplitude_damping_example() {
        let r = detect_pauli_qubit(&AffineQubitChannel::gad(0.36, 1.0).unwrap()).unwrap();
        assert!((r.c_det_bits - (1.0 - binary_entropy(0.1))).abs() < 1e-12);
        assert!((r.c_det_bits - 0.53100).abs() < 1e-5);
        assert!((r.per_basis[2].mutual_information_bits - 0.44386).abs() < 1e-5);
        assert_eq!(r.argmax_basis, "x");
    }

    #[test]
    fn stretched_at_zero_stretch() {
        let r = detect_pauli_qubit(&AffineQubitChannel::stretched(0.5, 0.0).unwrap()).unwrap();
        assert!((r.c_det_bits - 1.25f64.log2()).abs() < 1e-12);
        assert_eq!(r.argmax_basis, "z");
        assert_eq!(r.per_basis[2].method, Method::BinaryClosedForm);
    }

    #[test]
    fn gad_is_p_independent_and_x_wins() {
        for i in 0..=20 {
            let gamma = i as f64 / 20.0;
            let reference = detect_pauli_qubit(&AffineQubitChannel::gad(gamma, 0.0).unwrap()).unwrap().c_det_bits;
            for j in 0..=20 {
                let p = j as f64 / 20.0;
                let [xy, z] = gad_detected_terms(gamma, p).unwrap();
                assert!(xy >= z - 1e-12, "γ={gamma} p={p}: {xy} < {z}");
                let c = detect_pauli_qubit(&AffineQubitChannel::gad(gamma, p).unwrap()).unwrap().c_det_bits;
                assert!((c - reference).abs() < 1e-9);
                assert!((c - xy.max(z)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn extremal_first_term_wins() {
        let n = 30;
        for i in 0..=n {
            for j in i..=n {
                let (a, b) = (PI / 2.0 * i as f64 / n as f64, PI / 2.0 * j as f64 / n as f64);
                let [xy, z] = extremal_detected_terms(a, b).unwrap();
                assert!(xy >= z - 1e-12, "α={a} β={b}");
                let c = detect_pauli_qubit(&AffineQubitChannel::extremal(a, b).unwrap()).unwrap().c_det_bits;
                assert!((c - xy.max(z)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn dephasing_matches_engine_and_symmetry() {
        let config = DetectionConfig::pauli();
        for &(p, th, ph) in &[(0.9, 0.7, 0.3), (0.2, 1.2, 4.0), (0.5, 0.0, 1.0), (1.0, 1.5, 6.0)] {
            let closed = dephasing_detected(p, th, ph).unwrap();
            let engine = detect_capacity(&dephasing_axis_channel(p, th, ph).unwrap(), &config).unwrap();
            assert!((closed - engine.c_det_bits).abs() < 1e-9);
            let shifted = dephasing_detected(p, th, (ph + PI / 2.0) % (2.0 * PI)).unwrap();
            assert!((closed - shifted).abs() < 1e-12);
        }
        assert_eq!(dephasing_detected(0.4, 0.0, 2.0).unwrap(), 1.0);
    }

    #[test]
    fn dephasing_worst_case() {
        let p = 0.9;
        let c = dephasing_detected(p, (1.0 / 3f64.sqrt()).acos(), PI / 4.0).unwrap();
        assert!((c - (1.0 - binary_entropy(2.0 * p / 3.0))).abs() < 1e-12);
        assert!((c - 0.02905).abs() < 1e-5);
    }

    #[test]
    fn rotated_pauli_examples() {
        let unrotated = rotated_pauli_detected(0.15, 0.05, 0.1, 0.0).unwrap();
        assert!((unrotated - (1.0 - binary_entropy(0.15))).abs() < 1e-12);
        let quarter = rotated_pauli_detected(0.15, 0.05, 0.1, PI / 2.0).unwrap();
        assert!((quarter - (1.0 - binary_entropy(0.2))).abs() < 1e-12);
        for phi in [0.3, 1.0, 2.5] {
            let a = rotated_pauli_detected(0.15, 0.05, 0.1, phi).unwrap();
            let b = rotated_pauli_detected(0.15, 0.05, 0.1, -phi).unwrap();
            assert_eq!(a, b);
            let engine = detect_capacity(&rotated_pauli_channel(0.15, 0.05, 0.1, phi).unwrap(), &DetectionConfig::pauli())
                .unwrap();
            assert!((a - engine.c_det_bits).abs() < 1e-9);
        }
        assert!(rotated_pauli_detected(0.5, 0.4, 0.3, 0.0).is_err());
        assert!(rotated_pauli_detected(0.1, 0.1, 0.1, 4.0).is_err());
    }

    #[test]
    fn closed_form_matches_engine_on_pauli_channels() {
        for &(px, py, pz) in &[(0.15, 0.05, 0.1), (0.3, 0.0, 0.2), (0.0, 0.0, 0.0), (0.25, 0.25, 0.25)] {
            let a = detect_pauli_qubit(&pauli_affine(px, py, pz)).unwrap().c_det_bits;
            let b = detect_capacity(&pauli_channel(px, py, pz).unwrap(), &DetectionConfig::pauli())
                .unwrap()
                .c_det_bits;
            assert!((a - b).abs() < 1e-9);
        }
    }
}
