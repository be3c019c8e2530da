//! Bloch-sphere affine representation of qubit channels, r ↦ Λr + t.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::qcore::{hermitian_eigen, sigma_x, sigma_y, sigma_z, ComplexMatrix, KrausChannel};

/// Choi eigenvalues below this are treated as zero when extracting Kraus operators.
const KRAUS_CUTOFF: f64 = 1e-12;

/// Slack allowed on the complete-positivity inequalities.
const CP_SLACK: f64 = 1e-12;

/// Canonical qubit channel: Λ = diag(λ₁, λ₂, λ₃), t = (0, 0, t₃).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineQubitChannel {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    pub t3: f64,
}

impl AffineQubitChannel {
    /// Validated constructor; rejects parameters outside [−1, 1] or
    /// violating (λ₁ ± λ₂)² ≤ (1 ± λ₃)² − t₃².
    pub fn new(lambda1: f64, lambda2: f64, lambda3: f64, t3: f64) -> Result<Self> {
        let ch = Self::unchecked(lambda1, lambda2, lambda3, t3);
        ch.check_cp()?;
        Ok(ch)
    }

    /// No validation; useful for probing the CP boundary.
    pub fn unchecked(lambda1: f64, lambda2: f64, lambda3: f64, t3: f64) -> Self {
        Self {
            lambda1,
            lambda2,
            lambda3,
            t3,
        }
    }

    pub fn check_cp(&self) -> Result<()> {
        for (name, v) in [
            ("lambda1", self.lambda1),
            ("lambda2", self.lambda2),
            ("lambda3", self.lambda3),
            ("t3", self.t3),
        ] {
            check_range(name, v, -1.0, 1.0)?;
        }
        let [plus, minus] = self.cp_slacks();
        if plus < -CP_SLACK {
            return Err(Error::NotCompletelyPositive(format!(
                "(λ1+λ2)² ≤ (1+λ3)² − t² fails: {:.6} > {:.6}",
                (self.lambda1 + self.lambda2).powi(2),
                (1.0 + self.lambda3).powi(2) - self.t3 * self.t3
            )));
        }
        if minus < -CP_SLACK {
            return Err(Error::NotCompletelyPositive(format!(
                "(λ1−λ2)² ≤ (1−λ3)² − t² fails: {:.6} > {:.6}",
                (self.lambda1 - self.lambda2).powi(2),
                (1.0 - self.lambda3).powi(2) - self.t3 * self.t3
            )));
        }
        Ok(())
    }

    /// Right-hand minus left-hand side of the two CP inequalities.
    pub fn cp_slacks(&self) -> [f64; 2] {
        let t2 = self.t3 * self.t3;
        [
            (1.0 + self.lambda3).powi(2) - t2 - (self.lambda1 + self.lambda2).powi(2),
            (1.0 - self.lambda3).powi(2) - t2 - (self.lambda1 - self.lambda2).powi(2),
        ]
    }

    pub fn lambdas(&self) -> [f64; 3] {
        [self.lambda1, self.lambda2, self.lambda3]
    }

    pub fn shift(&self) -> [f64; 3] {
        [0.0, 0.0, self.t3]
    }

    pub fn is_unital(&self) -> bool {
        self.t3 == 0.0
    }

    pub fn form(&self) -> AffineForm {
        AffineForm {
            lambda: [
                [self.lambda1, 0.0, 0.0],
                [0.0, self.lambda2, 0.0],
                [0.0, 0.0, self.lambda3],
            ],
            t: self.shift(),
        }
    }

    /// Choi matrix (E ⊗ I)|φ+><φ+| of the affine map, defined even when the
    /// parameters are not CP.
    pub fn choi_matrix(&self) -> ComplexMatrix {
        self.form().choi_matrix()
    }

    pub fn to_kraus(&self) -> Result<KrausChannel> {
        affine_to_kraus(self)
    }

    /// Generalized amplitude damping: (√(1−γ), √(1−γ), 1−γ, (2p−1)γ).
    pub fn gad(gamma: f64, p: f64) -> Result<Self> {
        check_range("gamma", gamma, 0.0, 1.0)?;
        check_range("p", p, 0.0, 1.0)?;
        let s = (1.0 - gamma).sqrt();
        Self::new(s, s, 1.0 - gamma, (2.0 * p - 1.0) * gamma)
    }

    /// Stretched damping: (s, s, 1−γ, γ) with |s| ≤ √(1−γ).
    pub fn stretched(gamma: f64, s: f64) -> Result<Self> {
        check_range("gamma", gamma, 0.0, 1.0)?;
        let bound = (1.0 - gamma).sqrt();
        if !(s.abs() <= bound + CP_SLACK) {
            return Err(Error::param(
                "s",
                format!("|s| ≤ √(1−γ) = {bound:.6} is required for complete positivity, got {s}"),
            ));
        }
        Self::new(s, s, 1.0 - gamma, gamma)
    }

    /// Extremal channel: (cos α, cos β, cos α cos β, sin α sin β), 0 ≤ α ≤ β ≤ π/2.
    pub fn extremal(alpha: f64, beta: f64) -> Result<Self> {
        check_range("alpha", alpha, 0.0, std::f64::consts::FRAC_PI_2)?;
        check_range("beta", beta, 0.0, std::f64::consts::FRAC_PI_2)?;
        if alpha > beta {
            return Err(Error::param("alpha", format!("0 ≤ α ≤ β is required, got α={alpha} > β={beta}")));
        }
        let (ca, cb) = (alpha.cos(), beta.cos());
        Self::new(ca, cb, ca * cb, alpha.sin() * beta.sin())
    }
}

/// General affine data Λ (3×3) and t, as extracted from any qubit channel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineForm {
    pub lambda: [[f64; 3]; 3],
    pub t: [f64; 3],
}

impl AffineForm {
    /// Image of an arbitrary 2×2 matrix X under X ↦ ½[Tr X (I + t·σ) + Σ_ij Λ_ij Tr(σ_j X) σ_i].
    fn apply(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let paulis = [sigma_x(), sigma_y(), sigma_z()];
        let tr = x.trace();
        let mut out = ComplexMatrix::identity(2).scale(tr);
        for (i, si) in paulis.iter().enumerate() {
            let mut coeff = tr * self.t[i];
            for (j, sj) in paulis.iter().enumerate() {
                coeff += (sj * x).trace() * self.lambda[i][j];
            }
            out = &out + &si.scale(coeff);
        }
        out.scale(Complex64::from(0.5))
    }

    pub fn choi_matrix(&self) -> ComplexMatrix {
        let mut choi = ComplexMatrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                let eij = ComplexMatrix::from_fn(2, 2, |r, c| Complex64::from(f64::from(r == i && c == j)));
                let block = self.apply(&eij);
                // (E ⊗ I) Σ_ij |i><j| ⊗ |i><j| / 2
                for a in 0..2 {
                    for b in 0..2 {
                        choi[(a * 2 + i, b * 2 + j)] += block[(a, b)] * 0.5;
                    }
                }
            }
        }
        choi
    }

    /// Returns the canonical channel when Λ is diagonal and t lies on z.
    pub fn as_canonical(&self, tol: f64) -> Option<AffineQubitChannel> {
        let off_diag = (0..3)
            .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j)))
            .all(|(i, j)| self.lambda[i][j].abs() <= tol);
        (off_diag && self.t[0].abs() <= tol && self.t[1].abs() <= tol).then(|| {
            AffineQubitChannel::unchecked(self.lambda[0][0], self.lambda[1][1], self.lambda[2][2], self.t[2])
        })
    }
}

/// Kraus operators from the spectral decomposition of the Choi matrix.
pub fn affine_to_kraus(ch: &AffineQubitChannel) -> Result<KrausChannel> {
    ch.check_cp()?;
    let choi = ch.choi_matrix().scale(Complex64::from(2.0));
    let (values, vectors) = hermitian_eigen(&choi);
    let mut ops = Vec::new();
    for (k, &lambda) in values.iter().enumerate().rev() {
        if lambda <= KRAUS_CUTOFF {
            continue;
        }
        let amp = lambda.sqrt();
        ops.push(ComplexMatrix::from_fn(2, 2, |a, b| vectors[(a * 2 + b, k)] * amp));
    }
    KrausChannel::new(ops)
}

/// Λ_ij = Tr[σ_i E(σ_j)]/2 and t_i = Tr[σ_i E(I/2)].
pub fn kraus_to_affine(channel: &KrausChannel) -> Result<AffineForm> {
    if channel.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: channel.dim(),
        });
    }
    let paulis = [sigma_x(), sigma_y(), sigma_z()];
    let images: Vec<ComplexMatrix> = paulis.iter().map(|s| channel.apply_matrix(s)).collect();
    let half_id = channel.apply_matrix(&ComplexMatrix::identity(2).scale(Complex64::from(0.5)));
    let mut lambda = [[0.0; 3]; 3];
    let mut t = [0.0; 3];
    for (i, si) in paulis.iter().enumerate() {
        for (j, img) in images.iter().enumerate() {
            lambda[i][j] = (si * img).trace().re / 2.0;
        }
        t[i] = (si * &half_id).trace().re;
    }
    Ok(AffineForm { lambda, t })
}
