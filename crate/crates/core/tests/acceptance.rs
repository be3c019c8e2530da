//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so that lines appear in order and the runtime of each criterion
//! can be reported next to its verdict.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use capdetect::channels::{
    dephasing_axis_channel, pauli_channel, rotated_pauli_channel, vshape_qutrit_channel, AffineQubitChannel,
};
use capdetect::detect::{
    dephasing_detected, detect_capacity, detect_pauli_qubit, qutrit_mub_bases, qutrit_vshape_transitions,
    rotated_pauli_detected, t_threshold, von_mises_expected_capacity, DetectionConfig, DEFAULT_QUAD_POINTS,
};
use capdetect::figures::{reproduce_figure, Figure};
use capdetect::format::{Cell, Grid};
use capdetect::infotheory::{
    binary_capacity, binary_entropy, blahut_arimoto, entropy_bits, BaOptions, TransitionMatrix,
};
use capdetect::qcore::{conditional_probs, ComplexMatrix, KrausChannel, Ket, MeasurementBasis};
use capdetect::sim::{detect_from_samples, entangled_joint_distribution};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: capdetect::Error) -> String {
    e.to_string()
}

fn missing() -> String {
    "missing column".into()
}

// ---------------------------------------------------------------- oracles

/// I(X;Y) in bits for prior p over the columns of t, written out directly.
fn mi_direct(t: &[Vec<f64>], p: &[f64]) -> f64 {
    let q: Vec<f64> = t.iter().map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum()).collect();
    let mut total = 0.0;
    for (m, row) in t.iter().enumerate() {
        for (n, &pmn) in row.iter().enumerate() {
            if pmn > 0.0 && p[n] > 0.0 {
                total += p[n] * pmn * (pmn / q[m]).log2();
            }
        }
    }
    total
}

/// Capacity by exhaustive search on a simplex lattice, polished by
/// pairwise mass transfers with a shrinking step.
fn simplex_search(t: &[Vec<f64>]) -> f64 {
    let n = t[0].len();
    let lattice = 24usize;
    let mut best = vec![1.0 / n as f64; n];
    let mut best_val = mi_direct(t, &best);
    let mut counts = vec![0usize; n];
    fn visit(k: usize, left: usize, counts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k + 1 == counts.len() {
            counts[k] = left;
            f(counts);
            return;
        }
        for c in 0..=left {
            counts[k] = c;
            visit(k + 1, left - c, counts, f);
        }
    }
    visit(0, lattice, &mut counts, &mut |c| {
        let p: Vec<f64> = c.iter().map(|&x| x as f64 / lattice as f64).collect();
        let v = mi_direct(t, &p);
        if v > best_val {
            best_val = v;
            best = p;
        }
    });
    let mut step = 1.0 / lattice as f64;
    while step > 1e-10 {
        let mut improved = false;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let delta = step.min(best[j]);
                if delta <= 0.0 {
                    continue;
                }
                let mut p = best.clone();
                p[i] += delta;
                p[j] -= delta;
                let v = mi_direct(t, &p);
                if v > best_val {
                    best_val = v;
                    best = p;
                    improved = true;
                }
            }
        }
        if !improved {
            step /= 2.0;
        }
    }
    best_val
}

fn gaussian_c(rng: &mut ChaCha8Rng) -> Complex64 {
    // Box–Muller
    let (u1, u2): (f64, f64) = (rng.random::<f64>().max(1e-300), rng.random());
    let r = (-2.0 * u1.ln()).sqrt();
    Complex64::new(r * (2.0 * PI * u2).cos(), r * (2.0 * PI * u2).sin())
}

/// Gram–Schmidt on the columns of a tall complex matrix.
fn orthonormal_columns(cols: &mut [Vec<Complex64>]) {
    for k in 0..cols.len() {
        for j in 0..k {
            let proj: Complex64 = cols[j].iter().zip(&cols[k]).map(|(a, b)| a.conj() * b).sum();
            let prev = cols[j].clone();
            for (x, y) in cols[k].iter_mut().zip(prev) {
                *x -= proj * y;
            }
        }
        let norm = cols[k].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[k].iter_mut() {
            *x /= norm;
        }
    }
}

/// A random channel from an isometry C^d → C^(r·d), cut into r Kraus blocks.
fn random_channel(d: usize, rank: usize, rng: &mut ChaCha8Rng) -> KrausChannel {
    let mut cols: Vec<Vec<Complex64>> = (0..d).map(|_| (0..rank * d).map(|_| gaussian_c(rng)).collect()).collect();
    orthonormal_columns(&mut cols);
    let ops = (0..rank)
        .map(|k| ComplexMatrix::from_fn(d, d, |i, j| cols[j][k * d + i]))
        .collect();
    KrausChannel::new(ops).expect("isometry blocks form a channel")
}

fn random_basis(d: usize, rng: &mut ChaCha8Rng) -> MeasurementBasis {
    let mut vs: Vec<Vec<Complex64>> = (0..d).map(|_| (0..d).map(|_| gaussian_c(rng)).collect()).collect();
    orthonormal_columns(&mut vs);
    let kets = vs.into_iter().map(|v| Ket::new(v).expect("normalized")).collect();
    MeasurementBasis::new("random", kets).expect("orthonormal")
}

/// p(m|n) = Σ_k |⟨m|K_k|n⟩|².
fn transition_by_kraus(ch: &KrausChannel, basis: &MeasurementBasis) -> Vec<Vec<f64>> {
    let vs = basis.vectors();
    vs.iter()
        .map(|m| {
            vs.iter()
                .map(|n| ch.operators().iter().map(|k| k.sandwich(m.amplitudes(), n.amplitudes()).norm_sqr()).sum())
                .collect()
        })
        .collect()
}

fn random_canonical(rng: &mut ChaCha8Rng) -> AffineQubitChannel {
    loop {
        let mut x = || rng.random_range(-1.0..=1.0);
        if let Ok(ch) = AffineQubitChannel::new(x(), x(), x(), x()) {
            return ch;
        }
    }
}

fn random_simplex3(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    let mut e: Vec<f64> = (0..4).map(|_| -rng.random::<f64>().max(1e-300).ln()).collect();
    let s: f64 = e.iter().sum();
    e.iter_mut().for_each(|x| *x /= s);
    (e[1], e[2], e[3])
}

// ---------------------------------------------------------------- criteria

fn c1_z_channel() -> Outcome {
    let start = Instant::now();
    let c = binary_capacity(0.0, 0.5).map_err(err)?;
    let lib_time = start.elapsed();
    let expected = (5.0f64 / 4.0).log2();
    ensure((c.capacity_bits - expected).abs() < 1e-6 && (c.capacity_bits - 0.321928).abs() < 1e-6, || {
        format!("capacity {}", c.capacity_bits)
    })?;
    ensure((c.p0 - 0.6).abs() < 1e-6, || format!("p0 {}", c.p0))?;
    ensure(lib_time < Duration::from_millis(1), || format!("library call took {lib_time:?}"))?;

    let out = Command::new(env!("CARGO_BIN_EXE_capdetect"))
        .args(["binary", "0", "0.5"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || "binary subcommand failed".into())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let (cap, p0) = (v["capacity_bits"].as_f64().unwrap_or(f64::NAN), v["p0"].as_f64().unwrap_or(f64::NAN));
    ensure((cap - 0.321928).abs() < 1e-6 && (p0 - 0.6).abs() < 1e-6, || format!("CLI gave {cap}, {p0}"))?;
    Ok(format!("C = {cap:.9}, p0 = {p0:.9}; library call {lib_time:?}"))
}

fn c2_ba_vs_closed_forms() -> Outcome {
    let options = BaOptions::default();
    let mut worst = 0.0f64;
    for i in 0..50 {
        for j in 0..50 {
            let (e0, e1) = (i as f64 / 49.0, j as f64 / 49.0);
            let closed = binary_capacity(e0, e1).map_err(err)?.capacity_bits;
            let ba = blahut_arimoto(&TransitionMatrix::binary(e0, e1).map_err(err)?, &options).map_err(err)?;
            worst = worst.max((ba.capacity_bits - closed).abs());
        }
    }
    ensure(worst < 1e-6, || format!("binary grid deviation {worst:e}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst_random = 0.0f64;
    for k in 0..100 {
        let d = if k % 2 == 0 { 3 } else { 4 };
        let mut rows = vec![vec![0.0; d]; d];
        for n in 0..d {
            let col: Vec<f64> = (0..d).map(|_| rng.random::<f64>().powi(2)).collect();
            let s: f64 = col.iter().sum();
            for m in 0..d {
                rows[m][n] = col[m] / s;
            }
        }
        let ba = blahut_arimoto(&TransitionMatrix::from_rows(rows.clone()).map_err(err)?, &options).map_err(err)?;
        let search = simplex_search(&rows);
        worst_random = worst_random.max((ba.capacity_bits - search).abs());
    }
    ensure(worst_random < 1e-5, || format!("simplex search deviation {worst_random:e}"))?;
    Ok(format!("max |BA − C_B| = {worst:.1e} on 50×50; max |BA − search| = {worst_random:.1e} on 100 matrices"))
}

fn c3_fig1() -> Outcome {
    let t = reproduce_figure(Figure::Fig1, &[]).map_err(err)?;
    let gamma = t.numbers("gamma").ok_or_else(missing)?;
    let c_det = t.numbers("c_det").ok_or_else(missing)?;
    let c1 = t.numbers("c1").ok_or_else(missing)?;
    ensure(gamma.len() == 101, || format!("{} rows", gamma.len()))?;
    let mut worst = 0.0f64;
    let mut min_gap = f64::INFINITY;
    for i in 0..gamma.len() {
        let g = gamma[i];
        let expected = 1.0 - binary_entropy((1.0 - (1.0 - g).sqrt()) / 2.0);
        worst = worst.max((c_det[i] - expected).abs());
        ensure(c1[i] >= c_det[i], || format!("C1 < C_DET at γ={g}"))?;
        if g > 0.0 && g < 1.0 {
            ensure(c1[i] > c_det[i], || format!("no strict gap at γ={g}"))?;
            min_gap = min_gap.min(c1[i] - c_det[i]);
        }
    }
    ensure(worst < 1e-9, || format!("closed-form deviation {worst:e}"))?;
    let n = gamma.len() - 1;
    ensure(
        (c_det[0] - 1.0).abs() < 1e-9 && (c1[0] - 1.0).abs() < 1e-9 && c_det[n].abs() < 1e-9 && c1[n].abs() < 1e-9,
        || "endpoints".into(),
    )?;
    Ok(format!("max deviation {worst:.1e}; smallest interior C1 − C_DET {min_gap:.2e}"))
}

fn c4_stretched_threshold() -> Outcome {
    let grid = Grid::new("s", -0.7, 0.7, 0.0005).map_err(err)?;
    let t = reproduce_figure(Figure::SupplStretched, &[grid]).map_err(err)?;
    let s = t.numbers("s").ok_or_else(missing)?;
    let c_det = t.numbers("c_det").ok_or_else(missing)?;
    let c1 = t.numbers("c1").ok_or_else(missing)?;
    let col = t.column("pseudoclassical").ok_or_else(missing)?;
    let flags: Vec<bool> = t.rows.iter().map(|r| r[col] == Cell::Flag(true)).collect();

    let edge = (LN_2 / 2.0f64).sqrt();
    // largest |s| flagged, and smallest |s| not flagged
    let inside = s.iter().zip(&flags).filter(|(_, &f)| f).map(|(x, _)| x.abs()).fold(0.0, f64::max);
    let outside = s.iter().zip(&flags).filter(|(_, &f)| !f).map(|(x, _)| x.abs()).fold(f64::INFINITY, f64::min);
    ensure(inside < outside, || format!("flag region not an interval: {inside} vs {outside}"))?;
    let flip = 0.5 * (inside + outside);
    ensure((flip - edge).abs() < 1e-3, || format!("flip at {flip}, expected {edge}"))?;
    for (i, &f) in flags.iter().enumerate() {
        if f {
            ensure((c_det[i] - 0.321928).abs() < 1e-6 && (c1[i] - 0.321928).abs() < 1e-6, || {
                format!("s={}: C_DET {} C1 {}", s[i], c_det[i], c1[i])
            })?;
        }
    }
    Ok(format!("flag flips at |s| = {flip:.5} (√(ln2/2) = {edge:.5})"))
}

fn c5_t_function() -> Outcome {
    let anchor = t_threshold(0.5, 0.5).map_err(err)?;
    ensure((anchor - LN_2 / 2.0).abs() < 1e-9, || format!("T(1/2,1/2) = {anchor}"))?;
    let mut worst = 0.0f64;
    for k in 0..10 {
        let r = 0.05 + 0.1 * k as f64;
        // pairs straddling each edge of the analytic-limit window
        let vals: Vec<f64> = [-1.01e-6, -0.99e-6, 0.99e-6, 1.01e-6]
            .iter()
            .map(|h| t_threshold(r + h, r))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        worst = worst.max((vals[1] - vals[0]).abs()).max((vals[3] - vals[2]).abs());
        ensure(vals.iter().all(|v| v.is_finite()), || format!("non-finite near r={r}"))?;
    }
    ensure(worst < 1e-6, || format!("seam jump {worst:e}"))?;
    Ok(format!("T(1/2,1/2) − ln2/2 = {:.1e}; largest step across seam {worst:.1e}", anchor - LN_2 / 2.0))
}

fn c6_von_mises() -> Outcome {
    let (px, py, pz) = (0.15, 0.05, 0.1);
    let at0 = von_mises_expected_capacity(px, py, pz, 0.0, DEFAULT_QUAD_POINTS).map_err(err)?;
    let at1000 = von_mises_expected_capacity(px, py, pz, 1000.0, DEFAULT_QUAD_POINTS).map_err(err)?;
    ensure((at0 - 0.3031).abs() < 5e-3, || format!("K=0 gives {at0}"))?;
    ensure((at1000 - 0.3902).abs() < 1e-3, || format!("K=1000 gives {at1000}"))?;
    let t = reproduce_figure(Figure::Fig4, &[]).map_err(err)?;
    let avg = t.numbers("c_det_avg").ok_or_else(missing)?;
    let drop = avg.windows(2).map(|w| w[0] - w[1]).fold(f64::NEG_INFINITY, f64::max);
    ensure(drop <= 0.0, || format!("sweep decreases by {drop:e}"))?;
    Ok(format!("K=0: {at0:.6}, K=1000: {at1000:.6}, monotone over {} points", avg.len()))
}

fn c7_qutrit() -> Outcome {
    let [b1, b2] = qutrit_mub_bases();
    let mut worst = 0.0f64;
    let mut worst_ws = 0.0f64;
    for i in 0..=20 {
        for j in 0..=20 {
            let (a, b) = (i as f64 / 20.0, j as f64 / 20.0);
            let v = qutrit_vshape_transitions(a, b).map_err(err)?;
            let ch = vshape_qutrit_channel(a, b).map_err(err)?;
            let p1 = conditional_probs(&ch, &b1).map_err(err)?;
            let p2 = conditional_probs(&ch, &b2).map_err(err)?;
            worst = worst.max(v.q1.max_abs_diff(&p1)).max(v.q2.max_abs_diff(&p2));
            for m in 0..3 {
                for n in 0..3 {
                    if m != n {
                        worst = worst.max((p2.get(m, n) - v.gamma_tilde).abs());
                    }
                }
            }
            let g = v.gamma_tilde;
            let shortcut = 3f64.log2() - entropy_bits(&[g, g, 1.0 - 2.0 * g]);
            let ba = blahut_arimoto(&v.q2, &BaOptions::default()).map_err(err)?;
            worst_ws = worst_ws.max((shortcut - ba.capacity_bits).abs());
        }
    }
    ensure(worst < 1e-12, || format!("analytic vs numeric {worst:e}"))?;
    ensure(worst_ws < 1e-6, || format!("shortcut vs BA {worst_ws:e}"))?;

    let t = reproduce_figure(Figure::Fig2, &[]).map_err(err)?;
    let col = t.column("argmax").ok_or_else(missing)?;
    let count = |label: &str| t.rows.iter().filter(|r| r[col] == Cell::Text(label.into())).count();
    let (n1, n2) = (count("B1"), count("B2"));
    ensure(n1 > 0 && n2 > 0, || format!("argmax regions B1={n1} B2={n2}"))?;
    Ok(format!("max dev {worst:.1e}; shortcut vs BA {worst_ws:.1e}; fig2 argmax B1 on {n1}, B2 on {n2} of {}", t.rows.len()))
}

fn c8_entangled_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for k in 0..500 {
        let d = 2 + k % 2;
        let rank = 1 + rng.random_range(0..d * d);
        let ch = random_channel(d, rank, &mut rng);
        let basis = random_basis(d, &mut rng);
        let joint = entangled_joint_distribution(&ch, &basis).map_err(err)?;
        let direct = transition_by_kraus(&ch, &basis);
        let lib = conditional_probs(&ch, &basis).map_err(err)?;
        for m in 0..d {
            for n in 0..d {
                worst = worst.max((joint[m][n] - direct[m][n] / d as f64).abs());
                worst = worst.max((lib.get(m, n) - direct[m][n]).abs());
            }
        }
    }
    ensure(worst < 1e-10, || format!("deviation {worst:e}"))?;
    Ok(format!("500 pairs, max deviation {worst:.1e}"))
}

fn c9_closed_forms() -> Outcome {
    let config = DetectionConfig::pauli();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut w_affine, mut w_deph, mut w_rot) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let ch = random_canonical(&mut rng);
        let closed = detect_pauli_qubit(&ch).map_err(err)?.c_det_bits;
        let engine = detect_capacity(&ch.to_kraus().map_err(err)?, &config).map_err(err)?.c_det_bits;
        w_affine = w_affine.max((closed - engine).abs());

        let (p, th, ph) = (rng.random::<f64>(), rng.random_range(0.0..=FRAC_PI_2), rng.random_range(0.0..=2.0 * PI));
        let closed = dephasing_detected(p, th, ph).map_err(err)?;
        let engine = detect_capacity(&dephasing_axis_channel(p, th, ph).map_err(err)?, &config).map_err(err)?.c_det_bits;
        w_deph = w_deph.max((closed - engine).abs());

        let (px, py, pz) = random_simplex3(&mut rng);
        let phi = rng.random_range(-PI..=PI);
        let closed = rotated_pauli_detected(px, py, pz, phi).map_err(err)?;
        let engine = detect_capacity(&rotated_pauli_channel(px, py, pz, phi).map_err(err)?, &config).map_err(err)?.c_det_bits;
        w_rot = w_rot.max((closed - engine).abs());
    }
    ensure(w_affine < 1e-9 && w_deph < 1e-9 && w_rot < 1e-9, || {
        format!("deviations affine {w_affine:e}, dephasing {w_deph:e}, rotated {w_rot:e}")
    })?;
    let theta = (1.0 / 3f64.sqrt()).acos();
    let mut w_worst = 0.0f64;
    for p in [0.1, 0.5, 0.9, 1.0] {
        let v = dephasing_detected(p, theta, FRAC_PI_4).map_err(err)?;
        w_worst = w_worst.max((v - (1.0 - binary_entropy(2.0 * p / 3.0))).abs());
    }
    ensure(w_worst < 1e-9, || format!("worst case deviation {w_worst:e}"))?;
    Ok(format!(
        "max deviations: canonical {w_affine:.1e}, dephasing {w_deph:.1e}, rotated {w_rot:.1e}; worst case {w_worst:.1e}"
    ))
}

fn c10_sampling() -> Outcome {
    let ch = pauli_channel(0.15, 0.05, 0.1).map_err(err)?;
    let config = DetectionConfig::pauli();
    let a = detect_from_samples(&ch, &config, 1_000_000, 2024, 1000).map_err(err)?;
    ensure((a.point_estimate_bits - 0.390159).abs() < 5e-3, || format!("estimate {}", a.point_estimate_bits))?;
    let b = detect_from_samples(&ch, &config, 1_000_000, 2024, 1000).map_err(err)?;
    let (ja, jb) = (serde_json::to_string(&a).map_err(|e| e.to_string())?, serde_json::to_string(&b).map_err(|e| e.to_string())?);
    ensure(ja == jb, || "same seed, different output".into())?;
    ensure(a.point_estimate_bits.to_bits() == b.point_estimate_bits.to_bits(), || "estimate bits differ".into())?;
    Ok(format!("estimate {:.6}, 95% CI [{:.6}, {:.6}], repeat identical", a.point_estimate_bits, a.ci_low_bits, a.ci_high_bits))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "Z-channel capacity", budget: Duration::from_secs(5), run: c1_z_channel },
        Criterion { id: 2, name: "Blahut–Arimoto vs closed form and simplex search", budget: Duration::from_secs(30), run: c2_ba_vs_closed_forms },
        Criterion { id: 3, name: "amplitude damping sweep", budget: Duration::from_secs(10), run: c3_fig1 },
        Criterion { id: 4, name: "pseudoclassicality threshold", budget: Duration::from_secs(5), run: c4_stretched_threshold },
        Criterion { id: 5, name: "T-function anchor and seam", budget: Duration::from_secs(1), run: c5_t_function },
        Criterion { id: 6, name: "von Mises average endpoints", budget: Duration::from_secs(20), run: c6_von_mises },
        Criterion { id: 7, name: "qutrit analytics", budget: Duration::from_secs(60), run: c7_qutrit },
        Criterion { id: 8, name: "entangled-protocol identity", budget: Duration::from_secs(30), run: c8_entangled_identity },
        Criterion { id: 9, name: "closed forms vs engine", budget: Duration::from_secs(60), run: c9_closed_forms },
        Criterion { id: 10, name: "sampling convergence", budget: Duration::from_secs(30), run: c10_sampling },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= c.budget {
                Ok(detail)
            } else {
                Err(format!("{detail}; over budget {:?}", c.budget))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {} ({:.2?}): {}", c.id, c.name, elapsed, detail),
            Err(detail) => {
                failures += 1;
                println!("FAIL [{:>2}] {} ({:.2?}): {}", c.id, c.name, elapsed, detail)
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
