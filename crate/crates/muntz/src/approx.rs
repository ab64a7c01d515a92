//! Best uniform trigonometric approximation.
//!
//! `E_n(f)` is the distance in `C` from `f` to trig polynomials of degree
//! at most `n-1`. The discrete Chebyshev problem is solved as a linear
//! program; the deviation `rho_n`, the rate experiment, and the
//! power-series asymptotics verifier build on it.

use num_complex::Complex64;
use serde::Serialize;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::gamma;
use std::f64::consts::PI;

use crate::core::{
    self, check_gap_condition, muntz_sum, ExponentSequence, Grid, MuntzPolynomial,
    SampledFunction, DEFAULT_SUP_REFINE,
};
use crate::fourier::{fourier_coefficients, partial_sum, TrigPolynomial};
use crate::muntz_ops::periodize;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Dense simplex. Standard form min c.x s.t. Ax = b, x >= 0, with b >= 0;
// artificial columns carry a big-M cost, so a single phase suffices.

struct LpSolution {
    x: Vec<f64>,
    /// Simplex multipliers of the equality rows at optimality.
    y: Vec<f64>,
    value: f64,
    iterations: usize,
}

fn simplex_big_m(cols: &[Vec<f64>], cost: &[f64], b: &[f64]) -> Result<LpSolution> {
    let rows = b.len();
    let n_real = cols.len();
    assert!(b.iter().all(|&v| v >= 0.0));
    assert!(cols.iter().all(|c| c.len() == rows));

    let max_c = cost.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let big_m = 1e5 * (1.0 + max_c);
    let tol = 1e-9 * (1.0 + max_c);
    let cost_of = |j: usize| if j < n_real { cost[j] } else { big_m };

    // initial basis: artificial identity columns
    let mut basis: Vec<usize> = (n_real..n_real + rows).collect();
    let mut binv = vec![vec![0.0f64; rows]; rows];
    for (i, row) in binv.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let mut xb = b.to_vec();
    let mut in_basis = vec![false; n_real];

    let bland_after = 4 * (rows + n_real);
    let cap = 60 * rows + 2000;
    let mut iterations = 0usize;
    loop {
        if iterations > cap {
            return Err(Error::Optimization(format!(
                "simplex exceeded {cap} iterations ({rows} rows, {n_real} columns)"
            )));
        }
        iterations += 1;

        let mut y = vec![0.0f64; rows];
        for (k, &bk) in basis.iter().enumerate() {
            let cb = cost_of(bk);
            if cb != 0.0 {
                for i in 0..rows {
                    y[i] += cb * binv[k][i];
                }
            }
        }

        // pricing over real columns only; artificials never re-enter
        let bland = iterations > bland_after;
        let mut enter = None;
        let mut best_r = -tol;
        for (j, col) in cols.iter().enumerate() {
            if in_basis[j] {
                continue;
            }
            let mut r = cost[j];
            for i in 0..rows {
                r -= y[i] * col[i];
            }
            if r < best_r {
                best_r = r;
                enter = Some(j);
                if bland {
                    break;
                }
            } else if bland && r < -tol {
                enter = Some(j);
                break;
            }
        }
        let Some(j) = enter else {
            break;
        };

        let mut d = vec![0.0f64; rows];
        for (k, dk) in d.iter_mut().enumerate() {
            for i in 0..rows {
                *dk += binv[k][i] * cols[j][i];
            }
        }

        // ratio test; ties prefer an artificial leaving, then the larger pivot
        let mut leave = None;
        let mut best_ratio = f64::INFINITY;
        for k in 0..rows {
            if d[k] > 1e-11 {
                let ratio = xb[k] / d[k];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        if ratio < best_ratio - 1e-12 {
                            true
                        } else if ratio > best_ratio + 1e-12 {
                            false
                        } else {
                            let l: usize = l;
                            let art_k = basis[k] >= n_real;
                            let art_l = basis[l] >= n_real;
                            art_k && !art_l || (art_k == art_l && d[k] > d[l])
                        }
                    }
                };
                if better {
                    best_ratio = ratio;
                    leave = Some(k);
                }
            }
        }
        let Some(l) = leave else {
            return Err(Error::Optimization(format!(
                "simplex unbounded at iteration {iterations}"
            )));
        };

        let piv = d[l];
        for i in 0..rows {
            binv[l][i] /= piv;
        }
        xb[l] /= piv;
        for k in 0..rows {
            if k != l && d[k] != 0.0 {
                let f = d[k];
                for i in 0..rows {
                    binv[k][i] -= f * binv[l][i];
                }
                xb[k] -= f * xb[l];
                if xb[k] < 0.0 && xb[k] > -1e-9 {
                    xb[k] = 0.0;
                }
            }
        }
        if basis[l] < n_real {
            in_basis[basis[l]] = false;
        }
        basis[l] = j;
        in_basis[j] = true;

        // drift control: re-project the basic values from b
        if iterations % 64 == 0 {
            for k in 0..rows {
                let mut v = 0.0;
                for i in 0..rows {
                    v += binv[k][i] * b[i];
                }
                xb[k] = v.max(0.0);
            }
        }
    }

    for (k, &bk) in basis.iter().enumerate() {
        if bk >= n_real && xb[k] > 1e-7 {
            return Err(Error::Optimization(format!(
                "infeasible: artificial variable {} remains at {:.3e}",
                bk - n_real,
                xb[k]
            )));
        }
    }

    let mut x = vec![0.0f64; n_real];
    let mut value = 0.0;
    for (k, &bk) in basis.iter().enumerate() {
        if bk < n_real {
            x[bk] = xb[k];
        }
        value += cost_of(bk) * xb[k];
    }
    let mut y = vec![0.0f64; rows];
    for (k, &bk) in basis.iter().enumerate() {
        let cb = cost_of(bk);
        if cb != 0.0 {
            for i in 0..rows {
                y[i] += cb * binv[k][i];
            }
        }
    }
    Ok(LpSolution {
        x,
        y,
        value,
        iterations,
    })
}

// ---------------------------------------------------------------------------
// Discrete Chebyshev problem.

/// Solution of `min_c max_j |f_j - sum_i c_i phi_{j,i}|` over a finite grid.
#[derive(Debug, Clone)]
pub struct MinimaxSolution {
    pub eps: f64,
    pub coeffs: Vec<f64>,
    pub iterations: usize,
    /// Optimal dual grid weights `u_j - v_j`; support marks active points.
    pub dual_weights: Vec<f64>,
}

/// Solves the discrete minimax problem via the dual linear program.
///
/// `phi[j]` holds the basis values at grid point `j`. The dual has one
/// equality row per basis function plus the normalization row; its simplex
/// multipliers recover the minimax coefficients exactly.
pub fn discrete_minimax(phi: &[Vec<f64>], f: &[f64]) -> Result<MinimaxSolution> {
    let m = f.len();
    if m == 0 {
        return Err(Error::Precondition("empty minimax grid".into()));
    }
    let p = phi.first().map_or(0, |r| r.len());
    if phi.len() != m || phi.iter().any(|r| r.len() != p) {
        return Err(Error::Shape(format!(
            "basis matrix {}x? does not match {} grid points",
            phi.len(),
            m
        )));
    }
    let rows = p + 1;
    // columns: u_j = (-phi_j, 1) with cost f_j, then v_j = (phi_j, 1) with -f_j
    let mut cols = Vec::with_capacity(2 * m);
    let mut cost = Vec::with_capacity(2 * m);
    for j in 0..m {
        let mut c = Vec::with_capacity(rows);
        for i in 0..p {
            c.push(-phi[j][i]);
        }
        c.push(1.0);
        cols.push(c);
        cost.push(f[j]);
    }
    for j in 0..m {
        let mut c = Vec::with_capacity(rows);
        for i in 0..p {
            c.push(phi[j][i]);
        }
        c.push(1.0);
        cols.push(c);
        cost.push(-f[j]);
    }
    let mut b = vec![0.0f64; rows];
    b[p] = 1.0;

    let sol = simplex_big_m(&cols, &cost, &b)?;
    // multipliers satisfy |phi_j . y + f_j| <= -y_p, so c = -y, eps = -value
    let eps = (-sol.value).max(0.0);
    let coeffs: Vec<f64> = sol.y[..p].iter().map(|&v| -v).collect();
    let dual_weights: Vec<f64> = (0..m).map(|j| sol.x[j] - sol.x[m + j]).collect();
    Ok(MinimaxSolution {
        eps,
        coeffs,
        iterations: sol.iterations,
        dual_weights,
    })
}

// ---------------------------------------------------------------------------
// Best trigonometric approximation.

/// Certified two-sided result of a best-approximation solve.
#[derive(Debug, Clone, Serialize)]
pub struct ApproxResult {
    pub n: usize,
    /// Achieved error of the witness: `sup |f - witness|`, an upper bound
    /// for the true distance.
    pub en: f64,
    /// Discrete minimax optimum, a lower bound for the true distance.
    pub lower: f64,
    pub upper: f64,
    pub witness: TrigPolynomial,
    pub certified_gap: f64,
    pub grid_m: usize,
    pub refinement_passes: usize,
    pub lp_iterations: usize,
    /// Alternation count among residual points at >= 90% of the sup;
    /// `2n` is expected for non-degenerate inputs. Diagnostic only.
    pub equioscillation_points: usize,
}

fn trig_basis_row(n: usize, x: f64) -> Vec<f64> {
    let mut row = Vec::with_capacity(2 * n - 1);
    row.push(1.0);
    for k in 1..n {
        let w = 2.0 * PI * k as f64 * x;
        row.push(w.cos());
        row.push(w.sin());
    }
    row
}

fn witness_from_coeffs(n: usize, c: &[f64]) -> TrigPolynomial {
    TrigPolynomial {
        a0: 2.0 * c[0],
        harmonics: (1..n).map(|k| (c[2 * k - 1], c[2 * k])).collect(),
    }
}

/// Distance from `f` to trig polynomials of degree `<= n-1` in sup norm.
///
/// Solves the discrete problem on a uniform `grid_m`-point grid, then once
/// more with the grid augmented by the local maxima of the residual. The
/// discrete optimum bounds the distance from below, the witness residual
/// from above.
pub fn best_trig_approx<F: Fn(f64) -> f64>(
    f: F,
    n: usize,
    grid_m: usize,
    tol: f64,
) -> Result<ApproxResult> {
    if n < 1 {
        return Err(Error::Precondition("best_trig_approx requires n >= 1".into()));
    }
    if grid_m < 8 * n {
        return Err(Error::Precondition(format!(
            "grid_m = {grid_m} below 8n = {}",
            8 * n
        )));
    }
    let refine = tol.clamp(1e-12, DEFAULT_SUP_REFINE);
    let mut xs: Vec<f64> = (0..grid_m).map(|j| j as f64 / grid_m as f64).collect();

    let solve = |xs: &[f64]| -> Result<MinimaxSolution> {
        let phi: Vec<Vec<f64>> = xs.iter().map(|&x| trig_basis_row(n, x)).collect();
        let fv: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        if let Some(&x) = xs.iter().find(|&&x| !f(x).is_finite()) {
            return Err(Error::NonFinite { x });
        }
        discrete_minimax(&phi, &fv)
    };

    let first = solve(&xs)?;
    let mut witness = witness_from_coeffs(n, &first.coeffs);

    // refinement: add the residual's local maxima and the global argmax
    let scan = (4 * grid_m).max(4096);
    let res = |x: f64| f(x) - witness.eval(x);
    let vals: Vec<f64> = (0..scan)
        .map(|i| res(i as f64 / scan as f64).abs())
        .collect();
    let mut extra = Vec::new();
    for i in 0..scan {
        let prev = vals[(i + scan - 1) % scan];
        let next = vals[(i + 1) % scan];
        if vals[i] >= prev && vals[i] >= next && vals[i] > 0.0 {
            extra.push(i as f64 / scan as f64);
        }
    }
    let (_, argmax) = core::sup_norm(&res, refine)?;
    extra.push(argmax.rem_euclid(1.0));
    xs.extend(extra);

    let second = solve(&xs)?;
    witness = witness_from_coeffs(n, &second.coeffs);
    let lower = second.eps;
    let res = |x: f64| f(x) - witness.eval(x);
    let (upper, _) = core::sup_norm(&res, refine)?;
    let upper = upper.max(lower);

    // equioscillation diagnostic on a fixed scan
    let mut alternations = 0usize;
    if upper > 0.0 {
        let mut last_sign = 0i32;
        for i in 0..4096 {
            let r = res(i as f64 / 4096.0);
            if r.abs() >= 0.9 * upper {
                let s = if r > 0.0 { 1 } else { -1 };
                if s != last_sign {
                    alternations += 1;
                    last_sign = s;
                }
            }
        }
    }

    Ok(ApproxResult {
        n,
        en: upper,
        lower,
        upper,
        witness,
        certified_gap: (upper - lower).max(0.0),
        grid_m,
        refinement_passes: 1,
        lp_iterations: first.iterations + second.iterations,
        equioscillation_points: alternations,
    })
}

/// Deviation `rho_n(f, x) = f(x) - S_{n-1}(f, x)` sampled on `points` grid
/// nodes; coefficients come from quadrature at tolerance `tol`.
pub fn rho_n<F: Fn(f64) -> f64>(
    f: F,
    n: usize,
    points: usize,
    tol: f64,
) -> Result<SampledFunction> {
    if n < 1 {
        return Err(Error::Precondition("rho_n requires n >= 1".into()));
    }
    let coeffs = fourier_coefficients(&f, n.max(1), tol)?;
    let s = partial_sum(&coeffs, n - 1)?;
    Ok(SampledFunction::sample(
        Grid::uniform(points),
        |x| f(x) - s.eval(x),
        true,
    ))
}

// ---------------------------------------------------------------------------
// Rate experiment.

#[derive(Debug, Clone, Serialize)]
pub struct RateConfig {
    pub seed: u64,
    /// Coefficient decay ratio in `a_n = rho^n / lambda_n`.
    pub rho: f64,
    /// Grid size per solve is `grid_factor * n`.
    pub grid_factor: usize,
    pub tol: f64,
}

impl Default for RateConfig {
    fn default() -> Self {
        RateConfig {
            seed: 0x5EED,
            rho: 0.9,
            grid_factor: 32,
            tol: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RateRow {
    pub n: usize,
    pub en: f64,
    pub lower: f64,
    pub upper: f64,
    /// `E_n * n^gamma / ln n`.
    pub statistic: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RateTable {
    pub gamma: f64,
    pub seed: u64,
    pub rows: Vec<RateRow>,
    /// Running maximum of the statistic: the empirical constant.
    pub empirical_omega: f64,
}

/// Approximation-rate experiment on a seeded unit-ball element.
///
/// Builds `p = sum rho^i / lambda_i * (+-1) t^{lambda_i}` with seeded signs,
/// periodizes, normalizes to sup norm at most 1, and reports
/// `E_n * n^gamma / ln n` per requested `n`.
pub fn rate_experiment(
    seq: &ExponentSequence,
    gamma: f64,
    n_list: &[usize],
    cfg: &RateConfig,
) -> Result<RateTable> {
    let (gap_ok, _) = check_gap_condition(seq)?;
    if !gap_ok {
        return Err(Error::Precondition("gap condition fails".into()));
    }
    let (alpha1, _) = muntz_sum(seq);
    if !alpha1.is_finite() {
        return Err(Error::Precondition("Muntz sum diverges".into()));
    }
    if !(0.0 < gamma && gamma < 1.0) {
        return Err(Error::Domain(format!("gamma = {gamma} outside (0,1)")));
    }
    if n_list.iter().any(|&n| n < 2) {
        return Err(Error::Precondition("n_list entries must be >= 2".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut terms = Vec::with_capacity(seq.len());
    for (i, &lambda) in seq.exponents().iter().enumerate() {
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        terms.push((lambda, sign * cfg.rho.powi(i as i32 + 1) / lambda));
    }
    let p = MuntzPolynomial::new(terms)?;
    let v0 = periodize(&p);
    let (norm, _) = core::sup_norm(|t| v0.eval(t), DEFAULT_SUP_REFINE)?;
    let scale = if norm > 1.0 { 1.0 / norm } else { 1.0 };

    let mut n_sorted: Vec<usize> = n_list.to_vec();
    n_sorted.sort_unstable();
    n_sorted.dedup();

    let mut rows = Vec::with_capacity(n_sorted.len());
    let mut omega = 0.0f64;
    for &n in &n_sorted {
        let r = best_trig_approx(
            |x| scale * v0.eval(x),
            n,
            cfg.grid_factor.max(8) * n,
            cfg.tol,
        )?;
        let statistic = r.en * (n as f64).powf(gamma) / (n as f64).ln();
        omega = omega.max(statistic);
        rows.push(RateRow {
            n,
            en: r.en,
            lower: r.lower,
            upper: r.upper,
            statistic,
        });
    }
    Ok(RateTable {
        gamma,
        seed: cfg.seed,
        rows,
        empirical_omega: omega,
    })
}

// ---------------------------------------------------------------------------
// Asymptotics of sum n^-alpha e^{2 pi i n x}.

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticRow {
    pub x: f64,
    /// Certified value of `sum_{n>=1} n^-alpha sin(2 pi n x)`.
    pub sin_sum: f64,
    pub cos_sum: f64,
    /// Leading term `(2 pi x)^{alpha-1} Gamma(1-alpha) cos(pi alpha / 2)`.
    pub sin_asymptote: f64,
    /// Cosine analog, with `sin(pi alpha / 2)`.
    pub cos_asymptote: f64,
    pub sin_fit: f64,
    pub cos_fit: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticReport {
    pub alpha: f64,
    pub k: usize,
    pub rows: Vec<AsymptoticRow>,
    /// Fitted `x^alpha` coefficient of the sine-series correction.
    pub mu: f64,
    pub nu: f64,
    pub sin_constant: f64,
    pub cos_constant: f64,
    /// `max |sum - fit| / max |sum|` over the row list, per series.
    pub sin_rel_residual: f64,
    pub cos_rel_residual: f64,
    /// Worst certified tail bound across the row list.
    pub tail_bound: f64,
}

/// Tail `sum_{n>=a} n^-alpha z^n` by iterated summation by parts.
///
/// `n^-alpha` is completely monotone, so the iterated forward differences
/// are positive and telescoping bounds the dropped remainder by
/// `|z/(1-z)|^J * Delta^{J-1} a^-alpha`.
fn power_tail(a: usize, alpha: f64, theta: f64) -> (Complex64, f64) {
    const J: usize = 3;
    let z = Complex64::from_polar(1.0, theta);
    let one_minus_z = Complex64::new(1.0, 0.0) - z;
    let w = z / one_minus_z;
    let mut phi: Vec<f64> = (0..=J).map(|i| ((a + i) as f64).powf(-alpha)).collect();
    let mut tail = Complex64::new(0.0, 0.0);
    let za = Complex64::from_polar(1.0, theta * a as f64);
    let mut factor = Complex64::new(1.0, 0.0);
    let mut last_head = phi[0];
    for _ in 0..J {
        tail += factor * za * phi[0] / one_minus_z;
        last_head = phi[0];
        for i in 0..phi.len() - 1 {
            phi[i] -= phi[i + 1];
        }
        phi.pop();
        factor *= -w;
    }
    let bound = w.norm().powi(J as i32) * last_head.abs() + 1e-13;
    (tail, bound)
}

/// Verifies the asymptotic expansion of `sum n^-alpha sin/cos(2 pi n x)`.
///
/// Partial sums to `K` get the certified tail from `power_tail`; the
/// leading asymptote is subtracted and the correction is fitted as
/// `const + mu x^alpha` by least squares. The constant absorbs the zeta
/// term of the cosine series, which a pure power cannot represent.
pub fn asymptotic_check(alpha: f64, x_list: &[f64], k: usize) -> Result<AsymptoticReport> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::Domain(format!("alpha = {alpha} outside (0,1)")));
    }
    if x_list.is_empty() || x_list.iter().any(|&x| !(0.0 < x && x < 0.25)) {
        return Err(Error::Precondition(
            "x_list must be nonempty inside (0, 1/4)".into(),
        ));
    }
    if k < 100 {
        return Err(Error::Precondition("K must be at least 100".into()));
    }

    let npow: Vec<f64> = (1..=k).map(|n| (n as f64).powf(-alpha)).collect();
    let lead_c = gamma(1.0 - alpha);
    let (sin_phase, cos_phase) = ((PI * alpha / 2.0).cos(), (PI * alpha / 2.0).sin());

    let mut sums = Vec::with_capacity(x_list.len());
    let mut worst_tail = 0.0f64;
    for &x in x_list {
        let theta = 2.0 * PI * x;
        let z = Complex64::from_polar(1.0, theta);
        let mut zn = Complex64::new(1.0, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for (n, &p) in npow.iter().enumerate() {
            zn *= z;
            acc += zn * p;
            // rotation resync kills accumulated drift
            if (n + 1) % 8192 == 0 {
                zn = Complex64::from_polar(1.0, theta * (n + 1) as f64);
            }
        }
        let (tail, bound) = power_tail(k + 1, alpha, theta);
        worst_tail = worst_tail.max(bound);
        sums.push(acc + tail);
    }
    if worst_tail >= 1e-6 {
        return Err(Error::Accuracy {
            tol: 1e-6,
            best: worst_tail,
            err: worst_tail,
        });
    }

    let lead = |x: f64, phase: f64| (2.0 * PI * x).powf(alpha - 1.0) * lead_c * phase;
    // least squares of sum - lead against [1, x^alpha]
    let fit = |targets: &[f64]| -> (f64, f64) {
        let m = x_list.len();
        let a = nalgebra::DMatrix::from_fn(m, 2, |i, j| {
            if j == 0 {
                1.0
            } else {
                x_list[i].powf(alpha)
            }
        });
        let rhs = nalgebra::DVector::from_column_slice(targets);
        let sol = a.svd(true, true).solve(&rhs, 1e-12).expect("svd solve");
        (sol[0], sol[1])
    };
    let sin_d: Vec<f64> = x_list
        .iter()
        .zip(&sums)
        .map(|(&x, s)| s.im - lead(x, sin_phase))
        .collect();
    let cos_d: Vec<f64> = x_list
        .iter()
        .zip(&sums)
        .map(|(&x, s)| s.re - lead(x, cos_phase))
        .collect();
    let (sin_constant, mu) = fit(&sin_d);
    let (cos_constant, nu) = fit(&cos_d);

    let mut rows = Vec::with_capacity(x_list.len());
    let (mut sin_res, mut cos_res, mut sin_max, mut cos_max) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (i, &x) in x_list.iter().enumerate() {
        let xa = x.powf(alpha);
        let sin_fit = lead(x, sin_phase) + sin_constant + mu * xa;
        let cos_fit = lead(x, cos_phase) + cos_constant + nu * xa;
        let (ss, cs) = (sums[i].im, sums[i].re);
        sin_res = sin_res.max((ss - sin_fit).abs());
        cos_res = cos_res.max((cs - cos_fit).abs());
        sin_max = sin_max.max(ss.abs());
        cos_max = cos_max.max(cs.abs());
        rows.push(AsymptoticRow {
            x,
            sin_sum: ss,
            cos_sum: cs,
            sin_asymptote: lead(x, sin_phase),
            cos_asymptote: lead(x, cos_phase),
            sin_fit,
            cos_fit,
        });
    }
    Ok(AsymptoticReport {
        alpha,
        k,
        rows,
        mu,
        nu,
        sin_constant,
        cos_constant,
        sin_rel_residual: sin_res / sin_max.max(f64::MIN_POSITIVE),
        cos_rel_residual: cos_res / cos_max.max(f64::MIN_POSITIVE),
        tail_bound: worst_tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::ExponentSequence;

    #[test]
    fn simplex_solves_a_small_lp() {
        // min -x - y  s.t.  x + y + s = 1
        let cols = vec![vec![1.0], vec![1.0], vec![1.0]];
        let cost = vec![-1.0, -1.0, 0.0];
        let sol = simplex_big_m(&cols, &cost, &[1.0]).unwrap();
        assert!((sol.value + 1.0).abs() < 1e-12);
        assert!((sol.x[0] + sol.x[1] - 1.0).abs() < 1e-12);
        assert!((sol.y[0] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn simplex_two_rows() {
        // min x1 + 2 x2  s.t.  x1 + x2 - s1 = 1, x2 = 0.25
        let cols = vec![
            vec![1.0, 0.0],
            vec![1.0, 1.0],
            vec![-1.0, 0.0],
        ];
        let cost = vec![1.0, 2.0, 0.0];
        let sol = simplex_big_m(&cols, &cost, &[1.0, 0.25]).unwrap();
        assert!((sol.value - 1.25).abs() < 1e-10, "{}", sol.value);
        assert!((sol.x[0] - 0.75).abs() < 1e-10);
        assert!((sol.x[1] - 0.25).abs() < 1e-10);
    }

    #[test]
    fn minimax_constant_fit() {
        // best constant for samples {0, 1} is 1/2 with error 1/2
        let phi = vec![vec![1.0], vec![1.0]];
        let sol = discrete_minimax(&phi, &[0.0, 1.0]).unwrap();
        assert!((sol.eps - 0.5).abs() < 1e-10);
        assert!((sol.coeffs[0] - 0.5).abs() < 1e-10);
    }

    #[test]
    fn minimax_empty_basis_is_max_abs() {
        let phi = vec![vec![], vec![], vec![]];
        let sol = discrete_minimax(&phi, &[0.5, -2.0, 1.0]).unwrap();
        assert!((sol.eps - 2.0).abs() < 1e-10);
    }

    #[test]
    fn best_approx_member_of_span_is_exact() {
        let f = |x: f64| (2.0 * PI * x).cos();
        let r = best_trig_approx(f, 2, 64, 1e-9).unwrap();
        assert!(r.en < 1e-8, "{}", r.en);
        assert!((r.witness.harmonic(1).0 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn best_approx_constant_input() {
        let r = best_trig_approx(|_| 3.7, 1, 16, 1e-9).unwrap();
        assert!(r.en < 1e-9);
        assert!((r.witness.a0 / 2.0 - 3.7).abs() < 1e-9);
    }

    #[test]
    fn best_approx_cos_n_at_degree_below() {
        // E_n(cos(2 pi n x)) at degree n-1 is 1 with a near-zero witness
        for n in [2usize, 4] {
            let f = move |x: f64| (2.0 * PI * n as f64 * x).cos();
            let r = best_trig_approx(f, n, 64 * n, 1e-9).unwrap();
            assert!((r.en - 1.0).abs() < 1e-3, "n={n} en={}", r.en);
            assert!(r.certified_gap < 1e-3, "gap {}", r.certified_gap);
            assert!(r.witness.sup_norm(1e-9) < 1e-2);
            assert!(r.equioscillation_points >= 2 * n);
        }
    }

    #[test]
    fn best_approx_grid_precondition() {
        assert!(best_trig_approx(|x| x, 4, 16, 1e-9).is_err());
    }

    #[test]
    fn en_monotone_for_periodized_polynomial() {
        let p = MuntzPolynomial::new(vec![(2.0, 1.0), (4.0, -1.0)]).unwrap();
        let v = periodize(&p);
        let mut prev = f64::INFINITY;
        for n in [2usize, 4, 8] {
            let r = best_trig_approx(|x| v.eval(x), n, 32 * n, 1e-9).unwrap();
            assert!(r.en <= prev + r.certified_gap + 1e-9);
            assert!(r.en < prev, "E_n not strictly decreasing at n={n}");
            prev = r.en;
        }
    }

    #[test]
    fn en_scale_equivariance() {
        let f = |x: f64| (2.0 * PI * x).sin().powi(3);
        let r1 = best_trig_approx(f, 2, 64, 1e-9).unwrap();
        let r3 = best_trig_approx(|x| 3.0 * f(x), 2, 64, 1e-9).unwrap();
        assert!((r3.en - 3.0 * r1.en).abs() < 1e-6);
    }

    #[test]
    fn rho_n_reproduces_partial_sum_complement() {
        let f = |x: f64| (2.0 * PI * x).cos() + (6.0 * PI * x).sin();
        let s = rho_n(f, 3, 256, 1e-10).unwrap();
        for (&x, &v) in s.grid.points().iter().zip(&s.values) {
            assert!((v - (6.0 * PI * x).sin()).abs() < 1e-7);
        }
        let s1 = rho_n(|x: f64| (2.0 * PI * x).cos(), 1, 64, 1e-10).unwrap();
        for (&x, &v) in s1.grid.points().iter().zip(&s1.values) {
            assert!((v - (2.0 * PI * x).cos()).abs() < 1e-7);
        }
        let s2 = rho_n(|x: f64| (2.0 * PI * x).cos(), 2, 64, 1e-10).unwrap();
        assert!(s2.values.iter().all(|v| v.abs() < 1e-7));
    }

    #[test]
    fn rate_experiment_runs_and_caps_statistic() {
        let seq = ExponentSequence::power(2.0, 10).unwrap();
        let t = rate_experiment(&seq, 0.5, &[2, 4, 8], &RateConfig::default()).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert!(t.empirical_omega.is_finite());
        for r in &t.rows {
            assert!(r.en >= 0.0 && r.statistic >= 0.0);
            assert!(
                (r.statistic - r.en * (r.n as f64).sqrt() / (r.n as f64).ln()).abs() < 1e-12
            );
        }
        let max = t.rows.iter().fold(0.0f64, |m, r| m.max(r.statistic));
        assert!((t.empirical_omega - max).abs() < 1e-15);
    }

    #[test]
    fn rate_experiment_rejects_bad_gamma_and_small_n() {
        let seq = ExponentSequence::power(2.0, 5).unwrap();
        assert!(rate_experiment(&seq, 1.5, &[4], &RateConfig::default()).is_err());
        assert!(rate_experiment(&seq, 0.5, &[1], &RateConfig::default()).is_err());
    }

    #[test]
    fn rate_experiment_trig_input_statistic_zero() {
        // degree-1 trig data: E_n = 0 for n >= 2 via a direct solve
        let f = |x: f64| 0.3 * (2.0 * PI * x).cos();
        for n in [2usize, 4] {
            let r = best_trig_approx(f, n, 32 * n, 1e-9).unwrap();
            assert!(r.en < 1e-8);
        }
    }

    #[test]
    fn asymptotic_leading_term_alpha_half() {
        let xs = [0.005, 0.01, 0.02, 0.04, 0.06, 0.08, 0.1];
        let rep = asymptotic_check(0.5, &xs, 200_000).unwrap();
        assert!(rep.tail_bound < 1e-6);
        assert!(rep.sin_rel_residual < 1e-2, "{}", rep.sin_rel_residual);
        assert!(rep.cos_rel_residual < 1e-2, "{}", rep.cos_rel_residual);
        // leading constants match Gamma(1/2) cos(pi/4) on both series
        let r0 = &rep.rows[1];
        let expect = (2.0 * PI * 0.01f64).powf(-0.5) * PI.sqrt() * (0.5f64).sqrt();
        assert!((r0.sin_asymptote - expect).abs() < 1e-12);
        assert!((r0.cos_asymptote - expect).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_leading_ratio() {
        let rep = asymptotic_check(0.5, &[0.01, 0.2], 200_000).unwrap();
        let expect = (0.01f64 / 0.2).powf(-0.5);
        let lead_ratio = rep.rows[0].sin_asymptote / rep.rows[1].sin_asymptote;
        assert!((lead_ratio / expect - 1.0).abs() < 1e-12);
        // raw sums track the leading ratio loosely; the correction term at
        // x = 0.2 is no longer negligible
        let ratio = rep.rows[0].sin_sum / rep.rows[1].sin_sum;
        assert!((ratio / expect - 1.0).abs() < 0.35, "{ratio} vs {expect}");
    }

    #[test]
    fn asymptotic_tail_certificate_gates_small_k() {
        assert!(matches!(
            asymptotic_check(0.5, &[0.005], 1_000),
            Err(Error::Accuracy { .. })
        ));
        assert!(asymptotic_check(0.5, &[0.005], 200_000).is_ok());
    }

    #[test]
    fn asymptotic_rejects_bad_domain() {
        assert!(asymptotic_check(1.2, &[0.01], 1_000).is_err());
        assert!(asymptotic_check(0.5, &[0.3], 1_000).is_err());
        assert!(asymptotic_check(0.5, &[], 1_000).is_err());
    }
}
