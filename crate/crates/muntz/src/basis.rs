//! Constructive basis pipeline for difference monomial systems.
//!
//! Periodized Müntz functions feed a summation method to produce
//! trigonometric candidates; normalization plus Gaussian exclusion turns
//! them into a step (upper trapezoidal) system whose finite sections are
//! probed for inclination and projection norms.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::approx::discrete_minimax;
use crate::core::{self, ExponentSequence, MuntzPolynomial};
use crate::fourier::{fourier_coefficients, summation_apply, SummationMatrix, TrigPolynomial};
use crate::muntz_ops::PeriodizedMuntz;
use crate::{Error, Result};

/// Row-reduced trigonometric system in step form.
///
/// Coefficient columns are ordered `a0, a_1, b_1, a_2, b_2, ...`; the
/// leading-entry column index is strictly increasing in the row index and
/// every row has unit sup norm.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepSystem {
    pub rows: Vec<TrigPolynomial>,
    /// Lowest active frequency `m(l)` per row; 0 marks a constant lead.
    pub lead: Vec<usize>,
    /// Degree `n(l)` per row.
    pub high: Vec<usize>,
}

impl StepSystem {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(Error::from)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let sys: StepSystem = serde_json::from_str(s)?;
        if sys.lead.len() != sys.rows.len() || sys.high.len() != sys.rows.len() {
            return Err(Error::Shape(format!(
                "lead/high lengths {}/{} do not match {} rows",
                sys.lead.len(),
                sys.high.len(),
                sys.rows.len()
            )));
        }
        Ok(sys)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

// column layout: 0 -> a0, 2k-1 -> a_k, 2k -> b_k
fn coeff_vector(t: &TrigPolynomial, ncols: usize) -> Vec<f64> {
    let mut v = vec![0.0; ncols];
    v[0] = t.a0;
    for (k, &(a, b)) in t.harmonics.iter().enumerate() {
        v[2 * k + 1] = a;
        v[2 * k + 2] = b;
    }
    v
}

fn trig_from_coeffs(v: &[f64]) -> TrigPolynomial {
    let deg = v.len() / 2;
    let mut harmonics: Vec<(f64, f64)> = (1..=deg).map(|k| (v[2 * k - 1], v[2 * k])).collect();
    while let Some(&(a, b)) = harmonics.last() {
        if a == 0.0 && b == 0.0 {
            harmonics.pop();
        } else {
            break;
        }
    }
    TrigPolynomial {
        a0: v[0],
        harmonics,
    }
}

/// Difference monomial system `u_1 = t^{l_1}`, `u_{k+1} = t^{l_{k+1}} - t^{l_k}`.
///
/// Partial sums telescope to `t^{l_n}` exactly in coefficient space.
pub fn difference_system(seq: &ExponentSequence, n: usize) -> Result<Vec<MuntzPolynomial>> {
    if n == 0 || n > seq.len() {
        return Err(Error::Precondition(format!(
            "difference system size {n} outside 1..={}",
            seq.len()
        )));
    }
    let lambda = seq.exponents();
    let mut out = Vec::with_capacity(n);
    out.push(MuntzPolynomial::monomial(lambda[0], 1.0)?);
    for k in 1..n {
        out.push(MuntzPolynomial::new(vec![
            (lambda[k], 1.0),
            (lambda[k - 1], -1.0),
        ])?);
    }
    Ok(out)
}

/// Candidate family with the in-order record of dropped dependent pairs.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub kept: Vec<TrigPolynomial>,
    /// Indices into the requested `(f, m)` pair enumeration.
    pub dropped: Vec<usize>,
}

/// Summation polynomials `U_m(f, x, Q)` over the `(f, m)` grid.
///
/// Candidates linearly dependent on their predecessors (rank tolerance in
/// coefficient space) are dropped in order.
pub fn build_candidates(
    fs: &[PeriodizedMuntz],
    q: &SummationMatrix,
    degrees: &[usize],
    tol: f64,
) -> Result<CandidateSet> {
    if fs.is_empty() || degrees.is_empty() {
        return Err(Error::Precondition("empty candidate request".into()));
    }
    if degrees.iter().any(|&m| m == 0) {
        return Err(Error::Precondition("degrees must be >= 1".into()));
    }
    let k_max = *degrees.iter().max().unwrap();
    let ncols = 2 * k_max + 1;

    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    // Gram-Schmidt frame over coefficient vectors detects dependence
    let mut frame: Vec<Vec<f64>> = Vec::new();
    let mut pair_index = 0usize;
    for f in fs {
        let coeffs = fourier_coefficients(|x| f.eval(x), k_max, tol)?;
        for &m in degrees {
            let cand = summation_apply(&coeffs, q, m)?;
            let mut v = coeff_vector(&cand, ncols);
            let norm0 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            for e in &frame {
                let dot: f64 = v.iter().zip(e).map(|(a, b)| a * b).sum();
                for (vi, ei) in v.iter_mut().zip(e) {
                    *vi -= dot * ei;
                }
            }
            let rem = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if rem <= 1e-9 * (1.0 + norm0) {
                dropped.push(pair_index);
            } else {
                for vi in v.iter_mut() {
                    *vi /= rem;
                }
                frame.push(v);
                kept.push(cand);
            }
            pair_index += 1;
        }
    }
    Ok(CandidateSet { kept, dropped })
}

/// Result of the exclusion pass: the step system plus rejected candidates.
#[derive(Debug, Clone)]
pub struct ExclusionOutcome {
    pub system: StepSystem,
    /// Input indices eliminated to (numerical) zero.
    pub rejected: Vec<usize>,
}

/// Gaussian exclusion to step form.
///
/// Columns are processed in ascending order; the pivot is the largest
/// remaining entry (ties to the lowest row index), eliminated from every
/// other remaining row. Surviving rows are sup-norm normalized and sorted
/// by leading column by construction.
pub fn gaussian_exclusion(
    candidates: &[TrigPolynomial],
    pivot_tol: f64,
) -> Result<ExclusionOutcome> {
    if candidates.is_empty() {
        return Err(Error::Precondition("no candidates".into()));
    }
    let k_max = candidates.iter().map(|c| c.degree()).max().unwrap();
    let ncols = 2 * k_max + 1;
    let mut work: Vec<Vec<f64>> = candidates
        .iter()
        .map(|c| coeff_vector(c, ncols))
        .collect();
    for (i, row) in work.iter().enumerate() {
        if row.iter().all(|&v| v.abs() < pivot_tol) {
            return Err(Error::Precondition(format!("candidate {i} is zero")));
        }
    }

    let mut remaining: Vec<usize> = (0..work.len()).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..ncols {
        let mut best: Option<usize> = None;
        for (pos, &r) in remaining.iter().enumerate() {
            let v = work[r][col].abs();
            if v >= pivot_tol && best.map_or(true, |b| v > work[remaining[b]][col].abs()) {
                best = Some(pos);
            }
        }
        match best {
            None => {
                for &r in &remaining {
                    work[r][col] = 0.0;
                }
            }
            Some(pos) => {
                let r = remaining.remove(pos);
                let piv = work[r][col];
                for &s in &remaining {
                    let factor = work[s][col] / piv;
                    if factor != 0.0 {
                        for c in col..ncols {
                            work[s][c] -= factor * work[r][c];
                        }
                    }
                    work[s][col] = 0.0;
                }
                pivots.push((col, r));
            }
        }
    }
    let rejected = remaining;

    let mut rows = Vec::with_capacity(pivots.len());
    let mut lead = Vec::with_capacity(pivots.len());
    let mut high = Vec::with_capacity(pivots.len());
    for &(col, r) in &pivots {
        let mut t = trig_from_coeffs(&work[r]);
        let norm = t.sup_norm(1e-12);
        if norm <= 0.0 {
            return Err(Error::Rank(format!("pivot row at column {col} vanished")));
        }
        t = t.scale(1.0 / norm);
        lead.push(if col == 0 { 0 } else { (col + 1) / 2 });
        high.push(t.degree());
        rows.push(t);
    }
    Ok(ExclusionOutcome {
        system: StepSystem { rows, lead, high },
        rejected,
    })
}

/// Two-sided report for the inclination search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InclinationResult {
    /// Minimum certified distance found; an upper bound for the true inf.
    pub value: f64,
    /// Discrete minimax lower bound at the reported witness direction.
    pub lower: f64,
    pub directions_tried: usize,
}

const INCLINATION_SEED: u64 = 0xBA51_5EED;

/// Inclination of `span(A)` to `span(B)` in sup norm.
///
/// Infimum over the unit sphere of `span(A)` of the distance to `span(B)`,
/// searched from 64 seeded directions plus coordinate directions with a
/// pattern-search refinement. The search phase scores directions on a fixed
/// scan; the winner gets a certified sup-norm evaluation.
pub fn inclination(
    a: &[TrigPolynomial],
    b: &[TrigPolynomial],
    grid_m: usize,
    solver_tol: f64,
) -> Result<InclinationResult> {
    if a.is_empty() {
        return Err(Error::Precondition("empty A span".into()));
    }
    if grid_m < 16 {
        return Err(Error::Precondition("grid_m must be at least 16".into()));
    }
    let k_max = a
        .iter()
        .chain(b.iter())
        .map(|t| t.degree())
        .max()
        .unwrap_or(0);
    let ncols = 2 * k_max + 1;
    let mat = DMatrix::from_fn(a.len(), ncols, |i, j| coeff_vector(&a[i], ncols)[j]);
    if mat.svd(false, false).rank(1e-9) < a.len() {
        return Err(Error::Rank("A rows are linearly dependent".into()));
    }

    let xs: Vec<f64> = (0..grid_m).map(|j| j as f64 / grid_m as f64).collect();
    let phi_b: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| b.iter().map(|t| t.eval(x)).collect())
        .collect();
    let scan = 4 * grid_m;

    let combo = |theta: &[f64]| -> TrigPolynomial {
        let mut g = TrigPolynomial::zero();
        for (t, &c) in a.iter().zip(theta) {
            g = g.add(&t.scale(c));
        }
        g
    };
    // fast score: sup-normalize on the scan, distance residual on the scan
    let mut evals = 0usize;
    let mut score = |theta: &[f64]| -> Result<(f64, f64, TrigPolynomial, Vec<f64>)> {
        evals += 1;
        let g0 = combo(theta);
        let norm = (0..scan)
            .map(|i| g0.eval(i as f64 / scan as f64).abs())
            .fold(0.0f64, f64::max);
        if norm <= 1e-14 {
            return Err(Error::Rank("degenerate direction".into()));
        }
        let g = g0.scale(1.0 / norm);
        let fv: Vec<f64> = xs.iter().map(|&x| g.eval(x)).collect();
        let sol = discrete_minimax(&phi_b, &fv)?;
        let approx = {
            let mut p = TrigPolynomial::zero();
            for (t, &c) in b.iter().zip(&sol.coeffs) {
                p = p.add(&t.scale(c));
            }
            p
        };
        let res = g.sub(&approx);
        let upper = (0..scan)
            .map(|i| res.eval(i as f64 / scan as f64).abs())
            .fold(0.0f64, f64::max);
        Ok((upper, sol.eps, g, sol.coeffs))
    };

    let dim = a.len();
    let mut rng = ChaCha8Rng::seed_from_u64(INCLINATION_SEED);
    let mut starts: Vec<Vec<f64>> = Vec::new();
    for i in 0..dim {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        starts.push(e);
    }
    for _ in 0..64 {
        let v: Vec<f64> = (0..dim)
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            starts.push(v.into_iter().map(|x| x / n).collect());
        }
    }

    let mut ranked: Vec<(f64, Vec<f64>)> = Vec::new();
    for s in &starts {
        if let Ok((u, _, _, _)) = score(s) {
            ranked.push((u, s.clone()));
        }
    }
    if ranked.is_empty() {
        return Err(Error::Rank("no nondegenerate direction".into()));
    }
    ranked.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    // pattern search on the best starts
    let mut best_theta = ranked[0].1.clone();
    let mut best_u = ranked[0].0;
    for (u0, theta0) in ranked.into_iter().take(8) {
        let mut theta = theta0;
        let mut u = u0;
        let mut step = 0.3f64;
        while step > 0.01 {
            let mut improved = false;
            for i in 0..dim {
                for sgn in [1.0, -1.0] {
                    let mut t = theta.clone();
                    t[i] += sgn * step;
                    let n = t.iter().map(|x| x * x).sum::<f64>().sqrt();
                    if n < 1e-12 {
                        continue;
                    }
                    for x in t.iter_mut() {
                        *x /= n;
                    }
                    if let Ok((v, _, _, _)) = score(&t) {
                        if v < u - 1e-12 {
                            u = v;
                            theta = t;
                            improved = true;
                        }
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        if u < best_u {
            best_u = u;
            best_theta = theta;
        }
    }

    // certify the winner with the continuous sup norm
    let (_, lower, g, coeffs) = score(&best_theta)?;
    let (true_norm, _) = core::sup_norm(|x| g.eval(x), solver_tol.clamp(1e-12, 1e-9))?;
    let g = g.scale(1.0 / true_norm);
    let approx = {
        let mut p = TrigPolynomial::zero();
        for (t, &c) in b.iter().zip(&coeffs) {
            p = p.add(&t.scale(c / true_norm));
        }
        p
    };
    let res = g.sub(&approx);
    let (upper, _) = core::sup_norm(|x| res.eval(x), solver_tol.clamp(1e-12, 1e-9))?;
    Ok(InclinationResult {
        value: upper.min(1.0),
        lower: lower / true_norm,
        directions_tried: evals,
    })
}

/// Report of the finite-section diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisReport {
    pub lead: Vec<usize>,
    /// Leading basis-element index per row in the `1, cos, sin, ...` ladder.
    pub lead_columns: Vec<usize>,
    pub m_strictly_increasing: bool,
    /// `(frequency cutoff, worst best-approximation error over probes)`.
    pub s_curve: Vec<(usize, f64)>,
    pub s_nonincreasing: bool,
    pub inclinations: Vec<InclinationResult>,
    pub inclination_floor: f64,
    /// Sup-norm ratio of the first-`j` partial combination, per `j`.
    pub projection_norms: Vec<f64>,
    pub probes: usize,
    pub seed: u64,
    pub grid_m: usize,
}

/// Probes a step system's first `l` rows.
///
/// Seeded random unit combinations give the empirical `s(n)` curve (worst
/// error of best approximation by trig polynomials of degree at most `n`),
/// the inclination floor over all front/tail splits, and the projection
/// norms of the triangular coordinate maps.
pub fn validate_basis_section(
    s: &StepSystem,
    l: usize,
    probes: usize,
    seed: u64,
    grid_m: usize,
) -> Result<BasisReport> {
    if l == 0 || l > s.rows.len() {
        return Err(Error::Precondition(format!(
            "section length {l} outside 1..={}",
            s.rows.len()
        )));
    }
    if probes == 0 {
        return Err(Error::Precondition("probes must be >= 1".into()));
    }
    let rows = &s.rows[..l];
    let lead = s.lead[..l].to_vec();
    // the monotone quantity is the leading ladder column, where each
    // cos/sin pair occupies two separate basis elements
    let lead_columns: Vec<usize> = rows
        .iter()
        .map(|t| {
            coeff_vector(t, 2 * t.degree() + 1)
                .iter()
                .position(|v| v.abs() > 1e-12)
                .unwrap_or(0)
        })
        .collect();
    let m_strictly_increasing = lead_columns.windows(2).all(|w| w[0] < w[1]);

    // frequency cutoffs at the step breakpoints
    let mut cutoffs: Vec<usize> = s.lead[..l]
        .iter()
        .chain(s.high[..l].iter())
        .copied()
        .collect();
    cutoffs.sort_unstable();
    cutoffs.dedup();

    let xs: Vec<f64> = (0..grid_m).map(|j| j as f64 / grid_m as f64).collect();
    let ladder_phi = |nu: usize| -> Vec<Vec<f64>> {
        xs.iter()
            .map(|&x| {
                let mut row = vec![1.0];
                for k in 1..=nu {
                    let w = 2.0 * PI * k as f64 * x;
                    row.push(w.cos());
                    row.push(w.sin());
                }
                row
            })
            .collect()
    };
    let phis: Vec<Vec<Vec<f64>>> = cutoffs.iter().map(|&nu| ladder_phi(nu)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s_curve: Vec<f64> = vec![0.0; cutoffs.len()];
    let mut projection_norms = vec![0.0f64; l];
    for _ in 0..probes {
        let theta: Vec<f64> = (0..l).map(|_| StandardNormal.sample(&mut rng)).collect();
        let mut g = TrigPolynomial::zero();
        for (r, &c) in rows.iter().zip(&theta) {
            g = g.add(&r.scale(c));
        }
        let norm = g.sup_norm(1e-9);
        if norm <= 1e-12 {
            continue;
        }
        let g = g.scale(1.0 / norm);
        let fv: Vec<f64> = xs.iter().map(|&x| g.eval(x)).collect();
        for (ci, phi) in phis.iter().enumerate() {
            let err = if cutoffs[ci] >= g.degree() {
                0.0
            } else {
                discrete_minimax(phi, &fv)?.eps
            };
            s_curve[ci] = s_curve[ci].max(err);
        }
        // triangular coordinate maps: theta is the coordinate vector of g
        let mut partial = TrigPolynomial::zero();
        for (j, (r, &c)) in rows.iter().zip(&theta).enumerate() {
            partial = partial.add(&r.scale(c / norm));
            projection_norms[j] = projection_norms[j].max(partial.sup_norm(1e-9));
        }
    }
    let s_curve: Vec<(usize, f64)> = cutoffs.into_iter().zip(s_curve).collect();
    let s_nonincreasing = s_curve.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-12);

    let mut inclinations = Vec::new();
    let mut floor = f64::INFINITY;
    for j in 1..l {
        let r = inclination(&rows[..j], &rows[j..], grid_m, 1e-9)?;
        floor = floor.min(r.value);
        inclinations.push(r);
    }
    if l == 1 {
        floor = 1.0;
    }

    Ok(BasisReport {
        lead,
        lead_columns,
        m_strictly_increasing,
        s_curve,
        s_nonincreasing,
        inclinations,
        inclination_floor: floor,
        projection_norms,
        probes,
        seed,
        grid_m,
    })
}

/// Checks that every input is reproduced by the output rows.
///
/// Least-squares in coefficient space; returns the worst residual.
pub fn span_preservation_residual(
    candidates: &[TrigPolynomial],
    system: &StepSystem,
) -> Result<f64> {
    if system.rows.is_empty() {
        return Err(Error::Precondition("empty step system".into()));
    }
    let k_max = candidates
        .iter()
        .chain(system.rows.iter())
        .map(|t| t.degree())
        .max()
        .unwrap_or(0);
    let ncols = 2 * k_max + 1;
    let basis = DMatrix::from_fn(ncols, system.rows.len(), |i, j| {
        coeff_vector(&system.rows[j], ncols)[i]
    });
    let svd = basis.clone().svd(true, true);
    let mut worst = 0.0f64;
    for c in candidates {
        let v = DVector::from_vec(coeff_vector(c, ncols));
        let sol = svd
            .solve(&v, 1e-12)
            .map_err(|e| Error::Rank(e.to_string()))?;
        let res = (&basis * &sol - &v).norm();
        worst = worst.max(res / (1.0 + v.norm()));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::muntz_ops::periodize;

    fn cosk(k: usize) -> TrigPolynomial {
        let mut h = vec![(0.0, 0.0); k];
        h[k - 1] = (1.0, 0.0);
        TrigPolynomial { a0: 0.0, harmonics: h }
    }

    fn sink(k: usize) -> TrigPolynomial {
        let mut h = vec![(0.0, 0.0); k];
        h[k - 1] = (0.0, 1.0);
        TrigPolynomial { a0: 0.0, harmonics: h }
    }

    #[test]
    fn difference_system_small() {
        let seq = ExponentSequence::from_exponents(vec![1.0, 2.0, 3.0]).unwrap();
        let u = difference_system(&seq, 3).unwrap();
        assert_eq!(u[0].terms(), &[(1.0, 1.0)]);
        assert_eq!(u[1].terms(), &[(1.0, -1.0), (2.0, 1.0)]);
        assert_eq!(u[2].terms(), &[(2.0, -1.0), (3.0, 1.0)]);
        // telescoping: u1 + u2 + u3 = t^3
        for t in [0.2, 0.5, 0.9] {
            let sum: f64 = u.iter().map(|p| p.eval(t).unwrap()).sum();
            assert!((sum - t.powi(3)).abs() < 1e-15);
        }
    }

    #[test]
    fn difference_system_expansion_coefficients() {
        // g = t - 2 t^2 expands as sum p_k u_k with p_k the tail sums of c;
        // the prefix-sum rule is the documented mismatch
        let seq = ExponentSequence::from_exponents(vec![1.0, 2.0]).unwrap();
        let u = difference_system(&seq, 2).unwrap();
        let c = [1.0, -2.0];
        let tails = [c[0] + c[1], c[1]];
        let prefixes = [c[0], c[0] + c[1]];
        for t in [0.1, 0.4, 0.8] {
            let g = t - 2.0 * t * t;
            let with_tails: f64 = u
                .iter()
                .zip(&tails)
                .map(|(p, &w)| w * p.eval(t).unwrap())
                .sum();
            let with_prefixes: f64 = u
                .iter()
                .zip(&prefixes)
                .map(|(p, &w)| w * p.eval(t).unwrap())
                .sum();
            assert!((with_tails - g).abs() < 1e-15);
            assert!((with_prefixes - (2.0 * t - t * t)).abs() < 1e-15);
        }
    }

    #[test]
    fn difference_system_bad_length() {
        let seq = ExponentSequence::from_exponents(vec![1.0, 2.0]).unwrap();
        assert!(difference_system(&seq, 3).is_err());
    }

    #[test]
    fn candidates_from_fejer() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let v = periodize(&p);
        let set =
            build_candidates(&[v], &SummationMatrix::Fejer, &[1, 2, 4], 1e-10).unwrap();
        assert_eq!(set.kept.len(), 3);
        assert!(set.dropped.is_empty());
        assert!(set.kept[0].degree() < set.kept[2].degree());
    }

    #[test]
    fn candidates_duplicate_pair_dropped() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let v = periodize(&p);
        let set =
            build_candidates(&[v], &SummationMatrix::Fejer, &[2, 2], 1e-10).unwrap();
        assert_eq!(set.kept.len(), 1);
        assert_eq!(set.dropped, vec![1]);
    }

    #[test]
    fn exclusion_one_step() {
        let inputs = vec![cosk(1), cosk(1).add(&sink(2))];
        let out = gaussian_exclusion(&inputs, 1e-12).unwrap();
        let s = &out.system;
        assert_eq!(s.rows.len(), 2);
        assert!(out.rejected.is_empty());
        assert_eq!(s.lead, vec![1, 2]);
        for (r, expect) in s.rows.iter().zip([cosk(1), sink(2)]) {
            assert!((r.sup_norm(1e-12) - 1.0).abs() < 1e-9);
            assert!(r.sub(&expect).sup_norm(1e-9) < 1e-9);
        }
    }

    #[test]
    fn exclusion_normalizes_scalar_input() {
        let out = gaussian_exclusion(&[cosk(1).scale(5.0)], 1e-12).unwrap();
        assert_eq!(out.system.rows.len(), 1);
        assert!((out.system.rows[0].sup_norm(1e-12) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn exclusion_detects_dependence() {
        let a = cosk(1);
        let b = sink(1);
        let c = a.add(&b); // dependent on the first two
        let out = gaussian_exclusion(&[a, b, c], 1e-9).unwrap();
        assert_eq!(out.system.rows.len(), 2);
        assert_eq!(out.rejected.len(), 1);
    }

    #[test]
    fn exclusion_rejects_zero_candidate() {
        assert!(gaussian_exclusion(&[TrigPolynomial::zero()], 1e-12).is_err());
    }

    #[test]
    fn exclusion_preserves_span() {
        let inputs = vec![
            cosk(1).add(&sink(3).scale(0.5)),
            sink(1).add(&cosk(2).scale(-2.0)),
            cosk(2).add(&sink(3)),
        ];
        let out = gaussian_exclusion(&inputs, 1e-12).unwrap();
        let res = span_preservation_residual(&inputs, &out.system).unwrap();
        assert!(res < 1e-9, "{res}");
    }

    #[test]
    fn step_system_json_round_trip() {
        let out = gaussian_exclusion(&[cosk(1), cosk(1).add(&sink(2))], 1e-12).unwrap();
        let s = out.system;
        let j = s.to_json().unwrap();
        let back = StepSystem::from_json(&j).unwrap();
        assert_eq!(back.lead, s.lead);
        assert_eq!(back.high, s.high);
        assert!(back.rows[1].sub(&s.rows[1]).sup_norm(1e-9) < 1e-12);
        assert!(StepSystem::from_json("{\"rows\":[],\"lead\":[0],\"high\":[]}").is_err());
    }

    #[test]
    fn inclination_to_empty_span_is_one() {
        let r = inclination(&[cosk(1)], &[], 64, 1e-9).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn inclination_of_identical_spans_vanishes() {
        let r = inclination(&[cosk(1)], &[cosk(1)], 64, 1e-9).unwrap();
        assert!(r.value < 1e-9, "{}", r.value);
    }

    #[test]
    fn inclination_separated_frequencies() {
        let r1 = inclination(&[cosk(1)], &[cosk(2)], 64, 1e-9).unwrap();
        assert!(r1.value > 0.0 && r1.value <= 1.0);
        let r2 = inclination(&[cosk(1)], &[cosk(2)], 128, 1e-9).unwrap();
        assert!((r1.value - r2.value).abs() < 1e-3, "{} vs {}", r1.value, r2.value);
    }

    #[test]
    fn inclination_rejects_dependent_a() {
        assert!(inclination(&[cosk(1), cosk(1)], &[], 64, 1e-9).is_err());
    }

    #[test]
    fn validate_small_section() {
        let out = gaussian_exclusion(&[cosk(1), cosk(1).add(&sink(2))], 1e-12).unwrap();
        let rep = validate_basis_section(&out.system, 2, 8, 7, 128).unwrap();
        assert!(rep.m_strictly_increasing);
        assert!(rep.s_nonincreasing);
        assert!(rep.inclination_floor > 0.0);
        // full-section projection reproduces the probe itself
        assert!(rep.projection_norms[1] >= 0.99);
        // the last cutoff covers every row: zero error
        assert!(rep.s_curve.last().unwrap().1 < 1e-9);
    }

    #[test]
    fn validate_row_one_is_exact_at_its_degree() {
        let out = gaussian_exclusion(&[cosk(1)], 1e-12).unwrap();
        let rep = validate_basis_section(&out.system, 1, 4, 1, 64).unwrap();
        assert!(rep.s_curve.iter().all(|&(_, e)| e < 1e-9));
        assert!((rep.inclination_floor - 1.0).abs() < 1e-12);
    }
}
