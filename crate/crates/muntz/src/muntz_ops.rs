//! Müntz-space constructions: Remez-type constant estimation, exponent
//! transforms, the exponent-perturbation operator with its error bound,
//! weak-L_s quasi-norms, derivative diagnostics, and periodization.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::core::{
    sup_norm, sup_norm_on, ExponentSequence, MuntzPolynomial, DEFAULT_SUP_REFINE,
};
use crate::error::{Error, Result};

/// Running-maximum lower bound for the Remez-type constant eta.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RemezEtaResult {
    pub eta_lower: f64,
    /// Coefficients of the maximizing polynomial, aligned with the sequence
    /// exponents.
    pub best_coefficients: Vec<f64>,
    pub samples_used: usize,
    pub skipped_degenerate: usize,
}

/// Estimates from below the constant in
/// `||h||_{C[0,delta]} <= eta ||h||_{C[delta,1]}` over seeded random Müntz
/// polynomials with standard-normal coefficients.
pub fn remez_eta_estimate(
    seq: &ExponentSequence,
    delta: f64,
    samples: usize,
    seed: u64,
) -> Result<RemezEtaResult> {
    if !(0.0..1.0).contains(&delta) || delta == 0.0 {
        return Err(Error::Domain(format!("delta must be in (0,1), got {delta}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exps = seq.exponents();
    let mut best = 0.0f64;
    let mut best_coeffs = vec![0.0; exps.len()];
    let mut skipped = 0usize;
    for _ in 0..samples {
        let coeffs: Vec<f64> = (0..exps.len())
            .map(|_| rng.sample::<f64, _>(StandardNormal))
            .collect();
        let h = MuntzPolynomial::new(
            exps.iter().copied().zip(coeffs.iter().copied()).collect(),
        )?;
        let (num, _) = sup_norm_on(|t| h.eval(t).unwrap(), 0.0, delta, DEFAULT_SUP_REFINE)?;
        let (den, _) = sup_norm_on(|t| h.eval(t).unwrap(), delta, 1.0, DEFAULT_SUP_REFINE)?;
        if den < 1e-14 {
            skipped += 1;
            continue;
        }
        let ratio = num / den;
        if ratio > best {
            best = ratio;
            best_coeffs = coeffs;
        }
    }
    Ok(RemezEtaResult {
        eta_lower: best,
        best_coefficients: best_coeffs,
        samples_used: samples - skipped,
        skipped_degenerate: skipped,
    })
}

/// Sorted union of `{alpha * lambda + beta}` with `extra`; duplicates merged.
pub fn transform_exponents(
    seq: &ExponentSequence,
    alpha: f64,
    beta: f64,
    extra: &[f64],
) -> Result<ExponentSequence> {
    if alpha <= 0.0 {
        return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
    }
    if beta < 0.0 {
        return Err(Error::Domain(format!("beta must be nonnegative, got {beta}")));
    }
    let mut exps: Vec<f64> = seq
        .exponents()
        .iter()
        .map(|&l| alpha * l + beta)
        .chain(extra.iter().copied())
        .collect();
    exps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    exps.dedup();
    ExponentSequence::from_exponents(exps)
}

/// One step of the exponent-perturbation scheme: source exponents, target
/// exponents, and the nonnegative shifts between them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentShiftPlan {
    pub source: Vec<f64>,
    pub target: Vec<f64>,
    /// Reference exponents for the bound denominator; defaults to `source`.
    pub reference: Option<Vec<f64>>,
}

impl ExponentShiftPlan {
    pub fn new(source: Vec<f64>, target: Vec<f64>) -> Result<Self> {
        let plan = Self {
            source,
            target,
            reference: None,
        };
        plan.validate()?;
        Ok(plan)
    }

    pub fn with_reference(mut self, reference: Vec<f64>) -> Result<Self> {
        if reference.len() != self.source.len() {
            return Err(Error::Shape("reference length mismatch".into()));
        }
        self.reference = Some(reference);
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.source.len() != self.target.len() {
            return Err(Error::Shape(format!(
                "source has {} exponents, target {}",
                self.source.len(),
                self.target.len()
            )));
        }
        let mut last_nonzero = f64::INFINITY;
        for (s, t) in self.source.iter().zip(&self.target) {
            let d = t - s;
            if d < 0.0 {
                return Err(Error::Shape(format!("negative shift {s} -> {t}")));
            }
            if d > 0.0 {
                // nonzero shifts must be nonincreasing in index order
                if d > last_nonzero + 1e-12 {
                    return Err(Error::Shape(
                        "nonzero shifts must be nonincreasing".into(),
                    ));
                }
                last_nonzero = d;
            }
        }
        Ok(())
    }

    pub fn deltas(&self) -> Vec<f64> {
        self.source
            .iter()
            .zip(&self.target)
            .map(|(s, t)| t - s)
            .collect()
    }

    /// First index with a nonzero shift.
    pub fn first_shift_index(&self) -> Option<usize> {
        self.deltas().iter().position(|&d| d > 0.0)
    }
}

/// Admissible input classes for asserting the perturbation bound; other
/// inputs run in observe mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdmissibleClass {
    SingleMonomial,
    NonnegativeCoefficients,
    BoundedCoefficientSum,
    Observe,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShiftOutcome {
    #[serde(skip)]
    pub shifted: Option<MuntzPolynomial>,
    pub bound: f64,
    pub actual: f64,
    pub class: AdmissibleClass,
}

fn classify(p: &MuntzPolynomial, norm: f64) -> AdmissibleClass {
    let coeffs = p.coefficients();
    if coeffs.len() == 1 {
        AdmissibleClass::SingleMonomial
    } else if coeffs.iter().all(|&a| a >= 0.0) {
        AdmissibleClass::NonnegativeCoefficients
    } else if coeffs.iter().map(|a| a.abs()).sum::<f64>() <= 2.0 * norm + 1e-12 {
        AdmissibleClass::BoundedCoefficientSum
    } else {
        AdmissibleClass::Observe
    }
}

/// Moves the polynomial's exponents to the plan's target, keeping the
/// coefficients; returns the bound `4 ||p|| Delta_m / lambda_m` together
/// with the achieved deviation so callers can verify `actual <= bound`.
pub fn exponent_shift_operator(
    p: &MuntzPolynomial,
    plan: &ExponentShiftPlan,
) -> Result<ShiftOutcome> {
    plan.validate()?;
    let p_exps = p.exponents();
    if p_exps.len() != plan.source.len()
        || p_exps
            .iter()
            .zip(&plan.source)
            .any(|(a, b)| (a - b).abs() > 1e-12)
    {
        return Err(Error::Shape(
            "polynomial exponents do not match plan source".into(),
        ));
    }
    let shifted = MuntzPolynomial::new(
        plan.target
            .iter()
            .copied()
            .zip(p.coefficients())
            .collect(),
    )?;
    let (norm, _) = sup_norm(|t| p.eval(t).unwrap(), DEFAULT_SUP_REFINE)?;
    let bound = match plan.first_shift_index() {
        Some(m) => {
            let reference = plan.reference.as_deref().unwrap_or(&plan.source);
            4.0 * norm * (plan.target[m] - plan.source[m]) / reference[m]
        }
        None => 0.0,
    };
    let (actual, _) = sup_norm(
        |t| p.eval(t).unwrap() - shifted.eval(t).unwrap(),
        DEFAULT_SUP_REFINE,
    )?;
    Ok(ShiftOutcome {
        class: classify(p, norm),
        shifted: Some(shifted),
        bound,
        actual,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainOutcome {
    #[serde(skip)]
    pub final_polynomial: Option<MuntzPolynomial>,
    pub cumulative_bound: f64,
    pub cumulative_actual: f64,
    pub step_bounds: Vec<f64>,
    /// `delta * sum 1/lambda_n` cap from the theorem hypothesis, when a
    /// total-shift delta is supplied.
    pub theorem_cap: Option<f64>,
}

/// Applies a chain of shift plans sequentially, accumulating per-step bounds.
pub fn compose_shift_chain(
    p: &MuntzPolynomial,
    plans: &[ExponentShiftPlan],
    delta: Option<f64>,
) -> Result<ChainOutcome> {
    let mut current = p.clone();
    let mut cumulative_bound = 0.0;
    let mut step_bounds = Vec::with_capacity(plans.len());
    for (i, plan) in plans.iter().enumerate() {
        if i > 0 {
            let prev = &plans[i - 1];
            if prev.target.len() != plan.source.len()
                || prev
                    .target
                    .iter()
                    .zip(&plan.source)
                    .any(|(a, b)| (a - b).abs() > 1e-12)
            {
                return Err(Error::Shape(format!(
                    "plan {i} source does not chain from previous target"
                )));
            }
        }
        let outcome = exponent_shift_operator(&current, plan)?;
        cumulative_bound += outcome.bound;
        step_bounds.push(outcome.bound);
        current = outcome.shifted.unwrap();
    }
    let (actual, _) = sup_norm(
        |t| p.eval(t).unwrap() - current.eval(t).unwrap(),
        DEFAULT_SUP_REFINE,
    )?;
    let theorem_cap = delta.map(|d| {
        let inv_sum: f64 = p.exponents().iter().map(|l| 1.0 / l).sum();
        d * inv_sum
    });
    Ok(ChainOutcome {
        final_polynomial: Some(current),
        cumulative_bound,
        cumulative_actual: actual,
        step_bounds,
        theorem_cap,
    })
}

/// Scan resolution for level-set measures.
pub const WEAK_NORM_SCAN: usize = 1 << 20;

/// Weak L_s quasi-norm `sup_y ( y^s mu{ |f| >= y } )^(1/s)` on `(a,b)`.
///
/// Level-set measures come from a uniform midpoint scan with bisection at
/// level crossings; the level sweep is log-spaced with golden refinement
/// around the best candidate.
pub fn weak_norm<F: Fn(f64) -> f64>(f: F, s: f64, a: f64, b: f64) -> Result<f64> {
    weak_norm_with_scan(f, s, a, b, WEAK_NORM_SCAN)
}

pub fn weak_norm_with_scan<F: Fn(f64) -> f64>(
    f: F,
    s: f64,
    a: f64,
    b: f64,
    scan: usize,
) -> Result<f64> {
    if s <= 0.0 {
        return Err(Error::Domain(format!("s must be positive, got {s}")));
    }
    if a >= b {
        return Err(Error::Domain(format!("need a < b, got ({a}, {b})")));
    }
    let h = (b - a) / scan as f64;
    let sample_at = |i: usize| a + (i as f64 + 0.5) * h;
    let mut samples: Vec<f64> = (0..scan).map(|i| f(sample_at(i)).abs()).collect();
    // unbounded blow-up at finitely many points: clip non-finite samples,
    // their cells contribute at most h to any level set
    for v in samples.iter_mut() {
        if !v.is_finite() {
            *v = f64::MAX;
        }
    }
    let mut sorted = samples.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let max_v = *sorted.last().unwrap();
    if max_v == 0.0 {
        return Ok(0.0);
    }
    let min_pos = sorted
        .iter()
        .copied()
        .find(|&v| v > 0.0)
        .unwrap_or(max_v);

    // measure by sorted-sample counting: O(log scan) per level
    let measure = |y: f64| -> f64 {
        let idx = sorted.partition_point(|&v| v < y);
        (scan - idx) as f64 * h
    };
    let objective = |y: f64| -> f64 { y * measure(y).powf(1.0 / s) };

    // coarse log-spaced sweep ranks candidate levels; counting is quantized
    // to whole cells, so the final value comes only from crossing-refined
    // measures at the best candidates
    let lo = min_pos.max(max_v * 1e-12);
    let hi = max_v.min(1e300);
    let steps = 256;
    let mut sweep: Vec<(f64, f64)> = (0..=steps)
        .map(|i| {
            let y = lo * (hi / lo).powf(i as f64 / steps as f64);
            (objective(y), y)
        })
        .collect();
    sweep.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let best_y = sweep[0].1;

    // golden refinement in log(y) around the best candidate
    let (mut llo, mut lhi) = ((best_y / 4.0).max(lo).ln(), (best_y * 4.0).min(hi).ln());
    for _ in 0..60 {
        let m1 = llo + (lhi - llo) * 0.382;
        let m2 = llo + (lhi - llo) * 0.618;
        if objective(m1.exp()) < objective(m2.exp()) {
            llo = m1;
        } else {
            lhi = m2;
        }
    }

    let mut candidates: Vec<f64> = sweep.iter().take(8).map(|&(_, y)| y).collect();
    candidates.push((0.5 * (llo + lhi)).exp());
    let mut best = 0.0f64;
    for y in candidates {
        let m = refined_measure(&f, &samples, a, h, y);
        best = best.max(y * m.powf(1.0 / s));
    }
    Ok(best)
}

/// Measure of `{|f| >= y}` with bisection-located crossings between
/// straddling neighbor cells.
fn refined_measure<F: Fn(f64) -> f64>(f: &F, samples: &[f64], a: f64, h: f64, y: f64) -> f64 {
    let mut m = 0.0;
    for (i, &v) in samples.iter().enumerate() {
        if v >= y {
            m += h;
        }
        if i + 1 < samples.len() {
            let w = samples[i + 1];
            if (v >= y) != (w >= y) {
                // crossing between midpoints i and i+1; locate it
                let x0 = a + (i as f64 + 0.5) * h;
                let x1 = x0 + h;
                let (mut lo, mut hi) = (x0, x1);
                let g = |x: f64| f(x).abs() - y;
                let mut glo = v - y;
                for _ in 0..40 {
                    let mid = 0.5 * (lo + hi);
                    let gm = g(mid);
                    if (gm >= 0.0) == (glo >= 0.0) {
                        lo = mid;
                        glo = gm;
                    } else {
                        hi = mid;
                    }
                }
                let c = 0.5 * (lo + hi);
                // adjust the half-cells on each side of the crossing
                if v >= y {
                    m += (c - x0) - 0.5 * h;
                } else {
                    m += (x1 - c) - 0.5 * h;
                }
            }
        }
    }
    m.max(0.0)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Prop10Report {
    pub weak_norm_value: f64,
    /// Max of `|p|` over the disc `|u - 1/2| <= 1/2`; only computed for
    /// integer exponents (boundary sampling + maximum principle).
    pub cauchy_g: Option<f64>,
    /// Whether `|p'(x)| <= G/(2 pi (1-x))` held on the `(3/4, 1)` grid.
    /// Reported, not asserted: for finite polynomials the inequality can
    /// genuinely fail away from `x = 1`.
    pub pointwise_bound_ok: Option<bool>,
    pub integer_exponents: bool,
    pub first_violation: Option<f64>,
}

/// Derivative diagnostics: weak-L1 quasi-norm of `p'` on `(0,1)` and the
/// Cauchy-estimate comparison against the disc maximum.
pub fn derivative_weak_l1_check(p: &MuntzPolynomial) -> Result<Prop10Report> {
    if p.is_zero() {
        return Err(Error::Precondition("polynomial must be nonzero".into()));
    }
    let weak = weak_norm_with_scan(|t| p.derivative_at(t), 1.0, 0.0, 1.0, 1 << 18)?;

    let integer_exponents = p
        .exponents()
        .iter()
        .all(|&l| (l - l.round()).abs() < 1e-12 && l >= 1.0);
    if !integer_exponents {
        return Ok(Prop10Report {
            weak_norm_value: weak,
            cauchy_g: None,
            pointwise_bound_ok: None,
            integer_exponents,
            first_violation: None,
        });
    }

    let g = disc_max(p);
    let mut ok = true;
    let mut first_violation = None;
    let grid = 512;
    for i in 0..grid {
        let x = 0.75 + 0.25 * (i as f64 + 0.5) / grid as f64;
        let lhs = p.derivative_at(x).abs();
        let rhs = g / (2.0 * PI * (1.0 - x));
        if lhs > rhs {
            ok = false;
            if first_violation.is_none() {
                first_violation = Some(x);
            }
        }
    }
    Ok(Prop10Report {
        weak_norm_value: weak,
        cauchy_g: Some(g),
        pointwise_bound_ok: Some(ok),
        integer_exponents,
        first_violation,
    })
}

/// Max of `|p(z)|` over the boundary circle `|z - 1/2| = 1/2`, which by the
/// maximum principle equals the disc maximum for integer exponents.
fn disc_max(p: &MuntzPolynomial) -> f64 {
    let eval = |theta: f64| -> f64 {
        let z = Complex64::new(0.5, 0.0) + 0.5 * Complex64::from_polar(1.0, theta);
        let mut s = Complex64::new(0.0, 0.0);
        for &(l, a) in p.terms() {
            s += a * z.powu(l.round() as u32);
        }
        s.norm()
    };
    const SCAN: usize = 4096;
    let mut best = (0.0f64, 0.0f64);
    for i in 0..SCAN {
        let th = 2.0 * PI * i as f64 / SCAN as f64;
        let v = eval(th);
        if v > best.0 {
            best = (v, th);
        }
    }
    // local golden refinement around the best sample
    let span = 2.0 * PI / SCAN as f64;
    let (mut lo, mut hi) = (best.1 - span, best.1 + span);
    for _ in 0..60 {
        let m1 = lo + (hi - lo) * 0.382;
        let m2 = lo + (hi - lo) * 0.618;
        if eval(m1) < eval(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    best.0.max(eval(0.5 * (lo + hi)))
}

/// 1-periodic extension of `v(t) = p(t) + (p(0) - p(1)) t` on `[0,1)`.
#[derive(Debug, Clone)]
pub struct PeriodizedMuntz {
    poly: MuntzPolynomial,
    slope: f64,
}

impl PeriodizedMuntz {
    pub fn eval(&self, t: f64) -> f64 {
        let u = t.rem_euclid(1.0);
        self.poly.eval(u).unwrap() + self.slope * u
    }

    pub fn polynomial(&self) -> &MuntzPolynomial {
        &self.poly
    }
}

/// Periodizes a Müntz polynomial; `p(0) = 0` for positive exponents, so
/// `v(t) = p(t) - p(1) t` and `v(0) = lim_{t -> 1} v(t) = 0`.
pub fn periodize(p: &MuntzPolynomial) -> PeriodizedMuntz {
    let p1 = p.eval(1.0).unwrap();
    let p0 = p.eval(0.0).unwrap();
    PeriodizedMuntz {
        poly: p.clone(),
        slope: p0 - p1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::integrate;

    #[test]
    fn remez_single_monomial_ratio() {
        // coefficient-free ratio: t^2 on [0, 1/2] vs [1/2, 1] is exactly 1/4
        let seq = ExponentSequence::from_exponents(vec![2.0]).unwrap();
        let r = remez_eta_estimate(&seq, 0.5, 5, 42).unwrap();
        assert!((r.eta_lower - 0.25).abs() < 1e-7, "{}", r.eta_lower);
    }

    #[test]
    fn remez_pair_known_ratio() {
        // h = t^2 - t^4 with delta = 1/2: (3/16) / (1/4) = 0.75 is attained
        // by the running max over random samples containing sign pattern (+,-)
        let h = MuntzPolynomial::new(vec![(2.0, 1.0), (4.0, -1.0)]).unwrap();
        let (num, _) = sup_norm_on(|t| h.eval(t).unwrap(), 0.0, 0.5, 1e-10).unwrap();
        let (den, _) = sup_norm_on(|t| h.eval(t).unwrap(), 0.5, 1.0, 1e-10).unwrap();
        assert!((num - 3.0 / 16.0).abs() < 1e-9);
        assert!((den - 0.25).abs() < 1e-9);
        assert!((num / den - 0.75).abs() < 1e-7);
    }

    #[test]
    fn remez_running_max_monotone() {
        let seq = ExponentSequence::from_exponents(vec![2.0, 4.0, 7.0]).unwrap();
        let mut prev = 0.0;
        for samples in [5, 10, 20, 40] {
            let r = remez_eta_estimate(&seq, 0.5, samples, 7).unwrap();
            assert!(r.eta_lower >= prev - 1e-12);
            prev = r.eta_lower;
        }
    }

    #[test]
    fn transform_scale_shift() {
        let seq = ExponentSequence::from_exponents(vec![1.0, 2.0, 3.0]).unwrap();
        let t = transform_exponents(&seq, 2.0, 1.0, &[]).unwrap();
        assert_eq!(t.exponents(), &[3.0, 5.0, 7.0]);

        let seq = ExponentSequence::from_exponents(vec![2.0, 4.0]).unwrap();
        let t = transform_exponents(&seq, 1.0, 0.0, &[3.0]).unwrap();
        assert_eq!(t.exponents(), &[2.0, 3.0, 4.0]);

        assert!(transform_exponents(&seq, -1.0, 0.0, &[]).is_err());
    }

    #[test]
    fn transform_preserves_muntz_sum_bound() {
        let seq = ExponentSequence::power(2.0, 50).unwrap();
        let alpha = 1.7;
        let t = transform_exponents(&seq, alpha, 0.3, &[0.5]).unwrap();
        // 1/(alpha l + beta) <= 1/(alpha l)
        let bound = seq.muntz_sum_alpha1() / alpha + 1.0 / 0.5;
        assert!(t.muntz_sum_alpha1() <= bound + 1e-12);
    }

    #[test]
    fn shift_single_monomial() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let plan = ExponentShiftPlan::new(vec![2.0], vec![2.5]).unwrap();
        let out = exponent_shift_operator(&p, &plan).unwrap();
        assert_eq!(out.class, AdmissibleClass::SingleMonomial);
        assert!((out.actual - 0.08192).abs() < 1e-7);
        assert!((out.bound - 1.0).abs() < 1e-9); // 4 * 1 * 0.5 / 2
        assert!(out.actual <= out.bound);
    }

    #[test]
    fn shift_identity_plan() {
        let p = MuntzPolynomial::new(vec![(2.0, 1.0), (4.0, -0.5)]).unwrap();
        let plan = ExponentShiftPlan::new(vec![2.0, 4.0], vec![2.0, 4.0]).unwrap();
        let out = exponent_shift_operator(&p, &plan).unwrap();
        assert_eq!(out.bound, 0.0);
        assert!(out.actual < 1e-12);
    }

    #[test]
    fn shift_nonneg_pair() {
        let p = MuntzPolynomial::new(vec![(2.0, 1.0), (4.0, 1.0)]).unwrap();
        let plan = ExponentShiftPlan::new(vec![2.0, 4.0], vec![2.1, 4.05]).unwrap();
        let out = exponent_shift_operator(&p, &plan).unwrap();
        assert_eq!(out.class, AdmissibleClass::NonnegativeCoefficients);
        assert!(out.actual <= out.bound);
    }

    #[test]
    fn shift_rejects_increasing_deltas() {
        assert!(ExponentShiftPlan::new(vec![2.0, 4.0], vec![2.05, 4.1]).is_err());
    }

    #[test]
    fn chain_composition() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let p1 = ExponentShiftPlan::new(vec![2.0], vec![2.25]).unwrap();
        let p2 = ExponentShiftPlan::new(vec![2.25], vec![2.5]).unwrap();
        let out = compose_shift_chain(&p, &[p1, p2], Some(0.5)).unwrap();
        assert!(out.cumulative_actual <= out.cumulative_bound + 1e-12);
        assert_eq!(out.step_bounds.len(), 2);
        assert!((out.theorem_cap.unwrap() - 0.25).abs() < 1e-12);
        let f = out.final_polynomial.unwrap();
        assert_eq!(f.exponents(), vec![2.5]);

        // empty shifts are the identity
        let id = ExponentShiftPlan::new(vec![2.0], vec![2.0]).unwrap();
        let out = compose_shift_chain(&p, &[id.clone(), id], None).unwrap();
        assert_eq!(out.cumulative_bound, 0.0);
        assert!(out.cumulative_actual < 1e-12);
    }

    #[test]
    fn chain_mismatch_rejected() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let p1 = ExponentShiftPlan::new(vec![2.0], vec![2.25]).unwrap();
        let p2 = ExponentShiftPlan::new(vec![2.5], vec![2.75]).unwrap();
        assert!(compose_shift_chain(&p, &[p1, p2], None).is_err());
    }

    #[test]
    fn weak_norm_linear() {
        // f = 2t on (0,1), s = 1: sup_y y (1 - y/2) = 1/2 at y = 1
        let v = weak_norm_with_scan(|t| 2.0 * t, 1.0, 0.0, 1.0, 1 << 16).unwrap();
        assert!((v - 0.5).abs() < 1e-3, "{v}");
    }

    #[test]
    fn weak_norm_constant() {
        let v = weak_norm_with_scan(|_| 3.0, 1.0, 0.25, 1.0, 1 << 14).unwrap();
        assert!((v - 3.0 * 0.75).abs() < 1e-3, "{v}");
    }

    #[test]
    fn weak_norm_cauchy_blowup() {
        // f = 1/(2 pi (1-t)) on (3/4, 1): sup_y y min(1/4, 1/(2 pi y)) = 1/(2 pi)
        let v =
            weak_norm_with_scan(|t| 1.0 / (2.0 * PI * (1.0 - t)), 1.0, 0.75, 1.0, 1 << 18)
                .unwrap();
        assert!((v - 1.0 / (2.0 * PI)).abs() < 2e-3, "{v}");
    }

    #[test]
    fn weak_norm_homogeneous() {
        let f = |t: f64| (5.0 * t).sin() + 0.3;
        let base = weak_norm_with_scan(f, 1.0, 0.0, 1.0, 1 << 14).unwrap();
        let scaled = weak_norm_with_scan(|t| -2.5 * f(t), 1.0, 0.0, 1.0, 1 << 14).unwrap();
        assert!((scaled - 2.5 * base).abs() < 5e-3 * (1.0 + base));
    }

    #[test]
    fn weak_norm_dominated_by_l1() {
        let f = |t: f64| (7.0 * t).cos() * (1.0 + t);
        let weak = weak_norm_with_scan(f, 1.0, 0.0, 1.0, 1 << 14).unwrap();
        let l1 = integrate(|t| f(t).abs(), 0.0, 1.0, 1e-9).unwrap();
        assert!(weak <= l1 + 1e-3);
    }

    #[test]
    fn prop10_t_squared() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let r = derivative_weak_l1_check(&p).unwrap();
        // p' = 2t has weak-L1 norm 1/2
        assert!((r.weak_norm_value - 0.5).abs() < 2e-3);
        // G = max |z^2| on the disc |u-1/2| <= 1/2 is 1
        assert!((r.cauchy_g.unwrap() - 1.0).abs() < 1e-6);
        // the literal pointwise inequality fails for this finite polynomial
        assert_eq!(r.pointwise_bound_ok, Some(false));
        assert!(r.first_violation.unwrap() < 0.77);
    }

    #[test]
    fn prop10_linear() {
        let p = MuntzPolynomial::monomial(1.0, 1.0).unwrap();
        let r = derivative_weak_l1_check(&p).unwrap();
        assert!((r.weak_norm_value - 1.0).abs() < 2e-3);
    }

    #[test]
    fn prop10_non_integer_skips_disc() {
        let p = MuntzPolynomial::monomial(2.5, 1.0).unwrap();
        let r = derivative_weak_l1_check(&p).unwrap();
        assert!(r.cauchy_g.is_none());
        assert!(!r.integer_exponents);
        assert!(r.weak_norm_value.is_finite());
    }

    #[test]
    fn periodize_t_squared() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let v = periodize(&p);
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            let expect = if t < 1.0 { t * t - t } else { 0.0 };
            assert!((v.eval(t) - expect).abs() < 1e-12);
        }
        assert!((v.eval(0.0) - v.eval(1.0 - 1e-9)).abs() < 1e-8);
        // periodic extension
        assert!((v.eval(1.3) - v.eval(0.3)).abs() < 1e-12);
    }

    #[test]
    fn periodize_fixed_point() {
        // p(1) = 0 leaves the polynomial unchanged
        let p = MuntzPolynomial::new(vec![(2.0, 1.0), (4.0, -1.0)]).unwrap();
        let v = periodize(&p);
        for i in 0..10 {
            let t = i as f64 / 10.0;
            assert!((v.eval(t) - p.eval(t).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn periodized_fourier_coefficients_decay() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        let v = periodize(&p);
        let c = crate::fourier::fourier_coefficients(|t| v.eval(t), 16, 1e-9).unwrap();
        let early = c.pair(1).0.abs() + c.pair(1).1.abs();
        let late = c.pair(16).0.abs() + c.pair(16).1.abs();
        assert!(late < 0.05 * early);
    }
}
