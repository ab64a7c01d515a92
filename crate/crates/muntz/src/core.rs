//! Numeric substrate: exponent sequences, Müntz polynomials, grids,
//! adaptive quadrature, and sup-norm estimation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator rule for an exponent sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum ExponentRule {
    /// `lambda_n = n^p`, n = 1..N.
    Power { p: f64 },
    /// `lambda_n = base^n`, n = 1..N.
    Geometric { base: f64 },
    /// No rule; only the listed truncation is known.
    Explicit,
}

/// A finite truncation of a strictly increasing sequence of positive
/// exponents, with cached gap `alpha0` and Müntz sum `alpha1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentSequence {
    rule: ExponentRule,
    exponents: Vec<f64>,
    alpha0: f64,
    alpha1: f64,
}

/// Serialized form: the explicit list is always emitted for reproducibility.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExponentSequenceJson {
    pub rule: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    #[serde(rename = "N")]
    pub n: usize,
    pub exponents: Vec<f64>,
}

impl ExponentSequence {
    pub fn from_exponents(exponents: Vec<f64>) -> Result<Self> {
        Self::new(ExponentRule::Explicit, exponents)
    }

    pub fn power(p: f64, n: usize) -> Result<Self> {
        if p <= 0.0 {
            return Err(Error::Domain(format!("power rule needs p > 0, got {p}")));
        }
        let exps = (1..=n).map(|k| (k as f64).powf(p)).collect();
        Self::new(ExponentRule::Power { p }, exps)
    }

    pub fn geometric(base: f64, n: usize) -> Result<Self> {
        if base <= 1.0 {
            return Err(Error::Domain(format!(
                "geometric rule needs base > 1, got {base}"
            )));
        }
        let exps = (1..=n).map(|k| base.powi(k as i32)).collect();
        Self::new(ExponentRule::Geometric { base }, exps)
    }

    pub fn new(rule: ExponentRule, exponents: Vec<f64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::DegenerateInput("empty exponent sequence".into()));
        }
        for w in exponents.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::Domain(format!(
                    "exponents must be strictly increasing: {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if exponents[0] <= 0.0 {
            return Err(Error::Domain("exponents must be positive".into()));
        }
        let alpha0 = exponents
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min);
        let alpha1 = exponents.iter().map(|l| 1.0 / l).sum();
        Ok(Self {
            rule,
            exponents,
            alpha0,
            alpha1,
        })
    }

    pub fn rule(&self) -> &ExponentRule {
        &self.rule
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Smallest consecutive gap over the truncation.
    pub fn gap_alpha0(&self) -> f64 {
        self.alpha0
    }

    /// Partial Müntz sum over the truncation.
    pub fn muntz_sum_alpha1(&self) -> f64 {
        self.alpha1
    }

    pub fn to_json(&self) -> ExponentSequenceJson {
        let (rule, params) = match &self.rule {
            ExponentRule::Power { p } => {
                let mut m = serde_json::Map::new();
                m.insert("p".into(), serde_json::json!(p));
                ("power".to_string(), m)
            }
            ExponentRule::Geometric { base } => {
                let mut m = serde_json::Map::new();
                m.insert("base".into(), serde_json::json!(base));
                ("geometric".to_string(), m)
            }
            ExponentRule::Explicit => ("explicit".to_string(), serde_json::Map::new()),
        };
        ExponentSequenceJson {
            rule,
            params,
            n: self.exponents.len(),
            exponents: self.exponents.clone(),
        }
    }

    pub fn from_json(j: &ExponentSequenceJson) -> Result<Self> {
        match j.rule.as_str() {
            "power" => {
                let p = j
                    .params
                    .get("p")
                    .and_then(|v| v.as_f64())
                    .ok_or_else(|| Error::Domain("power rule needs params.p".into()))?;
                ExponentSequence::power(p, j.n)
            }
            "geometric" => {
                let base = j
                    .params
                    .get("base")
                    .and_then(|v| v.as_f64())
                    .ok_or_else(|| Error::Domain("geometric rule needs params.base".into()))?;
                ExponentSequence::geometric(base, j.n)
            }
            "explicit" => ExponentSequence::from_exponents(j.exponents.clone()),
            other => Err(Error::Domain(format!("unknown exponent rule '{other}'"))),
        }
    }
}

/// Result of checking the gap condition on a sequence.
pub fn check_gap_condition(seq: &ExponentSequence) -> Result<(bool, f64)> {
    if seq.len() < 2 {
        return Err(Error::DegenerateInput(
            "gap condition needs at least 2 exponents".into(),
        ));
    }
    let alpha0 = seq.gap_alpha0();
    // For rule-based sequences the verdict reflects the infinite sequence,
    // not just the truncation.
    let holds = match seq.rule() {
        ExponentRule::Power { p } => *p >= 1.0,
        ExponentRule::Geometric { .. } => true,
        ExponentRule::Explicit => alpha0 > 0.0,
    };
    Ok((holds, alpha0))
}

/// Partial Müntz sum plus a rigorous tail bound where the generator rule
/// admits one; `f64::INFINITY` marks a divergent (or unknown) tail.
pub fn muntz_sum(seq: &ExponentSequence) -> (f64, f64) {
    let alpha1 = seq.muntz_sum_alpha1();
    let n = seq.len() as f64;
    let tail = match seq.rule() {
        // integral bound: sum_{k>N} k^{-p} <= N^{1-p}/(p-1) for p > 1
        ExponentRule::Power { p } if *p > 1.0 => n.powf(1.0 - p) / (p - 1.0),
        ExponentRule::Power { .. } => f64::INFINITY,
        // geometric tail: sum_{k>N} b^{-k} = b^{-N}/(b-1)
        ExponentRule::Geometric { base } => base.powf(-n) / (base - 1.0),
        ExponentRule::Explicit => f64::INFINITY,
    };
    (alpha1, tail)
}

/// Finite Müntz polynomial `sum a_n t^(lambda_n)` on `[0,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MuntzPolynomial {
    terms: Vec<(f64, f64)>,
}

impl MuntzPolynomial {
    /// Builds from `(exponent, coefficient)` pairs; duplicate exponents are
    /// merged, zero terms dropped, result sorted by exponent.
    pub fn new(terms: Vec<(f64, f64)>) -> Result<Self> {
        for &(l, _) in &terms {
            if l <= 0.0 {
                return Err(Error::Domain(format!("exponent must be positive, got {l}")));
            }
        }
        let mut sorted = terms;
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(sorted.len());
        for (l, a) in sorted {
            match merged.last_mut() {
                Some(last) if last.0 == l => last.1 += a,
                _ => merged.push((l, a)),
            }
        }
        merged.retain(|&(_, a)| a != 0.0);
        Ok(Self { terms: merged })
    }

    pub fn monomial(lambda: f64, coeff: f64) -> Result<Self> {
        Self::new(vec![(lambda, coeff)])
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn exponents(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.0).collect()
    }

    pub fn coefficients(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.1).collect()
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        eval_muntz(self, t)
    }

    /// Term-wise derivative `sum a_n lambda_n t^(lambda_n - 1)`; the result
    /// is evaluated directly rather than stored (exponents may reach 0).
    pub fn derivative_at(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(l, a)| a * l * t.powf(l - 1.0))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Evaluates `sum a_n t^(lambda_n)`; `t` must lie in `[0,1]`.
pub fn eval_muntz(p: &MuntzPolynomial, t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("t = {t} outside [0,1]")));
    }
    Ok(p.terms.iter().map(|&(l, a)| a * t.powf(l)).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridScheme {
    Uniform,
    EndpointRefined,
}

/// Finite sorted grid in `[0,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
    scheme: GridScheme,
}

impl Grid {
    /// `m` equispaced points including both endpoints.
    pub fn uniform(m: usize) -> Self {
        assert!(m >= 2);
        let points = (0..m).map(|i| i as f64 / (m - 1) as f64).collect();
        Self {
            points,
            scheme: GridScheme::Uniform,
        }
    }

    /// Chebyshev-distributed points, clustered near both endpoints.
    pub fn endpoint_refined(m: usize) -> Self {
        assert!(m >= 2);
        let points = (0..m)
            .map(|i| 0.5 * (1.0 - (std::f64::consts::PI * i as f64 / (m - 1) as f64).cos()))
            .collect();
        Self {
            points,
            scheme: GridScheme::EndpointRefined,
        }
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn scheme(&self) -> GridScheme {
        self.scheme
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Function samples over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub grid: Grid,
    pub values: Vec<f64>,
    pub periodic: bool,
}

impl SampledFunction {
    pub fn sample<F: Fn(f64) -> f64>(grid: Grid, f: F, periodic: bool) -> Self {
        let values = grid.points().iter().map(|&x| f(x)).collect();
        Self {
            grid,
            values,
            periodic,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

pub const DEFAULT_SUP_REFINE: f64 = 1e-9;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Sup norm of `|f|` on `[0,1]` with a witness argmax.
///
/// Chebyshev-distributed 4096-point scan, then golden-section refinement
/// around the top 8 candidates. Müntz monomials with large exponents peak
/// sharply near `t = 1`, which the endpoint-clustered scan resolves.
pub fn sup_norm<F: Fn(f64) -> f64>(f: F, refine: f64) -> Result<(f64, f64)> {
    sup_norm_on(f, 0.0, 1.0, refine)
}

/// Sup norm of `|f|` on `[a,b]`.
pub fn sup_norm_on<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, refine: f64) -> Result<(f64, f64)> {
    const SCAN: usize = 4096;
    const TOP: usize = 8;
    assert!(a < b);
    let g = |x: f64| f(x).abs();
    let mut vals = Vec::with_capacity(SCAN);
    for i in 0..SCAN {
        // Chebyshev distribution on [a,b]
        let u = 0.5 * (1.0 - (std::f64::consts::PI * i as f64 / (SCAN - 1) as f64).cos());
        let x = a + (b - a) * u;
        let v = g(x);
        if !v.is_finite() {
            return Err(Error::NonFinite { x });
        }
        vals.push((x, v));
    }
    let mut order: Vec<usize> = (0..SCAN).collect();
    order.sort_by(|&i, &j| vals[j].1.partial_cmp(&vals[i].1).unwrap());

    let mut best = (vals[order[0]].1, vals[order[0]].0);
    for &i in order.iter().take(TOP) {
        let lo = if i == 0 { a } else { vals[i - 1].0 };
        let hi = if i == SCAN - 1 { b } else { vals[i + 1].0 };
        let (v, x) = golden_max(&g, lo, hi, refine);
        if !v.is_finite() {
            return Err(Error::NonFinite { x });
        }
        if v > best.0 {
            best = (v, x);
        }
    }
    Ok(best)
}

fn golden_max<F: Fn(f64) -> f64>(g: &F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = g(x1);
    let mut f2 = g(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = g(x1);
        }
    }
    let xm = 0.5 * (lo + hi);
    (g(xm).max(f1).max(f2), xm)
}

// 10-point Gauss-Legendre nodes and weights on [-1,1].
const GL10_X: [f64; 5] = [
    0.148_874_338_981_631_2,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
const GL10_W: [f64; 5] = [
    0.295_524_224_714_752_9,
    0.269_266_719_309_996_3,
    0.219_086_362_515_982_0,
    0.149_451_349_150_580_6,
    0.066_671_344_308_688_1,
];

fn gl10<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = 0.0;
    for i in 0..5 {
        s += GL10_W[i] * (f(c - h * GL10_X[i]) + f(c + h * GL10_X[i]));
    }
    s * h
}

const MAX_QUAD_DEPTH: u32 = 32;

/// Adaptive composite 10-point Gauss-Legendre quadrature with dyadic panel
/// subdivision until the estimated error is below `tol`.
///
/// Integrands with kinks (absolute values) should be split at sign changes
/// first; see [`find_sign_changes`].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a >= b {
        return Err(Error::Domain(format!("need a < b, got [{a}, {b}]")));
    }
    let whole = gl10(&f, a, b);
    if !whole.is_finite() {
        return Err(Error::NonFinite { x: 0.5 * (a + b) });
    }
    let mut err_total = 0.0;
    let val = adapt(&f, a, b, whole, tol, 0, &mut err_total)?;
    if err_total > tol {
        return Err(Error::Accuracy {
            tol,
            best: val,
            err: err_total,
        });
    }
    Ok(val)
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    err_total: &mut f64,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let left = gl10(f, a, m);
    let right = gl10(f, m, b);
    if !left.is_finite() || !right.is_finite() {
        return Err(Error::NonFinite { x: m });
    }
    let diff = (left + right - whole).abs();
    if diff < tol || depth >= MAX_QUAD_DEPTH {
        if depth >= MAX_QUAD_DEPTH {
            *err_total += diff;
        }
        return Ok(left + right);
    }
    let l = adapt(f, a, m, left, 0.5 * tol, depth + 1, err_total)?;
    let r = adapt(f, m, b, right, 0.5 * tol, depth + 1, err_total)?;
    Ok(l + r)
}

/// Locates sign changes of `f` on `[a,b]` by a uniform scan of `scan`
/// intervals followed by bisection to width `tol`.
pub fn find_sign_changes<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    scan: usize,
    tol: f64,
) -> Vec<f64> {
    let mut roots = Vec::new();
    let h = (b - a) / scan as f64;
    let mut x0 = a;
    let mut f0 = f(x0);
    for i in 1..=scan {
        let x1 = a + i as f64 * h;
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0 * f1 < 0.0 {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    break;
                }
                if flo * fm < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Integrates `|f|` on `[a,b]`, splitting panels at detected sign changes.
pub fn integrate_abs<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let scan = 4096.max(64);
    let mut cuts = find_sign_changes(&f, a, b, scan, 1e-13);
    cuts.retain(|&r| r > a && r < b);
    let mut pts = Vec::with_capacity(cuts.len() + 2);
    pts.push(a);
    pts.extend(cuts);
    pts.push(b);
    let panels = pts.len() - 1;
    let mut total = 0.0;
    for w in pts.windows(2) {
        total += integrate(|x| f(x).abs(), w[0], w[1], tol / panels as f64)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gap_condition_squares() {
        let seq = ExponentSequence::power(2.0, 100).unwrap();
        let (holds, a0) = check_gap_condition(&seq).unwrap();
        assert!(holds);
        assert_eq!(a0, 3.0);
    }

    #[test]
    fn gap_condition_geometric() {
        let seq = ExponentSequence::geometric(2.0, 20).unwrap();
        let (holds, a0) = check_gap_condition(&seq).unwrap();
        assert!(holds);
        assert_eq!(a0, 2.0);
    }

    #[test]
    fn gap_condition_explicit() {
        // lambda_n = n + 1/n truncated at N = 3
        let seq =
            ExponentSequence::from_exponents(vec![2.0, 2.5, 3.0 + 1.0 / 3.0]).unwrap();
        let (holds, a0) = check_gap_condition(&seq).unwrap();
        assert!(holds);
        assert!((a0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn gap_condition_needs_two() {
        let seq = ExponentSequence::from_exponents(vec![1.0]).unwrap();
        assert!(matches!(
            check_gap_condition(&seq),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn muntz_sum_geometric() {
        let seq = ExponentSequence::geometric(2.0, 30).unwrap();
        let (a1, tail) = muntz_sum(&seq);
        assert!((a1 - 1.0).abs() < 1e-8);
        assert!(tail <= 2f64.powi(-30) + 1e-18);
    }

    #[test]
    fn muntz_sum_squares_basel() {
        let seq = ExponentSequence::power(2.0, 10_000).unwrap();
        let (a1, tail) = muntz_sum(&seq);
        let basel = PI * PI / 6.0;
        // partial sum + integral tail bound brackets the Basel value
        assert!(a1 <= basel);
        assert!(a1 + tail >= basel);
        assert!((a1 - basel).abs() < 1e-4);
    }

    #[test]
    fn muntz_sum_harmonic_diverges() {
        let seq = ExponentSequence::power(1.0, 100).unwrap();
        let (_, tail) = muntz_sum(&seq);
        assert!(tail.is_infinite());
    }

    #[test]
    fn eval_muntz_basics() {
        let p = MuntzPolynomial::monomial(2.0, 1.0).unwrap();
        assert_eq!(eval_muntz(&p, 0.5).unwrap(), 0.25);
        assert_eq!(eval_muntz(&p, 0.0).unwrap(), 0.0);

        let q = MuntzPolynomial::new(vec![(2.0, 1.0), (3.0, -1.0)]).unwrap();
        let v = eval_muntz(&q, 2.0 / 3.0).unwrap();
        assert!((v - 4.0 / 27.0).abs() < 1e-15);

        let r = MuntzPolynomial::monomial(2.5, 1.0).unwrap();
        assert!((eval_muntz(&r, 0.64).unwrap() - 0.32768).abs() < 1e-12);

        assert!(eval_muntz(&p, 1.5).is_err());
        assert!(eval_muntz(&p, -0.1).is_err());
    }

    #[test]
    fn sup_norm_muntz_difference() {
        // t^2 - t^2.5 peaks at t = (2/2.5)^2 = 0.64 with value 0.08192
        let (norm, argmax) = sup_norm(|t| t.powi(2) - t.powf(2.5), 1e-10).unwrap();
        assert!((norm - 0.08192).abs() < 1e-9);
        assert!((argmax - 0.64).abs() < 1e-4);
    }

    #[test]
    fn sup_norm_cos_and_zero() {
        let (norm, _) = sup_norm(|x| (2.0 * PI * x).cos(), 1e-9).unwrap();
        assert!((norm - 1.0).abs() < 1e-9);
        let (z, _) = sup_norm(|_| 0.0, 1e-9).unwrap();
        assert_eq!(z, 0.0);
    }

    #[test]
    fn sup_norm_witness_dominance() {
        let f = |t: f64| t.powi(2) - t.powf(2.5) + 0.3 * (7.0 * t).sin();
        let (norm, _) = sup_norm(f, 1e-9).unwrap();
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            assert!(norm >= f(x).abs() - 1e-9);
        }
    }

    #[test]
    fn integrate_basics() {
        assert!((integrate(|_| 1.0, 0.0, 1.0, 1e-12).unwrap() - 1.0).abs() < 1e-12);
        assert!((integrate(|t| t * t, 0.0, 1.0, 1e-12).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn integrate_abs_cos() {
        let v = integrate_abs(|t| (2.0 * PI * t).cos(), 0.0, 1.0, 1e-10).unwrap();
        assert!((v - 2.0 / PI).abs() < 1e-9);
    }

    #[test]
    fn integrate_linear_in_integrand() {
        let f = |t: f64| (3.0 * t).sin();
        let g = |t: f64| t.exp();
        let tol = 1e-10;
        let lhs = integrate(|t| 2.0 * f(t) - 0.5 * g(t), 0.0, 1.0, tol).unwrap();
        let rhs = 2.0 * integrate(f, 0.0, 1.0, tol).unwrap()
            - 0.5 * integrate(g, 0.0, 1.0, tol).unwrap();
        assert!((lhs - rhs).abs() <= 3.0 * tol);
    }

    #[test]
    fn substitution_identity_sup_norm() {
        // sup |p(t)| = sup |p(t^alpha)|
        let p = MuntzPolynomial::new(vec![(2.0, 1.0), (4.0, -1.0)]).unwrap();
        let refine = 1e-9;
        let (n1, _) = sup_norm(|t| p.eval(t).unwrap(), refine).unwrap();
        for alpha in [0.5, 1.0, 3.0] {
            let (n2, _) = sup_norm(|t| p.eval(t.powf(alpha)).unwrap(), refine).unwrap();
            assert!((n1 - n2).abs() <= 2.0 * refine, "alpha = {alpha}");
        }
    }

    #[test]
    fn muntz_sum_monotone_in_truncation() {
        let mut prev = 0.0;
        for n in 1..=50 {
            let seq = ExponentSequence::power(2.0, n).unwrap();
            let (a1, _) = muntz_sum(&seq);
            assert!(a1 >= prev);
            prev = a1;
        }
    }

    #[test]
    fn json_round_trip() {
        let seq = ExponentSequence::power(2.0, 5).unwrap();
        let j = seq.to_json();
        assert_eq!(j.rule, "power");
        assert_eq!(j.exponents, vec![1.0, 4.0, 9.0, 16.0, 25.0]);
        let back = ExponentSequence::from_json(&j).unwrap();
        assert_eq!(back, seq);
    }

    #[test]
    fn find_sign_changes_cos() {
        let roots = find_sign_changes(&|t: f64| (2.0 * PI * t).cos(), 0.0, 1.0, 512, 1e-13);
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - 0.25).abs() < 1e-12);
        assert!((roots[1] - 0.75).abs() < 1e-12);
    }
}
