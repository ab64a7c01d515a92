//! The kernel `D_{psi,beta}`, psi-class validation, the Weil
//! `(psi,beta)`-derivative as a Fourier multiplier, its convolution inverse,
//! and the derivative-composition identity.
//!
//! The derivative acts on coefficient vectors, never on samples; sampling
//! happens only when a norm is requested.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::core::sup_norm;
use crate::error::{Error, Result};
use crate::fourier::{FourierCoefficients, TrigPolynomial};

/// Behaviour of a table-based weight beyond its stored length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableTail {
    /// psi(k) = 0 past the table: finitely supported, sums are exact.
    Zero,
    /// Unknown tail; class membership is undecidable from the truncation.
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PsiRule {
    /// psi(k) = k^(-r), r > 0.
    Power { r: f64 },
    /// psi(k) = 1/ln(k+1); the classic divergent-sum case.
    InverseLog,
    /// Explicit values for k = 1..len, with a tail rule.
    Table { values: Vec<f64>, tail: TableTail },
}

/// Weight sequence psi(k) with phase parameter beta and truncation K.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiWeight {
    pub rule: PsiRule,
    pub beta: f64,
    pub k_max: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PsiWeightJson {
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail: Option<String>,
    pub beta: f64,
    #[serde(rename = "K")]
    pub k_max: usize,
}

impl PsiWeight {
    pub fn power(r: f64, beta: f64, k_max: usize) -> Self {
        Self {
            rule: PsiRule::Power { r },
            beta,
            k_max,
        }
    }

    pub fn table(values: Vec<f64>, tail: TableTail, beta: f64) -> Self {
        let k_max = values.len();
        Self {
            rule: PsiRule::Table { values, tail },
            beta,
            k_max,
        }
    }

    pub fn inverse_log(beta: f64, k_max: usize) -> Self {
        Self {
            rule: PsiRule::InverseLog,
            beta,
            k_max,
        }
    }

    /// Weil-Nagy classical-derivative weight `psi(k) = (2 pi k)^(-1)`,
    /// `beta = 1`, expressed as a table.
    pub fn classical_derivative(k_max: usize) -> Self {
        let values = (1..=k_max).map(|k| 1.0 / (2.0 * PI * k as f64)).collect();
        Self::table(values, TableTail::None, 1.0)
    }

    pub fn psi(&self, k: usize) -> f64 {
        debug_assert!(k >= 1);
        match &self.rule {
            PsiRule::Power { r } => (k as f64).powf(-r),
            PsiRule::InverseLog => 1.0 / ((k + 1) as f64).ln(),
            PsiRule::Table { values, .. } => values.get(k - 1).copied().unwrap_or(0.0),
        }
    }

    pub fn phase(&self) -> f64 {
        self.beta * PI / 2.0
    }

    /// Whether the rule certifies `sum_k psi(k) < infinity`.
    fn absolutely_summable(&self) -> Option<bool> {
        match &self.rule {
            PsiRule::Power { r } => Some(*r > 1.0),
            PsiRule::InverseLog => Some(false),
            PsiRule::Table { tail: TableTail::Zero, .. } => Some(true),
            PsiRule::Table { tail: TableTail::None, .. } => None,
        }
    }

    /// Upper bound on `sum_{k > m} psi(k)` where the rule admits one.
    fn sum_tail_bound(&self, m: usize) -> f64 {
        match &self.rule {
            PsiRule::Power { r } if *r > 1.0 => (m as f64).powf(1.0 - r) / (r - 1.0),
            PsiRule::Table { tail: TableTail::Zero, values } if m >= values.len() => 0.0,
            _ => f64::INFINITY,
        }
    }

    pub fn to_json(&self) -> PsiWeightJson {
        let (rule, r, values, tail) = match &self.rule {
            PsiRule::Power { r } => ("power".to_string(), Some(*r), None, None),
            PsiRule::InverseLog => ("inverse-log".to_string(), None, None, None),
            PsiRule::Table { values, tail } => (
                "table".to_string(),
                None,
                Some(values.clone()),
                Some(match tail {
                    TableTail::Zero => "zero".to_string(),
                    TableTail::None => "none".to_string(),
                }),
            ),
        };
        PsiWeightJson {
            rule,
            r,
            values,
            tail,
            beta: self.beta,
            k_max: self.k_max,
        }
    }

    pub fn from_json(j: &PsiWeightJson) -> Result<Self> {
        let rule = match j.rule.as_str() {
            "power" => PsiRule::Power {
                r: j.r.ok_or_else(|| Error::Domain("power psi needs r".into()))?,
            },
            "inverse-log" => PsiRule::InverseLog,
            "table" => {
                let values = j
                    .values
                    .clone()
                    .ok_or_else(|| Error::Domain("table psi needs values".into()))?;
                let tail = match j.tail.as_deref() {
                    Some("zero") => TableTail::Zero,
                    Some("none") | None => TableTail::None,
                    Some(other) => {
                        return Err(Error::Domain(format!("unknown tail rule '{other}'")))
                    }
                };
                PsiRule::Table { values, tail }
            }
            other => return Err(Error::Domain(format!("unknown psi rule '{other}'"))),
        };
        Ok(PsiWeight {
            rule,
            beta: j.beta,
            k_max: j.k_max,
        })
    }
}

/// Report of the class-F1 membership checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PsiClassReport {
    pub in_f1: bool,
    pub positivity_ok: bool,
    pub convexity_ok: bool,
    pub sum_ok: bool,
    pub tail_method: String,
    pub sum_value: f64,
    pub sum_tail: f64,
}

/// Checks positivity, decay, convexity `Delta_2 psi >= 0`, and convergence
/// of `sum psi(k)/k` on the truncation plus a rule-based tail.
pub fn validate_psi_class(psi: &PsiWeight) -> Result<PsiClassReport> {
    let k_max = psi.k_max;
    if k_max < 3 {
        return Err(Error::Precondition("psi class check needs K >= 3".into()));
    }
    let positivity_ok = (1..=k_max).all(|k| psi.psi(k) > 0.0);
    let convexity_ok = (2..k_max)
        .all(|k| psi.psi(k - 1) - 2.0 * psi.psi(k) + psi.psi(k + 1) >= -1e-15);
    let sum_value: f64 = (1..=k_max).map(|k| psi.psi(k) / k as f64).sum();

    // rule-based verdict on sum psi(k)/k: integral test over the tail
    let (sum_ok, tail_method, sum_tail) = match &psi.rule {
        PsiRule::Power { r } if *r > 0.0 => {
            // sum k^(-1-r) tail <= int_K x^(-1-r) dx = K^(-r)/r
            (true, "integral".to_string(), (k_max as f64).powf(-r) / r)
        }
        PsiRule::Power { .. } => (false, "integral".to_string(), f64::INFINITY),
        // int dx/(x ln x) diverges
        PsiRule::InverseLog => (false, "integral".to_string(), f64::INFINITY),
        PsiRule::Table { tail: TableTail::Zero, .. } => (true, "finite-support".to_string(), 0.0),
        PsiRule::Table { tail: TableTail::None, .. } => {
            (false, "undecidable-tail".to_string(), f64::INFINITY)
        }
    };

    Ok(PsiClassReport {
        in_f1: positivity_ok && convexity_ok && sum_ok,
        positivity_ok,
        convexity_ok,
        sum_ok,
        tail_method,
        sum_value,
        sum_tail,
    })
}

/// Value of the kernel series at a point, with its tail certificate.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct KernelValue {
    pub value: f64,
    pub tail_bound: f64,
    pub certified: bool,
    pub terms_used: usize,
    pub diverging: bool,
}

const KERNEL_TERM_CAP: usize = 10_000_000;

/// Partial sum of `D_{psi,beta}(x) = sum_k psi(k) cos(2 pi k x + beta pi/2)`
/// with an Abel-summation tail estimate for monotone psi.
///
/// The term count grows from `psi.k_max` until the tail bound certifies
/// `tol`, or a hard cap flags the estimate.
pub fn dpsi_kernel(psi: &PsiWeight, x: f64, tol: f64) -> KernelValue {
    let phase = psi.phase();
    let sin_pix = (PI * x).sin().abs();

    // at integer x the series collapses to cos(phase) * sum psi(k)
    if sin_pix < 1e-12 {
        match psi.absolutely_summable() {
            Some(false) => {
                let c = phase.cos();
                if c.abs() < 1e-15 {
                    return KernelValue {
                        value: 0.0,
                        tail_bound: 0.0,
                        certified: true,
                        terms_used: 0,
                        diverging: false,
                    };
                }
                return KernelValue {
                    value: c.signum() * f64::INFINITY,
                    tail_bound: f64::INFINITY,
                    certified: false,
                    terms_used: 0,
                    diverging: true,
                };
            }
            _ => {} // summable (or unknown): fall through to the partial sum
        }
    }

    let mut k_terms = psi.k_max.max(16);
    loop {
        let tail_series = psi.sum_tail_bound(k_terms);
        let tail_abel = if sin_pix > 0.0 {
            2.0 * psi.psi(k_terms) / sin_pix
        } else {
            f64::INFINITY
        };
        let tail_bound = tail_series.min(tail_abel);
        if tail_bound < tol || k_terms >= KERNEL_TERM_CAP {
            let mut value = 0.0;
            for k in 1..=k_terms {
                value += psi.psi(k) * (2.0 * PI * k as f64 * x + phase).cos();
            }
            return KernelValue {
                value,
                tail_bound,
                certified: tail_bound < tol,
                terms_used: k_terms,
                diverging: false,
            };
        }
        k_terms = (k_terms * 2).min(KERNEL_TERM_CAP);
    }
}

/// Kernel truncated to `k_terms` harmonics as an explicit trigonometric
/// polynomial: `a_k = psi(k) cos(phase)`, `b_k = -psi(k) sin(phase)`.
pub fn dpsi_kernel_trig(psi: &PsiWeight, k_terms: usize) -> TrigPolynomial {
    let (sin_p, cos_p) = psi.phase().sin_cos();
    TrigPolynomial {
        a0: 0.0,
        harmonics: (1..=k_terms)
            .map(|k| (psi.psi(k) * cos_p, -psi.psi(k) * sin_p))
            .collect(),
    }
}

/// Kernel for the convolution representation
/// `f = a0/2 + 2 int f^psi_beta(x-t) K(t) dt`.
///
/// Under the factor-2 convolution the harmonic phases add, so inverting the
/// `+beta pi/2` rotation of the derivative needs the mirrored phase
/// `-beta pi/2` here. For `beta = 0` this coincides with [`dpsi_kernel_trig`].
pub fn representation_kernel_trig(psi: &PsiWeight, k_terms: usize) -> TrigPolynomial {
    let mirrored = PsiWeight {
        rule: psi.rule.clone(),
        beta: -psi.beta,
        k_max: psi.k_max,
    };
    dpsi_kernel_trig(&mirrored, k_terms)
}

/// Weil `(psi,beta)`-derivative as a Fourier multiplier: rotate each
/// harmonic phase by `beta pi/2` and divide by `psi(k)`. The constant term
/// is annihilated.
pub fn weil_derivative(c: &FourierCoefficients, psi: &PsiWeight) -> Result<FourierCoefficients> {
    let (sin_p, cos_p) = psi.phase().sin_cos();
    let mut pairs = Vec::with_capacity(c.pairs.len());
    for (i, &(a, b)) in c.pairs.iter().enumerate() {
        let k = i + 1;
        if a == 0.0 && b == 0.0 {
            pairs.push((0.0, 0.0));
            continue;
        }
        let p = psi.psi(k);
        if p == 0.0 {
            return Err(Error::PsiZero { k });
        }
        pairs.push(((a * cos_p + b * sin_p) / p, (-a * sin_p + b * cos_p) / p));
    }
    Ok(FourierCoefficients {
        a0: 0.0,
        pairs,
        provenance: c.provenance,
    })
}

/// Inverse multiplier: multiply by `psi(k)`, rotate phase by `-beta pi/2`,
/// restore the constant term `a0`.
pub fn weil_reconstruct(
    d: &FourierCoefficients,
    psi: &PsiWeight,
    a0: f64,
) -> Result<FourierCoefficients> {
    if d.a0 != 0.0 {
        return Err(Error::Precondition(
            "weil_reconstruct expects a zero constant term".into(),
        ));
    }
    let (sin_p, cos_p) = psi.phase().sin_cos();
    let pairs = d
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let p = psi.psi(i + 1);
            ((a * cos_p - b * sin_p) * p, (a * sin_p + b * cos_p) * p)
        })
        .collect();
    Ok(FourierCoefficients {
        a0,
        pairs,
        provenance: d.provenance,
    })
}

/// `|| f ||_{C^psi_beta}`: sup norm of the synthesized Weil derivative.
pub fn weil_nagy_norm(c: &FourierCoefficients, psi: &PsiWeight, tol: f64) -> Result<f64> {
    let d = weil_derivative(c, psi)?;
    let poly = TrigPolynomial {
        a0: d.a0,
        harmonics: d.pairs.clone(),
    };
    let (norm, _) = sup_norm(|x| poly.eval(x), tol)?;
    Ok(norm)
}

/// Two-path check of the composed-derivative identity: applying
/// `(psi2/psi1, beta2 - beta1)` after `(psi1, beta1)` must agree with
/// `(psi2, beta2)` directly. Returns the max coefficient discrepancy.
pub fn compose_property_check(
    c: &FourierCoefficients,
    psi1: &PsiWeight,
    psi2: &PsiWeight,
) -> Result<f64> {
    let direct = weil_derivative(c, psi2)?;

    let stage1 = weil_derivative(c, psi1)?;
    let quotient = PsiWeight::table(
        (1..=c.truncation())
            .map(|k| psi2.psi(k) / psi1.psi(k))
            .collect(),
        TableTail::None,
        psi2.beta - psi1.beta,
    );
    let two_step = weil_derivative(&stage1, &quotient)?;

    let mut max_diff = (direct.a0 - two_step.a0).abs();
    for (p, q) in direct.pairs.iter().zip(&two_step.pairs) {
        max_diff = max_diff.max((p.0 - q.0).abs()).max((p.1 - q.1).abs());
    }
    Ok(max_diff)
}
