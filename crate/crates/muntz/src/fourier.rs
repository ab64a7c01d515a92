//! Fourier coefficients, partial sums, triangular summation methods, their
//! kernels, periodic convolution, and Lebesgue constants.
//!
//! Normalization convention: `a_k = 2 int_0^1 f(t) cos(2 pi k t) dt` (same
//! for `b_k` and `a_0`), so that partial sums reproduce trigonometric
//! polynomials exactly and the convolution carries the factor 2.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::core::{self, sup_norm};
use crate::error::{Error, Result};

/// Real 1-periodic trigonometric polynomial `a0/2 + sum_k (a_k cos(2 pi k x)
/// + b_k sin(2 pi k x))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigPolynomial {
    pub a0: f64,
    pub harmonics: Vec<(f64, f64)>,
}

impl TrigPolynomial {
    pub fn constant(c: f64) -> Self {
        Self {
            a0: 2.0 * c,
            harmonics: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn degree(&self) -> usize {
        self.harmonics.len()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut s = 0.5 * self.a0;
        for (k, &(a, b)) in self.harmonics.iter().enumerate() {
            let phase = 2.0 * PI * (k + 1) as f64 * x;
            let (sin, cos) = phase.sin_cos();
            s += a * cos + b * sin;
        }
        s
    }

    /// Drops trailing all-zero harmonic pairs.
    pub fn normalized(mut self) -> Self {
        while matches!(self.harmonics.last(), Some(&(a, b)) if a == 0.0 && b == 0.0) {
            self.harmonics.pop();
        }
        self
    }

    /// Harmonic `(a_k, b_k)`; zero beyond the stored degree.
    pub fn harmonic(&self, k: usize) -> (f64, f64) {
        if k == 0 || k > self.harmonics.len() {
            (0.0, 0.0)
        } else {
            self.harmonics[k - 1]
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            a0: c * self.a0,
            harmonics: self.harmonics.iter().map(|&(a, b)| (c * a, c * b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let deg = self.degree().max(other.degree());
        let mut harmonics = Vec::with_capacity(deg);
        for k in 1..=deg {
            let (a1, b1) = self.harmonic(k);
            let (a2, b2) = other.harmonic(k);
            harmonics.push((a1 + a2, b1 + b2));
        }
        Self {
            a0: self.a0 + other.a0,
            harmonics,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn sup_norm(&self, refine: f64) -> f64 {
        sup_norm(|x| self.eval(x), refine).map(|(n, _)| n).unwrap_or(f64::NAN)
    }
}

/// Named triangular summation methods plus explicit custom rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum SummationMatrix {
    /// `q_{n,k} = 1`: partial Fourier sums.
    Dirichlet,
    /// `q_{n,k} = 1 - k/(n+1)`: nonnegative kernel.
    Fejer,
    /// Flat up to `ceil(n/2)`, then linear decay to zero past `n`.
    ValleePoussin,
    Custom { rows: Vec<Vec<f64>> },
}

impl SummationMatrix {
    /// Row `n`: weights `q_{n,0..n}`.
    pub fn row(&self, n: usize) -> Result<Vec<f64>> {
        match self {
            SummationMatrix::Dirichlet => Ok(vec![1.0; n + 1]),
            SummationMatrix::Fejer => Ok((0..=n)
                .map(|k| 1.0 - k as f64 / (n + 1) as f64)
                .collect()),
            SummationMatrix::ValleePoussin => {
                let m = n.div_ceil(2);
                Ok((0..=n)
                    .map(|k| {
                        if k <= m {
                            1.0
                        } else {
                            (n + 1 - k) as f64 / (n + 1 - m) as f64
                        }
                    })
                    .collect())
            }
            SummationMatrix::Custom { rows } => rows
                .get(n)
                .cloned()
                .filter(|r| r.len() == n + 1)
                .ok_or(Error::MissingRow { n }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "provenance", rename_all = "lowercase")]
pub enum Provenance {
    Exact,
    Quadrature { tol: f64 },
}

/// Truncated Fourier coefficient vector with the normalization above.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierCoefficients {
    pub a0: f64,
    pub pairs: Vec<(f64, f64)>,
    pub provenance: Provenance,
}

impl FourierCoefficients {
    pub fn truncation(&self) -> usize {
        self.pairs.len()
    }

    /// Exact coefficients of a trigonometric polynomial.
    pub fn from_trig(p: &TrigPolynomial) -> Self {
        Self {
            a0: p.a0,
            pairs: p.harmonics.clone(),
            provenance: Provenance::Exact,
        }
    }

    pub fn pair(&self, k: usize) -> (f64, f64) {
        if k == 0 || k > self.pairs.len() {
            (0.0, 0.0)
        } else {
            self.pairs[k - 1]
        }
    }
}

/// Quadrature Fourier coefficients of a 1-periodic function, `k = 0..K`.
pub fn fourier_coefficients<F: Fn(f64) -> f64>(
    f: F,
    k_max: usize,
    tol: f64,
) -> Result<FourierCoefficients> {
    assert!(k_max >= 1);
    let a0 = 2.0 * core::integrate(&f, 0.0, 1.0, tol)?;
    let mut pairs = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let w = 2.0 * PI * k as f64;
        let a = 2.0 * core::integrate(|t| f(t) * (w * t).cos(), 0.0, 1.0, tol)?;
        let b = 2.0 * core::integrate(|t| f(t) * (w * t).sin(), 0.0, 1.0, tol)?;
        pairs.push((a, b));
    }
    Ok(FourierCoefficients {
        a0,
        pairs,
        provenance: Provenance::Quadrature { tol },
    })
}

/// Partial Fourier sum `S_n`: constant `a0/2` plus harmonics `1..n`.
pub fn partial_sum(c: &FourierCoefficients, n: usize) -> Result<TrigPolynomial> {
    if n > c.truncation() {
        return Err(Error::Truncation {
            n,
            k: c.truncation(),
        });
    }
    Ok(TrigPolynomial {
        a0: c.a0,
        harmonics: c.pairs[..n].to_vec(),
    })
}

/// Summation polynomial `U_n(f, x, Q)`: harmonic `k` weighted by `q_{n,k}`.
pub fn summation_apply(
    c: &FourierCoefficients,
    q: &SummationMatrix,
    n: usize,
) -> Result<TrigPolynomial> {
    if n > c.truncation() {
        return Err(Error::Truncation {
            n,
            k: c.truncation(),
        });
    }
    let row = q.row(n)?;
    let harmonics = (1..=n)
        .map(|k| {
            let (a, b) = c.pairs[k - 1];
            (row[k] * a, row[k] * b)
        })
        .collect();
    Ok(TrigPolynomial {
        a0: c.a0 * row[0],
        harmonics,
    })
}

/// Kernel `U_n(x, Q) = q_{n,0}/2 + sum_k q_{n,k} cos(2 pi k x)`.
pub fn kernel(q: &SummationMatrix, n: usize) -> Result<TrigPolynomial> {
    let row = q.row(n)?;
    Ok(TrigPolynomial {
        a0: row[0],
        harmonics: row[1..].iter().map(|&qk| (qk, 0.0)).collect(),
    })
}

/// Paper-normalized periodic convolution `(h*g)(x) = 2 int_0^1 h(x-t) g(t) dt`.
pub fn convolve_periodic<H, G>(h: H, g: G, x: f64, tol: f64) -> Result<f64>
where
    H: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    Ok(2.0 * core::integrate(|t| h(x - t) * g(t), 0.0, 1.0, tol)?)
}

/// Lebesgue constant `L_n(Q) = 2 int_0^1 |U_n(t, Q)| dt` with
/// sign-change-aware quadrature.
pub fn lebesgue_constant(q: &SummationMatrix, n: usize, tol: f64) -> Result<f64> {
    let ker = kernel(q, n)?;
    Ok(2.0 * core::integrate_abs(|t| ker.eval(t), 0.0, 1.0, 0.5 * tol)?)
}

/// One row of a convergence experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub error: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
    /// Errors never increase along `n_list`.
    pub monotone_nonincreasing: bool,
    /// Ratio of last to first error (decay diagnostic); NaN when degenerate.
    pub decay_ratio: f64,
}

/// Sup-norm errors `|| U_n(f) - f ||_C` over `n_list` for a continuous
/// 1-periodic `f`.
pub fn convergence_experiment<F: Fn(f64) -> f64>(
    f: F,
    q: &SummationMatrix,
    n_list: &[usize],
    tol: f64,
) -> Result<ConvergenceTable> {
    let k_max = n_list.iter().copied().max().unwrap_or(1).max(1);
    let coeffs = fourier_coefficients(&f, k_max, tol)?;
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let u = summation_apply(&coeffs, q, n)?;
        let (err, _) = sup_norm(|x| u.eval(x) - f(x), 1e-9)?;
        rows.push(ConvergenceRow { n, error: err });
    }
    let monotone = rows.windows(2).all(|w| w[1].error <= w[0].error + 1e-12);
    let decay_ratio = match (rows.first(), rows.last()) {
        (Some(a), Some(b)) if a.error > 0.0 => b.error / a.error,
        _ => f64::NAN,
    };
    Ok(ConvergenceTable {
        rows,
        monotone_nonincreasing: monotone,
        decay_ratio,
    })
}
