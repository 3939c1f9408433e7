//! Truncated complex power series about the origin.
//!
//! A `TruncatedSeries` stores the coefficients `c_0..c_N` of an analytic germ
//! to order `N`. Binary operations truncate to the minimum operand order, so
//! no result ever carries fabricated high-order terms. All values are
//! immutable after construction and every operation is a pure function.

use num_complex::Complex64;

use crate::error::Error;

/// Default truncation order for coefficient computations.
pub const DEFAULT_ORDER: usize = 256;
/// Hard cap on truncation order.
pub const MAX_ORDER: usize = 4096;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Series from coefficients `c_0..c_N`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    /// Series from real coefficients (test and construction convenience).
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The constant series `c + 0·z + ...` to the given order.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut coeffs = vec![ZERO; order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The series `1` to the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// The monomial `c·z^m` to the given order (zero series if `m > order`).
    pub fn monomial(c: Complex64, m: usize, order: usize) -> Self {
        let mut coeffs = vec![ZERO; order + 1];
        if m <= order {
            coeffs[m] = c;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `c_n`; reads as zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    /// Coefficientwise sum, truncated to the minimum operand order.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i] + other.coeffs[i]).collect();
        Self { coeffs }
    }

    /// Coefficientwise difference, truncated to the minimum operand order.
    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i] - other.coeffs[i]).collect();
        Self { coeffs }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&x| c * x).collect(),
        }
    }

    /// Add a scalar to the constant term.
    pub fn add_scalar(&self, c: Complex64) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += c;
        Self { coeffs }
    }

    /// Cauchy product, truncated to the minimum operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![ZERO; n + 1];
        for (i, &a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Series quotient `r` with `other · r = self` up to the minimum order.
    ///
    /// Requires a nonzero constant term in the divisor.
    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        let t0 = other.coeffs[0];
        if t0.norm() == 0.0 {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order().min(other.order());
        let mut coeffs = vec![ZERO; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / t0;
        }
        Ok(Self { coeffs })
    }

    /// Series exponential via the derivative recurrence `e' = s'·e`.
    ///
    /// A nonzero constant term is allowed; the result scales by its scalar
    /// exponential.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![ZERO; n + 1];
        coeffs[0] = self.coeffs[0].exp();
        for m in 1..=n {
            // m·e_m = sum_{k=1}^{m} k·s_k·e_{m-k}
            let mut acc = ZERO;
            for k in 1..=m {
                acc += (k as f64) * self.coeffs[k] * coeffs[m - k];
            }
            coeffs[m] = acc / (m as f64);
        }
        Self { coeffs }
    }

    /// Principal series logarithm via `s·l' = s'`.
    ///
    /// The constant term must lie off the closed negative real axis.
    pub fn log(&self) -> Result<Self, Error> {
        let s0 = self.coeffs[0];
        if s0.im == 0.0 && s0.re <= 0.0 {
            return Err(Error::BranchCutViolation);
        }
        let n = self.order();
        let mut coeffs = vec![ZERO; n + 1];
        coeffs[0] = s0.ln();
        for m in 1..=n {
            // m·l_m·s_0 = m·s_m - sum_{j=1}^{m-1} (m-j)·s_j·l_{m-j}
            let mut acc = (m as f64) * self.coeffs[m];
            for j in 1..m {
                acc -= ((m - j) as f64) * self.coeffs[j] * coeffs[m - j];
            }
            coeffs[m] = acc / ((m as f64) * s0);
        }
        Ok(Self { coeffs })
    }

    /// Principal complex power `exp(exponent · log(self))`.
    pub fn pow_complex(&self, exponent: Complex64) -> Result<Self, Error> {
        Ok(self.log()?.scale(exponent).exp())
    }

    /// Primitive `∫_0^z (p(t) - 1)/t dt` of a series `p` with constant term 1.
    ///
    /// Coefficient `n` of the result is `p_n / n`; the constant term is 0.
    pub fn integrate_p_minus_one_over_t(&self) -> Result<Self, Error> {
        if (self.coeffs[0] - ONE).norm() > 1e-12 {
            return Err(Error::NotNormalized);
        }
        let n = self.order();
        let mut coeffs = vec![ZERO; n + 1];
        for m in 1..=n {
            coeffs[m] = self.coeffs[m] / (m as f64);
        }
        Ok(Self { coeffs })
    }

    /// Horner evaluation of the truncated polynomial at `z`.
    pub fn eval_at(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient rotation `c_n -> e^{i n θ} c_n` (the series of the rotated
    /// member `e^{-iθ}·s(e^{iθ}z)` up to the constant normalization).
    pub fn rotate(&self, theta: f64) -> Self {
        let step = Complex64::from_polar(1.0, theta);
        let mut w = ONE;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let out = w * c;
                w *= step;
                out
            })
            .collect();
        Self { coeffs }
    }
}
