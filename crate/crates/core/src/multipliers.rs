//! Multiplier systems behind the partial-sum dominance inequality.
//!
//! For each truncation length `N` the weights `λ_{1,N}..λ_{N,N}` solve the
//! upper-triangular system
//!
//! ```text
//! k = k² λ_{k,N} + Σ_{n=k+1}^{N} λ_{n,N} · (k² - |k-φ|² B² r²),   k = 1..N,
//! ```
//!
//! (with `k² - |A|² r²` in place of the bracket when `B = 0`). Writing
//! `U_k = 1 - |1-φ/k|² B² r²` the bracket is `k² U_k`, the diagonal gives
//! `λ_{k,k} = 1/k`, and back-substitution with a running suffix sum solves a
//! column in linear time. Columns are also connected by the recurrence
//! `λ_{k,N} = λ_{k,N-1} - (1/N) U_k Π_{m=k+1}^{N-1} (1-U_m)`, which yields
//! the limit `λ_k = 1/k - U_k Σ_{n>k} (1/n) Π_{m=k+1}^{n-1} (1-U_m)`.

use crate::error::Error;
use crate::janowski::ClassParams;

/// `U_k = 1 - |1-φ/k|² B² r²` for `B < 0`, `1 - |A|² r² / k²` for `B = 0`.
pub fn compute_u(params: &ClassParams, r: f64, k: usize) -> f64 {
    assert!(k >= 1, "U_k is defined for k >= 1");
    assert!(r > 0.0 && r <= 1.0, "radius must lie in (0, 1]");
    let kf = k as f64;
    match params.phi() {
        None => 1.0 - params.a().norm_sqr() * r * r / (kf * kf),
        Some(phi) => {
            let b = params.b();
            1.0 - (1.0 - phi / kf).norm_sqr() * b * b * r * r
        }
    }
}

/// System coefficient `k² - |k-φ|² B² r²` (or `k² - |A|² r²` at `B = 0`);
/// equal to `k² U_k` up to rounding.
fn system_coefficient(params: &ClassParams, r: f64, k: usize) -> f64 {
    let kf = k as f64;
    match params.phi() {
        None => kf * kf - params.a().norm_sqr() * r * r,
        Some(phi) => {
            let b = params.b();
            kf * kf - (kf - phi).norm_sqr() * b * b * r * r
        }
    }
}

/// λ multipliers, the `U` sequence, and optional limit values for one
/// `(A, B, r, N)` configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierTable {
    params: ClassParams,
    r: f64,
    n: usize,
    /// `columns[j]` holds `λ_{1,j+1}..λ_{j+1,j+1}`.
    columns: Vec<Vec<f64>>,
    u: Vec<f64>,
    lambda_limits: Option<LambdaLimits>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LambdaLimits {
    pub values: Vec<f64>,
    pub tol: f64,
}

/// Sign pattern of the `U` sequence over `1..=N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    Positive,
    Negative,
    Mixed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityReport {
    pub u_sign: SignPattern,
    pub all_lambda_positive: bool,
    pub min_lambda: f64,
}

/// Diagnostics of the partial-sum bound `S_{k,P} + R_{k,P} < 1/(k U_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SBoundReport {
    pub s_partial: f64,
    pub remainder: f64,
    pub bound: f64,
    pub bound_holds: bool,
    /// Pairwise `1/(n U_n) > 1/((n+1) U_{n+1})` over the checked range.
    pub monotonicity_holds: bool,
}

impl MultiplierTable {
    pub fn params(&self) -> &ClassParams {
        &self.params
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `λ_{k,n}` for `1 <= k <= n <= N`.
    pub fn lambda(&self, k: usize, n: usize) -> f64 {
        assert!(1 <= k && k <= n && n <= self.n, "λ index out of range");
        self.columns[n - 1][k - 1]
    }

    /// The final column `λ_{1,N}..λ_{N,N}`.
    pub fn last_column(&self) -> &[f64] {
        &self.columns[self.n - 1]
    }

    /// `U_1..U_N`.
    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn lambda_limits(&self) -> Option<&LambdaLimits> {
        self.lambda_limits.as_ref()
    }

    /// Compute and attach `λ_k` limits for `k = 1..=N` at tolerance `tol`.
    pub fn with_lambda_limits(mut self, tol: f64) -> Result<Self, Error> {
        let values = (1..=self.n)
            .map(|k| lambda_limit(&self.params, self.r, k, tol))
            .collect::<Result<Vec<_>, _>>()?;
        self.lambda_limits = Some(LambdaLimits { values, tol });
        Ok(self)
    }

    pub fn positivity(&self) -> PositivityReport {
        let pos = self.u.iter().all(|&u| u > 0.0);
        let neg = self.u.iter().all(|&u| u < 0.0);
        let u_sign = if pos {
            SignPattern::Positive
        } else if neg {
            SignPattern::Negative
        } else {
            SignPattern::Mixed
        };
        let mut min_lambda = f64::INFINITY;
        for col in &self.columns {
            for &v in col {
                if v < min_lambda {
                    min_lambda = v;
                }
            }
        }
        PositivityReport {
            u_sign,
            all_lambda_positive: min_lambda > 0.0,
            min_lambda,
        }
    }
}

/// Solve the triangular systems for every column `N' = 1..=N` by
/// back-substitution (never by determinant expansion).
pub fn solve_lambda_system(params: &ClassParams, r: f64, n: usize) -> MultiplierTable {
    assert!(n >= 1);
    let u: Vec<f64> = (1..=n).map(|k| compute_u(params, r, k)).collect();
    let coef: Vec<f64> = (1..=n).map(|k| system_coefficient(params, r, k)).collect();
    let mut columns = Vec::with_capacity(n);
    for np in 1..=n {
        let mut col = vec![0.0; np];
        col[np - 1] = 1.0 / np as f64;
        let mut suffix = col[np - 1];
        for k in (1..np).rev() {
            let kf = k as f64;
            col[k - 1] = (kf - coef[k - 1] * suffix) / (kf * kf);
            suffix += col[k - 1];
        }
        columns.push(col);
    }
    MultiplierTable {
        params: *params,
        r,
        n,
        columns,
        u,
        lambda_limits: None,
    }
}

/// One step of the column recurrence:
/// `λ_{k,N} = λ_{k,N-1} - (1/N) U_k Π_{m=k+1}^{N-1} (1-U_m)`.
///
/// Requires `1 <= k <= N-1` and column `N-1` present in the table.
pub fn lambda_recurrence_step(table: &MultiplierTable, k: usize, n: usize) -> Result<f64, Error> {
    if k < 1 || n < 2 || k > n - 1 || n > table.n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let mut prod = 1.0;
    for m in (k + 1)..n {
        prod *= 1.0 - table.u[m - 1];
    }
    Ok(table.lambda(k, n - 1) - table.u[k - 1] * prod / n as f64)
}

const LIMIT_TERM_CAP: usize = 1_000_000;

/// Limit `λ_k = 1/k - U_k Σ_{n=k+1}^∞ (1/n) Π_{m=k+1}^{n-1} (1-U_m)`,
/// summed until the geometric tail estimate of the remaining increments
/// drops below `tol`.
pub fn lambda_limit(params: &ClassParams, r: f64, k: usize, tol: f64) -> Result<f64, Error> {
    assert!(k >= 1);
    let u_k = compute_u(params, r, k);
    let mut sum = 0.0;
    let mut prod = 1.0; // Π_{m=k+1}^{n-1} (1-U_m), empty at n = k+1
    let mut n = k + 1;
    loop {
        let term = prod / n as f64;
        sum += term;
        let factor = 1.0 - compute_u(params, r, n);
        // Per-step ratio of the next increment relative to this one.
        let ratio = factor * n as f64 / (n + 1) as f64;
        let increment = u_k.abs() * term;
        if increment == 0.0 {
            break;
        }
        if ratio < 1.0 {
            let capped = ratio.min(1.0 - 1e-9);
            if increment * capped / (1.0 - capped) < tol {
                break;
            }
        }
        prod *= factor;
        n += 1;
        if n - k > LIMIT_TERM_CAP {
            return Err(Error::NoConvergence);
        }
    }
    Ok(1.0 / k as f64 - u_k * sum)
}

/// Partial-sum split `S_{k,P} + R_{k,P}` against the bound `1/(k U_k)`,
/// with the pairwise monotonicity check of `1/(n U_n)`.
///
/// Requires `U_n > 0` for every `n` in `k..=P`.
pub fn s_bound_check(
    params: &ClassParams,
    r: f64,
    k: usize,
    p: usize,
) -> Result<SBoundReport, Error> {
    assert!(1 <= k && k <= p);
    let u: Vec<f64> = (k..=p).map(|n| compute_u(params, r, n)).collect();
    if let Some(i) = u.iter().position(|&un| un <= 0.0) {
        return Err(Error::NonpositiveU { n: k + i });
    }

    // S_{k,P} = Σ_{n=k}^{P} (1/n) Π_{m=k}^{n-1} (1-U_m)
    let mut s_partial = 0.0;
    let mut prod = 1.0;
    for n in k..=p {
        s_partial += prod / n as f64;
        prod *= 1.0 - u[n - k];
    }
    // R_{k,P} = Π_{m=k}^{P} (1-U_m) / (P U_P); prod now holds the product.
    let remainder = prod / (p as f64 * u[p - k]);

    let bound = 1.0 / (k as f64 * u[0]);
    let mut monotonicity_holds = true;
    for n in k..p {
        let lhs = 1.0 / (n as f64 * u[n - k]);
        let rhs = 1.0 / ((n + 1) as f64 * u[n + 1 - k]);
        if lhs <= rhs {
            monotonicity_holds = false;
            break;
        }
    }

    Ok(SBoundReport {
        s_partial,
        remainder,
        bound,
        bound_holds: s_partial + remainder < bound,
        monotonicity_holds,
    })
}

/// Max residual of the defining identity over the final column:
/// `max_k |k - (k² λ_{k,N} + Σ_{n>k} λ_{n,N} (k² - |k-φ|² B² r²))|`.
pub fn weighted_sum_identity_check(table: &MultiplierTable) -> f64 {
    weighted_sum_residual(table.params(), table.r(), table.last_column())
}

/// Residual of a candidate final column against the defining identity.
pub fn weighted_sum_residual(params: &ClassParams, r: f64, column: &[f64]) -> f64 {
    let n = column.len();
    let mut worst = 0.0f64;
    let mut suffix = 0.0;
    for k in (1..=n).rev() {
        let kf = k as f64;
        let coef = system_coefficient(params, r, k);
        let resid = (kf - (kf * kf * column[k - 1] + coef * suffix)).abs();
        worst = worst.max(resid);
        suffix += column[k - 1];
    }
    worst
}
