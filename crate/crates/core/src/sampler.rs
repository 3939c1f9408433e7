//! Class-member construction from Schwarz functions and empirical
//! verification of the extremal area.
//!
//! A Schwarz function `w` (`w(0) = 0`, `|w| <= 1` on the disk) produces a
//! member of `S*(A,B)` through `zf'(z)/f(z) = (1 + A w(z))/(1 + B w(z))`;
//! the reciprocal series follows as `z/f = exp(-∫ (p-1)/t dt)`. The sampler
//! draws Schwarz specs from a seeded distribution, computes each member's
//! Dirichlet area, and reports the margin against the closed-form maximum.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::janowski::{area_integral, extremal_area, ClassParams};
use crate::series::{TruncatedSeries, MAX_ORDER};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Constructive recipe for a Schwarz function.
#[derive(Debug, Clone, PartialEq)]
pub enum SchwarzSpec {
    /// `w(z) = e^{iθ} z^m`, `m >= 1`.
    RotationMonomial { theta: f64, degree: usize },
    /// `w(z) = Σ a_j z^j` with `Σ |a_j| <= 1` (coefficients `a_1..a_d`).
    NormalizedPolynomial { coeffs: Vec<Complex64> },
    /// `w = outer ∘ inner`; composition preserves both Schwarz properties.
    Composed {
        outer: Box<SchwarzSpec>,
        inner: Box<SchwarzSpec>,
    },
}

/// Outcome of a maximality sampling run.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub n_samples: usize,
    pub r: f64,
    pub max_area: f64,
    pub extremal_value: f64,
    /// `extremal_value - max_area`; nonnegative up to truncation noise.
    pub margin: f64,
    pub worst_spec: SchwarzSpec,
    pub seed: u64,
}

/// Coefficients of the Schwarz function `w` to the given order. The
/// constant term is exactly zero.
pub fn schwarz_series(spec: &SchwarzSpec, order: usize) -> Result<TruncatedSeries, Error> {
    match spec {
        SchwarzSpec::RotationMonomial { theta, degree } => {
            if *degree < 1 {
                return Err(Error::InvalidParams(
                    "monomial degree must be at least 1".into(),
                ));
            }
            Ok(TruncatedSeries::monomial(
                Complex64::from_polar(1.0, *theta),
                *degree,
                order,
            ))
        }
        SchwarzSpec::NormalizedPolynomial { coeffs } => {
            let sum: f64 = coeffs.iter().map(|c| c.norm()).sum();
            if sum > 1.0 + 1e-12 {
                return Err(Error::NormViolation { sum });
            }
            let mut v = vec![ZERO; order + 1];
            for (j, &a) in coeffs.iter().enumerate() {
                if j + 1 <= order {
                    v[j + 1] = a;
                }
            }
            Ok(TruncatedSeries::new(v))
        }
        SchwarzSpec::Composed { outer, inner } => {
            let f = schwarz_series(outer, order)?;
            let g = schwarz_series(inner, order)?;
            Ok(compose(&f, &g))
        }
    }
}

/// Substitute `inner` (constant term zero) into `outer` by series Horner.
fn compose(outer: &TruncatedSeries, inner: &TruncatedSeries) -> TruncatedSeries {
    assert_eq!(inner.coeff(0), ZERO, "inner series must vanish at 0");
    let order = outer.order().min(inner.order());
    let mut acc = TruncatedSeries::constant(outer.coeff(order), order);
    for j in (0..order).rev() {
        acc = acc.mul(inner).add_scalar(outer.coeff(j));
    }
    acc
}

/// Reciprocal series `z/f` of the member induced by a Schwarz spec:
/// `b = exp(-∫ (p-1)/t dt)` with `p = (1 + A w)/(1 + B w)`.
pub fn build_member(
    params: &ClassParams,
    spec: &SchwarzSpec,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    let w = schwarz_series(spec, order)?;
    let num = w.scale(params.a()).add_scalar(ONE);
    let den = w
        .scale(Complex64::new(params.b(), 0.0))
        .add_scalar(ONE);
    // |B·w| < 1 on the open disk, so the denominator's constant term is 1.
    let p = num.div(&den)?;
    let primitive = p.integrate_p_minus_one_over_t()?;
    Ok(primitive.scale(-ONE).exp())
}

/// Dirichlet areas of the member for `spec` and for its θ-rotation
/// (`b_n -> e^{inθ} b_n`), at radius `r`.
pub fn rotation_check(
    params: &ClassParams,
    spec: &SchwarzSpec,
    theta: f64,
    r: f64,
) -> Result<(f64, f64), Error> {
    let b = build_member(params, spec, crate::series::DEFAULT_ORDER)?;
    let plain = area_integral(&b, r)?;
    let rotated = area_integral(&b.rotate(theta), r)?;
    Ok((plain.value, rotated.value))
}

// SplitMix64 finalizer; used to derive independent per-sample seeds.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Deterministic sub-seed for sample `index`; parallel and serial runs draw
/// identical specs.
fn sub_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}

fn next_f64(rng: &mut ChaCha8Rng) -> f64 {
    // 53 uniform bits in [0, 1).
    (rng.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
}

/// One spec from the documented distribution: mostly normalized polynomials
/// of degree <= 8 with random complex coefficients rescaled to a random
/// total mass in (0, 1], plus rotation monomials.
fn draw_spec(rng: &mut ChaCha8Rng) -> SchwarzSpec {
    if rng.next_u64() % 8 == 0 {
        SchwarzSpec::RotationMonomial {
            theta: 2.0 * std::f64::consts::PI * next_f64(rng),
            degree: 1 + (rng.next_u64() % 4) as usize,
        }
    } else {
        let degree = 1 + (rng.next_u64() % 8) as usize;
        let raw: Vec<Complex64> = (0..degree)
            .map(|_| {
                Complex64::new(2.0 * next_f64(rng) - 1.0, 2.0 * next_f64(rng) - 1.0)
            })
            .collect();
        let mass: f64 = 1.0 - next_f64(rng); // (0, 1]
        let total: f64 = raw.iter().map(|c| c.norm()).sum();
        if total == 0.0 {
            return SchwarzSpec::RotationMonomial {
                theta: 0.0,
                degree: 1,
            };
        }
        let scale = mass / total;
        SchwarzSpec::NormalizedPolynomial {
            coeffs: raw.into_iter().map(|c| c * scale).collect(),
        }
    }
}

/// Relative tail gate: a sample counts once its truncation tail estimate is
/// below `1e-10 · E`.
const TAIL_GATE: f64 = 1e-10;

/// Draw `n_samples` members, compute their areas at radius `r`, and compare
/// the maximum against the closed-form extremal value.
///
/// Sample 0 is always the extremal direction `w(z) = z`, so the reported
/// margin is tight. Deterministic for a fixed seed.
pub fn verify_maximality(
    params: &ClassParams,
    r: f64,
    n_samples: usize,
    seed: u64,
    order: usize,
) -> Result<SampleReport, Error> {
    if !(r > 0.0 && r <= 0.99) {
        return Err(Error::InvalidRadius(r));
    }
    if n_samples < 1 {
        return Err(Error::InvalidParams("need at least one sample".into()));
    }
    let extremal_value = extremal_area(params, r)?;

    let mut max_area = f64::NEG_INFINITY;
    let mut worst_spec = None;
    for i in 0..n_samples {
        let spec = if i == 0 {
            SchwarzSpec::RotationMonomial {
                theta: 0.0,
                degree: 1,
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, i as u64));
            draw_spec(&mut rng)
        };
        let area = area_with_tail_gate(params, &spec, r, order, extremal_value)?;
        if area > max_area {
            max_area = area;
            worst_spec = Some(spec);
        }
    }

    Ok(SampleReport {
        n_samples,
        r,
        max_area,
        extremal_value,
        margin: extremal_value - max_area,
        worst_spec: worst_spec.expect("n_samples >= 1"),
        seed,
    })
}

/// Area of one member, doubling the truncation order until the tail
/// estimate passes the gate (up to the hard cap).
fn area_with_tail_gate(
    params: &ClassParams,
    spec: &SchwarzSpec,
    r: f64,
    order: usize,
    extremal_value: f64,
) -> Result<f64, Error> {
    let mut current = order.max(1);
    loop {
        let b = build_member(params, spec, current)?;
        let area = area_integral(&b, r)?;
        if area.tail_estimate < TAIL_GATE * extremal_value {
            return Ok(area.value);
        }
        if current >= MAX_ORDER {
            return Err(Error::NoConvergence);
        }
        current = (current * 2).min(MAX_ORDER);
    }
}
