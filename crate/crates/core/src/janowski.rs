//! Class parameters, extremal coefficients, and Dirichlet areas.
//!
//! For `f` in `S*(A,B)` write `z/f(z) = 1 + Σ b_n z^n`. The Dirichlet area
//! of `z/f` over `|z| < r` is `π Σ n |b_n|² r^{2n}` (Parseval), and its
//! maximum over the class is attained by the extremal function
//!
//! ```text
//! k_{A,B}(z) = z e^{Az}            (B = 0)
//!              z (1+Bz)^{A/B - 1}  (B != 0)
//! ```
//!
//! with closed-form value `E_{A,B}(r)` in terms of `0F1`/`2F1`.

use num_complex::Complex64;

use crate::error::Error;
use crate::series::TruncatedSeries;
use crate::special::{gauss_at_one, hyp_0f1, hyp_2f1};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The pair `(A, B)` defining `S*(A,B)`: complex `A`, real `B` in `[-1, 0]`,
/// `A != B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    a: Complex64,
    b: f64,
}

impl ClassParams {
    pub fn new(a: Complex64, b: f64) -> Result<Self, Error> {
        if !(-1.0..=0.0).contains(&b) {
            return Err(Error::InvalidParams(format!(
                "B must lie in [-1, 0], got {b}"
            )));
        }
        if a == Complex64::new(b, 0.0) {
            return Err(Error::InvalidParams("A must differ from B".into()));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `φ = 1 - A/B`, defined only when `B != 0`.
    pub fn phi(&self) -> Option<Complex64> {
        (self.b != 0.0).then(|| ONE - self.a / self.b)
    }

    /// `ζ = A/B - 1`, defined only when `B != 0`.
    pub fn zeta(&self) -> Option<Complex64> {
        (self.b != 0.0).then(|| self.a / self.b - ONE)
    }
}

/// Named parameter choices for the classical subclasses.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassPreset {
    /// `S*(1,-1)`: starlike functions.
    Starlike,
    /// `S*(1-2β,-1)`: starlike of order `β in [0,1)`.
    StarlikeOfOrder(f64),
    /// `S*(1,0)`: `|zf'/f - 1| < 1`.
    S10,
    /// `S*(α,-α)` = `T(α)`, `α in (0,1]`.
    TAlpha(f64),
    /// `S*(1, 1/α - 1)`, `α >= 1` so that `B <= 0`.
    SinghSingh(f64),
    /// `S*((b²-a²+a)/b, (1-a)/b)` with `a+b >= 1`, `a in [b, 1+b]`.
    Silverman { a: f64, b: f64 },
    /// `S*((1-2β)α, -α)` = `T(α,β)`.
    TAlphaBeta { alpha: f64, beta: f64 },
    /// `α`-spirallike of order `β`: `A = e^{iα}(e^{iα} - 2β cos α)`, `B = -1`.
    Spirallike { alpha: f64, beta: f64 },
}

impl ClassPreset {
    pub fn resolve(&self) -> Result<ClassParams, Error> {
        match *self {
            ClassPreset::Starlike => ClassParams::new(ONE, -1.0),
            ClassPreset::StarlikeOfOrder(beta) => {
                if !(0.0..1.0).contains(&beta) {
                    return Err(Error::InvalidParams(format!(
                        "order β must lie in [0,1), got {beta}"
                    )));
                }
                ClassParams::new(Complex64::new(1.0 - 2.0 * beta, 0.0), -1.0)
            }
            ClassPreset::S10 => ClassParams::new(ONE, 0.0),
            ClassPreset::TAlpha(alpha) => {
                if !(alpha > 0.0 && alpha <= 1.0) {
                    return Err(Error::InvalidParams(format!(
                        "T(α) needs α in (0,1], got {alpha}"
                    )));
                }
                ClassParams::new(Complex64::new(alpha, 0.0), -alpha)
            }
            ClassPreset::SinghSingh(alpha) => {
                if alpha < 0.5 {
                    return Err(Error::InvalidParams(format!(
                        "Singh-Singh preset needs α >= 1/2, got {alpha}"
                    )));
                }
                // B = 1/α - 1 must stay in [-1, 0]; the constructor rejects
                // α < 1 where it would be positive.
                ClassParams::new(ONE, 1.0 / alpha - 1.0)
            }
            ClassPreset::Silverman { a, b } => {
                if !(a + b >= 1.0 && a >= b && a <= 1.0 + b && b > 0.0) {
                    return Err(Error::InvalidParams(format!(
                        "Silverman preset needs a+b >= 1, a in [b, 1+b], b > 0; got a={a}, b={b}"
                    )));
                }
                ClassParams::new(
                    Complex64::new((b * b - a * a + a) / b, 0.0),
                    (1.0 - a) / b,
                )
            }
            ClassPreset::TAlphaBeta { alpha, beta } => {
                if !(alpha > 0.0 && alpha <= 1.0) || !(0.0..1.0).contains(&beta) {
                    return Err(Error::InvalidParams(format!(
                        "T(α,β) needs α in (0,1], β in [0,1); got α={alpha}, β={beta}"
                    )));
                }
                ClassParams::new(Complex64::new((1.0 - 2.0 * beta) * alpha, 0.0), -alpha)
            }
            ClassPreset::Spirallike { alpha, beta } => {
                if beta >= 1.0 {
                    return Err(Error::InvalidParams(format!(
                        "spirallike preset needs β < 1, got {beta}"
                    )));
                }
                if !(-std::f64::consts::FRAC_PI_2..=std::f64::consts::FRAC_PI_2)
                    .contains(&alpha)
                    || alpha.abs() == std::f64::consts::FRAC_PI_2
                {
                    return Err(Error::InvalidParams(format!(
                        "spirallike preset needs α in (-π/2, π/2), got {alpha}"
                    )));
                }
                let e = Complex64::from_polar(1.0, alpha);
                let a = e * (e - 2.0 * beta * alpha.cos());
                ClassParams::new(a, -1.0)
            }
        }
    }
}

/// Dirichlet area value with truncation metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct AreaResult {
    /// `π Σ_{n=1}^{N} n |b_n|² r^{2n}` (the π factor included).
    pub value: f64,
    pub partial_terms: usize,
    /// Geometric extrapolation of the omitted tail from the last nonzero
    /// term ratio.
    pub tail_estimate: f64,
}

/// Evaluation route taken by [`extremal_area`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaMethod {
    /// Hypergeometric series summation.
    Series,
    /// Gauss closed form at unit argument (`r = 1`, `B = -1`).
    Gauss,
}

/// Coefficients of `z/k_{A,B}`, i.e. `e^{-Az}` (B = 0) or
/// `(1+Bz)^{1-A/B}` (B != 0), to the given order.
///
/// Coefficient `n` is `(-1)^n A^n / n!` in the first case and
/// `(-1)^n (ζ)_n B^n / n!` with `ζ = A/B - 1` in the second.
pub fn extremal_reciprocal_series(params: &ClassParams, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![ZERO; order + 1];
    coeffs[0] = ONE;
    if params.b == 0.0 {
        for n in 1..=order {
            coeffs[n] = coeffs[n - 1] * (-params.a) / (n as f64);
        }
    } else {
        let zeta = params.zeta().expect("B != 0");
        for n in 1..=order {
            let nf = n as f64;
            coeffs[n] = coeffs[n - 1] * (-params.b) * (zeta + (nf - 1.0)) / nf;
        }
    }
    TruncatedSeries::new(coeffs)
}

/// Dirichlet area `π Σ_{n>=1} n |b_n|² r^{2n}` of the truncated series `b`
/// (constant term ignored), with a geometric tail estimate.
pub fn area_integral(b: &TruncatedSeries, r: f64) -> Result<AreaResult, Error> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidRadius(r));
    }
    let order = b.order();
    let r2 = r * r;
    let mut sum = 0.0;
    let mut rpow = 1.0;
    let mut terms = Vec::with_capacity(order);
    for n in 1..=order {
        rpow *= r2;
        let t = (n as f64) * b.coeff(n).norm_sqr() * rpow;
        terms.push(t);
        sum += t;
    }

    // Tail: per-step geometric ratio estimated from the last two nonzero
    // terms, continued past the truncation point.
    let mut tail = 0.0;
    if let Some(m) = terms.iter().rposition(|&t| t > 0.0) {
        if let Some(j) = terms[..m].iter().rposition(|&t| t > 0.0) {
            let rho = (terms[m] / terms[j]).powf(1.0 / (m - j) as f64);
            if rho < 1.0 {
                tail = terms[m] * rho.powi((order - 1 - m) as i32 + 1) / (1.0 - rho);
            } else {
                tail = terms[m];
            }
        } else {
            // Single nonzero term: fall back to the guaranteed r² decay.
            tail = terms[m] * r2.powi((order - 1 - m) as i32 + 1) / (1.0 - r2).max(1e-300);
        }
    }

    Ok(AreaResult {
        value: std::f64::consts::PI * sum,
        partial_terms: order,
        tail_estimate: std::f64::consts::PI * tail,
    })
}

/// Closed-form maximal area `E_{A,B}(r)` with the route that produced it.
pub fn extremal_area_with_method(
    params: &ClassParams,
    r: f64,
) -> Result<(f64, AreaMethod), Error> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::InvalidRadius(r));
    }
    let pi = std::f64::consts::PI;
    if params.b == 0.0 {
        // E depends on A only through |A|; the B = 0 theorem needs 0 < |A| <= 1.
        let a_abs = params.a.norm();
        if a_abs > 1.0 {
            return Err(Error::InvalidParams(format!(
                "the B = 0 evaluation requires 0 < |A| <= 1, got |A| = {a_abs}"
            )));
        }
        let x = a_abs * a_abs * r * r;
        let f = hyp_0f1(Complex64::new(2.0, 0.0), Complex64::new(x, 0.0))?;
        return Ok((pi * a_abs * a_abs * r * r * f.value.re, AreaMethod::Series));
    }

    let prefactor = (params.a.conj() - params.b).norm_sqr() * r * r;
    let x = params.b * params.b * r * r;
    let fa = params.a / params.b;
    let fb = params.a.conj() / params.b;
    let c = Complex64::new(2.0, 0.0);
    if x == 1.0 {
        // r = 1, B = -1: finite only when Re A > -1.
        if params.a.re <= -1.0 {
            return Err(Error::DivergentArea);
        }
        let v = gauss_at_one(fa, fb, c)?;
        Ok((pi * prefactor * v.re, AreaMethod::Gauss))
    } else {
        let f = hyp_2f1(fa, fb, c, x)?;
        Ok((pi * prefactor * f.value.re, AreaMethod::Series))
    }
}

/// Closed-form maximal area `E_{A,B}(r)`.
pub fn extremal_area(params: &ClassParams, r: f64) -> Result<f64, Error> {
    extremal_area_with_method(params, r).map(|(v, _)| v)
}

/// Truncated coefficient-inequality functional
/// `Σ_{k<=N} (k² - |B-A-kB|²) |b_k|² - |A-B|²`; at most 0 (up to truncation)
/// for the reciprocal series of a class member.
pub fn lemma1_functional(b: &TruncatedSeries, params: &ClassParams, terms: usize) -> f64 {
    let n = terms.min(b.order());
    let a = params.a;
    let bb = params.b;
    let mut sum = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        let weight = kf * kf - (Complex64::new(bb - kf * bb, 0.0) - a).norm_sqr();
        sum += weight * b.coeff(k).norm_sqr();
    }
    sum - (a - Complex64::new(bb, 0.0)).norm_sqr()
}

/// Image of the unit disk under `(1+Az)/(1+Bz)`.
#[derive(Debug, Clone, PartialEq)]
pub enum PImage {
    /// `-1 < B <= 0`: the disk `|w - center| < radius`.
    Disk { center: Complex64, radius: f64 },
    /// `B = -1`, `A != 1`: the half-plane `Re(normal·w) > offset`.
    HalfPlane { normal: Complex64, offset: f64 },
    /// `B = -1`, `A = 1`: the Cayley transform onto `Re w > 0`; the general
    /// half-plane formula excludes this case, the limiting values are kept.
    Degenerate { normal: Complex64, offset: f64 },
}

/// Geometric descriptor of the region that `zf'/f` ranges over.
pub fn p_image_descriptor(params: &ClassParams) -> PImage {
    let a = params.a;
    let b = params.b;
    if b > -1.0 {
        PImage::Disk {
            center: (ONE - a.conj() * b) / (1.0 - b * b),
            radius: (a - b).norm() / (1.0 - b * b),
        }
    } else {
        let normal = ONE + a.conj();
        let offset = (1.0 - a.norm_sqr()) / 2.0;
        if a == ONE {
            PImage::Degenerate { normal, offset }
        } else {
            PImage::HalfPlane { normal, offset }
        }
    }
}

/// Boundary value `g_{A,B}(ρ e^{iθ})` of the extremal reciprocal
/// `g_{A,B} = z/k_{A,B}`, evaluated pointwise on the principal branch.
pub fn boundary_point(params: &ClassParams, rho: f64, theta: f64) -> Complex64 {
    let z = Complex64::from_polar(rho, theta);
    if params.b == 0.0 {
        (-params.a * z).exp()
    } else {
        let base = ONE + params.b * z;
        let exponent = ONE - params.a / params.b;
        base.powc(exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(re: f64, im: f64, b: f64) -> ClassParams {
        ClassParams::new(c64(re, im), b).unwrap()
    }

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn params_validation() {
        assert!(ClassParams::new(ONE, -1.0).is_ok());
        assert!(ClassParams::new(ONE, 0.1).is_err());
        assert!(ClassParams::new(ONE, -1.1).is_err());
        assert!(ClassParams::new(c64(-0.5, 0.0), -0.5).is_err()); // A == B
        let p = params(0.5, 0.5, -0.5);
        assert_eq!(p.phi().unwrap(), ONE - c64(0.5, 0.5) / (-0.5));
        assert_eq!(p.zeta().unwrap(), -p.phi().unwrap());
        assert_eq!(params(1.0, 0.0, 0.0).phi(), None);
    }

    #[test]
    fn presets_resolve_per_catalog() {
        assert_eq!(
            ClassPreset::Starlike.resolve().unwrap(),
            params(1.0, 0.0, -1.0)
        );
        assert_eq!(
            ClassPreset::StarlikeOfOrder(0.25).resolve().unwrap(),
            params(0.5, 0.0, -1.0)
        );
        assert_eq!(ClassPreset::S10.resolve().unwrap(), params(1.0, 0.0, 0.0));
        assert_eq!(
            ClassPreset::TAlpha(0.5).resolve().unwrap(),
            params(0.5, 0.0, -0.5)
        );
        assert_eq!(
            ClassPreset::SinghSingh(2.0).resolve().unwrap(),
            params(1.0, 0.0, -0.5)
        );
        // α in [1/2, 1) would give B > 0: rejected by the class constraint.
        assert!(ClassPreset::SinghSingh(0.75).resolve().is_err());

        let p = ClassPreset::Silverman { a: 1.2, b: 0.9 }.resolve().unwrap();
        assert!((p.a().re - (0.81 - 1.44 + 1.2) / 0.9).abs() < 1e-15);
        assert!((p.b() - (1.0 - 1.2) / 0.9).abs() < 1e-15);

        let p = ClassPreset::TAlphaBeta {
            alpha: 0.5,
            beta: 0.25,
        }
        .resolve()
        .unwrap();
        assert_eq!(p, params(0.25, 0.0, -0.5));

        // Spirallike with α = π/4, β = 1/2 resolves to A = (-1+i)/2.
        let p = ClassPreset::Spirallike {
            alpha: PI / 4.0,
            beta: 0.5,
        }
        .resolve()
        .unwrap();
        assert!((p.a() - c64(-0.5, 0.5)).norm() < 1e-15);
        assert_eq!(p.b(), -1.0);
    }

    #[test]
    fn extremal_series_examples() {
        // B = 0, A = 1: coefficients (-1)^n / n!.
        let s = extremal_reciprocal_series(&params(1.0, 0.0, 0.0), 8);
        let mut fact = 1.0;
        for n in 0..=8 {
            if n > 0 {
                fact *= n as f64;
            }
            let expected = if n % 2 == 0 { 1.0 / fact } else { -1.0 / fact };
            assert!((s.coeff(n) - c64(expected, 0.0)).norm() < 1e-15);
        }

        // β = 1/2 starlike-of-order: z/k = 1 - z.
        let s = extremal_reciprocal_series(&params(0.0, 0.0, -1.0), 5);
        assert!((s.coeff(0) - ONE).norm() < 1e-15);
        assert!((s.coeff(1) + ONE).norm() < 1e-15);
        for n in 2..=5 {
            assert_eq!(s.coeff(n), ZERO);
        }

        // A = α, B = -α: z/k = (1 - αz)².
        let alpha = 0.7;
        let s = extremal_reciprocal_series(&params(alpha, 0.0, -alpha), 5);
        assert!((s.coeff(1) - c64(-2.0 * alpha, 0.0)).norm() < 1e-15);
        assert!((s.coeff(2) - c64(alpha * alpha, 0.0)).norm() < 1e-15);
        for n in 3..=5 {
            assert!(s.coeff(n).norm() < 1e-18);
        }
    }

    #[test]
    fn area_integral_examples() {
        // f = z: zero area.
        let b = TruncatedSeries::one(4);
        let a = area_integral(&b, 0.5).unwrap();
        assert_eq!(a.value, 0.0);

        // b = 1 - z²: area 2π r⁴ (single Parseval term).
        let b = TruncatedSeries::from_real(&[1.0, 0.0, -1.0]);
        for &r in &[0.25, 0.5, 1.0] {
            let a = area_integral(&b, r).unwrap();
            assert!((a.value - 2.0 * PI * r.powi(4)).abs() < 1e-14);
        }

        // z/k_{1,-1} = (1-z)² at r = 1: π(1·4 + 2·1) = 6π.
        let b = extremal_reciprocal_series(&params(1.0, 0.0, -1.0), 16);
        let a = area_integral(&b, 1.0).unwrap();
        assert!((a.value - 6.0 * PI).abs() < 1e-12);

        assert_eq!(area_integral(&b, 0.0), Err(Error::InvalidRadius(0.0)));
        assert_eq!(area_integral(&b, 1.5), Err(Error::InvalidRadius(1.5)));
    }

    #[test]
    fn extremal_area_table_values() {
        // E_{5/6,0}(1), mpmath reference 3.0321131961899978.
        let (v, m) = extremal_area_with_method(&params(5.0 / 6.0, 0.0, 0.0), 1.0).unwrap();
        assert!((v - 3.0321131961899978).abs() < 1e-12);
        assert_eq!(m, AreaMethod::Series);

        // Yamashita value: E_{0,-1}(r) = π r².
        for &r in &[0.2, 0.5, 1.0] {
            let (v, _) = extremal_area_with_method(&params(0.0, 0.0, -1.0), r).unwrap();
            assert!((v - PI * r * r).abs() < 1e-13);
        }
        let (_, m) = extremal_area_with_method(&params(0.0, 0.0, -1.0), 1.0).unwrap();
        assert_eq!(m, AreaMethod::Gauss);

        // E_{α,-α}(r) = 2π α² r² (2 + α² r²).
        for &alpha in &[0.25, 0.5, 1.0] {
            for &r in &[0.3, 0.7, 1.0] {
                let v = extremal_area(&params(alpha, 0.0, -alpha), r).unwrap();
                let a2r2 = alpha * alpha * r * r;
                assert!((v - 2.0 * PI * a2r2 * (2.0 + a2r2)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn extremal_area_guards() {
        // Divergent at r = 1, B = -1, Re A <= -1.
        assert_eq!(
            extremal_area(&params(-1.5, 0.0, -1.0), 1.0),
            Err(Error::DivergentArea)
        );
        assert_eq!(
            extremal_area(&params(-1.0, 2.0, -1.0), 1.0),
            Err(Error::DivergentArea)
        );
        // Same parameters at r < 1 are fine.
        assert!(extremal_area(&params(-1.5, 0.0, -1.0), 0.9).is_ok());

        // B = 0 path requires |A| <= 1.
        assert!(matches!(
            extremal_area(&params(1.5, 0.0, 0.0), 0.5),
            Err(Error::InvalidParams(_))
        ));

        assert_eq!(
            extremal_area(&params(1.0, 0.0, -1.0), -0.5),
            Err(Error::InvalidRadius(-0.5))
        );
    }

    #[test]
    fn lemma1_functional_examples() {
        // b = [1] (f = z, member of every class): value is -|A-B|².
        let p = params(0.5, 0.3, -0.5);
        let b = TruncatedSeries::one(4);
        let expected = -(c64(0.5, 0.3) - c64(-0.5, 0.0)).norm_sqr();
        assert!((lemma1_functional(&b, &p, 4) - expected).abs() < 1e-15);

        // Extremal series for (1,0), 200 terms: at most 0.
        let p = params(1.0, 0.0, 0.0);
        let b = extremal_reciprocal_series(&p, 200);
        let v = lemma1_functional(&b, &p, 200);
        assert!(v <= 0.0, "got {v}");
    }

    #[test]
    fn p_image_cases() {
        // (1, 0): disk of center 1, radius 1.
        match p_image_descriptor(&params(1.0, 0.0, 0.0)) {
            PImage::Disk { center, radius } => {
                assert!((center - ONE).norm() < 1e-15);
                assert!((radius - 1.0).abs() < 1e-15);
            }
            other => panic!("expected disk, got {other:?}"),
        }

        // (1, -1): Cayley case flagged separately.
        match p_image_descriptor(&params(1.0, 0.0, -1.0)) {
            PImage::Degenerate { normal, offset } => {
                assert!((normal - c64(2.0, 0.0)).norm() < 1e-15);
                assert_eq!(offset, 0.0);
            }
            other => panic!("expected degenerate half-plane, got {other:?}"),
        }

        // Spirallike: normalizing Re((1+conj(A))w) > (1-|A|²)/2 by the
        // positive factor 2 cos α (1-β) gives Re(e^{-iα} w) > β cos α.
        let alpha = PI / 5.0;
        let beta = 0.3;
        let p = ClassPreset::Spirallike { alpha, beta }.resolve().unwrap();
        match p_image_descriptor(&p) {
            PImage::HalfPlane { normal, offset } => {
                let factor = 2.0 * alpha.cos() * (1.0 - beta);
                assert!((normal / factor - Complex64::from_polar(1.0, -alpha)).norm() < 1e-14);
                assert!((offset / factor - beta * alpha.cos()).abs() < 1e-14);
            }
            other => panic!("expected half-plane, got {other:?}"),
        }
    }

    #[test]
    fn boundary_point_examples() {
        // g_{0,-1}: the circle 1 - ρ e^{iθ}.
        let p = params(0.0, 0.0, -1.0);
        let rho = 0.999;
        for k in 0..16 {
            let theta = 2.0 * PI * (k as f64) / 16.0;
            let w = boundary_point(&p, rho, theta);
            assert!(((w - ONE).norm() - rho).abs() < 1e-12);
        }

        // g_{5/6,0} on the real axis: e^{∓5ρ/6}.
        let p = params(5.0 / 6.0, 0.0, 0.0);
        let w0 = boundary_point(&p, rho, 0.0);
        let wpi = boundary_point(&p, rho, PI);
        assert!((w0 - c64((-5.0 * rho / 6.0).exp(), 0.0)).norm() < 1e-12);
        assert!((wpi - c64((5.0 * rho / 6.0).exp(), 0.0)).norm() < 1e-12);
    }
}
