//! The cos- and sin-like pair of a generalized complex unit.
//!
//! `e^{hφ} = C(φ) + h·S(φ)` with `C(φ) = Σ aₙφⁿ/n!` and `S(φ) = Σ bₙφⁿ/n!`,
//! where `(aₙ, bₙ)` are the power coefficients of the unit. The series is
//! the definition; the closed form through `h±` is checked against it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::{BigRational, GaussianRational};
use crate::gcn::{conjugate_roots, power_sequence, GcnUnit};

pub const DEFAULT_TOL: f64 = 1e-12;

/// Values of `C` and `S` at one angle.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct EulerPair {
    pub phi: f64,
    pub c: f64,
    pub s: f64,
    /// Series terms summed; zero for closed-form values.
    pub terms: usize,
}

fn to_f64(r: &BigRational) -> f64 {
    GaussianRational::real(r.clone()).to_complex().re
}

/// Series evaluator holding the power coefficients of one unit in double
/// precision. Coefficients are produced exactly and converted once.
#[derive(Clone, Debug)]
pub struct EulerSeries {
    unit: GcnUnit<BigRational>,
    a: Vec<f64>,
    b: Vec<f64>,
    /// `max(|a|, 1 + |b|)`; `|aₙ|, |bₙ| ≤ Kⁿ` by induction on the recurrence.
    growth: f64,
}

impl EulerSeries {
    pub fn new(unit: &GcnUnit<BigRational>) -> Self {
        let growth = to_f64(&unit.a).abs().max(1.0 + to_f64(&unit.b).abs());
        Self {
            unit: unit.clone(),
            a: Vec::new(),
            b: Vec::new(),
            growth,
        }
    }

    pub fn unit(&self) -> &GcnUnit<BigRational> {
        &self.unit
    }

    /// The coefficient pairs `(aₙ, bₙ)` currently cached.
    pub fn coefficients(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.a.iter().copied().zip(self.b.iter().copied())
    }

    fn ensure(&mut self, n: usize) {
        if self.a.len() > n {
            return;
        }
        let want = (n + 1).max(2 * self.a.len());
        let seq = power_sequence(&self.unit, want as u64);
        self.a = seq.iter().map(|c| to_f64(&c.a_n)).collect();
        self.b = seq.iter().map(|c| to_f64(&c.b_n)).collect();
    }

    /// Smallest `N` with `Σ_{k≥N} (Kφ)^k/k! < tol`, using the geometric
    /// majorant of the tail once `N + 1 > K|φ|`.
    fn term_count(&self, phi: f64, tol: f64) -> usize {
        let x = self.growth * phi.abs();
        let mut term = 1.0; // x^n / n!
        let mut n = 0usize;
        loop {
            let ratio = x / (n as f64 + 1.0);
            if ratio < 1.0 && term / (1.0 - ratio) < tol {
                return n.max(1);
            }
            term *= ratio;
            n += 1;
        }
    }

    /// Partial sums of both series with the tail bounded by `tol`.
    pub fn eval(&mut self, phi: f64, tol: f64) -> Result<EulerPair> {
        check_tol(tol)?;
        let n = self.term_count(phi, tol);
        self.ensure(n);
        let (c, s) = self.sum(phi, n, 0);
        Ok(EulerPair {
            phi,
            c,
            s,
            terms: n,
        })
    }

    /// `(C′(φ), S′(φ))` by term-wise differentiation:
    /// `C′ = Σ aₙ₊₁φⁿ/n!`, `S′ = Σ bₙ₊₁φⁿ/n!`.
    pub fn derivative(&mut self, phi: f64, tol: f64) -> Result<(f64, f64)> {
        check_tol(tol)?;
        // shifted coefficients grow by one extra factor K
        let n = self.term_count(phi, tol / self.growth);
        self.ensure(n + 1);
        Ok(self.sum(phi, n, 1))
    }

    fn sum(&self, phi: f64, n: usize, shift: usize) -> (f64, f64) {
        let mut c = 0.0;
        let mut s = 0.0;
        let mut w = 1.0; // φ^k / k!
        for k in 0..n {
            c += w * self.a[k + shift];
            s += w * self.b[k + shift];
            w *= phi / (k as f64 + 1.0);
        }
        (c, s)
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Usage(format!("tolerance must be positive, got {tol}")))
    }
}

/// `C(φ)`, `S(φ)` by series summation to within `tol`.
pub fn euler_series(unit: &GcnUnit<BigRational>, phi: f64, tol: f64) -> Result<EulerPair> {
    if !phi.is_finite() {
        return Err(Error::Usage(format!("angle must be finite, got {phi}")));
    }
    EulerSeries::new(unit).eval(phi, tol)
}

/// `C(φ)`, `S(φ)` through the conjugate roots:
///
/// `S = (e^{h₊φ} − e^{h₋φ})/(h₊ − h₋)`, `C = (h₊e^{h₋φ} − h₋e^{h₊φ})/(h₊ − h₋)`.
///
/// Both follow from `e^{h±φ} = C + h±S`. At `Δ = 0` the limits
/// `S = φe^{bφ/2}`, `C = (1 − bφ/2)e^{bφ/2}` are used.
pub fn euler_closed_form(unit: &GcnUnit<BigRational>, phi: f64) -> EulerPair {
    if unit.is_degenerate() {
        let h = to_f64(&unit.b) / 2.0;
        let e = (h * phi).exp();
        return EulerPair {
            phi,
            c: (1.0 - h * phi) * e,
            s: phi * e,
            terms: 0,
        };
    }
    let (hp, hm) = conjugate_roots(unit).to_complex();
    let (ep, em) = ((hp * phi).exp(), (hm * phi).exp());
    let diff = hp - hm;
    let s: Complex64 = (ep - em) / diff;
    let c: Complex64 = (hp * em - hm * ep) / diff;
    EulerPair {
        phi,
        c: c.re,
        s: s.re,
        terms: 0,
    }
}

/// Maxima of `|C′ − aS|` and `|S′ − C − bS|` over a grid.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct OdeResidual {
    pub points: usize,
    pub max_c: f64,
    pub max_s: f64,
}

impl OdeResidual {
    pub fn max(&self) -> f64 {
        self.max_c.max(self.max_s)
    }
}

/// Checks `C′ = a·S` and `S′ = C + b·S` on a grid, with derivatives taken
/// term-wise from the series.
pub fn ode_residual(
    unit: &GcnUnit<BigRational>,
    phi_grid: &[f64],
    tol: f64,
) -> Result<OdeResidual> {
    if phi_grid.len() < 3 {
        return Err(Error::Usage(format!(
            "ODE residual needs at least 3 grid points, got {}",
            phi_grid.len()
        )));
    }
    let (a, b) = (to_f64(&unit.a), to_f64(&unit.b));
    let mut series = EulerSeries::new(unit);
    let mut out = OdeResidual {
        points: phi_grid.len(),
        max_c: 0.0,
        max_s: 0.0,
    };
    for &phi in phi_grid {
        let pair = series.eval(phi, tol)?;
        let (dc, ds) = series.derivative(phi, tol)?;
        out.max_c = out.max_c.max((dc - a * pair.s).abs());
        out.max_s = out.max_s.max((ds - pair.c - b * pair.s).abs());
    }
    Ok(out)
}

/// Residuals of the addition law
/// `C(φ+ψ) = C(φ)C(ψ) + a·S(φ)S(ψ)`,
/// `S(φ+ψ) = C(φ)S(ψ) + S(φ)C(ψ) + b·S(φ)S(ψ)`.
pub fn addition_law_residual(
    series: &mut EulerSeries,
    phi: f64,
    psi: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    let (a, b) = (to_f64(&series.unit.a), to_f64(&series.unit.b));
    let p = series.eval(phi, tol)?;
    let q = series.eval(psi, tol)?;
    let r = series.eval(phi + psi, tol)?;
    Ok((
        (r.c - (p.c * q.c + a * p.s * q.s)).abs(),
        (r.s - (p.c * q.s + p.s * q.c + b * p.s * q.s)).abs(),
    ))
}

/// Evenly spaced points on `[lo, hi]`, endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use std::f64::consts::PI;

    fn unit(a: i64, b: i64) -> GcnUnit<BigRational> {
        GcnUnit::from_ints(a, b)
    }

    #[test]
    fn ordinary_trigonometry() {
        let p = euler_series(&unit(-1, 0), PI / 3.0, 1e-14).unwrap();
        assert!((p.c - 0.5).abs() < 1e-12);
        assert!((p.s - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(p.terms > 0);
    }

    #[test]
    fn split_complex_is_hyperbolic() {
        let p = euler_series(&unit(1, 0), 1.0, 1e-14).unwrap();
        assert!((p.c - 1f64.cosh()).abs() < 1e-12);
        assert!((p.s - 1f64.sinh()).abs() < 1e-12);
    }

    #[test]
    fn golden_unit_series_vs_closed_form() {
        // oracle: explicit golden-ratio exponentials
        let s5 = 5f64.sqrt();
        let (hp, hm) = ((1.0 + s5) / 2.0, (1.0 - s5) / 2.0);
        let s_ref = ((hp).exp() - (hm).exp()) / s5;
        let c_ref = (hp * hm.exp() - hm * hp.exp()) / s5;
        let p = euler_series(&unit(1, 1), 1.0, 1e-14).unwrap();
        assert!((p.c - c_ref).abs() < 1e-12 && (p.s - s_ref).abs() < 1e-12);
        let q = euler_closed_form(&unit(1, 1), 1.0);
        assert!((q.c - c_ref).abs() < 1e-12 && (q.s - s_ref).abs() < 1e-12);
    }

    #[test]
    fn closed_form_reduces_to_cos_sin() {
        for phi in linspace(-3.0, 3.0, 13) {
            let q = euler_closed_form(&unit(-1, 0), phi);
            assert!((q.c - phi.cos()).abs() < 1e-14);
            assert!((q.s - phi.sin()).abs() < 1e-14);
        }
    }

    #[test]
    fn degenerate_closed_form() {
        let u = unit(-1, 2);
        for phi in linspace(-2.0, 2.0, 9) {
            let q = euler_closed_form(&u, phi);
            assert!((q.s - phi * phi.exp()).abs() < 1e-14);
            assert!((q.c - (1.0 - phi) * phi.exp()).abs() < 1e-14);
            let p = euler_series(&u, phi, 1e-14).unwrap();
            assert!((p.c - q.c).abs() < 1e-12 && (p.s - q.s).abs() < 1e-12);
        }
    }

    #[test]
    fn seeds_at_zero() {
        let q = euler_closed_form(&unit(1, 1), 0.0);
        assert!((q.c - 1.0).abs() < 1e-15 && q.s.abs() < 1e-15);
        let p = euler_series(&GcnUnit::new(rational(3), rational(-7)), 0.0, 1e-12).unwrap();
        assert_eq!((p.c, p.s), (1.0, 0.0));
    }

    #[test]
    fn ode_residuals() {
        let r = ode_residual(&unit(-1, 0), &linspace(-3.0, 3.0, 31), 1e-14).unwrap();
        assert!(r.max() < 1e-12, "{r:?}");
        let r = ode_residual(&unit(1, 1), &linspace(-2.0, 2.0, 41), 1e-13).unwrap();
        assert!(r.max() < 1e-10, "{r:?}");
        // Chebyshev unit evaluated at x = 0.5
        let r = ode_residual(&unit(-1, 1), &linspace(-2.0, 2.0, 41), 1e-13).unwrap();
        assert!(r.max() < 1e-10, "{r:?}");
    }

    #[test]
    fn cos_derivative_is_minus_sin() {
        let mut s = EulerSeries::new(&unit(-1, 0));
        let (dc, ds) = s.derivative(0.4, 1e-15).unwrap();
        assert!((dc + 0.4f64.sin()).abs() < 1e-14);
        assert!((ds - 0.4f64.cos()).abs() < 1e-14);
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(euler_series(&unit(1, 1), 1.0, 0.0), Err(Error::Usage(_))));
        assert!(matches!(euler_series(&unit(1, 1), f64::NAN, 1e-3), Err(Error::Usage(_))));
        assert!(matches!(
            ode_residual(&unit(1, 1), &[0.0, 1.0], 1e-12),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn coefficients_are_power_coefficients() {
        let u = GcnUnit::new(crate::exact::rational_frac(1, 3), rational(2));
        let mut s = EulerSeries::new(&u);
        s.eval(1.5, 1e-12).unwrap();
        let exact = power_sequence(&u, 10);
        for ((a, b), e) in s.coefficients().zip(&exact) {
            assert_eq!(a, to_f64(&e.a_n));
            assert_eq!(b, to_f64(&e.b_n));
        }
    }
}
