//! Chebyshev polynomials as power coefficients of the unit `H² = 2x·H − 1`.
//!
//! With `Hⁿ = Aₙ + Bₙ·H` over `ℚ[x]`: `Bₙ = Uₙ₋₁`, `Aₙ = −Uₙ₋₂`, and
//! `Tₙ = Aₙ + x·Bₙ`. The backward seeds `U₋₁ = 0`, `U₋₂ = −1` make these
//! hold from `n = 0`.

use num_rational::BigRational;

use crate::exact::{rational, MultiPoly, Ring};
use crate::gcn::{companion_power, power_sequence, GcnUnit};
use crate::linalg::Mat2;

pub const VAR: &str = "x";

fn vars() -> [&'static str; 1] {
    [VAR]
}

/// The polynomial `x`.
pub fn x() -> MultiPoly {
    MultiPoly::var(&vars(), VAR).unwrap()
}

fn constant(n: i64) -> MultiPoly {
    MultiPoly::from_int(&vars(), n)
}

/// `H² = −1 + 2x·H`, i.e. the unit `(a, b) = (−1, 2x)`.
pub fn cheb_unit() -> GcnUnit<MultiPoly> {
    GcnUnit::new(constant(-1), x().scale(&rational(2)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChebKind {
    First,
    Second,
}

#[derive(Clone, PartialEq, Debug)]
pub struct ChebPoly {
    pub kind: ChebKind,
    pub n: u64,
    pub poly: MultiPoly,
}

/// `(Aₙ, Bₙ)` with `Hⁿ = Aₙ + Bₙ·H`.
#[derive(Clone, PartialEq, Debug)]
pub struct ChebCoeffPair {
    pub n: u64,
    pub a_n: MultiPoly,
    pub b_n: MultiPoly,
}

/// `U₀, …, U_{n_max}` by `Uₙ₊₁ = 2x·Uₙ − Uₙ₋₁` from `U₀ = 1`, `U₁ = 2x`.
pub fn cheb_u_sequence(n_max: u64) -> Vec<MultiPoly> {
    let two_x = x().scale(&rational(2));
    let mut out = vec![constant(1)];
    if n_max >= 1 {
        out.push(two_x.clone());
    }
    for k in 2..=n_max as usize {
        let next = &(&two_x * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out
}

pub fn cheb_u(n: u64) -> ChebPoly {
    ChebPoly {
        kind: ChebKind::Second,
        n,
        poly: cheb_u_sequence(n).pop().unwrap(),
    }
}

/// `Uₖ` for `k ≥ −2`, with `U₋₁ = 0` and `U₋₂ = −1`.
pub fn cheb_u_extended(k: i64) -> MultiPoly {
    match k {
        -2 => constant(-1),
        -1 => constant(0),
        k if k >= 0 => cheb_u(k as u64).poly,
        _ => panic!("U_k is only extended down to k = -2"),
    }
}

/// `(Aₖ, Bₖ)` for `k = 0..=n_max` by the column recurrence of `Q̂(−1, 2x)`.
pub fn cheb_ab_sequence(n_max: u64) -> Vec<ChebCoeffPair> {
    power_sequence(&cheb_unit(), n_max)
        .into_iter()
        .map(|c| ChebCoeffPair {
            n: c.n,
            a_n: c.a_n,
            b_n: c.b_n,
        })
        .collect()
}

pub fn cheb_ab(n: u64) -> ChebCoeffPair {
    cheb_ab_sequence(n).pop().unwrap()
}

/// `Tₙ = Aₙ + x·Bₙ`.
pub fn cheb_t(n: u64) -> ChebPoly {
    let ab = cheb_ab(n);
    ChebPoly {
        kind: ChebKind::First,
        n,
        poly: &ab.a_n + &(&x() * &ab.b_n),
    }
}

pub fn cheb_t_sequence(n_max: u64) -> Vec<MultiPoly> {
    let x = x();
    cheb_ab_sequence(n_max)
        .into_iter()
        .map(|ab| &ab.a_n + &(&x * &ab.b_n))
        .collect()
}

/// `[(1 − x²)∂² − 3x∂ + c] p`.
pub fn second_kind_operator(p: &MultiPoly, c: &BigRational) -> MultiPoly {
    let d1 = p.derivative(VAR).unwrap();
    let d2 = d1.derivative(VAR).unwrap();
    let x = x();
    let one_minus_x2 = &constant(1) - &(&x * &x);
    let lhs = &one_minus_x2 * &d2;
    let mid = (&x * &d1).scale(&rational(3));
    &(&lhs - &mid) + &p.scale(c)
}

/// Residual of the second-order equation for `Bₙ`:
/// `[(1 − x²)∂² − 3x∂ + (n² − 1)] Bₙ`, which is zero for every `n ≥ 1`.
pub fn b_ode_residual(n: u64) -> MultiPoly {
    let b_n = cheb_ab(n).b_n;
    let c = rational(n as i64 * n as i64 - 1);
    second_kind_operator(&b_n, &c)
}

/// Residual of `[(1 − x²)∂² − 3x∂ + n(n+2)] Uₙ`.
pub fn u_ode_residual(n: u64) -> MultiPoly {
    let u = cheb_u(n).poly;
    second_kind_operator(&u, &rational(n as i64 * (n as i64 + 2)))
}

/// `Q̂(−1, 2x)^(n+1)`, by squaring.
pub fn cheb_companion_power(n: u64) -> Mat2<MultiPoly> {
    companion_power(&cheb_unit(), n + 1)
}

/// `[[−Uₙ₋₁, −Uₙ], [Uₙ, Uₙ₊₁]]`.
pub fn companion_power_closed_form(n: u64) -> Mat2<MultiPoly> {
    let n = n as i64;
    let (prev, cur, next) = (
        cheb_u_extended(n - 1),
        cheb_u_extended(n),
        cheb_u_extended(n + 1),
    );
    Mat2::new(-&prev, -&cur, cur, next)
}

/// `Uₙ² − Uₙ₋₁Uₙ₊₁ − 1`.
pub fn pell_residual(n: u64) -> MultiPoly {
    let n = n as i64;
    let (prev, cur, next) = (
        cheb_u_extended(n - 1),
        cheb_u_extended(n),
        cheb_u_extended(n + 1),
    );
    &(&(&cur * &cur) - &(&prev * &next)) - &constant(1)
}

/// Evaluates a polynomial in `x` exactly at a double, then rounds once.
pub fn eval_at(p: &MultiPoly, x: f64) -> f64 {
    let point = BigRational::from_float(x).expect("finite evaluation point");
    let v = p
        .eval(&[crate::exact::GaussianRational::real(point)])
        .expect("univariate polynomial");
    v.to_complex().re
}

/// `H± = x ± √(x² − 1)` for real `x ≥ 1`.
pub fn h_pm(x: f64) -> (f64, f64) {
    let r = (x * x - 1.0).sqrt();
    (x + r, x - r)
}
