//! The third-order unit `Y³ = u·Y² − v·Y + 1` and the two-variable
//! Chebyshev polynomials `U⁽²⁾ₙ(u, v)` attached to it.
//!
//! `U⁽²⁾` is produced three independent ways:
//!
//! * coefficient extraction from `1/(1 − ut + vt² − t³) = Σ U⁽²⁾ₙ₊₁ tⁿ`;
//! * the recurrence `U⁽²⁾ₙ₊₂ = u·U⁽²⁾ₙ₊₁ − v·U⁽²⁾ₙ + U⁽²⁾ₙ₋₁`;
//! * `U⁽²⁾ₙ₊₁ = (1/n!) ∫₀^∞ e⁻ˢ H⁽³⁾ₙ(us, −vs, s) ds`, evaluated exactly
//!   with `∫₀^∞ sᵐe⁻ˢ ds = m!`.
//!
//! The generating function fixes the seeds `U⁽²⁾₀ = U⁽²⁾₋₁ = 0`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, MultiPoly, Ring, TruncatedSeries};
use crate::linalg::Mat3;

pub const UV: [&str; 2] = ["u", "v"];
pub const XYZ: [&str; 3] = ["x", "y", "z"];
pub const UVS: [&str; 3] = ["u", "v", "s"];

fn uv_var(name: &str) -> MultiPoly {
    MultiPoly::var(&UV, name).unwrap()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Y³ = u·Y² − v·Y + 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct CubicUnit<R> {
    pub u: R,
    pub v: R,
}

impl CubicUnit<MultiPoly> {
    /// The unit with formal parameters `u`, `v`.
    pub fn symbolic() -> Self {
        Self {
            u: uv_var("u"),
            v: uv_var("v"),
        }
    }
}

impl<R: Ring> CubicUnit<R> {
    pub fn new(u: R, v: R) -> Self {
        Self { u, v }
    }

    /// `[[0, 0, 1], [1, 0, −v], [0, 1, u]]`, acting on columns `(α, β, γ)`.
    pub fn companion(&self) -> Mat3<R> {
        let o = self.u.one_like();
        let z = self.u.zero_like();
        Mat3::new([
            [z.clone(), z.clone(), o.clone()],
            [o.clone(), z.clone(), self.v.neg()],
            [z, o, self.u.clone()],
        ])
    }
}

/// `Yⁿ = αₙ + βₙ·Y + γₙ·Y²`.
#[derive(Clone, PartialEq, Debug)]
pub struct CubicPowerCoeffs<R> {
    pub n: u64,
    pub alpha: R,
    pub beta: R,
    pub gamma: R,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubicMethod {
    Reduction,
    Matrix,
}

/// `Y⁰ … Y^{n_max}` by `αₙ₊₁ = γₙ`, `βₙ₊₁ = αₙ − v·γₙ`, `γₙ₊₁ = βₙ + u·γₙ`.
pub fn cubic_power_sequence<R: Ring>(unit: &CubicUnit<R>, n_max: u64) -> Vec<CubicPowerCoeffs<R>> {
    let zero = unit.u.zero_like();
    let (mut alpha, mut beta, mut gamma) = (unit.u.one_like(), zero.clone(), zero);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        out.push(CubicPowerCoeffs {
            n,
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
        });
        let next_alpha = gamma.clone();
        let next_beta = alpha.sub(&unit.v.mul(&gamma));
        let next_gamma = beta.add(&unit.u.mul(&gamma));
        alpha = next_alpha;
        beta = next_beta;
        gamma = next_gamma;
    }
    out
}

pub fn cubic_power<R: Ring>(unit: &CubicUnit<R>, n: u64, method: CubicMethod) -> CubicPowerCoeffs<R> {
    match method {
        CubicMethod::Reduction => cubic_power_sequence(unit, n).pop().unwrap(),
        CubicMethod::Matrix => {
            let [alpha, beta, gamma] = unit.companion().pow(n).column(0);
            CubicPowerCoeffs {
                n,
                alpha,
                beta,
                gamma,
            }
        }
    }
}

/// `U⁽²⁾ₙ(u, v)`.
#[derive(Clone, PartialEq, Debug)]
pub struct TwoVarCheb {
    pub n: u64,
    pub poly: MultiPoly,
}

fn indexed(polys: Vec<MultiPoly>) -> Vec<TwoVarCheb> {
    polys
        .into_iter()
        .enumerate()
        .map(|(n, poly)| TwoVarCheb { n: n as u64, poly })
        .collect()
}

/// `1 − u·t + v·t² − t³` as a series of the given order.
pub fn generating_denominator(order: usize) -> TruncatedSeries {
    let prefix = vec![
        MultiPoly::from_int(&UV, 1),
        -&uv_var("u"),
        uv_var("v"),
        MultiPoly::from_int(&UV, -1),
    ];
    TruncatedSeries::new(&UV, order, prefix).unwrap()
}

/// `U⁽²⁾₀ … U⁽²⁾_{n_max}` by series division; index 0 is the seed `0`.
pub fn u2_by_series(n_max: u64) -> Result<Vec<TwoVarCheb>> {
    if n_max < 1 {
        return Err(Error::Usage("n_max must be at least 1".into()));
    }
    let inv = generating_denominator(n_max as usize - 1).inverse()?;
    let mut polys = vec![MultiPoly::zero(&UV)];
    polys.extend(inv.coeffs().iter().cloned());
    Ok(indexed(polys))
}

/// Runs the third-order recurrence from `(U₀, U₁, U₂)` up to index `n_max`.
pub fn u2_recurrence_from_seeds(seeds: [MultiPoly; 3], n_max: u64) -> Vec<TwoVarCheb> {
    let (u, v) = (uv_var("u"), uv_var("v"));
    let mut polys: Vec<MultiPoly> = seeds.into_iter().collect();
    while (polys.len() as u64) <= n_max {
        let k = polys.len();
        let next = &(&(&u * &polys[k - 1]) - &(&v * &polys[k - 2])) + &polys[k - 3];
        polys.push(next);
    }
    polys.truncate(n_max as usize + 1);
    indexed(polys)
}

/// `U⁽²⁾₀ … U⁽²⁾_{n_max}` by the recurrence, seeded from the first three
/// series coefficients.
pub fn u2_by_recurrence(n_max: u64) -> Result<Vec<TwoVarCheb>> {
    let seeds = u2_by_series(2)?;
    let seeds = [
        seeds[0].poly.clone(),
        seeds[1].poly.clone(),
        seeds[2].poly.clone(),
    ];
    Ok(u2_recurrence_from_seeds(seeds, n_max))
}

/// `H⁽³⁾ₙ(x, y, z) = n! Σ_{p+2q+3r=n} xᵖ yᵠ zʳ / (p! q! r!)`.
pub fn hermite3(n: u64) -> MultiPoly {
    let n_fact = factorial(n);
    let mut terms = Vec::new();
    for r in 0..=n / 3 {
        for q in 0..=(n - 3 * r) / 2 {
            let p = n - 3 * r - 2 * q;
            let denom = factorial(p) * factorial(q) * factorial(r);
            let c = BigRational::new(n_fact.clone(), denom);
            terms.push((vec![p as u32, q as u32, r as u32], GaussianRational::real(c)));
        }
    }
    MultiPoly::from_terms(&XYZ, terms).unwrap()
}

/// `Σ_{n≤N} tⁿ/n!·H⁽³⁾ₙ` as a truncated series.
pub fn hermite3_generating_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order as u64)
        .map(|n| hermite3(n).scale(&BigRational::new(1.into(), factorial(n))))
        .collect();
    TruncatedSeries::new(&XYZ, order, coeffs).unwrap()
}

/// `exp(x·t + y·t² + z·t³)` expanded directly.
pub fn hermite3_exponential(order: usize) -> TruncatedSeries {
    let v = |name| MultiPoly::var(&XYZ, name).unwrap();
    let exponent =
        TruncatedSeries::new(&XYZ, order, vec![MultiPoly::zero(&XYZ), v("x"), v("y"), v("z")])
            .unwrap();
    exponent.exp().unwrap()
}

/// `∫₀^∞ e⁻ˢ p ds` taken term-wise in the variable `var`, which is removed
/// from the result's variable list.
pub fn gamma_integrate(p: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let idx = p.var_index(var)?;
    let rest: Vec<String> = p
        .variables()
        .iter()
        .filter(|v| v.as_str() != var)
        .cloned()
        .collect();
    let terms = p.terms().map(|(m, c)| {
        let mut exps: Vec<u32> = m.exponents().to_vec();
        let e = exps.remove(idx);
        let weight = BigRational::from_integer(factorial(e as u64));
        (exps, c.scale(&weight))
    });
    MultiPoly::from_terms(&rest, terms)
}

/// `U⁽²⁾ₙ₊₁` from the Laplace representation, in exact arithmetic.
pub fn u2_by_laplace(n: u64) -> TwoVarCheb {
    let s = |name| MultiPoly::var(&UVS, name).unwrap();
    let images = [
        &s("u") * &s("s"),
        -&(&s("v") * &s("s")),
        s("s"),
    ];
    let integrand = hermite3(n).compose(&images).unwrap();
    let integral = gamma_integrate(&integrand, "s").unwrap();
    TwoVarCheb {
        n: n + 1,
        poly: integral.scale(&BigRational::new(1.into(), factorial(n))),
    }
}
