//! 2×2 matrices viewed as generalized complex units.
//!
//! Any `M = α·1 + β₁σ₁ + β₂σ₂ + β₃σ₃` satisfies `M² = γ·1 + 2α·M` with
//! `γ = −α² + β₁² + β₂² + β₃² = −det M`. For `det M = 1` the powers follow
//! the second-kind Chebyshev polynomials:
//! `Mⁿ = Uₙ₋₁(α)·M − Uₙ₋₂(α)·1`.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::{rational_frac, GaussianRational, Ring};
use crate::linalg::Mat2;

pub type CMat2 = Mat2<GaussianRational>;

fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

pub fn identity() -> CMat2 {
    Mat2::identity_like(&g(0))
}

pub fn from_ints(m11: i64, m12: i64, m21: i64, m22: i64) -> CMat2 {
    Mat2::new(g(m11), g(m12), g(m21), g(m22))
}

/// `σ₁`, `σ₂`, `σ₃`.
pub fn pauli_matrices() -> [CMat2; 3] {
    let i = GaussianRational::i();
    [
        from_ints(0, 1, 1, 0),
        Mat2::new(g(0), -&i, i, g(0)),
        from_ints(1, 0, 0, -1),
    ]
}

/// Coordinates of a matrix in the basis `{1, σ₁, σ₂, σ₃}`, plus `γ`.
#[derive(Clone, PartialEq, Debug)]
pub struct PauliCoords {
    pub alpha: GaussianRational,
    pub beta: [GaussianRational; 3],
    pub gamma: GaussianRational,
}

pub fn pauli_decompose(m: &CMat2) -> PauliCoords {
    let half = rational_frac(1, 2);
    let alpha = m.m11.add(&m.m22).scale(&half);
    let beta1 = m.m12.add(&m.m21).scale(&half);
    let beta2 = &GaussianRational::i() * &m.m12.sub(&m.m21).scale(&half);
    let beta3 = m.m11.sub(&m.m22).scale(&half);
    let gamma = alpha
        .square()
        .neg()
        .add(&beta1.square())
        .add(&beta2.square())
        .add(&beta3.square());
    PauliCoords {
        alpha,
        beta: [beta1, beta2, beta3],
        gamma,
    }
}

pub fn recompose(c: &PauliCoords) -> CMat2 {
    let mut m = Mat2::scalar(c.alpha.clone());
    for (beta, sigma) in c.beta.iter().zip(pauli_matrices()) {
        m = m.add(&sigma.scale(beta));
    }
    m
}

/// `M² − γ·1 − 2α·M`; zero for every matrix.
pub fn quadratic_residual(m: &CMat2) -> CMat2 {
    let c = pauli_decompose(m);
    let two_alpha = c.alpha.add(&c.alpha);
    m.mul(m)
        .sub(&Mat2::scalar(c.gamma))
        .sub(&m.scale(&two_alpha))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatPowerMethod {
    Chebyshev,
    Squaring,
    GeneralRecurrence,
}

impl MatPowerMethod {
    pub const ALL: [MatPowerMethod; 3] = [Self::Chebyshev, Self::Squaring, Self::GeneralRecurrence];

    pub fn name(self) -> &'static str {
        match self {
            Self::Chebyshev => "chebyshev",
            Self::Squaring => "squaring",
            Self::GeneralRecurrence => "general_recurrence",
        }
    }
}

impl std::str::FromStr for MatPowerMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chebyshev" => Ok(Self::Chebyshev),
            "squaring" => Ok(Self::Squaring),
            "general_recurrence" | "general-recurrence" => Ok(Self::GeneralRecurrence),
            other => Err(Error::Usage(format!("unknown matrix power method `{other}`"))),
        }
    }
}

/// `(Uₙ₋₁(α), Uₙ₋₂(α))` by the scalar recurrence, with `U₋₁ = 0`, `U₋₂ = −1`.
pub fn second_kind_pair(alpha: &GaussianRational, n: u64) -> (GaussianRational, GaussianRational) {
    let two_alpha = alpha.add(alpha);
    // (U_{k-1}, U_{k-2}) at k = 0
    let (mut prev, mut prev2) = (g(0), g(-1));
    for _ in 0..n {
        let next = two_alpha.mul(&prev).sub(&prev2);
        prev2 = prev;
        prev = next;
    }
    (prev, prev2)
}

pub fn mat_power(m: &CMat2, n: u64, method: MatPowerMethod) -> Result<CMat2> {
    match method {
        MatPowerMethod::Squaring => Ok(m.pow(n)),
        MatPowerMethod::Chebyshev => {
            let det = m.det();
            if !det.is_one() {
                return Err(Error::Precondition(format!(
                    "the Chebyshev power formula needs det(M) = 1, got det(M) = {det}"
                )));
            }
            let alpha = pauli_decompose(m).alpha;
            let (u1, u2) = second_kind_pair(&alpha, n);
            Ok(m.scale(&u1).sub(&Mat2::scalar(u2)))
        }
        MatPowerMethod::GeneralRecurrence => {
            if n == 0 {
                return Ok(identity());
            }
            // pₖ₊₁ = 2α·pₖ + γ·pₖ₋₁, p₀ = 0, p₁ = 1; Mⁿ = pₙ·M + γ·pₙ₋₁·1
            let c = pauli_decompose(m);
            let two_alpha = c.alpha.add(&c.alpha);
            let (mut p_prev, mut p) = (g(0), g(1));
            for _ in 1..n {
                let next = two_alpha.mul(&p).add(&c.gamma.mul(&p_prev));
                p_prev = p;
                p = next;
            }
            Ok(m.scale(&p).add(&Mat2::scalar(c.gamma.mul(&p_prev))))
        }
    }
}

pub fn max_coeff_bits(m: &CMat2) -> u64 {
    m.entries().into_iter().map(GaussianRational::max_bits).max().unwrap_or(0)
}

/// One benchmark measurement.
#[derive(Clone, PartialEq, Debug)]
pub struct BenchRow {
    pub method: MatPowerMethod,
    pub n: u64,
    pub median_ns: u128,
    pub max_coeff_bits: u64,
}

#[derive(Clone, PartialEq, Debug)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Exponents at which the Chebyshev and squaring results differed.
    pub disagreements: Vec<u64>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("method,n,median_ns,max_coeff_bits\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.method.name(),
                r.n,
                r.median_ns,
                r.max_coeff_bits
            ));
        }
        out
    }
}

/// Times the Chebyshev closed form against exponentiation by squaring for
/// a unimodular matrix. Trials run sequentially per method.
pub fn bench_power(m: &CMat2, sizes: &[u64], trials: usize) -> Result<BenchReport> {
    if sizes.is_empty() {
        return Err(Error::Usage("benchmark needs at least one exponent".into()));
    }
    if trials == 0 {
        return Err(Error::Usage("benchmark needs at least one trial".into()));
    }
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for &n in sizes {
        let mut results = Vec::new();
        for method in [MatPowerMethod::Chebyshev, MatPowerMethod::Squaring] {
            let mut times = Vec::with_capacity(trials);
            let mut last = None;
            for _ in 0..trials {
                let start = Instant::now();
                let r = mat_power(m, n, method)?;
                times.push(start.elapsed().as_nanos());
                last = Some(r);
            }
            times.sort_unstable();
            let result = last.unwrap();
            rows.push(BenchRow {
                method,
                n,
                median_ns: times[times.len() / 2],
                max_coeff_bits: max_coeff_bits(&result),
            });
            results.push(result);
        }
        if results[0] != results[1] {
            disagreements.push(n);
        }
    }
    Ok(BenchReport {
        rows,
        disagreements,
    })
}
