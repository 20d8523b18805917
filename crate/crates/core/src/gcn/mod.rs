//! Generalized complex units `h² = a + b·h`.
//!
//! Powers of a unit are again of the form `hⁿ = aₙ + bₙ·h`. The coefficient
//! pair can be produced three independent ways: the forward recurrence
//! `aₙ₊₁ = a·bₙ`, `bₙ₊₁ = aₙ + b·bₙ`; the power of the companion matrix
//! `[[0, a], [1, b]]`; and the Binet closed form through the roots
//! `h± = (b ± √Δ)/2`, `Δ = b² + 4a`.

mod surd;

use std::fmt;

use num_complex::Complex64;

pub use surd::QuadSurd;

use crate::error::{Error, Result};
use crate::exact::{rational, BigRational, Ring};
use crate::linalg::Mat2;

/// The defining pair of `h² = a + b·h`.
#[derive(Clone, PartialEq, Debug)]
pub struct GcnUnit<R> {
    pub a: R,
    pub b: R,
}

impl<R: Ring> GcnUnit<R> {
    pub fn new(a: R, b: R) -> Self {
        Self { a, b }
    }

    /// `Δ = b² + 4a`.
    pub fn discriminant(&self) -> R {
        self.b.square().add(&self.a.scale(&rational(4)))
    }

    pub fn is_degenerate(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// The generator `h` as an element.
    pub fn h(&self) -> GcnElement<R> {
        GcnElement::new(self.clone(), self.a.zero_like(), self.a.one_like())
    }

    pub fn one(&self) -> GcnElement<R> {
        GcnElement::new(self.clone(), self.a.one_like(), self.a.zero_like())
    }

    /// The companion matrix `Q̂(a, b) = [[0, a], [1, b]]`.
    pub fn companion(&self) -> Mat2<R> {
        Mat2::new(
            self.a.zero_like(),
            self.a.clone(),
            self.a.one_like(),
            self.b.clone(),
        )
    }
}

impl GcnUnit<BigRational> {
    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(rational(a), rational(b))
    }
}

/// `re + im·h` for a fixed unit.
#[derive(Clone, PartialEq, Debug)]
pub struct GcnElement<R> {
    pub unit: GcnUnit<R>,
    pub re: R,
    pub im: R,
}

impl<R: Ring> GcnElement<R> {
    pub fn new(unit: GcnUnit<R>, re: R, im: R) -> Self {
        Self { unit, re, im }
    }

    fn same_unit(&self, other: &Self) -> Result<()> {
        if self.unit == other.unit {
            Ok(())
        } else {
            Err(Error::Domain(
                "elements belong to different generalized complex units".into(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_unit(other)?;
        Ok(Self::new(
            self.unit.clone(),
            self.re.add(&other.re),
            self.im.add(&other.im),
        ))
    }

    /// `(x₀ + x₁h)(y₀ + y₁h) = (x₀y₀ + a·x₁y₁) + (x₀y₁ + x₁y₀ + b·x₁y₁)h`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_unit(other)?;
        let cross = self.im.mul(&other.im);
        let re = self.re.mul(&other.re).add(&self.unit.a.mul(&cross));
        let im = self
            .re
            .mul(&other.im)
            .add(&self.im.mul(&other.re))
            .add(&self.unit.b.mul(&cross));
        Ok(Self::new(self.unit.clone(), re, im))
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = self.unit.one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same unit");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same unit");
            }
        }
        acc
    }
}

/// `(aₙ, bₙ)` with `hⁿ = aₙ + bₙ·h`.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerCoeffs<R> {
    pub n: u64,
    pub a_n: R,
    pub b_n: R,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PowerMethod {
    Recurrence,
    Matrix,
    Binet,
}

impl PowerMethod {
    pub const ALL: [PowerMethod; 3] = [Self::Recurrence, Self::Matrix, Self::Binet];

    pub fn name(self) -> &'static str {
        match self {
            Self::Recurrence => "recurrence",
            Self::Matrix => "matrix",
            Self::Binet => "binet",
        }
    }
}

impl std::str::FromStr for PowerMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recurrence" => Ok(Self::Recurrence),
            "matrix" => Ok(Self::Matrix),
            "binet" => Ok(Self::Binet),
            other => Err(Error::Usage(format!("unknown power method `{other}`"))),
        }
    }
}

/// Power coefficients of `hⁿ`. The Binet route runs in exact surd
/// arithmetic over `R[√Δ]`, so all three methods agree exactly.
pub fn power_coeffs<R: Ring>(unit: &GcnUnit<R>, n: u64, method: PowerMethod) -> PowerCoeffs<R> {
    match method {
        PowerMethod::Recurrence => power_sequence(unit, n).pop().unwrap(),
        PowerMethod::Matrix => {
            // Q̂ⁿ applied to the seed column (a₀, b₀) = (1, 0) is its first column.
            let q = companion_power(unit, n);
            PowerCoeffs {
                n,
                a_n: q.m11,
                b_n: q.m21,
            }
        }
        PowerMethod::Binet => binet_exact(unit, n),
    }
}

/// `(aₖ, bₖ)` for `k = 0..=n_max`, by the forward recurrence from
/// `a₀ = 1, b₀ = 0`.
pub fn power_sequence<R: Ring>(unit: &GcnUnit<R>, n_max: u64) -> Vec<PowerCoeffs<R>> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let (mut a_n, mut b_n) = (unit.a.one_like(), unit.a.zero_like());
    for n in 0..=n_max {
        out.push(PowerCoeffs {
            n,
            a_n: a_n.clone(),
            b_n: b_n.clone(),
        });
        let next_a = unit.a.mul(&b_n);
        let next_b = a_n.add(&unit.b.mul(&b_n));
        a_n = next_a;
        b_n = next_b;
    }
    out
}

/// `Q̂(a, b)ⁿ` by exponentiation by squaring.
pub fn companion_power<R: Ring>(unit: &GcnUnit<R>, n: u64) -> Mat2<R> {
    unit.companion().pow(n)
}

/// The two roots `h± = (b ± √Δ)/2` as exact surds over `R[√Δ]`.
#[derive(Clone, PartialEq, Debug)]
pub struct ConjugateRoots<R> {
    pub plus: QuadSurd<R>,
    pub minus: QuadSurd<R>,
    pub degenerate: bool,
}

impl<R: Ring> ConjugateRoots<R> {
    pub fn sum(&self) -> QuadSurd<R> {
        self.plus.add(&self.minus)
    }

    pub fn product(&self) -> QuadSurd<R> {
        self.plus.mul(&self.minus)
    }

    pub fn difference(&self) -> QuadSurd<R> {
        self.plus.sub(&self.minus)
    }
}

impl ConjugateRoots<BigRational> {
    /// Floating-point values of `(h₊, h₋)`, complex when `Δ < 0`.
    pub fn to_complex(&self) -> (Complex64, Complex64) {
        (self.plus.to_complex(), self.minus.to_complex())
    }
}

pub fn conjugate_roots<R: Ring>(unit: &GcnUnit<R>) -> ConjugateRoots<R> {
    let disc = unit.discriminant();
    let half = surd::half();
    // q·√0 vanishes; keep the representation canonical
    let q = if disc.is_zero() {
        disc.zero_like()
    } else {
        unit.b.one_like().scale(&half)
    };
    let plus = QuadSurd::new(unit.b.scale(&half), q, disc);
    let minus = plus.conj();
    ConjugateRoots {
        degenerate: plus.disc.is_zero(),
        plus,
        minus,
    }
}

/// Binet evaluation in `R[√Δ]`:
/// `bₙ = (h₊ⁿ − h₋ⁿ)/(h₊ − h₋)`, `aₙ = (h₊h₋ⁿ − h₋h₊ⁿ)/(h₊ − h₋)`.
///
/// `h₊ − h₋ = √Δ`, so the quotients are exact divisions by the radical.
/// A degenerate unit (`Δ = 0`) uses the limit forms `bₙ = n·(b/2)ⁿ⁻¹`,
/// `aₙ = a·bₙ₋₁`.
pub fn binet_exact<R: Ring>(unit: &GcnUnit<R>, n: u64) -> PowerCoeffs<R> {
    if n == 0 {
        return PowerCoeffs {
            n,
            a_n: unit.a.one_like(),
            b_n: unit.a.zero_like(),
        };
    }
    if unit.is_degenerate() {
        return degenerate_binet(unit, n);
    }
    let roots = conjugate_roots(unit);
    let (hp_n, hm_n) = (roots.plus.pow(n), roots.minus.pow(n));
    let b_n = hp_n
        .sub(&hm_n)
        .div_sqrt_disc()
        .expect("conjugate difference is a pure radical");
    let a_n = roots
        .plus
        .mul(&hm_n)
        .sub(&roots.minus.mul(&hp_n))
        .div_sqrt_disc()
        .expect("conjugate difference is a pure radical");
    PowerCoeffs { n, a_n, b_n }
}

fn degenerate_binet<R: Ring>(unit: &GcnUnit<R>, n: u64) -> PowerCoeffs<R> {
    let half_b = unit.b.scale(&surd::half());
    let b_k = |k: u64| -> R {
        if k == 0 {
            unit.a.zero_like()
        } else {
            half_b.pow(k - 1).scale(&rational(k as i64))
        }
    };
    PowerCoeffs {
        n,
        a_n: unit.a.mul(&b_k(n - 1)),
        b_n: b_k(n),
    }
}

/// Double-precision Binet evaluation, for comparison against the exact
/// routes. Returns `(aₙ, bₙ)`.
pub fn binet_f64(unit: &GcnUnit<BigRational>, n: u64) -> (f64, f64) {
    let a = crate::exact::GaussianRational::real(unit.a.clone()).to_complex();
    let b = crate::exact::GaussianRational::real(unit.b.clone()).to_complex();
    if n == 0 {
        return (1.0, 0.0);
    }
    if unit.is_degenerate() {
        let h = b * 0.5;
        let b_k = |k: u64| -> Complex64 {
            if k == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                h.powu(k as u32 - 1) * k as f64
            }
        };
        return ((a * b_k(n - 1)).re, b_k(n).re);
    }
    let (hp, hm) = conjugate_roots(unit).to_complex();
    let (hp_n, hm_n) = (hp.powu(n as u32), hm.powu(n as u32));
    let diff = hp - hm;
    let b_n = (hp_n - hm_n) / diff;
    let a_n = (hp * hm_n - hm * hp_n) / diff;
    (a_n.re, b_n.re)
}

impl<R: Ring + fmt::Display> fmt::Display for GcnUnit<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h^2 = {} + ({})*h", self.a, self.b)
    }
}
