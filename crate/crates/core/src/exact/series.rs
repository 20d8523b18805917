use super::gaussian::GaussianRational;
use super::poly::MultiPoly;
use super::ring::{rational, Ring};
use crate::error::{Error, Result};

/// Power series in a formal variable `t`, truncated after `t^order`.
///
/// Coefficient `n` is the coefficient of `t^n`. All coefficients share one
/// variable list.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    /// Builds a series of the given order from a coefficient prefix; missing
    /// coefficients are zero and excess ones are dropped.
    pub fn new<S: AsRef<str>>(vars: &[S], order: usize, prefix: Vec<MultiPoly>) -> Result<Self> {
        let zero = MultiPoly::zero(vars);
        let mut coeffs = Vec::with_capacity(order + 1);
        for c in prefix.into_iter().take(order + 1) {
            coeffs.push(c.align(vars)?);
        }
        coeffs.resize(order + 1, zero);
        Ok(Self { coeffs })
    }

    pub fn one<S: AsRef<str>>(vars: &[S], order: usize) -> Self {
        Self::new(vars, order, vec![MultiPoly::from_int(vars, 1)]).unwrap()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn variables(&self) -> &[String] {
        self.coeffs[0].variables()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(MultiPoly::is_zero)
    }

    /// Product modulo `t^(N+1)`, with `N` the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![self.coeffs[0].zero_like(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse modulo `t^(N+1)`.
    ///
    /// Requires the constant coefficient to be a nonzero scalar. Uses the
    /// triangular recurrence `r_n = -c0⁻¹ Σ_{k=1..n} c_k r_{n-k}`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = c0
            .as_constant()
            .and_then(|c| c.inv())
            .ok_or_else(|| Error::SingularSeries(c0.to_string()))?;
        let neg_inv0 = -&inv0;
        let mut out: Vec<MultiPoly> = Vec::with_capacity(self.coeffs.len());
        out.push(MultiPoly::constant(self.variables(), inv0));
        for n in 1..self.coeffs.len() {
            let mut acc = c0.zero_like();
            for k in 1..=n {
                let ck = &self.coeffs[k];
                if !ck.is_zero() {
                    acc = &acc + &(ck * &out[n - k]);
                }
            }
            out.push(acc.scale_by(&neg_inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `exp(self)` modulo `t^(N+1)`, for a series with zero constant term.
    ///
    /// With `E = exp(S)`, `E' = S'E` gives `n·E_n = Σ_{k=1..n} k·S_k·E_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let mut out: Vec<MultiPoly> = Vec::with_capacity(self.coeffs.len());
        out.push(self.coeffs[0].one_like());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=n {
                let sk = &self.coeffs[k];
                if !sk.is_zero() {
                    acc = &acc + &(sk * &out[n - k]).scale(&rational(k as i64));
                }
            }
            let inv_n = GaussianRational::real(super::rational_frac(1, n as i64));
            out.push(acc.scale_by(&inv_n));
        }
        Ok(Self { coeffs: out })
    }

    /// Truncates or zero-extends to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, self.coeffs[0].zero_like());
        Self { coeffs }
    }
}
