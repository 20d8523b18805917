use crate::error::{Error, Result};
use crate::exact::{rational_frac, BigRational, Ring};

/// An element `p + q·√Δ` of `R[√Δ]`, with `√Δ·√Δ` reduced to `Δ`.
///
/// `Δ` is fixed per value and carried along; mixing values over different
/// radicands is a logic error and panics.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadSurd<R> {
    pub p: R,
    pub q: R,
    pub disc: R,
}

impl<R: Ring> QuadSurd<R> {
    pub fn new(p: R, q: R, disc: R) -> Self {
        Self { p, q, disc }
    }

    pub fn from_base(p: R, disc: R) -> Self {
        let q = p.zero_like();
        Self { p, q, disc }
    }

    /// `√Δ` itself.
    pub fn sqrt_disc(disc: R) -> Self {
        Self {
            p: disc.zero_like(),
            q: disc.one_like(),
            disc,
        }
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.disc, o.disc, "surds over different radicands");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(self.p.add(&o.p), self.q.add(&o.q), self.disc.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(self.p.sub(&o.p), self.q.sub(&o.q), self.disc.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        Self::new(
            self.p.mul(&o.p).add(&self.q.mul(&o.q).mul(&self.disc)),
            self.p.mul(&o.q).add(&self.q.mul(&o.p)),
            self.disc.clone(),
        )
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(self.p.scale(r), self.q.scale(r), self.disc.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.p.clone(), self.q.neg(), self.disc.clone())
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::from_base(self.p.one_like(), self.disc.clone());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Exact division by `√Δ` of a value known to be a pure multiple `q·√Δ`.
    pub fn div_sqrt_disc(&self) -> Result<R> {
        if !self.p.is_zero() {
            return Err(Error::Domain(
                "surd has a rational part; quotient by the radical is not in the base ring"
                    .into(),
            ));
        }
        Ok(self.q.clone())
    }

    /// The base-ring value of a surd with zero radical part.
    pub fn base_value(&self) -> Result<R> {
        if !self.q.is_zero() {
            return Err(Error::Domain("surd has a radical part".into()));
        }
        Ok(self.p.clone())
    }
}

impl QuadSurd<BigRational> {
    pub fn to_complex(&self) -> num_complex::Complex64 {
        use crate::exact::GaussianRational;
        let d = GaussianRational::real(self.disc.clone()).to_complex();
        let p = GaussianRational::real(self.p.clone()).to_complex();
        let q = GaussianRational::real(self.q.clone()).to_complex();
        let root = if d.re < 0.0 {
            num_complex::Complex64::new(0.0, (-d.re).sqrt())
        } else {
            num_complex::Complex64::new(d.re.sqrt(), 0.0)
        };
        p + q * root
    }
}

/// `1/2` as a rational, used for halving roots.
pub(crate) fn half() -> BigRational {
    rational_frac(1, 2)
}
