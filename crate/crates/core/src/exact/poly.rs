use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::gaussian::GaussianRational;
use super::ring::{rational, Ring};
use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per polynomial variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the first variable, then the second, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with [`GaussianRational`] coefficients.
///
/// The variable list is fixed at construction. Arithmetic between two
/// polynomials requires identical variable lists, except that a polynomial
/// over no variables (a bare constant) combines with anything. Use
/// [`MultiPoly::align`] to move a polynomial onto a different list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: impl Into<GaussianRational>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    pub fn from_int<S: AsRef<str>>(vars: &[S], n: i64) -> Self {
        Self::constant(vars, rational(n))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.terms.insert(Monomial(exps), GaussianRational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<u32>, GaussianRational)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(Error::Domain(format!(
                    "exponent tuple of length {} for {} variables",
                    exps.len(),
                    p.vars.len()
                )));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponents: &[u32]) -> GaussianRational {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, name: &str) -> Result<Option<u32>> {
        let idx = self.var_index(name)?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max())
    }

    /// The coefficient of the leading monomial in graded-lex order.
    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.terms.values().next_back()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.values().map(GaussianRational::max_bits).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Rewrites the polynomial over `vars`, which must contain every
    /// variable the polynomial actually uses.
    pub fn align<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let mut out = Self::zero(vars);
        let mut map = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            map.push(out.vars.iter().position(|w| w == v));
        }
        for (m, c) in &self.terms {
            let mut exps = vec![0; out.vars.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(Error::UnknownSymbol(self.vars[i].clone())),
                }
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Brings two operands onto one variable list, promoting bare
    /// constants. Panics when both carry different non-empty lists.
    fn unify<'a>(
        &'a self,
        other: &'a Self,
    ) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if self.vars == other.vars {
            (Cow::Borrowed(self), Cow::Borrowed(other))
        } else if self.vars.is_empty() {
            (Cow::Owned(self.align(&other.vars).unwrap()), Cow::Borrowed(other))
        } else if other.vars.is_empty() {
            (Cow::Borrowed(self), Cow::Owned(other.align(&self.vars).unwrap()))
        } else {
            panic!(
                "{}",
                Error::VariableMismatch {
                    left: self.vars.to_vec(),
                    right: other.vars.to_vec(),
                }
            )
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars || self.vars.is_empty() || other.vars.is_empty() {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn scale_by(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `name`.
    pub fn derivative(&self, name: &str) -> Result<Self> {
        let idx = self.var_index(name)?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] -= 1;
            out.add_term(Monomial(exps), c.scale(&rational(e as i64)));
        }
        Ok(out)
    }

    /// Substitutes `images[i]` for the i-th variable. All images must share
    /// one variable list, which becomes the variable list of the result.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(Error::Domain(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = match images.iter().find(|p| !p.vars.is_empty()) {
            Some(p) => p.vars.clone(),
            None => Arc::from(Vec::<String>::new()),
        };
        let images = images
            .iter()
            .map(|p| p.align(&target))
            .collect::<Result<Vec<_>>>()?;
        // powers[i][e] = images[i]^e, filled on demand
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::from_int(&target, 1), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact evaluation at a point given in variable order.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        self.check_arity(point.len())?;
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t = &t * &x.pow(e as u64);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation at a real point; the imaginary parts of
    /// the coefficients are carried through as a complex result.
    pub fn eval_f64(&self, point: &[f64]) -> Result<num_complex::Complex64> {
        self.check_arity(point.len())?;
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for (x, &e) in point.iter().zip(&m.0) {
                t *= x.powi(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if n == self.vars.len() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "point of dimension {n} for {} variables",
                self.vars.len()
            )))
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        let (l, r) = self.unify(rhs);
        let mut out = l.into_owned();
        for (m, c) in &r.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        let (l, r) = self.unify(rhs);
        let mut out = l.into_owned();
        for (m, c) in &r.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        let (l, r) = self.unify(rhs);
        let mut out = MultiPoly::zero(&l.vars);
        for (ma, ca) in &l.terms {
            for (mb, cb) in &r.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::from_int(&self.vars, 1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Self {
        if Zero::is_zero(r) {
            return self.zero_like();
        }
        self.scale_by(&GaussianRational::real(r.clone()))
    }
}

impl fmt::Display for MultiPoly {
    /// Renders in the polynomial text format: descending graded-lex order,
    /// explicit `*`, `^` for powers, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative_leading();
            let mag = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono = render_monomial(&self.vars, m);
            match (mono.is_empty(), mag == GaussianRational::one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn render_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}
