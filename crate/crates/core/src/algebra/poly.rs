use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactScalar, TruncSeries};
use crate::Error;

/// Dense univariate polynomial with exact coefficients, lowest degree first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list and structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<ExactScalar>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(ExactScalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<ExactScalar>,
    {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^exp`
    pub fn monomial(c: ExactScalar, exp: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// `1 - t`
    pub fn one_minus_t() -> Self {
        Self::from_ints([1, -1])
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `t^n p(1/t)` for `n >= degree`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn to_series(&self, order: usize) -> TruncSeries {
        TruncSeries::new(order, self.coeffs.clone())
    }

    /// Euclidean division; the remainder has degree below the divisor's.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), Error> {
        let (dlead, ddeg) = match (divisor.leading(), divisor.degree()) {
            (Some(l), Some(d)) => (l.clone(), d),
            _ => return Err(Error::DivisionByZero),
        };
        let mut rem = self.coeffs.clone();
        let Some(deg) = self.degree().filter(|&d| d >= ddeg) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![ExactScalar::zero(); deg - ddeg + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + ddeg] / &dlead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&l.recip().expect("nonzero leading coefficient")),
            None => a,
        }
    }

    /// Human-readable form in ascending powers, e.g. `1 - 2t + t^2`.
    pub fn render(&self, var: char) -> String {
        render_terms(self.coeffs.iter().enumerate(), var)
    }
}

pub(crate) fn render_terms<'a>(
    terms: impl Iterator<Item = (usize, &'a ExactScalar)>,
    var: char,
) -> String {
    let mut out = String::new();
    for (exp, c) in terms.filter(|(_, c)| !c.is_zero()) {
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if exp == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("({mag})"));
            }
        }
        out.push(var);
        if exp > 1 {
            out.push_str(&format!("^{exp}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('t'))
    }
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly({self})")
    }
}

impl Serialize for DensePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DensePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Self::new(Vec::deserialize(deserializer)?))
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for DensePoly {
            type Output = DensePoly;
            fn $m(self, rhs: DensePoly) -> DensePoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);
