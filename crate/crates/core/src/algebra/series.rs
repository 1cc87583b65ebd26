use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::render_terms;
use super::{DensePoly, ExactScalar};
use crate::Error;

/// Formal power series truncated after `t^order`.
///
/// Exactly `order + 1` coefficients are stored. Binary operations on series
/// of different orders truncate to the smaller order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<ExactScalar>,
}

impl TruncSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<ExactScalar>) -> Self {
        coeffs.resize(order + 1, ExactScalar::zero());
        Self { order, coeffs }
    }

    pub fn from_ints<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<ExactScalar>,
    {
        Self::new(order, coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![ExactScalar::one()])
    }

    /// The series `t` (zero when `order == 0`).
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![ExactScalar::zero(), ExactScalar::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn to_poly(&self) -> DensePoly {
        DensePoly::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, Error> {
        let c0 = self.coeffs[0]
            .recip()
            .map_err(|_| Error::Domain("series inverse needs a nonzero constant term".into()))?;
        let mut out: Vec<ExactScalar> = Vec::with_capacity(self.order + 1);
        out.push(c0.clone());
        for n in 1..=self.order {
            let acc: ExactScalar = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-(acc * &c0));
        }
        Ok(Self::new(self.order, out))
    }

    pub fn checked_div(&self, den: &Self) -> Result<Self, Error> {
        if den.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "series division needs a denominator with nonzero constant term".into(),
            ));
        }
        let order = self.order.min(den.order);
        Ok(&self.truncate(order) * &den.truncate(order).inverse()?)
    }

    /// Formal exponential; the constant term must vanish.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("series exp needs a zero constant term".into()));
        }
        // E' = S' E  =>  n e_n = sum_{k=1..n} k s_k e_{n-k}
        let mut out = vec![ExactScalar::one()];
        for n in 1..=self.order {
            let acc: ExactScalar = (1..=n)
                .map(|k| ExactScalar::from(k) * &self.coeffs[k] * &out[n - k])
                .sum();
            out.push(acc / ExactScalar::from(n));
        }
        Ok(Self::new(self.order, out))
    }

    /// Formal logarithm; the constant term must be one.
    pub fn log(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("series log needs constant term 1".into()));
        }
        // S L' = S'  =>  n l_n = n s_n - sum_{k=1..n-1} k l_k s_{n-k}
        let mut out = vec![ExactScalar::zero()];
        for n in 1..=self.order {
            let inner: ExactScalar = (1..n)
                .map(|k| ExactScalar::from(k) * &out[k] * &self.coeffs[n - k])
                .sum();
            out.push(&self.coeffs[n] - &(inner / ExactScalar::from(n)));
        }
        Ok(Self::new(self.order, out))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// The retained terms as a polynomial string, without an order marker.
    pub fn render(&self, var: char) -> String {
        render_terms(self.coeffs.iter().enumerate(), var)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.render('t'), self.order + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<ExactScalar>::deserialize(deserializer)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom("a series needs at least one coefficient"));
        }
        Ok(Self::new(coeffs.len() - 1, coeffs))
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries::new(order, (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries::new(order, (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![ExactScalar::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncSeries::new(order, out)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::new(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}
