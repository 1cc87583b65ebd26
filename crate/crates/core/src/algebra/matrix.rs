use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DensePoly, ExactScalar};
use crate::Error;

/// Square matrix of big integers, stored row-major. Size zero is allowed
/// and has determinant one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::Domain(format!(
                "matrix is not square: {size} rows but a row of length {}",
                bad.len()
            )));
        }
        Ok(Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, Error> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.entries[i * size + i] = BigInt::one();
        }
        m
    }

    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![BigInt::zero(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        // chunks(0) panics, so clamp; an empty matrix yields no rows anyway
        self.entries.chunks(self.size.max(1))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.size != rhs.size {
            return Err(Error::Domain("matrix size mismatch".into()));
        }
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.size);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same size");
        }
        acc
    }

    /// `I - self`
    pub fn identity_minus(&self) -> Self {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = -&*x;
        }
        for i in 0..self.size {
            out.entries[i * self.size + i] += 1;
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.size;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// `det(I - t M)` as a polynomial in `t`.
    ///
    /// Evaluated exactly at `t = 0, 1, ..., size` and recovered by Newton
    /// interpolation; the result has degree at most `size` and constant
    /// term one.
    pub fn det_i_minus_t(&self) -> DensePoly {
        let n = self.size;
        let values: Vec<ExactScalar> = (0..=n)
            .map(|t| {
                let mut m = self.clone();
                for x in m.entries.iter_mut() {
                    *x *= -(t as i64);
                }
                for i in 0..n {
                    m.entries[i * n + i] += 1;
                }
                ExactScalar::from(m.det())
            })
            .collect();
        newton_interpolate(&values)
    }

    /// Plain-text form: one row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        self.rows()
            .take(self.size)
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Parses rows of whitespace-separated integers; an input with no rows
    /// is the 0x0 matrix. Lines starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self, Error> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_row)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn parse_row(line: &str) -> Result<Vec<BigInt>, Error> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid matrix entry {tok:?}")))
        })
        .collect()
}

/// Interpolates the polynomial taking `values[i]` at `t = i`.
fn newton_interpolate(values: &[ExactScalar]) -> DensePoly {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / ExactScalar::from(level);
        }
    }
    let mut p = DensePoly::zero();
    for i in (0..n).rev() {
        let shift = DensePoly::new(vec![ExactScalar::from(-(i as i64)), ExactScalar::one()]);
        p = &(&p * &shift) + &DensePoly::constant(dd[i].clone());
    }
    p
}

/// `det(I - t M)`.
pub fn poly_det_i_minus_tm(m: &IntMatrix) -> DensePoly {
    m.det_i_minus_t()
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .take(self.size)
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "IntMatrix{rows:?}")
    }
}
