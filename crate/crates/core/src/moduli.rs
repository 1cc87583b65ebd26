//! Dimension counts for stable maps and intersection numbers of descendant
//! and kappa classes on genus-0 Deligne–Mumford space.
//!
//! Integrals are written `<tau_{a_1} ... tau_{a_n}>_g`, the integral of
//! `psi_1^{a_1} ... psi_n^{a_n}` over the compactified moduli space of
//! genus-`g` curves with `n` marked points.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, ExactScalar};

/// Target manifold data entering the index formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TargetDescriptor {
    real_dimension: u32,
    c1_pairing: i64,
}

impl TargetDescriptor {
    /// `real_dimension` must be even and at least 2; `c1_pairing` is the
    /// value of the first Chern class on the curve class.
    pub fn new(real_dimension: u32, c1_pairing: i64) -> Result<Self, Error> {
        if real_dimension < 2 || real_dimension % 2 != 0 {
            return Err(Error::Domain(format!(
                "real dimension must be even and >= 2, got {real_dimension}"
            )));
        }
        Ok(Self {
            real_dimension,
            c1_pairing,
        })
    }

    pub fn real_dimension(&self) -> u32 {
        self.real_dimension
    }

    pub fn c1_pairing(&self) -> i64 {
        self.c1_pairing
    }
}

/// Real dimension of the space of genus-`g`, `n`-pointed stable maps:
/// `2 c1(A) + (dim X - 6)(1 - g) + 2n`.
pub fn expected_dimension(target: &TargetDescriptor, g: u32, n: u32) -> i64 {
    2 * target.c1_pairing
        + (i64::from(target.real_dimension) - 6) * (1 - i64::from(g))
        + 2 * i64::from(n)
}

/// Genus and psi exponents of a descendant integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescendantIndex {
    genus: u32,
    powers: Vec<u32>,
}

impl DescendantIndex {
    /// Rejects unstable `(g, n)`, i.e. `2g - 2 + n <= 0`.
    pub fn new(genus: u32, powers: Vec<u32>) -> Result<Self, Error> {
        if 2 * i64::from(genus) - 2 + powers.len() as i64 <= 0 {
            return Err(Error::Domain(format!(
                "unstable moduli: g = {genus}, n = {}",
                powers.len()
            )));
        }
        Ok(Self { genus, powers })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    /// Supported for genus 0 and for `<tau_1>_1`.
    pub fn integral(&self) -> Result<ExactScalar, Error> {
        match (self.genus, self.powers.as_slice()) {
            (0, p) => descendant_integral_g0(p),
            (1, [1]) => Ok(psi_one_elliptic()),
            (g, p) => Err(Error::Domain(format!(
                "descendant integral not available for genus {g} with powers {p:?}"
            ))),
        }
    }
}

/// `<tau_{a_1} ... tau_{a_n}>_0` computed with the string equation.
///
/// Zero unless the exponents sum to `n - 3`. Requires `n >= 3`.
pub fn descendant_integral_g0(powers: &[u32]) -> Result<ExactScalar, Error> {
    if powers.len() < 3 {
        return Err(Error::Domain(format!(
            "genus-0 integrals need at least 3 marked points, got {}",
            powers.len()
        )));
    }
    let mut memo = HashMap::new();
    let mut key = powers.to_vec();
    key.sort_unstable();
    Ok(ExactScalar::from(string_recursion(key, &mut memo)))
}

/// `key` is sorted ascending, so a zero exponent, if any, comes first.
fn string_recursion(key: Vec<u32>, memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
    let n = key.len();
    let total: u64 = key.iter().map(|&a| u64::from(a)).sum();
    if n < 3 || total + 3 != n as u64 {
        return BigInt::zero();
    }
    if n == 3 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // With sum = n - 3 < n some exponent is zero; drop it and lower each
    // of the others in turn.
    debug_assert_eq!(key[0], 0);
    let rest = &key[1..];
    let mut acc = BigInt::zero();
    for j in 0..rest.len() {
        if rest[j] == 0 {
            continue;
        }
        let mut next = rest.to_vec();
        next[j] -= 1;
        next.sort_unstable();
        acc += string_recursion(next, memo);
    }
    memo.insert(key, acc.clone());
    acc
}

/// Integral of `kappa_a` over the genus-0 moduli space with `a + 3`
/// points, which is `<tau_{a+1} tau_0^{a+3}>_0` by pushing forward along
/// the map forgetting an extra point.
pub fn kappa_pure_integral_g0(a: u32) -> Result<ExactScalar, Error> {
    if a < 1 {
        return Err(Error::Domain(
            "kappa_0 is a number, not an integral; use kappa_zero".into(),
        ));
    }
    let mut powers = vec![0u32; a as usize + 3];
    powers.push(a + 1);
    descendant_integral_g0(&powers)
}

/// `kappa_0 = 2g - 2 + n` on the `(g, n)` moduli space.
pub fn kappa_zero(g: u32, n: u32) -> Result<i64, Error> {
    let v = 2 * i64::from(g) - 2 + i64::from(n);
    if v <= 0 {
        return Err(Error::Domain(format!("unstable moduli: g = {g}, n = {n}")));
    }
    Ok(v)
}

/// `<tau_1>_1 = 1/24`: psi_1 is a twelfth of the boundary point of the
/// one-pointed genus-1 space, and that point has orbifold degree 1/2.
pub fn psi_one_elliptic() -> ExactScalar {
    ExactScalar::new(1, 24).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factorial;

    fn closed_form(powers: &[u32]) -> ExactScalar {
        let n = powers.len() as u64;
        let sum: u64 = powers.iter().map(|&a| u64::from(a)).sum();
        if sum + 3 != n {
            return ExactScalar::zero();
        }
        let den: BigInt = powers.iter().map(|&a| factorial(u64::from(a))).product();
        ExactScalar::new(factorial(n - 3), den).unwrap()
    }

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn dimension_examples() {
        let plane = |c1| TargetDescriptor::new(4, c1).unwrap();
        assert_eq!(expected_dimension(&plane(3), 0, 0), 4);
        for d in 1..6i64 {
            let n = (3 * d - 1) as u32;
            assert_eq!(expected_dimension(&plane(3 * d), 0, n), 12 * d - 4);
            // constraints from n point conditions: 2 each in real dimension 4
            assert_eq!(expected_dimension(&plane(3 * d), 0, n) - 4 * i64::from(n), 0);
        }
        let cy = TargetDescriptor::new(6, 0).unwrap();
        assert_eq!(expected_dimension(&cy, 1, 0), 0);
        assert!(TargetDescriptor::new(5, 0).is_err());
        assert!(TargetDescriptor::new(0, 0).is_err());
    }

    #[test]
    fn descendant_examples() {
        assert_eq!(descendant_integral_g0(&[0, 0, 0]).unwrap(), q("1"));
        assert_eq!(descendant_integral_g0(&[1, 0, 0, 0]).unwrap(), q("1"));
        assert_eq!(descendant_integral_g0(&[1, 1, 0, 0, 0]).unwrap(), q("2"));
        assert_eq!(descendant_integral_g0(&[2, 0, 0, 0]).unwrap(), q("0"));
        assert!(descendant_integral_g0(&[0, 0]).is_err());
    }

    #[test]
    fn four_point_psi_classes_agree() {
        for i in 0..4 {
            let mut p = vec![0; 4];
            p[i] = 1;
            assert_eq!(descendant_integral_g0(&p).unwrap(), q("1"));
        }
    }

    #[test]
    fn matches_closed_form_small() {
        for powers in [vec![3, 0, 0, 0, 0, 0], vec![2, 1, 0, 0, 0, 0], vec![1, 1, 1, 0, 0, 0]] {
            assert_eq!(descendant_integral_g0(&powers).unwrap(), closed_form(&powers));
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_pure_integral_g0(1).unwrap(), q("1"));
        assert_eq!(kappa_pure_integral_g0(2).unwrap(), q("1"));
        assert!(kappa_pure_integral_g0(0).is_err());
        assert_eq!(kappa_zero(0, 3).unwrap(), 1);
        assert_eq!(kappa_zero(1, 1).unwrap(), 1);
        assert_eq!(kappa_zero(2, 0).unwrap(), 2);
        assert!(kappa_zero(0, 2).is_err());
        assert!(kappa_zero(1, 0).is_err());
        // kappa_0 on M_{0,3} is the pushforward of psi_4 from M_{0,4}
        assert_eq!(
            ExactScalar::from(kappa_zero(0, 3).unwrap()),
            descendant_integral_g0(&[0, 0, 0, 1]).unwrap()
        );
    }

    #[test]
    fn elliptic_constant() {
        let v = psi_one_elliptic();
        assert_eq!(v, q("1/24"));
        assert_eq!(&v * &q("12"), q("1/2"));
        assert!(!v.is_negative() && v < q("1"));
    }

    #[test]
    fn descendant_index() {
        assert!(DescendantIndex::new(0, vec![0, 0]).is_err());
        assert!(DescendantIndex::new(1, vec![]).is_err());
        assert_eq!(DescendantIndex::new(1, vec![1]).unwrap().integral().unwrap(), q("1/24"));
        assert_eq!(
            DescendantIndex::new(0, vec![1, 1, 0, 0, 0]).unwrap().integral().unwrap(),
            q("2")
        );
        assert!(DescendantIndex::new(2, vec![]).unwrap().integral().is_err());
    }
}
