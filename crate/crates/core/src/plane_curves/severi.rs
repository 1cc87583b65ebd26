//! Generalized Severi degrees of the plane relative to a line.
//!
//! `N^{d,g}(alpha, beta)` counts degree-`d` plane curves of genus `g` that
//! meet a fixed line `L` with `alpha_k` contacts of order `k` at fixed
//! general points of `L`, `beta_k` contacts of order `k` at unspecified
//! points of `L`, and pass through `2d + g - 1 + |beta|` general points of
//! the plane. Contacts must account for the whole intersection with `L`:
//! `I alpha + I beta = d` where `I alpha = sum_k k alpha_k`.
//!
//! Two families are computed:
//!
//! - [`severi_reducible`] counts possibly reducible curves, with `g`
//!   defined through `1 - g = sum over components of (1 - g_i)`, so that
//!   `g = (d-1)(d-2)/2 - delta` for `delta`-nodal curves. These satisfy the
//!   Caporaso–Harris recursion
//!
//!   ```text
//!   N^{d,g}(a, b) = sum_{k: b_k > 0} k N^{d,g}(a + e_k, b - e_k)
//!                 + sum (a choose a')(b' choose b) I^{b' - b} N^{d-1,g'}(a', b')
//!   ```
//!
//!   over `a' <= a`, `b' >= b`, `I a' + I b' = d - 1`,
//!   `g' = g - |b' - b| + 1`, starting from the empty curve
//!   `N^{0,1}(0, 0) = 1`.
//!
//! - [`severi_general`] counts irreducible curves. These are extracted from
//!   the reducible counts with the exponential formula: a reducible curve is
//!   a set of irreducible components that share out the point conditions
//!   and the fixed contact points, and whose `1 - g`, degrees and contact
//!   vectors add.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::binom_int;
use crate::{Error, ExactScalar};

/// Tangency data `(alpha, beta)` along the line, stored without trailing
/// zeros. Index `k - 1` holds the number of contacts of order `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tangency {
    alpha: Vec<u32>,
    beta: Vec<u32>,
}

impl Tangency {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Self {
        Self {
            alpha: trimmed(alpha),
            beta: trimmed(beta),
        }
    }

    /// Rejects negative entries.
    pub fn from_signed(alpha: &[i64], beta: &[i64]) -> Result<Self, Error> {
        let conv = |v: &[i64], name: &str| {
            v.iter()
                .map(|&x| {
                    u32::try_from(x).map_err(|_| {
                        Error::Domain(format!("tangency {name} has invalid entry {x}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(Self::new(conv(alpha, "alpha")?, conv(beta, "beta")?))
    }

    /// `beta = (d)`: `d` simple contacts at unspecified points, i.e. no
    /// condition along the line.
    pub fn transverse(d: u32) -> Self {
        Self::new(Vec::new(), vec![d])
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    /// `I alpha + I beta`, the total intersection with the line.
    pub fn intersection(&self) -> u64 {
        weight(&self.alpha) + weight(&self.beta)
    }
}

fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `sum_k k v_k`
fn weight(v: &[u32]) -> u64 {
    v.iter().enumerate().map(|(i, &x)| (i as u64 + 1) * u64::from(x)).sum()
}

fn size(v: &[u32]) -> u64 {
    v.iter().map(|&x| u64::from(x)).sum()
}

/// Degree, genus and tangency of a generalized Severi degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeveriKey {
    pub d: u32,
    pub g: i64,
    pub tangency: Tangency,
}

impl SeveriKey {
    pub fn new(d: u32, g: i64, tangency: Tangency) -> Result<Self, Error> {
        if d < 1 {
            return Err(Error::Domain("degree must be at least 1".into()));
        }
        Ok(Self { d, g, tangency })
    }

    /// Number of general point conditions, `2d + g - 1 + |beta|`.
    pub fn point_conditions(&self) -> i64 {
        point_conditions(i64::from(self.d), self.g, &self.tangency.beta)
    }
}

fn point_conditions(d: i64, g: i64, beta: &[u32]) -> i64 {
    2 * d + g - 1 + size(beta) as i64
}

fn max_genus(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

type Key = (u32, i64, Vec<u32>, Vec<u32>);

/// Memo tables for the two recursions. Reusing one cache across calls
/// shares work; a fresh cache per call is equally valid.
#[derive(Debug, Default)]
pub struct SeveriCache {
    reducible: HashMap<Key, BigInt>,
    irreducible: HashMap<Key, BigInt>,
}

impl SeveriCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.reducible.len() + self.irreducible.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Irreducible count.
    pub fn irreducible(&mut self, key: &SeveriKey) -> BigInt {
        self.irr(key.d, key.g, &key.tangency.alpha, &key.tangency.beta)
    }

    /// Possibly reducible count.
    pub fn reducible(&mut self, key: &SeveriKey) -> BigInt {
        self.red(key.d, key.g, &key.tangency.alpha, &key.tangency.beta)
    }

    fn red(&mut self, d: u32, g: i64, alpha: &[u32], beta: &[u32]) -> BigInt {
        let di = i64::from(d);
        if d == 0 {
            let empty = g == 1 && alpha.is_empty() && beta.is_empty();
            return BigInt::from(u8::from(empty));
        }
        // every component has 1 - g_i <= 1, so 1 - g <= d
        if weight(alpha) + weight(beta) != u64::from(d) || g > max_genus(di) || g < 1 - di {
            return BigInt::zero();
        }
        let key = (d, g, alpha.to_vec(), beta.to_vec());
        if let Some(v) = self.reducible.get(&key) {
            return v.clone();
        }

        let mut acc = BigInt::zero();

        // a moving contact of order k specializes to a fixed one
        for k in 0..beta.len() {
            if beta[k] == 0 {
                continue;
            }
            let mut a2 = alpha.to_vec();
            if a2.len() <= k {
                a2.resize(k + 1, 0);
            }
            a2[k] += 1;
            let mut b2 = beta.to_vec();
            b2[k] -= 1;
            let v = self.red(d, g, &trimmed(a2), &trimmed(b2));
            acc += v * (k as u64 + 1);
        }

        // the line splits off
        let target = u64::from(d - 1);
        for a_sub in sub_vectors(alpha) {
            let wa = weight(&a_sub);
            if wa + weight(beta) > target {
                continue;
            }
            let coeff_a: BigInt = alpha
                .iter()
                .zip(&a_sub)
                .map(|(&a, &s)| binom_int(i64::from(a), i64::from(s)))
                .product();
            for gamma in vectors_of_weight(target - wa - weight(beta)) {
                let len = beta.len().max(gamma.len());
                let b_sup: Vec<u32> = (0..len)
                    .map(|i| beta.get(i).copied().unwrap_or(0) + gamma.get(i).copied().unwrap_or(0))
                    .collect();
                let mut coeff = coeff_a.clone();
                for (i, &gk) in gamma.iter().enumerate() {
                    let b = beta.get(i).copied().unwrap_or(0);
                    coeff *= binom_int(i64::from(b + gk), i64::from(b));
                    coeff *= BigInt::from(i as u64 + 1).pow(gk);
                }
                let g_next = g - size(&gamma) as i64 + 1;
                let v = self.red(d - 1, g_next, &trimmed(a_sub.clone()), &trimmed(b_sup));
                acc += coeff * v;
            }
        }

        self.reducible.insert(key, acc.clone());
        acc
    }

    fn irr(&mut self, d: u32, g: i64, alpha: &[u32], beta: &[u32]) -> BigInt {
        let di = i64::from(d);
        if d < 1 || g < 0 || g > max_genus(di) || weight(alpha) + weight(beta) != u64::from(d) {
            return BigInt::zero();
        }
        let key = (d, g, alpha.to_vec(), beta.to_vec());
        if let Some(v) = self.irreducible.get(&key) {
            return v.clone();
        }
        let n = point_conditions(di, g, beta);
        let mut acc = self.red(d, g, alpha, beta);

        // Subtract reducible curves: split off the component through the
        // first point condition.
        for a1 in sub_vectors(alpha) {
            let choose_fixed: BigInt = alpha
                .iter()
                .zip(&a1)
                .map(|(&a, &s)| binom_int(i64::from(a), i64::from(s)))
                .product();
            let a2: Vec<u32> = alpha.iter().zip(&a1).map(|(a, s)| a - s).collect();
            for b1 in sub_vectors(beta) {
                let d1 = weight(&a1) + weight(&b1);
                if d1 < 1 || d1 >= u64::from(d) {
                    continue;
                }
                let d1 = d1 as u32;
                let b2: Vec<u32> = beta.iter().zip(&b1).map(|(b, s)| b - s).collect();
                for g1 in 0..=max_genus(i64::from(d1)) {
                    let n1 = point_conditions(i64::from(d1), g1, &b1);
                    if n1 < 1 || n1 > n {
                        continue;
                    }
                    let piece = self.irr(d1, g1, &trimmed(a1.clone()), &trimmed(b1.clone()));
                    if piece.is_zero() {
                        continue;
                    }
                    let rest = self.red(d - d1, 1 + g - g1, &trimmed(a2.clone()), &trimmed(b2.clone()));
                    if rest.is_zero() {
                        continue;
                    }
                    acc -= binom_int(n - 1, n1 - 1) * &choose_fixed * piece * rest;
                }
            }
        }

        self.irreducible.insert(key, acc.clone());
        acc
    }
}

/// All `w` with `0 <= w_k <= v_k`, same length as `v`.
fn sub_vectors(v: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(v.len())];
    for &bound in v {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=bound).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// All trimmed `w` with `sum_k k w_k = total` (partitions of `total` by
/// multiplicity).
fn vectors_of_weight(total: u64) -> Vec<Vec<u32>> {
    fn go(part: u64, remaining: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(trimmed(cur.clone()));
            return;
        }
        if part > remaining {
            return;
        }
        let idx = part as usize - 1;
        let mut m = 0;
        while m * part <= remaining {
            cur[idx] = m as u32;
            go(part + 1, remaining - m * part, cur, out);
            m += 1;
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; total as usize];
    go(1, total, &mut cur, &mut out);
    out
}

/// Irreducible generalized Severi degree `N^{d,g}(alpha, beta)`; zero when
/// `g` is outside `[0, (d-1)(d-2)/2]` or the contacts do not sum to `d`.
pub fn severi_general(key: &SeveriKey) -> ExactScalar {
    ExactScalar::from(SeveriCache::new().irreducible(key))
}

/// Possibly reducible generalized Severi degree (the classical
/// Caporaso–Harris numbers).
pub fn severi_reducible(key: &SeveriKey) -> ExactScalar {
    ExactScalar::from(SeveriCache::new().reducible(key))
}

/// Irreducible `delta`-nodal degree-`d` curves through the appropriate
/// number of general points, with no tangency condition.
pub fn severi_by_nodes(d: u32, delta: u32) -> Result<ExactScalar, Error> {
    if d < 1 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let top = max_genus(i64::from(d));
    if i64::from(delta) > top {
        return Err(Error::Domain(format!(
            "a degree-{d} curve has at most {top} nodes, got {delta}"
        )));
    }
    let key = SeveriKey::new(d, top - i64::from(delta), Tangency::transverse(d))?;
    Ok(severi_general(&key))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(d: u32, g: i64, alpha: &[u32], beta: &[u32]) -> SeveriKey {
        SeveriKey::new(d, g, Tangency::new(alpha.to_vec(), beta.to_vec())).unwrap()
    }

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from(v)
    }

    #[test]
    fn base_cases() {
        assert_eq!(severi_general(&key(1, 0, &[], &[1])), int(1));
        assert_eq!(severi_general(&key(1, 0, &[1], &[])), int(1));
        // a line cannot be tangent to the line
        assert_eq!(severi_general(&key(1, 0, &[], &[0, 1])), int(0));
        assert_eq!(severi_general(&key(1, 0, &[], &[2])), int(0));
    }

    #[test]
    fn reference_values() {
        assert_eq!(severi_general(&key(3, 0, &[], &[3])), int(12));
        assert_eq!(severi_general(&key(4, 2, &[], &[4])), int(27));
        assert_eq!(severi_general(&key(4, 1, &[], &[4])), int(225));
        assert_eq!(severi_by_nodes(3, 1).unwrap(), int(12));
        assert_eq!(severi_by_nodes(5, 1).unwrap(), int(48));
        assert_eq!(severi_by_nodes(4, 0).unwrap(), int(1));
    }

    #[test]
    fn reducible_counts() {
        // conic + line through 7 points: C(7,2) = 21
        assert_eq!(severi_reducible(&key(3, -1, &[], &[3])), int(21));
        // three lines through 6 points: 6! / (2!^3 3!) = 15
        assert_eq!(severi_reducible(&key(3, -2, &[], &[3])), int(15));
        // line + smooth cubic adds C(11,2) = 55 to the 620 rational quartics
        assert_eq!(severi_reducible(&key(4, 0, &[], &[4])), int(675));
        assert_eq!(severi_reducible(&key(2, -1, &[], &[2])), int(3));
    }

    #[test]
    fn conics_with_tangency() {
        // conics tangent to L at a fixed point through 3 points: 1
        assert_eq!(severi_general(&key(2, 0, &[0, 1], &[])), int(1));
        // tangent to L somewhere, through 4 points: 2
        assert_eq!(severi_general(&key(2, 0, &[], &[0, 1])), int(1) + int(1));
    }

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(severi_general(&key(3, 2, &[], &[3])), int(0));
        assert_eq!(severi_general(&key(3, -1, &[], &[3])), int(0));
        assert_eq!(severi_general(&key(3, 0, &[], &[2])), int(0));
    }

    #[test]
    fn by_nodes_range() {
        assert!(severi_by_nodes(3, 2).is_err());
        assert!(severi_by_nodes(0, 0).is_err());
        assert_eq!(severi_by_nodes(1, 0).unwrap(), int(1));
    }

    #[test]
    fn negative_tangency_rejected() {
        assert!(Tangency::from_signed(&[1, -1], &[]).is_err());
        let t = Tangency::from_signed(&[0, 1, 0], &[2, 0]).unwrap();
        assert_eq!(t.alpha(), &[0, 1]);
        assert_eq!(t.beta(), &[2]);
        assert_eq!(t.intersection(), 4);
    }

    #[test]
    fn warm_cache_agrees_with_cold() {
        let mut cache = SeveriCache::new();
        let k = key(5, 1, &[1], &[2, 1]);
        let cold = cache.irreducible(&k);
        assert!(!cache.is_empty());
        let warm = cache.irreducible(&k);
        assert_eq!(cold, warm);
        assert_eq!(ExactScalar::from(cold), severi_general(&k));
    }

    #[test]
    fn weight_partitions() {
        assert_eq!(vectors_of_weight(0), vec![Vec::<u32>::new()]);
        assert_eq!(vectors_of_weight(4).len(), 5);
        assert!(vectors_of_weight(6).iter().all(|v| weight(v) == 6));
    }
}
