use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::binom_int;
use crate::{Error, ExactScalar};

/// Number of rational degree-`d` plane curves through `3d - 1` general
/// points.
pub fn kontsevich_nd(d: u32) -> Result<ExactScalar, Error> {
    let table = kontsevich_table(d)?;
    Ok(ExactScalar::from(table[d as usize].clone()))
}

/// `N_0 ..= N_d` (with `N_0 = 0` as padding), filled bottom-up by
///
/// `N_d = sum_{d1 + d2 = d} N_{d1} N_{d2} [d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1)]`.
pub fn kontsevich_table(d: u32) -> Result<Vec<BigInt>, Error> {
    if d < 1 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let mut n = vec![BigInt::zero(), BigInt::from(1)];
    for deg in 2..=i64::from(d) {
        let mut acc = BigInt::zero();
        for d1 in 1..deg {
            let d2 = deg - d1;
            let a = binom_int(3 * deg - 4, 3 * d1 - 2) * (d1 * d1 * d2 * d2);
            let b = binom_int(3 * deg - 4, 3 * d1 - 1) * (d1 * d1 * d1 * d2);
            acc += &n[d1 as usize] * &n[d2 as usize] * (a - b);
        }
        n.push(acc);
    }
    Ok(n)
}
