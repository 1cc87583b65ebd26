use crate::algebra::TruncSeries;

/// `prod_{m >= 1} (1 - q^m)^{-12}` up to `q^order`: the generating series
/// of rational curves in the section class of the rational elliptic surface
/// plus `m` fibers.
pub fn bryan_leung_series(order: usize) -> TruncSeries {
    let mut euler = TruncSeries::one(order);
    for m in 1..=order {
        let mut factor = vec![0i64; m + 1];
        factor[0] = 1;
        factor[m] = -1;
        euler = &euler * &TruncSeries::from_ints(order, factor);
    }
    euler
        .inverse()
        .expect("constant term is one")
        .pow(12)
}
