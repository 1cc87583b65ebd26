//! Gromov series of symplectic mapping tori and knot-surgery manifolds.
//!
//! A symplectomorphism `f` of `X` is given by its action on rational
//! homology, one integer matrix per degree. The series of the mapping torus
//! in the section class is the Lefschetz zeta function
//!
//! ```text
//! zeta_f(t) = prod_{k odd} det(I - t f_k) / prod_{k even} det(I - t f_k)
//!           = exp( sum_{m >= 1} L(f^m) t^m / m ),
//! ```
//!
//! and for the fiber monodromy of a fibered knot `det(I - t f_1)` is the
//! Alexander polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{DensePoly, ExactScalar, IntMatrix, TruncSeries};
use crate::Error;

/// Matrices of `f_*` on `H_0, H_1, ..., H_D`. An empty matrix stands for a
/// zero homology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyAction {
    maps: Vec<IntMatrix>,
}

impl HomologyAction {
    pub fn new(maps: Vec<IntMatrix>) -> Result<Self, Error> {
        if maps.is_empty() {
            return Err(Error::Domain("homology action needs at least H_0".into()));
        }
        Ok(Self { maps })
    }

    /// The action of a map of a connected space: identity on `H_0`, the
    /// given matrices in degrees `1, 2, ...`.
    pub fn connected(higher: Vec<IntMatrix>) -> Self {
        let mut maps = vec![IntMatrix::identity(1)];
        maps.extend(higher);
        Self { maps }
    }

    pub fn maps(&self) -> &[IntMatrix] {
        &self.maps
    }

    pub fn top_degree(&self) -> usize {
        self.maps.len() - 1
    }

    /// Action on `H_k`; zero-dimensional above the top degree.
    pub fn degree(&self, k: usize) -> IntMatrix {
        self.maps.get(k).cloned().unwrap_or_else(|| IntMatrix::zeros(0))
    }

    /// One matrix block per degree, separated by blank lines. A block made
    /// of the single word `empty` is a zero homology group; `#` starts a
    /// comment line.
    pub fn parse_text(text: &str) -> Result<Self, Error> {
        let mut blocks: Vec<Vec<&str>> = vec![Vec::new()];
        for line in text.lines().map(str::trim) {
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                if !blocks.last().unwrap().is_empty() {
                    blocks.push(Vec::new());
                }
            } else {
                blocks.last_mut().unwrap().push(line);
            }
        }
        if blocks.last().is_some_and(Vec::is_empty) {
            blocks.pop();
        }
        let maps = blocks
            .into_iter()
            .map(|b| match b.as_slice() {
                ["empty"] => Ok(IntMatrix::zeros(0)),
                _ => IntMatrix::parse_text(&b.join("\n")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(maps)
    }

    pub fn to_text(&self) -> String {
        self.maps
            .iter()
            .map(|m| {
                if m.size() == 0 {
                    "empty".to_string()
                } else {
                    m.to_text()
                }
            })
            .collect::<Vec<_>>()
            .join("\n\n")
    }
}

/// `det(I - f_1)` and whether it is a unit, i.e. whether the section
/// class of the mapping torus is well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionClassCheck {
    pub determinant: BigInt,
    pub defined: bool,
}

pub fn section_class_defined(action: &HomologyAction) -> SectionClassCheck {
    let determinant = action.degree(1).identity_minus().det();
    let defined = determinant.abs().is_one();
    SectionClassCheck {
        determinant,
        defined,
    }
}

/// Which Gromov series a result represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    /// Multiples of the section class of a mapping torus only.
    PartialSection,
    /// The full Gromov series, equal to the Seiberg–Witten series.
    FullGromovSeibergWitten,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::PartialSection => "partial Gromov series (section class)",
            SeriesKind::FullGromovSeibergWitten => "Gromov series = Seiberg-Witten series",
        })
    }
}

/// A rational function together with its power series expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GromovSeriesResult {
    pub kind: SeriesKind,
    pub numerator: DensePoly,
    pub denominator: DensePoly,
    pub expansion: TruncSeries,
}

impl GromovSeriesResult {
    fn from_fraction(
        kind: SeriesKind,
        numerator: DensePoly,
        denominator: DensePoly,
        order: usize,
    ) -> Result<Self, Error> {
        let c0 = denominator.coeff(0);
        if !c0.abs().is_one() {
            return Err(Error::Domain(format!(
                "denominator {denominator} does not have a unit constant term"
            )));
        }
        let (numerator, denominator) = if c0.is_one() {
            (numerator, denominator)
        } else {
            (-&numerator, -&denominator)
        };
        let expansion = numerator
            .to_series(order)
            .checked_div(&denominator.to_series(order))?;
        Ok(Self {
            kind,
            numerator,
            denominator,
            expansion,
        })
    }

    /// Numerator and denominator with their common factor removed and the
    /// denominator's constant term equal to one.
    pub fn reduced(&self) -> (DensePoly, DensePoly) {
        let g = self.numerator.gcd(&self.denominator);
        if g.is_zero() {
            return (self.numerator.clone(), self.denominator.clone());
        }
        let (num, _) = self.numerator.div_rem(&g).expect("nonzero gcd");
        let (den, _) = self.denominator.div_rem(&g).expect("nonzero gcd");
        let c0 = den.coeff(0).recip().expect("gcd divides a unit-constant polynomial");
        (num.scale(&c0), den.scale(&c0))
    }

    /// `p` when the reduced denominator is one, otherwise `(p)/(q)`.
    pub fn render_rational(&self, var: char) -> String {
        let (num, den) = self.reduced();
        if den == DensePoly::one() {
            return num.render(var);
        }
        format!("({})/({})", num.render(var), den.render(var))
    }
}

/// `prod_{k odd} det(I - t f_k) / prod_{k even} det(I - t f_k)`, expanded
/// to `t^order`.
///
/// Equals the partial Gromov series of the mapping torus in the section
/// class when [`section_class_defined`] holds; the fraction is returned
/// either way.
pub fn lefschetz_zeta(action: &HomologyAction, order: usize) -> GromovSeriesResult {
    let mut numerator = DensePoly::one();
    let mut denominator = DensePoly::one();
    for (k, m) in action.maps.iter().enumerate() {
        let p = m.det_i_minus_t();
        if k % 2 == 1 {
            numerator = &numerator * &p;
        } else {
            denominator = &denominator * &p;
        }
    }
    GromovSeriesResult::from_fraction(SeriesKind::PartialSection, numerator, denominator, order)
        .expect("det(I - tM) has constant term 1")
}

/// Lefschetz numbers `L(f^m) = sum_k (-1)^k tr(f_k^m)` for `m = 1..=m_max`.
pub fn lefschetz_numbers(action: &HomologyAction, m_max: u32) -> Vec<BigInt> {
    let mut powers: Vec<IntMatrix> = action.maps.clone();
    let mut out = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        if m > 1 {
            for (p, f) in powers.iter_mut().zip(&action.maps) {
                *p = p.mul(f).expect("same size");
            }
        }
        let l = powers.iter().enumerate().fold(BigInt::zero(), |acc, (k, p)| {
            if k % 2 == 0 {
                acc + p.trace()
            } else {
                acc - p.trace()
            }
        });
        out.push(l);
    }
    out
}

/// `exp(sum_{m=1..order} L(f^m) t^m / m)`, the trace side of the zeta
/// function.
pub fn zeta_from_traces(action: &HomologyAction, order: usize) -> TruncSeries {
    let mut coeffs = vec![ExactScalar::zero()];
    if order > 0 {
        for (i, l) in lefschetz_numbers(action, order as u32).into_iter().enumerate() {
            coeffs.push(ExactScalar::new(l, i as i64 + 1).expect("nonzero"));
        }
    }
    TruncSeries::new(order, coeffs).exp().expect("zero constant term")
}

/// `det(I - t M)` for the monodromy on `H_1` of the fiber of a fibered knot.
pub fn alexander_from_monodromy(monodromy: &IntMatrix) -> Result<DensePoly, Error> {
    if monodromy.size() % 2 != 0 {
        return Err(Error::Domain(format!(
            "a fiber surface has even-dimensional H_1, got size {}",
            monodromy.size()
        )));
    }
    Ok(monodromy.det_i_minus_t())
}

/// `A_K(t) / (1 - t)^2`, the section-class series of the mapping torus of
/// the knot monodromy.
pub fn knot_surgery_series_xk(
    monodromy: &IntMatrix,
    order: usize,
) -> Result<GromovSeriesResult, Error> {
    let alexander = alexander_from_monodromy(monodromy)?;
    GromovSeriesResult::from_fraction(
        SeriesKind::PartialSection,
        alexander,
        DensePoly::one_minus_t().pow(2),
        order,
    )
}

/// `A_K(t) (1 - t)^{n-2}`, the full Gromov (and Seiberg–Witten) series of
/// the fiber sum of `E(n)` with the knot mapping torus, `n >= 2`.
pub fn en_knot_series(
    monodromy: &IntMatrix,
    n: i64,
    order: usize,
) -> Result<GromovSeriesResult, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("E(n, K) series needs n >= 2, got {n}")));
    }
    let alexander = alexander_from_monodromy(monodromy)?;
    let numerator = &alexander * &DensePoly::one_minus_t().pow((n - 2) as u32);
    GromovSeriesResult::from_fraction(
        SeriesKind::FullGromovSeibergWitten,
        numerator,
        DensePoly::one(),
        order,
    )
}

/// Transvection `x -> x + omega(v, x) v` for the standard symplectic form
/// on `Z^{2g}` (basis `a_1, b_1, ..., a_g, b_g`): the action on `H_1` of a
/// Dehn twist about a curve in class `v`.
pub fn symplectic_transvection(v: &[i64]) -> Result<IntMatrix, Error> {
    if v.len() % 2 != 0 {
        return Err(Error::Domain("symplectic vectors have even length".into()));
    }
    let n = v.len();
    let omega_v_e = |j: usize| -> i64 {
        // omega(v, e_j)
        if j % 2 == 0 {
            -v[j + 1]
        } else {
            v[j - 1]
        }
    };
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::from(i == j) + omega_v_e(j) * v[i])
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows)
}

/// Fiber monodromies on `H_1` for a few small fibered knots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogKnot {
    /// Disk fiber, `H_1 = 0`.
    Unknot,
    /// Genus-1 fiber; Alexander polynomial `1 - t + t^2`.
    Trefoil,
    /// Genus-1 fiber; Alexander polynomial `1 - 3t + t^2`.
    FigureEight,
}

impl CatalogKnot {
    pub const ALL: [CatalogKnot; 3] = [Self::Unknot, Self::Trefoil, Self::FigureEight];

    pub fn name(self) -> &'static str {
        match self {
            Self::Unknot => "unknot",
            Self::Trefoil => "trefoil",
            Self::FigureEight => "figure-eight",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn monodromy(self) -> IntMatrix {
        match self {
            Self::Unknot => IntMatrix::zeros(0),
            Self::Trefoil => IntMatrix::from_rows(&[[1, -1], [1, 0]]).expect("square"),
            Self::FigureEight => IntMatrix::from_rows(&[[2, 1], [1, 1]]).expect("square"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> IntMatrix {
        CatalogKnot::Trefoil.monodromy()
    }

    fn torus_identity() -> HomologyAction {
        HomologyAction::connected(vec![IntMatrix::identity(2), IntMatrix::identity(1)])
    }

    #[test]
    fn section_class_examples() {
        let t = section_class_defined(&HomologyAction::connected(vec![trefoil()]));
        assert_eq!(t.determinant, BigInt::from(1));
        assert!(t.defined);
        let id = section_class_defined(&torus_identity());
        assert_eq!(id.determinant, BigInt::zero());
        assert!(!id.defined);
        let two = section_class_defined(&HomologyAction::connected(vec![IntMatrix::from_rows(&[[2]]).unwrap()]));
        assert_eq!(two.determinant, BigInt::from(-1));
        assert!(two.defined);
    }

    #[test]
    fn zeta_examples() {
        let z = lefschetz_zeta(&torus_identity(), 5);
        assert_eq!(z.expansion, TruncSeries::one(5));
        assert_eq!(z.render_rational('t'), "1");

        let point = HomologyAction::connected(vec![]);
        let z = lefschetz_zeta(&point, 4);
        assert_eq!(z.numerator, DensePoly::one());
        assert_eq!(z.denominator, DensePoly::one_minus_t());
        assert_eq!(z.expansion, TruncSeries::from_ints(4, [1, 1, 1, 1, 1]));

        let z = lefschetz_zeta(&HomologyAction::connected(vec![trefoil()]), 5);
        assert_eq!(z.numerator, DensePoly::from_ints([1, -1, 1]));
        assert_eq!(z.denominator, DensePoly::one_minus_t());
        assert_eq!(z.expansion, TruncSeries::from_ints(5, [1, 0, 1, 1, 1, 1]));
        assert_eq!(z.render_rational('t'), "(1 - t + t^2)/(1 - t)");
    }

    #[test]
    fn lefschetz_number_examples() {
        assert!(lefschetz_numbers(&torus_identity(), 5).iter().all(Zero::is_zero));
        let point = HomologyAction::connected(vec![]);
        assert!(lefschetz_numbers(&point, 5).iter().all(One::is_one));
        let l = lefschetz_numbers(&HomologyAction::connected(vec![trefoil()]), 1);
        assert_eq!(l, vec![BigInt::zero()]);
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander_from_monodromy(&trefoil()).unwrap(), DensePoly::from_ints([1, -1, 1]));
        assert_eq!(alexander_from_monodromy(&IntMatrix::zeros(0)).unwrap(), DensePoly::one());
        assert_eq!(
            alexander_from_monodromy(&CatalogKnot::FigureEight.monodromy()).unwrap(),
            DensePoly::from_ints([1, -3, 1])
        );
        assert!(alexander_from_monodromy(&IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn knot_surgery_examples() {
        let r = knot_surgery_series_xk(&trefoil(), 4).unwrap();
        assert_eq!(r.expansion, TruncSeries::from_ints(4, [1, 1, 2, 3, 4]));
        let u = knot_surgery_series_xk(&IntMatrix::zeros(0), 6).unwrap();
        assert_eq!(u.expansion, TruncSeries::from_ints(6, [1, 2, 3, 4, 5, 6, 7]));
        let back = &r.expansion * &DensePoly::one_minus_t().pow(2).to_series(4);
        assert_eq!(back, r.numerator.to_series(4));
    }

    #[test]
    fn en_examples() {
        let unknot = IntMatrix::zeros(0);
        assert_eq!(en_knot_series(&unknot, 2, 3).unwrap().numerator, DensePoly::one());
        assert_eq!(
            en_knot_series(&trefoil(), 2, 3).unwrap().numerator,
            DensePoly::from_ints([1, -1, 1])
        );
        let r = en_knot_series(&trefoil(), 3, 5).unwrap();
        assert_eq!(r.numerator, DensePoly::from_ints([1, -2, 2, -1]));
        assert_eq!(r.denominator, DensePoly::one());
        assert_eq!(r.render_rational('t'), "1 - 2t + 2t^2 - t^3");
        assert!(en_knot_series(&trefoil(), 1, 3).is_err());
    }

    #[test]
    fn transvections() {
        assert_eq!(symplectic_transvection(&[1, 0]).unwrap(), IntMatrix::from_rows(&[[1, 1], [0, 1]]).unwrap());
        assert_eq!(symplectic_transvection(&[0, 1]).unwrap(), IntMatrix::from_rows(&[[1, 0], [-1, 1]]).unwrap());
        assert!(symplectic_transvection(&[1, 0, 1]).is_err());
    }

    #[test]
    fn action_text_round_trip() {
        let a = HomologyAction::new(vec![
            IntMatrix::identity(1),
            trefoil(),
            IntMatrix::zeros(0),
            IntMatrix::from_rows(&[[-1]]).unwrap(),
        ])
        .unwrap();
        let text = a.to_text();
        assert_eq!(HomologyAction::parse_text(&text).unwrap(), a);
        let with_noise = "# torus\n1\n\n\n1 0\n0 1\n\n1\n\n";
        assert_eq!(HomologyAction::parse_text(with_noise).unwrap(), torus_identity());
        assert!(HomologyAction::parse_text("").is_err());
    }
}
