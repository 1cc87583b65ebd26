use serde::{Deserialize, Serialize};

use super::table::{parse_json_lines, Caps, RelKey, RelTable};
use crate::algebra::factorial;
use crate::{Error, ExactScalar};

/// One weight of a user-supplied S-matrix: contacts `from` on the left
/// side glue to contacts `to` on the right side with the given weight and
/// bidegree shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SMatrixEntry {
    pub from: Vec<u32>,
    pub to: Vec<u32>,
    pub shift: [i64; 2],
    pub weight: ExactScalar,
}

/// Scattering correction between the two sides of a gluing. The identity
/// matches equal contact vectors with weight one and no shift.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SMatrix {
    // None is the identity
    entries: Option<Vec<SMatrixEntry>>,
}

impl SMatrix {
    pub fn identity() -> Self {
        Self { entries: None }
    }

    /// Only the listed pairs glue; `from` and `to` must have equal length
    /// and positive entries.
    pub fn from_entries(entries: Vec<SMatrixEntry>) -> Result<Self, Error> {
        for e in &entries {
            if e.from.len() != e.to.len() {
                return Err(Error::Domain(format!(
                    "S-matrix entry {:?} -> {:?} changes the number of contacts",
                    e.from, e.to
                )));
            }
            if e.from.contains(&0) || e.to.contains(&0) {
                return Err(Error::Domain("contact multiplicities must be positive".into()));
            }
        }
        Ok(Self {
            entries: Some(entries),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_none()
    }

    /// One JSON object per line with fields `from`, `to`, `shift`, `weight`.
    pub fn parse_records(text: &str) -> Result<Self, Error> {
        Self::from_entries(parse_json_lines(text)?)
    }

    /// `(shift, weight)` pairs for gluing `left` to `right`.
    fn weights(&self, left: &[u32], right: &[u32]) -> Vec<([i64; 2], ExactScalar)> {
        match &self.entries {
            None if left == right => vec![([0, 0], ExactScalar::one())],
            None => Vec::new(),
            Some(es) => es
                .iter()
                .filter(|e| e.from == left && e.to == right)
                .map(|e| (e.shift, e.weight.clone()))
                .collect(),
        }
    }
}

/// Genus of the connected curve obtained by gluing domains of Euler
/// characteristics `chi_x`, `chi_y` at `ell` nodes and smoothing:
/// `2 - 2g = chi_x + chi_y - 2 ell`. A negative value means the result
/// cannot be connected.
pub fn glued_genus(chi_x: i64, chi_y: i64, ell: u64) -> Result<i64, Error> {
    let chi = chi_x + chi_y - 2 * ell as i64;
    if chi % 2 != 0 {
        return Err(Error::Domain(format!(
            "glued Euler characteristic {chi} is odd"
        )));
    }
    Ok((2 - chi) / 2)
}

/// Glues every left entry to every right entry with matching contacts.
///
/// A pair with `ell` contacts `s` contributes
/// `count_x * count_y * (s_1 ... s_ell) * weight / ell!` at Euler
/// characteristic `chi_x + chi_y - 2 ell`, bidegree `b_x + b_y + shift` and
/// no contacts. Contacts are ordered, so the `ell!` turns the sum over
/// numberings into a count of unordered matchings.
pub fn convolve(
    x: &RelTable,
    s_matrix: &SMatrix,
    y: &RelTable,
    caps: Caps,
) -> Result<RelTable, Error> {
    for (side, t) in [("left", x), ("right", y)] {
        if let Some(tc) = t.truncation() {
            if caps.degree > tc.degree {
                return Err(Error::Domain(format!(
                    "{side} table is only complete to degree {}, cannot convolve to degree {}",
                    tc.degree, caps.degree
                )));
            }
        }
    }
    let mut out = RelTable::new();
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            let ell = kx.contacts.len();
            for (shift, weight) in s_matrix.weights(&kx.contacts, &ky.contacts) {
                let key = RelKey {
                    euler: kx.euler + ky.euler - 2 * ell as i64,
                    bidegree: [
                        kx.bidegree[0] + ky.bidegree[0] + shift[0],
                        kx.bidegree[1] + ky.bidegree[1] + shift[1],
                    ],
                    contacts: Vec::new(),
                };
                if !caps.admits(&key) {
                    continue;
                }
                let mult = ExactScalar::new(kx.contact_product(), factorial(ell as u64))?;
                out.add(key, cx * cy * mult * weight);
            }
        }
    }
    Ok(out.with_truncation(Some(caps)))
}

/// Disconnected union: Euler characteristics and bidegrees add, contact
/// vectors are shuffled together (every way of interleaving the numbered
/// contact points of the two pieces).
pub fn disjoint_product(a: &RelTable, b: &RelTable, caps: Caps) -> RelTable {
    let mut out = RelTable::new();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let euler = ka.euler + kb.euler;
            let bidegree = [ka.bidegree[0] + kb.bidegree[0], ka.bidegree[1] + kb.bidegree[1]];
            if ka.contacts.len() + kb.contacts.len() > caps.contacts {
                continue;
            }
            let c = ca * cb;
            for contacts in shuffles(&ka.contacts, &kb.contacts) {
                let key = RelKey {
                    euler,
                    bidegree,
                    contacts,
                };
                if caps.admits(&key) {
                    out.add(key, c.clone());
                }
            }
        }
    }
    out.with_truncation(Some(caps))
}

fn shuffles(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    match (a.split_first(), b.split_first()) {
        (None, _) => vec![b.to_vec()],
        (_, None) => vec![a.to_vec()],
        (Some((&ha, ta)), Some((&hb, tb))) => {
            let mut out = Vec::new();
            for mut rest in shuffles(ta, b) {
                rest.insert(0, ha);
                out.push(rest);
            }
            for mut rest in shuffles(a, tb) {
                rest.insert(0, hb);
                out.push(rest);
            }
            out
        }
    }
}

fn check_graded(table: &RelTable, caps: Caps, allow_unit: bool) -> Result<(), Error> {
    for (k, _) in table.iter() {
        if allow_unit && *k == RelKey::empty() {
            continue;
        }
        if k.bidegree.iter().any(|&b| b < 0) {
            return Err(Error::Domain(format!(
                "bidegree {:?} is negative; exponentials need effective classes",
                k.bidegree
            )));
        }
        if k.grade() == 0 {
            return Err(Error::Domain(format!(
                "entry with euler {} has zero bidegree and no contacts; its exponential does not truncate",
                k.euler
            )));
        }
        if !caps.admits(k) {
            return Err(Error::Domain(format!(
                "caps {caps} are smaller than entry {:?} / {:?}",
                k.bidegree, k.contacts
            )));
        }
    }
    Ok(())
}

/// Counts of possibly disconnected curves from counts of connected ones:
/// the exponential of `connected` for [`disjoint_product`], truncated to
/// `caps`.
pub fn gt_from_gw(connected: &RelTable, caps: Caps) -> Result<RelTable, Error> {
    check_graded(connected, caps, false)?;
    let mut total = RelTable::unit();
    let mut term = RelTable::unit();
    for k in 1u64.. {
        term = disjoint_product(&term, connected, caps);
        if term.is_empty() {
            break;
        }
        let inv_k = ExactScalar::new(1, k)?;
        let mut scaled = RelTable::new();
        for (key, c) in term.iter() {
            scaled.add(key.clone(), c * &inv_k);
        }
        term = scaled;
        for (key, c) in term.iter() {
            total.add(key.clone(), c.clone());
        }
    }
    Ok(total.with_truncation(Some(caps)))
}

/// Inverse of [`gt_from_gw`]: `log(1 + G)` where the empty curve carries
/// count one.
pub fn gt_log(disconnected: &RelTable, caps: Caps) -> Result<RelTable, Error> {
    if !disconnected.get(&RelKey::empty()).is_one() {
        return Err(Error::Domain(
            "a disconnected table needs the empty curve with count 1".into(),
        ));
    }
    check_graded(disconnected, caps, true)?;
    let mut rest = disconnected.clone();
    rest.add(RelKey::empty(), -ExactScalar::one());

    let mut total = RelTable::new();
    let mut power = RelTable::unit();
    for k in 1u64.. {
        power = disjoint_product(&power, &rest, caps);
        if power.is_empty() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let coeff = ExactScalar::new(sign, k)?;
        for (key, c) in power.iter() {
            total.add(key.clone(), c * &coeff);
        }
    }
    Ok(total.with_truncation(Some(caps)))
}
