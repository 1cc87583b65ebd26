use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, ExactScalar};

/// Truncation bounds: `|b_0| + |b_1| <= degree` and at most `contacts`
/// contact points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Caps {
    pub degree: u64,
    pub contacts: usize,
}

impl Caps {
    pub fn new(degree: u64, contacts: usize) -> Self {
        Self { degree, contacts }
    }

    pub fn admits(&self, key: &RelKey) -> bool {
        key.degree() <= self.degree && key.contacts.len() <= self.contacts
    }
}

impl FromStr for Caps {
    type Err = Error;

    /// `"D,L"`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("caps must look like DEGREE,CONTACTS, got {s:?}"));
        let (d, l) = s.split_once(',').ok_or_else(bad)?;
        Ok(Self {
            degree: d.trim().parse().map_err(|_| bad())?,
            contacts: l.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for Caps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.degree, self.contacts)
    }
}

/// Index of a relative count: Euler characteristic of the domain,
/// bidegree, and ordered contact multiplicities with the divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelKey {
    pub euler: i64,
    pub bidegree: [i64; 2],
    pub contacts: Vec<u32>,
}

impl RelKey {
    pub fn new(euler: i64, bidegree: [i64; 2], contacts: Vec<u32>) -> Result<Self, Error> {
        if contacts.contains(&0) {
            return Err(Error::Domain(format!(
                "contact multiplicities must be positive, got {contacts:?}"
            )));
        }
        Ok(Self {
            euler,
            bidegree,
            contacts,
        })
    }

    /// The empty curve.
    pub fn empty() -> Self {
        Self {
            euler: 0,
            bidegree: [0, 0],
            contacts: Vec::new(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.bidegree[0].unsigned_abs() + self.bidegree[1].unsigned_abs()
    }

    /// Additive grading used to bound exponentials: degree plus number of
    /// contacts (for nonnegative bidegrees).
    pub(crate) fn grade(&self) -> u64 {
        self.degree() + self.contacts.len() as u64
    }

    pub fn contact_product(&self) -> u64 {
        self.contacts.iter().map(|&s| u64::from(s)).product()
    }
}

/// One line of a table file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelEntry {
    pub euler: i64,
    pub bidegree: [i64; 2],
    pub contacts: Vec<u32>,
    pub count: ExactScalar,
}

impl RelEntry {
    pub fn key(&self) -> Result<RelKey, Error> {
        RelKey::new(self.euler, self.bidegree, self.contacts.clone())
    }
}

/// Finite table of relative counts, canonical by construction: one count
/// per key, no zero counts, keys in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelTable {
    counts: BTreeMap<RelKey, ExactScalar>,
    truncation: Option<Caps>,
}

impl RelTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{empty curve: 1}`, the unit for the gluing convolution on
    /// contact-free tables and for the disconnected product.
    pub fn unit() -> Self {
        let mut t = Self::new();
        t.add(RelKey::empty(), ExactScalar::one());
        t
    }

    /// Merges repeated keys by adding their counts.
    pub fn from_entries(entries: impl IntoIterator<Item = RelEntry>) -> Result<Self, Error> {
        let mut t = Self::new();
        for e in entries {
            t.add(e.key()?, e.count);
        }
        Ok(t)
    }

    pub fn with_truncation(mut self, caps: Option<Caps>) -> Self {
        self.truncation = caps;
        self
    }

    /// Caps this table is known to be complete up to, if any.
    pub fn truncation(&self) -> Option<Caps> {
        self.truncation
    }

    pub fn add(&mut self, key: RelKey, count: ExactScalar) {
        if count.is_zero() {
            return;
        }
        match self.counts.entry(key) {
            Entry::Vacant(v) => {
                v.insert(count);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += count;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, key: &RelKey) -> ExactScalar {
        self.counts.get(key).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RelKey, &ExactScalar)> {
        self.counts.iter()
    }

    pub fn entries(&self) -> impl Iterator<Item = RelEntry> + '_ {
        self.counts.iter().map(|(k, c)| RelEntry {
            euler: k.euler,
            bidegree: k.bidegree,
            contacts: k.contacts.clone(),
            count: c.clone(),
        })
    }

    /// Entries without contact points.
    pub fn closed_part(&self) -> Self {
        let mut t = Self::new();
        for (k, c) in self.iter().filter(|(k, _)| k.contacts.is_empty()) {
            t.add(k.clone(), c.clone());
        }
        t.with_truncation(self.truncation)
    }

    pub fn truncated(&self, caps: Caps) -> Self {
        let mut t = Self::new();
        for (k, c) in self.iter().filter(|(k, _)| caps.admits(k)) {
            t.add(k.clone(), c.clone());
        }
        t.with_truncation(Some(caps))
    }

    /// Same counts, ignoring the recorded truncation.
    pub fn same_counts(&self, other: &Self) -> bool {
        self.counts == other.counts
    }

    /// Canonical text form: one JSON record per line, sorted by key.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for e in self.entries() {
            out.push_str(&serde_json::to_string(&e).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// Parses one JSON record per line; blank lines and lines starting
    /// with `#` are skipped.
    pub fn parse_records(text: &str) -> Result<Self, Error> {
        Self::from_entries(parse_json_lines::<RelEntry>(text)?)
    }
}

pub(crate) fn parse_json_lines<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>, Error> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(euler: i64, b: [i64; 2], s: &[u32], c: &str) -> RelEntry {
        RelEntry {
            euler,
            bidegree: b,
            contacts: s.to_vec(),
            count: c.parse().unwrap(),
        }
    }

    #[test]
    fn canonicalization_merges_and_sorts() {
        let t = RelTable::from_entries([
            entry(2, [1, 0], &[2], "1/2"),
            entry(0, [0, 1], &[], "3"),
            entry(2, [1, 0], &[2], "1/2"),
            entry(4, [0, 0], &[1], "1"),
            entry(4, [0, 0], &[1], "-1"),
        ])
        .unwrap();
        assert_eq!(t.len(), 2);
        let text = t.to_records();
        assert_eq!(
            text,
            "{\"euler\":0,\"bidegree\":[0,1],\"contacts\":[],\"count\":\"3\"}\n\
             {\"euler\":2,\"bidegree\":[1,0],\"contacts\":[2],\"count\":\"1\"}\n"
        );
        let back = RelTable::parse_records(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_records(), text);
    }

    #[test]
    fn rejects_bad_records() {
        assert!(RelTable::parse_records("{\"euler\":0,\"bidegree\":[0,1],\"contacts\":[0],\"count\":\"1\"}").is_err());
        assert!(RelTable::parse_records("{\"euler\":0}").is_err());
        assert!(RelTable::parse_records("{\"euler\":0,\"bidegree\":[0,1],\"contacts\":[],\"count\":\"1/0\"}").is_err());
        assert!(RelTable::parse_records("not json").is_err());
    }

    #[test]
    fn caps_parsing() {
        assert_eq!("3,2".parse::<Caps>().unwrap(), Caps::new(3, 2));
        assert_eq!(Caps::new(4, 1).to_string(), "4,1");
        assert!("3".parse::<Caps>().is_err());
        assert!("a,b".parse::<Caps>().is_err());
    }
}
