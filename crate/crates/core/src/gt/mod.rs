//! Relative invariant tables and the gluing convolution.
//!
//! A [`RelTable`] records counts of curves relative to a divisor, indexed
//! by Euler characteristic of the domain, bidegree and ordered contact
//! multiplicities. [`gt_from_gw`] passes from connected to disconnected
//! counts, [`convolve`] glues two sides along their contacts.

mod ops;
mod table;

pub use ops::{
    convolve, disjoint_product, glued_genus, gt_from_gw, gt_log, SMatrix, SMatrixEntry,
};
pub use table::{Caps, RelEntry, RelKey, RelTable};
