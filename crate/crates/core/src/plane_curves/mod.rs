//! Plane-curve enumeration: rational curves in the plane, generalized
//! Severi degrees with tangency to a line, and the rational elliptic
//! surface series.

mod bryan_leung;
mod kontsevich;
mod severi;

pub use bryan_leung::bryan_leung_series;
pub use kontsevich::{kontsevich_nd, kontsevich_table};
pub use severi::{
    severi_by_nodes, severi_general, severi_reducible, SeveriCache, SeveriKey, Tangency,
};
