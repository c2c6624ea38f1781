//! Calogero-Moser partitions and Rouquier families for the imprimitive
//! complex reflection groups G(m,d,n).
//!
//! The CM partition of `Irr G(m,1,n)` is given by equality of shifted
//! residues of multipartitions. For `G(m,d,n)` it is obtained by Clifford
//! theory along the cyclic quotient `G(m,1,n)/G(m,d,n)`: stuttering
//! singletons split, every other block maps through `Gamma`. The same
//! descent is applied to Rouquier families built from essential hyperplanes.

pub mod arith;
pub mod blocks;
pub mod cm;
pub mod error;
pub mod groups;
mod par;
pub mod params;
pub mod partitions;
pub mod report;
pub mod rouquier;
pub mod verify;

pub use blocks::{BlockPartition, Comparison};
pub use error::{Error, Result};
pub use par::is_parallel;
pub use partitions::{GroupParams, MultiPartition, Partition};
