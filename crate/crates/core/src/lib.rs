//! Weak order on permutations, on total orders of the integers, and on
//! translation-invariant total orders, with their arc combinatorics, finite
//! quotients, and renderers.

pub mod arc;
pub mod dyer;
pub mod error;
pub mod lab;
pub mod pairs;
pub mod render;
pub mod sn;
pub mod tito;
pub mod total;

pub use arc::Arc;
pub use error::{Error, Result};
pub use sn::{InversionSet, Permutation};
pub use tito::{ReflectionIndex, Tito, WrappedArc};
pub use total::TotalOrder;
