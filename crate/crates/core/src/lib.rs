//! Finite ring tables, one-sided localization and checks of the
//! weakly left localizable characterizations.

pub mod bounds;
pub mod classify;
pub mod error;
pub mod io;
pub mod localization;
pub mod ring;
pub mod subset;
pub mod theorems;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use ring::{FiniteRing, Ideal, RingExpr};
pub use subset::Subset;
