//! Exact checking of skew monoidal structures over finite sets and finite
//! dimensional vector spaces: coherence axioms, module categories and
//! their horizontal tensors, forgetful functors, cocompletions.

pub mod backends;
pub mod cat;
pub mod cocomp;
pub mod error;
pub mod liftq;
pub mod limits;
pub mod modcat;
pub mod mutate;
pub mod skewmon;
pub mod underlying;

pub use error::{Error, Result};
