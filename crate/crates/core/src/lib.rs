//! Finite models of the Catalan simplicial set and of the monoidal
//! structures it classifies.

pub mod category;
pub mod classify;
pub mod dyck;
pub mod io;
pub mod motzkin;
pub mod nerve;
pub mod numbers;
pub mod relation;
pub mod skew;
pub mod sset;

/// Exact integer type used for counts.
pub type Count = num_bigint::BigUint;

pub use category::{FinCategory, FinMonoidalStructure, MonoidObject, MonoidalPoset};
pub use dyck::{DyckWord, SurjectionPath};
pub use motzkin::MotzkinWord;
pub use relation::EdgeRelation;
pub use skew::SkewData;
pub use sset::{SimplicialMap, TruncatedSSet};
