//! Equivariant McKay and Lefschetz computations for finite group actions.

pub mod exactmath;
pub mod groups;
pub mod orbifold;
pub mod toric;
