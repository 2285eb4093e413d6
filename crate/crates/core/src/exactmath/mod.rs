//! Exact arithmetic: rationals, integer and rational matrices, lattices and
//! cyclotomic integers.

pub mod cyclotomic;
pub mod intmat;
pub mod lattice;
pub mod rat;
pub mod ratmat;

pub use cyclotomic::{cyclotomic_polynomial, CycloInt};
pub use intmat::{IntMat, Smith};
pub use lattice::{lattice_index, LatticeError};
pub use rat::{format_rat, parse_rat, Rat};
pub use ratmat::RatMat;
