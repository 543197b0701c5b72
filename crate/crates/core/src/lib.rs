//! Exact commutative algebra for deciding irreducibility of algebroid curves.

pub mod scalars;
pub mod polyring;
pub mod groebner;
pub mod localalg;
pub mod semigroups;
pub mod sagbi;
pub mod parametric;
pub mod decide;
