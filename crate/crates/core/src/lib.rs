pub mod cache;
pub mod coord_alg;
pub mod duality;
pub mod hecke_clifford;
pub mod report;
pub mod scalars;
pub mod superlinalg;
pub mod uq_queer;
