//! The explicit bijections between permutation classes and lattice paths.

pub mod jaggard;
pub mod motzkin;
pub mod rsk;
pub mod west;

pub use jaggard::{active_dots, jaggard_swap, young_lambda, RookDiagram};
pub use motzkin::{
    delta, delta_inv, hat_phi, hat_phi_inv, hat_psi, hat_psi_inv, phi, phi_inv, psi, psi_inv, Diod,
    DiodWord, MotzkinWord, Step,
};
pub use rsk::{descent_complement, rsk, rsk_inv, StandardTableau};
pub use west::{rank_labels, west_f, west_f_inv};
