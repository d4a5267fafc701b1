//! Undeformed, Spiridonov and TD factorizations, their supersymmetric block
//! structure, and the identity suites built on them.

mod checks;
mod heisenberg;
mod model;
mod superosc;
mod superpotential;

pub use checks::{degeneration_checks, verify_intertwining, verify_susy_algebra, CrossCheck};
pub use heisenberg::{
    bracket_identities, heisenberg_reconstruction, heisenberg_suite, Reconstruction,
};
pub use model::{build_model, super_structure, ModelKind, SusyModel};
pub use superosc::{generic_superpotential, superoscillator_identity_suite, Sign};
pub use superpotential::Superpotential;
