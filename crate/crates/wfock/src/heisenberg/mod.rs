//! sl(N) weight geometry, Fock modules over the rank N-1 Heisenberg
//! algebra, and the mode actions of the Virasoro, W and Miura fields.

mod fock;
mod modes;
mod weight;

pub use fock::{apply_normal_ordered, CreationMonomial, FockVector, Mode};
pub use modes::{miura_mode, virasoro_mode, w3_mode};
pub use weight::{cartan_entry, cartan_inverse_entry, Weight};
