pub mod approx_error;
pub mod energy;
pub mod sweep;
pub mod verify;
pub mod wavefunction;
