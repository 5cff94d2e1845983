//! Hamiltonian cycle recognizer circuits.
//!
//! An undirected graph is compiled into a wiring diagram: a register layout
//! plus an ordered list of NOT/CNOT/Toffoli gates (and, in the CMOS modes,
//! reset gates). Each register holds one candidate walk; after the circuit
//! runs, its flag line says whether that walk is a Hamiltonian cycle. The
//! [`simulator`] drives one register per fixed-start permutation (or per raw
//! workspace code), [`oracle`] provides a backtracking ground truth, and
//! [`resources`] evaluates the closed-form line and gate counts next to the
//! measured ones.
//!
//! Counting code is generic over the integer type (see [`count::Count`]);
//! the aliases below fix it to `u64` or `BigUint`.

pub mod circuit;
pub mod count;
pub mod encoding;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod register;
pub mod resources;
pub mod simulator;

use num_bigint::BigUint;

pub use circuit::{compile, emit_netlist, parse_netlist, Circuit, Gate, LineLayout, Mode};
pub use encoding::{Encoding, Initialization};
pub use error::{Error, Result};
pub use graph::{parse_graph, DirectedArc, Graph};
pub use oracle::CycleSet;
pub use register::RegisterState;
pub use simulator::FlagReadout;

/// Formula values in 64-bit arithmetic; overflow is reported as an error.
pub type Formulas64 = resources::Formulas<u64>;
/// Formula values in arbitrary precision.
pub type BigFormulas = resources::Formulas<BigUint>;
pub type ResourceReport64 = resources::ResourceReport<u64>;
pub type BigResourceReport = resources::ResourceReport<BigUint>;

/// `(n-1)!` in 64-bit arithmetic.
pub fn count_initializations(n: usize) -> Result<u64> {
    enumerator::count_initializations::<u64>(n)
}

/// `(n-1)!` in arbitrary precision.
pub fn count_initializations_big(n: usize) -> Result<BigUint> {
    enumerator::count_initializations::<BigUint>(n)
}
