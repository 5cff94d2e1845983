//! Gate IR, register layouts, MCN lowering, the compiler and the netlist
//! text format.

mod compile;
mod gate;
mod layout;
mod lower;
mod netlist;

pub use compile::{build_edge_detector, compile, compile_with, invert, layout_for, Circuit, CompileOptions};
pub use gate::{Gate, Mode};
pub use layout::{scratch_lines, LineLayout, Segment, SegmentKind};
pub use lower::{lower_mcn, lower_mcn_into_clear_target};
pub use netlist::{emit_netlist, parse_netlist};
