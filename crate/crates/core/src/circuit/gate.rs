use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Compilation target. Decides which auxiliary lines exist and whether the
/// irreversible reset gates may be used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Fully reversible: enable lines plus one latched hit line per arc and pair.
    ReversibleFull,
    /// Enables kept, hit lines replaced by one temp line that is reset after use.
    CmosOneshot,
    /// No enables and no hits; relies on initializations being permutations.
    CmosReduced,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::ReversibleFull, Mode::CmosOneshot, Mode::CmosReduced];

    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::ReversibleFull => "reversible-full",
            Mode::CmosOneshot => "cmos-oneshot",
            Mode::CmosReduced => "cmos-reduced",
        }
    }

    pub fn has_enables(&self) -> bool {
        !matches!(self, Mode::CmosReduced)
    }

    pub fn is_reversible(&self) -> bool {
        matches!(self, Mode::ReversibleFull)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        Mode::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| Error::UnknownMode(s.to_string()))
    }
}

/// One operation of the wiring diagram. Operands are line indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    Not {
        target: usize,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Toffoli {
        controls: [usize; 2],
        target: usize,
    },
    /// Multi-controlled NOT, only present in unlowered circuits.
    Mcn {
        controls: Vec<usize>,
        target: usize,
    },
    /// Irreversible: zero the target.
    Reset {
        target: usize,
    },
    /// Irreversible: zero the target when the control is set.
    CReset {
        control: usize,
        target: usize,
    },
}

impl Gate {
    pub fn target(&self) -> usize {
        match *self {
            Gate::Not { target }
            | Gate::Cnot { target, .. }
            | Gate::Toffoli { target, .. }
            | Gate::Mcn { target, .. }
            | Gate::Reset { target }
            | Gate::CReset { target, .. } => target,
        }
    }

    pub fn controls(&self) -> &[usize] {
        match self {
            Gate::Not { .. } | Gate::Reset { .. } => &[],
            Gate::Cnot { control, .. } | Gate::CReset { control, .. } => std::slice::from_ref(control),
            Gate::Toffoli { controls, .. } => controls,
            Gate::Mcn { controls, .. } => controls,
        }
    }

    /// Self-inverse gates; everything except the two resets.
    pub fn is_reversible(&self) -> bool {
        !matches!(self, Gate::Reset { .. } | Gate::CReset { .. })
    }

    /// Checks operand distinctness and range.
    pub fn validate(&self, width: usize) -> Result<()> {
        if let Gate::Mcn { controls, .. } = self {
            if controls.is_empty() {
                return Err(Error::InvalidGate("MCN without controls".into()));
            }
        }
        let target = self.target();
        let controls = self.controls();
        for &line in controls.iter().chain(std::iter::once(&target)) {
            if line >= width {
                return Err(Error::OperandOutOfRange { line, width });
            }
        }
        for (i, &c) in controls.iter().enumerate() {
            if c == target || controls[i + 1..].contains(&c) {
                return Err(Error::InvalidGate(format!("repeated operand {c} in {self}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Not { target } => write!(f, "NOT {target}"),
            Gate::Cnot { control, target } => write!(f, "CNOT {control} {target}"),
            Gate::Toffoli { controls: [a, b], target } => write!(f, "TOF {a} {b} {target}"),
            Gate::Mcn { controls, target } => {
                write!(f, "MCN ")?;
                for (i, c) in controls.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, " {target}")
            }
            Gate::Reset { target } => write!(f, "RST {target}"),
            Gate::CReset { control, target } => write!(f, "CRST {control} {target}"),
        }
    }
}
