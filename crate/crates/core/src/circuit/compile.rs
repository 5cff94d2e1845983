//! Graph to wiring-diagram compilation.
//!
//! A compiled circuit checks the walk held in the workspace pair by pair:
//! pair `p` compares positions `p` and `(p + 1) mod n` against every
//! directed arc of the graph and sets `pair_result[p]` when one matches.
//! The flag line is the AND of all pair results.
//!
//! The enable lines (reversible-full and cmos-oneshot) are raised by a
//! prologue and guard every non-closing detector on both endpoints; a
//! firing detector latches the source enable to 0, so a vertex cannot be
//! entered or left twice. The closing pair ignores enables.

use crate::circuit::lower::{lower_mcn, lower_mcn_into_clear_target};
use crate::circuit::{Gate, LineLayout, Mode};
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::graph::{DirectedArc, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompileOptions {
    /// Lower every MCN onto Toffoli ladders. When false, detector and flag
    /// MCNs are emitted as single gates.
    pub lower: bool,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions { lower: true }
    }
}

/// Layout plus ordered gate list for one graph and mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub(crate) mode: Mode,
    pub(crate) encoding: Encoding,
    pub(crate) layout: LineLayout,
    pub(crate) gates: Vec<Gate>,
    pub(crate) fingerprint: String,
}

impl Circuit {
    /// Assembles a circuit from parts, validating every gate against the
    /// layout width and the mode's gate set.
    pub fn from_parts(
        mode: Mode,
        encoding: Encoding,
        layout: LineLayout,
        gates: Vec<Gate>,
        fingerprint: String,
    ) -> Result<Self> {
        if layout.total() < encoding.workspace_width() + 1 {
            return Err(Error::LayoutTooSmall { required: encoding.workspace_width() + 1, available: layout.total() });
        }
        for gate in &gates {
            gate.validate(layout.total())?;
            if mode.is_reversible() && !gate.is_reversible() {
                return Err(Error::InvalidGate(format!("`{gate}` in a {mode} circuit")));
            }
        }
        Ok(Circuit { mode, encoding, layout, gates, fingerprint })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn encoding(&self) -> &Encoding {
        &self.encoding
    }

    pub fn layout(&self) -> &LineLayout {
        &self.layout
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn width(&self) -> usize {
        self.layout.total()
    }

    /// True when every gate is NOT, CNOT or Toffoli (or a reset).
    pub fn is_lowered(&self) -> bool {
        !self.gates.iter().any(|g| matches!(g, Gate::Mcn { .. }))
    }
}

pub fn layout_for(mode: Mode, g: &Graph) -> Result<LineLayout> {
    LineLayout::for_graph(mode, g)
}

/// Compiles with MCN lowering enabled.
pub fn compile(g: &Graph, mode: Mode, enc: &Encoding) -> Result<Circuit> {
    compile_with(g, mode, enc, CompileOptions::default())
}

pub fn compile_with(g: &Graph, mode: Mode, enc: &Encoding, options: CompileOptions) -> Result<Circuit> {
    if enc.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidGraph(format!(
            "encoding is for {} vertices, graph has {}",
            enc.vertex_count(),
            g.vertex_count()
        )));
    }
    let n = g.vertex_count();
    let layout = LineLayout::build(mode, enc, g.edge_count());
    let arcs = g.directed_arcs();
    let mut gates = Vec::new();

    if mode.has_enables() {
        gates.extend((0..n).map(|v| Gate::Not { target: layout.enable(v) }));
    }
    for pair in 0..n {
        for (arc_index, arc) in arcs.iter().enumerate() {
            gates.extend(build_edge_detector(pair, arc_index, *arc, mode, enc, &layout, options)?);
        }
    }
    let pair_results: Vec<usize> = (0..n).map(|p| layout.pair_result(p)).collect();
    gates.extend(mcn(&pair_results, layout.flag(), &layout.scratch(), options)?);

    Circuit::from_parts(mode, *enc, layout, gates, g.fingerprint())
}

/// Gates detecting `arc` at `pair`: X-conditioning of both positions to the
/// arc's codes, the mode-specific detection step, then the X-conditioning
/// undone. Scratch and temp lines are 0 before and after.
pub fn build_edge_detector(
    pair: usize,
    arc_index: usize,
    arc: DirectedArc,
    mode: Mode,
    enc: &Encoding,
    layout: &LineLayout,
    options: CompileOptions,
) -> Result<Vec<Gate>> {
    let n = enc.vertex_count();
    let k = enc.bits_per_vertex();
    let next = (pair + 1) % n;
    let closing = pair == n - 1;

    let mut conditioning = Vec::new();
    let mut code_lines = Vec::with_capacity(2 * k);
    for (position, vertex) in [(pair, arc.src), (next, arc.dst)] {
        for bit in 0..k {
            let line = enc.line(position, bit);
            if vertex >> bit & 1 == 0 {
                conditioning.push(Gate::Not { target: line });
            }
            code_lines.push(line);
        }
    }

    let scratch = layout.scratch();
    let result = layout.pair_result(pair);
    let mut gates = conditioning.clone();
    match mode {
        Mode::ReversibleFull if !closing => {
            let hit = layout.hit(arc_index, pair);
            let mut controls = code_lines;
            controls.extend([layout.enable(arc.src), layout.enable(arc.dst)]);
            gates.extend(mcn(&controls, hit, &scratch, options)?);
            gates.push(Gate::Cnot { control: hit, target: result });
            gates.push(Gate::Cnot { control: hit, target: layout.enable(arc.src) });
        }
        Mode::CmosOneshot if !closing => {
            let temp = layout.temp();
            let mut controls = code_lines;
            controls.extend([layout.enable(arc.src), layout.enable(arc.dst)]);
            if options.lower {
                gates.extend(lower_mcn_into_clear_target(&controls, temp, &scratch)?);
            } else {
                gates.push(Gate::Mcn { controls, target: temp });
            }
            gates.push(Gate::Cnot { control: temp, target: result });
            gates.push(Gate::Cnot { control: temp, target: layout.enable(arc.src) });
            gates.push(Gate::Reset { target: temp });
        }
        _ => gates.extend(mcn(&code_lines, result, &scratch, options)?),
    }
    gates.extend(conditioning);
    Ok(gates)
}

fn mcn(controls: &[usize], target: usize, scratch: &[usize], options: CompileOptions) -> Result<Vec<Gate>> {
    if options.lower {
        lower_mcn(controls, target, scratch)
    } else {
        Ok(vec![Gate::Mcn { controls: controls.to_vec(), target }])
    }
}

/// Reverses a reversible circuit. Every gate in the reversible set is its
/// own inverse, so the reversed sequence undoes the forward run.
pub fn invert(c: &Circuit) -> Result<Circuit> {
    if !c.mode.is_reversible() || c.gates.iter().any(|g| !g.is_reversible()) {
        return Err(Error::Irreversible);
    }
    let mut inverse = c.clone();
    inverse.gates.reverse();
    Ok(inverse)
}
