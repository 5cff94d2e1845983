//! Resource accounting: the closed-form register, line and gate counts for
//! the recognizer construction, next to what a compiled circuit actually
//! uses.
//!
//! Formula values are evaluated exactly as printed, even where the compiled
//! circuit allocates differently. Differences are reported as tagged
//! deltas instead of being folded into the formulas.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;

use num_bigint::BigUint;

use crate::circuit::{scratch_lines, Circuit, Mode, SegmentKind};
use crate::count::{add, factorial, lift, mul, pow, round_sqrt, sub, Count};
use crate::encoding::bits_per_vertex;
use crate::enumerator::count_initializations;
use crate::error::Result;

/// Closed-form counts for a graph with `n` vertices, `k`-bit codes and `m`
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formulas<T> {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    /// `(n-1)!`
    pub num_registers: T,
    /// `n(k+2m+3) - 1`
    pub bits_formula_full: T,
    /// `n(k+3) - 1`
    pub bits_formula_oneshot: T,
    /// `n(k+2) - 1`
    pub bits_formula_reduced: T,
    /// `n[m(8k+10)+1] - 1`
    pub ops_formula_full: T,
    /// `6mn + 8kmn + 2mn + n - 1`
    pub ops_formula_reduced: T,
    /// `k * n!`
    pub totbits: T,
    /// `kn + 2mn`
    pub qubits_quantum: T,
    /// `ceil(n log2 n)`: qubits needed to hold all `n^n` codes.
    pub quantum_workspace_qubits: usize,
    /// `round(sqrt(n^n))`
    pub grover_steps: T,
}

pub fn evaluate_formulas<T: Count>(n: usize, k: usize, m: usize) -> Result<Formulas<T>> {
    let [nn, kk, mm] = [n, k, m].map(|x| lift::<T>(x, "formula input"));
    let (nn, kk, mm) = (nn?, kk?, mm?);
    let one = T::one();
    let c = |x: usize| lift::<T>(x, "formula constant");

    let bits_full = {
        let two_m = mul(&c(2)?, &mm, "BITS")?;
        let inner = add(&add(&kk, &two_m, "BITS")?, &c(3)?, "BITS")?;
        sub(&mul(&nn, &inner, "BITS")?, &one, "BITS")?
    };
    let bits_oneshot = sub(&mul(&nn, &add(&kk, &c(3)?, "BITS")?, "BITS")?, &one, "BITS")?;
    let bits_reduced = sub(&mul(&nn, &add(&kk, &c(2)?, "BITS")?, "BITS")?, &one, "BITS")?;

    let ops_full = {
        let per_edge = add(&mul(&c(8)?, &kk, "OPS")?, &c(10)?, "OPS")?;
        let bracket = add(&mul(&mm, &per_edge, "OPS")?, &one, "OPS")?;
        sub(&mul(&nn, &bracket, "OPS")?, &one, "OPS")?
    };
    let ops_reduced = {
        let mn = mul(&mm, &nn, "OPS")?;
        let detect = mul(&c(6)?, &mn, "OPS")?;
        let ladder = mul(&mul(&c(8)?, &kk, "OPS")?, &mn, "OPS")?;
        let hits = mul(&c(2)?, &mn, "OPS")?;
        let sum = add(&add(&add(&detect, &ladder, "OPS")?, &hits, "OPS")?, &nn, "OPS")?;
        sub(&sum, &one, "OPS")?
    };

    let qubits = add(&mul(&kk, &nn, "qubits")?, &mul(&mul(&c(2)?, &mm, "qubits")?, &nn, "qubits")?, "qubits")?;

    Ok(Formulas {
        n,
        k,
        m,
        num_registers: count_initializations(n)?,
        bits_formula_full: bits_full,
        bits_formula_oneshot: bits_oneshot,
        bits_formula_reduced: bits_reduced,
        ops_formula_full: ops_full,
        ops_formula_reduced: ops_reduced,
        totbits: totbits(n)?,
        qubits_quantum: qubits,
        quantum_workspace_qubits: quantum_workspace_qubits(n)?,
        grover_steps: grover_steps(n)?,
    })
}

/// `k * n!` with `k = ceil(log2 n)`.
pub fn totbits<T: Count>(n: usize) -> Result<T> {
    let k = lift::<T>(bits_per_vertex(n)?, "TOTBITS")?;
    mul(&k, &factorial(n)?, "TOTBITS")
}

/// `round(n^(n/2))`, the square root of the size of the unconstrained code space.
pub fn grover_steps<T: Count>(n: usize) -> Result<T> {
    bits_per_vertex(n)?;
    Ok(round_sqrt(&pow::<T>(n, n)?))
}

/// Smallest `q` with `2^q >= n^n`.
pub fn quantum_workspace_qubits(n: usize) -> Result<usize> {
    bits_per_vertex(n)?;
    let space = pow::<BigUint>(n, n)?;
    Ok((space - 1u32).bits() as usize)
}

/// Lines and post-lowering gate count of a compiled circuit.
pub fn measure(c: &Circuit) -> (usize, usize) {
    (c.layout().total(), c.gates().len())
}

/// Why a compiled layout differs from the line-count formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaReason {
    /// Detectors also control on the destination enable: one more ladder scratch line.
    ExtraEnableControl,
    /// Dedicated flag line, not part of the formulas.
    FlagLine,
    /// Shared scratch pool sized for the widest ladder instead of `n - 1`.
    ScratchPool,
    /// Reusable temp line of the one-shot enable mode.
    TempLine,
}

impl DeltaReason {
    pub fn code(&self) -> &'static str {
        match self {
            DeltaReason::ExtraEnableControl => "extra-enable-control",
            DeltaReason::FlagLine => "flag-line",
            DeltaReason::ScratchPool => "scratch-pool",
            DeltaReason::TempLine => "temp-line",
        }
    }
}

impl fmt::Display for DeltaReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineDelta {
    pub reason: DeltaReason,
    pub lines: i64,
}

/// Measured circuit next to the formulas for its mode.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement<T> {
    pub mode: Mode,
    pub lines: usize,
    pub gates: usize,
    pub bits_formula: T,
    pub ops_formula: T,
    /// Nonzero components of `lines - bits_formula`.
    pub line_deltas: Vec<LineDelta>,
    /// Part of the line delta no reason accounts for; zero for compiled circuits.
    pub unexplained_lines: i64,
    /// `gates / ops_formula`.
    pub ops_ratio: f64,
}

/// Formulas for a graph plus one measurement per compiled mode.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourceReport<T> {
    pub formulas: Formulas<T>,
    pub measurements: Vec<Measurement<T>>,
}

pub fn measure_against<T: Count>(c: &Circuit, formulas: &Formulas<T>) -> Measurement<T> {
    let (n, k) = (formulas.n, formulas.k);
    let (bits_formula, ops_formula) = match c.mode() {
        Mode::ReversibleFull => (&formulas.bits_formula_full, &formulas.ops_formula_full),
        Mode::CmosOneshot => (&formulas.bits_formula_oneshot, &formulas.ops_formula_reduced),
        Mode::CmosReduced => (&formulas.bits_formula_reduced, &formulas.ops_formula_reduced),
    };
    let (lines, gates) = measure(c);
    let layout = c.layout();

    let formula_scratch = (2 * k - 1).max(n.saturating_sub(2)) as i64;
    let scratch = layout.len_of(SegmentKind::Scratch) as i64;
    let components = [
        (DeltaReason::ExtraEnableControl, scratch - formula_scratch),
        (DeltaReason::ScratchPool, formula_scratch - (n as i64 - 1)),
        (DeltaReason::TempLine, layout.len_of(SegmentKind::Temp) as i64),
        (DeltaReason::FlagLine, layout.len_of(SegmentKind::Flag) as i64),
    ];
    let line_deltas: Vec<LineDelta> = components
        .into_iter()
        .filter(|&(_, lines)| lines != 0)
        .map(|(reason, lines)| LineDelta { reason, lines })
        .collect();
    let formula_lines = bits_formula.to_i64().unwrap_or(i64::MAX);
    let explained: i64 = line_deltas.iter().map(|d| d.lines).sum();
    let ops = ops_formula.to_f64().unwrap_or(f64::INFINITY);

    debug_assert_eq!(scratch as usize, scratch_lines(c.mode(), n, k));
    Measurement {
        mode: c.mode(),
        lines,
        gates,
        bits_formula: bits_formula.clone(),
        ops_formula: ops_formula.clone(),
        line_deltas,
        unexplained_lines: lines as i64 - formula_lines - explained,
        ops_ratio: if ops > 0.0 { gates as f64 / ops } else { f64::INFINITY },
    }
}

/// Builds a report for the circuits compiled from one graph (any subset of modes).
pub fn report<'a, T, I>(n: usize, m: usize, circuits: I) -> Result<ResourceReport<T>>
where
    T: Count,
    I: IntoIterator<Item = &'a Circuit>,
{
    let formulas = evaluate_formulas::<T>(n, bits_per_vertex(n)?, m)?;
    let measurements = circuits.into_iter().map(|c| measure_against(c, &formulas)).collect();
    Ok(ResourceReport { formulas, measurements })
}

impl<T: Count> fmt::Display for ResourceReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.formulas;
        writeln!(f, "graph: n={} m={} k={}", r.n, r.m, r.k)?;
        writeln!(f, "num_registers (n-1)!            = {}", r.num_registers)?;
        writeln!(f, "bits_formula_full n(k+2m+3)-1   = {}", r.bits_formula_full)?;
        writeln!(f, "bits_formula_oneshot n(k+3)-1   = {}", r.bits_formula_oneshot)?;
        writeln!(f, "bits_formula_reduced n(k+2)-1   = {}", r.bits_formula_reduced)?;
        writeln!(f, "ops_formula_full n[m(8k+10)+1]-1 = {}", r.ops_formula_full)?;
        writeln!(f, "ops_formula_reduced 6mn+8kmn+2mn+n-1 = {}", r.ops_formula_reduced)?;
        writeln!(f, "totbits k*n!                    = {}", r.totbits)?;
        writeln!(f, "qubits_quantum kn+2mn           = {}", r.qubits_quantum)?;
        writeln!(f, "quantum_workspace_qubits ceil(n log2 n) = {}", r.quantum_workspace_qubits)?;
        writeln!(f, "grover_steps round(n^(n/2))     = {}", r.grover_steps)?;
        for meas in &self.measurements {
            writeln!(f)?;
            writeln!(f, "[{}]", meas.mode)?;
            writeln!(f, "  lines measured {} vs formula {}", meas.lines, meas.bits_formula)?;
            for d in &meas.line_deltas {
                writeln!(f, "    delta {:+} {}", d.lines, d.reason)?;
            }
            if meas.unexplained_lines != 0 {
                writeln!(f, "    delta {:+} unexplained", meas.unexplained_lines)?;
            }
            writeln!(
                f,
                "  gates measured {} vs formula {} (ratio {:.3})",
                meas.gates, meas.ops_formula, meas.ops_ratio
            )?;
        }
        Ok(())
    }
}

/// CSV of `n,k,num_registers,bits_reduced,totbits` for each `n` in the
/// range. Fields that overflow `T` are written as `overflow`.
pub fn totbits_table<T: Count>(ns: RangeInclusive<usize>) -> Result<String> {
    let mut out = String::from("n,k,num_registers,bits_reduced,totbits\n");
    for n in ns {
        let k = bits_per_vertex(n)?;
        let field = |value: Result<T>| value.map_or_else(|_| "overflow".to_string(), |v| v.to_string());
        let bits_reduced = lift::<T>(n * (k + 2) - 1, "BITS");
        let _ = writeln!(
            out,
            "{n},{k},{},{},{}",
            field(count_initializations::<T>(n)),
            field(bits_reduced),
            field(totbits::<T>(n))
        );
    }
    Ok(out)
}
