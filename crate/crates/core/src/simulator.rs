//! Register-farm simulation: one fresh register per initialization (or per
//! raw workspace code), each driven through the whole circuit, flags
//! collected in key order.

use std::ops::Range;
use std::thread;

use crate::circuit::{Circuit, Gate, Mode};
use crate::encoding::{decode_packed, encode_initialization, Encoding, Initialization};
use crate::enumerator::{count_initializations, stream_range, unrank};
use crate::error::{Error, Result};
use crate::register::RegisterState;

/// Largest workspace width the exhaustive code run accepts.
pub const MAX_FULL_CODE_BITS: usize = 20;

pub fn apply_gate(state: &mut RegisterState, gate: &Gate) -> Result<()> {
    gate.validate(state.width())?;
    apply_unchecked(state, gate);
    Ok(())
}

#[inline]
fn apply_unchecked(state: &mut RegisterState, gate: &Gate) {
    match gate {
        Gate::Not { target } => state.flip(*target),
        Gate::Cnot { control, target } => {
            if state.get(*control) {
                state.flip(*target);
            }
        }
        Gate::Toffoli { controls: [a, b], target } => {
            if state.get(*a) && state.get(*b) {
                state.flip(*target);
            }
        }
        Gate::Mcn { controls, target } => {
            if controls.iter().all(|&c| state.get(c)) {
                state.flip(*target);
            }
        }
        Gate::Reset { target } => state.set(*target, false),
        Gate::CReset { control, target } => {
            if state.get(*control) {
                state.set(*target, false);
            }
        }
    }
}

/// Applies every gate of `c` in order.
pub fn run(c: &Circuit, mut state: RegisterState) -> Result<RegisterState> {
    if state.width() != c.width() {
        return Err(Error::WidthMismatch { expected: c.width(), got: state.width() });
    }
    // gates were validated against the layout when the circuit was built
    for gate in c.gates() {
        apply_unchecked(&mut state, gate);
    }
    Ok(state)
}

/// Encodes `init` into a fresh register and runs `c` on it.
pub fn run_initialization(c: &Circuit, init: &Initialization) -> Result<RegisterState> {
    run(c, encode_initialization(init, c.encoding(), c.width())?)
}

/// Runs `c` on a fresh register whose workspace holds the packed `code`.
pub fn run_code(c: &Circuit, code: u64) -> Result<RegisterState> {
    let mut state = RegisterState::zeros(c.width());
    c.encoding().write_packed(&mut state, code);
    run(c, state)
}

/// What the keys of a [`FlagReadout`] index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadoutKind {
    /// Ranks into the ordered initialization database.
    Rank,
    /// Packed workspace codes of the exhaustive run.
    Code,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagEntry {
    pub key: u64,
    pub sequence: Vec<usize>,
}

/// Flagged registers of a batch. Only keys are stored; vertex sequences
/// are decoded on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagReadout {
    kind: ReadoutKind,
    encoding: Encoding,
    keys: Vec<u64>,
    total_tested: u64,
}

impl FlagReadout {
    fn empty(kind: ReadoutKind, encoding: Encoding) -> Self {
        FlagReadout { kind, encoding, keys: Vec::new(), total_tested: 0 }
    }

    pub fn kind(&self) -> ReadoutKind {
        self.kind
    }

    /// Flagged keys in ascending order.
    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn total_tested(&self) -> u64 {
        self.total_tested
    }

    pub fn flagged(&self) -> usize {
        self.keys.len()
    }

    /// OR of every flag bit in the batch.
    pub fn any_flag(&self) -> bool {
        !self.keys.is_empty()
    }

    pub fn sequence_of(&self, key: u64) -> Vec<usize> {
        match self.kind {
            ReadoutKind::Rank => {
                unrank(key, self.encoding.vertex_count()).expect("readout keys are valid ranks").into_perm()
            }
            ReadoutKind::Code => decode_packed(key, &self.encoding),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = FlagEntry> + '_ {
        self.keys.iter().map(|&key| FlagEntry { key, sequence: self.sequence_of(key) })
    }

    /// Appends a readout covering keys strictly above this one's.
    fn extend(&mut self, other: FlagReadout) {
        debug_assert!(self.keys.last() < other.keys.first() || other.keys.is_empty());
        self.keys.extend(other.keys);
        self.total_tested += other.total_tested;
    }
}

pub fn or_reduce(readout: &FlagReadout) -> bool {
    readout.any_flag()
}

/// Runs one fresh register per initialization and collects the ranks whose
/// flag line ends at 1.
pub fn run_batch<I>(c: &Circuit, inits: I) -> Result<FlagReadout>
where
    I: IntoIterator<Item = Initialization>,
{
    let flag = c.layout().flag();
    let mut readout = FlagReadout::empty(ReadoutKind::Rank, *c.encoding());
    for init in inits {
        let state = run_initialization(c, &init)?;
        readout.total_tested += 1;
        if state.get(flag) {
            readout.keys.push(init.rank());
        }
    }
    readout.keys.sort_unstable();
    Ok(readout)
}

/// [`run_batch`] over every initialization, with the rank space split into
/// `workers` contiguous ranges run on separate threads. The result does
/// not depend on `workers`.
pub fn run_all_initializations(c: &Circuit, workers: usize) -> Result<FlagReadout> {
    let n = c.encoding().vertex_count();
    let count = count_initializations::<u64>(n)?;
    run_partitioned(c, 0..count, workers, ReadoutKind::Rank, |c, range| run_batch(c, stream_range(n, range)?))
}

/// [`run_batch`] over the ranks in `ranks`, fanned out to `workers` threads.
pub fn run_rank_range(c: &Circuit, ranks: Range<u64>, workers: usize) -> Result<FlagReadout> {
    let n = c.encoding().vertex_count();
    run_partitioned(c, ranks, workers, ReadoutKind::Rank, |c, range| run_batch(c, stream_range(n, range)?))
}

/// Runs every one of the `2^(n*k)` workspace codes through a
/// reversible-full circuit. Refuses workspaces wider than
/// [`MAX_FULL_CODE_BITS`].
pub fn run_full_code_space(c: &Circuit, workers: usize) -> Result<FlagReadout> {
    if c.mode() != Mode::ReversibleFull {
        return Err(Error::WrongMode { expected: Mode::ReversibleFull.as_str(), got: c.mode().as_str() });
    }
    let bits = c.encoding().workspace_width();
    if bits > MAX_FULL_CODE_BITS {
        return Err(Error::CodeSpaceTooLarge { bits, max: MAX_FULL_CODE_BITS });
    }
    run_partitioned(c, 0..1u64 << bits, workers, ReadoutKind::Code, run_codes)
}

fn run_codes(c: &Circuit, codes: Range<u64>) -> Result<FlagReadout> {
    let flag = c.layout().flag();
    let mut readout = FlagReadout::empty(ReadoutKind::Code, *c.encoding());
    for code in codes {
        readout.total_tested += 1;
        if run_code(c, code)?.get(flag) {
            readout.keys.push(code);
        }
    }
    Ok(readout)
}

fn run_partitioned<F>(c: &Circuit, keys: Range<u64>, workers: usize, kind: ReadoutKind, job: F) -> Result<FlagReadout>
where
    F: Fn(&Circuit, Range<u64>) -> Result<FlagReadout> + Sync,
{
    let parts = split_range(keys, workers.max(1));
    if parts.len() <= 1 {
        return match parts.into_iter().next() {
            Some(range) => job(c, range),
            None => Ok(FlagReadout::empty(kind, *c.encoding())),
        };
    }
    let results: Vec<Result<FlagReadout>> = thread::scope(|scope| {
        let handles: Vec<_> = parts
            .into_iter()
            .map(|range| {
                let job = &job;
                scope.spawn(move || job(c, range))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("simulation worker panicked")).collect()
    });
    let mut merged = FlagReadout::empty(kind, *c.encoding());
    for part in results {
        merged.extend(part?);
    }
    Ok(merged)
}

/// Splits `range` into at most `parts` contiguous, nonempty, ordered pieces.
pub fn split_range(range: Range<u64>, parts: usize) -> Vec<Range<u64>> {
    let len = range.end.saturating_sub(range.start);
    let parts = (parts as u64).min(len).max(1);
    let base = len / parts;
    let extra = len % parts;
    let mut start = range.start;
    (0..parts)
        .map(|i| {
            let size = base + u64::from(i < extra);
            let piece = start..start + size;
            start += size;
            piece
        })
        .filter(|r| !r.is_empty())
        .collect()
}
