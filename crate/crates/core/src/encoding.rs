//! Vertex codes and the workspace portion of the register layout.
//!
//! Position `p` of a candidate walk occupies workspace lines
//! `[p*k, (p+1)*k)`, least significant bit first.

use crate::error::{Error, Result};
use crate::register::RegisterState;

/// Number of bits needed to name one of `n` vertices: `ceil(log2(n))`.
pub fn bits_per_vertex(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    Ok((usize::BITS - (n - 1).leading_zeros()) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Encoding {
    n: usize,
    k: usize,
}

impl Encoding {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Encoding { n, k: bits_per_vertex(n)? })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn bits_per_vertex(&self) -> usize {
        self.k
    }

    /// Total workspace lines, `n*k`.
    pub fn workspace_width(&self) -> usize {
        self.n * self.k
    }

    /// Line holding bit `bit` of the code at walk position `position`.
    #[inline]
    pub fn line(&self, position: usize, bit: usize) -> usize {
        position * self.k + bit
    }

    /// Writes `codes` into the workspace of `state`, leaving other lines alone.
    pub(crate) fn write_codes(&self, state: &mut RegisterState, codes: &[usize]) {
        for (position, &code) in codes.iter().enumerate() {
            for bit in 0..self.k {
                state.set(self.line(position, bit), code >> bit & 1 == 1);
            }
        }
    }

    /// Loads a packed workspace word: bit `i` of `code` goes to line `i`.
    pub(crate) fn write_packed(&self, state: &mut RegisterState, code: u64) {
        for line in 0..self.workspace_width() {
            state.set(line, code >> line & 1 == 1);
        }
    }
}

/// Candidate walk with its start fixed at vertex 0, tagged with its
/// lexicographic rank among all such walks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Initialization {
    perm: Vec<usize>,
    rank: u64,
}

impl Initialization {
    /// Validates `perm` and computes its rank.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let rank = crate::enumerator::rank_of(&perm)?;
        Ok(Initialization { perm, rank })
    }

    pub(crate) fn from_parts(perm: Vec<usize>, rank: u64) -> Self {
        Initialization { perm, rank }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn into_perm(self) -> Vec<usize> {
        self.perm
    }
}

/// Fresh register of `total_lines` lines holding `init` in its workspace;
/// every other line is 0.
pub fn encode_initialization(init: &Initialization, enc: &Encoding, total_lines: usize) -> Result<RegisterState> {
    if init.perm.len() != enc.n {
        return Err(Error::InvalidPermutation(init.perm.clone()));
    }
    if total_lines < enc.workspace_width() {
        return Err(Error::LayoutTooSmall { required: enc.workspace_width(), available: total_lines });
    }
    let mut state = RegisterState::zeros(total_lines);
    enc.write_codes(&mut state, &init.perm);
    Ok(state)
}

/// Reads the `n` workspace codes back as integers. Codes are not checked
/// against `n`: exhaustive code runs produce values up to `2^k - 1`.
pub fn decode_workspace(state: &RegisterState, enc: &Encoding) -> Vec<usize> {
    (0..enc.n)
        .map(|position| {
            (0..enc.k).filter(|&bit| state.get(enc.line(position, bit))).fold(0usize, |code, bit| code | 1 << bit)
        })
        .collect()
}

/// Decodes a packed workspace word (see [`Encoding::line`]) into codes.
pub fn decode_packed(code: u64, enc: &Encoding) -> Vec<usize> {
    let mask = (1u64 << enc.k) - 1;
    (0..enc.n).map(|position| (code >> (position * enc.k) & mask) as usize).collect()
}
