use std::fmt;

/// Fixed-width bit vector: one register of the farm, one bit per circuit line.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RegisterState {
    width: usize,
    words: Vec<u64>,
}

impl RegisterState {
    pub fn zeros(width: usize) -> Self {
        RegisterState { width, words: vec![0; width.div_ceil(64)] }
    }

    /// Builds a register from per-line bits, line 0 first.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut state = RegisterState::zeros(bits.len());
        for (line, bit) in bits.into_iter().enumerate() {
            state.set(line, bit);
        }
        state
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, line: usize) -> bool {
        debug_assert!(line < self.width);
        self.words[line / 64] >> (line % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, line: usize, value: bool) {
        debug_assert!(line < self.width);
        let mask = 1u64 << (line % 64);
        if value {
            self.words[line / 64] |= mask;
        } else {
            self.words[line / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, line: usize) {
        debug_assert!(line < self.width);
        self.words[line / 64] ^= 1u64 << (line % 64);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterator over the lines in `range` that are set.
    pub fn ones_in(&self, range: std::ops::Range<usize>) -> impl Iterator<Item = usize> + '_ {
        range.filter(move |&line| self.get(line))
    }
}

impl fmt::Debug for RegisterState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegisterState[")?;
        for line in 0..self.width {
            write!(f, "{}", if self.get(line) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}
