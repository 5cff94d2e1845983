//! The ordered database of constrained initializations.
//!
//! Every candidate walk starts at vertex 0 and lists the remaining `n-1`
//! vertices once each. Walks are ordered lexicographically on positions
//! `1..n`, so rank and walk convert through the factorial number system.

use std::ops::Range;

use crate::count::{factorial, Count};
use crate::encoding::Initialization;
use crate::error::{Error, Result};

/// Number of constrained initializations, `(n-1)!`.
pub fn count_initializations<T: Count>(n: usize) -> Result<T> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    factorial(n - 1)
}

/// The `index`-th fixed-start walk on `n` vertices.
pub fn unrank(index: u64, n: usize) -> Result<Initialization> {
    let count = count_initializations::<u64>(n)?;
    if index >= count {
        return Err(Error::RankOutOfRange { rank: index, count });
    }
    let mut remaining: Vec<usize> = (1..n).collect();
    let mut perm = Vec::with_capacity(n);
    perm.push(0);
    let mut rest = index;
    let mut radix = count;
    for slots in (1..n).rev() {
        // radix = slots! before the division
        radix /= slots as u64;
        let digit = (rest / radix) as usize;
        rest %= radix;
        perm.push(remaining.remove(digit));
    }
    Ok(Initialization::from_parts(perm, index))
}

/// Rank of a fixed-start walk; inverse of [`unrank`].
pub fn rank(init: &Initialization) -> Result<u64> {
    rank_of(init.perm())
}

pub(crate) fn rank_of(perm: &[usize]) -> Result<u64> {
    let n = perm.len();
    if n < 2 || perm[0] != 0 || !is_permutation(perm) {
        return Err(Error::InvalidPermutation(perm.to_vec()));
    }
    // (n-1)! must fit for the rank to be meaningful
    count_initializations::<u64>(n)?;
    let mut rank = 0u64;
    for i in 1..n {
        let smaller_after = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller_after;
    }
    Ok(rank)
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&v| v < perm.len() && !std::mem::replace(&mut seen[v], true))
}

/// All `(n-1)!` initializations in rank order.
pub fn stream(n: usize) -> Result<InitStream> {
    let count = count_initializations::<u64>(n)?;
    stream_range(n, 0..count)
}

/// Initializations with ranks in `ranks`, in rank order. Disjoint ranges
/// can be consumed by independent workers.
pub fn stream_range(n: usize, ranks: Range<u64>) -> Result<InitStream> {
    let count = count_initializations::<u64>(n)?;
    if ranks.end > count {
        return Err(Error::RankOutOfRange { rank: ranks.end, count });
    }
    let current = if ranks.start < ranks.end { Some(unrank(ranks.start, n)?.into_perm()) } else { None };
    Ok(InitStream { current, next_rank: ranks.start, end: ranks.end })
}

/// Iterator produced by [`stream`] and [`stream_range`]. Holds one walk at
/// a time.
#[derive(Debug, Clone)]
pub struct InitStream {
    current: Option<Vec<usize>>,
    next_rank: u64,
    end: u64,
}

impl Iterator for InitStream {
    type Item = Initialization;

    fn next(&mut self) -> Option<Initialization> {
        if self.next_rank >= self.end {
            return None;
        }
        let perm = self.current.as_mut()?;
        let item = Initialization::from_parts(perm.clone(), self.next_rank);
        self.next_rank += 1;
        if self.next_rank < self.end {
            next_permutation(&mut perm[1..]);
        }
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end.saturating_sub(self.next_rank) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for InitStream {}

/// Advances `xs` to its lexicographic successor; returns false (and leaves
/// the slice sorted ascending) after the last permutation.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
