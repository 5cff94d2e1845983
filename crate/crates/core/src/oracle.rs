//! Classical ground truth: depth-first Hamiltonian cycle search and the
//! rotation/reflection algebra used to compare circuit output against it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Undirected Hamiltonian cycles, each stored as its canonical key.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleSet {
    cycles: BTreeSet<Vec<usize>>,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cycles.iter()
    }

    pub fn contains(&self, key: &[usize]) -> bool {
        self.cycles.contains(key)
    }

    pub fn insert_walk(&mut self, walk: &[usize]) -> Result<bool> {
        Ok(self.cycles.insert(canonicalize(walk)?))
    }
}

/// Every Hamiltonian cycle of `g`, by backtracking from vertex 0 with a
/// visited set.
pub fn find_cycles(g: &Graph) -> CycleSet {
    let n = g.vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut found = CycleSet::default();
    let mut path = vec![0];
    let mut visited = vec![false; n];
    visited[0] = true;
    extend_path(&adjacency, &mut path, &mut visited, &mut found);
    found
}

fn extend_path(adjacency: &[Vec<usize>], path: &mut Vec<usize>, visited: &mut [bool], found: &mut CycleSet) {
    let last = *path.last().expect("path starts at vertex 0");
    if path.len() == adjacency.len() {
        if adjacency[last].contains(&0) {
            found.insert_walk(path).expect("backtracking only produces permutations");
        }
        return;
    }
    for &next in &adjacency[last] {
        if !visited[next] {
            visited[next] = true;
            path.push(next);
            extend_path(adjacency, path, visited, found);
            path.pop();
            visited[next] = false;
        }
    }
}

/// Least representative of `walk` over all rotations and both directions.
pub fn canonicalize(walk: &[usize]) -> Result<Vec<usize>> {
    let n = walk.len();
    let mut seen = vec![false; n];
    if n == 0 || !walk.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
        return Err(Error::InvalidPermutation(walk.to_vec()));
    }
    Ok(orbit(walk).min().expect("orbit of a nonempty walk is nonempty"))
}

/// All `2n` rotations and reflections of a closed walk.
fn orbit(walk: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = walk.len();
    (0..n).flat_map(move |shift| {
        let forward: Vec<usize> = (0..n).map(|i| walk[(shift + i) % n]).collect();
        let backward: Vec<usize> = (0..n).map(|i| walk[(shift + n - i) % n]).collect();
        [forward, backward]
    })
}

/// The fixed-start walks a register farm should flag: both traversals of
/// each cycle, rooted at vertex 0.
pub fn expected_fixed_start(cs: &CycleSet) -> BTreeSet<Vec<usize>> {
    cs.iter().flat_map(|key| orbit(key).filter(|w| w[0] == 0).collect::<Vec<_>>()).collect()
}

/// Every rotation and direction of each cycle: what an exhaustive run over
/// unconstrained codes should flag.
pub fn expected_full_codes(cs: &CycleSet) -> BTreeSet<Vec<usize>> {
    cs.iter().flat_map(|key| orbit(key).collect::<Vec<_>>()).collect()
}
