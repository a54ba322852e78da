use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::metric::OrderedVertexSet;

/// Greedy upper bound: repeatedly add the vertex that separates the most
/// still-unresolved pairs, ties to the lowest id.
///
/// Unresolved pairs are tracked as a partition of the vertices into classes
/// of equal representation, so a step costs `O(n²)` without a pair table.
pub fn greedy_resolving_set(d: &DistanceMatrix) -> Result<OrderedVertexSet> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = d.n();
    let mut classes: Vec<Vec<usize>> = if n > 1 { vec![(0..n).collect()] } else { Vec::new() };
    let mut chosen = Vec::new();
    let mut in_set = vec![false; n];
    // distances are < n on a connected graph
    let mut count = vec![0usize; n.max(1)];

    while !classes.is_empty() {
        let mut best: Option<(usize, usize)> = None;
        for w in (0..n).filter(|&w| !in_set[w]) {
            let row = d.row(w);
            let mut gain = 0;
            for class in &classes {
                let mut remaining = pairs(class.len());
                for &v in class {
                    remaining -= count[row[v] as usize];
                    count[row[v] as usize] += 1;
                }
                for &v in class {
                    count[row[v] as usize] = 0;
                }
                gain += remaining;
            }
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, w));
            }
        }
        let (gain, w) = best.expect("an unresolved class leaves a vertex to add");
        debug_assert!(gain > 0);
        chosen.push(w);
        in_set[w] = true;
        classes = refine(&classes, d.row(w));
    }
    OrderedVertexSet::new(chosen)
}

#[inline]
fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn refine(classes: &[Vec<usize>], row: &[crate::distance::Dist]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for class in classes {
        let mut sorted = class.clone();
        sorted.sort_by_key(|&v| (row[v], v));
        for group in sorted.chunk_by(|&a, &b| row[a] == row[b]) {
            if group.len() > 1 {
                out.push(group.to_vec());
            }
        }
    }
    out
}
