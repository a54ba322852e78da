//! All-pairs shortest-path distances for unweighted graphs.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{tensor_of_cliques, CliqueFactors, Graph};

pub type Dist = u16;

/// Sentinel for unreachable pairs. Never used in arithmetic.
pub const INF: Dist = Dist::MAX;

/// Dense `n × n` table of hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Disconnected,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[Dist] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&INF)
    }

    pub fn diameter(&self) -> Diameter {
        if !self.is_connected() {
            return Diameter::Disconnected;
        }
        Diameter::Finite(self.d.iter().copied().max().unwrap_or(0) as usize)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Distances of `K_{m_1} ⊗ … ⊗ K_{m_t}`.
    ///
    /// When every factor has at least three vertices, two distinct vertices
    /// are at distance 2 if they agree in some coordinate and adjacent
    /// otherwise, so the table is filled without building the graph. Any
    /// factor of size 2 falls back to BFS on the materialized product.
    pub fn of_clique_product(f: &CliqueFactors) -> DistanceMatrix {
        if !f.all_at_least(3) {
            return all_pairs_distances(&tensor_of_cliques(f));
        }
        let n = f.vertex_count();
        let t = f.len();
        let mut coords = vec![0usize; n * t];
        for (id, chunk) in coords.chunks_mut(t).enumerate() {
            f.decode_into(id, chunk);
        }
        let mut d = vec![0 as Dist; n * n];
        d.par_chunks_mut(n).enumerate().for_each(|(u, row)| {
            let cu = &coords[u * t..(u + 1) * t];
            for (v, slot) in row.iter_mut().enumerate() {
                *slot = if u == v {
                    0
                } else if cu.iter().zip(&coords[v * t..(v + 1) * t]).any(|(a, b)| a == b) {
                    2
                } else {
                    1
                };
            }
        });
        DistanceMatrix { n, d }
    }
}

/// BFS from every source; sources are processed in parallel.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    assert!(n < INF as usize, "graph too large for the distance table");
    let mut d = vec![INF; n * n];
    if n > 0 {
        d.par_chunks_mut(n).enumerate().for_each(|(src, row)| bfs_into(g, src, row));
    }
    DistanceMatrix { n, d }
}

fn bfs_into(g: &Graph, src: usize, row: &mut [Dist]) {
    let mut queue = VecDeque::with_capacity(g.n());
    row[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &w in g.neighbors(u) {
            if row[w] == INF {
                row[w] = next;
                queue.push_back(w);
            }
        }
    }
}

pub fn diameter(g: &Graph) -> Diameter {
    all_pairs_distances(g).diameter()
}
