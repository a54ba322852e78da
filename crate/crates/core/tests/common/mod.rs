#![allow(dead_code)]

use rand::Rng;
use tensordim::{is_resolving, DistanceMatrix, Graph, OrderedVertexSet};

/// Smallest `k` for which some `k`-subset resolves `d`, found by trying
/// every subset in order of size with `is_resolving` alone. Returns the
/// first such subset in lexicographic order.
pub fn brute_force_dimension(d: &DistanceMatrix) -> (usize, Vec<usize>) {
    let n = d.n();
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let w = OrderedVertexSet::new(combo.clone()).unwrap();
            if is_resolving(d, &w).unwrap().is_resolving() {
                return (k, combo);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set resolves every graph")
}

/// Whether any `k`-subset resolves `d`.
pub fn exists_resolving_of_size(d: &DistanceMatrix, k: usize) -> bool {
    let n = d.n();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if is_resolving(d, &OrderedVertexSet::new(combo.clone()).unwrap()).unwrap().is_resolving() {
            return true;
        }
        if !next_combination(&mut combo, n) {
            return false;
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra_p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(extra_p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
