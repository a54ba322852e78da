//! Simple undirected graphs, the clique / bipartite builders, tensor
//! products and the mixed-radix vertex codec for product vertices.

use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// A graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidEdge(u, v, "self-loop".into()));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidEdge(u, v, "repeated edge".into())),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

/// The complete graph `K_n`.
pub fn build_clique(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidSize("a clique needs at least one vertex".into()));
    }
    let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
    Ok(Graph { adj })
}

/// `K_{n,n}` with a perfect matching removed: parts `0..n` and `n..2n`,
/// with `i ~ n + j` iff `i != j`.
pub fn build_bipartite_minus_matching(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("bipartite-minus-matching needs n >= 2, got {n}")));
    }
    let mut adj = vec![Vec::with_capacity(n - 1); 2 * n];
    for (i, ns) in adj.iter_mut().enumerate().take(n) {
        ns.extend((0..n).filter(|&j| j != i).map(|j| n + j));
    }
    for j in 0..n {
        adj[n + j].extend((0..n).filter(|&i| i != j));
    }
    Ok(Graph { adj })
}

/// Tensor (direct) product. Vertex `(u, v)` gets id `u * |V(h)| + v`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut adj = Vec::with_capacity(g.n() * nh);
    for u in 0..g.n() {
        for v in 0..nh {
            let mut ns = Vec::with_capacity(g.degree(u) * h.degree(v));
            for &x in g.neighbors(u) {
                ns.extend(h.neighbors(v).iter().map(|&y| x * nh + y));
            }
            adj.push(ns);
        }
    }
    Graph { adj }
}

/// Tensor product `K_{m_1} ⊗ … ⊗ K_{m_t}`, folded from the left.
pub fn tensor_of_cliques(f: &CliqueFactors) -> Graph {
    let mut sizes = f.sizes().iter();
    let first = *sizes.next().expect("factors are non-empty");
    let mut g = build_clique(first).expect("factor sizes are >= 2");
    for &m in sizes {
        g = tensor_product(&g, &build_clique(m).expect("factor sizes are >= 2"));
    }
    g
}

/// Ordered clique sizes `(m_1, …, m_t)` of a tensor product. Also the
/// coordinate system of its vertices: row-major mixed radix, last factor
/// fastest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueFactors {
    sizes: Vec<usize>,
}

impl CliqueFactors {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidSize("at least one clique factor is required".into()));
        }
        if let Some(&m) = sizes.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSize(format!("clique factor sizes must be >= 2, got {m}")));
        }
        sizes
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m))
            .ok_or_else(|| Error::InvalidSize("vertex count overflows".into()))?;
        Ok(CliqueFactors { sizes })
    }

    #[inline]
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of factors `t`.
    #[inline]
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn all_at_least(&self, bound: usize) -> bool {
        self.sizes.iter().all(|&m| m >= bound)
    }

    /// The factor list with factor `i` removed.
    pub fn without(&self, i: usize) -> Result<CliqueFactors> {
        if i >= self.len() || self.len() < 2 {
            return Err(Error::Precondition(format!("cannot drop factor {i} from {:?}", self.sizes)));
        }
        let mut sizes = self.sizes.clone();
        sizes.remove(i);
        CliqueFactors::new(sizes)
    }

    pub fn flat_index(&self, coord: &[usize]) -> Result<usize> {
        if coord.len() != self.len() || coord.iter().zip(&self.sizes).any(|(&c, &m)| c >= m) {
            return Err(Error::CoordOutOfRange { coord: coord.to_vec(), sizes: self.sizes.clone() });
        }
        Ok(coord.iter().zip(&self.sizes).fold(0, |acc, (&c, &m)| acc * m + c))
    }

    pub fn coords_of(&self, id: usize) -> Result<TensorCoord> {
        let n = self.vertex_count();
        if id >= n {
            return Err(Error::VertexOutOfRange { vertex: id, n });
        }
        Ok(TensorCoord(self.decode(id)))
    }

    /// Unchecked decode into a caller-provided buffer.
    pub(crate) fn decode_into(&self, mut id: usize, out: &mut [usize]) {
        for (slot, &m) in out.iter_mut().zip(&self.sizes).rev() {
            *slot = id % m;
            id /= m;
        }
    }

    pub(crate) fn decode(&self, id: usize) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        self.decode_into(id, &mut out);
        out
    }
}

impl fmt::Display for CliqueFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|m| format!("K_{m}")).collect();
        f.write_str(&parts.join(" ⊗ "))
    }
}

/// 0-based coordinates of a product vertex. Coordinate `c` of factor `i`
/// names the clique vertex written `u_{c+1}` (first factor) or `v_{c+1}`
/// (second factor) in 1-based notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorCoord(pub Vec<usize>);

impl TensorCoord {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for TensorCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Checks that `(u_1, v_j) ↦ a_j`, `(u_2, v_j) ↦ b_j` carries the edge set
/// of `K_2 ⊗ K_n` exactly onto that of `K_{n,n}` minus a perfect matching.
pub fn check_k2_kn_isomorphism(n: usize) -> Result<bool> {
    let product = tensor_of_cliques(&CliqueFactors::new(vec![2, n])?);
    let bipartite = build_bipartite_minus_matching(n)?;
    let f = CliqueFactors::new(vec![2, n])?;
    let map = |id: usize| -> usize {
        let c = f.decode(id);
        if c[0] == 0 {
            c[1]
        } else {
            n + c[1]
        }
    };
    if product.n() != bipartite.n() || product.edge_count() != bipartite.edge_count() {
        return Ok(false);
    }
    let preserved = product.edges().all(|(x, y)| bipartite.has_edge(map(x), map(y)));
    Ok(preserved)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(s: &[usize]) -> CliqueFactors {
        CliqueFactors::new(s.to_vec()).unwrap()
    }

    #[test]
    fn clique_sizes() {
        assert_eq!(build_clique(1).unwrap().edge_count(), 0);
        let k3 = build_clique(3).unwrap();
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(build_clique(5).unwrap().edge_count(), 10);
        assert!(matches!(build_clique(0), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn bipartite_minus_matching() {
        let g = build_bipartite_minus_matching(2).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        assert_eq!(build_bipartite_minus_matching(3).unwrap().edge_count(), 6);
        assert!(build_bipartite_minus_matching(1).is_err());
    }

    #[test]
    fn tensor_counts() {
        let k2 = build_clique(2).unwrap();
        let k3 = build_clique(3).unwrap();
        let p = tensor_product(&k2, &k2);
        assert_eq!((p.n(), p.edge_count()), (4, 2));
        let p = tensor_product(&k3, &k3);
        assert_eq!((p.n(), p.edge_count()), (9, 18));

        // K_2 ⊗ K_3 is a 6-cycle
        let c6 = tensor_product(&k2, &k3);
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        assert!((0..6).all(|v| c6.degree(v) == 2));
        let mut seen = [false; 6];
        let (mut prev, mut cur) = (usize::MAX, 0);
        for _ in 0..6 {
            seen[cur] = true;
            let next = *c6.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        assert_eq!(cur, 0);
        assert!(seen.iter().all(|&s| s));

        let g = tensor_of_cliques(&factors(&[3, 3, 3]));
        assert_eq!(g.n(), 27);
        assert!((0..27).all(|v| g.degree(v) == 8));
        let g = tensor_of_cliques(&factors(&[3, 4]));
        assert_eq!((g.n(), g.edge_count()), (12, 36));
    }

    #[test]
    fn codec_examples() {
        let f = factors(&[3, 4]);
        assert_eq!(f.flat_index(&[0, 0]).unwrap(), 0);
        assert_eq!(f.flat_index(&[2, 3]).unwrap(), 11);
        assert_eq!(f.coords_of(5).unwrap(), TensorCoord(vec![1, 1]));
        assert!(f.flat_index(&[3, 0]).is_err());
        assert!(f.flat_index(&[0]).is_err());
        assert!(f.coords_of(12).is_err());
    }

    #[test]
    fn factor_validation() {
        assert!(CliqueFactors::new(vec![]).is_err());
        assert!(CliqueFactors::new(vec![3, 1]).is_err());
        assert!(CliqueFactors::new(vec![usize::MAX, 3]).is_err());
        assert_eq!(factors(&[3, 4, 5]).without(1).unwrap(), factors(&[3, 5]));
    }

    #[test]
    fn graph_rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        let g = Graph::from_edges(3, [(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn k2_kn_isomorphism() {
        for n in 2..=8 {
            assert!(check_k2_kn_isomorphism(n).unwrap(), "n = {n}");
        }
        assert!(check_k2_kn_isomorphism(1).is_err());
    }
}
