//! Metric representations and resolving-set checks.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap, HashSet};

use crate::distance::{Dist, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{CliqueFactors, TensorCoord};

/// An ordered, duplicate-free list of vertex ids. Order fixes the
/// coordinate order of representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrderedVertexSet {
    vertices: Vec<usize>,
}

impl OrderedVertexSet {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(vertices.len());
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(OrderedVertexSet { vertices })
    }

    /// Builds the set from product coordinates, keeping their order.
    pub fn from_coords<C: AsRef<[usize]>>(f: &CliqueFactors, coords: &[C]) -> Result<Self> {
        let ids = coords.iter().map(|c| f.flat_index(c.as_ref())).collect::<Result<Vec<_>>>()?;
        OrderedVertexSet::new(ids)
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    /// The same vertices in ascending order.
    pub fn sorted(&self) -> OrderedVertexSet {
        let mut vertices = self.vertices.clone();
        vertices.sort_unstable();
        OrderedVertexSet { vertices }
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.vertices
    }

    pub fn coords(&self, f: &CliqueFactors) -> Result<Vec<TensorCoord>> {
        self.iter().map(|v| f.coords_of(v)).collect()
    }

    pub(crate) fn check_against(&self, d: &DistanceMatrix) -> Result<()> {
        self.iter().try_for_each(|w| d.check_vertex(w))
    }
}

impl From<OrderedVertexSet> for Vec<usize> {
    fn from(s: OrderedVertexSet) -> Self {
        s.vertices
    }
}

/// `r(v | W)`: distances from `v` to each element of `W`, in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation(pub Vec<Dist>);

pub fn representation(d: &DistanceMatrix, v: usize, w: &OrderedVertexSet) -> Result<Representation> {
    d.check_vertex(v)?;
    w.check_against(d)?;
    Ok(Representation(raw_representation(d, v, w)))
}

fn raw_representation(d: &DistanceMatrix, v: usize, w: &OrderedVertexSet) -> Vec<Dist> {
    let row = d.row(v);
    w.iter().map(|x| row[x]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// Two vertices `x < y` with equal representations: among all such
    /// pairs, the one farthest apart, ties to the lexicographically least.
    Unresolved(usize, usize),
}

impl Resolution {
    pub fn is_resolving(self) -> bool {
        matches!(self, Resolution::Resolving)
    }
}

/// Groups vertices by hashed representation, `O(n·|W|)` plus the pairs
/// inside each non-trivial class when picking the certificate.
///
/// On `K_m ⊗ K_n` with `m, n ≥ 3`, if some coordinate of `W` misses two
/// values, the farthest unresolved pair differs in such a coordinate only.
pub fn is_resolving(d: &DistanceMatrix, w: &OrderedVertexSet) -> Result<Resolution> {
    w.check_against(d)?;
    let mut classes: HashMap<Vec<Dist>, Vec<usize>> = HashMap::with_capacity(d.n());
    for v in 0..d.n() {
        classes.entry(raw_representation(d, v, w)).or_default().push(v);
    }
    let mut best: Option<(Reverse<Dist>, usize, usize)> = None;
    for class in classes.values().filter(|c| c.len() > 1) {
        for (i, &x) in class.iter().enumerate() {
            let row = d.row(x);
            for &y in &class[i + 1..] {
                let key = (Reverse(row[y]), x, y);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
    }
    Ok(match best {
        None => Resolution::Resolving,
        Some((_, x, y)) => Resolution::Unresolved(x, y),
    })
}

/// `W(i)`: the factor-`i` coordinates used by elements of `W`.
pub fn projection(w: &OrderedVertexSet, i: usize, f: &CliqueFactors) -> Result<BTreeSet<usize>> {
    if i >= f.len() {
        return Err(Error::Precondition(format!("factor index {i} out of range for {} factors", f.len())));
    }
    w.iter().map(|v| Ok(f.coords_of(v)?.0[i])).collect()
}

/// For `K_m ⊗ K_n`: finds `(u,v), (x,y) ∈ W` with `u ≠ x`, `v ≠ y` such that
/// no other element of `W` has first coordinate in `{u, x}` or second
/// coordinate in `{v, y}`. Returns the flat ids of `(u, y)` and `(x, v)`,
/// which then have equal representations. Pairs are scanned in `W` order.
pub fn lemma2_witness(w: &OrderedVertexSet, f: &CliqueFactors) -> Result<Option<(usize, usize)>> {
    if f.len() != 2 || !f.all_at_least(3) {
        return Err(Error::Precondition(format!(
            "the swapped-pair witness needs two factors of size >= 3, got {:?}",
            f.sizes()
        )));
    }
    let coords = w.iter().map(|v| f.coords_of(v).map(|c| (c.0[0], c.0[1]))).collect::<Result<Vec<_>>>()?;
    let mut row_count = vec![0usize; f.sizes()[0]];
    let mut col_count = vec![0usize; f.sizes()[1]];
    for &(a, b) in &coords {
        row_count[a] += 1;
        col_count[b] += 1;
    }
    // an isolated element is the only one in both its row and its column
    let isolated = |(a, b): (usize, usize)| row_count[a] == 1 && col_count[b] == 1;
    for (i, &(u, v)) in coords.iter().enumerate() {
        if !isolated((u, v)) {
            continue;
        }
        for &(x, y) in &coords[i + 1..] {
            if x != u && y != v && isolated((x, y)) {
                return Ok(Some((f.flat_index(&[u, y])?, f.flat_index(&[x, v])?)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::graph::tensor_of_cliques;

    fn factors(s: &[usize]) -> CliqueFactors {
        CliqueFactors::new(s.to_vec()).unwrap()
    }

    fn k33() -> (CliqueFactors, DistanceMatrix) {
        let f = factors(&[3, 3]);
        let d = all_pairs_distances(&tensor_of_cliques(&f));
        (f, d)
    }

    #[test]
    fn representations() {
        let (f, d) = k33();
        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [1, 0], [0, 1]]).unwrap();
        let at = |c: [usize; 2]| representation(&d, f.flat_index(&c).unwrap(), &w).unwrap().0;
        assert_eq!(at([2, 2]), vec![1, 1, 1]);
        assert_eq!(at([1, 1]), vec![1, 2, 2]);
        assert_eq!(at([1, 0]), vec![2, 0, 1]);
        assert!(representation(&d, 9, &w).is_err());
    }

    #[test]
    fn resolving_examples() {
        let (f, d) = k33();
        let all = OrderedVertexSet::new((0..9).collect()).unwrap();
        assert_eq!(is_resolving(&d, &all).unwrap(), Resolution::Resolving);
        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [1, 0], [0, 1]]).unwrap();
        assert_eq!(is_resolving(&d, &w).unwrap(), Resolution::Resolving);
        let w = OrderedVertexSet::new(vec![0]).unwrap();
        assert!(!is_resolving(&d, &w).unwrap().is_resolving());
        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [1, 1]]).unwrap();
        assert_eq!(is_resolving(&d, &w).unwrap(), Resolution::Unresolved(1, 3));
    }

    #[test]
    fn certificate_prefers_farthest_then_least() {
        // path 0-1-2-3-4 with W = {2}: classes {1,3} at distance 2, {0,4} at distance 4
        let g = crate::graph::Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = all_pairs_distances(&g);
        let w = OrderedVertexSet::new(vec![2]).unwrap();
        assert_eq!(is_resolving(&d, &w).unwrap(), Resolution::Unresolved(0, 4));
        let empty = OrderedVertexSet::default();
        assert_eq!(is_resolving(&d, &empty).unwrap(), Resolution::Unresolved(0, 4));

        // K_4: every pair at distance 1, so the least pair wins
        let d = all_pairs_distances(&crate::graph::build_clique(4).unwrap());
        let w = OrderedVertexSet::new(vec![3]).unwrap();
        assert_eq!(is_resolving(&d, &w).unwrap(), Resolution::Unresolved(0, 1));
    }

    #[test]
    fn duplicate_vertices_rejected() {
        assert_eq!(OrderedVertexSet::new(vec![1, 2, 1]), Err(Error::DuplicateVertex(1)));
    }

    #[test]
    fn projections() {
        let f = factors(&[3, 3]);
        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [1, 1]]).unwrap();
        assert_eq!(projection(&w, 0, &f).unwrap(), BTreeSet::from([0, 1]));
        assert!(projection(&OrderedVertexSet::default(), 0, &f).unwrap().is_empty());
        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [0, 1], [0, 2]]).unwrap();
        assert_eq!(projection(&w, 0, &f).unwrap(), BTreeSet::from([0]));
        assert!(projection(&w, 2, &f).is_err());
    }

    #[test]
    fn swapped_pair_witness() {
        let (f, d) = k33();
        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [1, 1]]).unwrap();
        let (a, b) = lemma2_witness(&w, &f).unwrap().unwrap();
        assert_eq!((a, b), (f.flat_index(&[0, 1]).unwrap(), f.flat_index(&[1, 0]).unwrap()));
        assert_eq!(representation(&d, a, &w), representation(&d, b, &w));

        let w = OrderedVertexSet::from_coords(&f, &[[0, 0], [0, 1], [1, 2]]).unwrap();
        assert_eq!(lemma2_witness(&w, &f).unwrap(), None);

        let f4 = factors(&[4, 4]);
        let d4 = DistanceMatrix::of_clique_product(&f4);
        let diag = [[0, 0], [1, 1], [2, 2]];
        for i in 0..3 {
            for j in i + 1..3 {
                let w = OrderedVertexSet::from_coords(&f4, &[diag[i], diag[j], diag[3 - i - j]]).unwrap();
                let (a, b) = lemma2_witness(&w, &f4).unwrap().unwrap();
                assert_eq!(f4.coords_of(a).unwrap().0, vec![diag[i][0], diag[j][1]]);
                assert_eq!(representation(&d4, a, &w), representation(&d4, b, &w));
            }
        }

        assert!(lemma2_witness(&w, &factors(&[2, 3])).is_err());
        assert!(lemma2_witness(&w, &factors(&[3, 3, 3])).is_err());
    }
}
