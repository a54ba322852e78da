//! Branch and bound over the hitting-set formulation with `u128` vertex
//! masks.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

pub(crate) type Mask = u128;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1 << v
}

pub(crate) fn mask_of(vs: &[usize]) -> Mask {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

pub(crate) fn members(mut m: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Vertices carrying coordinate value `j` in factor `i`, one mask per
/// `(i, j)`, grouped by factor.
pub(crate) type CoordinateMasks = Vec<Vec<Mask>>;

pub(crate) struct HittingSearch<'a> {
    pairs: &'a [Mask],
    coordinates: Option<&'a CoordinateMasks>,
    stop: AtomicBool,
    nodes: AtomicU64,
}

impl<'a> HittingSearch<'a> {
    pub fn new(pairs: &'a [Mask], coordinates: Option<&'a CoordinateMasks>) -> Self {
        HittingSearch { pairs, coordinates, stop: AtomicBool::new(false), nodes: AtomicU64::new(0) }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// A superset of `chosen` avoiding `excluded`, with at most `budget`
    /// extra vertices, that meets every pair mask.
    pub fn find(
        &self,
        chosen: Mask,
        excluded: Mask,
        budget: usize,
        pool: Option<&rayon::ThreadPool>,
    ) -> Option<Mask> {
        self.stop.store(false, Ordering::Relaxed);
        let Some(pool) = pool else {
            return self.dfs(chosen, excluded, budget);
        };
        // fan out the children of the root; the first success stops the rest
        let branch = match self.expand(chosen, excluded, budget) {
            Expand::Done(found) => return Some(found),
            Expand::Dead => return None,
            Expand::Branch(m) => m,
        };
        let children = members(branch & !excluded);
        pool.install(|| {
            children.par_iter().enumerate().find_map_any(|(i, &r)| {
                let before = mask_of(&children[..i]);
                let found = self.dfs(chosen | bit(r), excluded | before, budget - 1);
                if found.is_some() {
                    self.stop.store(true, Ordering::Relaxed);
                }
                found
            })
        })
    }

    fn dfs(&self, chosen: Mask, mut excluded: Mask, budget: usize) -> Option<Mask> {
        if self.stop.load(Ordering::Relaxed) {
            return None;
        }
        let branch = match self.expand(chosen, excluded, budget) {
            Expand::Done(found) => return Some(found),
            Expand::Dead => return None,
            Expand::Branch(m) => m,
        };
        let mut cand = branch & !excluded;
        while cand != 0 {
            let r = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if let Some(found) = self.dfs(chosen | bit(r), excluded, budget - 1) {
                return Some(found);
            }
            excluded |= bit(r);
        }
        None
    }

    fn expand(&self, chosen: Mask, excluded: Mask, budget: usize) -> Expand {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let avail = !excluded;
        let mut best: Option<(u32, Mask)> = None;
        for &p in self.pairs {
            if p & chosen != 0 {
                continue;
            }
            let c = (p & avail).count_ones();
            if c == 0 {
                return Expand::Dead;
            }
            if best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, p));
            }
        }
        let Some((_, branch)) = best else {
            return Expand::Done(chosen);
        };
        if budget == 0 {
            return Expand::Dead;
        }
        if self.packing_bound(chosen, avail, budget) > budget {
            return Expand::Dead;
        }
        if let Some(coords) = self.coordinates {
            if !coordinates_feasible(coords, chosen, avail, budget) {
                return Expand::Dead;
            }
        }
        Expand::Branch(branch)
    }

    /// Number of unresolved pairs with pairwise disjoint available
    /// resolvers; each needs its own vertex. Stops once it exceeds `budget`.
    fn packing_bound(&self, chosen: Mask, avail: Mask, budget: usize) -> usize {
        let mut used: Mask = 0;
        let mut count = 0;
        for &p in self.pairs {
            if p & chosen != 0 {
                continue;
            }
            let a = p & avail;
            if a & used == 0 {
                used |= a;
                count += 1;
                if count > budget {
                    break;
                }
            }
        }
        count
    }
}

/// A resolving set of a product of cliques (all factors ≥ 3) misses at most
/// one value of every coordinate, and one vertex covers one value per
/// coordinate.
fn coordinates_feasible(coords: &CoordinateMasks, chosen: Mask, avail: Mask, budget: usize) -> bool {
    coords.iter().all(|values| {
        let mut uncovered = 0;
        let mut unreachable = 0;
        for &m in values {
            if m & chosen == 0 {
                uncovered += 1;
                if m & avail == 0 {
                    unreachable += 1;
                }
            }
        }
        unreachable <= 1 && uncovered <= budget + 1
    })
}

enum Expand {
    Done(Mask),
    Dead,
    Branch(Mask),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_helpers() {
        assert_eq!(members(mask_of(&[0, 5, 127])), vec![0, 5, 127]);
        assert_eq!(members(0), Vec::<usize>::new());
    }

    #[test]
    fn small_hitting_instance() {
        // sets {0,1}, {1,2}, {3}: minimum hitting set {1,3}
        let pairs = [mask_of(&[0, 1]), mask_of(&[1, 2]), mask_of(&[3])];
        let s = HittingSearch::new(&pairs, None);
        assert_eq!(s.find(0, 0, 1, None), None);
        assert_eq!(s.find(0, 0, 2, None), Some(mask_of(&[1, 3])));
        assert_eq!(s.find(0, bit(1), 2, None), None);
        assert_eq!(s.find(0, bit(1), 3, None), Some(mask_of(&[0, 2, 3])));
    }

    #[test]
    fn coordinate_bound() {
        // two factors of size 3; nothing chosen means 3 uncovered per factor
        let coords = vec![vec![bit(0), bit(1), bit(2)], vec![bit(3), bit(4), bit(5)]];
        assert!(!coordinates_feasible(&coords, 0, !0, 1));
        assert!(coordinates_feasible(&coords, 0, !0, 2));
        assert!(!coordinates_feasible(&coords, 0, !(bit(0) | bit(1)), 2));
    }
}
