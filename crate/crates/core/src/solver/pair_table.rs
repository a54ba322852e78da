use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};

/// For every unordered pair `x < y`, the bitset of vertices `w` with
/// `d(x, w) != d(y, w)`. `W` resolves the graph iff it meets every set.
#[derive(Debug, Clone)]
pub struct PairResolutionTable {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl PairResolutionTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn index(&self, x: usize, y: usize) -> usize {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        debug_assert!(y < self.n && x != y);
        x * self.n - x * (x + 1) / 2 + (y - x - 1)
    }

    pub fn resolvers(&self, x: usize, y: usize) -> &[u64] {
        let i = self.index(x, y);
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn resolves(&self, x: usize, y: usize, w: usize) -> bool {
        self.resolvers(x, y)[w / 64] >> (w % 64) & 1 == 1
    }

    pub fn resolver_list(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.resolves(x, y, w)).collect()
    }

    /// Pairs in `(x, y)` order with their resolver words.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &[u64])> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y))).zip(self.bits.chunks(self.words.max(1)))
    }

    /// Whether the vertices in `set` meet every resolver set.
    pub fn is_hit_by(&self, set: &[usize]) -> bool {
        let mut mask = vec![0u64; self.words];
        for &w in set {
            mask[w / 64] |= 1 << (w % 64);
        }
        self.iter().all(|(_, r)| r.iter().zip(&mask).any(|(a, b)| a & b != 0))
    }

    /// Resolver sets packed into `u128`; `None` above 128 vertices.
    pub(crate) fn masks128(&self) -> Option<Vec<u128>> {
        if self.n > 128 {
            return None;
        }
        Some(
            self.iter()
                .map(|(_, r)| {
                    let lo = r.first().copied().unwrap_or(0) as u128;
                    let hi = r.get(1).copied().unwrap_or(0) as u128;
                    lo | hi << 64
                })
                .collect(),
        )
    }
}

pub fn build_pair_table(d: &DistanceMatrix) -> Result<PairResolutionTable> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = d.n();
    let words = n.div_ceil(64);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2 * words);
    for x in 0..n {
        let rx = d.row(x);
        for y in x + 1..n {
            let ry = d.row(y);
            let start = bits.len();
            bits.resize(start + words, 0);
            for w in 0..n {
                if rx[w] != ry[w] {
                    bits[start + w / 64] |= 1 << (w % 64);
                }
            }
        }
    }
    Ok(PairResolutionTable { n, words, bits })
}
