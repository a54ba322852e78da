//! Exact metric dimension and a greedy upper bound.
//!
//! The exact solver treats resolvability as a hitting-set problem: `W`
//! resolves `G` iff it meets, for every pair `x < y`, the set of vertices at
//! unequal distance from `x` and `y`. It proceeds in three steps:
//!
//! 1. twin classes force all but their highest member into the solution;
//! 2. the optimum `k` is found by increasing `k` from the best lower bound
//!    until a hitting set of size `k` exists (branch and bound on the pair
//!    with the fewest usable resolvers, or plain enumeration on small
//!    graphs);
//! 3. the lexicographically least optimal set is fixed vertex by vertex in
//!    ascending id order, keeping the last witness to skip redundant
//!    feasibility checks.
//!
//! Step 3 makes the certificate independent of search order and thread
//! scheduling.

mod greedy;
mod pair_table;
mod search;
mod twins;

use itertools::Itertools;

pub use greedy::greedy_resolving_set;
pub use pair_table::{build_pair_table, PairResolutionTable};
pub use twins::{forced_by_twins, twin_classes};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::CliqueFactors;
use crate::metric::{is_resolving, OrderedVertexSet};
use search::{bit, mask_of, members, CoordinateMasks, HittingSearch, Mask};

/// Largest graph the exact solver accepts.
pub const MAX_EXACT_VERTICES: usize = 128;

/// Below this many vertices `Strategy::Auto` enumerates subsets directly.
pub const ENUMERATION_CUTOFF: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimResult {
    Disconnected,
    Value {
        dim: usize,
        /// A minimum resolving set; absent for closed-form values.
        certificate: Option<OrderedVertexSet>,
    },
}

impl DimResult {
    pub fn dim(&self) -> Option<usize> {
        match self {
            DimResult::Value { dim, .. } => Some(*dim),
            DimResult::Disconnected => None,
        }
    }

    pub fn certificate(&self) -> Option<&OrderedVertexSet> {
        match self {
            DimResult::Value { certificate, .. } => certificate.as_ref(),
            DimResult::Disconnected => None,
        }
    }

    pub fn is_disconnected(&self) -> bool {
        matches!(self, DimResult::Disconnected)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Enumeration below [`ENUMERATION_CUTOFF`] vertices, branch and bound above.
    #[default]
    Auto,
    BranchAndBound,
    Enumerate,
}

#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Must be a valid lower bound on the dimension.
    pub lower_hint: Option<usize>,
    /// Any resolving set; ignored if it does not verify.
    pub upper_hint: Option<OrderedVertexSet>,
    /// Tags the input as this product of cliques, enabling coordinate
    /// pruning when every factor has at least three vertices.
    pub clique_factors: Option<CliqueFactors>,
    pub projection_pruning: bool,
    pub twin_reduction: bool,
    pub strategy: Strategy,
    pub threads: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            lower_hint: None,
            upper_hint: None,
            clique_factors: None,
            projection_pruning: true,
            twin_reduction: true,
            strategy: Strategy::Auto,
            threads: 1,
        }
    }
}

impl SolverOptions {
    pub fn for_clique_product(f: &CliqueFactors) -> Self {
        SolverOptions { clique_factors: Some(f.clone()), ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Branch-and-bound nodes expanded; zero for enumeration.
    pub nodes: u64,
}

/// Metric dimension with the lexicographically least minimum resolving set
/// (by sorted id sequence) as certificate.
pub fn exact_metric_dimension(d: &DistanceMatrix, opts: &SolverOptions) -> Result<DimResult> {
    exact_metric_dimension_with_stats(d, opts).map(|(r, _)| r)
}

pub fn exact_metric_dimension_with_stats(
    d: &DistanceMatrix,
    opts: &SolverOptions,
) -> Result<(DimResult, SolveStats)> {
    let mut stats = SolveStats::default();
    if !d.is_connected() {
        return Ok((DimResult::Disconnected, stats));
    }
    let n = d.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_EXACT_VERTICES });
    }
    if n <= 1 {
        let r = DimResult::Value { dim: 0, certificate: Some(OrderedVertexSet::default()) };
        return Ok((r, stats));
    }

    let table = build_pair_table(d)?;
    let pairs = table.masks128().expect("n <= 128");
    let forced = if opts.twin_reduction { forced_by_twins(d) } else { Vec::new() };
    let coords = coordinate_masks(d, opts);

    let mut lower = opts.lower_hint.unwrap_or(0).max(forced.len()).max(1);
    if let Some(f) = opts.clique_factors.as_ref().filter(|_| coords.is_some()) {
        lower = lower.max(f.sizes().iter().max().unwrap() - 1);
    }
    let mut upper = greedy_resolving_set(d)?.len();
    if let Some(hint) = &opts.upper_hint {
        if hint.iter().all(|v| v < n) && is_resolving(d, hint)?.is_resolving() {
            upper = upper.min(hint.len());
        }
    }
    if lower > upper {
        return Err(Error::Precondition(format!(
            "lower hint {lower} exceeds a known resolving set of size {upper}"
        )));
    }

    let enumerate = match opts.strategy {
        Strategy::Enumerate => true,
        Strategy::BranchAndBound => false,
        Strategy::Auto => n < ENUMERATION_CUTOFF,
    };
    let certificate = if enumerate {
        enumerate_least(n, &pairs, &forced, lower, upper)
    } else {
        let pool = (opts.threads > 1)
            .then(|| rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().ok())
            .flatten();
        let search = HittingSearch::new(&pairs, coords.as_ref());
        let found = branch_and_bound_least(&search, n, &forced, lower, upper, pool.as_ref());
        stats.nodes = search.nodes();
        found
    };

    debug_assert!(is_resolving(d, &certificate)?.is_resolving());
    let r = DimResult::Value { dim: certificate.len(), certificate: Some(certificate) };
    Ok((r, stats))
}

fn coordinate_masks(d: &DistanceMatrix, opts: &SolverOptions) -> Option<CoordinateMasks> {
    let f = opts.clique_factors.as_ref()?;
    if !opts.projection_pruning || !f.all_at_least(3) || f.vertex_count() != d.n() {
        return None;
    }
    let mut masks: CoordinateMasks = f.sizes().iter().map(|&m| vec![0; m]).collect();
    let mut buf = vec![0; f.len()];
    for v in 0..d.n() {
        f.decode_into(v, &mut buf);
        for (i, &c) in buf.iter().enumerate() {
            masks[i][c] |= bit(v);
        }
    }
    Some(masks)
}

/// First hitting set in lexicographic subset order, trying sizes upward.
fn enumerate_least(
    n: usize,
    pairs: &[Mask],
    forced: &[usize],
    lower: usize,
    upper: usize,
) -> OrderedVertexSet {
    let base = mask_of(forced);
    let free: Vec<usize> = (0..n).filter(|&v| base & bit(v) == 0).collect();
    for k in lower..=upper {
        let Some(extra) = k.checked_sub(forced.len()) else { continue };
        for combo in free.iter().copied().combinations(extra) {
            let m = base | mask_of(&combo);
            if pairs.iter().all(|&p| p & m != 0) {
                return to_set(m);
            }
        }
    }
    unreachable!("a resolving set of size {upper} exists")
}

fn branch_and_bound_least(
    search: &HittingSearch<'_>,
    n: usize,
    forced: &[usize],
    lower: usize,
    upper: usize,
    pool: Option<&rayon::ThreadPool>,
) -> OrderedVertexSet {
    let base = mask_of(forced);
    let (k, mut witness) = (lower..=upper)
        .find_map(|k| {
            let budget = k.checked_sub(forced.len())?;
            search.find(base, 0, budget, pool).map(|w| (k, w))
        })
        .expect("a resolving set of size `upper` exists");

    let mut included = base;
    let mut excluded: Mask = 0;
    for v in 0..n {
        if included.count_ones() as usize == k {
            break;
        }
        if included & bit(v) != 0 {
            continue;
        }
        if witness & bit(v) != 0 {
            included |= bit(v);
            continue;
        }
        let budget = k - included.count_ones() as usize - 1;
        match search.find(included | bit(v), excluded, budget, pool) {
            Some(w) => {
                witness = w;
                included |= bit(v);
            }
            None => excluded |= bit(v),
        }
    }
    debug_assert_eq!(included, witness);
    to_set(witness)
}

fn to_set(m: Mask) -> OrderedVertexSet {
    OrderedVertexSet::new(members(m)).expect("mask members are distinct")
}
