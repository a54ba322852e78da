//! Closed-form dimension of `K_m ⊗ K_n`, explicit resolving sets for every
//! case, and bounds for products of three or more cliques.
//!
//! Vertex names follow the 1-based convention `(u_i, v_j)`; the helpers
//! below translate them into 0-based product coordinates. Every
//! construction is checked with [`is_resolving`] before it is returned.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::CliqueFactors;
use crate::metric::{is_resolving, OrderedVertexSet, Resolution};
use crate::solver::{exact_metric_dimension, DimResult, SolverOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaCase {
    /// `K_2 ⊗ K_2`.
    Disconnected,
    /// `m = 2`, `n ≥ 3`: dimension `n − 1`.
    M2,
    /// `m ≥ 3`, `n ≥ 2m − 1`: dimension `n − 1`.
    LargeN,
    /// `3 ≤ m ≤ n ≤ 2m − 2`: dimension `m + n − k − 2 = ⌈2(m+n−2)/3⌉`.
    Balanced { k: usize },
}

fn normalize(m: usize, n: usize) -> Result<(usize, usize)> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidSize(format!("clique sizes must be >= 2, got ({m}, {n})")));
    }
    Ok((m.min(n), m.max(n)))
}

pub fn formula_case(m: usize, n: usize) -> Result<FormulaCase> {
    let (m, n) = normalize(m, n)?;
    Ok(match (m, n) {
        (2, 2) => FormulaCase::Disconnected,
        (2, _) => FormulaCase::M2,
        _ if n >= 2 * m - 1 => FormulaCase::LargeN,
        _ => FormulaCase::Balanced { k: (m + n - 2) / 3 },
    })
}

/// `dim(K_m ⊗ K_n)`; argument order does not matter.
pub fn dim_formula(m: usize, n: usize) -> Result<DimResult> {
    let (lo, hi) = normalize(m, n)?;
    let dim = match formula_case(lo, hi)? {
        FormulaCase::Disconnected => return Ok(DimResult::Disconnected),
        FormulaCase::M2 | FormulaCase::LargeN => hi - 1,
        FormulaCase::Balanced { .. } => ceil_two_thirds(lo + hi - 2),
    };
    Ok(DimResult::Value { dim, certificate: None })
}

#[inline]
fn ceil_two_thirds(s: usize) -> usize {
    (2 * s).div_ceil(3)
}

fn two_factors(m: usize, n: usize) -> Result<CliqueFactors> {
    CliqueFactors::new(vec![m, n])
}

/// Builds a set from 1-based `(i, j)` names in `K_m ⊗ K_n`.
fn from_names(
    f: &CliqueFactors,
    names: impl IntoIterator<Item = (usize, usize)>,
) -> Result<OrderedVertexSet> {
    let coords: Vec<[usize; 2]> = names.into_iter().map(|(i, j)| [i - 1, j - 1]).collect();
    OrderedVertexSet::from_coords(f, &coords)
}

/// Checks `w` against the product `f`, turning a failure into
/// [`Error::ConstructionFailed`] with the offending pair.
pub fn certify(f: &CliqueFactors, w: OrderedVertexSet, what: &str) -> Result<OrderedVertexSet> {
    let d = DistanceMatrix::of_clique_product(f);
    match is_resolving(&d, &w)? {
        Resolution::Resolving => Ok(w),
        Resolution::Unresolved(x, y) => {
            Err(Error::ConstructionFailed { what: what.to_string(), set: w, x, y })
        }
    }
}

/// Size `n − 1` resolving set for `m ≥ 3`, `n ≥ 2m − 1`:
/// `{(u_i, v_i)} ∪ {(u_i, v_{m−1+i})}` for `i < m`, plus `(u_1, v_j)` for
/// `2m − 1 ≤ j ≤ n − 1`.
pub fn construct_large_n(m: usize, n: usize) -> Result<OrderedVertexSet> {
    if m < 3 || n < 2 * m - 1 {
        return Err(Error::Precondition(format!(
            "large-n construction needs m >= 3 and n >= 2m - 1, got ({m}, {n})"
        )));
    }
    let f = two_factors(m, n)?;
    let names =
        (1..m).map(|i| (i, i)).chain((1..m).map(|i| (i, m - 1 + i))).chain((2 * m - 1..n).map(|j| (1, j)));
    certify(&f, from_names(&f, names)?, &format!("K_{m} ⊗ K_{n} (large n)"))
}

/// Size `m + n − k − 2` resolving set for `3 ≤ m ≤ n ≤ 2m − 2`, with
/// `k = ⌊(m+n−2)/3⌋`:
///
/// * `V_1 = {(u_i, v_i) : i ≤ k}`
/// * `V_2 = {(u_{k+i}, v_{wrap(i)}) : i ≤ m − k − 1}`
/// * `V_3 = {(u_{wrap(m−k−1+i)}, v_{k+i}) : i ≤ n − k − 1}`
///
/// where `wrap(j) = ((j − 1) mod k) + 1` folds an index into `1..=k`.
pub fn construct_balanced(m: usize, n: usize) -> Result<OrderedVertexSet> {
    if m < 3 || n < m || n > 2 * m - 2 {
        return Err(Error::Precondition(format!(
            "balanced construction needs 3 <= m <= n <= 2m - 2, got ({m}, {n})"
        )));
    }
    let k = (m + n - 2) / 3;
    let wrap = |j: usize| (j - 1) % k + 1;
    let f = two_factors(m, n)?;
    let names = (1..=k)
        .map(|i| (i, i))
        .chain((1..m - k).map(|i| (k + i, wrap(i))))
        .chain((1..n - k).map(|i| (wrap(m - k - 1 + i), k + i)));
    certify(&f, from_names(&f, names)?, &format!("K_{m} ⊗ K_{n} (balanced, k = {k})"))
}

/// `{(u_1, v_j) : j ≤ n − 1}` in `K_2 ⊗ K_n`.
pub fn construct_m2(n: usize) -> Result<OrderedVertexSet> {
    if n < 3 {
        return Err(Error::Precondition(format!("K_2 ⊗ K_n construction needs n >= 3, got {n}")));
    }
    let f = two_factors(2, n)?;
    certify(&f, from_names(&f, (1..n).map(|j| (1, j)))?, &format!("K_2 ⊗ K_{n}"))
}

/// Minimum resolving set of `K_m ⊗ K_n` by case. For `m > n` the set for
/// `K_n ⊗ K_m` is built and its coordinates swapped.
pub fn construct_resolving(m: usize, n: usize) -> Result<OrderedVertexSet> {
    let (lo, hi) = normalize(m, n)?;
    let w = match formula_case(lo, hi)? {
        FormulaCase::Disconnected => return Err(Error::Disconnected),
        FormulaCase::M2 => construct_m2(hi)?,
        FormulaCase::LargeN => construct_large_n(lo, hi)?,
        FormulaCase::Balanced { .. } => construct_balanced(lo, hi)?,
    };
    if m <= n {
        return Ok(w);
    }
    let from = two_factors(lo, hi)?;
    let to = two_factors(m, n)?;
    let swapped = w
        .iter()
        .map(|v| {
            let c = from.decode(v);
            to.flat_index(&[c[1], c[0]])
        })
        .collect::<Result<Vec<_>>>()?;
    OrderedVertexSet::new(swapped)
}

fn require_at_least_three(f: &CliqueFactors) -> Result<()> {
    if f.all_at_least(3) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "all clique factors must have at least 3 vertices, got {:?}",
            f.sizes()
        )))
    }
}

fn require_three_factors(f: &CliqueFactors) -> Result<()> {
    require_at_least_three(f)?;
    if f.len() >= 3 {
        Ok(())
    } else {
        Err(Error::Precondition(format!("need at least 3 factors, got {}", f.len())))
    }
}

/// `max_i m_i − 1`: a resolving set misses at most one vertex of each
/// factor in its projection.
pub fn lower_bound_corollary(f: &CliqueFactors) -> Result<usize> {
    require_at_least_three(f)?;
    Ok(f.sizes().iter().max().unwrap() - 1)
}

/// How sub-product dimensions beyond two factors are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubproductMode {
    /// Recursive lower bounds; cheap.
    #[default]
    Recursive,
    /// Exact solver on each sub-product.
    Exact,
}

/// Maximum over the `t` drop-one-factor sub-products of their dimension
/// (or a certified lower bound on it, in `Recursive` mode).
pub fn lower_bound_subproduct(f: &CliqueFactors, mode: SubproductMode) -> Result<usize> {
    require_three_factors(f)?;
    let mut best = 0;
    for i in 0..f.len() {
        let sub = f.without(i)?;
        let value = if sub.len() == 2 {
            dim_formula(sub.sizes()[0], sub.sizes()[1])?.dim().expect("factors >= 3 are connected")
        } else {
            match mode {
                SubproductMode::Recursive => {
                    lower_bound_corollary(&sub)?.max(lower_bound_subproduct(&sub, mode)?)
                }
                SubproductMode::Exact => {
                    let d = DistanceMatrix::of_clique_product(&sub);
                    exact_metric_dimension(&d, &SolverOptions::for_clique_product(&sub))?
                        .dim()
                        .expect("factors >= 3 are connected")
                }
            }
        };
        best = best.max(value);
    }
    Ok(best)
}

/// Resolving set for a product of `t ≥ 2` cliques of size ≥ 3: the
/// two-factor construction for `t = 2`, the triple-copy construction above.
fn resolving_for(f: &CliqueFactors) -> Result<OrderedVertexSet> {
    if f.len() == 2 {
        construct_resolving(f.sizes()[0], f.sizes()[1])
    } else {
        upper_bound_construct_t(f)
    }
}

/// Factors dropped by [`upper_bound_construct_t`]: the smallest and the
/// largest, ties to the lower index.
fn dropped_pair(f: &CliqueFactors) -> (usize, usize) {
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by_key(|&i| (f.sizes()[i], i));
    (order[0], order[order.len() - 1])
}

/// Takes a resolving set `R` of the product without factor `i` and returns
/// `{0, 1, 2} × R`, with the new coordinate inserted at position `i`.
fn triple_lift(f: &CliqueFactors, i: usize, sub: &CliqueFactors, r: &OrderedVertexSet) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(3 * r.len());
    for a in 0..3 {
        for w in r.iter() {
            let mut c = sub.decode(w);
            c.insert(i, a);
            out.push(f.flat_index(&c)?);
        }
    }
    Ok(out)
}

/// `W'_1 ∪ W'_t` for `t ≥ 3` factors of size ≥ 3: three fixed vertices of
/// the dropped first factor crossed with a resolving set of the remaining
/// product, and likewise for the dropped last factor. "First" and "last"
/// are the smallest and largest factor.
pub fn upper_bound_construct_t(f: &CliqueFactors) -> Result<OrderedVertexSet> {
    require_three_factors(f)?;
    let (first, last) = dropped_pair(f);
    let mut ids = Vec::new();
    for i in [first, last] {
        let sub = f.without(i)?;
        ids.extend(triple_lift(f, i, &sub, &resolving_for(&sub)?)?);
    }
    let mut seen = std::collections::HashSet::new();
    ids.retain(|&v| seen.insert(v));
    certify(f, OrderedVertexSet::new(ids)?, &format!("{f} (triple construction)"))
}

/// `3 · min_{i ≠ j} (dim(G_ī) + dim(G_j̄))`, where `G_ī` drops factor `i`.
/// Sub-product dimensions come from the closed form for two factors and
/// from construction sizes (upper bounds) beyond that.
pub fn upper_bound_value(f: &CliqueFactors) -> Result<usize> {
    require_three_factors(f)?;
    let dims = (0..f.len())
        .map(|i| {
            let sub = f.without(i)?;
            if sub.len() == 2 {
                Ok(dim_formula(sub.sizes()[0], sub.sizes()[1])?.dim().unwrap())
            } else {
                Ok(resolving_for(&sub)?.len())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = dims;
    sorted.sort_unstable();
    Ok(3 * (sorted[0] + sorted[1]))
}

/// `⌈2(m+n−2)/3⌉` for `3 ≤ m ≤ n ≤ 2m − 2`.
pub fn lower_bound_two_cliques(m: usize, n: usize) -> Result<usize> {
    if m < 3 || n < m || n > 2 * m - 2 {
        return Err(Error::Precondition(format!(
            "two-clique lower bound needs 3 <= m <= n <= 2m - 2, got ({m}, {n})"
        )));
    }
    Ok(ceil_two_thirds(m + n - 2))
}
