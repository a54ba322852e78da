//! JSON and CSV shapes printed by the commands.

use serde::Serialize;

use tensordim::constructions::FormulaCase;
use tensordim::{CliqueFactors, DimResult, Error, OrderedVertexSet};

/// Names vertices by product coordinates when the input is a clique
/// product, by flat id otherwise.
pub struct Namer {
    factors: Option<CliqueFactors>,
}

impl Namer {
    pub fn new(factors: Option<CliqueFactors>) -> Self {
        Namer { factors }
    }

    pub fn coords(&self, v: usize) -> tensordim::Result<Vec<usize>> {
        match &self.factors {
            Some(f) => Ok(f.coords_of(v)?.0),
            None => Ok(vec![v]),
        }
    }

    /// `(0,1)` for product vertices, the bare id otherwise.
    pub fn tuple_text(&self, v: usize) -> String {
        match &self.factors {
            Some(f) => f.coords_of(v).map(|c| c.to_string()).unwrap_or_else(|_| v.to_string()),
            None => v.to_string(),
        }
    }

    /// One-based labels: `(u_1,v_2)` for two factors, `(1,2,1)` beyond.
    pub fn label(&self, v: usize) -> Option<String> {
        let f = self.factors.as_ref()?;
        let c = f.coords_of(v).ok()?.0;
        Some(if c.len() == 2 {
            format!("(u_{},v_{})", c[0] + 1, c[1] + 1)
        } else {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            format!("({})", parts.join(","))
        })
    }

    fn describe(&self, w: &OrderedVertexSet) -> tensordim::Result<SetParts> {
        Ok(SetParts {
            resolving_set: w.iter().map(|v| self.coords(v)).collect::<tensordim::Result<_>>()?,
            flat_ids: w.as_slice().to_vec(),
            labels: self.factors.as_ref().map(|_| w.iter().filter_map(|v| self.label(v)).collect()),
        })
    }
}

#[derive(Serialize)]
struct SetParts {
    resolving_set: Vec<Vec<usize>>,
    flat_ids: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct DimReport {
    n: usize,
    method: &'static str,
    dim: Option<usize>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    disconnected: bool,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    set: Option<SetParts>,
}

impl DimReport {
    pub fn new(n: usize, method: &'static str, result: &DimResult, namer: &Namer) -> tensordim::Result<Self> {
        Ok(DimReport {
            n,
            method,
            dim: result.dim(),
            disconnected: result.is_disconnected(),
            set: result.certificate().map(|w| namer.describe(w)).transpose()?,
        })
    }
}

pub fn case_name(case: FormulaCase) -> &'static str {
    match case {
        FormulaCase::Disconnected => "disconnected",
        FormulaCase::M2 => "m2",
        FormulaCase::LargeN => "large_n",
        FormulaCase::Balanced { .. } => "balanced",
    }
}

#[derive(Serialize)]
pub struct ConstructReport {
    factors: Vec<usize>,
    case: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<usize>,
    size: usize,
    verified: bool,
    #[serde(flatten)]
    set: SetParts,
}

impl ConstructReport {
    /// `w` has already been checked by the construction itself.
    pub fn new(
        f: &CliqueFactors,
        case: &'static str,
        k: Option<usize>,
        formula: Option<usize>,
        w: &OrderedVertexSet,
        namer: &Namer,
    ) -> tensordim::Result<Self> {
        Ok(ConstructReport {
            factors: f.sizes().to_vec(),
            case,
            k,
            formula,
            size: w.len(),
            verified: true,
            set: namer.describe(w)?,
        })
    }
}

/// A bound value, or a note on why there is none.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Bound {
    Value(usize),
    Text(&'static str),
}

impl Bound {
    /// Hypothesis failures become "not applicable"; other errors propagate.
    pub fn from_result(r: tensordim::Result<usize>) -> tensordim::Result<Bound> {
        match r {
            Ok(v) => Ok(Bound::Value(v)),
            Err(Error::Precondition(_)) => Ok(Bound::Text("not applicable")),
            Err(e) => Err(e),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub factors: Vec<usize>,
    pub vertices: usize,
    pub formula: Bound,
    pub corollary_lower: Bound,
    pub subproduct_lower: Bound,
    pub construction_upper: Bound,
    pub upper_bound_value: Bound,
    pub exact: Bound,
}

pub struct TableRow {
    m: usize,
    n: usize,
    formula: Option<usize>,
    construction_size: Option<usize>,
    verified: Option<bool>,
    exact: Option<Option<usize>>,
}

impl TableRow {
    pub const HEADER: &'static str = "m,n,formula,construction_size,verified,exact,agree";

    /// `formula == None` marks the disconnected case; `exact == None` means
    /// not computed and `Some(None)` means the solver found it disconnected.
    pub fn new(
        m: usize,
        n: usize,
        formula: Option<usize>,
        construction_size: Option<usize>,
        verified: Option<bool>,
        exact: Option<Option<usize>>,
    ) -> Self {
        TableRow { m, n, formula, construction_size, verified, exact }
    }

    pub fn agree(&self) -> bool {
        let construction_ok = match self.formula {
            None => self.construction_size.is_none(),
            Some(f) => self.verified == Some(true) && self.construction_size == Some(f),
        };
        let exact_ok = match self.exact {
            None => true,
            Some(e) => e == self.formula,
        };
        construction_ok && exact_ok
    }

    pub fn to_csv(&self) -> String {
        let num = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let formula = self.formula.map_or_else(|| "disconnected".to_string(), |v| v.to_string());
        let exact = match self.exact {
            None => String::new(),
            Some(None) => "disconnected".to_string(),
            Some(Some(v)) => v.to_string(),
        };
        let verified = self.verified.map(|b| b.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.m,
            self.n,
            formula,
            num(self.construction_size),
            verified,
            exact,
            self.agree()
        )
    }
}
