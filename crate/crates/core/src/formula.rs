//! Closed-form values: `ex(n, P_k)`, the split formula for `ex(n, P_k^p)`,
//! the Erdős–Gallai bound, the connected-path bound and the linear-order
//! lower bound. All arithmetic is exact.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::constructions::{choose2, h_value, s_parameter, turan_edge_count, SParameter};
use crate::{Error, Result};

/// `f(n, k) = ex(n, P_k) = t·C(k-1, 2) + C(r, 2)` where `n = (k-1)t + r`.
pub fn path_turan_value(n: usize, k: usize) -> usize {
    assert!(k >= 2, "path Turán value needs k >= 2");
    let t = n / (k - 1);
    let r = n % (k - 1);
    t * choose2(k - 1) + choose2(r)
}

/// One row of the split sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitRecord {
    pub n0: usize,
    pub n1: usize,
    /// `f(n0, s)`
    pub path_part: usize,
    /// `n0 · n1`
    pub cross: usize,
    /// `t(n1, p - 1)`
    pub turan_part: usize,
    pub total: usize,
    /// `f(n0, s) + n0 · t(n1, p)`, the objective in its literal printed
    /// form, kept for comparison.
    pub printed_objective: usize,
}

/// How the value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Maximum over the split `n0` of `f(n0,s) + n0·n1 + t(n1,p-1)`.
    Split,
    /// `p = 1`: the value is `f(n, k)`.
    Path,
    /// `k <= p`: `P_k^p = K_k` and the value is `t(n, k-1)`.
    Clique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranEvaluation {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    pub value: usize,
    /// Every `n0` attaining the maximum, ascending. Empty outside the split
    /// regime.
    pub argmax_splits: Vec<usize>,
    /// One record per `n0 = 0..=n`. Empty outside the split regime.
    pub breakdown: Vec<SplitRecord>,
    pub s_used: Option<SParameter>,
    pub regime: Regime,
}

/// Evaluates the split formula for `ex(n, P_k^p)`.
pub fn power_path_turan_value(n: usize, k: usize, p: usize) -> Result<TuranEvaluation> {
    if p == 0 || k < 2 {
        return Err(Error::Parameter(format!("needs p >= 1 and k >= 2; got k={k}, p={p}")));
    }
    let base = TuranEvaluation {
        n,
        k,
        p,
        value: 0,
        argmax_splits: Vec::new(),
        breakdown: Vec::new(),
        s_used: None,
        regime: Regime::Path,
    };
    if p == 1 {
        return Ok(TuranEvaluation { value: path_turan_value(n, k), s_used: Some(s_parameter(k, 1)), ..base });
    }
    if k <= p {
        return Ok(TuranEvaluation { value: turan_edge_count(n, k - 1), regime: Regime::Clique, ..base });
    }
    let sp = s_parameter(k, p);
    let breakdown: Vec<SplitRecord> = (0..=n)
        .map(|n0| {
            let n1 = n - n0;
            let path_part = path_turan_value(n0, sp.s);
            let cross = n0 * n1;
            let turan_part = turan_edge_count(n1, p - 1);
            SplitRecord {
                n0,
                n1,
                path_part,
                cross,
                turan_part,
                total: path_part + cross + turan_part,
                printed_objective: path_part + n0 * turan_edge_count(n1, p),
            }
        })
        .collect();
    let value = breakdown.iter().map(|r| r.total).max().expect("n0 = 0 always present");
    let argmax_splits = breakdown.iter().filter(|r| r.total == value).map(|r| r.n0).collect();
    Ok(TuranEvaluation { value, argmax_splits, breakdown, s_used: Some(sp), regime: Regime::Split, ..base })
}

/// `(k-2)·n/2`, unreduced by truncation.
pub fn erdos_gallai_bound(n: usize, k: usize) -> Ratio<i64> {
    assert!(k >= 2, "Erdős–Gallai bound needs k >= 2");
    Ratio::new((k as i64 - 2) * n as i64, 2)
}

/// `max{h(n, k-1, 1), h(n, k-1, t-1)}` with `t = ⌊k/2⌋`; terms whose block
/// sizes are invalid are skipped.
pub fn connected_path_bound(n: usize, k: usize) -> Result<usize> {
    if k < 3 || n + 1 < k {
        return Err(Error::Parameter(format!("connected path bound needs n >= k - 1 >= 2; got n={n}, k={k}")));
    }
    let t = k / 2;
    [1, t.saturating_sub(1)]
        .into_iter()
        .filter_map(|a| h_value(n, k - 1, a).ok())
        .max()
        .ok_or_else(|| Error::Parameter(format!("no valid H(n, k-1, a) term for n={n}, k={k}")))
}

/// `t(n, p) + (s-2)·n/(2p)`.
pub fn asymptotic_lower_bound(n: usize, k: usize, p: usize) -> Result<Ratio<i64>> {
    if p < 2 {
        return Err(Error::Parameter(format!("asymptotic lower bound needs p >= 2, got {p}")));
    }
    let s = s_parameter(k, p).s as i64;
    Ok(Ratio::from_integer(turan_edge_count(n, p) as i64) + Ratio::new((s - 2) * n as i64, 2 * p as i64))
}
