//! Verification suites. Each returns one record per check; a suite passes
//! when every check does.

use std::collections::BTreeSet;

use serde_json::json;

use pathpower_core::constructions::{
    lemma31_witness, lemma32_cases, lemma32_witness, path_extremal_graphs, power_extremal_family, s_parameter,
    section4_graph,
};
use pathpower_core::containment::contains_path_power_within;
use pathpower_core::formula::{path_turan_value, power_path_turan_value};
use pathpower_core::graph::path_power;
use pathpower_core::oracle::decomposition_family;
use pathpower_core::{are_isomorphic, canonical_form, graph6, Graph, Result};

use crate::budget::Deadline;
use crate::dto::Check;
use crate::parallel;
use crate::report::{Kind, ReportRecord};

/// The six `(k, p)` cases of the decomposition-family suite.
pub const DEFAULT_DECOMPOSITION_CASES: [(usize, usize); 6] = [(4, 2), (5, 2), (6, 2), (7, 2), (5, 3), (6, 3)];

fn record(
    suite: &str,
    check: String,
    passed: bool,
    params: &[(&str, usize)],
    detail: serde_json::Value,
    refs: Vec<String>,
) -> ReportRecord {
    let c = Check { suite: suite.to_owned(), check, passed, detail };
    ReportRecord::new(Kind::Verification, params, c, refs)
}

pub fn passed(records: &[ReportRecord]) -> bool {
    records.iter().all(|r| r.result.get("passed") == Some(&json!(true)))
}

fn pattern_for(k: usize, p: usize) -> Result<Graph> {
    if p == 1 {
        Ok(Graph::path(k))
    } else {
        path_power(k, p)
    }
}

/// Exhaustive `ex(n, P_k)` against the closed form and the listed extremal
/// graphs, for `4 <= n <= n_max`, `3 <= k <= k_max`.
pub fn path_extremal_suite(
    n_max: usize,
    k_max: usize,
    workers: usize,
    deadline: Deadline,
) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for n in 4..=n_max {
        for k in 3..=k_max {
            let oracle = parallel::extremal_number(n, &Graph::path(k), &[], workers, deadline)?;
            let expected = path_turan_value(n, k);
            let listed: BTreeSet<_> =
                path_extremal_graphs(n, k)?.iter().map(|c| canonical_form(&c.graph)).collect::<Result<_>>()?;
            let found: BTreeSet<_> = oracle.witnesses.iter().cloned().collect();
            let ok = oracle.value == expected && listed == found;
            out.push(record(
                "theorem21",
                format!("ex({n}, P_{k})"),
                ok,
                &[("n", n), ("k", k)],
                json!({"oracle": oracle.value, "formula": expected, "oracle_witnesses": found.len(), "listed": listed.len(), "witness_sets_equal": listed == found}),
                found.iter().map(|f| f.as_graph6().to_owned()).collect(),
            ));
        }
    }
    Ok(out)
}

/// Decomposition family of `P_k^p` is exactly `{P_s}`.
pub fn decomposition_suite(cases: &[(usize, usize)]) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for &(k, p) in cases {
        let s = s_parameter(k, p).s;
        let fam = decomposition_family(&path_power(k, p)?, k)?;
        let ok = fam.members.len() == 1 && are_isomorphic(&fam.members[0], &Graph::path(s))?;
        let members: Vec<String> = fam.members.iter().map(graph6::encode).collect();
        out.push(record(
            "prop25",
            format!("M(P_{k}^{p}) = {{P_{s}}}"),
            ok,
            &[("k", k), ("p", p), ("s", s)],
            json!({"members": members, "expected": graph6::encode(&Graph::path(s))}),
            members.clone(),
        ));
    }
    Ok(out)
}

fn witness_check(
    suite: &str,
    name: String,
    g: &Graph,
    k: usize,
    p: usize,
    params: &[(&str, usize)],
    deadline: Deadline,
) -> Result<ReportRecord> {
    let found = contains_path_power_within(g, k, p, deadline)?;
    Ok(record(
        suite,
        name,
        found.is_some(),
        params,
        json!({"order": g.order(), "edges": g.edge_count(), "contains": found.is_some(), "embedding": found.map(|e| e.mapping)}),
        vec![graph6::encode(g)],
    ))
}

/// Matching witnesses contain `P_k^p`, for `2 <= p <= p_max`, `2 <= k <= k_max`.
pub fn matching_witness_suite(k_max: usize, p_max: usize, deadline: Deadline) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for k in 2..=k_max {
            let w = lemma31_witness(k, p)?;
            out.push(witness_check(
                "lemma31",
                format!("lemma31({k},{p}) ⊇ P_{k}^{p}"),
                &w.graph,
                k,
                p,
                &[("k", k), ("p", p)],
                deadline,
            )?);
        }
    }
    Ok(out)
}

/// Every applicable case configuration contains `P_k^p`, for
/// `2 <= p <= p_max`, `p + 1 <= k <= k_max`.
pub fn case_witness_suite(k_max: usize, p_max: usize, deadline: Deadline) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for k in p + 1..=k_max {
            for case in lemma32_cases(k, p) {
                let w = lemma32_witness(k, p, case)?;
                let case_id = w.parameter("case").expect("case recorded");
                out.push(witness_check(
                    "lemma32",
                    format!("lemma32({k},{p},{case:?}) ⊇ P_{k}^{p}"),
                    &w.graph,
                    k,
                    p,
                    &[("k", k), ("p", p), ("case", case_id)],
                    deadline,
                )?);
            }
        }
    }
    Ok(out)
}

/// The clique-plus-pendant graph has `C(k-1,2) + p - 1` edges, avoids
/// `P_k^p`, and beats the split formula at `n = k`.
pub fn small_order_suite(k: usize, p: usize, deadline: Deadline) -> Result<Vec<ReportRecord>> {
    let g = section4_graph(k, p)?;
    let edges = g.edge_count();
    let expected_edges = (k - 1) * (k - 2) / 2 + p - 1;
    let free = contains_path_power_within(&g.graph, k, p, deadline)?.is_none();
    let formula = power_path_turan_value(k, k, p)?.value;
    let refs = vec![graph6::encode(&g.graph)];
    let params = [("k", k), ("p", p)];
    Ok(vec![
        record(
            "section4",
            "edge count".into(),
            edges == expected_edges,
            &params,
            json!({"edges": edges, "expected": expected_edges}),
            refs.clone(),
        ),
        record("section4", format!("P_{k}^{p}-free"), free, &params, json!({"free": free}), refs.clone()),
        record(
            "section4",
            "beats the formula at n = k".into(),
            edges > formula,
            &params,
            json!({"edges": edges, "formula": formula}),
            refs,
        ),
    ])
}

/// Exhaustive `ex(n, P_k^p)` is at least the formula value, for
/// `1 <= n <= n_max`, `2 <= k <= k_max`, `p_min <= p <= p_max`.
pub fn gap_table_suite(
    n_max: usize,
    k_max: usize,
    p_min: usize,
    p_max: usize,
    workers: usize,
    deadline: Deadline,
) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for p in p_min..=p_max {
        for k in 2..=k_max {
            let pattern = pattern_for(k, p)?;
            for n in 1..=n_max {
                let formula = power_path_turan_value(n, k, p)?.value;
                let oracle = parallel::extremal_number(n, &pattern, &[], workers, deadline)?;
                let gap = oracle.value as i64 - formula as i64;
                out.push(record(
                    "gap-table",
                    format!("ex({n}, P_{k}^{p}) >= formula"),
                    gap >= 0,
                    &[("n", n), ("k", k), ("p", p)],
                    json!({"oracle": oracle.value, "formula": formula, "gap": gap, "witnesses": oracle.witnesses.len()}),
                    oracle.witnesses.iter().map(|w| w.as_graph6().to_owned()).collect(),
                ));
            }
        }
    }
    Ok(out)
}

/// Every listed extremal candidate avoids `P_k^p` and has exactly the
/// formula's edge count.
pub fn construction_suite(
    n_max: usize,
    k_min: usize,
    k_max: usize,
    p_max: usize,
    deadline: Deadline,
) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for k in k_min..=k_max {
            for n in 0..=n_max {
                let value = power_path_turan_value(n, k, p)?.value;
                for (i, c) in power_extremal_family(n, k, p)?.iter().enumerate() {
                    let free = contains_path_power_within(&c.graph, k, p, deadline)?.is_none();
                    let edges = c.edge_count();
                    out.push(record(
                        "freeness",
                        format!("member {i} of the family for ({n},{k},{p})"),
                        free && edges == value,
                        &[("n", n), ("k", k), ("p", p), ("member", i)],
                        json!({"free": free, "edges": edges, "formula": value}),
                        vec![graph6::encode(&c.graph)],
                    ));
                }
            }
        }
    }
    Ok(out)
}
