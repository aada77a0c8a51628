//! Generators for the named graph families: Turán graphs, the three-block
//! graphs `H(n, k, a)`, the extremal graphs for paths, the candidate
//! extremal graphs for path powers, lemma witness configurations and the
//! small-order counterexample.
//!
//! Every generator returns the graph together with named vertex roles and
//! the integer parameters it was built from.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Algebra, Graph};
use crate::{canon, formula, Error, Result};

/// A graph with named vertex roles. The role sets are disjoint and cover
/// every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledConstruction {
    pub family: &'static str,
    pub graph: Graph,
    pub roles: Vec<(String, Vec<usize>)>,
    pub parameters: Vec<(&'static str, usize)>,
}

impl LabeledConstruction {
    /// Empty roles are dropped; the rest must partition the vertices.
    pub fn new(
        family: &'static str,
        graph: Graph,
        roles: Vec<(String, Vec<usize>)>,
        parameters: Vec<(&'static str, usize)>,
    ) -> Self {
        let roles: Vec<_> = roles.into_iter().filter(|(_, vs)| !vs.is_empty()).collect();
        debug_assert_eq!(roles.iter().map(|(_, vs)| vs.len()).sum::<usize>(), graph.order());
        Self { family, graph, roles, parameters }
    }

    pub fn role(&self, name: &str) -> Option<&[usize]> {
        self.roles.iter().find(|(r, _)| r == name).map(|(_, vs)| vs.as_slice())
    }

    pub fn parameter(&self, name: &str) -> Option<usize> {
        self.parameters.iter().find(|(p, _)| *p == name).map(|&(_, v)| v)
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// `s = 2⌊k/(p+1)⌋ + j` with `j = 1` iff `k ≡ p (mod p+1)`, and
/// `t = ⌊k/(p+1)⌋`. `P_s` is the path whose placement inside one class of
/// a large Turán graph creates `P_k^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SParameter {
    pub s: usize,
    pub j: usize,
    pub t: usize,
}

pub fn s_parameter(k: usize, p: usize) -> SParameter {
    let t = k / (p + 1);
    let j = usize::from(k % (p + 1) == p);
    SParameter { s: 2 * t + j, j, t }
}

#[inline]
pub(crate) fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn turan_part_sizes(n: usize, p: usize) -> Vec<usize> {
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}

/// Number of edges of the Turán graph `T(n, p)`.
pub fn turan_edge_count(n: usize, p: usize) -> usize {
    assert!(p >= 1, "Turán graph needs at least one class");
    choose2(n) - turan_part_sizes(n, p).into_iter().map(choose2).sum::<usize>()
}

/// Complete `p`-partite graph on `n` vertices with class sizes differing by
/// at most one; larger classes come first.
pub fn turan_graph(n: usize, p: usize) -> Result<LabeledConstruction> {
    turan_graph_in(&Algebra::default(), n, p)
}

pub fn turan_graph_in(alg: &Algebra, n: usize, p: usize) -> Result<LabeledConstruction> {
    if p == 0 {
        return Err(Error::Parameter("Turán graph needs p >= 1".into()));
    }
    alg.check(n)?;
    let sizes = turan_part_sizes(n, p);
    let nonzero: Vec<usize> = sizes.iter().copied().filter(|&s| s > 0).collect();
    let graph = if nonzero.is_empty() { Graph::empty(0) } else { alg.complete_multipartite(&nonzero)?.0 };
    Ok(LabeledConstruction::new("turan", graph, class_roles(&sizes, 0), vec![("n", n), ("p", p)]))
}

fn class_roles(sizes: &[usize], offset: usize) -> Vec<(String, Vec<usize>)> {
    let mut next = offset;
    sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let vs: Vec<usize> = (next..next + s).collect();
            next += s;
            (format!("class-{}", i + 1), vs)
        })
        .collect()
}

fn check_h(n: usize, k: usize, a: usize) -> Result<()> {
    if a == 0 || k < 2 * a || n + a < k {
        return Err(Error::Parameter(format!(
            "H(n,k,a) needs a >= 1, k >= 2a and n >= k - a; got n={n}, k={k}, a={a}"
        )));
    }
    Ok(())
}

/// `h(n,k,a) = C(k-a, 2) + a(n-k+a)`.
pub fn h_value(n: usize, k: usize, a: usize) -> Result<usize> {
    check_h(n, k, a)?;
    Ok(choose2(k - a) + a * (n + a - k))
}

/// `H(n,k,a)`: blocks `A` (`a` vertices), `B` (`n-k+a`), `C` (`k-2a`), with
/// every `A`–`B` pair and every pair inside `A ∪ C` joined.
pub fn h_graph(n: usize, k: usize, a: usize) -> Result<LabeledConstruction> {
    check_h(n, k, a)?;
    Algebra::default().check(n)?;
    let b = n + a - k;
    let c = k - 2 * a;
    let av: Vec<usize> = (0..a).collect();
    let bv: Vec<usize> = (a..a + b).collect();
    let cv: Vec<usize> = (a + b..n).collect();
    let mut g = Graph::empty(n);
    for &x in &av {
        for &y in &bv {
            g.add_edge(x, y);
        }
    }
    let ac: Vec<usize> = av.iter().chain(&cv).copied().collect();
    for (i, &x) in ac.iter().enumerate() {
        for &y in &ac[i + 1..] {
            g.add_edge(x, y);
        }
    }
    debug_assert_eq!(c, cv.len());
    Ok(LabeledConstruction::new(
        "h",
        g,
        vec![("A".to_string(), av), ("B".to_string(), bv), ("C".to_string(), cv)],
        vec![("n", n), ("k", k), ("a", a)],
    ))
}

fn disjoint_cliques(sizes: &[usize]) -> (Graph, Vec<(String, Vec<usize>)>) {
    let n = sizes.iter().sum();
    let mut g = Graph::empty(n);
    let mut roles = Vec::new();
    let mut next = 0;
    for &s in sizes {
        for u in next..next + s {
            for v in u + 1..next + s {
                g.add_edge(u, v);
            }
        }
        roles.push((format!("clique-{}", roles.len() + 1), (next..next + s).collect()));
        next += s;
    }
    (g, roles)
}

/// The extremal graphs for `P_k` on `n` vertices, with `n = (k-1)t + r`:
/// `t K_{k-1} ∪ K_r` first, then (even `k`, `r ∈ {k/2, (k-2)/2}`) the
/// graphs `(t-s-1) K_{k-1} ∪ (K_{(k-2)/2} ⊗ empty(k/2 + s(k-1) + r))` for
/// `s = 0, …, t-1`. Isomorphic duplicates are dropped.
///
/// `k = 2` gives the edgeless graph and `n < k - 1` gives `K_n`.
pub fn path_extremal_graphs(n: usize, k: usize) -> Result<Vec<LabeledConstruction>> {
    if k < 2 {
        return Err(Error::Parameter(format!("path extremal graphs need k >= 2, got {k}")));
    }
    Algebra::default().check(n)?;
    if k == 2 {
        let g = Graph::empty(n);
        let roles = vec![("independent".to_string(), (0..n).collect())];
        return Ok(vec![LabeledConstruction::new("path-extremal", g, roles, vec![("n", n), ("k", k), ("variant", 0)])]);
    }
    let t = n / (k - 1);
    let r = n % (k - 1);
    let mut sizes = vec![k - 1; t];
    sizes.push(r);
    let (g, mut roles) = disjoint_cliques(&sizes);
    if r == 0 {
        roles.pop();
    } else if let Some(last) = roles.last_mut() {
        last.0 = "remainder".into();
    }
    let mut out = vec![LabeledConstruction::new("path-extremal", g, roles, vec![("n", n), ("k", k), ("variant", 0)])];
    if k.is_multiple_of(2) && (r == k / 2 || r == (k - 2) / 2) {
        let hub = (k - 2) / 2;
        for s in 0..t {
            let leaves = k / 2 + s * (k - 1) + r;
            let (cliques, mut roles) = disjoint_cliques(&vec![k - 1; t - s - 1]);
            let (star, _) = disjoint_cliques(&[hub]);
            let joined = Algebra::default().join(&star, &Graph::empty(leaves))?;
            let g = Algebra::default().disjoint_union(&cliques, &joined)?;
            if g.order() != n {
                return Err(Error::Parameter(format!("second family total {} differs from n = {n}", g.order())));
            }
            let base = cliques.order();
            roles.push(("hub".into(), (base..base + hub).collect()));
            roles.push(("leaves".into(), (base + hub..n).collect()));
            let c = LabeledConstruction::new(
                "path-extremal",
                g,
                roles,
                vec![("n", n), ("k", k), ("variant", out.len()), ("s", s)],
            );
            push_unique(&mut out, c)?;
        }
    }
    Ok(out)
}

/// Appends `c` unless an isomorphic graph is already listed.
fn push_unique(list: &mut Vec<LabeledConstruction>, c: LabeledConstruction) -> Result<bool> {
    for other in list.iter() {
        if canon::are_isomorphic(&other.graph, &c.graph)? {
            return Ok(false);
        }
    }
    list.push(c);
    Ok(true)
}

fn require_power_params(k: usize, p: usize) -> Result<SParameter> {
    if p < 2 {
        return Err(Error::Parameter(format!("path-power constructions need p >= 2, got {p}")));
    }
    if k <= p {
        return Err(Error::Parameter(format!(
            "P_{k}^{p} is the complete graph K_{k}; split constructions need k >= p + 1"
        )));
    }
    Ok(s_parameter(k, p))
}

/// `G0 ⊗ T(n - n0, p - 1)` where `G0` is the `variant`-th extremal graph
/// for `P_s` on `n0` vertices.
pub fn power_extremal_candidate(
    n: usize,
    k: usize,
    p: usize,
    n0: usize,
    variant: usize,
) -> Result<LabeledConstruction> {
    let sp = require_power_params(k, p)?;
    if n0 > n {
        return Err(Error::Parameter(format!("split n0 = {n0} exceeds n = {n}")));
    }
    Algebra::default().check(n)?;
    let mut g0s = path_extremal_graphs(n0, sp.s)?;
    if variant >= g0s.len() {
        return Err(Error::Parameter(format!(
            "variant {variant} out of range: {} extremal graph(s) for P_{} on {n0} vertices",
            g0s.len(),
            sp.s
        )));
    }
    let g0 = g0s.swap_remove(variant);
    let n1 = n - n0;
    let turan = turan_graph(n1, p - 1)?;
    let graph = Algebra::default().join(&g0.graph, &turan.graph)?;
    let sizes: Vec<usize> = turan_part_sizes(n1, p - 1);
    let mut roles = vec![("G0".to_string(), (0..n0).collect())];
    roles.extend(class_roles(&sizes, n0));
    Ok(LabeledConstruction::new(
        "power-extremal",
        graph,
        roles,
        vec![("n", n), ("k", k), ("p", p), ("n0", n0), ("variant", variant), ("s", sp.s)],
    ))
}

/// Every candidate construction attaining the maximum edge count over the
/// split `n0` and the variant, pairwise non-isomorphic.
///
/// `p = 1` returns the path extremal graphs and `k <= p` (where `P_k^p` is
/// `K_k`) returns the Turán graph `T(n, k-1)`.
pub fn power_extremal_family(n: usize, k: usize, p: usize) -> Result<Vec<LabeledConstruction>> {
    if p == 0 || k < 2 {
        return Err(Error::Parameter(format!("power extremal family needs p >= 1 and k >= 2; got k={k}, p={p}")));
    }
    if p == 1 {
        return path_extremal_graphs(n, k);
    }
    if k <= p {
        return Ok(vec![turan_graph(n, k - 1)?]);
    }
    let eval = formula::power_path_turan_value(n, k, p)?;
    let mut out: Vec<LabeledConstruction> = Vec::new();
    for &n0 in &eval.argmax_splits {
        let variants = path_extremal_graphs(n0, eval.s_used.expect("split regime").s)?.len();
        for variant in 0..variants {
            let c = power_extremal_candidate(n, k, p, n0, variant)?;
            debug_assert_eq!(c.edge_count(), eval.value);
            push_unique(&mut out, c)?;
        }
    }
    Ok(out)
}

/// Join of `p` classes of `2ℓ` vertices, `ℓ = ⌈k/(p+1)⌉`, where the first
/// two classes carry perfect matchings and the rest are independent.
pub fn lemma31_witness(k: usize, p: usize) -> Result<LabeledConstruction> {
    if p < 2 || k == 0 {
        return Err(Error::Parameter(format!("matching witness needs p >= 2 and k >= 1; got k={k}, p={p}")));
    }
    let ell = k.div_ceil(p + 1);
    let width = 2 * ell;
    let (mut g, _) = Algebra::default().complete_multipartite(&vec![width; p])?;
    for class in 0..2 {
        for i in 0..ell {
            let base = class * width + 2 * i;
            g.add_edge(base, base + 1);
        }
    }
    Ok(LabeledConstruction::new("lemma31", g, class_roles(&vec![width; p], 0), vec![("k", k), ("p", p), ("ell", ell)]))
}

/// Configurations placed inside a large complete `p`-partite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma32Case {
    /// `P_{s-1}` in class 1 and one edge in class 2.
    A,
    /// Even `s`: `t-1` extra vertices joined to everything, one edge in class 1.
    B1,
    /// Odd `s`: `t-1` extra vertices joined to everything, two disjoint
    /// edges in class 1 (a `P_3` when `t = 1`).
    B2,
}

impl core::str::FromStr for Lemma32Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Self::A),
            "b1" | "B1" => Ok(Self::B1),
            "b2" | "B2" => Ok(Self::B2),
            other => Err(Error::Parameter(format!("unknown case label {other:?}; expected a, b1 or b2"))),
        }
    }
}

/// Cases that apply to `(k, p)`: always `A`, plus `B1` or `B2` by the
/// parity of `s`.
pub fn lemma32_cases(k: usize, p: usize) -> Vec<Lemma32Case> {
    let s = s_parameter(k, p).s;
    vec![Lemma32Case::A, if s.is_multiple_of(2) { Lemma32Case::B1 } else { Lemma32Case::B2 }]
}

/// Witness configurations with every class of `k + 4` vertices.
pub fn lemma32_witness(k: usize, p: usize, case: Lemma32Case) -> Result<LabeledConstruction> {
    let sp = require_power_params(k, p)?;
    let width = k + 4;
    match case {
        Lemma32Case::B1 if sp.s % 2 == 1 => {
            return Err(Error::Parameter(format!("case b1 needs even s; s = {} for k={k}, p={p}", sp.s)))
        }
        Lemma32Case::B2 if sp.s % 2 == 0 => {
            return Err(Error::Parameter(format!("case b2 needs odd s; s = {} for k={k}, p={p}", sp.s)))
        }
        _ => {}
    }
    let extra = match case {
        Lemma32Case::A => 0,
        _ => sp.t - 1,
    };
    let classes = p * width;
    let (base, _) = Algebra::default().complete_multipartite(&vec![width; p])?;
    let mut g = base.embedded_in(classes + extra);
    for y in classes..classes + extra {
        for v in 0..classes {
            g.add_edge(y, v);
        }
    }
    match case {
        Lemma32Case::A => {
            for i in 1..sp.s - 1 {
                g.add_edge(i - 1, i);
            }
            g.add_edge(width, width + 1);
        }
        Lemma32Case::B1 => g.add_edge(0, 1),
        Lemma32Case::B2 if sp.t >= 2 => {
            g.add_edge(0, 1);
            g.add_edge(2, 3);
        }
        Lemma32Case::B2 => {
            g.add_edge(0, 1);
            g.add_edge(1, 2);
        }
    }
    let mut roles = class_roles(&vec![width; p], 0);
    roles.push(("y".into(), (classes..classes + extra).collect()));
    let case_id = match case {
        Lemma32Case::A => 0,
        Lemma32Case::B1 => 1,
        Lemma32Case::B2 => 2,
    };
    Ok(LabeledConstruction::new(
        "lemma32",
        g,
        roles,
        vec![("k", k), ("p", p), ("s", sp.s), ("t", sp.t), ("case", case_id)],
    ))
}

/// `K_{k-1}` plus one vertex adjacent to exactly `p - 1` clique vertices.
pub fn section4_graph(k: usize, p: usize) -> Result<LabeledConstruction> {
    if p < 2 || k < p + 1 {
        return Err(Error::Parameter(format!("needs k >= p + 1 >= 3; got k={k}, p={p}")));
    }
    Algebra::default().check(k)?;
    let mut g = Graph::complete(k - 1).embedded_in(k);
    for v in 0..p - 1 {
        g.add_edge(v, k - 1);
    }
    Ok(LabeledConstruction::new(
        "section4",
        g,
        vec![("clique".into(), (0..k - 1).collect()), ("new".into(), vec![k - 1])],
        vec![("k", k), ("p", p)],
    ))
}
