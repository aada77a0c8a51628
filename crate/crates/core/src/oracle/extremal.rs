use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::chromatic::chromatic_number;
use super::enumerate::{canonical_children, ENUMERATION_ORDER_CAP};
use crate::budget::{Budget, Unlimited};
use crate::canon::{self, CanonicalForm};
use crate::constructions::turan_graph;
use crate::containment::{contains_subgraph, AnchoredPattern};
use crate::{Error, Graph, Result};

/// `ex(n, pattern)` together with every extremal graph up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub pattern: Graph,
    pub value: usize,
    /// Canonical forms of all extremal graphs, sorted.
    pub witnesses: Vec<CanonicalForm>,
}

/// Best graphs found below one search root.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialExtremal {
    pub value: Option<usize>,
    pub witnesses: BTreeSet<CanonicalForm>,
}

impl PartialExtremal {
    fn offer(&mut self, edges: usize, form: CanonicalForm) {
        match self.value {
            Some(v) if v > edges => {}
            Some(v) if v == edges => {
                self.witnesses.insert(form);
            }
            _ => {
                self.value = Some(edges);
                self.witnesses = BTreeSet::from([form]);
            }
        }
    }

    pub fn merge(&mut self, other: PartialExtremal) {
        if let Some(v) = other.value {
            for w in other.witnesses {
                self.offer(v, w);
            }
        }
    }
}

/// Exhaustive search for `ex(n, pattern)`.
///
/// Pattern-free graphs are grown one vertex at a time by canonical
/// augmentation, where the canonical deletion removes a minimum-degree
/// vertex. Deleting a minimum-degree vertex keeps at least a `(m-2)/m`
/// share of the edges, so every `m`-vertex ancestor of an `n`-vertex graph
/// with `e` edges has at least `e·m(m-1)/(n(n-1))` edges. Branches below
/// that share of a verified lower bound are cut.
#[derive(Debug, Clone)]
pub struct ExtremalSearch {
    n: usize,
    pattern: AnchoredPattern,
    lower: usize,
}

fn clique_cover_graph(n: usize, size: usize) -> Graph {
    let mut g = Graph::empty(n);
    for start in (0..n).step_by(size.max(1)) {
        let end = (start + size).min(n);
        for u in start..end {
            for v in u + 1..end {
                g.add_edge(u, v);
            }
        }
    }
    g
}

impl ExtremalSearch {
    /// Sets up a search. Each hint graph must have order `n` and be
    /// pattern-free; the best of them raises the pruning bound.
    pub fn new(n: usize, pattern: &Graph, hints: &[Graph]) -> Result<Self> {
        if n > ENUMERATION_ORDER_CAP {
            return Err(Error::OrderCap { order: n, cap: ENUMERATION_ORDER_CAP });
        }
        if pattern.order() == 0 {
            return Err(Error::Parameter("every graph contains the empty pattern".into()));
        }
        if pattern.edge_count() == 0 && pattern.order() <= n {
            return Err(Error::Parameter(format!(
                "every graph on {n} vertices contains the edgeless pattern on {} vertices",
                pattern.order()
            )));
        }
        let mut candidates: Vec<Graph> = Vec::new();
        if pattern.order() > n {
            candidates.push(Graph::complete(n));
        } else {
            let chi = chromatic_number(pattern)?;
            candidates.push(turan_graph(n, chi - 1)?.graph);
            if pattern.is_connected() {
                candidates.push(clique_cover_graph(n, pattern.order() - 1));
            }
        }
        for h in hints {
            if h.order() != n {
                return Err(Error::Parameter(format!("hint graph has order {}, expected {n}", h.order())));
            }
            if contains_subgraph(h, pattern).is_some() {
                return Err(Error::Parameter("hint graph contains the pattern".into()));
            }
        }
        let lower = candidates
            .iter()
            .filter(|g| contains_subgraph(g, pattern).is_none())
            .chain(hints)
            .map(Graph::edge_count)
            .max()
            .unwrap_or(0);
        Ok(Self { n, pattern: AnchoredPattern::new(pattern)?, lower })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> &Graph {
        self.pattern.pattern()
    }

    /// Edge count of a verified pattern-free graph on `n` vertices.
    pub fn lower_bound(&self) -> usize {
        self.lower
    }

    /// Least edge count an `m`-vertex ancestor of a graph reaching the
    /// lower bound can have.
    fn threshold(&self, m: usize) -> usize {
        let n = self.n;
        if n < 2 || m < 2 {
            return 0;
        }
        (self.lower * m * (m - 1)).div_ceil(n * (n - 1))
    }

    fn children<B: Budget>(&self, g: &Graph, budget: &mut B) -> Result<Vec<Graph>> {
        let m = g.order() + 1;
        let need = self.threshold(m).saturating_sub(g.edge_count());
        let pattern = &self.pattern;
        canonical_children(g, need, budget, |child| Ok(pattern.find_through(child, m - 1, Unlimited)?.is_none()))
    }

    /// All surviving graphs of order `depth` (at most `n`), in a fixed order.
    pub fn frontier<B: Budget>(&self, depth: usize, mut budget: B) -> Result<Vec<Graph>> {
        let depth = depth.min(self.n);
        let mut level = vec![Graph::empty(0)];
        for _ in 0..depth {
            let mut next = Vec::new();
            for g in &level {
                next.extend(self.children(g, &mut budget)?);
            }
            level = next;
        }
        Ok(level)
    }

    /// Explores every descendant of `root` (a frontier graph).
    pub fn explore<B: Budget>(&self, root: &Graph, mut budget: B) -> Result<PartialExtremal> {
        let mut out = PartialExtremal::default();
        let mut stack = vec![root.clone()];
        while let Some(g) = stack.pop() {
            budget.charge(1)?;
            if g.order() == self.n {
                let e = g.edge_count();
                if e >= self.lower && out.value.is_none_or(|v| e >= v) {
                    out.offer(e, canon::canonical_form(&g)?);
                }
                continue;
            }
            let mut kids = self.children(&g, &mut budget)?;
            kids.reverse();
            stack.extend(kids);
        }
        Ok(out)
    }

    pub fn finish(&self, parts: impl IntoIterator<Item = PartialExtremal>) -> ExtremalResult {
        let mut all = PartialExtremal::default();
        for p in parts {
            all.merge(p);
        }
        let value = all.value.expect("the lower-bound graph survives the search");
        ExtremalResult {
            n: self.n,
            pattern: self.pattern().clone(),
            value,
            witnesses: all.witnesses.into_iter().collect(),
        }
    }

    pub fn run<B: Budget>(&self, mut budget: B) -> Result<ExtremalResult> {
        let part = self.explore(&Graph::empty(0), &mut budget)?;
        Ok(self.finish([part]))
    }
}

/// Exact `ex(n, pattern)` with all extremal graphs, single-threaded.
pub fn extremal_number(n: usize, pattern: &Graph) -> Result<ExtremalResult> {
    ExtremalSearch::new(n, pattern, &[])?.run(Unlimited)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::graph::{disjoint_union, join, path_power};
    use crate::oracle::enumerate_graphs;

    /// Maximum over every isomorphism class, no pruning.
    fn plain_max(n: usize, pattern: &Graph) -> (usize, BTreeSet<CanonicalForm>) {
        let mut best = 0;
        let mut wit = BTreeSet::new();
        for g in enumerate_graphs(n).unwrap() {
            if contains_subgraph(&g, pattern).is_some() {
                continue;
            }
            let e = g.edge_count();
            if e > best {
                best = e;
                wit.clear();
            }
            if e == best {
                wit.insert(canonical_form(&g).unwrap());
            }
        }
        (best, wit)
    }

    #[test]
    fn p4_on_five_vertices() {
        let r = extremal_number(5, &Graph::path(4)).unwrap();
        assert_eq!(r.value, 4);
        let k3k2 = canonical_form(&disjoint_union(&Graph::complete(3), &Graph::complete(2)).unwrap()).unwrap();
        let star = canonical_form(&join(&Graph::complete(1), &Graph::empty(4)).unwrap()).unwrap();
        let expect: BTreeSet<_> = [k3k2, star].into();
        assert_eq!(r.witnesses.into_iter().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn forbidding_an_edge() {
        for n in 1..8 {
            let r = extremal_number(n, &Graph::complete(2)).unwrap();
            assert_eq!(r.value, 0);
            assert_eq!(r.witnesses, vec![canonical_form(&Graph::empty(n)).unwrap()]);
        }
    }

    #[test]
    fn pruned_search_matches_plain_maximum() {
        let patterns = [
            Graph::path(4),
            Graph::complete(3),
            path_power(4, 2).unwrap(),
            path_power(5, 2).unwrap(),
            Graph::cycle(4),
            Graph::path(5),
        ];
        for n in 1..=7 {
            for pat in &patterns {
                let r = extremal_number(n, pat).unwrap();
                let (v, w) = plain_max(n, pat);
                assert_eq!(r.value, v, "n={n} {pat:?}");
                assert_eq!(r.witnesses.into_iter().collect::<BTreeSet<_>>(), w, "n={n} {pat:?}");
            }
        }
    }

    #[test]
    fn mantel_values() {
        for n in 1..=9 {
            let r = extremal_number(n, &Graph::complete(3)).unwrap();
            assert_eq!(r.value, n * n / 4);
            assert_eq!(r.witnesses.len(), 1);
        }
    }

    #[test]
    fn pattern_larger_than_host() {
        let r = extremal_number(4, &Graph::path(6)).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witnesses, vec![canonical_form(&Graph::complete(4)).unwrap()]);
    }

    #[test]
    fn frontier_split_matches_single_run() {
        let pat = path_power(5, 2).unwrap();
        let search = ExtremalSearch::new(8, &pat, &[]).unwrap();
        let whole = search.run(Unlimited).unwrap();
        let roots = search.frontier(5, Unlimited).unwrap();
        let parts: Vec<_> = roots.iter().map(|r| search.explore(r, Unlimited).unwrap()).collect();
        assert_eq!(search.finish(parts), whole);
    }

    #[test]
    fn hints_are_checked() {
        let pat = Graph::complete(3);
        assert!(ExtremalSearch::new(5, &pat, &[Graph::complete(5)]).is_err());
        assert!(ExtremalSearch::new(5, &pat, &[Graph::empty(4)]).is_err());
        let s = ExtremalSearch::new(6, &pat, &[Graph::cycle(6)]).unwrap();
        assert_eq!(s.lower_bound(), 9);
    }

    #[test]
    fn rejects_degenerate_patterns() {
        assert!(extremal_number(5, &Graph::empty(0)).is_err());
        assert!(extremal_number(5, &Graph::empty(3)).is_err());
        assert_eq!(extremal_number(11, &Graph::complete(3)).unwrap_err(), Error::OrderCap { order: 11, cap: 10 });
    }
}
