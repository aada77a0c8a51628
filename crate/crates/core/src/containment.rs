//! Subgraph containment (not necessarily induced).
//!
//! Both searches restrict each host twin class (vertices with equal
//! neighbourhoods apart from each other) to its lowest unused member. Any
//! permutation inside a twin class is a host automorphism, so some embedding
//! respecting that order exists whenever any embedding does.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::{Budget, Unlimited};
use crate::canon;
use crate::graph::{clear_bit, full_set, path_power, popcount, set_bit, test_bit, Ones};
use crate::{Error, Graph, Result};

/// Injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.mapping.len() != pattern.order() || self.mapping.iter().any(|&x| x >= host.order()) {
            return false;
        }
        let distinct: BTreeSet<usize> = self.mapping.iter().copied().collect();
        distinct.len() == self.mapping.len()
            && pattern.edges().all(|(u, v)| host.has_edge(self.mapping[u], self.mapping[v]))
    }
}

const NONE: usize = usize::MAX;

/// `prev[v]` is the next lower vertex in `v`'s twin class, or `NONE`.
/// `skip` is kept out of every class.
fn twin_links(g: &Graph, skip: Option<usize>) -> Vec<usize> {
    let n = g.order();
    let mut prev = vec![NONE; n];
    let mut reps: Vec<(usize, usize)> = Vec::new(); // (representative, last member)
    let twins = |u: usize, w: usize| {
        g.row(u).iter().zip(g.row(w)).enumerate().all(|(i, (&a, &b))| {
            let mut a = a;
            let mut b = b;
            if i == w / 64 {
                a &= !(1 << (w % 64));
            }
            if i == u / 64 {
                b &= !(1 << (u % 64));
            }
            a == b
        })
    };
    for (v, pv) in prev.iter_mut().enumerate() {
        if Some(v) == skip {
            continue;
        }
        if let Some(slot) = reps.iter_mut().find(|(r, _)| twins(*r, v)) {
            *pv = slot.1;
            slot.1 = v;
        } else {
            reps.push((v, v));
        }
    }
    prev
}

struct Matcher<'a, B: Budget> {
    host: &'a Graph,
    order: Vec<usize>,
    /// For `order[i]`, its neighbours among `order[..i]`.
    back: Vec<Vec<usize>>,
    pdeg: Vec<usize>,
    hdeg: Vec<usize>,
    prev: Vec<usize>,
    map: Vec<usize>,
    used: Vec<u64>,
    budget: B,
}

impl<B: Budget> Matcher<'_, B> {
    fn rec(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let u = self.order[i];
        let mut cand = full_set(self.host.order());
        for &w in &self.back[i] {
            let row = self.host.row(self.map[w]);
            cand.iter_mut().zip(row).for_each(|(c, r)| *c &= r);
        }
        cand.iter_mut().zip(&self.used).for_each(|(c, r)| *c &= !r);
        for x in Ones::new(&cand).collect::<Vec<_>>() {
            if self.hdeg[x] < self.pdeg[u] {
                continue;
            }
            let pv = self.prev[x];
            if pv != NONE && !test_bit(&self.used, pv) {
                continue;
            }
            self.budget.charge(1)?;
            self.map[u] = x;
            set_bit(&mut self.used, x);
            if self.rec(i + 1)? {
                return Ok(true);
            }
            clear_bit(&mut self.used, x);
        }
        Ok(false)
    }
}

/// Pattern search order starting from `start`: most already-ordered
/// neighbours first, then highest degree, then lowest id.
fn search_order(pattern: &Graph, start: usize) -> Vec<usize> {
    let n = pattern.order();
    let deg = pattern.degrees();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut next = start;
    loop {
        placed[next] = true;
        order.push(next);
        for w in pattern.neighbors(next) {
            links[w] += 1;
        }
        if order.len() == n {
            break;
        }
        next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| (links[a], deg[a]).cmp(&(links[b], deg[b])).then(b.cmp(&a)))
            .expect("unplaced vertex remains");
    }
    order
}

fn run<B: Budget>(
    host: &Graph,
    pattern: &Graph,
    order: Vec<usize>,
    anchor: Option<usize>,
    budget: B,
) -> Result<Option<Embedding>> {
    let pos = {
        let mut pos = vec![0; pattern.order()];
        for (i, &u) in order.iter().enumerate() {
            pos[u] = i;
        }
        pos
    };
    let back = order.iter().enumerate().map(|(i, &u)| pattern.neighbors(u).filter(|&w| pos[w] < i).collect()).collect();
    let mut m = Matcher {
        host,
        back,
        pdeg: pattern.degrees(),
        hdeg: host.degrees(),
        prev: twin_links(host, anchor),
        map: vec![NONE; pattern.order()],
        used: vec![0; host.words()],
        order,
        budget,
    };
    let found = match anchor {
        None => m.rec(0)?,
        Some(a) => {
            let u = m.order[0];
            if m.hdeg[a] < m.pdeg[u] {
                false
            } else {
                m.map[u] = a;
                set_bit(&mut m.used, a);
                m.rec(1)?
            }
        }
    };
    if !found {
        return Ok(None);
    }
    let e = Embedding { mapping: m.map };
    assert!(e.is_valid(host, pattern), "matcher produced an invalid embedding");
    Ok(Some(e))
}

/// An embedding of `pattern` into `host`, if one exists.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    contains_subgraph_within(host, pattern, Unlimited).expect("unlimited budget")
}

pub fn contains_subgraph_within<B: Budget>(host: &Graph, pattern: &Graph, budget: B) -> Result<Option<Embedding>> {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    if pattern.order() == 0 {
        return Ok(Some(Embedding { mapping: Vec::new() }));
    }
    let start = (0..pattern.order())
        .max_by(|&a, &b| pattern.degree(a).cmp(&pattern.degree(b)).then(b.cmp(&a)))
        .expect("non-empty pattern");
    run(host, pattern, search_order(pattern, start), None, budget)
}

/// An embedding of `pattern` whose image contains `anchor`.
pub fn contains_subgraph_through<B: Budget>(
    host: &Graph,
    pattern: &Graph,
    anchor: usize,
    mut budget: B,
) -> Result<Option<Embedding>> {
    if anchor >= host.order() {
        return Err(Error::VertexOutOfRange { vertex: anchor, order: host.order() });
    }
    if pattern.order() > host.order() || pattern.order() == 0 || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let roots = pattern_orbits(pattern)?;
    for (u, &root) in roots.iter().enumerate() {
        if root != u {
            continue;
        }
        if let Some(e) = run(host, pattern, search_order(pattern, u), Some(anchor), &mut budget)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

fn pattern_orbits(pattern: &Graph) -> Result<Vec<usize>> {
    if pattern.order() > canon::CANON_ORDER_CAP {
        return Ok((0..pattern.order()).collect());
    }
    // recorded generators are genuine automorphisms; missing some only
    // costs extra starts
    let lab = canon::canonical_labeling(pattern)?;
    Ok(canon::orbit_roots(pattern.order(), &lab.generators))
}

/// Precomputed orbit data for repeated anchored queries with one pattern.
#[derive(Debug, Clone)]
pub struct AnchoredPattern {
    pattern: Graph,
    orders: Vec<Vec<usize>>,
}

impl AnchoredPattern {
    pub fn new(pattern: &Graph) -> Result<Self> {
        let roots = pattern_orbits(pattern)?;
        let orders = (0..pattern.order()).filter(|&u| roots[u] == u).map(|u| search_order(pattern, u)).collect();
        Ok(Self { pattern: pattern.clone(), orders })
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    /// Same as [`contains_subgraph_through`].
    pub fn find_through<B: Budget>(&self, host: &Graph, anchor: usize, mut budget: B) -> Result<Option<Embedding>> {
        if anchor >= host.order() {
            return Err(Error::VertexOutOfRange { vertex: anchor, order: host.order() });
        }
        let p = &self.pattern;
        if p.order() > host.order() || p.order() == 0 || p.edge_count() > host.edge_count() {
            return Ok(None);
        }
        for order in &self.orders {
            if let Some(e) = run(host, p, order.clone(), Some(anchor), &mut budget)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

/// Hosts up to this order memoize failed path-power search states.
pub const PATH_POWER_MEMO_LIMIT: usize = 32;

struct BandSearch<'a, B: Budget> {
    host: &'a Graph,
    k: usize,
    p: usize,
    seq: Vec<usize>,
    used: Vec<u64>,
    hdeg: Vec<usize>,
    prev: Vec<usize>,
    memo: Option<BTreeSet<(u64, u64)>>,
    budget: B,
}

impl<B: Budget> BandSearch<'_, B> {
    fn state_key(&self) -> (u64, u64) {
        let i = self.seq.len();
        let tail = &self.seq[i.saturating_sub(self.p)..];
        let packed = tail.iter().fold(0u64, |acc, &v| acc << 5 | v as u64);
        (self.used[0], packed)
    }

    fn need(&self, i: usize) -> usize {
        i.min(self.p) + (self.k - 1 - i).min(self.p)
    }

    fn rec(&mut self) -> Result<bool> {
        let i = self.seq.len();
        if i == self.k {
            return Ok(true);
        }
        if i > 0 {
            if let Some(memo) = &self.memo {
                if memo.contains(&self.state_key()) {
                    return Ok(false);
                }
            }
        }
        let mut cand = full_set(self.host.order());
        for &w in &self.seq[i.saturating_sub(self.p)..] {
            cand.iter_mut().zip(self.host.row(w)).for_each(|(c, r)| *c &= r);
        }
        cand.iter_mut().zip(&self.used).for_each(|(c, r)| *c &= !r);
        let need = self.need(i);
        for x in Ones::new(&cand).collect::<Vec<_>>() {
            if self.hdeg[x] < need {
                continue;
            }
            let pv = self.prev[x];
            if pv != NONE && !test_bit(&self.used, pv) {
                continue;
            }
            self.budget.charge(1)?;
            self.seq.push(x);
            set_bit(&mut self.used, x);
            let ok = self.rec()?;
            if ok {
                return Ok(true);
            }
            clear_bit(&mut self.used, x);
            self.seq.pop();
        }
        if i > 0 {
            let key = self.state_key();
            if let Some(memo) = &mut self.memo {
                memo.insert(key);
            }
        }
        Ok(false)
    }
}

/// An embedding of `P_k^p` found as a vertex sequence `v_1, …, v_k` in
/// which each `v_i` is adjacent to the previous `min(p, i-1)` vertices.
/// `mapping[i]` is the host vertex at path position `i`.
///
/// # Panics
///
/// If `k` or `p` is zero.
pub fn contains_path_power(host: &Graph, k: usize, p: usize) -> Option<Embedding> {
    assert!(k >= 1 && p >= 1, "path power needs k >= 1 and p >= 1");
    contains_path_power_within(host, k, p, Unlimited).expect("unlimited budget")
}

pub fn contains_path_power_within<B: Budget>(host: &Graph, k: usize, p: usize, budget: B) -> Result<Option<Embedding>> {
    if k == 0 || p == 0 {
        return Err(Error::Parameter("path power needs k >= 1 and p >= 1".into()));
    }
    if k > host.order() {
        return Ok(None);
    }
    let memo = (host.order() <= PATH_POWER_MEMO_LIMIT && p <= 12).then(BTreeSet::new);
    let mut s = BandSearch {
        host,
        k,
        p,
        seq: Vec::with_capacity(k),
        used: vec![0; host.words()],
        hdeg: host.degrees(),
        prev: twin_links(host, None),
        memo,
        budget,
    };
    if !s.rec()? {
        return Ok(None);
    }
    let e = Embedding { mapping: s.seq };
    let pattern = path_power(k, p).map_err(|_| Error::OrderCap { order: k, cap: crate::DEFAULT_ORDER_CAP })?;
    assert!(e.is_valid(host, &pattern), "band search produced an invalid embedding");
    Ok(Some(e))
}

/// Size of a maximum matching (Edmonds' blossom algorithm).
pub fn max_matching_size(g: &Graph) -> usize {
    let n = g.order();
    let mut mate = vec![NONE; n];
    // greedy start
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = g.neighbors(u).find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    for root in 0..n {
        if mate[root] == NONE {
            if let Some((end, parent)) = augmenting_path(g, &mate, root) {
                let mut v = end;
                while v != NONE {
                    let pv = parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

fn augmenting_path(g: &Graph, mate: &[usize], root: usize) -> Option<(usize, Vec<usize>)> {
    let n = g.order();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut queue = alloc::collections::VecDeque::from([root]);
    used[root] = true;

    fn lca(mate: &[usize], base: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    }

    fn mark(
        mate: &[usize],
        base: &[usize],
        parent: &mut [usize],
        blossom: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                let cur = lca(mate, &base, &parent, v, to);
                let mut blossom = vec![false; n];
                mark(mate, &base, &mut parent, &mut blossom, v, cur, to);
                mark(mate, &base, &mut parent, &mut blossom, to, cur, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, parent));
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

/// Whether disjoint `A`, `B` with `|A| = a`, `|B| = b` exist with every
/// `A`–`B` pair adjacent.
pub fn contains_complete_bipartite(g: &Graph, a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    if a + b > g.order() {
        return false;
    }
    if a == 0 {
        return true;
    }
    let eligible: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= b).collect();

    fn rec(g: &Graph, eligible: &[usize], from: usize, left: usize, common: &[u64], b: usize) -> bool {
        if popcount(common) < b {
            return false;
        }
        if left == 0 {
            return true;
        }
        for (i, &v) in eligible.iter().enumerate().skip(from) {
            if eligible.len() - i < left {
                break;
            }
            let next: Vec<u64> = common.iter().zip(g.row(v)).map(|(c, r)| c & r).collect();
            if rec(g, eligible, i + 1, left - 1, &next, b) {
                return true;
            }
        }
        false
    }

    rec(g, &eligible, 0, a, &full_set(g.order()), b)
}

/// All `q`-cliques as vertex lists, each listed once in increasing order.
fn cliques_of_order(g: &Graph, q: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, q: usize, cur: &mut Vec<usize>, cand: &[u64], out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        if popcount(cand) < q - cur.len() {
            return;
        }
        for v in Ones::new(cand).collect::<Vec<_>>() {
            let mut next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(c, r)| c & r).collect();
            // keep only higher ids so each clique appears once
            for x in 0..=v {
                clear_bit(&mut next, x);
            }
            cur.push(v);
            rec(g, q, cur, &next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, q, &mut Vec::new(), &full_set(g.order()), &mut out);
    out
}

/// Maximum number of vertex-disjoint copies of `K_q`.
pub fn count_disjoint_cliques(g: &Graph, q: usize) -> usize {
    assert!(q >= 1, "clique order must be positive");
    if q == 1 {
        return g.order();
    }
    let cliques = cliques_of_order(g, q);
    let n = g.order();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        by_vertex[c[0]].push(i);
    }
    let mut covered = vec![false; n];
    for c in &cliques {
        for &v in c {
            covered[v] = true;
        }
    }

    struct Packer<'a> {
        q: usize,
        cliques: &'a [Vec<usize>],
        by_vertex: &'a [Vec<usize>],
        covered: &'a [bool],
        used: Vec<bool>,
        best: usize,
    }

    impl Packer<'_> {
        /// Vertices from `from` on are undecided; each chosen clique is
        /// indexed by its lowest vertex, so vertices below `from` are never
        /// used again.
        fn rec(&mut self, from: usize, count: usize) {
            self.best = self.best.max(count);
            let free = (from..self.used.len()).filter(|&x| self.covered[x] && !self.used[x]).count();
            if count + free / self.q <= self.best {
                return;
            }
            let Some(v) = (from..self.used.len()).find(|&v| !self.used[v] && !self.by_vertex[v].is_empty()) else {
                return;
            };
            let by_vertex = self.by_vertex;
            let cliques = self.cliques;
            for &ci in &by_vertex[v] {
                let c = &cliques[ci];
                if c.iter().all(|&x| !self.used[x]) {
                    for &x in c {
                        self.used[x] = true;
                    }
                    self.rec(v + 1, count + 1);
                    for &x in c {
                        self.used[x] = false;
                    }
                }
            }
            // v is not the lowest vertex of any chosen clique
            self.rec(v + 1, count);
        }
    }

    let mut packer =
        Packer { q, cliques: &cliques, by_vertex: &by_vertex, covered: &covered, used: vec![false; n], best: 0 };
    packer.rec(0, 0);
    packer.best
}
