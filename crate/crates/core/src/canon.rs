//! Canonical labeling by partition refinement and individualization.
//!
//! The search refines an ordered partition to an equitable one, branches on
//! the first non-singleton cell, and keeps the smallest graph6 encoding over
//! all leaves it explores. Automorphisms are recorded whenever two leaves
//! produce the same encoding. They prune siblings lying in one orbit of the
//! stabilizer of the current path, and they abandon any subtree that maps
//! onto one already searched.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{set_bit, words_for};
use crate::{graph6, Error, Graph, Result};

/// Largest order accepted by the canonical labeler.
pub const CANON_ORDER_CAP: usize = 256;

/// graph6 bytes of the canonically relabeled graph. Two graphs have equal
/// forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_graph6(&self) -> &str {
        core::str::from_utf8(&self.0).expect("graph6 output is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_graph6()).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

/// Result of a canonical labeling run.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex receiving canonical label `i`.
    pub order: Vec<usize>,
    /// Automorphisms met during the search. Every one is genuine; together
    /// they need not generate the whole group.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Canonical label of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            lab[v] = i;
        }
        lab
    }
}

/// Ordered partition stored as contiguous cells of `lab`.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// `end[s]` is one past the last position of the cell starting at `s`.
    end: Vec<usize>,
}

impl Partition {
    fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut lab = Vec::with_capacity(n);
        let mut end = vec![0; n];
        for cell in cells {
            let s = lab.len();
            lab.extend_from_slice(cell);
            end[s] = lab.len();
        }
        Self { lab, end }
    }

    fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.lab.len();
        let mut s = 0;
        core::iter::from_fn(move || {
            if s >= n {
                return None;
            }
            let cur = s;
            s = self.end[s];
            Some(cur)
        })
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        self.starts().find(|&s| self.end[s] > s + 1)
    }

    /// Moves `v` to the front of its cell `[s, e)` as a singleton.
    fn individualize(&mut self, s: usize, v: usize) {
        let e = self.end[s];
        let pos = (s..e).find(|&i| self.lab[i] == v).expect("vertex in target cell");
        self.lab.swap(s, pos);
        self.end[s] = s + 1;
        self.end[s + 1] = e;
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the splitter cells in `queue`.
    fn refine(&mut self, g: &Graph, mut queue: VecDeque<usize>) {
        let n = self.lab.len();
        let words = words_for(n);
        let mut queued = vec![false; n];
        for &s in &queue {
            queued[s] = true;
        }
        let mut wset = vec![0u64; words];
        let mut keyed: Vec<(usize, usize)> = Vec::new();
        while let Some(ws) = queue.pop_front() {
            queued[ws] = false;
            wset.iter_mut().for_each(|w| *w = 0);
            for &v in &self.lab[ws..self.end[ws]] {
                set_bit(&mut wset, v);
            }
            let mut s = 0;
            while s < n {
                let e = self.end[s];
                if e - s > 1 {
                    keyed.clear();
                    keyed.extend(self.lab[s..e].iter().map(|&v| {
                        let c: u32 = g.row(v).iter().zip(&wset).map(|(a, b)| (a & b).count_ones()).sum();
                        (c as usize, v)
                    }));
                    let first = keyed[0].0;
                    if keyed.iter().any(|&(c, _)| c != first) {
                        keyed.sort_unstable();
                        let was_queued = queued[s];
                        let mut start = s;
                        for i in 0..keyed.len() {
                            self.lab[s + i] = keyed[i].1;
                            let last = i + 1 == keyed.len() || keyed[i + 1].0 != keyed[i].0;
                            if last {
                                let stop = s + i + 1;
                                self.end[start] = stop;
                                if !queued[start] && (start != s || !was_queued) {
                                    queued[start] = true;
                                    queue.push_back(start);
                                }
                                start = stop;
                            }
                        }
                    }
                }
                s = e;
            }
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automs: Vec<Vec<usize>>,
}

struct Leaf {
    code: Vec<u8>,
    order: Vec<usize>,
    path: Vec<usize>,
}

fn encode_order(g: &Graph, order: &[usize]) -> Vec<u8> {
    let mut perm = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    graph6::encode_bytes(&g.relabel(&perm))
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbit representatives under the group generated by `gens`.
pub(crate) fn orbit_roots(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for gen in gens {
        for (x, &y) in gen.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

impl Search<'_> {
    fn leaf(&mut self, part: &Partition, path: &[usize]) -> Option<usize> {
        let code = encode_order(self.g, &part.lab);
        let leaf = Leaf { code, order: part.lab.clone(), path: path.to_vec() };
        let Some(first) = &self.first else {
            self.best = Some(Leaf { code: leaf.code.clone(), order: leaf.order.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("best set with first");
        let equivalent = if leaf.code == first.code {
            Some(first)
        } else if leaf.code == best.code {
            Some(best)
        } else {
            None
        };
        if let Some(known) = equivalent {
            let mut gamma = vec![0; leaf.order.len()];
            for (&a, &b) in known.order.iter().zip(&leaf.order) {
                gamma[a] = b;
            }
            let level = common_prefix(&known.path, &leaf.path);
            self.automs.push(gamma);
            return Some(level);
        }
        if leaf.code < best.code {
            self.best = Some(leaf);
        }
        None
    }

    fn visit(&mut self, part: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(s) = part.first_nonsingleton() else {
            return self.leaf(&part, path);
        };
        let depth = path.len();
        let mut members: Vec<usize> = part.lab[s..part.end[s]].to_vec();
        members.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in members {
            if !tried.is_empty() {
                let stab: Vec<Vec<usize>> =
                    self.automs.iter().filter(|a| path.iter().all(|&x| a[x] == x)).cloned().collect();
                if !stab.is_empty() {
                    let roots = orbit_roots(self.g.order(), &stab);
                    if tried.iter().any(|&u| roots[u] == roots[v]) {
                        continue;
                    }
                }
            }
            tried.push(v);
            let mut child = part.clone();
            child.individualize(s, v);
            child.refine(self.g, VecDeque::from([s]));
            path.push(v);
            let r = self.visit(child, path);
            path.pop();
            if let Some(level) = r {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Canonical labeling of a graph whose vertices carry ordered colour
/// classes `cells`. Isomorphisms must map each class onto the class in the
/// same position.
pub fn canonical_labeling_colored(g: &Graph, cells: &[Vec<usize>]) -> Result<Labeling> {
    let n = g.order();
    if n > CANON_ORDER_CAP {
        return Err(Error::OrderCap { order: n, cap: CANON_ORDER_CAP });
    }
    let mut seen = vec![false; n];
    for &v in cells.iter().flatten() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        if core::mem::replace(&mut seen[v], true) {
            return Err(Error::Parameter(alloc::format!("vertex {v} in two colour classes")));
        }
    }
    if seen.iter().any(|s| !s) || cells.iter().any(|c| c.is_empty()) {
        return Err(Error::Parameter("colour classes must be non-empty and cover every vertex".into()));
    }
    if n == 0 {
        return Ok(Labeling {
            form: CanonicalForm(graph6::encode_bytes(g)),
            order: Vec::new(),
            generators: Vec::new(),
        });
    }
    let mut part = Partition::from_cells(n, cells);
    let queue: VecDeque<usize> = part.starts().collect();
    part.refine(g, queue);
    let mut search = Search { g, first: None, best: None, automs: Vec::new() };
    let mut path = Vec::new();
    search.visit(part, &mut path);
    let best = search.best.expect("search reaches a leaf");
    Ok(Labeling { form: CanonicalForm(best.code), order: best.order, generators: search.automs })
}

pub fn canonical_labeling(g: &Graph) -> Result<Labeling> {
    let all: Vec<usize> = (0..g.order()).collect();
    let cells = if all.is_empty() { Vec::new() } else { vec![all] };
    canonical_labeling_colored(g, &cells)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|l| l.form)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        // still enforce the cap so oversize inputs are reported
        for x in [g, h] {
            if x.order() > CANON_ORDER_CAP {
                return Err(Error::OrderCap { order: x.order(), cap: CANON_ORDER_CAP });
            }
        }
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Form of `g` with `v` individualized. Vertices `v`, `w` lie in the same
/// automorphism orbit iff their rooted forms agree.
pub fn rooted_form(g: &Graph, v: usize) -> Result<CanonicalForm> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let rest: Vec<usize> = (0..g.order()).filter(|&x| x != v).collect();
    let cells = if rest.is_empty() { vec![vec![v]] } else { vec![vec![v], rest] };
    canonical_labeling_colored(g, &cells).map(|l| l.form)
}

/// Exact automorphism orbits: `orbits(g)[v]` is the smallest vertex in the
/// orbit of `v`.
pub fn orbits(g: &Graph) -> Result<Vec<usize>> {
    let lab = canonical_labeling(g)?;
    let mut roots = orbit_roots(g.order(), &lab.generators);
    // the recorded generators may miss part of the group; confirm the rest
    // with rooted forms
    let mut reps: Vec<(usize, CanonicalForm)> = Vec::new();
    for v in 0..g.order() {
        if roots[v] != v {
            continue;
        }
        let f = rooted_form(g, v)?;
        if let Some((r, _)) = reps.iter().find(|(_, rf)| *rf == f) {
            let r = *r;
            for x in roots.iter_mut() {
                if *x == v {
                    *x = r;
                }
            }
        } else {
            reps.push((v, f));
        }
    }
    Ok(roots)
}
