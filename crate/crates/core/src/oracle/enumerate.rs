use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::canon::{self, CanonicalForm};
use crate::{Error, Graph, Result};

/// Orders above this are refused; the class count at order 10 is already
/// twelve million.
pub const ENUMERATION_ORDER_CAP: usize = 10;

/// Canonical deletion: among minimum-degree vertices, the one with the
/// largest canonical label. Returns the form when the last vertex of
/// `child` lies in that vertex's orbit.
pub(crate) fn accept_last_vertex(child: &Graph) -> Result<Option<CanonicalForm>> {
    let n = child.order();
    let last = n - 1;
    let degrees = child.degrees();
    let min = *degrees.iter().min().expect("child has a vertex");
    if degrees[last] != min {
        return Ok(None);
    }
    let lab = canon::canonical_labeling(child)?;
    let labels = lab.labels();
    let chosen = (0..n).filter(|&v| degrees[v] == min).max_by_key(|&v| labels[v]).expect("some vertex has min degree");
    if chosen == last {
        return Ok(Some(lab.form));
    }
    let roots = canon::orbit_roots(n, &lab.generators);
    if roots[chosen] == roots[last] || canon::rooted_form(child, chosen)? == canon::rooted_form(child, last)? {
        return Ok(Some(lab.form));
    }
    Ok(None)
}

/// Children of `parent` (one new vertex) whose canonical parent is
/// `parent`, one per isomorphism class, in a fixed order. Only children
/// with at least `min_new_edges` edges at the new vertex and passing `keep`
/// are returned; `keep` must be hereditary for the enumeration to stay
/// complete.
pub(crate) fn canonical_children<B, F>(
    parent: &Graph,
    min_new_edges: usize,
    budget: &mut B,
    mut keep: F,
) -> Result<Vec<Graph>>
where
    B: Budget,
    F: FnMut(&Graph) -> Result<bool>,
{
    let m = parent.order();
    assert!(m < 63, "augmentation is limited to small orders");
    let degrees = parent.degrees();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        let size = mask.count_ones() as usize;
        if size < min_new_edges {
            continue;
        }
        // the new vertex must have minimum degree in the child
        if (0..m).any(|u| degrees[u] + ((mask >> u & 1) as usize) < size) {
            continue;
        }
        budget.charge(1)?;
        let child = parent.with_vertex((0..m).filter(|&u| mask >> u & 1 == 1));
        let Some(form) = accept_last_vertex(&child)? else {
            continue;
        };
        if seen.insert(form) && keep(&child)? {
            out.push(child);
        }
    }
    Ok(out)
}

/// Lazy depth-first stream of graphs of one order, one per isomorphism
/// class.
pub struct EnumerationStream {
    order: usize,
    stack: Vec<Graph>,
}

impl EnumerationStream {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(g) = self.stack.pop() {
            if g.order() == self.order {
                return Some(g);
            }
            let mut kids =
                canonical_children(&g, 0, &mut crate::Unlimited, |_| Ok(true)).expect("unlimited enumeration");
            kids.reverse();
            self.stack.extend(kids);
        }
        None
    }
}

pub fn enumerate_graphs(n: usize) -> Result<EnumerationStream> {
    if n > ENUMERATION_ORDER_CAP {
        return Err(Error::OrderCap { order: n, cap: ENUMERATION_ORDER_CAP });
    }
    Ok(EnumerationStream { order: n, stack: alloc::vec![Graph::empty(0)] })
}
