use alloc::vec;
use alloc::vec::Vec;

use super::chromatic::chromatic_number;
use super::enumerate::{enumerate_graphs, ENUMERATION_ORDER_CAP};
use crate::containment::contains_subgraph;
use crate::graph::complete_multipartite;
use crate::{Error, Graph, Result};

/// Minimal graphs whose placement inside one class of a complete
/// `p`-partite host creates the target.
///
/// Class width `|target|` is enough: an embedding of the target touches at
/// most `|target|` host vertices, so it already fits inside any larger host
/// after renaming the untouched vertices of each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionFamily {
    pub target: Graph,
    pub p: usize,
    /// Minimal members without isolated vertices, by order then canonical
    /// form.
    pub members: Vec<Graph>,
    pub host_width: usize,
    pub candidate_cap: usize,
}

/// Complete `p`-partite graph with classes of `width` vertices and `m`
/// placed on the first vertices of the first class.
pub fn plant_in_host(width: usize, p: usize, m: &Graph) -> Result<Graph> {
    if m.order() > width {
        return Err(Error::Parameter(alloc::format!(
            "planted graph has {} vertices but a class has only {width}",
            m.order()
        )));
    }
    let (mut host, _) = complete_multipartite(&vec![width; p])?;
    for (u, v) in m.edges() {
        host.add_edge(u, v);
    }
    Ok(host)
}

/// Computes the decomposition family of `target` over candidates with at
/// most `candidate_cap` vertices.
pub fn decomposition_family(target: &Graph, candidate_cap: usize) -> Result<DecompositionFamily> {
    let order = target.order();
    if order > ENUMERATION_ORDER_CAP {
        return Err(Error::OrderCap { order, cap: ENUMERATION_ORDER_CAP });
    }
    if candidate_cap > order {
        return Err(Error::Parameter(alloc::format!("candidate cap {candidate_cap} exceeds the target order {order}")));
    }
    if target.edge_count() == 0 {
        return Err(Error::UndefinedHost);
    }
    let p = chromatic_number(target)? - 1;
    let width = order;
    let creates = |m: &Graph| -> Result<bool> { Ok(contains_subgraph(&plant_in_host(width, p, m)?, target).is_some()) };

    let mut members: Vec<Graph> = Vec::new();
    for m in 2..=candidate_cap {
        // the property is monotone, so if K_m fails every m-vertex graph does
        if !creates(&Graph::complete(m))? {
            continue;
        }
        for g in enumerate_graphs(m)? {
            if !g.has_no_isolated_vertices() || !creates(&g)? {
                continue;
            }
            // monotonicity: checking single-edge deletions covers all
            // proper subgraphs
            let mut minimal = true;
            for (u, v) in g.edges() {
                let mut h = g.clone();
                h.remove_edge(u, v);
                if creates(&h.without_isolated_vertices())? {
                    minimal = false;
                    break;
                }
            }
            // enumeration emits one graph per class, so members are distinct
            if minimal {
                members.push(g);
            }
        }
    }
    Ok(DecompositionFamily { target: target.clone(), p, members, host_width: width, candidate_cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::path_power;

    #[test]
    fn examples() {
        let f = decomposition_family(&path_power(5, 2).unwrap(), 5).unwrap();
        assert_eq!(f.p, 2);
        assert_eq!(f.members.len(), 1);
        assert!(are_isomorphic(&f.members[0], &Graph::path(3)).unwrap());

        let f = decomposition_family(&path_power(4, 2).unwrap(), 4).unwrap();
        assert_eq!(f.members.len(), 1);
        assert!(are_isomorphic(&f.members[0], &Graph::path(2)).unwrap());

        let f = decomposition_family(&Graph::complete(3), 3).unwrap();
        assert_eq!((f.p, f.host_width), (2, 3));
        assert_eq!(f.members.len(), 1);
        assert!(are_isomorphic(&f.members[0], &Graph::path(2)).unwrap());
    }

    #[test]
    fn bipartite_target_lists_subgraphs_of_itself() {
        // p = 1: the host is edgeless, so members are the target itself
        let f = decomposition_family(&Graph::cycle(4), 4).unwrap();
        assert_eq!(f.p, 1);
        assert_eq!(f.members.len(), 1);
        assert!(are_isomorphic(&f.members[0], &Graph::cycle(4)).unwrap());
    }

    #[test]
    fn c5_from_single_class_edge() {
        // a class edge plus an even path through the host closes a 5-cycle
        let f = decomposition_family(&Graph::cycle(5), 5).unwrap();
        assert_eq!(f.p, 2);
        assert_eq!(f.members.len(), 1);
        assert!(are_isomorphic(&f.members[0], &Graph::path(2)).unwrap());
    }

    #[test]
    fn members_satisfy_invariants() {
        for (k, p) in [(4, 2), (5, 2), (6, 2), (5, 3)] {
            let l = path_power(k, p).unwrap();
            let f = decomposition_family(&l, k).unwrap();
            for (i, m) in f.members.iter().enumerate() {
                assert!(contains_subgraph(&plant_in_host(f.host_width, f.p, m).unwrap(), &l).is_some());
                for (u, v) in m.edges() {
                    let mut h = m.clone();
                    h.remove_edge(u, v);
                    assert!(contains_subgraph(&plant_in_host(f.host_width, f.p, &h).unwrap(), &l).is_none());
                }
                for (j, other) in f.members.iter().enumerate() {
                    if i != j {
                        assert!(contains_subgraph(other, m).is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(decomposition_family(&Graph::empty(3), 3), Err(Error::UndefinedHost));
        assert!(matches!(decomposition_family(&Graph::complete(3), 4), Err(Error::Parameter(_))));
        assert!(matches!(decomposition_family(&Graph::path(11), 3), Err(Error::OrderCap { .. })));
        assert!(plant_in_host(2, 2, &Graph::path(3)).is_err());
    }
}
