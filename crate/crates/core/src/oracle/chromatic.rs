use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

pub const CHROMATIC_ORDER_CAP: usize = 16;

fn max_clique(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(g, size + 1, rest & g.row(v)[0] as u32, best);
        }
    }
    let mut best = 0;
    let all = if g.order() == 0 { 0 } else { u32::MAX >> (32 - g.order()) };
    grow(g, 0, all, &mut best);
    best
}

/// Exact chromatic number by backtracking colouring, starting from the
/// clique number and raising the colour count until a colouring exists.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > CHROMATIC_ORDER_CAP {
        return Err(Error::OrderCap { order: n, cap: CHROMATIC_ORDER_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    // colour high-degree vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut colours = max_clique(g).max(1);
    loop {
        let mut colour = vec![usize::MAX; n];
        if colourable(g, &order, 0, colours, 0, &mut colour) {
            return Ok(colours);
        }
        colours += 1;
    }
}

fn colourable(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    // a fresh colour is interchangeable with any other fresh one
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).any(|u| colour[u] == c) {
            continue;
        }
        colour[v] = c;
        if colourable(g, order, i + 1, k, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, path_power};

    #[test]
    fn examples() {
        assert_eq!(chromatic_number(&path_power(6, 2).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(4)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(chromatic_number(&petersen).unwrap(), 3);
        assert_eq!(chromatic_number(&complete_multipartite(&[3, 3, 2, 5]).unwrap().0).unwrap(), 4);
    }

    #[test]
    fn path_powers() {
        for p in 1..=4 {
            for k in p + 1..=10 {
                assert_eq!(chromatic_number(&path_power(k, p).unwrap()).unwrap(), p + 1, "k={k} p={p}");
            }
        }
    }

    #[test]
    fn cap() {
        assert!(chromatic_number(&Graph::empty(16)).is_ok());
        assert_eq!(chromatic_number(&Graph::empty(17)), Err(Error::OrderCap { order: 17, cap: 16 }));
    }
}
