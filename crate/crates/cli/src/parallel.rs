//! Fan-out of the exhaustive extremal search over worker threads.
//!
//! The search tree is cut at a fixed depth; roots are handed out through an
//! atomic cursor and each subtree's result is stored by root index, so the
//! merged result does not depend on scheduling or worker count.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use pathpower_core::oracle::{ExtremalResult, ExtremalSearch, PartialExtremal};
use pathpower_core::{Graph, Result};

use crate::budget::Deadline;

/// Depth at which the tree is split into independent subtrees.
pub const SPLIT_DEPTH: usize = 5;

/// Runs `search` on `workers` threads; every worker charges its own copy of
/// `deadline`.
pub fn run_extremal(search: &ExtremalSearch, workers: usize, deadline: Deadline) -> Result<ExtremalResult> {
    let mut front_budget = deadline;
    let roots = search.frontier(SPLIT_DEPTH, &mut front_budget)?;
    let slots: Vec<Mutex<Option<Result<PartialExtremal>>>> = roots.iter().map(|_| Mutex::new(None)).collect();
    let cursor = AtomicUsize::new(0);
    let failed = AtomicBool::new(false);
    let work = |budget: Deadline| {
        let mut budget = budget;
        loop {
            let i = cursor.fetch_add(1, Ordering::Relaxed);
            if i >= roots.len() || failed.load(Ordering::Relaxed) {
                break;
            }
            let part = search.explore(&roots[i], &mut budget);
            if part.is_err() {
                failed.store(true, Ordering::Relaxed);
            }
            *slots[i].lock().expect("slot lock") = Some(part);
        }
    };
    let workers = workers.clamp(1, roots.len().max(1));
    if workers == 1 {
        work(deadline);
    } else {
        thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| work(deadline));
            }
        });
    }
    // a failed subtree stores its error, so empty slots only occur after one
    let mut parts = Vec::with_capacity(roots.len());
    for slot in slots {
        if let Some(part) = slot.into_inner().expect("slot lock") {
            parts.push(part?);
        }
    }
    Ok(search.finish(parts))
}

/// `ex(n, pattern)` using `workers` threads.
pub fn extremal_number(
    n: usize,
    pattern: &Graph,
    hints: &[Graph],
    workers: usize,
    deadline: Deadline,
) -> Result<ExtremalResult> {
    let search = ExtremalSearch::new(n, pattern, hints)?;
    run_extremal(&search, workers, deadline)
}
