//! Budgeted breadth-first exploration of mutation classes, deduplicated by
//! canonical form, plus the class-wide searches built on it.
//!
//! Scans are level-synchronous: a whole depth layer is expanded before the
//! next begins, and within a layer children are generated in a fixed scan
//! order. That makes every search deterministic — including across thread
//! counts, since parallel expansion merges per-parent results in the same
//! order the sequential loop would visit them.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::banff::Budgets;
use crate::quiver::{CoveringPair, IceQuiver};

/// Vertex scan order used when generating a member's mutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    Ascending,
    Descending,
}

/// A mutation class enumerated up to budget: the set of canonical forms,
/// whether the closure is complete, and the last depth explored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationClass {
    pub members: BTreeSet<Vec<u8>>,
    pub size: usize,
    pub complete: bool,
    pub frontier_depth: usize,
}

/// Search bookkeeping: how much work a verdict cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: usize,
    pub depth_reached: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict {
    /// A member matching the goal, reached by this mutation path. Covering
    /// pair searches also report the pair found there.
    Found { path: Vec<usize>, pair: Option<CoveringPair> },
    /// The class was completely enumerated and contains no match.
    ProvenAbsent,
    /// Budgets ran out first; no mathematical claim.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: SearchVerdict,
    pub stats: SearchStats,
}

/// Whether to keep scanning after a member visit.
pub(crate) enum Visit {
    Continue,
    Stop,
}

pub(crate) struct ScanMeta {
    pub members_seen: usize,
    pub depth_reached: usize,
    /// True when the closure provably stabilized within budget.
    pub complete: bool,
    /// True when the visitor ended the scan early.
    pub stopped_early: bool,
}

/// Level-synchronous scan over the mutation class of `start`.
///
/// `budget_left` is a global expansion allowance shared across scans (each
/// newly visited member costs one unit); `max_members` and `max_depth`
/// bound this scan alone. The visitor sees members in visit order:
/// shallowest first, within a level in deterministic generation order.
pub(crate) fn scan_class_visit(
    start: &IceQuiver,
    max_members: usize,
    max_depth: usize,
    order: ScanOrder,
    threads: usize,
    budget_left: &mut usize,
    mut visit: impl FnMut(&IceQuiver, &[usize]) -> Visit,
) -> ScanMeta {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    seen.insert(start.canonical_form());
    let mut meta = ScanMeta {
        members_seen: 0,
        depth_reached: 0,
        complete: true,
        stopped_early: false,
    };
    if max_members == 0 || *budget_left == 0 {
        meta.complete = false;
        return meta;
    }
    *budget_left -= 1;
    meta.members_seen = 1;
    if let Visit::Stop = visit(start, &[]) {
        meta.stopped_early = true;
        return meta;
    }
    let mut level: Vec<(IceQuiver, Vec<usize>)> = vec![(start.clone(), Vec::new())];
    let mut depth = 0usize;
    while !level.is_empty() {
        if depth == max_depth {
            meta.complete = false;
            return meta;
        }
        depth += 1;
        let mut next: Vec<(IceQuiver, Vec<usize>)> = Vec::new();
        for (child, path) in expand_level(&level, order, threads) {
            let Some(child) = child else {
                // Mutation overflowed; the closure cannot be trusted.
                meta.complete = false;
                continue;
            };
            if !seen.insert(child.canonical_form()) {
                continue;
            }
            if meta.members_seen == max_members || *budget_left == 0 {
                meta.complete = false;
                return meta;
            }
            *budget_left -= 1;
            meta.members_seen += 1;
            meta.depth_reached = depth;
            if let Visit::Stop = visit(&child, &path) {
                meta.stopped_early = true;
                return meta;
            }
            next.push((child, path));
        }
        level = next;
    }
    meta
}

/// Generates all single mutations of a level, in deterministic order:
/// parents in level order, vertices in the given scan order. `None` marks
/// an overflowed mutation.
fn expand_level(
    level: &[(IceQuiver, Vec<usize>)],
    order: ScanOrder,
    threads: usize,
) -> Vec<(Option<IceQuiver>, Vec<usize>)> {
    let expand_one = |(q, path): &(IceQuiver, Vec<usize>)| {
        let mut vs = q.mutable_vertices();
        if let ScanOrder::Descending = order {
            vs.reverse();
        }
        let mut out = Vec::with_capacity(vs.len());
        for k in vs {
            let mut child_path = path.clone();
            child_path.push(k);
            out.push((q.mutate(k).ok(), child_path));
        }
        out
    };
    #[cfg(feature = "std")]
    if threads > 1 && level.len() > 1 {
        let chunk = level.len().div_ceil(threads);
        let mut merged: Vec<Vec<(Option<IceQuiver>, Vec<usize>)>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = level
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().flat_map(expand_one).collect()))
                .collect();
            for h in handles {
                merged.push(h.join().expect("expansion worker panicked"));
            }
        });
        return merged.into_iter().flatten().collect();
    }
    let _ = threads;
    level.iter().flat_map(expand_one).collect()
}

/// Breadth-first closure of `q` under mutation, deduplicated by canonical
/// form, within the class budgets. `complete` is true exactly when every
/// member's every mutation is already a member.
pub fn mutation_class(q: &IceQuiver, budgets: &Budgets) -> MutationClass {
    mutation_class_threads(q, budgets, 1)
}

/// [`mutation_class`] with a thread count for frontier expansion. The
/// result is identical for every thread count.
pub fn mutation_class_threads(q: &IceQuiver, budgets: &Budgets, threads: usize) -> MutationClass {
    let mut members = BTreeSet::new();
    let mut budget_left = budgets.nodes;
    let meta = scan_class_visit(
        q,
        budgets.class_members,
        budgets.depth,
        ScanOrder::Ascending,
        threads.max(1),
        &mut budget_left,
        |m, _| {
            members.insert(m.canonical_form());
            Visit::Continue
        },
    );
    MutationClass {
        size: members.len(),
        members,
        complete: meta.complete,
        frontier_depth: meta.depth_reached,
    }
}

fn search(
    q: &IceQuiver,
    budgets: &Budgets,
    mut goal: impl FnMut(&IceQuiver) -> Option<Option<CoveringPair>>,
) -> SearchOutcome {
    let mut found: Option<SearchVerdict> = None;
    let mut budget_left = budgets.nodes;
    let meta = scan_class_visit(
        q,
        budgets.class_members,
        budgets.depth,
        ScanOrder::Ascending,
        1,
        &mut budget_left,
        |m, path| match goal(m) {
            Some(pair) => {
                found = Some(SearchVerdict::Found { path: path.to_vec(), pair });
                Visit::Stop
            }
            None => Visit::Continue,
        },
    );
    let stats = SearchStats {
        nodes_expanded: meta.members_seen,
        depth_reached: meta.depth_reached,
    };
    let verdict = match found {
        Some(v) => v,
        None if meta.complete => SearchVerdict::ProvenAbsent,
        None => SearchVerdict::BudgetExhausted,
    };
    SearchOutcome { verdict, stats }
}

/// Shortest mutation path to a member whose mutable part is acyclic:
/// `Found` with the path, `ProvenAbsent` on a complete class without one,
/// else `BudgetExhausted`.
pub fn find_acyclic_seed(q: &IceQuiver, budgets: &Budgets) -> SearchOutcome {
    search(q, budgets, |m| if m.is_acyclic() { Some(None) } else { None })
}

/// Shortest mutation path to a member with a covering pair, reporting the
/// first pair in ascending order.
pub fn find_covering_pair_seed(q: &IceQuiver, budgets: &Budgets) -> SearchOutcome {
    search(q, budgets, |m| {
        let pairs = m.covering_pairs();
        pairs.first().map(|&p| Some(p))
    })
}
