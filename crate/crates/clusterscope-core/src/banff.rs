//! The acyclic-cover search. At every node the algorithm first looks for a
//! stop-predicate member across the (budgeted) mutation class; failing
//! that, it picks a covering pair at the shallowest reachable member and
//! branches on freezing each endpoint — or deleting it, in the reduced
//! variant — recursing until every branch ends in a stop-predicate leaf.
//!
//! Successful runs return a certificate that embeds the quiver at every
//! node and can be replayed and checked by an independent verifier (see
//! [`crate::verify`]). Failures are typed: a complete mutation class with
//! no covering pair anywhere is a genuine obstruction and carries the
//! class as witness; exhausted budgets make no mathematical claim.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::explore::{scan_class_visit, MutationClass, ScanOrder, Visit};
use crate::laurent::LaurentPoly;
use crate::quiver::{CoveringPair, IceQuiver};
use crate::seed::{Seed, SeedError};

/// Work limits for class scans and whole runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum members visited per class scan.
    pub class_members: usize,
    /// Maximum mutation depth per class scan.
    pub depth: usize,
    /// Global allowance of member visits for an entire run.
    pub nodes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { class_members: 10_000, depth: 8, nodes: 100_000 }
    }
}

/// What counts as a finished branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopPredicate {
    /// Mutable part has no directed cycle.
    Acyclic,
    /// Mutable part has no arrows at all.
    Isolated,
}

impl fmt::Display for StopPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StopPredicate::Acyclic => write!(f, "acyclic"),
            StopPredicate::Isolated => write!(f, "isolated"),
        }
    }
}

/// Why a particular leaf stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafPredicate {
    Acyclic,
    Isolated,
    /// Reduced runs only: the canonical form is already in the knowledge
    /// base of certified quivers.
    Known,
}

impl fmt::Display for LeafPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafPredicate::Acyclic => write!(f, "acyclic"),
            LeafPredicate::Isolated => write!(f, "isolated"),
            LeafPredicate::Known => write!(f, "known"),
        }
    }
}

/// How children derive their state from a branch: freezing a pair endpoint
/// (standard) or deleting it (reduced).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    Freezing,
    Deleting,
}

/// Search knobs. The defaults reproduce the worked runs in the docs: stop
/// searches scan mutation vertices in descending order, covering pairs are
/// taken in ascending order, and failed branches backtrack to the next
/// pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strategy {
    /// Vertex order when expanding class scans (affects which stop member
    /// or pair member is discovered first at equal depth).
    pub stop_scan: ScanOrder,
    /// Order in which a member's covering pairs are tried.
    pub pair_scan: ScanOrder,
    /// Try further pairs/members after a failed branch.
    pub backtrack: bool,
    /// Carry Laurent clusters and attach them to leaves.
    pub seed_level: bool,
    /// Worker threads for class scans (results are identical for any
    /// count).
    pub threads: usize,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy {
            stop_scan: ScanOrder::Descending,
            pair_scan: ScanOrder::Ascending,
            backtrack: true,
            seed_level: false,
            threads: 1,
        }
    }
}

/// A node of a cover certificate. Each node's `path` mutates its state
/// quiver (the root quiver, or the parent's branch quiver after freezing
/// or deleting the endpoint) into the embedded `quiver`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BanffNode {
    Branch {
        path: Vec<usize>,
        quiver: IceQuiver,
        pair: CoveringPair,
        /// `children[0]` freezes/deletes `pair.source`, `children[1]` the
        /// target.
        children: [Box<BanffNode>; 2],
    },
    Leaf {
        path: Vec<usize>,
        quiver: IceQuiver,
        predicate: LeafPredicate,
        /// Cluster after replaying the root seed down to this leaf;
        /// present on seed-level runs.
        cluster: Option<Vec<LaurentPoly>>,
    },
}

impl BanffNode {
    pub fn quiver(&self) -> &IceQuiver {
        match self {
            BanffNode::Branch { quiver, .. } | BanffNode::Leaf { quiver, .. } => quiver,
        }
    }

    pub fn path(&self) -> &[usize] {
        match self {
            BanffNode::Branch { path, .. } | BanffNode::Leaf { path, .. } => path,
        }
    }
}

/// A replayable record of a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BanffCertificate {
    pub root: IceQuiver,
    pub stop: StopPredicate,
    pub kind: CertKind,
    pub tree: BanffNode,
}

impl BanffCertificate {
    /// Nodes in preorder; the index in this list is the node id used by
    /// reports and the text format.
    pub fn nodes_preorder(&self) -> Vec<&BanffNode> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![&self.tree];
        while let Some(n) = stack.pop() {
            out.push(n);
            if let BanffNode::Branch { children, .. } = n {
                stack.push(&children[1]);
                stack.push(&children[0]);
            }
        }
        out
    }

    pub fn branch_count(&self) -> usize {
        self.nodes_preorder()
            .iter()
            .filter(|n| matches!(n, BanffNode::Branch { .. }))
            .count()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes_preorder()
            .iter()
            .filter(|n| matches!(n, BanffNode::Leaf { .. }))
            .count()
    }

    pub fn leaves(&self) -> Vec<&BanffNode> {
        self.nodes_preorder()
            .into_iter()
            .filter(|n| matches!(n, BanffNode::Leaf { .. }))
            .collect()
    }
}

/// A failed run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReport {
    /// Some node's entire mutation class was enumerated and no member has
    /// a covering pair: the algorithm cannot make progress there, ever.
    NoCoveringPairInCompleteClass { witness: MutationClass },
    /// A budget ran out; no claim about the input follows.
    BudgetExhausted { location: String, members_seen: usize, depth_reached: usize },
}

impl fmt::Display for FailureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReport::NoCoveringPairInCompleteClass { witness } => write!(
                f,
                "complete mutation class of {} member(s) has no covering pair",
                witness.size
            ),
            FailureReport::BudgetExhausted { location, members_seen, depth_reached } => write!(
                f,
                "budget exhausted during {location} after {members_seen} member(s), depth {depth_reached}"
            ),
        }
    }
}

/// Errors from the cover searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BanffError {
    Failure(FailureReport),
    /// The reduced variant requires a fully mutable quiver.
    FrozenVerticesPresent,
    /// Seed-level cluster replay failed (signals a defect, not a result).
    Seed(SeedError),
}

impl fmt::Display for BanffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BanffError::Failure(r) => write!(f, "{r}"),
            BanffError::FrozenVerticesPresent => {
                write!(f, "reduced run requires a quiver without frozen vertices")
            }
            BanffError::Seed(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BanffError {}

impl From<FailureReport> for BanffError {
    fn from(r: FailureReport) -> Self {
        BanffError::Failure(r)
    }
}

enum Mode<'a> {
    Freeze,
    Delete { kb: &'a mut BTreeSet<Vec<u8>> },
}

fn stop_holds(q: &IceQuiver, stop: StopPredicate) -> bool {
    match stop {
        StopPredicate::Acyclic => q.is_acyclic(),
        StopPredicate::Isolated => {
            let mv = q.mutable_vertices();
            mv.iter().all(|&a| mv.iter().all(|&b| q.entry(a, b) <= 0))
        }
    }
}

/// Runs the cover search on a seed's quiver with the given stop predicate.
/// With `strategy.seed_level`, leaves also carry the replayed clusters.
pub fn run_banff(
    seed: &Seed,
    stop: StopPredicate,
    budgets: &Budgets,
    strategy: &Strategy,
) -> Result<BanffCertificate, BanffError> {
    let mut budget_left = budgets.nodes;
    let tree = banff_node(
        seed.quiver(),
        stop,
        budgets,
        strategy,
        &mut budget_left,
        &mut Mode::Freeze,
    )?;
    let mut cert = BanffCertificate {
        root: seed.quiver().clone(),
        stop,
        kind: CertKind::Freezing,
        tree,
    };
    if strategy.seed_level {
        let state = Seed::from_parts(
            seed.quiver().clone(),
            seed.cluster().to_vec(),
            seed.path().to_vec(),
        );
        annotate_clusters(&state, &mut cert.tree).map_err(BanffError::Seed)?;
    }
    Ok(cert)
}

/// The reduced variant: quiver-level, children delete a pair endpoint, and
/// branches may stop at quivers whose canonical form is already in the
/// knowledge base. Certified forms are added to `kb` on success.
pub fn run_banff_reduced(
    q: &IceQuiver,
    budgets: &Budgets,
    strategy: &Strategy,
    kb: &mut BTreeSet<Vec<u8>>,
) -> Result<BanffCertificate, BanffError> {
    if !q.frozen_vertices().is_empty() {
        return Err(BanffError::FrozenVerticesPresent);
    }
    let mut budget_left = budgets.nodes;
    let tree = banff_node(
        q,
        StopPredicate::Acyclic,
        budgets,
        strategy,
        &mut budget_left,
        &mut Mode::Delete { kb },
    )?;
    kb.insert(q.canonical_form());
    Ok(BanffCertificate {
        root: q.clone(),
        stop: StopPredicate::Acyclic,
        kind: CertKind::Deleting,
        tree,
    })
}

fn banff_node(
    state: &IceQuiver,
    stop: StopPredicate,
    budgets: &Budgets,
    strategy: &Strategy,
    budget_left: &mut usize,
    mode: &mut Mode<'_>,
) -> Result<BanffNode, FailureReport> {
    // One scan serves both phases: the first stop-predicate member ends
    // the node as a leaf; otherwise members with covering pairs are
    // collected in visit order (shallowest first).
    let mut stop_hit: Option<(IceQuiver, Vec<usize>, LeafPredicate)> = None;
    let mut candidates: Vec<(IceQuiver, Vec<usize>, Vec<CoveringPair>)> = Vec::new();
    let meta = scan_class_visit(
        state,
        budgets.class_members,
        budgets.depth,
        strategy.stop_scan,
        strategy.threads,
        budget_left,
        |m, path| {
            if stop_holds(m, stop) {
                let pred = match stop {
                    StopPredicate::Acyclic => LeafPredicate::Acyclic,
                    StopPredicate::Isolated => LeafPredicate::Isolated,
                };
                stop_hit = Some((m.clone(), path.to_vec(), pred));
                return Visit::Stop;
            }
            if let Mode::Delete { kb } = mode {
                if kb.contains(&m.canonical_form()) {
                    stop_hit = Some((m.clone(), path.to_vec(), LeafPredicate::Known));
                    return Visit::Stop;
                }
            }
            let pairs = m.covering_pairs();
            if !pairs.is_empty() {
                candidates.push((m.clone(), path.to_vec(), pairs));
            }
            Visit::Continue
        },
    );
    if let Some((quiver, path, predicate)) = stop_hit {
        return Ok(BanffNode::Leaf { path, quiver, predicate, cluster: None });
    }

    let mut last_failure: Option<FailureReport> = None;
    for (member, path, pairs) in &candidates {
        let ordered: Vec<CoveringPair> = match strategy.pair_scan {
            ScanOrder::Ascending => pairs.clone(),
            ScanOrder::Descending => pairs.iter().rev().copied().collect(),
        };
        for pair in ordered {
            let (left_state, right_state) = match mode {
                Mode::Freeze => (
                    member.freeze(&[pair.source]).expect("pair endpoints are mutable"),
                    member.freeze(&[pair.target]).expect("pair endpoints are mutable"),
                ),
                Mode::Delete { .. } => (
                    member.delete_vertices(&[pair.source]).0,
                    member.delete_vertices(&[pair.target]).0,
                ),
            };
            let left = match banff_node(&left_state, stop, budgets, strategy, budget_left, mode) {
                Ok(n) => n,
                Err(failure) => {
                    if !strategy.backtrack {
                        return Err(failure);
                    }
                    last_failure = Some(failure);
                    continue;
                }
            };
            let right = match banff_node(&right_state, stop, budgets, strategy, budget_left, mode)
            {
                Ok(n) => n,
                Err(failure) => {
                    if !strategy.backtrack {
                        return Err(failure);
                    }
                    last_failure = Some(failure);
                    continue;
                }
            };
            if let Mode::Delete { kb } = mode {
                kb.insert(state.canonical_form());
                kb.insert(member.canonical_form());
            }
            return Ok(BanffNode::Branch {
                path: path.clone(),
                quiver: member.clone(),
                pair,
                children: [Box::new(left), Box::new(right)],
            });
        }
    }

    if meta.complete && candidates.is_empty() {
        // Re-enumerate to attach the witness; the scan just proved this
        // terminates within the same budgets.
        let witness = crate::explore::mutation_class(state, budgets);
        return Err(FailureReport::NoCoveringPairInCompleteClass { witness });
    }
    Err(last_failure.unwrap_or(FailureReport::BudgetExhausted {
        location: String::from("covering-pair scan"),
        members_seen: meta.members_seen,
        depth_reached: meta.depth_reached,
    }))
}

/// Replays the root seed through the tree and stores each leaf's cluster.
fn annotate_clusters(state: &Seed, node: &mut BanffNode) -> Result<(), SeedError> {
    let mut work = state.clone();
    for &k in node.path() {
        work = work.mutate(k)?;
    }
    match node {
        BanffNode::Leaf { cluster, .. } => {
            *cluster = Some(work.cluster().to_vec());
            Ok(())
        }
        BanffNode::Branch { pair, children, .. } => {
            let pair = *pair;
            for (child, v) in children.iter_mut().zip([pair.source, pair.target]) {
                let child_quiver = work.quiver().freeze(&[v]).map_err(SeedError::Quiver)?;
                let child_state =
                    Seed::from_parts(child_quiver, work.cluster().to_vec(), work.path().to_vec());
                annotate_clusters(&child_state, child)?;
            }
            Ok(())
        }
    }
}
