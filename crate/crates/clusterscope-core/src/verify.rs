//! Independent certificate checking. The verifier shares no graph code
//! with the search: acyclicity is re-decided by indegree peeling,
//! covering pairs are re-derived from the definition with per-vertex
//! walks, and every node's embedded quiver is compared against a fresh
//! replay of its mutation path. A certificate is accepted only if every
//! node checks out.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::banff::{BanffCertificate, BanffNode, CertKind, LeafPredicate, StopPredicate};
use crate::quiver::{CoveringPair, IceQuiver};

/// Why a certificate was rejected; `node` is the preorder id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// A node's mutation path cannot be replayed from its state.
    PathReplayMismatch,
    /// Replaying the path gives a different quiver than the embedded one.
    EmbeddedQuiverMismatch,
    /// A branch's pair is not a covering pair of its quiver.
    InvalidCoveringPair,
    /// A leaf's claimed predicate does not hold on its quiver.
    LeafPredicateFailed,
    /// A leaf's predicate is not admissible for the certificate's stop
    /// predicate and kind.
    StopPredicateMismatch,
    /// A `known` leaf whose canonical form is absent from the knowledge
    /// base.
    UnknownForm,
    /// The certificate is malformed at the top level (e.g. a deleting
    /// certificate with frozen vertices or a non-acyclic stop).
    BadStructure,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::PathReplayMismatch => "path replay mismatch",
            RejectReason::EmbeddedQuiverMismatch => "embedded quiver mismatch",
            RejectReason::InvalidCoveringPair => "invalid covering pair",
            RejectReason::LeafPredicateFailed => "leaf predicate failed",
            RejectReason::StopPredicateMismatch => "stop predicate mismatch",
            RejectReason::UnknownForm => "unknown form",
            RejectReason::BadStructure => "bad structure",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyOutcome {
    Accept,
    Reject { reason: RejectReason, node: usize },
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyOutcome::Accept => write!(f, "accept"),
            VerifyOutcome::Reject { reason, node } => {
                write!(f, "reject at node {node}: {reason}")
            }
        }
    }
}

/// Checks a certificate against an empty knowledge base (any `known` leaf
/// is rejected).
pub fn verify_certificate(cert: &BanffCertificate) -> VerifyOutcome {
    verify_certificate_with_kb(cert, &BTreeSet::new())
}

/// Checks a certificate, accepting `known` leaves whose canonical form is
/// in `kb`.
pub fn verify_certificate_with_kb(
    cert: &BanffCertificate,
    kb: &BTreeSet<Vec<u8>>,
) -> VerifyOutcome {
    if cert.kind == CertKind::Deleting
        && (cert.stop != StopPredicate::Acyclic || !cert.root.frozen_vertices().is_empty())
    {
        return VerifyOutcome::Reject { reason: RejectReason::BadStructure, node: 0 };
    }
    let mut id = 0usize;
    match check_node(&cert.root, &cert.tree, cert.stop, cert.kind, kb, &mut id) {
        Ok(()) => VerifyOutcome::Accept,
        Err((reason, node)) => VerifyOutcome::Reject { reason, node },
    }
}

fn check_node(
    state: &IceQuiver,
    node: &BanffNode,
    stop: StopPredicate,
    kind: CertKind,
    kb: &BTreeSet<Vec<u8>>,
    id: &mut usize,
) -> Result<(), (RejectReason, usize)> {
    let my_id = *id;
    *id += 1;
    let mut work = state.clone();
    for &k in node.path() {
        work = work.mutate(k).map_err(|_| (RejectReason::PathReplayMismatch, my_id))?;
    }
    if &work != node.quiver() {
        return Err((RejectReason::EmbeddedQuiverMismatch, my_id));
    }
    match node {
        BanffNode::Leaf { predicate, quiver, .. } => {
            match predicate {
                LeafPredicate::Acyclic => {
                    if stop != StopPredicate::Acyclic {
                        return Err((RejectReason::StopPredicateMismatch, my_id));
                    }
                    if !peel_acyclic(quiver) {
                        return Err((RejectReason::LeafPredicateFailed, my_id));
                    }
                }
                LeafPredicate::Isolated => {
                    // Isolated is admissible under either stop predicate:
                    // it implies acyclic.
                    if !no_mutable_arrows(quiver) {
                        return Err((RejectReason::LeafPredicateFailed, my_id));
                    }
                }
                LeafPredicate::Known => {
                    if kind != CertKind::Deleting {
                        return Err((RejectReason::StopPredicateMismatch, my_id));
                    }
                    if !kb.contains(&quiver.canonical_form()) {
                        return Err((RejectReason::UnknownForm, my_id));
                    }
                }
            }
            Ok(())
        }
        BanffNode::Branch { pair, quiver, children, .. } => {
            if !is_covering_pair(quiver, *pair) {
                return Err((RejectReason::InvalidCoveringPair, my_id));
            }
            let (left_state, right_state) = match kind {
                CertKind::Freezing => (
                    quiver
                        .freeze(&[pair.source])
                        .map_err(|_| (RejectReason::InvalidCoveringPair, my_id))?,
                    quiver
                        .freeze(&[pair.target])
                        .map_err(|_| (RejectReason::InvalidCoveringPair, my_id))?,
                ),
                CertKind::Deleting => (
                    quiver.delete_vertices(&[pair.source]).0,
                    quiver.delete_vertices(&[pair.target]).0,
                ),
            };
            check_node(&left_state, &children[0], stop, kind, kb, id)?;
            check_node(&right_state, &children[1], stop, kind, kb, id)
        }
    }
}

// Acyclicity of the mutable part by repeatedly removing sources.
fn peel_acyclic(q: &IceQuiver) -> bool {
    let mv = q.mutable_vertices();
    let mut indeg: Vec<usize> = mv
        .iter()
        .map(|&v| mv.iter().filter(|&&u| q.entry(u, v) > 0).count())
        .collect();
    let mut alive: Vec<bool> = alloc::vec![true; mv.len()];
    let mut removed = 0usize;
    loop {
        let Some(i) = (0..mv.len()).find(|&i| alive[i] && indeg[i] == 0) else {
            break;
        };
        alive[i] = false;
        removed += 1;
        for (j, &w) in mv.iter().enumerate() {
            if alive[j] && q.entry(mv[i], w) > 0 {
                indeg[j] -= 1;
            }
        }
    }
    removed == mv.len()
}

fn no_mutable_arrows(q: &IceQuiver) -> bool {
    let mv = q.mutable_vertices();
    mv.iter().all(|&a| mv.iter().all(|&b| q.entry(a, b) == 0))
}

// Walk over arrows between mutable vertices only.
fn reaches(q: &IceQuiver, from: usize, to: usize) -> bool {
    if from == to {
        return true;
    }
    let mut seen = alloc::vec![false; q.vertex_count()];
    seen[from] = true;
    let mut queue = alloc::vec![from];
    while let Some(v) = queue.pop() {
        for w in 0..q.vertex_count() {
            if q.entry(v, w) > 0 && q.is_mutable(w) && !seen[w] {
                if w == to {
                    return true;
                }
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    false
}

fn lies_on_cycle(q: &IceQuiver, v: usize) -> bool {
    (0..q.vertex_count())
        .any(|w| q.entry(v, w) > 0 && q.is_mutable(w) && reaches(q, w, v))
}

// Re-derives the covering-pair condition from its definition: an arrow
// between mutable vertices such that it is not the case that the source is
// reachable from a cycle and the target reaches a cycle.
fn is_covering_pair(q: &IceQuiver, pair: CoveringPair) -> bool {
    let n = q.vertex_count();
    let CoveringPair { source, target } = pair;
    if source >= n || target >= n || !q.is_mutable(source) || !q.is_mutable(target) {
        return false;
    }
    if q.entry(source, target) <= 0 {
        return false;
    }
    let cycle_vertices: Vec<usize> = (0..n)
        .filter(|&v| q.is_mutable(v) && lies_on_cycle(q, v))
        .collect();
    let source_from_cycle = cycle_vertices.iter().any(|&c| reaches(q, c, source));
    let target_to_cycle = cycle_vertices.iter().any(|&c| reaches(q, target, c));
    !(source_from_cycle && target_to_cycle)
}
