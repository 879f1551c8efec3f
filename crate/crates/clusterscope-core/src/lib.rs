//! Exact combinatorics and algebra for skew-symmetric cluster algebras.
//!
//! The crate is organised around ice quivers (directed multigraphs without
//! loops or 2-cycles, with a frozen/mutable vertex partition) and the seeds
//! they carry:
//!
//! - [`quiver`]: the [`IceQuiver`] type, mutation, freezing/deletion,
//!   structural classification, exchange-matrix rank, covering pairs and
//!   canonical forms.
//! - [`laurent`]: exact Laurent polynomials over big integers, with the
//!   exact division that cluster exchanges require.
//! - [`seed`]: labeled seeds (quiver + cluster), seed mutation and
//!   mutation-class enumeration of cluster variables.
//! - [`explore`]: budgeted mutation-class scans and searches over them.
//! - [`banff`]: the recursive acyclic-cover search, producing replayable
//!   certificates or typed failure reports.
//! - [`verify`]: an independent checker for those certificates.
//! - [`surface`]: marked-surface descriptors, the tagged-arc rank formula
//!   and the local-acyclicity classifier for surface cluster algebras.
//! - [`checks`]: acyclic presentations, the isolated-seed Jacobian rank
//!   identity, degenerate homomorphisms on pairless classes, exact
//!   rational evaluation along mutation paths and kernel-cycle witnesses.
//! - [`catalog`]: the named example quivers used across the crate, with
//!   their surface descriptors where applicable.
//!
//! Vertex indices are 0-based throughout the API. Text formats and printed
//! reports (which live in the companion CLI crate) use 1-based numbering.
//!
//! Everything is exact: integer matrices, big-integer coefficients, big
//! rationals. No floating point.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod banff;
pub mod catalog;
pub mod checks;
pub mod explore;
pub mod laurent;
pub mod quiver;
pub mod seed;
pub mod surface;
pub mod verify;

mod rank;

pub use banff::{
    run_banff, run_banff_reduced, BanffCertificate, BanffError, BanffNode, Budgets, CertKind,
    FailureReport, LeafPredicate, StopPredicate, Strategy,
};
pub use catalog::{catalog_names, catalog_quiver, catalog_surface, CatalogError};
pub use checks::{
    acyclic_presentation, build_degenerate_hom, evaluate_cluster_point, isolated_jacobian_check,
    kernel_path_witness, CheckError, DegenerateHom, HomOutcome, JacobianOutcome, KernelWitness,
    PointAssignment, Presentation, Relation,
};
pub use explore::{
    find_acyclic_seed, find_covering_pair_seed, mutation_class, mutation_class_threads,
    MutationClass, ScanOrder, SearchOutcome, SearchStats, SearchVerdict,
};
pub use laurent::{LaurentError, LaurentPoly, RationalFn};
pub use quiver::{CoveringPair, ExchangeMatrix, IceQuiver, QuiverError, StructuralClass};
pub use seed::{
    enumerate_cluster_variables, laurent_check, markov_invariant_check, mutate_seed,
    ClusterVariables, Seed, SeedError,
};
pub use surface::{
    classify_surface, surface_rank, validate_surface, SurfaceClassification, SurfaceComponent,
    SurfaceDescriptor, SurfaceError, SurfaceViolation, TheoremTag, Verdict,
};
pub use verify::{verify_certificate, verify_certificate_with_kb, RejectReason, VerifyOutcome};
