//! Seeds: a quiver together with one Laurent-polynomial cluster entry per
//! vertex, mutated by the exchange rule. Every new cluster variable is
//! computed with exact division; a failed division is reported as a
//! violation rather than papered over, since it can only mean a bug.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::laurent::{LaurentError, LaurentPoly, RationalFn};
use crate::quiver::{IceQuiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedError {
    Quiver(QuiverError),
    /// Exact division failed while mutating at `vertex`. New cluster
    /// variables are always Laurent in the initial ones, so this signals a
    /// defect in the caller-supplied seed or in the arithmetic, never a
    /// legitimate outcome.
    LaurentViolation { vertex: usize },
    /// The operation requires a specific quiver shape (e.g. the Markov
    /// quiver) and the seed does not have it.
    WrongShape,
}

impl fmt::Display for SeedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedError::Quiver(e) => write!(f, "{e}"),
            SeedError::LaurentViolation { vertex } => {
                write!(f, "exchange at vertex {vertex} produced a non-Laurent value")
            }
            SeedError::WrongShape => write!(f, "seed quiver has the wrong shape"),
        }
    }
}

impl core::error::Error for SeedError {}

impl From<QuiverError> for SeedError {
    fn from(e: QuiverError) -> Self {
        SeedError::Quiver(e)
    }
}

/// A seed: quiver, cluster, and the mutation path that produced it from
/// the initial seed (`cluster[i] = x{i+1}` everywhere).
///
/// Frozen cluster entries always equal their initial variables; replaying
/// `path` from the initial seed reproduces the quiver and cluster exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Seed {
    quiver: IceQuiver,
    cluster: Vec<LaurentPoly>,
    path: Vec<usize>,
}

impl Seed {
    /// The initial seed on a quiver: entry `i` is the variable `x{i+1}`.
    pub fn initial(quiver: IceQuiver) -> Self {
        let n = quiver.vertex_count();
        let cluster = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        Seed { quiver, cluster, path: Vec::new() }
    }

    /// Replays a mutation path from the initial seed of `quiver`.
    pub fn replay(quiver: IceQuiver, path: &[usize]) -> Result<Self, SeedError> {
        let mut s = Seed::initial(quiver);
        for &k in path {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    // Assembles a seed from raw parts without validation. Internal
    // plumbing for walks that freeze vertices mid-flight, where frozen
    // entries keep their current values instead of initial variables.
    pub(crate) fn from_parts(quiver: IceQuiver, cluster: Vec<LaurentPoly>, path: Vec<usize>) -> Self {
        Seed { quiver, cluster, path }
    }

    pub fn quiver(&self) -> &IceQuiver {
        &self.quiver
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// The two exchange products at `k` on the current quiver: the product
    /// of `a_j^{Q[k][j]}` over outgoing arrows and over incoming ones.
    pub fn exchange_products(&self, k: usize) -> Result<(LaurentPoly, LaurentPoly), SeedError> {
        let n = self.quiver.vertex_count();
        if k >= n {
            return Err(QuiverError::VertexOutOfRange { vertex: k, n }.into());
        }
        let mut plus = LaurentPoly::one(n);
        let mut minus = LaurentPoly::one(n);
        for j in 0..n {
            let e = self.quiver.entry(k, j);
            if e == 0 {
                continue;
            }
            let mag: u32 = e
                .unsigned_abs()
                .try_into()
                .map_err(|_| SeedError::Quiver(QuiverError::Overflow))?;
            let powed = self.cluster[j].pow(mag);
            if e > 0 {
                plus = plus.multiply(&powed).expect("same nvars");
            } else {
                minus = minus.multiply(&powed).expect("same nvars");
            }
        }
        Ok((plus, minus))
    }

    /// Seed mutation at a mutable vertex: the quiver mutates, entry `k`
    /// becomes `(plus + minus) / a_k` by exact division, the path grows.
    pub fn mutate(&self, k: usize) -> Result<Seed, SeedError> {
        let quiver = self.quiver.mutate(k)?;
        let (plus, minus) = self.exchange_products(k)?;
        let sum = plus.add(&minus).expect("same nvars");
        let new_var = match sum.exact_div(&self.cluster[k]) {
            Ok(v) => v,
            Err(LaurentError::NotDivisible) => {
                return Err(SeedError::LaurentViolation { vertex: k })
            }
            Err(_) => return Err(SeedError::LaurentViolation { vertex: k }),
        };
        let mut cluster = self.cluster.clone();
        cluster[k] = new_var;
        let mut path = self.path.clone();
        path.push(k);
        Ok(Seed { quiver, cluster, path })
    }

    /// Deduplication key: canonical quiver form plus the cluster as a
    /// multiset, which identifies seeds up to relabeling.
    fn dedup_key(&self) -> (Vec<u8>, Vec<LaurentPoly>) {
        let mut sorted = self.cluster.clone();
        sorted.sort();
        (self.quiver.canonical_form(), sorted)
    }
}

/// Free-function form of [`Seed::mutate`].
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed, SeedError> {
    s.mutate(k)
}

/// Result of a cluster-variable enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterVariables {
    /// Distinct cluster variables seen at mutable vertices, ascending.
    pub variables: Vec<LaurentPoly>,
    /// Whether the seed closure stabilized within the depth budget.
    pub complete: bool,
    /// Number of distinct seeds visited (up to relabeling).
    pub seeds_seen: usize,
}

/// Breadth-first closure of seeds up to `depth` mutations, deduplicated by
/// (canonical quiver form, cluster multiset). Returns every distinct
/// mutable cluster variable encountered. `complete` is true when the
/// closure stabilizes within the budget — including when the last frontier
/// only reaches already-visited seeds.
pub fn enumerate_cluster_variables(
    seed: &Seed,
    depth: usize,
) -> Result<ClusterVariables, SeedError> {
    let mut variables: BTreeSet<LaurentPoly> = BTreeSet::new();
    let record = |vars: &mut BTreeSet<LaurentPoly>, s: &Seed| {
        for v in s.quiver().mutable_vertices() {
            vars.insert(s.cluster()[v].clone());
        }
    };
    record(&mut variables, seed);
    let mut visited = BTreeSet::new();
    visited.insert(seed.dedup_key());
    let mut frontier = vec![seed.clone()];
    let mut level = 0usize;
    while level < depth && !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for k in s.quiver().mutable_vertices() {
                let t = s.mutate(k)?;
                if visited.insert(t.dedup_key()) {
                    record(&mut variables, &t);
                    next.push(t);
                }
            }
        }
        frontier = next;
        level += 1;
    }
    let complete = if frontier.is_empty() {
        true
    } else {
        // Budget reached with live seeds: closed iff one more round finds
        // nothing new.
        let mut closed = true;
        'outer: for s in &frontier {
            for k in s.quiver().mutable_vertices() {
                let t = s.mutate(k)?;
                if !visited.contains(&t.dedup_key()) {
                    closed = false;
                    break 'outer;
                }
            }
        }
        closed
    };
    Ok(ClusterVariables {
        variables: variables.into_iter().collect(),
        complete,
        seeds_seen: visited.len(),
    })
}

/// Explores every mutation path of length at most `depth` from `seed`,
/// deduplicating exact labeled states, and returns how many states were
/// checked. Any non-Laurent exchange aborts with the violation.
pub fn laurent_check(seed: &Seed, depth: usize) -> Result<usize, SeedError> {
    let mut visited: BTreeSet<(IceQuiver, Vec<LaurentPoly>)> = BTreeSet::new();
    visited.insert((seed.quiver().clone(), seed.cluster().to_vec()));
    let mut frontier = vec![seed.clone()];
    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for s in &frontier {
            for k in s.quiver().mutable_vertices() {
                let t = s.mutate(k)?;
                if visited.insert((t.quiver().clone(), t.cluster().to_vec())) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(visited.len())
}

/// Symbolically verifies that `(a^2 + b^2 + c^2) / (abc)` is unchanged by
/// each of the three mutations of a Markov-shaped seed (3 mutable
/// vertices, double arrows in a directed cycle). Equality of rational
/// functions is tested by cross-multiplication.
pub fn markov_invariant_check(seed: &Seed) -> Result<bool, SeedError> {
    let q = seed.quiver();
    let markov = IceQuiver::from_arrows(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)], &[])
        .expect("static quiver");
    if q.canonical_form() != markov.canonical_form() {
        return Err(SeedError::WrongShape);
    }
    let element = |cluster: &[LaurentPoly]| -> RationalFn {
        let squares = cluster[0]
            .pow(2)
            .add(&cluster[1].pow(2))
            .expect("same nvars")
            .add(&cluster[2].pow(2))
            .expect("same nvars");
        let product = cluster[0]
            .multiply(&cluster[1])
            .expect("same nvars")
            .multiply(&cluster[2])
            .expect("same nvars");
        RationalFn::new(squares, product).expect("cluster entries are nonzero")
    };
    let before = element(seed.cluster());
    for k in 0..3 {
        let after = element(seed.mutate(k)?.cluster());
        if before != after {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Groups equal cluster variables across a batch of seeds; used by callers
/// that need stable variable identities (reports, homomorphism checks).
pub fn collect_variables(seeds: &[Seed]) -> BTreeMap<LaurentPoly, Vec<(usize, usize)>> {
    let mut out: BTreeMap<LaurentPoly, Vec<(usize, usize)>> = BTreeMap::new();
    for (si, s) in seeds.iter().enumerate() {
        for v in s.quiver().mutable_vertices() {
            out.entry(s.cluster()[v].clone()).or_default().push((si, v));
        }
    }
    out
}
