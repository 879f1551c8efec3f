//! Ice quivers and the operations the rest of the crate is built on:
//! mutation, acyclicity, structural classification, covering pairs,
//! freezing/deletion, exchange-matrix rank, and canonical forms.
//!
//! An ice quiver is a finite directed multigraph without loops or 2-cycles,
//! together with a partition of its vertices into *mutable* and *frozen*
//! ones. Arrows are stored as signed net counts: `q.entry(i, j) > 0` means
//! that many arrows from `i` to `j`. Skew-symmetry of the count matrix is a
//! structural invariant, which is why 2-cycles are unrepresentable.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rank::integer_rank;

/// Errors produced by quiver construction and mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    /// The entry matrix was not square with one row per vertex.
    NotSquare { rows: usize, row: usize, len: usize },
    /// `Q[i][j] != -Q[j][i]`.
    NotSkewSymmetric { i: usize, j: usize },
    /// A nonzero diagonal entry, i.e. a loop at `vertex`.
    LoopArrow { vertex: usize },
    /// A vertex index at or beyond the vertex count.
    VertexOutOfRange { vertex: usize, n: usize },
    /// The operation requires `vertex` to be mutable, but it is frozen.
    NotMutable { vertex: usize },
    /// A vertex relabeling that is not a bijection.
    BadPermutation,
    /// An arrow count left the machine-word range during mutation.
    Overflow,
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::NotSquare { rows, row, len } => write!(
                f,
                "matrix with {rows} rows has row {row} of length {len}"
            ),
            QuiverError::NotSkewSymmetric { i, j } => {
                write!(f, "entries ({i},{j}) and ({j},{i}) are not skew-symmetric")
            }
            QuiverError::LoopArrow { vertex } => write!(f, "loop arrow at vertex {vertex}"),
            QuiverError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            QuiverError::NotMutable { vertex } => write!(f, "vertex {vertex} is frozen"),
            QuiverError::BadPermutation => write!(f, "relabeling is not a bijection"),
            QuiverError::Overflow => write!(f, "arrow multiplicity overflowed machine word"),
        }
    }
}

impl core::error::Error for QuiverError {}

/// A covering pair: an arrow `source -> target` between mutable vertices
/// that lies on no bi-infinite path of the mutable subquiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoveringPair {
    pub source: usize,
    pub target: usize,
}

/// Structural flags of the mutable subquiver. The implications
/// `isolated => a_type => finite_type => tree_type => acyclic` hold for
/// every value this crate produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralClass {
    /// No arrows at all between mutable vertices.
    pub isolated: bool,
    /// Underlying graph is a disjoint union of simple paths (any
    /// orientation).
    pub a_type: bool,
    /// Underlying graph is a disjoint union of ADE Dynkin diagrams (any
    /// orientation).
    pub finite_type: bool,
    /// Underlying graph is a forest and every arrow is simple.
    pub tree_type: bool,
    /// No directed cycles.
    pub acyclic: bool,
}

/// The exchange matrix of a quiver: one row per mutable vertex, one column
/// per vertex, entries copied from the arrow-count matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    /// Mutable vertex index associated with each row, ascending.
    pub row_vertices: Vec<usize>,
    /// Number of columns (= vertex count).
    pub cols: usize,
    /// Row-major entries, `row_vertices.len() * cols` of them.
    pub entries: Vec<i64>,
}

/// An ice quiver on `n` vertices indexed `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IceQuiver {
    n: usize,
    frozen: BTreeSet<usize>,
    /// Row-major `n x n` signed arrow counts.
    m: Vec<i64>,
}

impl IceQuiver {
    /// Builds a quiver from explicit matrix rows and a list of frozen
    /// vertices, validating skew-symmetry and the absence of loops.
    pub fn new(rows: &[Vec<i64>], frozen: &[usize]) -> Result<Self, QuiverError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuiverError::NotSquare { rows: n, row: i, len: row.len() });
            }
        }
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(QuiverError::LoopArrow { vertex: i });
            }
            for j in 0..n {
                if rows[i][j] != -rows[j][i] {
                    return Err(QuiverError::NotSkewSymmetric { i, j });
                }
                m[i * n + j] = rows[i][j];
            }
        }
        let mut fr = BTreeSet::new();
        for &v in frozen {
            if v >= n {
                return Err(QuiverError::VertexOutOfRange { vertex: v, n });
            }
            fr.insert(v);
        }
        Ok(IceQuiver { n, frozen: fr, m })
    }

    /// Builds a quiver from a list of arrows `(from, to, count)`; counts
    /// accumulate, so an arrow and its reverse cancel.
    pub fn from_arrows(
        n: usize,
        arrows: &[(usize, usize, i64)],
        frozen: &[usize],
    ) -> Result<Self, QuiverError> {
        let mut m = vec![0i64; n * n];
        for &(a, b, c) in arrows {
            if a >= n {
                return Err(QuiverError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(QuiverError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(QuiverError::LoopArrow { vertex: a });
            }
            m[a * n + b] = m[a * n + b].checked_add(c).ok_or(QuiverError::Overflow)?;
            m[b * n + a] = m[b * n + a].checked_sub(c).ok_or(QuiverError::Overflow)?;
        }
        let mut fr = BTreeSet::new();
        for &v in frozen {
            if v >= n {
                return Err(QuiverError::VertexOutOfRange { vertex: v, n });
            }
            fr.insert(v);
        }
        Ok(IceQuiver { n, frozen: fr, m })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Signed arrow count from `i` to `j`. Panics on out-of-range indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!(i < self.n && j < self.n, "vertex index out of range");
        self.m[i * self.n + j]
    }

    /// The matrix as rows, for callers that want to serialize it.
    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.m[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        assert!(v < self.n, "vertex index out of range");
        self.frozen.contains(&v)
    }

    pub fn is_mutable(&self, v: usize) -> bool {
        !self.is_frozen(v)
    }

    /// Frozen vertices, ascending.
    pub fn frozen_vertices(&self) -> Vec<usize> {
        self.frozen.iter().copied().collect()
    }

    /// Mutable vertices, ascending.
    pub fn mutable_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|v| !self.frozen.contains(v)).collect()
    }

    pub fn mutable_count(&self) -> usize {
        self.n - self.frozen.len()
    }

    /// True when no vertex is mutable, so the quiver carries a rank-zero
    /// cluster structure (nothing can be mutated).
    pub fn is_trivial(&self) -> bool {
        self.mutable_count() == 0
    }

    /// Mutation at a mutable vertex `k`: entries in row or column `k`
    /// negate, every other entry `Q[i][j]` gains
    /// `(|Q[i][k]| Q[k][j] + Q[i][k] |Q[k][j]|) / 2`. The frozen set is
    /// unchanged. Mutating twice at the same vertex is the identity.
    pub fn mutate(&self, k: usize) -> Result<Self, QuiverError> {
        if k >= self.n {
            return Err(QuiverError::VertexOutOfRange { vertex: k, n: self.n });
        }
        if self.frozen.contains(&k) {
            return Err(QuiverError::NotMutable { vertex: k });
        }
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = self.m[i * n + j];
                out[i * n + j] = if i == k || j == k {
                    v.checked_neg().ok_or(QuiverError::Overflow)?
                } else {
                    let a = self.m[i * n + k] as i128;
                    let b = self.m[k * n + j] as i128;
                    let w = v as i128 + (a.abs() * b + a * b.abs()) / 2;
                    i64::try_from(w).map_err(|_| QuiverError::Overflow)?
                };
            }
        }
        Ok(IceQuiver { n, frozen: self.frozen.clone(), m: out })
    }

    /// Applies a mutation path left to right.
    pub fn mutate_path(&self, path: &[usize]) -> Result<Self, QuiverError> {
        let mut q = self.clone();
        for &k in path {
            q = q.mutate(k)?;
        }
        Ok(q)
    }

    /// Freezes the given mutable vertices; the matrix is unchanged.
    pub fn freeze(&self, s: &[usize]) -> Result<Self, QuiverError> {
        let mut frozen = self.frozen.clone();
        for &v in s {
            if v >= self.n {
                return Err(QuiverError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if self.frozen.contains(&v) {
                return Err(QuiverError::NotMutable { vertex: v });
            }
            frozen.insert(v);
        }
        Ok(IceQuiver { n: self.n, frozen, m: self.m.clone() })
    }

    /// Induced subquiver on the complement of `s`. Also returns the index
    /// map: `map[new] = old`. Out-of-range entries of `s` are ignored.
    pub fn delete_vertices(&self, s: &[usize]) -> (Self, Vec<usize>) {
        let drop: BTreeSet<usize> = s.iter().copied().filter(|&v| v < self.n).collect();
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        let n = keep.len();
        let mut m = vec![0i64; n * n];
        for (i, &oi) in keep.iter().enumerate() {
            for (j, &oj) in keep.iter().enumerate() {
                m[i * n + j] = self.m[oi * self.n + oj];
            }
        }
        let frozen = keep
            .iter()
            .enumerate()
            .filter(|(_, &o)| self.frozen.contains(&o))
            .map(|(i, _)| i)
            .collect();
        (IceQuiver { n, frozen, m }, keep)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. Frozen flags move
    /// with their vertices.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, QuiverError> {
        let n = self.n;
        if perm.len() != n {
            return Err(QuiverError::BadPermutation);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(QuiverError::BadPermutation);
            }
            seen[p] = true;
        }
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                m[perm[i] * n + perm[j]] = self.m[i * n + j];
            }
        }
        let frozen = self.frozen.iter().map(|&v| perm[v]).collect();
        Ok(IceQuiver { n, frozen, m })
    }

    /// Directed adjacency lists of the mutable subquiver, in original
    /// vertex indices.
    fn mutable_out_edges(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for i in 0..self.n {
            if self.frozen.contains(&i) {
                continue;
            }
            for j in 0..self.n {
                if !self.frozen.contains(&j) && self.m[i * self.n + j] > 0 {
                    adj[i].push(j);
                }
            }
        }
        adj
    }

    /// True when the mutable subquiver has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let adj = self.mutable_out_edges();
        // Iterative three-color DFS.
        let mut color = vec![0u8; self.n]; // 0 new, 1 on stack, 2 done
        for start in 0..self.n {
            if color[start] != 0 || self.frozen.contains(&start) {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            color[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let w = adj[v][*next];
                    *next += 1;
                    match color[w] {
                        0 => {
                            color[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => return false,
                        _ => {}
                    }
                } else {
                    color[v] = 2;
                    stack.pop();
                }
            }
        }
        true
    }

    /// Structural flags of the mutable subquiver; see [`StructuralClass`].
    pub fn structural_class(&self) -> StructuralClass {
        let mv = self.mutable_vertexes_dense();
        let k = mv.len();
        // Undirected simple adjacency on dense mutable indices, plus a
        // simple-multiplicity check.
        let mut simple = true;
        let mut und = vec![Vec::new(); k];
        let mut arrow_count = 0usize;
        for a in 0..k {
            for b in a + 1..k {
                let e = self.m[mv[a] * self.n + mv[b]];
                if e != 0 {
                    arrow_count += 1;
                    if e.abs() != 1 {
                        simple = false;
                    }
                    und[a].push(b);
                    und[b].push(a);
                }
            }
        }
        let isolated = arrow_count == 0;
        let acyclic = self.is_acyclic();
        let forest = Self::is_forest(&und);
        let tree_type = simple && forest;
        let mut a_type = tree_type;
        let mut finite_type = tree_type;
        if tree_type {
            a_type = und.iter().all(|nb| nb.len() <= 2);
            if !a_type {
                finite_type = Self::forest_is_ade(&und);
            }
        }
        StructuralClass { isolated, a_type, finite_type, tree_type, acyclic }
    }

    fn mutable_vertexes_dense(&self) -> Vec<usize> {
        (0..self.n).filter(|v| !self.frozen.contains(v)).collect()
    }

    /// Whether an undirected graph (adjacency lists, simple) is a forest.
    fn is_forest(und: &[Vec<usize>]) -> bool {
        let k = und.len();
        let mut seen = vec![false; k];
        for start in 0..k {
            if seen[start] {
                continue;
            }
            // BFS counting vertices and edge endpoints in this component.
            let mut queue = vec![start];
            seen[start] = true;
            let mut verts = 0usize;
            let mut ends = 0usize;
            while let Some(v) = queue.pop() {
                verts += 1;
                ends += und[v].len();
                for &w in &und[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            if ends / 2 != verts - 1 {
                return false;
            }
        }
        true
    }

    /// Whether every component of a forest is an ADE diagram. Components
    /// with max degree <= 2 are paths (type A); one degree-3 vertex with
    /// sorted leg lengths (1,1,k), (1,2,2), (1,2,3) or (1,2,4) gives types
    /// D and E; anything else is not finite type.
    fn forest_is_ade(und: &[Vec<usize>]) -> bool {
        let k = und.len();
        let mut seen = vec![false; k];
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &w in &und[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            let branch: Vec<usize> =
                comp.iter().copied().filter(|&v| und[v].len() >= 3).collect();
            match branch.len() {
                0 => {} // a path: type A
                1 => {
                    let c = branch[0];
                    if und[c].len() != 3 {
                        return false;
                    }
                    let mut legs: Vec<usize> = und[c]
                        .iter()
                        .map(|&next| {
                            // Walk away from the branch vertex to the leaf.
                            let mut prev = c;
                            let mut cur = next;
                            let mut len = 1usize;
                            loop {
                                let mut step = None;
                                for &w in &und[cur] {
                                    if w != prev {
                                        step = Some(w);
                                    }
                                }
                                match step {
                                    Some(w) => {
                                        prev = cur;
                                        cur = w;
                                        len += 1;
                                    }
                                    None => break,
                                }
                            }
                            len
                        })
                        .collect();
                    legs.sort_unstable();
                    let ok = matches!(
                        (legs[0], legs[1], legs[2]),
                        (1, 1, _) | (1, 2, 2) | (1, 2, 3) | (1, 2, 4)
                    );
                    if !ok {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    /// Vertices of the mutable subquiver lying on a directed cycle, as a
    /// membership mask over original indices. These are exactly the
    /// vertices of strongly connected components with at least two members
    /// (loops do not exist).
    fn cycle_vertices(&self) -> Vec<bool> {
        let adj = self.mutable_out_edges();
        let n = self.n;
        // Kosaraju: first pass computes finish order.
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.frozen.contains(&start) {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            seen[start] = true;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let w = adj[v][*next];
                    *next += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    order.push(v);
                    stack.pop();
                }
            }
        }
        let mut radj = vec![Vec::new(); n];
        for v in 0..n {
            for &w in &adj[v] {
                radj[w].push(v);
            }
        }
        // Second pass over the reverse graph in reverse finish order.
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0usize;
        for &start in order.iter().rev() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = vec![start];
            comp[start] = ncomp;
            let mut size = 0usize;
            let mut members = Vec::new();
            while let Some(v) = queue.pop() {
                size += 1;
                members.push(v);
                for &w in &radj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = ncomp;
                        queue.push(w);
                    }
                }
            }
            ncomp += 1;
            if size >= 2 {
                for v in members {
                    seen[v] = true; // reuse as "on cycle" mark
                }
                continue;
            }
            seen[members[0]] = false;
        }
        seen
    }

    /// All covering pairs of the quiver, ascending by (source, target).
    ///
    /// An arrow `a -> b` between mutable vertices is a covering pair unless
    /// `a` is reachable from a directed cycle of the mutable subquiver and
    /// `b` can reach one (reachability includes the empty path).
    pub fn covering_pairs(&self) -> Vec<CoveringPair> {
        let adj = self.mutable_out_edges();
        let on_cycle = self.cycle_vertices();
        let n = self.n;
        // Forward reachability from cycle vertices.
        let mut from_cycle = on_cycle.clone();
        let mut queue: Vec<usize> = (0..n).filter(|&v| from_cycle[v]).collect();
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if !from_cycle[w] {
                    from_cycle[w] = true;
                    queue.push(w);
                }
            }
        }
        // Backward reachability to cycle vertices.
        let mut to_cycle = on_cycle;
        let mut ready: Vec<usize> = (0..n).filter(|&v| to_cycle[v]).collect();
        let mut radj = vec![Vec::new(); n];
        for v in 0..n {
            for &w in &adj[v] {
                radj[w].push(v);
            }
        }
        while let Some(v) = ready.pop() {
            for &w in &radj[v] {
                if !to_cycle[w] {
                    to_cycle[w] = true;
                    ready.push(w);
                }
            }
        }
        let mut pairs = Vec::new();
        for a in 0..n {
            if self.frozen.contains(&a) {
                continue;
            }
            for b in 0..n {
                if self.frozen.contains(&b) || self.m[a * n + b] <= 0 {
                    continue;
                }
                if !(from_cycle[a] && to_cycle[b]) {
                    pairs.push(CoveringPair { source: a, target: b });
                }
            }
        }
        pairs
    }

    /// The exchange matrix: rows indexed by mutable vertices, columns by
    /// all vertices.
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let row_vertices = self.mutable_vertices();
        let mut entries = Vec::with_capacity(row_vertices.len() * self.n);
        for &v in &row_vertices {
            entries.extend_from_slice(&self.m[v * self.n..(v + 1) * self.n]);
        }
        ExchangeMatrix { row_vertices, cols: self.n, entries }
    }

    /// Rank over the rationals of the exchange matrix, via exact
    /// fraction-free elimination.
    pub fn exchange_rank(&self) -> usize {
        let ex = self.exchange_matrix();
        integer_rank(ex.row_vertices.len(), ex.cols, &ex.entries)
    }

    /// True iff the exchange matrix has full rank, i.e. rank equals the
    /// number of mutable vertices.
    pub fn is_full_rank(&self) -> bool {
        self.exchange_rank() == self.mutable_count()
    }

    /// A byte string invariant under vertex relabelings that preserve the
    /// frozen/mutable partition: two quivers get equal forms iff they are
    /// isomorphic as ice quivers.
    ///
    /// The form encodes the vertex count, the mutable count, and the
    /// lexicographically minimal row-major matrix over all orderings that
    /// list mutable vertices first. The search is a refinement-pruned DFS:
    /// fixing a vertex at position `p` sorts every later block by its row,
    /// which pins all of row `p` and lets prefixes be compared early.
    pub fn canonical_form(&self) -> Vec<u8> {
        let n = self.n;
        let mutable = self.mutable_vertexes_dense();
        let frozen: Vec<usize> = self.frozen.iter().copied().collect();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        if !mutable.is_empty() {
            cells.push(mutable);
        }
        if !frozen.is_empty() {
            cells.push(frozen);
        }
        let mut best: Option<Vec<i64>> = None;
        let mut assigned = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n * n);
        self.canon_dfs(&mut assigned, &mut rows, &cells, &mut best);
        let matrix = best.unwrap_or_default();
        let mut out = Vec::with_capacity(8 + 8 * matrix.len());
        out.extend_from_slice(&(n as u32).to_be_bytes());
        out.extend_from_slice(&(self.mutable_count() as u32).to_be_bytes());
        for e in matrix {
            // Flip the sign bit so byte order matches numeric order.
            out.extend_from_slice(&((e as u64) ^ (1u64 << 63)).to_be_bytes());
        }
        out
    }

    fn canon_dfs(
        &self,
        assigned: &mut Vec<usize>,
        rows: &mut Vec<i64>,
        cells: &[Vec<usize>],
        best: &mut Option<Vec<i64>>,
    ) {
        let n = self.n;
        let p = assigned.len();
        if p == n {
            let better = match best {
                Some(b) => rows[..] < b[..],
                None => true,
            };
            if better {
                *best = Some(rows.clone());
            }
            return;
        }
        let ci = cells.iter().position(|c| !c.is_empty()).expect("cells exhausted early");
        let mut tried: Vec<usize> = Vec::new();
        for &v in cells[ci].iter() {
            // Skip candidates twin to one already tried: swapping the two
            // is an automorphism, so the subtrees coincide.
            let twin = tried.iter().any(|&w| {
                self.m[v * n + w] == 0
                    && (0..n).all(|x| x == v || x == w || self.m[v * n + x] == self.m[w * n + x])
            });
            if twin {
                continue;
            }
            tried.push(v);
            // Refine: remove v, then order every remaining cell by v's row.
            let mut new_cells: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for (di, cell) in cells.iter().enumerate() {
                let members: Vec<usize> = if di == ci {
                    cell.iter().copied().filter(|&w| w != v).collect()
                } else {
                    cell.clone()
                };
                if members.is_empty() {
                    continue;
                }
                let mut sorted = members;
                sorted.sort_by_key(|&w| (self.m[v * n + w], w));
                let mut start = 0;
                for idx in 1..=sorted.len() {
                    if idx == sorted.len()
                        || self.m[v * n + sorted[idx]] != self.m[v * n + sorted[start]]
                    {
                        new_cells.push(sorted[start..idx].to_vec());
                        start = idx;
                    }
                }
            }
            // Row p is now fully determined: earlier columns from assigned
            // vertices, then 0 at p, then the refined blocks in order.
            let row_start = rows.len();
            for &u in assigned.iter() {
                rows.push(self.m[v * n + u]);
            }
            rows.push(0);
            for cell in &new_cells {
                for &w in cell {
                    rows.push(self.m[v * n + w]);
                }
            }
            debug_assert_eq!(rows.len(), (p + 1) * n);
            let prune = match best {
                Some(b) => rows[..] > b[..rows.len()],
                None => false,
            };
            if !prune {
                assigned.push(v);
                self.canon_dfs(assigned, rows, &new_cells, best);
                assigned.pop();
            }
            rows.truncate(row_start);
        }
    }
}
