//! Algebraic spot checks on seeds and their mutation classes:
//!
//! - generator-and-relation presentations of acyclic seeds,
//! - a rank identity between the relation Jacobian and the exchange
//!   matrix for isolated seeds, evaluated at the most degenerate point,
//! - the degenerate homomorphism that exists exactly when a mutation
//!   class has no covering pair, verified numerically to a depth,
//! - exact rational evaluation of clusters along mutation paths, and
//! - kernel cycles: directed cycles of zero-valued vertices that witness
//!   why a zero value cannot be local.
//!
//! Everything is exact; values are big rationals throughout.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::banff::Budgets;
use crate::explore::{find_covering_pair_seed, SearchVerdict};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::quiver::{CoveringPair, IceQuiver};
use crate::rank::rational_rank;
use crate::seed::{Seed, SeedError};

/// Exact rational values attached to the vertices of a quiver, in vertex
/// order. Operations that need nonzero frozen values enforce that
/// themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointAssignment {
    pub values: Vec<BigRational>,
}

impl PointAssignment {
    pub fn new(values: Vec<BigRational>) -> Self {
        PointAssignment { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        PointAssignment {
            values: values.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        }
    }

    pub fn ones(n: usize) -> Self {
        PointAssignment { values: alloc::vec![BigRational::one(); n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    /// Presentations require an acyclic mutable part.
    NotAcyclic,
    /// The Jacobian identity is about isolated seeds only.
    NotIsolated,
    /// An assignment does not have one value per vertex.
    WrongValueCount { expected: usize, got: usize },
    ZeroFrozenValue { vertex: usize },
    /// A mutation step would divide by a zero cluster value.
    DivisionByZero { step: usize, vertex: usize },
    /// A relation that the given values cannot satisfy.
    UnsatisfiedRelation { vertex: usize },
    Seed(SeedError),
    Laurent(LaurentError),
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::NotAcyclic => write!(f, "the mutable part of the quiver has a directed cycle"),
            CheckError::NotIsolated => write!(f, "the quiver has arrows between mutable vertices"),
            CheckError::WrongValueCount { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            CheckError::ZeroFrozenValue { vertex } => {
                write!(f, "frozen vertex {} carries the value 0", vertex + 1)
            }
            CheckError::DivisionByZero { step, vertex } => write!(
                f,
                "step {} mutates vertex {} whose value is 0",
                step + 1,
                vertex + 1
            ),
            CheckError::UnsatisfiedRelation { vertex } => write!(
                f,
                "no assignment satisfies the exchange relation at vertex {}",
                vertex + 1
            ),
            CheckError::Seed(e) => write!(f, "{e}"),
            CheckError::Laurent(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CheckError {}

impl From<SeedError> for CheckError {
    fn from(e: SeedError) -> Self {
        CheckError::Seed(e)
    }
}

impl From<LaurentError> for CheckError {
    fn from(e: LaurentError) -> Self {
        CheckError::Laurent(e)
    }
}

/// One defining relation `a_i a_i' = plus + minus`, with both sides kept
/// as exponent vectors over the vertex generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub vertex: usize,
    /// Exponent of each vertex's generator in the first monomial (read
    /// off the outgoing arrows).
    pub plus: Vec<i64>,
    /// Same for the second monomial (incoming arrows).
    pub minus: Vec<i64>,
}

impl Relation {
    /// Evaluates the two monomials over a concrete cluster.
    pub fn products(
        &self,
        cluster: &[LaurentPoly],
    ) -> Result<(LaurentPoly, LaurentPoly), LaurentError> {
        let product = |exps: &[i64]| -> Result<LaurentPoly, LaurentError> {
            let nvars = cluster.first().map_or(0, LaurentPoly::nvars);
            let mut acc = LaurentPoly::one(nvars);
            for (j, &e) in exps.iter().enumerate() {
                if e > 0 {
                    acc = acc.multiply(&cluster[j].pow(e as u32))?;
                }
            }
            Ok(acc)
        };
        Ok((product(&self.plus)?, product(&self.minus)?))
    }
}

/// Generators and relations of an acyclic seed: one generator per vertex
/// (frozen ones invertible), one primed generator and one relation per
/// mutable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub mutable: Vec<usize>,
    pub frozen: Vec<usize>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    fn generator_name(&self, vertex: usize) -> String {
        let mut s = String::from("a");
        s.push_str(&itoa_usize(vertex + 1));
        s
    }

    fn monomial_text(&self, exps: &[i64]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (j, &e) in exps.iter().enumerate() {
            if e > 0 {
                let mut t = self.generator_name(j);
                if e > 1 {
                    t.push('^');
                    t.push_str(&itoa_usize(e as usize));
                }
                parts.push(t);
            }
        }
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }
}

fn itoa_usize(mut v: usize) -> String {
    if v == 0 {
        return String::from("0");
    }
    let mut digits = Vec::new();
    while v > 0 {
        digits.push(b'0' + (v % 10) as u8);
        v /= 10;
    }
    digits.reverse();
    String::from_utf8(digits).expect("decimal digits")
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generators:")?;
        for &v in &self.mutable {
            write!(f, " {} {}'", self.generator_name(v), self.generator_name(v))?;
        }
        for &v in &self.frozen {
            write!(f, " {}^(+-1)", self.generator_name(v))?;
        }
        writeln!(f)?;
        for r in &self.relations {
            writeln!(
                f,
                "{}*{}' = {} + {}",
                self.generator_name(r.vertex),
                self.generator_name(r.vertex),
                self.monomial_text(&r.plus),
                self.monomial_text(&r.minus)
            )?;
        }
        Ok(())
    }
}

/// Reads the defining presentation off an acyclic seed: for each mutable
/// vertex `i` the relation `a_i a_i' = plus + minus`, where the monomials
/// collect the outgoing and incoming arrow multiplicities and empty
/// products are 1.
pub fn acyclic_presentation(s: &Seed) -> Result<Presentation, CheckError> {
    let q = s.quiver();
    if !q.is_acyclic() {
        return Err(CheckError::NotAcyclic);
    }
    let n = q.vertex_count();
    let mut relations = Vec::new();
    for i in q.mutable_vertices() {
        let mut plus = alloc::vec![0i64; n];
        let mut minus = alloc::vec![0i64; n];
        for j in 0..n {
            let e = q.entry(i, j);
            if e > 0 {
                plus[j] = e;
            } else if e < 0 {
                minus[j] = -e;
            }
        }
        relations.push(Relation { vertex: i, plus, minus });
    }
    Ok(Presentation {
        mutable: q.mutable_vertices(),
        frozen: q.frozen_vertices(),
        relations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobianOutcome {
    /// The relation Jacobian at the degenerate point has the same rank as
    /// the exchange matrix.
    Pass { rank: usize },
    Mismatch { jacobian_rank: usize, exchange_rank: usize },
    /// Some mutable vertex has no arrows at all, so its relation reads
    /// `a a' = 2` and no point with `a = 0` exists.
    Vacuous { vertex: usize },
}

fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// For an isolated seed (no arrows between mutable vertices), evaluates
/// the Jacobian of the defining relations at the point where every
/// mutable and primed generator vanishes and the frozen generators take
/// the given nonzero values. Mutable and primed columns vanish
/// identically; the frozen column `j` of row `i` is
/// `Q[i][j] * plus_i / value_j` with `plus_i` the value of the outgoing
/// monomial. Checks that this matrix has the same rank as the exchange
/// matrix.
pub fn isolated_jacobian_check(
    s: &Seed,
    frozen_values: &PointAssignment,
) -> Result<JacobianOutcome, CheckError> {
    let q = s.quiver();
    let n = q.vertex_count();
    if !q.structural_class().isolated {
        return Err(CheckError::NotIsolated);
    }
    if frozen_values.len() != n {
        return Err(CheckError::WrongValueCount { expected: n, got: frozen_values.len() });
    }
    let frozen = q.frozen_vertices();
    for &f in &frozen {
        if frozen_values.values[f].is_zero() {
            return Err(CheckError::ZeroFrozenValue { vertex: f });
        }
    }
    let mutable = q.mutable_vertices();
    for &i in &mutable {
        if (0..n).all(|j| q.entry(i, j) == 0) {
            return Ok(JacobianOutcome::Vacuous { vertex: i });
        }
    }
    let mut entries = Vec::with_capacity(mutable.len() * frozen.len());
    for &i in &mutable {
        let mut plus = BigRational::one();
        for j in 0..n {
            let e = q.entry(i, j);
            if e > 0 {
                plus *= rat_pow(&frozen_values.values[j], e);
            }
        }
        for &f in &frozen {
            let e = q.entry(i, f);
            let cell = if e == 0 {
                BigRational::zero()
            } else {
                BigRational::from_integer(e.into()) * &plus / &frozen_values.values[f]
            };
            entries.push(cell);
        }
    }
    let jacobian_rank = rational_rank(mutable.len(), frozen.len(), &entries);
    let exchange_rank = q.exchange_rank();
    if jacobian_rank == exchange_rank {
        Ok(JacobianOutcome::Pass { rank: jacobian_rank })
    } else {
        Ok(JacobianOutcome::Mismatch { jacobian_rank, exchange_rank })
    }
}

/// The value map of a degenerate homomorphism: frozen variables go to 1,
/// mutable variables with mutable neighbours go to 0, and isolated
/// mutable variables alternate between 1 and 2 with their mutation
/// partners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateHom {
    /// Value of every cluster variable encountered during verification.
    pub values: BTreeMap<LaurentPoly, BigRational>,
    pub depth: usize,
    pub relations_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomOutcome {
    Hom(DegenerateHom),
    /// A covering pair exists in the mutation class, so no degenerate
    /// homomorphism does.
    Inapplicable { path: Vec<usize>, pair: CoveringPair },
    /// The scan budget ran out before the class was either completed or a
    /// pair was found; no claim either way.
    Indeterminate,
}

fn is_isolated_vertex(q: &IceQuiver, v: usize) -> bool {
    (0..q.vertex_count()).all(|j| !q.is_mutable(j) || q.entry(v, j) == 0)
}

/// Searches the mutation class of `q` for a covering pair (up to `depth`
/// mutations). If one exists the homomorphism cannot: `Inapplicable`. If
/// the class is proven pairless, builds the degenerate value map and
/// numerically verifies every exchange relation reachable within `depth`
/// mutations, including that revisited variables always receive the same
/// value.
pub fn build_degenerate_hom(q: &IceQuiver, depth: usize) -> Result<HomOutcome, CheckError> {
    let budgets = Budgets { class_members: 100_000, depth, nodes: 1_000_000 };
    match find_covering_pair_seed(q, &budgets).verdict {
        SearchVerdict::Found { path, pair } => {
            return Ok(HomOutcome::Inapplicable {
                path,
                pair: pair.expect("covering-pair searches report the pair"),
            });
        }
        SearchVerdict::BudgetExhausted => return Ok(HomOutcome::Indeterminate),
        SearchVerdict::ProvenAbsent => {}
    }

    let mut values: BTreeMap<LaurentPoly, BigRational> = BTreeMap::new();
    let assign = |values: &mut BTreeMap<LaurentPoly, BigRational>,
                      var: &LaurentPoly,
                      value: BigRational,
                      vertex: usize|
     -> Result<(), CheckError> {
        match values.get(var) {
            Some(existing) if *existing != value => {
                Err(CheckError::UnsatisfiedRelation { vertex })
            }
            Some(_) => Ok(()),
            None => {
                values.insert(var.clone(), value);
                Ok(())
            }
        }
    };

    let root = Seed::initial(q.clone());
    for v in 0..q.vertex_count() {
        let value = if !q.is_mutable(v) {
            BigRational::one()
        } else if is_isolated_vertex(q, v) {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        assign(&mut values, &root.cluster()[v], value, v)?;
    }

    let seed_key = |s: &Seed| (s.quiver().matrix_rows(), s.cluster().to_vec());
    let mut seen = BTreeSet::new();
    seen.insert(seed_key(&root));
    let mut queue = VecDeque::new();
    queue.push_back((root, 0usize));
    let mut relations_checked = 0usize;

    while let Some((s, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        let quiver = s.quiver();
        let n = quiver.vertex_count();
        for k in quiver.mutable_vertices() {
            let mut plus = BigRational::one();
            let mut minus = BigRational::one();
            for j in 0..n {
                let e = quiver.entry(k, j);
                if e > 0 {
                    plus *= rat_pow(&values[&s.cluster()[j]], e);
                } else if e < 0 {
                    minus *= rat_pow(&values[&s.cluster()[j]], -e);
                }
            }
            let next = s.mutate(k)?;
            let old_value = values[&s.cluster()[k]].clone();
            let new_value = if is_isolated_vertex(next.quiver(), k) {
                // Mutation partners of isolated variables swap 1 and 2.
                BigRational::from_integer(3.into()) - &old_value
            } else {
                BigRational::zero()
            };
            assign(&mut values, &next.cluster()[k], new_value.clone(), k)?;
            if old_value * new_value != plus + minus {
                return Err(CheckError::UnsatisfiedRelation { vertex: k });
            }
            relations_checked += 1;
            if seen.insert(seed_key(&next)) {
                queue.push_back((next, d + 1));
            }
        }
    }

    Ok(HomOutcome::Hom(DegenerateHom { values, depth, relations_checked }))
}

/// Runs the exchange recurrence numerically: starting from `start`,
/// mutating along `path`, each step replaces the value at the mutated
/// vertex by `(plus + minus) / old` where the monomials are read off the
/// current quiver. Returns the value vector before any step and after
/// each one.
pub fn evaluate_cluster_point(
    s: &Seed,
    start: &PointAssignment,
    path: &[usize],
) -> Result<Vec<PointAssignment>, CheckError> {
    let mut quiver = s.quiver().clone();
    let n = quiver.vertex_count();
    if start.len() != n {
        return Err(CheckError::WrongValueCount { expected: n, got: start.len() });
    }
    let mut values = start.values.clone();
    let mut out = Vec::with_capacity(path.len() + 1);
    out.push(PointAssignment::new(values.clone()));
    for (step, &k) in path.iter().enumerate() {
        let next_quiver = quiver.mutate(k).map_err(SeedError::from)?;
        if values[k].is_zero() {
            return Err(CheckError::DivisionByZero { step, vertex: k });
        }
        let mut plus = BigRational::one();
        let mut minus = BigRational::one();
        for j in 0..n {
            let e = quiver.entry(k, j);
            if e > 0 {
                plus *= rat_pow(&values[j], e);
            } else if e < 0 {
                minus *= rat_pow(&values[j], -e);
            }
        }
        values[k] = (plus + minus) / &values[k];
        quiver = next_quiver;
        out.push(PointAssignment::new(values.clone()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelWitness {
    /// A directed cycle of mutable vertices, all valued 0, with a positive
    /// arrow count from each vertex to the next (indices wrap around).
    /// Walking it forever unrolls to a bi-infinite path of zeros.
    Cycle(Vec<usize>),
    /// No mutable vertex is valued 0.
    NotFound,
}

/// Given vertex values with nonzero frozen entries, checks that every
/// zero value is consistent with the exchange relations (both exchange
/// monomials at a zero vertex must vanish) and, when zeros exist, returns
/// a directed cycle of zero vertices that forces them to persist under
/// any mutation.
pub fn kernel_path_witness(
    s: &Seed,
    values: &PointAssignment,
) -> Result<KernelWitness, CheckError> {
    let q = s.quiver();
    let n = q.vertex_count();
    if values.len() != n {
        return Err(CheckError::WrongValueCount { expected: n, got: values.len() });
    }
    for f in q.frozen_vertices() {
        if values.values[f].is_zero() {
            return Err(CheckError::ZeroFrozenValue { vertex: f });
        }
    }
    let zero = |v: usize| q.is_mutable(v) && values.values[v].is_zero();
    let zeros: Vec<usize> = (0..n).filter(|&v| zero(v)).collect();
    for &v in &zeros {
        // 0 * a_v' must equal plus + minus; with the frozen factors
        // nonzero, each monomial needs a zero mutable factor of its own.
        let plus_vanishes = (0..n).any(|j| q.entry(v, j) > 0 && values.values[j].is_zero());
        let minus_vanishes = (0..n).any(|j| q.entry(v, j) < 0 && values.values[j].is_zero());
        if !plus_vanishes || !minus_vanishes {
            return Err(CheckError::UnsatisfiedRelation { vertex: v });
        }
    }
    let Some(&first) = zeros.first() else {
        return Ok(KernelWitness::NotFound);
    };
    // Every zero vertex has a zero successor, so following successors
    // from any zero vertex must loop.
    let successor = |v: usize| -> usize {
        (0..n)
            .find(|&j| q.entry(v, j) > 0 && zero(j))
            .expect("the consistency sweep guarantees a zero successor")
    };
    let mut order: Vec<usize> = alloc::vec![first];
    let mut position: BTreeMap<usize, usize> = BTreeMap::new();
    position.insert(first, 0);
    loop {
        let next = successor(*order.last().expect("walk is nonempty"));
        if let Some(&at) = position.get(&next) {
            return Ok(KernelWitness::Cycle(order.split_off(at)));
        }
        position.insert(next, order.len());
        order.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a2() -> IceQuiver {
        IceQuiver::from_arrows(2, &[(0, 1, 1)], &[]).unwrap()
    }

    fn point(vals: &[i64]) -> PointAssignment {
        PointAssignment::from_integers(vals)
    }

    #[test]
    fn a2_presentation_reads_off_the_arrows() {
        let p = acyclic_presentation(&Seed::initial(a2())).unwrap();
        assert_eq!(p.mutable, vec![0, 1]);
        assert!(p.frozen.is_empty());
        assert_eq!(
            p.relations,
            vec![
                Relation { vertex: 0, plus: vec![0, 1], minus: vec![0, 0] },
                Relation { vertex: 1, plus: vec![0, 0], minus: vec![1, 0] },
            ]
        );
        let text = alloc::format!("{p}");
        assert!(text.contains("a1*a1' = a2 + 1"), "{text}");
        assert!(text.contains("a2*a2' = 1 + a1"), "{text}");
    }

    #[test]
    fn presentation_relations_hold_as_laurent_identities() {
        // On the initial seed and on a mutated one.
        for path in [&[][..], &[0, 1][..]] {
            let s = Seed::replay(a2(), path).unwrap();
            let p = acyclic_presentation(&s).unwrap();
            for r in &p.relations {
                let mutated = s.mutate(r.vertex).unwrap();
                let lhs = s.cluster()[r.vertex].multiply(&mutated.cluster()[r.vertex]).unwrap();
                let (plus, minus) = r.products(s.cluster()).unwrap();
                assert_eq!(lhs, plus.add(&minus).unwrap(), "vertex {}", r.vertex);
            }
        }
    }

    #[test]
    fn single_vertex_relation_is_two() {
        let q = IceQuiver::from_arrows(1, &[], &[]).unwrap();
        let s = Seed::initial(q);
        let p = acyclic_presentation(&s).unwrap();
        let r = &p.relations[0];
        let (plus, minus) = r.products(s.cluster()).unwrap();
        let two = plus.add(&minus).unwrap();
        assert_eq!(two, LaurentPoly::constant(1, 2));
        let mutated = s.mutate(0).unwrap();
        assert_eq!(s.cluster()[0].multiply(&mutated.cluster()[0]).unwrap(), two);
        assert!(alloc::format!("{p}").contains("a1*a1' = 1 + 1"));
    }

    #[test]
    fn cyclic_seeds_have_no_presentation() {
        let markov = IceQuiver::from_arrows(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)], &[]).unwrap();
        assert_eq!(
            acyclic_presentation(&Seed::initial(markov)),
            Err(CheckError::NotAcyclic)
        );
    }

    #[test]
    fn jacobian_identity_on_the_one_arrow_example() {
        let q = IceQuiver::from_arrows(2, &[(0, 1, 1)], &[1]).unwrap();
        let s = Seed::initial(q);
        let out = isolated_jacobian_check(&s, &point(&[0, 3])).unwrap();
        assert_eq!(out, JacobianOutcome::Pass { rank: 1 });
    }

    #[test]
    fn jacobian_is_vacuous_without_any_arrows() {
        let q = IceQuiver::from_arrows(1, &[], &[]).unwrap();
        let out = isolated_jacobian_check(&Seed::initial(q), &point(&[5])).unwrap();
        assert_eq!(out, JacobianOutcome::Vacuous { vertex: 0 });
    }

    #[test]
    fn jacobian_rejects_non_isolated_and_zero_values() {
        let s = Seed::initial(a2());
        assert_eq!(
            isolated_jacobian_check(&s, &point(&[1, 1])),
            Err(CheckError::NotIsolated)
        );
        let q = IceQuiver::from_arrows(2, &[(0, 1, 1)], &[1]).unwrap();
        assert_eq!(
            isolated_jacobian_check(&Seed::initial(q), &point(&[1, 0])),
            Err(CheckError::ZeroFrozenValue { vertex: 1 })
        );
    }

    #[test]
    fn jacobian_passes_on_a_rank_deficient_instance() {
        // Two mutable vertices wired identically to one frozen vertex:
        // the exchange matrix has rank 1 < 2, and so must the Jacobian.
        let q = IceQuiver::from_arrows(3, &[(0, 2, 1), (1, 2, 1)], &[2]).unwrap();
        let out = isolated_jacobian_check(&Seed::initial(q), &point(&[0, 0, 7])).unwrap();
        assert_eq!(out, JacobianOutcome::Pass { rank: 1 });
    }

    #[test]
    fn markov_hom_sends_everything_to_zero() {
        let markov = IceQuiver::from_arrows(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)], &[]).unwrap();
        match build_degenerate_hom(&markov, 4).unwrap() {
            HomOutcome::Hom(h) => {
                assert!(h.relations_checked > 0);
                assert!(h.values.values().all(|v| v.is_zero()), "{:?}", h.values);
            }
            other => panic!("expected a homomorphism, got {other:?}"),
        }
    }

    #[test]
    fn smallex_hom_is_blocked_by_the_root_covering_pair() {
        let smallex = IceQuiver::from_arrows(
            4,
            &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (1, 3, 1), (2, 3, 1)],
            &[],
        )
        .unwrap();
        match build_degenerate_hom(&smallex, 6).unwrap() {
            HomOutcome::Inapplicable { path, pair } => {
                assert!(path.is_empty());
                assert_eq!(pair, CoveringPair { source: 0, target: 3 });
            }
            other => panic!("expected inapplicability, got {other:?}"),
        }
    }

    #[test]
    fn isolated_variable_and_partner_take_one_and_two() {
        let q = IceQuiver::from_arrows(1, &[], &[]).unwrap();
        let s = Seed::initial(q.clone());
        match build_degenerate_hom(&q, 3).unwrap() {
            HomOutcome::Hom(h) => {
                let x = &s.cluster()[0];
                let partner = s.mutate(0).unwrap().cluster()[0].clone();
                assert_eq!(h.values[x], BigRational::one());
                assert_eq!(h.values[&partner], BigRational::from_integer(2.into()));
                assert!(h.relations_checked >= 1);
            }
            other => panic!("expected a homomorphism, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_pairless_classes_come_back_indeterminate() {
        // A triple-weighted 3-cycle mutates to ever-heavier 3-cycles, so
        // the scan can neither finish the class nor find a pair.
        let q = IceQuiver::from_arrows(3, &[(0, 1, 3), (1, 2, 3), (2, 0, 3)], &[]).unwrap();
        assert_eq!(build_degenerate_hom(&q, 3).unwrap(), HomOutcome::Indeterminate);
    }

    #[test]
    fn pentagon_recurrence_from_ones() {
        let s = Seed::initial(a2());
        let steps = evaluate_cluster_point(&s, &point(&[1, 1]), &[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(steps.len(), 6);
        let mutated: Vec<BigRational> = steps
            .iter()
            .skip(1)
            .zip([0usize, 1, 0, 1, 0])
            .map(|(p, k)| p.values[k].clone())
            .collect();
        let want: Vec<BigRational> =
            [2i64, 3, 2, 1, 1].iter().map(|&v| BigRational::from_integer(v.into())).collect();
        assert_eq!(mutated, want);
        assert_eq!(steps[5], point(&[1, 1]));
    }

    #[test]
    fn markov_doubles_on_the_first_step() {
        let markov = IceQuiver::from_arrows(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)], &[]).unwrap();
        let s = Seed::initial(markov);
        let steps = evaluate_cluster_point(&s, &point(&[1, 1, 1]), &[0]).unwrap();
        assert_eq!(steps[1], point(&[2, 1, 1]));
    }

    #[test]
    fn empty_path_returns_the_start_alone() {
        let s = Seed::initial(a2());
        let steps = evaluate_cluster_point(&s, &point(&[4, 9]), &[]).unwrap();
        assert_eq!(steps, vec![point(&[4, 9])]);
    }

    #[test]
    fn zero_at_the_mutated_vertex_is_located() {
        let s = Seed::initial(a2());
        assert_eq!(
            evaluate_cluster_point(&s, &point(&[1, 1]), &[1, 0]).map(|_| ()),
            Ok(())
        );
        let err = evaluate_cluster_point(&s, &point(&[0, 1]), &[1, 0]).unwrap_err();
        assert_eq!(err, CheckError::DivisionByZero { step: 1, vertex: 0 });
    }

    #[test]
    fn markov_zeros_walk_the_triangle() {
        let markov = IceQuiver::from_arrows(3, &[(0, 1, 2), (1, 2, 2), (2, 0, 2)], &[]).unwrap();
        let s = Seed::initial(markov);
        assert_eq!(
            kernel_path_witness(&s, &point(&[0, 0, 0])).unwrap(),
            KernelWitness::Cycle(vec![0, 1, 2])
        );
    }

    #[test]
    fn smallex_zeros_fail_at_the_sink() {
        let smallex = IceQuiver::from_arrows(
            4,
            &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (1, 3, 1), (2, 3, 1)],
            &[],
        )
        .unwrap();
        let s = Seed::initial(smallex);
        assert_eq!(
            kernel_path_witness(&s, &point(&[0, 0, 0, 0])),
            Err(CheckError::UnsatisfiedRelation { vertex: 3 })
        );
    }

    #[test]
    fn positive_values_have_no_kernel() {
        let s = Seed::initial(a2());
        assert_eq!(kernel_path_witness(&s, &point(&[1, 2])).unwrap(), KernelWitness::NotFound);
    }

    #[test]
    fn partial_zeros_still_find_their_cycle() {
        // A 3-cycle of zeros with a frozen spectator: the cycle must only
        // use the zero vertices.
        let q = IceQuiver::from_arrows(
            4,
            &[(0, 1, 1), (1, 2, 1), (2, 0, 1), (3, 0, 1)],
            &[3],
        )
        .unwrap();
        let s = Seed::initial(q);
        let vals = point(&[0, 0, 0, 5]);
        assert_eq!(kernel_path_witness(&s, &vals).unwrap(), KernelWitness::Cycle(vec![0, 1, 2]));
    }
}
