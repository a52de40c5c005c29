//! Reduction from 3SAT to the mutual-visibility decision problem.
//!
//! For a formula with `p` variables and `q` clauses the instance has
//! `4p + q + 5` vertices and threshold `K = 3p + q + 2`:
//!
//! - per variable `i` a gadget `uᵢ, ūᵢ, sᵢ, tᵢ` with edges `uᵢūᵢ, ūᵢsᵢ,
//!   ūᵢtᵢ, sᵢtᵢ` (a triangle with a pendant), whose two maximum
//!   mutual-visibility sets each hold exactly one of `uᵢ, ūᵢ`;
//! - per clause `j` a vertex `vⱼ` joined to its literal vertices and to `w`;
//! - frame vertices `y, y', z, z'` with edges `uᵢy, ūᵢy, sᵢz, tᵢz, sᵢw,
//!   tᵢw, yz, yy', zz'`.
//!
//! Vertex ids: gadget `i` (1-based) uses `4(i-1)..4(i-1)+4` in the order
//! `u, ū, s, t`; clause `j` (1-based) is `4p + j - 1`; then `w, y, y', z, z'`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::graph::{is_convex, Graph, Vertex};
use crate::solver::{all_max_sets, mu_bruteforce, SolverError};
use crate::PointSet;

/// Largest variable count accepted by [`CnfFormula::solve_bruteforce`].
pub const SAT_ENUMERATION_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("literal 0 is not allowed")]
    ZeroLiteral,
    #[error("variable {var} is outside 1..={p}")]
    VariableOutOfRange { var: usize, p: usize },
    #[error("clause {clause} repeats a literal")]
    RepeatedLiteral { clause: usize },
    #[error("formula has no three clauses with pairwise disjoint literal sets")]
    NoDisjointTriple,
    #[error("assignment has {got} values, expected {expected}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("variable {var} has {count} of its two literal vertices in the set, expected 1")]
    GadgetLiterals { var: usize, count: usize },
    #[error("{p} variables exceed the enumeration limit of {limit}")]
    TooManyVariables { p: usize, limit: usize },
    #[error("instance construction check failed: {0}")]
    Construction(String),
    #[error("upper-bound certification failed: {0}")]
    Certification(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// A signed variable index: `+i` is `xᵢ`, `-i` is `¬xᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    pub fn new(var: usize, positive: bool) -> Literal {
        let v = i32::try_from(var).expect("variable index fits in i32");
        assert!(v > 0, "variables are numbered from 1");
        Literal(if positive { v } else { -v })
    }

    pub fn from_signed(x: i32) -> Result<Literal, ReductionError> {
        if x == 0 {
            return Err(ReductionError::ZeroLiteral);
        }
        Ok(Literal(x))
    }

    pub fn var(&self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0
    }

    pub fn signed(&self) -> i32 {
        self.0
    }

    pub fn negated(&self) -> Literal {
        Literal(-self.0)
    }

    /// Truth value under `t`, where `t[i - 1]` is the value of `xᵢ`.
    pub fn eval(&self, t: &[bool]) -> bool {
        t[self.var() - 1] == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Clause = [Literal; 3];

/// A 3-CNF formula. Clauses have three distinct literals; a clause may hold
/// both a literal and its negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    p: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(p: usize, clauses: Vec<Clause>) -> Result<CnfFormula, ReductionError> {
        for (idx, c) in clauses.iter().enumerate() {
            for lit in c {
                if lit.var() > p {
                    return Err(ReductionError::VariableOutOfRange { var: lit.var(), p });
                }
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(ReductionError::RepeatedLiteral { clause: idx + 1 });
            }
        }
        Ok(CnfFormula { p, clauses })
    }

    /// Builds from DIMACS-style signed integers.
    pub fn from_signed(p: usize, clauses: &[[i32; 3]]) -> Result<CnfFormula, ReductionError> {
        let mut out = Vec::with_capacity(clauses.len());
        for c in clauses {
            out.push([
                Literal::from_signed(c[0])?,
                Literal::from_signed(c[1])?,
                Literal::from_signed(c[2])?,
            ]);
        }
        CnfFormula::new(p, out)
    }

    pub fn num_vars(&self) -> usize {
        self.p
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// # Panics
    /// If `t.len()` differs from the variable count.
    pub fn satisfies(&self, t: &[bool]) -> bool {
        assert_eq!(t.len(), self.p, "assignment length");
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(t)))
    }

    /// First satisfying assignment in binary counting order (`x₁` is the
    /// lowest bit, false before true), by exhaustive enumeration.
    pub fn solve_bruteforce(&self) -> Result<Option<Vec<bool>>, ReductionError> {
        if self.p > SAT_ENUMERATION_LIMIT {
            return Err(ReductionError::TooManyVariables {
                p: self.p,
                limit: SAT_ENUMERATION_LIMIT,
            });
        }
        let mut t = vec![false; self.p];
        for mask in 0u64..1 << self.p {
            for (i, slot) in t.iter_mut().enumerate() {
                *slot = mask >> i & 1 == 1;
            }
            if self.satisfies(&t) {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// First triple `a < b < c` (lexicographic) of clauses whose literal
    /// sets are pairwise disjoint.
    pub fn disjoint_triple(&self) -> Option<[usize; 3]> {
        let apart = |a: &Clause, b: &Clause| a.iter().all(|l| !b.contains(l));
        let q = self.clauses.len();
        for a in 0..q {
            for b in a + 1..q {
                if !apart(&self.clauses[a], &self.clauses[b]) {
                    continue;
                }
                for c in b + 1..q {
                    if apart(&self.clauses[a], &self.clauses[c])
                        && apart(&self.clauses[b], &self.clauses[c])
                    {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "({} | {} | {})", c[0], c[1], c[2])?;
        }
        Ok(())
    }
}

/// Returns `f` unchanged if it already has three pairwise disjoint clauses,
/// otherwise appends variables `a..e` (`p+1..=p+5`) and the always-true
/// clauses `{a, ¬a, b}`, `{¬b, c, ¬c}`, `{d, ¬d, e}`.
pub fn ensure_disjoint_clauses(f: &CnfFormula) -> CnfFormula {
    if f.disjoint_triple().is_some() {
        return f.clone();
    }
    let p = f.p;
    let lit = |k: usize, pos: bool| Literal::new(p + k, pos);
    let (a, b, c, d, e) = (1, 2, 3, 4, 5);
    let mut clauses = f.clauses.clone();
    clauses.push([lit(a, true), lit(a, false), lit(b, true)]);
    clauses.push([lit(b, false), lit(c, true), lit(c, false)]);
    clauses.push([lit(d, true), lit(d, false), lit(e, true)]);
    CnfFormula { p: p + 5, clauses }
}

/// Uniform random 3-CNF: each clause picks three distinct variables and
/// independent signs.
///
/// # Panics
/// If `p < 3`.
pub fn random_formula<R: Rng + ?Sized>(p: usize, q: usize, rng: &mut R) -> CnfFormula {
    assert!(p >= 3, "a 3-CNF clause needs three distinct variables");
    let clauses = (0..q)
        .map(|_| {
            let vars = rand::seq::index::sample(rng, p, 3);
            let mut c = [Literal(1); 3];
            for (slot, v) in c.iter_mut().zip(vars.iter()) {
                *slot = Literal::new(v + 1, rng.gen_bool(0.5));
            }
            c
        })
        .collect();
    CnfFormula { p, clauses }
}

/// What a vertex of a reduction instance stands for. Variable and clause
/// indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    U(usize),
    UBar(usize),
    S(usize),
    T(usize),
    Clause(usize),
    W,
    Y,
    YPrime,
    Z,
    ZPrime,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::U(i) => write!(f, "u{i}"),
            Role::UBar(i) => write!(f, "ubar{i}"),
            Role::S(i) => write!(f, "s{i}"),
            Role::T(i) => write!(f, "t{i}"),
            Role::Clause(j) => write!(f, "v{j}"),
            Role::W => f.write_str("w"),
            Role::Y => f.write_str("y"),
            Role::YPrime => f.write_str("y'"),
            Role::Z => f.write_str("z"),
            Role::ZPrime => f.write_str("z'"),
        }
    }
}

/// A decision instance: does `graph` have a mutual-visibility set of size
/// at least `k`?
#[derive(Debug, Clone)]
pub struct MVInstance {
    pub graph: Graph,
    pub k: usize,
    /// `roles[v]` is the role of vertex `v`.
    pub roles: Vec<Role>,
    pub formula: CnfFormula,
    /// The pairwise disjoint clauses (0-based) used by the bound.
    pub disjoint: [usize; 3],
}

impl MVInstance {
    pub fn p(&self) -> usize {
        self.formula.p
    }

    pub fn q(&self) -> usize {
        self.formula.clauses.len()
    }

    pub fn u(&self, i: usize) -> Vertex {
        4 * (i - 1)
    }

    pub fn ubar(&self, i: usize) -> Vertex {
        4 * (i - 1) + 1
    }

    pub fn s(&self, i: usize) -> Vertex {
        4 * (i - 1) + 2
    }

    pub fn t(&self, i: usize) -> Vertex {
        4 * (i - 1) + 3
    }

    pub fn clause(&self, j: usize) -> Vertex {
        4 * self.p() + j - 1
    }

    pub fn w(&self) -> Vertex {
        4 * self.p() + self.q()
    }

    pub fn y(&self) -> Vertex {
        self.w() + 1
    }

    pub fn y_prime(&self) -> Vertex {
        self.w() + 2
    }

    pub fn z(&self) -> Vertex {
        self.w() + 3
    }

    pub fn z_prime(&self) -> Vertex {
        self.w() + 4
    }

    fn literal_vertex(&self, l: Literal) -> Vertex {
        if l.is_positive() {
            self.u(l.var())
        } else {
            self.ubar(l.var())
        }
    }
}

/// The gadget on ids `0..4` in the order `u, ū, s, t`.
pub fn gadget() -> Graph {
    Graph::from_edge_list(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).expect("valid gadget")
}

fn check_gadget() -> Result<(), ReductionError> {
    let sets = all_max_sets(&gadget())?;
    let ok = sets.len() == 2
        && sets
            .iter()
            .all(|s| s.len() == 3 && s.contains(0) != s.contains(1));
    if !ok {
        return Err(ReductionError::Construction(alloc::format!(
            "gadget maximum sets are {sets:?}, expected two of size 3 splitting u and ubar"
        )));
    }
    Ok(())
}

/// Builds the instance. `f` must contain three clauses with pairwise
/// disjoint literal sets (see [`ensure_disjoint_clauses`]).
pub fn sat_to_mv(f: &CnfFormula) -> Result<MVInstance, ReductionError> {
    let disjoint = f
        .disjoint_triple()
        .ok_or(ReductionError::NoDisjointTriple)?;
    check_gadget()?;
    let (p, q) = (f.p, f.clauses.len());
    let n = 4 * p + q + 5;
    let mut roles = Vec::with_capacity(n);
    for i in 1..=p {
        roles.extend([Role::U(i), Role::UBar(i), Role::S(i), Role::T(i)]);
    }
    roles.extend((1..=q).map(Role::Clause));
    roles.extend([Role::W, Role::Y, Role::YPrime, Role::Z, Role::ZPrime]);

    let mut inst = MVInstance {
        graph: Graph::empty(0),
        k: 3 * p + q + 2,
        roles,
        formula: f.clone(),
        disjoint,
    };
    let (w, y, z) = (inst.w(), inst.y(), inst.z());
    let mut edges = Vec::with_capacity(10 * p + 4 * q + 3);
    for i in 1..=p {
        let (u, ub, s, t) = (inst.u(i), inst.ubar(i), inst.s(i), inst.t(i));
        edges.extend([(u, ub), (ub, s), (ub, t), (s, t)]);
        edges.extend([(u, y), (ub, y), (s, z), (t, z), (s, w), (t, w)]);
    }
    for (j, c) in f.clauses.iter().enumerate() {
        let v = inst.clause(j + 1);
        edges.extend(c.iter().map(|&l| (v, inst.literal_vertex(l))));
        edges.push((v, w));
    }
    edges.extend([(y, z), (y, inst.y_prime()), (z, inst.z_prime())]);
    inst.graph = Graph::from_edge_list(n, &edges)
        .map_err(|e| ReductionError::Construction(alloc::format!("{e}")))?;
    Ok(inst)
}

/// `{uᵢ : xᵢ false} ∪ {ūᵢ : xᵢ true} ∪ {sᵢ, tᵢ} ∪ {vⱼ} ∪ {y', z'}`, always of
/// size `K`. It is a mutual-visibility set when `t` satisfies the formula.
pub fn assignment_to_points(inst: &MVInstance, t: &[bool]) -> Result<PointSet, ReductionError> {
    let p = inst.p();
    if t.len() != p {
        return Err(ReductionError::AssignmentLength {
            expected: p,
            got: t.len(),
        });
    }
    let mut pts = PointSet::new(inst.graph.n());
    for i in 1..=p {
        pts.insert(if t[i - 1] { inst.ubar(i) } else { inst.u(i) });
        pts.insert(inst.s(i));
        pts.insert(inst.t(i));
    }
    for j in 1..=inst.q() {
        pts.insert(inst.clause(j));
    }
    pts.insert(inst.y_prime());
    pts.insert(inst.z_prime());
    Ok(pts)
}

/// Reads `xᵢ = false ⟺ uᵢ ∈ pts`. Each gadget must hold exactly one of
/// `uᵢ, ūᵢ`.
pub fn points_to_assignment(
    inst: &MVInstance,
    pts: &PointSet,
) -> Result<Vec<bool>, ReductionError> {
    (1..=inst.p())
        .map(|i| {
            let (u, ub) = (pts.contains(inst.u(i)), pts.contains(inst.ubar(i)));
            match (u, ub) {
                (true, false) => Ok(false),
                (false, true) => Ok(true),
                _ => Err(ReductionError::GadgetLiterals {
                    var: i,
                    count: u as usize + ub as usize,
                }),
            }
        })
        .collect()
}

/// One part of the convex cover and its exact `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedPart {
    pub vertices: PointSet,
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub parts: Vec<CertifiedPart>,
    /// `Σ μ(partᵢ)`, an upper bound on `μ` of the instance.
    pub total: usize,
}

/// Covers the instance by convex parts (the star on three disjoint clause
/// vertices and `w`, the path `y' y z z'`, every gadget and every other
/// clause vertex alone), checks convexity and the cover, and sums the
/// parts' `μ`. Fails unless the sum equals `K`.
pub fn certify_upper_bound(inst: &MVInstance) -> Result<Certificate, ReductionError> {
    let g = &inst.graph;
    let n = g.n();
    let [a, b, c] = inst.disjoint;
    let mut groups: Vec<Vec<Vertex>> = vec![
        vec![
            inst.clause(a + 1),
            inst.clause(b + 1),
            inst.clause(c + 1),
            inst.w(),
        ],
        vec![inst.y_prime(), inst.y(), inst.z(), inst.z_prime()],
    ];
    for i in 1..=inst.p() {
        groups.push(vec![inst.u(i), inst.ubar(i), inst.s(i), inst.t(i)]);
    }
    for j in 0..inst.q() {
        if !inst.disjoint.contains(&j) {
            groups.push(vec![inst.clause(j + 1)]);
        }
    }

    let mut covered = PointSet::new(n);
    let mut parts = Vec::with_capacity(groups.len());
    for group in groups {
        let vertices = PointSet::collect(n, group.iter().copied());
        let convex = is_convex(g, &vertices)
            .map_err(|e| ReductionError::Certification(alloc::format!("{e}")))?;
        if !convex {
            return Err(ReductionError::Certification(alloc::format!(
                "part {vertices} is not convex"
            )));
        }
        for v in vertices.iter() {
            covered.insert(v);
        }
        let mu = mu_bruteforce(&g.induced_subgraph(&group))?.mu;
        parts.push(CertifiedPart { vertices, mu });
    }
    if covered.len() != n {
        return Err(ReductionError::Certification(alloc::format!(
            "parts leave {} vertices uncovered",
            n - covered.len()
        )));
    }
    let total = parts.iter().map(|p| p.mu).sum();
    if total != inst.k {
        return Err(ReductionError::Certification(alloc::format!(
            "bound {total} differs from K = {}",
            inst.k
        )));
    }
    Ok(Certificate { parts, total })
}
