//! Matroid representations and oracles.
//!
//! A [`Matroid`] lives on an abstract ground set `0..ground_size`; the game
//! layer maps ground positions to resources. Four kinds are supported:
//! uniform, partition, graphic (multigraphs allowed, since routing scenarios
//! produce parallel links), and an explicit list of bases.
//!
//! The module also carries the workhorse of all matroid-based solvers:
//! minimum-weight bases are computed greedily, and a minimum-weight basis
//! also minimizes the maximum element weight. [`Matroid::min_sum_also_min_max`]
//! is the executable form of that fact; it brute-forces all bases and reports
//! a counterexample basis if one existed (none can).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Rational, Result};

/// Default cap on the ground-set size for basis enumeration.
pub const DEFAULT_BASIS_ENUMERATION_CAP: usize = 16;

/// Ground-set size up to which the basis-exchange property of explicit basis
/// lists is verified at construction time.
pub const EXCHANGE_CHECK_CAP: usize = 10;

/// The structural definition of a matroid over ground elements `0..g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidKind {
    /// Independent sets are all sets of size at most `rank`.
    Uniform { rank: usize },
    /// Ground elements are partitioned into blocks; a set is independent iff
    /// it takes at most `ranks[b]` elements from block `b`.
    Partition {
        blocks: Vec<Vec<usize>>,
        ranks: Vec<usize>,
    },
    /// Ground elements are edges of a connected multigraph on
    /// `vertices` vertices; independent sets are forests, bases are spanning
    /// trees.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Bases given extensionally. Each basis is a sorted element list.
    ExplicitBases(Vec<Vec<usize>>),
}

/// A matroid over ground elements `0..ground_size()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground_size: usize,
    rank: usize,
    kind: MatroidKind,
    exchange_verified: bool,
}

/// Outcome of [`Matroid::min_sum_also_min_max`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMaxReport {
    /// True iff the greedy minimum-sum basis attains the minimum possible
    /// maximum element weight over all bases.
    pub holds: bool,
    /// A basis with a strictly smaller maximum weight, if one exists.
    pub witness: Option<Vec<usize>>,
}

impl Matroid {
    /// Builds and structurally validates a matroid.
    ///
    /// Partition blocks must partition the ground set with per-block ranks
    /// within block sizes; graphic matroids must be connected with all edge
    /// endpoints in range; explicit basis lists must be nonempty, of equal
    /// cardinality, and (for ground sets of at most [`EXCHANGE_CHECK_CAP`]
    /// elements) satisfy the basis-exchange property. Larger explicit lists
    /// are accepted unverified and flagged via [`Matroid::exchange_verified`].
    pub fn new(ground_size: usize, kind: MatroidKind) -> Result<Matroid> {
        let reject = |reason: String| Error::MalformedMatroid { reason };
        let mut exchange_verified = true;
        let rank = match &kind {
            MatroidKind::Uniform { rank } => {
                if *rank > ground_size {
                    return Err(reject(format!(
                        "uniform rank {rank} exceeds ground size {ground_size}"
                    )));
                }
                *rank
            }
            MatroidKind::Partition { blocks, ranks } => {
                if blocks.len() != ranks.len() {
                    return Err(reject(format!(
                        "{} blocks but {} ranks",
                        blocks.len(),
                        ranks.len()
                    )));
                }
                let mut seen = vec![false; ground_size];
                for (b, block) in blocks.iter().enumerate() {
                    if ranks[b] > block.len() {
                        return Err(reject(format!(
                            "block {b} has rank {} but only {} elements",
                            ranks[b],
                            block.len()
                        )));
                    }
                    for &e in block {
                        if e >= ground_size {
                            return Err(Error::ElementOutsideGround {
                                element: e,
                                ground: ground_size,
                            });
                        }
                        if seen[e] {
                            return Err(reject(format!("element {e} in two blocks")));
                        }
                        seen[e] = true;
                    }
                }
                if seen.iter().any(|s| !s) {
                    return Err(reject("blocks do not cover the ground set".into()));
                }
                ranks.iter().sum()
            }
            MatroidKind::Graphic { vertices, edges } => {
                if edges.len() != ground_size {
                    return Err(reject(format!(
                        "{} edges but ground size {ground_size}",
                        edges.len()
                    )));
                }
                if *vertices == 0 {
                    return Err(reject("graph has no vertices".into()));
                }
                for &(u, v) in edges {
                    if u >= *vertices || v >= *vertices {
                        return Err(reject(format!("edge ({u},{v}) endpoint out of range")));
                    }
                }
                let mut uf = UnionFind::new(*vertices);
                for &(u, v) in edges {
                    uf.union(u, v);
                }
                if (0..*vertices).any(|v| uf.find(v) != uf.find(0)) {
                    return Err(reject("graph is not connected".into()));
                }
                vertices - 1
            }
            MatroidKind::ExplicitBases(bases) => {
                if bases.is_empty() {
                    return Err(reject("no bases given".into()));
                }
                let rank = bases[0].len();
                for basis in bases {
                    if basis.len() != rank {
                        return Err(reject("bases of unequal cardinality".into()));
                    }
                    if basis.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(reject("bases must be sorted and duplicate-free".into()));
                    }
                    if let Some(&e) = basis.last() {
                        if e >= ground_size {
                            return Err(Error::ElementOutsideGround {
                                element: e,
                                ground: ground_size,
                            });
                        }
                    }
                }
                if ground_size <= EXCHANGE_CHECK_CAP {
                    if let Some((b, x)) = exchange_violation(bases) {
                        return Err(reject(format!(
                            "basis exchange fails for basis {b:?} and element {x}"
                        )));
                    }
                } else {
                    exchange_verified = false;
                }
                rank
            }
        };
        Ok(Matroid {
            ground_size,
            rank,
            kind,
            exchange_verified,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Common cardinality of all bases.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    /// False only for explicit basis lists too large for the construction-time
    /// exchange check; downstream solvers surface this in reports.
    pub fn exchange_verified(&self) -> bool {
        self.exchange_verified
    }

    /// Independence oracle. `set` may be given in any order; duplicates make
    /// a set dependent for the combinatorial kinds and are rejected for none.
    pub fn is_independent(&self, set: &[usize]) -> Result<bool> {
        for &e in set {
            if e >= self.ground_size {
                return Err(Error::ElementOutsideGround {
                    element: e,
                    ground: self.ground_size,
                });
            }
        }
        let mut sorted: Vec<usize> = set.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(false);
        }
        Ok(self.is_independent_sorted(&sorted))
    }

    /// Independence for a sorted duplicate-free in-range element list.
    pub(crate) fn is_independent_sorted(&self, set: &[usize]) -> bool {
        match &self.kind {
            MatroidKind::Uniform { rank } => set.len() <= *rank,
            MatroidKind::Partition { blocks, ranks } => {
                let mut counts = vec![0usize; blocks.len()];
                let block_of = self.block_index();
                for &e in set {
                    let b = block_of[e];
                    counts[b] += 1;
                    if counts[b] > ranks[b] {
                        return false;
                    }
                }
                true
            }
            MatroidKind::Graphic { vertices, edges } => {
                let mut uf = UnionFind::new(*vertices);
                for &e in set {
                    let (u, v) = edges[e];
                    if !uf.union(u, v) {
                        return false;
                    }
                }
                true
            }
            MatroidKind::ExplicitBases(bases) => bases
                .iter()
                .any(|basis| is_subset_sorted(set, basis)),
        }
    }

    /// True iff `set` is a basis (maximal independent set).
    pub fn is_basis(&self, set: &[usize]) -> Result<bool> {
        Ok(set.len() == self.rank && self.is_independent(set)?)
    }

    /// All bases in lexicographic ground order.
    ///
    /// Combinatorial kinds are enumerated by scanning all rank-sized subsets
    /// and are therefore capped; explicit basis lists are returned (sorted)
    /// regardless of the cap.
    pub fn enumerate_bases(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        if let MatroidKind::ExplicitBases(bases) = &self.kind {
            let mut out = bases.clone();
            out.sort();
            out.dedup();
            return Ok(out);
        }
        if self.ground_size > cap {
            return Err(Error::CapExceeded {
                required: self.ground_size as u128,
                cap: cap as u128,
            });
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.rank);
        self.collect_bases(0, &mut current, &mut out);
        Ok(out)
    }

    fn collect_bases(&self, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == self.rank {
            out.push(current.clone());
            return;
        }
        let needed = self.rank - current.len();
        for e in from..self.ground_size {
            if self.ground_size - e < needed {
                break;
            }
            current.push(e);
            if self.is_independent_sorted(current) {
                self.collect_bases(e + 1, current, out);
            }
            current.pop();
        }
    }

    /// A basis minimizing the weight sum, computed by the standard greedy:
    /// elements in ascending weight, ties broken by ground order, each added
    /// if it keeps the set independent.
    pub fn greedy_min_basis(&self, weights: &[Rational]) -> Result<Vec<usize>> {
        self.greedy_basis_preferring(weights, |_| false, |_| true)
    }

    /// Greedy minimum-weight basis with ties broken toward preferred
    /// elements (then ground order). Used for lazy best responses: preferring
    /// the elements of the current strategy maximizes the overlap with it
    /// among all minimum-weight bases.
    pub fn greedy_min_basis_preferring<P>(
        &self,
        weights: &[Rational],
        prefer: P,
    ) -> Result<Vec<usize>>
    where
        P: Fn(usize) -> bool,
    {
        self.greedy_basis_preferring(weights, prefer, |_| true)
    }

    /// Greedy basis restricted to `allowed` elements, elements ordered by
    /// (weight, not-preferred, ground index). Returns `None` when the allowed
    /// elements do not contain a basis.
    pub fn greedy_restricted_basis<P, A>(
        &self,
        weights: &[Rational],
        prefer: P,
        allowed: A,
    ) -> Result<Option<Vec<usize>>>
    where
        P: Fn(usize) -> bool,
        A: Fn(usize) -> bool,
    {
        match self.try_greedy(weights, prefer, allowed)? {
            basis if basis.len() == self.rank => Ok(Some(basis)),
            _ => Ok(None),
        }
    }

    fn greedy_basis_preferring<P, A>(
        &self,
        weights: &[Rational],
        prefer: P,
        allowed: A,
    ) -> Result<Vec<usize>>
    where
        P: Fn(usize) -> bool,
        A: Fn(usize) -> bool,
    {
        let basis = self.try_greedy(weights, prefer, allowed)?;
        if basis.len() != self.rank {
            return Err(Error::InternalSolverFailure {
                detail: "greedy could not complete a basis",
            });
        }
        Ok(basis)
    }

    fn try_greedy<P, A>(&self, weights: &[Rational], prefer: P, allowed: A) -> Result<Vec<usize>>
    where
        P: Fn(usize) -> bool,
        A: Fn(usize) -> bool,
    {
        if weights.len() != self.ground_size {
            return Err(Error::MalformedMatroid {
                reason: format!(
                    "{} weights for ground size {}",
                    weights.len(),
                    self.ground_size
                ),
            });
        }
        let mut order: Vec<usize> = (0..self.ground_size).filter(|&e| allowed(e)).collect();
        order.sort_by(|&a, &b| {
            weights[a]
                .cmp(&weights[b])
                .then_with(|| prefer(b).cmp(&prefer(a)))
                .then_with(|| a.cmp(&b))
        });
        let mut basis: Vec<usize> = Vec::with_capacity(self.rank);
        let mut probe: Vec<usize> = Vec::with_capacity(self.rank);
        for e in order {
            if basis.len() == self.rank {
                break;
            }
            probe.clear();
            probe.extend_from_slice(&basis);
            let pos = probe.binary_search(&e).unwrap_or_else(|p| p);
            probe.insert(pos, e);
            if self.is_independent_sorted(&probe) {
                basis.insert(pos, e);
            }
        }
        Ok(basis)
    }

    /// Checks by exhaustion that the greedy minimum-sum basis also minimizes
    /// the maximum element weight. A witness basis is returned if some basis
    /// beat it, which would disprove the exchange structure of the instance.
    pub fn min_sum_also_min_max(
        &self,
        weights: &[Rational],
        enumeration_cap: usize,
    ) -> Result<MinMaxReport> {
        let greedy = self.greedy_min_basis(weights)?;
        let greedy_max = basis_max_weight(&greedy, weights);
        let mut witness = None;
        for basis in self.enumerate_bases(enumeration_cap)? {
            let other_max = basis_max_weight(&basis, weights);
            if other_max < greedy_max {
                witness = Some(basis);
                break;
            }
        }
        Ok(MinMaxReport {
            holds: witness.is_none(),
            witness,
        })
    }
}

fn basis_max_weight(basis: &[usize], weights: &[Rational]) -> Rational {
    basis
        .iter()
        .map(|&e| weights[e])
        .max()
        .unwrap_or_else(|| Rational::from_integer(0))
}

impl Matroid {
    fn block_index(&self) -> Vec<usize> {
        match &self.kind {
            MatroidKind::Partition { blocks, .. } => {
                let mut idx = vec![0usize; self.ground_size];
                for (b, block) in blocks.iter().enumerate() {
                    for &e in block {
                        idx[e] = b;
                    }
                }
                idx
            }
            _ => Vec::new(),
        }
    }
}

/// True iff sorted `a` is a subset of sorted `b`.
pub(crate) fn is_subset_sorted(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    'outer: for &x in a {
        for &y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Searches for a violation of the basis-exchange property: bases `b`, `b'`
/// and `x` in `b \ b'` such that no `y` in `b' \ b` makes `b - x + y` a basis.
fn exchange_violation(bases: &[Vec<usize>]) -> Option<(Vec<usize>, usize)> {
    for b in bases {
        for b2 in bases {
            for &x in b.iter().filter(|x| !b2.contains(x)) {
                let found = b2.iter().filter(|y| !b.contains(y)).any(|&y| {
                    let mut candidate: Vec<usize> =
                        b.iter().copied().filter(|&e| e != x).collect();
                    candidate.push(y);
                    candidate.sort_unstable();
                    bases.iter().any(|basis| basis == &candidate)
                });
                if !found {
                    return Some((b.clone(), x));
                }
            }
        }
    }
    None
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false iff `x` and `y` were already connected.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}
