//! The divisibility poset of a squarefree monomial ideal, capped at a degree,
//! and the exact partitionability search that computes Stanley depth.
//!
//! For an ideal `I` over `[n]`, the poset holds every `A ⊆ [n]` of size at
//! most `k` whose monomial lies in `I`. The Stanley depth of `I` is at least
//! `k` exactly when this capped poset splits into disjoint intervals `[A, B]`
//! whose tops all have size `k`; the solver decides that by complete
//! backtracking and returns a witness partition that an independent verifier
//! re-checks.

use std::collections::HashMap;
use std::fmt;

use crate::collapse::{is_uniformly_collapsible, CollapseCertificate};
use crate::combinatorics::{binomial, min_bound, MinBranch};
use crate::complexes::{gen_veronese, MonomialIdeal};
use crate::error::{Error, Result};
use crate::sets::{k_subsets, sets_between, VertexSet};

/// Default backtracking node budget for the partitionability search.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// The poset of monomial supports of `I` with cardinality at most `cap`,
/// stored level by level in (size, rev-lex) order.
#[derive(Debug, Clone)]
pub struct ReducedPoset {
    n: u32,
    cap: u32,
    elements: Vec<VertexSet>,
    index: HashMap<u64, usize>,
    /// Indices of the minimal elements: the generators of degree <= cap.
    minimal: Vec<usize>,
}

impl ReducedPoset {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: VertexSet) -> bool {
        self.index.contains_key(&a.bits())
    }

    /// Number of elements of each cardinality `0..=cap`.
    pub fn level_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.cap as usize + 1];
        for e in &self.elements {
            counts[e.cardinality() as usize] += 1;
        }
        counts
    }
}

/// Enumerates all supersets of generators of size at most `k`, for
/// `min_degree(I) <= k <= n`.
pub fn build_reduced_poset(ideal: &MonomialIdeal, k: u32) -> Result<ReducedPoset> {
    let n = ideal.n();
    if k < ideal.min_degree() || k > n {
        return Err(Error::InvalidArgument(format!(
            "cap {k} out of range {}..={n}",
            ideal.min_degree()
        )));
    }
    let mut elements = Vec::new();
    for size in ideal.min_degree()..=k {
        for a in k_subsets(n, size) {
            if ideal.contains_support(a) {
                elements.push(a);
            }
        }
    }
    let index: HashMap<u64, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.bits(), i))
        .collect();
    let minimal = ideal
        .generators()
        .iter()
        .filter(|g| g.cardinality() <= k)
        .map(|g| index[&g.bits()])
        .collect();
    Ok(ReducedPoset {
        n,
        cap: k,
        elements,
        index,
        minimal,
    })
}

/// A disjoint interval cover of a capped poset; tops all have the cap size
/// when produced by the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    intervals: Vec<(VertexSet, VertexSet)>,
}

impl IntervalPartition {
    pub fn new(intervals: Vec<(VertexSet, VertexSet)>) -> Self {
        IntervalPartition { intervals }
    }

    pub fn intervals(&self) -> &[(VertexSet, VertexSet)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

impl fmt::Display for IntervalPartition {
    /// One `interval <bottom> -> <top>` line per interval.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.intervals {
            writeln!(f, "interval {a} -> {b}")?;
        }
        Ok(())
    }
}

struct Search<'a> {
    poset: &'a ReducedPoset,
    covered: Vec<bool>,
    /// Uncovered element count per cardinality.
    uncovered: Vec<u64>,
    /// Uncovered minimal-element count per cardinality.
    uncovered_min: Vec<u64>,
    is_minimal: Vec<bool>,
    /// C(a, b) for a, b <= cap.
    binom: Vec<Vec<u64>>,
    nodes: u64,
    budget: u64,
    chosen: Vec<(VertexSet, VertexSet)>,
}

impl<'a> Search<'a> {
    fn new(poset: &'a ReducedPoset, budget: u64) -> Self {
        let cap = poset.cap as usize;
        let mut is_minimal = vec![false; poset.len()];
        for &i in &poset.minimal {
            is_minimal[i] = true;
        }
        let mut uncovered = vec![0u64; cap + 1];
        let mut uncovered_min = vec![0u64; cap + 1];
        for (i, e) in poset.elements.iter().enumerate() {
            let lvl = e.cardinality() as usize;
            uncovered[lvl] += 1;
            if is_minimal[i] {
                uncovered_min[lvl] += 1;
            }
        }
        let mut binom = vec![vec![0u64; cap + 2]; cap + 2];
        for a in 0..=cap + 1 {
            binom[a][0] = 1;
            for b in 1..=a {
                binom[a][b] = binom[a - 1][b - 1] + binom[a - 1].get(b).copied().unwrap_or(0);
            }
        }
        Search {
            poset,
            covered: vec![false; poset.len()],
            uncovered,
            uncovered_min,
            is_minimal,
            binom,
            nodes: 0,
            budget,
            chosen: Vec::new(),
        }
    }

    /// Counting bound: every uncovered minimal element `g` must head its own
    /// interval `[g, B]` with `|B| = cap`, and those intervals are pairwise
    /// disjoint and lie in the uncovered region. Summing their forced level
    /// contents must not exceed what is uncovered at any level.
    fn counts_feasible(&self) -> bool {
        let cap = self.poset.cap as usize;
        for j in 0..=cap {
            let mut need = 0u64;
            for d in 0..=j {
                let m = self.uncovered_min[d];
                if m > 0 {
                    need = need.saturating_add(m.saturating_mul(self.binom[cap - d][j - d]));
                }
            }
            if need > self.uncovered[j] {
                return false;
            }
        }
        true
    }

    fn cover_interval(&mut self, a: VertexSet, b: VertexSet) -> Vec<usize> {
        let mut marked = Vec::new();
        for c in sets_between(a, b) {
            let i = self.poset.index[&c.bits()];
            debug_assert!(!self.covered[i]);
            self.covered[i] = true;
            let lvl = c.cardinality() as usize;
            self.uncovered[lvl] -= 1;
            if self.is_minimal[i] {
                self.uncovered_min[lvl] -= 1;
            }
            marked.push(i);
        }
        marked
    }

    fn uncover(&mut self, marked: &[usize]) {
        for &i in marked {
            self.covered[i] = false;
            let lvl = self.poset.elements[i].cardinality() as usize;
            self.uncovered[lvl] += 1;
            if self.is_minimal[i] {
                self.uncovered_min[lvl] += 1;
            }
        }
    }

    /// Interval `[a, b]` is placeable when all of its members are uncovered.
    fn interval_free(&self, a: VertexSet, b: VertexSet) -> bool {
        sets_between(a, b).all(|c| !self.covered[self.poset.index[&c.bits()]])
    }

    /// Candidate tops for bottom `a`: supersets of size `cap`, rev-lex order.
    fn candidate_tops(&self, a: VertexSet) -> Vec<VertexSet> {
        let missing = self.poset.cap - a.cardinality();
        if missing == 0 {
            return vec![a];
        }
        let complement = VertexSet::full(self.poset.n).minus(a);
        let free: Vec<u32> = complement.vertices().collect();
        let mut tops: Vec<VertexSet> = k_subsets(free.len() as u32, missing)
            .map(|pattern| {
                let mut b = a;
                for pos in pattern.vertices() {
                    b = b.with(free[pos as usize - 1]);
                }
                b
            })
            .collect();
        tops.sort_by_key(|b| b.bits());
        tops
    }

    fn solve(&mut self, hint: usize) -> Result<bool> {
        if !self.counts_feasible() {
            return Ok(false);
        }
        // The first uncovered element (size, rev-lex order) must be the
        // bottom of its interval: anything strictly below it is covered.
        let Some(next) = (hint..self.poset.len()).find(|&i| !self.covered[i]) else {
            return Ok(true);
        };
        let a = self.poset.elements[next];
        for b in self.candidate_tops(a) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::ResourceLimit(self.nodes));
            }
            if !self.interval_free(a, b) {
                continue;
            }
            let marked = self.cover_interval(a, b);
            self.chosen.push((a, b));
            if self.solve(next + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.uncover(&marked);
        }
        Ok(false)
    }
}

/// Complete backtracking decision of partitionability with the default node
/// budget. `Ok(Some(_))` carries a witness, `Ok(None)` means no partition
/// exists.
pub fn is_partitionable(poset: &ReducedPoset) -> Result<Option<IntervalPartition>> {
    is_partitionable_with_budget(poset, DEFAULT_NODE_BUDGET)
}

/// As [`is_partitionable`], with an explicit budget. Exceeding the budget is
/// a [`Error::ResourceLimit`], never a wrong answer.
pub fn is_partitionable_with_budget(
    poset: &ReducedPoset,
    budget: u64,
) -> Result<Option<IntervalPartition>> {
    let mut search = Search::new(poset, budget);
    if search.solve(0)? {
        Ok(Some(IntervalPartition::new(search.chosen)))
    } else {
        Ok(None)
    }
}

/// Independent witness checker: enumerates every interval's contents and
/// demands disjointness, exact coverage of the poset, and tops of the cap
/// size. Shares no state with the solver.
pub fn verify_partition(poset: &ReducedPoset, partition: &IntervalPartition) -> bool {
    let mut marked = vec![false; poset.len()];
    for (a, b) in partition.intervals() {
        if !a.is_subset_of(*b) || b.cardinality() != poset.cap() {
            return false;
        }
        for c in sets_between(*a, *b) {
            let Some(&i) = poset.index.get(&c.bits()) else {
                return false;
            };
            if marked[i] {
                return false;
            }
            marked[i] = true;
        }
    }
    marked.into_iter().all(|m| m)
}

/// Exact Stanley depth: the largest `k` for which the capped poset is
/// partitionable, found by an ascending scan from the smallest generator
/// degree, together with the witness at that `k`.
pub fn stanley_depth(ideal: &MonomialIdeal) -> Result<(u32, IntervalPartition)> {
    stanley_depth_with_budget(ideal, DEFAULT_NODE_BUDGET)
}

pub fn stanley_depth_with_budget(
    ideal: &MonomialIdeal,
    budget: u64,
) -> Result<(u32, IntervalPartition)> {
    let mut best: Option<(u32, IntervalPartition)> = None;
    for k in ideal.min_degree()..=ideal.n() {
        let poset = build_reduced_poset(ideal, k)?;
        match is_partitionable_with_budget(&poset, budget)? {
            Some(witness) => best = Some((k, witness)),
            None => break,
        }
    }
    Ok(best.expect("the poset capped at the minimal degree is partitionable"))
}

/// Report of the generator-count criterion on one ideal: whether
/// `μ_d(I) <= min(C(n, d+1), ξ_{n-d})` held, and what the collapsibility
/// decision on the degree-`d` part was.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub n: u32,
    /// Smallest generator degree.
    pub d: u32,
    pub mu_d: u64,
    pub bound: u64,
    pub bound_branch: Option<MinBranch>,
    pub hypothesis_met: bool,
    /// Whether `sdepth >= d+1`, decided via uniform collapsibility of the
    /// complement complex of the degree-`d` part.
    pub collapsible: bool,
    pub certificate: Option<CollapseCertificate>,
}

impl TheoremReport {
    /// False only if the hypothesis held yet the decision came back negative,
    /// which would contradict the criterion.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_met || self.collapsible
    }
}

/// Tests the generator-count criterion on `I`: compute `μ_d` and the bound,
/// then decide `sdepth(I) >= d+1` through the degree-`d` subideal (whose
/// capped poset at `d+1` differs from `I`'s only in ways that do not affect
/// the answer) and its complement complex.
pub fn verify_main_theorem(ideal: &MonomialIdeal) -> Result<TheoremReport> {
    let n = ideal.n();
    let d = ideal.min_degree();
    let mu_d = ideal.mu_d(d) as u64;

    if d == n {
        // The single generator [n]: nothing to drop, sdepth is exactly n.
        return Ok(TheoremReport {
            n,
            d,
            mu_d,
            bound: 0,
            bound_branch: None,
            hypothesis_met: false,
            collapsible: false,
            certificate: None,
        });
    }

    let delta = n - d;
    let (bound, branch) = if delta < n {
        let (b, br) = min_bound(n, delta)?;
        (b, Some(br))
    } else {
        // d = 0 (the unit ideal): evaluate the two sides directly.
        let b = binomial(n as u64, 1)?.min(crate::combinatorics::xi(n)?);
        (b, None)
    };
    let hypothesis_met = mu_d <= bound;

    let pure_part = ideal.degree_part(d)?;
    let (collapsible, certificate) = is_uniformly_collapsible(&pure_part.complement_complex())?;
    Ok(TheoremReport {
        n,
        d,
        mu_d,
        bound,
        bound_branch: branch,
        hypothesis_met,
        collapsible,
        certificate: Some(certificate),
    })
}

/// Comparison of the exact Stanley depth of one ideal against the conjectured
/// lower bound `d + floor(C(n, d+1) / C(n, d))`. Reports, never asserts.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub n: u32,
    pub d: u32,
    pub exact: u32,
    pub conjectured_lower: u32,
    /// Known upper bound for the Veronese ideal (same expression as the
    /// conjectured lower bound); `None` for non-Veronese inputs.
    pub veronese_upper: Option<u32>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.exact >= self.conjectured_lower
    }

    pub fn tight(&self) -> bool {
        self.exact == self.conjectured_lower
    }
}

/// Probes the conjectured bound on the squarefree Veronese ideal of `(n, d)`.
pub fn probe_conjecture(n: u32, d: u32, budget: u64) -> Result<ConjectureReport> {
    let ideal = gen_veronese(n, d)?;
    let mut report = probe_conjecture_ideal(&ideal, budget)?;
    report.veronese_upper = Some(report.conjectured_lower);
    Ok(report)
}

/// Probes the conjectured bound on an arbitrary user-supplied ideal.
pub fn probe_conjecture_ideal(ideal: &MonomialIdeal, budget: u64) -> Result<ConjectureReport> {
    let n = ideal.n();
    let d = ideal.min_degree();
    let floor_term = if d < n {
        binomial(n as u64, d as u64 + 1)? / binomial(n as u64, d as u64)?
    } else {
        0
    };
    let (exact, _) = stanley_depth_with_budget(ideal, budget)?;
    Ok(ConjectureReport {
        n,
        d,
        exact,
        conjectured_lower: d + floor_term as u32,
        veronese_upper: None,
    })
}

/// True exactly when `I` is minimal among the pure degree-`d` ideals whose
/// Stanley depth is stuck at `d`: the ideal itself fails to reach `d+1`, yet
/// dropping any single generator reaches it. Decided through uniform
/// collapsibility of complement complexes.
pub fn check_minimal_in_xi(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.n();
    let Some(d) = ideal.pure_degree() else {
        return Err(Error::NotPure("minimality test needs a pure ideal".into()));
    };
    if 2 * d < n || d >= n {
        return Err(Error::InvalidArgument(format!(
            "minimality in the stuck family is defined for n/2 <= d < n (got n={n}, d={d})"
        )));
    }
    let (collapsible, _) = is_uniformly_collapsible(&ideal.complement_complex())?;
    if collapsible {
        return Ok(false); // sdepth >= d+1: not in the family at all
    }
    // mu >= 2 here: a single-facet complement complex is always collapsible.
    for skip in 0..ideal.mu() {
        let rest: Vec<VertexSet> = ideal
            .generators()
            .iter()
            .enumerate()
            .filter_map(|(i, g)| (i != skip).then_some(*g))
            .collect();
        let sub = MonomialIdeal::new(n, rest)?;
        let (sub_ok, _) = is_uniformly_collapsible(&sub.complement_complex())?;
        if !sub_ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the exhaustive search for minimal stuck ideals at `(n, d)`.
#[derive(Debug, Clone)]
pub struct XiMinimalReport {
    pub n: u32,
    pub d: u32,
    pub families_checked: u64,
    pub minimal_count: u64,
    /// Largest and smallest generator counts among the minimal stuck ideals.
    pub mu_max: Option<u64>,
    pub mu_min: Option<u64>,
    /// One ideal attaining `mu_max`.
    pub witness: Option<Vec<VertexSet>>,
}

const XI_PROBE_LIMIT: u64 = 20;

/// Enumerates every pure degree-`d` ideal on `[n]` and reports the range of
/// `μ` over those minimal in the stuck family. Feasible only while `C(n, d)`
/// stays small.
pub fn probe_xi_minimal(n: u32, d: u32) -> Result<XiMinimalReport> {
    if d < 1 || d >= n || 2 * d < n {
        return Err(Error::InvalidArgument(format!(
            "probe needs n/2 <= d < n, got n={n}, d={d}"
        )));
    }
    let total = binomial(n as u64, d as u64)?;
    if total > XI_PROBE_LIMIT {
        return Err(Error::ResourceLimit(total));
    }
    let all: Vec<VertexSet> = k_subsets(n, d).collect();
    let mut report = XiMinimalReport {
        n,
        d,
        families_checked: 0,
        minimal_count: 0,
        mu_max: None,
        mu_min: None,
        witness: None,
    };
    for mask in 1u64..(1u64 << total) {
        report.families_checked += 1;
        let gens: Vec<VertexSet> = (0..total)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i as usize])
            .collect();
        let ideal = MonomialIdeal::new(n, gens)?;
        if check_minimal_in_xi(&ideal)? {
            report.minimal_count += 1;
            let mu = ideal.mu() as u64;
            if report.mu_max.is_none_or(|m| mu > m) {
                report.mu_max = Some(mu);
                report.witness = Some(ideal.generators().to_vec());
            }
            if report.mu_min.is_none_or(|m| mu < m) {
                report.mu_min = Some(mu);
            }
        }
    }
    Ok(report)
}
