//! Uniform collapsibility of a pure complex, decided by maximum bipartite
//! matching between facets and ridges.
//!
//! A pure complex of dimension `δ-1` is uniformly collapsible when every
//! facet can drop one vertex so that the resulting codimension-1 faces are
//! pairwise distinct, i.e. there is a system of distinct representatives
//! between the facet set and the ridge set. By Hall's marriage theorem this happens exactly
//! when every facet subset `A` covers at least `|A|` ridges; a failing `A` is
//! a Hall violator, and either outcome ships a certificate that an
//! independent verifier re-checks from scratch.

use std::collections::{HashMap, VecDeque};

use crate::complexes::{family_shadow, MonomialIdeal, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::IntervalPartition;
use crate::sets::{k_subsets, VertexSet};

/// The bipartite graph between the facets of a pure complex and its ridges
/// (faces of one dimension less), in rev-lex order on both sides.
#[derive(Debug, Clone)]
pub struct FacetRidgeGraph {
    delta: u32,
    facets: Vec<VertexSet>,
    ridges: Vec<VertexSet>,
    /// For each facet, the indices of its `δ` ridges, ascending.
    adj: Vec<Vec<usize>>,
}

impl FacetRidgeGraph {
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn ridge_count(&self) -> usize {
        self.ridges.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn ridges(&self) -> &[VertexSet] {
        &self.ridges
    }

    pub fn neighbors(&self, facet: usize) -> &[usize] {
        &self.adj[facet]
    }

    pub fn facet_size(&self) -> u32 {
        self.delta
    }
}

/// Builds the facet–ridge graph of a pure complex of dimension `δ-1 >= 0`.
pub fn build_facet_ridge_graph(d: &SimplicialComplex) -> Result<FacetRidgeGraph> {
    let Some(delta) = d.pure_facet_size() else {
        let sizes: Vec<u32> = d.facets().iter().map(|f| f.cardinality()).collect();
        return Err(Error::NotPure(format!("facet sizes {sizes:?} differ")));
    };
    if delta == 0 {
        return Err(Error::InvalidArgument(
            "the complex {∅} has no vertex to drop".into(),
        ));
    }
    let facets = d.facets().to_vec();
    let ridges = family_shadow(&facets)?;
    let ridge_index: HashMap<u64, usize> = ridges
        .iter()
        .enumerate()
        .map(|(i, r)| (r.bits(), i))
        .collect();
    let adj = facets
        .iter()
        .map(|f| {
            let mut ns: Vec<usize> = f
                .vertices()
                .map(|v| ridge_index[&f.without(v).bits()])
                .collect();
            ns.sort_unstable();
            ns
        })
        .collect();
    Ok(FacetRidgeGraph {
        delta,
        facets,
        ridges,
        adj,
    })
}

/// Maximum matching facet → ridge by Hopcroft–Karp. Deterministic for a
/// fixed graph: layers and augmenting searches follow the stored orders.
pub fn max_matching(g: &FacetRidgeGraph) -> Vec<Option<usize>> {
    let nx = g.facet_count();
    let ny = g.ridge_count();
    let mut match_x: Vec<Option<usize>> = vec![None; nx];
    let mut match_y: Vec<Option<usize>> = vec![None; ny];

    loop {
        // BFS layering from free facets.
        let mut dist: Vec<u32> = vec![u32::MAX; nx];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for x in 0..nx {
            if match_x[x].is_none() {
                dist[x] = 0;
                queue.push_back(x);
            }
        }
        let mut found_free_ridge = false;
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                match match_y[y] {
                    None => found_free_ridge = true,
                    Some(x2) => {
                        if dist[x2] == u32::MAX {
                            dist[x2] = dist[x] + 1;
                            queue.push_back(x2);
                        }
                    }
                }
            }
        }
        if !found_free_ridge {
            break;
        }

        fn augment(
            g: &FacetRidgeGraph,
            x: usize,
            dist: &mut [u32],
            match_x: &mut [Option<usize>],
            match_y: &mut [Option<usize>],
        ) -> bool {
            let d = std::mem::replace(&mut dist[x], u32::MAX);
            for &y in g.neighbors(x) {
                let ok = match match_y[y] {
                    None => true,
                    Some(x2) => dist[x2] == d + 1 && augment(g, x2, dist, match_x, match_y),
                };
                if ok {
                    match_x[x] = Some(y);
                    match_y[y] = Some(x);
                    return true;
                }
            }
            false
        }

        let mut progressed = false;
        for x in 0..nx {
            if match_x[x].is_none() && dist[x] == 0 {
                progressed |= augment(g, x, &mut dist, &mut match_x, &mut match_y);
            }
        }
        if !progressed {
            break;
        }
    }
    match_x
}

/// Proof object for the collapsibility decision: either a full facet →
/// dropped-vertex map whose reduced faces are pairwise distinct, or a
/// nonempty facet set covering strictly fewer ridges than its own size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CollapseCertificate {
    /// `(facet, dropped vertex)` pairs, one per facet, rev-lex facet order.
    Sdr(Vec<(VertexSet, u32)>),
    /// A Hall violator: facets `A` with `|Γ(A)| < |A|`.
    Violator(Vec<VertexSet>),
}

impl CollapseCertificate {
    pub fn is_collapsible(&self) -> bool {
        matches!(self, CollapseCertificate::Sdr(_))
    }

    /// Line-oriented text form: an `SDR` header with `facet <set> drop <v>`
    /// lines, or a `VIOLATOR` header with one facet per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        match self {
            CollapseCertificate::Sdr(entries) => {
                out.push_str("SDR\n");
                for (facet, v) in entries {
                    out.push_str(&format!("facet {facet} drop {v}\n"));
                }
            }
            CollapseCertificate::Violator(facets) => {
                out.push_str("VIOLATOR\n");
                for f in facets {
                    out.push_str(&format!("{f}\n"));
                }
            }
        }
        out
    }
}

/// Decides uniform collapsibility of a pure complex. `true` comes with an
/// SDR certificate, `false` with a Hall violator extracted from alternating
/// paths out of the first unmatched facet.
pub fn is_uniformly_collapsible(d: &SimplicialComplex) -> Result<(bool, CollapseCertificate)> {
    let g = build_facet_ridge_graph(d)?;
    let match_x = max_matching(&g);

    if let Some(root) = (0..g.facet_count()).find(|&x| match_x[x].is_none()) {
        // Alternating reachability: facet → any ridge, ridge → its partner.
        let mut match_y: Vec<Option<usize>> = vec![None; g.ridge_count()];
        for (x, m) in match_x.iter().enumerate() {
            if let Some(y) = m {
                match_y[*y] = Some(x);
            }
        }
        let mut seen_x = vec![false; g.facet_count()];
        let mut seen_y = vec![false; g.ridge_count()];
        let mut queue = VecDeque::from([root]);
        seen_x[root] = true;
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen_y[y] {
                    seen_y[y] = true;
                    if let Some(x2) = match_y[y] {
                        if !seen_x[x2] {
                            seen_x[x2] = true;
                            queue.push_back(x2);
                        }
                    }
                }
            }
        }
        let violator: Vec<VertexSet> = (0..g.facet_count())
            .filter(|&x| seen_x[x])
            .map(|x| g.facets()[x])
            .collect();
        return Ok((false, CollapseCertificate::Violator(violator)));
    }

    let entries = match_x
        .iter()
        .enumerate()
        .map(|(x, m)| {
            let facet = g.facets()[x];
            let ridge = g.ridges()[m.expect("complete matching")];
            let dropped = facet
                .minus(ridge)
                .vertices()
                .next()
                .expect("facet exceeds its ridge by one vertex");
            (facet, dropped)
        })
        .collect();
    Ok((true, CollapseCertificate::Sdr(entries)))
}

/// Re-checks a certificate against the complex from first principles,
/// without consulting the matcher. SDRs must cover every facet exactly once,
/// drop a vertex they contain, and produce pairwise distinct faces; violators
/// must be nonempty facet subsets whose enumerated ridge neighborhood is
/// strictly smaller.
pub fn verify_certificate(d: &SimplicialComplex, cert: &CollapseCertificate) -> Result<bool> {
    let Some(delta) = d.pure_facet_size() else {
        return Err(Error::NotPure(
            "certificate check needs a pure complex".into(),
        ));
    };
    if delta == 0 {
        return Err(Error::InvalidArgument(
            "the complex {∅} has no vertex to drop".into(),
        ));
    }
    match cert {
        CollapseCertificate::Sdr(entries) => {
            let mut facets_seen: Vec<u64> = Vec::with_capacity(entries.len());
            let mut reduced: Vec<u64> = Vec::with_capacity(entries.len());
            for (facet, v) in entries {
                if !facet.contains(*v) {
                    return Ok(false);
                }
                facets_seen.push(facet.bits());
                reduced.push(facet.without(*v).bits());
            }
            facets_seen.sort_unstable();
            facets_seen.dedup();
            let mut expect: Vec<u64> = d.facets().iter().map(|f| f.bits()).collect();
            expect.sort_unstable();
            if facets_seen != expect {
                return Ok(false);
            }
            let distinct = {
                reduced.sort_unstable();
                reduced.windows(2).all(|w| w[0] != w[1])
            };
            Ok(distinct)
        }
        CollapseCertificate::Violator(subset) => {
            if subset.is_empty() {
                return Ok(false);
            }
            let mut members: Vec<u64> = subset.iter().map(|f| f.bits()).collect();
            members.sort_unstable();
            members.dedup();
            if members.len() != subset.len() {
                return Ok(false);
            }
            let facet_bits: Vec<u64> = d.facets().iter().map(|f| f.bits()).collect();
            if !members.iter().all(|m| facet_bits.contains(m)) {
                return Ok(false);
            }
            let neighborhood = family_shadow(subset)?;
            Ok(neighborhood.len() < subset.len())
        }
    }
}

/// Translates an SDR on the complement complex into an interval partition of
/// the poset of `I`'s monomials capped at degree `d+1`: each generator `m`
/// whose facet dropped vertex `v` yields the interval `[m, m ∪ {v}]`, and
/// every remaining degree-`d+1` monomial becomes its own singleton interval.
pub fn interval_partition_from_sdr(
    ideal: &MonomialIdeal,
    cert: &CollapseCertificate,
) -> Result<IntervalPartition> {
    let Some(d) = ideal.pure_degree() else {
        return Err(Error::NotPure(
            "interval extraction needs an ideal pure of one degree".into(),
        ));
    };
    let complex = ideal.complement_complex();
    let CollapseCertificate::Sdr(entries) = cert else {
        return Err(Error::InvalidCertificate(
            "interval extraction needs an SDR, not a violator".into(),
        ));
    };
    if !verify_certificate(&complex, cert)? {
        return Err(Error::InvalidCertificate(
            "SDR fails verification against the complement complex".into(),
        ));
    }

    let n = ideal.n();
    let mut intervals: Vec<(VertexSet, VertexSet)> = Vec::with_capacity(entries.len());
    let mut tops: Vec<u64> = Vec::with_capacity(entries.len());
    for (facet, v) in entries {
        let bottom = facet.complement(n);
        let top = bottom.with(*v);
        tops.push(top.bits());
        intervals.push((bottom, top));
    }
    intervals.sort_by_key(|(a, _)| a.bits());
    tops.sort_unstable();

    // Singletons for the unused degree-(d+1) monomials of the ideal.
    for c in k_subsets(n, d + 1) {
        if ideal.contains_support(c) && tops.binary_search(&c.bits()).is_err() {
            intervals.push((c, c));
        }
    }
    Ok(IntervalPartition::new(intervals))
}

/// The complement transfer: from a verified partition of the degree-capped
/// poset of a pure degree-`k` ideal, take each generator's interval top `m̃`
/// and form `J = ⟨complements of the tops⟩`. `J` is pure of degree `n-k-1`
/// with the same number of generators, and its Stanley depth is at least
/// `n-k`.
pub fn complement_transfer(
    ideal: &MonomialIdeal,
    partition: &IntervalPartition,
) -> Result<MonomialIdeal> {
    let Some(k) = ideal.pure_degree() else {
        return Err(Error::NotPure("transfer needs a pure ideal".into()));
    };
    let n = ideal.n();
    if k + 1 > n {
        return Err(Error::InvalidArgument(
            "transfer needs generator degree below n".into(),
        ));
    }
    let poset = crate::poset::build_reduced_poset(ideal, k + 1)?;
    if !crate::poset::verify_partition(&poset, partition) {
        return Err(Error::InvalidCertificate(
            "partition fails verification against the capped poset".into(),
        ));
    }
    let mut tops = Vec::with_capacity(ideal.mu());
    for g in ideal.generators() {
        let (_, top) = partition
            .intervals()
            .iter()
            .find(|(a, b)| a.is_subset_of(*g) && g.is_subset_of(*b))
            .expect("a verified partition covers every generator");
        tops.push(top.complement(n));
    }
    MonomialIdeal::new(n, tops)
}

/// Outcome of the exhaustive probe for the property "ridge count at least
/// facet count implies uniformly collapsible" at fixed `(n, δ)`.
#[derive(Debug, Clone)]
pub struct StarProbeReport {
    pub n: u32,
    pub delta: u32,
    /// Number of pure complexes inspected (every nonempty family of
    /// δ-subsets of `[n]`).
    pub families_checked: u64,
    /// Complexes with `f_{δ-2} >= f_{δ-1}` that are nevertheless not
    /// uniformly collapsible (up to `max_witnesses` of them).
    pub counterexamples: Vec<Vec<VertexSet>>,
    pub counterexample_count: u64,
}

impl StarProbeReport {
    pub fn property_holds(&self) -> bool {
        self.counterexample_count == 0
    }
}

const STAR_PROBE_LIMIT: u32 = 20;
const STAR_PROBE_WITNESSES: usize = 10;

/// Exhaustively tests every pure `(δ-1)`-dimensional complex on `[n]` whose
/// ridge count reaches its facet count, and reports any that fail to be
/// uniformly collapsible. Feasible only while `C(n, δ)` stays small.
pub fn probe_star(n: u32, delta: u32) -> Result<StarProbeReport> {
    use crate::combinatorics::binomial;
    if delta < 1 || delta > n {
        return Err(Error::InvalidArgument(format!(
            "probe needs 1 <= delta <= n, got delta={delta}, n={n}"
        )));
    }
    let total = binomial(n as u64, delta as u64)?;
    if total > STAR_PROBE_LIMIT as u64 {
        return Err(Error::ResourceLimit(total));
    }
    let all: Vec<VertexSet> = k_subsets(n, delta).collect();
    let mut counterexamples = Vec::new();
    let mut counterexample_count = 0u64;
    let mut families_checked = 0u64;
    for mask in 1u64..(1u64 << total) {
        families_checked += 1;
        let family: Vec<VertexSet> = (0..total)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i as usize])
            .collect();
        let ridges = family_shadow(&family)?;
        if ridges.len() < family.len() {
            continue;
        }
        let complex = SimplicialComplex::new(n, family.clone())?;
        let (collapsible, _) = is_uniformly_collapsible(&complex)?;
        if !collapsible {
            counterexample_count += 1;
            if counterexamples.len() < STAR_PROBE_WITNESSES {
                counterexamples.push(family);
            }
        }
    }
    Ok(StarProbeReport {
        n,
        delta,
        families_checked,
        counterexamples,
        counterexample_count,
    })
}
