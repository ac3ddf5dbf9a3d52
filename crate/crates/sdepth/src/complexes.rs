//! Squarefree monomial ideals, simplicial complexes, and the complement
//! duality between them: the complex spanned by the complements of an ideal's
//! minimal generators, and back.
//!
//! Also hosts the rev-lex compressed families `C_{n,k}^l` and generators for
//! the named example objects (Veronese ideals, compressed ideals, the
//! just-past-threshold complexes, the padded counterexample, the cycle with a
//! chord).

use std::collections::HashSet;
use std::fmt;

use crate::combinatorics::{binomial, xi};
use crate::error::{Error, Result};
use crate::sets::{k_subsets, VertexSet, MAX_GROUND_SET};

fn check_ground_set(n: u32) -> Result<()> {
    if !(1..=MAX_GROUND_SET).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "ground set size must be in 1..={MAX_GROUND_SET}, got {n}"
        )));
    }
    Ok(())
}

/// Keeps the minimal sets of a family: no survivor contains another, and the
/// result generates the same upward closure. Sorted by (size, bits).
fn minimal_antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.cardinality(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|m| m.is_subset_of(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Keeps the maximal sets of a family (the facets of its span).
fn maximal_antichain(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.cardinality()), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|m| s.is_subset_of(*m)) {
            kept.push(s);
        }
    }
    kept.sort_by_key(|s| (s.cardinality(), s.bits()));
    kept
}

/// An ideal generated by squarefree monomials, stored as its minimal
/// generating antichain over `[n]`. The unit ideal is the single generator ∅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: u32,
    generators: Vec<VertexSet>,
}

impl MonomialIdeal {
    /// Normalizes `raw` into the unique minimal generating set: duplicates
    /// and any generator containing another are removed.
    pub fn new(n: u32, raw: Vec<VertexSet>) -> Result<Self> {
        check_ground_set(n)?;
        if raw.is_empty() {
            return Err(Error::InvalidArgument(
                "an ideal needs at least one generator (the zero ideal is not supported)".into(),
            ));
        }
        for s in &raw {
            if !s.fits_within(n) {
                return Err(Error::InvalidArgument(format!(
                    "generator {{{s}}} does not fit in [{n}]"
                )));
            }
        }
        Ok(MonomialIdeal {
            n,
            generators: minimal_antichain(raw),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Minimal generators, sorted by (degree, rev-lex).
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    /// Number of minimal generators μ(I).
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Number of minimal generators of degree exactly `d`.
    pub fn mu_d(&self, d: u32) -> usize {
        self.generators
            .iter()
            .filter(|g| g.cardinality() == d)
            .count()
    }

    /// Smallest generator degree.
    pub fn min_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| g.cardinality())
            .min()
            .expect("nonempty")
    }

    /// `Some(d)` when every minimal generator has degree `d`.
    pub fn pure_degree(&self) -> Option<u32> {
        let d = self.generators[0].cardinality();
        self.generators
            .iter()
            .all(|g| g.cardinality() == d)
            .then_some(d)
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_empty()
    }

    /// The subideal spanned by the degree-`d` minimal generators.
    pub fn degree_part(&self, d: u32) -> Result<MonomialIdeal> {
        let gens: Vec<VertexSet> = self
            .generators
            .iter()
            .copied()
            .filter(|g| g.cardinality() == d)
            .collect();
        if gens.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "no generators of degree {d}"
            )));
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// Membership of the squarefree monomial with support `a`: some minimal
    /// generator divides it.
    pub fn contains_support(&self, a: VertexSet) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(a))
    }

    /// The complement complex: facets are the complements of the minimal
    /// generators. Pure of degree `k` ideals map to pure complexes of
    /// dimension `n - k - 1`, with one facet per generator.
    pub fn complement_complex(&self) -> SimplicialComplex {
        let facets = self
            .generators
            .iter()
            .map(|g| g.complement(self.n))
            .collect();
        // Complements of an antichain form an antichain; no re-pruning needed.
        SimplicialComplex::new(self.n, facets).expect("complements stay within the ground set")
    }
}

/// A simplicial complex over `[n]`, stored by its facet antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex spanned by `faces`; non-maximal faces are dropped.
    pub fn new(n: u32, faces: Vec<VertexSet>) -> Result<Self> {
        check_ground_set(n)?;
        if faces.is_empty() {
            return Err(Error::InvalidArgument(
                "a complex needs at least one facet".into(),
            ));
        }
        for s in &faces {
            if !s.fits_within(n) {
                return Err(Error::InvalidArgument(format!(
                    "facet {{{s}}} does not fit in [{n}]"
                )));
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal_antichain(faces),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// `Some(δ)` when every facet has cardinality `δ` (pure of dimension
    /// `δ - 1`).
    pub fn pure_facet_size(&self) -> Option<u32> {
        let d = self.facets[0].cardinality();
        self.facets
            .iter()
            .all(|f| f.cardinality() == d)
            .then_some(d)
    }

    /// The unique ideal whose complement complex this is: generators are the
    /// complements of the facets.
    pub fn complement_ideal(&self) -> MonomialIdeal {
        let gens = self.facets.iter().map(|f| f.complement(self.n)).collect();
        MonomialIdeal::new(self.n, gens).expect("complements stay within the ground set")
    }

    /// Exact face counts by enumerating every subset of every facet, with
    /// deduplication. Exponential in the facet size; intended for desk-scale
    /// inputs.
    pub fn f_vector(&self) -> FVector {
        let mut faces: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            for sub in crate::sets::sets_between(VertexSet::empty(), *f) {
                faces.insert(sub.bits());
            }
        }
        let dim_plus_one = self
            .facets
            .iter()
            .map(|f| f.cardinality())
            .max()
            .unwrap_or(0) as usize;
        let mut counts = vec![0u64; dim_plus_one + 1];
        for bits in faces {
            counts[bits.count_ones() as usize] += 1;
        }
        FVector(counts)
    }
}

/// The f-vector `(f_{-1} = 1, f_0, …, f_{dim})`, indexed by face dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// `f_i` for `-1 <= i`; zero beyond the dimension.
    pub fn get(&self, i: i64) -> u64 {
        let idx = i + 1;
        if idx < 0 {
            return 0;
        }
        self.0.get(idx as usize).copied().unwrap_or(0)
    }

    /// Dimension of the complex (largest `i` with `f_i > 0`).
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 2
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The unique compressed collection of `l` many `k`-subsets of `[n]`: the
/// first `l` of them in rev-lex order.
pub fn compressed_family(n: u32, k: u32, l: u64) -> Result<Vec<VertexSet>> {
    check_ground_set(n)?;
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "compressed_family needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let total = binomial(n as u64, k as u64)?;
    if l < 1 || l > total {
        return Err(Error::InvalidArgument(format!(
            "compressed_family needs 1 <= l <= C({n},{k}) = {total}, got l={l}"
        )));
    }
    Ok(k_subsets(n, k).take(l as usize).collect())
}

/// The shadow `∂F`: every `(k-1)`-subset contained in some member of the
/// size-`k` family `F`. Members must share one cardinality `k >= 1`.
/// Sorted in rev-lex order.
pub fn family_shadow(family: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let Some(first) = family.first() else {
        return Err(Error::InvalidArgument("shadow of an empty family".into()));
    };
    let k = first.cardinality();
    if k < 1 {
        return Err(Error::InvalidArgument(
            "shadow needs members of size >= 1".into(),
        ));
    }
    let mut out: HashSet<u64> = HashSet::new();
    for f in family {
        if f.cardinality() != k {
            return Err(Error::InvalidArgument(format!(
                "mixed sizes in family: {} and {k}",
                f.cardinality()
            )));
        }
        for v in f.vertices() {
            out.insert(f.without(v).bits());
        }
    }
    let mut shadow: Vec<VertexSet> = out.into_iter().map(VertexSet::from_bits).collect();
    shadow.sort_by_key(|s| s.bits());
    Ok(shadow)
}

/// The squarefree Veronese ideal: all degree-`d` squarefree monomials.
pub fn gen_veronese(n: u32, d: u32) -> Result<MonomialIdeal> {
    check_ground_set(n)?;
    if d < 1 || d > n {
        return Err(Error::InvalidArgument(format!(
            "veronese needs 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    MonomialIdeal::new(n, k_subsets(n, d).collect())
}

/// The compressed ideal: complement ideal of the complex spanned by
/// `compressed_family(n, n-d, l)`. Pure of degree `d` with `l` generators;
/// `l = C(n, d)` recovers the Veronese ideal.
pub fn gen_compressed_ideal(n: u32, d: u32, l: u64) -> Result<MonomialIdeal> {
    check_ground_set(n)?;
    if d < 1 || d >= n {
        return Err(Error::InvalidArgument(format!(
            "compressed ideal needs 1 <= d < n, got d={d}, n={n}"
        )));
    }
    let family = compressed_family(n, n - d, l)?;
    Ok(SimplicialComplex::new(n, family)?.complement_ideal())
}

/// The complex spanned by the first `ξ_δ + 1` many δ-subsets of `[n]`: one
/// facet past the threshold, hence never uniformly collapsible.
pub fn gen_not_uc(n: u32, delta: u32) -> Result<SimplicialComplex> {
    let count = xi(delta)?.checked_add(1).ok_or(Error::Overflow)?;
    let family = compressed_family(n, delta, count)?;
    SimplicialComplex::new(n, family)
}

/// The padded counterexample: the just-past-threshold complex plus one facet
/// `{n, …, n+δ-1}` of fresh vertices, over the ground set `[n+δ-1]`. For
/// `δ >= 3` the ridge count exceeds the facet count, yet the complex is not
/// uniformly collapsible.
pub fn gen_padded_counterexample(n: u32, delta: u32) -> Result<SimplicialComplex> {
    let base = gen_not_uc(n, delta)?;
    let bigger = n
        .checked_add(delta)
        .and_then(|m| m.checked_sub(1))
        .ok_or(Error::Overflow)?;
    check_ground_set(bigger)?;
    let mut facets = base.facets().to_vec();
    facets.push(VertexSet::from_vertices(n..=bigger)?);
    SimplicialComplex::new(bigger, facets)
}

/// The `n`-cycle `1–2–…–n–1` with the chord `{1,3}`, as a pure 1-dimensional
/// complex with `n+1` edges on `n` vertices.
pub fn gen_cycle_with_chord(n: u32) -> Result<SimplicialComplex> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "cycle with chord needs n >= 4, got {n}"
        )));
    }
    check_ground_set(n)?;
    let mut edges: Vec<VertexSet> = (1..n)
        .map(|i| VertexSet::from_vertices([i, i + 1]))
        .collect::<Result<_>>()?;
    edges.push(VertexSet::from_vertices([n, 1])?);
    edges.push(VertexSet::from_vertices([1, 3])?);
    SimplicialComplex::new(n, edges)
}
