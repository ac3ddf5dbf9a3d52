//! Subsets of `[n] = {1, …, n}` packed into a single machine word.
//!
//! A `VertexSet` is the shared currency of the crate: it is a squarefree
//! monomial (its variable support), a face of a simplicial complex, and an
//! element of the divisibility poset, depending on context. The ground-set
//! size `n` is carried by the surrounding ideal or complex, not by the set
//! itself.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set. One bit per vertex.
pub const MAX_GROUND_SET: u32 = 64;

/// A subset of `[n]`, `n <= 64`. Bit `v - 1` encodes vertex `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

/// Bitmask of the full ground set `[n]`.
pub fn full_mask(n: u32) -> u64 {
    debug_assert!(n <= MAX_GROUND_SET);
    if n == 0 {
        0
    } else {
        u64::MAX >> (MAX_GROUND_SET - n)
    }
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// The whole ground set `{1, …, n}`.
    pub fn full(n: u32) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: u32) -> Result<Self> {
        if v == 0 || v > MAX_GROUND_SET {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} out of range 1..={MAX_GROUND_SET}"
            )));
        }
        Ok(VertexSet(1u64 << (v - 1)))
    }

    pub fn from_vertices<I: IntoIterator<Item = u32>>(vs: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vs {
            if v == 0 || v > MAX_GROUND_SET {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} out of range 1..={MAX_GROUND_SET}"
                )));
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_GROUND_SET).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: u32) -> Self {
        debug_assert!((1..=MAX_GROUND_SET).contains(&v));
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: u32) -> Self {
        debug_assert!((1..=MAX_GROUND_SET).contains(&v));
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the ground set `[n]`. The set must lie in `[n]`.
    pub fn complement(self, n: u32) -> Self {
        debug_assert!(self.fits_within(n));
        VertexSet(!self.0 & full_mask(n))
    }

    /// True when every vertex of the set lies in `[n]`.
    pub fn fits_within(self, n: u32) -> bool {
        n <= MAX_GROUND_SET && self.0 & !full_mask(n) == 0
    }

    /// Vertices in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn max_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros())
        }
    }
}

impl fmt::Display for VertexSet {
    /// Space-separated indices in ascending order; the empty set prints as
    /// the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.vertices() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        fmt::Display::fmt(self, f)?;
        write!(f, "}}")
    }
}

/// The reverse lexicographic order on equal-size subsets: with
/// `S = {i_1 < … < i_k}` and `T = {j_1 < … < j_k}`, `S < T` when `i_q < j_q`
/// at the largest index `q` where they differ.
///
/// For equal cardinalities this coincides with numeric order of the bitmasks:
/// the largest element of the symmetric difference decides, and it belongs to
/// the rev-lex larger set.
pub fn rev_lex_less(s: VertexSet, t: VertexSet) -> Result<bool> {
    if s.cardinality() != t.cardinality() {
        return Err(Error::InvalidArgument(format!(
            "rev-lex compares equal-size sets only (got {} and {})",
            s.cardinality(),
            t.cardinality()
        )));
    }
    Ok(s.bits() < t.bits())
}

/// All `k`-subsets of `[n]` in ascending rev-lex (= ascending bitmask) order,
/// via Gosper's hack.
pub fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = VertexSet> {
    let limit = full_mask(n);
    let mut cur: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let v = cur?;
        if v & !limit != 0 {
            cur = None;
            return None;
        }
        cur = if v == 0 { None } else { gosper_next(v) };
        Some(VertexSet(v))
    })
}

fn gosper_next(v: u64) -> Option<u64> {
    let low = v & v.wrapping_neg();
    let carry = v.checked_add(low)?;
    Some(carry | (((v ^ carry) / low) >> 2))
}

/// All sets `C` with `a ⊆ C ⊆ b`, in ascending bitmask order.
pub fn sets_between(a: VertexSet, b: VertexSet) -> impl Iterator<Item = VertexSet> {
    debug_assert!(a.is_subset_of(b));
    let free = b.bits() & !a.bits();
    let base = a.bits();
    let mut cur: Option<u64> = Some(0);
    std::iter::from_fn(move || {
        let t = cur?;
        cur = if t == free {
            None
        } else {
            Some(t.wrapping_sub(free) & free)
        };
        Some(VertexSet(base | t))
    })
}
