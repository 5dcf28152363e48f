//! Rational-homotopy bookkeeping.
//!
//! Everything in this module is exact integer arithmetic over *graded
//! dimension vectors*: maps `degree -> dim π_degree ⊗ Q`. The module provides
//!
//! * [`GradedDims`] — the dimension vectors themselves, with constructors for
//!   the spaces that occur as building blocks (spheres, loop spaces of
//!   spheres, circles);
//! * [`d_invariant`] — an alternating weighted sum over odd degrees that is
//!   additive for products and, for a fibration, interacts with the
//!   connecting-map ranks through an exact defect identity;
//! * [`les_resolve`] — resolving the long exact homotopy sequence of a
//!   fibration once the ranks of all connecting maps are prescribed;
//! * [`elliptic_feasible`] — a battery of exact necessary conditions for a
//!   dimension vector to be realizable by a rationally elliptic space of a
//!   given formal dimension.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dimensions of rational homotopy groups, indexed by degree.
///
/// Invariants: every stored degree is `>= 1` and every stored dimension is
/// `>= 1` (zero entries are never stored, so `dim_at` returns `0` for any
/// absent degree).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedDims(BTreeMap<u32, u32>);

impl GradedDims {
    /// The empty dimension vector (a rational point).
    pub fn new() -> Self {
        GradedDims(BTreeMap::new())
    }

    /// Builds a vector from `(degree, dimension)` pairs, accumulating
    /// repeated degrees.
    ///
    /// # Panics
    ///
    /// Panics if any pair has degree `0`; degree-0 homotopy carries no
    /// rational information and is never representable here.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut out = GradedDims::new();
        for (deg, dim) in pairs {
            out.add(deg, dim);
        }
        out
    }

    /// Adds `dim` to the entry in `degree`. Adding zero is a no-op.
    ///
    /// # Panics
    ///
    /// Panics if `degree == 0`.
    pub fn add(&mut self, degree: u32, dim: u32) {
        assert!(degree >= 1, "graded dimensions are indexed from degree 1");
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    /// Dimension in a single degree (0 when absent).
    pub fn dim_at(&self, degree: u32) -> u32 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    /// Iterates over `(degree, dimension)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&d, &m)| (d, m))
    }

    /// The degrees with non-zero dimension, increasing.
    pub fn degrees(&self) -> Vec<u32> {
        self.0.keys().copied().collect()
    }

    /// True when no degree carries anything.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total dimension over all degrees.
    pub fn total_dim(&self) -> u64 {
        self.0.values().map(|&m| u64::from(m)).sum()
    }

    /// Total dimension in odd degrees.
    pub fn odd_dim(&self) -> u64 {
        self.iter()
            .filter(|(d, _)| d % 2 == 1)
            .map(|(_, m)| u64::from(m))
            .sum()
    }

    /// Total dimension in even degrees.
    pub fn even_dim(&self) -> u64 {
        self.iter()
            .filter(|(d, _)| d % 2 == 0)
            .map(|(_, m)| u64::from(m))
            .sum()
    }

    /// Sum of odd degrees counted with multiplicity.
    pub fn odd_degree_sum(&self) -> u64 {
        self.iter()
            .filter(|(d, _)| d % 2 == 1)
            .map(|(d, m)| u64::from(d) * u64::from(m))
            .sum()
    }

    /// Sum of even degrees counted with multiplicity.
    pub fn even_degree_sum(&self) -> u64 {
        self.iter()
            .filter(|(d, _)| d % 2 == 0)
            .map(|(d, m)| u64::from(d) * u64::from(m))
            .sum()
    }

    /// Largest degree carrying anything, if any.
    pub fn max_degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    /// Degreewise sum of two vectors (the vector of a product space).
    #[must_use]
    pub fn merged(&self, other: &GradedDims) -> GradedDims {
        let mut out = self.clone();
        for (d, m) in other.iter() {
            out.add(d, m);
        }
        out
    }

    /// The vector of a rational `m`-sphere, `m >= 1`: one generator in degree
    /// `m`, plus one in degree `2m - 1` when `m` is even.
    pub fn sphere(m: u32) -> Self {
        assert!(m >= 1, "spheres of dimension >= 1 only");
        if m % 2 == 1 {
            GradedDims::from_pairs([(m, 1)])
        } else {
            GradedDims::from_pairs([(m, 1), (2 * m - 1, 1)])
        }
    }

    /// The vector of the based loop space of an `n`-sphere, `n >= 2`: one
    /// generator in degree `n - 1`, plus one in degree `2n - 2` when `n` is
    /// even.
    pub fn loop_sphere(n: u32) -> Self {
        assert!(n >= 2, "loop spaces of spheres of dimension >= 2 only");
        if n % 2 == 1 {
            GradedDims::from_pairs([(n - 1, 1)])
        } else {
            GradedDims::from_pairs([(n - 1, 1), (2 * n - 2, 1)])
        }
    }

    /// The vector of a circle: one generator in degree 1.
    pub fn circle() -> Self {
        GradedDims::from_pairs([(1, 1)])
    }
}

impl fmt::Debug for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GradedDims {
    /// Formats as `{deg: dim, ...}` in increasing degree; `{}` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {m}")?;
        }
        write!(f, "}}")
    }
}

/// The alternating odd-degree invariant
/// `d(X) = Σ_{k odd, k >= 1} k · (dim π_k(X) - dim π_{k+1}(X))`.
///
/// It is additive over products, equals the dimension for a compact Lie
/// group, and equals `2 - n` for the loop space of an `n`-sphere. For a
/// fibration it satisfies the exact defect identity checked by
/// [`defect_identity_check`].
pub fn d_invariant(x: &GradedDims) -> i64 {
    let mut total: i64 = 0;
    for (deg, dim) in x.iter() {
        let dim = i64::from(dim);
        let deg_i = i64::from(deg);
        if deg % 2 == 1 {
            // contributes +k·dim at k = deg
            total += deg_i * dim;
        } else {
            // contributes -k·dim at the odd k = deg - 1
            total -= (deg_i - 1) * dim;
        }
    }
    total
}

/// Prescribed ranks of the connecting maps `∂_k : π_k(base) -> π_{k-1}(fiber)`
/// in the long exact homotopy sequence of a fibration.
///
/// Only non-zero ranks are stored; every stored degree is `>= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConnectingRanks(BTreeMap<u32, u32>);

impl ConnectingRanks {
    /// No connecting map has positive rank.
    pub fn zero() -> Self {
        ConnectingRanks(BTreeMap::new())
    }

    /// Builds from `(degree, rank)` pairs, accumulating repeats and dropping
    /// zero ranks.
    ///
    /// # Errors
    ///
    /// `InvalidInput` if any degree with positive rank is `< 2` (a connecting
    /// map lands one degree down, so rational information starts at
    /// `∂_2 : π_2(base) -> π_1(fiber)`).
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (deg, rank) in pairs {
            if rank == 0 {
                continue;
            }
            if deg < 2 {
                return Err(Error::InvalidInput(format!(
                    "connecting map in degree {deg}: degrees below 2 carry no rational rank"
                )));
            }
            *map.entry(deg).or_insert(0u32) += rank;
        }
        Ok(ConnectingRanks(map))
    }

    /// Rank of `∂_degree` (0 when absent).
    pub fn rank_at(&self, degree: u32) -> u32 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    /// Iterates over `(degree, rank)` pairs with positive rank, increasing.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&d, &r)| (d, r))
    }

    /// Sum of ranks over odd degrees (the quantity entering the defect
    /// identity).
    pub fn odd_rank_sum(&self) -> u64 {
        self.iter()
            .filter(|(d, _)| d % 2 == 1)
            .map(|(_, r)| u64::from(r))
            .sum()
    }

    /// Checks that every prescribed rank fits inside its exact sequence:
    /// `rank ∂_k <= min(dim π_k(base), dim π_{k-1}(fiber))`.
    pub fn compatible_with(&self, fiber: &GradedDims, base: &GradedDims) -> bool {
        self.iter()
            .all(|(k, r)| r <= base.dim_at(k) && r <= fiber.dim_at(k - 1))
    }
}

/// Resolves the long exact homotopy sequence of a fibration
/// `fiber -> total -> base` with prescribed connecting-map ranks:
///
/// `dim π_k(total) = dim π_k(fiber) + dim π_k(base) - rank ∂_{k+1} - rank ∂_k`.
///
/// # Errors
///
/// `InvalidInput` if some prescribed rank exceeds the dimensions feeding the
/// corresponding map (see [`ConnectingRanks::compatible_with`]). When the
/// ranks are compatible every resolved dimension is automatically
/// non-negative.
pub fn les_resolve(
    fiber: &GradedDims,
    base: &GradedDims,
    ranks: &ConnectingRanks,
) -> Result<GradedDims> {
    for (k, r) in ranks.iter() {
        if r > base.dim_at(k) {
            return Err(Error::InvalidInput(format!(
                "rank {r} of the degree-{k} connecting map exceeds dim {} of the base",
                base.dim_at(k)
            )));
        }
        if r > fiber.dim_at(k - 1) {
            return Err(Error::InvalidInput(format!(
                "rank {r} of the degree-{k} connecting map exceeds dim {} of the fiber below it",
                fiber.dim_at(k - 1)
            )));
        }
    }
    let mut out = GradedDims::new();
    let mut degrees: Vec<u32> = fiber.degrees();
    degrees.extend(base.degrees());
    degrees.sort_unstable();
    degrees.dedup();
    for k in degrees {
        let total = fiber.dim_at(k) + base.dim_at(k) - ranks.rank_at(k + 1) - ranks.rank_at(k);
        if total > 0 {
            out.add(k, total);
        }
    }
    Ok(out)
}

/// Exact defect identity for a resolved fibration:
/// `d(total) = d(fiber) + d(base) - 2 · Σ_{k odd} rank ∂_k`.
pub fn defect_identity_check(
    fiber: &GradedDims,
    total: &GradedDims,
    base: &GradedDims,
    ranks: &ConnectingRanks,
) -> bool {
    let lhs = d_invariant(total);
    let rhs = d_invariant(fiber) + d_invariant(base) - 2 * ranks.odd_rank_sum() as i64;
    lhs == rhs
}

/// Exact necessary conditions for `x` to be the rational homotopy of an
/// elliptic space of formal dimension `formal_dim`.
///
/// The five conditions, all checked exactly:
///
/// 1. `d(x) == formal_dim`;
/// 2. the number of even-degree generators does not exceed the number of
///    odd-degree generators;
/// 3. the sum of the even degrees (with multiplicity) is at most
///    `formal_dim`;
/// 4. the sum of the odd degrees (with multiplicity) is at most
///    `2 · formal_dim - 1`;
/// 5. the Friedlander–Halperin subset condition: for every non-empty set `D`
///    of distinct even degrees, the number of odd generators `b` (with
///    multiplicity) such that `b + 1` lies in the additive span of `D`
///    (non-empty non-negative integer combinations) is at least the number of
///    even generators with degree in `D`.
///
/// Returns `false` as soon as one condition fails. A `true` answer means *not
/// rejected*; these are necessary conditions, not a realizability proof.
/// Condition 5 is checked over all subsets when there are at most 16 distinct
/// even degrees (always the case in this crate's inputs) and over singletons
/// plus the full set beyond that.
pub fn elliptic_feasible(x: &GradedDims, formal_dim: u32) -> bool {
    // (1) d-invariant matches the formal dimension.
    if d_invariant(x) != i64::from(formal_dim) {
        return false;
    }
    // (2) at most as many even generators as odd ones.
    if x.even_dim() > x.odd_dim() {
        return false;
    }
    // (3) even degrees sum at most to the formal dimension.
    if x.even_degree_sum() > u64::from(formal_dim) {
        return false;
    }
    // (4) odd degrees sum at most to 2·formal_dim - 1 (checked without
    // underflow as sum + 1 <= 2·formal_dim).
    if x.odd_degree_sum() + 1 > 2 * u64::from(formal_dim) {
        return false;
    }
    // (5) subset condition.
    let evens: Vec<(u32, u32)> = x.iter().filter(|(d, _)| d % 2 == 0).collect();
    let odds: Vec<(u32, u32)> = x.iter().filter(|(d, _)| d % 2 == 1).collect();
    if evens.is_empty() {
        return true;
    }
    let t = evens.len();
    let subsets: Vec<u32> = if t <= 16 {
        (1..(1u32 << t)).collect()
    } else {
        // Degenerate guard (never hit by this crate's inputs): check
        // singletons and the full set only.
        let mut masks: Vec<u32> = (0..t).map(|i| 1u32 << i).collect();
        masks.push(((1u64 << t) - 1) as u32);
        masks
    };
    let max_target = odds.iter().map(|&(b, _)| b + 1).max().unwrap_or(0) as usize;
    for mask in subsets {
        let chosen: Vec<u32> = (0..t)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| evens[i].0)
            .collect();
        let required: u64 = (0..t)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| u64::from(evens[i].1))
            .sum();
        // Reachable sums of non-empty non-negative combinations of `chosen`.
        let mut reachable = vec![false; max_target + 1];
        for &d in &chosen {
            let d = d as usize;
            if d <= max_target {
                reachable[d] = true;
            }
        }
        for s in 1..=max_target {
            if reachable[s] {
                continue;
            }
            for &d in &chosen {
                let d = d as usize;
                if d <= s && reachable[s - d] {
                    reachable[s] = true;
                    break;
                }
            }
        }
        let matched: u64 = odds
            .iter()
            .filter(|&&(b, _)| ((b + 1) as usize) <= max_target && reachable[(b + 1) as usize])
            .map(|&(_, m)| u64::from(m))
            .sum();
        if matched < required {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_vectors() {
        assert_eq!(GradedDims::sphere(3), GradedDims::from_pairs([(3, 1)]));
        assert_eq!(
            GradedDims::sphere(4),
            GradedDims::from_pairs([(4, 1), (7, 1)])
        );
        assert_eq!(GradedDims::circle(), GradedDims::from_pairs([(1, 1)]));
        assert_eq!(GradedDims::loop_sphere(7), GradedDims::from_pairs([(6, 1)]));
        assert_eq!(
            GradedDims::loop_sphere(8),
            GradedDims::from_pairs([(7, 1), (14, 1)])
        );
    }

    #[test]
    fn d_invariant_frozen_values() {
        // d(S^m) = m for every sphere.
        for m in 1..=30 {
            assert_eq!(d_invariant(&GradedDims::sphere(m)), i64::from(m), "S^{m}");
        }
        // d(ΩS^n) = 2 - n.
        for n in 2..=30 {
            assert_eq!(
                d_invariant(&GradedDims::loop_sphere(n)),
                2 - i64::from(n),
                "ΩS^{n}"
            );
        }
        // Additivity over products.
        let prod = GradedDims::sphere(4).merged(&GradedDims::loop_sphere(9));
        assert_eq!(d_invariant(&prod), 4 + (2 - 9));
    }

    #[test]
    fn les_resolution_and_defect() {
        // S^3 -> E -> S^5 with all connecting maps zero: product answer.
        let fiber = GradedDims::sphere(3);
        let base = GradedDims::sphere(5);
        let total = les_resolve(&fiber, &base, &ConnectingRanks::zero()).unwrap();
        assert_eq!(total, fiber.merged(&base));
        assert!(defect_identity_check(
            &fiber,
            &total,
            &base,
            &ConnectingRanks::zero()
        ));

        // Loop-space fibration pattern: ΩS^4 -> E -> S^4 with ∂_4 of rank 1
        // kills both generators linked by the connecting map.
        let fiber = GradedDims::loop_sphere(4); // {3: 1, 6: 1}
        let base = GradedDims::sphere(4); // {4: 1, 7: 1}
        let ranks = ConnectingRanks::from_pairs([(4, 1), (7, 1)]).unwrap();
        let total = les_resolve(&fiber, &base, &ranks).unwrap();
        assert!(total.is_empty(), "contractible total space, got {total}");
        assert!(defect_identity_check(&fiber, &total, &base, &ranks));
    }

    #[test]
    fn les_rejects_incompatible_ranks() {
        let fiber = GradedDims::sphere(3);
        let base = GradedDims::sphere(5);
        // ∂_5 would need π_4(fiber) ≠ 0.
        let ranks = ConnectingRanks::from_pairs([(5, 1)]).unwrap();
        assert!(les_resolve(&fiber, &base, &ranks).is_err());
        assert!(!ranks.compatible_with(&fiber, &base));
    }

    #[test]
    fn connecting_ranks_reject_low_degree() {
        assert!(ConnectingRanks::from_pairs([(1, 1)]).is_err());
        assert!(ConnectingRanks::from_pairs([(1, 0), (3, 2)]).is_ok());
    }

    #[test]
    fn elliptic_feasibility_frozen_examples() {
        // Even projective-like data {k: 1, k(n+1)-1: 1} at formal dim kn.
        for k in [2u32, 4, 6, 8, 10, 12] {
            for n in 1..=6 {
                let x = GradedDims::from_pairs([(k, 1), (k * (n + 1) - 1, 1)]);
                assert!(elliptic_feasible(&x, k * n), "k={k} n={n}");
            }
        }
        // Product of two 3-spheres at dim 6.
        assert!(elliptic_feasible(&GradedDims::from_pairs([(3, 2)]), 6));
        // The four-periodic product data {2,3,4,4n+3} at dim 4n+2.
        for n in 1..=6 {
            let x = GradedDims::from_pairs([(2, 1), (3, 1), (4, 1), (4 * n + 3, 1)]);
            assert!(elliptic_feasible(&x, 4 * n + 2), "n={n}");
        }
        // A circle is elliptic of formal dimension 1.
        assert!(elliptic_feasible(&GradedDims::circle(), 1));
        // Two even generators alone can never be elliptic.
        assert!(!elliptic_feasible(&GradedDims::from_pairs([(4, 2)]), 8));
    }

    #[test]
    fn elliptic_feasibility_rejects_unkilled_even_generator() {
        // {1, k, k(n+1)-3} at formal dimension nk - 1: conditions 1-4 hold for
        // n >= 2 but the degree-k even generator has no odd partner with
        // b + 1 divisible by k, so the subset condition rejects it.
        for k in [4u32, 6, 8, 10, 12] {
            for n in 1..=6 {
                let x = GradedDims::from_pairs([(1, 1), (k, 1), (k * (n + 1) - 3, 1)]);
                assert!(!elliptic_feasible(&x, n * k - 1), "k={k} n={n}");
            }
        }
    }
}
