//! Compact Lie group data, exact and symbolic.
//!
//! Groups are represented up to finite cover and finite center: a
//! [`CompactGroup`] is a multiset of simple factors ([`SimpleFactor`], a
//! Cartan family plus rank) together with a torus rank. That is exactly the
//! data that determines rational homotopy, dimension, rank and Weyl-group
//! order, which is all the classification machinery consumes. A free-form
//! display label is carried along (`SO(6)` and `SU(4)` print differently but
//! compare equal).
//!
//! Dimensions, Weyl orders and rational homotopy all come from the exponent
//! tables of the simple families; an independent root-system oracle in the
//! test suite re-derives those tables from Cartan matrices.
//!
//! The module also implements the extended-Dynkin-diagram recursion for
//! full-rank semisimple subalgebras (iterated "extend, then delete one node"
//! on affine diagrams), which turns "does `G` contain a full-rank copy of
//! `K`?" into a mechanical check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rht::GradedDims;

/// The Cartan families of compact simple Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `A_n = su(n+1)`, rank `n >= 1`.
    A,
    /// `B_n = so(2n+1)`, rank `n >= 2`.
    B,
    /// `C_n = sp(n)`, rank `n >= 3`.
    C,
    /// `D_n = so(2n)`, rank `n >= 4`.
    D,
    /// The 14-dimensional exceptional algebra.
    G2,
    /// The 52-dimensional exceptional algebra.
    F4,
    /// The 78-dimensional exceptional algebra.
    E6,
    /// The 133-dimensional exceptional algebra.
    E7,
    /// The 248-dimensional exceptional algebra.
    E8,
}

/// One simple factor: a family at a canonical rank.
///
/// Canonical rank ranges (`A >= 1`, `B >= 2`, `C >= 3`, `D >= 4`, fixed ranks
/// for the exceptionals) make the representation unique, so low-rank
/// coincidences (`so(3) = su(2)`, `sp(2) = so(5)`, `su(4) = so(6)`, ...) are
/// resolved at construction time by [`CompactGroup`]'s constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleFactor {
    family: Family,
    rank: u32,
}

impl SimpleFactor {
    /// Builds a factor, enforcing the canonical rank range of each family.
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::G2 => rank == 2,
            Family::F4 => rank == 4,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
        };
        if ok {
            Ok(SimpleFactor { family, rank })
        } else {
            Err(Error::InvalidInput(format!(
                "rank {rank} is outside the canonical range of family {family:?}"
            )))
        }
    }

    /// The Cartan family.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The rank.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// The exponents, increasing. Degrees `2e + 1` over these are exactly the
    /// odd degrees carrying rational homotopy.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut v: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                v.push(n - 1);
                v.sort_unstable();
                v
            }
            Family::G2 => vec![1, 5],
            Family::F4 => vec![1, 5, 7, 11],
            Family::E6 => vec![1, 4, 5, 7, 8, 11],
            Family::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            Family::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        }
    }

    /// Real dimension: `rank + 2 · (number of positive roots)
    /// = rank + 2 · Σ exponents`.
    pub fn dim(&self) -> u64 {
        let e: u64 = self.exponents().iter().map(|&x| u64::from(x)).sum();
        u64::from(self.rank) + 2 * e
    }

    /// Weyl group order: `Π (e_i + 1)` over the exponents.
    pub fn weyl_order(&self) -> u128 {
        self.exponents()
            .iter()
            .map(|&e| u128::from(e) + 1)
            .product()
    }

    /// Display label in classical notation (`SU(r+1)`, `SO(2r+1)`, `Sp(r)`,
    /// `SO(2r)`, or the exceptional name).
    pub fn classical_label(&self) -> String {
        match self.family {
            Family::A => format!("SU({})", self.rank + 1),
            Family::B => format!("SO({})", 2 * self.rank + 1),
            Family::C => format!("Sp({})", self.rank),
            Family::D => format!("SO({})", 2 * self.rank),
            Family::G2 => "G2".to_string(),
            Family::F4 => "F4".to_string(),
            Family::E6 => "E6".to_string(),
            Family::E7 => "E7".to_string(),
            Family::E8 => "E8".to_string(),
        }
    }
}

/// A compact Lie group up to finite cover and center: simple factors (sorted)
/// plus a torus rank, with a display label.
///
/// Equality and hashing ignore the label: two groups are equal exactly when
/// their canonical factor multisets and torus ranks agree.
#[derive(Clone)]
pub struct CompactGroup {
    factors: Vec<SimpleFactor>,
    torus_rank: u32,
    label: String,
}

impl PartialEq for CompactGroup {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors && self.torus_rank == other.torus_rank
    }
}

impl Eq for CompactGroup {}

impl std::hash::Hash for CompactGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
        self.torus_rank.hash(state);
    }
}

impl fmt::Debug for CompactGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:?} + T^{}]",
            self.label, self.factors, self.torus_rank
        )
    }
}

impl fmt::Display for CompactGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl CompactGroup {
    fn from_parts(mut factors: Vec<SimpleFactor>, torus_rank: u32, label: String) -> Self {
        factors.sort_unstable();
        CompactGroup {
            factors,
            torus_rank,
            label,
        }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        CompactGroup::from_parts(Vec::new(), 0, "1".to_string())
    }

    /// A torus `T^k` (the circle for `k = 1`, printed `T^k`).
    pub fn torus(k: u32) -> Self {
        if k == 0 {
            return CompactGroup::trivial();
        }
        CompactGroup::from_parts(Vec::new(), k, format!("T^{k}"))
    }

    /// The circle, printed `S1`.
    pub fn circle() -> Self {
        CompactGroup::from_parts(Vec::new(), 1, "S1".to_string())
    }

    /// `SU(n)`, `n >= 1` (`SU(1)` is trivial).
    pub fn su(n: u32) -> Self {
        let label = format!("SU({n})");
        match n {
            0 | 1 => CompactGroup::from_parts(Vec::new(), 0, label),
            _ => CompactGroup::from_parts(
                vec![SimpleFactor::new(Family::A, n - 1).expect("A-range")],
                0,
                label,
            ),
        }
    }

    /// `SO(n)`, resolving low-rank coincidences
    /// (`SO(2) = T^1`, `SO(3) = A1`, `SO(4) = A1 + A1`, `SO(5) = B2`,
    /// `SO(6) = A3`).
    pub fn so(n: u32) -> Self {
        Self::orthogonal(n, format!("SO({n})"))
    }

    /// `Spin(n)`: same canonical data as `SO(n)`, different label.
    pub fn spin(n: u32) -> Self {
        Self::orthogonal(n, format!("Spin({n})"))
    }

    fn orthogonal(n: u32, label: String) -> Self {
        let factors = match n {
            0 | 1 => Vec::new(),
            2 => return CompactGroup::from_parts(Vec::new(), 1, label),
            3 => vec![SimpleFactor::new(Family::A, 1).unwrap()],
            4 => vec![
                SimpleFactor::new(Family::A, 1).unwrap(),
                SimpleFactor::new(Family::A, 1).unwrap(),
            ],
            5 => vec![SimpleFactor::new(Family::B, 2).unwrap()],
            6 => vec![SimpleFactor::new(Family::A, 3).unwrap()],
            _ => {
                if n % 2 == 1 {
                    vec![SimpleFactor::new(Family::B, n / 2).unwrap()]
                } else {
                    vec![SimpleFactor::new(Family::D, n / 2).unwrap()]
                }
            }
        };
        CompactGroup::from_parts(factors, 0, label)
    }

    /// `Sp(n)` (compact symplectic group), `Sp(0)` trivial, `Sp(1) = A1`,
    /// `Sp(2) = B2`.
    pub fn sp(n: u32) -> Self {
        let label = format!("Sp({n})");
        let factors = match n {
            0 => Vec::new(),
            1 => vec![SimpleFactor::new(Family::A, 1).unwrap()],
            2 => vec![SimpleFactor::new(Family::B, 2).unwrap()],
            _ => vec![SimpleFactor::new(Family::C, n).unwrap()],
        };
        CompactGroup::from_parts(factors, 0, label)
    }

    /// `U(n) = SU(n) · T^1` up to finite cover (`U(0)` trivial).
    pub fn u(n: u32) -> Self {
        let label = format!("U({n})");
        if n == 0 {
            return CompactGroup::from_parts(Vec::new(), 0, label);
        }
        let mut g = CompactGroup::su(n);
        g.torus_rank += 1;
        g.label = label;
        g
    }

    /// The exceptional group `G2`.
    pub fn g2() -> Self {
        CompactGroup::from_parts(
            vec![SimpleFactor::new(Family::G2, 2).unwrap()],
            0,
            "G2".to_string(),
        )
    }

    /// The exceptional group `F4`.
    pub fn f4() -> Self {
        CompactGroup::from_parts(
            vec![SimpleFactor::new(Family::F4, 4).unwrap()],
            0,
            "F4".to_string(),
        )
    }

    /// The exceptional group `E6`.
    pub fn e6() -> Self {
        CompactGroup::from_parts(
            vec![SimpleFactor::new(Family::E6, 6).unwrap()],
            0,
            "E6".to_string(),
        )
    }

    /// The exceptional group `E7`.
    pub fn e7() -> Self {
        CompactGroup::from_parts(
            vec![SimpleFactor::new(Family::E7, 7).unwrap()],
            0,
            "E7".to_string(),
        )
    }

    /// The exceptional group `E8`.
    pub fn e8() -> Self {
        CompactGroup::from_parts(
            vec![SimpleFactor::new(Family::E8, 8).unwrap()],
            0,
            "E8".to_string(),
        )
    }

    /// Product of groups: factor multisets merge, torus ranks add, labels
    /// join with `" x "` (trivial components are dropped from the label).
    pub fn product(parts: &[CompactGroup]) -> Self {
        let mut factors = Vec::new();
        let mut torus = 0u32;
        let mut labels = Vec::new();
        for p in parts {
            factors.extend_from_slice(&p.factors);
            torus += p.torus_rank;
            if !p.is_trivial() {
                labels.push(p.label.clone());
            }
        }
        let label = if labels.is_empty() {
            "1".to_string()
        } else {
            labels.join(" x ")
        };
        CompactGroup::from_parts(factors, torus, label)
    }

    /// The same group with a different display label.
    #[must_use]
    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// The display label.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// A label derived from the canonical data alone (classical names joined
    /// by `" x "`, torus as `T^k`).
    pub fn data_label(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.classical_label()).collect();
        if self.torus_rank == 1 {
            parts.push("S1".to_string());
        } else if self.torus_rank > 1 {
            parts.push(format!("T^{}", self.torus_rank));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }

    /// The simple factors, sorted.
    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    /// The torus rank.
    pub fn torus_rank(&self) -> u32 {
        self.torus_rank
    }

    /// True for the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.torus_rank == 0
    }

    /// True when the group is simple (one factor, no torus).
    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.torus_rank == 0
    }

    /// The unique simple factor of a simple group.
    pub fn simple_factor(&self) -> Option<SimpleFactor> {
        if self.is_simple() {
            Some(self.factors[0])
        } else {
            None
        }
    }

    /// True when the identity component is a torus (no simple factors).
    pub fn is_torus(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total rank.
    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|f| f.rank).sum::<u32>() + self.torus_rank
    }

    /// Real dimension.
    pub fn dim(&self) -> u64 {
        self.factors.iter().map(|f| f.dim()).sum::<u64>() + u64::from(self.torus_rank)
    }

    /// Weyl group order (`1` for a torus).
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|f| f.weyl_order()).product()
    }

    /// Rational homotopy: one generator in degree `2e + 1` for each exponent
    /// of each simple factor, plus `torus_rank` generators in degree 1.
    pub fn rational_homotopy(&self) -> GradedDims {
        let mut out = GradedDims::new();
        for f in &self.factors {
            for e in f.exponents() {
                out.add(2 * e + 1, 1);
            }
        }
        if self.torus_rank > 0 {
            out.add(1, self.torus_rank);
        }
        out
    }

    /// Multiset difference: removes `other`'s factors and torus rank from
    /// `self`, returning the remainder (labelled from its canonical data), or
    /// `None` if `other` is not a sub-multiset.
    pub fn try_subtract(&self, other: &CompactGroup) -> Option<CompactGroup> {
        if other.torus_rank > self.torus_rank {
            return None;
        }
        let mut remaining = self.factors.clone();
        for f in &other.factors {
            let pos = remaining.iter().position(|g| g == f)?;
            remaining.remove(pos);
        }
        let torus = self.torus_rank - other.torus_rank;
        let mut g = CompactGroup::from_parts(remaining, torus, String::new());
        g.label = g.data_label();
        Some(g)
    }

    /// Parses a group label. Grammar: factors joined by `x` (or `×`), each
    /// one of `SU(n)`, `SO(n)`, `Spin(n)`, `Sp(n)`, `U(n)`, `T^k` (or `Tk`),
    /// `S1`, `G2`, `F4`, `E6`, `E7`, `E8`, or `1`.
    pub fn parse(s: &str) -> Result<CompactGroup> {
        let normalized = s.replace('×', "x");
        let mut parts = Vec::new();
        let mut tokens = Vec::new();
        for piece in normalized.split('x') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::ParseGroup(format!(
                    "empty factor in {s:?} (factors are joined by ' x ')"
                )));
            }
            parts.push(parse_factor(piece)?);
            tokens.push(piece.to_string());
        }
        let mut g = CompactGroup::product(&parts);
        // Preserve the user's spelling (normalized separators).
        g.label = tokens.join(" x ");
        Ok(g)
    }
}

impl FromStr for CompactGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<CompactGroup> {
        CompactGroup::parse(s)
    }
}

fn parse_factor(tok: &str) -> Result<CompactGroup> {
    if tok == "1" {
        return Ok(CompactGroup::trivial());
    }
    if tok == "S1" {
        return Ok(CompactGroup::circle());
    }
    if let Some(rest) = tok.strip_prefix('T') {
        let digits = rest.strip_prefix('^').unwrap_or(rest);
        let k: u32 = digits
            .parse()
            .map_err(|_| Error::ParseGroup(format!("bad torus rank in {tok:?}")))?;
        return Ok(CompactGroup::torus(k));
    }
    match tok {
        "G2" => return Ok(CompactGroup::g2()),
        "F4" => return Ok(CompactGroup::f4()),
        "E6" => return Ok(CompactGroup::e6()),
        "E7" => return Ok(CompactGroup::e7()),
        "E8" => return Ok(CompactGroup::e8()),
        _ => {}
    }
    let open = tok
        .find('(')
        .ok_or_else(|| Error::ParseGroup(format!("unrecognized factor {tok:?}")))?;
    if !tok.ends_with(')') {
        return Err(Error::ParseGroup(format!("missing ')' in {tok:?}")));
    }
    let name = &tok[..open];
    let arg: u32 = tok[open + 1..tok.len() - 1]
        .trim()
        .parse()
        .map_err(|_| Error::ParseGroup(format!("bad rank argument in {tok:?}")))?;
    match name {
        "SU" => {
            if arg == 0 {
                Err(Error::ParseGroup("SU(0) is not a group".to_string()))
            } else {
                Ok(CompactGroup::su(arg))
            }
        }
        "SO" => {
            if arg == 0 {
                Err(Error::ParseGroup("SO(0) is not a group".to_string()))
            } else {
                Ok(CompactGroup::so(arg))
            }
        }
        "Spin" => {
            if arg < 2 {
                Err(Error::ParseGroup(format!("Spin({arg}) is not supported")))
            } else {
                Ok(CompactGroup::spin(arg))
            }
        }
        "Sp" => Ok(CompactGroup::sp(arg)),
        "U" => {
            if arg == 0 {
                Err(Error::ParseGroup("U(0) is not a group".to_string()))
            } else {
                Ok(CompactGroup::u(arg))
            }
        }
        _ => Err(Error::ParseGroup(format!("unrecognized factor {tok:?}"))),
    }
}

/// A deterministic roster of groups exercised by tests and examples: the
/// classical families at small rank, the exceptionals, and a few products.
pub fn catalog() -> Vec<CompactGroup> {
    let mut v = Vec::new();
    for n in 2..=8 {
        v.push(CompactGroup::su(n));
    }
    for n in [3, 5, 7, 9, 11, 13] {
        v.push(CompactGroup::so(n));
    }
    for n in [7, 8, 9, 10] {
        v.push(CompactGroup::spin(n));
    }
    for n in [4, 6, 8, 10, 12, 14] {
        v.push(CompactGroup::so(n));
    }
    for n in 1..=6 {
        v.push(CompactGroup::sp(n));
    }
    for n in 1..=4 {
        v.push(CompactGroup::u(n));
    }
    for k in 1..=3 {
        v.push(CompactGroup::torus(k));
    }
    v.push(CompactGroup::g2());
    v.push(CompactGroup::f4());
    v.push(CompactGroup::e6());
    v.push(CompactGroup::e7());
    v.push(CompactGroup::e8());
    v.push(CompactGroup::product(&[
        CompactGroup::su(2),
        CompactGroup::su(2),
    ]));
    v.push(CompactGroup::product(&[
        CompactGroup::sp(2),
        CompactGroup::sp(1),
    ]));
    v.push(CompactGroup::product(&[
        CompactGroup::su(4),
        CompactGroup::circle(),
    ]));
    v.push(CompactGroup::product(&[
        CompactGroup::g2(),
        CompactGroup::torus(2),
    ]));
    v
}

// ---------------------------------------------------------------------------
// Full-rank semisimple subalgebras via extended Dynkin diagrams.
// ---------------------------------------------------------------------------

/// A Dynkin-type diagram: nodes carry a relative root length (1 short,
/// 2 long, 3 for the long roots of `G2`), edges are undirected (the arrow is
/// recoverable from the lengths).
#[derive(Clone, Debug)]
struct Diagram {
    lengths: Vec<u8>,
    edges: Vec<(usize, usize)>,
}

impl Diagram {
    fn node_count(&self) -> usize {
        self.lengths.len()
    }

    fn delete(&self, v: usize) -> Vec<Diagram> {
        let n = self.node_count();
        let keep: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        // Union-find over the kept nodes.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a == v || b == v {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut roots: Vec<usize> = keep
            .iter()
            .map(|&i| find(&mut parent, i))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        roots.sort_unstable();
        roots
            .into_iter()
            .map(|r| {
                let nodes: Vec<usize> = keep
                    .iter()
                    .copied()
                    .filter(|&i| find(&mut parent, i) == r)
                    .collect();
                let index_of = |i: usize| nodes.iter().position(|&x| x == i).unwrap();
                Diagram {
                    lengths: nodes.iter().map(|&i| self.lengths[i]).collect(),
                    edges: self
                        .edges
                        .iter()
                        .filter(|&&(a, b)| a != v && b != v)
                        .filter(|&&(a, b)| nodes.contains(&a) && nodes.contains(&b))
                        .map(|&(a, b)| (index_of(a), index_of(b)))
                        .collect(),
                }
            })
            .collect()
    }
}

/// The untwisted affine (extended) Dynkin diagram of a simple factor.
/// `None` for `A1`, whose affine diagram is the doubled bond handled
/// specially by the recursion (its only full-rank subalgebra is itself).
fn affine_diagram(f: &SimpleFactor) -> Option<Diagram> {
    let n = f.rank as usize;
    let chain = |lengths: Vec<u8>| {
        let edges = (0..lengths.len() - 1).map(|i| (i, i + 1)).collect();
        Diagram { lengths, edges }
    };
    Some(match f.family {
        Family::A => {
            if n == 1 {
                return None;
            }
            // Cycle on n + 1 nodes.
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
            edges.push((n, 0));
            Diagram {
                lengths: vec![2; n + 1],
                edges,
            }
        }
        Family::B => {
            if n == 2 {
                // Rank 2: chain with both ends long (so(5) = sp(2)).
                return Some(chain(vec![2, 1, 2]));
            }
            // 0 and 1 both attached to 2; chain to n; node n short.
            let mut lengths = vec![2; n + 1];
            lengths[n] = 1;
            let mut edges = vec![(0, 2), (1, 2)];
            edges.extend((2..n).map(|i| (i, i + 1)));
            Diagram { lengths, edges }
        }
        Family::C => {
            // Chain 0..=n, both ends long, middle short.
            let mut lengths = vec![1; n + 1];
            lengths[0] = 2;
            lengths[n] = 2;
            chain(lengths)
        }
        Family::D => {
            // 0 and 1 attached to 2; spine 2..=n-2; n-1 and n attached to n-2.
            let lengths = vec![2; n + 1];
            let mut edges = vec![(0, 2), (1, 2)];
            edges.extend((2..n - 2).map(|i| (i, i + 1)));
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
            Diagram { lengths, edges }
        }
        Family::G2 => Diagram {
            lengths: vec![3, 3, 1],
            edges: vec![(0, 1), (1, 2)],
        },
        Family::F4 => chain(vec![2, 2, 2, 1, 1]),
        Family::E6 => {
            // Star at node 2 with three branches of two nodes each.
            Diagram {
                lengths: vec![2; 7],
                edges: vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
            }
        }
        Family::E7 => {
            // Chain 0..=6 with node 7 attached to the middle node 3.
            let mut d = chain(vec![2; 8]);
            d.edges.retain(|&(a, b)| !(a == 6 && b == 7));
            d.edges.push((3, 7));
            d
        }
        Family::E8 => {
            // Chain 0..=7 with node 8 attached to node 2 (branches 2, 1, 5).
            let mut d = chain(vec![2; 9]);
            d.edges.retain(|&(a, b)| !(a == 7 && b == 8));
            d.edges.push((2, 8));
            d
        }
    })
}

/// Classifies a connected Dynkin diagram (as produced by affine-diagram node
/// deletions) into a canonical [`SimpleFactor`].
fn classify_component(d: &Diagram) -> SimpleFactor {
    let n = d.node_count();
    if n == 1 {
        return SimpleFactor::new(Family::A, 1).unwrap();
    }
    let distinct: BTreeSet<u8> = d.lengths.iter().copied().collect();
    if distinct.contains(&3) && distinct.contains(&1) {
        assert_eq!(n, 2, "mixed-length triple-bond component must be G2");
        return SimpleFactor::new(Family::G2, 2).unwrap();
    }
    let degree = |v: usize| d.edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    if distinct.len() == 1 {
        // Simply laced: A (chain), D or E (one degree-3 node).
        let deg3: Vec<usize> = (0..n).filter(|&v| degree(v) == 3).collect();
        if deg3.is_empty() {
            return SimpleFactor::new(Family::A, n as u32).unwrap();
        }
        assert_eq!(deg3.len(), 1, "finite Dynkin diagrams have one branch node");
        let center = deg3[0];
        // Measure the three branch lengths by walking away from the center.
        let mut branches = Vec::new();
        let neighbors: Vec<usize> = d
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == center {
                    Some(b)
                } else if b == center {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        for start in neighbors {
            let mut len = 1;
            let mut prev = center;
            let mut cur = start;
            loop {
                let next: Vec<usize> = d
                    .edges
                    .iter()
                    .filter_map(|&(a, b)| {
                        if a == cur && b != prev {
                            Some(b)
                        } else if b == cur && a != prev {
                            Some(a)
                        } else {
                            None
                        }
                    })
                    .collect();
                match next.as_slice() {
                    [] => break,
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => unreachable!("branch of a finite Dynkin diagram is a path"),
                }
            }
            branches.push(len);
        }
        branches.sort_unstable();
        match branches.as_slice() {
            [1, 1, k] => SimpleFactor::new(Family::D, (k + 3) as u32).unwrap(),
            [1, 2, 2] => SimpleFactor::new(Family::E6, 6).unwrap(),
            [1, 2, 3] => SimpleFactor::new(Family::E7, 7).unwrap(),
            [1, 2, 4] => SimpleFactor::new(Family::E8, 8).unwrap(),
            other => unreachable!("impossible branch profile {other:?}"),
        }
    } else {
        // Two lengths: B, C, or F4; the diagram is a chain.
        assert!(
            (0..n).all(|v| degree(v) <= 2),
            "two-length diagrams are chains"
        );
        let shorts = d.lengths.iter().filter(|&&l| l == 1).count();
        let longs = n - shorts;
        if n == 4 && shorts == 2 && longs == 2 {
            return SimpleFactor::new(Family::F4, 4).unwrap();
        }
        if n == 2 {
            return SimpleFactor::new(Family::B, 2).unwrap();
        }
        if shorts == 1 {
            SimpleFactor::new(Family::B, n as u32).unwrap()
        } else {
            assert_eq!(longs, 1, "chain with two lengths must be B, C or F4");
            // Canonical range: C starts at rank 3; rank-2 handled above.
            SimpleFactor::new(Family::C, n as u32).unwrap()
        }
    }
}

/// All isomorphism types of full-rank semisimple subalgebras of a simple
/// factor, as sorted factor multisets, computed by the extended-diagram
/// recursion: repeatedly extend one factor to its affine diagram and delete
/// one node. The factor itself is included.
pub fn full_rank_semisimple_subalgebras(g: &SimpleFactor) -> BTreeSet<Vec<SimpleFactor>> {
    let mut seen: BTreeSet<Vec<SimpleFactor>> = BTreeSet::new();
    let mut queue: Vec<Vec<SimpleFactor>> = vec![vec![*g]];
    seen.insert(vec![*g]);
    while let Some(current) = queue.pop() {
        for (i, f) in current.iter().enumerate() {
            let Some(affine) = affine_diagram(f) else {
                continue; // A1 only reproduces itself
            };
            for v in 0..affine.node_count() {
                let mut next: Vec<SimpleFactor> = current
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, x)| *x)
                    .collect();
                for comp in affine.delete(v) {
                    next.push(classify_component(&comp));
                }
                next.sort_unstable();
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    seen
}

/// True when `g` admits a full-rank subalgebra whose semisimple part is
/// exactly the given multiset (use a single entry to ask for a full-rank
/// simple subgroup type).
pub fn admits_full_rank_semisimple(g: &SimpleFactor, target: &[SimpleFactor]) -> bool {
    let mut t = target.to_vec();
    t.sort_unstable();
    full_rank_semisimple_subalgebras(g).contains(&t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(family: Family, rank: u32) -> SimpleFactor {
        SimpleFactor::new(family, rank).unwrap()
    }

    #[test]
    fn exponent_tables_give_frozen_dimensions() {
        let cases: Vec<(CompactGroup, u64, u128)> = vec![
            (CompactGroup::su(2), 3, 2),
            (CompactGroup::su(3), 8, 6),
            (CompactGroup::su(4), 15, 24),
            (CompactGroup::su(5), 24, 120),
            (CompactGroup::so(5), 10, 8),
            (CompactGroup::so(7), 21, 48),
            (CompactGroup::so(8), 28, 192),
            (CompactGroup::so(9), 36, 384),
            (CompactGroup::so(10), 45, 1920),
            (CompactGroup::sp(2), 10, 8),
            (CompactGroup::sp(3), 21, 48),
            (CompactGroup::sp(4), 36, 384),
            (CompactGroup::g2(), 14, 12),
            (CompactGroup::f4(), 52, 1152),
            (CompactGroup::e6(), 78, 51840),
            (CompactGroup::e7(), 133, 2903040),
            (CompactGroup::e8(), 248, 696729600),
        ];
        for (g, dim, weyl) in cases {
            assert_eq!(g.dim(), dim, "dim {g}");
            assert_eq!(g.weyl_order(), weyl, "|W| of {g}");
        }
    }

    #[test]
    fn low_rank_coincidences_compare_equal() {
        assert_eq!(CompactGroup::so(3), CompactGroup::su(2));
        assert_eq!(
            CompactGroup::so(4),
            CompactGroup::parse("SU(2) x SU(2)").unwrap()
        );
        assert_eq!(CompactGroup::so(5), CompactGroup::sp(2));
        assert_eq!(CompactGroup::so(6), CompactGroup::su(4));
        assert_eq!(CompactGroup::spin(7), CompactGroup::so(7));
        assert_eq!(CompactGroup::so(2), CompactGroup::circle());
        assert_eq!(
            CompactGroup::u(3),
            CompactGroup::parse("SU(3) x S1").unwrap()
        );
        assert_ne!(CompactGroup::su(4), CompactGroup::sp(2));
        // Labels survive even when data coincides.
        assert_eq!(CompactGroup::so(6).label(), "SO(6)");
    }

    #[test]
    fn rational_homotopy_degrees() {
        assert_eq!(
            CompactGroup::su(3).rational_homotopy(),
            GradedDims::from_pairs([(3, 1), (5, 1)])
        );
        assert_eq!(
            CompactGroup::so(8).rational_homotopy(),
            GradedDims::from_pairs([(3, 1), (7, 2), (11, 1)])
        );
        assert_eq!(
            CompactGroup::g2().rational_homotopy(),
            GradedDims::from_pairs([(3, 1), (11, 1)])
        );
        assert_eq!(
            CompactGroup::u(2).rational_homotopy(),
            GradedDims::from_pairs([(1, 1), (3, 1)])
        );
        assert_eq!(
            CompactGroup::torus(3).rational_homotopy(),
            GradedDims::from_pairs([(1, 3)])
        );
    }

    #[test]
    fn parse_round_trips() {
        for s in [
            "SU(4)",
            "Spin(7)",
            "SO(9)",
            "Sp(3)",
            "G2",
            "F4",
            "SU(2) x SU(2)",
            "SU(4) x S1",
            "T^2 x Sp(2)",
            "U(3)",
            "1",
        ] {
            let g = CompactGroup::parse(s).unwrap();
            let back = CompactGroup::parse(g.label()).unwrap();
            assert_eq!(g, back, "{s}");
        }
        assert!(CompactGroup::parse("SU(0)").is_err());
        assert!(CompactGroup::parse("SL(2)").is_err());
        assert!(CompactGroup::parse("SU(3) x").is_err());
        assert!(CompactGroup::parse("").is_err());
    }

    #[test]
    fn subtract_cancels_passengers() {
        let big = CompactGroup::parse("SU(4) x Sp(2) x S1").unwrap();
        let small = CompactGroup::parse("Sp(2) x S1").unwrap();
        let rem = big.try_subtract(&small).unwrap();
        assert_eq!(rem, CompactGroup::su(4));
        assert!(small.try_subtract(&big).is_none());
        // SO(6) cancels an SU(4) factor: same canonical data.
        let rem2 = big.try_subtract(&CompactGroup::so(6)).unwrap();
        assert_eq!(rem2, CompactGroup::parse("Sp(2) x S1").unwrap());
    }

    #[test]
    fn full_rank_subalgebras_of_g2() {
        let subs = full_rank_semisimple_subalgebras(&f(Family::G2, 2));
        assert!(subs.contains(&vec![f(Family::G2, 2)]));
        assert!(subs.contains(&vec![f(Family::A, 2)]));
        assert!(subs.contains(&vec![f(Family::A, 1), f(Family::A, 1)]));
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn full_rank_subalgebras_of_f4() {
        let g = f(Family::F4, 4);
        // The classical full-rank members appear ...
        assert!(admits_full_rank_semisimple(&g, &[f(Family::B, 4)]));
        assert!(admits_full_rank_semisimple(
            &g,
            &[f(Family::C, 3), f(Family::A, 1)]
        ));
        assert!(admits_full_rank_semisimple(
            &g,
            &[f(Family::A, 2), f(Family::A, 2)]
        ));
        assert!(admits_full_rank_semisimple(&g, &[f(Family::D, 4)]));
        // ... and su(5) never does: no full-rank A4 inside F4.
        assert!(!admits_full_rank_semisimple(&g, &[f(Family::A, 4)]));
    }

    #[test]
    fn full_rank_subalgebras_of_spin9() {
        let g = f(Family::B, 4);
        assert!(admits_full_rank_semisimple(&g, &[f(Family::D, 4)]));
        assert!(admits_full_rank_semisimple(
            &g,
            &[f(Family::A, 1), f(Family::A, 1), f(Family::B, 2)]
        ));
        assert!(!admits_full_rank_semisimple(&g, &[f(Family::A, 4)]));
    }

    #[test]
    fn catalog_is_nonempty_and_distinctly_labelled() {
        let cat = catalog();
        assert!(cat.len() >= 40);
        let labels: BTreeSet<&str> = cat.iter().map(|g| g.label()).collect();
        assert_eq!(labels.len(), cat.len(), "duplicate labels in catalog");
    }
}
