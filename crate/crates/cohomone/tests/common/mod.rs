//! Independent root-system oracle for the integration tests.
//!
//! Everything here is computed from Cartan matrices alone: positive roots by
//! breadth-first closure over root strings, exponents as the conjugate
//! partition of the height distribution (Kostant's theorem), and Weyl orders
//! by three independent routes.  Nothing consults the library's own exponent
//! tables, so agreement between the oracle and the library is meaningful
//! evidence rather than a tautology.

use std::collections::BTreeSet;

/// The nine simple types, carrying their rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Kind {
    pub fn rank(self) -> usize {
        match self {
            Kind::A(n) | Kind::B(n) | Kind::C(n) | Kind::D(n) => n,
            Kind::G2 => 2,
            Kind::F4 => 4,
            Kind::E6 => 6,
            Kind::E7 => 7,
            Kind::E8 => 8,
        }
    }

    /// Number of positive roots by the classical closed forms, used to
    /// cross-check the breadth-first closure itself.
    pub fn positive_root_count_closed_form(self) -> usize {
        match self {
            Kind::A(n) => n * (n + 1) / 2,
            Kind::B(n) | Kind::C(n) => n * n,
            Kind::D(n) => n * (n - 1),
            Kind::G2 => 6,
            Kind::F4 => 24,
            Kind::E6 => 36,
            Kind::E7 => 63,
            Kind::E8 => 120,
        }
    }

    /// Weyl group order by the classical closed forms.
    pub fn weyl_order_closed_form(self) -> u128 {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            Kind::A(n) => factorial(n + 1),
            Kind::B(n) | Kind::C(n) => (1u128 << n) * factorial(n),
            Kind::D(n) => (1u128 << (n - 1)) * factorial(n),
            Kind::G2 => 12,
            Kind::F4 => 1152,
            Kind::E6 => 51_840,
            Kind::E7 => 2_903_040,
            Kind::E8 => 696_729_600,
        }
    }

    /// The pairing matrix `P` with `P[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i,α_j)/(α_j,α_j)`.
    ///
    /// Diagonal entries are 2; an edge between nodes of equal length
    /// contributes `-1` both ways; at a long→short edge the entry *against
    /// the short coroot* is `-2` (or `-3` for the triple edge of `G2`).
    pub fn pairing_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut p = vec![vec![0i64; n]; n];
        for (i, row) in p.iter_mut().enumerate() {
            row[i] = 2;
        }
        let simple_edge = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self {
            Kind::A(_) => {
                for i in 0..n - 1 {
                    simple_edge(&mut p, i, i + 1);
                }
            }
            Kind::B(_) => {
                // Chain with a short last root: e.g. simple roots
                // e_1-e_2, ..., e_{n-1}-e_n, e_n.
                for i in 0..n.saturating_sub(2) {
                    simple_edge(&mut p, i, i + 1);
                }
                p[n - 2][n - 1] = -2;
                p[n - 1][n - 2] = -1;
            }
            Kind::C(_) => {
                // Chain with a long last root 2e_n: the transpose of B.
                for i in 0..n.saturating_sub(2) {
                    simple_edge(&mut p, i, i + 1);
                }
                p[n - 2][n - 1] = -1;
                p[n - 1][n - 2] = -2;
            }
            Kind::D(_) => {
                // Chain 0-1-...-(n-2) with node n-1 forked off node n-3.
                for i in 0..n - 2 {
                    simple_edge(&mut p, i, i + 1);
                }
                simple_edge(&mut p, n - 3, n - 1);
            }
            Kind::G2 => {
                p[0][1] = -1;
                p[1][0] = -3;
            }
            Kind::F4 => {
                // Two long roots, a double edge, two short roots.
                simple_edge(&mut p, 0, 1);
                p[1][2] = -2;
                p[2][1] = -1;
                simple_edge(&mut p, 2, 3);
            }
            Kind::E6 => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                    simple_edge(&mut p, i, j);
                }
            }
            Kind::E7 => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)] {
                    simple_edge(&mut p, i, j);
                }
            }
            Kind::E8 => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                    simple_edge(&mut p, i, j);
                }
            }
        }
        p
    }

    pub fn oracle(self) -> Oracle {
        Oracle {
            kind: self,
            positive_roots: positive_roots(&self.pairing_matrix()),
        }
    }
}

/// Breadth-first closure from the simple roots: a root `β` extends to
/// `β + α_i` exactly when the root string through `β` in direction `α_i`
/// continues upward, i.e. when `p - ⟨β, α_i^∨⟩ ≥ 1`, where `p` is the number
/// of steps the string continues downward through known roots.  Roots are
/// discovered in order of height, so the downward string is always fully
/// known when needed.
pub fn positive_roots(pairing: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = pairing.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        roots.insert(v.clone());
        frontier.push(v);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let pair: i64 = (0..rank).map(|j| beta[j] * pairing[j][i]).sum();
                let mut p = 0i64;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down[i] < 0 || !roots.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pair >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.into_iter().collect()
}

/// A computed root system: the positive roots in simple-root coordinates.
pub struct Oracle {
    pub kind: Kind,
    pub positive_roots: Vec<Vec<i64>>,
}

impl Oracle {
    /// Real dimension of the compact group: rank plus twice the number of
    /// positive roots.
    pub fn dim(&self) -> u64 {
        self.kind.rank() as u64 + 2 * self.positive_roots.len() as u64
    }

    /// `counts[h]` = number of positive roots of height `h + 1`.
    pub fn height_counts(&self) -> Vec<usize> {
        let mut counts: Vec<usize> = Vec::new();
        for root in &self.positive_roots {
            let h: i64 = root.iter().sum();
            let idx = (h - 1) as usize;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        counts
    }

    /// The exponents, increasing: the conjugate partition of the height
    /// distribution (`e_k` = number of heights attained by at least `k`
    /// roots).
    pub fn exponents(&self) -> Vec<u32> {
        let counts = self.height_counts();
        let mut es: Vec<u32> = (1..=self.kind.rank())
            .map(|k| counts.iter().filter(|&&c| c >= k).count() as u32)
            .collect();
        es.sort_unstable();
        es
    }

    /// Weyl group order as the product of `exponent + 1`.
    pub fn weyl_order(&self) -> u128 {
        self.exponents()
            .iter()
            .map(|&e| u128::from(e) + 1)
            .product()
    }
}

/// Counts permutations of `n` symbols by explicit enumeration (Heap's
/// algorithm) — a third, fully independent route to `|W(A_{n-1})| = n!`.
pub fn count_permutations(n: usize) -> u128 {
    fn heap(k: usize, items: &mut [usize], count: &mut u128) {
        if k <= 1 {
            *count += 1;
            return;
        }
        for i in 0..k {
            heap(k - 1, items, count);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut count = 0u128;
    heap(n, &mut items, &mut count);
    count
}

/// Every type the oracle exercises, covering the canonical rank ranges of the
/// library (`A ≥ 1`, `B ≥ 2`, `C ≥ 3`, `D ≥ 4`) up to rank 8.
pub fn all_kinds() -> Vec<Kind> {
    let mut v: Vec<Kind> = Vec::new();
    v.extend((1..=8).map(Kind::A));
    v.extend((2..=8).map(Kind::B));
    v.extend((3..=8).map(Kind::C));
    v.extend((4..=8).map(Kind::D));
    v.extend([Kind::G2, Kind::F4, Kind::E6, Kind::E7, Kind::E8]);
    v
}
