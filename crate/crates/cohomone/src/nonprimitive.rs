//! Reduction of non-primitive actions through homogeneous bundles.
//!
//! An action is *non-primitive* when both singular isotropy groups lie in
//! a common proper connected subgroup `L ⊊ G`.  The manifold then fibers
//! as `M = G ×_L M_L → G/L` with fiber the cohomogeneity one `L`-manifold
//! `M_L`.  Rationally, the cohomology of `M` must factor through this
//! bundle, which over a truncated-polynomial target leaves very few
//! options:
//!
//! * [`qp_factorizations`] enumerates the possible (fiber, base) splits
//!   of a height-`n+1` truncated polynomial algebra on a degree-`k`
//!   generator;
//! * [`small_fiber_trivial`] records when a fiber bundle over an even
//!   sphere or the Cayley plane with low-dimensional fiber must be
//!   trivial;
//! * [`s2hp_split_options`] enumerates the splits available over the
//!   two-generator target `S² × HPⁿ`;
//! * [`nonprimitive_analysis`] runs the full elimination.  Over a single
//!   generator every branch is refuted; over `S² × HPⁿ` exactly the
//!   clutching branch survives and produces the catalog of actions.

use crate::cohom1::{s2hp_g2_product_label, s2hp_product_label, s2hp_twisted_label};
use crate::error::{Error, Result};
use crate::report::{citations, Step};
use crate::targets::RationalTarget;

// ---------------------------------------------------------------------------
// Factorizations of a single truncated polynomial algebra
// ---------------------------------------------------------------------------

/// One way to factor the truncated polynomial algebra of parameters
/// `(k, n)` as fiber ⊗ base: the fiber has parameters `(k, m)` and the
/// base has parameters `(k(m+1), q−1)` with `q = (n+1)/(m+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QpFactorization {
    /// Truncation parameter of the fiber.
    pub m: u32,
    /// `(generator degree, truncation parameter)` of the fiber.
    pub fiber: (u32, u32),
    /// `(generator degree, truncation parameter)` of the base.
    pub base: (u32, u32),
}

impl QpFactorization {
    /// Real dimension of the fiber, `k·m`.
    pub fn fiber_dim(&self) -> u32 {
        self.fiber.0 * self.fiber.1
    }

    /// Real dimension of the base, `k(m+1)·(q−1)`.
    pub fn base_dim(&self) -> u32 {
        self.base.0 * self.base.1
    }
}

/// All factorizations of the truncated polynomial algebra with generator
/// degree `k` and height `n+1` into a positive-dimensional fiber and a
/// positive-dimensional base: `m ≥ 1`, `(m+1) | (n+1)`, and the quotient
/// height `q = (n+1)/(m+1)` is at least `2`.
///
/// Dimensions add up: `fiber_dim + base_dim = k·n` for every entry.
pub fn qp_factorizations(k: u32, n: u32) -> Vec<QpFactorization> {
    let mut out = Vec::new();
    for m in 1..=n {
        if (n + 1) % (m + 1) != 0 {
            continue;
        }
        let q = (n + 1) / (m + 1);
        if q < 2 {
            continue;
        }
        out.push(QpFactorization {
            m,
            fiber: (k, m),
            base: (k * (m + 1), q - 1),
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Bundle triviality over spheres and the Cayley plane
// ---------------------------------------------------------------------------

/// Base spaces over which low-dimensional fibers force trivial bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallFiberBase {
    /// An even-dimensional sphere `S^{2l}`; the payload is `2l`.
    EvenSphere(u32),
    /// The Cayley plane.
    CayleyPlane,
}

/// Whether a fiber bundle with `fiber_dim`-dimensional fiber over the
/// given base must be rationally trivial: over `S^{2l}` this holds when
/// `2l ≥ 8` and `2l ≥ fiber_dim + 2`; over the Cayley plane when
/// `fiber_dim ≤ 7`.
pub fn small_fiber_trivial(base: SmallFiberBase, fiber_dim: u32) -> bool {
    match base {
        SmallFiberBase::EvenSphere(two_l) => two_l >= 8 && two_l >= fiber_dim + 2,
        SmallFiberBase::CayleyPlane => fiber_dim <= 7,
    }
}

// ---------------------------------------------------------------------------
// Splits of the two-generator target
// ---------------------------------------------------------------------------

/// One split of the cohomology of `S² × HPⁿ` along a homogeneous bundle
/// `M_L → M → G/L`.  The quaternionic generator splits as a height-`j+1`
/// fiber part and a height-`q` base part with `q = (n+1)/(j+1)`; the
/// degree-two generator sits either in the fiber or in the base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitOption {
    /// Truncation parameter of the quaternionic part carried by the fiber.
    pub j: u32,
    /// Whether the degree-two generator lies in the fiber (`S² × HPʲ`
    /// fiber) or in the base (`HPʲ` fiber over a base containing the
    /// degree-two generator).
    pub s2_in_fiber: bool,
    /// `(generator degree, truncation parameter)` of the quaternionic
    /// part of the base; `(4(j+1), q−1)`.
    pub base_qp: (u32, u32),
}

/// All splits of `S² × HPⁿ` with a positive-dimensional fiber and a
/// proper subgroup `L` (positive-dimensional base).  Fiber-side splits
/// (`s2_in_fiber = true`) require `j < n`; base-side splits require
/// `j ≥ 1`, and `j = n` is the clutching case in which the whole
/// quaternionic generator lives on the fiber and the base is `S²`.
pub fn s2hp_split_options(n: u32) -> Vec<SplitOption> {
    let mut out = Vec::new();
    for j in 0..=n {
        if (n + 1) % (j + 1) != 0 {
            continue;
        }
        let q = (n + 1) / (j + 1);
        let base_qp = (4 * (j + 1), q - 1);
        if j < n {
            out.push(SplitOption {
                j,
                s2_in_fiber: true,
                base_qp,
            });
        }
        if j >= 1 {
            out.push(SplitOption {
                j,
                s2_in_fiber: false,
                base_qp,
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// The full non-primitive elimination
// ---------------------------------------------------------------------------

/// The outcome of the non-primitive reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonprimitiveOutcome {
    /// Every non-primitive scenario is refuted.
    Contradiction,
    /// Non-primitive actions exist; the listed actions realize them.
    Conclusions(Vec<String>),
}

/// The non-primitive reduction: a step trace plus the outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonprimitiveAnalysis {
    /// The step-by-step trace; refuted branches carry failing steps with
    /// citations.
    pub steps: Vec<Step>,
    /// Whether any non-primitive action survives.
    pub outcome: NonprimitiveOutcome,
}

/// Runs the non-primitive elimination for the given target.
///
/// * Singly generated targets with even generator degree `k ≥ 6` and
///   `n ≥ 2`: every factorization of the bundle is refuted, so
///   non-primitive actions do not exist
///   ([`NonprimitiveOutcome::Contradiction`]).
/// * `S² × HPⁿ`: every split except the clutching split over `S²` is
///   refuted; the clutching split produces the product action, the
///   non-trivial bundle action, and (for `n = 2`) the product with
///   `G₂/SO(4)`.
///
/// Other targets are not covered by this reduction and return an error.
pub fn nonprimitive_analysis(target: &RationalTarget) -> Result<NonprimitiveAnalysis> {
    match *target {
        RationalTarget::QP { k, n } => {
            if k % 2 != 0 || k < 6 || n < 2 {
                return Err(Error::Unsupported(
                    "the single-generator reduction applies for even generator degree at least 6 and truncation parameter at least 2"
                        .to_string(),
                ));
            }
            Ok(qp_elimination(k, n))
        }
        RationalTarget::S2xHP { n } => Ok(s2hp_reduction(n)),
        RationalTarget::S3xS3 => Err(Error::Unsupported(
            "the non-primitive reduction requires positive Euler characteristic".to_string(),
        )),
    }
}

fn qp_elimination(k: u32, n: u32) -> NonprimitiveAnalysis {
    let mut steps = vec![Step::pass_cited(
        "a non-primitive action fibers as M = G x_L M_L over G/L with both factors carrying truncated polynomial cohomology on the same line of generators",
        citations::NONPRIM_FACTORIZATION,
    )];
    let factorizations = qp_factorizations(k, n);
    if factorizations.is_empty() {
        steps.push(Step::fail(
            &format!(
                "the height {} admits no factorization into fiber and base heights (no divisor chain), so no bundle exists",
                n + 1
            ),
            citations::NONPRIM_FACTORIZATION,
        ));
        return NonprimitiveAnalysis {
            steps,
            outcome: NonprimitiveOutcome::Contradiction,
        };
    }
    for f in factorizations {
        let (base_deg, base_trunc) = f.base;
        let q = base_trunc + 1;
        steps.push(Step::pass(&format!(
            "candidate split: fiber of parameters (k, n) = ({}, {}), base of parameters ({}, {}) — generator degree {} at height {}",
            f.fiber.0, f.fiber.1, base_deg, base_trunc, base_deg, q
        )));
        if q == 2 {
            // The base is singly generated at height 2 with generator
            // degree >= 12: only an even sphere qualifies.
            steps.push(Step::pass_cited(
                &format!(
                    "a homogeneous space with one cohomology generator of degree {base_deg} >= 12 and height 2 is a rational even sphere S^{base_deg}"
                ),
                citations::KZ_RIGIDITY,
            ));
            steps.push(Step::pass_cited(
                &format!(
                    "the fiber has dimension {} <= {} - 2, so the bundle over S^{base_deg} is trivial and M splits as a product",
                    f.fiber_dim(),
                    base_deg
                ),
                citations::SMALL_FIBER,
            ));
            steps.push(Step::fail(
                "a product of a truncated polynomial space and a sphere has two cohomology generators, contradicting the single generator of the target",
                citations::NONPRIM_FACTORIZATION,
            ));
        } else {
            steps.push(Step::fail(
                &format!(
                    "no homogeneous space has singly generated cohomology of generator degree {base_deg} >= 12 at height {q} >= 3"
                ),
                citations::KZ_RIGIDITY,
            ));
        }
    }
    NonprimitiveAnalysis {
        steps,
        outcome: NonprimitiveOutcome::Contradiction,
    }
}

fn s2hp_reduction(n: u32) -> NonprimitiveAnalysis {
    let mut steps = vec![Step::pass_cited(
        "a non-primitive action fibers as M = G x_L M_L over G/L; the two cohomology generators distribute over fiber and base",
        citations::NONPRIM_FACTORIZATION,
    )];
    let mut conclusions: Vec<String> = Vec::new();

    for option in s2hp_split_options(n) {
        let j = option.j;
        let (base_deg, base_trunc) = option.base_qp;
        let q = base_trunc + 1;
        if option.s2_in_fiber {
            steps.push(Step::pass(&format!(
                "candidate split: fiber S^2 x HP^{j}, quaternionic base of parameters ({base_deg}, {base_trunc})"
            )));
            if j == 0 {
                // Fiber S^2 over a rational HP^n base.
                steps.push(Step::pass_cited(
                    &format!(
                        "the base is a homogeneous rational HP^{n}: the quaternionic projective space{}{}",
                        if n == 1 { " or the sphere S^4" } else { "" },
                        if n == 2 { " or G2/SO(4)" } else { "" },
                    ),
                    citations::KZ_RIGIDITY,
                ));
                steps.push(Step::fail(
                    "every such base has semisimple isotropy group L, but a cohomogeneity one action of L on the fiber S^2 would map L onto the circle SO(2), which a semisimple group cannot do",
                    citations::HOELSCHER_LOWDIM,
                ));
            } else if q == 2 {
                steps.push(Step::pass_cited(
                    &format!(
                        "a singly generated base of degree {base_deg} >= 8 at height 2 is a rational even sphere S^{base_deg}"
                    ),
                    citations::KZ_RIGIDITY,
                ));
                steps.push(Step::pass_cited(
                    &format!(
                        "the fiber S^2 x HP^{j} has dimension {} <= {base_deg} - 2, so the bundle is trivial",
                        4 * j + 2
                    ),
                    citations::SMALL_FIBER,
                ));
                steps.push(Step::fail(
                    "the resulting product has three-dimensional odd rational homotopy, but the target has two-dimensional odd rational homotopy",
                    citations::NONPRIM_FACTORIZATION,
                ));
            } else if q == 3 && base_deg == 8 {
                steps.push(Step::pass_cited(
                    "a singly generated base of degree 8 at height 3 is the Cayley plane",
                    citations::KZ_RIGIDITY,
                ));
                steps.push(Step::pass_cited(
                    &format!(
                        "the fiber S^2 x HP^{j} has dimension {} <= 7, so the bundle over the Cayley plane is trivial",
                        4 * j + 2
                    ),
                    citations::SMALL_FIBER,
                ));
                steps.push(Step::fail(
                    "the resulting product has three-dimensional odd rational homotopy, but the target has two-dimensional odd rational homotopy",
                    citations::NONPRIM_FACTORIZATION,
                ));
            } else {
                steps.push(Step::fail(
                    &format!(
                        "no homogeneous space has singly generated cohomology of generator degree {base_deg} >= 8 at height {q} >= 3"
                    ),
                    citations::KZ_RIGIDITY,
                ));
            }
        } else if j == n {
            // Clutching: fiber HP^n over the base S^2.
            steps.push(Step::pass(&format!(
                "candidate split: fiber a rational HP^{n} over the base S^2 (clutching case)"
            )));
            steps.push(Step::pass_cited(
                &format!(
                    "the fiber is a closed cohomogeneity one rational HP^{n}, hence isometric to the standard HP^{n}{}",
                    if n == 2 { " or to G2/SO(4)" } else { "" }
                ),
                citations::IWATA_HP,
            ));
            steps.push(Step::pass_cited(
                "bundles over S^2 with a fixed homogeneous fiber are classified by the fundamental group of the isometry group of the fiber",
                citations::COHOM_TOPOLOGY,
            ));
            steps.push(Step::pass(&format!(
                "for HP^{n} the isometry group PSp({}) has fundamental group Z/2: the trivial and one non-trivial bundle, distinguished by their characteristic classes",
                n + 1
            )));
            steps.push(Step::pass(&format!(
                "the non-trivial bundle is realized by SU({}) x SU(2) acting on (HP^{n} x S^3)/S^1, where the circle acts by the Hopf action on S^3 and by a central circle on HP^{n}",
                n + 1
            )));
            conclusions.push(s2hp_product_label(n));
            if n == 2 {
                steps.push(Step::pass(
                    "for G2/SO(4) the isometry group G2 is simply connected: only the trivial bundle, i.e. the product",
                ));
                conclusions.push(s2hp_g2_product_label());
            }
            conclusions.push(s2hp_twisted_label(n));
        } else {
            steps.push(Step::pass(&format!(
                "candidate split: fiber HP^{j}, base carrying S^2 and a quaternionic part of parameters ({base_deg}, {base_trunc})"
            )));
            steps.push(Step::pass_cited(
                "a base with two cohomology generators splits the acting group, G = G1 x G2, and the bundle iterates over the sphere factor",
                citations::DEVITO_LOWDIM,
            ));
            if q == 2 {
                steps.push(Step::pass_cited(
                    &format!(
                        "the quaternionic base factor of degree {base_deg} >= 8 at height 2 is a rational even sphere S^{base_deg}, and the HP^{j} fiber of dimension {} <= {base_deg} - 2 makes the iterated bundle trivial",
                        4 * j
                    ),
                    citations::SMALL_FIBER,
                ));
                steps.push(Step::fail(
                    "the resulting product has three-dimensional odd rational homotopy, but the target has two-dimensional odd rational homotopy",
                    citations::NONPRIM_FACTORIZATION,
                ));
            } else if q == 3 && base_deg == 8 {
                steps.push(Step::pass_cited(
                    "the quaternionic base factor of degree 8 at height 3 is the Cayley plane, and the low-dimensional fiber makes the iterated bundle trivial",
                    citations::SMALL_FIBER,
                ));
                steps.push(Step::fail(
                    "the resulting product has three-dimensional odd rational homotopy, but the target has two-dimensional odd rational homotopy",
                    citations::NONPRIM_FACTORIZATION,
                ));
            } else {
                steps.push(Step::fail(
                    &format!(
                        "no homogeneous space has singly generated cohomology of generator degree {base_deg} >= 8 at height {q} >= 3"
                    ),
                    citations::KZ_RIGIDITY,
                ));
            }
        }
    }

    let outcome = if conclusions.is_empty() {
        NonprimitiveOutcome::Contradiction
    } else {
        NonprimitiveOutcome::Conclusions(conclusions)
    };
    NonprimitiveAnalysis { steps, outcome }
}
