//! Acceptance gate: eight timed, end-to-end checks of the engine.
//!
//! Each criterion is one test whose name begins with `criterion_N`, so the
//! harness emits exactly one pass/fail line per criterion; on success the
//! test additionally prints a `criterion N: PASS — ...` summary (visible
//! with `--nocapture`).  Expected values are frozen literals, independent
//! of the code paths they check.

use std::time::{Duration, Instant};

use cohomone::classify::{frank_table, ratio_filter, RatioPredicate};
use cohomone::cohom1::{
    fiber_model, s2hp_g2_product_label, s2hp_product_label, s2hp_twisted_label, GroupDiagram,
};
use cohomone::liegroups::{catalog, CompactGroup};
use cohomone::nonprimitive::{qp_factorizations, small_fiber_trivial, SmallFiberBase};
use cohomone::report::Verdict;
use cohomone::rht::{d_invariant, defect_identity_check, les_resolve, ConnectingRanks, GradedDims};
use cohomone::targets::{standard_parameters, RationalTarget};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Runs `body`, asserts the wall-clock budget, prints the one-line summary.
fn timed<F: FnOnce()>(criterion: u32, budget: Duration, label: &str, body: F) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:?} budget: took {elapsed:?}"
    );
    println!("criterion {criterion}: PASS — {label} ({elapsed:?})");
}

/// Test-local d-invariant, written directly from the defining sum
/// `Σ_{k odd} k · (dim π_k − dim π_{k+1})` rather than the library's
/// per-entry bookkeeping.
fn d_brute(x: &GradedDims) -> i64 {
    let max = x.max_degree().unwrap_or(0) + 2;
    (1..=max)
        .filter(|k| k % 2 == 1)
        .map(|k| i64::from(k) * (i64::from(x.dim_at(k)) - i64::from(x.dim_at(k + 1))))
        .sum()
}

// ---------------------------------------------------------------------------
// 1. d-invariant identities
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_d_invariant_identities() {
    timed(
        1,
        Duration::from_secs(1),
        "d(ΩSⁿ) = 2 − n for 3 ≤ n ≤ 30 and d(G) = dim G across the catalog",
        || {
            for n in 3u32..=30 {
                let loops = GradedDims::loop_sphere(n);
                assert_eq!(
                    d_invariant(&loops),
                    2 - i64::from(n),
                    "d-invariant of the loop space of S^{n}"
                );
                assert_eq!(d_brute(&loops), 2 - i64::from(n));
            }
            let groups = catalog();
            assert!(groups.len() >= 30, "catalog should be substantial");
            for g in groups {
                let homotopy = g.rational_homotopy();
                assert_eq!(
                    d_invariant(&homotopy),
                    g.dim() as i64,
                    "d-invariant of {}",
                    g.label()
                );
                assert_eq!(d_brute(&homotopy), g.dim() as i64);
            }
        },
    );
}

// ---------------------------------------------------------------------------
// 2. Long-exact-sequence bookkeeping vs a brute-force oracle
// ---------------------------------------------------------------------------

fn random_graded(rng: &mut StdRng) -> GradedDims {
    let mut g = GradedDims::new();
    for _ in 0..rng.gen_range(0..6) {
        g.add(rng.gen_range(1..=15), rng.gen_range(1..=3));
    }
    g
}

fn random_compatible_ranks(
    rng: &mut StdRng,
    fiber: &GradedDims,
    base: &GradedDims,
) -> ConnectingRanks {
    let mut pairs = Vec::new();
    for k in 2..=17u32 {
        let cap = base.dim_at(k).min(fiber.dim_at(k - 1));
        if cap > 0 {
            pairs.push((k, rng.gen_range(0..=cap)));
        }
    }
    ConnectingRanks::from_pairs(pairs).expect("degrees are all ≥ 2")
}

#[test]
fn criterion_2_defect_identity_against_brute_force() {
    timed(
        2,
        Duration::from_secs(5),
        "defect identity verified degreewise on 1000 pseudo-random fibrations",
        || {
            let mut rng = StdRng::seed_from_u64(0x5eed_0001);
            for round in 0..1000 {
                let fiber = random_graded(&mut rng);
                let base = random_graded(&mut rng);
                let ranks = random_compatible_ranks(&mut rng, &fiber, &base);
                let total = les_resolve(&fiber, &base, &ranks)
                    .unwrap_or_else(|e| panic!("round {round}: compatible ranks rejected: {e}"));

                // Brute-force degreewise re-evaluation of the resolution:
                // dim π_k(total) = F_k + B_k − rank ∂_{k+1} − rank ∂_k.
                for k in 1..=20u32 {
                    let expected = i64::from(fiber.dim_at(k)) + i64::from(base.dim_at(k))
                        - i64::from(ranks.rank_at(k + 1))
                        - i64::from(ranks.rank_at(k));
                    assert!(expected >= 0, "round {round}: negative dimension at {k}");
                    assert_eq!(
                        i64::from(total.dim_at(k)),
                        expected,
                        "round {round}: resolved dimension at degree {k}"
                    );
                }

                // The defect identity, assembled by brute force...
                let odd_rank_sum: i64 = (2..=17u32)
                    .filter(|k| k % 2 == 1)
                    .map(|k| i64::from(ranks.rank_at(k)))
                    .sum();
                assert_eq!(
                    d_brute(&total),
                    d_brute(&fiber) + d_brute(&base) - 2 * odd_rank_sum,
                    "round {round}: brute-force defect identity"
                );
                // ... and as implemented.
                assert!(
                    defect_identity_check(&fiber, &total, &base, &ranks),
                    "round {round}: library defect identity"
                );
            }

            // Over-prescribed ranks must be rejected, never absorbed.
            let fiber = GradedDims::sphere(3);
            let base = GradedDims::from_pairs([(4, 1)]);
            let too_big = ConnectingRanks::from_pairs([(4, 2)]).unwrap();
            assert!(les_resolve(&fiber, &base, &too_big).is_err());
        },
    );
}

// ---------------------------------------------------------------------------
// 3. Fiber models
// ---------------------------------------------------------------------------

#[test]
fn criterion_3_fiber_models_d_one_single_odd_connecting_degree() {
    timed(
        3,
        Duration::from_secs(1),
        "every fiber model over 2 ≤ k± ≤ 10 has d(F) = 1 and one odd connecting degree",
        || {
            let mut models_checked = 0u32;
            for k_plus in 2u32..=10 {
                for k_minus in 2u32..=10 {
                    for h in 0u32..=2 {
                        let model = match fiber_model(k_plus, k_minus, h) {
                            Ok(m) => m,
                            Err(_) => {
                                // The only invalid combination in range: one
                                // non-orientable orbit of odd codimension.
                                assert!(h == 1 && k_minus % 2 == 1);
                                continue;
                            }
                        };
                        assert_eq!(
                            d_invariant(&model.homotopy()),
                            1,
                            "d of the fiber model at ({k_plus}, {k_minus}, {h})"
                        );
                        let degrees = model.connecting_degrees();
                        assert_eq!(degrees.len(), 1, "connecting degree must be unique");
                        assert_eq!(degrees[0] % 2, 1, "connecting degree must be odd");
                        models_checked += 1;
                    }
                }
            }
            // 81 orientable models, 45 with one non-orientable orbit (even
            // k₋ only), 81 with two.
            assert_eq!(models_checked, 81 + 45 + 81);
        },
    );
}

// ---------------------------------------------------------------------------
// 4. Table reproduction and ratio filters
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_table_reproduction_and_ratio_filters() {
    timed(
        4,
        Duration::from_secs(1),
        "the printed table is reproduced row by row; both ratio filters are exact",
        || {
            // (group, isotropy, parameter range, dim, χ) for every printed row.
            let expected: [(&str, &str, Option<u32>, &str, &str); 20] = [
                ("SU(3)", "S1", None, "8", "3"),
                ("SU(3)", "S1 or Z3.SO(2)", None, "8", "6"),
                ("SU(4)", "S1.SU(2)", None, "12", "10"),
                ("SU(n)", "S1.SU(n-2)", Some(4), "4n - 4", "2n"),
                ("SO(7) or Spin(7)", "SU(3)", None, "14", "8"),
                ("Spin(7)", "S1.SU(2)", None, "18", "14"),
                ("Spin(7)", "SU(3)", None, "14", "2"),
                ("SO(9)", "S1.SU(3)", None, "28", "16"),
                ("Spin(9)", "S1.SU(2)^2", None, "30", "48"),
                ("SO(2n+1)", "S1.SO(2n-3)", Some(3), "8n - 6", "2n^2 + 2n"),
                ("SO(2n+1)", "T2.SU(n-2)", Some(3), "n^2 + 5n - 4", "n*2^n"),
                ("Sp(2)", "Z2.Sp(1)", None, "8", "8"),
                ("Sp(n)", "Sp(n-2).Sp(1)", Some(2), "8n - 8", "2n^2 - n"),
                ("Sp(n)", "S1.Sp(n-2)", Some(2), "8n - 6", "2n^2"),
                ("Sp(n)", "S1.Sp(n-2)", Some(2), "8n - 6", "2n"),
                ("Sp(n)", "T2.Sp(n-3)", Some(3), "12n - 6", "4n^2 - 4n"),
                ("SO(8)", "SU(4)", None, "14", "8"),
                ("SO(10)", "S1.SU(4)", None, "30", "16"),
                ("SO(2n)", "S1.SU(n-1)", Some(4), "n^2 + n", "2^(n+1)"),
                ("SO(2n)", "T2.SU(n-2)", Some(4), "n^2 + 3n - 4", "n*2^(n-1)"),
            ];
            let rows = frank_table();
            assert_eq!(rows.len(), expected.len(), "row count");
            for (i, (row, exp)) in rows.iter().zip(expected.iter()).enumerate() {
                assert_eq!(row.group_label(), exp.0, "group of row {}", i + 1);
                assert_eq!(row.isotropy, exp.1, "isotropy of row {}", i + 1);
                assert_eq!(row.n_min, exp.2, "range of row {}", i + 1);
                assert_eq!(row.dim.to_string(), exp.3, "dim of row {}", i + 1);
                assert_eq!(row.chi.to_string(), exp.4, "chi of row {}", i + 1);
            }
            // Numeric spot checks pin the expressions beyond their rendering.
            assert_eq!((rows[3].dim.eval(4), rows[3].chi.eval(4)), (12, 8));
            assert_eq!((rows[10].dim.eval(3), rows[10].chi.eval(3)), (20, 24));
            assert_eq!((rows[18].dim.eval(4), rows[18].chi.eval(4)), (20, 32));
            assert_eq!((rows[19].dim.eval(4), rows[19].chi.eval(4)), (24, 32));

            // Ratio `dim / (χ − 1)` an integer ≥ 6: exactly one pair.
            let at_least_six =
                ratio_filter(RatioPredicate::IntegerAtLeast(6), 50).expect("filter runs");
            assert!(at_least_six.tail_certified, "tail certificate for int ≥ 6");
            assert_eq!(at_least_six.matches.len(), 1);
            let only = &at_least_six.matches[0];
            assert_eq!(
                (
                    only.group.as_str(),
                    only.isotropy.as_str(),
                    only.dim,
                    only.chi
                ),
                ("Spin(7)", "SU(3)", 14, 2)
            );

            // Ratio exactly 2: the four known pairs, in table order.
            let equals_two =
                ratio_filter(RatioPredicate::EqualsInteger(2), 50).expect("filter runs");
            assert!(equals_two.tail_certified, "tail certificate for ratio = 2");
            let pairs: Vec<(&str, &str)> = equals_two
                .matches
                .iter()
                .map(|m| (m.group.as_str(), m.isotropy.as_str()))
                .collect();
            assert_eq!(
                pairs,
                [
                    ("SO(7)", "SU(3)"),
                    ("Spin(7)", "SU(3)"),
                    ("SO(8)", "SU(4)"),
                    ("SO(10)", "S1.SU(4)"),
                ]
            );
            for m in &equals_two.matches {
                assert_eq!(m.dim, 2 * (m.chi - 1), "ratio of the match {}", m.group);
            }
        },
    );
}

// ---------------------------------------------------------------------------
// 5. Truncated-polynomial classification at desk scale
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_classification_agrees_with_standard_parameters() {
    timed(
        5,
        Duration::from_secs(60),
        "over even k ≤ 12, n ≤ 6: CONFIRMED exactly on standard parameters, eliminations cited",
        || {
            let mut inputs = 0u32;
            for k in [2u32, 4, 6, 8, 10, 12] {
                for n in 1u32..=6 {
                    inputs += 1;
                    let report = cohomone::classify::classify_qp(k, n, 6)
                        .unwrap_or_else(|e| panic!("classify({k}, {n}) failed: {e}"));
                    report
                        .validate()
                        .unwrap_or_else(|e| panic!("invalid report for ({k}, {n}): {e}"));
                    if standard_parameters(k, n) {
                        assert_eq!(
                            report.verdict(),
                            Verdict::Confirmed,
                            "expected CONFIRMED at standard ({k}, {n})"
                        );
                        assert!(!report.conclusions().is_empty());
                    } else {
                        assert_eq!(
                            report.verdict(),
                            Verdict::Eliminated,
                            "expected ELIMINATED at non-standard ({k}, {n})"
                        );
                        let cited_failures = report
                            .steps()
                            .iter()
                            .filter(|s| !s.passed() && !s.citation().is_empty())
                            .count();
                        assert!(
                            cited_failures >= 1,
                            "elimination at ({k}, {n}) must cite at least one result"
                        );
                    }
                }
            }
            assert_eq!(inputs, 36);
        },
    );
}

// ---------------------------------------------------------------------------
// 6. Two-generator classification at desk scale
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_two_generator_classification_catalog() {
    timed(
        6,
        Duration::from_secs(60),
        "n ∈ {1,2,3}: exactly the three non-primitive conclusion labels, none primitive",
        || {
            use std::collections::BTreeSet;
            let mut kinds_seen: BTreeSet<&'static str> = BTreeSet::new();
            for n in 1u32..=3 {
                let report = cohomone::classify::classify_s2hp(n, 6)
                    .unwrap_or_else(|e| panic!("classify at n = {n} failed: {e}"));
                report
                    .validate()
                    .unwrap_or_else(|e| panic!("invalid report at n = {n}: {e}"));
                assert_eq!(report.verdict(), Verdict::Confirmed, "verdict at n = {n}");

                // Every conclusion must be one of the three catalog labels
                // (in particular: no primitive action is ever confirmed).
                let product = s2hp_product_label(n);
                let g2_product = s2hp_g2_product_label();
                let twisted = s2hp_twisted_label(n);
                for c in report.conclusions() {
                    let kind = if *c == product {
                        "product"
                    } else if *c == g2_product {
                        "g2-product"
                    } else if *c == twisted {
                        "twisted-bundle"
                    } else {
                        panic!("unexpected conclusion at n = {n}: {c}")
                    };
                    kinds_seen.insert(kind);
                }
                let expected: Vec<String> = if n == 2 {
                    vec![product, g2_product, twisted]
                } else {
                    vec![product, twisted]
                };
                assert_eq!(
                    report.conclusions(),
                    expected.as_slice(),
                    "labels at n = {n}"
                );

                // The primitive branch must have been closed explicitly.
                assert!(
                    report.steps().iter().any(|s| !s.passed()),
                    "at least one refuted branch expected at n = {n}"
                );
            }
            assert_eq!(
                kinds_seen.into_iter().collect::<Vec<_>>(),
                ["g2-product", "product", "twisted-bundle"],
                "union of conclusion kinds over n ∈ {{1,2,3}}"
            );
        },
    );
}

// ---------------------------------------------------------------------------
// 7. Euler-characteristic cross-checks
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_euler_characteristic_cross_checks() {
    timed(
        7,
        Duration::from_secs(5),
        "Weyl-quotient Euler characteristics of completed diagrams and of every target",
        || {
            // Completed diagrams with positive Euler characteristic; per-side
            // values are pinned through the Weyl orders, totals through the
            // diagram computation.
            let spin7 = GroupDiagram::new(
                CompactGroup::spin(7),
                CompactGroup::su(4),
                CompactGroup::g2(),
                CompactGroup::su(3),
            );
            assert_eq!(
                CompactGroup::spin(7).weyl_order() / CompactGroup::su(4).weyl_order(),
                2
            );
            assert_eq!(spin7.euler_characteristic().unwrap(), 2);
            assert_eq!(spin7.validate().verdict(), Verdict::Confirmed);

            let su4 = GroupDiagram::new(
                CompactGroup::su(4),
                CompactGroup::u(3),
                CompactGroup::product(&[
                    CompactGroup::su(2),
                    CompactGroup::su(2),
                    CompactGroup::circle(),
                ]),
                CompactGroup::product(&[CompactGroup::su(2), CompactGroup::circle()]),
            );
            assert_eq!(
                CompactGroup::su(4).weyl_order() / CompactGroup::u(3).weyl_order(),
                4
            );
            assert_eq!(CompactGroup::su(4).weyl_order(), 24);
            assert_eq!(
                CompactGroup::product(&[
                    CompactGroup::su(2),
                    CompactGroup::su(2),
                    CompactGroup::circle()
                ])
                .weyl_order(),
                4
            );
            assert_eq!(su4.euler_characteristic().unwrap(), 4 + 6);
            assert_eq!(su4.validate().verdict(), Verdict::Confirmed);

            let spin8 = GroupDiagram::new(
                CompactGroup::spin(8),
                CompactGroup::u(4),
                CompactGroup::spin(7),
                CompactGroup::su(4),
            );
            assert_eq!(
                CompactGroup::spin(8).weyl_order() / CompactGroup::u(4).weyl_order(),
                8
            );
            // rank Spin(7) < rank Spin(8): that side contributes zero.
            assert_eq!(spin8.euler_characteristic().unwrap(), 8);
            assert_eq!(spin8.validate().verdict(), Verdict::Confirmed);

            // χ of every truncated-polynomial target is n + 1.
            for k in [2u32, 4, 6, 8, 10, 12] {
                for n in 0u32..=10 {
                    let target = RationalTarget::qp(k, n).expect("even k is always valid");
                    assert_eq!(target.euler_char(), n + 1, "χ at (k, n) = ({k}, {n})");
                    assert_eq!(target.formal_dim(), k * n);
                }
            }
            // Odd k: only n ≤ 1 exists, and the n = 1 target is an odd
            // sphere, whose Euler characteristic vanishes.
            for k in [3u32, 5, 7] {
                let point = RationalTarget::qp(k, 0).expect("n = 0 is a point");
                assert_eq!(point.euler_char(), 1);
                let sphere = RationalTarget::qp(k, 1).expect("odd k with n = 1 is valid");
                assert_eq!(sphere.euler_char(), 0, "χ of the odd sphere S^{k}");
            }
        },
    );
}

// ---------------------------------------------------------------------------
// 8. Non-primitive arithmetic
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_nonprimitive_arithmetic() {
    timed(
        8,
        Duration::from_secs(1),
        "factorization sums and divisibility for n ≤ 10, k ≤ 12; bundle-triviality truth table",
        || {
            for k in 1u32..=12 {
                for n in 0u32..=10 {
                    let factorizations = qp_factorizations(k, n);
                    for f in &factorizations {
                        assert!(f.m >= 1 && f.m <= n);
                        assert_eq!((n + 1) % (f.m + 1), 0, "divisibility at ({k}, {n})");
                        let q = (n + 1) / (f.m + 1);
                        assert!(q >= 2, "base height at ({k}, {n})");
                        assert_eq!(f.fiber, (k, f.m));
                        assert_eq!(f.base, (k * (f.m + 1), q - 1));
                        assert_eq!(
                            f.fiber_dim() + f.base_dim(),
                            k * n,
                            "dimension sum at ({k}, {n}, m = {})",
                            f.m
                        );
                    }
                    // A factorization exists exactly when n + 1 is composite.
                    let composite = (2..=n).any(|d| (n + 1) % d == 0 && d != n + 1);
                    assert_eq!(
                        !factorizations.is_empty(),
                        composite,
                        "existence at ({k}, {n})"
                    );
                }
            }

            // Bundle-triviality truth table: over S^(2l) the bundle is forced
            // trivial when 2l ≥ 8 and the fiber dimension is at most 2l − 2;
            // over the Cayley plane when the fiber dimension is at most 7.
            let sphere_thresholds: [(u32, u32); 8] = [
                (2, 0),
                (4, 0),
                (6, 0),
                (8, 6),
                (10, 8),
                (12, 10),
                (16, 14),
                (20, 18),
            ];
            for (two_l, max_trivial_fiber) in sphere_thresholds {
                for fiber_dim in 1u32..=12 {
                    assert_eq!(
                        small_fiber_trivial(SmallFiberBase::EvenSphere(two_l), fiber_dim),
                        fiber_dim <= max_trivial_fiber,
                        "sphere base 2l = {two_l}, fiber {fiber_dim}"
                    );
                }
            }
            for fiber_dim in 1u32..=12 {
                assert_eq!(
                    small_fiber_trivial(SmallFiberBase::CayleyPlane, fiber_dim),
                    fiber_dim <= 7,
                    "Cayley base, fiber {fiber_dim}"
                );
            }
        },
    );
}
