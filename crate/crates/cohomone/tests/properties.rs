//! Property-based invariants across the exact layers: group labels round-trip,
//! the d-invariant is additive, resolved exact sequences stay non-negative and
//! satisfy the defect identity, fiber models behave uniformly in the
//! codimensions, sphere products pass the elliptic screen, and reports survive
//! their structured encoding.

use proptest::prelude::*;

use cohomone::cohom1::fiber_model;
use cohomone::liegroups::CompactGroup;
use cohomone::report::{ConstraintReport, Step, Verdict};
use cohomone::rht::{
    d_invariant, defect_identity_check, elliptic_feasible, les_resolve, ConnectingRanks, GradedDims,
};

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

fn arb_simple_group() -> impl Strategy<Value = CompactGroup> {
    prop_oneof![
        (2u32..=8).prop_map(CompactGroup::su),
        (2u32..=10).prop_map(CompactGroup::so),
        (2u32..=10).prop_map(CompactGroup::spin),
        (1u32..=5).prop_map(CompactGroup::sp),
        (1u32..=6).prop_map(CompactGroup::u),
        Just(CompactGroup::g2()),
        Just(CompactGroup::f4()),
        Just(CompactGroup::e6()),
        Just(CompactGroup::e7()),
        Just(CompactGroup::e8()),
    ]
}

fn arb_group() -> impl Strategy<Value = CompactGroup> {
    (
        proptest::collection::vec(arb_simple_group(), 0..3),
        0u32..=2,
    )
        .prop_map(|(parts, torus)| {
            let mut all = parts;
            if torus > 0 {
                all.push(CompactGroup::torus(torus));
            }
            CompactGroup::product(&all)
        })
}

fn arb_graded() -> impl Strategy<Value = GradedDims> {
    proptest::collection::btree_map(1u32..=15, 1u32..=3, 0..5).prop_map(GradedDims::from_pairs)
}

/// Free text with no structural characters; `Step` sanitizes the rest.
fn arb_text() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 ,.()\\-]{1,40}"
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

proptest! {
    /// The canonical data label parses back to an equal group with identical
    /// invariants.
    #[test]
    fn group_data_label_round_trips(g in arb_group()) {
        let reparsed = CompactGroup::parse(&g.data_label()).expect("canonical label parses");
        prop_assert_eq!(&reparsed, &g);
        prop_assert_eq!(reparsed.dim(), g.dim());
        prop_assert_eq!(reparsed.rank(), g.rank());
        prop_assert_eq!(reparsed.weyl_order(), g.weyl_order());
    }

    /// Dimension, rank, Weyl order and rational homotopy are all additive
    /// over products.
    #[test]
    fn group_products_are_additive(a in arb_group(), b in arb_group()) {
        let product = CompactGroup::product(&[a.clone(), b.clone()]);
        prop_assert_eq!(product.dim(), a.dim() + b.dim());
        prop_assert_eq!(product.rank(), a.rank() + b.rank());
        prop_assert_eq!(product.weyl_order(), a.weyl_order() * b.weyl_order());
        prop_assert_eq!(
            product.rational_homotopy(),
            a.rational_homotopy().merged(&b.rational_homotopy())
        );
        prop_assert_eq!(
            d_invariant(&product.rational_homotopy()),
            product.dim() as i64
        );
    }

    /// Removing one tensor factor is inverse to multiplying it in.
    #[test]
    fn group_subtraction_inverts_products(a in arb_group(), b in arb_group()) {
        let product = CompactGroup::product(&[a.clone(), b.clone()]);
        let difference = product.try_subtract(&b).expect("factor is present");
        prop_assert_eq!(difference, a);
    }
}

// ---------------------------------------------------------------------------
// Rational homotopy bookkeeping
// ---------------------------------------------------------------------------

proptest! {
    /// The d-invariant is additive over products of spaces.
    #[test]
    fn d_invariant_additive_over_merge(a in arb_graded(), b in arb_graded()) {
        prop_assert_eq!(
            d_invariant(&a.merged(&b)),
            d_invariant(&a) + d_invariant(&b)
        );
    }

    /// d(Sᵐ) = m in every dimension, odd or even.
    #[test]
    fn d_invariant_of_spheres_is_the_dimension(m in 1u32..=60) {
        prop_assert_eq!(d_invariant(&GradedDims::sphere(m)), i64::from(m));
    }

    /// A resolved exact sequence has non-negative dimensions in every
    /// degree, satisfies the resolution formula degreewise, and satisfies
    /// the defect identity; with all connecting ranks zero it degenerates
    /// to the product answer.
    #[test]
    fn les_resolution_is_exact_and_defect_balanced(
        fiber in arb_graded(),
        base in arb_graded(),
        seeds in proptest::collection::vec(0u32..=8, 20),
    ) {
        let mut pairs = Vec::new();
        for (i, seed) in seeds.iter().enumerate() {
            let k = i as u32 + 2;
            let cap = base.dim_at(k).min(fiber.dim_at(k - 1));
            if cap > 0 {
                pairs.push((k, seed % (cap + 1)));
            }
        }
        let ranks = ConnectingRanks::from_pairs(pairs).expect("degrees ≥ 2");
        prop_assert!(ranks.compatible_with(&fiber, &base));

        let total = les_resolve(&fiber, &base, &ranks).expect("compatible ranks resolve");
        for k in 1..=25u32 {
            let expected = i64::from(fiber.dim_at(k)) + i64::from(base.dim_at(k))
                - i64::from(ranks.rank_at(k + 1))
                - i64::from(ranks.rank_at(k));
            prop_assert!(expected >= 0);
            prop_assert_eq!(i64::from(total.dim_at(k)), expected);
        }
        prop_assert!(defect_identity_check(&fiber, &total, &base, &ranks));

        let product = les_resolve(&fiber, &base, &ConnectingRanks::zero())
            .expect("zero ranks always resolve");
        prop_assert_eq!(product, fiber.merged(&base));
    }

    /// Prescribing a rank above either feeding dimension is rejected.
    #[test]
    fn les_rejects_overfull_connecting_ranks(
        fiber in arb_graded(),
        base in arb_graded(),
        k in 2u32..=16,
    ) {
        let cap = base.dim_at(k).min(fiber.dim_at(k - 1));
        let ranks = ConnectingRanks::from_pairs([(k, cap + 1)]).expect("degree ≥ 2");
        prop_assert!(!ranks.compatible_with(&fiber, &base));
        prop_assert!(les_resolve(&fiber, &base, &ranks).is_err());
    }

    /// Products of spheres are elliptic: they pass the exact feasibility
    /// screen at their total dimension.
    #[test]
    fn sphere_products_pass_the_elliptic_screen(
        dims in proptest::collection::vec(1u32..=30, 1..5),
    ) {
        let mut homotopy = GradedDims::new();
        let mut formal_dim = 0u32;
        for m in dims {
            homotopy = homotopy.merged(&GradedDims::sphere(m));
            formal_dim += m;
        }
        prop_assert!(elliptic_feasible(&homotopy, formal_dim));
        // The screen is sharp about the dimension: shifting it breaks
        // condition (1).
        prop_assert!(!elliptic_feasible(&homotopy, formal_dim + 1));
    }
}

// ---------------------------------------------------------------------------
// Fiber models
// ---------------------------------------------------------------------------

proptest! {
    /// Across all codimensions (well beyond the acceptance grid) and every
    /// count of non-orientable singular orbits: the model exists exactly when
    /// a single non-orientable orbit has even codimension, d(F) = 1, and the
    /// connecting degree is a unique odd number.
    #[test]
    fn fiber_models_are_uniform_in_the_codimensions(
        k_plus in 2u32..=40,
        k_minus in 2u32..=40,
        h in 0u32..=2,
    ) {
        match fiber_model(k_plus, k_minus, h) {
            Ok(model) => {
                prop_assert!(h != 1 || k_minus % 2 == 0);
                prop_assert_eq!(d_invariant(&model.homotopy()), 1);
                let degrees = model.connecting_degrees();
                prop_assert_eq!(degrees.len(), 1);
                prop_assert_eq!(degrees[0] % 2, 1);
            }
            Err(_) => {
                prop_assert!(h == 1 && k_minus % 2 == 1);
            }
        }
    }

    /// More than two non-orientable singular orbits is always rejected.
    #[test]
    fn fiber_models_reject_impossible_orientation_counts(
        k_plus in 2u32..=10,
        k_minus in 2u32..=10,
        h in 3u32..=6,
    ) {
        prop_assert!(fiber_model(k_plus, k_minus, h).is_err());
    }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

proptest! {
    /// Any report assembled from sanitized parts survives the structured
    /// encoding unchanged.
    #[test]
    fn reports_round_trip_through_the_structured_format(
        verdict_pick in 0u8..3,
        step_parts in proptest::collection::vec(
            (proptest::bool::ANY, arb_text(), arb_text()),
            0..6,
        ),
        conclusions in proptest::collection::vec(arb_text(), 0..4),
    ) {
        let verdict = match verdict_pick {
            0 => Verdict::Confirmed,
            1 => Verdict::Eliminated,
            _ => Verdict::Undetermined,
        };
        let steps: Vec<Step> = step_parts
            .into_iter()
            .map(|(pass, constraint, citation)| {
                if pass {
                    Step::pass_cited(&constraint, &citation)
                } else {
                    Step::fail(&constraint, &citation)
                }
            })
            .collect();
        let report = ConstraintReport::new(verdict, steps, conclusions);
        let encoded = report.to_structured();
        let decoded = ConstraintReport::parse_structured(&encoded).expect("round trip parses");
        prop_assert_eq!(decoded, report);
    }

    /// Sanitization confines every field to a single structured record even
    /// when the input contains tabs and newlines.
    #[test]
    fn reports_sanitize_structural_characters(raw in "[a-z\\t\\n ]{1,30}") {
        let report = ConstraintReport::new(
            Verdict::Undetermined,
            vec![Step::fail(&raw, &raw)],
            vec![raw.clone()],
        );
        let encoded = report.to_structured();
        // Header + verdict + one step + one conclusion.
        prop_assert_eq!(encoded.trim_end().lines().count(), 4);
        let decoded = ConstraintReport::parse_structured(&encoded).expect("parses");
        prop_assert_eq!(decoded, report);
    }
}
