"""Acceptance gate: one test per top-level claim, each printing a
pass/fail line.  All checks are exact (integer and rational arithmetic),
so there are no tolerances to configure."""

import pytest

from diagmon import verify


def report(label, results):
    ok = all(r.passed for r in results)
    print(f"{'PASS' if ok else 'FAIL'}: {label}")
    for r in results:
        if not r.passed:
            print("  " + r.line())
    assert ok, label


def test_01_worked_example_product_and_parameters():
    report(
        "degree-6 worked example: product and parameters",
        verify.check_worked_example(),
    )


def test_02_block_identities_satisfy_the_axioms():
    report(
        "partition monoids are Ehresmann for block identities (n = 2..4)",
        verify.check_block_identity_axioms(),
    )


def test_03_partial_identities_fail_the_axioms():
    report(
        "partition monoid at degree 2 fails the congruence axioms for "
        "partial identities",
        verify.check_partial_identity_failure(),
    )


def test_04_binary_relation_suite():
    report(
        "binary relations: Ehresmann structure, partial-function and "
        "partial-bijection substructures, invertible endomorphisms",
        verify.check_relation_suite(),
    )


def test_05_identity_set_closed_forms():
    report(
        "left/right identity sets match their closed forms over the "
        "degree-3 partition monoid",
        verify.check_identity_set_formulas(),
    )


def test_06_natural_order_characterizations():
    report(
        "natural orders match their block-level characterizations over "
        "all degree-3 pairs",
        verify.check_order_characterizations(),
    )


def test_07_regular_parts_and_identity_classes():
    report(
        "regular parts are the expected inverse submonoids; identity "
        "classes have partial-bijection sizes",
        verify.check_regular_subsemigroups(),
    )


def test_08_largest_restriction_subsemigroups():
    report(
        "largest restriction subsemigroups match their block descriptions",
        verify.check_restriction_subsemigroups(),
    )


def test_09_rank_chain_structure():
    report(
        "full-domain and right-restriction monoids: regularity, rank "
        "chains, group cells, right zeros, egg-box shape",
        verify.check_rank_chain_structure(),
    )


def test_10_basis_transform_isomorphism():
    report(
        "basis transform is a certified isomorphism onto the category "
        "algebra (multiplicative, unitriangular, Mobius-inverted)",
        verify.check_transform_isomorphism(),
    )


def test_11_semisimple_quotient_dimensions():
    report(
        "semigroup algebra modulo its radical has the regular part's "
        "dimension, and the regular part is semisimple",
        verify.check_semisimple_dimensions(),
    )


def test_12_brauer_and_rook_suite():
    report(
        "Brauer/partial Brauer negative results and the rook-monoid tower",
        verify.check_brauer_failure()
        + verify.check_brauer_regular_part()
        + verify.check_rook_suite(),
    )


def test_13_counting_oracles():
    report(
        "family sizes match independent counting formulas",
        verify.check_partition_sizes()
        + verify.check_relation_sizes()
        + verify.check_brauer_sizes(),
    )
