"""Tests for the verification suites."""

from typing import List

import pytest

from exab.checks import (
    SUITES,
    CheckContext,
    check_lowerbound,
    check_nonneg,
    check_omega,
    check_oracle,
    check_symmetry,
    check_theorem,
    run_checks,
)
from exab.config import Settings
from exab.families import CorpusEntry, boolean_lattice
from exab.models import CheckStatus
from exab.ncpoly import AbPoly, YTPoly
from exab.poset import GradedPoset
from exab.rlabel import CoverLabeling, min_atom_labeling


def test_all_suites_pass_on_example(lattice_l: GradedPoset, labeling_l: CoverLabeling) -> None:
    """Test every suite passes on the labeled rank-2 example."""
    results = run_checks(CheckContext(lattice_l, labeling_l))
    assert [r.name for r in results] == list(SUITES)
    assert all(r.status is CheckStatus.PASS for r in results), [r.render() for r in results]


def test_suites_without_labeling(lattice_l: GradedPoset) -> None:
    """Test labeling suites are skipped and the rest still run."""
    results = {r.name: r for r in run_checks(CheckContext(lattice_l))}
    assert results["theorem"].status is CheckStatus.SKIP
    assert results["theorem"].detail == "no labeling"
    assert results["oracle"].status is CheckStatus.SKIP
    for name in ("omega", "symmetry", "nonneg", "lowerbound", "poincare", "identities"):
        assert results[name].status is CheckStatus.PASS, name


def test_bad_labeling_fails(lattice_l: GradedPoset) -> None:
    """Test a labeling that is not an R-labeling fails with a witness."""
    all_ones = CoverLabeling(lattice_l, {cover: 1 for cover in lattice_l.covers})
    ctx = CheckContext(lattice_l, all_ones)
    result = check_theorem(ctx)
    assert result.status is CheckStatus.FAIL
    assert result.render() == (
        "FAIL theorem: NotRLabeling: [0, 1] has 3 weakly increasing maximal chains"
    )
    assert check_oracle(ctx).status is CheckStatus.FAIL
    assert check_omega(ctx).status is CheckStatus.PASS


def test_rank_zero_suites(rank0: GradedPoset) -> None:
    """Test the chain-route suites on the one-element poset."""
    names = ["omega", "symmetry", "nonneg", "lowerbound", "poincare", "identities"]
    results = run_checks(CheckContext(rank0), names)
    assert all(r.status is CheckStatus.PASS for r in results)
    details = {r.name: r.detail for r in results}
    assert details["lowerbound"] == "rank 0"
    assert details["poincare"] == "rank 0"


def test_oracle_skipped_above_limit() -> None:
    """Test the oracle does not run above the configured rank."""
    P = boolean_lattice(4)
    labeling, _ = min_atom_labeling(P)
    result = check_oracle(CheckContext(P, labeling, Settings(oracle_max_rank=3)))
    assert result.status is CheckStatus.SKIP
    assert result.detail == "rank 4 above 3"


def test_suites_detect_wrong_values(lattice_l: GradedPoset) -> None:
    """Test suites fail when the shared values are corrupted."""
    ctx = CheckContext(lattice_l)
    ctx.extab = AbPoly.word("aa")
    assert check_omega(ctx).status is CheckStatus.FAIL
    assert check_symmetry(ctx).status is CheckStatus.FAIL
    ctx.extab = AbPoly.word("ab", -1)
    assert check_nonneg(ctx).status is CheckStatus.FAIL
    ctx.num = YTPoly()
    result = check_lowerbound(ctx)
    assert result.status is CheckStatus.FAIL
    assert result.detail == "[t^0] Num(1, t) = 0 < 6"


def test_run_checks_selection(lattice_l: GradedPoset) -> None:
    """Test suites run in canonical order whatever the request order."""
    results = run_checks(CheckContext(lattice_l), ["symmetry", "omega"])
    assert [r.name for r in results] == ["omega", "symmetry"]
    with pytest.raises(ValueError):
        run_checks(CheckContext(lattice_l), ["omega", "nope"])


def test_all_suites_on_corpus(corpus_entries: List[CorpusEntry]) -> None:
    """Test every suite passes on the corpus, the oracle only up to rank 3."""
    assert {"B4", "Pi4"} <= {entry.name for entry in corpus_entries}
    for entry in corpus_entries:
        results = {
            r.name: r for r in run_checks(CheckContext(entry.poset, entry.labeling))
        }
        assert list(results) == list(SUITES)
        for name, result in results.items():
            if name == "oracle":
                continue
            assert result.status is CheckStatus.PASS, f"{entry.name}: {result.render()}"
        expected = CheckStatus.PASS if entry.poset.n <= 3 else CheckStatus.SKIP
        oracle = results["oracle"]
        assert oracle.status is expected, f"{entry.name}: {oracle.render()}"
