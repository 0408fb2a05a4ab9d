"""Named verification suites run by ``exab verify``.

Each suite takes a :class:`CheckContext` and returns one
:class:`~exab.models.CheckResult`. Suites that need a cover labeling report
SKIP without one; the others only use the chain route.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional

from .config import Settings
from .extab import (
    cd_index,
    count_maximal_chains,
    extab_by_chains,
    extab_by_labeling,
    extab_circ_by_chains,
    extab_plus_by_chains,
    lower_bound,
    num_poly,
    poincare_from_ab,
    reduced_ab_index,
    total,
)
from .models import CheckResult, CheckStatus, RLabelingVerdict
from .ncpoly import A, AbPoly, AbWord, YTPoly, cd_expand, eval_y, iota, omega, specialize_ab
from .oracle import Oracle
from .poset import (
    GradedPoset,
    chain_poincare,
    chains_in,
    maximal_chains,
    poincare,
    rank_set,
)
from .rlabel import CoverLabeling, u_monomial_e, verify_r_labeling

logger = logging.getLogger(__name__)


@dataclass
class CheckContext:
    """A poset, an optional labeling and the values the suites share."""

    poset: GradedPoset
    labeling: Optional[CoverLabeling] = None
    settings: Settings = field(default_factory=Settings)

    @cached_property
    def extab(self) -> AbPoly:
        return extab_by_chains(self.poset)

    @cached_property
    def psi(self) -> AbPoly:
        return eval_y(self.extab, 0)

    @cached_property
    def num(self) -> Optional[YTPoly]:
        return num_poly(self.poset) if self.poset.n >= 1 else None

    @cached_property
    def verdict(self) -> Optional[RLabelingVerdict]:
        if self.labeling is None:
            return None
        return verify_r_labeling(self.poset, self.labeling)


def _passed(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.PASS, detail=detail)


def _failed(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.FAIL, detail=detail)


def _skipped(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.SKIP, detail=detail)


def _labeling_problem(name: str, ctx: CheckContext) -> Optional[CheckResult]:
    if ctx.labeling is None:
        return _skipped(name, "no labeling")
    verdict = ctx.verdict
    if verdict is not None and not verdict.ok:
        return _failed(
            name,
            f"NotRLabeling: [{verdict.lower}, {verdict.upper}] has "
            f"{verdict.increasing_chains} weakly increasing maximal chains",
        )
    return None


def _subsets(items: Iterable[int]) -> List[frozenset[int]]:
    pool = list(items)
    return [frozenset(c) for k in range(len(pool) + 1) for c in combinations(pool, k)]


def check_theorem(ctx: CheckContext) -> CheckResult:
    """Chain route against labeling route, the cd-form, and complementary
    toggled words."""
    name = "theorem"
    problem = _labeling_problem(name, ctx)
    if problem is not None:
        return problem
    assert ctx.labeling is not None
    P, labeling = ctx.poset, ctx.labeling
    by_labeling = extab_by_labeling(P, labeling, check=False)
    if by_labeling != ctx.extab:
        return _failed(name, f"by chains {ctx.extab} != by labeling {by_labeling}")
    expanded = cd_expand(cd_index(P, labeling))
    if expanded != by_labeling:
        return _failed(name, f"cd-form expands to {expanded}")
    positions = frozenset(range(1, P.n + 1))
    for chain in maximal_chains(P):
        for E in _subsets(positions):
            word = u_monomial_e(P, chain, E, labeling)
            other = u_monomial_e(P, chain, positions - E, labeling)
            if word.complement() != other:
                return _failed(name, f"u(M, E) = {word}, u(M, E^c) = {other} on {chain}")
    return _passed(name)


def check_omega(ctx: CheckContext) -> CheckResult:
    name = "omega"
    image = omega(ctx.psi)
    if image != ctx.extab:
        return _failed(name, f"omega(Psi) = {image} != {ctx.extab}")
    return _passed(name)


def check_symmetry(ctx: CheckContext) -> CheckResult:
    """[y^l m] = [y^(n-l) m^c] for every word m of length n."""
    name = "symmetry"
    n = ctx.poset.n
    for positions in _subsets(range(n)):
        word = AbWord.from_b_positions(n, positions)
        coeff = ctx.extab.coefficient(word)
        mirror = ctx.extab.coefficient(word.complement())
        for ell in range(n + 1):
            if coeff.coefficient(ell) != mirror.coefficient(n - ell):
                return _failed(name, f"y^{ell} {word} against y^{n - ell} {word.complement()}")
    return _passed(name)


def check_nonneg(ctx: CheckContext) -> CheckResult:
    name = "nonneg"
    for word, coeff in ctx.extab.terms():
        if any(c < 0 for c in coeff.coeffs):
            return _failed(name, f"coefficient {coeff} of {word}")
    if ctx.num is not None:
        for key, value in ctx.num.coeffs.items():
            if value < 0:
                return _failed(name, f"Num coefficient {value} at (y, t) exponents {key}")
    return _passed(name)


def check_lowerbound(ctx: CheckContext) -> CheckResult:
    name = "lowerbound"
    if ctx.num is None:
        return _passed(name, "rank 0")
    for k in range(ctx.poset.n):
        value = ctx.num.coefficient_t(k).evaluate(1)
        bound = lower_bound(ctx.poset, k)
        if value < bound:
            return _failed(name, f"[t^{k}] Num(1, t) = {value} < {bound}")
    return _passed(name)


def check_poincare(ctx: CheckContext) -> CheckResult:
    name = "poincare"
    P = ctx.poset
    if P.n == 0:
        return _passed(name, "rank 0")
    expected = poincare(P)
    from_ab = poincare_from_ab(P)
    if from_ab != expected:
        return _failed(name, f"[a^(n-1)] iota(omega(Psi)) = {from_ab} != {expected}")
    assert ctx.num is not None
    constant = ctx.num.coefficient_t(0)
    if constant != expected:
        return _failed(name, f"[t^0] Num = {constant} != {expected}")
    return _passed(name)


def check_identities(ctx: CheckContext) -> CheckResult:
    """Chain-weight identities and the counting specializations."""
    name = "identities"
    P = ctx.poset
    plus = extab_plus_by_chains(P)
    if plus != ctx.extab * A:
        return _failed(name, f"sum of Poin_C wt+_C = {plus} != exPsi * a")
    if P.n >= 1:
        circ = extab_circ_by_chains(P)
        if circ != iota(ctx.extab):
            return _failed(name, f"sum of Poin_(0 u C) wt-_C = {circ} != iota(exPsi)")
        if A * reduced_ab_index(P) != ctx.psi:
            return _failed(name, "a times the reduced index differs from Psi")
        specialized = specialize_ab(iota(ctx.extab))
        if specialized != ctx.num:
            return _failed(name, f"iota(exPsi) at a=1, b=t gives {specialized} != {ctx.num}")
    chains = count_maximal_chains(P)
    if total(ctx.psi) != chains:
        return _failed(name, f"Psi(1, 1) = {total(ctx.psi)} != {chains} maximal chains")
    if total(ctx.extab, 1) != 2**P.n * chains:
        return _failed(name, f"exPsi(1, 1, 1) = {total(ctx.extab, 1)} != 2^n * {chains}")
    return _passed(name)


def _oracle_failure(ctx: CheckContext, oracle: Oracle) -> Optional[str]:
    P = oracle.P
    n = P.n
    for x in P.elements:
        for y in P.above(x):
            if oracle.mobius_via_chains(x, y) != abs(P.mobius(x, y)):
                return f"decreasing chains of [{x}, {y}] != |mu|"

    for chain in chains_in(P):
        if oracle.poincare_expansion(chain) != chain_poincare(P, chain):
            return f"interlacing expansion of Poin_C fails for C = {list(chain)}"

    counts: Counter[tuple[int, AbWord]] = Counter()
    image = set()
    pairs = 0
    positions = frozenset(range(1, n + 1))
    for M in maximal_chains(P):
        for E in _subsets(positions):
            counts[(len(E), u_monomial_e(P, M, E, oracle.labeling))] += 1
            triple = oracle.pie_triple(M, E)
            if triple not in oracle.b_set(len(E), rank_set(P, triple.C)):
                return f"(M, E) = ({list(M)}, {sorted(E)}) maps outside B"
            image.add(triple)
            pairs += 1
    if len(image) != pairs:
        return "the (M, E) -> triple map is not injective"

    for T in _subsets(range(n)):
        word = AbWord.from_b_positions(n, T)
        coeff = ctx.extab.coefficient(word)
        for ell in range(n + 1):
            size = len(oracle.b_set(ell, T))
            if size != coeff.coefficient(ell):
                return f"#B_{ell}({sorted(T)}) = {size} != [y^{ell} {word}] exPsi"
            if size != counts[(ell, word)]:
                return f"#B_{ell}({sorted(T)}) = {size} != #(M, E) with u(M, E) = {word}"

    if n >= 1:
        circ = iota(ctx.extab)
        for T in _subsets(range(1, n)):
            word = AbWord.from_b_positions(n - 1, (i - 1 for i in T))
            coeff = circ.coefficient(word)
            for ell in range(n + 1):
                size = len(oracle.b_circ_set(ell, T))
                if size != coeff.coefficient(ell):
                    return f"#B-circ_{ell}({sorted(T)}) = {size} != [y^{ell} {word}] iota(exPsi)"
    return None


def check_oracle(ctx: CheckContext) -> CheckResult:
    """Brute-force enumeration against the fast routes."""
    name = "oracle"
    problem = _labeling_problem(name, ctx)
    if problem is not None:
        return problem
    assert ctx.labeling is not None
    limit = ctx.settings.oracle_max_rank
    if ctx.poset.n > limit:
        return _skipped(name, f"rank {ctx.poset.n} above {limit}")
    oracle = Oracle(ctx.poset, ctx.labeling, check=False)
    failure = _oracle_failure(ctx, oracle)
    if failure is not None:
        return _failed(name, failure)
    return _passed(name)


Suite = Callable[[CheckContext], CheckResult]

SUITES: Dict[str, Suite] = {
    "theorem": check_theorem,
    "omega": check_omega,
    "symmetry": check_symmetry,
    "nonneg": check_nonneg,
    "lowerbound": check_lowerbound,
    "poincare": check_poincare,
    "identities": check_identities,
    "oracle": check_oracle,
}


def run_checks(ctx: CheckContext, names: Iterable[str] = ("all",)) -> List[CheckResult]:
    """Run the named suites in the canonical order; ``all`` selects every suite.

    Raises:
        ValueError: On an unknown suite name.
    """
    wanted = set(names)
    unknown = wanted - set(SUITES) - {"all"}
    if unknown:
        raise ValueError(f"Unknown checks {sorted(unknown)}")
    selected = [n for n in SUITES if "all" in wanted or n in wanted]
    results = []
    for suite_name in selected:
        logger.debug("Running check %s", suite_name)
        results.append(SUITES[suite_name](ctx))
    return results
