"""Claim verifiers: each named claim checks one statement mechanically.

Verifiers return structured reports rather than booleans so callers can see
which sub-check failed and how long it took.  Instances outside a claim's
hypotheses are refused, never silently recomputed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb, gcd
from typing import Callable

from .binomials import Binomial
from .families import (
    minors_closed_chain,
    minors_open_chain,
    projective_grading,
    projective_relation_matrix,
    scalar_grading,
    structured_closed_family,
    structured_family,
    structured_open_family,
    toric_ideal,
    weight_relation_matrix,
)
from .fibers import (
    forced_generators,
    has_unique_minimal_system,
    minimal_generator_count,
    prune_redundant_generators,
)
from .groebner import (
    groebner_reduced,
    ideal_equal,
    is_groebner_basis,
    is_minimal_basis,
    is_reduced_basis,
    saturate_torus,
)
from .intlinalg import kernel_basis, row_hnf
from .orders import build_order_i, five_variable_order, minor_side_predicate
from .reports import (
    FAIL,
    PASS,
    REFUSED,
    ClaimResult,
    InstanceRef,
    VerificationReport,
)
from .semigroup import (
    InstanceParams,
    gcd_of_generators,
    generators,
    homogeneity_identity_holds,
    repunit,
)

CheckFn = Callable[[], tuple[bool, str]]


def _instance(params: InstanceParams, i: int | None = None) -> InstanceRef:
    return InstanceRef(params.a, params.b, params.n, i)


def _run(claims: list[ClaimResult], name: str, label: str, fn: CheckFn) -> bool:
    t0 = time.perf_counter()
    ok, detail = fn()
    ms = int(round((time.perf_counter() - t0) * 1000))
    claims.append(ClaimResult(name, PASS if ok else FAIL, f"{label}: {detail}", ms))
    return ok


def _refusal(params: InstanceParams, name: str, why: str,
             i: int | None = None) -> VerificationReport:
    return VerificationReport(
        _instance(params, i), (ClaimResult(name, REFUSED, why),)
    )


def _needs_base(params: InstanceParams, name: str,
                i: int | None = None) -> VerificationReport | None:
    if params.b < 2:
        return _refusal(params, name, f"claim assumes base b >= 2, got b={params.b}", i)
    return None


def verify_homogeneity_identity(params: InstanceParams) -> VerificationReport:
    """lemma2: b*a_j + a_(j+k) == b*a_(j+k-1) + a_(j+1) on extended generators."""
    claims: list[ClaimResult] = []

    def check() -> tuple[bool, str]:
        bad = [
            (j, k)
            for j in range(1, 31)
            for k in range(1, 31)
            if not homogeneity_identity_holds(params, j, k)
        ]
        if bad:
            return False, f"fails at (j, k) = {bad[:3]}"
        return True, "holds for all j, k in 1..30"

    _run(claims, "lemma2", "weight identity", check)
    return VerificationReport(_instance(params), tuple(claims))


def verify_minor_side_classifier(params: InstanceParams) -> VerificationReport:
    """lemma3: the index predicate picks the smaller minor side for every i."""
    claims: list[ClaimResult] = []
    n, b = params.n, params.b
    weights = generators(params)

    def check() -> tuple[bool, str]:
        count = 0
        bad = []
        for i in range(1, n + 1):
            order = build_order_i(weights, i)
            for j in range(1, n - 1):
                for k in range(j + 1, n):
                    u = [0] * n
                    v = [0] * n
                    u[j - 1] += b
                    u[k] += 1
                    v[j] += 1
                    v[k - 1] += b
                    predicted_smaller = minor_side_predicate(n, i, j, k)
                    actually_smaller = order.compare(tuple(u), tuple(v)) < 0
                    count += 1
                    if predicted_smaller != actually_smaller:
                        bad.append((i, j, k))
        if bad:
            return False, f"disagrees at (i, j, k) = {bad[:3]}"
        return True, f"agrees with compare on all {count} admissible (i, j, k)"

    _run(claims, "lemma3", "side classifier", check)
    return VerificationReport(_instance(params), tuple(claims))


def verify_reduced_open_family(params: InstanceParams, i: int) -> VerificationReport:
    """prop-gb1: the structured open-chain family is the reduced basis."""
    refusal = _needs_base(params, "prop-gb1", i)
    if refusal:
        return refusal
    claims: list[ClaimResult] = []
    name = "prop-gb1"
    order = build_order_i(generators(params), i)
    family = structured_open_family(params, i)
    minors = minors_open_chain(params)

    oriented_ok = _run(
        claims, name, "orientation",
        lambda: (
            all(order.compare(g.plus, g.minus) > 0 for g in family),
            "plus side of every element is its leading term",
        ),
    )
    if not oriented_ok:
        return VerificationReport(_instance(params, i), tuple(claims))
    _run(claims, name, "groebner",
         lambda: (is_groebner_basis(family, order), "all S-pairs reduce to zero"))
    _run(claims, name, "reduced",
         lambda: (is_reduced_basis(family), "no leading term divides another monomial"))
    expected = comb(params.n - 1, 2)
    _run(claims, name, "cardinality",
         lambda: (len(family) == expected, f"{len(family)} elements, expected {expected}"))

    def engine_agrees() -> tuple[bool, str]:
        computed = groebner_reduced(minors.binomials, order)
        same = {(g.plus, g.minus) for g in computed} == {(g.plus, g.minus) for g in family}
        return same, "engine reduced basis of the minors equals the family"

    _run(claims, name, "engine-equality", engine_agrees)
    return VerificationReport(_instance(params, i), tuple(claims))


def verify_minimal_closed_family(params: InstanceParams, i: int) -> VerificationReport:
    """thm-gb2: the structured closed-chain family is a minimal basis of the minors."""
    refusal = _needs_base(params, "thm-gb2", i)
    if refusal:
        return refusal
    claims: list[ClaimResult] = []
    name = "thm-gb2"
    order = build_order_i(generators(params), i)
    family = structured_closed_family(params, i)
    minors = minors_closed_chain(params)

    oriented_ok = _run(
        claims, name, "orientation",
        lambda: (
            all(order.compare(g.plus, g.minus) > 0 for g in family),
            "plus side of every element is its leading term",
        ),
    )
    if not oriented_ok:
        return VerificationReport(_instance(params, i), tuple(claims))
    _run(claims, name, "groebner",
         lambda: (is_groebner_basis(family, order), "all S-pairs reduce to zero"))
    _run(claims, name, "minimal",
         lambda: (is_minimal_basis(family), "no leading term divides another leading term"))
    expected = comb(params.n, 2)
    _run(claims, name, "cardinality",
         lambda: (len(family) == expected, f"{len(family)} elements, expected {expected}"))
    _run(
        claims, name, "coverage",
        lambda: (
            {g.canonical() for g in family} == set(minors.binomials),
            "family equals the minor set up to orientation",
        ),
    )
    return VerificationReport(_instance(params, i), tuple(claims))


def verify_projective_saturation(params: InstanceParams) -> VerificationReport:
    """cor-gb1: relation rows saturate to the open-chain minors; unique system."""
    name = "cor-gb1"
    refusal = _needs_base(params, name)
    if refusal:
        return refusal
    if params.n < 4:
        return _refusal(params, name, f"relation pattern needs n >= 4, got n={params.n}")
    claims: list[ClaimResult] = []
    grading = projective_grading(params)
    minors = minors_open_chain(params)
    order = build_order_i(generators(params), 1)

    def relation_matrix() -> tuple[bool, str]:
        rel = projective_relation_matrix(params)
        full = row_hnf(kernel_basis(grading.rows)) == row_hnf(rel.rows)
        return full, f"{len(rel.rows)} rows span the full kernel lattice"

    _run(claims, name, "relation-matrix", relation_matrix)

    def saturation() -> tuple[bool, str]:
        rel = projective_relation_matrix(params)
        sat = saturate_torus(list(rel.binomials()), grading)
        return (
            ideal_equal(sat, minors.binomials, order),
            "torus saturation of the relation ideal equals the minor ideal",
        )

    _run(claims, name, "saturation", saturation)
    expected = comb(params.n - 1, 2)
    _run(
        claims, name, "minimal-generation",
        lambda: (
            minimal_generator_count(minors.binomials, grading) == expected,
            f"fiber oracle counts {expected} minimal generators",
        ),
    )
    _run(
        claims, name, "uniqueness",
        lambda: (
            has_unique_minimal_system(minors.binomials, grading),
            "every contributing fiber is two isolated monomials",
        ),
    )
    _run(
        claims, name, "pruning-agreement",
        lambda: (
            len(prune_redundant_generators(minors.binomials, order)) == expected,
            "greedy Groebner pruning keeps the same count",
        ),
    )
    return VerificationReport(_instance(params), tuple(claims))


def verify_weight_toric(params: InstanceParams) -> VerificationReport:
    """cor-gb2: toric ideal equals the closed-chain minors; uniqueness frontier."""
    name = "cor-gb2"
    refusal = _needs_base(params, name)
    if refusal:
        return refusal
    g = gcd_of_generators(params)
    if g != 1:
        return _refusal(
            params, name,
            f"claim assumes coprime generators, got gcd {g}",
        )
    claims: list[ClaimResult] = []
    grading = scalar_grading(params)
    minors = minors_closed_chain(params)
    order = build_order_i(generators(params), 1)

    if params.n >= 3:
        def relation_matrix() -> tuple[bool, str]:
            rel = weight_relation_matrix(params)
            full = row_hnf(kernel_basis(grading.rows)) == row_hnf(rel.rows)
            return full, f"{len(rel.rows)} rows span the full kernel lattice"

        _run(claims, name, "relation-matrix", relation_matrix)

        def lattice_route() -> tuple[bool, str]:
            rel = weight_relation_matrix(params)
            sat = saturate_torus(list(rel.binomials()), grading)
            return (
                ideal_equal(sat, minors.binomials, order),
                "saturated relation ideal equals the minor ideal",
            )

        _run(claims, name, "lattice-route", lattice_route)

    def toric_route() -> tuple[bool, str]:
        tor = toric_ideal(grading, order)
        ref = groebner_reduced(minors.binomials, order)
        return tor.elements == ref.elements, "toric ideal equals the minor ideal"

    _run(claims, name, "toric-equals-minors", toric_route)
    expected = comb(params.n, 2)
    _run(
        claims, name, "minimal-generation",
        lambda: (
            minimal_generator_count(minors.binomials, grading) == expected,
            f"fiber oracle counts {expected} minimal generators",
        ),
    )
    if params.n > 3:
        def frontier() -> tuple[bool, str]:
            unique = has_unique_minimal_system(minors.binomials, grading)
            predicate = params.a < params.b - 1
            reduced_all = all(
                is_reduced_basis(structured_closed_family(params, i))
                for i in range(1, params.n + 1)
            )
            ok = unique == predicate == reduced_all
            return ok, (
                f"oracle={unique}, a<b-1={predicate}, all-i reduced={reduced_all}"
            )

        _run(claims, name, "uniqueness-equivalence", frontier)
    return VerificationReport(_instance(params), tuple(claims))


def verify_five_variable_growth(params: InstanceParams) -> VerificationReport:
    """example5: the 3-5-4-2 tie-break order needs 8 reduced elements, not 6."""
    name = "example5"
    if (params.n, params.b) != (5, 5):
        return _refusal(
            params, name,
            f"claim is pinned to n=5, b=5, got n={params.n}, b={params.b}",
        )
    if gcd(params.a, repunit(5, 5)) != 1:
        return _refusal(
            params, name,
            f"claim assumes gcd(a, {repunit(5, 5)}) == 1, got a={params.a}",
        )
    claims: list[ClaimResult] = []
    order = five_variable_order(generators(params))
    minors = minors_open_chain(params)

    def reduced_size() -> tuple[bool, str]:
        gb = groebner_reduced(minors.binomials, order)
        return len(gb.elements) == 8, f"reduced basis has {len(gb.elements)} elements"

    _run(claims, name, "reduced-size", reduced_size)

    def exceeds() -> tuple[bool, str]:
        sizes = {len(structured_open_family(params, i)) for i in range(1, 6)}
        return sizes == {6}, "every cheap-variable order needs only 6"

    _run(claims, name, "exceeds-structured", exceeds)
    return VerificationReport(_instance(params), tuple(claims))


def four_variable_generators(params: InstanceParams) -> tuple[Binomial, ...]:
    """The six printed generators of the n=4 toric ideal, orientation free."""
    if params.n != 4:
        raise ValueError(f"printed set is for n=4, got n={params.n}")
    a, b = params.a, params.b
    raw = (
        Binomial((0, b + 1, 0, 0), (b, 0, 1, 0)),
        Binomial((b, 0, 0, 1), (0, 1, b, 0)),
        Binomial((0, 0, b + 1, 0), (0, b, 0, 1)),
        Binomial((a + b + 1, 0, 0, 0), (0, 1, 0, b)),
        Binomial((a + 1, b, 0, 0), (0, 0, 1, b)),
        Binomial((0, 0, 0, b + 1), (a + 1, 0, b, 0)),
    )
    return tuple(g.canonical() for g in raw)


def verify_four_variable_generators(params: InstanceParams) -> VerificationReport:
    """example-n4-minors: at n=4 the six printed binomials minimally generate."""
    name = "example-n4-minors"
    refusal = _needs_base(params, name)
    if refusal:
        return refusal
    if params.n != 4:
        return _refusal(params, name, f"claim is pinned to n=4, got n={params.n}")
    g = gcd_of_generators(params)
    if g != 1:
        return _refusal(params, name, f"claim assumes coprime generators, got gcd {g}")
    claims: list[ClaimResult] = []
    grading = scalar_grading(params)
    minors = minors_closed_chain(params)
    printed = four_variable_generators(params)
    order = build_order_i(generators(params), 1)

    _run(
        claims, name, "printed-set",
        lambda: (
            set(printed) == set(minors.binomials),
            "printed binomials are exactly the closed-chain minors",
        ),
    )

    def toric_route() -> tuple[bool, str]:
        tor = toric_ideal(grading, order)
        ref = groebner_reduced(minors.binomials, order)
        return tor.elements == ref.elements, "printed set generates the toric ideal"

    _run(claims, name, "toric-equality", toric_route)
    _run(
        claims, name, "oracle-count",
        lambda: (
            minimal_generator_count(minors.binomials, grading) == 6,
            "fiber oracle counts 6 minimal generators",
        ),
    )
    _run(
        claims, name, "pruning",
        lambda: (
            {h.canonical() for h in prune_redundant_generators(minors.binomials, order)}
            == set(printed),
            "greedy pruning keeps all six",
        ),
    )
    if params.a < params.b - 1:
        _run(
            claims, name, "forced-system",
            lambda: (
                forced_generators(minors.binomials, grading) == tuple(sorted(
                    printed, key=lambda h: (h.plus, h.minus))),
                "fiber oracle forces exactly the printed six",
            ),
        )
    return VerificationReport(_instance(params), tuple(claims))


def verify_noncoprime_counts(params: InstanceParams) -> VerificationReport:
    """example-gcd3: gcd 3 instance where the toric ideal needs 4, minors need 6."""
    name = "example-gcd3"
    if (params.a, params.b, params.n) != (3, 2, 4):
        return _refusal(
            params, name,
            f"claim is pinned to a=3, b=2, n=4, got a={params.a}, b={params.b}, n={params.n}",
        )
    claims: list[ClaimResult] = []
    grading = scalar_grading(params)
    minors = minors_closed_chain(params)
    order = build_order_i(generators(params), 1)

    _run(
        claims, name, "generators",
        lambda: (
            generators(params) == (15, 18, 24, 36) and gcd_of_generators(params) == 3,
            f"generators {generators(params)} with gcd {gcd_of_generators(params)}",
        ),
    )
    tor = toric_ideal(grading, order)
    _run(
        claims, name, "toric-minimal-count",
        lambda: (
            minimal_generator_count(list(tor.elements), grading) == 4,
            "toric ideal needs 4 minimal generators",
        ),
    )
    _run(
        claims, name, "minor-minimal-count",
        lambda: (
            minimal_generator_count(minors.binomials, grading) == 6,
            "minor ideal needs 6 minimal generators",
        ),
    )
    _run(
        claims, name, "ideals-differ",
        lambda: (
            not ideal_equal(list(tor.elements), minors.binomials, order),
            "toric ideal is not the minor ideal",
        ),
    )
    return VerificationReport(_instance(params), tuple(claims))


def verify_nonminor_lead(params: InstanceParams) -> VerificationReport:
    """example-a3b3: a reduced-basis element that is not a minor at a=3, b=3, n=4."""
    name = "example-a3b3"
    if (params.a, params.b, params.n) != (3, 3, 4):
        return _refusal(
            params, name,
            f"claim is pinned to a=3, b=3, n=4, got a={params.a}, b={params.b}, n={params.n}",
        )
    claims: list[ClaimResult] = []
    order = build_order_i(generators(params), 2)
    minors = minors_closed_chain(params)
    target = Binomial((0, 0, 0, 4), (1, 4, 2, 0))

    def in_reduced() -> tuple[bool, str]:
        gb = groebner_reduced(minors.binomials, order)
        return target in gb.elements, "x4^4 - x1*x2^4*x3^2 appears in the reduced basis"

    _run(claims, name, "reduced-member", in_reduced)
    _run(
        claims, name, "not-a-minor",
        lambda: (
            target.canonical() not in set(minors.binomials),
            "the new element is not a 2x2 minor",
        ),
    )

    def minimal_not_reduced() -> tuple[bool, str]:
        fam = structured_closed_family(params, 2)
        return (
            is_minimal_basis(fam) and not is_reduced_basis(fam),
            "structured family is minimal but not reduced here",
        )

    _run(claims, name, "minimal-not-reduced", minimal_not_reduced)
    return VerificationReport(_instance(params), tuple(claims))


@dataclass(frozen=True)
class ClaimSpec:
    runner: Callable
    per_index: bool = False
    defaults: tuple[tuple[str, int], ...] = ()


CLAIMS: dict[str, ClaimSpec] = {
    "lemma2": ClaimSpec(verify_homogeneity_identity),
    "lemma3": ClaimSpec(verify_minor_side_classifier),
    "prop-gb1": ClaimSpec(verify_reduced_open_family, per_index=True),
    "thm-gb2": ClaimSpec(verify_minimal_closed_family, per_index=True),
    "cor-gb1": ClaimSpec(verify_projective_saturation),
    "cor-gb2": ClaimSpec(verify_weight_toric),
    "example5": ClaimSpec(verify_five_variable_growth, defaults=(("b", 5), ("n", 5))),
    "example-n4-minors": ClaimSpec(
        verify_four_variable_generators, defaults=(("a", 1), ("b", 3), ("n", 4))
    ),
    "example-gcd3": ClaimSpec(
        verify_noncoprime_counts, defaults=(("a", 3), ("b", 2), ("n", 4))
    ),
    "example-a3b3": ClaimSpec(
        verify_nonminor_lead, defaults=(("a", 3), ("b", 3), ("n", 4))
    ),
}


def run_claim(
    name: str,
    params: InstanceParams,
    i: int | None = None,
    all_indices: bool = False,
) -> list[VerificationReport]:
    """Run one named claim; per-index claims fan out over i when asked."""
    try:
        spec = CLAIMS[name]
    except KeyError:
        raise ValueError(f"unknown claim {name!r}; choose from {sorted(CLAIMS)}") from None
    if not spec.per_index:
        if i is not None:
            raise ValueError(f"claim {name!r} does not take an order index")
        return [spec.runner(params)]
    if i is not None and not all_indices:
        if not 1 <= i <= params.n:
            raise ValueError(f"order index must be in 1..{params.n}, got {i}")
        return [spec.runner(params, i)]
    return [spec.runner(params, idx) for idx in range(1, params.n + 1)]
