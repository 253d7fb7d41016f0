"""Buchberger engine and saturation for pure-difference binomial ideals.

Everything stays binomial: S-polynomials of binomials are binomials, and
dividing a binomial by oriented binomials is monomial rewriting applied to
its two sides separately.  The pair queue is ordered by the weighted degree
of the pair lcm, pairs with coprime leading terms or with a chain of
smaller handled pairs are discarded, and each surviving nonzero remainder
enlarges the basis, so the leading-term ideal grows strictly and the loop
terminates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .binomials import (
    Binomial,
    Grading,
    coprime,
    divides,
    format_binomial,
    format_monomial,
    lcm,
    oriented,
    reduce_binomial,
    reduce_monomial,
    s_pair,
)
from .orders import MatrixOrder, build_order_i

TraceFn = Callable[[str], None]

_SATURATION_CAP = 64


@dataclass(frozen=True)
class GroebnerBasis:
    """Oriented basis elements together with the order that oriented them."""

    elements: tuple[Binomial, ...]
    order: MatrixOrder
    minimal: bool = False
    reduced: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_terms(self) -> tuple:
        return tuple(g.plus for g in self.elements)


def sort_canonical(elements: Iterable[Binomial], order: MatrixOrder) -> tuple[Binomial, ...]:
    """Deterministic listing: ascending leading term, then trailing term."""
    key = order.sort_key()

    def pair_key(g: Binomial):
        return (key(g.plus), key(g.minus))

    return tuple(sorted(elements, key=pair_key))


def buchberger(
    gens: Iterable[Binomial],
    order: MatrixOrder,
    trace: TraceFn | None = None,
) -> GroebnerBasis:
    """Groebner basis of the binomial ideal spanned by gens under order."""
    basis: list[Binomial] = []
    seen = set()
    for g in gens:
        og = oriented(g, order)
        if og.is_zero():
            continue
        if (og.plus, og.minus) not in seen:
            seen.add((og.plus, og.minus))
            basis.append(og)

    pairs: list[tuple[int, tuple, int, int]] = []
    leads: list[tuple[int, ...]] = [g.plus for g in basis]

    def push_pairs(j: int) -> None:
        lt_j = leads[j]
        for i in range(j):
            big = lcm(leads[i], lt_j)
            heapq.heappush(pairs, (order.weight(big), big, i, j))

    for j in range(len(basis)):
        push_pairs(j)

    def chain_skip(big: tuple, i: int, j: int) -> bool:
        # Buchberger's second criterion.  Pairs leave the heap in increasing
        # lcm weight, and a third lead dividing the lcm makes both triangle
        # lcms divisors of it; requiring them proper forces strictly smaller
        # weights, so those two pairs are already handled and S(i,j) is
        # superfluous.  Divisibility and the two lcm tests are inlined by
        # coordinate: this scan dominates the engine's run time.
        lt_i = leads[i]
        lt_j = leads[j]
        nv = len(big)
        for k in range(len(leads)):
            if k == i or k == j:
                continue
            h = leads[k]
            fits = True
            for t in range(nv):
                if h[t] > big[t]:
                    fits = False
                    break
            if not fits:
                continue
            proper_i = False
            for t in range(nv):
                x = lt_i[t]
                y = h[t]
                if (x if x >= y else y) != big[t]:
                    proper_i = True
                    break
            if not proper_i:
                continue
            for t in range(nv):
                x = lt_j[t]
                y = h[t]
                if (x if x >= y else y) != big[t]:
                    return True
        return False

    while pairs:
        _, big, i, j = heapq.heappop(pairs)
        f, g = basis[i], basis[j]
        if coprime(f.plus, g.plus):
            if trace:
                trace(f"pair ({i},{j}) lcm={format_monomial(big)} skipped: coprime leads")
            continue
        if chain_skip(big, i, j):
            if trace:
                trace(f"pair ({i},{j}) lcm={format_monomial(big)} skipped: chain criterion")
            continue
        r = reduce_binomial(s_pair(f, g, order), basis, order)
        if trace:
            outcome = "-> 0" if r.is_zero() else f"-> {format_binomial(r)}"
            trace(f"pair ({i},{j}) lcm={format_monomial(big)} {outcome}")
        if not r.is_zero():
            basis.append(r)
            leads.append(r.plus)
            push_pairs(len(basis) - 1)

    return GroebnerBasis(sort_canonical(basis, order), order)


def is_groebner_basis(
    elements: Sequence[Binomial],
    order: MatrixOrder,
    trace: TraceFn | None = None,
) -> bool:
    """Deterministic S-pair test: every S-binomial must reduce to zero.

    Sound and complete for binomial systems: monomial rewriting is
    terminating here, so confluence is equivalent to all critical pairs
    joining, and the normal form of each side is unique to compute.
    """
    elems = [g for g in elements if not g.is_zero()]
    for g in elems:
        if order.compare(g.plus, g.minus) <= 0:
            raise ValueError(f"element not oriented under the order: {format_binomial(g)}")
    for j in range(len(elems)):
        for i in range(j):
            f, g = elems[i], elems[j]
            if coprime(f.plus, g.plus):
                continue
            r = reduce_binomial(s_pair(f, g, order), elems, order)
            if not r.is_zero():
                if trace:
                    trace(f"pair ({i},{j}) leaves remainder {format_binomial(r)}")
                return False
    return True


def is_minimal_basis(elements: Sequence[Binomial]) -> bool:
    """No leading term divides another element's leading term."""
    leads = [g.plus for g in elements if not g.is_zero()]
    for i, p in enumerate(leads):
        for j, q in enumerate(leads):
            if i != j and divides(p, q):
                return False
    return True


def is_reduced_basis(elements: Sequence[Binomial]) -> bool:
    """No leading term divides any monomial of any other element."""
    elems = [g for g in elements if not g.is_zero()]
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            if i == j:
                continue
            if divides(g.plus, h.plus) or divides(g.plus, h.minus):
                return False
    return True


def minimalize(gb: GroebnerBasis) -> GroebnerBasis:
    """Drop elements whose leading term is divisible by another leading term."""
    ordered = sort_canonical(gb.elements, gb.order)
    kept: list[Binomial] = []
    for g in ordered:
        if g.is_zero():
            continue
        if any(divides(h.plus, g.plus) for h in kept):
            continue
        kept.append(g)
    return GroebnerBasis(tuple(kept), gb.order, minimal=True)


def reduce_gb(gb: GroebnerBasis) -> GroebnerBasis:
    """Reduced basis: minimal, with every trailing term in normal form."""
    m = minimalize(gb)
    out = []
    for g in m.elements:
        q = reduce_monomial(g.minus, m.elements)
        out.append(Binomial(g.plus, q))
    return GroebnerBasis(sort_canonical(out, gb.order), gb.order, minimal=True, reduced=True)


def groebner_reduced(gens: Iterable[Binomial], order: MatrixOrder,
                     trace: TraceFn | None = None) -> GroebnerBasis:
    return reduce_gb(buchberger(gens, order, trace))


def ideal_member(f: Binomial, gb: GroebnerBasis) -> bool:
    """Membership through normal form; gb must be a Groebner basis."""
    return reduce_binomial(f, gb.elements, gb.order).is_zero()


def ideal_equal(
    gens1: Iterable[Binomial],
    gens2: Iterable[Binomial],
    order: MatrixOrder,
    trace: TraceFn | None = None,
) -> bool:
    """Compare two binomial ideals through their reduced bases under order."""
    r1 = groebner_reduced(gens1, order, trace)
    r2 = groebner_reduced(gens2, order, trace)
    return r1.elements == r2.elements


def _strip_variable(g: Binomial, idx: int) -> Binomial:
    c = min(g.plus[idx], g.minus[idx])
    if c == 0:
        return g
    plus = tuple(e - c if k == idx else e for k, e in enumerate(g.plus))
    minus = tuple(e - c if k == idx else e for k, e in enumerate(g.minus))
    return Binomial(plus, minus)


def _saturate_variable(
    gens: Iterable[Binomial],
    i: int,
    grading: Grading,
    trace: TraceFn | None,
) -> tuple[list[Binomial], bool]:
    order = build_order_i(grading.positive_row(), i)
    current = [g for g in gens if not g.is_zero()]
    stripped_any = False
    for _ in range(_SATURATION_CAP):
        gb = groebner_reduced(current, order, trace)
        nxt = []
        changed = False
        for g in gb.elements:
            s = _strip_variable(g, i - 1)
            if s is not g:
                changed = True
            nxt.append(s)
        if not changed:
            return list(gb.elements), stripped_any
        # stripping keeps orientation: both sides moved by the same monomial
        stripped_any = True
        current = nxt
    raise RuntimeError(f"saturation by variable {i} did not stabilize")


def saturate_variable(
    gens: Iterable[Binomial],
    i: int,
    grading: Grading,
    trace: TraceFn | None = None,
) -> list[Binomial]:
    """Generators of I : x_i^infinity for the graded binomial ideal I.

    Uses the reduced basis under the weighted reverse-lex order with x_i
    cheapest: for ideals homogeneous under a positive weight row, x_i divides
    a whole element whenever it divides the leading term, so stripping the
    common x_i power from every element lands exactly on the saturation.
    """
    if not 1 <= i <= grading.nvars:
        raise ValueError(f"variable index must be in 1..{grading.nvars}, got {i}")
    sat, _ = _saturate_variable(gens, i, grading, trace)
    return sat


def saturate_torus(
    gens: Iterable[Binomial],
    grading: Grading,
    trace: TraceFn | None = None,
) -> list[Binomial]:
    """Saturation of the ideal by the product of all variables.

    Rounds of single-variable saturations until a full round strips nothing;
    the result generates I : (x_1 * ... * x_n)^infinity.
    """
    current = [g for g in gens if not g.is_zero()]
    for _ in range(_SATURATION_CAP):
        any_strip = False
        for i in range(1, grading.nvars + 1):
            current, stripped = _saturate_variable(current, i, grading, trace)
            any_strip = any_strip or stripped
        if not any_strip:
            return current
    raise RuntimeError("torus saturation did not stabilize")
