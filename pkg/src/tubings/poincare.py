"""Poincaré polynomials of tubing complexes, by two independent routes.

The direct route sums, over every even collection C, the suspended
reduced Betti polynomial of the odd tube subcomplex for C.  The structural
route assigns each graph H an *a-polynomial* (the sum over its admissible
collections of the plain reduced Betti polynomials) and recovers the
Poincaré polynomial of G as ``1 + t * sum(a_H)`` over all reductions H of
G.  ``cross_check`` exercises both routes plus the identities connecting them
and reports any counterexample found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import FaceBudget
from .graphs import Collection, enumerate_reductions, reduced_graph, touched_subgraph
from .parity import (
    _EvenFamily,
    admissible_collections,
    components_all_even,
    confined_odd_complex,
    inflation_matches,
    is_admissible,
    odd_tube_complex,
    saturated_odd_complex,
)
from .tubes import TubeSystem


class IntPolynomial:
    """Integer polynomial in one variable, coefficients stored ascending."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def coefficients(self):
        return self._coeffs

    def to_list(self):
        return list(self._coeffs)

    def degree(self):
        return len(self._coeffs) - 1

    def coefficient(self, k):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def is_zero(self):
        return not self._coeffs

    def shift(self, k):
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self._coeffs)

    def __add__(self, other):
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(v * other for v in self._coeffs)
        out = [0] * (len(self._coeffs) + len(other._coeffs))
        for i, v in enumerate(self._coeffs):
            if v:
                for j, w in enumerate(other._coeffs):
                    out[i + j] += v * w
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, v in enumerate(self._coeffs):
            if v == 0:
                continue
            if i == 0:
                parts.append(str(v))
            else:
                power = "t" if i == 1 else f"t^{i}"
                parts.append(power if v == 1 else f"{v}{power}")
        return " + ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({list(self._coeffs)})"


def from_betti_suspended(betti):
    """Sum of ``b_i * t**(i+1)`` over all dimensions, -1 included."""
    return IntPolynomial(betti.to_list())


def from_betti_tilde(betti):
    """Sum of ``b_i * t**i`` over dimensions 0 and up."""
    return IntPolynomial(betti.to_list()[1:])


_A_CACHE = {}


def clear_caches():
    _A_CACHE.clear()


def a_polynomial(graph, budget=None, designation=None):
    """Sum over the graph's admissible collections of the reduced Betti
    polynomials of their odd tube subcomplexes."""
    cacheable = budget is None and designation is None
    if cacheable:
        hit = _A_CACHE.get(graph)
        if hit is not None:
            return hit
    system = TubeSystem(graph, budget)
    total = IntPolynomial.zero()
    for c in admissible_collections(graph, designation):
        complex_ = odd_tube_complex(graph, c, budget=budget, system=system)
        total = total + from_betti_tilde(complex_.betti_reduced(budget))
    if cacheable:
        _A_CACHE[graph] = total
    return total


def poincare_reduced(graph, budget=None, designation=None):
    """Poincaré polynomial assembled from a-polynomials of all reductions."""
    total = IntPolynomial.zero()
    for h in enumerate_reductions(graph):
        total = total + a_polynomial(h, budget, designation)
    return IntPolynomial.one() + total.shift(1)


def poincare_brute(graph, budget=None, designation=None, system=None):
    """Poincaré polynomial summed over all even collections directly."""
    if system is None:
        system = TubeSystem(graph, budget)
    family = _EvenFamily(graph, designation)
    total = IntPolynomial.zero()
    for index in range(family.count()):
        c = family.collection_at(index)
        complex_ = odd_tube_complex(graph, c, budget=budget, system=system)
        total = total + from_betti_suspended(complex_.betti_reduced(budget))
    return total


ALL_CHECKS = (
    "routes",
    "chain",
    "zero",
    "join",
    "even-star",
    "inflation",
    "recovery",
)


@dataclass(frozen=True)
class CheckFailure:
    check: str
    collection: object
    detail: str


@dataclass(frozen=True)
class CrossCheckReport:
    ok: bool
    sampled: bool
    collections_checked: int
    poincare_reduced: object
    poincare_brute: object
    failures: tuple


def _component_collections(graph, collection):
    """Split a collection along the components of its touched subgraph."""
    sub = touched_subgraph(graph, collection)
    parts = []
    for comp in sub.component_nodesets():
        labels = set()
        for b in sub.bundles:
            if b.u in comp:
                labels |= set(b.labels)
        parts.append(
            Collection(collection.nodes & comp, collection.labels & frozenset(labels))
        )
    return parts


def cross_check(
    graph,
    budget=None,
    seed=0,
    max_collections=None,
    designation=None,
    checks=None,
):
    """Run consistency checks over the even collections of a graph.

    With ``max_collections`` fewer than the even-collection count, a seeded
    sample is checked instead and the route comparison (which needs the
    full sum) is skipped.  Returns a :class:`CrossCheckReport` whose
    ``failures`` hold the first offending collection per failed check.
    """
    chosen = set(ALL_CHECKS if checks is None else checks)
    bad = chosen - set(ALL_CHECKS)
    if bad:
        raise ValueError(f"unknown checks: {sorted(bad)}")
    system = TubeSystem(graph, budget)
    family = _EvenFamily(graph, designation)
    total = family.count()
    sampled = max_collections is not None and max_collections < total
    if sampled:
        rng = random.Random(seed)
        indices = sorted(rng.sample(range(total), max_collections))
    else:
        indices = range(total)
    failures = []
    seen_failed = set()

    def fail(check, collection, detail):
        if check not in seen_failed:
            seen_failed.add(check)
            failures.append(CheckFailure(check, collection, detail))

    brute_total = IntPolynomial.zero()
    count = 0
    for index in indices:
        c = family.collection_at(index)
        count += 1
        odd = odd_tube_complex(graph, c, budget=budget, system=system)
        bv_odd = odd.betti_reduced(budget)
        if not sampled and "routes" in chosen:
            brute_total = brute_total + from_betti_suspended(bv_odd)
        saturated = None
        bv_saturated = None
        if chosen & {"chain", "join"}:
            saturated = saturated_odd_complex(graph, c, budget=budget, system=system)
            bv_saturated = saturated.betti_reduced(budget)
        if "chain" in chosen:
            confined = confined_odd_complex(graph, c, budget=budget, system=system)
            bv_confined = confined.betti_reduced(budget)
            if not (bv_odd == bv_confined == bv_saturated):
                fail(
                    "chain",
                    c,
                    f"betti {bv_odd!r} / {bv_confined!r} / {bv_saturated!r}",
                )
        evenstar = components_all_even(graph, c)
        if "zero" in chosen and not evenstar:
            bv = bv_saturated
            if bv is None:
                bv = saturated_odd_complex(
                    graph, c, budget=budget, system=system
                ).betti_reduced(budget)
            if not bv.is_zero():
                fail("zero", c, f"odd component share but betti {bv!r}")
        if "even-star" in chosen:
            admissible = is_admissible(reduced_graph(graph, c), c)
            if evenstar != admissible:
                fail(
                    "even-star",
                    c,
                    f"component evenness {evenstar} vs admissibility {admissible}",
                )
        if "join" in chosen:
            parts = _component_collections(graph, c)
            pieces = [
                saturated_odd_complex(graph, p, budget=budget, system=system)
                for p in parts
            ]
            whole_vertices = set(saturated.vertices)
            part_vertices = set()
            for p in pieces:
                part_vertices |= set(p.vertices)
            if whole_vertices != part_vertices:
                fail("join", c, "vertex sets differ between whole and parts")
            else:
                prod = IntPolynomial.one()
                for p in pieces:
                    prod = prod * from_betti_suspended(p.betti_reduced(budget))
                mine = from_betti_suspended(bv_saturated)
                if prod != mine:
                    fail("join", c, f"suspended {mine} vs product {prod}")
        if "inflation" in chosen:
            if not inflation_matches(graph, c, budget=budget, system=system):
                fail("inflation", c, "reduced-graph odd complex does not inflate")

    poly_reduced = None
    poly_brute = None
    if not sampled and "routes" in chosen:
        poly_brute = brute_total
        poly_reduced = poincare_reduced(graph, budget, designation)
        if poly_reduced != poly_brute:
            fail("routes", None, f"reduced {poly_reduced} vs brute {poly_brute}")

    if "recovery" in chosen:
        for h in enumerate_reductions(graph):
            for c in admissible_collections(h, None):
                if reduced_graph(graph, c) != h:
                    fail("recovery", c, "admissible collection does not recover graph")
                    break

    return CrossCheckReport(
        ok=not failures,
        sampled=sampled,
        collections_checked=count,
        poincare_reduced=poly_reduced,
        poincare_brute=poly_brute,
        failures=tuple(failures),
    )
