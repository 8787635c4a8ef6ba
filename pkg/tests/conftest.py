"""Shared oracles and the acceptance summary hook."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np
import pytest

from ncnn.roots import GroupFamily, simple_roots

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


# ---------------------------------------------------------------- independent oracles


def _reflect(v, a):
    va = sum(x * y for x, y in zip(v, a))
    aa = sum(x * x for x in a)
    return tuple(x - (2 * va * y) // aa for x, y in zip(v, a))


def root_closure(g: GroupFamily) -> frozenset:
    """Positive roots as the orbit of the simple roots under the simple reflections."""
    simple = simple_roots(g)
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for s in simple:
                w = _reflect(v, s)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(r for r in roots if [x for x in r if x][-1] > 0)


def perm_matrix(images) -> np.ndarray:
    n = len(images)
    m = np.zeros((n, n), dtype=int)
    for i, y in enumerate(images):
        m[abs(y) - 1, i] = 1 if y > 0 else -1
    return m


def rank_length(images) -> int:
    """Reflection length as the rank of ``w - 1``."""
    n = len(images)
    return int(np.linalg.matrix_rank(perm_matrix(images) - np.eye(n, dtype=int)))


def compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def candidate_bundles(g: GroupFamily, mode: str):
    """A superset of the valid statistic bundles, including many invalid ones."""
    from ncnn.statistics import StatisticBundle

    n = g.n
    top = n + 1
    for s_mu in range(0, top):
        for mu in compositions(s_mu):
            for a in combinations(range(1, n + 1), len(mu)):
                nu_totals = [0] if g.family == "A" else range(0, top - s_mu)
                for s_nu in nu_totals:
                    for nu in compositions(s_nu):
                        if g.family != "D":
                            yield StatisticBundle(a, mu, nu)
                            continue
                        for c in [(), ("+",), ("-",), ("pm",), ("+", "-"), ("-", "+"),
                                  ("+", "+"), ("pm", "-")]:
                            if mode == "nn":
                                tails = {nu[len(nu) - len(c):] if len(c) <= len(nu) else ()}
                                tails.add(tuple(x + 1 for x in nu[-len(c):]) if c and nu else ())
                                xis = tails
                            else:
                                xis = product(range(1, n), repeat=len(c))
                            for xi in xis:
                                yield StatisticBundle(a, mu, nu, c, tuple(xi))


@pytest.fixture
def c8_example():
    """The C8 antichain, the matching element, and the printed data."""
    from ncnn.groups import product_of_reflections
    from ncnn.roots import root_from_endpoints as r

    g = GroupFamily("C", 8)
    n = 8
    x = [r(n, -1, 2), r(n, 1, 5), r(n, 2, 6), r(n, 6, 8), r(n, 3, 7)]
    y_factors = [r(n, 6, 7), r(n, 7, 8), r(n, -1, 8), r(n, 1, 2), r(n, 3, 5)]
    return {
        "g": g,
        "x": frozenset(x),
        "y": product_of_reflections(g, y_factors),
        "fix_x": "v1=v5=-v2=-v6=-v8 and v3=v7",
        "fix_y": "v1=v2=-v6=-v7=-v8 and v3=v5",
        "omega_x": ((-1, 1, 0, 0, -1, 1, 0, 1), (0, 0, 1, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
        "omega_y": ((-1, -1, 0, 0, 0, 1, 1, 1), (0, 0, 1, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
        "table": ((3, 2, 0, 1), (2, 0, 6, 3), (1, 0, 5, 2)),
    }
