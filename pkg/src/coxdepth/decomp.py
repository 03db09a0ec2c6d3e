"""Transposition factorizations built by sorting procedures.

Two procedures drive a window to the identity by transpositions and
read a factorization off the steps.

Straight selection sort repeatedly swaps the largest out-of-place value
into its home position. Its total transposition cost is the sorting
index, an upper bound for depth; its step count always equals the
reflection length.

The shallow decomposition peels the largest unfinished value m off by
comparing a = w(m) with j = w^-1(m): when a < j it swaps positions j
and m and records a right factor t_jm, otherwise it swaps values a and
m and records a left factor t_am. The factors assemble into blocks u
and v with w = u * v, the factor count equals reflection_length(w), and
the total cost sum(j - i) equals depth(w), so the factorization is
optimal in both senses at once.
"""

from dataclasses import dataclass

from .perm_core import apply_transposition_right, compose, identity
from .stats import depth, reflection_length


@dataclass(frozen=True)
class Factorization:
    """A product of transpositions equal to some window.

    factors holds (i, j) pairs in product order, side_tags marks each
    factor as part of the left block "u" or the right block "v", and
    depth_weights stores each factor's cost j - i.
    """

    factors: tuple
    side_tags: tuple
    depth_weights: tuple

    @property
    def total_weight(self):
        return sum(self.depth_weights)

    @property
    def u_factors(self):
        return tuple(f for f, s in zip(self.factors, self.side_tags) if s == "u")

    @property
    def v_factors(self):
        return tuple(f for f, s in zip(self.factors, self.side_tags) if s == "v")


@dataclass(frozen=True)
class TraceStep:
    window: tuple  # state before the step
    transposition: tuple  # the (i, j) applied
    side: str  # "L" swaps the values i and j, "R" swaps the positions


@dataclass(frozen=True)
class SortTrace:
    steps: tuple
    final: tuple  # always the identity window


def _selection_steps(w):
    steps = []
    cur = w
    for m in range(len(w), 1, -1):
        if cur[m - 1] == m:
            continue
        i = cur.index(m) + 1
        steps.append((cur, (i, m)))
        cur = apply_transposition_right(cur, i, m)
    return steps, cur


def selection_sort_trace(w):
    """The steps of straight selection sort on w.

    Every step swaps the largest out-of-place value into its home
    position, acting on positions (right multiplication).
    """
    steps, final = _selection_steps(w)
    return SortTrace(tuple(TraceStep(win, t, "R") for win, t in steps), final)


def sorting_index(w):
    """Total cost sum(j - i) of the selection sort transpositions."""
    steps, _ = _selection_steps(w)
    return sum(j - i for _, (i, j) in steps)


def selection_factorization(w):
    """w as the product of the selection sort transpositions.

    The sort computes w * t_1 * ... * t_k = e, so w = t_k * ... * t_1:
    the factors are the steps in reverse. All of them are tagged "u".
    """
    steps, _ = _selection_steps(w)
    factors = tuple(t for _, t in reversed(steps))
    return Factorization(factors, ("u",) * len(factors), tuple(j - i for i, j in factors))


def _shallow_steps(w):
    steps = []
    cur = w
    for m in range(len(w), 1, -1):
        if cur[m - 1] == m:
            continue
        a = cur[m - 1]
        j = cur.index(m) + 1
        # sides agree on the window update: swapping positions j and m
        # is the same as swapping the values a and m here
        if a < j:
            side, factor = "R", (j, m)
        else:
            side, factor = "L", (a, m)
        nxt = apply_transposition_right(cur, j, m)
        steps.append((side, factor, cur))
        cur = nxt
    return steps, cur


def shallow_decomp(w):
    """The shallow factorization of w: blocks u and v with w = u * v.

    Left factors collect in processing order and right factors in
    reverse, so factors reads in product order. The factor count equals
    reflection_length(w) and the total weight equals depth(w).
    """
    steps, _ = _shallow_steps(w)
    u = [f for side, f, _ in steps if side == "L"]
    v = [f for side, f, _ in steps if side == "R"]
    v.reverse()
    factors = tuple(u + v)
    tags = ("u",) * len(u) + ("v",) * len(v)
    return Factorization(factors, tags, tuple(j - i for i, j in factors))


def shallow_trace(w):
    """The shallow decomposition as a step-by-step trace."""
    steps, final = _shallow_steps(w)
    return SortTrace(tuple(TraceStep(win, f, side) for side, f, win in steps), final)


@dataclass(frozen=True)
class VerifyReport:
    product_ok: bool
    count_ok: bool
    weight_ok: bool

    @property
    def ok(self):
        return self.product_ok and self.count_ok and self.weight_ok


def verify_factorization(w, factorization):
    """Check a factorization's three certificates against w.

    product_ok: the factors multiply to w in the listed order.
    count_ok: the factor count equals reflection_length(w).
    weight_ok: every stored weight is the cost j - i of its factor and
    the weights sum to depth(w).
    """
    n = len(w)
    prod = identity(n)
    for i, j in factorization.factors:
        prod = compose(prod, apply_transposition_right(identity(n), i, j))
    count_ok = len(factorization.factors) == reflection_length(w)
    weights = factorization.depth_weights
    weight_ok = (
        len(weights) == len(factorization.factors)
        and all(wt == j - i for wt, (i, j) in zip(weights, factorization.factors))
        and sum(weights) == depth(w)
    )
    return VerifyReport(prod == w, count_ok, weight_ok)
