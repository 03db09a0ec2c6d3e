"""Exact distribution tables over whole groups.

Everything here is exhaustive: depth tables fold the statistic over
every element of a group, joint tables fold a bivariate statistic over
a full symmetric group, and class counts filter all of S_n while
asserting the closed forms they are known to satisfy.
"""

import json
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import comb

from .groups import build_backend, dihedral_depth_formula
from .oracle import depth_oracle
from .patterns import is_boolean, is_fc, is_free
from .stats import depth, descents, drop, excedances, length

# Counts of windows in S_n by depth (OEIS entry A062869), used by the
# verification suites as an independent reference.
KNOWN_DEPTH_ROWS_A = {
    1: (1,),
    2: (1, 1),
    3: (1, 2, 3),
    4: (1, 3, 7, 9, 4),
    5: (1, 4, 12, 24, 35, 24, 20),
    6: (1, 5, 18, 46, 93, 137, 148, 136, 100, 36),
    7: (1, 6, 25, 76, 187, 366, 591, 744, 884, 832, 716, 360, 252),
    8: (1, 7, 33, 115, 327, 765, 1523, 2553, 3696, 4852, 5708, 5892,
        5452, 4212, 2844, 1764, 576),
}


@dataclass(frozen=True)
class DepthTable:
    """counts[k] = number of elements with the statistic equal to k."""

    kind: str
    n: int
    stat: str
    counts: tuple

    def total(self):
        return sum(self.counts)


@dataclass(frozen=True)
class JointTable:
    """Coefficients of a bivariate polynomial q^pair[0] * t^pair[1].

    coeffs is a sorted tuple of ((q_exp, t_exp), coefficient) pairs, so
    two tables are equal exactly when their polynomials are.
    """

    n: int
    pair: tuple
    coeffs: tuple

    def total(self):
        return sum(c for _, c in self.coeffs)


def depth_distribution(kind, n):
    """Counts of group elements by depth.

    kind "A" streams windows and the excedance-sum formula (n up to 8),
    kind "B" runs the weighted shortest-path oracle over signed windows
    (n up to 5), kind "I2" applies the dihedral closed form (m = n up
    to 12).
    """
    if kind == "A":
        if not 1 <= n <= 8:
            raise ValueError("kind A depth tables support n in 1..8, got %d" % n)
        counts = Counter(depth(w) for w in permutations(range(1, n + 1)))
    elif kind == "B":
        backend = build_backend("B", n)
        counts = Counter(depth_oracle(backend))
    elif kind == "I2":
        backend = build_backend("I2", n)
        counts = Counter(dihedral_depth_formula(backend, x) for x in backend.elements)
    else:
        raise ValueError("unknown group kind %r (expected A, B or I2)" % (kind,))
    table = tuple(counts.get(k, 0) for k in range(max(counts) + 1))
    return DepthTable(kind, n, "depth", table)


def joint_distribution(n, pair):
    """The bivariate table q^first * t^second folded over all of S_n.

    pair is ("drop", "des") or ("dep", "exc").
    """
    if not 1 <= n <= 8:
        raise ValueError("joint tables support n in 1..8, got %d" % n)
    pair = tuple(pair)
    if pair == ("drop", "des"):
        def key(w):
            return (drop(w), len(descents(w)))
    elif pair == ("dep", "exc"):
        def key(w):
            return (depth(w), len(excedances(w)))
    else:
        raise ValueError("pair must be ('drop', 'des') or ('dep', 'exc'), got %r" % (pair,))
    counts = Counter(key(w) for w in permutations(range(1, n + 1)))
    return JointTable(n, pair, tuple(sorted(counts.items())))


def _fibonacci(i):
    # convention F_1 = F_2 = 1
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def _choose(a, b):
    # combinatorial convention: zero outside 0 <= b <= a
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def count_class(n, cls, k=None):
    """Count a class of windows in S_n exhaustively, checking closed forms.

    cls is one of "fc", "boolean", "free", "depth_eq" or
    "boolean_by_length"; the last two take the extra parameter k. Known
    closed forms (Catalan for fc, Fibonacci F_{2n-1} for boolean,
    F_{n+1} for free, (n+3)(n-2)/2 for depth_eq(2) with n >= 3, a
    binomial double sum for boolean_by_length) are evaluated alongside
    the count and any disagreement raises.
    """
    if not 1 <= n <= 8:
        raise ValueError("class counts support n in 1..8, got %d" % n)
    windows = permutations(range(1, n + 1))
    expected = None
    if cls == "fc":
        count = sum(1 for w in windows if is_fc(w))
        expected = comb(2 * n, n) // (n + 1)
    elif cls == "boolean":
        count = sum(1 for w in windows if is_boolean(w))
        expected = _fibonacci(2 * n - 1)
    elif cls == "free":
        count = sum(1 for w in windows if is_free(w))
        expected = _fibonacci(n + 1)
    elif cls == "depth_eq":
        if k is None:
            raise ValueError("class depth_eq needs the parameter k")
        count = sum(1 for w in windows if depth(w) == k)
        if k == 2 and n >= 3:
            expected = (n + 3) * (n - 2) // 2
    elif cls == "boolean_by_length":
        if k is None:
            raise ValueError("class boolean_by_length needs the parameter k")
        count = sum(1 for w in windows if length(w) == k and is_boolean(w))
        if k >= 1:
            expected = sum(_choose(n - i, k + 1 - i) * _choose(k - 1, i - 1) for i in range(1, k + 1))
    else:
        raise ValueError("unknown class %r" % (cls,))
    if expected is not None and count != expected:
        raise AssertionError(
            "closed form disagrees for %s (n=%d%s): counted %d, formula %d"
            % (cls, n, "" if k is None else ", k=%d" % k, count, expected)
        )
    return count


def export_table(table, fmt):
    """Serialize a table deterministically.

    plain: one line; depth tables as space-separated counts, joint
    tables as q,t:coeff tokens. csv: header plus one row per entry
    (n,k,count for depth tables, n,q,t,coeff for joint tables). json:
    one object with sorted keys.
    """
    joint = isinstance(table, JointTable)
    if fmt == "plain":
        if joint:
            return " ".join("%d,%d:%d" % (q, t, c) for (q, t), c in table.coeffs)
        return " ".join(str(c) for c in table.counts)
    if fmt == "csv":
        if joint:
            lines = ["n,q,t,coeff"]
            lines += ["%d,%d,%d,%d" % (table.n, q, t, c) for (q, t), c in table.coeffs]
        else:
            lines = ["n,k,count"]
            lines += ["%d,%d,%d" % (table.n, k, c) for k, c in enumerate(table.counts)]
        return "\n".join(lines)
    if fmt == "json":
        if joint:
            obj = {
                "stat": "%s_%s" % table.pair,
                "n": table.n,
                "coeffs": [[q, t, c] for (q, t), c in table.coeffs],
            }
        else:
            obj = {
                "kind": table.kind,
                "stat": table.stat,
                "n": table.n,
                "counts": list(table.counts),
            }
        return json.dumps(obj, sort_keys=True)
    raise ValueError("unknown format %r (expected plain, csv or json)" % (fmt,))
