"""Concrete finite Coxeter group backends.

Three families are enumerated explicitly:

- kind "A", size n: the symmetric group on {1..n} (rank n - 1),
  elements stored as windows;
- kind "B", size n: signed permutations of {1..n}, stored as signed
  windows where a negative entry means the value comes out negated;
- kind "I2", size m: the dihedral group of order 2m, stored as pairs
  (r, f) meaning rotation by r followed by a flip when f = 1.

A backend enumerates its group once in a fixed order, ranks elements
perfectly (mixed-radix arithmetic, no hashing), computes every Coxeter
length by breadth-first search over the simple generators, and lists
the reflections as the closure of the simples under conjugation. Depth
enters through reflection_depth: a reflection of length l costs
(l + 1) / 2, which in the symmetric group gives t_ij the cost j - i.
"""

from itertools import permutations

from .perm_core import apply_transposition_right, compose, identity, inverse

_CAPS = {"A": (1, 8), "B": (1, 5), "I2": (2, 12)}


class GroupBackend:
    """One concretely enumerated group.

    Attributes: kind ("A", "B" or "I2"), size (n, or m for "I2"),
    elements (rank order), identity, simples, reflections (canonical
    display order), lengths (list indexed by rank). multiply, inverse
    and rank are methods supplied by the family.
    """

    def __init__(self, kind, size, elements, simples, multiply, inv, rank, reflection_key):
        self.kind = kind
        self.size = size
        self.elements = elements
        self.simples = simples
        self.multiply = multiply
        self.inverse = inv
        self.rank = rank
        self.identity = elements[0]  # every family enumerates in rank order
        self.lengths = _bfs_lengths(len(elements), self.identity, simples, multiply, rank)
        closure = _conjugation_closure(simples, multiply, inv)
        self.reflections = tuple(sorted(closure, key=reflection_key))
        self._reflection_ranks = frozenset(rank(t) for t in self.reflections)

    def length(self, x):
        return self.lengths[self.rank(x)]

    def is_reflection(self, x):
        return self.rank(x) in self._reflection_ranks


def build_backend(kind, size):
    """Construct a backend; size means n for kinds A and B, m for I2."""
    if kind not in _CAPS:
        raise ValueError("unknown group kind %r (expected A, B or I2)" % (kind,))
    lo, hi = _CAPS[kind]
    if not lo <= size <= hi:
        raise ValueError("kind %s supports sizes %d..%d, got %d" % (kind, lo, hi, size))
    if kind == "A":
        return _build_a(size)
    if kind == "B":
        return _build_b(size)
    return _build_i2(size)


# ---------------------------------------------------------------- kind A

def _perm_rank(w):
    # Lehmer code folded in the factorial base; matches lexicographic order
    n = len(w)
    r = 0
    for i in range(n):
        c = 0
        for j in range(i + 1, n):
            if w[j] < w[i]:
                c += 1
        r = r * (n - i) + c
    return r


def _moved_pair(t):
    moved = [i for i, x in enumerate(t, start=1) if x != i]
    return (moved[0], moved[-1])


def _build_a(n):
    elements = list(permutations(range(1, n + 1)))
    e = identity(n)
    simples = tuple(apply_transposition_right(e, i, i + 1) for i in range(1, n))
    return GroupBackend("A", n, elements, simples, compose, inverse, _perm_rank, _moved_pair)


# ---------------------------------------------------------------- kind B

def compose_signed(a, b):
    """(a * b)(i) = a(b(i)), extended by a(-k) = -a(k)."""
    if len(a) != len(b):
        raise ValueError("size mismatch: %d vs %d" % (len(a), len(b)))
    return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)


def inverse_signed(a):
    inv = [0] * len(a)
    for i, x in enumerate(a, start=1):
        if x > 0:
            inv[x - 1] = i
        else:
            inv[-x - 1] = -i
    return tuple(inv)


def _signed_rank(w):
    n = len(w)
    bits = 0
    for x in w:
        bits = (bits << 1) | (1 if x < 0 else 0)
    return _perm_rank(tuple(abs(x) for x in w)) * (1 << n) + bits


def _signed_reflection_key(t):
    moved = [i for i, x in enumerate(t, start=1) if x != i]
    i = moved[0]
    if len(moved) == 1:
        return (0, i, i)  # negation of one value
    j = moved[-1]
    return (1, i, j) if t[i - 1] > 0 else (2, i, j)  # plain swap, then signed swap


def _build_b(n):
    elements = []
    for p in permutations(range(1, n + 1)):
        for bits in range(1 << n):
            elements.append(tuple(-x if (bits >> (n - i)) & 1 else x for i, x in enumerate(p, start=1)))
    e = identity(n)
    simples = ((-1,) + e[1:],) + tuple(apply_transposition_right(e, i, i + 1) for i in range(1, n))
    return GroupBackend("B", n, elements, simples, compose_signed, inverse_signed, _signed_rank, _signed_reflection_key)


# --------------------------------------------------------------- kind I2

def _make_dihedral_ops(m):
    def multiply(a, b):
        r1, f1 = a
        r2, f2 = b
        return ((r1 - r2) % m if f1 else (r1 + r2) % m, f1 ^ f2)

    def inv(a):
        r, f = a
        return a if f else ((-r) % m, 0)

    def rank(a):
        r, f = a
        return f * m + r

    return multiply, inv, rank


def _build_i2(m):
    elements = [(r, f) for f in (0, 1) for r in range(m)]
    multiply, inv, rank = _make_dihedral_ops(m)
    simples = ((0, 1), (1, 1))
    return GroupBackend("I2", m, elements, simples, multiply, inv, rank, rank)


# ------------------------------------------------------------- shared

def _bfs_lengths(order, e, simples, multiply, rank):
    lengths = [-1] * order
    lengths[rank(e)] = 0
    frontier = [e]
    d = 0
    while frontier:
        nxt = []
        for x in frontier:
            for s in simples:
                y = multiply(x, s)
                r = rank(y)
                if lengths[r] < 0:
                    lengths[r] = d + 1
                    nxt.append(y)
        frontier = nxt
        d += 1
    return lengths


def _conjugation_closure(simples, multiply, inv):
    refl = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for t in frontier:
            for s in simples:
                u = multiply(multiply(s, t), inv(s))
                if u not in refl:
                    refl.add(u)
                    nxt.append(u)
        frontier = nxt
    return refl


def reflection_depth(backend, t):
    """The depth (l + 1) / 2 of a reflection of length l."""
    if not backend.is_reflection(t):
        raise ValueError("not a reflection: %r" % (t,))
    return (backend.length(t) + 1) // 2


def reflection_label(backend, t):
    """Short display text for a reflection."""
    if backend.kind == "I2":
        return "f%d" % t[0]
    moved = [i for i, x in enumerate(t, start=1) if x != i]
    i = moved[0]
    if len(moved) == 1:
        return "(%d -%d)" % (i, i)
    j = moved[-1]
    if t[i - 1] > 0:
        return "(%d %d)" % (i, j)
    return "(%d -%d)" % (i, j)


def dihedral_depth_formula(backend, x):
    """Depth of a dihedral element from its length alone.

    Zero for the identity, (l + 1) / 2 for odd length l, l / 2 + 1 for
    even positive length.
    """
    if backend.kind != "I2":
        raise ValueError("dihedral formula needs an I2 backend, got kind %r" % backend.kind)
    l = backend.length(x)
    if l == 0:
        return 0
    if l % 2:
        return (l + 1) // 2
    return l // 2 + 1


def dihedral_gf(m):
    """Closed-form joint polynomial of the dihedral group of order 2m.

    Returns {(length, depth): count} for the polynomial
    sum over the group of q^length * t^depth. For even m that is
    1 + 2qt + q^m t^(m/2+1) + 2(1+q) t * sum_{i=1}^{m/2-1} q^(2i) t^i,
    and for odd m
    1 + 2qt + (2+q) q^(m-1) t^((m+1)/2)
      + 2(1+q) t * sum_{i=1}^{(m-3)/2} q^(2i) t^i.
    """
    lo, hi = _CAPS["I2"]
    if not lo <= m <= hi:
        raise ValueError("kind I2 supports sizes %d..%d, got %d" % (lo, hi, m))
    gf = {(0, 0): 1, (1, 1): 2}
    if m % 2 == 0:
        gf[(m, m // 2 + 1)] = 1
        for i in range(1, m // 2):
            gf[(2 * i, i + 1)] = gf.get((2 * i, i + 1), 0) + 2
            gf[(2 * i + 1, i + 1)] = gf.get((2 * i + 1, i + 1), 0) + 2
    else:
        gf[(m - 1, (m + 1) // 2)] = gf.get((m - 1, (m + 1) // 2), 0) + 2
        gf[(m, (m + 1) // 2)] = 1
        for i in range(1, (m - 1) // 2):
            gf[(2 * i, i + 1)] = gf.get((2 * i, i + 1), 0) + 2
            gf[(2 * i + 1, i + 1)] = gf.get((2 * i + 1, i + 1), 0) + 2
    return gf


def joint_length_depth(backend, depths):
    """Fold {(length, depth): count} over all elements of a backend.

    depths is a list indexed by rank, e.g. from the depth oracle.
    """
    gf = {}
    for x in backend.elements:
        r = backend.rank(x)
        key = (backend.lengths[r], depths[r])
        gf[key] = gf.get(key, 0) + 1
    return gf
