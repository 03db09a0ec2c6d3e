"""Pattern containment and the classes where depth collapses.

contains_pattern finds the lexicographically least witness of a
classical pattern occurrence. Three classes get named predicates:

- fully commutative (is_fc): avoids 321; exactly the windows with
  depth equal to length;
- boolean (is_boolean): avoids 321 and 3412; exactly the windows with
  length equal to reflection length (and depth equal to both); their
  reduced words repeat no letter;
- free (is_free): avoids 231, 312 and 321; the products of pairwise
  commuting simple transpositions, i.e. boolean with no two adjacent
  support indices.

support computes the set of simple-transposition indices occurring in
every reduced word without building one, via prefix sets.
"""

from .perm_core import cycle_decomposition


def contains_pattern(w, pattern):
    """The lexicographically least witness that `pattern` occurs in w.

    A witness is a tuple of positions i_1 < ... < i_k whose values
    appear in the same relative order as the pattern (itself given as a
    window). Returns None when w avoids the pattern. The search is a
    plain subsequence scan with early pruning; at pattern lengths 3 and
    4 and small n nothing fancier pays off.
    """
    n, k = len(w), len(pattern)
    if k == 0:
        return ()
    pos = [0] * k

    def search(t, start):
        for i in range(start, n - (k - t) + 1):
            ok = True
            for s in range(t):
                if (pattern[s] < pattern[t]) != (w[pos[s]] < w[i]):
                    ok = False
                    break
            if ok:
                pos[t] = i
                if t + 1 == k or search(t + 1, i + 1):
                    return True
        return False

    if search(0, 0):
        return tuple(i + 1 for i in pos)
    return None


def avoids(w, pattern):
    return contains_pattern(w, pattern) is None


def is_fc(w):
    """Fully commutative: avoids 321; depth(w) == length(w)."""
    return avoids(w, (3, 2, 1))


def is_boolean(w):
    """Avoids 321 and 3412; length(w) == reflection_length(w)."""
    return avoids(w, (3, 2, 1)) and avoids(w, (3, 4, 1, 2))


def is_free(w):
    """Avoids 231, 312 and 321: a product of distant commuting simples."""
    return avoids(w, (2, 3, 1)) and avoids(w, (3, 1, 2)) and avoids(w, (3, 2, 1))


def cycles_are_intervals(w):
    """Whether every cycle's value set is a run of consecutive integers.

    True for every boolean window; the converse fails (3421 is a single
    4-cycle but contains 321).
    """
    for cyc in cycle_decomposition(w):
        if max(cyc) - min(cyc) + 1 != len(cyc):
            return False
    return True


def support(w):
    """The simple-transposition indices k appearing in reduced words of w.

    Computed without words: k lies in the support exactly when the
    prefix w(1..k) is not the set {1..k}, i.e. when its maximum exceeds
    k.
    """
    out = set()
    seen_max = 0
    for k in range(1, len(w)):
        if w[k - 1] > seen_max:
            seen_max = w[k - 1]
        if seen_max > k:
            out.add(k)
    return out
