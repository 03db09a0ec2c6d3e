"""Maps carrying depth onto other combinatorial data.

steingrimsson_phi turns descent data into excedance data: for every
window w, des(w) = exc(phi(w)) and drop(w) = dep(phi(w)). The forward
map writes the image as a function, one value at a time; the inverse
reads the image's cycles straight back off.

dyck_of_perm projects a window to the Dyck path whose outer corners are
its left-to-right maxima; minimal_fiber_rep picks the unique
321-avoiding window over a given path, the minimum-length element of
that fiber.
"""

from .perm_core import cycle_decomposition, inverse


def steingrimsson_phi(w):
    """The bijection phi with des(w) = exc(phi(w)) and drop(w) = dep(phi(w)).

    The image v is defined by its values: each w(j) lands in the slot
    indexed by its successor. A value with something smaller to its
    right takes the slot w(j+1); a value smaller than everything after
    it (a suffix minimum) takes the slot w(i+1) of its nearest smaller
    left neighbor w(i), with the front of the window (w(0) = 0) as the
    fallback.
    """
    n = len(w)
    suffix_min = [n + 1] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_min[k] = min(w[k], suffix_min[k + 1])
    v = [0] * n
    for j in range(1, n + 1):
        x = w[j - 1]
        if suffix_min[j] < x:
            slot = w[j]
        else:
            i = j - 1
            while i >= 1 and w[i - 1] > x:
                i -= 1
            slot = w[i]  # w(i + 1); for i = 0 this is the front slot w(1)
        if v[slot - 1]:
            raise RuntimeError("phi slot collision at value %d; input is not a window" % x)
        v[slot - 1] = x
    return tuple(v)


def steingrimsson_phi_inverse(v):
    """The inverse of steingrimsson_phi, read off the cycles of v.

    Each cycle of v is one segment of the preimage: write it starting
    from v^-1(min), walk backwards by repeated preimages down to the
    minimum, and lay the cycles out in increasing order of minima. The
    minima come out as the suffix minima of the preimage.
    """
    inv = inverse(v)
    out = []
    for cyc in cycle_decomposition(v):
        m = cyc[0]
        x = inv[m - 1]
        while x != m:
            out.append(x)
            x = inv[x - 1]
        out.append(m)
    return tuple(out)


def lr_maxima(w):
    """The pairs (i, w(i)) where w(i) beats every earlier value."""
    out = []
    best = 0
    for i, x in enumerate(w, start=1):
        if x > best:
            out.append((i, x))
            best = x
    return tuple(out)


def dyck_of_perm(w):
    """The Dyck path whose outer corners are the left-to-right maxima of w.

    A maximum (i, w(i)) becomes the corner at lattice point
    (i - 1, w(i)); the path runs north and east through the corners
    from (0, 0) to (n, n), never dipping below the diagonal. Rendered
    as a string of N and E steps.
    """
    n = len(w)
    parts = []
    x = y = 0
    for i, val in lr_maxima(w):
        parts.append("E" * (i - 1 - x))
        parts.append("N" * (val - y))
        x, y = i - 1, val
    parts.append("E" * (n - x))
    return "".join(parts)


def _dyck_corners(path):
    """Outer corners (x, y) of a path text, validating as it scans."""
    if not path or len(path) % 2:
        raise ValueError("a Dyck path needs an even, positive number of steps")
    x = y = 0
    corners = []
    prev = ""
    for k, ch in enumerate(path):
        if ch == "N":
            y += 1
        elif ch == "E":
            if prev == "N":
                corners.append((x, y))
            x += 1
            if x > y:
                raise ValueError("path dips below the diagonal at step %d" % (k + 1))
        else:
            raise ValueError("bad step %r at position %d, expected N or E" % (ch, k + 1))
        prev = ch
    if x != y:
        raise ValueError("unbalanced path: %d north steps but %d east steps" % (y, x))
    return corners, x


def minimal_fiber_rep(path):
    """The unique 321-avoiding window whose Dyck path is `path`.

    Corner values sit at the corner positions; every other value fills
    in increasing order. The result is the fiber's only element with
    depth equal to length.
    """
    corners, n = _dyck_corners(path)
    w = [0] * n
    used = [False] * (n + 1)
    for cx, cy in corners:
        w[cx] = cy
        used[cy] = True
    fill = (v for v in range(1, n + 1) if not used[v])
    for i in range(n):
        if not w[i]:
            w[i] = next(fill)
    return tuple(w)
