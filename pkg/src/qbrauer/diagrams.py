"""Classical Brauer diagrams: perfect matchings on two rows of n points,
concatenation with loop counting, the distinguished contraction diagrams,
reduced triples and the constructive coset-representative extraction.

Vertices are indexed 0..2n-1: 0..n-1 is the top row (labels 1..n) and
n..2n-1 the bottom row (labels 1'..n').  A permutation w gives the diagram
joining top w(i) to bottom i', so that diagram(u) . diagram(v) = diagram(u v)
under top-over-bottom concatenation.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .perms import Perm, bstar_kn_from_arcs, identity, s_run


class Diagram:
    """A perfect matching of {1..n, 1'..n'}; immutable and hashable."""

    __slots__ = ("partner", "_hash")

    def __init__(self, partner: Sequence[int]):
        self.partner = tuple(partner)
        self._hash: int | None = None
        if len(self.partner) % 2:
            raise ValueError("odd number of vertices")

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.partner == other.partner

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.partner)
        return self._hash

    # -- structure ----------------------------------------------------------------

    def top_arcs(self) -> list[tuple[int, int]]:
        """Horizontal edges on the top row, as 1-based label pairs."""
        n = self.n
        out = []
        for v in range(n):
            w = self.partner[v]
            if v < w < n:
                out.append((v + 1, w + 1))
        return out

    def bottom_arcs(self) -> list[tuple[int, int]]:
        n = self.n
        out = []
        for v in range(n, 2 * n):
            w = self.partner[v]
            if v < w:
                out.append((v - n + 1, w - n + 1))
        return out

    def verticals(self) -> list[tuple[int, int]]:
        """Through strands as (top label, bottom label) pairs."""
        n = self.n
        return [
            (v + 1, self.partner[v] - n + 1)
            for v in range(n)
            if self.partner[v] >= n
        ]

    def arc_count(self) -> int:
        return len(self.top_arcs())

    def transpose(self) -> "Diagram":
        """Flip top and bottom rows (the diagram of the reversed product)."""
        n = self.n
        part = [0] * (2 * n)
        for v, w in enumerate(self.partner):
            part[(v + n) % (2 * n)] = (w + n) % (2 * n)
        return Diagram(part)

    # -- rendering ------------------------------------------------------------------

    def __str__(self) -> str:
        n = self.n

        def name(v: int) -> str:
            return str(v + 1) if v < n else f"{v - n + 1}'"

        edges = []
        for v in range(2 * n):
            w = self.partner[v]
            if v < w:
                edges.append(f"{name(v)}-{name(w)}")
        return "{" + ", ".join(edges) + "}"

    def __repr__(self) -> str:
        return f"Diagram({self})"


def parse_diagram(text: str, n: int) -> Diagram:
    """Parse the edge-list rendering, e.g. "{1-2, 1'-2', 3-3'}"."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    part = [-1] * (2 * n)

    def vertex(tok: str) -> int:
        tok = tok.strip()
        if tok.endswith("'"):
            return n + int(tok[:-1]) - 1
        return int(tok) - 1

    for edge in text.split(","):
        edge = edge.strip()
        if not edge:
            continue
        a, b = edge.split("-")
        va, vb = vertex(a), vertex(b)
        part[va], part[vb] = vb, va
    if any(p < 0 for p in part):
        raise ValueError(f"incomplete matching in {text!r}")
    return Diagram(part)


# -- constructors --------------------------------------------------------------------


def perm_diagram(w: Perm) -> Diagram:
    n = w.n
    part = [0] * (2 * n)
    for i in range(1, n + 1):
        top = w(i) - 1
        bot = n + i - 1
        part[top] = bot
        part[bot] = top
    return Diagram(part)


@lru_cache(maxsize=None)
def e_diagram(n: int, k: int) -> Diagram:
    """The contraction diagram with k arcs {2t-1, 2t} on both rows."""
    if not 0 <= k <= n // 2:
        raise ValueError(f"k={k} out of range for n={n}")
    part = [0] * (2 * n)
    for t in range(k):
        a, b = 2 * t, 2 * t + 1
        part[a], part[b] = b, a
        part[n + a], part[n + b] = n + b, n + a
    for j in range(2 * k, n):
        part[j] = n + j
        part[n + j] = j
    return Diagram(part)


def from_arcs(top: Sequence[tuple[int, int]], bottom: Sequence[tuple[int, int]],
              through: Sequence[tuple[int, int]], n: int) -> Diagram:
    part = [-1] * (2 * n)
    for a, b in top:
        part[a - 1], part[b - 1] = b - 1, a - 1
    for a, b in bottom:
        part[n + a - 1], part[n + b - 1] = n + b - 1, n + a - 1
    for t, b in through:
        part[t - 1], part[n + b - 1] = n + b - 1, t - 1
    if any(p < 0 for p in part):
        raise ValueError("incomplete matching")
    return Diagram(part)


# -- concatenation ---------------------------------------------------------------------


def concat(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    """Stack d1 over d2, remove closed loops, return (diagram, loop count)."""
    n = d1.n
    if d2.n != n:
        raise ValueError("size mismatch")
    # node ids: 0..n-1 result top, n..2n-1 result bottom, 2n..3n-1 middle
    adj: list[list[int]] = [[] for _ in range(3 * n)]

    def link(a: int, b: int) -> None:
        adj[a].append(b)
        adj[b].append(a)

    for v in range(n):
        w = d1.partner[v]
        link(v, w if w < n else 2 * n + (w - n))
    for v in range(n, 2 * n):
        w = d1.partner[v]
        if v < w:  # bottom arc of d1: middle-middle edge
            link(2 * n + (v - n), 2 * n + (w - n))
    for v in range(n):
        w = d2.partner[v]
        if v < w < n:
            link(2 * n + v, 2 * n + w)
        elif w >= n:
            link(2 * n + v, n + (w - n))
    for v in range(n, 2 * n):
        w = d2.partner[v]
        if n <= v < w:
            link(v, w)

    part = [-1] * (2 * n)
    seen = [False] * (3 * n)
    for start in range(2 * n):
        if seen[start]:
            continue
        seen[start] = True
        prev, cur = start, adj[start][0]
        while cur >= 2 * n:
            seen[cur] = True
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
        seen[cur] = True
        part[start], part[cur] = cur, start
    loops = 0
    for start in range(2 * n, 3 * n):
        if seen[start]:
            continue
        loops += 1
        prev, cur = start, adj[start][0]
        seen[start] = True
        while cur != start:
            seen[cur] = True
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
    return Diagram(part), loops


def concat_many(ds: Sequence[Diagram]) -> tuple[Diagram, int]:
    d, loops = ds[0], 0
    for e in ds[1:]:
        d, extra = concat(d, e)
        loops += extra
    return d, loops


# -- enumeration -----------------------------------------------------------------------


def enumerate_diagrams(n: int, k: int | None = None) -> list[Diagram]:
    """All diagrams on 2n points ((2n-1)!! of them), optionally with k arcs."""
    out: list[Diagram] = []

    def rec(free: tuple[int, ...], part: dict[int, int]):
        if not free:
            d = Diagram([part[v] for v in range(2 * n)])
            if k is None or d.arc_count() == k:
                out.append(d)
            return
        a = free[0]
        for bi in range(1, len(free)):
            b = free[bi]
            part[a], part[b] = b, a
            rec(free[1:bi] + free[bi + 1 :], part)
        return

    rec(tuple(range(2 * n)), {})
    return out


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


# -- coset representative extraction ----------------------------------------------------
#
# Given w and k, there is a unique sigma in B*_k with w e_(k) = sigma e_(k) as
# diagrams and l(sigma) <= l(w).  The constructive procedure peels blocks: the
# through strands are straightened from the right, then the arcs are moved in
# place from the right, two columns at a time.


def sigma_reduce(w: Perm, k: int) -> tuple[Perm, tuple]:
    """Return (sigma, t_sequence); the t-sequence is the B*_k tuple witness."""
    n = w.n
    if not 0 <= k <= n // 2:
        raise ValueError(f"k={k} out of range for n={n}")
    cur = list(w.line)  # current u with diagram u e_(k)
    parts: list[tuple[int, int | None]] = []
    sigma = identity(n)

    def apply_tinv(r: int, j: int) -> None:
        # cur <- s_{r,j}^{-1} cur  (value relabelling)
        for pos, v in enumerate(cur):
            if v == r:
                cur[pos] = j + 1
            elif r < v <= j + 1:
                cur[pos] = v - 1

    for j in range(n - 1, 2 * k - 1, -1):
        r = cur[j]  # top endpoint of the strand ending at bottom (j+1)'
        if r == j + 1:
            parts.append((j, None))
        else:
            parts.append((j, r))
            sigma = sigma * s_run(r, j, n)
            apply_tinv(r, j)
    for j in range(2 * k - 2, 0, -2):
        # partner of top label j+2 among the current arcs {u(2t-1), u(2t)}
        pos = cur.index(j + 2)
        mate = cur[pos - 1] if pos % 2 else cur[pos + 1]
        if mate == j + 1:
            parts.append((j, None))
        else:
            parts.append((j, mate))
            sigma = sigma * s_run(mate, j, n)
            apply_tinv(mate, j)
    return sigma, tuple(parts)


# -- reduced triples ----------------------------------------------------------------------


class Triple:
    """The unique length-additive triple (omega1, omega_d, omega2) of a diagram."""

    __slots__ = ("omega1", "omega_d", "omega2", "k")

    def __init__(self, omega1: Perm, omega_d: Perm, omega2: Perm, k: int):
        self.omega1 = omega1
        self.omega_d = omega_d
        self.omega2 = omega2
        self.k = k

    def length(self) -> int:
        return self.omega1.length() + self.omega_d.length() + self.omega2.length()

    def __repr__(self) -> str:
        return f"Triple({self.omega1!r}, {self.omega_d!r}, {self.omega2!r}, k={self.k})"


def triple_decompose(d: Diagram) -> Triple:
    """Invert the bijection rho: B*_{k,n} x S_{2k+1,n} x B_{k,n} -> I_{k,n}."""
    n = d.n
    top = d.top_arcs()
    bottom = d.bottom_arcs()
    k = len(top)
    omega1 = bstar_kn_from_arcs(top, n)
    omega2 = bstar_kn_from_arcs(bottom, n).inv()
    # through strands fix omega_d on 2k+1..n: omega_d(omega2(b)) = omega1^{-1}(t)
    o1inv = omega1.inv()
    line = list(range(1, n + 1))
    for t, b in d.verticals():
        line[omega2(b) - 1] = o1inv(t)
    omega_d = Perm(line)
    if not omega_d.fixes_prefix(2 * k):
        raise AssertionError(f"bad middle part for {d}")
    return Triple(omega1, omega_d, omega2, k)


def rho_compose(tr: Triple, n: int) -> Diagram:
    """Rebuild the diagram of a triple (zero loops by construction)."""
    d, loops = concat_many(
        [
            perm_diagram(tr.omega1),
            e_diagram(n, tr.k),
            perm_diagram(tr.omega_d * tr.omega2),
        ]
    )
    if loops:
        raise AssertionError("triple composition produced loops")
    return d


def diagram_length(d: Diagram) -> int:
    """l(d) = l(omega1) + l(omega_d) + l(omega2) of the reduced triple."""
    return triple_decompose(d).length()


def brute_force_length(d: Diagram) -> int:
    """Minimise l(w1) + l(w2) over all factorizations d = w1 e_(k) w2.

    Exponential; test oracle only.
    """
    from .perms import all_perms

    n = d.n
    k = d.arc_count()
    ek = e_diagram(n, k)
    best = None
    for w1 in all_perms(n):
        l1 = w1.length()
        if best is not None and l1 >= best:
            continue
        left, _ = concat(perm_diagram(w1), ek)
        for w2 in all_perms(n):
            l2 = l1 + w2.length()
            if best is not None and l2 >= best:
                continue
            cand, _ = concat(left, perm_diagram(w2))
            if cand == d:
                best = l2
    if best is None:
        raise AssertionError("diagram admits no factorization")
    return best
