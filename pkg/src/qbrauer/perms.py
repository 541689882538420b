"""Symmetric group combinatorics: permutations, lengths, reduced words,
the interval elements s_{i,j}, the coset families B*_k, B_k, B*_{k,n}, B_{k,n}
and their unique length-additive factorizations.

Permutations are stored in one-line notation over {1..n}; composition is
functional, (u*v)(x) = u(v(x)).  Reduced words are produced from the unique
descending block decomposition w = t_{n-1} t_{n-2} ... t_1 (each t_j either
trivial or an interval s_{i,j} = s_i s_{i+1} ... s_j), which makes every
canonical word deterministic and length-additive by construction.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence


class Perm:
    """A permutation of {1..n} in one-line notation (immutable)."""

    __slots__ = ("line", "_len", "_hash")

    def __init__(self, line: Sequence[int]):
        self.line = tuple(line)
        self._len: int | None = None
        self._hash: int | None = None

    # -- basics ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.line)

    def __call__(self, x: int) -> int:
        return self.line[x - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.line == other.line

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.line)
        return self._hash

    def __repr__(self) -> str:
        return "Perm" + str(list(self.line))

    def __mul__(self, other: "Perm") -> "Perm":
        ol = other.line
        sl = self.line
        return Perm(tuple(sl[x - 1] for x in ol))

    def inv(self) -> "Perm":
        line = self.line
        out = [0] * len(line)
        for pos, val in enumerate(line):
            out[val - 1] = pos + 1
        return Perm(out)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.line))

    def length(self) -> int:
        """Coxeter length = inversion count."""
        if self._len is None:
            line = self.line
            n = len(line)
            total = 0
            for a in range(n):
                va = line[a]
                for b in range(a + 1, n):
                    if va > line[b]:
                        total += 1
            self._len = total
        return self._len

    # -- descents and words ------------------------------------------------------

    def right_descent(self, i: int) -> bool:
        """True iff l(w s_i) < l(w)."""
        return self.line[i - 1] > self.line[i]

    def left_descent(self, i: int) -> bool:
        """True iff l(s_i w) < l(w)."""
        return self.line.index(i) > self.line.index(i + 1)

    def mul_s_right(self, i: int) -> "Perm":
        line = list(self.line)
        line[i - 1], line[i] = line[i], line[i - 1]
        return Perm(line)

    def mul_s_left(self, i: int) -> "Perm":
        line = [(i + 1 if v == i else i if v == i + 1 else v) for v in self.line]
        return Perm(line)

    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word from the descending block decomposition."""
        word: list[int] = []
        for j, r in t_decompose(self):
            if r is not None:
                word.extend(range(r, j + 1))  # s_r s_{r+1} ... s_j
        return tuple(word)

    def fixes_prefix(self, m: int) -> bool:
        """True iff w(x) = x for all x <= m."""
        return all(self.line[x] == x + 1 for x in range(m))


def identity(n: int) -> Perm:
    return Perm(range(1, n + 1))


def s_el(i: int, n: int) -> Perm:
    line = list(range(1, n + 1))
    line[i - 1], line[i] = line[i], line[i - 1]
    return Perm(line)


def s_run(i: int, j: int, n: int) -> Perm:
    """The interval element s_{i,j}: s_i s_{i+1}...s_j if i <= j, descending
    s_i s_{i-1}...s_j otherwise."""
    w = identity(n)
    rng = range(i, j + 1) if i <= j else range(i, j - 1, -1)
    for a in rng:
        w = w * s_el(a, n)
    return w


def from_word(word: Sequence[int], n: int) -> Perm:
    w = identity(n)
    for i in word:
        w = w * s_el(i, n)
    return w


def perm_basics(w: Perm) -> dict:
    """Length, canonical reduced word and inverse, bundled for the CLI."""
    return {
        "length": w.length(),
        "reduced_word": list(w.reduced_word()),
        "inverse": w.inv(),
    }


# -- descending block decomposition --------------------------------------------
#
# Every w factors uniquely as t_{n-1} t_{n-2} ... t_1 where t_j is either
# trivial or s_{i_j, j} (an ascending interval word s_{i_j}...s_j), with
# lengths adding.  t_j is read off from where the current remainder sends j+1.


def t_decompose(w: Perm) -> tuple[tuple[int, Optional[int]], ...]:
    """Return ((j, i_j) ...) for j = n-1..1, i_j None when t_j is trivial."""
    n = w.n
    cur = list(w.line)
    out: list[tuple[int, Optional[int]]] = []
    for j in range(n - 1, 0, -1):
        r = cur[j]  # image of j+1 under the remainder
        if r == j + 1:
            out.append((j, None))
        else:
            out.append((j, r))
            # multiply by s_{r,j}^{-1} on the left: value v -> v-1 for r< v <= j+1, r -> j+1
            nxt = []
            for v in cur:
                if v == r:
                    nxt.append(j + 1)
                elif r < v <= j + 1:
                    nxt.append(v - 1)
                else:
                    nxt.append(v)
            # j+1 is now fixed; shrink implicitly by leaving it in place
            cur = nxt
    return tuple(out)


def t_tuple_perm(parts: Sequence[tuple[int, Optional[int]]], n: int) -> Perm:
    w = identity(n)
    for j, r in parts:
        if r is not None:
            w = w * s_run(r, j, n)
    return w


def in_bstar(w: Perm, k: int) -> bool:
    """Membership in B*_k: the block decomposition has no odd block below 2k."""
    if k == 0:
        return True
    for j, r in t_decompose(w):
        if j < 2 * k and j % 2 == 1 and r is not None:
            return False
    return True


def bstar_indices(n: int, k: int) -> list[int]:
    """The block indices j allowed in a B*_k tuple, in canonical order."""
    idx = list(range(n - 1, 2 * k - 1, -1))
    idx.extend(range(2 * k - 2, 1, -2))
    return idx


def enumerate_bstar(n: int, k: int) -> list[tuple[Perm, tuple]]:
    """All of B*_k with its defining tuple as a witness (lengths additive)."""
    if not 0 <= k <= n // 2:
        raise ValueError(f"k={k} out of range for n={n}")
    if k == 0:
        return [(w, t_decompose(w)) for w in all_perms(n)]
    out: list[tuple[Perm, tuple]] = []

    def rec(pos: int, w: Perm, parts: tuple):
        if pos == len(idx):
            out.append((w, parts))
            return
        j = idx[pos]
        rec(pos + 1, w, parts + ((j, None),))
        for r in range(1, j + 1):
            rec(pos + 1, w * s_run(r, j, n), parts + ((j, r),))

    idx = bstar_indices(n, k)
    rec(0, identity(n), ())
    return out


def all_perms(n: int) -> list[Perm]:
    from itertools import permutations

    return [Perm(p) for p in permutations(range(1, n + 1))]


# -- the noncrossing families B*_{k,n} -------------------------------------------
#
# An element of B*_{k,n} is determined by its k disjoint arcs {a_t, b_t} on
# {1..n}: sort arcs by their maxima, list the remaining points increasingly,
# and read the one-line [a_1, b_1, ..., a_k, b_k, c_1, ..., c_{n-2k}].


def bstar_kn_from_arcs(arcs: Sequence[tuple[int, int]], n: int) -> Perm:
    arcs = sorted((tuple(sorted(a)) for a in arcs), key=lambda ab: ab[1])
    used = set()
    line: list[int] = []
    for a, b in arcs:
        line.extend((a, b))
        used.update((a, b))
    line.extend(x for x in range(1, n + 1) if x not in used)
    return Perm(line)


def arc_configs(n: int, k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All sets of k disjoint unordered pairs in {1..n}."""

    def rec(points: tuple[int, ...], k: int):
        if k == 0:
            yield ()
            return
        a = points[0]
        for bi in range(1, len(points)):
            b = points[bi]
            rest = points[1:bi] + points[bi + 1 :]
            for tail in rec(rest, k - 1):
                yield ((a, b),) + tail

    for supp in combinations(range(1, n + 1), 2 * k):
        yield from rec(supp, k)


def enumerate_bstar_kn(n: int, k: int) -> list[Perm]:
    if not 0 <= k <= n // 2:
        raise ValueError(f"k={k} out of range for n={n}")
    return [bstar_kn_from_arcs(c, n) for c in arc_configs(n, k)]


def enumerate_b_sets(n: int, k: int, variant: str) -> list[Perm]:
    """The four coset families used throughout.

    Bstar_k and B_k are the coarse families; Bstar_kn and B_kn are the
    noncrossing transversals entering the diagram triples.
    """
    if variant == "Bstar_k":
        return [w for w, _ in enumerate_bstar(n, k)]
    if variant == "B_k":
        return [w.inv() for w, _ in enumerate_bstar(n, k)]
    if variant == "Bstar_kn":
        return enumerate_bstar_kn(n, k)
    if variant == "B_kn":
        return [w.inv() for w in enumerate_bstar_kn(n, k)]
    raise ValueError(f"unknown variant {variant!r}")


def factorize_bstar(sigma: Perm, k: int) -> tuple[Perm, Perm]:
    """sigma in B*_k = omega' * pi' with omega' in B*_{k,n}, pi' in S_{2k+1,n}.

    The factorization is unique and length-additive.
    """
    n = sigma.n
    arcs = [tuple(sorted((sigma(2 * t - 1), sigma(2 * t)))) for t in range(1, k + 1)]
    omega = bstar_kn_from_arcs(arcs, n)
    pi = omega.inv() * sigma
    if not pi.fixes_prefix(2 * k):
        raise ValueError(f"{sigma!r} is not in B*_{k}")
    if omega.length() + pi.length() != sigma.length():
        raise ValueError(f"factorization of {sigma!r} is not length-additive")
    return omega, pi


def factorize_b(rho: Perm, k: int) -> tuple[Perm, Perm]:
    """rho in B_k = tau' * varpi' with tau' in S_{2k+1,n}, varpi' in B_{k,n}."""
    omega, pi = factorize_bstar(rho.inv(), k)
    return pi.inv(), omega.inv()


def factorize_bk(sigma: Perm, n: int, k: int, side: str) -> tuple[Perm, Perm]:
    """Spec-facing wrapper: side='left' factors B*_k, side='right' factors B_k."""
    if sigma.n != n:
        raise ValueError("size mismatch")
    if side == "left":
        if not in_bstar(sigma, k):
            raise ValueError(f"{sigma!r} not in B*_{k}")
        return factorize_bstar(sigma, k)
    if side == "right":
        if not in_bstar(sigma.inv(), k):
            raise ValueError(f"{sigma!r} not in B_{k}")
        return factorize_b(sigma, k)
    raise ValueError("side must be 'left' or 'right'")


# -- parabolic coset splitting ------------------------------------------------------
#
# For the contraction recursion we repeatedly split an element y fixing
# 1..z-1 as y = psi * chi where psi fixes 1..z+1 and chi is the minimal
# representative of its coset, characterised by: chi^{-1} agrees with y^{-1}
# at z and z+1 and lists the remaining zone values increasingly.


def zone_split(y: Perm, z: int) -> tuple[Perm, int, int]:
    """Split y (fixing 1..z-1) as psi * chi; return (psi, A, B) where
    (A, B) = (y^{-1}(z), y^{-1}(z+1)) determines chi."""
    n = y.n
    yinv = y.inv()
    a, b = yinv(z), yinv(z + 1)
    chi_inv_line = list(range(1, z - 1 + 1))
    chi_inv_line.extend((a, b))
    rest = [x for x in range(z, n + 1) if x != a and x != b]
    chi_inv_line.extend(rest)
    chi = Perm(chi_inv_line).inv()
    psi = y * chi.inv()
    if not psi.fixes_prefix(z + 1):
        raise AssertionError("zone split produced a bad stabiliser part")
    if psi.length() + chi.length() != y.length():
        raise AssertionError("zone split is not length-additive")
    return psi, a, b


def zone_pair_rep(a: int, b: int, z: int, n: int) -> Perm:
    """The minimal coset representative chi with chi^{-1} = [.., a, b, rest].

    Requires a < b; its canonical word is the pair of ascending runs
    s_{z+1}..s_{b-1} followed by s_z..s_{a-1} (either may be empty).
    """
    line = list(range(1, z))
    line.extend((a, b))
    line.extend(x for x in range(z, n + 1) if x != a and x != b)
    return Perm(line).inv()


@lru_cache(maxsize=None)
def longest_element(n: int) -> Perm:
    return Perm(range(n, 0, -1))
