"""The type A Iwahori-Hecke algebra of the symmetric group over Q(q,z).

Basis {H_w}, quadratic relation (H_i - q)(H_i + q^-1) = 0, so

    H_w H_i = H_{w s_i}                       if l(w s_i) > l(w),
    H_w H_i = H_{w s_i} + (q - q^-1) H_w      otherwise.

Also provides the bar involution (q -> q^-1, H_i -> H_i^-1) and the
Kazhdan-Lusztig basis, which doubles as an independent oracle for the
contraction-free part of the bigger algebra's canonical basis.
"""

from __future__ import annotations

from functools import lru_cache

from .coeffs import Coeff, DELTA, ONE, qpow
from .perms import Perm, all_perms, from_word, identity

HeckeElem = dict  # Perm -> Coeff, zero coefficients absent


def unit(n: int) -> HeckeElem:
    return {identity(n): ONE}


def basis(w: Perm) -> HeckeElem:
    return {w: ONE}


def add_into(acc: HeckeElem, w: Perm, c: Coeff) -> None:
    s = acc.get(w)
    if s is None:
        if c:
            acc[w] = c
    else:
        s = s + c
        if s:
            acc[w] = s
        else:
            del acc[w]


def scale(x: HeckeElem, c: Coeff) -> HeckeElem:
    if c.is_zero():
        return {}
    if c.is_one():
        return dict(x)
    return {w: cw * c for w, cw in x.items()}


def add(x: HeckeElem, y: HeckeElem) -> HeckeElem:
    out = dict(x)
    for w, c in y.items():
        add_into(out, w, c)
    return out


def sub(x: HeckeElem, y: HeckeElem) -> HeckeElem:
    out = dict(x)
    for w, c in y.items():
        add_into(out, w, -c)
    return out


def rmul_gen(x: HeckeElem, i: int, inverse: bool = False) -> HeckeElem:
    """Right-multiply by H_i (or H_i^-1 = H_i - (q - q^-1))."""
    out: HeckeElem = {}
    for w, c in x.items():
        ws = w.mul_s_right(i)
        if w.right_descent(i):
            add_into(out, ws, c)
            add_into(out, w, c * DELTA)
        else:
            add_into(out, ws, c)
    if inverse:
        for w, c in x.items():
            add_into(out, w, -(c * DELTA))
    return out


def lmul_gen(x: HeckeElem, i: int, inverse: bool = False) -> HeckeElem:
    out: HeckeElem = {}
    for w, c in x.items():
        sw = w.mul_s_left(i)
        if w.left_descent(i):
            add_into(out, sw, c)
            add_into(out, w, c * DELTA)
        else:
            add_into(out, sw, c)
    if inverse:
        for w, c in x.items():
            add_into(out, w, -(c * DELTA))
    return out


def rmul_basis(x: HeckeElem, w: Perm) -> HeckeElem:
    for i in w.reduced_word():
        x = rmul_gen(x, i)
    return x


def multiply(x: HeckeElem, y: HeckeElem) -> HeckeElem:
    out: HeckeElem = {}
    for w, c in y.items():
        for v, d in rmul_basis(scale(x, c), w).items():
            add_into(out, v, d)
    return out


def hecke_product_perms(u: Perm, v: Perm) -> HeckeElem:
    """H_u H_v expanded in the H basis."""
    return rmul_basis(basis(u), v)


@lru_cache(maxsize=None)
def bar_basis(w: Perm) -> tuple:
    """bar(H_w) as a tuple of (perm, coeff): fold the word with inverses."""
    x = unit(w.n)
    for i in w.reduced_word():
        x = rmul_gen(x, i, inverse=True)
    return tuple(x.items())


def bar(x: HeckeElem) -> HeckeElem:
    out: HeckeElem = {}
    for w, c in x.items():
        cb = c.bar()
        for v, d in bar_basis(w):
            add_into(out, v, cb * d)
    return out


# -- Kazhdan-Lusztig basis --------------------------------------------------------


def _antisymmetric_split(c: Coeff, dual: bool) -> Coeff:
    """Given bar-antisymmetric c, the correction gamma with gamma - bar(gamma) = c
    lying in q^-1 Z[q^-1] (or q Z[q] for the dual convention)."""
    if c.is_zero():
        return c
    if not c.den.is_one() or not c.num.z_free():
        raise AssertionError(f"correction coefficient {c} is not a Laurent polynomial in q")
    terms = c.num.terms
    if terms.get((0, 0)):
        raise AssertionError(f"correction coefficient {c} has a constant term")
    keep = (lambda i: i < 0) if not dual else (lambda i: i > 0)
    from .coeffs import Laurent

    gamma = Coeff(Laurent({(i, 0): v for (i, _), v in terms.items() if keep(i)}))
    if gamma - gamma.bar() != c:
        raise AssertionError(f"coefficient {c} is not bar-antisymmetric")
    return gamma


def lusztig_solve(order, bar_of, add_f, sub_f, scale_f, coeff_of, support, dual: bool):
    """Generic triangular canonical-basis solver (Lusztig's lemma).

    order: index objects sorted by increasing length; bar_of maps a basis
    index to the bar of its basis element (as an element); the element
    callbacks make this usable for both the Hecke and the full algebra.
    Returns {index: element} with element = H_index + lower corrections.
    """
    table = {}
    for d in order:
        elem = {d: ONE}
        guard = 0
        while True:
            e = sub_f(bar_apply(elem, bar_of, add_f, scale_f), elem)
            if not e:
                break
            guard += 1
            if guard > 10000:
                raise AssertionError("canonical correction loop failed to converge")
            dmax = max(e, key=support)
            gamma = _antisymmetric_split(e[dmax], dual)
            elem = add_f(elem, {dmax: gamma})
        table[d] = elem
    return table


def bar_apply(elem, bar_of, add_f, scale_f):
    out = {}
    for d, c in elem.items():
        out = add_f(out, scale_f(bar_of(d), c.bar()))
    return out


def kl_basis(n: int, bound: int = 6) -> dict[Perm, HeckeElem]:
    """The Kazhdan-Lusztig basis {C_w}: bar-invariant, C_w = H_w + lower terms
    with coefficients in q^-1 Z[q^-1]."""
    if n > bound:
        raise ValueError(f"n={n} exceeds the configured bound {bound}")
    perms = sorted(all_perms(n), key=lambda w: (w.length(), w.line))
    return lusztig_solve(
        perms,
        bar_of=lambda w: dict(bar_basis(w)),
        add_f=add,
        sub_f=sub,
        scale_f=scale,
        coeff_of=None,
        support=lambda w: w.length(),
        dual=False,
    )


def h_inverse(w: Perm) -> HeckeElem:
    """(H_w)^-1 expanded in the basis."""
    x = unit(w.n)
    for i in reversed(w.reduced_word()):
        x = rmul_gen(x, i, inverse=True)
    return x
