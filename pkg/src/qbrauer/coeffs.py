"""Exact arithmetic in Q(q,z): bivariate Laurent polynomials and their fractions.

Every coefficient appearing in the algebra lives here.  A `Laurent` is a
finitely supported map (i, j) -> Fraction representing sum c * q^i * z^j;
a `Coeff` is a reduced fraction of two Laurents, kept in a unique canonical
form so that equality is plain structural equality and rendered output is
reproducible byte-for-byte.

No floating point anywhere; the ground field is Fraction (exact rationals).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple[int, int]  # (exponent of q, exponent of z)

RationalLike = Union[int, Fraction]


class Laurent:
    """A bivariate Laurent polynomial in q and z over Q.

    Immutable.  Zero coefficients are never stored; the zero polynomial has
    an empty term map.
    """

    __slots__ = ("_terms", "_key", "_hash")

    def __init__(self, terms: Mapping[Monomial, RationalLike] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._key: tuple | None = None
        self._hash: int | None = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def const(cls, c: RationalLike) -> "Laurent":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, c: RationalLike, i: int, j: int = 0) -> "Laurent":
        return cls({(i, j): Fraction(c)})

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- structure -----------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return self._terms

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self._terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        if not self._terms:
            return other
        if not other._terms:
            return self
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m)
            if s is None:
                d[m] = c
            else:
                s = s + c
                if s:
                    d[m] = s
                else:
                    del d[m]
        out = Laurent.__new__(Laurent)
        out._terms = d
        out._key = None
        out._hash = None
        return out

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out._terms = {m: -c for m, c in self._terms.items()}
        out._key = None
        out._hash = None
        return out

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        if not self._terms or not other._terms:
            return ZERO_L
        if other.is_one():
            return self
        if self.is_one():
            return other
        d: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                s = d.get(m)
                if s is None:
                    d[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        d[m] = s
                    else:
                        del d[m]
        out = Laurent.__new__(Laurent)
        out._terms = d
        out._key = None
        out._hash = None
        return out

    def scale(self, c: RationalLike) -> "Laurent":
        c = Fraction(c)
        if not c:
            return ZERO_L
        out = Laurent.__new__(Laurent)
        out._terms = {m: x * c for m, x in self._terms.items()}
        out._key = None
        out._hash = None
        return out

    def shift(self, di: int, dj: int) -> "Laurent":
        """Multiply by the monomial q^di z^dj."""
        if di == 0 and dj == 0:
            return self
        out = Laurent.__new__(Laurent)
        out._terms = {(i + di, j + dj): c for (i, j), c in self._terms.items()}
        out._key = None
        out._hash = None
        return out

    def __pow__(self, e: int) -> "Laurent":
        if e < 0:
            raise ValueError("negative power of a Laurent polynomial")
        r = ONE_L
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    # -- involutions and substitutions ---------------------------------------

    def bar(self) -> "Laurent":
        """q -> q^-1, z -> z^-1."""
        out = Laurent.__new__(Laurent)
        out._terms = {(-i, -j): c for (i, j), c in self._terms.items()}
        out._key = None
        out._hash = None
        return out

    def subst_z_qpow(self, npow: int) -> "Laurent":
        """Substitute z = q^npow; the result only involves q."""
        d: dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            m = (i + npow * j, 0)
            s = d.get(m)
            if s is None:
                d[m] = c
            else:
                s = s + c
                if s:
                    d[m] = s
                else:
                    del d[m]
        out = Laurent.__new__(Laurent)
        out._terms = d
        out._key = None
        out._hash = None
        return out

    def eval_q(self, q0: Fraction) -> Fraction:
        """Evaluate a z-free Laurent polynomial at q = q0 != 0."""
        if any(j for (_, j) in self._terms):
            raise ValueError("polynomial still involves z")
        total = Fraction(0)
        for (i, _), c in self._terms.items():
            total += c * (Fraction(q0) ** i)
        return total

    # -- exponent bookkeeping -------------------------------------------------

    def min_exponents(self) -> Monomial:
        qs = min(i for (i, _) in self._terms)
        zs = min(j for (_, j) in self._terms)
        return (qs, zs)

    def max_exponents(self) -> Monomial:
        qs = max(i for (i, _) in self._terms)
        zs = max(j for (_, j) in self._terms)
        return (qs, zs)

    def leading(self) -> tuple[Monomial, Fraction]:
        """Lexicographically largest (q-exp, z-exp) term."""
        m = max(self._terms)
        return m, self._terms[m]

    def z_free(self) -> bool:
        return all(j == 0 for (_, j) in self._terms)

    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j) in sorted(self._terms, reverse=True):
            c = self._terms[(i, j)]
            factors = []
            if i:
                factors.append("q" if i == 1 else f"q^{i}")
            if j:
                factors.append("z" if j == 1 else f"z^{j}")
            if not factors or abs(c) != 1:
                a = abs(c)
                # parenthesise non-integer rationals so their slash cannot be
                # mistaken for the fraction bar between num and den
                factors.insert(0, str(a) if a.denominator == 1 else f"({a})")
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Laurent({self})"


ZERO_L = Laurent()
ONE_L = Laurent.const(1)


# -- polynomial gcd machinery (bivariate, over Q) -----------------------------
#
# Strategy: strip monomial content so both operands are honest polynomials,
# view them as polynomials in q with coefficients in Q[z], and run a
# primitive PRS.  Univariate gcd over Q[z] is monic Euclid.


def _to_qpolys(p: Laurent) -> list[dict[int, Fraction]]:
    """Nonnegative-exponent Laurent -> dense-in-q list of z-coefficient maps."""
    dq = max(i for (i, _) in p.terms)
    out: list[dict[int, Fraction]] = [{} for _ in range(dq + 1)]
    for (i, j), c in p.terms.items():
        out[i][j] = c
    return out


def _zpoly_is_zero(a: dict[int, Fraction]) -> bool:
    return not a


def _zpoly_deg(a: dict[int, Fraction]) -> int:
    return max(a)


def _zpoly_scale(a: dict[int, Fraction], c: Fraction) -> dict[int, Fraction]:
    return {k: v * c for k, v in a.items()} if c else {}


def _zpoly_sub(a, b):
    d = dict(a)
    for k, v in b.items():
        s = d.get(k, Fraction(0)) - v
        if s:
            d[k] = s
        elif k in d:
            del d[k]
    return d


def _zpoly_mul(a, b):
    d: dict[int, Fraction] = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            s = d.get(k, Fraction(0)) + x * y
            if s:
                d[k] = s
            elif k in d:
                del d[k]
    return d


def _zpoly_divmod(a, b):
    """Division with remainder in Q[z]."""
    if _zpoly_is_zero(b):
        raise ZeroDivisionError
    r = dict(a)
    quo: dict[int, Fraction] = {}
    db = _zpoly_deg(b)
    lb = b[db]
    while not _zpoly_is_zero(r) and _zpoly_deg(r) >= db:
        dr = _zpoly_deg(r)
        t = r[dr] / lb
        quo[dr - db] = t
        for j, y in b.items():
            k = dr - db + j
            s = r.get(k, Fraction(0)) - t * y
            if s:
                r[k] = s
            elif k in r:
                del r[k]
    return quo, r


def _zpoly_gcd(a, b):
    while not _zpoly_is_zero(b):
        _, r = _zpoly_divmod(a, b)
        a, b = b, r
    if _zpoly_is_zero(a):
        return a
    return _zpoly_scale(a, 1 / a[_zpoly_deg(a)])  # monic


def _qpoly_content(coeffs: list[dict[int, Fraction]]) -> dict[int, Fraction]:
    g: dict[int, Fraction] = {}
    for a in coeffs:
        if not _zpoly_is_zero(a):
            g = _zpoly_gcd(g, a) if not _zpoly_is_zero(g) else _zpoly_scale(a, 1 / a[_zpoly_deg(a)])
        if not _zpoly_is_zero(g) and _zpoly_deg(g) == 0:
            return {0: Fraction(1)}
    return g if not _zpoly_is_zero(g) else {}


def _qpoly_exact_div_z(coeffs, g):
    out = []
    for a in coeffs:
        if _zpoly_is_zero(a):
            out.append({})
        else:
            q, r = _zpoly_divmod(a, g)
            if not _zpoly_is_zero(r):
                raise ArithmeticError("inexact content division")
            out.append(q)
    return out


def _qpoly_deg(coeffs) -> int:
    for d in range(len(coeffs) - 1, -1, -1):
        if not _zpoly_is_zero(coeffs[d]):
            return d
    return -1


def _qpoly_prem(a, b):
    """Pseudo-remainder of a by b, both dense lists of z-polys in q."""
    a = [dict(x) for x in a]
    da, db = _qpoly_deg(a), _qpoly_deg(b)
    lb = b[db]
    while da >= db:
        la = a[da]
        # a := lb * a - la * q^(da-db) * b
        newa = [_zpoly_mul(lb, x) for x in a]
        for k in range(db + 1):
            if not _zpoly_is_zero(b[k]):
                newa[da - db + k] = _zpoly_sub(newa[da - db + k], _zpoly_mul(la, b[k]))
        a = newa
        nda = _qpoly_deg(a)
        if nda == da:
            raise ArithmeticError("pseudo-division failed to reduce degree")
        da = nda
        if da < 0:
            break
    return a


def _from_qpolys(coeffs) -> Laurent:
    d: dict[Monomial, Fraction] = {}
    for i, a in enumerate(coeffs):
        for j, c in a.items():
            if c:
                d[(i, j)] = c
    return Laurent(d)


def laurent_gcd(f: Laurent, g: Laurent) -> Laurent:
    """Gcd of two Laurent polynomials, up to a unit (monomial and scalar).

    The result is a polynomial with min exponents (0, 0), normalised so the
    lexicographic leading coefficient is 1.
    """
    if f.is_zero():
        return _unit_normalise(g)
    if g.is_zero():
        return _unit_normalise(f)
    fi, fj = f.min_exponents()
    gi, gj = g.min_exponents()
    a = _to_qpolys(f.shift(-fi, -fj))
    b = _to_qpolys(g.shift(-gi, -gj))
    if _qpoly_deg(a) < _qpoly_deg(b):
        a, b = b, a
    ca, cb = _qpoly_content(a), _qpoly_content(b)
    a = _qpoly_exact_div_z(a, ca)
    b = _qpoly_exact_div_z(b, cb)
    cont = _zpoly_gcd(ca, cb)
    while True:
        if _qpoly_deg(b) < 0:
            break
        r = _qpoly_prem(a, b)
        if _qpoly_deg(r) < 0:
            a = b
            break
        cr = _qpoly_content(r)
        r = _qpoly_exact_div_z(r, cr)
        a, b = b, r
    res = _zpoly_mul_into(a, cont)
    return _unit_normalise(_from_qpolys(res))


def _zpoly_mul_into(coeffs, g):
    if _zpoly_is_zero(g) or (_zpoly_deg(g) == 0 and g.get(0) == 1):
        return coeffs
    return [_zpoly_mul(x, g) if not _zpoly_is_zero(x) else {} for x in coeffs]


def _unit_normalise(p: Laurent) -> Laurent:
    """Divide by the unit monomial: min exponents to (0,0), lex-lead coeff 1."""
    if p.is_zero():
        return p
    i0, j0 = p.min_exponents()
    p = p.shift(-i0, -j0)
    _, lc = p.leading()
    if lc != 1:
        p = p.scale(1 / lc)
    return p


def laurent_divexact(f: Laurent, g: Laurent) -> Laurent:
    """Exact division f / g; raises ArithmeticError when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return ZERO_L
    if g.is_monomial():
        (gi, gj), gc = g.leading()
        return f.shift(-gi, -gj).scale(1 / gc)
    fi, fj = f.min_exponents()
    gi, gj = g.min_exponents()
    fp = f.shift(-fi, -fj)
    gp = g.shift(-gi, -gj)
    # multivariate exact division by leading term, lex order on (q, z)
    quo: dict[Monomial, Fraction] = {}
    (li, lj), lc = gp.leading()
    rem = fp
    while not rem.is_zero():
        (ri, rj), rc = rem.leading()
        ti, tj = ri - li, rj - lj
        t = rc / lc
        quo[(ti, tj)] = t
        rem = rem - gp.shift(ti, tj).scale(t)
        if not rem.is_zero() and rem.leading()[0] >= (ri, rj):
            raise ArithmeticError("inexact division")
    return Laurent(quo).shift(fi - gi, fj - gj)


# -- the field Q(q, z) ---------------------------------------------------------


class Coeff:
    """An element of Q(q,z) as a canonical fraction of Laurent polynomials.

    Canonical form: gcd(num, den) is a unit, den has min exponents (0, 0)
    and lex-leading coefficient 1.  Two equal values always have identical
    representations, so __eq__ is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Laurent, den: Laurent = ONE_L, _reduced: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(q,z)")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash: int | None = None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_int(cls, c: RationalLike) -> "Coeff":
        return cls(Laurent.const(c), ONE_L, _reduced=True)

    @classmethod
    def monomial(cls, c: RationalLike, i: int, j: int = 0) -> "Coeff":
        return cls(Laurent.monomial(c, i, j), ONE_L, _reduced=True)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "Coeff") -> "Coeff":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return Coeff(self.num + other.num, self.den)
        return Coeff(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Coeff":
        out = Coeff.__new__(Coeff)
        out.num = -self.num
        out.den = self.den
        out._hash = None
        return out

    def __sub__(self, other: "Coeff") -> "Coeff":
        return self + (-other)

    def __mul__(self, other: "Coeff") -> "Coeff":
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        return Coeff(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Coeff") -> "Coeff":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,z)")
        if other.is_one():
            return self
        return Coeff(self.num * other.den, self.den * other.num)

    def inv(self) -> "Coeff":
        return ONE / self

    def __pow__(self, e: int) -> "Coeff":
        if e == 0:
            return ONE
        if e < 0:
            return self.inv() ** (-e)
        r = ONE
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    # -- involutions and substitutions --------------------------------------------

    def bar(self) -> "Coeff":
        """The bar map: q -> q^-1, z -> z^-1 (then renormalise)."""
        return Coeff(self.num.bar(), self.den.bar())

    def subst_z_qpow(self, npow: int) -> "Coeff":
        """Return the element of Q(q) obtained by the substitution z = q^npow."""
        return Coeff(self.num.subst_z_qpow(npow), self.den.subst_z_qpow(npow))

    def specialize(self, z_as: int | None, q_at: Fraction | None):
        """Substitute z = q^z_as, cancel, then evaluate at q = q_at.

        With q_at None the (reduced) element of Q(q) is returned; otherwise a
        Fraction.  Evaluating at a pole raises ZeroDivisionError.  The q -> 1
        limit is exactly specialize(z_as=N, q_at=Fraction(1)): cancellation
        happens before evaluation and stays in exact arithmetic.
        """
        f = self.subst_z_qpow(z_as) if z_as is not None else self
        if q_at is None:
            return f
        q0 = Fraction(q_at)
        if q0 == 0:
            raise ZeroDivisionError("q must be invertible")
        dv = f.den.eval_q(q0)
        if dv == 0:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return f.num.eval_q(q0) / dv

    # -- subring membership tests ----------------------------------------------

    def is_class(self, cls_name: str) -> bool:
        """Membership in the named subring.

        z_free      no z exponent anywhere (and no denominator),
        q_inv_poly  z-free polynomial in q^-1, zero constant term, integer coeffs,
        q_poly      same with q,
        laurent_q   z-free with integer coefficients.
        """
        if self.num.is_zero():
            return True
        if not self.den.is_one():
            return False
        p = self.num
        if not p.z_free():
            return False
        if cls_name == "z_free":
            return True
        if not p.integral():
            return False
        if cls_name == "laurent_q":
            return True
        if cls_name == "q_inv_poly":
            return all(i < 0 for (i, _) in p.terms)
        if cls_name == "q_poly":
            return all(i > 0 for (i, _) in p.terms)
        raise ValueError(f"unknown coefficient class {cls_name!r}")

    # -- rendering ----------------------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        ns = str(self.num)
        ds = str(self.den)
        if len(self.num.terms) > 1:
            ns = f"({ns})"
        if len(self.den.terms) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"Coeff({self})"


def _reduce(num: Laurent, den: Laurent) -> tuple[Laurent, Laurent]:
    if num.is_zero():
        return ZERO_L, ONE_L
    if den.is_monomial():
        (i, j), c = den.leading()
        return num.shift(-i, -j).scale(1 / c), ONE_L
    g = laurent_gcd(num, den)
    if not g.is_one():
        num = laurent_divexact(num, g)
        den = laurent_divexact(den, g)
    # unit normalisation of the denominator
    i0, j0 = den.min_exponents()
    num = num.shift(-i0, -j0)
    den = den.shift(-i0, -j0)
    _, lc = den.leading()
    if lc != 1:
        num = num.scale(1 / lc)
        den = den.scale(1 / lc)
    return num, den


# -- common constants -----------------------------------------------------------

ZERO = Coeff(ZERO_L, ONE_L, _reduced=True)
ONE = Coeff(ONE_L, ONE_L, _reduced=True)
Q = Coeff.monomial(1, 1, 0)
QINV = Coeff.monomial(1, -1, 0)
Z = Coeff.monomial(1, 0, 1)
ZINV = Coeff.monomial(1, 0, -1)
DELTA = Q - QINV                     # q - q^-1
OMEGA = (Z - ZINV) / DELTA           # (z - z^-1)/(q - q^-1), the loop scalar


def qpow(i: int) -> Coeff:
    return Coeff.monomial(1, i, 0)


def zpow(j: int) -> Coeff:
    return Coeff.monomial(1, 0, j)


def qbracket(a: int) -> Coeff:
    """The balanced q-integer (q^a - q^-a)/(q - q^-1)."""
    return (qpow(a) - qpow(-a)) / DELTA


# -- string parsing ---------------------------------------------------------------
#
# Grammar accepted (and produced by __str__): a signed sum of terms
# `c`, `c*q^i`, `q^i*z^j`, ... with `^` exponents omitted when 1, wrapped in
# optional parentheses, and `/` separating numerator and denominator.


def parse_coeff(text: str) -> Coeff:
    """Parse the rendering produced by Coeff.__str__ (lossless round-trip)."""
    text = text.strip()
    split = _split_fraction(text)
    if split is not None:
        ns, ds = split
        return Coeff(_parse_laurent(ns), _parse_laurent(ds))
    return Coeff(_parse_laurent(text), ONE_L)


def _split_fraction(text: str) -> tuple[str, str] | None:
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:pos], text[pos + 1 :]
    return None


def _parse_laurent(text: str) -> Laurent:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        depth = 0
        balanced = True
        for pos, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and pos != len(text) - 1:
                    balanced = False
                    break
        if balanced:
            text = text[1:-1].strip()
    if not text:
        raise ValueError("empty polynomial")
    # split into signed terms at top level; '-' after '^' is an exponent sign
    terms: dict[Monomial, Fraction] = {}
    chunks: list[tuple[int, str]] = []
    sign, buf = 1, []
    depth = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "^" and i + 1 < len(text) and text[i + 1] == "-":
            buf.append("^-")
            i += 2
            continue
        if ch in "+-" and depth == 0:
            if any(c not in " " for c in buf):
                chunks.append((sign, "".join(buf).strip()))
                buf = []
                sign = 1 if ch == "+" else -1
            else:
                if ch == "-":
                    sign = -sign
            i += 1
            continue
        buf.append(ch)
        i += 1
    if any(c not in " " for c in buf):
        chunks.append((sign, "".join(buf).strip()))
    for sgn, chunk in chunks:
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        c, (i_, j_) = _parse_term(chunk)
        m = (i_, j_)
        terms[m] = terms.get(m, Fraction(0)) + sgn * c
    return Laurent(terms)


def _parse_term(chunk: str) -> tuple[Fraction, Monomial]:
    coeff = Fraction(1)
    qi = zi = 0
    for factor in chunk.split("*"):
        factor = factor.strip()
        if not factor:
            raise ValueError(f"empty factor in {chunk!r}")
        if factor[0] == "q":
            qi += int(factor[2:]) if len(factor) > 1 else 1
        elif factor[0] == "z":
            zi += int(factor[2:]) if len(factor) > 1 else 1
        else:
            if factor.startswith("(") and factor.endswith(")"):
                factor = factor[1:-1]
            coeff *= Fraction(factor)
    return coeff, (qi, zi)
