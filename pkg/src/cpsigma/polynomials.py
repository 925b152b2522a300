"""Sparse bivariate polynomials over the Gaussian rationals.

Variables are called x and y throughout (they play the role of the two
commuting coordinates xi_plus and xi_minus). Term maps are canonical:
no zero coefficients are ever stored, so equal polynomials have equal maps.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GR_ONE, GR_ZERO, GaussianRational


def _coerce_scalar(c) -> GaussianRational:
    if isinstance(c, GaussianRational):
        return c
    return GaussianRational(c)


class BiPolynomial:
    """Finite map from exponent pairs (i, j) to nonzero Gaussian rationals."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for (i, j), c in terms.items():
                c = _coerce_scalar(c)
                if c:
                    cleaned[(i, j)] = c
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "BiPolynomial":
        return BiPolynomial()

    @staticmethod
    def const(c) -> "BiPolynomial":
        return BiPolynomial({(0, 0): _coerce_scalar(c)})

    @staticmethod
    def var_x() -> "BiPolynomial":
        return BiPolynomial({(1, 0): GR_ONE})

    @staticmethod
    def var_y() -> "BiPolynomial":
        return BiPolynomial({(0, 1): GR_ONE})

    @staticmethod
    def monomial(i: int, j: int, c=1) -> "BiPolynomial":
        return BiPolynomial({(i, j): _coerce_scalar(c)})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> GaussianRational:
        if self.is_zero():
            return GR_ZERO
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[(0, 0)]

    def lex_leading(self) -> tuple[tuple[int, int], GaussianRational]:
        """Leading term under lexicographic order with x before y."""
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms)
        return key, self.terms[key]

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, GR_ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPolynomial(out)

    def __sub__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, GR_ZERO) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPolynomial(out)

    def __neg__(self):
        return BiPolynomial({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPolynomial()
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, GR_ZERO) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return BiPolynomial(out)

    def scale(self, c) -> "BiPolynomial":
        c = _coerce_scalar(c)
        if not c:
            return BiPolynomial()
        return BiPolynomial({k: v * c for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and involution --------------------------------------

    def deriv_x(self) -> "BiPolynomial":
        return BiPolynomial(
            {(i - 1, j): c * i for (i, j), c in self.terms.items() if i > 0}
        )

    def deriv_y(self) -> "BiPolynomial":
        return BiPolynomial(
            {(i, j - 1): c * j for (i, j), c in self.terms.items() if j > 0}
        )

    def swap_conjugate(self) -> "BiPolynomial":
        """Swap x and y and conjugate every coefficient."""
        return BiPolynomial(
            {(j, i): c.conjugate() for (i, j), c in self.terms.items()}
        )

    def eval(self, xv: complex, yv: complex) -> complex:
        total = 0j
        for (i, j), c in self.terms.items():
            total += c.to_complex() * (xv ** i) * (yv ** j)
        return total

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            mono = "".join(
                [f"x^{i}" if i > 1 else ("x" if i == 1 else ""),
                 f"y^{j}" if j > 1 else ("y" if j == 1 else "")]
            )
            parts.append(f"{c}{('*' + mono) if mono else ''}")
        return " + ".join(parts)


X = BiPolynomial.var_x()
Y = BiPolynomial.var_y()
P_ONE = BiPolynomial.const(1)
ONE_PLUS_XY = P_ONE + X * Y


# ---------------------------------------------------------------------
# Exact division and gcd
# ---------------------------------------------------------------------

def try_exact_div(a: BiPolynomial, b: BiPolynomial):
    """Return a/b if b divides a exactly, else None."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return BiPolynomial()
    if b.is_constant():
        inv = b.constant_value().inverse()
        return a.scale(inv)
    (bi, bj), bc = b.lex_leading()
    quo = {}
    rem = dict(a.terms)
    while rem:
        key = max(rem)
        i, j = key
        if i < bi or j < bj:
            return None
        qk = (i - bi, j - bj)
        qc = rem[key] / bc
        quo[qk] = qc
        for (ti, tj), tc in b.terms.items():
            k = (qk[0] + ti, qk[1] + tj)
            s = rem.get(k, GR_ZERO) - qc * tc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return BiPolynomial(quo)


def exact_div(a: BiPolynomial, b: BiPolynomial) -> BiPolynomial:
    q = try_exact_div(a, b)
    if q is None:
        raise ValueError("inexact polynomial division")
    return q


# Univariate (in y) helpers; a poly is a list of GaussianRational, index = degree.

def _u_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _u_is_zero(p):
    return not p


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [GR_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return _u_trim(out)


def _u_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ca = a[i] if i < len(a) else GR_ZERO
        cb = b[i] if i < len(b) else GR_ZERO
        out.append(ca - cb)
    return _u_trim(out)


def _u_scale(a, c):
    if not c:
        return []
    return [ca * c for ca in a]


def _u_divmod(a, b):
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = list(a)
    q = [GR_ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] = a[d + i] - c * cb
        _u_trim(a)
    return _u_trim(q), a


def _u_gcd(a, b):
    """Monic gcd of univariate polynomials over the Gaussian rationals."""
    a, b = list(a), list(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _to_x_coeffs(p: BiPolynomial):
    """Represent p as a dense list over x-degree of univariate-in-y polys."""
    dx = p.degree_x()
    out = [[] for _ in range(dx + 1)]
    for (i, j), c in p.terms.items():
        col = out[i]
        while len(col) <= j:
            col.append(GR_ZERO)
        col[j] = c
    for col in out:
        _u_trim(col)
    return out


def _from_x_coeffs(cols) -> BiPolynomial:
    terms = {}
    for i, col in enumerate(cols):
        for j, c in enumerate(col):
            if c:
                terms[(i, j)] = c
    return BiPolynomial(terms)


def _content_pp(cols):
    """Content (univariate gcd of x-coefficients) and primitive part."""
    cont = []
    for col in cols:
        if not _u_is_zero(col):
            cont = _u_gcd(cont, col)
            if len(cont) == 1:
                break
    if not cont:
        return [], cols
    if len(cont) == 1 and cont[0] == GR_ONE:
        return cont, cols
    pp = []
    for col in cols:
        q, r = _u_divmod(col, cont)
        assert _u_is_zero(r)
        pp.append(q)
    return cont, pp


def _x_deg(cols):
    d = len(cols) - 1
    while d >= 0 and _u_is_zero(cols[d]):
        d -= 1
    return d


def _pseudo_rem(a, b):
    """Pseudo-remainder of a by b, both x-coefficient lists, deg a >= deg b."""
    da, db = _x_deg(a), _x_deg(b)
    r = [list(col) for col in a[: da + 1]]
    lb = b[db]
    while True:
        dr = _x_deg(r)
        if dr < db:
            break
        lr = r[dr]
        # r = lb*r - lr * x^(dr-db) * b
        shift = dr - db
        new_r = [_u_mul(col, lb) for col in r]
        for i in range(db + 1):
            new_r[shift + i] = _u_sub(new_r[shift + i], _u_mul(lr, b[i]))
        r = new_r[:dr]  # leading column cancels exactly
        while r and _u_is_zero(r[-1]):
            r.pop()
        if not r:
            break
    return r


def _strip_factor(p: BiPolynomial, f: BiPolynomial):
    """Largest e and q with p = f^e * q."""
    e = 0
    while True:
        q = try_exact_div(p, f)
        if q is None:
            return e, p
        p = q
        e += 1


def _monomial_gcd_strip(p: BiPolynomial):
    mi = min(i for i, _ in p.terms)
    mj = min(j for _, j in p.terms)
    if mi == 0 and mj == 0:
        return (0, 0), p
    stripped = BiPolynomial({(i - mi, j - mj): c for (i, j), c in p.terms.items()})
    return (mi, mj), stripped


def _lex_monic(p: BiPolynomial) -> BiPolynomial:
    if p.is_zero():
        return p
    _, lc = p.lex_leading()
    if lc == GR_ONE:
        return p
    return p.scale(lc.inverse())


def poly_gcd(a: BiPolynomial, b: BiPolynomial) -> BiPolynomial:
    """Lex-monic gcd via content / primitive-part recursion with x as the
    main variable, with fast paths for the monomial and (1 + xy) factors
    that dominate in this code base."""
    if a.is_zero():
        return _lex_monic(b)
    if b.is_zero():
        return _lex_monic(a)
    if a.is_constant() or b.is_constant():
        return P_ONE
    (ai, aj), a1 = _monomial_gcd_strip(a)
    (bi, bj), b1 = _monomial_gcd_strip(b)
    gi, gj = min(ai, bi), min(aj, bj)
    ea, a1 = _strip_factor(a1, ONE_PLUS_XY)
    eb, b1 = _strip_factor(b1, ONE_PLUS_XY)
    g = BiPolynomial.monomial(gi, gj) * ONE_PLUS_XY ** min(ea, eb)
    if a1.is_constant() or b1.is_constant():
        return _lex_monic(g)
    g = g * _core_gcd(a1, b1)
    return _lex_monic(g)


def _core_gcd(a: BiPolynomial, b: BiPolynomial) -> BiPolynomial:
    """Primitive pseudo-remainder sequence gcd, no fast-path structure."""
    if a == b:
        return a
    ca = _to_x_coeffs(a)
    cb = _to_x_coeffs(b)
    cont_a, pa = _content_pp(ca)
    cont_b, pb = _content_pp(cb)
    cont = _u_gcd(cont_a, cont_b)
    if _x_deg(pa) < _x_deg(pb):
        pa, pb = pb, pa
    while True:
        if _x_deg(pb) < 0:
            g = pa
            break
        r = _pseudo_rem(pa, pb)
        if not r or _x_deg(r) < 0:
            g = pb
            break
        _, r = _content_pp(r)
        pa, pb = pb, r
    _, g = _content_pp(g)
    result = _from_x_coeffs(g)
    if cont:
        cont_poly = BiPolynomial({(0, j): c for j, c in enumerate(cont) if c})
        result = result * cont_poly
    return result


def is_power_of(p: BiPolynomial, base: BiPolynomial) -> bool:
    """True if p is c * base^m for some scalar c and integer m >= 0."""
    if p.is_zero():
        return False
    p = _lex_monic(p)
    e, rest = _strip_factor(p, base)
    return rest.is_constant()


def binom_fraction(n: int, k: int) -> Fraction:
    from math import comb

    return Fraction(comb(n, k))
