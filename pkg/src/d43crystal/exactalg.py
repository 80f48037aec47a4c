"""Exact arithmetic kernel: rational functions in q, sparse Laurent
polynomials in spectral variables, and dense linear algebra over them.

Integer polynomials in q are plain tuples of ints, low degree first, with
no trailing zeros; () is the zero polynomial.  All arithmetic is exact;
no floating point appears anywhere in this package.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd


# ---------------------------------------------------------------------------
# integer-coefficient polynomials in q (tuples, low degree first)

P_ZERO = ()
P_ONE = (1,)


def p_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return p_trim(out)


def p_neg(a):
    return tuple(-c for c in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_mul(a, b):
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return p_trim(out)


def p_scale(a, n):
    if n == 0:
        return P_ZERO
    return tuple(c * n for c in a)


def p_content(a):
    g = 0
    for c in a:
        g = int_gcd(g, c)
    return g


def p_primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return P_ZERO
    g = p_content(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def p_eval(a, x):
    """Evaluate at a Fraction/int by Horner."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def p_gcd(a, b):
    """gcd in Z[q], primitive with positive leading coefficient."""
    if not a:
        return p_primitive(b)
    if not b:
        return p_primitive(a)
    # monic Euclid over Q, then take the primitive part
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb:
        if len(fa) < len(fb):
            fa, fb = fb, fa
            continue
        # fa -= (lead fa / lead fb) q^(deg difference) * fb
        while len(fa) >= len(fb) and fa:
            k = len(fa) - len(fb)
            m = fa[-1] / fb[-1]
            for i, c in enumerate(fb):
                fa[i + k] -= m * c
            while fa and fa[-1] == 0:
                fa.pop()
        fa, fb = fb, fa
    # fa is the gcd over Q; clear denominators
    den = 1
    for c in fa:
        den = den * c.denominator // int_gcd(den, c.denominator)
    return p_primitive([int(c * den) for c in fa])


def p_divexact(a, b):
    """Exact division in Z[q]; raises if not divisible."""
    if not a:
        return P_ZERO
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    fa = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while fa:
        if len(fa) < len(b):
            raise ArithmeticError("inexact polynomial division")
        k = len(fa) - len(b)
        m = fa[-1] / Fraction(b[-1])
        out[k] = m
        for i, c in enumerate(b):
            fa[i + k] -= m * c
        while fa and fa[-1] == 0:
            fa.pop()
    res = []
    for c in out:
        if c.denominator != 1:
            raise ArithmeticError("inexact polynomial division")
        res.append(int(c))
    return p_trim(res)


# ---------------------------------------------------------------------------
# QRat: canonical fractions of integer polynomials in q


class QRat:
    """Rational function in q over Z, in canonical reduced form.

    Invariants: gcd(num, den) = 1 in Z[q] (including integer content),
    den has positive leading coefficient and is never zero.  Structural
    equality is mathematical equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=P_ONE, _reduced=False):
        if isinstance(num, int):
            num = (num,) if num else P_ZERO
        if isinstance(den, int):
            den = (den,) if den else P_ZERO
        if not den:
            raise ZeroDivisionError("QRat with zero denominator")
        if not _reduced:
            num, den = _qr_reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        if self.den == other.den:
            return QRat(p_add(self.num, other.num), self.den)
        return QRat(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    def __sub__(self, other):
        if self.den == other.den:
            return QRat(p_sub(self.num, other.num), self.den)
        return QRat(
            p_sub(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    def __neg__(self):
        return QRat(p_neg(self.num), self.den, _reduced=True)

    def __mul__(self, other):
        if not self.num or not other.num:
            return QR_ZERO
        # cross-reduce before multiplying to keep degrees low; the primitive
        # parts end up coprime but the integer content still needs clearing
        g1 = p_gcd(self.num, other.den)
        g2 = p_gcd(other.num, self.den)
        n = p_mul(p_divexact(self.num, g1), p_divexact(other.num, g2))
        d = p_mul(p_divexact(self.den, g2), p_divexact(other.den, g1))
        c = int_gcd(p_content(n), p_content(d))
        if c > 1:
            n = tuple(v // c for v in n)
            d = tuple(v // c for v in d)
        if d[-1] < 0:
            n, d = p_neg(n), p_neg(d)
        return QRat(n, d, _reduced=True)

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("QRat division by zero")
        return self * QRat(other.den, other.num)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("QRat inverse of zero")
        return QRat(self.den, self.num)

    def subst_q(self, value):
        """Evaluate at an exact rational q-value."""
        den = p_eval(self.den, value)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at sample point")
        return Fraction(p_eval(self.num, value), 1) / den

    def bar(self):
        """The image under q -> 1/q."""
        if not self.num:
            return QR_ZERO
        dn, dd = len(self.num), len(self.den)
        num = p_trim(reversed(self.num))
        den = p_trim(reversed(self.den))
        # num(1/q) = rev(num)/q^(dn-1); shift the power gap onto one side
        if dn >= dd:
            den = (0,) * (dn - dd) + den
        else:
            num = (0,) * (dd - dn) + num
        return QRat(num, den)

    def is_kz(self):
        """True if the value lies in Z[q,1/q] localized at g(0)=1 denominators
        (i.e. denominator is a unit times a power of q)."""
        den = self.den
        v = 0
        while v < len(den) and den[v] == 0:
            v += 1
        stripped = den[v:]
        return stripped == (1,)

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self):
        def side(p):
            terms = []
            for i, c in enumerate(p):
                if not c:
                    continue
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*q" if c not in (1, -1) else ("-q" if c == -1 else "q"))
                else:
                    terms.append(
                        f"{c}*q^{i}" if c not in (1, -1) else (f"-q^{i}" if c == -1 else f"q^{i}")
                    )
            return " + ".join(terms).replace("+ -", "- ") if terms else "0"

        if self.den == P_ONE:
            return side(self.num)
        return f"({side(self.num)})/({side(self.den)})"


def _qr_reduce(num, den):
    if not num:
        return P_ZERO, P_ONE
    g = p_gcd(num, den)
    if g != P_ONE:
        num = p_divexact(num, g)
        den = p_divexact(den, g)
    # p_gcd is primitive, so shared integer content survives it
    c = int_gcd(p_content(num), p_content(den))
    if c > 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    if den[-1] < 0:
        num, den = p_neg(num), p_neg(den)
    return num, den


QR_ZERO = QRat(0)
QR_ONE = QRat(1)
QR_Q = QRat((0, 1))


def qrat(n, d=1):
    return QRat(n, d)


# quantum integers; node indices 0,1 use q, node 2 uses q^3
Q_POW = {0: 1, 1: 1, 2: 3}


@lru_cache(maxsize=None)
def q_int(m, i=0):
    """[m]_i = (q_i^m - q_i^-m)/(q_i - q_i^-1) with q_0 = q_1 = q, q_2 = q^3."""
    if m < 0:
        raise ValueError("q_int needs m >= 0")
    k = Q_POW[i]
    # q^(k(m-1)) * [m]_i = 1 + q^2k + ... + q^(2k(m-1))
    num = [0] * (2 * k * (m - 1) + 1) if m else []
    for j in range(m):
        num[2 * k * j] = 1
    den = [0] * (k * (m - 1) + 1) if m else [1]
    if m:
        den[-1] = 1
    else:
        den = [1]
    return QRat(tuple(num), tuple(den))


@lru_cache(maxsize=None)
def q_factorial(n, i=0):
    """[n]_i! = prod_{m=1..n} [m]_i."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    acc = QR_ONE
    for m in range(1, n + 1):
        acc = acc * q_int(m, i)
    return acc


def q_power(k):
    """q^k as a QRat, any integer k."""
    if k >= 0:
        return QRat((0,) * k + (1,))
    return QRat(P_ONE, (0,) * (-k) + (1,))


# ---------------------------------------------------------------------------
# sparse Laurent polynomials in several variables over QRat


class Laurent:
    """Sparse Laurent polynomial: map from exponent tuples to QRat.

    No zero coefficients are stored.  Arity is fixed per value; the two
    spectral variables x, y use arity 2 (LPoly2).
    """

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity, terms=None):
        self.arity = arity
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[e] = c
        self.terms = t
        self._hash = None

    @classmethod
    def const(cls, arity, c):
        if isinstance(c, int):
            c = QRat(c)
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def mono(cls, exps, c=QR_ONE):
        if isinstance(c, int):
            c = QRat(c)
        return cls(len(exps), {tuple(exps): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            acc = t.get(e)
            s = c if acc is None else acc + c
            if s:
                t[e] = s
            elif acc is not None:
                del t[e]
        out = Laurent(self.arity)
        out.terms = t
        return out

    def __neg__(self):
        out = Laurent(self.arity)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QRat):
            if not other:
                return Laurent(self.arity)
            out = Laurent(self.arity)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                acc = t.get(e)
                s = p if acc is None else acc + p
                if s:
                    t[e] = s
                elif acc is not None:
                    del t[e]
        out = Laurent(self.arity)
        out.terms = t
        return out

    __rmul__ = __mul__

    def subst(self, qval, values):
        """Exact evaluation at rational q and rational variable values."""
        acc = Fraction(0)
        for e, c in self.terms.items():
            m = c.subst_q(qval)
            for exp, v in zip(e, values):
                m *= Fraction(v) ** exp
            acc += m
        return acc

    def swap_xy(self):
        """Exchange the two variables (arity 2 only)."""
        out = Laurent(self.arity)
        out.terms = {(b, a): c for (a, b), c in self.terms.items()}
        return out

    def __repr__(self):
        if not self.terms:
            return "Laurent(0)"
        bits = [f"{e}:{c}" for e, c in sorted(self.terms.items())]
        return "Laurent(" + ", ".join(bits) + ")"


def lp2_const(c):
    return Laurent.const(2, c)


def lp2_z(k=1):
    """(x/y)^k as an LPoly2."""
    return Laurent.mono((k, -k))


def lp2_poly_z(coeffs):
    """Polynomial in z = x/y with QRat (or int) coefficients, low degree first."""
    t = {}
    for k, c in enumerate(coeffs):
        if isinstance(c, int):
            c = QRat(c)
        if c:
            t[(k, -k)] = c
    return Laurent(2, t)


LP2_ZERO = Laurent(2)
LP2_ONE = lp2_const(1)


# ---------------------------------------------------------------------------
# dense exact linear algebra (generic over any exact field element type)


class LinearSolution:
    """Result of exact Gaussian elimination: kind is 'unique',
    'parametrized' (particular + kernel basis) or 'inconsistent'."""

    def __init__(self, kind, particular=None, kernel=None):
        self.kind = kind
        self.particular = particular
        self.kernel = kernel or []


def solve_linear(rows, rhs, zero, one):
    """Solve A x = b exactly over a field.

    rows: list of rows of A; rhs: column b.  Returns a LinearSolution.
    Entries must support +, -, *, /, unary -, and truth-testing for zero.
    """
    m = len(rows)
    if len(rhs) != m:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    n = len(rows[0]) if m else 0
    for r in rows:
        if len(r) != n:
            raise ValueError("ragged matrix")
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    pivots = []
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, m):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = one / a[row][col]
        a[row] = [v * inv for v in a[row]]
        for r in range(m):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if a[r][n]:
            return LinearSolution("inconsistent")
    part = [zero] * n
    for r, col in enumerate(pivots):
        part[col] = a[r][n]
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return LinearSolution("unique", part)
    kernel = []
    for fc in free:
        vec = [zero] * n
        vec[fc] = one
        for r, col in enumerate(pivots):
            vec[col] = -a[r][fc]
        kernel.append(vec)
    return LinearSolution("parametrized", part, kernel)


def mat_mul(a, b, zero):
    """Dense product of two lists-of-lists with compatible shapes."""
    n, k = len(a), len(b)
    m = len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = zero
            for t in range(k):
                v = ai[t]
                if v:
                    acc = acc + v * b[t][j]
            row.append(acc)
        out.append(row)
    return out
