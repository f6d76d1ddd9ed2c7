"""Exact coefficient fields and seeded specialization points.

Two scalar modes:

* fully specialized -- every scalar is a ``fractions.Fraction``.  The
  deformation parameters are built with fourth-root closure, q = q0^4 and
  t = t0^4, so all half and quarter powers appearing in free-field formulas
  (p^(1/2), (t/q)^(1/4), q^(1/2), ...) are themselves rational.

* one formal symbol -- scalars are univariate rational functions over Q.
  For the q-slot the internal variable is s = (q/t)^(1/2), i.e. q = t*s^2
  with t rational; every half-integer power of p = q/t is then an exact
  monomial in s, the q -> 0 limit is evaluation at s = 0, and poles at
  q = 0 are detected exactly from the reduced denominator.

Scalars of either kind mix freely with ints and Fractions through operator
overloading; generic code can use Fraction(0) and Fraction(1) as neutral
elements.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from typing import Callable, Sequence

from .combinat import enumerate_tuples


def stable_rng(*key) -> random.Random:
    """Process-independent RNG: str(key) hashed with sha256, not hash()."""
    digest = hashlib.sha256(repr(key).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class ScalarError(ArithmeticError):
    pass


class PoleAtZero(ScalarError):
    """Evaluation at the crystal point hit a pole."""


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Q


def _trim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class Poly:
    """Dense univariate polynomial over Fraction; index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, deg, c=1):
        return cls((0,) * deg + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    def scale(self, c):
        c = Fraction(c)
        return Poly(ci * c for ci in self.coeffs)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d, lead = other.degree, other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            k = len(rem) - 1
            if not rem[k]:
                rem.pop()
                continue
            f = rem[k] / lead
            quo[k - d] = f
            for j, c in enumerate(other.coeffs):
                rem[k - d + j] -= f * c
            rem.pop()
        return Poly(quo), Poly(rem)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(1 / a.coeffs[-1])  # monic

    def eval(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(%r)" % (self.coeffs,)


class RatFunc:
    """Reduced fraction of two Polys; denominator kept monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            g = num.gcd(den)
            if not g.is_zero() and g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.coeffs[-1]
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def variable(cls):
        return cls(Poly.monomial(1))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(Poly.const(other), reduce=False)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self):
        if not self.is_constant():
            raise ScalarError("not a constant: %r" % self)
        if self.num.is_zero():
            return Fraction(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (Fraction(1) / self) ** (-n)
        out = RatFunc(Poly.const(1), reduce=False)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.as_fraction())
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.num.is_zero()

    def eval(self, x):
        d = self.den.eval(x)
        if d == 0:
            raise PoleAtZero("pole at x=%s" % (x,))
        return self.num.eval(x) / d

    def has_pole_at(self, x) -> bool:
        return self.den.eval(x) == 0

    def __repr__(self):
        return "RatFunc(%r, %r)" % (self.num.coeffs, self.den.coeffs)


def as_fraction(x):
    """Collapse a scalar known to be constant down to a Fraction."""
    if isinstance(x, RatFunc):
        return x.as_fraction()
    return Fraction(x)


def scalar_to_json(x):
    """Rationals as "num/den" strings, rational functions as coefficient maps."""
    if isinstance(x, RatFunc):
        return {
            "num": [str(c) for c in x.num.coeffs],
            "den": [str(c) for c in x.den.coeffs],
        }
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# Specialization points


def _sample_fraction(rng, max_height=50):
    num = rng.randint(2, max_height)
    den = rng.randint(2, max_height)
    return Fraction(num, den)


class ScalarPoint:
    """A seeded specialization of (q, t, u_1..u_N) with fourth-root closure.

    q = q0^4 and t = t0^4 for rational q0, t0, so every fractional power used
    anywhere in the calculus is exact:  p^(1/2) = (q0/t0)^2,
    (t/q)^(1/4) = t0/q0, q^(1/2) = q0^2, and so on.

    With symbolic_slot='q' the scalar field becomes rational functions in
    s = (q/t)^(1/2); q = t*s^2 stays exact and the crystal limit q -> 0 is
    evaluation at s = 0.  Half powers of q itself are refused in that mode.
    """

    def __init__(self, seed, n_weights, level_max, symbolic_slot="none", _resample=0):
        if symbolic_slot not in ("none", "q", "lambda", "z"):
            raise ValueError("unknown symbolic slot %r" % symbolic_slot)
        self.seed = seed
        self.n_weights = n_weights
        self.level_max = level_max
        self.symbolic_slot = symbolic_slot
        rng = stable_rng("dimfock-point", seed, _resample)
        bound = 2 * level_max + 4
        for _ in range(1000):
            # small heights keep the bignum growth of high powers manageable
            q0 = _sample_fraction(rng, max_height=9)
            t0 = _sample_fraction(rng, max_height=9)
            if self._qt_ok(q0, t0, bound):
                break
        else:
            raise ScalarError("could not sample generic (q0, t0) after 1000 tries")
        self.q0, self.t0 = q0, t0
        self.u = self._sample_weights(rng, q0**4, t0**4, n_weights, 2 * level_max)
        self._rng_state = rng

    @staticmethod
    def _qt_ok(q0, t0, bound):
        q, t = q0**4, t0**4
        if q0 == 1 or t0 == 1 or q == t:
            return False
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if (a, b) != (0, 0) and q**a * t**b == 1:
                    return False
        return True

    @staticmethod
    def _sample_weights(rng, q, t, n, bound, forbid=()):
        for _ in range(1000):
            u = [_sample_fraction(rng) for _ in range(n)]
            ok = all(ui != 0 for ui in u)
            pool = list(u) + list(forbid)
            for i in range(len(pool)):
                for j in range(len(pool)):
                    if i == j or not ok:
                        continue
                    for r in range(-bound, bound + 1):
                        for s in range(-bound, bound + 1):
                            if pool[i] == q**r * t ** (-s) * pool[j]:
                                ok = False
                                break
                        if not ok:
                            break
            if ok:
                return u
        raise ScalarError("could not sample generic weights after 1000 tries")

    # -- field elements ------------------------------------------------

    @property
    def is_symbolic_q(self):
        return self.symbolic_slot == "q"

    def _sym(self):
        return RatFunc.variable()

    @property
    def t(self):
        return self.t0**4

    @property
    def q(self):
        if self.is_symbolic_q:
            return self._sym() ** 2 * self.t
        return self.q0**4

    @property
    def p(self):
        """p = q/t."""
        if self.is_symbolic_q:
            return self._sym() ** 2
        return (self.q0 / self.t0) ** 4

    def p_half(self, k=1):
        """p^(k/2) for any integer k."""
        if self.is_symbolic_q:
            return self._sym() ** k
        return (self.q0 / self.t0) ** (2 * k)

    def tq_quarter(self, k=1):
        """(t/q)^(k/4)."""
        if self.is_symbolic_q:
            raise ScalarError("quarter powers of q unavailable in symbolic-q mode")
        return (self.t0 / self.q0) ** k

    def q_half(self, k=1):
        """q^(k/2); refused when q is the formal symbol."""
        if self.is_symbolic_q:
            raise ScalarError("half powers of q unavailable in symbolic-q mode")
        return self.q0 ** (2 * k)

    def t_half(self, k=1):
        return self.t0 ** (2 * k)

    def q_pow(self, n):
        return self.q**n if n >= 0 else 1 / (self.q ** (-n))

    def t_pow(self, n):
        return self.t**n if n >= 0 else 1 / (self.t ** (-n))

    def at_crystal(self, x):
        """Evaluate a scalar at q = 0 (s = 0); raises PoleAtZero on a pole."""
        if isinstance(x, RatFunc):
            return x.eval(Fraction(0))
        return Fraction(x)

    # -- auxiliary generic parameters -----------------------------------

    def fresh_rational(self, tag, nonzero=True, not_one=True):
        """Deterministic extra generic rational attached to this point."""
        rng = stable_rng("dimfock-aux", self.seed, tag)
        while True:
            x = _sample_fraction(rng)
            if nonzero and x == 0:
                continue
            if not_one and x == 1:
                continue
            return x

    def with_weights(self, tag):
        """A sibling point sharing (q0, t0) but with fresh generic weights."""
        other = ScalarPoint.__new__(ScalarPoint)
        other.seed = self.seed
        other.n_weights = self.n_weights
        other.level_max = self.level_max
        other.symbolic_slot = self.symbolic_slot
        other.q0, other.t0 = self.q0, self.t0
        rng = stable_rng("dimfock-weights", self.seed, tag)
        other.u = self._sample_weights(
            rng, self.q0**4, self.t0**4, self.n_weights, 2 * self.level_max, forbid=tuple(self.u)
        )
        other._rng_state = rng
        return other

    def with_u(self, u):
        """Clone with explicitly prescribed weights (used for constrained points)."""
        return self.with_params(self.q0, self.t0, u)

    def with_params(self, q0, t0, u):
        """Clone with explicit fourth roots and weights."""
        other = ScalarPoint.__new__(ScalarPoint)
        other.seed = self.seed
        other.n_weights = len(u)
        other.level_max = self.level_max
        other.symbolic_slot = self.symbolic_slot
        other.q0, other.t0 = Fraction(q0), Fraction(t0)
        other.u = list(u)
        other._rng_state = stable_rng("dimfock-withu", self.seed)
        return other

    def describe(self):
        return {
            "seed": self.seed,
            "symbolic": self.symbolic_slot,
            "q0": str(self.q0),
            "t0": str(self.t0),
            "u": [str(x) for x in self.u],
        }


def eigenvalue_of(tup, point):
    """Eigenvalue sum_k u_k * e_{lambda^(k)} with e in terms of q, t."""
    q, t = point.q, point.t
    total = Fraction(0)
    for k, lam in enumerate(tup.components):
        e = Fraction(1)
        for i, part in enumerate(lam.parts, start=1):
            e = e + (t - 1) * (q**part - 1) * t ** (-i)
        total = total + point.u[k] * e
    return total


def make_point(seed, n_weights, level_max, symbolic_slot="none"):
    """Seeded generic point; resamples until eigenvalues separate."""
    for attempt in range(1000):
        pt = ScalarPoint(seed, n_weights, level_max, symbolic_slot, _resample=attempt)
        if _eigenvalues_separate(pt):
            return pt
    raise ScalarError("eigenvalue separation failed after 1000 resamples")


def _eigenvalues_separate(point) -> bool:
    # In symbolic-q mode separation is certified at the sampled rational q0:
    # distinct values there imply distinct rational functions.
    probe = _specialized_view(point) if point.is_symbolic_q else point
    for n in range(1, point.level_max + 1):
        seen = {}
        for tup in enumerate_tuples(point.n_weights, n):
            ev = eigenvalue_of(tup, probe)
            if ev in seen:
                return False
            seen[ev] = tup
    return True


def _specialized_view(point):
    view = ScalarPoint.__new__(ScalarPoint)
    view.seed = point.seed
    view.n_weights = point.n_weights
    view.level_max = point.level_max
    view.symbolic_slot = "none"
    view.q0, view.t0 = point.q0, point.t0
    view.u = point.u
    view._rng_state = None
    return view


def specialized_view(point):
    """The same point with the formal slot replaced by its sampled rational."""
    return _specialized_view(point)


# ---------------------------------------------------------------------------
# Truncated power series


class Series:
    """Dense truncated power series; ``order`` is the exclusive truncation."""

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var, order, coeffs=()):
        self.var = var
        self.order = order
        cs = list(coeffs)[:order]
        cs += [Fraction(0)] * (order - len(cs))
        self.coeffs = cs

    @classmethod
    def const(cls, var, order, c=1):
        return cls(var, order, [c])

    @classmethod
    def monomial(cls, var, order, deg, c=1):
        cs = [Fraction(0)] * order
        if deg < order:
            cs[deg] = c
        return cls(var, order, cs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other):
        if self.var != other.var:
            raise ScalarError("series variable mismatch: %s vs %s" % (self.var, other.var))
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        return Series(self.var, n, [self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other):
        n = self._check(other)
        return Series(self.var, n, [self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __mul__(self, other):
        n = self._check(other)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(self.var, n, out)

    def scale(self, c):
        return Series(self.var, self.order, [c * x for x in self.coeffs])

    def inverse(self):
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series has no constant term")
        inv = [1 / c0] + [Fraction(0)] * (self.order - 1)
        for k in range(1, self.order):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * inv[k - j]
            inv[k] = -acc / c0
        return Series(self.var, self.order, inv)

    def exp(self):
        if self.coeffs[0] != 0:
            raise ScalarError("exp needs zero constant term")
        out = Series.const(self.var, self.order)
        term = Series.const(self.var, self.order)
        for k in range(1, self.order):
            term = term * self
            term = term.scale(Fraction(1, k))
            out = out + term
        return out

    def log(self):
        if self.coeffs[0] != 1:
            raise ScalarError("log needs constant term 1")
        u = self - Series.const(self.var, self.order)
        out = Series(self.var, self.order)
        term = Series.const(self.var, self.order)
        sign = 1
        for k in range(1, self.order):
            term = term * u
            out = out + term.scale(Fraction(sign, k))
            sign = -sign
        return out

    def __eq__(self, other):
        n = self._check(other)
        return self.coeffs[:n] == other.coeffs[:n]

    def __repr__(self):
        return "Series(%r, %d, %r)" % (self.var, self.order, self.coeffs)


# ---------------------------------------------------------------------------
# Multi-point identity certification


def identity_check(
    f: Callable, g: Callable, n_points: int = 3, seeds: Sequence[int] = (), **point_kwargs
) -> bool:
    """Exact equality of two point evaluators at several independent points.

    Both callables receive a ScalarPoint and must return a scalar.  With
    three or more generic points this certifies the polynomial identities
    arising here with overwhelming margin; arithmetic is exact throughout.
    """
    seeds = list(seeds) or list(range(101, 101 + n_points))
    n_weights = point_kwargs.pop("n_weights", 2)
    level_max = point_kwargs.pop("level_max", 3)
    slot = point_kwargs.pop("symbolic_slot", "none")
    for seed in seeds[:n_points]:
        pt = make_point(seed, n_weights, level_max, slot)
        try:
            lhs, rhs = f(pt), g(pt)
        except ScalarError as exc:
            raise ScalarError("evaluator failed at point %r: %s" % (pt.describe(), exc))
        if lhs != rhs:
            return False
    return True
