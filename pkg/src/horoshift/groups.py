"""Concrete groups with proper right-invariant distances.

Four families are supported:

* ``ZdLp`` -- Z^d with the l1, l2 or l-infinity norm.  Elements are int
  tuples.  l1/l-inf distances are exact integers; l2 distances are floats
  but every *comparison* (ball membership, symmetry checks) goes through
  exact squared-integer arithmetic.
* ``WeightedFreeAbelian`` -- the free abelian group on generators e_1, e_2,
  ... with norm sum(|x_i| * w(i)).  Elements are sorted tuples of
  (index, coefficient) pairs with no zero coefficients.
* ``DirectSumZ2`` -- infinite direct sum of Z/2Z with the same weighted
  norm.  Elements are frozensets of generator indices.
* ``BallSequenceGroup`` -- a metric induced by an explicit nested sequence
  of finite symmetric sets, checked by :func:`ball_sequence_check`.

Weighted instances require weights tending to infinity (finitely many
indices per weight bound); properness is enforced at construction time and
again during every enumeration.
"""

from fractions import Fraction
from itertools import product
import math

from .errors import InputError, ResourceBudgetError

DEFAULT_BALL_BUDGET = 500_000

# probe horizon for weight validation
_WEIGHT_PROBE = 4096


def _as_fraction(r):
    if isinstance(r, Fraction):
        return r
    if isinstance(r, int):
        return Fraction(r)
    if isinstance(r, float):
        return Fraction(r)  # exact binary value
    raise InputError(f"radius must be int/float/Fraction, got {type(r)!r}")


def _within(value, radius_sq_or_lin, closed):
    return value <= radius_sq_or_lin if closed else value < radius_sq_or_lin


class ZdLp:
    """Z^d with an l^p norm, p in {1, 2, inf}."""

    def __init__(self, dim, p):
        if dim < 1:
            raise InputError(f"dimension must be >= 1, got {dim}")
        if p not in (1, 2, "inf", math.inf):
            raise InputError(f"p must be 1, 2 or 'inf', got {p!r}")
        self.dim = dim
        self.p = "inf" if p == math.inf else p

    def __repr__(self):
        return f"ZdLp({self.dim}, {self.p!r})"

    def identity(self):
        return (0,) * self.dim

    def check(self, g):
        if len(g) != self.dim:
            raise InputError(f"element {g} has dimension {len(g)}, group has {self.dim}")
        return tuple(int(c) for c in g)

    def op(self, g, h):
        return tuple(a + b for a, b in zip(self.check(g), self.check(h)))

    def inv(self, g):
        return tuple(-a for a in self.check(g))

    def norm_exact(self, g):
        """For l1/linf the norm itself; for l2 the *squared* norm (an int)."""
        g = self.check(g)
        if self.p == 1:
            return sum(abs(c) for c in g)
        if self.p == "inf":
            return max(abs(c) for c in g)
        return sum(c * c for c in g)

    def norm(self, g):
        n = self.norm_exact(g)
        return math.sqrt(n) if self.p == 2 else n

    def dist(self, g, h):
        return self.norm(self.op(g, self.inv(h)))

    def dist_lt(self, g, h, radius, closed=False):
        """Exact comparison d(g, h) < radius (or <= when closed)."""
        r = _as_fraction(radius)
        if r < 0:
            return False
        e = self.norm_exact(self.op(g, self.inv(h)))
        bound = r * r if self.p == 2 else r
        return _within(e, bound, closed)

    def busemann(self, g, x):
        """b_g(x) = d(g, x) - d(g, 1); exact int for l1/linf, stable float for l2."""
        g, x = self.check(g), self.check(x)
        if self.p != 2:
            return self.dist(g, x) - self.norm(g)
        # (|g-x|^2 - |g|^2) / (|g-x| + |g|) avoids catastrophic cancellation
        num = sum(c * c for c in x) - 2 * sum(a * b for a, b in zip(g, x))
        if num == 0:
            return 0.0
        den = self.dist(g, x) + self.norm(g)
        if den == 0.0:
            raise InputError("busemann undefined for g = identity = x")
        return num / den

    def ball(self, center, radius, closed=False, budget=DEFAULT_BALL_BUDGET):
        """Exact enumeration of the (open or closed) ball around ``center``."""
        center = self.check(center)
        r = _as_fraction(radius)
        if r < 0:
            raise InputError(f"radius must be >= 0, got {radius}")
        reach = math.floor(r) if closed else math.ceil(r) - 1
        reach = max(reach, 0)
        if (2 * reach + 1) ** self.dim > budget:
            raise ResourceBudgetError(
                f"ball of radius {radius} in Z^{self.dim} exceeds budget {budget}",
                budget=budget,
            )
        out = set()
        bound = r * r if self.p == 2 else r
        for offs in product(range(-reach, reach + 1), repeat=self.dim):
            if self.p == 1:
                e = sum(abs(c) for c in offs)
            elif self.p == "inf":
                e = max(abs(c) for c in offs) if offs else 0
            else:
                e = sum(c * c for c in offs)
            if _within(e, bound, closed):
                out.add(tuple(c + o for c, o in zip(center, offs)))
        return out


class _Weights:
    """Validated weight function i -> w(i) >= 1, nondecreasing, unbounded."""

    def __init__(self, weight):
        if isinstance(weight, str):
            if weight != "index":
                raise InputError(f"unknown weight rule {weight!r}")
            weight = lambda i: i  # noqa: E731
        self.fn = weight
        prev = None
        for i in range(1, 65):
            w = weight(i)
            if w < 1:
                raise InputError(f"weight w({i}) = {w} < 1")
            if prev is not None and w < prev:
                raise InputError(f"weights must be nondecreasing, w({i}) = {w} < w({i - 1}) = {prev}")
            prev = w
        if weight(_WEIGHT_PROBE) <= weight(1):
            raise InputError(
                "weights must tend to infinity (finitely many indices per bound); "
                f"w({_WEIGHT_PROBE}) = w(1) = {weight(1)} looks bounded, rejecting"
            )

    def indices_upto(self, bound, closed):
        """All generator indices whose weight is < bound (<= when closed)."""
        out = []
        i = 1
        prev = None
        while True:
            w = self.fn(i)
            if prev is not None and w < prev:
                raise InputError(f"weights must be nondecreasing, w({i}) = {w}")
            prev = w
            if not _within(Fraction(w), bound, closed):
                return out
            out.append(i)
            if i > _WEIGHT_PROBE:
                raise ResourceBudgetError(
                    f"more than {_WEIGHT_PROBE} generator indices below weight bound "
                    f"{bound}; weights not proper enough",
                    budget=_WEIGHT_PROBE,
                )
            i += 1


class WeightedFreeAbelian:
    """Free abelian group on e_1, e_2, ... with norm sum |x_i| w(i).

    Elements are sorted tuples of (index, coeff) pairs, coeff != 0.
    """

    def __init__(self, weight="index"):
        self.weights = _Weights(weight)

    def __repr__(self):
        return "WeightedFreeAbelian()"

    def identity(self):
        return ()

    def check(self, g):
        g = tuple(sorted((int(i), int(c)) for i, c in g))
        seen = set()
        for i, c in g:
            if i < 1:
                raise InputError(f"generator index {i} < 1")
            if c == 0:
                raise InputError(f"zero coefficient at index {i}")
            if i in seen:
                raise InputError(f"duplicate index {i}")
            seen.add(i)
        return g

    @staticmethod
    def element(mapping):
        """Build an element from an index -> coefficient mapping."""
        return tuple(sorted((i, c) for i, c in dict(mapping).items() if c != 0))

    def op(self, g, h):
        acc = dict(self.check(g))
        for i, c in self.check(h):
            acc[i] = acc.get(i, 0) + c
        return self.element(acc)

    def inv(self, g):
        return tuple((i, -c) for i, c in self.check(g))

    def norm(self, g):
        return sum(abs(c) * self.weights.fn(i) for i, c in self.check(g))

    norm_exact = norm

    def dist(self, g, h):
        return self.norm(self.op(g, self.inv(h)))

    def dist_lt(self, g, h, radius, closed=False):
        return _within(Fraction(self.dist(g, h)), _as_fraction(radius), closed)

    def busemann(self, g, x):
        return self.dist(g, x) - self.norm(g)

    def ball(self, center, radius, closed=False, budget=DEFAULT_BALL_BUDGET):
        center = self.check(center)
        r = _as_fraction(radius)
        if r < 0:
            raise InputError(f"radius must be >= 0, got {radius}")
        idxs = self.weights.indices_upto(r, closed)
        out = set()

        def rec(pos, remaining, acc):
            if len(out) > budget:
                raise ResourceBudgetError(
                    f"ball enumeration exceeds budget {budget}", budget=budget,
                    count=len(out),
                )
            if pos == len(idxs):
                g = tuple(acc)
                if _within(r - remaining, r, closed):
                    out.add(self.op(g, center))
                return
            i = idxs[pos]
            w = Fraction(self.weights.fn(i))
            c = 0
            while Fraction(abs(c)) * w <= remaining:
                cost = Fraction(abs(c)) * w
                if c:
                    acc.append((i, c))
                rec(pos + 1, remaining - cost, acc)
                if c:
                    acc.pop()
                    acc.append((i, -c))
                    rec(pos + 1, remaining - cost, acc)
                    acc.pop()
                c += 1
            return

        rec(0, r, [])
        return out


class DirectSumZ2:
    """Infinite direct sum of Z/2Z with weighted norm; elements are frozensets."""

    def __init__(self, weight="index"):
        self.weights = _Weights(weight)

    def __repr__(self):
        return "DirectSumZ2()"

    def identity(self):
        return frozenset()

    def check(self, g):
        g = frozenset(int(i) for i in g)
        for i in g:
            if i < 1:
                raise InputError(f"generator index {i} < 1")
        return g

    def op(self, g, h):
        return self.check(g) ^ self.check(h)

    def inv(self, g):
        return self.check(g)

    def norm(self, g):
        return sum(self.weights.fn(i) for i in self.check(g))

    norm_exact = norm

    def dist(self, g, h):
        return self.norm(self.op(g, h))

    def dist_lt(self, g, h, radius, closed=False):
        return _within(Fraction(self.dist(g, h)), _as_fraction(radius), closed)

    def busemann(self, g, x):
        return self.dist(g, x) - self.norm(g)

    def ball(self, center, radius, closed=False, budget=DEFAULT_BALL_BUDGET):
        center = self.check(center)
        r = _as_fraction(radius)
        if r < 0:
            raise InputError(f"radius must be >= 0, got {radius}")
        idxs = self.weights.indices_upto(r, closed)
        out = set()

        def rec(pos, remaining, acc):
            if len(out) > budget:
                raise ResourceBudgetError(
                    f"ball enumeration exceeds budget {budget}", budget=budget,
                    count=len(out),
                )
            if pos == len(idxs):
                g = frozenset(acc)
                if _within(Fraction(self.norm(g)), r, closed):
                    out.add(g ^ center)
                return
            rec(pos + 1, remaining, acc)
            w = Fraction(self.weights.fn(idxs[pos]))
            if w <= remaining:
                acc.append(idxs[pos])
                rec(pos + 1, remaining - w, acc)
                acc.pop()

        rec(0, r, [])
        return out


class BallSequenceViolation:
    """First failed axiom of a ball-sequence construction."""

    def __init__(self, axiom, n, m=None, element=None):
        self.axiom = axiom
        self.n = n
        self.m = m
        self.element = element

    def __repr__(self):
        return (f"BallSequenceViolation(axiom={self.axiom!r}, n={self.n}, "
                f"m={self.m}, element={self.element!r})")


class BallSequenceReport:
    def __init__(self, ok, cutoff, violation=None, group=None):
        self.ok = ok
        self.cutoff = cutoff
        self.violation = violation
        self.group = group


def _tuple_op(g, h):
    return tuple(a + b for a, b in zip(g, h))


def _tuple_inv(g):
    return tuple(-a for a in g)


def ball_sequence_check(sets, cutoff=None, op=_tuple_op, inv=_tuple_inv, identity=None):
    """Check B_0 = {1}, nesting, symmetry and B_n B_m <= B_{n+m} up to the cutoff.

    On success returns a report whose ``group`` is a :class:`BallSequenceGroup`
    carrying the induced metric d(g, h) = min { n : g h^-1 in B_n }.
    """
    sets = [frozenset(s) for s in sets]
    if cutoff is None:
        cutoff = len(sets) - 1
    if cutoff >= len(sets):
        raise InputError(f"cutoff {cutoff} exceeds the {len(sets)} provided sets")
    if identity is None:
        some = next(iter(sets[0])) if sets[0] else None
        identity = tuple(0 for _ in some) if some is not None else None
    if sets[0] != frozenset([identity]):
        return BallSequenceReport(False, cutoff, BallSequenceViolation("identity", 0))
    for n in range(cutoff + 1):
        for g in sets[n]:
            if inv(g) not in sets[n]:
                return BallSequenceReport(
                    False, cutoff, BallSequenceViolation("symmetry", n, element=g))
        if n > 0 and not sets[n - 1] <= sets[n]:
            bad = next(iter(sets[n - 1] - sets[n]))
            return BallSequenceReport(
                False, cutoff, BallSequenceViolation("nesting", n, element=bad))
    for n in range(cutoff + 1):
        for m in range(cutoff + 1 - n):
            for g in sets[n]:
                for h in sets[m]:
                    if op(g, h) not in sets[n + m]:
                        return BallSequenceReport(
                            False, cutoff,
                            BallSequenceViolation("product", n, m, op(g, h)))
    group = BallSequenceGroup(sets, cutoff, op, inv, identity)
    return BallSequenceReport(True, cutoff, group=group)


class BallSequenceGroup:
    """Metric induced by a checked ball sequence, valid up to its cutoff."""

    def __init__(self, sets, cutoff, op, inv, identity_elt):
        self.sets = sets
        self.cutoff = cutoff
        self._op = op
        self._inv = inv
        self._identity = identity_elt

    def identity(self):
        return self._identity

    def op(self, g, h):
        return self._op(g, h)

    def inv(self, g):
        return self._inv(g)

    def norm(self, g):
        for n in range(self.cutoff + 1):
            if g in self.sets[n]:
                return n
        raise InputError(f"element {g!r} outside the cutoff-{self.cutoff} ball sequence")

    norm_exact = norm

    def dist(self, g, h):
        return self.norm(self.op(g, self.inv(h)))

    def dist_lt(self, g, h, radius, closed=False):
        return _within(Fraction(self.dist(g, h)), _as_fraction(radius), closed)

    def busemann(self, g, x):
        return self.dist(g, x) - self.norm(g)

    def ball(self, center, radius, closed=False, budget=DEFAULT_BALL_BUDGET):
        r = _as_fraction(radius)
        n = math.floor(r) if closed else math.ceil(r) - 1
        if n < 0:
            return set()
        if n > self.cutoff:
            raise ResourceBudgetError(
                f"radius {radius} beyond ball-sequence cutoff {self.cutoff}",
                budget=self.cutoff)
        return {self.op(g, center) for g in self.sets[n]}
