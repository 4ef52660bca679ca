"""Horofunctions and horoballs.

Three representations:

* ``Linear`` -- the l2 horofunctions on Z^d, x -> <x, v> for a unit vector
  v.  When v is proportional to an integer vector, sign queries (and hence
  horoball membership) are exact integer arithmetic.
* ``PolyhedralZ2`` -- the l1 horofunctions on Z^2: two half-planes per
  diagonal border line, and quarter spaces whose apex slides along a
  boundary ray of the cone.  Values are exact integers.
* ``Sampled`` -- a truncated limit b_{g_n} along an explicit generating
  sequence.  Evaluation reports the value at the truncation index together
  with a stabilization span; it never claims convergence.

The horoball of a horofunction j is the strict sublevel set {j < 0}.
"""

from fractions import Fraction
import math

from .errors import InputError, ResourceBudgetError
from .groups import ZdLp, _as_fraction


def _gcd_reduce(vec):
    g = 0
    for c in vec:
        g = math.gcd(g, abs(c))
    if g == 0:
        return None
    return tuple(c // g for c in vec)


class Linear:
    """l2 horofunction x -> <x, v> on Z^d, v the outgoing unit normal."""

    kind = "linear"

    def __init__(self, v):
        v = tuple(v)
        if all(abs(c) < 1e-15 for c in v):
            raise InputError("direction vector must be nonzero")
        if all(float(c).is_integer() for c in v):
            self.int_dir = _gcd_reduce(tuple(int(c) for c in v))
        else:
            fracs = [Fraction(c).limit_denominator(10 ** 9) for c in v]
            if all(abs(float(f) - float(c)) < 1e-12 for f, c in zip(fracs, v)):
                den = math.lcm(*(f.denominator for f in fracs))
                self.int_dir = _gcd_reduce(tuple(int(f * den) for f in fracs))
            else:
                self.int_dir = None
        nrm = math.sqrt(sum(float(c) * float(c) for c in v))
        self.v = tuple(float(c) / nrm for c in v)
        self.dim = len(v)

    def __repr__(self):
        return f"Linear({self.v})"

    def value(self, x):
        return sum(a * b for a, b in zip(x, self.v))

    def sign(self, x):
        """Exact sign of j(x) when the direction is rational, float otherwise."""
        if self.int_dir is not None:
            s = sum(a * b for a, b in zip(x, self.int_dir))
            return (s > 0) - (s < 0)
        s = self.value(x)
        return (s > 0) - (s < 0)


class PolyhedralZ2:
    """An l1 horofunction of Z^2, with exact integer values.

    kind "halfplane-diagonal"      j = side * (x - y)       H = {side*(x-y) < 0}
    kind "halfplane-antidiagonal"  j = side * (x + y)
    kind "quarter-space"           j = |t - b| - s*(opening axis), apex (a, b)

    Quarter spaces open along one of the four axis directions; an apex
    (a, b) describes a genuine horofunction (j vanishing at the identity)
    exactly when it lies on a boundary ray of the cone, e.g. a = -|b| for
    an +x opening.  Arbitrary apexes are allowed so that set translates can
    be represented; ``is_horofunction`` tells them apart.
    """

    kind = "polyhedral-z2"
    OPENINGS = ("+x", "-x", "+y", "-y")

    def __init__(self, shape, apex=(0, 0), side=None, opening=None):
        if shape not in ("halfplane-diagonal", "halfplane-antidiagonal", "quarter-space"):
            raise InputError(f"unknown polyhedral shape {shape!r}")
        self.shape = shape
        self.apex = (int(apex[0]), int(apex[1]))
        if shape == "quarter-space":
            if opening not in self.OPENINGS:
                raise InputError(f"quarter-space needs opening in {self.OPENINGS}")
            self.opening = opening
            self.side = None
        else:
            if side not in (1, -1):
                raise InputError("half-plane needs side +1 or -1")
            self.side = side
            self.opening = None

    def __repr__(self):
        if self.shape == "quarter-space":
            return f"PolyhedralZ2({self.shape!r}, apex={self.apex}, opening={self.opening!r})"
        return f"PolyhedralZ2({self.shape!r}, side={self.side})"

    def value(self, p):
        x, y = int(p[0]), int(p[1])
        a, b = self.apex
        if self.shape == "halfplane-diagonal":
            return self.side * (x - y)
        if self.shape == "halfplane-antidiagonal":
            return self.side * (x + y)
        if self.opening == "+x":
            return abs(y - b) - (x - a)
        if self.opening == "-x":
            return abs(y - b) + (x - a)
        if self.opening == "+y":
            return abs(x - a) - (y - b)
        return abs(x - a) + (y - b)

    def sign(self, p):
        v = self.value(p)
        return (v > 0) - (v < 0)

    @property
    def is_horofunction(self):
        return self.value((0, 0)) == 0

    def translate(self, g):
        """The set translate H + g, as a polyhedral descriptor."""
        if self.shape == "quarter-space":
            return PolyhedralZ2(self.shape,
                                apex=(self.apex[0] + g[0], self.apex[1] + g[1]),
                                opening=self.opening)
        # translating a half-plane along its border is the identity; across
        # the border it is no longer a horoball, so refuse silently shifting
        x, y = g
        delta = (x - y) if self.shape == "halfplane-diagonal" else (x + y)
        if delta != 0:
            raise InputError("translating a half-plane off its border line "
                             "does not yield an l1 horoball")
        return self


class Sampled:
    """Truncated-limit horofunction along an explicit generating sequence.

    ``gen`` maps n >= 1 to a group element; ``n_star`` is the truncation
    index.  Evaluations return the value of b_{g_{n*}} together with a
    stabilization span, the max-min of the sampled values over the last
    quarter of the sample indices.
    """

    kind = "sampled"

    def __init__(self, group, gen, n_star, samples=48, span_tolerance=1e-6):
        if n_star < 1:
            raise InputError(f"truncation index must be >= 1, got {n_star}")
        self.group = group
        self.gen = gen if callable(gen) else (lambda n, seq=list(gen): seq[n - 1])
        if not callable(gen):
            n_star = min(n_star, len(list(gen)))
        self.n_star = n_star
        self.span_tolerance = span_tolerance
        # log-spaced sample indices ending at the truncation index
        pts = sorted({max(1, round(n_star ** (k / (samples - 1)))) for k in range(samples)} | {n_star})
        self.sample_indices = pts

    def value_with_span(self, x):
        vals = [self.group.busemann(self.gen(n), x) for n in self.sample_indices]
        tail = vals[-max(1, len(vals) // 4):]
        span = max(tail) - min(tail)
        return vals[-1], span

    def value(self, x):
        return self.value_with_span(x)[0]

    def sign(self, x):
        v = self.value(x)
        return (v > 0) - (v < 0)

    def is_stable(self, x):
        return self.value_with_span(x)[1] <= self.span_tolerance


class Horoball:
    """Strict sublevel set {j < 0} of a horofunction."""

    def __init__(self, horofunction):
        self.j = horofunction

    def __repr__(self):
        return f"Horoball({self.j!r})"

    def contains(self, x):
        return self.j.sign(x) < 0


def l2_horoball(v):
    """The open half-space horoball {x : <x, v> < 0} with outgoing normal v."""
    return Horoball(Linear(v))


def sampled_l1_horoball_z2(ray, n_star=512):
    """Truncated l1 horoball of Z^2 generated by centers t * ray."""
    ray = (int(ray[0]), int(ray[1]))
    if ray == (0, 0):
        raise InputError("ray must be nonzero")
    group = ZdLp(2, 1)
    return Horoball(Sampled(group, lambda n: (n * ray[0], n * ray[1]), n_star))


def polyhedral_from_ray(ray):
    """Exact l1 horofunction obtained as the limit of balls centered on t*ray.

    Rays strictly inside a quadrant give half-planes; axis rays give
    quarter spaces; diagonal rays give the diagonal half-planes.
    """
    p, q = int(ray[0]), int(ray[1])
    if (p, q) == (0, 0):
        raise InputError("ray must be nonzero")
    if p > 0 and q > 0:
        return PolyhedralZ2("halfplane-antidiagonal", side=-1)   # H = {x+y > 0}
    if p < 0 and q < 0:
        return PolyhedralZ2("halfplane-antidiagonal", side=1)    # H = {x+y < 0}
    if p > 0 and q < 0:
        return PolyhedralZ2("halfplane-diagonal", side=-1)       # H = {x-y > 0}
    if p < 0 and q > 0:
        return PolyhedralZ2("halfplane-diagonal", side=1)        # H = {x-y < 0}
    if q == 0:
        return PolyhedralZ2("quarter-space", apex=(0, 0),
                            opening="+x" if p > 0 else "-x")
    return PolyhedralZ2("quarter-space", apex=(0, 0),
                        opening="+y" if q > 0 else "-y")


def _quarter_apexes(opening, reach):
    """Apexes along the valid boundary rays for a given opening."""
    out = []
    for t in range(-reach, reach + 1):
        if opening == "+x":
            out.append((-abs(t), t))
        elif opening == "-x":
            out.append((abs(t), t))
        elif opening == "+y":
            out.append((t, -abs(t)))
        else:
            out.append((t, abs(t)))
    return sorted(set(out))


def enumerate_l1_horoballs_z2(window):
    """All l1 horoballs of Z^2 with distinct traces on the given box.

    ``window`` is (xmin, xmax, ymin, ymax), inclusive.  Returns
    PolyhedralZ2 descriptors: the four half-planes plus quarter spaces
    (4 openings x apexes near the window), deduplicated by their trace.
    """
    xmin, xmax, ymin, ymax = window
    cells = [(x, y) for x in range(xmin, xmax + 1) for y in range(ymin, ymax + 1)]
    reach = max(xmax - xmin, ymax - ymin) + max(abs(xmin), abs(xmax), abs(ymin), abs(ymax)) + 1
    candidates = []
    for shape in ("halfplane-diagonal", "halfplane-antidiagonal"):
        for side in (1, -1):
            candidates.append(PolyhedralZ2(shape, side=side))
    for opening in PolyhedralZ2.OPENINGS:
        for apex in _quarter_apexes(opening, reach):
            candidates.append(PolyhedralZ2("quarter-space", apex=apex, opening=opening))
    seen = {}
    for h in candidates:
        trace = frozenset(c for c in cells if h.sign(c) < 0)
        if trace not in seen:
            seen[trace] = h
    return list(seen.values())


class LargenessResult:
    """Outcome of a search for a radius-R ball inside a horoball."""

    def __init__(self, found, center=None, radius=None, search_bound=None,
                 ball_size=None):
        self.found = found
        self.center = center
        self.radius = radius
        self.search_bound = search_bound
        self.ball_size = ball_size

    def __repr__(self):
        if self.found:
            return f"LargenessResult(center={self.center!r}, radius={self.radius})"
        return f"LargenessResult(not found within bound {self.search_bound})"


def largeness_certificate(group, horoball, R, search_bound, ball_budget=500_000):
    """Search for g with j(g) < -4R, then certify B_R(g) inside the horoball.

    Follows the large-horoball argument: a point deep enough below level 0
    carries a whole ball inside {j < 0}; the returned center is re-verified
    by exact enumeration.  Exhausting the search bound is NOT evidence of
    smallness; it is reported as a bounded-search failure.
    """
    if R <= 0:
        raise InputError(f"R must be > 0, got {R}")
    candidates = group.ball(group.identity(), search_bound, closed=True,
                            budget=ball_budget)
    ordered = sorted(candidates, key=lambda g: (group.norm_exact(g), repr(g)))
    j = horoball.j
    for g in ordered:
        if j.value(g) < -4 * R:
            ball = group.ball(g, R, closed=False, budget=ball_budget)
            if all(horoball.contains(x) for x in ball):
                return LargenessResult(True, center=g, radius=R,
                                       search_bound=search_bound,
                                       ball_size=len(ball))
    return LargenessResult(False, search_bound=search_bound, radius=R)


class MeetingRadiusReport:
    def __init__(self, N, witnesses):
        self.N = N
        self.witnesses = witnesses  # direction -> (lattice point, squared norm)


def direction_grid_2d(n):
    """n unit directions uniformly spaced on the circle."""
    return [(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
            for k in range(n)]


def meeting_radius(group, directions):
    """Smallest integer N with H_v meeting the open ball B_N(0) for every v.

    Works for ZdLp l2 instances.  For each direction the witness is the
    minimum-norm lattice point with <p, v> < 0; N is the smallest integer
    exceeding every witness norm.
    """
    if not isinstance(group, ZdLp) or group.p != 2:
        raise InputError("meeting_radius expects a ZdLp l2 group")
    d = group.dim
    from itertools import product as iproduct
    candidates = sorted(
        (p for p in iproduct((-1, 0, 1), repeat=d) if any(p)),
        key=lambda p: (sum(c * c for c in p), p))
    witnesses = {}
    worst = 0
    for v in directions:
        found = None
        for p in candidates:
            if sum(a * b for a, b in zip(p, v)) < 0:
                found = p
                break
        if found is None:
            raise InputError(f"no witness among unit-box lattice points for {v}")
        n2 = sum(c * c for c in found)
        witnesses[tuple(v)] = (found, n2)
        worst = max(worst, n2)
    N = math.isqrt(worst) + 1
    return MeetingRadiusReport(N, witnesses)


def _lt_sqrt_plus(a2, b2, eps):
    """Exact test sqrt(a2) < sqrt(b2) + eps for integers a2, b2 and rational eps."""
    eps = _as_fraction(eps)
    L = Fraction(a2) - Fraction(b2) - eps * eps
    if L < 0:
        return True
    return L * L < 4 * eps * eps * Fraction(b2)


class TangencyCheck:
    def __init__(self, passed, horoball=None, offending=None, g=None):
        self.passed = passed
        self.horoball = horoball
        self.offending = offending
        self.g = g


def verify_tangency(group, M, eps, g):
    """Check that the closed horoball cap of radius M, translated by g,
    stays within eps of the ball of radius d(g, 1).

    The horoball is proposed from the direction of g (Linear with v = g/|g|
    for l2).  The check runs over lattice points p with |p| <= M and
    <p, g> <= 0, requiring |p + g| < |g| + eps, all in exact arithmetic.
    """
    if not isinstance(group, ZdLp) or group.p != 2:
        raise InputError("verify_tangency expects a ZdLp l2 group")
    g = group.check(g)
    if all(c == 0 for c in g):
        return TangencyCheck(False, g=g)
    hb = Horoball(Linear(g))
    g2 = group.norm_exact(g)
    reach = math.isqrt(int(M * M)) + 1 if not isinstance(M, int) else M
    from itertools import product as iproduct
    M2 = _as_fraction(M) ** 2
    for p in iproduct(range(-reach, reach + 1), repeat=group.dim):
        p2 = sum(c * c for c in p)
        if Fraction(p2) > M2:
            continue
        if sum(a * b for a, b in zip(p, g)) > 0:
            continue
        pg2 = sum((a + b) ** 2 for a, b in zip(p, g))
        if not _lt_sqrt_plus(pg2, g2, eps):
            return TangencyCheck(False, horoball=hb, offending=p, g=g)
    return TangencyCheck(True, horoball=hb, g=g)


def tangency_threshold(group, M, eps, ray, n_max=100):
    """Smallest n0 such that verify_tangency passes for all n in [n0, n_max]
    along g = n * ray.  Returns None if it still fails at n_max."""
    ray = group.check(ray)
    passes = []
    for n in range(1, n_max + 1):
        g = tuple(n * c for c in ray)
        passes.append(verify_tangency(group, M, eps, g).passed)
    n0 = None
    for n in range(n_max, 0, -1):
        if not passes[n - 1]:
            break
        n0 = n
    return n0


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


class RationalCone:
    """Cone in Z^2 spanned counterclockwise from u1 to u2 (angle <= pi).

    Membership of lattice points is strict (boundary rays excluded) unless
    ``closed`` is set.  The extreme directions drive the horofunction
    precondition of the cone-translation check.
    """

    def __init__(self, u1, u2, closed=False):
        self.u1 = (int(u1[0]), int(u1[1]))
        self.u2 = (int(u2[0]), int(u2[1]))
        if self.u1 == (0, 0) or self.u2 == (0, 0):
            raise InputError("cone directions must be nonzero")
        self.closed = closed
        self.halfplane = _cross(self.u1, self.u2) == 0  # spans exactly pi

    def __repr__(self):
        return f"RationalCone({self.u1}, {self.u2}, closed={self.closed})"

    def contains(self, p):
        p = (int(p[0]), int(p[1]))
        if p == (0, 0):
            return False
        c1 = _cross(self.u1, p)
        c2 = _cross(p, self.u2)
        if self.halfplane:
            # upper side of the line through u1; u2 = -u1 direction
            if self.closed:
                return c1 >= 0
            return c1 > 0
        if self.closed:
            return c1 >= 0 and c2 >= 0
        return c1 > 0 and c2 > 0

    def extreme_directions(self):
        return [self.u1, self.u2]

    def contains_direction(self, g):
        """Is the direction of g within the closed angular arc of the cone?"""
        c1 = _cross(self.u1, g)
        c2 = _cross(g, self.u2)
        if self.halfplane:
            return c1 >= 0
        return c1 >= 0 and c2 >= 0


class ConeShiftReport:
    def __init__(self, n1, r_max, failures):
        self.n1 = n1
        self.r_max = r_max
        self.failures = failures  # list of (r, offending point)

    @property
    def holds(self):
        return self.n1 is not None


def verify_cone_shift(cone, eta, g, r_max):
    """Exhaustive check of [G0 /\\ B_{r+eta}(0)] + g within B_r(0), r = 1..r_max.

    Precondition (checked first, exactly): every horofunction coming from
    sequences inside the cone takes a value < -eta at -g; over the l2
    boundary these are x -> <x, -u> for unit u in the closed arc, so the
    test reduces to <g, u> < -eta |u| at the extreme directions, plus
    rejecting g whose own direction lies inside the arc.
    """
    eta = _as_fraction(eta)
    if eta <= 0:
        raise InputError(f"eta must be > 0, got {eta}")
    g = (int(g[0]), int(g[1]))
    if cone.contains_direction(g) and g != (0, 0):
        raise InputError(f"direction of g={g} lies inside the cone arc; "
                         "horofunction value would be positive")
    for u in cone.extreme_directions():
        dot = g[0] * u[0] + g[1] * u[1]
        u2 = u[0] * u[0] + u[1] * u[1]
        # need dot < -eta * sqrt(u2)
        if not (dot < 0 and Fraction(dot) ** 2 > eta * eta * u2):
            raise InputError(
                f"precondition fails at extreme direction {u}: "
                f"<g, u> = {dot} is not below -eta|u|")
    failures = []
    for r in range(1, r_max + 1):
        bound = Fraction(r) + eta
        reach = math.ceil(bound)
        r2 = Fraction(r) ** 2
        bound2 = bound * bound
        for x in range(-reach, reach + 1):
            for y in range(-reach, reach + 1):
                p = (x, y)
                if not cone.contains(p):
                    continue
                if Fraction(x * x + y * y) >= bound2:
                    continue
                sx, sy = x + g[0], y + g[1]
                if Fraction(sx * sx + sy * sy) >= r2:
                    failures.append((r, p))
                    break
            else:
                continue
            break
    n1 = None
    failed_rs = {r for r, _ in failures}
    for r in range(r_max, 0, -1):
        if r in failed_rs:
            break
        n1 = r
    return ConeShiftReport(n1, r_max, failures)
