"""Window-scale determinism / witness certificates.

A direction (or horoball) H is probed at window scale (k, N): two locally
admissible fillings of [-N, N]^2 that agree on the k-dilated trace of H and
still disagree somewhere form a *window witness*; if instead the origin
symbol is forced by the dilated trace in every admissibility class, the
window is *deterministic* for H.

The dilated trace is {p in [-N,N]^2 : linf-dist(p, H /\\ [-2N,2N]^2) < k},
so every disagreement site of a witness automatically sits at distance
>= k from the horoball, forcing the pair 2^{-k}-close under T_g for all
g in H within the window horizon.

Witnesses are only reported when they extend to a larger window (margin)
while agreeing on the larger dilated trace; this is what separates genuine
asymptotic behavior from boundary artifacts of the finite window, where
unconstrained edge cells can fake a disagreement.

For GF(2) linear rules the search is linear algebra: valid fillings form a
GF(2) vector space, so witness pairs correspond to kernel vectors
vanishing on the trace.  The generic path enumerates fillings and serves
as the independent oracle.
"""

import functools
import math

import numpy as np

from .errors import InputError, ResourceBudgetError
from .subshifts import (FullShift, LinearGF2, WindowFilling, box_sites,
                        enumerate_fillings, skew_exponent)

DEFAULT_ENUM_BUDGET = 400_000


# ---------------------------------------------------------------------------
# directions

def _gcd2(a, b):
    return math.gcd(abs(a), abs(b))


class Direction:
    """A nonzero direction of the plane, stored as a primitive integer
    vector so half-plane membership <p, v> < 0 is exact.

    ``label`` distinguishes registered irrational specials that share the
    integer direction (e.g. (1,1)/sqrt(2), written "sqrt-normalized").
    All sign tests are scale-invariant, so the integer vector is enough.
    """

    __slots__ = ("a", "b", "label")

    def __init__(self, a, b, label="rational"):
        a, b = int(a), int(b)
        if a == 0 and b == 0:
            raise InputError("direction must be nonzero")
        g = _gcd2(a, b)
        self.a, self.b = a // g, b // g
        self.label = label

    def __eq__(self, other):
        return isinstance(other, Direction) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        base = f"({self.a},{self.b})"
        return base if self.label == "rational" else f"{base}/|{base}|"

    def contains(self, p):
        """Open half-space horoball membership: <p, v> < 0 (exact)."""
        return self.a * p[0] + self.b * p[1] < 0

    def angle(self):
        return math.atan2(self.b, self.a)

    def unit(self):
        n = math.hypot(self.a, self.b)
        return (self.a / n, self.b / n)

def _direction_cmp(u, w):
    """Counterclockwise order starting at (1, 0), exact arithmetic."""
    hu = 0 if (u.b > 0 or (u.b == 0 and u.a > 0)) else 1
    hw = 0 if (w.b > 0 or (w.b == 0 and w.a > 0)) else 1
    if hu != hw:
        return hu - hw
    cross = u.a * w.b - u.b * w.a
    return -1 if cross > 0 else (1 if cross < 0 else 0)


direction_sort_key = functools.cmp_to_key(_direction_cmp)


def farey_directions(Q):
    """Primitive integer directions (a, b) with max(|a|, |b|) <= Q,
    covering all four sign quadrants, in counterclockwise order."""
    if Q < 1:
        raise InputError(f"Farey order must be >= 1, got {Q}")
    out = set()
    for a in range(-Q, Q + 1):
        for b in range(-Q, Q + 1):
            if (a, b) != (0, 0) and _gcd2(a, b) == 1:
                out.add(Direction(a, b))
    return sorted(out, key=direction_sort_key)


def parse_grid(descriptor):
    """Grid descriptors: "farey:Q", optionally "+diag" to register the
    sqrt-normalized diagonal specials; or an explicit "a,b;c,d;..." list."""
    descriptor = descriptor.strip()
    if descriptor.startswith("farey:"):
        rest = descriptor[len("farey:"):]
        add_diag = rest.endswith("+diag")
        if add_diag:
            rest = rest[:-len("+diag")]
        dirs = farey_directions(int(rest))
        if add_diag:
            # the sqrt-normalized diagonals share their integer direction
            # with (1,1) etc., so this relabels rather than adds
            specials = {(1, 1), (1, -1), (-1, 1), (-1, -1)}
            dirs = [Direction(d.a, d.b, "sqrt-normalized")
                    if (d.a, d.b) in specials else d for d in dirs]
        return dirs
    dirs = []
    for part in descriptor.split(";"):
        a, b = part.split(",")
        dirs.append(Direction(int(a), int(b)))
    if not dirs:
        raise InputError("empty direction grid")
    return dirs


# ---------------------------------------------------------------------------
# certificates

class WindowDeterministic:
    kind = "window-deterministic"

    def __init__(self, N, k, evidence=None):
        self.N, self.k, self.evidence = N, k, evidence

    def __repr__(self):
        return f"WindowDeterministic(N={self.N}, k={self.k})"


class Witness:
    kind = "witness"

    def __init__(self, pair, N, k, extendable, evidence=None):
        self.pair = pair
        self.N, self.k = N, k
        self.extendable = extendable
        self.evidence = evidence

    def __repr__(self):
        tag = "extendable" if self.extendable else "window-only"
        return f"Witness(N={self.N}, k={self.k}, {tag})"


class Inconclusive:
    kind = "inconclusive"

    def __init__(self, N, k, reason):
        self.N, self.k, self.reason = N, k, reason

    def __repr__(self):
        return f"Inconclusive(N={self.N}, k={self.k}, {self.reason!r})"


class NDReport:
    """Per-direction certificates over a grid, at fixed epsilon = 2^{-k}."""

    def __init__(self, spec, k, N, entries, metadata=None):
        self.spec = spec
        self.k, self.N = k, N
        self.epsilon = 2.0 ** (-k)
        self.entries = entries  # list of (Direction, Certificate)
        self.metadata = metadata or {}

    def witness_directions(self):
        return [d for d, c in self.entries if c.kind == "witness"]

    def __repr__(self):
        kinds = {}
        for _, c in self.entries:
            kinds[c.kind] = kinds.get(c.kind, 0) + 1
        return f"NDReport(k={self.k}, N={self.N}, {kinds})"


# ---------------------------------------------------------------------------
# dilated traces

def horoball_box_mask(contains, B):
    """Boolean mask of H on [-B, B]^2; mask[x + B, y + B] = membership."""
    size = 2 * B + 1
    mask = np.zeros((size, size), dtype=bool)
    for x in range(-B, B + 1):
        for y in range(-B, B + 1):
            if contains((x, y)):
                mask[x + B, y + B] = True
    return mask


def _dilate_linf(mask, steps):
    out = mask.copy()
    for _ in range(steps):
        grown = out.copy()
        grown[1:, :] |= out[:-1, :]
        grown[:-1, :] |= out[1:, :]
        grown[:, 1:] |= out[:, :-1]
        grown[:, :-1] |= out[:, 1:]
        grown[1:, 1:] |= out[:-1, :-1]
        grown[:-1, :-1] |= out[1:, 1:]
        grown[1:, :-1] |= out[:-1, 1:]
        grown[:-1, 1:] |= out[1:, :-1]
        out = grown
    return out


def dilated_trace(contains, k, N):
    """Sites of [-N, N]^2 at l-infinity distance < k from H /\\ [-2N, 2N]^2.

    Returns (trace set, horoball-hits-box flag).
    """
    B = 2 * N
    mask = horoball_box_mask(contains, B)
    if not mask.any():
        return set(), False
    dil = _dilate_linf(mask, k - 1)
    trace = set()
    for x in range(-N, N + 1):
        for y in range(-N, N + 1):
            if dil[x + B, y + B]:
                trace.add((x, y))
    return trace, True


# ---------------------------------------------------------------------------
# GF(2) linear algebra (bitmask rows)

def gf2_nullspace(rows, ncols):
    """Basis of the null space of the GF(2) matrix given as bitmask rows
    (bit j = column j).  Deterministic: columns processed in order."""
    rows = [r for r in rows if r]
    pivots = {}  # column -> reduced row
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead in pivots:
                r ^= pivots[lead]
            else:
                pivots[lead] = r
                break
    basis = []
    pivot_cols = set(pivots)
    for j in range(ncols):
        if j in pivot_cols:
            continue
        # free column j: back-substitute a vector with bit j set; a pivot
        # row's equation involves only columns below its lead, so resolve
        # pivots in increasing column order
        vec = 1 << j
        for lead in sorted(pivot_cols):
            row = pivots[lead]
            if (row & vec).bit_count() % 2:
                vec |= 1 << lead
        basis.append(vec)
    return basis


class _LinearWindowKernel:
    """Kernel of a GF(2) linear rule on the box [-M, M]^2, cached per (spec, M).

    Fillings of a LinearGF2 spec form a GF(2) vector space; witness pairs
    (x, y) correspond to kernel vectors z = x + y.
    """

    _cache = {}

    def __new__(cls, spec, M):
        key = (spec.support, M)
        if key not in cls._cache:
            obj = super().__new__(cls)
            obj._build(spec, M)
            cls._cache[key] = obj
        return cls._cache[key]

    def _build(self, spec, M):
        self.M = M
        self.sites = box_sites(M)
        self.index = {s: i for i, s in enumerate(self.sites)}
        rows = []
        window = set(self.sites)
        for z in self.sites:
            cells = [(z[0] + s[0], z[1] + s[1]) for s in spec.support]
            if all(c in window for c in cells):
                row = 0
                for c in cells:
                    row ^= 1 << self.index[c]
                rows.append(row)
        self.basis = gf2_nullspace(rows, len(self.sites))

    def constrained_basis(self, zero_sites):
        """Basis of kernel vectors vanishing on the given sites."""
        idx = [self.index[s] for s in sorted(zero_sites)]
        nb = len(self.basis)
        rows = []
        for i in idx:
            row = 0
            for j, vec in enumerate(self.basis):
                if (vec >> i) & 1:
                    row |= 1 << j
            rows.append(row)
        combos = gf2_nullspace(rows, nb)
        out = []
        for c in combos:
            vec = 0
            j = 0
            while c:
                if c & 1:
                    vec ^= self.basis[j]
                c >>= 1
                j += 1
            out.append(vec)
        return out

    def vector_to_symbols(self, vec, sites):
        return {s: (vec >> self.index[s]) & 1 for s in sites}


# ---------------------------------------------------------------------------
# status computation

def _default_margin(k, N):
    # wide enough that boundary effects of the margin window cannot
    # propagate into [-N, N]^2 along a rule of unit step
    return N - k + 2 if N > k else 2


def hull_outward_normals(support):
    """Primitive outward edge normals of the convex hull of a finite
    subset of Z^2.

    For a GF(2) linear rule these are exactly the directions v whose
    half-plane admits nonzero rule-respecting configurations supported in
    {<p, v> >= c}: along an edge of the hull the rule degenerates to a
    one-dimensional recurrence transverse to v, which has nonzero
    solutions constant along the edge direction, while for any other v
    the extreme support site is alone on its supporting line and forces
    the configuration to vanish line by line.
    """
    pts = sorted(set(support))
    if len(pts) < 2:
        return []
    # Andrew monotone chain
    def half(points):
        out = []
        for p in points:
            while len(out) >= 2 and \
                    ((out[-1][0] - out[-2][0]) * (p[1] - out[-2][1])
                     - (out[-1][1] - out[-2][1]) * (p[0] - out[-2][0])) <= 0:
                out.pop()
            out.append(p)
        return out
    lower = half(pts)
    upper = half(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # collinear support: both perpendiculars qualify
        u = (pts[-1][0] - pts[0][0], pts[-1][1] - pts[0][1])
        g = math.gcd(abs(u[0]), abs(u[1]))
        u = (u[0] // g, u[1] // g)
        return [Direction(u[1], -u[0]), Direction(-u[1], u[0])]
    normals = []
    n = len(hull)
    for i in range(n):
        p, q = hull[i], hull[(i + 1) % n]
        e = (q[0] - p[0], q[1] - p[1])
        normals.append(Direction(e[1], -e[0]))  # outward for a ccw hull
    return normals


def _halfplane_normal_of(contains_owner):
    """Primitive outward normal if the horoball is an exact half-plane of
    Z^2, else None."""
    from .horoballs import Horoball, Linear, PolyhedralZ2
    if isinstance(contains_owner, Direction):
        return contains_owner
    if isinstance(contains_owner, Horoball):
        j = contains_owner.j
        if isinstance(j, Linear) and j.int_dir and len(j.int_dir) == 2:
            return Direction(*j.int_dir)
        if isinstance(j, PolyhedralZ2):
            if j.shape == "halfplane-diagonal":
                return Direction(j.side, -j.side)
            if j.shape == "halfplane-antidiagonal":
                return Direction(j.side, j.side)
    return None


def _linear_halfplane_status(spec, v, contains, k, N, margin):
    """LinearGF2 certificate for an exact half-plane horoball.

    The window kernel search alone cannot distinguish genuine asymptotic
    behavior from boundary artifacts for slanted expansive directions (the
    artifacts recede only as the margin grows without bound), so the
    existence side is decided by the hull-normal criterion and the window
    is used to exhibit, or to verify determinism of, the certificate.
    """
    trace_N, hits = dilated_trace(contains, k, N)
    if not hits:
        return Inconclusive(N, k, "horoball misses window")
    if any(v == n for n in hull_outward_normals(spec.support)):
        cert = _linear_status(spec, contains, k, N, margin)
        if cert.kind == "witness":
            cert.evidence["hull-normal"] = [v.a, v.b]
            return cert
        return Inconclusive(N, k, "hull normal direction but no window "
                                  "witness at this scale; enlarge N")
    small = _LinearWindowKernel(spec, N)
    origin_bit = 1 << small.index[(0, 0)]
    for vec in small.constrained_basis(trace_N):
        if vec & origin_bit:
            return Inconclusive(N, k, "origin not forced")
    return WindowDeterministic(N, k, evidence={"trace_size": len(trace_N)})


def _linear_status(spec, contains, k, N, margin):
    trace_N, hits = dilated_trace(contains, k, N)
    if not hits:
        return Inconclusive(N, k, "horoball misses window")
    M = N + margin
    trace_M, _ = dilated_trace(contains, k, M)
    kern = _LinearWindowKernel(spec, M)
    inner = box_sites(N)
    inner_bits = 0
    for s in inner:
        inner_bits |= 1 << kern.index[s]
    for vec in kern.constrained_basis(trace_M | trace_N):
        if vec & inner_bits:
            x = WindowFilling(N, {s: 0 for s in inner}, extendable=True)
            y = WindowFilling(N, kern.vector_to_symbols(vec, inner),
                              extendable=True)
            return Witness((x, y), N, k, extendable=True,
                           evidence={"margin": margin,
                                     "trace_size": len(trace_N)})
    # no extendable witness; is the origin forced on the bare window?
    small = _LinearWindowKernel(spec, N)
    origin_bit = 1 << small.index[(0, 0)]
    for vec in small.constrained_basis(trace_N):
        if vec & origin_bit:
            return Inconclusive(N, k, "origin not forced; no extendable witness")
    return WindowDeterministic(N, k, evidence={"trace_size": len(trace_N)})


def _fullshift_status(spec, contains, k, N):
    trace, hits = dilated_trace(contains, k, N)
    if not hits:
        return Inconclusive(N, k, "horoball misses window")
    inner = box_sites(N)
    free = [s for s in inner if s not in trace]
    if not free:
        return WindowDeterministic(N, k, evidence={"trace_size": len(trace)})
    # single-difference witness at the free site farthest from the window
    # center (deterministic tie-break by raster order)
    site = max(free, key=lambda s: (max(abs(s[0]), abs(s[1])), s[1], s[0]))
    a0, a1 = spec.alphabet[0], spec.alphabet[1] if len(spec.alphabet) > 1 else spec.alphabet[0]
    if a0 == a1:
        return WindowDeterministic(N, k, evidence={"alphabet": "singleton"})
    x = WindowFilling(N, {s: a0 for s in inner}, extendable=True)
    ys = {s: a0 for s in inner}
    ys[site] = a1
    y = WindowFilling(N, ys, extendable=True)
    return Witness((x, y), N, k, extendable=True,
                   evidence={"difference_site": site, "trace_size": len(trace)})


def _pair_extends(spec, x, y, trace_M, k, N, M, budget):
    """Does the window witness (x, y) extend to a pair on [-M, M]^2 that
    agrees on the larger dilated trace?"""
    try:
        xhat = next(iter(enumerate_fillings(spec, M, clamp=x.symbols,
                                            budget=budget)), None)
        if xhat is None:
            return False
        clamp = dict(y.symbols)
        for s in trace_M:
            if s not in clamp:
                clamp[s] = xhat.symbols[s]
        yhat = next(iter(enumerate_fillings(spec, M, clamp=clamp,
                                            budget=budget)), None)
        return yhat is not None
    except ResourceBudgetError:
        return False


def _enumeration_status(spec, contains, k, N, margin, budget):
    trace, hits = dilated_trace(contains, k, N)
    if not hits:
        return Inconclusive(N, k, "horoball misses window")
    M = N + margin
    trace_M, _ = dilated_trace(contains, k, M)
    classes = {}
    try:
        for f in enumerate_fillings(spec, N, budget=budget):
            key = tuple(sorted((s, f.symbols[s]) for s in trace))
            classes.setdefault(key, []).append(f)
    except ResourceBudgetError:
        return Inconclusive(N, k, "budget")
    origin_forced = True
    for members in classes.values():
        if len({f.symbols[(0, 0)] for f in members}) > 1:
            origin_forced = False
        rep = members[0]
        for other in members[1:]:
            if other.symbols != rep.symbols:
                if _pair_extends(spec, rep, other, trace_M, k, N, M, budget):
                    rep.extendable = other.extendable = True
                    return Witness((rep, other), N, k, extendable=True,
                                   evidence={"margin": margin,
                                             "trace_size": len(trace)})
    if origin_forced:
        return WindowDeterministic(N, k, evidence={"trace_size": len(trace)})
    return Inconclusive(N, k, "origin not forced; no extendable witness")


def _status(spec, contains, k, N, margin, budget, method, owner=None):
    if N < k or k < 1:
        raise InputError(f"need N >= k >= 1, got N={N}, k={k}")
    if margin is None:
        margin = _default_margin(k, N)
    if method == "auto":
        if isinstance(spec, FullShift):
            return _fullshift_status(spec, contains, k, N)
        if isinstance(spec, LinearGF2):
            v = _halfplane_normal_of(owner)
            if v is not None:
                return _linear_halfplane_status(spec, v, contains, k, N, margin)
            return _linear_status(spec, contains, k, N, margin)
        method = "enumerate"
    if method == "kernel":
        if not isinstance(spec, LinearGF2):
            raise InputError("kernel method needs a linear-gf2 spec")
        return _linear_status(spec, contains, k, N, margin)
    if method == "enumerate":
        return _enumeration_status(spec, contains, k, N, margin, budget)
    raise InputError(f"unknown method {method!r}")


def direction_status(spec, v, k, N, margin=None, budget=DEFAULT_ENUM_BUDGET,
                     method="auto"):
    """Certificate for the open half-space horoball of direction v."""
    if not isinstance(v, Direction):
        v = Direction(*v)
    return _status(spec, v.contains, k, N, margin, budget, method, owner=v)


def horoball_status(spec, horoball, k, N, margin=None,
                    budget=DEFAULT_ENUM_BUDGET, method="auto"):
    """Certificate for an arbitrary horoball (anything with .contains)."""
    return _status(spec, horoball.contains, k, N, margin, budget, method,
                   owner=horoball)


def nd_set(spec, k, N, grid=None, margin=None, budget=DEFAULT_ENUM_BUDGET,
           method="auto", grid_label=None):
    """Per-direction certificates over a grid; Witness entries form the
    window-scale nondeterministic set."""
    if grid is None:
        grid = parse_grid("farey:8+diag")
        grid_label = grid_label or "farey:8+diag"
    if not grid:
        raise InputError("direction grid must be nonempty")
    entries = []
    for v in grid:
        entries.append((v, direction_status(spec, v, k, N, margin=margin,
                                            budget=budget, method=method)))
    meta = {"grid": grid_label or f"{len(grid)} directions",
            "spec": spec.to_dict()}
    return NDReport(spec, k, N, entries, metadata=meta)


# ---------------------------------------------------------------------------
# certificate re-verification (independent of the search that produced them)

def verify_witness(spec, contains, cert):
    """Direct re-check of a window witness: both fillings locally
    admissible, equal on the dilated trace, unequal somewhere, and every
    disagreement site at l-infinity distance >= k from the horoball's
    trace in [-2N, 2N]^2."""
    from .subshifts import Pattern, validate
    x, y = cert.pair
    N, k = cert.N, cert.k
    if not (validate(spec, Pattern(x.symbols)) and validate(spec, Pattern(y.symbols))):
        return False
    trace, hits = dilated_trace(contains, k, N)
    if not hits:
        return False
    if any(x.symbols[s] != y.symbols[s] for s in trace):
        return False
    diff = [s for s in x.symbols if x.symbols[s] != y.symbols[s]]
    if not diff:
        return False
    B = 2 * N
    ball_sites = [(hx, hy) for hx in range(-B, B + 1) for hy in range(-B, B + 1)
                  if contains((hx, hy))]
    for s in diff:
        if min(max(abs(s[0] - hx), abs(s[1] - hy))
               for hx, hy in ball_sites) < k:
            return False
    return True


def verify_window_deterministic(spec, contains, cert,
                                budget=DEFAULT_ENUM_BUDGET):
    """Exhaustive re-check that the origin symbol is forced in every
    admissibility class of the dilated trace (small windows only)."""
    trace, hits = dilated_trace(contains, cert.k, cert.N)
    if not hits:
        return False
    classes = {}
    for f in enumerate_fillings(spec, cert.N, budget=budget):
        key = tuple(sorted((s, f.symbols[s]) for s in trace))
        prev = classes.setdefault(key, f.symbols[(0, 0)])
        if prev != f.symbols[(0, 0)]:
            return False
    return True


# ---------------------------------------------------------------------------
# skew actions

class ExponentPreimage:
    """Diagnostic subset of Z^2: {g : exponent(g) >= threshold}."""

    def __init__(self, spec, threshold):
        self.spec = spec
        self.threshold = threshold

    def contains(self, g):
        return skew_exponent(self.spec, g) >= self.threshold


def exponent_image(spec, contains, B):
    """Sorted exponent values over H /\\ [-B, B]^2."""
    out = set()
    for n in range(-B, B + 1):
        for m in range(-B, B + 1):
            if contains((n, m)):
                out.add(spec.alpha * n + spec.beta * m)
    return sorted(out)


def skew_horoball_status(spec, horoball, k, N, B_max=None):
    """Certificate for a skew action T_{(n,m)} = sigma^{alpha n + beta m}.

    Decides through the exponent image E = exponent(H /\\ [-B, B]^2):

    * E bounded on one side (min or max stabilizes as B doubles): a
      one-sided asymptotic pair of the base shift, placed so every
      realized power keeps the disagreement at distance >= k -> Witness.
    * E covers [-N, N]: any pair 2^{-k}-close under all those powers
      must agree on the whole window -> WindowDeterministic (for k at or
      above the base expansivity level).
    * otherwise Inconclusive.
    """
    if N < k or k < 1:
        raise InputError(f"need N >= k >= 1, got N={N}, k={k}")
    exp_k = getattr(spec.base, "expansivity_k", None)
    if exp_k is None:
        return Inconclusive(N, k, "unknown base expansivity constant")
    if k < exp_k:
        return Inconclusive(N, k, f"k below base expansivity level {exp_k}")
    contains = horoball.contains
    if B_max is None:
        B_max = 16 * N
    stages = []
    B = N
    while B <= B_max:
        E = exponent_image(spec, contains, B)
        stages.append((B, (E[0], E[-1]) if E else None))
        B *= 2
    evidence = {"stages": stages, "B_max": B_max}
    if stages[-1][1] is None:
        return Inconclusive(N, k, "horoball misses window")
    lo, hi = stages[-1][1]
    final_E = set(exponent_image(spec, contains, stages[-1][0]))
    if all(e in final_E for e in range(-N, N + 1)):
        evidence["covers"] = [-N, N]
        return WindowDeterministic(N, k, evidence=evidence)
    mins = [s[1][0] for s in stages if s[1] is not None]
    maxs = [s[1][1] for s in stages if s[1] is not None]
    bounded_below = len(mins) >= 3 and mins[-1] == mins[-2] == mins[-3]
    bounded_above = len(maxs) >= 3 and maxs[-1] == maxs[-2] == maxs[-3]
    a0, a1 = spec.base.alphabet[0], spec.base.alphabet[1]
    if bounded_below or bounded_above:
        if bounded_below:
            q = mins[-1] - k
            evidence["bounded"] = ("below", mins[-1])
        else:
            q = maxs[-1] + k
            evidence["bounded"] = ("above", maxs[-1])
        # base-shift pair: constant a0 versus a single a1 placed so every
        # realized power keeps the disagreement at distance >= k
        pair = ({"base_point": "constant", "symbol": a0},
                {"base_point": "constant-with-difference", "symbol": a0,
                 "difference_position": q, "difference_symbol": a1})
        evidence["difference_position"] = q
        return Witness(pair, N, k, extendable=True, evidence=evidence)
    return Inconclusive(N, k, "exponent image unbounded both sides "
                              "but does not cover the window")
