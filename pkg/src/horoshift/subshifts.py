"""Finite descriptions of Z^2 shift actions and window combinatorics.

Specs come in three flavors: plain SFTs (finitely many forbidden patterns),
GF(2) linear rules (a finite coefficient support S with sum_{s in S}
x_{z+s} = 0 mod 2 for every z), and full shifts.  Skew actions are a
Z-subshift together with an exponent homomorphism (n, m) -> alpha*n +
beta*m; their Z^2 configurations are never materialized.

Window fillings are total assignments of the centered box [-N, N]^2;
``enumerate_fillings`` streams all locally admissible ones in a
deterministic raster-order backtracking.
"""

import itertools

from .errors import InputError, ResourceBudgetError

DEFAULT_FILLING_BUDGET = 2_000_000


def box_sites(N):
    """Sites of [-N, N]^2 in raster order (row by row, left to right)."""
    return [(x, y) for y in range(-N, N + 1) for x in range(-N, N + 1)]


class Pattern:
    """A symbol assignment on a finite set of Z^2 sites."""

    def __init__(self, symbols):
        self.symbols = {(int(s[0]), int(s[1])): v for s, v in symbols.items()}

    @property
    def support(self):
        return set(self.symbols)

    def __getitem__(self, site):
        return self.symbols[site]

    def __eq__(self, other):
        return isinstance(other, Pattern) and self.symbols == other.symbols

    def __repr__(self):
        items = sorted(self.symbols.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        return f"Pattern({dict(items)})"


class FullShift:
    """All configurations over a finite alphabet."""

    kind = "full-shift"

    def __init__(self, alphabet=(0, 1)):
        self.alphabet = tuple(sorted(set(alphabet)))
        if len(self.alphabet) < 1:
            raise InputError("alphabet must be nonempty")

    def constraint_supports(self):
        return []

    def check_at(self, symbols, z):
        return True

    def to_dict(self):
        return {"kind": self.kind, "alphabet": list(self.alphabet)}

    def __repr__(self):
        return f"FullShift(alphabet={self.alphabet})"


class LinearGF2:
    """Binary configurations with sum over a coefficient support = 0 mod 2."""

    kind = "linear-gf2"

    def __init__(self, support):
        sup = sorted((int(s[0]), int(s[1])) for s in support)
        if len(set(sup)) < 2:
            raise InputError("linear-gf2 support needs at least 2 distinct sites")
        self.support = tuple(sup)
        self.alphabet = (0, 1)

    def constraint_supports(self):
        return [self.support]

    def check_at(self, symbols, z):
        """Check the constraint anchored at z; True if some cell is unassigned."""
        total = 0
        for s in self.support:
            v = symbols.get((z[0] + s[0], z[1] + s[1]))
            if v is None:
                return True
            total ^= v
        return total == 0

    def to_dict(self):
        return {"kind": self.kind, "support": [list(s) for s in self.support]}

    def __repr__(self):
        return f"LinearGF2(support={list(self.support)})"


class SFT:
    """Configurations avoiding finitely many forbidden patterns."""

    kind = "sft"

    def __init__(self, alphabet, forbidden):
        self.alphabet = tuple(sorted(set(alphabet)))
        self.forbidden = []
        for p in forbidden:
            if not isinstance(p, Pattern):
                p = Pattern(p)
            if not p.support:
                raise InputError("forbidden patterns must have nonempty support")
            self.forbidden.append(p)
        if not self.forbidden:
            raise InputError("an SFT needs at least one forbidden pattern; "
                             "use FullShift otherwise")

    def constraint_supports(self):
        return [tuple(sorted(p.support)) for p in self.forbidden]

    def check_at(self, symbols, z):
        for p in self.forbidden:
            hit = True
            for s, v in p.symbols.items():
                got = symbols.get((z[0] + s[0], z[1] + s[1]))
                if got is None or got != v:
                    hit = False
                    break
            if hit:
                return False
        return True

    def to_dict(self):
        return {"kind": self.kind, "alphabet": list(self.alphabet),
                "forbidden": [sorted(([s[0], s[1]], v) for s, v in p.symbols.items())
                              for p in self.forbidden]}

    def __repr__(self):
        return f"SFT(alphabet={self.alphabet}, forbidden={len(self.forbidden)} patterns)"


def ledrappier():
    """The binary rule x_{i,j} + x_{i+1,j} + x_{i,j+1} = 0 mod 2."""
    return LinearGF2([(0, 0), (1, 0), (0, 1)])


def spec_from_dict(d):
    kind = d.get("kind")
    if kind == "full-shift":
        return FullShift(d.get("alphabet", (0, 1)))
    if kind == "linear-gf2":
        return LinearGF2(d["support"])
    if kind == "sft":
        forbidden = [Pattern({tuple(s): v for s, v in entries})
                     for entries in d["forbidden"]]
        return SFT(d["alphabet"], forbidden)
    raise InputError(f"unknown subshift kind {kind!r}")


def validate(spec, pattern):
    """True iff no constraint is violated fully inside the pattern support."""
    if not isinstance(pattern, Pattern):
        pattern = Pattern(pattern)
    for v in pattern.symbols.values():
        if v not in spec.alphabet:
            raise InputError(f"symbol {v!r} outside alphabet {spec.alphabet}")
    supports = spec.constraint_supports()
    if not supports:
        return True
    sites = pattern.support
    anchors = set()
    for sup in supports:
        for site in sites:
            for s in sup:
                anchors.add((site[0] - s[0], site[1] - s[1]))
    for z in anchors:
        if any(all((z[0] + s[0], z[1] + s[1]) in sites for s in sup)
               for sup in supports):
            if not _check_all_anchored(spec, pattern.symbols, z):
                return False
    return True


def _check_all_anchored(spec, symbols, z):
    if isinstance(spec, LinearGF2):
        if all((z[0] + s[0], z[1] + s[1]) in symbols for s in spec.support):
            return spec.check_at(symbols, z)
        return True
    return spec.check_at(symbols, z)


class WindowFilling:
    """A total, locally admissible assignment of [-N, N]^2."""

    __slots__ = ("N", "symbols", "extendable")

    def __init__(self, N, symbols, extendable=None):
        self.N = N
        self.symbols = symbols
        self.extendable = extendable

    def __getitem__(self, site):
        return self.symbols[site]

    def __eq__(self, other):
        return (isinstance(other, WindowFilling) and self.N == other.N
                and self.symbols == other.symbols)

    def __hash__(self):
        return hash((self.N, tuple(sorted(self.symbols.items()))))

    def restrict(self, sites):
        return {s: self.symbols[s] for s in sites}

    def __repr__(self):
        return f"WindowFilling(N={self.N}, {len(self.symbols)} sites)"


def enumerate_fillings(spec, N, clamp=None, budget=DEFAULT_FILLING_BUDGET):
    """Stream all locally admissible fillings of [-N, N]^2 extending clamp.

    Backtracking in raster order with symbols tried in sorted order, so the
    stream order is deterministic.  Raises a resource error (carrying the
    count so far) after ``budget`` fillings.
    """
    sites = box_sites(N)
    clamp = dict(clamp or {})
    for s in clamp:
        if not (abs(s[0]) <= N and abs(s[1]) <= N):
            raise InputError(f"clamp site {s} outside window [-{N},{N}]^2")
    window = set(sites)
    supports = spec.constraint_supports()
    # constraints to check when a site gets its value: those anchored so that
    # the site is the raster-last cell of the constraint inside the window
    order = {s: i for i, s in enumerate(sites)}
    check_plan = {s: [] for s in sites}
    anchors = set()
    for sup in supports:
        for site in sites:
            for s in sup:
                anchors.add(((site[0] - s[0], site[1] - s[1]), sup))
    for z, sup in anchors:
        cells = [(z[0] + s[0], z[1] + s[1]) for s in sup]
        if all(c in window for c in cells):
            last = max(cells, key=order.__getitem__)
            check_plan[last].append(z)
    alphabet = sorted(spec.alphabet)
    symbols = {}
    count = 0

    def backtrack(i):
        nonlocal count
        if i == len(sites):
            count += 1
            if count > budget:
                raise ResourceBudgetError(
                    f"filling budget {budget} exceeded", budget, count - 1)
            yield WindowFilling(N, dict(symbols))
            return
        site = sites[i]
        choices = [clamp[site]] if site in clamp else alphabet
        for v in choices:
            symbols[site] = v
            if all(spec.check_at(symbols, z) for z in check_plan[site]):
                yield from backtrack(i + 1)
            del symbols[site]

    yield from backtrack(0)


def count_fillings(spec, N, clamp=None, budget=DEFAULT_FILLING_BUDGET):
    return sum(1 for _ in enumerate_fillings(spec, N, clamp, budget))


def complete_upward(spec, rows, x_start=0, y_start=0):
    """Deterministic upward completion of the Ledrappier rule.

    ``rows`` is a list of bit rows, bottom first, each one shorter than the
    previous (the rule x_{i,j+1} = x_{i,j} + x_{i+1,j} shrinks width by 1).
    Returns the full triangle down to width 1 as a Pattern.
    """
    if not (isinstance(spec, LinearGF2)
            and set(spec.support) == {(0, 0), (1, 0), (0, 1)}):
        raise InputError("complete_upward implements the rule with support "
                         "{(0,0),(1,0),(0,1)}")
    rows = [tuple(int(b) & 1 for b in r) for r in rows]
    if not rows or not rows[0]:
        raise InputError("need at least one nonempty initial row")
    for a, b in zip(rows, rows[1:]):
        if len(b) != len(a) - 1:
            raise InputError("each initial row must be one shorter than the last")
        if any((a[i] ^ a[i + 1] ^ b[i]) for i in range(len(b))):
            raise InputError("initial rows violate the rule")
    tri = list(rows)
    while len(tri[-1]) > 1:
        prev = tri[-1]
        tri.append(tuple(prev[i] ^ prev[i + 1] for i in range(len(prev) - 1)))
    symbols = {}
    for j, row in enumerate(tri):
        for i, v in enumerate(row):
            symbols[(x_start + i, y_start + j)] = v
    return Pattern(symbols)


def config_distance(x, y):
    """2^{-r} with r the minimum l-infinity norm of a disagreement site;
    0.0 when the fillings agree on the whole window."""
    if x.N != y.N:
        raise InputError(f"window mismatch: N={x.N} vs N={y.N}")
    r = None
    for s, v in x.symbols.items():
        if y.symbols[s] != v:
            n = max(abs(s[0]), abs(s[1]))
            if r is None or n < r:
                r = n
    if r is None:
        return 0.0
    return 2.0 ** (-r)


class FullShiftZ:
    """Binary (or larger) full shift on Z, the base of skew actions.

    ``expansivity_k`` is the smallest k with: dist(sigma^n x, sigma^n y)
    <= 2^{-k} for all n forces x = y.  For a full shift any k >= 1 works.
    """

    kind = "full-shift-z"

    def __init__(self, alphabet=(0, 1)):
        self.alphabet = tuple(sorted(set(alphabet)))
        if len(self.alphabet) < 2:
            raise InputError("base shift needs at least 2 symbols")
        self.expansivity_k = 1

    def to_dict(self):
        return {"kind": self.kind, "alphabet": list(self.alphabet)}

    def __repr__(self):
        return f"FullShiftZ(alphabet={self.alphabet})"


class SkewActionSpec:
    """Z^2-action T_{(n,m)} = sigma^{alpha n + beta m} on a Z-subshift."""

    kind = "skew-action"

    def __init__(self, base, alpha, beta):
        self.base = base
        self.alpha = int(alpha)
        self.beta = int(beta)
        if self.alpha == 0 and self.beta == 0:
            raise InputError("exponent map must be nonzero")

    def to_dict(self):
        return {"kind": self.kind, "base": self.base.to_dict(),
                "alpha": self.alpha, "beta": self.beta}

    def __repr__(self):
        return f"SkewActionSpec({self.base!r}, alpha={self.alpha}, beta={self.beta})"


def skew_exponent(spec, g):
    n, m = g
    return spec.alpha * n + spec.beta * m
