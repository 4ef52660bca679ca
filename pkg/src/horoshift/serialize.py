"""JSON / CSV descriptors for groups, horofunctions, specs and reports.

All JSON is emitted with sorted keys and no timestamps so identical runs
produce byte-identical artifacts.
"""

import hashlib
import io
import json
from fractions import Fraction

from .errors import InputError
from . import groups, horoballs, subshifts
from .certify import Direction


def json_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _num(x):
    if isinstance(x, Fraction):
        return float(x) if x.denominator != 1 else int(x)
    return x


# ---------------------------------------------------------------------------
# groups

def parse_group(descriptor):
    """Shorthands: "z2-l1", "z3-l2", "zd-linf" style; "wfa-index";
    "dsz2-index"; or a JSON object string."""
    if descriptor.startswith("{"):
        return group_from_dict(json.loads(descriptor))
    d = descriptor.strip().lower()
    if d.startswith("z") and "-l" in d:
        dim_s, p_s = d[1:].split("-l")
        p = {"1": 1, "2": 2, "inf": "inf"}.get(p_s)
        if p is None or not dim_s.isdigit():
            raise InputError(f"bad group descriptor {descriptor!r}")
        return groups.ZdLp(int(dim_s), p)
    if d == "wfa-index":
        return groups.WeightedFreeAbelian("index")
    if d == "dsz2-index":
        return groups.DirectSumZ2("index")
    raise InputError(f"unknown group descriptor {descriptor!r}")


def group_to_dict(g):
    if isinstance(g, groups.ZdLp):
        return {"kind": "zd-lp", "dim": g.dim, "p": g.p}
    if isinstance(g, groups.WeightedFreeAbelian):
        return {"kind": "weighted-free-abelian", "weight": "index"}
    if isinstance(g, groups.DirectSumZ2):
        return {"kind": "direct-sum-z2", "weight": "index"}
    raise InputError(f"unserializable group {g!r}")


def group_from_dict(d):
    kind = d.get("kind")
    if kind == "zd-lp":
        return groups.ZdLp(d["dim"], d["p"])
    if kind == "weighted-free-abelian":
        return groups.WeightedFreeAbelian(d.get("weight", "index"))
    if kind == "direct-sum-z2":
        return groups.DirectSumZ2(d.get("weight", "index"))
    raise InputError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# horofunctions / horoballs

def horoball_from_dict(d):
    kind = d.get("kind")
    if kind == "linear":
        return horoballs.l2_horoball(d["v"])
    if kind in ("halfplane-diagonal", "halfplane-antidiagonal"):
        return horoballs.Horoball(
            horoballs.PolyhedralZ2(kind, side=d["side"]))
    if kind == "quarter-space":
        return horoballs.Horoball(
            horoballs.PolyhedralZ2(kind, apex=tuple(d["apex"]),
                                   opening=d["opening"]))
    if kind == "sampled-l1-ray":
        return horoballs.sampled_l1_horoball_z2(tuple(d["ray"]),
                                                d.get("n_star", 512))
    raise InputError(f"unknown horoball kind {kind!r}")


def horoball_to_dict(h):
    j = h.j
    if isinstance(j, horoballs.Linear):
        return {"kind": "linear",
                "v": list(j.int_dir) if j.int_dir else list(j.v)}
    if isinstance(j, horoballs.PolyhedralZ2):
        if j.shape == "quarter-space":
            return {"kind": j.shape, "apex": list(j.apex), "opening": j.opening}
        return {"kind": j.shape, "side": j.side}
    if isinstance(j, horoballs.Sampled):
        return {"kind": "sampled", "n_star": j.n_star}
    raise InputError(f"unserializable horoball {h!r}")


# ---------------------------------------------------------------------------
# subshift specs

def parse_spec(descriptor):
    d = descriptor.strip().lower()
    if d == "ledrappier":
        return subshifts.ledrappier()
    if d in ("fullshift", "full-shift"):
        return subshifts.FullShift((0, 1))
    if descriptor.strip().startswith("{"):
        return subshifts.spec_from_dict(json.loads(descriptor))
    raise InputError(f"unknown system descriptor {descriptor!r}")


def spec_hash(spec):
    return hashlib.sha256(json_dumps(spec.to_dict()).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# directions and certificates

def direction_to_dict(d):
    return {"a": d.a, "b": d.b, "label": d.label}


def direction_from_dict(d):
    return Direction(d["a"], d["b"], d.get("label", "rational"))


def direction_to_vector_descriptor(d):
    """Vector form consumed by the convexity operations."""
    if d.label == "sqrt-normalized":
        return ["sqrt-normalized", d.a, d.b]
    return [d.a, d.b]


def filling_to_dict(f):
    if isinstance(f, subshifts.WindowFilling):
        return {"N": f.N,
                "symbols": [[s[0], s[1], v]
                            for s, v in sorted(f.symbols.items(),
                                               key=lambda kv: (kv[0][1], kv[0][0]))]}
    return f  # skew witnesses carry plain dict descriptions


def _evidence_to_json(e):
    if e is None:
        return None
    out = {}
    for k, v in e.items():
        if isinstance(v, (set, frozenset)):
            v = sorted(v)
        if isinstance(v, tuple):
            v = list(v)
        if isinstance(v, list):
            v = [list(i) if isinstance(i, tuple) else i for i in v]
        out[k] = v
    return out


def certificate_to_dict(c):
    d = {"kind": c.kind, "N": c.N, "k": c.k}
    if c.kind == "witness":
        d["extendable"] = c.extendable
        d["pair"] = [filling_to_dict(c.pair[0]), filling_to_dict(c.pair[1])]
        d["evidence"] = _evidence_to_json(c.evidence)
    elif c.kind == "window-deterministic":
        d["evidence"] = _evidence_to_json(c.evidence)
    else:
        d["reason"] = c.reason
    return d


def nd_report_to_dict(report):
    return {
        "epsilon": {"dyadic": f"2^-{report.k}", "value": report.epsilon},
        "k": report.k,
        "N": report.N,
        "metadata": dict(report.metadata, spec_hash=spec_hash(report.spec)),
        "entries": [
            {"direction": direction_to_dict(d),
             "certificate": certificate_to_dict(c)}
            for d, c in report.entries
        ],
        "witness_directions": [direction_to_dict(d)
                               for d in report.witness_directions()],
    }


def nd_report_to_csv(report):
    buf = io.StringIO()
    buf.write("a,b,label,certificate,extendable\n")
    for d, c in report.entries:
        ext = c.extendable if c.kind == "witness" else ""
        buf.write(f"{d.a},{d.b},{d.label},{c.kind},{ext}\n")
    return buf.getvalue()


def witness_vectors_from_report_dict(d):
    """Vector descriptors of the Witness directions of a serialized NDReport."""
    out = []
    for entry in d["entries"]:
        if entry["certificate"]["kind"] == "witness":
            dd = entry["direction"]
            out.append(direction_to_vector_descriptor(direction_from_dict(dd)))
    if not out:
        raise InputError("report contains no witness directions")
    return out


def hull_certificate_to_dict(cert):
    d = {"variant": cert.variant}
    if cert.variant == "in-hull":
        d["coefficients"] = [_num(c) for c in cert.coefficients]
        d["residual"] = cert.residual
    else:
        d["separator"] = [_num(c) for c in cert.separator]
    return d


def coverage_report_to_dict(rep):
    return {"covered": rep.covered,
            "max_gap_degrees": rep.max_gap_degrees,
            "probes": len(rep.probe_results),
            "failing_probes": [list(p) for p in rep.failing_probes()]}
