"""Deterministic raster (PGM P5) and vector (SVG 1.1) output.

No timestamps, fixed number formatting, stable iteration order: the same
input always produces byte-identical files.
"""

import math

from .errors import InputError


def write_pgm(path, rows):
    """Write a grayscale image as binary PGM (P5).

    ``rows`` is a sequence of equal-length sequences of ints in 0..255,
    top row first.
    """
    h = len(rows)
    if h == 0:
        raise InputError("empty image")
    w = len(rows[0])
    data = bytearray(f"P5\n{w} {h}\n255\n".encode("ascii"))
    for r in rows:
        if len(r) != w:
            raise InputError("ragged image rows")
        data.extend(bytes(int(v) & 0xFF for v in r))
    with open(path, "wb") as f:
        f.write(bytes(data))
    return len(data)


def sublevel_raster(sign, N, inside=0, outside=255):
    """(2N+1)^2 raster of {sign < 0}: row 0 is y = N, column 0 is x = -N."""
    rows = []
    for y in range(N, -N - 1, -1):
        rows.append([inside if sign((x, y)) < 0 else outside
                     for x in range(-N, N + 1)])
    return rows


def ball_raster(group, center, N):
    """Raster of the ball {x : d(center, x) < d(center, 0)} on [-N, N]^2."""
    center = group.check(center)
    radius = group.norm_exact(center)

    def sign(p):
        # b_center(p) < 0  <=>  d(center, p) < d(center, 0), exact
        return -1 if group.norm_exact(group.op(p, group.inv(center))) < radius else 1

    return sublevel_raster(sign, N)


def _fmt(x):
    return f"{x:.4f}".rstrip("0").rstrip(".")


def direction_circle_svg(report):
    """Unit-circle plot of an NDReport: one dot per grid direction, filled
    for Witness, open for WindowDeterministic, crossed for Inconclusive."""
    size, R = 400, 160
    cx = cy = size // 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<circle cx="{cx}" cy="{cy}" r="{R}" fill="none" stroke="#888"/>',
    ]
    for d, cert in report.entries:
        ux, uy = d.unit()
        x, y = cx + R * ux, cy - R * uy
        if cert.kind == "witness":
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="6" '
                         f'fill="#c00"><title>{d!r}: witness</title></circle>')
        elif cert.kind == "window-deterministic":
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" '
                         f'fill="none" stroke="#06c">'
                         f'<title>{d!r}: deterministic</title></circle>')
        else:
            parts.append(f'<g stroke="#999"><line x1="{_fmt(x - 4)}" '
                         f'y1="{_fmt(y - 4)}" x2="{_fmt(x + 4)}" y2="{_fmt(y + 4)}"/>'
                         f'<line x1="{_fmt(x - 4)}" y1="{_fmt(y + 4)}" '
                         f'x2="{_fmt(x + 4)}" y2="{_fmt(y - 4)}"/></g>')
    parts.append(f'<text x="8" y="{size - 10}" font-size="12" fill="#444">'
                 f'k={report.k} N={report.N} eps=2^-{report.k}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def lattice_set_svg(points, N, title=""):
    """Dot plot of a finite lattice subset of [-N, N]^2."""
    cell = 12
    size = cell * (2 * N + 2)
    off = cell * (N + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<line x1="0" y1="{off}" x2="{size}" y2="{off}" stroke="#ccc"/>',
        f'<line x1="{off}" y1="0" x2="{off}" y2="{size}" stroke="#ccc"/>',
    ]
    for x, y in sorted(points, key=lambda p: (p[1], p[0])):
        px, py = off + cell * x, off - cell * y
        parts.append(f'<circle cx="{px}" cy="{py}" r="3" fill="#06c"/>')
    if title:
        parts.append(f'<text x="8" y="14" font-size="12" fill="#444">{title}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
