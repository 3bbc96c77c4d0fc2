"""Quadratic curve models y^2 + h(x) y = f(x) and exhaustive point/place counts.

A model of genus g is read in the weighted projective plane P(1, g+1, 1):
the chart at infinity is v^2 + H(u) v = F(u) with H(u) = u^(g+1) h(1/u) and
F(u) = u^(2g+2) f(1/u), and the model is accepted only when both charts are
smooth.  Smoothness of the affine chart is the gcd test
gcd(h, h'^2 f + f'^2) = 1 in characteristic 2 and gcd(f, f') = 1 otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from .field_arith import (
    ENUMERATION_LIMIT,
    FieldCtx,
    FieldElement,
    embedding,
    make_field,
    poly_add,
    poly_deriv,
    poly_degree,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_trim,
    prime_power,
)


class CurveError(ValueError):
    """Malformed, singular or unsupported curve model."""


@dataclass(frozen=True)
class CurveModel:
    q: int
    p: int
    field: FieldCtx
    h: tuple[FieldElement, ...]
    f: tuple[FieldElement, ...]
    genus: int
    infinity: str  # "ramified", "split" or "inert"

    @property
    def char(self) -> int:
        return self.p

    def coefficient(self, poly, i: int) -> FieldElement:
        return poly[i] if i < len(poly) else self.field.zero

    def infinity_equation(self) -> tuple[FieldElement, FieldElement]:
        """(H(0), F(0)) of the chart at infinity."""
        g = self.genus
        return self.coefficient(self.h, g + 1), self.coefficient(self.f, 2 * g + 2)

    def describe(self) -> str:
        lhs = f"y^2 + ({_fmt(self.field, self.h)})*y" if self.h else "y^2"
        return f"{lhs} = {_fmt(self.field, self.f)} over F_{self.q}"


def _fmt(ctx: FieldCtx, poly) -> str:
    if not poly:
        return "0"
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if not any(c):
            continue
        cs = str(c[0]) if ctx.n == 1 else "[" + ",".join(map(str, c)) + "]"
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms)


def _read_poly(ctx: FieldCtx, coeffs) -> list[FieldElement]:
    out = []
    for c in coeffs:
        if isinstance(c, int):
            out.append(ctx.scalar(c))
        elif isinstance(c, (list, tuple)) and all(isinstance(x, int) for x in c):
            out.append(ctx.element(c))
        else:
            raise CurveError(f"bad coefficient {c!r}")
    return poly_trim(ctx, out)


def _genus(char: int, deg_h: int, deg_f: int) -> int:
    if char == 2:
        return max(-(-deg_f // 2) - 1, deg_h - 1)
    return -(-deg_f // 2) - 1


def build_curve(ctx: FieldCtx, h, f, declared_genus: int | None = None) -> CurveModel:
    """Validate the model y^2 + h y = f and derive its genus and infinity type."""
    h, f = poly_trim(ctx, h), poly_trim(ctx, f)
    p = ctx.p
    if p != 2 and h:
        raise CurveError("odd characteristic models must have h = 0")
    if p == 2 and not h:
        raise CurveError("characteristic 2 needs h != 0 (y^2 = f is inseparable)")
    if not f and p != 2:
        raise CurveError("f must be nonzero")
    g = _genus(p, len(h) - 1, len(f) - 1)
    if g < 1:
        raise CurveError(f"model has genus {g} < 1")
    if declared_genus is not None and declared_genus != g:
        raise CurveError(f"declared genus {declared_genus} but the model has genus {g}")

    if p == 2:
        hd, fd = poly_deriv(ctx, h), poly_deriv(ctx, f)
        disc = poly_add(ctx, poly_mul(ctx, poly_mul(ctx, hd, hd), f), poly_mul(ctx, fd, fd))
        if poly_degree(ctx, poly_gcd(ctx, h, disc)) > 0:
            raise CurveError("affine model is singular")
    else:
        if poly_degree(ctx, poly_gcd(ctx, f, poly_deriv(ctx, f))) > 0:
            raise CurveError("f is not squarefree")

    def coef(poly, i):
        return poly[i] if i < len(poly) else ctx.zero

    H0, F0 = coef(h, g + 1), coef(f, 2 * g + 2)
    if p == 2 and not any(H0):
        # tangent check in the chart at infinity: H'(0)^2 F(0) + F'(0)^2 != 0
        H1, F1 = coef(h, g), coef(f, 2 * g + 1)
        if not any(ctx.add(ctx.mul(ctx.mul(H1, H1), F0), ctx.mul(F1, F1))):
            raise CurveError("model is singular at infinity")

    roots = ctx.quadratic_root_count(H0, F0)
    if p == 2 and not any(H0):
        kind = "ramified"
    elif p != 2 and not any(F0):
        kind = "ramified"
    else:
        kind = {2: "split", 0: "inert"}[roots]
    return CurveModel(ctx.size, p, ctx, tuple(h), tuple(f), g, kind)


def parse_curve(data) -> CurveModel:
    """Build a CurveModel from the JSON curve description (dict or JSON text).

    A rational right-hand side {"num": N, "den": D} is cleared by Y = D(x) y,
    giving Y^2 + D h Y = D N.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise CurveError(f"malformed curve JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CurveError("curve description must be a JSON object")
    if data.get("model", "quadratic") != "quadratic":
        raise CurveError(f"unsupported model {data.get('model')!r}")
    try:
        q = int(data["q"])
        p, n = prime_power(q)
        ctx = make_field(p, n)
        h = _read_poly(ctx, data.get("h", []))
        rhs = data["f"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CurveError(f"malformed curve description: {exc}") from exc
    if isinstance(rhs, dict):
        num = _read_poly(ctx, rhs["num"])
        den = _read_poly(ctx, rhs["den"])
        if not den:
            raise CurveError("zero denominator")
        h = poly_mul(ctx, den, h)
        f = poly_mul(ctx, den, num)
    else:
        f = _read_poly(ctx, rhs)
    genus = data.get("genus")
    return build_curve(ctx, h, f, None if genus is None else int(genus))


def _extension(c: CurveModel, m: int, limit: int) -> tuple[FieldCtx, dict]:
    if c.q**m > limit:
        raise ValueError(f"F_{c.q}^{m} exceeds the enumeration limit {limit}")
    ext = make_field(c.p, c.field.n * m, limit=limit)
    return ext, embedding(c.field, ext)


def count_points(c: CurveModel, m: int, limit: int = ENUMERATION_LIMIT) -> int:
    """N_m: points of the smooth model over F_{q^m}."""
    ext, emb = _extension(c, m, limit)
    h = [emb[a] for a in c.h]
    f = [emb[a] for a in c.f]
    total = 0
    for x in ext.elements():
        total += ext.quadratic_root_count(poly_eval(ext, h, x), poly_eval(ext, f, x))
    H0, F0 = c.infinity_equation()
    return total + ext.quadratic_root_count(emb[H0], emb[F0])


def mobius(n: int) -> int:
    result, m, d = 1, n, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    return -result if m > 1 else result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def places_from_points(N: list[int]) -> list[int]:
    """Moebius inversion B_m = (1/m) sum_{d|m} mu(d) N_{m/d}."""
    B = []
    for m in range(1, len(N) + 1):
        s = sum(mobius(d) * N[m // d - 1] for d in divisors(m))
        if s % m or s < 0:
            raise ValueError(f"point counts give non-integral or negative B_{m} = {s}/{m}")
        B.append(s // m)
    return B


@dataclass(frozen=True)
class Fiber:
    """The places above one place of the x-line: a monic irreducible p(x)
    (None for infinity), its degree and its splitting type."""

    poly: tuple[FieldElement, ...] | None
    degree: int
    kind: str

    def place_degrees(self) -> list[int]:
        if self.kind == "split":
            return [self.degree, self.degree]
        if self.kind == "inert":
            return [2 * self.degree]
        return [self.degree]


@dataclass(frozen=True)
class PlaceTable:
    q: int
    max_degree: int
    N: tuple[int, ...]
    B: tuple[int, ...]
    fibers: tuple[Fiber, ...] | None = field(default=None, compare=False)

    @property
    def B1(self) -> int:
        return self.B[0]


def place_counts(c: CurveModel, D: int, limit: int = ENUMERATION_LIMIT) -> PlaceTable:
    N = [count_points(c, m, limit) for m in range(1, D + 1)]
    return PlaceTable(c.q, D, tuple(N), tuple(places_from_points(N)))


def _fibers_of_degree(c: CurveModel, d: int, limit: int) -> list[Fiber]:
    ext, emb = _extension(c, d, limit)
    back = {v: k for k, v in emb.items()}
    h = [emb[a] for a in c.h]
    f = [emb[a] for a in c.f]
    seen = set()
    out = []
    for x in ext.elements():
        if x in seen:
            continue
        orbit = [x]
        y = ext.pow(x, c.q)
        while y != x:
            orbit.append(y)
            y = ext.pow(y, c.q)
        seen.update(orbit)
        if len(orbit) != d:
            continue
        poly = [ext.one]
        for r in orbit:
            poly = poly_mul(ext, poly, [ext.neg(r), ext.one])
        roots = ext.quadratic_root_count(poly_eval(ext, h, x), poly_eval(ext, f, x))
        kind = {2: "split", 1: "ramified", 0: "inert"}[roots]
        out.append(Fiber(tuple(back[a] for a in poly), d, kind))
    return out


def enumerate_places(c: CurveModel, D: int, limit: int = ENUMERATION_LIMIT) -> PlaceTable:
    """Explicit places of degree <= D, cross-checked against place_counts."""
    fibers = [Fiber(None, 1, c.infinity)]
    for d in range(1, D + 1):
        fibers.extend(_fibers_of_degree(c, d, limit))
    B = [0] * D
    for fb in fibers:
        for deg in fb.place_degrees():
            if deg <= D:
                B[deg - 1] += 1
    N = tuple(sum(d * B[d - 1] for d in divisors(m)) for m in range(1, D + 1))
    table = PlaceTable(c.q, D, N, tuple(B), tuple(fibers))
    direct = place_counts(c, D, limit)
    if direct.B != table.B:
        raise AssertionError(f"place enumeration {table.B} disagrees with point counts {direct.B}")
    return table


def n_from_places(B: list[int]) -> list[int]:
    return [sum(d * B[d - 1] for d in divisors(m)) for m in range(1, len(B) + 1)]

