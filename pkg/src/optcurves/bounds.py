"""Closed-form bounds and numeric audits.

Everything here is exact integer or rational arithmetic: the point-count
interval, the tightened interval and its applicability table, the Singh
and automorphism-count bounds, the exceptional-curve data, and the audits
that cross-check the stored classification tables against those bounds.
Audits never raise on a discrepancy in the stored data; they return
flagged findings so known transcription quirks stay visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import (
    exceptional_rows,
    factored_to_int,
    load_catalog,
    prose_orders,
    table_orders,
)
from .ff import SUPPORTED_DISCRIMINANTS, discriminant, enumerate_discriminant_fields

__all__ = [
    "BoundContext",
    "AuditFinding",
    "hws_interval",
    "improved_bound_applies",
    "singh_bound",
    "serre_aut_bound",
    "exceptional_curve_data",
    "singh_vs_half_order_audit",
    "table1_vs_serre_audit",
    "exceptional_divisibility_audit",
    "no_field_audit",
    "ordinary_audit",
    "legendre_mod5_audit",
    "run_all_audits",
]


@dataclass(frozen=True)
class BoundContext:
    q: int
    g: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def record(self):
        return discriminant(self.q)

    @property
    def m(self) -> int:
        return self.record.m

    @property
    def p(self) -> int:
        return self.record.p

    @property
    def d(self) -> int:
        return self.record.d


@dataclass(frozen=True)
class AuditFinding:
    claim: str
    status: str  # "pass" | "flag"
    evidence: str

    @property
    def flagged(self) -> bool:
        return self.status == "flag"


def hws_interval(ctx: BoundContext) -> tuple[int, int]:
    """Closed interval of admissible point counts, |#C - q - 1| <= g*m."""
    q, g, m = ctx.q, ctx.g, ctx.m
    return (q + 1 - g * m, q + 1 + g * m)


# applicability table for the tightened bound g*m - 2: one row per entry,
# keyed by discriminant with predicates on q, p and a genus range
_IMPROVED_ROWS = (
    (-3, lambda q, p: q != 3, range(3, 11)),
    (-4, lambda q, p: q != 2, range(3, 11)),
    (-7, lambda q, p: True, range(4, 8)),
    (-8, lambda q, p: p != 3, range(3, 8)),
    (-11, lambda q, p: p != 3 and q < 10**4, range(4, 5)),
    (-11, lambda q, p: p > 5, range(5, 6)),
    (-19, lambda q, p: q < 10**4, range(4, 5)),
    (-19, lambda q, p: q % 5 != 1, range(5, 6)),
)


def improved_bound_applies(ctx: BoundContext) -> tuple[bool, int | None]:
    """Whether the tightened bound g*m - 2 applies; returns (applies, row
    index or None). Requires the field discriminant to lie in the
    supported set."""
    rec = ctx.record
    if rec.d not in SUPPORTED_DISCRIMINANTS:
        return (False, None)
    for i, (d, pred, g_range) in enumerate(_IMPROVED_ROWS):
        if rec.d == d and ctx.g in g_range and pred(ctx.q, rec.p):
            return (True, i)
    return (False, None)


def improved_interval(ctx: BoundContext) -> tuple[int, int]:
    """The tightened count interval when applicable, else the plain one."""
    lo, hi = hws_interval(ctx)
    applies, _ = improved_bound_applies(ctx)
    if applies:
        return (lo + 2, hi - 2)
    return (lo, hi)


def singh_bound(p: int, g: int) -> Fraction:
    """Exact value of (4pg^2/(p-1)) * (2g/(p-1) + 1) * (4pg^2/(p-1)^2 + 1)."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    if g < 1:
        raise ValueError("g must be >= 1")
    a = Fraction(4 * p * g * g, p - 1)
    b = Fraction(2 * g, p - 1) + 1
    c = Fraction(4 * p * g * g, (p - 1) ** 2) + 1
    return a * b * c


def serre_aut_bound(g: int, hyperelliptic: bool) -> int:
    """84(g-1) for hyperelliptic curves, 168(g-1) otherwise."""
    if g < 2:
        raise ValueError("g must be >= 2")
    return (84 if hyperelliptic else 168) * (g - 1)


def exceptional_curve_data(p: int) -> dict:
    """The curve y^2 = x^p - x: genus (p-1)/2, #Aut = 2p(p^2-1)."""
    if p == 2 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    return {"p": p, "g": (p - 1) // 2, "aut_order": 2 * p * (p * p - 1)}


# -- audits ----------------------------------------------------------------


def singh_vs_half_order_audit(
    primes=(2, 3, 5, 7, 11), dims=(6, 8, 9, 10), cat=None
) -> list[AuditFinding]:
    """In small characteristic the Singh bound must undercut half the
    stored d=-3 automorphism order at each relevant rank (the comparison
    is cross-multiplied by 2, no division)."""
    cat = cat or load_catalog()
    out = []
    for g in dims:
        orders = table_orders(-3, g, cat)
        if not orders:
            out.append(AuditFinding(
                claim=f"singh-vs-half-order d=-3 dim={g}",
                status="flag",
                evidence="no stored order at this rank",
            ))
            continue
        order = orders[0]
        for p in primes:
            s = singh_bound(p, g)
            ok = 2 * s.numerator < order * s.denominator
            out.append(AuditFinding(
                claim=f"singh-vs-half-order p={p} g={g}",
                status="pass" if ok else "flag",
                evidence=f"2*Singh = {2 * s} vs order {order}",
            ))
    return out


def table1_vs_serre_audit(dims=(6, 8, 9, 10), cat=None) -> list[AuditFinding]:
    """For p >= 13 the argument compares the stored d=-3 orders against
    168(g-1); every stored order must exceed it."""
    cat = cat or load_catalog()
    out = []
    for g in dims:
        bound = serre_aut_bound(g, hyperelliptic=False)
        for order in table_orders(-3, g, cat) or []:
            ok = order > bound
            out.append(AuditFinding(
                claim=f"table1-vs-serre g={g}",
                status="pass" if ok else "flag",
                evidence=f"order {order} vs 168(g-1) = {bound}",
            ))
    return out


def exceptional_divisibility_audit(cat=None) -> list[AuditFinding]:
    """Two checks per stored exceptional row (p, genus g, printed #Aut):

    - the printed order must match 2p(p^2-1) (the p=11 row is a known
      mismatch: printed 1980, formula 2640);
    - no stored automorphism order at rank g may divide the printed
      order (the p=7 row is the known exception: 336 divides 672).
    """
    cat = cat or load_catalog()
    out = []
    for row in exceptional_rows(cat):
        p, g = row["p"], row["g"]
        printed = factored_to_int(row["printed_order"])
        formula = exceptional_curve_data(p)["aut_order"]
        out.append(AuditFinding(
            claim=f"exceptional-order p={p}",
            status="pass" if printed == formula else "flag",
            evidence=f"printed {printed}, formula 2p(p^2-1) = {formula}",
        ))
        for d in SUPPORTED_DISCRIMINANTS:
            orders = table_orders(d, g, cat)
            if orders is None:
                orders = prose_orders(d, g, cat)
            for order in orders or []:
                divides = printed % order == 0
                out.append(AuditFinding(
                    claim=f"exceptional-divisibility p={p} g={g} d={d}",
                    status="flag" if divides else "pass",
                    evidence=f"module order {order} "
                             f"{'divides' if divides else 'does not divide'} "
                             f"curve order {printed}",
                ))
    return out


def no_field_audit(d: int, primes, q_max: int = 2**32,
                   exclude=()) -> list[AuditFinding]:
    """Exhaustively confirm that no prime power q = p^n < q_max with p in
    `primes` has field discriminant d. `exclude` lists fields outside the
    claim's scope (q=2 for d=-4: the tightened bound there assumes q != 2,
    and 4 - 4*2 = -4 makes q=2 itself a trivial hit)."""
    hits = []
    for rec in enumerate_discriminant_fields(d, q_max):
        if rec.p in set(primes) and rec.q not in set(exclude):
            hits.append(rec.q)
    prime_str = ",".join(str(p) for p in sorted(set(primes)))
    return [AuditFinding(
        claim=f"no-field d={d} p in {{{prime_str}}}",
        status="pass" if not hits else "flag",
        evidence=f"q < {q_max}: " + ("none found" if not hits
                                     else f"found {hits}"),
    )]


def ordinary_audit(q_max: int = 10**4) -> list[AuditFinding]:
    """For every supported-discriminant field with q not in {2, 3}, the
    characteristic must not divide m (trace coprime to p, so the optimal
    elliptic curve is ordinary)."""
    out = []
    for d in sorted(SUPPORTED_DISCRIMINANTS, reverse=True):
        bad = []
        for rec in enumerate_discriminant_fields(d, q_max):
            if rec.q in (2, 3):
                continue
            if rec.m % rec.p == 0:
                bad.append(rec.q)
        out.append(AuditFinding(
            claim=f"ordinarity d={d} q<{q_max}",
            status="pass" if not bad else "flag",
            evidence="p never divides m" if not bad else f"p | m at {bad}",
        ))
    return out


def legendre_mod5_audit(q_max: int = 10**4) -> list[AuditFinding]:
    """d=-19 fields below the cap: none may be congruent to 3 mod 5
    (otherwise 4q-19 would be a square that is a non-residue mod 5),
    and the residues are tabulated for the genus-5 applicability flag."""
    qs = [rec.q for rec in enumerate_discriminant_fields(-19, q_max)]
    residues = {q: q % 5 for q in qs}
    bad = [q for q, r in residues.items() if r == 3]
    out = [AuditFinding(
        claim=f"legendre-mod5 d=-19 q<{q_max}",
        status="pass" if not bad else "flag",
        evidence=f"residues {residues}" + (f"; q=3 mod 5 at {bad}" if bad else ""),
    )]
    for q, r in residues.items():
        s = math.isqrt(4 * q - 19)
        if s * s == 4 * q - 19 and r == 3:
            out.append(AuditFinding(
                claim=f"legendre-mod5 square-check q={q}",
                status="flag",
                evidence=f"4q-19 = {4 * q - 19} is a square with q = 3 mod 5",
            ))
    return out


def run_all_audits(cat=None, q_max: int = 2**32) -> list[AuditFinding]:
    """The full audit battery. Exactly two findings are expected to carry
    the 'flag' status: the p=11 exceptional order (printed 1980, formula
    2640) and the p=7 rank-3 divisibility (336 divides 672)."""
    cat = cat or load_catalog()
    findings = []
    findings += singh_vs_half_order_audit(cat=cat)
    findings += table1_vs_serre_audit(cat=cat)
    findings += exceptional_divisibility_audit(cat=cat)
    findings += no_field_audit(-4, (2, 3, 7, 11), q_max, exclude=(2,))
    findings += no_field_audit(-8, (2, 5, 7), q_max)
    findings += ordinary_audit()
    findings += legendre_mod5_audit()
    return findings
