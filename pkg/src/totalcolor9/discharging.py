"""Charges, the five transfer rules, and the audit.

Bearers are ``("v", id)`` and ``("f", index)``.  All amounts are
:class:`fractions.Fraction`; nothing here touches floats.

Every rule reads the initial state only, so transfers never cascade.
Incidences are counted with boundary-walk multiplicity.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .embedding import PlanarEmbedding, degree_stats
from .patterns import Catalog, MatchWitness, contains_four_fan, structural_violations

Bearer = tuple[str, int]
RULES = ("R1", "R2", "R3", "R4", "R5")

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


class DischargingError(ValueError):
    pass


class LogMismatch(DischargingError):
    pass


class DeltaExceeded(DischargingError):
    """Maximum degree above 8: outside the regime the rules were designed for."""


def fmt_fraction(q: Fraction) -> str:
    """``p/q`` in lowest terms, or a bare integer."""
    return str(q)


def fmt_bearer(b: Bearer) -> str:
    return f"{b[0]}{b[1]}"


@dataclass
class ChargeLedger:
    phase: str
    charges: dict[Bearer, Fraction]

    def total(self) -> Fraction:
        return sum(self.charges.values(), Fraction(0))

    def negative(self) -> list[Bearer]:
        return sorted(b for b, q in self.charges.items() if q < 0)

    def __getitem__(self, b: Bearer) -> Fraction:
        return self.charges[b]


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Bearer
    target: Bearer
    amount: Fraction

    def __str__(self) -> str:
        return f"{self.rule} {fmt_bearer(self.source)} {fmt_bearer(self.target)} {fmt_fraction(self.amount)}"


@dataclass
class TransferLog:
    """Transfers in canonical order; ``count`` is fixed when the log is produced."""

    entries: tuple[Transfer, ...]
    count: int

    def by_rule(self) -> Counter:
        return Counter(t.rule for t in self.entries)

    def lines(self) -> list[str]:
        return [str(t) for t in self.entries]


def initial_charges(g: PlanarEmbedding) -> ChargeLedger:
    ch: dict[Bearer, Fraction] = {("v", v): Fraction(g.degree(v) - 4) for v in g.vertices}
    ch.update({("f", i): Fraction(f.length - 4) for i, f in enumerate(g.faces)})
    return ChargeLedger("initial", ch)


def _has_small(g: PlanarEmbedding, face_vertices: Iterable[int]) -> bool:
    return any(g.degree(u) <= 4 for u in face_vertices)


def rule_transfers(g: PlanarEmbedding) -> list[Transfer]:
    """All transfers of the five rules, read off the initial state."""
    out: list[Transfer] = []
    for v in g.vertices:
        d = g.degree(v)
        if d == 2:
            out += [Transfer("R1", ("v", u), ("v", v), Fraction(1)) for u in g.neighbors(v)]
        elif d == 3:
            out += [Transfer("R2", ("v", u), ("v", v), THIRD) for u in g.neighbors(v)]
    for i, f in enumerate(g.faces):
        if f.length == 3:
            small = _has_small(g, f.vertices)
            for u in f.vertices:
                d = g.degree(u)
                if d == 5:
                    out.append(Transfer("R3", ("v", u), ("f", i), THIRD))
                elif d >= 6:
                    out.append(Transfer("R4", ("v", u), ("f", i), HALF if small else THIRD))
        elif f.length >= 5:
            eights = [u for u in f.vertices if g.degree(u) == 8]
            if eights:
                share = Fraction(f.length - 4, len(eights))
                out += [Transfer("R5", ("f", i), ("v", u), share) for u in eights]
    return out


def apply_rules(g: PlanarEmbedding, ledger: ChargeLedger | None = None) -> tuple[ChargeLedger, TransferLog]:
    init = ledger or initial_charges(g)
    if init.phase != "initial":
        raise DischargingError("apply_rules needs an initial-phase ledger")
    ts = rule_transfers(g)
    log = TransferLog(tuple(ts), len(ts))
    return replay(init, log), log


def replay(initial: ChargeLedger, log: TransferLog) -> ChargeLedger:
    if len(log.entries) != log.count:
        raise LogMismatch(f"log has {len(log.entries)} entries, expected {log.count}")
    ch = dict(initial.charges)
    for t in log.entries:
        if t.source not in ch or t.target not in ch:
            raise LogMismatch(f"unknown bearer in {t}")
        if t.amount <= 0:
            raise LogMismatch(f"non-positive amount in {t}")
        ch[t.source] -= t.amount
        ch[t.target] += t.amount
    return ChargeLedger("final", ch)


def validate_log(g: PlanarEmbedding, log: TransferLog) -> list[str]:
    """Re-check every entry against its rule's predicate; returns complaints."""
    bad = []
    for t in log.entries:
        ok = False
        if t.rule in ("R1", "R2") and t.source[0] == "v" and t.target[0] == "v":
            d = g.degree(t.target[1])
            want = {2: Fraction(1), 3: THIRD}.get(d)
            ok = t.rule == ("R1" if d == 2 else "R2") and t.amount == want \
                and g.has_edge(t.source[1], t.target[1])
        elif t.rule in ("R3", "R4") and t.source[0] == "v" and t.target[0] == "f":
            f = g.faces[t.target[1]]
            d = g.degree(t.source[1])
            if f.length == 3 and t.source[1] in f.vertices:
                if t.rule == "R3":
                    ok = d == 5 and t.amount == THIRD
                else:
                    ok = d >= 6 and t.amount == (HALF if _has_small(g, f.vertices) else THIRD)
        elif t.rule == "R5" and t.source[0] == "f" and t.target[0] == "v":
            f = g.faces[t.source[1]]
            c = sum(1 for u in f.vertices if g.degree(u) == 8)
            ok = f.length >= 5 and g.degree(t.target[1]) == 8 and c > 0 \
                and t.amount == Fraction(f.length - 4, c)
        if not ok:
            bad.append(str(t))
    return bad


# -- audit -------------------------------------------------------------------------------


@dataclass
class VertexCase:
    """Where a 5+-vertex falls in the per-degree case analysis.

    ``crude`` charges every incident 3-face at the sender's top rate and
    ignores face receipts.  ``expression`` splits the final charge into the
    same terms as the hand analysis; its value always equals ``final``.
    """

    vertex: int
    degree: int
    m3: int
    n2: int
    n3: int
    light3: int          # incident 3-faces with no 4- vertex
    received: Fraction   # from 5+-faces
    label: str
    crude: Fraction
    expression: str
    final: Fraction


def _vertex_case(g: PlanarEmbedding, v: int, log: TransferLog, final: Fraction) -> VertexCase:
    st = degree_stats(g, v)
    d, m3, n2, n3 = st.degree, st.m_k(3), st.n_k(2), st.n_k(3)
    top = THIRD if d == 5 else HALF
    light = sum(1 for t in log.entries if t.source == ("v", v) and t.target[0] == "f"
                and t.amount == THIRD) if d >= 6 else 0
    received = sum((t.amount for t in log.entries if t.rule == "R5" and t.target == ("v", v)), Fraction(0))
    crude = Fraction(d - 4) - m3 * top - n2 - n3 * THIRD
    parts = [str(d - 4)]
    if received:
        parts.append(f"+ {fmt_fraction(received)}")
    if m3 - light:
        parts.append(f"- {m3 - light}*{fmt_fraction(top)}")
    if light:
        parts.append(f"- {light}*1/3")
    if n2:
        parts.append(f"- {n2}*1")
    if n3:
        parts.append(f"- {n3}*1/3")
    label = f"k={d},m3={m3}"
    if d >= 7:
        label += f",n3={n3}"
    if d == 8:
        label += f",n2={n2}"
    if light:
        label += f",light3={light}"
    return VertexCase(v, d, m3, n2, n3, light, received, label, crude, " ".join(parts), final)


@dataclass
class AuditReport:
    initial: ChargeLedger
    final: ChargeLedger
    log: TransferLog
    negative: list[Bearer]
    violations: list[tuple[str, MatchWitness]]
    cases: list[VertexCase]
    max_degree: int
    out_of_regime: bool = False
    four_fan: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.negative:
            return "nonnegative"
        return "justified" if self.violations else "unexplained"

    def text(self) -> str:
        lines = [
            f"initial_total {fmt_fraction(self.initial.total())}",
            f"final_total {fmt_fraction(self.final.total())}",
            f"max_degree {self.max_degree}{' OUT-OF-REGIME' if self.out_of_regime else ''}",
            f"four_fan {'yes' if self.four_fan else 'no'}",
            f"transfers {self.log.count} "
            + " ".join(f"{r}={self.log.by_rule().get(r, 0)}" for r in RULES),
            f"negative {len(self.negative)}",
        ]
        for b in self.negative:
            lines.append(f"  {fmt_bearer(b)} {fmt_fraction(self.final[b])}")
        lines.append(f"violations {len(self.violations)}")
        for lem, w in self.violations:
            lines.append(f"  {lem} {w}")
        lines.append(f"cases {len(self.cases)}")
        for c in self.cases:
            lines.append(f"  v{c.vertex} {c.label} crude {fmt_fraction(c.crude)}"
                         f" final {c.expression} = {fmt_fraction(c.final)}")
        lines += [f"note {n}" for n in self.notes]
        lines.append(f"verdict {self.verdict}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "initial_total": fmt_fraction(self.initial.total()),
            "final_total": fmt_fraction(self.final.total()),
            "max_degree": self.max_degree,
            "out_of_regime": self.out_of_regime,
            "four_fan": self.four_fan,
            "transfers": [str(t) for t in self.log.entries],
            "negative": {fmt_bearer(b): fmt_fraction(self.final[b]) for b in self.negative},
            "violations": [{"lemma": lem, "witness": w.as_dict()} for lem, w in self.violations],
            "cases": [{"vertex": c.vertex, "label": c.label, "expression": c.expression,
                       "crude": fmt_fraction(c.crude), "final": fmt_fraction(c.final)} for c in self.cases],
            "notes": list(self.notes),
            "verdict": self.verdict,
        }


def audit(g: PlanarEmbedding, catalog: Catalog | None = None, strict: bool = False) -> AuditReport:
    """Charges, transfers and structural explanation for every negative bearer.

    With ``strict`` a maximum degree above 8 raises :class:`DeltaExceeded`;
    otherwise the report is computed anyway and flagged out of regime.
    """
    delta = g.max_degree
    if delta > 8 and strict:
        raise DeltaExceeded(f"maximum degree {delta} > 8")
    init = initial_charges(g)
    final, log = apply_rules(g, init)
    notes = []
    if init.total() != -8 or final.total() != init.total():
        notes.append("charge totals differ from -8")
    repeats = [i for i, f in enumerate(g.faces) if not f.is_simple()]
    if repeats:
        notes.append("faces with repeated boundary vertices: " + " ".join(f"f{i}" for i in repeats))
    cases = [_vertex_case(g, v, log, final[("v", v)]) for v in g.vertices if 5 <= g.degree(v) <= 8]
    return AuditReport(init, final, log, final.negative(), structural_violations(g, catalog),
                       cases, delta, delta > 8, contains_four_fan(g) is not None, notes)


def parse_log(text: str) -> TransferLog:
    entries = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        rule, src, dst, amt = ln.split()
        entries.append(Transfer(rule, (src[0], int(src[1:])), (dst[0], int(dst[1:])), Fraction(amt)))
    return TransferLog(tuple(entries), len(entries))


def charges_by_kind(ledger: ChargeLedger) -> dict[str, Fraction]:
    acc: dict[str, Fraction] = defaultdict(Fraction)
    for (kind, _), q in ledger.charges.items():
        acc[kind] += q
    return dict(acc)
