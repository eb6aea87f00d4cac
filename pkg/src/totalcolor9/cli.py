"""Command-line entry point.

Exit status: 0 for success or an affirmative answer, 1 for a negative
answer (no coloring, no match, ...), 2 for input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .coloring import (
    InstanceTooLarge,
    parse_coloring,
    serialize_coloring,
    solve,
    total_chromatic_number,
    verify_total_coloring,
)
from .corpus import generated, write_corpus
from .discharging import DeltaExceeded, audit
from .embedding import EmbeddingError, PlanarEmbedding
from .extension import ExtensionError, UnknownLemma, run_extension
from .fixtures import FIXTURE_NAMES, fixture
from .formats import parse_embedding, serialize_embedding
from .generator import GenerationStalled, GeneratorConfig, generate_planar
from .graphs import NAMED
from .patterns import (
    contains_four_fan,
    fan4_pattern,
    format_pattern,
    load_catalog,
    match_configuration,
    structural_violations,
)
from .reducibility import check_fixture
from .scripts import script_for
from . import suites


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(spec: str) -> PlanarEmbedding:
    """A ``.rot`` file, or a built-in graph name (``icosahedron``, ``k4.rot``, ...) when no such file exists."""
    p = Path(spec)
    if not p.exists():
        stem = p.name[:-4] if p.name.endswith(".rot") else p.name
        if stem in NAMED:
            return NAMED[stem]()
        if stem.startswith("fx-") and stem[3:] in FIXTURE_NAMES:
            return fixture(stem[3:]).graph
    return parse_embedding(_read(spec))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------------


def cmd_verify(a) -> int:
    g = load_graph(a.graph)
    phi = parse_coloring(_read(a.coloring))
    bad = verify_total_coloring(g, phi, partial=a.partial)
    if not bad:
        print(f"proper total {phi.k}-coloring" + (" (partial)" if a.partial else ""))
        return 0
    for v in bad:
        print(v)
    return 1


def cmd_solve(a) -> int:
    g = load_graph(a.graph)
    partial = parse_coloring(_read(a.partial)) if a.partial else None
    phi = solve(g, a.colors, partial, a.node_limit)
    if phi is None:
        print(f"no total {a.colors}-coloring")
        return 1
    _emit(serialize_coloring(phi), a.out)
    return 0


def cmd_chromatic(a) -> int:
    g = load_graph(a.graph)
    print(total_chromatic_number(g))
    return 0


def cmd_fan4(a) -> int:
    w = contains_four_fan(load_graph(a.graph))
    if w is None:
        print("no 4-fan")
        return 1
    print(w)
    return 0


def _patterns_for(ident: str):
    cat = load_catalog()
    if ident == "fan4":
        return [fan4_pattern()]
    pats = cat.for_lemma(ident)
    if not pats:
        raise InputError(f"unknown pattern or lemma {ident!r}")
    return pats


def cmd_match(a) -> int:
    g = load_graph(a.graph)
    found = 0
    for p in _patterns_for(a.lemma):
        for w in match_configuration(p, g):
            print(w)
            found += 1
    if not found:
        print("no match")
    return 0 if found else 1


def cmd_violations(a) -> int:
    vs = structural_violations(load_graph(a.graph))
    for lemma, w in vs:
        print(f"{lemma} {w}")
    if not vs:
        print("no structural violations")
    return 0 if vs else 1


def cmd_discharge(a) -> int:
    g = load_graph(a.graph)
    try:
        r = audit(g, strict=a.strict)
    except DeltaExceeded as exc:
        raise InputError(str(exc)) from None
    if a.log:
        Path(a.log).write_text("".join(ln + "\n" for ln in r.log.lines()), encoding="utf-8", newline="\n")
    if a.json:
        sys.stdout.write(json.dumps(r.as_dict(), indent=1, sort_keys=True) + "\n")
    else:
        sys.stdout.write(r.text())
    return 0


def cmd_extend(a) -> int:
    g = load_graph(a.graph)
    reduced = parse_coloring(_read(a.coloring)) if a.coloring else None
    for p in _patterns_for(a.lemma):
        ws = match_configuration(p, g)
        if not ws:
            continue
        try:
            script = script_for(p.id)
        except UnknownLemma:
            raise InputError(f"no recoloring script for {p.id}") from None
        try:
            res = run_extension(g, script, ws[0].as_dict(), a.k, reduced)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        print(f"witness {ws[0]}")
        for ln in res.log_lines():
            print(ln)
        text = serialize_coloring(res.coloring)
        if a.out:
            _emit(text, a.out)
        else:
            print("coloring")
            sys.stdout.write(text)
        return 0
    print(f"{a.lemma} does not occur in the graph")
    return 1


def cmd_gen(a) -> int:
    if a.count is None:
        cfg = GeneratorConfig(a.n, a.cap, not a.allow_four_fan, a.p_delete, a.seed, a.delta)
        _emit(serialize_embedding(generate_planar(cfg)), a.out)
        return 0
    if not a.out:
        raise InputError("--count needs --out DIR")
    lo = a.n_min if a.n_min is not None else a.n
    es = generated(a.seed, a.count, lo, a.n, cap=a.cap, forbid_four_fan=not a.allow_four_fan,
                   p_deletes=(a.p_delete,), target_max_degree=a.delta)
    print(write_corpus(es, a.out))
    return 0


def cmd_corpus_run(a) -> int:
    chosen = a.suites.split(",") if a.suites else list(suites.SUITES)
    unknown = [s for s in chosen if s not in suites.SUITES]
    if unknown:
        raise InputError(f"unknown suite(s): {', '.join(unknown)}")
    calls = {
        "charge": lambda: suites.charge_identity(a.seed, a.charge_count),
        "rules": suites.rules_suite,
        "theorem": lambda: suites.theorem_suite(a.seed, a.theorem_count),
        "reducibility": lambda: suites.reducibility_suite(a.seed, a.samples, a.classes),
        "audit": lambda: suites.audit_suite(a.seed, a.audit_count),
        "oracle": lambda: suites.oracle_suite(a.seed, a.oracle_hosts),
    }
    results = [calls[s]() for s in chosen]
    lines = [f"corpus-run seed={a.seed}", f"{'crit':4s}  {'suite':22s} {'result':6s} detail"]
    lines += [f"{r.criterion:<4d}  {r.name:22s} {'PASS' if r.passed else 'FAIL':6s} {r.detail}" for r in results]
    _emit("\n".join(lines) + "\n", a.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_reducibility(a) -> int:
    names = a.fixture or list(FIXTURE_NAMES)
    ok = True
    for n in names:
        if n not in FIXTURE_NAMES:
            raise InputError(f"unknown fixture {n!r}")
        r = check_fixture(n, fixture(n), samples=a.samples, seed=a.seed, classes=a.classes)
        print(r.summary())
        for f in r.failures[:a.show]:
            print(f"  {f.error}")
        ok &= r.ok
    return 0 if ok else 1


def cmd_patterns(a) -> int:
    cat = load_catalog()
    if a.action == "list":
        for p in cat:
            print(f"{p.id:28s} {p.lemma:24s} {len(p.names)} vertices")
        return 0
    p = cat[a.id] if a.id in cat else None
    if p is None:
        raise InputError(f"unknown pattern {a.id!r}")
    sys.stdout.write(format_pattern(p))
    return 0


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="totalcolor9", description="Total 9-coloring laboratory.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def graph_cmd(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--graph", required=True, help=".rot file or built-in graph name")
        sp.set_defaults(fn=fn)
        return sp

    sp = graph_cmd("verify", cmd_verify, "check a total coloring")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--partial", action="store_true")

    sp = graph_cmd("solve", cmd_solve, "find a total k-coloring")
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--partial", help="coloring file to extend")
    sp.add_argument("--node-limit", type=int, default=0)
    sp.add_argument("--out")

    graph_cmd("chromatic", cmd_chromatic, "total chromatic number")
    graph_cmd("fan4", cmd_fan4, "look for a 4-fan")

    sp = graph_cmd("match", cmd_match, "occurrences of a catalogued structure")
    sp.add_argument("--lemma", required=True, help="pattern id, lemma id, or fan4")

    graph_cmd("violations", cmd_violations, "every catalogued structure present")

    sp = graph_cmd("discharge", cmd_discharge, "charges, transfers and audit")
    sp.add_argument("--log", help="write the transfer log here")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--strict", action="store_true", help="reject maximum degree above 8")

    sp = graph_cmd("extend", cmd_extend, "reduce, color and recolor")
    sp.add_argument("--lemma", required=True)
    sp.add_argument("--coloring", help="coloring of the reduced graph")
    sp.add_argument("--k", type=int, default=9)
    sp.add_argument("--out", help="write the final coloring here")

    sp = sub.add_parser("gen", help="generate plane graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=8)
    sp.add_argument("--p-delete", type=float, default=0.0)
    sp.add_argument("--allow-four-fan", action="store_true")
    sp.add_argument("--delta", type=int, help="require this maximum degree")
    sp.add_argument("--count", type=int, help="write a corpus of this many graphs")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("corpus-run", help="run the acceptance suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--suites", help="comma-separated subset of " + ",".join(suites.SUITES))
    sp.add_argument("--charge-count", type=int, default=1000)
    sp.add_argument("--theorem-count", type=int, default=200)
    sp.add_argument("--audit-count", type=int, default=400)
    sp.add_argument("--oracle-hosts", type=int, default=60)
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--classes", action="store_true", help="also walk coloring classes above the enumeration limit")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_corpus_run)

    sp = sub.add_parser("reducibility", help="run recoloring scripts over reduced colorings")
    sp.add_argument("--fixture", action="append")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--classes", action="store_true")
    sp.add_argument("--show", type=int, default=3)
    sp.set_defaults(fn=cmd_reducibility)

    sp = sub.add_parser("patterns", help="the structure catalog")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("id", nargs="?")
    sp.set_defaults(fn=cmd_patterns)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return a.fn(a)
    except (InputError, EmbeddingError, InstanceTooLarge, GenerationStalled, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExtensionError as exc:
        print(f"extension failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
