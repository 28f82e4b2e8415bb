"""Command line front end.

Arrangement and local-system arguments are JSON file paths, ``-`` for stdin,
or ``corpus:NAME`` / ``corpus:NAME:SYSTEM`` for built-in data.

Exit codes: 0 success (whatever the verdict), 2 input error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import corpus
from .admissibility import DEFAULT_SEARCH_BOUND, InvariantViolation, decide
from .aomoto import aomoto_dims, default_base
from .arrangement import Arrangement, ArrangementError, from_json, multiple_points
from .classify import classify
from .exact import fraction_str
from .local_system import LocalSystem, LocalSystemError, standard_lift

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class InputError(Exception):
    pass


def _read_json(source: str):
    try:
        if source == "-":
            return json.load(sys.stdin)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{source}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_arrangement(source: str) -> Arrangement:
    if source.startswith("corpus:"):
        return _corpus_entry(source.split(":")[1]).arrangement()
    try:
        return from_json(_read_json(source))
    except ArrangementError as exc:
        raise InputError(f"{source}: {exc}") from None


def load_local_system(source: str, arr: Arrangement) -> list[LocalSystem]:
    """One or more systems: ``{"classes": [...]}`` or ``{"systems": [{"classes": ...}, ...]}``."""
    if source.startswith("corpus:"):
        parts = source.split(":")
        if len(parts) != 3:
            raise InputError("corpus local systems are written corpus:NAME:SYSTEM")
        entry = _corpus_entry(parts[1])
        if parts[2] not in entry.local_systems:
            raise InputError(f"corpus entry {parts[1]} has no local system {parts[2]!r}")
        systems = [entry.local_systems[parts[2]]]
    else:
        data = _read_json(source)
        items = data.get("systems") if isinstance(data, dict) and "systems" in data else [data]
        if not isinstance(items, list):
            raise InputError(f"{source}: \"systems\" must be a list")
        systems = []
        for n, item in enumerate(items):
            try:
                systems.append(LocalSystem.from_json(item))
            except LocalSystemError as exc:
                raise InputError(f"{source}: system {n}: {exc}") from None
    for n, L in enumerate(systems):
        if len(L) != arr.n_lines:
            raise InputError(f"{source}: system {n} has {len(L)} classes but the arrangement has {arr.n_lines} lines")
    return systems


def _corpus_entry(name: str):
    try:
        return corpus.get(name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


# --- reports ---------------------------------------------------------------------

def _coords(p) -> list[str]:
    return [fraction_str(c) for c in p.coords]


def arrangement_summary(arr: Arrangement) -> dict:
    return {
        "n_lines": arr.n_lines,
        "lines": [[fraction_str(c) for c in l.coeffs] for l in arr.lines],
        "infinity": arr.infinity,
        "points": [
            {"point": _coords(ip.point), "incident": list(ip.incident), "multiplicity": ip.multiplicity}
            for ip in arr.points
        ],
        "multiple_points": [
            {"point": _coords(mp.point), "incident": list(mp.incident), "multiplicity": mp.multiplicity}
            for mp in multiple_points(arr)
        ],
    }


def classification_report(arr: Arrangement) -> dict:
    cls = classify(arr)
    out = {
        "k": cls.k,
        "class": cls.label,
        "minimal_covers": [list(c) for c in cls.minimal_covers],
        "concurrent": cls.concurrent_flag,
    }
    if cls.k == 0:
        out["note"] = "nodal"
    return out


def analyze_report(arr: Arrangement) -> dict:
    return {"arrangement": arrangement_summary(arr), "classification": classification_report(arr)}


def admissible_report(arr: Arrangement, systems: Sequence[LocalSystem], bound: int) -> dict:
    return {
        "classification": classification_report(arr),
        "bound": bound,
        "systems": [
            {"classes": L.to_json()["classes"], **decide(arr, L, bound).to_json()} for L in systems
        ],
    }


def aomoto_report(arr: Arrangement, systems: Sequence[LocalSystem], base: int, bound: int) -> dict:
    rows = []
    for L in systems:
        verdict = decide(arr, L, bound)
        # the comparison with H^*(M, L) concerns the admissible lift, not just any lift
        alpha = verdict.certificate.alpha if verdict.admissible else standard_lift(L, base)
        res = aomoto_dims(arr, alpha, base)
        rows.append({
            "residue_source": "certificate" if verdict.admissible else "standard_lift",
            "classes": L.to_json()["classes"],
            "residues": alpha.to_json(),
            **res.to_json(),
            "admissible": verdict.admissible,
            "equals_twisted_cohomology": verdict.admissible,
            "caveat": None if verdict.admissible else
                "admissibility not established; these numbers need not equal dim H^i(M, L)",
        })
    return {"base": base, "systems": rows}


# --- text rendering ----------------------------------------------------------------

def _render_analyze(rep: dict) -> str:
    a, c = rep["arrangement"], rep["classification"]
    out = [f"{a['n_lines']} lines" + (f" (L_{a['infinity']} at infinity)" if a["infinity"] is not None else "")]
    for i, l in enumerate(a["lines"]):
        out.append(f"  L_{i}: ({', '.join(l)})")
    out.append(f"{len(a['points'])} intersection points, {len(a['multiple_points'])} of multiplicity >= 3")
    for mp in a["multiple_points"]:
        out.append(f"  ({':'.join(mp['point'])})  mult {mp['multiplicity']}  lines {mp['incident']}")
    out.append(_render_class(c))
    return "\n".join(out)


def _render_class(c: dict) -> str:
    text = f"class {c['class']} (k = {c['k']})"
    if c["k"] == 0:
        return text + ", nodal"
    text += f"; minimal covers: {c['minimal_covers']}"
    if c["k"] == 3:
        text += f"; concurrent cover: {'yes' if c['concurrent'] else 'no'}"
    return text


def _render_admissible(rep: dict) -> str:
    out = [_render_class(rep["classification"])]
    for n, s in enumerate(rep["systems"]):
        out.append(f"system {n}: {s['verdict']}")
        cert = s.get("certificate")
        if cert:
            res = ", ".join(_cx(r) for r in cert["residues"])
            out.append(f"  method {cert['method']}, cover {cert['cover_used']}")
            out.append(f"  residues: {res}")
        for d in s["diagnostics"]:
            out.append(f"  - {d}")
    return "\n".join(out)


def _render_aomoto(rep: dict) -> str:
    out = [f"deconed at L_{rep['base']}"]
    for n, s in enumerate(rep["systems"]):
        h0, h1, h2 = s["h"]
        out.append(f"system {n}: h0 = {h0}, h1 = {h1}, h2 = {h2}  (betti {s['betti']})")
        if s["caveat"]:
            out.append(f"  caveat: {s['caveat']}")
    return "\n".join(out)


def _cx(d: dict) -> str:
    return d["re"] if d["im"] == "0" else f"{d['re']}{'' if d['im'].startswith('-') else '+'}{d['im']}i"


# --- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lineadmit",
        description="Classify line arrangements and certify admissibility of rank-one local systems.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = with_json(sub.add_parser("analyze", help="incidences, multiple points and class"))
    p.add_argument("arrangement")
    p = with_json(sub.add_parser("classify", help="the class C_k and its minimal covers"))
    p.add_argument("arrangement")
    p = with_json(sub.add_parser("admissible", help="decide admissibility of local systems"))
    p.add_argument("arrangement")
    p.add_argument("local_system")
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND, help="shift search bound (default %(default)s)")
    p = with_json(sub.add_parser("aomoto", help="dimensions of the Aomoto complex cohomology"))
    p.add_argument("arrangement")
    p.add_argument("local_system")
    p.add_argument("--base", type=int, default=None, help="deconed line (default: line at infinity, else 0)")
    p.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    p = sub.add_parser("corpus", help="built-in example arrangements")
    csub = p.add_subparsers(dest="corpus_command", required=True)
    csub.add_parser("list")
    g = csub.add_parser("get")
    g.add_argument("name")
    g.add_argument("--system", default=None, help="print a stored local system instead")
    return ap


def run(args) -> str:
    if args.command == "corpus":
        if args.corpus_command == "list":
            return "\n".join(f"{n}\t{corpus.get(n).description}" for n in corpus.names())
        entry = _corpus_entry(args.name)
        if args.system is not None:
            if args.system not in entry.local_systems:
                raise InputError(f"corpus entry {entry.name} has no local system {args.system!r}")
            return _dump(entry.local_systems[args.system].to_json())
        return _dump(entry.arrangement().to_json())

    arr = load_arrangement(args.arrangement)
    if args.command == "analyze":
        rep = analyze_report(arr)
        return _dump(rep) if args.json else _render_analyze(rep)
    if args.command == "classify":
        rep = classification_report(arr)
        return _dump(rep) if args.json else _render_class(rep)
    if args.bound < 0:
        raise InputError("--bound must be >= 0")
    systems = load_local_system(args.local_system, arr)
    if args.command == "admissible":
        rep = admissible_report(arr, systems, args.bound)
        return _dump(rep) if args.json else _render_admissible(rep)
    base = default_base(arr) if args.base is None else args.base
    if not 0 <= base < arr.n_lines:
        raise InputError(f"--base {base} is not a line index (0..{arr.n_lines - 1})")
    rep = aomoto_report(arr, systems, base, args.bound)
    return _dump(rep) if args.json else _render_aomoto(rep)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        print(run(args))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ArrangementError, LocalSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
