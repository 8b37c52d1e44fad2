"""eirep command line."""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__, corpus
from . import linfield as lf
from .algebra import (analysis_report, category_algebra, ext_quiver, primitive_idempotents,
                      radical, radical_powers)
from .endotriv import endotrivialize
from .fincat import (is_ei, is_endotrivial, is_skeletal, object_poset,
                     validate_category)

COMMANDS = ("validate", "ei", "endotrivialize", "poset", "algebra", "radical", "idempotents",
            "quiver", "classify", "oracle-count", "bundle")


class CliError(Exception):
    pass


def seed_from_env() -> int:
    raw = os.environ.get("EIREP_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"EIREP_SEED must be an integer, got {raw!r}") from None


def _load(path: str):
    p = Path(path)
    if p.exists():
        text = p.read_text()
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as err:
            raise CliError(f"{path}: parse error at line {err.lineno}, column {err.colno}: {err.msg}") from None
        return validate_category(raw), text.encode()
    name = p.stem
    if name in corpus.CORPUS:
        C = corpus.get(name)
        return C, C.dumps().encode()
    raise CliError(f"{path}: no such file and no bundled example named {name!r}")


def _field(args, C):
    if args.char is None:
        raise CliError("--char is required for this command")
    if args.char == 0:
        from .reptype import coprime_field
        F = coprime_field(C)
        return F, f"characteristic 0 substituted by F_{F.q}"
    return lf.field_make(args.char, args.ext), None


def _dimvector(text):
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CliError(f"bad dimension vector {text!r}") from None


def _category_summary(C) -> dict:
    return {"objects": list(C.objects),
            "morphisms": len(C.morphisms),
            "hom_sizes": {f"{x}->{y}": len(C.hom(x, y)) for x in C.objects for y in C.objects if C.hom(x, y)}}


def run_command(cmd: str, C, args, seed: int) -> tuple[dict, str]:
    """(payload, human-readable text)."""
    if cmd == "validate":
        s = _category_summary(C)
        return {"valid": True, **s}, f"valid: {len(s['objects'])} objects, {s['morphisms']} morphisms"
    if cmd == "ei":
        d = {"ei": is_ei(C), "endotrivial": is_endotrivial(C), "skeletal": is_skeletal(C)}
        return d, "  ".join(f"{k}={'yes' if v else 'no'}" for k, v in d.items())
    if cmd == "endotrivialize":
        E = endotrivialize(C)
        Q = E.quotient
        d = {"quotient": _category_summary(Q), "classes": E.classes,
             "morphism_map": dict(sorted(E.functor.on_morphisms.items())),
             "quotient_category": Q.to_json()}
        lines = [f"quotient on {', '.join(Q.objects)}"]
        for k, v in d["quotient"]["hom_sizes"].items():
            lines.append(f"  {k}: {v}")
        return d, "\n".join(lines)
    if cmd == "poset":
        P = object_poset(C)
        d = {"elements": list(P.elements), "hasse": [list(e) for e in P.hasse()],
             "components": P.components(), "union_of_chains": P.is_union_of_chains()}
        text = "hasse: " + (", ".join(f"{a}<{b}" for a, b in P.hasse()) or "(none)")
        return d, text + f"\nunion of chains: {'yes' if d['union_of_chains'] else 'no'}"

    F, note = _field(args, C)
    base = {"field": {"p": F.p, "k": F.k}}
    if note:
        base["note"] = note
    if cmd == "algebra":
        A = category_algebra(C, F)
        d = {**base, "dim": A.dim, "basis": A.labels}
        return d, f"dim kC = {A.dim} over F_{F.q}"
    if cmd == "radical":
        A = category_algebra(C, F)
        R = radical(A)
        dims = [len(P) for P in radical_powers(A, R)]
        d = {**base, "dim": len(R), "power_dims": dims, "basis": [A.format(r) for r in R]}
        return d, f"dim rad = {len(R)}; rad^i dims {dims}"
    if cmd == "idempotents":
        D = primitive_idempotents(category_algebra(C, F), seed=seed)
        d = {**base, **D.to_json()}
        return d, f"{len(D.idempotents)} primitive idempotents, {len(D.classes)} simple modules" + (
            f" (over F_{D.algebra.F.q})" if D.algebra.F != F else "")
    if cmd == "quiver":
        A = category_algebra(C, F)
        rep = analysis_report(A, seed=seed)
        Q = ext_quiver(primitive_idempotents(A, seed=seed))
        d = {**base, "ext_quiver": rep["ext_quiver"], "analysis_field": rep["analysis_field"]}
        arrows = [f"{i}->{j} x{m}" for (i, j), m in sorted(Q.arrows.items(), key=str)]
        return d, f"vertices: {', '.join(map(str, Q.vertices))}\narrows: {', '.join(arrows) or '(none)'}"
    if cmd == "classify":
        from .reptype import classify
        v = classify(C, F, seed=seed, oracle_dim=_dimvector(args.dim))
        d = {**base, **v.to_json()}
        if note:
            d["regime"] = note
        return d, f"{v.verdict} ({v.rule or 'no rule applied'})"
    if cmd == "oracle-count":
        from .oracle import oracle_report
        dv = _dimvector(args.dim)
        if dv is None:
            raise CliError("oracle-count needs --dim")
        r = oracle_report(C, dv, F, budget=args.budget)
        d = {**base, **r.to_json()}
        return d, str(r.indecomposable_classes)
    raise CliError(f"unknown command {cmd}")


def _inputs(paths):
    out = []
    for p in paths:
        pp = Path(p)
        if pp.is_dir():
            out.extend(sorted(str(f) for f in pp.glob("*.json")))
        else:
            out.append(p)
    return out


def write_bundle(directory: str) -> list[str]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(corpus.CORPUS):
        f = d / f"{name}.json"
        f.write_text(corpus.get(name).dumps() + "\n")
        written.append(str(f))
    return written


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eirep", description="Representation type of finite EI-categories.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("paths", nargs="*", help="category JSON files, directories or bundled example names")
    ap.add_argument("--char", type=int, help="field characteristic (0 picks a coprime finite field)")
    ap.add_argument("--ext", type=int, default=1, help="extension degree k of F_{p^k}")
    ap.add_argument("--dim", help="dimension vector d1,d2,... (oracle)")
    ap.add_argument("--budget", type=int, default=2**30, help="oracle search-space budget")
    ap.add_argument("--json", action="store_true", help="emit JSON reports")
    ap.add_argument("--version", action="version", version=f"eirep {__version__}")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        seed = seed_from_env()
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.command == "bundle":
        target = args.paths[0] if args.paths else "corpus"
        files = write_bundle(target)
        if args.json:
            print(json.dumps({"tool": {"name": "eirep", "version": __version__}, "files": files}, indent=2))
        else:
            print("\n".join(files))
        return 0
    if not args.paths:
        print("error: no input given", file=sys.stderr)
        return 2
    status = 0
    reports = []
    inputs = _inputs(args.paths)
    for path in inputs:
        report = {"tool": {"name": "eirep", "version": __version__}, "seed": seed,
                  "command": args.command, "input": path}
        try:
            C, raw = _load(path)
            report["input_sha256"] = hashlib.sha256(raw).hexdigest()
            payload, text = run_command(args.command, C, args, seed)
            report["result"] = payload
        except Exception as err:  # surfaced verbatim in the report
            report["error"] = {"type": type(err).__name__, "message": str(err)}
            text = f"error: {type(err).__name__}: {err}"
            status = 1
        reports.append(report)
        if not args.json:
            prefix = f"{path}: " if len(inputs) > 1 else ""
            print(prefix + text)
    if args.json:
        out = reports[0] if len(reports) == 1 else reports
        print(json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False, default=str))
    return status


if __name__ == "__main__":
    sys.exit(main())
