"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 mathematical violation (identity
failure, Fail verdict or example mismatch), 3 resource guard refusal.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import LeibnizAlgebra
from .bimodule import Bimodule, adjoint, trivial
from .cohomology import LeibnizComplex, ResourceGuardError
from .exactla import QQ, GF, Field
from .fixtures import EXAMPLES, MODULE_EXAMPLES, example_algebra, example_bimodule
from . import suite, theorems

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_GUARD = 0, 1, 2, 3

# names of the three bimodule compatibility identities
AXIOM_TAGS = {"left": "LLM", "mixed": "LML", "right": "MLL"}


class InputError(ValueError):
    pass


# --------------------------------------------------------------------------
# documents
# --------------------------------------------------------------------------


def parse_field(raw) -> Field:
    if raw == "Q" or raw == "QQ":
        return QQ
    if isinstance(raw, dict) and set(raw) == {"p"}:
        p = raw["p"]
        if isinstance(p, bool) or not isinstance(p, int):
            raise InputError(f"field characteristic must be an integer, got {p!r}")
        try:
            return GF(p)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError(f"field must be \"Q\" or {{\"p\": prime}}, got {raw!r}")


def field_from_flag(raw: str | None) -> Field:
    if raw is None or raw.upper() in ("Q", "QQ"):
        return QQ
    try:
        return parse_field({"p": int(raw)})
    except ValueError:
        raise InputError(f"--field must be Q or a prime, got {raw!r}") from None


def parse_scalar(field: Field, raw):
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise InputError(f"scalar must be an integer or a string, got {raw!r}")
    try:
        return field(raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"bad scalar {raw!r}: {exc}") from None


def _expect(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing field {key!r}")
    val = doc[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise InputError(f"{key!r} must be an integer")
    if kind is list and not isinstance(val, list):
        raise InputError(f"{key!r} must be a list")
    return val


def parse_algebra(doc, validate: bool = True) -> LeibnizAlgebra:
    field = parse_field(_expect(doc, "field", None))
    dim = _expect(doc, "dim", int)
    if dim < 0:
        raise InputError("dim must be non-negative")
    prods = {}
    for entry in _expect(doc, "products", list):
        if not (isinstance(entry, list) and len(entry) == 3 and isinstance(entry[2], list)):
            raise InputError(f"product entry must be [i, j, [coefficients]], got {entry!r}")
        i, j, vec = entry
        if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
            raise InputError(f"indices must be integers in {entry!r}")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise InputError(f"index out of range 1..{dim} in {entry!r}")
        if len(vec) != dim:
            raise InputError(f"product e{i}e{j} needs {dim} coefficients")
        if (i - 1, j - 1) in prods:
            raise InputError(f"product e{i}e{j} given twice")
        prods[(i - 1, j - 1)] = [parse_scalar(field, c) for c in vec]
    return LeibnizAlgebra(field, dim, prods, validate=validate)


def parse_bimodule(doc, algebra: LeibnizAlgebra, validate: bool = True) -> Bimodule:
    dim = _expect(doc, "dim", int)
    mats = {}
    for key in ("lambda", "rho"):
        raw = _expect(doc, key, list)
        if len(raw) != algebra.dim:
            raise InputError(f"{key!r} needs one matrix per algebra basis element ({algebra.dim})")
        out = []
        for m in raw:
            if not isinstance(m, list) or len(m) != dim or any(not isinstance(r, list) or len(r) != dim for r in m):
                raise InputError(f"{key!r} matrices must be {dim}x{dim}")
            out.append([[parse_scalar(algebra.field, c) for c in r] for r in m])
        mats[key] = out
    return Bimodule(algebra, dim, mats["lambda"], mats["rho"], validate=validate)


def serialize_field(field: Field):
    return "Q" if not field.is_finite else {"p": field.p}


def serialize_algebra(alg: LeibnizAlgebra) -> dict:
    f = alg.field
    prods = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            vec = alg.basis_product(i, j)
            if any(vec):
                prods.append([i + 1, j + 1, [f.to_json(c) for c in vec]])
    return {"field": serialize_field(f), "dim": alg.dim, "products": prods}


def _matrix_doc(f, m) -> list:
    return [[f.to_json(c) for c in row] for row in m.to_dense()]


def serialize_bimodule(m: Bimodule) -> dict:
    f = m.field
    return {"dim": m.dim, "lambda": [_matrix_doc(f, t) for t in m.lam],
            "rho": [_matrix_doc(f, t) for t in m.rho]}


def canonical_text(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def parse_document(doc, validate: bool = True):
    """``(algebra, bimodule-or-None)`` from an algebra document or an ``{algebra, bimodule}`` pair."""
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    if "algebra" in doc:
        alg = parse_algebra(doc["algebra"], validate)
        mod = parse_bimodule(doc["bimodule"], alg, validate) if "bimodule" in doc else None
        return alg, mod
    return parse_algebra(doc, validate), None


def serialize_document(alg, mod=None) -> dict:
    if mod is None:
        return serialize_algebra(alg)
    return {"algebra": serialize_algebra(alg), "bimodule": serialize_bimodule(mod)}


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


# --------------------------------------------------------------------------
# sources of (algebra, bimodule)
# --------------------------------------------------------------------------


def _load_source(args, validate: bool = True):
    field = field_from_flag(getattr(args, "field", None))
    if getattr(args, "input", None):
        alg, mod = parse_document(load_json(args.input), validate)
        return alg, mod, os.path.basename(args.input)
    name = getattr(args, "example", None)
    if name is None:
        raise InputError("give an input document or --example")
    return example_algebra(name, field), example_bimodule(name, field), f"Example {name}"


def _coefficients(alg, mod, coeffs: str | None):
    if coeffs == "trivial":
        return trivial(alg, 1)
    if coeffs == "adjoint":
        return adjoint(alg)
    if mod is None:
        if coeffs == "module":
            raise InputError("no bimodule in the input; use --coeffs trivial or adjoint")
        return trivial(alg, 1)
    return mod


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def _emit(obj, fmt: str = "json", table=None):
    if fmt == "table" and table is not None:
        print(table)
    else:
        print(json.dumps(obj, indent=2, sort_keys=False))


def cmd_validate(args) -> int:
    targets = [(p, None) for p in args.paths] + [(None, e) for e in (args.example or [])]
    if not targets:
        raise InputError("nothing to validate")
    records = []
    bad = False
    field = field_from_flag(args.field)
    for path, name in targets:
        if path is not None:
            alg, mod = parse_document(load_json(path), validate=False)
            label = path
        else:
            alg, mod, label = example_algebra(name, field), example_bimodule(name, field), f"Example {name}"
        rec = {"source": label, "kind": "algebra", "ok": True}
        rep = alg.validate()
        if not rep.ok:
            bad = True
            rec.update(ok=False, triple=[t + 1 for t in rep.triple],
                       message=f"left Leibniz identity fails at (e{rep.triple[0] + 1}, e{rep.triple[1] + 1}, "
                               f"e{rep.triple[2] + 1})")
        records.append(rec)
        if mod is not None and rep.ok:
            mrep = mod.validate()
            mrec = {"source": label, "kind": "bimodule", "ok": mrep.ok}
            if not mrep.ok:
                bad = True
                mrec["violations"] = [{"identity": name_, "axiom": AXIOM_TAGS[name_],
                                       "pair": [pair[0] + 1, pair[1] + 1]} for name_, pair in mrep.violations]
            records.append(mrec)
    if args.canonical:
        for path, name in targets:
            src = load_json(path) if path else serialize_document(example_algebra(name, field),
                                                                   example_bimodule(name, field))
            alg, mod = parse_document(src, validate=False)
            print(canonical_text(serialize_document(alg, mod)))
    _emit({"records": records})
    return EXIT_MATH if bad else EXIT_OK


def cmd_cohomology(args) -> int:
    alg, mod, label = _load_source(args)
    m = _coefficients(alg, mod, args.coeffs)
    cx = LeibnizComplex(m)
    rows = []
    for n in range(args.max_degree + 1):
        res = cx.hl(n)
        row = {"degree": n, "dim_ZL": res.dim_z, "dim_BL": res.dim_b, "dim_HL": res.dim_h}
        if args.representatives:
            row["representatives"] = [[m.field.to_json(c) for c in v] for v in cx.cohomology(n).representatives]
        rows.append(row)
    report = {"source": label, "coefficients": args.coeffs or ("module" if mod is not None else "trivial"),
              "field": serialize_field(alg.field), "paper_anchor": label, "degrees": rows}
    table = "\n".join([f"{'n':>3} {'dim ZL':>8} {'dim BL':>8} {'dim HL':>8}"] +
                      [f"{r['degree']:>3} {r['dim_ZL']:>8} {r['dim_BL']:>8} {r['dim_HL']:>8}" for r in rows])
    _emit(report, args.format, table)
    return EXIT_OK


BUILTIN_INSTANCES = (
    ("N", "trivial"), ("N", "adjoint"), ("D", "trivial"), ("D", "adjoint"),
    ("one-dim", "trivial"), ("A-mod", "module"), ("B", "module"),
)


def _builtin_pairs(field):
    for name, coeffs in BUILTIN_INSTANCES:
        alg = example_algebra(name, field)
        yield f"Example {name} ({coeffs})", alg, _coefficients(alg, example_bimodule(name, field), coeffs)


def cmd_verify(args) -> int:
    ids = theorems.THEOREM_IDS if args.all else args.theorem
    if not ids:
        raise InputError("give --theorem ID or --all")
    for t in ids:
        if t not in theorems.THEOREM_IDS:
            raise InputError(f"unknown theorem {t!r}; known: {', '.join(theorems.THEOREM_IDS)}")
    records, sweeps = [], []
    failed = False
    instances = []
    if args.input or args.example:
        alg, mod, label = _load_source(args)
        instances.append((label, alg, _coefficients(alg, mod, args.coeffs)))
    if args.all_builtin:
        instances.extend(_builtin_pairs(field_from_flag(args.field)))
    for t in ids:
        for label, alg, m in instances:
            rep = theorems.check(t, alg, m, args.max_degree)
            d = rep.to_dict()
            d["instance"] = label
            records.append(d)
            failed |= rep.failed
        if args.instances:
            s = theorems.sweep(t, args.instances, args.seed, args.max_degree, args.workers)
            sweeps.append({"theorem_id": t, "paper_anchor": theorems.ANCHORS[t], "instances": args.instances,
                           "seed": args.seed, "counts": s.counts, "failures": s.failures})
            failed |= not s.ok
    if not records and not sweeps:
        raise InputError("nothing to verify: give an instance, --all-builtin or --instances")
    if args.format == "table":
        lines = [f"{r['theorem_id']:>14}  {r['verdict']:<14} {r['instance']}" for r in records]
        lines += [f"{s['theorem_id']:>14}  sweep {s['instances']} seed {s['seed']}: "
                  + ", ".join(f"{k} {v}" for k, v in s["counts"].items()) for s in sweeps]
        print("\n".join(lines))
    else:
        _emit({"records": records, "sweeps": sweeps})
    return EXIT_MATH if failed else EXIT_OK


def cmd_paper_suite(args) -> int:
    if args.conjecture:
        report = theorems.conjecture_dims(args.conjecture, args.max_degree)
        if args.conjecture.upper() == "D" and args.instances:
            report["hemi_semidirect_sweep"] = theorems.hemisemidirect_sweep(args.instances, args.seed,
                                                                            min(args.max_degree, 3))
        table = f"Example {args.conjecture.upper()} adjoint: " + " ".join(
            f"HL^{n}={d}" for n, d in enumerate(report["hl_dims"])) + "  (reported, not asserted)"
        _emit(report, args.format, table)
        return EXIT_OK
    lines = suite.paper_suite()
    ok = all(line.ok for line in lines)
    if args.format == "table":
        for line in lines:
            mark = "ok  " if line.ok else "FAIL"
            print(f"{mark} {line.paper_anchor:<20} {line.check}: expected {line.expected}, computed {line.computed}")
    else:
        _emit({"lines": [line.to_dict() for line in lines], "ok": ok})
    return EXIT_OK if ok else EXIT_MATH


def cmd_scan_periodicity(args) -> int:
    rows = theorems.scan_periodicity(args.instances, args.seed, args.max_degree, args.coeffs)
    _emit({"heuristic": True, "rows": rows}, args.format,
          "\n".join(f"{r['index']:>3} {r['field']:>6} dim {r['dim']} {r['hl_dims']} "
                    f"{'period-two' if r['period_two'] else ''}" for r in rows))
    return EXIT_OK


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


EXAMPLE_NAMES = sorted(set(EXAMPLES) | set(MODULE_EXAMPLES))


def _source_args(p, coeffs_default=None):
    p.add_argument("input", nargs="?", help="JSON algebra document or {algebra, bimodule} pair")
    p.add_argument("--example", choices=EXAMPLE_NAMES)
    p.add_argument("--field", help="field for built-in examples: Q (default) or a prime")
    p.add_argument("--coeffs", choices=["trivial", "adjoint", "module"], default=coeffs_default)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leibniz-coh", description="Exact Leibniz cohomology over Q and GF(p).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check the Leibniz identity and bimodule axioms")
    p.add_argument("paths", nargs="*")
    p.add_argument("--example", action="append", choices=EXAMPLE_NAMES)
    p.add_argument("--field")
    p.add_argument("--canonical", action="store_true", help="also print the canonical serialization")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="dimensions of ZL, BL and HL per degree")
    _source_args(p)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--representatives", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify", help="hypothesis and conclusion checks for the theorems")
    _source_args(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--theorem", action="append", help=f"one of: {', '.join(theorems.THEOREM_IDS)}")
    g.add_argument("--all", action="store_true")
    p.add_argument("--instances", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--all-builtin", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["table", "json"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-suite", help="expected versus computed values on the worked examples")
    p.add_argument("--conjecture", choices=["C", "D", "c", "d"])
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--instances", type=int, default=0, help="hemi-semidirect sweep size for --conjecture D")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_paper_suite)

    p = sub.add_parser("scan-periodicity", help="list random algebras with period-two cohomology (heuristic)")
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--coeffs", choices=["trivial", "adjoint"], default="trivial")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_scan_periodicity)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_degree", 0) < 0:
        parser.error("--max-degree must be non-negative")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceGuardError as exc:
        print(json.dumps({"error": "resource guard", "degree": exc.degree,
                          "estimate_mb": round(exc.estimate_mb, 1), "limit_mb": exc.limit_mb}), file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        # shape and index problems raised while building matrices from a document
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
