"""Command-line surface: algebra files, analyses, cohomology reports.

Machine-readable output (one JSON document per invocation) goes to
stdout; progress and notes go to stderr.  Algebra files are JSON:

    {"dim": 3, "basis": ["X1", "X2", "X3"],
     "brackets": [{"i": 1, "j": 2, "v": {"3": "1"}}]}

Indices are 1-based with i < j; rationals are strings "p/q" (or "p").
The same layout serializes skew 2-cochains.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q

from . import families, operads, report
from .cohom import (
    Cochain,
    ComplexKind,
    check_linear_deformation_2step,
    check_linear_deformation_3step,
    space_dims,
)
from .exactlin import format_rational, parse_rational
from .liealg import (
    DEFAULT_SEED,
    LieAlgebra,
    center_dim,
    characteristic_sequence,
    derivation_algebra_dim,
    derived_dim,
    jacobi_defect,
    lower_central_series,
    nilindex,
)


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# file format

def _load_doc(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}:{exc.lineno}: malformed JSON: {exc.msg}") from None


def _parse_entries(path: str, doc: dict) -> tuple[int, dict[tuple[int, int], tuple[Q, ...]]]:
    if not isinstance(doc, dict) or "dim" not in doc:
        raise CliError(f"{path}: document must be an object with a 'dim' field")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise CliError(f"{path}: 'dim' must be a nonnegative integer")
    entries: dict[tuple[int, int], tuple[Q, ...]] = {}
    for pos, row in enumerate(doc.get("brackets", [])):
        where = f"{path}: brackets[{pos}]"
        try:
            i, j = int(row["i"]), int(row["j"])
        except (KeyError, TypeError, ValueError):
            raise CliError(f"{where}: need integer fields 'i' and 'j'") from None
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise CliError(f"{where}: index out of range 1..{dim}")
        if i >= j:
            raise CliError(f"{where}: need i < j (got i={i}, j={j})")
        vec = [Q(0)] * dim
        for key, val in row.get("v", {}).items():
            try:
                k = int(key)
            except ValueError:
                raise CliError(f"{where}: image key {key!r} is not an index") from None
            if not 1 <= k <= dim:
                raise CliError(f"{where}: image index {k} out of range")
            try:
                vec[k - 1] += parse_rational(val) if isinstance(val, str) else Q(val)
            except (ValueError, TypeError):
                raise CliError(f"{where}: bad rational {val!r}") from None
        entries[(i - 1, j - 1)] = tuple(vec)
    return dim, entries


def parse_algebra(path: str) -> LieAlgebra:
    dim, entries = _parse_entries(path, _load_doc(path))
    return LieAlgebra(dim, entries)


def parse_cochain(path: str) -> Cochain:
    dim, entries = _parse_entries(path, _load_doc(path))
    return Cochain(2, dim, entries)


def _entries_doc(dim: int, constants) -> dict:
    brackets = []
    for (i, j) in sorted(constants):
        vec = constants[(i, j)]
        v = {str(k + 1): format_rational(x)
             for k, x in sorted(enumerate(vec)) if x != 0}
        brackets.append({"i": i + 1, "j": j + 1, "v": v})
    return {"dim": dim, "basis": [f"X{k + 1}" for k in range(dim)],
            "brackets": brackets}


def algebra_doc(g: LieAlgebra) -> dict:
    return _entries_doc(g.dim, g.constants)


def cochain_doc(c: Cochain) -> dict:
    return _entries_doc(c.dim, c.coeffs)


def write_algebra(g: LieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_doc(g), fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# commands

def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=1, default=str)
    sys.stdout.write("\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_validate(args) -> int:
    g = parse_algebra(args.file)
    bad = jacobi_defect(g)
    doc = {
        "file": args.file,
        "dim": g.dim,
        "valid": not bad,
        "jacobi_violations": [[i + 1, j + 1, k + 1] for (i, j, k) in bad],
    }
    _emit(doc)
    return 0 if not bad else 1


def cmd_analyze(args) -> int:
    g = parse_algebra(args.file)
    bad = jacobi_defect(g)
    doc: dict = {"file": args.file, "dim": g.dim, "jacobi_ok": not bad}
    if bad:
        doc["jacobi_violations"] = [[i + 1, j + 1, k + 1] for (i, j, k) in bad]
    chain = lower_central_series(g)
    doc["lower_central_series_dims"] = list(chain.dims)
    try:
        doc["nilindex"] = nilindex(g)
    except ValueError as exc:
        doc["nilindex_error"] = str(exc)
        _emit(doc)
        return 1
    doc["characteristic_sequence"] = list(
        characteristic_sequence(g, seed=args.seed, samples=args.samples).parts)
    doc["center_dim"] = center_dim(g)
    doc["derived_dim"] = derived_dim(g)
    doc["derivation_algebra_dim"] = derivation_algebra_dim(g)
    _emit(doc)
    return 0


def cmd_cohomology(args) -> int:
    g = parse_algebra(args.file)
    kind = ComplexKind.coerce(args.complex)
    progress = None
    if kind is ComplexKind.CR and g.dim >= 9:
        progress = lambda n: _note(f"  rows processed: {n}")
    r = space_dims(g, kind, with_representatives=args.representatives,
                   progress=progress)
    doc = {
        "file": args.file,
        "complex": kind.value,
        "z2_dim": r.z2_dim,
        "b2_dim": r.b2_dim,
        "h2_dim": r.h2_dim,
        "rigid_candidate": r.rigid_candidate,
    }
    if args.representatives:
        doc["representatives"] = [cochain_doc(c) for c in r.representatives]
    _emit(doc)
    return 0


def cmd_deform(args) -> int:
    g = parse_algebra(args.base)
    phi = parse_cochain(args.phi)
    if phi.dim != g.dim:
        raise CliError(f"dimension mismatch: base dim {g.dim}, cochain dim {phi.dim}")
    if args.steps == 2:
        check = check_linear_deformation_2step(g, phi)
    else:
        check = check_linear_deformation_3step(g, phi)
    doc = {
        "base": args.base,
        "phi": args.phi,
        "steps": args.steps,
        "conditions": [
            {
                "name": name,
                "pass": ok,
                "witness": None if witness is None else [x + 1 for x in witness],
            }
            for name, ok, witness in check.conditions
        ],
        "passes_all": check.passes_all,
    }
    _emit(doc)
    return 0


_FAMILY_ARITY = {
    "heisenberg": 1, "g-p1": 1, "g-p12": 1, "g-p01": 1,
    "g-k3k2k1": 3, "rigid-2step": 1, "rigid-3step-7": 0,
    "classification-F731": 0,
}


def _build_family(name: str, params: list[str]) -> list[tuple[str, LieAlgebra]]:
    if name not in _FAMILY_ARITY:
        raise CliError(f"unknown family {name!r}; choose from "
                       f"{sorted(_FAMILY_ARITY)}")
    if len(params) != _FAMILY_ARITY[name]:
        raise CliError(f"family {name} takes {_FAMILY_ARITY[name]} parameter(s)")
    try:
        if name == "heisenberg":
            return [(f"h{2 * int(params[0]) + 1}", families.heisenberg(int(params[0])))]
        if name == "g-p1":
            return [(f"g_{params[0]}_1", families.g_p1(int(params[0])))]
        if name == "g-p12":
            return [(f"g_{int(params[0]) - 1}_2", families.g_p12(int(params[0])))]
        if name == "g-p01":
            return [(f"g_{params[0]}_0_1", families.g_p01(int(params[0])))]
        if name == "g-k3k2k1":
            k3, k2, k1 = (int(x) for x in params)
            return [(f"g_{k3}_{k2}_{k1}", families.g_k3k2k1(k3, k2, k1))]
        if name == "rigid-2step":
            return [(params[0], families.rigid_2step(params[0]))]
        if name == "rigid-3step-7":
            return [("rigid7", families.rigid_3step_7())]
        return [(f"F731_{k:02d}", a)
                for k, a in enumerate(families.classification_F731())]
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_family(args) -> int:
    import os

    built = _build_family(args.name, args.params)
    written = []
    if len(built) == 1:
        label, g = built[0]
        path = args.output or f"{label}.json"
        write_algebra(g, path)
        written.append(path)
    else:
        outdir = args.output or "."
        os.makedirs(outdir, exist_ok=True)
        for label, g in built:
            path = os.path.join(outdir, f"{label}.json")
            write_algebra(g, path)
            written.append(path)
    invariants = []
    for (label, g), path in zip(built, written):
        invariants.append({
            "label": label,
            "path": path,
            "dim": g.dim,
            "jacobi_ok": not jacobi_defect(g),
            "nilindex": nilindex(g),
            "characteristic_sequence": list(characteristic_sequence(g).parts),
        })
    _emit({"family": args.name, "params": args.params, "written": written,
           "algebras": invariants})
    return 0


def cmd_paper_report(args) -> int:
    doc = report.run_claims(seed=args.seed, only=args.only)
    for row in doc["claims"]:
        status = "PASS" if row["pass"] else "FAIL"
        _note(f"[{status}] {row['id']}: expected {row['expected']!r}, "
              f"computed {row['computed']!r} ({row['runtime_ms']} ms)")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, default=str)
            fh.write("\n")
    _emit(doc)
    return 0 if doc["summary"]["failed"] == 0 else 2


def cmd_operad_check(args) -> int:
    order = args.order
    if order < 2:
        raise CliError("order must be at least 2")
    primal = operads.gen_function(operads.two_nilp_dims(order), order)
    dual_dims = operads.dual_dims_2nilp(order)
    dual = operads.gen_function(dual_dims, order)
    residual = operads.koszul_check(primal, dual)
    doc = {
        "order": order,
        "dual_dims": list(dual_dims.dims),
        "residual_coeffs": [format_rational(c) for c in residual.coeffs],
        "residual_zero": residual.is_zero(),
        "table": [
            {"operad": row.operad, "arity": row.arity, "dim": row.dim,
             "note": row.note}
            for row in operads.static_dims_table()
        ],
    }
    _emit(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilrig",
        description="exact deformation-cohomology workbench for nilpotent "
                    "structure-constant Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a bracket file for the Jacobi identity")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", help="nilpotency invariants of an algebra file")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("cohomology", help="Z^2/B^2/H^2 of a chosen complex")
    p.add_argument("file")
    p.add_argument("--complex", required=True, choices=["chevalley", "ch", "cr"])
    p.add_argument("--representatives", action="store_true",
                   help="emit a kernel basis of 2-cocycles")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("deform", help="linear-deformation condition checks")
    p.add_argument("base")
    p.add_argument("phi")
    p.add_argument("--steps", type=int, required=True, choices=[2, 3])
    p.set_defaults(fn=cmd_deform)

    p = sub.add_parser("family", help="write a model algebra to a bracket file")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", default=None,
                   help="output file (or directory for multi-member families)")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("paper-report",
                       help="recompute every recorded claim; nonzero exit on failure")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", default=None, help="also write the document here")
    p.add_argument("--only", default=None, help="restrict to claim ids with this prefix")
    p.set_defaults(fn=cmd_paper_report)

    p = sub.add_parser("operad-check", help="duality residual and dimension table")
    p.add_argument("--order", type=int, default=8)
    p.set_defaults(fn=cmd_operad_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        _note(f"error: {exc}")
        return 1
    except ValueError as exc:
        _note(f"error: {exc}")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
