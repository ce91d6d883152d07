"""Command line front end.

    germforge image --group product:2x2 --h "x^3+y^3+x*y"
    germforge presentation germ.txt --cross-check --format json
    germforge selfcheck
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import GermforgeError, ParseError, UsageError
from .groups import ReflectionGroup, builtin_family, generate_closure, source_variables, target_variables
from .parser import parse_polynomial

COMMANDS = ("image", "presentation", "double-points", "multiplicity", "orbit", "selfcheck")


# --- input documents ------------------------------------------------------------


def _key_values(text: str, source: str) -> list[tuple[str, str, int]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line and ":" not in line:
            raise UsageError(f"{source}:{lineno}: expected 'key = value'")
        # the first '=' separates key and value unless the key uses ':'
        m = re.match(r"^([A-Za-z_][A-Za-z0-9_\-]*)\s*[=:]\s*(.*)$", line)
        if not m:
            raise UsageError(f"{source}:{lineno}: malformed line {raw!r}")
        out.append((m.group(1).lower().replace("-", "_"), m.group(2).strip(), lineno))
    return out


@dataclass
class GermDocument:
    group_spec: str = ""
    h_source: str = ""
    params: str = ""
    basis: str = ""
    cross_check: bool = False
    format: str = "text"
    origin: str = "<command line>"
    base_dir: Path = field(default_factory=Path.cwd)


def read_germ_document(path: str | Path) -> GermDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read germ document {path}: {exc.strerror}") from None
    doc = GermDocument(origin=str(path), base_dir=path.parent)
    for key, value, lineno in _key_values(text, str(path)):
        if key == "group":
            doc.group_spec = value
        elif key == "h":
            doc.h_source = value
        elif key in ("params", "parameters"):
            doc.params = value
        elif key == "basis":
            doc.basis = value
        elif key in ("cross_check", "crosscheck"):
            doc.cross_check = value.lower() in ("1", "true", "yes", "on")
        elif key == "format":
            doc.format = value
        else:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return doc


def _split_list(value: str, sep: str = ",") -> list[str]:
    return [s.strip() for s in value.split(sep) if s.strip()]


def parse_params(text: str) -> tuple[list[str], dict[str, str]]:
    """'p1, p2' or 'p1=X, p2=Y, p3=1' -> (names, specializations)."""
    names: list[str] = []
    special: dict[str, str] = {}
    for item in _split_list(text):
        if "=" in item:
            name, expr = (s.strip() for s in item.split("=", 1))
            if not expr:
                raise UsageError(f"empty value for parameter {name!r}")
            special[name] = expr
        else:
            name = item
        names.append(name)
    return names, special


def read_group_file(path: Path) -> ReflectionGroup:
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read group file {path}: {exc.strerror}") from None
    dim = conductor = None
    gens, orbit, degrees, basis = [], [], [], None
    for key, value, lineno in _key_values(text, str(path)):
        where = f"{path}:{lineno}"
        if key == "dimension":
            dim = int(value)
        elif key == "conductor":
            conductor = int(value)
        elif key == "generator":
            rows = [[_cyclo(e, where) for e in _split_list(r)] for r in _split_list(value, ";")]
            gens.append(rows)
        elif key == "orbit_map":
            orbit = _split_list(value, ";")
        elif key == "degrees":
            degrees = [int(d) for d in _split_list(value)]
        elif key == "basis":
            basis = _split_list(value)
        else:
            raise UsageError(f"{where}: unknown key {key!r}")
    if dim is None:
        raise UsageError(f"{path}: missing 'dimension'")
    if not gens:
        raise UsageError(f"{path}: no generators")
    for m in gens:
        if len(m) != dim or any(len(r) != dim for r in m):
            raise UsageError(f"{path}: generator is not {dim}x{dim}")
        if conductor is not None:
            for r in m:
                for e in r:
                    if conductor % e.conductor:
                        raise UsageError(f"{path}: entry {e} lies outside the field of conductor {conductor}")
    if not orbit or not degrees:
        raise UsageError(f"{path}: user groups must supply orbit_map and degrees")
    v = source_variables(dim)
    orbit_polys = [parse_polynomial(p, v) for p in orbit]
    basis_polys = [parse_polynomial(b, v) for b in basis] if basis else None
    return generate_closure(gens, orbit_polys, degrees, basis_polys, name=f"file:{path.name}")


def _cyclo(text: str, where: str):
    from .cyclotomic import parse_cyclotomic

    try:
        return parse_cyclotomic(text)
    except ParseError as exc:
        raise UsageError(f"{where}: bad matrix entry {text!r}: {exc}") from None


def parse_group_spec(text: str, base_dir: Path | None = None) -> ReflectionGroup:
    spec = text.strip()
    family, _, arg = spec.partition(":")
    family = family.strip().lower()
    arg = arg.strip()
    if family == "file":
        path = Path(arg)
        if not path.is_absolute() and base_dir is not None:
            path = base_dir / path
        return read_group_file(path)
    try:
        if family == "product":
            r, s = re.split(r"\s*[x×,]\s*", arg)
            return builtin_family("product", int(r), int(s))
        if family in ("cyclic", "dihedral"):
            return builtin_family(family, int(arg))
        if family == "trivial":
            return builtin_family("trivial")
    except ValueError:
        raise UsageError(f"malformed group spec {text!r}") from None
    raise UsageError(f"unknown group family in {text!r} (expected product:RxS, cyclic:D, dihedral:2M or file:PATH)")


def build_germ(doc: GermDocument):
    from .germ import make_germ

    if not doc.group_spec:
        raise UsageError("no group given (use --group or 'group =' in the document)")
    group = parse_group_spec(doc.group_spec, doc.base_dir)
    names, special = parse_params(doc.params) if doc.params else ([], {})
    from .germ import check_parameter_names

    check_parameter_names(names)
    symbolic = tuple(n for n in names if n not in special)
    src = group.variables + tuple(names)
    h = parse_polynomial(doc.h_source or "0", src)
    spec_polys = {k: parse_polynomial(v, group.target_variables + symbolic) for k, v in special.items()}
    basis = [parse_polynomial(b, group.variables) for b in _split_list(doc.basis)] if doc.basis else None
    return make_germ(group, h, basis, names, spec_polys)


# --- commands -----------------------------------------------------------------


def _matrix_rows(m) -> list[list[str]]:
    return m.entry_strings()


def run_command(cmd: str, doc: GermDocument) -> dict:
    if cmd == "selfcheck":
        from .goldens import run_selfcheck

        return {"selfcheck": [{"case": n, "ok": ok, "detail": d} for n, ok, d in run_selfcheck()]}
    germ = build_germ(doc)
    if cmd == "image":
        from .image import image_equation, verify_pullback_factorization

        eq = image_equation(germ)
        return {
            "image_equation": {
                "F": str(eq.F),
                "coefficients": {f"Q{j}": str(q) for j, q in enumerate(eq.coefficients)},
                "pullback_verified": verify_pullback_factorization(eq, germ),
            }
        }
    if cmd == "presentation":
        from .image import image_equation
        from .presentation import presentation_matrix, presentation_via_alpha, verify_det_equals_image

        pres = presentation_matrix(germ)
        out = {
            "presentation_matrix": _matrix_rows(pres.lambda_),
            "eigen_matrix_det": str(pres.eigen_matrix_det),
            "det_formula_constant": None if pres.det_formula_constant is None else str(pres.det_formula_constant),
        }
        if doc.cross_check:
            out["cross_check"] = {
                "alpha_path_agrees": presentation_via_alpha(germ) == pres.lambda_,
                "det_equals_signed_image": verify_det_equals_image(pres, image_equation(germ)),
            }
        return out
    if cmd == "double-points":
        from .double_point import double_point_equation, double_point_regular_case

        dp = double_point_equation(germ)
        reg = double_point_regular_case(germ)
        return {
            "double_point": {
                "equation": str(dp.equation),
                "constant": None if dp.constant is None else str(dp.constant),
                "degenerate": dp.degenerate,
                "reflection_factors": [str(f) for f in dp.reflection_factors],
                "non_reflection_factors": [str(f) for f in dp.non_reflection_factors],
                "regular_case": None if reg is None else str(reg.equation),
            }
        }
    if cmd == "multiplicity":
        from .analysis import multiplicity_report, quasihomogeneous_type
        from .image import image_equation

        rep = multiplicity_report(image_equation(germ).F, germ.group)
        out = {
            "multiplicity_report": {
                "multiplicity": rep.multiplicity,
                "lower_bound": rep.lower_bound,
                "upper_bound": rep.upper_bound,
                "group_order": rep.group_order,
            }
        }
        if not germ.params:
            qt = quasihomogeneous_type(germ)
            out["quasihomogeneous_type"] = {
                "found": qt.found,
                "weights": list(qt.weights),
                "coordinate_degrees": list(qt.coordinate_degrees),
            }
        return out
    if cmd == "orbit":
        from .action import orbit_functions
        from .groups import matrix_text

        g = germ.group
        return {
            "group": {
                "name": g.name,
                "order": g.order,
                "degrees": list(g.degrees),
                "orbit_map": [str(w) for w in g.orbit_map],
                "elements": [matrix_text(e.matrix) for e in g.elements],
                "reflections": list(g.reflections),
                "hyperplanes": [
                    {"form": str(H.form), "stabilizer_order": H.stabilizer_order, "generator": H.generator_index}
                    for H in g.hyperplanes
                ],
            },
            "orbit": [str(p) for p in orbit_functions(g, germ.h)],
        }
    raise UsageError(f"unknown command {cmd!r}")


# --- output -------------------------------------------------------------------


def _text_lines(key: str, value, indent: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = [f"{indent}{key}:"]
        for k, v in value.items():
            lines += _text_lines(k, v, indent + "  ")
        return lines
    if isinstance(value, list) and value and isinstance(value[0], list):
        return [f"{indent}{key}:"] + [f"{indent}  [{', '.join(r)}]" for r in value]
    if isinstance(value, list) and value and isinstance(value[0], dict):
        lines = [f"{indent}{key}:"]
        for item in value:
            lines.append(indent + "  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
        return lines
    if isinstance(value, list):
        return [f"{indent}{key}:"] + [f"{indent}  {_scalar(v)}" for v in value]
    return [f"{indent}{key}: {_scalar(value)}"]


def _scalar(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def serialize_output(doc: dict, fmt: str = "text") -> str:
    if fmt in ("json", "structured"):
        return json.dumps(doc, sort_keys=True, indent=2) if doc else "{}"
    if fmt != "text":
        raise UsageError(f"unknown output format {fmt!r}")
    if "selfcheck" in doc:
        return "\n".join(
            f"{'PASS' if c['ok'] else 'FAIL'} {c['case']}" + ("" if c["ok"] else f": {c['detail']}")
            for c in doc["selfcheck"]
        )
    lines: list[str] = []
    for k, v in doc.items():
        lines += _text_lines(k, v)
    return "\n".join(lines)


# --- entry point ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="germforge", description="Images, presentation matrices and double points of reflected graph germs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("document", nargs="?", help="germ document (key = value lines)")
    p.add_argument("--group", help="product:RxS, cyclic:D, dihedral:2M or file:PATH")
    p.add_argument("--h", dest="h", help="h as a polynomial in x, y and the parameters")
    p.add_argument("--params", help="'p1,p2,p3' (symbolic) or 'p1=X,p2=Y,p3=1'")
    p.add_argument("--basis", help="comma-separated coinvariant basis, starting with 1")
    p.add_argument("--cross-check", action="store_true", help="also build the matrix from the module relation and compare")
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--batch", metavar="DIR", help="process every germ document in DIR")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    return p


def _document_from_args(args) -> GermDocument:
    doc = read_germ_document(args.document) if args.document else GermDocument()
    if args.group:
        doc.group_spec = args.group
    if args.h is not None:
        doc.h_source = args.h
    if args.params is not None:
        doc.params = args.params
    if args.basis is not None:
        doc.basis = args.basis
    if args.cross_check:
        doc.cross_check = True
    if args.format:
        doc.format = args.format
    return doc


def _batch_one(cmd: str, path: str, cross_check: bool) -> tuple[str, dict | None, str | None, int]:
    try:
        doc = read_germ_document(path)
        doc.cross_check = doc.cross_check or cross_check
        return Path(path).name, run_command(cmd, doc), None, 0
    except GermforgeError as exc:
        return Path(path).name, None, str(exc), exc.exit_code


def _run_batch(args) -> int:
    folder = Path(args.batch)
    if not folder.is_dir():
        raise UsageError(f"batch directory {folder} does not exist")
    files = sorted(str(p) for p in folder.iterdir() if p.is_file() and not p.name.startswith("."))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, [args.command] * len(files), files, [args.cross_check] * len(files)))
    else:
        results = [_batch_one(args.command, f, args.cross_check) for f in files]
    combined = {name: (res if err is None else {"error": err}) for name, res, err, _ in results}
    print(serialize_output(combined, args.format or "text"))
    return max((code for *_, code in results), default=0)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else 1
    try:
        if args.batch:
            return _run_batch(args)
        doc = _document_from_args(args)
        result = run_command(args.command, doc)
        print(serialize_output(result, doc.format))
        if args.command == "selfcheck" and not all(c["ok"] for c in result["selfcheck"]):
            return 2
        return 0
    except GermforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
