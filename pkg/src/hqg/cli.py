"""Command-line front end: build, verify, render, dualize, factorize.

Inputs are either catalog names (see :mod:`hqg.catalog`) or paths to
structure JSON files (see :mod:`hqg.serialize`); outputs go to stdout
or to ``--out``.  The exit code is the contract: 0 when every requested
check passes, 1 when some axiom or manifest claim fails, 2 when input
cannot be read, parsed, or has mismatched shapes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from .catalog import CatalogError, check_entry, entry_for, list_entries
from .exactlin import (
    GF,
    QQ,
    Field,
    LinMap,
    NotInvertibleError,
    ShapeError,
)
from .factor import (
    Factorization,
    NotFactorizationError,
    extract_matched_pair,
    induced_substructure,
    verify_factorization_theorem,
)
from .hopf_core import (
    HopfCoquasigroup,
    HopfQuasigroup,
    HopfStructure,
    StructureError,
    ValidationReport,
    as_coquasigroup,
    as_quasigroup,
    check_antipode_properties,
    dualize,
    validate_bimonoid,
    validate_hopf_coquasigroup,
    validate_hopf_quasigroup,
)
from .loops import FiniteGroup, FiniteLoop, validate_group, validate_ip_loop
from .products import (
    DistributiveLaw,
    MatchedPair,
    validate_distributive_law,
    validate_matched_pair,
)
from .serialize import SerializationError, dumps, load

__all__ = [
    "main",
    "format_combination",
    "assemble_table",
    "render_hopf_tables",
    "render_loop_tables",
]


# ---------------------------------------------------------------------------
# table layout (also imported by the golden-file generator, which recomputes
# every value independently and shares only this formatting)


def format_combination(terms: Sequence[tuple[int, str]], labels: Sequence[str]) -> str:
    """Render a sparse vector as a signed sum of labeled basis elements.

    ``terms`` holds (basis index, exact coefficient string) pairs in
    basis order; coefficient strings may carry a leading minus sign.
    The empty combination renders as ``0`` and unit coefficients drop
    the ``*`` factor.
    """
    if not terms:
        return "0"
    parts = []
    for k, (idx, coeff) in enumerate(terms):
        neg = coeff.startswith("-")
        mag = coeff[1:] if neg else coeff
        body = labels[idx] if mag == "1" else f"{mag}*{labels[idx]}"
        if k == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def assemble_table(
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    cell: Callable[[int, int], str],
    corner: str = "*",
) -> str:
    """Lay out a labeled grid with per-column padding and a rule line."""
    cells = [[cell(i, j) for j in range(len(col_labels))] for i in range(len(row_labels))]
    widths = [
        max(len(col_labels[j]), max((len(r[j]) for r in cells), default=0))
        for j in range(len(col_labels))
    ]
    lead = max(len(corner), max((len(l) for l in row_labels), default=0))
    lines = [
        " | ".join(
            [corner.ljust(lead)] + [col_labels[j].ljust(widths[j]) for j in range(len(col_labels))]
        ).rstrip()
    ]
    lines.append("-+-".join(["-" * lead] + ["-" * w for w in widths]))
    for i, row in enumerate(cells):
        lines.append(
            " | ".join(
                [row_labels[i].ljust(lead)] + [row[j].ljust(widths[j]) for j in range(len(col_labels))]
            ).rstrip()
        )
    return "\n".join(lines)


def render_hopf_tables(
    labels: Sequence[str],
    product_terms: Callable[[int, int], Sequence[tuple[int, str]]],
    antipode_terms: Callable[[int], Sequence[tuple[int, str]]],
) -> str:
    """The canonical text rendering: product grid plus antipode list."""
    table = assemble_table(
        labels,
        labels,
        lambda i, j: format_combination(product_terms(i, j), labels),
    )
    anti = "\n".join(
        f"{labels[i]} -> {format_combination(antipode_terms(i), labels)}"
        for i in range(len(labels))
    )
    return f"product (row times column)\n{table}\n\nantipode\n{anti}\n"


def render_loop_tables(loop: FiniteLoop) -> str:
    table = assemble_table(
        loop.labels, loop.labels, lambda i, j: loop.labels[loop.mul(i, j)]
    )
    inv = "\n".join(
        f"{loop.labels[i]} -> {loop.labels[loop.inv(i)]}" for i in range(loop.order)
    )
    return f"product (row times column)\n{table}\n\ninverse\n{inv}\n"


def _sparse_terms(field: Field, m: LinMap, col: int) -> tuple[tuple[int, str], ...]:
    return tuple((i, field.format(v)) for i, v in m.column(col))


def _hopf_tables_text(h: HopfStructure, labels: Sequence[str]) -> str:
    n = h.dim
    return render_hopf_tables(
        labels,
        lambda i, j: _sparse_terms(h.field, h.product, i * n + j),
        lambda i: _sparse_terms(h.field, h.antipode, i),
    )


# ---------------------------------------------------------------------------
# shared plumbing


def _parse_field(text: str) -> Field:
    if text == "rational":
        return QQ
    if text.startswith("fp:"):
        try:
            return GF(int(text[3:]))
        except ValueError as exc:
            raise StructureError(f"bad field {text!r}: {exc}") from exc
    raise StructureError(f"unknown field {text!r}; use rational or fp:<p>")


def _resolve(name_or_path: str, field: Field):
    """A path to an existing file is loaded; anything else is a catalog name."""
    if os.path.exists(name_or_path):
        return load(name_or_path)
    try:
        return entry_for(name_or_path).builder(field)
    except CatalogError:
        if any(sep in name_or_path for sep in ("/", "\\")) or name_or_path.endswith(
            ".json"
        ):
            raise SerializationError(f"no such file: {name_or_path}") from None
        raise


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report_text(rep: ValidationReport) -> str:
    failed = len(rep.failures())
    total = len(rep.checks)
    verdict = (
        f"PASS ({total} checks)"
        if rep.ok
        else f"FAIL ({failed} of {total} checks failed)"
    )
    return f"{rep}\n{verdict}\n"


def _emit_report(rep: ValidationReport, as_json: bool, out: Optional[str]) -> int:
    _emit(
        json.dumps(rep.to_json(), indent=2) + "\n" if as_json else _report_text(rep),
        out,
    )
    return 0 if rep.ok else 1


_LEVELS = (
    "bimonoid",
    "quasigroup",
    "coquasigroup",
    "antipode-props",
    "dl",
    "matched-pair",
    "factorization",
)


def _default_level(obj) -> str:
    if isinstance(obj, HopfCoquasigroup):
        return "coquasigroup"
    if isinstance(obj, HopfStructure):
        return "quasigroup"
    if isinstance(obj, DistributiveLaw):
        return "dl"
    if isinstance(obj, MatchedPair):
        return "matched-pair"
    if isinstance(obj, Factorization):
        return "factorization"
    raise StructureError(f"nothing to verify on a {type(obj).__name__}")


def _run_level(obj, level: str) -> ValidationReport:
    hopf_levels = {
        "bimonoid": lambda h: validate_bimonoid(h),
        "quasigroup": lambda h: validate_hopf_quasigroup(as_quasigroup(h)),
        "coquasigroup": lambda h: validate_hopf_coquasigroup(as_coquasigroup(h)),
        "antipode-props": check_antipode_properties,
    }
    if level in hopf_levels:
        if not isinstance(obj, HopfStructure):
            raise StructureError(
                f"level {level!r} needs a quasigroup or coquasigroup file, "
                f"got {type(obj).__name__}"
            )
        return hopf_levels[level](obj)
    if level == "dl":
        if not isinstance(obj, DistributiveLaw):
            raise StructureError(f"level 'dl' needs a distributive law file")
        return validate_distributive_law(obj)
    if level == "matched-pair":
        if not isinstance(obj, MatchedPair):
            raise StructureError("level 'matched-pair' needs a matched pair file")
        return validate_matched_pair(obj)
    if level == "factorization":
        if not isinstance(obj, Factorization):
            raise StructureError("level 'factorization' needs a factorization file")
        return verify_factorization_theorem(obj)
    raise StructureError(f"unknown level {level!r}")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_list(args) -> int:
    for e in list_entries():
        print(f"{e.name:15s} {e.kind:18s} dim {e.dimension:3d}  {e.description}")
    print("z<n>           group              dim n    cyclic group of any order")
    print("loop_algebra:<loop>  hopf_quasigroup     spanned by any catalog loop")
    return 0


def _cmd_build(args) -> int:
    field = _parse_field(args.field)
    if os.path.exists(args.name):
        obj = load(args.name)
    else:
        entry = entry_for(args.name)
        rep = check_entry(args.name, field)
        if not rep.ok:
            sys.stderr.write(_report_text(rep))
            return 1
        obj = entry.builder(field)
    _emit(dumps(obj), args.out)
    return 0


def _cmd_verify(args) -> int:
    obj = _resolve(args.input, _parse_field(args.field))
    if args.level is None:
        if isinstance(obj, FiniteGroup):
            rep = validate_group(obj)
        elif isinstance(obj, FiniteLoop):
            rep = validate_ip_loop(obj)
        else:
            rep = _run_level(obj, _default_level(obj))
    else:
        if isinstance(obj, FiniteLoop):
            raise StructureError(
                "loop files have no verification levels; omit --level"
            )
        rep = _run_level(obj, args.level)
    return _emit_report(rep, args.json, args.out)


def _cmd_table(args) -> int:
    obj = _resolve(args.input, _parse_field(args.field))
    if isinstance(obj, FiniteLoop):
        if args.basis_labels is not None:
            raise StructureError("loop files carry their own labels")
        _emit(render_loop_tables(obj), args.out)
        return 0
    if not isinstance(obj, HopfStructure):
        raise StructureError(f"cannot render tables for a {type(obj).__name__}")
    if args.basis_labels is not None:
        labels = tuple(s.strip() for s in args.basis_labels.split(","))
        if len(labels) != obj.dim:
            raise StructureError(
                f"{len(labels)} labels supplied for dimension {obj.dim}"
            )
    elif obj.labels is not None:
        labels = obj.labels
    else:
        labels = tuple(f"e{i}" for i in range(obj.dim))
    _emit(_hopf_tables_text(obj, labels), args.out)
    return 0


def _cmd_dual(args) -> int:
    obj = _resolve(args.input, _parse_field(args.field))
    if not isinstance(obj, HopfStructure):
        raise StructureError(
            f"dualization needs a quasigroup or coquasigroup file, "
            f"got {type(obj).__name__}"
        )
    _emit(dumps(dualize(obj)), args.out)
    return 0


def _cmd_factorize(args) -> int:
    field = _parse_field(args.field)
    if len(args.inputs) == 1:
        fact = _resolve(args.inputs[0], field)
        if not isinstance(fact, Factorization):
            raise StructureError(
                "single-input factorize needs a factorization file; "
                "pass ambient + two inclusion files otherwise"
            )
    elif len(args.inputs) == 3:
        x = _resolve(args.inputs[0], field)
        incl_a = _resolve(args.inputs[1], field)
        incl_h = _resolve(args.inputs[2], field)
        if not isinstance(x, HopfStructure) or not isinstance(incl_a, LinMap) or not isinstance(incl_h, LinMap):
            raise StructureError(
                "factorize needs one structure file and two linear map files"
            )
        fact = Factorization(
            x=x,
            a=induced_substructure(x, incl_a),
            h=induced_substructure(x, incl_h),
            incl_a=incl_a,
            incl_h=incl_h,
        )
    else:
        raise StructureError("factorize takes one factorization file or three files")
    rep = verify_factorization_theorem(fact)
    if args.json:
        sys.stdout.write(json.dumps(rep.to_json(), indent=2) + "\n")
    else:
        sys.stdout.write(_report_text(rep))
    if not rep.ok:
        return 1
    pair = extract_matched_pair(fact)
    out = args.out if args.out is not None else "extracted_matched_pair.json"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(dumps(pair))
    sys.stdout.write(f"extracted matched pair written to {out}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hqg",
        description="exact computation with Hopf quasigroups and coquasigroups",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out_help="write output here instead of stdout"):
        sp.add_argument(
            "--field",
            default="rational",
            help="scalar field: rational (default) or fp:<odd prime>",
        )
        sp.add_argument("--out", default=None, help=out_help)

    sp = sub.add_parser("list", help="list the named catalog entries")
    sp.set_defaults(func=_cmd_list)

    sp = sub.add_parser(
        "build",
        help="re-check a catalog entry's property manifest and emit its JSON",
    )
    sp.add_argument("name", help="catalog name or structure file to re-emit")
    common(sp)
    sp.set_defaults(func=_cmd_build)

    sp = sub.add_parser("verify", help="run a validation suite on a structure")
    sp.add_argument("input", help="catalog name or structure file")
    sp.add_argument(
        "--level",
        choices=_LEVELS,
        default=None,
        help="which suite to run (default: inferred from the structure kind)",
    )
    sp.add_argument(
        "--json", action="store_true", help="emit the report as JSON instead of text"
    )
    common(sp, "write the report here instead of stdout")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser(
        "table", help="render labeled product and antipode (or inverse) tables"
    )
    sp.add_argument("input", help="catalog name or structure file")
    sp.add_argument(
        "--basis-labels",
        default=None,
        help="comma-separated labels overriding the stored ones",
    )
    common(sp)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("dual", help="transpose-dualize a structure file")
    sp.add_argument("input", help="catalog name or structure file")
    common(sp)
    sp.set_defaults(func=_cmd_dual)

    sp = sub.add_parser(
        "factorize",
        help="verify a factorization end to end and extract its matched pair",
    )
    sp.add_argument(
        "inputs",
        nargs="+",
        help="a factorization file, or: ambient file, piece inclusion, piece inclusion",
    )
    sp.add_argument(
        "--json", action="store_true", help="emit the report as JSON instead of text"
    )
    common(sp, "write the extracted matched pair here")
    sp.set_defaults(func=_cmd_factorize)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotFactorizationError, NotInvertibleError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (
        CatalogError,
        SerializationError,
        StructureError,
        ShapeError,
        OSError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
