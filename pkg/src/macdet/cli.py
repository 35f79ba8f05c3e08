"""Command line surface: jpoly, verify and table subcommands.

jpoly computes one expansion of J_lam by a chosen construction route
and renders it as text, JSON or LaTeX.  verify runs the named check
suite and prints a machine-readable report.  table writes one JSON
array of result records for all partitions up to a weight, backed by a
content-addressed cache directory so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import ENGINE_VERSION
from .macdonald import (
    EntryMatrix,
    dual_transport,
    jpoly_modified_schur,
    jpoly_monomial,
    jpoly_schur,
    jpoly_via_creation,
    latex_modified_matrix,
    latex_monomial_matrix,
)
from .oracle import integral_form
from .partitions import Partition, conjugate, partition, partitions_of, weight
from .qt import QtPoly, QtRat
from .symfunc import SymExpansion, convert_basis, sym_to_json
from .verify import (
    run_all,
    run_appendix_suite,
    run_cross_suite,
    run_eigen_suite,
    run_oracle_suite,
    summarize,
)

BASES = ("smod", "schur", "monomial")
METHODS = ("determinant", "creation", "oracle")


# ---------------------------------------------------------------------------
# expansion dispatch

def compute_expansion(lam: Partition, basis: str, method: str) -> SymExpansion:
    """J_lam in the requested basis by the requested construction route.

    Every method serves every basis: the creation route reaches the
    Schur and monomial bases through duality transport of the conjugate
    shape, and the reference route reaches the modified Schur basis by
    the same transport in reverse.
    """
    lam = partition(lam)
    if method == "determinant":
        if basis == "smod":
            return jpoly_modified_schur(lam)
        if basis == "schur":
            return jpoly_schur(lam)
        return jpoly_monomial(lam)
    if method == "creation":
        if basis == "smod":
            return jpoly_via_creation(lam)
        schur = dual_transport(jpoly_via_creation(conjugate(lam)), lam, "s")
        if basis == "schur":
            return schur
        return convert_basis(schur, "m")
    if method == "oracle":
        if basis == "monomial":
            return integral_form(lam)
        if basis == "schur":
            return convert_basis(integral_form(lam), "s")
        return dual_transport(
            convert_basis(integral_form(conjugate(lam)), "s"), lam, "s-mod")
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# renderers

def render_text(f: SymExpansion) -> str:
    if set(f.terms) == {()}:
        coef = f.terms[()]
        return "1" if coef.is_one() else f"({coef})"
    return str(f)


def _latex_poly(poly: QtPoly) -> str:
    if not poly.terms:
        return "0"
    chunks: list[str] = []
    for key in sorted(poly.terms, key=lambda k: (k[0] + k[1], k[0])):
        coef = poly.terms[key]
        dq, dt = key
        parts: list[str] = []
        if abs(coef) != 1 or (dq == 0 and dt == 0):
            parts.append(str(abs(coef)))
        if dq:
            parts.append("q" if dq == 1 else f"q^{{{dq}}}")
        if dt:
            parts.append("t" if dt == 1 else f"t^{{{dt}}}")
        body = " ".join(parts)
        if not chunks:
            chunks.append(body if coef > 0 else "-" + body)
        else:
            chunks.append((" + " if coef > 0 else " - ") + body)
    return "".join(chunks)


def _latex_scalar(coef: QtRat) -> str:
    if coef.den.is_one():
        return _latex_poly(coef.num)
    return r"\frac{" + _latex_poly(coef.num) + "}{" + _latex_poly(coef.den) + "}"


_LATEX_BASIS = {
    "s-mod": lambda sub: f"S_{{{sub}}}[X^{{tq}}]",
    "s": lambda sub: f"s_{{{sub}}}",
    "m": lambda sub: f"m_{{{sub}}}",
}


def render_latex_expansion(f: SymExpansion) -> str:
    if set(f.terms) == {()}:
        coef = f.terms[()]
        return "1" if coef.is_one() else _latex_scalar(coef)
    if not f.terms:
        return "0"
    chunks = []
    for lam, coef in f.sorted_terms():
        sub = ",".join(str(p) for p in lam)
        label = _LATEX_BASIS[f.basis](sub)
        if coef.is_one():
            piece = label
        else:
            piece = r"\left(" + _latex_scalar(coef) + r"\right)" + label
        chunks.append(piece)
    return " + ".join(chunks)


def render_latex(lam: Partition, basis: str, method: str,
                 expansion: SymExpansion) -> str:
    """The determinant routes render their bordered matrices with the
    bracket shorthand; everything else renders the expansion itself."""
    if lam and method == "determinant" and basis == "smod":
        return latex_modified_matrix(EntryMatrix.build(lam))
    if lam and method == "determinant" and basis == "monomial":
        return latex_monomial_matrix(lam)
    return render_latex_expansion(expansion)


def result_record(lam: Partition, basis: str, method: str,
                  n: int, expansion: SymExpansion,
                  timing: float | None = None) -> dict:
    record = {
        "lambda": list(lam),
        "basis": basis,
        "method": method,
        "n": n,
        "expansion": sym_to_json(expansion),
        "engine_version": ENGINE_VERSION,
    }
    if timing is not None:
        record["timing"] = timing
    return record


# ---------------------------------------------------------------------------
# result cache

def cache_dir() -> Path:
    env = os.environ.get("MACDET_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "macdet"


def record_key(lam: Partition, basis: str, method: str) -> str:
    blob = json.dumps({
        "lambda": list(lam),
        "basis": basis,
        "method": method,
        "engine_version": ENGINE_VERSION,
    }, sort_keys=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def cached_record(task: tuple[Partition, str, str]) -> dict:
    """Load the record for one (lam, basis, method) task, computing and
    storing it on a miss.  The stored timing is reused verbatim so a
    warm rerun reproduces the previous output byte for byte."""
    lam, basis, method = task
    path = cache_dir() / (record_key(lam, basis, method) + ".json")
    if path.exists():
        try:
            return json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            pass
    start = time.perf_counter()
    expansion = compute_expansion(lam, basis, method)
    elapsed = round(time.perf_counter() - start, 6)
    record = result_record(lam, basis, method, weight(lam), expansion, elapsed)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(record, indent=2, sort_keys=True))
        tmp.replace(path)
    except OSError:
        pass
    return record


# ---------------------------------------------------------------------------
# subcommands

def cmd_jpoly(args: argparse.Namespace) -> int:
    lam = args.lam
    n = args.n if args.n is not None else weight(lam)
    expansion = compute_expansion(lam, args.basis, args.method)
    if args.format == "text":
        print(render_text(expansion))
    elif args.format == "json":
        record = result_record(lam, args.basis, args.method, n, expansion)
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(render_latex(lam, args.basis, args.method, expansion))
    return 0


_SUITES = {
    "eigen": lambda a: run_eigen_suite(max_weight=a.max_weight, seed=a.seed),
    "appendix": lambda a: run_appendix_suite(seed=a.seed, samples=a.samples),
    "cross": lambda a: run_cross_suite(max_weight=a.max_weight, seed=a.seed),
    "oracle": lambda a: run_oracle_suite(max_weight=a.max_weight),
    "all": lambda a: run_all(max_weight=a.max_weight, seed=a.seed,
                             samples=a.samples),
}


def cmd_verify(args: argparse.Namespace) -> int:
    summary = summarize(_SUITES[args.suite](args))
    report = {
        "suite": args.suite,
        "max_weight": args.max_weight,
        "seed": args.seed,
        "passed": summary["passed"],
        "checks": summary["checks"],
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if summary["passed"] else 1


def cmd_table(args: argparse.Namespace) -> int:
    shapes = [lam for w in range(1, args.max_weight + 1)
              for lam in partitions_of(w)]
    tasks = [(lam, args.basis, args.method) for lam in shapes]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(cached_record, tasks))
    else:
        records = [cached_record(task) for task in tasks]
    text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    try:
        Path(args.out).write_text(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# argument parsing

def partition_argument(text: str) -> Partition:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid partition {text!r}: expected comma-separated integers")
    try:
        return partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macdet",
        description="Macdonald polynomials J_lam by determinantal and "
                    "creation-operator constructions, with verification "
                    "suites and cached tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    jp = sub.add_parser("jpoly", help="compute one expansion of J_lam")
    jp.add_argument("--lambda", dest="lam", type=partition_argument,
                    required=True, metavar="PARTS",
                    help="comma-separated parts, e.g. 2,2,1; 0 is empty")
    jp.add_argument("--basis", choices=BASES, default="smod")
    jp.add_argument("--method", choices=METHODS, default="determinant")
    jp.add_argument("--format", choices=("json", "latex", "text"),
                    default="text")
    jp.add_argument("--n", type=int, default=None,
                    help="variable count recorded in JSON output "
                         "(default: the weight)")
    jp.set_defaults(func=cmd_jpoly)

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", choices=tuple(_SUITES), default="all")
    vf.add_argument("--max-weight", type=int, default=4, dest="max_weight")
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--samples", type=int, default=100,
                    help="sample budget per randomized appendix check")
    vf.set_defaults(func=cmd_verify)

    tb = sub.add_parser("table", help="write cached result records")
    tb.add_argument("--max-weight", type=int, required=True, dest="max_weight")
    tb.add_argument("--basis", choices=BASES, required=True)
    tb.add_argument("--method", choices=METHODS, default="determinant")
    tb.add_argument("--out", required=True)
    tb.add_argument("--jobs", type=int, default=1,
                    help="worker processes for record computation")
    tb.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < len(args.lam):
        parser.error(f"--n {args.n} is smaller than the partition "
                     f"length {len(args.lam)}")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
