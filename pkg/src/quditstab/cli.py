"""Command-line interface.

Stabilizer file format: first non-comment line is the header `D=<int> n=<int>`,
then one generator per line in the w/X/Z syntax of parse_pauli. Blank lines and
`#` comments are ignored.

Exit codes: 0 success (including a "no" membership verdict), 1 file or parse
problems, 2 invalid stabilizer input, 3 dense-oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from functools import reduce
from pathlib import Path

import numpy as np

from . import checkmatrix as cm
from . import clifford as cl
from . import oracle
from . import pauli as pl
from . import standard_form as sfm
from ._config import dense_bound
from .errors import InvalidStabilizer, OracleTooLarge, PauliSyntaxError, QuditStabError

_HEADER_RE = re.compile(r"^D\s*=\s*(\d+)\s+n\s*=\s*(\d+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_stabilizer_text(text: str) -> cm.StabilizerPresentation:
    """Parse the stabilizer file format into a presentation."""
    lines = [(i + 1, _strip(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(no, s) for no, s in lines if s]
    if not lines:
        raise PauliSyntaxError("empty file: expected a 'D=<int> n=<int>' header", 0)
    no, head = lines[0]
    m = _HEADER_RE.match(head)
    if m is None:
        raise PauliSyntaxError(f"line {no}: expected header 'D=<int> n=<int>', got {head!r}", 0)
    D, n = int(m.group(1)), int(m.group(2))
    if D < 2:
        raise PauliSyntaxError(f"line {no}: D must be at least 2, got {D}", 0)
    if n < 1:
        raise PauliSyntaxError(f"line {no}: n must be at least 1, got {n}", 0)
    gens = []
    for no, s in lines[1:]:
        try:
            gens.append(pl.parse_pauli(s, D, n))
        except QuditStabError as exc:
            raise PauliSyntaxError(f"line {no}: {exc}", 0) from exc
    if not gens:
        raise PauliSyntaxError("no generator lines after the header", 0)
    return cm.from_generators(gens)


def format_stabilizer_text(S: cm.StabilizerPresentation) -> str:
    lines = [f"D={S.D} n={S.n}"]
    lines.extend(pl.format_pauli(S.generator(i)) for i in range(S.k))
    return "\n".join(lines) + "\n"


def load_stabilizer_file(path: str) -> cm.StabilizerPresentation:
    return parse_stabilizer_text(Path(path).read_text())


def _presentation_json(S: cm.StabilizerPresentation) -> dict:
    return {
        "matrix": S.matrix.tolist(),
        "phases": S.phases.tolist(),
        "generators": [pl.format_pauli(S.generator(i)) for i in range(S.k)],
    }


def _row_op_json(op) -> dict:
    return {"kind": op.kind, "i": op.i, "j": op.j, "m": op.m}


def _cmd_info(args: argparse.Namespace) -> int:
    S = load_stabilizer_file(args.file)
    out = [f"D = {S.D}", f"n = {S.n}", f"generators = {S.k}"]
    for i in range(S.k):
        out.append(f"  g{i + 1} = {pl.format_pauli(S.generator(i))}")
    out.append("check matrix [x | z] and phase (w exponent), tracked exactly:")
    out.extend(sfm._matrix_lines(S))
    report = cm.is_valid(S)
    if report:
        out.append("valid: yes")
        order = cm.group_order(S)
        out.append(f"group order = {order}")
        out.append(f"code dimension = {cm.code_dimension(S)}")
        print("\n".join(out))
        return 0
    out.append("valid: no")
    if not report.commuting:
        i, j = report.offending_pair
        out.append(f"  generators {i + 1} and {j + 1} do not commute")
    if report.offending_combo is not None:
        out.append(f"  phase inconsistency in combination {report.offending_combo}")
    print("\n".join(out))
    return 2


def _oracle_check(sf: sfm.StandardForm, bound: int) -> tuple[str, bool]:
    dim = sf.D**sf.n
    if dim > bound:
        return f"oracle check: SKIPPED (matrix dimension {dim} exceeds bound {bound})", True
    P_src = oracle.projector(sf.source, bound)
    P_res = oracle.projector(sf.result, bound)
    U = reduce(
        lambda acc, g: cl.gate_to_dense(g, sf.D, sf.n, bound) @ acc,
        sf.gates,
        np.eye(dim, dtype=complex),
    )
    dev = float(np.max(np.abs(U @ P_src @ U.conj().T - P_res)))
    return f"oracle check: deviation {dev:.3e}", dev <= 1e-9


def _cmd_standardize(args: argparse.Namespace) -> int:
    S = load_stabilizer_file(args.file)
    sf = sfm.standardize(S)
    text = sfm.transcript(sf)
    oracle_line = None
    if args.oracle:
        oracle_line, ok = _oracle_check(sf, dense_bound(args.oracle_bound))
        if not ok:
            print(f"error: {oracle_line}", file=sys.stderr)
            return 3
    if args.emit_gates:
        gate_text = "# gates realizing the reduction, applied left to right\n"
        gate_text += "".join(cl.format_gate(g) + "\n" for g in sf.gates)
        Path(args.emit_gates).write_text(gate_text)
    if args.json:
        payload = {
            "format": 1,
            "D": sf.D,
            "n": sf.n,
            "k": sf.k,
            "r": sf.r,
            "blocks": {name: getattr(sf, name).tolist() for name in ("M", "Z1", "Z2", "Z3", "Z4")},
            "gates": [cl.format_gate(g) for g in sf.gates],
            "row_ops": [_row_op_json(op) for op in sf.row_ops],
            "input": _presentation_json(sf.source),
            "result": _presentation_json(sf.result),
        }
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    sys.stdout.write(text)
    if oracle_line:
        print(oracle_line)
    return 0


def _cmd_member(args: argparse.Namespace) -> int:
    S = load_stabilizer_file(args.file)
    p = pl.parse_pauli(args.pauli, S.D, S.n)
    if cm.contains(S, p):
        print(f"yes: {pl.format_pauli(p)} is in the group")
    else:
        print(f"no: {pl.format_pauli(p)} is not in the group")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quditstab", description="qudit stabilizer groups over Z_D, exact arithmetic"
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="validity, group order, and code dimension")
    p.add_argument("file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("standardize", help="reduce to standard form, emitting gates")
    p.add_argument("file")
    p.add_argument("--emit-gates", metavar="PATH", help="write the gate sequence to PATH")
    p.add_argument("--json", metavar="PATH", help="write a machine-readable record to PATH")
    p.add_argument("--oracle", action="store_true", help="verify the reduction densely")
    p.add_argument("--oracle-bound", type=int, metavar="N", help="largest dense dimension")
    p.set_defaults(func=_cmd_standardize)

    p = sub.add_parser("member", help="test membership of a Pauli string")
    p.add_argument("file")
    p.add_argument("pauli")
    p.set_defaults(func=_cmd_member)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidStabilizer as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, QuditStabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
