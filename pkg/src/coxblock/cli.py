"""Command line front end.

Every subcommand is single shot: data goes to stdout as JSON or TSV, and
diagnostics go to stderr.  Usage errors exit with status 2, a failed
verification with status 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .arithmetic import cuspidal_kernel_count, validate_coxeter
from .cohomology import r_star, verify_all
from .combinatorics import (
    RootSubset,
    classical_subsets,
    jacquet_module,
    levi_partition,
    partial,
    strict_subsets,
    whittaker_partition,
)
from .ext import abutment_degree, e1_page, euler_check, ext_poincare
from .grothendieck import decomposition_matrix
from .jacquet_langlands import lj, lj_effective
from .weil_deligne import jordan_type, wd_elliptic

MAX_ENUM_D = 16
DEFAULT_PERM_CAP = 9


class UsageError(Exception):
    pass


@dataclass
class Table:
    columns: list[str]
    rows: list[dict[str, Any]]
    meta: dict[str, Any] = field(default_factory=dict)
    grid: str | None = None  # preformatted TSV body replacing the row dump
    failed: bool = False

    def to_json(self) -> str:
        return json.dumps({"meta": self.meta, "rows": self.rows}, sort_keys=True)

    def to_tsv(self) -> str:
        out = [f"# {k}\t{_cell(v)}" for k, v in sorted(self.meta.items())]
        if self.grid is not None:
            return "\n".join(out) + ("\n" if out else "") + self.grid
        out.append("\t".join(self.columns))
        for row in self.rows:
            out.append("\t".join(_cell(row[c]) for c in self.columns))
        return "\n".join(out) + "\n"


def _cell(v: Any) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, separators=(",", ":"))


def _perm_cap() -> int:
    raw = os.environ.get("COXBLOCK_MAX_D")
    if raw is None:
        return DEFAULT_PERM_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"COXBLOCK_MAX_D={raw!r} is not an integer") from None


def _rank(args: argparse.Namespace) -> int:
    if args.d is None:
        raise UsageError("--d is required")
    if not 1 <= args.d <= MAX_ENUM_D:
        raise UsageError(f"--d must lie in [1, {MAX_ENUM_D}]")
    return args.d


def _subset(d: int, text: str | None, name: str = "--I") -> RootSubset:
    if text is None:
        raise UsageError(f"{name} is required")
    try:
        return RootSubset.parse(d, text)
    except ValueError as exc:
        raise UsageError(f"{name}: {exc}") from None


def _subsets_or_all(args, d: int, default: Callable[[int], list[RootSubset]]) -> list[RootSubset]:
    return [_subset(d, args.I)] if args.I is not None else default(d)


# subcommands ---------------------------------------------------------------


def cmd_classify(args) -> Table:
    d = _rank(args)
    if args.jacquet and d > _perm_cap():
        raise UsageError(f"--jacquet enumerates S_{d}; cap is d <= {_perm_cap()} (COXBLOCK_MAX_D)")
    columns = ["mask", "I", "mu", "lambda", "lj_sign", "lj_support", "wd_jordan_type"]
    if args.jacquet:
        columns.append("jacquet_size")
    rows = []
    for I in strict_subsets(d):
        sign, chars = lj_effective(I)
        row = {
            "mask": I.mask,
            "I": I.to_json(),
            "mu": list(levi_partition(I).parts),
            "lambda": list(whittaker_partition(I).parts),
            "lj_sign": sign,
            "lj_support": sorted(chars),
            "wd_jordan_type": list(jordan_type(wd_elliptic(I)).parts),
        }
        if args.jacquet:
            row["jacquet_size"] = sum(jacquet_module("pi", I).values())
        rows.append(row)
    return Table(columns, rows, {"d": d, "count": len(rows)})


def cmd_decomp_matrix(args) -> Table:
    d = _rank(args)
    D = decomposition_matrix(d)
    labels = [J.label() for J in D.cols]
    rows = []
    for I, entries in zip(D.rows, D.entries):
        row = {"mask": I.mask, "v_I": I.to_json()}
        row.update(zip(labels, entries))
        rows.append(row)
    return Table(["mask", "v_I"] + labels, rows, {"d": d, "shape": [len(D.rows), len(D.cols)]})


def cmd_lj(args) -> Table:
    d = _rank(args)
    rows = []
    for I in _subsets_or_all(args, d, strict_subsets):
        sign, chars = lj_effective(I)
        rows.append({"mask": I.mask, "I": I.to_json(), "lj": lj(I).to_json(), "sign": sign, "support": sorted(chars)})
    return Table(["mask", "I", "lj", "sign", "support"], rows, {"d": d})


def cmd_wd(args) -> Table:
    d = _rank(args)
    rows = []
    for I in _subsets_or_all(args, d, strict_subsets):
        x = wd_elliptic(I)
        rows.append({"mask": I.mask, "I": I.to_json(), "wd": x.to_json(), "jordan_type": list(jordan_type(x).parts)})
    return Table(["mask", "I", "wd", "jordan_type"], rows, {"d": d})


def cmd_rstar(args) -> Table:
    d = _rank(args)
    I = _subset(d, args.I)
    R = r_star(I)
    rows = [
        {"i": i, "j": j, "degree": n, "lefschetz": "iso" if (i, j) in R.lefschetz else "0"}
        for (i, j), n in sorted(R.degree.items())
    ]
    return Table(["i", "j", "degree", "lefschetz"], rows, {"d": d, "I": I.to_json(), "total_dim": R.total_dim})


def cmd_verify(args) -> Table:
    d = _rank(args)
    t0 = time.perf_counter()
    reports = verify_all(d, jobs=args.jobs)
    rows = []
    for rep in reports:
        row = rep.to_json()
        if not args.timing:
            row.pop("seconds")
        row.setdefault("lhs", None)
        row.setdefault("rhs", None)
        rows.append(row)
    ok = sum(r.holds for r in reports)
    meta = {"d": d, "verified": ok, "total": len(reports), "summary": f"{ok}/{len(reports)} subsets verified"}
    if args.timing:
        meta["seconds"] = round(time.perf_counter() - t0, 6)
    columns = ["mask", "I", "status", "lhs", "rhs"] + (["seconds"] if args.timing else [])
    print(meta["summary"], file=sys.stderr)
    return Table(columns, rows, meta, failed=ok != len(reports))


def cmd_ext(args) -> Table:
    d = _rank(args)
    I = _subset(d, args.I)
    J = _subset(d, args.J, "--J")
    kinds = [args.kind] if args.kind else ["ii", "vi", "pi_i"]
    rows = []
    for kind in kinds:
        P = ext_poincare(kind, J, I)
        rows.append({"kind": kind, "J": J.to_json(), "I": I.to_json(), "poincare": P.to_json(), "text": str(P)})
    return Table(["kind", "J", "I", "poincare", "text"], rows, {"d": d})


def cmd_e1(args) -> Table:
    d = _rank(args)
    I = _subset(d, args.I)
    if args.i is None:
        raise UsageError("--i is required")
    page = e1_page(I, args.i)
    rows = [{"p": p, "q": q, "dim": n} for (p, q), n in sorted(page.cells.items())]
    meta = {
        "d": d,
        "I": I.to_json(),
        "i": args.i,
        "corners": [list(c) for c in page.corners()],
        "within_corners": page.within_corners(),
        "euler": page.euler_characteristic(),
    }
    return Table(["p", "q", "dim"], rows, meta, grid=page.to_tsv())


def cmd_euler(args) -> Table:
    d = _rank(args)
    subsets = _subsets_or_all(args, d, classical_subsets)
    rows = []
    for I in subsets:
        for i in [args.i] if args.i is not None else range(d):
            page = e1_page(I, i)
            rows.append(
                {
                    "mask": I.mask,
                    "I": I.to_json(),
                    "i": i,
                    "degree": -partial(I, i),
                    "abutment_degree": abutment_degree(I, i),
                    "euler": page.euler_characteristic(),
                    "ok": euler_check(I, i) and page.within_corners(),
                }
            )
    passed = sum(r["ok"] for r in rows)
    return Table(
        ["mask", "I", "i", "degree", "abutment_degree", "euler", "ok"],
        rows,
        {"d": d, "passed": passed, "total": len(rows)},
        failed=passed != len(rows),
    )


def cmd_params(args) -> Table:
    if args.q is None or args.ell is None or args.d is None:
        raise UsageError("params needs --q, --ell and --d")
    try:
        ok = validate_coxeter(args.q, args.ell, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {"q": args.q, "ell": args.ell, "d": args.d, "coxeter": ok}
    row["kernel_count"] = cuspidal_kernel_count(args.q, args.ell, args.d) if ok else None
    return Table(["q", "ell", "d", "coxeter", "kernel_count"], [row])


COMMANDS: dict[str, Callable[[argparse.Namespace], Table]] = {
    "classify": cmd_classify,
    "decomp-matrix": cmd_decomp_matrix,
    "lj": cmd_lj,
    "wd": cmd_wd,
    "rstar": cmd_rstar,
    "verify": cmd_verify,
    "ext": cmd_ext,
    "e1": cmd_e1,
    "euler": cmd_euler,
    "params": cmd_params,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxblock",
        description="Unipotent block of GL_d mod l under the Coxeter congruence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--d", type=int)
        p.add_argument("--I", help='bitmask integer or comma list such as "1,3"')
        p.add_argument("--J", help="second subset (ext)")
        p.add_argument("--i", type=int, help="Frobenius index")
        p.add_argument("--q", type=int)
        p.add_argument("--ell", type=int)
        p.add_argument("--kind", choices=["ii", "vi", "pi_i"])
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        if name == "classify":
            p.add_argument("--jacquet", action="store_true", help="add |r_B(pi_I)| by enumerating S_d")
        if name == "verify":
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--timing", action="store_true", help="include wall-clock times")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        table = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"coxblock {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(table.to_json() + "\n" if args.format == "json" else table.to_tsv())
    return 1 if table.failed else 0


if __name__ == "__main__":
    sys.exit(main())
