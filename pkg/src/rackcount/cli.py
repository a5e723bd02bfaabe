"""Command line front end.

    rackcount rack-check RACK
    rackcount rack-cocycles RACK --mod M [--all-up-to K]
    rackcount link-info LINK
    rackcount invariant {ir,pr,phi} RACK LINK [--cocycle FILE] [--quiet]

Exit status is 0 on success, 1 when the input is well formed but refused
(not a rack, inadmissible cocycle) and 2 for I/O or syntax errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cohomology import dumps_cochain, enumerate_reduced_cocycles, load_cochain
from .diagrams import DiagramError, arcs, linking_number, load_diagram, self_writhe
from .invariants import (
    InadmissibleCocycle,
    cocycle_invariant,
    framing_counts,
    polynomial_counting,
)
from .racks import FormatError, RackError, cycle_notation, parse_rack_table, profile, validate_rack

OK, REFUSED, BAD_INPUT = 0, 1, 2


class _Abort(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Abort(BAD_INPUT, f"{path}: {exc.strerror or exc}") from None


def _load_rack(path: str):
    try:
        table = parse_rack_table(_read(path))
    except FormatError as exc:
        raise _Abort(BAD_INPUT, f"{path}: {exc}") from None
    try:
        return validate_rack(table)
    except RackError as exc:
        raise _Abort(REFUSED, f"{path}: invalid rack: {exc}") from None


def _load_link(path: str):
    _read(path)
    try:
        return load_diagram(path)
    except DiagramError as exc:
        raise _Abort(BAD_INPUT, f"{path}: {exc}") from None


def cmd_rack_check(args, out) -> int:
    try:
        table = parse_rack_table(_read(args.rack))
    except FormatError as exc:
        raise _Abort(BAD_INPUT, f"{args.rack}: {exc}") from None
    try:
        rack = validate_rack(table)
    except RackError as exc:
        out.write(f"invalid rack, n={len(table)}\n")
        for v in exc.violations:
            out.write(f"  {v}\n")
        return REFUSED
    prof = profile(rack)
    out.write(
        f"valid rack, n={rack.n}, quandle={'yes' if prof.is_quandle else 'no'}, N={prof.rank}\n"
    )
    out.write(f"diagonal: {cycle_notation(prof.diagonal)}\n")
    exps = " ".join(f"{x}:{e}" for x, e in prof.exponents.items())
    out.write(f"exponents: {exps}\n")
    classes = " ".join("{" + ",".join(map(str, c)) + "}" for c in prof.operator_classes)
    out.write(f"operator classes: {classes}\n")
    return OK


def cmd_rack_cocycles(args, out) -> int:
    rack = _load_rack(args.rack)
    if args.mod < 2:
        raise _Abort(BAD_INPUT, "--mod must be at least 2")
    sols = enumerate_reduced_cocycles(rack, args.mod)
    out.write(f"reduced 2-cocycles mod {args.mod}: {sols.count}\n")
    out.write(f"generators: {len(sols.module.generators)} (orders {list(sols.orders)})\n")
    for i, g in enumerate(sols.basis, start=1):
        out.write(f"# generator {i}\n")
        out.write(dumps_cochain(g))
    if args.all_up_to is not None:
        out.write(f"# solutions (at most {args.all_up_to})\n")
        for i, phi in enumerate(sols.solutions(args.all_up_to), start=1):
            out.write(f"# solution {i}\n")
            out.write(dumps_cochain(phi))
    return OK


def cmd_link_info(args, out) -> int:
    d = _load_link(args.link)
    sw = ",".join(map(str, self_writhe(d)))
    parts = [f"components={d.num_components}", f"sw=({sw})"]
    c = d.num_components
    try:
        for i in range(1, c + 1):
            for j in range(i + 1, c + 1):
                parts.append(f"lk({i},{j})={linking_number(d, i, j)}")
    except DiagramError as exc:
        raise _Abort(BAD_INPUT, f"{args.link}: {exc}") from None
    parts.append(f"arcs={arcs(d).num_arcs}")
    out.write(", ".join(parts) + "\n")
    return OK


def cmd_invariant(args, out) -> int:
    rack = _load_rack(args.rack)
    d = _load_link(args.link)
    if args.kind == "ir":
        counts = framing_counts(d, rack)
        out.write(f"{sum(counts.values())}\n")
        if not args.quiet:
            for w, k in counts.items():
                if k:
                    out.write(f"({','.join(map(str, w))}) 0 {k}\n")
        return OK
    if args.kind == "pr":
        poly = polynomial_counting(d, rack)
    else:
        if args.cocycle is None:
            raise _Abort(BAD_INPUT, "phi needs --cocycle FILE")
        _read(args.cocycle)
        try:
            phi = load_cochain(args.cocycle)
        except FormatError as exc:
            raise _Abort(BAD_INPUT, f"{args.cocycle}: {exc}") from None
        try:
            poly = cocycle_invariant(d, rack, phi)
        except InadmissibleCocycle as exc:
            raise _Abort(REFUSED, f"{args.cocycle}: {exc}") from None
    out.write(f"{poly}\n")
    if not args.quiet:
        out.write(poly.machine_block())
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rackcount", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("rack-check", help="validate a rack table and show its profile")
    s.add_argument("rack")
    s.set_defaults(func=cmd_rack_check)

    s = sub.add_parser("rack-cocycles", help="list N-reduced 2-cocycles with Z_m coefficients")
    s.add_argument("rack")
    s.add_argument("--mod", type=int, required=True)
    s.add_argument("--all-up-to", type=int, default=None, metavar="K")
    s.set_defaults(func=cmd_rack_cocycles)

    s = sub.add_parser("link-info", help="writhes, linking numbers and arcs of a Gauss code")
    s.add_argument("link")
    s.set_defaults(func=cmd_link_info)

    s = sub.add_parser("invariant", help="compute IR, PR or Phi")
    s.add_argument("kind", choices=["ir", "pr", "phi"])
    s.add_argument("rack")
    s.add_argument("link")
    s.add_argument("--cocycle", default=None)
    s.add_argument("--quiet", action="store_true", help="print the polynomial only")
    s.set_defaults(func=cmd_invariant)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args, out)
    except _Abort as exc:
        err.write(f"rackcount: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
