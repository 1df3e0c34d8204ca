"""Command-line front end: ``semicoh <command> SPEC [options]``.

Every command prints one JSON report envelope on standard output.  Exit
codes: 0 success, 1 input error, 2 an Unknown verdict is present, 3 a
property check found a counterexample, 4 a search budget ran out.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import re
import sys
import time
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from . import __version__
from . import exactlin as xl
from .cone import Face, is_simplicial_mod_units
from .errors import (BudgetExhausted, FaceNotInLattice, NotAnEdge, SemicohError,
                     SpecError)
from .semigroup import DEFAULT_BOX, DEFAULT_BUDGET, AffineSemigroup

log = logging.getLogger("semicoh")

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_COUNTEREXAMPLE, EXIT_BUDGET = 0, 1, 2, 3, 4


# ----------------------------------------------------------------------
# spec files


class SemigroupSpec:
    """A parsed semigroup definition file."""

    def __init__(self, data: dict, source: str, raw: bytes):
        self.source = source
        self.sha256 = hashlib.sha256(raw).hexdigest()
        for key in ("name", "dim", "generators"):
            if key not in data:
                raise SpecError(f"{source}: missing field {key!r}")
        self.name = data["name"]
        if not isinstance(self.name, str) or not self.name:
            raise SpecError(f"{source}: name must be a nonempty string")
        self.dim = data["dim"]
        if not isinstance(self.dim, int) or self.dim < 1:
            raise SpecError(f"{source}: dim must be a positive integer")
        gens = data["generators"]
        if not isinstance(gens, list) or not gens:
            raise SpecError(f"{source}: generators must be a nonempty list")
        for g in gens:
            if not isinstance(g, list) or len(g) != self.dim or not all(isinstance(x, int) for x in g):
                raise SpecError(f"{source}: generator {g!r} is not a list of {self.dim} integers")
        self.generators = [tuple(g) for g in gens]
        self.labels = {k: tuple(v) for k, v in data.get("labels", {}).items()}
        for k, v in self.labels.items():
            if len(v) != self.dim:
                raise SpecError(f"{source}: label {k!r} has the wrong dimension")
        self.box = data.get("box")
        self.budget = data.get("budget")
        self.description = data.get("description", "")

    def semigroup(self, budget: Optional[int] = None) -> AffineSemigroup:
        return AffineSemigroup(self.generators, self.dim,
                               budget=budget or self.budget or DEFAULT_BUDGET)


def corpus_names() -> list:
    root = resources.files("semicoh") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def _corpus_bytes(name: str) -> Optional[bytes]:
    stem = Path(name).name
    if stem.endswith(".json"):
        stem = stem[:-5]
    p = resources.files("semicoh") / "corpus" / f"{stem}.json"
    return p.read_bytes() if p.is_file() else None


def load_spec(path: str) -> SemigroupSpec:
    """Load a spec from a file path, falling back to the bundled corpus by name."""
    p = Path(path)
    if p.is_file():
        raw = p.read_bytes()
    else:
        raw = _corpus_bytes(path)
        if raw is None:
            raise SpecError(f"{path}: no such file or bundled example")
    try:
        data = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise SpecError(f"{path}: top level must be a JSON object")
    return SemigroupSpec(data, path, raw)


# ----------------------------------------------------------------------
# argument parsing helpers

_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_]\w*)\s*")


def parse_degree(text: str, spec: SemigroupSpec) -> tuple:
    """Parse ``(0,-3,0)``, ``0,-3,0`` or a label expression such as ``x-v`` or ``2x+y``."""
    s = text.strip()
    if re.fullmatch(r"[\(\[]?\s*-?\d+(\s*,\s*-?\d+)*\s*,?\s*[\)\]]?", s):
        vals = tuple(int(v) for v in re.findall(r"-?\d+", s))
        if len(vals) != spec.dim:
            raise SpecError(f"degree {text!r} has {len(vals)} entries, expected {spec.dim}")
        return vals
    out = tuple(0 for _ in range(spec.dim))
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise SpecError(f"cannot parse degree {text!r} at position {pos}")
        sign, coef, name = m.groups()
        if name not in spec.labels:
            raise SpecError(f"unknown label {name!r} in degree {text!r}")
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        out = xl.vec_add(out, xl.vec_scale(c, spec.labels[name]))
        pos = m.end()
    return out


def ray_labels(Q: AffineSemigroup, spec: SemigroupSpec) -> list:
    names = []
    for j, ray in enumerate(Q.cone.rays):
        name = None
        for k, v in spec.labels.items():
            if any(v) and xl.primitive(v) == ray:
                name = k
                break
        names.append(name or f"r{j}")
    return names


def parse_prime(text: str, Q: AffineSemigroup, spec: SemigroupSpec) -> Face:
    """``max``/``empty``, ``top``, ``edge:x,y`` or ``face:x,y,u`` (labels or ray indices)."""
    lattice = Q.cone.face_lattice()
    t = text.strip()
    if t in ("max", "empty"):
        return lattice.empty
    if t == "top":
        return lattice.top
    kind, _, rest = t.partition(":")
    if kind not in ("edge", "face") or not rest:
        raise SpecError(f"cannot parse prime {text!r}")
    names = ray_labels(Q, spec)
    ids = []
    for part in rest.split(","):
        part = part.strip()
        if part in names:
            ids.append(names.index(part))
        elif part.isdigit() and int(part) < len(names):
            ids.append(int(part))
        elif part in spec.labels:
            raise FaceNotInLattice(f"{part!r} is not a ray of the cone")
        else:
            raise SpecError(f"unknown ray {part!r} in prime {text!r}")
    F = Q.cone.face_from_rays(ids)
    if tuple(sorted(set(ids))) != F.rays:
        raise FaceNotInLattice(f"{text!r} does not name a face (its closure is {F.rays})")
    if kind == "edge" and F.dim != 1:
        raise NotAnEdge(f"{text!r} is a face of dimension {F.dim}")
    return F


def parse_box(text: str) -> tuple:
    """``[-5,7]x[-5,7]``, ``-5,7`` or a single bound ``6`` (meaning [-6,6])."""
    nums = [int(v) for v in re.findall(r"-?\d+", text)]
    if len(nums) == 1:
        return (-abs(nums[0]), abs(nums[0]))
    if len(nums) in (2, 4) and nums[:2] == nums[-2:]:
        return (nums[0], nums[1])
    raise SpecError(f"cannot parse box {text!r}; use [lo,hi]x[lo,hi] with equal sides")


def parse_field(text: str):
    t = text.strip().lower()
    if t in ("rational", "q", "qq"):
        return "rational"
    t = t.removeprefix("prime:").removeprefix("p=")
    if t.isdigit():
        p = int(t)
        if p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1)):
            return p
    raise SpecError(f"field must be 'rational' or a prime, got {text!r}")


# ----------------------------------------------------------------------
# JSON


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in seq]
    return str(x)


def face_json(F: Face, names) -> dict:
    return {"label": F.label(names), "dim": F.dim, "rays": [names[j] for j in F.rays],
            "van": list(F.van)}


# ----------------------------------------------------------------------
# commands; each returns (result, exit_code)


def cmd_facets(spec, Q, args):
    C = Q.cone
    return {
        "functionals": C.functionals,
        "functionals_lattice": C.functionals_lattice,
        "rays": C.rays,
        "ray_labels": ray_labels(Q, spec),
        "lineality_basis": C.lineality_basis,
        "group_basis": C.basis,
    }, EXIT_OK


def cmd_hilbert(spec, Q, args):
    return {
        "saturation_basis": Q.saturation_hilbert_basis(),
        "tau_basis": Q.hilbert_basis_tau(),
        "units": Q.units,
        "saturated": Q.is_saturated(),
    }, EXIT_OK


def cmd_faces(spec, Q, args):
    names = ray_labels(Q, spec)
    return {"faces": [face_json(F, names) for F in Q.cone.face_lattice()]}, EXIT_OK


def cmd_is_simplicial(spec, Q, args):
    C = Q.cone
    return {"simplicial": is_simplicial_mod_units(C), "rays": len(C.rays),
            "rank": C.rank, "lineality_dim": C.lineality_dim}, EXIT_OK


def _verdict_json(v):
    return {"status": v.status, "method": v.method, "witness": v.witness}


def cmd_essential(spec, Q, args):
    from . import essential as es
    box = args.box if args.box is not None else (spec.box or DEFAULT_BOX)
    if args.test:
        eps = parse_degree(args.test, spec)
        v = es.essential_test(Q, eps, box)
        res = {"degree": eps, "tau": Q.tau(eps), **_verdict_json(v)}
        return res, EXIT_UNKNOWN if v.status == es.UNKNOWN else EXIT_OK
    if args.member:
        a = parse_degree(args.member, spec)
        m = es.essential_membership(Q, a, box)
        res = {"degree": a, "tau": Q.tau(a), "status": m.status,
               "essential_point": m.essential_point}
        return res, EXIT_UNKNOWN if m.status == es.UNKNOWN else EXIT_OK
    if args.grid:
        lo, hi = parse_box(args.grid)
        g = es.essential_grid_2d(Q, (lo, hi), box)
        if args.svg:
            Path(args.svg).write_text(g.to_svg())
        if args.ascii:
            Path(args.ascii).write_text(g.to_ascii() + "\n")
        counts: dict = {}
        for kind in g.cells.values():
            counts[kind] = counts.get(kind, 0) + 1
        essential_pts = sorted(z for z, k in g.cells.items() if k == "essential")
        res = {"box": [lo, hi], "ascii": g.to_ascii().splitlines(), "counts": counts,
               "essential_tau": essential_pts}
        return res, EXIT_UNKNOWN if counts.get("unknown") else EXIT_OK
    if args.shift:
        a = es.essential_shift_simplicial(Q)
        check = _shift_check(Q, a, box)
        res = {"shift": a, "verification": check}
        if spec.dim == 2 and Q.is_saturated():
            one = tuple(1 for _ in range(spec.dim))
            if Q.membership(one):
                alt = _shift_check(Q, one, box)
                if alt["failures"] == 0:
                    res["note"] = f"the smaller shift {one} also verifies on the box"
        return res, EXIT_COUNTEREXAMPLE if check["failures"] else EXIT_OK
    if args.bound:
        a_Q, pred = es.unsaturated_bound(Q)
        checked = fails = unknown = 0
        for eps in Q.points_in_tau_box([-box] * Q.r, [box] * Q.r):
            v = es.essential_test(Q, eps, box)
            if v.status == es.UNKNOWN:
                unknown += 1
                continue
            if v.status != es.ESSENTIAL:
                continue
            checked += 1
            if not pred(Q.tau(xl.vec_add(eps, a_Q))):
                fails += 1
        res = {"a_Q": a_Q, "essential_points_checked": checked, "failures": fails,
               "unknown": unknown}
        code = EXIT_COUNTEREXAMPLE if fails else (EXIT_UNKNOWN if unknown else EXIT_OK)
        return res, code
    raise SpecError("essential needs one of --test, --member, --grid, --shift, --bound")


def _shift_check(Q, a, box):
    from . import essential as es
    checked = fails = unknown = 0
    for alpha in Q.points_in_tau_box([-box] * Q.r, [box] * Q.r):
        m = es.essential_membership(Q, alpha, box)
        if m.status == es.UNKNOWN:
            unknown += 1
        elif m.status == es.IN_E:
            checked += 1
            if not Q.membership(xl.vec_add(a, alpha)):
                fails += 1
    return {"box": box, "checked": checked, "failures": fails, "unknown": unknown}


def cmd_localcoh(spec, Q, args):
    from . import localcoh as lc
    box = args.box if args.box is not None else (spec.box or 5)
    notes = []
    if args.converse:
        rep = lc.converse_report(Q)
        names = ray_labels(Q.saturation(), spec)
        res = {
            "simplicial": rep.simplicial,
            "edges": [F.label(names) for F in rep.edges],
            "disjoint_edge_facet_pairs": [[e.label(names), i] for e, i in rep.disjoint_pairs],
            "infinite_socle_edges": [F.label(names) for F in rep.infinite_socle_edges],
            "socle_samples": {",".join(names[j] for j in k): v for k, v in rep.samples.items()},
            "consistent": rep.consistent,
            "summary": ("simplicial; every edge meets every facet; socles finite" if rep.simplicial
                        else f"not simplicial; {len(rep.infinite_socle_edges)} edges with infinite socle"),
        }
        return res, EXIT_OK if rep.consistent else EXIT_COUNTEREXAMPLE
    if not Q.is_saturated():
        notes.append("input is not saturated; computing on its saturation")
        log.warning(notes[-1])
        Q = Q.saturation()
    if not args.prime:
        raise SpecError("localcoh needs --prime (or --converse)")
    F = parse_prime(args.prime, Q, spec)
    P = lc.GradedPrime(F)
    names = ray_labels(Q, spec)
    base = {"prime": face_json(F, names), "prime_dim": P.dim}
    if notes:
        base["notes"] = notes
    if args.socle:
        certs = lc.socle_scan(Q, P, box)
        return {**base, "box": box, "infinite": lc.socle_infinite_edge(Q, P),
                "certificates": [c.degree for c in certs]}, EXIT_OK
    if args.scan:
        j = args.cohdeg if args.cohdeg is not None else lc.krull_dim(Q) - 1
        rows = []
        for a in Q.points_in_tau_box([-box] * Q.r, [box] * Q.r):
            rep = lc.graded_piece(Q, P, j, a, verify=args.verify, field=args.field)
            if rep.dim:
                rows.append({"degree": a, "tau": Q.tau(a), "dim": rep.dim})
        return {**base, "cohdeg": j, "box": box, "nonzero": rows}, EXIT_OK
    if args.cohdeg is None or args.degree is None:
        raise SpecError("localcoh needs --cohdeg and --degree, or --scan, --socle, --converse")
    a = parse_degree(args.degree, spec)
    rep = lc.graded_piece(Q, P, args.cohdeg, a, verify=args.verify, field=args.field)
    res = {**base, "cohdeg": args.cohdeg, "degree": a, "tau": Q.tau(a), "dim": rep.dim,
           "method": rep.method}
    if rep.field_note:
        res["field_note"] = rep.field_note
    return res, EXIT_OK


def cmd_cox(spec, Q, args):
    from . import coxcech as cc
    S = Q.saturation()
    if args.irrelevant or args.check_box is None:
        B = cc.irrelevant_ideal(S)
        names = ray_labels(S, spec)
        faces = [F.label(names) for F in S.cone.face_lattice() if not F.is_empty]
        res = {"generators": B.generators, "faces_used": faces,
               "functionals": S.cone.functionals}
        if args.check_box is None:
            return res, EXIT_OK
    rep = cc.prop_irrelevant_check(S, args.check_box)
    res = {"box": args.check_box, "total": rep.total, "agree": rep.agree,
           "counterexamples": rep.counterexamples[:20],
           "van_mismatches": rep.van_mismatches[:20]}
    if args.irrelevant:
        res["generators"] = cc.irrelevant_ideal(S).generators
    return res, EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE


COMMANDS = {
    "facets": cmd_facets,
    "hilbert": cmd_hilbert,
    "faces": cmd_faces,
    "is-simplicial": cmd_is_simplicial,
    "essential": cmd_essential,
    "localcoh": cmd_localcoh,
    "cox": cmd_cox,
}


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error code rather than argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--box", type=int, default=None, help="search box half-width in tau coordinates")
    common.add_argument("--budget", type=int, default=None, help="lattice points a search may examine")
    common.add_argument("--verify", action="store_true", help="run oracle cross-checks")
    common.add_argument("--field", type=parse_field, default="rational",
                        help="'rational' or a prime p for homology ranks")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the envelope")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="semicoh", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"semicoh {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("facets", "hilbert", "faces", "is-simplicial"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("spec")
    s = sub.add_parser("essential", parents=[common])
    s.add_argument("spec")
    s.add_argument("--test", metavar="DEGREE")
    s.add_argument("--member", metavar="DEGREE")
    s.add_argument("--grid", metavar="BOX")
    s.add_argument("--shift", action="store_true")
    s.add_argument("--bound", action="store_true")
    s.add_argument("--svg", metavar="FILE")
    s.add_argument("--ascii", metavar="FILE")
    s = sub.add_parser("localcoh", parents=[common])
    s.add_argument("spec")
    s.add_argument("--prime")
    s.add_argument("--cohdeg", type=int)
    s.add_argument("--degree")
    s.add_argument("--scan", action="store_true")
    s.add_argument("--socle", action="store_true")
    s.add_argument("--converse", action="store_true")
    s = sub.add_parser("cox", parents=[common])
    s.add_argument("spec")
    s.add_argument("--irrelevant", action="store_true")
    s.add_argument("--check-box", type=int, dest="check_box")
    s = sub.add_parser("acceptance", parents=[common], help="run the acceptance criteria")
    s.add_argument("--only", type=int, action="append", help="criterion number (repeatable)")
    sub.add_parser("corpus", parents=[common], help="list bundled example specs")
    return p


def _emit(envelope: dict, out) -> None:
    out.write(json.dumps(jsonable(envelope), indent=2) + "\n")


def run(argv, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    t0 = time.perf_counter()
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("command", "spec", "timing", "verbose")}
    envelope = {"tool": "semicoh", "version": __version__, "input_sha256": None,
                "command": args.command, "params": params, "result": None, "timing": None}
    code = EXIT_OK
    try:
        if args.command == "corpus":
            items = []
            for name in corpus_names():
                s = load_spec(name)
                items.append({"name": s.name, "dim": s.dim, "generators": s.generators,
                              "description": s.description})
            envelope["result"] = items
        elif args.command == "acceptance":
            from .acceptance import run_all
            results = run_all(args.only)
            envelope["result"] = [r.as_dict() for r in results]
            code = EXIT_OK if all(r.passed for r in results) else EXIT_COUNTEREXAMPLE
        else:
            spec = load_spec(args.spec)
            envelope["input_sha256"] = spec.sha256
            envelope["spec"] = spec.name
            Q = spec.semigroup(args.budget)
            result, code = COMMANDS[args.command](spec, Q, args)
            envelope["result"] = result
    except BudgetExhausted as e:
        envelope["error"] = {"kind": "BudgetExhausted", "message": str(e), "level": e.level}
        code = EXIT_BUDGET
    except SemicohError as e:
        envelope["error"] = {"kind": type(e).__name__, "message": str(e)}
        code = EXIT_INPUT
    if args.timing:
        envelope["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    envelope["exit_code"] = code
    _emit(envelope, out)
    if "error" in envelope:
        print(f"semicoh: {envelope['error']['kind']}: {envelope['error']['message']}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
