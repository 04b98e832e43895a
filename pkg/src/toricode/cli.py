"""``toricode`` command line.

Every command reads one JSON instance file::

    {"q": 11, "phi": [[1,0],[0,1],[-1,2],[0,-1]], "Q": [[1,2,3,4]],
     "beta": [[1,-2,1,0],[0,1,0,1]], "alpha": [1,0]}

``beta`` and ``alpha`` are optional; ``guards`` may override the
enumeration caps (``points``, ``distance``, ``basis``).  Exit codes:
0 success, 2 invalid input, 3 unsupported instance, 4 resource guard.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import product

from . import codes, points as pts, vanish
from .errors import InvalidInput, ToricError
from .poly import DEFAULT_MAX_BASIS, Polynomial, ideal_equal
from .toric import ToricInstance, validate

EXIT_INVALID = 2


class InputError(InvalidInput):
    pass


def load_instance(path: str):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read instance file: {exc}") from exc
    if not isinstance(raw, dict):
        raise InputError("instance file must hold a JSON object")
    missing = [k for k in ("q", "phi", "Q") if k not in raw]
    if missing:
        raise InputError(f"missing keys: {', '.join(missing)}")
    try:
        _int_matrix(raw["phi"], "phi")
        _int_matrix(raw["Q"], "Q")
        if raw.get("beta") is not None:
            _int_matrix(raw["beta"], "beta", allow_empty=True)
        if not isinstance(raw["q"], int):
            raise InputError("q must be an integer")
        alpha = raw.get("alpha")
        if alpha is not None and not all(isinstance(a, int) for a in alpha):
            raise InputError("alpha must be a list of integers")
        inst = validate(raw["q"], raw["phi"], raw["Q"], raw.get("beta"))
    except TypeError as exc:
        raise InputError(str(exc)) from exc
    guards = raw.get("guards") or {}
    return inst, raw.get("alpha"), guards


def _int_matrix(M, name, allow_empty=False):
    if not isinstance(M, list) or (not M and not allow_empty):
        raise InputError(f"{name} must be a non-empty list of rows")
    width = None
    for row in M:
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InputError(f"{name} rows must be lists of integers")
        if width is not None and len(row) != width:
            raise InputError(f"{name} rows have different lengths")
        width = len(row)


# -- rendering ---------------------------------------------------------------

_DLOG_NOTE = "# field entries: discrete logs to base g, -1 for zero"


def _coeff_json(F, c):
    return c if F.k == 1 else (F.dlog(c) if c else -1)


def poly_json(f: Polynomial):
    F = f.ring.field
    return [[_coeff_json(F, c), list(e)] for e, c in f.items()]


def _header(inst: ToricInstance, command: str) -> dict:
    return {
        "command": command,
        "q": inst.q,
        "n": inst.n, "r": inst.r, "d": inst.d, "s": inst.s,
        "beta": inst.beta.tolist(),
        "beta_source": "supplied" if inst.beta_supplied else "derived",
        "variable_order": " > ".join(f"x_{i + 1}" for i in range(inst.r)),
        "complete": inst.complete,
    }


def _header_text(h: dict) -> list[str]:
    return [
        f"# {h['command']}: q={h['q']} n={h['n']} r={h['r']} d={h['d']} s={h['s']}",
        f"# beta ({h['beta_source']}): {h['beta']}",
        f"# order: lex {h['variable_order']}",
    ]


def _matrix_text(M) -> list[str]:
    return [" ".join(str(x) for x in row) for row in M]


# -- commands ----------------------------------------------------------------

def cmd_ideal(inst, args, alpha, guards):
    max_size = guards.get("basis", DEFAULT_MAX_BASIS)
    results = {}
    if args.method in ("elim", "both"):
        results["elimination"] = vanish.ideal_via_elimination(inst, max_size)
    if args.method in ("lattice", "both"):
        results["lattice"] = vanish.ideal_via_lattice(inst, max_size)
    out = _header(inst, "ideal")
    first = next(iter(results.values()))
    out["groebner_basis"] = {k: [poly_json(g) for g in v.generators] for k, v in results.items()}
    out["minimal_generators"] = [poly_json(g) for g in first.minimal_generators()]
    out["text"] = {
        "groebner_basis": {k: [str(g) for g in v.generators] for k, v in results.items()},
        "minimal_generators": [str(g) for g in first.minimal_generators()],
    }
    if args.method == "both":
        out["equal"] = ideal_equal(results["elimination"].generators,
                                   results["lattice"].generators, first.ring)
    lines = _header_text(out)
    for k, v in results.items():
        lines.append(f"reduced Groebner basis ({k}):")
        lines += [f"  {g}" for g in v.generators]
    lines.append("minimal generators:")
    lines += [f"  {g}" for g in out["text"]["minimal_generators"]]
    if "equal" in out:
        lines.append(f"methods agree: {'yes' if out['equal'] else 'no'}")
    return out, lines


def _lattice_json(L):
    return [list(v) for v in L.vectors()]


def cmd_lattice(inst, args, alpha, guards):
    L = vanish.lattice_L(inst)
    out = _header(inst, "lattice")
    out["basis"] = _lattice_json(L)
    out["rank"] = L.rank
    lines = _header_text(out) + ["lattice basis (columns):"] + [f"  {v}" for v in out["basis"]]
    if args.shortcut:
        sc = vanish.lattice_via_colon(inst)
        info = {
            "lattice": _lattice_json(sc.lattice),
            "condition_holds": sc.condition_holds,
            "equals_L": sc.lattice == L,
            "Q_homogeneous": vanish.is_Q_homogeneous(inst),
        }
        lines += ["shortcut (L_Q cap L_beta) + (q-1) L_beta:"] + [f"  {v}" for v in info["lattice"]]
        lines.append(f"condition image(Q phi) == image(Q phi):(q-1): "
                     f"{'holds' if sc.condition_holds else 'fails'}")
        lines.append(f"Q homogeneous: {'yes' if info['Q_homogeneous'] else 'no'}")
        Q = inst.Q
        if Q.rows == Q.cols and all(Q[i, j] == 0 for i in range(Q.rows) for j in range(Q.cols) if i != j):
            D = vanish.lattice_degenerate(inst)
            info["degenerate"] = _lattice_json(D)
            lines += ["degenerate torus lattice:"] + [f"  {v}" for v in info["degenerate"]]
        out["shortcut"] = info
    return out, lines


def cmd_length(inst, args, alpha, guards):
    guard = guards.get("points", pts.DEFAULT_GUARD)
    methods = ["count", "snf", "points"] if args.method == "all" else [args.method]
    by = {}
    out = _header(inst, "length")
    for m in methods:
        if m == "count":
            out["kernel_size"] = pts.kernel_count(inst, guard)
            by[m] = pts.length_count(inst, guard)
        elif m == "snf":
            by[m] = pts.length_snf(inst)
        else:
            by[m] = len(pts.enumerate_points(inst, guard))
    out["by_method"] = by
    out["N"] = by[methods[0]]
    out["agree"] = len(set(by.values())) == 1
    lines = _header_text(out) + [f"N ({m}) = {v}" for m, v in by.items()]
    if "kernel_size" in out:
        lines.append(f"|ker| = {out['kernel_size']}")
    lines.append(f"N = {out['N']}")
    return out, lines


def _alphas(inst, args, alpha):
    if getattr(args, "alpha", None):
        alpha = [int(a) for a in args.alpha.split(",")]
    if getattr(args, "box", None):
        spans = []
        for part in args.box.split(","):
            lo, hi = part.split(":")
            spans.append(range(int(lo), int(hi) + 1))
        if len(spans) != inst.d:
            raise InputError(f"box needs {inst.d} ranges")
        return [list(a) for a in product(*spans)]
    if alpha is None:
        raise InputError("a degree alpha is required (file key 'alpha' or --alpha)")
    if len(alpha) != inst.d:
        raise InputError(f"alpha needs {inst.d} entries")
    return [list(alpha)]


def cmd_params(inst, args, alpha, guards):
    guard = guards.get("points", pts.DEFAULT_GUARD)
    dguard = guards.get("distance", pts.DEFAULT_GUARD)
    P = [p.coords for p in pts.enumerate_points(inst, guard)]
    F = inst.field
    out = _header(inst, "params")
    out["field_encoding"] = "residue" if F.k == 1 else "dlog"
    lines = _header_text(out)
    if args.matrix and F.k > 1:
        lines.append(_DLOG_NOTE)
    out["codes"] = []
    for a in _alphas(inst, args, alpha):
        basis = codes.monomials_of_degree(inst, a, guards.get("box", pts.DEFAULT_GUARD))
        G = codes.evaluation_matrix(inst, basis, P)
        k = codes.rank(F, G) if basis.monomials else 0
        d = codes.minimum_distance(F, G, dguard) if args.distance and k else None
        entry = {"alpha": a, "N": len(P), "k": k, "d": d,
                 "monomials": [list(m) for m in basis.monomials]}
        if args.matrix:
            entry["generator_matrix"] = [[_coeff_json(F, x) for x in row] for row in G]
        out["codes"].append(entry)
        dtxt = "" if d is None else f", d={d}"
        lines.append(f"alpha={a}: N={len(P)}, k={k}{dtxt}, |S_alpha|={len(basis)}")
        if args.matrix:
            lines += ["  " + row for row in _matrix_text(entry["generator_matrix"])]
    return out, lines


def cmd_hf(inst, args, alpha, guards):
    I = vanish.ideal_via_lattice(inst, guards.get("basis", DEFAULT_MAX_BASIS))
    out = _header(inst, "hf")
    lines = _header_text(out)
    out["values"] = []
    for a in _alphas(inst, args, alpha):
        v = codes.hilbert_function(inst, I.generators, a, I.ring)
        out["values"].append({"alpha": a, "value": v})
        lines.append(f"HF({a}) = {v}")
    return out, lines


def cmd_check_ci(inst, args, alpha, guards):
    rep = vanish.is_complete_intersection(inst, guards.get("basis", DEFAULT_MAX_BASIS))
    out = _header(inst, "check-ci")
    out.update({
        "basis": rep.basis, "mixed": rep.basis_mixed, "dominating": rep.basis_dominating,
        "witness": rep.witness, "minimal_generators": rep.minimal_generator_count,
        "rank": rep.rank, "complete_intersection": rep.complete_intersection,
        "warnings": rep.warnings,
    })
    lines = _header_text(out) + ["lattice basis:"] + [f"  {v}" for v in rep.basis]
    lines.append(f"mixed: {'yes' if rep.basis_mixed else 'no'}, "
                 f"dominating: {'yes' if rep.basis_dominating else 'no'}")
    if rep.witness is not None:
        lines += ["mixed dominating basis:"] + [f"  {v}" for v in rep.witness]
    if rep.minimal_generator_count is not None:
        lines.append(f"minimal generators: {rep.minimal_generator_count} (rank {rep.rank})")
    lines.append(f"complete intersection: {'yes' if rep.complete_intersection else 'no'}")
    lines += [f"warning: {w}" for w in rep.warnings]
    return out, lines


def cmd_points(inst, args, alpha, guards):
    P = pts.enumerate_points(inst, guards.get("points", pts.DEFAULT_GUARD))
    F = inst.field
    out = _header(inst, "points")
    out["field_encoding"] = "residue" if F.k == 1 else "dlog"
    out["points"] = [{"coords": [_coeff_json(F, c) for c in p.coords],
                      "key": list(p.key), "h": list(p.h)} for p in P]
    lines = _header_text(out) + ([_DLOG_NOTE] if F.k > 1 else []) + [f"N = {len(P)}"]
    lines += [" ".join(str(x) for x in e["coords"]) for e in out["points"]]
    return out, lines


COMMANDS = {
    "ideal": cmd_ideal, "lattice": cmd_lattice, "length": cmd_length,
    "params": cmd_params, "hf": cmd_hf, "check-ci": cmd_check_ci, "points": cmd_points,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricode",
                                     description="Vanishing ideals and parameters of parameterized toric codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", "-i", required=True, help="JSON instance file")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("ideal", "generators of I(Y_Q)")
    p.add_argument("--method", choices=["elim", "lattice", "both"], default="both")
    p = add("lattice", "basis of the lattice L with I(Y_Q) = I_L")
    p.add_argument("--shortcut", action="store_true",
                   help="also report the colon shortcut, Q homogeneity and degenerate torus")
    p = add("length", "code length N = |Y_Q|")
    p.add_argument("--method", choices=["count", "snf", "points", "all"], default="all")
    for name, help_ in (("params", "code parameters (N, k, d) at degree alpha"),
                        ("hf", "multigraded Hilbert function of I(Y_Q) at alpha")):
        p = add(name, help_)
        p.add_argument("--alpha", help="comma separated degree, overrides the file")
        p.add_argument("--box", help="sweep degrees in a box, e.g. '-5:0,0:2'")
        if name == "params":
            p.add_argument("--distance", action="store_true", help="exhaustive minimum distance")
            p.add_argument("--matrix", action="store_true", help="include the generator matrix")
    add("check-ci", "complete-intersection test for I(Y_Q)")
    add("points", "canonical representatives of Y_Q")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        inst, alpha, guards = load_instance(args.input)
        out, lines = COMMANDS[args.command](inst, args, alpha, guards)
    except ToricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
