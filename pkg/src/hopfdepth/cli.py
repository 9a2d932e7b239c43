"""``hopfdepth`` command line.

Exit codes: 0 success, 1 validation failure (bad input, failed axiom
check), 2 computation unsupported (a non-semisimple algebra reached the
depth engine).
"""
from __future__ import annotations

import argparse
import contextvars
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass

from . import __version__
from .algebra import AlgebraError, NotSemisimple, check_algebra_axioms
from .catalog import CATALOG, CatalogError, ambient, problem
from .depth import (DepthProblem, ResourceLimit, centralizer, dcp_centralizer, is_normal,
                    min_depth, verify_theorems)
from .groups import GroupError, builtin_group, center, conjugacy_classes, is_abelian
from .hopf import (HopfEmbedding, HopfError, check_hopf_axioms, cop_hopf, dual_hopf, op_hopf,
                   opcop_hopf, tensor_hopf)
from .linalg import fast_prime
from . import serialize as ser
from .products import (OctagonViolation, canonical_pairing, drinfeld_double, heisenberg_double,
                       paired_dcp, trivial_pairing)


class ValidationFailure(Exception):
    """A check ran and found a violated axiom; the report is still emitted."""

    def __init__(self, payload: dict):
        super().__init__("validation failed")
        self.payload = payload


@dataclass
class Inputs:
    record: dict              # what goes into the report's "input" field
    problem: DepthProblem | None = None


# ---------------------------------------------------------------- input handling

def _read_json(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ser.FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ser.FormatError(f"{path}: invalid JSON ({exc})") from None
    # accept a previous report as input: its "result" is the object
    if isinstance(data, dict) and data.get("tool") == "hopfdepth" and "result" in data:
        data = data["result"]
    return data, ser.sha256(raw)


def _problem_from_files(amb_path: str, sub_path: str) -> Inputs:
    amb_json, h1 = _read_json(amb_path)
    sub_json, h2 = _read_json(sub_path)
    rec = {"ambient_file": amb_path, "ambient_sha256": h1, "sub_file": sub_path, "sub_sha256": h2}
    if ser.is_hopf_json(amb_json):
        H = ser.hopf_from_json(amb_json)
        emb, sub_hopf = ser.embedding_from_json(sub_json, H.alg)
        pair = HopfEmbedding(sub_hopf, H, emb) if sub_hopf is not None else None
        label = f"{emb.sub.name or 'B'} < {H.name or 'A'}"
        return Inputs(rec, DepthProblem(label, emb, pair=pair))
    A = ser.algebra_from_json(amb_json)
    emb, _ = ser.embedding_from_json(sub_json, A)
    return Inputs(rec, DepthProblem(f"{emb.sub.name or 'B'} < {A.name or 'A'}", emb))


def _problem_inputs(args) -> Inputs:
    if args.ambient_file or args.sub_file:
        if not (args.ambient_file and args.sub_file):
            raise ser.FormatError("--ambient-file and --sub-file go together")
        return _problem_from_files(args.ambient_file, args.sub_file)
    if not args.ambient:
        raise ser.FormatError("give --ambient (a builtin such as double:S3) or --ambient-file")
    sub = args.sub or _default_sub(args.ambient)
    rec = {"ambient": args.ambient, "sub": sub,
           "sha256": ser.sha256(f"{args.ambient}\n{sub}")}
    return Inputs(rec, problem(args.ambient, sub))


def _default_sub(amb: str) -> str:
    kind = amb.partition(":")[0]
    return {"double": "group-side", "heisenberg": "group-side", "tensor": "second",
            "paired": "second"}.get(kind, "identity")


def _hopf_input(args):
    """A Hopf algebra from --in or --ambient; returns (HopfStructure, record)."""
    if args.infile:
        d, h = _read_json(args.infile)
        return ser.hopf_from_json(d), {"file": args.infile, "sha256": h}
    if args.ambient:
        amb = ambient(args.ambient)
        if amb.hopf is None:
            raise CatalogError(f"{args.ambient} is not a Hopf algebra")
        return amb.hopf, {"ambient": args.ambient, "sha256": ser.sha256(args.ambient)}
    raise ser.FormatError("give --in FILE or --ambient NAME")


# ---------------------------------------------------------------- subcommands

def cmd_group(args):
    if args.infile:
        d, h = _read_json(args.infile)
        G = ser.group_from_json(d)
        rec = {"file": args.infile, "sha256": h}
    else:
        G = builtin_group(args.name or "S3")
        rec = {"name": G.name, "sha256": ser.sha256(G.name)}
    cc = conjugacy_classes(G)
    out = ser.group_to_json(G)
    out.update({"abelian": is_abelian(G),
                "center": [G.names[g] for g in center(G)],
                "conjugacy_classes": [[G.names[g] for g in c] for c in cc.classes]})
    return rec, out


def cmd_hopf(args):
    H, rec = _hopf_input(args)
    H = {"none": lambda h: h, "dual": dual_hopf, "op": op_hopf, "cop": cop_hopf,
         "opcop": opcop_hopf}[args.variant](H)
    return rec, ser.hopf_to_json(H)


def cmd_build(args):
    if args.construction == "heisenberg" or args.construction == "smash":
        H, rec = _hopf_input(args)
        S = heisenberg_double(H)
        return rec, ser.algebra_to_json(S.algebra)
    if args.construction == "tensor":
        H, rec = _hopf_input(args)
        K = H
        if args.second:
            d, h = _read_json(args.second)
            K = ser.hopf_from_json(d)
            rec = dict(rec, second_file=args.second, second_sha256=h)
        return rec, ser.hopf_to_json(tensor_hopf(H, K))
    H, rec = _hopf_input(args)
    if args.construction == "double":
        D = drinfeld_double(H)
    else:
        P = canonical_pairing(H) if args.pairing == "canonical" else trivial_pairing(H, H)
        D = paired_dcp(P)
    return rec, ser.hopf_to_json(D.hopf)


def cmd_check(args):
    d, h = _read_json(args.infile)
    rec = {"file": args.infile, "sha256": h}
    if args.what == "group":
        try:
            G = ser.group_from_json(d)
            out = {"subject": G.name, "ok": True, "axioms": [{"name": "group table", "ok": True,
                                                               "witness": None}]}
        except GroupError as exc:
            out = {"subject": str(d.get("name", "G")) if isinstance(d, dict) else "G", "ok": False,
                   "axioms": [{"name": "group table", "ok": False, "witness": str(exc)}]}
    elif args.what == "algebra":
        out = check_algebra_axioms(ser.algebra_from_json(d)).to_json()
    else:
        out = check_hopf_axioms(ser.hopf_from_json(d)).to_json()
    if not out["ok"]:
        raise ValidationFailure({"input": rec, "result": out})
    return rec, out


def cmd_depth(args):
    inp = _problem_inputs(args)
    P = inp.problem
    rep = min_depth(P.emb, n_max=args.n_max, method=args.method, label=P.label, seed=args.seed)
    if not args.no_theorems:
        rep.theorems = verify_theorems(P, rep, args.n_max)
    return inp.record, rep.to_json()


def cmd_normality(args):
    inp = _problem_inputs(args)
    P = inp.problem
    if P.pair is None:
        raise CatalogError("normality needs a Hopf subalgebra of a Hopf algebra")
    out = is_normal(P.pair).to_json()
    out["extension"] = P.label
    return inp.record, out


def cmd_centralizer(args):
    inp = _problem_inputs(args)
    P = inp.problem
    if P.dcp is not None and P.side == "first":
        out = dcp_centralizer(P.dcp).to_json()
    else:
        out = {"dim": centralizer(P.emb).dim}
    out["extension"] = P.label
    out["ambient_dim"] = P.emb.amb.dim
    return inp.record, out


def _verify_one(amb: str, sub: str, n_max: int, seed: int) -> dict:
    P = problem(amb, sub)
    rep = min_depth(P.emb, n_max=n_max, label=P.label, seed=seed)
    rep.theorems = verify_theorems(P, rep, n_max)
    return rep.to_json()


def cmd_verify(args):
    if args.catalog:
        jobs = list(CATALOG)
    else:
        inp = _problem_inputs(args)
        if "ambient" not in inp.record:
            P = inp.problem
            rep = min_depth(P.emb, n_max=args.n_max, label=P.label, seed=args.seed)
            rep.theorems = verify_theorems(P, rep, args.n_max)
            return inp.record, {"reports": [rep.to_json()], "failures": _fails([rep.to_json()])}
        jobs = [(inp.record["ambient"], inp.record["sub"])]
    threads = max(1, args.threads)
    if threads == 1:
        reports = [_verify_one(a, s, args.n_max, args.seed) for a, s in jobs]
    else:
        with ThreadPoolExecutor(threads) as pool:
            futs = [pool.submit(contextvars.copy_context().run, _verify_one, a, s, args.n_max, args.seed)
                    for a, s in jobs]
            reports = [f.result() for f in futs]
    rec = {"catalog": bool(args.catalog), "jobs": [f"{s} < {a}" for a, s in jobs],
           "sha256": ser.sha256("\n".join(f"{a}|{s}" for a, s in jobs))}
    return rec, {"reports": reports, "failures": _fails(reports)}


def _fails(reports) -> list:
    return [{"extension": r["extension"], "theorem": t["name"], "lhs": t["lhs"], "rhs": t["rhs"]}
            for r in reports for t in r["theorems"] if t["status"] == "FAIL"]


# ---------------------------------------------------------------- rendering

def render_text(payload: dict) -> str:
    lines = [f"hopfdepth {payload['version']}  {payload['command']}"]
    for k, v in sorted(payload["input"].items()):
        lines.append(f"  input.{k}: {v}")
    _render(payload["result"], lines, "")
    return "\n".join(lines) + "\n"


def _render(obj, lines: list, indent: str):
    if isinstance(obj, dict):
        if "n" in obj and "odd" in obj:       # depth table row
            lines.append(f"{indent}n={obj['n']}: odd={obj['odd']} even_BA={obj['even_BA']} "
                         f"even_AB={obj['even_AB']}")
            return
        if "status" in obj and "name" in obj:  # theorem check
            lines.append(f"{indent}[{obj['status']}] {obj['name']}: {obj['lhs']} vs {obj['rhs']}"
                         + (f"  ({obj['detail']})" if obj.get("detail") else ""))
            return
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                _render(v, lines, indent + "  ")
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                _render(v, lines, indent + "  ")
                if isinstance(v, dict) and not ("n" in v or "status" in v):
                    lines.append(f"{indent}  --")
            else:
                lines.append(f"{indent}- {v}")
    else:
        lines.append(f"{indent}{obj}")


# ---------------------------------------------------------------- parser

def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized step")
    p.add_argument("--fast-prime", action=argparse.BooleanOptionalAction, default=False,
                   help="certified modular elimination for large kernels")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $HOPFDEPTH_THREADS or 1)")


def _extension_args(p: argparse.ArgumentParser):
    p.add_argument("--ambient", help="builtin ambient, e.g. double:S3, group:S4")
    p.add_argument("--sub", help="builtin sub, e.g. group-side, dual-side, subgroup:(12)")
    p.add_argument("--ambient-file", help="algebra or Hopf JSON")
    p.add_argument("--sub-file", help="embedding JSON")
    p.add_argument("--n-max", type=int, default=4)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopfdepth", description="Depth of finite-dimensional "
                                 "algebra and Hopf algebra extensions, computed exactly over Q.")
    ap.add_argument("--version", action="version", version=f"hopfdepth {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="group table, center and conjugacy classes")
    p.add_argument("--name", help="builtin group such as S3, D4, Q8, C2xC2")
    p.add_argument("--in", dest="infile")
    _common(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("hopf", help="emit Hopf JSON for a builtin or file, optionally a variant")
    p.add_argument("--ambient")
    p.add_argument("--in", dest="infile")
    p.add_argument("--variant", choices=("none", "dual", "op", "cop", "opcop"), default="none")
    _common(p)
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("build", help="construct a product and emit its JSON")
    p.add_argument("construction", choices=("double", "dcp", "tensor", "smash", "heisenberg"))
    p.add_argument("--ambient", help="builtin Hopf algebra input, e.g. group:S3")
    p.add_argument("--in", dest="infile", help="Hopf JSON input")
    p.add_argument("--second", help="second Hopf JSON factor for tensor")
    p.add_argument("--pairing", choices=("canonical", "trivial"), default="canonical",
                   help="pairing of H with H* (canonical) or of H with itself (trivial), for dcp")
    _common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="run an axiom checker on a JSON object")
    p.add_argument("what", choices=("group", "algebra", "hopf"))
    p.add_argument("--in", dest="infile", required=True)
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("depth", help="minimum odd, even and combined depth")
    _extension_args(p)
    p.add_argument("--method", choices=("auto", "trace", "explicit"), default="auto")
    p.add_argument("--no-theorems", action="store_true", help="skip the theorem report")
    _common(p)
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("normality", help="stability under both adjoint actions")
    _extension_args(p)
    _common(p)
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("centralizer", help="centralizer of the subalgebra")
    _extension_args(p)
    _common(p)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("verify", help="depth plus every applicable theorem check")
    _extension_args(p)
    p.add_argument("--catalog", action="store_true", help="run the whole builtin catalog")
    _common(p)
    p.set_defaults(func=cmd_verify)
    return ap


def _threads(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("HOPFDEPTH_THREADS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _emit(args, payload: dict):
    text = ser.dumps(payload) if args.format == "json" else render_text(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:       # argparse already printed the message
        return 0 if exc.code == 0 else 1
    args.threads = _threads(args.threads)
    base = {"tool": "hopfdepth", "version": __version__, "command": args.command}
    ctx = fast_prime(args.seed) if args.fast_prime else nullcontext()
    try:
        with ctx:
            rec, result = args.func(args)
    except ValidationFailure as vf:
        _emit(args, dict(base, **vf.payload))
        return 1
    except NotSemisimple as exc:
        print(f"hopfdepth: unsupported: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"hopfdepth: unsupported: {exc}", file=sys.stderr)
        return 2
    except (ser.FormatError, CatalogError, GroupError, HopfError, OctagonViolation,
            AlgebraError, ValueError) as exc:
        print(f"hopfdepth: error: {exc}", file=sys.stderr)
        return 1
    _emit(args, dict(base, input=rec, result=result))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
