"""Batch command-line interface.

Subcommands load algebra files (JSON structure-constant format), run checks,
solvers or constructions, and emit deterministic reports: identical inputs
and seed produce identical bytes.  Machine reports are JSON with a schema
version and sha256 hashes of every input file; the human format renders the
same verdicts as text.

Exit codes: 0 all verdicts hold / solve completed; 1 a check failed (witness
in the report); 2 usage or input error; 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import constructions, fieldbr, graded, models, solvers
from .core import Algebra, Element, LinearMap, NAryAlgebra
from .errors import CapacityError, TPAlgebraError
from .identities import CATALOG, check_identity, check_jordan_super
from .poly import DerivationSpec
from .scalars import Scalar

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


# ---------------------------------------------------------------------------
# input loading

def _sha256(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_operation(doc: dict, name: str | None):
    """One named operation out of an algebra file, as Algebra or NAryAlgebra."""
    if "arity" in doc and doc["arity"] != 2 and (
        name is None or name not in doc["products"] or name == "bracket"
    ):
        return NAryAlgebra.from_dict(doc, name)
    names = sorted(doc["products"])
    if name is None and len(names) == 1:
        name = names[0]
    if name is None or name not in doc["products"]:
        raise TPAlgebraError(
            f"algebra file offers products {names}; pick one"
        )
    if "arity" in doc and doc["arity"] != 2 and name == "bracket":
        return NAryAlgebra.from_dict(doc, name)
    return Algebra.from_dict(doc, name)


def _bindings_for(spec_id: str, args) -> dict:
    spec = CATALOG[spec_id]
    doc = _load_json(args.algebra)
    names = set(doc["products"])
    bindings = {}
    if "product" in spec.slots:
        bindings["product"] = Algebra.from_dict(
            doc, "product" if "product" in names else None
        )
    if "bracket" in spec.slots:
        if args.algebra2:
            bindings["bracket"] = _load_operation(_load_json(args.algebra2), None)
        elif "bracket" in names:
            bindings["bracket"] = Algebra.from_dict(
                {**doc, "unital": False, "unit": None}, "bracket"
            )
        else:
            bindings["bracket"] = Algebra.from_dict(doc, None)
    if "nary" in spec.slots:
        src = _load_json(args.algebra2) if args.algebra2 else doc
        bindings["nary"] = NAryAlgebra.from_dict(src, "bracket")
    if "aux" in spec.slots:
        if not args.map:
            raise TPAlgebraError(f"identity {spec_id!r} needs --map FILE")
        bindings["aux"] = LinearMap.from_json(_load_json(args.map))
    if "helem" in spec.slots:
        if not args.elem:
            raise TPAlgebraError(f"identity {spec_id!r} needs --elem FILE")
        bindings["helem"] = Element(
            [Scalar.parse(c) for c in _load_json(args.elem)]
        )
    return bindings


# ---------------------------------------------------------------------------
# reporting

def _emit(args, payload: dict, inputs: list[str]) -> None:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": {p: _sha256(p) for p in inputs},
        **payload,
    }
    if getattr(args, "seed", None) is not None:
        report["seed"] = args.seed
    if args.format == "machine":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(report.items())]
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verdict_exit(payload: dict) -> int:
    return EXIT_OK if payload.get("verdict", "holds") == "holds" else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# subcommands

def _cmd_check(args) -> int:
    if args.identity == "jordan-super":
        doc = _load_json(args.algebra)
        from .core import SuperAlgebra

        alg = Algebra.from_dict(doc, None)
        sup = SuperAlgebra(alg.dim, doc["parity"], alg.table, alg.basis)
        rep = check_jordan_super(sup)
    else:
        if args.identity not in CATALOG:
            raise TPAlgebraError(f"unknown identity {args.identity!r}")
        rep = check_identity(args.identity, _bindings_for(args.identity, args))
    payload = rep.to_dict()
    _emit(args, payload, [p for p in (args.algebra, args.algebra2, args.map, args.elem) if p])
    return _verdict_exit(payload)


def _solution_payload(space) -> dict:
    return {"verdict": "holds", **space.to_dict()}


def _cmd_derive(args) -> int:
    op = _load_operation(_load_json(args.algebra), None)
    delta = Scalar.parse(args.delta)
    if isinstance(op, NAryAlgebra):
        space = solvers.nary_delta_derivations(op, delta)
    else:
        space = solvers.delta_derivations(op, delta)
    _emit(args, _solution_payload(space), [args.algebra])
    return EXIT_OK


def _cmd_biderive(args) -> int:
    op = Algebra.from_dict(_load_json(args.algebra), None)
    space = solvers.delta_biderivations(op, Scalar.parse(args.delta))
    _emit(args, _solution_payload(space), [args.algebra])
    return EXIT_OK


def _cmd_homlie(args) -> int:
    op = Algebra.from_dict(_load_json(args.algebra), None)
    _emit(args, _solution_payload(solvers.hom_lie_maps(op)), [args.algebra])
    return EXIT_OK


def _cmd_tpspace(args) -> int:
    op = Algebra.from_dict(_load_json(args.algebra), None)
    _emit(args, _solution_payload(solvers.tp_product_space(op)), [args.algebra])
    return EXIT_OK


def _cmd_construct(args) -> int:
    inputs = [args.algebra] + ([args.map] if args.map else [])
    doc = _load_json(args.algebra)
    if args.kind == "bracket":
        alg = Algebra.from_dict(doc, "product" if "product" in doc["products"] else None)
        d = LinearMap.from_json(_load_json(args.map))
        pair = constructions.tp_pair_from_derivation(alg, d)
        out = pair.to_dict({"constructed_by": "bracket", "inputs": inputs})
    elif args.kind == "kantor":
        pair = constructions.TPPair.from_dict(doc)
        sup = constructions.kantor_double(pair)
        rep = check_jordan_super(sup)
        out = sup.to_dict()
        out["provenance"] = {"constructed_by": "kantor", "inputs": inputs}
        out["verification"] = rep.to_dict()
    elif args.kind == "three-lie":
        pair = constructions.TPPair.from_dict(doc)
        d = LinearMap.from_json(_load_json(args.map))
        tri = constructions.three_lie_from_tp(pair, d)
        tup = constructions.NTPTuple(pair.product, tri)
        out = tup.to_dict({"constructed_by": "three-lie", "inputs": inputs})
    elif args.kind == "nilpotent-nlie":
        nary = NAryAlgebra.from_dict(doc, None)
        gens, k = args.witness.split(";")
        witness = ([int(x) for x in gens.split(",")], int(k))
        tup = constructions.nilpotent_nlie_tp(nary, witness)
        out = tup.to_dict({"constructed_by": "nilpotent-nlie", "inputs": inputs})
    else:
        raise TPAlgebraError(f"unknown construction {args.kind!r}")
    payload = {"verdict": "holds", "algebra": out}
    _emit(args, payload, inputs)
    return EXIT_OK


def _parse_scalar_list(text: str) -> tuple:
    return tuple(Scalar.parse(x) for x in text.split(",")) if text else ()


def _cmd_oscillator(args) -> int:
    lam = _parse_scalar_list(args.lam)
    p = models.OscillatorParams(len(lam), lam, generic=args.generic)
    if args.gamma or args.mu or args.alpha or args.beta:
        h = models.HalfDerParams(
            Scalar.parse(args.gamma or "0"),
            Scalar.parse(args.mu or "0"),
            _parse_scalar_list(args.alpha) or (Scalar(0),) * p.n,
            _parse_scalar_list(args.beta) or (Scalar(0),) * p.n,
        )
        pair = models.oscillator_tp_pair(p, h)
        out = pair.to_dict({"constructed_by": "oscillator", "inputs": []})
    else:
        out = models.oscillator(p).to_dict("bracket")
    _emit(args, {"verdict": "holds", "algebra": out}, [])
    return EXIT_OK


def _parse_alpha(text: str) -> dict:
    out = {}
    if text:
        for part in text.split(","):
            t, v = part.split("=")
            out[int(t)] = Scalar.parse(v)
    return out


def _cmd_witt1(args) -> int:
    floor = None if args.full_witt else -1
    pair = graded.witt_tp_pair(_parse_alpha(args.alpha), floor)
    lo, hi = (int(x) for x in args.window.split(":"))
    report = graded.verify_window(pair, lo, hi)
    _emit(args, report, [])
    return _verdict_exit(report)


def _cmd_field_check(args) -> int:
    der = DerivationSpec.from_json(_load_json(args.derivation))
    if der.nvars != args.vars:
        raise TPAlgebraError(
            f"--vars {args.vars} disagrees with the derivation file ({der.nvars})"
        )
    ctx = fieldbr.FieldContext(der)
    report = fieldbr.verify_field_axioms(
        ctx,
        samples=args.samples,
        degree=args.deg,
        seed=args.seed,
        corrupt_sign=args.corrupt_sign,
    )
    _emit(args, report, [args.derivation])
    return _verdict_exit(report)


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tpa",
        description="Exact checks, solvers and constructions for transposed "
        "Poisson structures.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", "-o", help="write the report here (default stdout)")
        p.add_argument(
            "--format", choices=("machine", "human"), default="machine"
        )

    p = sub.add_parser("check", help="evaluate a catalog identity")
    p.add_argument("identity")
    p.add_argument("--algebra", required=True)
    p.add_argument("--algebra2")
    p.add_argument("--map")
    p.add_argument("--elem")
    common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("derive", help="solve for delta-derivations")
    p.add_argument("--algebra", required=True)
    p.add_argument("--delta", required=True)
    common(p)
    p.set_defaults(fn=_cmd_derive)

    p = sub.add_parser("biderive", help="solve for delta-biderivations")
    p.add_argument("--algebra", required=True)
    p.add_argument("--delta", required=True)
    common(p)
    p.set_defaults(fn=_cmd_biderive)

    p = sub.add_parser("homlie", help="solve for Hom-Lie maps")
    p.add_argument("--algebra", required=True)
    common(p)
    p.set_defaults(fn=_cmd_homlie)

    p = sub.add_parser("tpspace", help="solve for compatible commutative products")
    p.add_argument("--algebra", required=True)
    common(p)
    p.set_defaults(fn=_cmd_tpspace)

    p = sub.add_parser("construct", help="run a constructive theorem")
    p.add_argument(
        "kind", choices=("bracket", "kantor", "three-lie", "nilpotent-nlie")
    )
    p.add_argument("--algebra", required=True)
    p.add_argument("--map")
    p.add_argument("--witness", help='"i1,..,in;k" for nilpotent-nlie')
    common(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("oscillator", help="emit an oscillator algebra")
    p.add_argument("--lam", required=True, help='comma list, e.g. "1,3/2"')
    p.add_argument("--generic", action="store_true")
    p.add_argument("--gamma")
    p.add_argument("--mu")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    common(p)
    p.set_defaults(fn=_cmd_oscillator)

    p = sub.add_parser("witt1", help="verify a Witt/W(1) product on a window")
    p.add_argument("--alpha", default="", help='offset=value list, e.g. "1=1,3=5"')
    p.add_argument("--window", default="-1:12", help="lo:hi")
    p.add_argument("--full-witt", action="store_true", help="no index floor")
    common(p)
    p.set_defaults(fn=_cmd_witt1)

    p = sub.add_parser("field-check", help="verify the fraction-field bracket")
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--deg", type=int, default=3)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--derivation", required=True)
    p.add_argument("--corrupt-sign", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_field_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (TPAlgebraError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
