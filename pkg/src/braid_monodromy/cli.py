"""Command-line front end: ``braid-monodromy <command> ...``.

Every command prints one JSON document to stdout.  Exit status: 0 on pass,
1 when a verification fails, 2 on malformed input, 3 on numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .braids import HandleReductionError, parse_braid
from .config import RunConfig, load_config
from .hurwitz import (
    HurwitzTuple,
    OrbitCapExceeded,
    hurwitz_act,
    minimal_stabilizing_power,
    orbit_bfs,
    periodic_tuple,
    stabilizes,
)
from .polynomials import (
    ComplexPolynomial,
    InterpolationError,
    RootFindingError,
    parse_family,
    sylvester_resultant,
)
from .theorems import (
    CapExceeded,
    anbraids_generators,
    degeneracy_grid_bp,
    prop_hurwitz_generators,
    theorem1_generators,
    theorem2_generators,
    verify_delta_conjugation,
    verify_pipeline_bp,
    verify_pipeline_plane,
    verify_redundancy,
    verify_stabilization,
    verify_star_elimination,
)
from .tracking import (
    TrackingError,
    geometric_basis_bp,
    geometric_basis_plane,
    parse_loop,
    power_family,
    track_loop,
    write_trajectory_csv,
    write_trajectory_svg,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3

MOVE_NOTE = (
    "Hurwitz move for letter +i: (g_i, g_i+1) -> (g_i g_i+1 g_i^-1, g_i), composition of maps "
    "read right to left; letter -i is the inverse move."
)


class InputError(ValueError):
    pass


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _config(args: argparse.Namespace) -> RunConfig:
    overrides = {}
    for name in ("root_tol", "collision", "r", "theta", "min_steps", "orbit_cap", "output_dir", "seed"):
        val = getattr(args, name, None)
        if val is not None:
            overrides[name] = val
    return load_config(args.config, **overrides)


def _out_path(cfg: RunConfig, name: str) -> Path:
    p = Path(name)
    if not p.is_absolute():
        p = Path(cfg.output_dir) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _parse_tuple(text: str, degree: int | None) -> HurwitzTuple:
    text = text.strip()
    if text.startswith("{"):
        return HurwitzTuple.from_json(text)
    if degree is None:
        points = [int(tok) for tok in text.replace("(", " ").replace(")", " ").replace(";", " ").split()]
        if not points:
            raise InputError("empty tuple")
        degree = max(points)
    return HurwitzTuple.parse(text, degree)


def _parse_poly(text: str) -> ComplexPolynomial:
    text = text.strip()
    if text.startswith("{"):
        return ComplexPolynomial.from_json(text)
    try:
        return ComplexPolynomial([complex(tok.replace(" ", "")) for tok in text.split(",")])
    except ValueError as exc:
        raise InputError(f"cannot parse polynomial {text!r}: expected comma-separated coefficients, lowest first") from exc


# ---------------------------------------------------------------- commands

def cmd_gens(args: argparse.Namespace) -> int:
    if args.which == "thm1":
        gs = theorem1_generators(args.n, args.k, args.style)
    elif args.which == "thm2":
        gs = theorem2_generators(args.d, args.style, args.cap)
    elif args.which == "anbraids":
        gs = anbraids_generators(args.n, args.style)
    else:
        gs = prop_hurwitz_generators(args.n, args.k, args.style)
    doc = gs.to_json()
    if args.which in ("thm1", "prop"):
        rep = verify_stabilization(gs, periodic_tuple(args.n, args.k))
        doc["periodic_tuple"] = rep.tuple_text
        for item, rec in zip(doc["items"], rep.items):
            item["stabilizes"] = rec["stabilizes"]
    _emit(doc)
    return EXIT_PASS


def _family_and_loop(args: argparse.Namespace, cfg: RunConfig):
    fam_spec = args.family
    # bare tokens ("u-loop") or tokens with their own kind ("radial:i=1") select the loop
    flags = [tok.strip() for tok in fam_spec.partition(":")[2].split(",")
             if tok.strip() and ("=" not in tok or ":" in tok)]
    kind = fam_spec.partition(":")[0].strip()
    if kind == "power":
        m = int(dict(tok.split("=") for tok in fam_spec.partition(":")[2].split(",") if "=" in tok)["m"])
        fam = power_family(m)
    else:
        fam = parse_family(fam_spec)
    loop_spec = args.loop or (flags[0] if flags else None)
    if loop_spec is None:
        raise InputError("no loop given: use --loop or a flag in the family spec")
    return fam, parse_loop(loop_spec, fam, cfg)


def cmd_track(args: argparse.Namespace, cfg: RunConfig) -> int:
    fam, loop = _family_and_loop(args, cfg)
    record = bool(args.csv or args.svg)
    tb = track_loop(fam, loop, cfg, record=record)
    doc = tb.to_json()
    doc["family"] = fam.name
    doc["expsum"] = tb.braid.exponent_sum()
    doc["perm_consistent"] = tb.consistent
    if args.csv:
        p = _out_path(cfg, args.csv)
        write_trajectory_csv(tb, p)
        doc["csv"] = str(p)
    if args.svg:
        p = _out_path(cfg, args.svg)
        write_trajectory_svg(tb, p)
        doc["svg"] = str(p)
    _emit(doc)
    return EXIT_PASS if tb.consistent else EXIT_FAIL


def cmd_basis(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.which == "bp":
        loops = geometric_basis_bp(args.n, args.k, cfg)
        fam = parse_family(f"bp:n={args.n},k={args.k}")
    else:
        loops = geometric_basis_plane(args.d, cfg)
        fam = parse_family(f"plane:d={args.d}")
    doc = {"family": fam.name, "loops": [lp.to_json() for lp in loops]}
    if args.track:
        doc["tracked"] = [track_loop(fam, lp, cfg).to_json() for lp in loops]
    _emit(doc)
    return EXIT_PASS


def cmd_hurwitz(args: argparse.Namespace, cfg: RunConfig) -> int:
    t = _parse_tuple(args.tuple, args.degree)
    if args.action == "orbit":
        rep = orbit_bfs(t, cap=int(cfg.orbit_cap), with_edges=not args.no_edges)
        _emit({"tuple": t.to_text(), "degree": t.degree, **rep.to_json()})
        return EXIT_PASS
    if args.braid is None:
        raise InputError(f"hurwitz {args.action} needs --braid")
    b = parse_braid(args.braid, len(t))
    out = hurwitz_act(b, t)
    doc = {"tuple": t.to_text(), "braid": list(b.letters), "result": out.to_text(), "result_json": out.to_json()}
    if args.action == "stab":
        ok = stabilizes(b, t)
        doc["stabilizes"] = ok
        doc["minimal_power"] = minimal_stabilizing_power(b, t)
        _emit(doc)
        return EXIT_PASS if ok else EXIT_FAIL
    _emit(doc)
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.which == "bp":
        doc = verify_pipeline_bp(args.n, args.k, cfg, refine=not args.no_refine)
        ok = doc["pass"]
    elif args.which == "plane":
        doc = verify_pipeline_plane(args.d, cfg)
        ok = doc["pass"]
    elif args.which == "identities":
        delta = verify_delta_conjugation(args.n, args.k, cfg.identity_cap)
        red = verify_redundancy(args.n, args.n * args.k, cfg.identity_cap)
        doc = {"delta_conjugation": delta.to_json(), "redundancy": red.to_json()}
        ok = delta.passed and red.passed
    elif args.which == "stabilization":
        rep = verify_stabilization(theorem1_generators(args.n, args.k, args.style), periodic_tuple(args.n, args.k))
        doc = rep.to_json()
        ok = rep.passed
    elif args.which == "star":
        doc = verify_star_elimination(args.n, args.trials, seed=cfg.seed)
        ok = doc["pass"]
    else:
        doc = degeneracy_grid_bp(args.n, args.k)
        ok = doc["pass"]
    _emit(doc)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_resultant(args: argparse.Namespace) -> int:
    f, g = _parse_poly(args.f), _parse_poly(args.g)
    r = sylvester_resultant(f, g)
    _emit({"f": f.to_json()["coeffs"], "g": g.to_json()["coeffs"], "resultant": [r.real, r.imag]})
    return EXIT_PASS


# ---------------------------------------------------------------- parser

def _add_config_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("configuration (overrides --config file)")
    g.add_argument("--config", help="key=value file with RunConfig fields")
    g.add_argument("--root-tol", type=float)
    g.add_argument("--collision", type=float, help="minimum root separation before a loop counts as degenerate")
    g.add_argument("--r", type=float, help="radius of the small circles around punctures")
    g.add_argument("--theta", type=float, help="rotation of the x-plane before reading crossings")
    g.add_argument("--min-steps", type=int)
    g.add_argument("--orbit-cap", type=float)
    g.add_argument("--output-dir")
    g.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid-monodromy",
        description="Bifurcation braid monodromy: generator sets, root tracking, Hurwitz checks.",
        epilog="Exit status: 0 pass, 1 verification failed, 2 bad input, 3 numerical failure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gens = sub.add_parser("gens", help="list generator sets",
                          description="Generator sets with per-item permutation and exponent-sum fingerprints.")
    gsub = gens.add_subparsers(dest="which", required=True)
    p = gsub.add_parser("thm1", help="Theorem 1: sigma_ij^m_ij, m_ij in {1,3,2} by residues mod n",
                        description="Theorem 1 clauses i-iii for y^(n+1)+x^k in Br_nk.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = gsub.add_parser("thm2", help="Theorem 2: clauses i-iii mod d-1 plus the staircase word (item iv) and its rotations",
                        description="Theorem 2 items i-iv for plane curves of degree d in Br_d(d-1).")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, default=64, help="maximum number of distinct item-iv conjugates")
    p = gsub.add_parser("anbraids", help="A_n local model: sigma_i^3 and squared primed bands",
                        description="Local A_n generators sigma_i^3 and (sigma'_ij)^2 for |i-j| >= 2.")
    p.add_argument("--n", type=int, required=True)
    p = gsub.add_parser("prop", help="local three-clause generating set (bands mod n, block cubes, block squares)",
                        description="Generators computed from the local models of y^(n+1)+x^k.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    for q in gsub.choices.values():
        q.add_argument("--style", choices=("band", "prime", "mirror"), default="mirror",
                       help="band expansion (default: mirror, the chirality confirmed by covering data)")

    p = sub.add_parser("track", help="track roots of a family along a loop",
                       description="Bifurcation braid of a loop: crossings of root real parts after rotating the "
                                   "x-plane by theta. Families: bp:n=,k= | bp-disc:n=,k= | plane:d= | power:m=. "
                                   "Loops: radial:i= | u-loop | plane:j= | circle:center=,radius=,turns=.")
    p.add_argument("--family", required=True)
    p.add_argument("--loop")
    p.add_argument("--csv", help="write trajectory CSV (s,root_index,re,im)")
    p.add_argument("--svg", help="write an SVG plot of the trajectories")
    _add_config_flags(p)

    p = sub.add_parser("basis", help="geometric bases of loops",
                       description="Loops based at (u,v)=(1,0) for BP families, or at u=0 around u^d=1 for plane curves.")
    bsub = p.add_subparsers(dest="which", required=True)
    q = bsub.add_parser("bp", help="n radial loops in v at u=1 plus the loop around u=0")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--track", action="store_true")
    _add_config_flags(q)
    q = bsub.add_parser("plane", help="d radial loops around the roots of u^d=1")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--track", action="store_true")
    _add_config_flags(q)

    p = sub.add_parser("hurwitz", help="Hurwitz action on tuples of permutations",
                       description="Braid action on covering tuples (stabilising the periodic transposition "
                                   "sequence). " + MOVE_NOTE)
    p.add_argument("action", choices=("act", "stab", "orbit"))
    p.add_argument("--tuple", required=True, help='e.g. "(1 2);(2 3)" or JSON {"degree":..,"entries":..}')
    p.add_argument("--degree", type=int, help="symmetric group degree (default: largest point)")
    p.add_argument("--braid", help='e.g. "1 -2 1" or "b(1,3)^2"')
    p.add_argument("--no-edges", action="store_true", help="omit the orbit edge list")
    _add_config_flags(p)

    p = sub.add_parser("verify", help="verification pipelines",
                       description="bp: end-to-end BP pipeline; plane: degree-d plane curves against item iv; "
                                   "identities: delta-conjugation and redundancy identities; stabilization: "
                                   "Theorem 1 items against the periodic tuple; star: discriminant of "
                                   "y^(n+1)-(n+1)py+nq equals c(p^(n+1)-q^n); starstar: degeneracy locus "
                                   "u^(n+1)=v^n or u=0.")
    vsub = p.add_subparsers(dest="which", required=True)
    q = vsub.add_parser("bp", help="track the basis, compare with covering data and Theorem 1")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--no-refine", action="store_true", help="skip the halved-step rerun")
    _add_config_flags(q)
    q = vsub.add_parser("plane", help="track the plane basis, compare with Theorem 2 item iv")
    q.add_argument("--d", type=int, required=True)
    _add_config_flags(q)
    q = vsub.add_parser("identities", help="delta-conjugation formula and redundancy identity")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    _add_config_flags(q)
    q = vsub.add_parser("stabilization", help="Theorem 1 items against the periodic tuple")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--style", choices=("band", "prime", "mirror"), default="mirror")
    _add_config_flags(q)
    q = vsub.add_parser("star", help="elimination p^(n+1) = q^n on random p, q")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, help="accepted for symmetry; unused")
    q.add_argument("--trials", type=int, default=100)
    _add_config_flags(q)
    q = vsub.add_parser("starstar", help="degeneracy locus u^(n+1)=v^n or u=0 on a 41x41 grid")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    _add_config_flags(q)

    p = sub.add_parser("resultant", help="Sylvester resultant of two polynomials",
                       description="res_y(f, g); coefficients comma-separated, lowest degree first, "
                                   "or polynomial JSON.")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code in (0, None) else EXIT_INPUT
    try:
        if args.command == "gens":
            return cmd_gens(args)
        if args.command == "resultant":
            return cmd_resultant(args)
        cfg = _config(args)
        if args.command == "track":
            return cmd_track(args, cfg)
        if args.command == "basis":
            return cmd_basis(args, cfg)
        if args.command == "hurwitz":
            return cmd_hurwitz(args, cfg)
        return cmd_verify(args, cfg)
    except (TrackingError, RootFindingError, InterpolationError, HandleReductionError, np.linalg.LinAlgError) as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return EXIT_NUMERIC
    except (ValueError, KeyError, OrbitCapExceeded, CapExceeded, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
