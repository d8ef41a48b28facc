"""Command-line front end: JSON in, JSON out.

Exit codes: 0 ok, 1 invalid input (schema or precondition), 2 numerical
rejection, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__, _kernels
from . import classifier, conic_model, delpezzo, germs, znquot
from . import gibbons_hawking as gh
from . import schemas
from .cartan import DeformationParameter, build_root_system
from .errors import InvalidInputError, NumericalRejection

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_INTERNAL = 0, 1, 2, 3


def to_plain(obj):
    """Recursively convert numpy scalars/arrays, complex numbers and fractions to JSON types."""
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_plain(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def dumps(report) -> str:
    return json.dumps(to_plain(report), sort_keys=True, indent=2) + "\n"


# -- input decoding -------------------------------------------------------------------


def _germ(doc):
    if doc["type"] == "Ak":
        return germs.CoefficientGerm.from_json(doc)
    return germs.LiftedGerm.from_json(doc)


def _lift(doc, args):
    g = _germ(doc)
    if isinstance(g, germs.CoefficientGerm):
        return g, germs.lift_Ak_germ(g)
    return None, g


def _gh_config(doc):
    return gh.GHConfig(np.asarray(doc["points"], float), doc.get("string_direction"))


# -- subcommands ------------------------------------------------------------------------


def cmd_check_nondegenerate(doc, args):
    schemas.validate(doc, schemas.GERM)
    tol = args.tol or germs.DEFAULT_TOL
    g, lg = _lift(doc, args)
    out = {"cover_order": lg.cover_order, "def12": germs.check_nondegenerate_def12(lg, tol=tol)}
    if g is not None:
        out["def11"] = germs.check_nondegenerate_def11(g, tol=tol, lift=lg)
        out.update(residual=lg.residual, permutation=lg.permutation, degenerate=lg.degenerate)
    return out, {"tol": tol}


def cmd_tangent_graviton(doc, args):
    schemas.validate(doc, schemas.GERM)
    tol = args.tol or germs.DEFAULT_TOL
    _, lg = _lift(doc, args)
    tg = germs.tangent_graviton(lg, tol)
    out = tg.to_json()
    out["cover_order"] = lg.cover_order
    if lg.residual is not None:
        out["residual"] = lg.residual
    return out, {"tol": tol}


def cmd_classify_roots(doc, args):
    schemas.validate(doc, schemas.CLASSIFY_INPUT)
    tol = args.tol or classifier.DEFAULT_TOL
    if "zeta_r" in doc:
        rs = build_root_system(doc["root_system"]["kind"], doc["root_system"]["rank"])
        zeta = DeformationParameter(
            np.asarray(doc["zeta_r"], float), np.array([schemas.complex_value(x) for x in doc["zeta_c"]])
        )
        source = "parameter"
    else:
        _, lg = _lift(doc, args)
        rs, zeta = lg.rs, germs.tangent_graviton(lg).zeta_dot
        source = "tangent_graviton"
    cls = classifier.classify_roots(rs, zeta, tol)
    out = cls.to_json()
    out["source"] = source
    return out, {"tol": tol}


def _samples(cfg, args):
    return gh.sample_points(cfg, args.samples or 200, np.random.default_rng(args.seed))


def cmd_gh_verify(doc, args):
    schemas.validate(doc, schemas.GH_CONFIG)
    cfg = _gh_config(doc)
    h = args.step or 1e-4
    X = _samples(cfg, args)
    G = gh.metric_batch(cfg, X)
    Js = [gh.complex_structure_batch(cfg, X, e) for e in np.eye(3)]
    Ws = [gh.kahler_form_batch(cfg, X, e) for e in np.eye(3)]
    I = np.eye(4)
    T = lambda A: np.transpose(A, (0, 2, 1))
    identities = {
        "J_squared": max(float(np.abs(J @ J + I).max()) for J in Js),
        "quaternion": float(max(np.abs(Js[0] @ Js[1] - Js[2]).max(), np.abs(Js[1] @ Js[2] - Js[0]).max(), np.abs(Js[2] @ Js[0] - Js[1]).max())),
        "omega_is_g_J": max(float(np.abs(T(J) @ G - W).max()) for J, W in zip(Js, Ws)),
        "self_dual": max(float(np.abs(gh.hodge_star_2form(G, W) - W).max()) for W in Ws),
    }
    forms = ["omega1", "omega2", "omega3"] + [f"chi{i}" for i in range(cfg.k + 1)]
    per_form = {f: gh.closedness_residuals(cfg, f, X, h) for f in forms}
    if args.csv:
        _write_csv(args.csv, ["sample", "x1", "x2", "x3", "tau"] + forms,
                   [[i, *X[i]] + [per_form[f][i] for f in forms] for i in range(len(X))])
    out = {"identities": identities, "closedness": {f: float(v.max()) for f, v in per_form.items()}, "samples": len(X)}
    return out, {"step": h, "samples": len(X), "seed": args.seed}


def cmd_gh_periods(doc, args):
    schemas.validate(doc, schemas.GH_CONFIG)
    cfg = _gh_config(doc)
    rows = []
    for s in gh.valid_segment_spheres(cfg):
        for i in range(cfg.k + 1):
            exact = cfg.fiber_period * ((i == s.a) - (i == s.b))
            rows.append({"form": f"chi{i}", "sphere": [s.a, s.b], "value": gh.pairing(cfg, gh.Chi(i), s), "exact": exact})
    return rows, {"quadrature_nodes": 48, "quadrature_rtol": 1e-12}


def cmd_gh_curvature(doc, args):
    schemas.validate(doc, schemas.GH_CONFIG)
    cfg = _gh_config(doc)
    h = args.step or 1e-3
    X = gh.sample_points(cfg, args.samples or 20, np.random.default_rng(args.seed), min_center_distance=0.3)
    s = gh.scalar_curvature_fd(cfg, X, h)
    if args.csv:
        _write_csv(args.csv, ["sample", "x1", "x2", "x3", "tau", "scalar_curvature"], [[i, *X[i], s[i]] for i in range(len(X))])
    return {"max_abs_scalar_curvature": float(np.abs(s).max()), "samples": len(X)}, {"step": h, "seed": args.seed}


def cmd_zn_classify(doc, args):
    schemas.validate(doc, schemas.POLYGON_CONFIG)
    tol = args.tol or 1e-9
    pc = znquot.build_polygon_config(doc["d"], doc["n"], doc.get("m", 1), doc["polygons"])
    N = pc.d * pc.n
    segs = doc.get("segments") or [[a, b] for a in range(N) for b in range(a + 1, N)]
    out = [znquot.classify_quotient_sphere(pc, a, b, tol).to_json() for a, b in segs]
    return {"invariant_cohomology_dim": znquot.invariant_cohomology_dim(pc), "verdicts": out}, {"tol": tol}


def cmd_invariant_dims(doc, args):
    schemas.validate(doc, schemas.DIMS)
    d, n = doc["d"], doc["n"]
    out = {"parameter_dims": germs.invariant_parameter_dims(d, n)}
    if n >= 2:
        out["invariant_cohomology_dim"] = znquot.invariant_cohomology_dim(d, n)
    return out, {}


def cmd_conic(doc, args):
    schemas.validate(doc, schemas.CONIC)
    e1, e2 = schemas.complex_value(doc["eps1"]), schemas.complex_value(doc["eps2"])
    fib = conic_model.degenerate_fibers(e1, e2)
    splits = [conic_model.split_degenerate_fiber(e1, e2, x).to_json() for x in fib.values]
    out = {"degenerate_fibers": fib.to_json(), "splits": splits}
    if "delta" in doc:
        d1, d2 = (schemas.complex_value(x) for x in doc["delta"])
        out["line"] = conic_model.nondegenerate_line(d1, d2).to_json()
    return out, {}


def cmd_inventory(doc, args):
    schemas.validate(doc, schemas.INVENTORY)
    act = delpezzo.CyclicAction(doc["r"], *doc["weights"])
    return [p.to_json() for p in delpezzo.singularity_inventory(act)], {}


COMMANDS = {
    "check-nondegenerate": cmd_check_nondegenerate,
    "tangent-graviton": cmd_tangent_graviton,
    "classify-roots": cmd_classify_roots,
    "gh-verify": cmd_gh_verify,
    "gh-periods": cmd_gh_periods,
    "gh-curvature": cmd_gh_curvature,
    "zn-classify": cmd_zn_classify,
    "invariant-dims": cmd_invariant_dims,
    "conic": cmd_conic,
    "inventory": cmd_inventory,
}


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for r in rows:
            w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in r])


def _inline_doc(args):
    """Documents assembled from convenience flags when no --input is given."""
    if args.command == "conic" and args.eps1 is not None:
        doc = {"eps1": args.eps1, "eps2": args.eps2}
        if args.delta is not None:
            doc["delta"] = args.delta
        return doc
    if args.command == "invariant-dims" and args.d is not None:
        return {"d": args.d, "n": args.n}
    if args.command == "inventory" and args.r is not None:
        return {"r": args.r, "weights": args.weights}
    return None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graviton", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--input", help="JSON input file ('-' for stdin)")
        s.add_argument("--out", help="write the JSON report here instead of stdout")
        s.add_argument("--tol", type=float, help="override the vanishing tolerance")
        s.add_argument("--samples", type=int, help="number of random sample points")
        s.add_argument("--step", type=float, help="finite-difference step")
        s.add_argument("--seed", type=int, default=0, help="seed for random sampling")
        s.add_argument("--quiet", action="store_true", help="suppress stdout")
        if name in ("gh-verify", "gh-curvature"):
            s.add_argument("--csv", help="write per-sample residuals as CSV")
        if name == "conic":
            s.add_argument("--eps1", type=float)
            s.add_argument("--eps2", type=float)
            s.add_argument("--delta", type=float, nargs=2)
        if name == "invariant-dims":
            s.add_argument("--d", type=int)
            s.add_argument("--n", type=int)
        if name == "inventory":
            s.add_argument("--r", type=int)
            s.add_argument("--weights", type=int, nargs=2)
    return p


def _load(args):
    doc = _inline_doc(args)
    if doc is not None:
        return doc
    if not args.input:
        raise InvalidInputError("--input is required")
    try:
        if args.input == "-":
            return json.load(sys.stdin)
        with open(args.input) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"cannot read input: {e}") from None


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _load(args)
        result, effective = COMMANDS[args.command](doc, args)
        code = EXIT_OK
        report = {"command": args.command, "version": __version__, "backend": _kernels.BACKEND,
                  "effective": effective, "result": result}
    except InvalidInputError as e:
        code = EXIT_INPUT
        report = {"command": args.command, "error": "invalid-input", "message": str(e),
                  "field": getattr(e, "field", None)}
    except NumericalRejection as e:
        code = EXIT_NUMERIC
        report = {"command": args.command, "error": type(e).__name__, "message": str(e)}
        if getattr(e, "suggested_radius", None) is not None:
            report["suggested_radius"] = e.suggested_radius
    except Exception as e:  # noqa: BLE001 - last-resort mapping to the internal exit code
        code = EXIT_INTERNAL
        report = {"command": args.command, "error": "internal", "message": f"{type(e).__name__}: {e}"}
    text = dumps(report)
    if code != EXIT_OK:
        sys.stderr.write(text)
        return code
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    elif not args.quiet:
        sys.stdout.write(text)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
