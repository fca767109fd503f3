"""Command-line front end emitting plot-ready CSV/PLY data files.

Every output file starts with a provenance comment block (artifact
version, echo of the resolved configuration, its sha256, and the seed),
and contains no timestamps, so identical configurations produce
byte-identical files.

Exit codes: 0 success; 2 usage error; 3 physics-contract violation
(pairing ambiguity, invalid material data, inapplicable direction,
fit bracket failure); 4 I/O failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

import numpy as np

from . import __version__
from .bands import UnknownBandLabelError
from .brillouin import boundary_radius, named_direction, wedge_directions, \
    icosphere_directions
from .errors import GTensorError
from .lande import fit_report
from .materials import load_material, resolve_material_path
from .surface import build_surface, export_cloud
from .tables import band_path_rows, entropy_rows, gline_rows

USAGE_EXIT = 2
PHYSICS_EXIT = 3
IO_EXIT = 4


class UsageError(ValueError):
    """Bad command-line input that argparse cannot catch itself."""


def _parse_direction(spec: str, seed: int) -> np.ndarray:
    """Resolve --direction: 'x,y,z', 'random', or a family name."""
    if spec == "random":
        rng = np.random.default_rng(seed)
        v = rng.normal(size=3)
        return v / np.linalg.norm(v)
    try:
        return named_direction(spec)
    except KeyError:
        pass
    parts = spec.split(",")
    if len(parts) != 3:
        raise UsageError(
            f"--direction wants 'x,y,z', 'random', or a family name, got {spec!r}")
    try:
        v = np.array([float(p) for p in parts])
    except ValueError:
        raise UsageError(f"non-numeric direction component in {spec!r}") from None
    n = np.linalg.norm(v)
    if n == 0.0:
        raise UsageError("--direction must not be the zero vector")
    return v / n


def _provenance(args: argparse.Namespace) -> list:
    """Provenance lines: version, config echo, config hash, seed."""
    config = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    blob = json.dumps(config, sort_keys=True, default=str)
    digest = hashlib.sha256(blob.encode()).hexdigest()
    return [
        f"gtensor-tb {__version__}",
        f"config {blob}",
        f"config-hash {digest}",
        f"seed {getattr(args, 'seed', None)}",
    ]


def _format_cell(value) -> str:
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _write_csv(path, provenance, header, rows, extra_comments=()):
    with open(path, "w", newline="") as fh:
        for line in provenance:
            fh.write(f"# {line}\n")
        for line in extra_comments:
            fh.write(f"# {line}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_format_cell(v) for v in row) + "\n")


def _load(args):
    path = resolve_material_path(args.material)
    if not path.exists():
        raise UsageError(
            f"unknown material {args.material!r}: not a built-in name "
            "and no such parameter file")
    return load_material(path)


def cmd_bands(args) -> int:
    model = _load(args)
    names = [p for p in args.path.split(",") if p.strip()]
    if not names:
        raise UsageError("--path must name at least one comma-separated "
                         "high-symmetry point pair, e.g. 'L,G,X'")
    header, rows, ticks = band_path_rows(model, names, args.samples)
    ticking = ["path ticks: " + "  ".join(f"{name}@{s:.17g}" for s, name in ticks),
               "energies in Hartree"]
    _write_csv(args.out, _provenance(args), header, rows, ticking)
    return 0


def cmd_gline(args) -> int:
    model = _load(args)
    direction = _parse_direction(args.direction, args.seed)
    r_max = args.rmax
    if r_max is None:
        r_max = boundary_radius(model.lattice_constant, direction)
    header, rows = gline_rows(model, args.band, direction, r_max, args.samples)
    note = ["direction %s" % np.array2string(direction, precision=8)]
    _write_csv(args.out, _provenance(args), header, rows, note)
    return 0


def cmd_entropy(args) -> int:
    model = _load(args)
    direction = _parse_direction(args.direction, args.seed)
    r_max = args.rmax
    if r_max is None:
        r_max = boundary_radius(model.lattice_constant, direction)
    header, rows, flip_ok = entropy_rows(model, args.band, direction,
                                         r_max, args.samples)
    notes = ["direction %s" % np.array2string(direction, precision=8)]
    if not flip_ok:
        notes.append("spin-flip check refused: direction outside the valid "
                     f"families of point group {model.point_group}; "
                     "residual column is NaN")
        print("note: spin-flip relation not applicable on this direction; "
              "emitting entropies only", file=sys.stderr)
    _write_csv(args.out, _provenance(args), header, rows, notes)
    return 0


def cmd_surface(args) -> int:
    model = _load(args)
    wedge = args.wedge
    if wedge == "auto":
        wedge = "on" if model.point_group == "Oh" else "off"
    if wedge == "on":
        directions = wedge_directions(args.level)
    else:
        directions = icosphere_directions(args.level)
    cloud = build_surface(
        model, args.band, directions,
        which_det=args.det,
        r_max=args.rmax,
        n_coarse=args.ncoarse,
        workers=args.workers,
        replicate=(wedge == "on"),
    )
    notes = _provenance(args) + [
        f"rays {len(directions)} wedge {wedge}",
        f"crossings {len(cloud.points)} failures {len(cloud.failures)}",
    ]
    export_cloud(cloud, args.out, fmt=args.format, provenance=notes)
    return 0


def cmd_atomfit(args) -> int:
    model = _load(args)
    report = fit_report(model)
    lines = _provenance(args)
    body = []
    for species, result in report.items():
        body.append(f"{species}: <s|d|p> = {result['dipole_bohr']:.6f} Bohr, "
                    f"g_S = {result['g_s_zz']:+.9f}, "
                    f"g_L = {result['g_l_zz']:+.9f}, "
                    f"g_tot = {result['g_tot_zz']:+.9f}")
    text = "".join(f"# {line}\n" for line in lines) + "\n".join(body) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtensor-tb",
        description="Tight-binding g-tensors, entanglement checks, and "
                    "det(g)=0 surface extraction for cubic semiconductors.")
    parser.add_argument("--version", action="version",
                        version=f"gtensor-tb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, band=True):
        p.add_argument("--material", required=True,
                       help="built-in name (si, ge, gaas) or parameter file path")
        if band:
            p.add_argument("--band", required=True,
                           help="configured pair label, e.g. split-off")
        p.add_argument("--out", required=True, help="output file path")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for --direction random")

    p = sub.add_parser("bands", help="energies along a high-symmetry path")
    common(p, band=False)
    p.add_argument("--path", default="L,G,X",
                   help="comma-separated point names (G X L K W U)")
    p.add_argument("--samples", type=int, default=60,
                   help="k-points per path segment")
    p.set_defaults(func=cmd_bands)

    p = sub.add_parser("gline", help="singular values / determinants along a ray")
    common(p)
    p.add_argument("--direction", required=True,
                   help="'x,y,z', 'random', or Delta/Sigma/Lambda")
    p.add_argument("--rmax", type=float, default=None,
                   help="ray length in Bohr^-1 (default: zone boundary)")
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_gline)

    p = sub.add_parser("entropy", help="pair entropies and spin-flip residual")
    common(p)
    p.add_argument("--direction", required=True)
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("surface", help="det(g)=0 point cloud over the zone")
    common(p)
    p.add_argument("--det", choices=("gs", "gtot"), default="gs")
    p.add_argument("--level", type=int, default=4,
                   help="icosphere subdivision level for ray directions")
    p.add_argument("--wedge", choices=("auto", "on", "off"), default="auto",
                   help="scan only the irreducible wedge and replicate "
                        "by the point group (auto: on for O_h)")
    p.add_argument("--rmax", type=float, default=None)
    p.add_argument("--ncoarse", type=int, default=200,
                   help="coarse samples per ray before bisection")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "ply"), default="csv")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("atomfit", help="fit intra-atomic dipoles to the Lande value")
    p.add_argument("--material", required=True,
                   help="built-in name (si, ge, gaas) or parameter file path")
    p.add_argument("--out", default=None,
                   help="report file path (default: stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_atomfit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return USAGE_EXIT
    except (UnknownBandLabelError, KeyError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return USAGE_EXIT
    except GTensorError as err:
        print(f"physics-contract error: {err}", file=sys.stderr)
        return PHYSICS_EXIT
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return IO_EXIT


if __name__ == "__main__":
    sys.exit(main())
