"""Radial scanning for det(g)=0 surfaces: bracketing, bisection, export.

A ray from Gamma is sampled at ``n_coarse`` radii; every sign change of
the chosen determinant is refined by bisection on the sign down to
``bisect_tol`` in radius.  The sign comes from det(U) det(V) of the
SVD, which stays +-1 even when the smallest singular value underflows
at the surface.  Rays are independent work items, so surface assembly
parallelizes over a worker pool with a deterministic merge by direction
index.

Narrow features need commensurate coarse sampling: the Sigma-direction
torus walls of the Si first-conduction pair are ~3e-5 Bohr^-1 apart and
the Ge <111> rod walls sit ~3e-4 Bohr^-1 off the axis, so resolving
them takes coarse spacing below those scales (the default n_coarse=200
resolves everything else).
"""
from __future__ import annotations

import csv
import dataclasses
import multiprocessing

import numpy as np

from .bands import KramersPair, select_pair, solve
from .brillouin import boundary_radius, point_group_ops, replicate_points
from .errors import NearDegenerateIntermediateError, PairingAmbiguityError
from .gtensor import det_sign, g_tensor_set, spin_g
from .materials import MaterialModel

BISECT_TOL = 1e-6  # Bohr^-1
N_COARSE = 200

_SCAN_ERRORS = (PairingAmbiguityError, NearDegenerateIntermediateError)


@dataclasses.dataclass
class Crossing:
    """One refined det(g)=0 radius on a ray."""

    radius: float
    which_det: str
    bracket_width: float
    slope_sign: int


@dataclasses.dataclass
class RayScan:
    """Scan result of a single ray from Gamma."""

    direction: np.ndarray
    r_max: float
    which_det: str
    crossings: list
    failures: list
    clipped: bool


@dataclasses.dataclass
class SurfaceCloud:
    """Point cloud of det(g)=0 crossings from a set of rays."""

    material: str
    band_id: str
    which_det: str
    points: np.ndarray
    dir_index: np.ndarray
    crossing_ordinal: np.ndarray
    slope_sign: np.ndarray
    symmetry_ops_applied: int     # 0 = raw rays, else point-group order
    failures: list


def _pair_at(model: MaterialModel, band_id, k) -> KramersPair:
    return select_pair(model, solve(model, k), band_id)


def _det_sign_at(model: MaterialModel, band_id, k, which_det: str) -> int:
    """Sign of the chosen determinant at one k-point (+-1)."""
    sol = solve(model, k)
    pair = select_pair(model, sol, band_id)
    if which_det == "gs":
        return det_sign(spin_g(pair))
    if which_det == "gtot":
        return det_sign(g_tensor_set(model, sol, pair).g_tot)
    raise ValueError(f"which_det must be 'gs' or 'gtot', not {which_det!r}")


def det_along_ray(model: MaterialModel, band_id, direction, radii,
                  which_det: str = "gs") -> np.ndarray:
    """Determinant values on a radius grid (NaN where pairing fails).

    The dense-scan companion of :func:`scan_ray`, used as an
    independent root oracle and for det-along-a-ray tables.
    """
    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    out = np.empty(len(radii))
    for i, r in enumerate(radii):
        try:
            sol = solve(model, r * direction)
            pair = select_pair(model, sol, band_id)
            if which_det == "gs":
                g = spin_g(pair)
            else:
                g = g_tensor_set(model, sol, pair).g_tot
            out[i] = np.linalg.det(g)
        except _SCAN_ERRORS:
            out[i] = np.nan
    return out


def _bisect(model, band_id, direction, lo, hi, sign_lo, which_det, tol):
    """Shrink a sign-change bracket below tol; returns (mid, width)."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _det_sign_at(model, band_id, mid * direction, which_det) == sign_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), hi - lo


def scan_ray(model: MaterialModel, band_id, direction,
             r_max: float | None = None,
             n_coarse: int = N_COARSE,
             bisect_tol: float = BISECT_TOL,
             which_det: str = "gs",
             clip: bool = True) -> RayScan:
    """Locate all determinant sign changes along k = r * direction.

    ``r_max`` defaults to the Brillouin-zone boundary; larger requests
    are clipped (and flagged) unless ``clip`` is False, which permits
    following features that leave the first zone.  Pairing failures are
    recorded as excluded radius intervals and the scan continues beyond
    them; an empty crossing list is a valid result.
    """
    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    r_boundary = boundary_radius(model.lattice_constant, direction)
    clipped = False
    if r_max is None:
        r_max = r_boundary
    elif clip and r_max > r_boundary:
        r_max = r_boundary
        clipped = True

    radii = np.linspace(0.0, r_max, n_coarse)
    crossings = []
    failures = []
    prev_r = None
    prev_sign = None
    fail_start = None
    fail_reason = None
    for r in radii:
        try:
            sign = _det_sign_at(model, band_id, r * direction, which_det)
        except _SCAN_ERRORS as err:
            if fail_start is None:
                fail_start = prev_r if prev_r is not None else r
                fail_reason = type(err).__name__
            continue
        if fail_start is not None:
            failures.append((fail_start, r, fail_reason))
            fail_start = None
            # no bracketing across an excluded interval: the sign there
            # is unknowable, so restart the parity bookkeeping
            prev_sign = None
        if prev_sign is not None and sign != prev_sign:
            try:
                mid, width = _bisect(model, band_id, direction, prev_r, r,
                                     prev_sign, which_det, bisect_tol)
            except _SCAN_ERRORS as err:
                failures.append((prev_r, r, type(err).__name__))
            else:
                crossings.append(Crossing(radius=mid, which_det=which_det,
                                          bracket_width=width, slope_sign=sign))
        prev_r, prev_sign = r, sign
    if fail_start is not None:
        failures.append((fail_start, r_max, fail_reason))
    return RayScan(direction=direction, r_max=r_max, which_det=which_det,
                   crossings=crossings, failures=failures, clipped=clipped)


# worker-process state, set once per process by the pool initializer
_WORK = {}


def _init_worker(model, band_id, which_det, r_max, n_coarse, bisect_tol, clip):
    _WORK.update(model=model, band_id=band_id, which_det=which_det,
                 r_max=r_max, n_coarse=n_coarse, bisect_tol=bisect_tol,
                 clip=clip)


def _scan_one(task):
    index, direction = task
    scan = scan_ray(_WORK["model"], _WORK["band_id"], direction,
                    r_max=_WORK["r_max"], n_coarse=_WORK["n_coarse"],
                    bisect_tol=_WORK["bisect_tol"],
                    which_det=_WORK["which_det"], clip=_WORK["clip"])
    return index, scan


def build_surface(model: MaterialModel, band_id, directions,
                  which_det: str = "gs",
                  r_max: float | None = None,
                  n_coarse: int = N_COARSE,
                  bisect_tol: float = BISECT_TOL,
                  workers: int = 1,
                  replicate: bool = False,
                  clip: bool = True) -> SurfaceCloud:
    """Assemble a det(g)=0 point cloud from rays along ``directions``.

    With ``replicate`` the crossing set is closed under the material's
    point group (pass wedge directions to cover the sphere cheaply).
    Results are merged by direction index, so the cloud is independent
    of worker scheduling.
    """
    directions = np.asarray(directions, dtype=float)
    tasks = list(enumerate(directions))
    init_args = (model, band_id, which_det, r_max, n_coarse, bisect_tol, clip)
    if workers > 1:
        with multiprocessing.Pool(processes=workers, initializer=_init_worker,
                                  initargs=init_args) as pool:
            results = pool.map(_scan_one, tasks)
    else:
        _init_worker(*init_args)
        results = [_scan_one(t) for t in tasks]

    points, dir_index, ordinals, slopes, failures = [], [], [], [], []
    for index, scan in results:  # pool.map preserves task order
        for ordinal, crossing in enumerate(scan.crossings):
            points.append(crossing.radius * scan.direction)
            dir_index.append(index)
            ordinals.append(ordinal)
            slopes.append(crossing.slope_sign)
        for (lo, hi, reason) in scan.failures:
            failures.append((index, lo, hi, reason))
    points = np.array(points).reshape(-1, 3)
    dir_index = np.array(dir_index, dtype=int)
    ordinals = np.array(ordinals, dtype=int)
    slopes = np.array(slopes, dtype=int)

    n_ops = 0
    if replicate:
        ops = point_group_ops(model.point_group)
        n_ops = len(ops)
        if len(points):
            images = np.concatenate([points @ op.T for op in ops])
            meta = np.concatenate(
                [np.stack([dir_index, ordinals, slopes], axis=1)] * n_ops)
            _, keep = np.unique(np.round(images, 6), axis=0,
                                return_index=True)
            keep.sort()
            images, meta = images[keep], meta[keep]
            order = np.lexsort((images[:, 2], images[:, 1], images[:, 0]))
            points = images[order]
            dir_index, ordinals, slopes = meta[order].T

    return SurfaceCloud(
        material=model.name,
        band_id=str(band_id),
        which_det=which_det,
        points=points,
        dir_index=dir_index,
        crossing_ordinal=ordinals,
        slope_sign=slopes,
        symmetry_ops_applied=n_ops,
        failures=failures,
    )


CSV_COLUMNS = ("kx", "ky", "kz", "dir_index", "crossing_ordinal",
               "which_det", "det_slope_sign")


def export_cloud(cloud: SurfaceCloud, path, fmt: str = "csv",
                 provenance: list | None = None) -> None:
    """Write a cloud as CSV (full metadata) or ASCII PLY (coordinates).

    Floats are printed with 17 significant digits so a CSV round-trip
    reproduces coordinates bit-exactly.  ``provenance`` lines go into
    leading '#' comments (CSV) or 'comment' lines (PLY).
    """
    provenance = provenance or []
    meta = [f"material: {cloud.material}",
            f"band: {cloud.band_id}",
            f"det: {cloud.which_det}",
            f"symmetry_ops: {cloud.symmetry_ops_applied}"]
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            for line in provenance + meta:
                fh.write(f"# {line}\n")
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for i in range(len(cloud.points)):
                x, y, z = cloud.points[i]
                writer.writerow([f"{x:.17g}", f"{y:.17g}", f"{z:.17g}",
                                 cloud.dir_index[i], cloud.crossing_ordinal[i],
                                 cloud.which_det, cloud.slope_sign[i]])
    elif fmt == "ply":
        with open(path, "w", newline="") as fh:
            fh.write("ply\nformat ascii 1.0\n")
            for line in provenance + meta:
                fh.write(f"comment {line}\n")
            fh.write(f"element vertex {len(cloud.points)}\n")
            fh.write("property double x\nproperty double y\nproperty double z\n")
            fh.write("end_header\n")
            for x, y, z in cloud.points:
                fh.write(f"{x:.17g} {y:.17g} {z:.17g}\n")
    else:
        raise ValueError(f"format must be 'csv' or 'ply', not {fmt!r}")


def read_cloud_csv(path) -> SurfaceCloud:
    """Re-import an exported CSV cloud (inverse of :func:`export_cloud`).

    Cloud metadata (material, band, symmetry-op count) is recovered
    from the structured header comments export_cloud writes.
    """
    points, dir_index, ordinals, slopes = [], [], [], []
    meta = {"material": "", "band": "", "det": "", "symmetry_ops": "0"}
    with open(path, newline="") as fh:
        raw = list(csv.reader(fh))
    rows = []
    for row in raw:
        if not row:
            continue
        if row[0].lstrip().startswith("#"):
            text = ",".join(row).lstrip("# ")
            key, sep, value = text.partition(": ")
            if sep and key in meta:
                meta[key] = value
            continue
        rows.append(row)
    if rows and tuple(rows[0]) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {rows[0]!r}")
    which = meta["det"]
    for row in rows[1:]:
        points.append([float(row[0]), float(row[1]), float(row[2])])
        dir_index.append(int(row[3]))
        ordinals.append(int(row[4]))
        which = row[5]
        slopes.append(int(row[6]))
    return SurfaceCloud(
        material=meta["material"], band_id=meta["band"], which_det=which,
        points=np.array(points).reshape(-1, 3),
        dir_index=np.array(dir_index, dtype=int),
        crossing_ordinal=np.array(ordinals, dtype=int),
        slope_sign=np.array(slopes, dtype=int),
        symmetry_ops_applied=int(meta["symmetry_ops"]),
        failures=[],
    )
