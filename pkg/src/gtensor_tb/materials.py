"""Material parameter files: schema, loading, validation.

A material file is JSON carrying eV/Angstrom quantities (see
docs/formats.md for the full schema).  ``load_material`` converts
everything to Hartree atomic units and returns an immutable
:class:`MaterialModel`.  The configured band-pair labels are verified
against the actual degeneracy pattern at the zone center before the
model is handed out.
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from importlib import resources
from pathlib import Path

from .errors import MaterialParseError, MaterialValidationError
from .slater_koster import (ORBITALS_SP3, ORBITALS_SP3D5S,
                            SK_KEYS_SP3, SK_KEYS_SP3D5S)
from .units import angstrom_to_bohr, ev_to_hartree

BASIS_SP3 = "sp3"
BASIS_SP3D5S = "sp3d5s*"

_ONSITE_SHELLS = {BASIS_SP3: ("s", "p"), BASIS_SP3D5S: ("s", "p", "d", "s2")}
_SK_KEYS = {BASIS_SP3: SK_KEYS_SP3, BASIS_SP3D5S: SK_KEYS_SP3D5S}
_ORBITALS = {BASIS_SP3: ORBITALS_SP3, BASIS_SP3D5S: ORBITALS_SP3D5S}

# Kramers pairs must be isolated by more than this for inversion-symmetric
# crystals; for compound (Td) materials the intra-pair split is physical
# and the tolerance is lifted (None).
PAIR_SPLIT_TOL = 1e-6  # Hartree

# zone-center degeneracy detection threshold used by the load-time check
_GAMMA_DEGENERACY_TOL = 1e-8  # Hartree

BUILTIN_MATERIALS = ("si", "ge", "gaas")


@dataclasses.dataclass(frozen=True, eq=False)
class MaterialModel:
    """Immutable tight-binding parameter set in atomic units."""

    name: str
    lattice_constant: float          # Bohr
    basis: str
    species: tuple
    orbitals: tuple
    onsite: dict                     # species -> shell -> Hartree
    sk: dict                         # (from, to) -> integral key -> Hartree
    soc: dict                        # species -> lambda_p, Hartree
    dipole: dict                     # species -> <s|r|p> element, Bohr
    band_pairs: dict                 # label -> (i, i+1), 0-based
    point_group: str                 # "Oh" or "Td"
    pair_split_tol: float | None
    meta: dict

    @property
    def n_orb(self) -> int:
        return len(self.orbitals)

    @property
    def dim(self) -> int:
        return 4 * self.n_orb

    def with_soc_scaled(self, factor: float) -> "MaterialModel":
        """Copy with every lambda_p multiplied by ``factor``."""
        soc = {sp: lam * factor for sp, lam in self.soc.items()}
        return dataclasses.replace(self, soc=soc)

    def without_hopping(self) -> "MaterialModel":
        """Copy with all inter-atomic integrals zeroed (isolated atoms)."""
        sk = {pair: {key: 0.0 for key in table}
              for pair, table in self.sk.items()}
        return dataclasses.replace(self, sk=sk)

    def with_dipole(self, dipole: dict) -> "MaterialModel":
        """Copy with a replacement species -> dipole map (Bohr)."""
        return dataclasses.replace(self, dipole=dict(dipole))


def _require(mapping, key, path):
    if key not in mapping:
        raise MaterialValidationError(f"{path}{key}", "missing required key")
    return mapping[key]


def _number(value, path):
    if not isinstance(value, (int, float)) or isinstance(value, bool) \
            or not math.isfinite(value):
        raise MaterialValidationError(path, "must be a finite number")
    return float(value)


def builtin_material_path(name: str) -> Path:
    """Path of a packaged material file ('si', 'ge', 'gaas')."""
    if name not in BUILTIN_MATERIALS:
        raise MaterialValidationError(
            "material", f"unknown built-in material {name!r}; "
            f"choose from {BUILTIN_MATERIALS} or pass a file path")
    return Path(str(resources.files("gtensor_tb.data") / f"{name}.json"))


def resolve_material_path(spec: str) -> Path:
    """Interpret a CLI --material value: built-in name or file path."""
    if spec.lower() in BUILTIN_MATERIALS:
        return builtin_material_path(spec.lower())
    return Path(spec)


def load_material(path, verify_bands: bool = True) -> MaterialModel:
    """Load and validate a material file.

    Raises
    ------
    MaterialParseError
        File unreadable or not valid JSON.
    MaterialValidationError
        Schema violation; the message names the offending key.
    """
    path = Path(path)
    try:
        raw_bytes = path.read_bytes()
        doc = json.loads(raw_bytes)
    except OSError as exc:
        raise MaterialParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MaterialParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MaterialParseError(f"{path}: top level must be an object")

    name = str(_require(doc, "name", ""))
    a_ang = _number(_require(doc, "lattice_constant_angstrom", ""),
                    "lattice_constant_angstrom")
    if a_ang <= 0:
        raise MaterialValidationError("lattice_constant_angstrom",
                                      "must be positive")
    basis = _require(doc, "basis", "")
    if basis not in (_ONSITE_SHELLS):
        raise MaterialValidationError(
            "basis", f"must be '{BASIS_SP3}' or '{BASIS_SP3D5S}'")
    species_raw = _require(doc, "species", "")
    if (not isinstance(species_raw, list) or len(species_raw) != 2
            or not all(isinstance(s, str) for s in species_raw)):
        raise MaterialValidationError("species",
                                      "must be a list of two species names")
    species = tuple(species_raw)
    unique_species = sorted(set(species))

    onsite_raw = _require(doc, "onsite", "")
    onsite = {}
    for sp in unique_species:
        table = _require(onsite_raw, sp, "onsite.")
        onsite[sp] = {}
        for shell in _ONSITE_SHELLS[basis]:
            val = _number(_require(table, shell, f"onsite.{sp}."),
                          f"onsite.{sp}.{shell}")
            onsite[sp][shell] = ev_to_hartree(val)

    sk_raw = _require(doc, "sk", "")
    sk = {}
    pairs_needed = {(species[0], species[1]), (species[1], species[0])}
    for a, b in pairs_needed:
        key = f"{a}-{b}"
        table = _require(sk_raw, key, "sk.")
        unknown = sorted(set(table) - set(_SK_KEYS[basis]))
        if unknown:
            raise MaterialValidationError(
                f"sk.{key}.{unknown[0]}",
                f"not a {basis} Slater-Koster integral; "
                f"valid keys: {sorted(_SK_KEYS[basis])}")
        sk[(a, b)] = {}
        for ik in _SK_KEYS[basis]:
            val = _number(_require(table, ik, f"sk.{key}."),
                          f"sk.{key}.{ik}")
            sk[(a, b)][ik] = ev_to_hartree(val)

    soc_raw = _require(doc, "soc", "")
    soc = {}
    for sp in unique_species:
        table = _require(soc_raw, sp, "soc.")
        lam = _number(_require(table, "lambda_p_ev", f"soc.{sp}."),
                      f"soc.{sp}.lambda_p_ev")
        if lam < 0:
            raise MaterialValidationError(f"soc.{sp}.lambda_p_ev",
                                          "must be non-negative")
        soc[sp] = ev_to_hartree(lam)

    dipole_raw = _require(doc, "dipole", "")
    dipole = {}
    for sp in unique_species:
        table = _require(dipole_raw, sp, "dipole.")
        dipole[sp] = _number(_require(table, "s_p_bohr", f"dipole.{sp}."),
                             f"dipole.{sp}.s_p_bohr")

    orbitals = _ORBITALS[basis]
    dim = 4 * len(orbitals)
    bp_raw = _require(doc, "band_pairs", "")
    if not isinstance(bp_raw, dict) or not bp_raw:
        raise MaterialValidationError("band_pairs",
                                      "must be a non-empty object")
    band_pairs = {}
    for label, idx in bp_raw.items():
        path_key = f"band_pairs.{label}"
        if (not isinstance(idx, list) or len(idx) != 2
                or not all(isinstance(i, int) for i in idx)):
            raise MaterialValidationError(path_key,
                                          "must be a pair of band indices")
        i, j = idx
        if not (0 <= i < j < dim):
            raise MaterialValidationError(path_key,
                                          f"indices must satisfy 0 <= i < j < {dim}")
        if j != i + 1:
            raise MaterialValidationError(path_key,
                                          "pair must be two adjacent bands")
        band_pairs[label] = (i, j)

    inversion = species[0] == species[1]
    model = MaterialModel(
        name=name,
        lattice_constant=angstrom_to_bohr(a_ang),
        basis=basis,
        species=species,
        orbitals=orbitals,
        onsite=onsite,
        sk=sk,
        soc=soc,
        dipole=dipole,
        band_pairs=band_pairs,
        point_group="Oh" if inversion else "Td",
        pair_split_tol=PAIR_SPLIT_TOL if inversion else None,
        meta={"path": str(path),
              "file_sha256": hashlib.sha256(raw_bytes).hexdigest(),
              "description": doc.get("description", "")},
    )
    if verify_bands:
        _verify_band_pairs_at_gamma(model)
    return model


def _verify_band_pairs_at_gamma(model: MaterialModel) -> None:
    """Check each configured pair label against the zone-center spectrum.

    Every labelled pair must be a two-fold level isolated from its
    neighbours; a 'split-off' label must additionally sit directly below
    a four-fold multiplet (the j=3/2 valence top).
    """
    from .hamiltonian import bloch_hamiltonian
    import numpy as np

    energies = np.linalg.eigvalsh(bloch_hamiltonian(model, np.zeros(3)))
    tol = _GAMMA_DEGENERACY_TOL
    for label, (i, j) in model.band_pairs.items():
        key = f"band_pairs.{label}"
        if energies[j] - energies[i] > tol:
            raise MaterialValidationError(
                key, f"bands {i},{j} are split by "
                f"{energies[j] - energies[i]:.2e} Ha at the zone center")
        if i > 0 and energies[i] - energies[i - 1] <= tol:
            raise MaterialValidationError(
                key, f"band {i - 1} is degenerate with the pair "
                "at the zone center")
        if j + 1 < model.dim and energies[j + 1] - energies[j] <= tol:
            raise MaterialValidationError(
                key, f"band {j + 1} is degenerate with the pair "
                "at the zone center")
        if label == "split-off":
            if j + 4 >= model.dim:
                raise MaterialValidationError(key, "no room for a j=3/2 "
                                              "multiplet above the pair")
            quad = energies[j + 1:j + 5]
            if quad[-1] - quad[0] > tol:
                raise MaterialValidationError(
                    key, "the four bands above the pair are not degenerate "
                    "at the zone center (expected the j=3/2 valence top)")
