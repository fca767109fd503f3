import json

import numpy as np
import pytest

from gtensor_tb import (MaterialParseError, MaterialValidationError,
                        builtin_material_path, load_material,
                        resolve_material_path)
from gtensor_tb.units import angstrom_to_bohr, ev_to_hartree


def test_builtin_materials_load(si, ge, gaas):
    assert si.name == "Si" and ge.name == "Ge" and gaas.name == "GaAs"
    assert si.basis == "sp3d5s*" and gaas.basis == "sp3"
    assert len(si.orbitals) == 10 and len(gaas.orbitals) == 4


def test_point_group_and_split_tol(si, gaas):
    assert si.point_group == "Oh" and si.pair_split_tol is not None
    assert gaas.point_group == "Td" and gaas.pair_split_tol is None


def test_units_converted(si):
    raw = json.loads(builtin_material_path("si").read_text())
    assert si.lattice_constant == pytest.approx(
        angstrom_to_bohr(raw["lattice_constant_angstrom"]))
    assert si.onsite["Si"]["s"] == pytest.approx(
        ev_to_hartree(raw["onsite"]["Si"]["s"]))


def test_meta_records_source_hash(si):
    assert len(si.meta["file_sha256"]) == 64
    assert si.meta["path"].endswith("si.json")


def test_resolve_material_path(tmp_path):
    assert resolve_material_path("si") == builtin_material_path("si")
    custom = tmp_path / "custom.json"
    assert resolve_material_path(str(custom)) == custom
    with pytest.raises(MaterialValidationError):
        builtin_material_path("diamond")


def _si_dict():
    return json.loads(builtin_material_path("si").read_text())


def _dump(tmp_path, data):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(data))
    return path


def test_parse_error_on_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(MaterialParseError):
        load_material(path)


def test_validation_missing_key(tmp_path):
    data = _si_dict()
    del data["lattice_constant_angstrom"]
    with pytest.raises(MaterialValidationError) as err:
        load_material(_dump(tmp_path, data))
    assert "lattice_constant" in str(err.value)


def test_validation_negative_lattice_constant(tmp_path):
    data = _si_dict()
    data["lattice_constant_angstrom"] = -1.0
    with pytest.raises(MaterialValidationError):
        load_material(_dump(tmp_path, data))


def test_validation_unknown_sk_key(tmp_path):
    data = _si_dict()
    data["sk"]["Si-Si"]["bogus_integral"] = 0.1
    with pytest.raises(MaterialValidationError) as err:
        load_material(_dump(tmp_path, data))
    assert "bogus" in str(err.value)


def test_band_pair_checked_against_gamma_pattern(tmp_path):
    # bands 10-13 form a four-fold level at Gamma; calling two of them
    # a Kramers pair must be rejected at load time
    data = _si_dict()
    data["band_pairs"]["second-conduction"] = [10, 11]
    with pytest.raises(MaterialValidationError) as err:
        load_material(_dump(tmp_path, data))
    assert "second-conduction" in str(err.value)


def test_soc_scaling_helper(si):
    scaled = si.with_soc_scaled(0.5)
    for sp in si.soc:
        assert scaled.soc[sp] == pytest.approx(0.5 * si.soc[sp])


def test_without_hopping_helper(si):
    bare = si.without_hopping()
    assert all(v == 0.0 for table in bare.sk.values() for v in table.values())
    assert bare.onsite == si.onsite


def test_split_off_pair_is_below_fourfold(si):
    lo, hi = si.band_pairs["split-off"]
    assert (lo, hi) == (2, 3)
    assert si.band_pairs["first-conduction"] == (8, 9)


def test_gaas_band_pairs(gaas):
    assert set(gaas.band_pairs) == {"split-off", "first-conduction",
                                    "second-conduction"}


def test_arrays_match_species_layout(si, gaas):
    assert si.species == ("Si", "Si")
    assert gaas.species == ("Ga", "As")
    assert np.isfinite(list(si.soc.values())).all()
