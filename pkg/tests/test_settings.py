import json

import pytest

from main import build_parser
from models.enums import Language, LaplacianKind
from models.errors import FormatError
from services.settings_manager import AnalysisSettings, SettingsManager


def _write(tmp_path, data) -> str:
    path = tmp_path / "settings.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_defaults():
    settings = SettingsManager.load(None)
    assert settings.laplacian_kind is LaplacianKind.SIGNLESS
    assert settings.tol == 1e-9
    assert settings.grid == 64
    assert not settings.fail_fast
    assert settings.language_enum is Language.ENGLISH


def test_load_from_file(tmp_path):
    settings = SettingsManager.load(_write(tmp_path, {"kind": "laplacian", "grid": 16, "language": "es"}))
    assert settings.laplacian_kind is LaplacianKind.COMBINATORIAL
    assert settings.grid == 16
    assert settings.language_enum is Language.SPANISH
    assert settings.tol == 1e-9


@pytest.mark.parametrize("data", [
    {"colour": "blue"},
    {"kind": "normalized"},
    {"language": "fr"},
    {"tol": 0},
    {"grid": 2.5},
    {"grid": 0},
    {"tol": "abc"},
    {"tol": True},
    {"grid": "x"},
    {"kind": None},
    {"language": 1},
    {"fail_fast": "no"},
    [1, 2],
])
def test_load_rejects_invalid_settings(tmp_path, data):
    with pytest.raises(FormatError):
        SettingsManager.load(_write(tmp_path, data))


def test_load_rejects_unreadable_file(tmp_path):
    with pytest.raises(FormatError):
        SettingsManager.load(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(FormatError):
        SettingsManager.load(str(bad))


def test_flags_override_file(tmp_path):
    path = _write(tmp_path, {"kind": "laplacian", "tol": 1e-6, "quiet": True})
    args = build_parser().parse_args(["discord-structure", "g.json", "--settings", path, "--tol", "1e-3"])
    settings = SettingsManager.resolve(args)
    assert settings.tol == 1e-3
    assert settings.kind == "laplacian"
    assert settings.quiet


def test_absent_flags_do_not_override_file(tmp_path):
    path = _write(tmp_path, {"fail_fast": True, "language": "es"})
    args = build_parser().parse_args(["oracle", "rho.json", "--settings", path])
    settings = SettingsManager.resolve(args)
    assert settings.fail_fast
    assert settings.language == "es"


def test_lang_flag_maps_to_language():
    args = build_parser().parse_args(["check-state", "rho.json", "--lang", "es", "--kind", "laplacian"])
    settings = SettingsManager.resolve(args)
    assert settings.language_enum is Language.SPANISH
    assert settings.laplacian_kind is LaplacianKind.COMBINATORIAL


def test_settings_dict_roundtrip():
    settings = AnalysisSettings(kind="laplacian", tol=1e-6, grid=8, fail_fast=True, quiet=True, language="es")
    assert AnalysisSettings.from_dict(settings.to_dict()) == settings
