import pytest

from managers.localization_manager import LocalizationManager
from models.enums import Condition, Language


@pytest.fixture(autouse=True)
def restore_language():
    yield
    LocalizationManager.set_language(Language.ENGLISH)


def test_both_languages_have_the_same_keys():
    assert set(LocalizationManager._ENGLISH) == set(LocalizationManager._SPANISH)


def test_every_condition_has_a_name():
    for language in Language:
        LocalizationManager.set_language(language)
        for condition in Condition:
            key = f"condition_{condition.value}"
            assert LocalizationManager.get(key) != key


def test_set_language_switches_dictionary():
    LocalizationManager.set_language(Language.SPANISH)
    assert LocalizationManager.get_current_language() is Language.SPANISH
    assert LocalizationManager.get("condition_normality") == "normalidad"
    LocalizationManager.set_language(Language.ENGLISH)
    assert LocalizationManager.get("condition_normality") == "normality"


def test_unknown_key_falls_back_to_key():
    assert LocalizationManager.get("no_such_key") == "no_such_key"


@pytest.mark.parametrize("language", list(Language))
def test_templates_accept_their_arguments(language):
    LocalizationManager.set_language(language)
    assert "2" in LocalizationManager.get("first_failure").format("normality", [1, 2], 1, 2, 0.5)
    assert LocalizationManager.get("discord_estimate").format(0.1, 64, 0.2)
    assert LocalizationManager.get("graphical_false").format(0, -0.2)
