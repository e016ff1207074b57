import dataclasses

import pytest

from hfs_entangle.constants import (
    CODATA,
    PhysicalConstants,
    kelvin_to_temperature,
    parse_constants,
    temperature_to_kelvin,
)


def test_defaults_positive_and_consistent():
    for name, value in CODATA.as_dict().items():
        assert value > 0, name
    assert abs(CODATA.mu_B / (CODATA.e_charge * CODATA.hbar / (2 * CODATA.me)) - 1) < 1e-6
    assert CODATA.g_e == pytest.approx(2.00231930436, rel=1e-10)
    assert CODATA.g_p == pytest.approx(5.5856946893, rel=1e-9)


def test_hfs_splitting_in_ev():
    # h * 1420.405751768 MHz, by hand
    assert CODATA.hfs_splitting / CODATA.e_charge == pytest.approx(5.874326e-6, rel=1e-6)
    assert CODATA.hfs_constant == CODATA.hfs_splitting / 4


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        dataclasses.replace(CODATA, kB=0.0)


def test_rejects_inconsistent_mu_b():
    with pytest.raises(ValueError, match="mu_B"):
        dataclasses.replace(CODATA, mu_B=CODATA.mu_B * 1.01)


def test_parse_overrides_and_comments():
    k = parse_constants("# test file\nhfs_splitting_freq = 2840811503.536  # doubled\n\n")
    assert k.hfs_splitting_freq == 2840811503.536
    assert k.kB == CODATA.kB


def test_parse_rejects_unknown_key():
    with pytest.raises(ValueError, match="unknown constant 'planck'"):
        parse_constants("planck=6.6e-34")


def test_parse_rejects_garbage():
    with pytest.raises(ValueError, match="line 2"):
        parse_constants("kB=1.380649e-23\nnot a pair")
    with pytest.raises(ValueError, match="not a number"):
        parse_constants("kB=abc")


def test_checksum_changes_with_values():
    k = parse_constants("g_p=5.5")
    assert k.checksum() != CODATA.checksum()
    assert PhysicalConstants().checksum() == CODATA.checksum()


def test_temperature_round_trip():
    for T in (0.1, 3.64, 100):
        assert kelvin_to_temperature(temperature_to_kelvin(T)) == pytest.approx(T, rel=1e-14)
