"""
Numeric checks of the known identities at points in the upper half plane
"""

import pytest

from mgf_fourier.numerics import IDENTITIES, ModulusPoint, verify_identity
from mgf_fourier.utils.errors import DomainError


def test_registry():
    assert sorted(IDENTITIES) == ["id1", "id2a", "id2b", "id2c", "id3"]
    assert IDENTITIES["id2b"].two_loop
    assert not IDENTITIES["id3"].two_loop


def test_unknown_identity():
    with pytest.raises(DomainError):
        verify_identity("id9", ModulusPoint(0, 1))


@pytest.mark.slow
def test_id1_off_axis():
    report = verify_identity("id1", ModulusPoint.parse("1/3,1"), cutoff=150)
    assert report.passed(1e-5)
    data = report.to_dict(1e-5)
    assert data["passed"] is True
    assert set(data["parts"]) == {"C(1, 1, 1)", "E3"}


@pytest.mark.slow
def test_id2a():
    assert verify_identity("id2a", ModulusPoint(0.1, 1.1), cutoff=150).passed(1e-4)


@pytest.mark.slow
def test_four_edge_identity():
    report = verify_identity("id3", ModulusPoint(0.0, 1.0), cutoff=60)
    assert report.passed(1e-4)
    assert report.cutoff == 60
