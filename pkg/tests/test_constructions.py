import pytest

from strongpart.constructions import NAMED, attach_controlled_part, build_G1, build_H0, build_T, named
from strongpart.core import canonical_form, encode, is_isomorphic, is_regular
from strongpart.errors import BadSpec, IndexOutOfRange, UnsupportedPartSize

HEX_GOLDEN = {"g1": "969999", "g2": "999666", "h0": "96959959aa"}

STRUCTURED_GOLDEN = {
    "t1": [1, 0, 1, 1, 1, 1],
    "t2": [1, 0, 0, 1, 0, 0],
    "t3": [1, 1, 1, 0, 0, 0],
    "t4": [1, 0, 0, 1, 0, 1],
}


@pytest.mark.parametrize("name", sorted(HEX_GOLDEN))
def test_hex_goldens(name):
    assert encode(named(name), "hex") == HEX_GOLDEN[name]


@pytest.mark.parametrize("name", sorted(STRUCTURED_GOLDEN))
def test_tournament_goldens(name):
    T = named(name)
    assert (T.r, T.c) == (1, 4)
    assert T.blocks() == STRUCTURED_GOLDEN[name]


def test_named_registry():
    assert set(NAMED) == {"g1", "g2", "t1", "t2", "t3", "t4", "h0"}
    with pytest.raises(IndexOutOfRange):
        named("h1")
    with pytest.raises(IndexOutOfRange):
        build_T(5)


def test_constructions_are_regular():
    for name in ("g1", "g2", "h0"):
        assert is_regular(named(name))


def test_t_scores():
    assert sorted(bin(m).count("1") for m in build_T(1).out) == [0, 2, 2, 2]
    assert sorted(bin(m).count("1") for m in build_T(2).out) == [1, 1, 1, 3]


def test_h0_uniqueness_of_attachment():
    H0 = build_H0()
    for pair in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]:
        other = attach_controlled_part(build_G1(), pair)
        assert canonical_form(other) == canonical_form(H0)
        assert is_isomorphic(other, H0)


def test_attach_errors():
    with pytest.raises(BadSpec):
        attach_controlled_part(build_G1(), (1, 1))
    with pytest.raises(BadSpec):
        attach_controlled_part(build_G1(), (1, 5))
    with pytest.raises(UnsupportedPartSize):
        attach_controlled_part(build_H0(), (1, 2))
