import pytest

from pennyflip.dihedral import FLIP, IDENTITY, DihedralElement, represent
from pennyflip.errors import FNotInGroup
from pennyflip.orbits import fixed_set, orbit, orbit_of_basis, stabilizer
from pennyflip.states import (KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO,
                              CoinState, act)


def rot(n, k):
    return DihedralElement.rotation(n, k)


def ref(n, k):
    return DihedralElement.reflection(n, k)


def bfs_orbit(n, x):
    """Independent oracle: closure of x under generator actions."""
    gens = [represent(rot(n, 1)), represent(ref(n, 0))]
    seen = {x}
    frontier = [x]
    while frontier:
        fresh = []
        for s in frontier:
            for g in gens:
                t = act(g, s)
                if t not in seen:
                    seen.add(t)
                    fresh.append(t)
        frontier = fresh
    return seen


class TestOrbit:
    def test_d8_basis_orbit(self):
        assert orbit(8, KET_ZERO) == (KET_ZERO, KET_PLUS, KET_ONE, KET_MINUS)
        assert orbit(8, KET_ONE) == orbit(8, KET_ZERO)

    def test_d4_degenerates_to_coin_toss(self):
        assert orbit(4, KET_ZERO) == (KET_ZERO, KET_ONE)
        assert orbit_of_basis(4) == (KET_ZERO, KET_ONE)

    def test_d12_orbit_angles(self):
        expected = tuple(CoinState.of(k, 6) for k in range(6))
        assert orbit(12, KET_ZERO) == expected

    def test_d6_basis_orbit_splits(self):
        orb0 = set(orbit(6, KET_ZERO))
        orb1 = set(orbit(6, KET_ONE))
        assert orb0 == {CoinState.of(0), CoinState.of(1, 3), CoinState.of(2, 3)}
        assert orb1 == {CoinState.of(1, 2), CoinState.of(5, 6), CoinState.of(1, 6)}
        assert not orb0 & orb1
        assert set(orbit_of_basis(6)) == orb0 | orb1

    def test_matches_bfs_closure(self):
        for n in range(3, 25):
            for x in (KET_ZERO, KET_ONE):
                assert set(orbit(n, x)) == bfs_orbit(n, x)


class TestStabilizer:
    def test_d8_plus(self):
        assert set(stabilizer(8, KET_PLUS)) == {
            rot(8, 0), rot(8, 4), ref(8, 2), ref(8, 6)}

    def test_d8_zero(self):
        assert set(stabilizer(8, KET_ZERO)) == {
            rot(8, 0), rot(8, 4), ref(8, 0), ref(8, 4)}

    def test_d6_zero(self):
        # brute force over the 12 elements gives {I, R_pi, S_0, S_{pi/2}}
        assert set(stabilizer(6, KET_ZERO)) == {
            rot(6, 0), rot(6, 3), ref(6, 0), ref(6, 3)}

    def test_stabilizers_are_subgroups(self):
        for n in (6, 8, 12, 16):
            for x in orbit_of_basis(n):
                stab = set(stabilizer(n, x))
                for g in stab:
                    assert g.inverse() in stab
                    for h in stab:
                        assert g.compose(h) in stab

    def test_orbit_stabilizer_counting(self):
        for n in range(3, 65):
            for x in orbit_of_basis(n):
                assert len(orbit(n, x)) * len(stabilizer(n, x)) == 2 * n


class TestFixedSet:
    def test_d8_flip_fixed_states(self):
        assert fixed_set(8, [IDENTITY, FLIP]) == (KET_PLUS, KET_MINUS)

    def test_identity_fixes_everything(self):
        assert fixed_set(8, [IDENTITY]) == orbit_of_basis(8)

    def test_d12_flip_fixes_nothing(self):
        assert fixed_set(12, [IDENTITY, FLIP]) == ()

    def test_flip_absent_raises(self):
        with pytest.raises(FNotInGroup):
            fixed_set(7, [IDENTITY, FLIP])

    def test_dichotomy_over_range(self):
        for n in range(3, 65):
            if n % 4 != 0:
                continue
            expected = (KET_PLUS, KET_MINUS) if n % 8 == 0 else ()
            assert fixed_set(n, [IDENTITY, FLIP]) == expected

    def test_accepts_symbolic_elements(self):
        assert fixed_set(8, [rot(8, 0), ref(8, 2)]) == (KET_PLUS, KET_MINUS)
