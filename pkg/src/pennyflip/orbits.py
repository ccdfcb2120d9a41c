"""Orbits, stabilizers and fixed sets for D_n acting on coin states.

All computations enumerate the 2n group elements and compare states
exactly.  Fixed sets are taken over the finite domain reachable from the
computational basis, which keeps the operation decidable by enumeration.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import dihedral
from .dihedral import DihedralElement, PlanarIsometry, represent
from .errors import FNotInGroup
from .states import BASIS, CoinState, act


def orbit(n: int, x: CoinState) -> tuple[CoinState, ...]:
    """States reachable from *x* under all 2n elements, in ascending angle order."""
    return tuple(sorted({act(represent(g), x) for g in dihedral.elements(n)}))


def orbit_of_basis(n: int) -> tuple[CoinState, ...]:
    """Union of the |0> and |1> orbits."""
    reached = set()
    for b in BASIS:
        reached.update(orbit(n, b))
    return tuple(sorted(reached))


def stabilizer(n: int, x: CoinState) -> tuple[DihedralElement, ...]:
    """Elements whose action fixes *x* projectively, in canonical order."""
    fixing = [g for g in dihedral.elements(n) if act(represent(g), x) == x]
    return tuple(sorted(fixing, key=dihedral.sort_key))


def _as_isometry(n: int, elem: DihedralElement | PlanarIsometry) -> PlanarIsometry:
    if isinstance(elem, DihedralElement):
        if elem.n != n:
            raise FNotInGroup(f"{elem} is an element of D_{elem.n}, not D_{n}")
        return represent(elem)
    if not dihedral.contains_isometry(n, elem):
        raise FNotInGroup(f"{elem} ∉ D_{n}")
    return elem


def fixed_set(n: int,
              elems: Iterable[DihedralElement | PlanarIsometry],
              domain: Sequence[CoinState] | None = None) -> tuple[CoinState, ...]:
    """States in *domain* fixed by every member of *elems*.

    *elems* may mix symbolic elements and isometries; each must belong to
    D_n (in particular the coin flip requires 4 | n, otherwise
    :class:`FNotInGroup` is raised).  The default domain is the basis orbit.
    """
    ps = [_as_isometry(n, e) for e in elems]
    if domain is None:
        domain = orbit_of_basis(n)
    return tuple(x for x in domain if all(act(p, x) == x for p in ps))
