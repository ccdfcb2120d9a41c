"""Projective real qubit states and the dihedral action on them.

A coin state cos(phi)|0> + sin(phi)|1> is identified with its antipode, so
the carrier is a single exact angle phi in [0, pi).  The whole dihedral
action is real, which makes exactness free: a rotor adds its angle mod pi
and a reflector sends phi to 2*beta - phi mod pi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .angles import Angle, CanonicalRange
from .dihedral import PlanarIsometry


@dataclass(frozen=True)
class CoinState:
    """A projective state, canonicalized to phi in [0, pi)."""

    phi: Angle

    @classmethod
    def from_angle(cls, phi: Angle) -> "CoinState":
        return cls(phi.normalized(CanonicalRange.PROJECTIVE))

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> "CoinState":
        return cls.from_angle(Angle(numerator, denominator))

    def amplitudes(self) -> tuple[float, float]:
        return self.phi.cos_sin()

    def __lt__(self, other: "CoinState") -> bool:
        return self.phi < other.phi

    def __str__(self) -> str:
        named = _NAMES.get(self)
        if named is not None:
            return named
        return f"cos({self.phi})|0⟩+sin({self.phi})|1⟩"

    @classmethod
    def parse(cls, text: str) -> "CoinState":
        text = text.strip()
        for state, name in _NAMES.items():
            if text in (name, name[1:-1]):  # with or without the ket decoration
                return state
        return cls.from_angle(Angle.parse(text))


KET_ZERO = CoinState.of(0)
KET_PLUS = CoinState.of(1, 4)
KET_ONE = CoinState.of(1, 2)
KET_MINUS = CoinState.of(3, 4)

BASIS = (KET_ZERO, KET_ONE)

_NAMES = {
    KET_ZERO: "|0⟩",
    KET_PLUS: "|+⟩",
    KET_ONE: "|1⟩",
    KET_MINUS: "|−⟩",
}


def act(p: PlanarIsometry, x: CoinState) -> CoinState:
    """Apply an isometry to a projective state."""
    if p.is_rotor:
        return CoinState.from_angle(x.phi.add(p.angle, CanonicalRange.PROJECTIVE))
    return CoinState.from_angle(
        p.angle.double().sub(x.phi, CanonicalRange.PROJECTIVE))


def win_probability(final: CoinState, target: CoinState) -> float:
    """cos^2 of the projective angle between *final* and *target*.

    The differences that actually occur in game analysis (multiples of
    pi/4) return literal 1.0, 0.5 or 0.0 rather than approximations.
    """
    d = final.phi.sub(target.phi, CanonicalRange.PROJECTIVE)
    if d.denominator == 1:          # difference 0 mod pi
        return 1.0
    if d.denominator == 2:          # difference pi/2
        return 0.0
    if d.denominator == 4:          # odd multiple of pi/4
        return 0.5
    c, _ = d.cos_sin()
    return c * c
