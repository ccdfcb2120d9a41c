"""The dihedral group D_n and its exact planar matrix representation.

Elements are kept in the normal form ``r^k s^l``; their 2x2 matrix images
are kept symbolically as rotors/reflectors carrying an exact angle, so all
products and membership tests are exact.  Floating matrices exist only for
cross-checking and for the complex layer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .angles import Angle, CanonicalRange
from .errors import MismatchedGroup


@dataclass(frozen=True)
class DihedralElement:
    """An element r^k s^l of D_n, with ``reflect`` standing for the s factor."""

    n: int
    k: int
    reflect: bool = False

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"dihedral order parameter must be >= 3, got {self.n}")
        if not 0 <= self.k < self.n:
            raise ValueError(f"rotation exponent {self.k} out of range [0, {self.n})")

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n, 0, False)

    @classmethod
    def rotation(cls, n: int, k: int) -> "DihedralElement":
        return cls(n, k % n, False)

    @classmethod
    def reflection(cls, n: int, k: int) -> "DihedralElement":
        return cls(n, k % n, True)

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """Normal-form product under r^n = 1, s^2 = 1, s r = r^-1 s."""
        if self.n != other.n:
            raise MismatchedGroup(f"cannot compose D_{self.n} with D_{other.n}")
        if self.reflect:
            # r^k s r^m s^l = r^(k - m) s^(1 + l)
            return DihedralElement(self.n, (self.k - other.k) % self.n,
                                   not other.reflect)
        return DihedralElement(self.n, (self.k + other.k) % self.n, other.reflect)

    def inverse(self) -> "DihedralElement":
        if self.reflect:
            return self
        return DihedralElement(self.n, (-self.k) % self.n, False)

    def __str__(self) -> str:
        if self.reflect:
            return "s" if self.k == 0 else f"r^{self.k} s" if self.k > 1 else "r s"
        if self.k == 0:
            return "e"
        return "r" if self.k == 1 else f"r^{self.k}"

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "reflect": self.reflect}

    @classmethod
    def from_json(cls, data: dict) -> "DihedralElement":
        return cls(int(data["n"]), int(data["k"]), bool(data["reflect"]))


def elements(n: int) -> Iterator[DihedralElement]:
    """All 2n elements: rotations by ascending k, then reflections by ascending k."""
    for k in range(n):
        yield DihedralElement(n, k, False)
    for k in range(n):
        yield DihedralElement(n, k, True)


class Kind(enum.Enum):
    ROTOR = "rotor"
    REFLECTOR = "reflector"


@dataclass(frozen=True)
class PlanarIsometry:
    """A rotor R_a or reflector S_b in exact angle form.

    Rotation angles are canonicalized to [0, 2*pi); reflection axis
    inclinations to [0, pi).
    """

    kind: Kind
    angle: Angle

    @classmethod
    def rotor(cls, angle: Angle) -> "PlanarIsometry":
        return cls(Kind.ROTOR, angle.normalized(CanonicalRange.FULL_TURN))

    @classmethod
    def reflector(cls, angle: Angle) -> "PlanarIsometry":
        return cls(Kind.REFLECTOR, angle.normalized(CanonicalRange.AXIS))

    @property
    def is_rotor(self) -> bool:
        return self.kind is Kind.ROTOR

    def compose(self, other: "PlanarIsometry") -> "PlanarIsometry":
        """Exact product ``self @ other`` (apply *other* first).

        Uses the composition identities
        R(a)R(b) = R(a+b), S(a)S(b) = R(2a-2b),
        R(a)S(b) = S(b + a/2), S(b)R(a) = S(b - a/2);
        these are taken as the definition of the product, the floating
        matrix product serves only as a test oracle.
        """
        a, b = self.angle, other.angle
        if self.is_rotor and other.is_rotor:
            return PlanarIsometry.rotor(a.add(b))
        if not self.is_rotor and not other.is_rotor:
            return PlanarIsometry.rotor(a.sub(b).double())
        if self.is_rotor:
            return PlanarIsometry.reflector(b.add(a.half()))
        return PlanarIsometry.reflector(a.sub(b.half()))

    def inverse(self) -> "PlanarIsometry":
        if self.is_rotor:
            return PlanarIsometry.rotor(self.angle.negate())
        return self

    def matrix(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """Floating 2x2 matrix; evaluation boundary only."""
        if self.is_rotor:
            c, s = self.angle.cos_sin()
            return ((c, -s), (s, c))
        c, s = self.angle.double().cos_sin()
        return ((c, s), (s, -c))

    def __str__(self) -> str:
        if self == IDENTITY:
            return "I"
        if self == FLIP:
            return "F"
        if self == HADAMARD:
            return "H"
        if self.is_rotor:
            return f"R_{{{self.angle}}}"
        return f"S_{{{self.angle}}}"


IDENTITY = PlanarIsometry.rotor(Angle(0))
#: The coin flip, a reflection about the line at pi/4.
FLIP = PlanarIsometry.reflector(Angle(1, 4))
#: The Hadamard transform, a reflection about the line at pi/8.
HADAMARD = PlanarIsometry.reflector(Angle(1, 8))


def represent(g: DihedralElement) -> PlanarIsometry:
    """Standard representation: r^k -> R_{2*pi*k/n}, r^k s -> S_{pi*k/n}."""
    if g.reflect:
        return PlanarIsometry.reflector(Angle.of(g.k, g.n, CanonicalRange.AXIS))
    return PlanarIsometry.rotor(Angle.of(2 * g.k, g.n, CanonicalRange.FULL_TURN))


def isometries(n: int) -> list[PlanarIsometry]:
    """The represented image of D_n in canonical element order."""
    return [represent(g) for g in elements(n)]


def element_for_isometry(n: int, p: PlanarIsometry) -> DihedralElement | None:
    """The unique element of D_n represented by *p*, or None if absent."""
    f = p.angle.fraction
    if p.is_rotor:
        k = f * n / 2
    else:
        k = f * n
    if k.denominator != 1:
        return None
    return DihedralElement(n, int(k) % n, not p.is_rotor)


def contains_isometry(n: int, p: PlanarIsometry) -> bool:
    """Whether *p* lies in the image of the standard representation of D_n."""
    return element_for_isometry(n, p) is not None


def closure(generators: Iterable[PlanarIsometry]) -> set[PlanarIsometry]:
    """All finite compositions of the generators (exact BFS)."""
    found = set(generators)
    frontier = list(found)
    while frontier:
        fresh = []
        for p in frontier:
            for q in list(found):
                for prod in (p.compose(q), q.compose(p)):
                    if prod not in found:
                        found.add(prod)
                        fresh.append(prod)
        frontier = fresh
    return found


def verify_presentation(n: int) -> bool:
    """Check that two adjacent-axis reflections present D_n.

    For 8 | n the reflections are the coin flip and the Hadamard transform;
    otherwise the abstract pair S_0 and S_{pi/n} is used.  Verifies
    s^2 = t^2 = (s t)^n = identity and that the closure of {s, t} has
    exactly 2n elements.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n % 8 == 0:
        s, t = FLIP, HADAMARD
    else:
        s, t = (PlanarIsometry.reflector(Angle(0)),
                PlanarIsometry.reflector(Angle(1, n)))
    if s.compose(s) != IDENTITY or t.compose(t) != IDENTITY:
        return False
    st = s.compose(t)
    power = IDENTITY
    for _ in range(n):
        power = power.compose(st)
    if power != IDENTITY:
        return False
    return closure({s, t}) == set(isometries(n))


def sort_key(g: DihedralElement) -> tuple[int, int]:
    """Canonical ordering: rotations first, each block by ascending k."""
    return (1 if g.reflect else 0, g.k)


def isometry_sort_key(p: PlanarIsometry) -> tuple[int, Angle]:
    return (0 if p.is_rotor else 1, p.angle)
