"""Commuting squares of maps between free modules, their equivalence with
three-term chains, and evaluation of both shapes on finitely presented
modules.

A square records f: R^x1 -> R^x2 on top, g: R^y1 -> R^y2 on the bottom and
vertical maps a: R^x1 -> R^y1, b: R^x2 -> R^y2 with b f = g a.  Squares and
chains present the same objects: `square_to_chain` and `chain_to_square`
translate back and forth, and `roundtrip_morphism` exhibits the composite
as naturally isomorphic to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import ChainMorphism, ChainObject
from .errors import DimensionMismatch, InvariantViolation, RingMismatch
from .fpmodules import FpModule, kernel_of_action, present_quotient
from .linalg import Matrix, RingSpec, block, hstack, kron, vstack


@dataclass(frozen=True)
class FpSquare:
    ring: RingSpec
    f: Matrix
    a: Matrix
    b: Matrix
    g: Matrix

    def __post_init__(self):
        for mat in (self.f, self.a, self.b, self.g):
            if mat.ring != self.ring:
                raise RingMismatch("square matrices over the wrong ring")
        if self.a.cols != self.f.cols:
            raise DimensionMismatch("f and a must share their source rank")
        if self.b.cols != self.f.rows:
            raise DimensionMismatch("b must start where f ends")
        if self.g.cols != self.a.rows:
            raise DimensionMismatch("g must start where a ends")
        if self.g.rows != self.b.rows:
            raise DimensionMismatch("b and g must share their target rank")
        if self.b @ self.f != self.g @ self.a:
            raise InvariantViolation("square does not commute")

    @property
    def top_left(self) -> int:
        return self.f.cols

    @property
    def top_right(self) -> int:
        return self.f.rows

    @property
    def bottom_left(self) -> int:
        return self.a.rows

    @property
    def bottom_right(self) -> int:
        return self.b.rows

    @property
    def ranks(self) -> tuple[int, int, int, int]:
        return (self.top_left, self.top_right, self.bottom_left, self.bottom_right)


def square_to_chain(s: FpSquare) -> ChainObject:
    """Chain on the stacked corners: the middle rank is top_right +
    bottom_left, and evaluation is preserved."""
    ring = s.ring
    bl = s.bottom_left
    m1 = vstack(s.f, -s.a)
    m2 = block([
        [s.b, s.g],
        [Matrix.zeros(ring, bl, s.top_right), -Matrix.identity(ring, bl)],
    ])
    return ChainObject(ring, m1, m2)


def chain_to_square(x: ChainObject) -> FpSquare:
    """Square with top edge m1, bottom edge the identity on R^n3."""
    return FpSquare(x.ring, x.m1, x.m2 @ x.m1, x.m2, Matrix.identity(x.ring, x.n3))


def roundtrip_morphism(x: ChainObject) -> ChainMorphism:
    """Natural map x -> square_to_chain(chain_to_square(x)); an isomorphism."""
    ring = x.ring
    target = square_to_chain(chain_to_square(x))
    return ChainMorphism(
        x, target,
        Matrix.identity(ring, x.n1),
        vstack(Matrix.identity(ring, x.n2), -x.m2),
        vstack(Matrix.zeros(ring, x.n3, x.n3), Matrix.identity(ring, x.n3)),
    )


# -- evaluation on finitely presented modules ------------------------------


def evaluate_chain(x: ChainObject, m: FpModule) -> FpModule:
    """ker M(m2) / image of M(m1), a subquotient of M^n2, canonicalized."""
    if x.ring != m.ring:
        raise RingMismatch("chain and module over different rings")
    ring = x.ring
    rel = kron(Matrix.identity(ring, x.n2), m.relations)
    ker = kernel_of_action(x.m2, m).gens
    img = kron(x.m1, Matrix.identity(ring, m.ambient_rank))
    return present_quotient(hstack(ker, rel), hstack(img, rel))


def evaluate_square(s: FpSquare, m: FpModule) -> FpModule:
    """ker M(b) / f(ker M(a)), a subquotient of M^top_right, canonicalized."""
    if s.ring != m.ring:
        raise RingMismatch("square and module over different rings")
    ring = s.ring
    rel = kron(Matrix.identity(ring, s.top_right), m.relations)
    ker_b = kernel_of_action(s.b, m).gens
    pushed = kron(s.f, Matrix.identity(ring, m.ambient_rank)) @ kernel_of_action(s.a, m).gens
    return present_quotient(hstack(ker_b, rel), hstack(pushed, rel))


def evaluate(thing, m: FpModule) -> FpModule:
    if isinstance(thing, FpSquare):
        return evaluate_square(thing, m)
    if isinstance(thing, ChainObject):
        return evaluate_chain(thing, m)
    raise TypeError(f"cannot evaluate {type(thing).__name__}")


# -- finite test battery ---------------------------------------------------


def default_battery(ring: RingSpec) -> tuple[FpModule, ...]:
    """Small fixed list of probe modules used as a necessary condition for
    agreement of two objects; vanishing on the battery does not certify the
    zero object over Z."""
    if ring.is_modular:
        n = ring.modulus
        divisors = [d for d in range(2, n + 1) if n % d == 0]
        shapes = [[]]
        shapes += [[d] for d in divisors]
        shapes += [[d, n] for d in divisors if d < n]
    else:
        shapes = [[], [2], [2, 2], [3], [4], [6], [0], [2, 0]]
    return tuple(FpModule.from_invariant_factors(ring, s) for s in shapes)


def battery_profile(thing, battery: tuple[FpModule, ...] | None = None):
    """Tuple of invariant factor tuples of `thing` evaluated on each probe."""
    if battery is None:
        battery = default_battery(thing.ring)
    return tuple(evaluate(thing, m).invariant_factors for m in battery)


def battery_equivalent(x, y, battery: tuple[FpModule, ...] | None = None) -> bool:
    if x.ring != y.ring:
        raise RingMismatch("battery comparison over mixed rings")
    return battery_profile(x, battery) == battery_profile(y, battery)


def battery_vanishes(thing, battery: tuple[FpModule, ...] | None = None) -> bool:
    return all(not factors for factors in battery_profile(thing, battery))
