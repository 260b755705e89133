"""The plane lattice of integer points on a*x + b*y + c*z = 0.

A triangle-admitting plane is one whose primitive normal (a, b, c) satisfies
a^2 + b^2 + c^2 = 3*d^2 for an integer d.  This module builds the standard
integer generators of that plane lattice, a two-vector basis (u, tau), and
exact coordinates of lattice points in that basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmath import Vec3, extended_gcd, gcd_nonneg, sqrt_exact


@dataclass(frozen=True, slots=True)
class Triple:
    """Primitive normal (a, b, c) in canonical order with its radius d.

    Invariants: 0 < a <= b <= c, gcd(a, b, c) = 1, a^2 + b^2 + c^2 = 3*d^2.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if not (0 < self.a <= self.b <= self.c):
            raise ValueError(f"triple {self.abc()} not in canonical order 0 < a <= b <= c")
        if gcd_nonneg(gcd_nonneg(self.a, self.b), self.c) != 1:
            raise ValueError(f"triple {self.abc()} is not primitive")
        if self.a**2 + self.b**2 + self.c**2 != 3 * self.d**2:
            raise ValueError(f"triple {self.abc()} does not satisfy a^2+b^2+c^2 = 3*{self.d}^2")

    @classmethod
    def from_abc(cls, a: int, b: int, c: int) -> "Triple":
        """Canonicalize (a, b, c) and derive d; error if no valid d exists."""
        a, b, c = sorted((abs(a), abs(b), abs(c)))
        n = a * a + b * b + c * c
        if n % 3 != 0:
            raise ValueError(f"({a},{b},{c}): a^2+b^2+c^2 = {n} is not 3 times a square")
        d = sqrt_exact(n // 3)
        if d is None:
            raise ValueError(f"({a},{b},{c}): a^2+b^2+c^2 = {n} is not 3 times a square")
        return cls(a, b, c, d)

    def abc(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def normal(self) -> Vec3:
        return Vec3(self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class GeneratorSet:
    """The three standard generators of the plane lattice.

    u = (-b, a, 0)/gcd(a,b),  v = (-c, 0, a)/gcd(a,c),  w = (0, -c, b)/gcd(b,c),
    plus the Bezout pair (k, l) with k*a + l*b = gcd(a, b) and k minimal positive.
    """

    u: Vec3
    v: Vec3
    w: Vec3
    omega: int
    bezout_k: int
    bezout_l: int


@dataclass(frozen=True, slots=True)
class BasisPair:
    """A two-vector integer basis (u, tau) of the plane lattice."""

    u: Vec3
    tau: Vec3


def generators(t: Triple) -> GeneratorSet:
    """Standard generators of the lattice of integer points on the plane."""
    a, b, c = t.a, t.b, t.c
    omega = gcd_nonneg(a, b)
    u = Vec3(-b // omega, a // omega, 0)
    gac = gcd_nonneg(a, c)
    v = Vec3(-c // gac, 0, a // gac)
    gbc = gcd_nonneg(b, c)
    w = Vec3(0, -c // gbc, b // gbc)
    _, k0, _ = extended_gcd(a, b)
    # all Bezout k differ by multiples of b/omega; pick the least positive one
    step = b // omega
    k = k0 % step
    if k == 0:
        k = step
    l = (omega - k * a) // b
    assert k * a + l * b == omega
    return GeneratorSet(u=u, v=v, w=w, omega=omega, bezout_k=k, bezout_l=l)


def tau_vector(t: Triple, gens: GeneratorSet | None = None) -> Vec3:
    """Second basis vector: tau = gcd(a,c)*k*v + gcd(b,c)*l*w.

    Together with u this spans the whole plane lattice.
    """
    if gens is None:
        gens = generators(t)
    gac = gcd_nonneg(t.a, t.c)
    gbc = gcd_nonneg(t.b, t.c)
    return gens.v * (gac * gens.bezout_k) + gens.w * (gbc * gens.bezout_l)


def plane_basis(t: Triple) -> BasisPair:
    """Build the (u, tau) basis for the triple's plane lattice."""
    gens = generators(t)
    return BasisPair(u=gens.u, tau=tau_vector(t, gens))


def membership(p: Vec3, t: Triple) -> bool:
    """Whether the integer point p lies on the plane a*x + b*y + c*z = 0."""
    return p.dot(t.normal()) == 0


def solve_in_plane(target: Vec3, b1: Vec3, b2: Vec3, normal: Vec3) -> tuple[int, int] | None:
    """Exact integer (x, y) with target = x*b1 + y*b2, or None.

    Works for any independent pair b1, b2 spanning the plane orthogonal to
    normal.  Divisions are checked for exactness and the recomposition is
    verified, so a non-member can never produce a bogus answer.
    """
    den = b1.cross(b2).dot(normal)
    if den == 0:
        raise ValueError("not a valid generator pair")
    x_num = target.cross(b2).dot(normal)
    y_num = b1.cross(target).dot(normal)
    if x_num % den != 0 or y_num % den != 0:
        return None
    x, y = x_num // den, y_num // den
    if b1 * x + b2 * y != target:
        return None
    return (x, y)


def coordinates_in_basis(p: Vec3, basis: BasisPair, t: Triple) -> tuple[int, int] | None:
    """Exact (i, j) with p = i*u + j*tau, or None when p is not in the lattice."""
    if not membership(p, t):
        return None
    return solve_in_plane(p, basis.u, basis.tau, t.normal())
