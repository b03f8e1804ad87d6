"""Exact divisor-class arithmetic on polarized surface lattices.

The surfaces that carry the case analysis: blowups of the plane at k <= 6
general points (anticanonically embedded del Pezzo surfaces), the smooth
quadric P^1 x P^1, the cubic scroll (blowup of the plane at one point), and
a rank-2 sextic K3 lattice.  Each is modelled by its integer Gram matrix, a
canonical class vector and named basis elements; divisor classes are integer
coefficient vectors.  Intersection numbers, adjunction, line enumeration,
positivity grades, vanishing certificates and section counts are all exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterable, Optional


class LatticeError(ValueError):
    """Malformed class or unsupported surface for the requested operation."""


class CertificateError(LatticeError):
    """A section count was requested for a class with no positivity certificate."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficient vector in the basis of a surface lattice."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise LatticeError("cannot add classes of different rank")
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coeffs) != len(other.coeffs):
            raise LatticeError("cannot subtract classes of different rank")
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, m: int) -> "DivisorClass":
        return DivisorClass(tuple(m * a for a in self.coeffs))


@dataclass(frozen=True)
class SurfaceModel:
    """A polarized integer lattice: Gram matrix, canonical vector, basis names.

    ``kind`` is one of ``del_pezzo`` (blowup of the plane at k points,
    2 <= k <= 6), ``quadric`` (P^1 x P^1), ``scroll`` (blowup at one point,
    embedded by twice a line minus the exceptional curve) or ``polarized``
    (explicit Gram data).  ``kind_tag`` separates rational surfaces from K3s,
    which changes which Riemann-Roch conventions apply.
    """

    kind: str
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]
    basis_names: tuple[str, ...]
    kind_tag: str = "rational"

    def __post_init__(self) -> None:
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise LatticeError("Gram matrix must be square")
        if len(self.canonical) != n or len(self.basis_names) != n:
            raise LatticeError("canonical vector and basis must match the Gram rank")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")
        if self.kind_tag not in ("rational", "k3"):
            raise LatticeError(f"unknown kind tag {self.kind_tag!r}")
        if self.kind_tag == "k3" and any(c != 0 for c in self.canonical):
            raise LatticeError("a K3 lattice has trivial canonical class")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def blowup_points(self) -> int:
        if self.kind != "del_pezzo":
            raise LatticeError("blowup_points is only defined for del Pezzo models")
        return self.rank - 1

    @classmethod
    def del_pezzo(cls, k: int) -> "SurfaceModel":
        """Blowup of the plane at k general points, 2 <= k <= 6.

        Basis L, E1..Ek with Gram diag(1, -1, ..., -1) and canonical class
        -3L + E1 + ... + Ek.  Anticanonically embedded these are the del
        Pezzo surfaces of degree 9 - k.
        """
        if not 2 <= k <= 6:
            raise LatticeError(f"del Pezzo blowup needs 2 <= k <= 6, got {k}")
        n = k + 1
        gram = tuple(
            tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n))
            for i in range(n)
        )
        canonical = (-3,) + (1,) * k
        names = ("L",) + tuple(f"E{i}" for i in range(1, k + 1))
        return cls("del_pezzo", gram, canonical, names)

    @classmethod
    def quadric(cls) -> "SurfaceModel":
        """P^1 x P^1 with the two rulings A, B; classes are bidegrees (a, b)."""
        return cls("quadric", ((0, 1), (1, 0)), (-2, -2), ("A", "B"))

    @classmethod
    def scroll(cls) -> "SurfaceModel":
        """The cubic scroll lattice: blowup of the plane at one point.

        Basis (L, E) with Gram diag(1, -1); the embedding class 2L - E is
        data on this lattice, not part of the model.
        """
        return cls("scroll", ((1, 0), (0, -1)), (-3, 1), ("L", "E"))

    @classmethod
    def polarized(
        cls,
        gram: Iterable[Iterable[int]],
        canonical: Iterable[int],
        basis_names: Iterable[str],
        kind_tag: str = "rational",
    ) -> "SurfaceModel":
        """A general polarized lattice from explicit Gram data."""
        g = tuple(tuple(int(x) for x in row) for row in gram)
        return cls("polarized", g, tuple(int(c) for c in canonical), tuple(basis_names), kind_tag)

    def cls_(self, *coeffs: int) -> DivisorClass:
        """Build a class on this surface, checking the rank."""
        if len(coeffs) != self.rank:
            raise LatticeError(
                f"expected {self.rank} coefficients, got {len(coeffs)}"
            )
        return DivisorClass(tuple(coeffs))

    def canonical_class(self) -> DivisorClass:
        return DivisorClass(self.canonical)


@dataclass(frozen=True)
class Positivity:
    """Numeric positivity grades of a divisor class."""

    nef: bool
    big: bool
    ample: bool


@dataclass(frozen=True)
class K3Stats:
    """Genus, polarized degree and section count of a curve class on a K3."""

    genus: int
    degree: int
    h0: int


def _check_class(S: SurfaceModel, c: DivisorClass) -> None:
    if len(c.coeffs) != S.rank:
        raise LatticeError(
            f"class of rank {len(c.coeffs)} on a lattice of rank {S.rank}"
        )


def intersect(S: SurfaceModel, a: DivisorClass, b: DivisorClass) -> int:
    """Gram-bilinear intersection pairing a . b."""
    _check_class(S, a)
    _check_class(S, b)
    return sum(
        a.coeffs[i] * S.gram[i][j] * b.coeffs[j]
        for i in range(S.rank)
        for j in range(S.rank)
    )


def adjunction_genus(S: SurfaceModel, C: DivisorClass) -> int:
    """Arithmetic genus 1 + (C^2 + C.K)/2 of a curve class."""
    _check_class(S, C)
    k = S.canonical_class()
    total = intersect(S, C, C) + intersect(S, C, k)
    if total % 2 != 0:
        raise LatticeError(f"malformed class: C^2 + C.K = {total} is odd")
    return 1 + total // 2


def anticanonical_degree(S: SurfaceModel, C: DivisorClass) -> int:
    """Degree -K.C of the class in the anticanonical embedding."""
    if S.kind_tag != "rational":
        raise LatticeError("anticanonical degree is for rational surfaces; use the polarization on a K3")
    _check_class(S, C)
    return -intersect(S, C, S.canonical_class())


@lru_cache(maxsize=None)
def _lines_for_blowup(k: int) -> frozenset[tuple[int, ...]]:
    # Exhaustive bounded search for c with c^2 = -1 and c.K = -1 on the
    # blowup at k points, c = a L + sum b_i E_i.  The constraints read
    # a^2 - sum b_i^2 = -1 and 3a + sum b_i = 1.  Cauchy-Schwarz gives
    # (1 - 3a)^2 <= k (a^2 + 1), which for k <= 6 forces 0 <= a <= 3, and
    # each |b_i| <= isqrt(a^2 + 1).
    found = set()
    for a in range(0, 4):
        bound = isqrt(a * a + 1)
        for bs in itertools.product(range(-bound, bound + 1), repeat=k):
            if a * a - sum(b * b for b in bs) != -1:
                continue
            if 3 * a + sum(bs) != 1:
                continue
            found.add((a,) + bs)
    return frozenset(found)


def enumerate_lines(S: SurfaceModel) -> frozenset[DivisorClass]:
    """All line classes c (c^2 = -1, c.K = -1) on a del Pezzo blowup.

    Cardinalities are 3, 6, 10, 16, 27 for k = 2..6; classically these are
    the E_i, the L - E_i - E_j, and for k >= 5 the conics 2L through five
    of the points.
    """
    if S.kind != "del_pezzo":
        raise LatticeError("line enumeration is defined on del Pezzo blowups only")
    return frozenset(DivisorClass(v) for v in _lines_for_blowup(S.blowup_points))


def positivity(S: SurfaceModel, C: DivisorClass) -> Positivity:
    """Nef / big / ample grades of C.

    On a del Pezzo blowup with 2 <= k <= 6 the effective cone is generated
    by the lines, so nef means nonnegative against every line and ample
    means positive against every line with C^2 > 0.  On the quadric the
    grades read off the bidegree.  Other kinds are rejected rather than
    guessed (the scroll's cone involves the square-zero fiber class).
    """
    _check_class(S, C)
    if S.kind == "del_pezzo":
        products = [intersect(S, C, line) for line in enumerate_lines(S)]
        nef = all(p >= 0 for p in products)
        square = intersect(S, C, C)
        return Positivity(
            nef=nef,
            big=nef and square > 0,
            ample=all(p > 0 for p in products) and square > 0,
        )
    if S.kind == "quadric":
        a, b = C.coeffs
        nef = a >= 0 and b >= 0
        return Positivity(nef=nef, big=nef and a > 0 and b > 0, ample=a > 0 and b > 0)
    raise LatticeError(f"positivity is not supported on kind {S.kind!r}")


def kv_vanishing_certificate(S: SurfaceModel, B: DivisorClass) -> bool:
    """Higher-cohomology vanishing certificate for B: is B - K nef and big?

    This is the Kawamata-Viehweg criterion; the Kodaira (ample) case is
    subsumed, so sites that only need Kodaira still certify.
    """
    shifted = B - S.canonical_class()
    pos = positivity(S, shifted)
    return pos.nef and pos.big


def riemann_roch_chi(S: SurfaceModel, C: DivisorClass) -> int:
    """chi(O_S(C)) = 1 + (C^2 - C.K)/2 on a rational surface lattice."""
    if S.kind_tag != "rational":
        raise LatticeError("this Riemann-Roch form assumes a rational surface")
    _check_class(S, C)
    k = S.canonical_class()
    total = intersect(S, C, C) - intersect(S, C, k)
    if total % 2 != 0:
        raise LatticeError(f"malformed class: C^2 - C.K = {total} is odd")
    return 1 + total // 2


def _peel_fixed_lines(
    S: SurfaceModel, C: DivisorClass
) -> Optional[tuple[DivisorClass, list[DivisorClass]]]:
    # Strip distinct pairwise-disjoint lines that meet the class negatively:
    # such a line is in the base locus, and removing it does not change h^0.
    # Only the conservative pattern the case analysis needs is accepted: the
    # peeled lines must be mutually disjoint and end up orthogonal to the
    # remaining nef part, so they contribute no sections at all.
    lines = sorted(enumerate_lines(S), key=lambda l: l.coeffs)
    peeled: list[DivisorClass] = []
    current = C
    while True:
        negative = [
            l for l in lines if l not in peeled and intersect(S, current, l) < 0
        ]
        if not negative:
            break
        line = negative[0]
        if any(intersect(S, line, other) != 0 for other in peeled):
            return None
        current = current - line
        peeled.append(line)
    if not peeled:
        return None
    if not positivity(S, current).nef:
        return None
    if any(intersect(S, current, l) != 0 for l in peeled):
        return None
    return current, peeled


def h0_rational(S: SurfaceModel, C: DivisorClass) -> int:
    """Section count of O_S(C), computed only under a certificate.

    For a nef class on a del Pezzo blowup or the quadric the higher
    cohomology vanishes and h^0 = chi = 1 + (C^2 - C.K)/2.  A class that is
    a nef class plus disjoint fixed lines counts the nef part only.  Any
    class outside those certificates is refused, never estimated.
    """
    _check_class(S, C)
    if S.kind == "quadric":
        a, b = C.coeffs
        if a >= 0 and b >= 0:
            return (a + 1) * (b + 1)
        raise CertificateError(f"no certificate for bidegree ({a}, {b})")
    if S.kind == "del_pezzo":
        if positivity(S, C).nef:
            return riemann_roch_chi(S, C)
        peeled = _peel_fixed_lines(S, C)
        if peeled is not None:
            nef_part, _ = peeled
            return riemann_roch_chi(S, nef_part)
        raise CertificateError(
            f"no positivity certificate for class {C.coeffs} on this blowup"
        )
    raise LatticeError(f"h0 is not supported on kind {S.kind!r}")


def _bpf_generators(S: SurfaceModel) -> list[DivisorClass]:
    # The fixed generator set of evidently basepoint-free classes: the
    # anticanonical class, a line L, the pencils L - E_i, and the conics
    # 2L - (four distinct E's).
    k = S.blowup_points
    if k not in (5, 6):
        raise LatticeError("basepoint-free decomposition is set up for k = 5, 6")
    gens = [-S.canonical_class(), S.cls_(1, *([0] * k))]
    for i in range(k):
        coeffs = [1] + [0] * k
        coeffs[1 + i] = -1
        gens.append(DivisorClass(tuple(coeffs)))
    for combo in itertools.combinations(range(k), 4):
        coeffs = [2] + [0] * k
        for i in combo:
            coeffs[1 + i] = -1
        gens.append(DivisorClass(tuple(coeffs)))
    return gens


def bpf_decompose(
    S: SurfaceModel, C: DivisorClass
) -> Optional[list[DivisorClass]]:
    """Write C as a nonnegative sum of evidently basepoint-free generators.

    Returns the generator list (with repetition) or None when the exhaustive
    search finds no decomposition; failure is a value, not a fault.
    """
    _check_class(S, C)
    generators = _bpf_generators(S)

    def search(idx: int, remaining: tuple[int, ...]) -> Optional[list[DivisorClass]]:
        if all(c == 0 for c in remaining):
            return []
        if idx == len(generators):
            return None
        if remaining[0] < 0 or any(c > 0 for c in remaining[1:]):
            return None
        gen = generators[idx]
        max_mult = remaining[0] // gen.coeffs[0]
        for mult in range(max_mult, -1, -1):
            rest = tuple(r - mult * gc for r, gc in zip(remaining, gen.coeffs))
            tail = search(idx + 1, rest)
            if tail is not None:
                return [gen] * mult + tail
        return None

    return search(0, C.coeffs)


def k3_stats(S: SurfaceModel, C: DivisorClass, H: DivisorClass) -> K3Stats:
    """Genus, degree and section count of an irreducible curve class on a K3.

    genus = 1 + C^2/2, degree = C.H against the polarization, and
    h^0(O_S(C)) = 1 + genus; irreducibility of C is the caller's assertion.
    """
    if S.kind_tag != "k3":
        raise LatticeError("k3_stats needs a K3 lattice")
    _check_class(S, C)
    _check_class(S, H)
    square = intersect(S, C, C)
    if square % 2 != 0:
        raise LatticeError(f"malformed class: C^2 = {square} is odd on an even lattice")
    genus = 1 + square // 2
    return K3Stats(genus=genus, degree=intersect(S, C, H), h0=1 + genus)


def restricted_degree(
    S: SurfaceModel, C: DivisorClass, B: DivisorClass, point_shift: int
) -> int:
    """Degree on C of B restricted and twisted by a signed sum of points."""
    return intersect(S, C, B) + point_shift


def format_class(S: SurfaceModel, C: DivisorClass) -> str:
    """Render a class in its basis, e.g. ``5L - 2E1 - E2``."""
    _check_class(S, C)
    parts: list[str] = []
    for coeff, name in zip(C.coeffs, S.basis_names):
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        term = name if magnitude == 1 else f"{magnitude}{name}"
        if not parts:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"
