"""Cohomology of the Grassmannian of lines G(1, n) on two-row partitions.

Classes sigma_{a,b} with n-1 >= a >= b >= 0 span the Chow ring of G(1, n);
multiplication is generated by the special classes sigma_p through the
horizontal-strip Pieri rule, with general products reduced to Pieri steps by
the two-row determinantal identity sigma_{a,b} = sigma_a sigma_b -
sigma_{a+1} sigma_{b-1}.  This is just enough calculus to evaluate the
incidence counts the classification needs, and the module is its own oracle:
no multiplication table is hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass


class SchubertError(ValueError):
    """Invalid partition, twist or ambient mismatch."""


def _check_partition(n: int, a: int, b: int) -> None:
    if not (n - 1 >= a >= b >= 0):
        raise SchubertError(f"({a}, {b}) is not a two-row partition for G(1, {n})")


@dataclass(frozen=True)
class SchubertCycle:
    """An integer combination of two-row Schubert classes in G(1, n).

    Terms map partitions (a, b) to nonzero integer coefficients; zero
    coefficients are dropped on construction.
    """

    ambient_n: int
    terms: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self) -> None:
        if self.ambient_n < 2:
            raise SchubertError(f"ambient n must be >= 2, got {self.ambient_n}")
        cleaned = {}
        for (a, b), coeff in self.terms:
            _check_partition(self.ambient_n, a, b)
            if coeff:
                cleaned[(a, b)] = cleaned.get((a, b), 0) + coeff
        normalized = tuple(
            sorted(((part, coeff) for part, coeff in cleaned.items() if coeff))
        )
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def from_dict(cls, n: int, terms: dict[tuple[int, int], int]) -> "SchubertCycle":
        return cls(n, tuple(terms.items()))

    @classmethod
    def zero(cls, n: int) -> "SchubertCycle":
        return cls(n, ())

    @classmethod
    def identity(cls, n: int) -> "SchubertCycle":
        return cls.from_dict(n, {(0, 0): 1})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def coefficient(self, a: int, b: int) -> int:
        return self.as_dict().get((a, b), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SchubertCycle") -> "SchubertCycle":
        if self.ambient_n != other.ambient_n:
            raise SchubertError("ambient mismatch")
        merged = self.as_dict()
        for part, coeff in other.terms:
            merged[part] = merged.get(part, 0) + coeff
        return SchubertCycle.from_dict(self.ambient_n, merged)

    def __mul__(self, other: "SchubertCycle") -> "SchubertCycle":
        return multiply(self, other)


def sigma(n: int, a: int, b: int = 0) -> SchubertCycle:
    """The Schubert class sigma_{a,b} in G(1, n)."""
    _check_partition(n, a, b)
    return SchubertCycle.from_dict(n, {(a, b): 1})


def _pieri_partition(n: int, p: int, a: int, b: int) -> list[tuple[int, int]]:
    # Horizontal strips of size p on (a, b): results (a', b') with
    # a' + b' = a + b + p and a' >= a >= b' >= b, capped by a' <= n - 1.
    out = []
    for b2 in range(b, a + 1):
        a2 = a + b + p - b2
        if a2 < a or a2 > n - 1 or a2 < b2:
            continue
        out.append((a2, b2))
    return out


def _pieri_raw(p: int, c: SchubertCycle) -> SchubertCycle:
    # Internal Pieri operator with the ring conventions: p = 0 is the
    # identity and sigma_p = 0 once p exceeds n - 1.
    n = c.ambient_n
    if p == 0:
        return c
    if p > n - 1:
        return SchubertCycle.zero(n)
    result: dict[tuple[int, int], int] = {}
    for (a, b), coeff in c.terms:
        for part in _pieri_partition(n, p, a, b):
            result[part] = result.get(part, 0) + coeff
    return SchubertCycle.from_dict(n, result)


def pieri(n: int, p: int, c: SchubertCycle) -> SchubertCycle:
    """Multiply c by the special class sigma_p via the horizontal-strip rule."""
    if c.ambient_n != n:
        raise SchubertError("ambient mismatch")
    if not 1 <= p <= n - 1:
        raise SchubertError(f"special class index must satisfy 1 <= p <= {n - 1}, got {p}")
    return _pieri_raw(p, c)


def multiply(c1: SchubertCycle, c2: SchubertCycle) -> SchubertCycle:
    """Bilinear product of cycles; associative and commutative.

    Each sigma_{a,b} factor is expanded as sigma_a sigma_b -
    sigma_{a+1} sigma_{b-1} and evaluated through Pieri steps.
    """
    if c1.ambient_n != c2.ambient_n:
        raise SchubertError("ambient mismatch")
    n = c1.ambient_n
    total = SchubertCycle.zero(n)
    for (a, b), coeff in c2.terms:
        if b == 0:
            partial = _pieri_raw(a, c1)
        else:
            partial = _pieri_raw(b, _pieri_raw(a, c1))
            correction = _pieri_raw(b - 1, _pieri_raw(a + 1, c1))
            partial = partial + SchubertCycle.from_dict(
                n, {part: -k for part, k in correction.terms}
            )
        total = total + SchubertCycle.from_dict(
            n, {part: coeff * k for part, k in partial.terms}
        )
    return total


def top_degree(c: SchubertCycle) -> int:
    """Coefficient of the point class sigma_{n-1,n-1}."""
    n = c.ambient_n
    return c.coefficient(n - 1, n - 1)


def format_cycle(c: SchubertCycle) -> str:
    """Render a cycle as ``s[3,1] + s[2,2]``; the zero cycle prints ``0``."""
    if c.is_zero():
        return "0"
    parts = []
    for (a, b), coeff in sorted(c.terms, reverse=True):
        if (a, b) == (0, 0):
            name = "1"
        elif b == 0:
            name = f"s[{a}]"
        else:
            name = f"s[{a},{b}]"
        if coeff == 1 and name != "1":
            body = name
        elif name == "1":
            body = str(abs(coeff)) if abs(coeff) != 1 else "1"
        else:
            body = f"{abs(coeff)} {name}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)
