import random

import pytest

from gensect.schubert import (
    SchubertCycle,
    SchubertError,
    format_cycle,
    multiply,
    pieri,
    sigma,
    top_degree,
)


def all_partitions(n):
    return [(a, b) for a in range(n) for b in range(a + 1)]


def test_pieri_basic():
    # sigma_1^2 in G(1,3): two ways to add one box
    got = pieri(3, 1, sigma(3, 1))
    assert got.as_dict() == {(2, 0): 1, (1, 1): 1}


def test_pieri_column_obstruction():
    # both added boxes would share a column with the full second row
    assert pieri(4, 2, sigma(4, 2, 2)).is_zero()


def test_pieri_unique_strip():
    assert pieri(4, 2, sigma(4, 3, 1)).as_dict() == {(3, 3): 1}


def test_pieri_validation():
    with pytest.raises(SchubertError):
        pieri(4, 0, sigma(4, 1))
    with pytest.raises(SchubertError):
        pieri(4, 4, sigma(4, 1))
    with pytest.raises(SchubertError):
        pieri(3, 1, sigma(4, 1))


def test_multiply_examples():
    got = multiply(sigma(4, 2), sigma(4, 2))
    assert got.as_dict() == {(3, 1): 1, (2, 2): 1}
    # identity acts trivially
    c = multiply(sigma(4, 2), sigma(4, 1, 1))
    assert multiply(SchubertCycle.identity(4), c).as_dict() == c.as_dict()
    # lines in the planes of a pencil
    assert multiply(sigma(3, 1, 1), sigma(3, 1, 1)).as_dict() == {(2, 2): 1}


def test_multiply_ambient_mismatch():
    with pytest.raises(SchubertError):
        multiply(sigma(3, 1), sigma(4, 1))


def test_top_degree_examples():
    s2 = sigma(4, 2)
    cube = multiply(multiply(s2, s2), s2)
    assert cube.as_dict() == {(3, 3): 1}
    assert top_degree(cube) == 1
    s1 = sigma(3, 1)
    fourth = multiply(multiply(multiply(s1, s1), s1), s1)
    assert top_degree(fourth) == 2
    assert top_degree(s1) == 0


def test_grading():
    rng = random.Random(3)
    for n in range(3, 7):
        parts = all_partitions(n)
        for _ in range(20):
            (a1, b1), (a2, b2) = rng.choice(parts), rng.choice(parts)
            product = multiply(sigma(n, a1, b1), sigma(n, a2, b2))
            degree = a1 + b1 + a2 + b2
            for (a, b), coeff in product.terms:
                assert a + b == degree
                assert coeff > 0


def test_commutativity_and_associativity():
    rng = random.Random(5)
    for n in range(3, 7):
        parts = all_partitions(n)
        for _ in range(12):
            x = sigma(n, *rng.choice(parts))
            y = sigma(n, *rng.choice(parts))
            z = sigma(n, *rng.choice(parts))
            assert multiply(x, y).as_dict() == multiply(y, x).as_dict()
            left = multiply(multiply(x, y), z)
            right = multiply(x, multiply(y, z))
            assert left.as_dict() == right.as_dict()


def test_duality_pairing():
    for n in range(2, 7):
        for a, b in all_partitions(n):
            dual = sigma(n, n - 1 - b, n - 1 - a)
            assert top_degree(multiply(sigma(n, a, b), dual)) == 1


def test_partition_validation():
    with pytest.raises(SchubertError):
        sigma(4, 4)
    with pytest.raises(SchubertError):
        sigma(4, 1, 2)
    with pytest.raises(SchubertError):
        sigma(4, 1, -1)


def test_format_cycle():
    assert format_cycle(multiply(sigma(4, 2), sigma(4, 2))) == "s[3,1] + s[2,2]"
    assert format_cycle(SchubertCycle.zero(4)) == "0"
    assert format_cycle(SchubertCycle.identity(4)) == "1"
    s1 = sigma(3, 1)
    assert format_cycle(multiply(multiply(s1, s1), s1)) == "2 s[2,1]"
