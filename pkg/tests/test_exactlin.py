import random
from fractions import Fraction
from math import prod

import pytest

from hqg.exactlin import (
    GF,
    QQ,
    LinMap,
    NotInvertibleError,
    Pipe,
    ShapeError,
    compose,
    decompose_index,
    invert,
    kron,
    maps_equal,
    rank,
    swap,
    transpose,
)


def rand_map(rng, field, dom, cod, density=0.7):
    rows = []
    for _ in range(prod(cod)):
        rows.append(
            [
                field.from_int(rng.randint(-4, 4)) if rng.random() < density else field.zero
                for _ in range(prod(dom))
            ]
        )
    return LinMap.from_rows(field, dom, cod, rows)


def test_scalar_normalisation():
    assert QQ.element("2/4") == Fraction(1, 2)
    assert QQ.element("-3") == Fraction(-3)
    x = QQ.element(Fraction(6, -4))
    assert x.denominator > 0 and x == Fraction(-3, 2)
    f5 = GF(5)
    assert f5.element(7) == f5.element(2)
    assert f5.element(3) / f5.element(2) == f5.element(4)
    assert not f5.element(10)


def test_prime_field_rejects_two_and_composites():
    with pytest.raises(ValueError):
        GF(2)
    with pytest.raises(ValueError):
        GF(9)


def test_identity_and_zero():
    i = LinMap.identity(QQ, (2, 3))
    assert i.dom == (2, 3) and i.cod == (2, 3)
    assert compose(i, i) == i
    z = LinMap.zero(QQ, (2,), (3,))
    assert all(not v for v in z.entries.flat)


def test_compose_shape_error_names_both_maps():
    f = LinMap.identity(QQ, (2,))
    g = LinMap.identity(QQ, (3,))
    with pytest.raises(ShapeError) as exc:
        compose(g, f)
    assert "2" in str(exc.value) and "3" in str(exc.value)


def test_compose_associative_random():
    rng = random.Random(7)
    for _ in range(20):
        f = rand_map(rng, QQ, (2,), (3,))
        g = rand_map(rng, QQ, (3,), (2,))
        h = rand_map(rng, QQ, (2,), (4,))
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_interchange_of_kron_and_compose():
    rng = random.Random(11)
    for _ in range(15):
        f1 = rand_map(rng, QQ, (2,), (2,))
        f2 = rand_map(rng, QQ, (3,), (2,))
        g1 = rand_map(rng, QQ, (3,), (2,))
        g2 = rand_map(rng, QQ, (2,), (3,))
        lhs = kron(compose(f1, g1), compose(f2, g2))
        rhs = compose(kron(f1, f2), kron(g1, g2))
        assert lhs == rhs


def test_kron_factor_lists_concatenate():
    f = LinMap.identity(QQ, (2,))
    g = LinMap.identity(QQ, (3, 4))
    assert kron(f, g).dom == (2, 3, 4)


def test_swap_is_permutation_and_natural():
    # exhaustive over small sizes: swap . (f (x) g) == (g (x) f) . swap
    rng = random.Random(3)
    for m, n in [(1, 1), (2, 3), (3, 2), (4, 4)]:
        s = swap(QQ, m, n)
        assert compose(swap(QQ, n, m), s) == LinMap.identity(QQ, (m, n))
        f = rand_map(rng, QQ, (m,), (m,))
        g = rand_map(rng, QQ, (n,), (n,))
        assert compose(s, kron(f, g)) == compose(kron(g, f), s)


def test_swap_on_basis_vectors():
    s = swap(QQ, 2, 3)
    for i in range(2):
        for j in range(3):
            out = s.apply_basis(i * 3 + j)
            assert out == {j * 2 + i: Fraction(1)}


def test_transpose_involutive_and_contravariant():
    rng = random.Random(5)
    f = rand_map(rng, QQ, (2, 2), (3,))
    g = rand_map(rng, QQ, (3,), (2,))
    assert transpose(transpose(f)) == f
    assert transpose(f).dom == (3,) and transpose(f).cod == (2, 2)
    assert transpose(compose(g, f)) == compose(transpose(f), transpose(g))


def test_invert_roundtrip_rational():
    rng = random.Random(13)
    found = 0
    while found < 10:
        f = rand_map(rng, QQ, (3,), (3,), density=0.9)
        try:
            g = invert(f)
        except NotInvertibleError:
            continue
        found += 1
        assert compose(f, g) == LinMap.identity(QQ, (3,))
        assert compose(g, f) == LinMap.identity(QQ, (3,))


def test_invert_reports_rank():
    f = LinMap.from_rows(QQ, (3,), (3,), [[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    with pytest.raises(NotInvertibleError) as exc:
        invert(f)
    assert exc.value.rank == 2
    assert rank(f) == 2


def test_invert_non_square_is_shape_error():
    with pytest.raises(ShapeError):
        invert(LinMap.zero(QQ, (2,), (3,)))


def test_invert_prime_field():
    f5 = GF(5)
    f = LinMap.from_rows(f5, (2,), (2,), [[1, 3], [2, 2]])
    assert compose(f, invert(f)) == LinMap.identity(f5, (2,))
    sing = LinMap.from_rows(f5, (2,), (2,), [[1, 3], [2, 1]])  # det = -5 = 0 in F_5
    with pytest.raises(NotInvertibleError) as exc:
        invert(sing)
    assert exc.value.rank == 1


def test_invert_entries_stay_exact():
    f = LinMap.from_rows(QQ, (2,), (2,), [["1/3", "1/7"], [0, "5/2"]])
    g = invert(f)
    assert all(isinstance(v, Fraction) for v in g.entries.flat)
    assert compose(g, f) == LinMap.identity(QQ, (2,))


def test_pipe_matches_dense_composition():
    rng = random.Random(17)
    for _ in range(10):
        f = rand_map(rng, QQ, (2,), (3,))
        g = rand_map(rng, QQ, (3,), (2,))
        h = rand_map(rng, QQ, (2, 2), (2,))
        dense = compose(h, kron(compose(g, f), g))
        lazy = Pipe(h, (compose(g, f), g))
        assert maps_equal(lazy, dense) is None
        assert lazy.to_linmap() == dense


def test_pipe_nested_factors():
    f = LinMap.from_rows(QQ, (2,), (2,), [[0, 1], [1, 0]])
    inner = Pipe(f, f)  # identity
    outer = Pipe((inner, f))
    assert outer.to_linmap() == kron(LinMap.identity(QQ, (2,)), f)


def test_pipe_stage_mismatch():
    f = LinMap.identity(QQ, (2,))
    with pytest.raises(ShapeError):
        Pipe(f, (f, f))


def test_maps_equal_witness_is_first_disagreement():
    i = LinMap.identity(QQ, (2, 2))
    f = LinMap.from_terms(
        QQ, (2, 2), (2, 2), {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): -1}
    )
    assert maps_equal(i, f) == 3
    assert decompose_index(3, (2, 2)) == (1, 1)


def test_reshape_preserves_entries():
    f = LinMap.identity(QQ, (6,))
    g = f.reshape(dom=(2, 3), cod=(3, 2))
    assert g.dom == (2, 3) and g.cod == (3, 2)
    assert maps_equal(f, g) is None
    with pytest.raises(ShapeError):
        f.reshape(dom=(4,))


def test_entries_read_only():
    f = LinMap.identity(QQ, (2,))
    with pytest.raises(ValueError):
        f.entries[0, 0] = Fraction(2)
