import pytest
from hypothesis import assume, given, strategies as st

from stanleyverify import (
    DomainError,
    ParameterError,
    Partition,
    Tiling,
    enumerate_partitions,
    map_F,
    map_G,
    map_Q,
    map_S,
    map_T,
    map_Z,
    measure_exponent,
    partition_from_tiling,
    tiling_from_partition,
)


def T(d):
    return Tiling.from_mapping(d)


@pytest.mark.parametrize(
    "parts, stacks, exponent",
    [((), {}, 0), ((3, 1, 1), {3: 1, 1: 2}, 5), ((2, 2, 2), {2: 3}, 6)],
)
def test_tiling_from_partition(parts, stacks, exponent):
    t = tiling_from_partition(Partition(parts))
    assert t.as_dict() == stacks
    assert measure_exponent(t) == exponent


@pytest.mark.parametrize(
    "stacks, parts", [({}, ()), ({3: 1, 1: 2}, (3, 1, 1)), ({5: 2}, (5, 5))]
)
def test_partition_from_tiling(stacks, parts):
    assert partition_from_tiling(T(stacks)).parts == parts


@pytest.mark.parametrize("stacks, exponent", [({}, 0), ({2: 3}, 6), ({4: 1, 1: 3}, 7)])
def test_measure_exponent(stacks, exponent):
    assert measure_exponent(T(stacks)) == exponent


def test_round_trip_and_measure_up_to_20():
    for n in range(21):
        for p in enumerate_partitions(n):
            t = tiling_from_partition(p)
            assert partition_from_tiling(t) == p
            assert tiling_from_partition(partition_from_tiling(t)) == t
            assert measure_exponent(t) == p.weight


def test_tiling_rejects_position_zero_and_drops_empty_stacks():
    with pytest.raises(ParameterError):
        T({0: 1})
    with pytest.raises(ParameterError):
        T({2: -1})
    assert T({3: 0, 2: 1}).stacks == ((2, 1),)


@pytest.mark.parametrize(
    "src, r, k, i, dst",
    [
        ({1: 3}, 1, 3, 1, {1: 1, 3: 1}),
        ({2: 4}, 2, 4, 2, {2: 2, 4: 2}),
        ({1: 2, 5: 1}, 1, 2, 1, {1: 1, 2: 1, 5: 1}),
    ],
)
def test_map_T_and_S_examples(src, r, k, i, dst):
    u = map_T(T(src), r, k, i)
    assert u == T(dst)
    assert measure_exponent(u) - measure_exponent(T(src)) == i * r
    assert map_S(u, r, k, i) == T(src)


def test_map_T_S_errors():
    with pytest.raises(ParameterError):
        map_S(T({3: 3}), 3, 3, 1)
    with pytest.raises(ParameterError):
        map_T(T({1: 5}), 1, 3, 3)
    with pytest.raises(DomainError):
        map_T(T({1: 1}), 1, 3, 1)
    with pytest.raises(DomainError):
        map_S(T({3: 1}), 2, 3, 1)


@pytest.mark.parametrize(
    "src, r, i, dst", [({2: 3}, 2, 3, {3: 2}), ({1: 5}, 1, 5, {5: 1}), ({4: 2}, 4, 2, {2: 4})]
)
def test_map_Q_examples(src, r, i, dst):
    u = map_Q(T(src), r, i)
    assert u == T(dst)
    assert measure_exponent(u) == measure_exponent(T(src))
    assert map_Z(u, r, i) == T(src)


def test_map_Q_domain():
    with pytest.raises(DomainError):
        map_Q(T({2: 2}), 2, 3)


@pytest.mark.parametrize(
    "src, r, k, j, dst",
    [
        ({2: 1}, 2, 3, 2, {3: 2}),
        ({1: 1, 4: 1}, 1, 2, 1, {2: 1, 4: 1}),
        ({3: 2}, 3, 5, 1, {3: 1, 5: 1}),
    ],
)
def test_map_F_examples(src, r, k, j, dst):
    u = map_F(T(src), r, k, j)
    assert u == T(dst)
    assert measure_exponent(u) - measure_exponent(T(src)) == k * j - r
    assert map_G(u, r, k, j) == T(src)


@pytest.mark.parametrize(
    "src, r, k, j, dst",
    [({3: 2}, 2, 3, 2, {2: 1}), ({2: 1, 4: 1}, 1, 2, 1, {1: 1, 4: 1}), ({5: 1}, 4, 5, 1, {4: 1})],
)
def test_map_G_examples(src, r, k, j, dst):
    assert map_G(T(src), r, k, j) == T(dst)


def test_map_F_negative_delta_is_allowed():
    u = map_F(T({5: 1}), 5, 1, 2)
    assert u == T({1: 2})
    assert measure_exponent(u) - 5 == 1 * 2 - 5


def test_map_F_G_domain():
    with pytest.raises(DomainError):
        map_F(T({2: 1}), 1, 2, 1)
    with pytest.raises(DomainError):
        map_G(T({2: 1}), 1, 2, 2)


tilings = st.dictionaries(st.integers(1, 9), st.integers(1, 5), max_size=5).map(T)
pos = st.integers(1, 9)


@given(tilings, pos, st.integers(2, 9), st.data())
def test_T_S_inverse(t, r, k, data):
    i = data.draw(st.integers(1, k - 1))
    assume(r != k)
    if t.height(r) >= k - i:
        u = map_T(t, r, k, i)
        assert map_S(u, r, k, i) == t
        assert measure_exponent(u) - measure_exponent(t) == i * r
    if t.height(k) >= r:
        assert map_T(map_S(t, r, k, i), r, k, i) == t


@given(tilings, pos, pos)
def test_Q_Z_inverse(t, r, i):
    if t.height(r) >= i:
        u = map_Q(t, r, i)
        assert map_Z(u, r, i) == t
        assert measure_exponent(u) == measure_exponent(t)
    if t.height(i) >= r:
        assert map_Q(map_Z(t, r, i), r, i) == t


@given(tilings, pos, pos, st.integers(1, 5))
def test_F_G_inverse(t, r, k, j):
    if t.height(r) >= 1:
        u = map_F(t, r, k, j)
        assert map_G(u, r, k, j) == t
        assert measure_exponent(u) - measure_exponent(t) == k * j - r
    if t.height(k) >= j:
        assert map_F(map_G(t, r, k, j), r, k, j) == t
