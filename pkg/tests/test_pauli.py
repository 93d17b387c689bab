"""Canonical-form Pauli algebra, checked against the dense matrix oracle."""

from __future__ import annotations

import numpy as np
import pytest

from helpers import random_pauli
from quditstab import (
    DimensionMismatch,
    IndexOutOfRange,
    PauliProduct,
    PauliSyntaxError,
    commutation_phase,
    commutes,
    format_pauli,
    identity,
    multiply,
    order,
    parse_pauli,
    pauli_to_dense,
    power,
    single_x,
    single_z,
)

SMALL_SPACES = [(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3)]


def test_canonical_reduction_and_immutability():
    p = PauliProduct(4, 2, 7, np.array([5, -1]), np.array([4, 9]))
    assert p.phase == 3
    assert p.xvec.tolist() == [1, 3]
    assert p.zvec.tolist() == [0, 1]
    with pytest.raises(AttributeError):
        p.phase = 0
    with pytest.raises(ValueError):
        p.xvec[0] = 2  # backing arrays are frozen


def test_equality_and_hash():
    a = PauliProduct(3, 2, 1, np.array([1, 0]), np.array([0, 2]))
    b = parse_pauli("w X1 Z2^2", 3, 2)
    assert a == b
    assert hash(a) == hash(b)
    assert a != PauliProduct(3, 2, 2, np.array([1, 0]), np.array([0, 2]))
    assert a != PauliProduct(6, 2, 1, np.array([1, 0]), np.array([0, 2]))


def test_zx_reordering_phase():
    # ZX = w^(D-1) XZ in canonical form
    for D in (2, 3, 4, 5, 12):
        p = multiply(single_z(D, 1, 0), single_x(D, 1, 0))
        assert p.phase == (D - 1) % D
        assert p.xvec.tolist() == [1]
        assert p.zvec.tolist() == [1]


def test_xz_squared_qubit():
    # (XZ)^2 = w I for D = 2, so XZ has order 4
    p = multiply(single_x(2, 1, 0), single_z(2, 1, 0))
    sq = multiply(p, p)
    assert sq == PauliProduct(2, 1, 1)
    assert order(p) == 4


def test_multiply_matches_dense_oracle():
    rng = np.random.default_rng(7)
    for D, n in SMALL_SPACES:
        if D**n > 36:
            continue
        for _ in range(40):
            p, q = random_pauli(rng, D, n), random_pauli(rng, D, n)
            got = pauli_to_dense(multiply(p, q))
            want = pauli_to_dense(p) @ pauli_to_dense(q)
            assert np.max(np.abs(got - want)) < 1e-9


def test_multiply_associative_exact():
    rng = np.random.default_rng(8)
    for D, n in [(4, 3), (6, 2), (12, 2), (9, 3)]:
        for _ in range(60):
            p, q, r = (random_pauli(rng, D, n) for _ in range(3))
            assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))


def test_commutation_phase_matches_dense():
    rng = np.random.default_rng(9)
    for D, n in SMALL_SPACES:
        if D**n > 36:
            continue
        for _ in range(30):
            p, q = random_pauli(rng, D, n), random_pauli(rng, D, n)
            lam = commutation_phase(p, q)
            lhs = pauli_to_dense(p) @ pauli_to_dense(q)
            rhs = np.exp(2j * np.pi * lam / D) * pauli_to_dense(q) @ pauli_to_dense(p)
            assert np.max(np.abs(lhs - rhs)) < 1e-9
            assert commutes(p, q) == (lam == 0)


def test_power_matches_repeated_multiply():
    rng = np.random.default_rng(10)
    for D, n in [(2, 2), (3, 2), (6, 1), (12, 2)]:
        for _ in range(25):
            p = random_pauli(rng, D, n)
            acc = identity(D, n)
            for m in range(2 * D + 2):
                assert power(p, m) == acc
                acc = multiply(acc, p)
    with pytest.raises(ValueError):
        power(single_x(3, 1, 0), -1)


def test_order_matches_dense():
    rng = np.random.default_rng(11)
    for D in (2, 3, 4, 6):
        for _ in range(25):
            p = random_pauli(rng, D, 1)
            t = order(p)
            U = pauli_to_dense(p)
            acc = np.eye(D, dtype=complex)
            for s in range(1, t + 1):
                acc = acc @ U
                if s < t:
                    assert np.max(np.abs(acc - np.eye(D))) > 1e-9
            assert np.max(np.abs(acc - np.eye(D))) < 1e-9
            assert t <= D * D


def test_order_divides_phase_times_vector_order():
    rng = np.random.default_rng(12)
    for D in (4, 6, 9, 12):
        for _ in range(40):
            p = random_pauli(rng, D, 2)
            assert power(p, order(p)).is_identity()


def test_mismatched_spaces_raise():
    with pytest.raises(DimensionMismatch):
        multiply(single_x(2, 1, 0), single_x(3, 1, 0))
    with pytest.raises(DimensionMismatch):
        commutation_phase(single_x(2, 1, 0), single_x(2, 2, 0))


def test_parse_examples():
    p = parse_pauli("w^2 X1^3 Z2^2", 4, 2)
    assert (p.phase, p.xvec.tolist(), p.zvec.tolist()) == (2, [3, 0], [0, 2])
    assert parse_pauli("I", 5, 3) == identity(5, 3)
    assert parse_pauli("w", 3, 1) == PauliProduct(3, 1, 1)
    assert parse_pauli("w^-1", 3, 1) == PauliProduct(3, 1, 2)
    # exponents reduce mod D, including negatives
    assert parse_pauli("X1^-1", 5, 1) == single_x(5, 1, 0, 4)
    assert parse_pauli("X1 I Z1", 3, 1) == multiply(single_x(3, 1, 0), single_z(3, 1, 0))


def test_parse_noncanonical_order_picks_up_phase():
    # "Z1 X1" multiplies left to right, so it reorders into w^(D-1) X1 Z1
    p = parse_pauli("Z1 X1", 5, 1)
    assert p.phase == 4
    assert format_pauli(p) == "w^4 X1 Z1"


def test_parse_errors_carry_position():
    with pytest.raises(PauliSyntaxError) as ei:
        parse_pauli("X1 Q2", 3, 2)
    assert ei.value.position == 3
    with pytest.raises(PauliSyntaxError) as ei:
        parse_pauli("X1 w^2", 3, 2)
    assert ei.value.position == 3
    with pytest.raises(PauliSyntaxError):
        parse_pauli("", 3, 2)
    with pytest.raises(PauliSyntaxError):
        parse_pauli("X1^", 3, 2)
    with pytest.raises(PauliSyntaxError):
        parse_pauli("X0x1", 3, 2)
    with pytest.raises(IndexOutOfRange):
        parse_pauli("X3", 3, 2)
    with pytest.raises(IndexOutOfRange):
        parse_pauli("Z0", 3, 2)


def test_format_canonical_forms():
    assert format_pauli(identity(7, 2)) == "I"
    assert format_pauli(PauliProduct(7, 2, 3)) == "w^3 I"
    p = PauliProduct(4, 3, 2, np.array([3, 0, 1]), np.array([0, 2, 1]))
    assert format_pauli(p) == "w^2 X1^3 Z2^2 X3 Z3"


def test_parse_format_round_trip_random():
    rng = np.random.default_rng(13)
    for D, n in [(2, 1), (3, 2), (4, 2), (6, 3), (12, 4), (97, 2)]:
        for _ in range(50):
            p = random_pauli(rng, D, n)
            assert parse_pauli(format_pauli(p), D, n) == p
