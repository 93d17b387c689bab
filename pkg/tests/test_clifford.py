"""Gate catalog: conjugation vs dense oracle, column-op pairing, serialization."""

from __future__ import annotations

import numpy as np
import pytest

from helpers import random_gate, random_pauli, random_valid_presentation
from quditstab import (
    ElementaryOp,
    GateOp,
    IndexOutOfRange,
    NotAUnit,
    OracleTooLarge,
    UnrealizableOp,
    add_cols,
    add_rows,
    apply_elementary,
    cnot,
    column_op_to_gates,
    conjugate_pauli,
    conjugate_presentation,
    cphase,
    format_gate,
    format_gates,
    fourier,
    from_generators,
    gate_to_dense,
    group_order,
    identity,
    inverse,
    is_valid,
    mult,
    multiply,
    parse_gate,
    parse_gates,
    parse_pauli,
    pauli_to_dense,
    scale_col,
    single_x,
    single_z,
    swap,
    swap_cols,
)


def test_gateop_validation():
    with pytest.raises(ValueError):
        GateOp("H", 1)
    with pytest.raises(IndexOutOfRange):
        fourier(0)
    with pytest.raises(IndexOutOfRange):
        cnot(2, 2)
    with pytest.raises(ValueError):
        GateOp("F", 1, b=2)
    with pytest.raises(ValueError):
        GateOp("F", 1, q=2)
    with pytest.raises(ValueError):
        mult(None, 1)
    with pytest.raises(ValueError):
        GateOp("SWAP", 1, 2, m=3)
    with pytest.raises(ValueError):
        cnot(1, 2, 0)


def test_gate_out_of_register_or_bad_unit():
    p = identity(4, 2)
    with pytest.raises(IndexOutOfRange):
        conjugate_pauli(fourier(3), p)
    with pytest.raises(NotAUnit):
        conjugate_pauli(mult(2, 1), p)


def test_fourier_images_symbolic():
    for D in (2, 3, 4, 6, 9):
        X, Z = single_x(D, 1, 0), single_z(D, 1, 0)
        assert conjugate_pauli(fourier(1), X) == single_z(D, 1, 0, D - 1)
        assert conjugate_pauli(fourier(1), Z) == X
        # four Fourier conjugations come back to the start
        p = parse_pauli("w^1 X1 Z1^2", D, 1) if D > 2 else parse_pauli("w X1 Z1", 2, 1)
        q = p
        for _ in range(4):
            q = conjugate_pauli(fourier(1), q)
        assert q == p


def test_mult_images_symbolic():
    for D in (2, 3, 4, 5, 6, 9, 12):
        for q in range(1, D):
            if np.gcd(q, D) != 1:
                continue
            X, Z = single_x(D, 1, 0), single_z(D, 1, 0)
            assert conjugate_pauli(mult(q, 1), X) == single_x(D, 1, 0, inverse(q, D))
            assert conjugate_pauli(mult(q, 1), Z) == single_z(D, 1, 0, q)


def test_cnot_images_symbolic():
    for D in (2, 3, 4, 6):
        for m in range(1, D):
            g = cnot(1, 2, m)
            xa = conjugate_pauli(g, single_x(D, 2, 0))
            assert xa.phase == 0
            assert xa.xvec.tolist() == [1, (D - m) % D] and not xa.zvec.any()
            xb = conjugate_pauli(g, single_x(D, 2, 1))
            assert xb == single_x(D, 2, 1)
            za = conjugate_pauli(g, single_z(D, 2, 0))
            assert za == single_z(D, 2, 0)
            zb = conjugate_pauli(g, single_z(D, 2, 1))
            assert zb.phase == 0
            assert zb.zvec.tolist() == [m, 1] and not zb.xvec.any()


def test_conjugation_frozen_value():
    # F on w^3 X^2 Z^3 over D=4 gives w^1 X^3 Z^2
    p = parse_pauli("w^3 X1^2 Z1^3", 4, 1)
    img = conjugate_pauli(fourier(1), p)
    assert img == parse_pauli("w X1^3 Z1^2", 4, 1)


def test_conjugation_matches_dense_oracle():
    rng = np.random.default_rng(40)
    for D in (2, 3, 4, 5, 6):
        for _ in range(30):
            n = 2
            p = random_pauli(rng, D, n)
            g = random_gate(rng, D, n)
            U = gate_to_dense(g, D, n)
            got = pauli_to_dense(conjugate_pauli(g, p))
            want = U @ pauli_to_dense(p) @ U.conj().T
            assert np.max(np.abs(got - want)) < 1e-9


def test_conjugation_is_group_automorphism():
    rng = np.random.default_rng(41)
    for D in (2, 3, 4, 6, 12):
        for _ in range(40):
            n = 3
            p, q = random_pauli(rng, D, n), random_pauli(rng, D, n)
            g = random_gate(rng, D, n)
            lhs = conjugate_pauli(g, multiply(p, q))
            rhs = multiply(conjugate_pauli(g, p), conjugate_pauli(g, q))
            assert lhs == rhs


def test_conjugate_presentation_preserves_validity_and_order():
    rng = np.random.default_rng(42)
    for D in (2, 3, 4, 6):
        for _ in range(10):
            S = random_valid_presentation(rng, D, 2)
            gates = [random_gate(rng, D, 2) for _ in range(5)]
            T = conjugate_presentation(gates, S)
            assert is_valid(T).valid
            assert group_order(T) == group_order(S)


def test_column_op_pairing_on_blocks():
    # an X-side op acts on the X block exactly as the matrix op; same for Z
    rng = np.random.default_rng(43)
    for D in (2, 3, 4, 6, 12):
        for _ in range(20):
            n = 3
            S = random_valid_presentation(rng, D, n)
            which = rng.integers(3)
            xside = bool(rng.integers(2))
            off = 0 if xside else n
            i, j = rng.choice(n, size=2, replace=False)
            if which == 0:
                op = swap_cols(int(i) + off, int(j) + off)
            elif which == 1:
                units = [u for u in range(1, D) if np.gcd(u, D) == 1]
                op = scale_col(int(i) + off, int(rng.choice(units)))
            else:
                op = add_cols(int(i) + off, int(j) + off, int(rng.integers(1, D)))
            gate = column_op_to_gates(op, n, D)
            T = conjugate_presentation([gate], S)
            if xside:
                assert np.array_equal(T.xblock, apply_elementary(op, S.xblock, D))
            else:
                shifted = ElementaryOp(op.kind, op.i - n, None if op.j is None else op.j - n, op.m)
                assert np.array_equal(T.zblock, apply_elementary(shifted, S.zblock, D))


def test_column_op_unrealizable_cases():
    with pytest.raises(UnrealizableOp):
        column_op_to_gates(swap_cols(0, 2), 2, 3)  # X col with Z col
    with pytest.raises(UnrealizableOp):
        column_op_to_gates(add_cols(0, 3, 1), 2, 3)
    with pytest.raises(UnrealizableOp):
        column_op_to_gates(add_cols(0, 1, 3), 2, 3)  # multiplier 0 mod D
    with pytest.raises(UnrealizableOp):
        column_op_to_gates(add_rows(0, 1, 1), 2, 3)
    with pytest.raises(NotAUnit):
        column_op_to_gates(scale_col(0, 2), 2, 4)


def test_column_op_gate_choices():
    assert column_op_to_gates(swap_cols(0, 1), 3, 5) == swap(1, 2)
    assert column_op_to_gates(swap_cols(3, 4), 3, 5) == swap(1, 2)
    assert column_op_to_gates(scale_col(1, 3), 3, 5) == mult(2, 2)  # X side: S(3^-1)
    assert column_op_to_gates(scale_col(4, 3), 3, 5) == mult(3, 2)  # Z side: S(3)
    assert column_op_to_gates(add_cols(1, 0, 3), 3, 5) == cnot(1, 2, 2)
    assert column_op_to_gates(add_cols(4, 3, 3), 3, 5) == cnot(2, 1, 3)


def test_gate_serialization_round_trip():
    rng = np.random.default_rng(44)
    gates = [fourier(2), mult(5, 1), cnot(1, 3, 4), swap(2, 3), cphase(3, 1)]
    for _ in range(40):
        gates.append(random_gate(rng, 12, 4))
    text = format_gates(gates)
    assert parse_gates(text) == gates
    assert parse_gate("CNOT(1,2)") == cnot(1, 2, 1)
    assert parse_gates("# comment\n\nF(1)\n  SWAP(1,2)  \n") == [fourier(1), swap(1, 2)]
    with pytest.raises(ValueError):
        parse_gate("H(1)")
    with pytest.raises(ValueError):
        parse_gate("F(1) extra")
    with pytest.raises(IndexOutOfRange):
        parse_gate("CNOT(1,1)")


def test_gate_to_dense_unitary_and_bounds():
    rng = np.random.default_rng(45)
    for D in (2, 3, 4, 6):
        for _ in range(10):
            g = random_gate(rng, D, 2)
            U = gate_to_dense(g, D, 2)
            assert np.max(np.abs(U @ U.conj().T - np.eye(D * D))) < 1e-12
    with pytest.raises(OracleTooLarge):
        gate_to_dense(fourier(1), 7, 4)


def test_swap_dense_is_permutation():
    for D in (2, 3):
        U = gate_to_dense(swap(1, 2), D, 2)
        for j in range(D):
            for k in range(D):
                v = np.zeros(D * D)
                v[j * D + k] = 1
                w = U @ v
                assert abs(w[k * D + j] - 1) < 1e-12
