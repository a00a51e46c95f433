"""Dual-route validation of the vectorized prime-field scan engine against
plain Python evaluation."""

import itertools
import random

import numpy as np
import pytest

from altalg import scan
from altalg.algebra import Algebra, evaluate_identity
from altalg.fields import PrimeField
from altalg.linalg import Matrix, rref
from altalg.operators import derivation_space
from altalg.quadratic import zorn


def random_sparse_algebra(p, dim, rng):
    F = PrimeField(p)
    table = {}
    for _ in range(rng.randint(2, 6)):
        i, j, k = (rng.randrange(dim) for _ in range(3))
        table.setdefault((i, j), [])
        if all(k != kk for kk, _ in table[(i, j)]):
            table[(i, j)].append((k, rng.randint(1, p - 1)))
    return Algebra(F, dim, table)


def brute_identity_holds(A, name, arity_nonbasis):
    # all argument tuples drawn from the whole algebra: the ground truth
    elements = list(A.elements())
    for args in itertools.product(elements, repeat=arity_nonbasis):
        if not A.is_zero_vec(evaluate_identity(A, name, args)):
            return False
    return True


@pytest.mark.parametrize("p", [2, 3])
def test_moufang_scan_matches_brute_force(p):
    rng = random.Random(p)
    for trial in range(6):
        A = random_sparse_algebra(p, 3, rng)
        brute = brute_identity_holds(A, "middle-moufang", 3)
        witness = scan.scan_middle_moufang(A)
        assert (witness is None) == brute, f"trial {trial}: {A.table}"
        if witness is not None:
            assert not A.is_zero_vec(
                evaluate_identity(A, "middle-moufang", witness))


@pytest.mark.parametrize("p", [2, 3])
def test_jordan_scan_matches_brute_force(p):
    rng = random.Random(10 + p)
    for trial in range(6):
        A = random_sparse_algebra(p, 3, rng)
        brute = brute_identity_holds(A, "jordan", 2)
        witness = scan.scan_jordan(A)
        assert (witness is None) == brute, f"trial {trial}: {A.table}"
        if witness is not None:
            assert not A.is_zero_vec(evaluate_identity(A, "jordan", witness))


def test_alternativity_scans_match_brute_force():
    rng = random.Random(99)
    for trial in range(6):
        A = random_sparse_algebra(2, 3, rng)
        for name, scanner in (("left-alternative", scan.scan_left_alternative),
                              ("right-alternative", scan.scan_right_alternative)):
            brute = brute_identity_holds(A, name, 2)
            witness = scanner(A)
            assert (witness is None) == brute
            if witness is not None:
                assert not A.is_zero_vec(evaluate_identity(A, name, witness))


def test_vector_blocks_match_itertools_product():
    for p, d in ((2, 4), (3, 3), (5, 2)):
        got = np.concatenate([blk for _, blk in scan.vector_blocks(p, d, block=7)])
        want = list(itertools.product(range(p), repeat=d))
        assert got.shape == (p ** d, d)
        assert [tuple(int(v) for v in row) for row in got] == want


def test_mulrows_matches_algebra_mul():
    for p in (2, 3, 5):
        A = zorn(PrimeField(p)).algebra
        rng = random.Random(p)
        X = np.array([[rng.randrange(p) for _ in range(8)] for _ in range(40)],
                     dtype=np.float64)
        Y = np.array([[rng.randrange(p) for _ in range(8)] for _ in range(40)],
                     dtype=np.float64)
        P = scan.mulrows(A, X, Y)
        for n in range(40):
            want = A.mul([int(v) for v in X[n]], [int(v) for v in Y[n]])
            assert [int(v) for v in P[n]] == want


def test_batched_rank_matches_exact_rank():
    for p in (2, 3, 5):
        F = PrimeField(p)
        rng = random.Random(p)
        mats = []
        for _ in range(60):
            mats.append([[rng.randrange(p) for _ in range(4)] for _ in range(4)])
        ranks = scan.batched_rank_mod_p(np.array(mats, dtype=np.int64), p)
        for m, r in zip(mats, ranks):
            _, want, _ = rref(Matrix(F, m, 4))
            assert int(r) == want


def test_find_invertible_combo_matches_exhaustive_python():
    # derivations of e^2 = f over GF(3): brute-force the 3^dim combinations
    from altalg.catalog import build

    A = build("trivial-nilpotent", field=PrimeField(3)).algebra
    D = derivation_space(A)
    flat = np.array([[int(a) for a in row] for row in D.space.rows],
                    dtype=np.int64)
    hit = scan.find_invertible_combo(flat, 3, 2)
    assert hit is not None
    coeffs, mat = hit
    assert Matrix(A.field, mat, 2).rank() == 2
    # the returned combination is the first full-rank one in product order
    first = None
    for combo in itertools.product(range(3), repeat=D.dim):
        m = [[0] * 2 for _ in range(2)]
        for c, row in zip(combo, D.space.rows):
            vec = [int(a) for a in row]
            for r in range(2):
                for s in range(2):
                    m[r][s] = (m[r][s] + c * vec[r * 2 + s]) % 3
        if Matrix(A.field, m, 2).rank() == 2:
            first = list(combo)
            break
    assert coeffs == first


def test_structure_tensor_rejects_non_prime_fields():
    from altalg.fields import RationalField

    with pytest.raises(ValueError):
        scan.structure_tensor(zorn(RationalField()).algebra)
