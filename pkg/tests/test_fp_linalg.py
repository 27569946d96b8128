import random

import pytest

from fermat_homology import fp_linalg as fl
from fermat_homology.cohomology import build_complex, lambda1_module
from fermat_homology.errors import ContainmentViolation, NotSquare
from fermat_homology.reference_tables import load_tables
from oracles import closure_rank


def random_matrix(rng, p, rows, cols):
    return fl.FpMatrix.from_rows(
        p, [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
    )


def test_kernel_of_zero_matrix_is_standard_basis():
    m = fl.FpMatrix.zeros(3, 9, 9)
    basis = fl.kernel_basis(m)
    assert basis == [
        tuple(1 if i == j else 0 for j in range(9)) for i in range(9)
    ]


def test_kernel_dimension_of_listed_s_matrix():
    s = load_tables().s_matrix()
    # independent oracle: rank by brute-force span enumeration
    assert closure_rank(3, s.entries) == 4
    assert len(fl.kernel_basis(s)) == 5


def test_kernel_of_degree_one_map_has_dimension_13():
    _, y, _ = build_complex(lambda1_module())
    assert len(fl.kernel_basis(y.transpose())) == 13


def test_image_of_identity():
    m = fl.FpMatrix.identity(3, 4)
    assert fl.image_basis(m) == [
        tuple(1 if i == j else 0 for j in range(4)) for i in range(4)
    ]


def test_image_of_degree_zero_map_has_dimension_4():
    x, _, _ = build_complex(lambda1_module())
    assert len(fl.image_basis(x.transpose())) == 4


def test_restricted_block_matrix_has_rank_one():
    s1 = load_tables().s1_matrix()
    x1 = fl.FpMatrix.from_rows(3, [list(row) + [0] * 4 for row in s1.entries])
    columns = list(zip(*x1.entries))
    assert closure_rank(3, columns) == 1
    assert len(fl.image_basis(x1)) == 1


def test_subquotient_trivial_when_kernel_equals_image():
    vectors = [(1, 0, 0), (0, 1, 0)]
    report = fl.subquotient(vectors, vectors, p=3, ambient_dim=3)
    assert report.coset_basis == ()
    assert report.kernel_dim == report.image_dim == 2


def test_subquotient_dimensions_of_the_complex():
    x, y, z = build_complex(lambda1_module())
    h1 = fl.subquotient(
        fl.kernel_basis(y.transpose()),
        fl.image_basis(x.transpose()),
        p=3,
        ambient_dim=18,
    )
    assert h1.dim == 9
    h2 = fl.subquotient(
        fl.kernel_basis(z.transpose()),
        fl.image_basis(y.transpose()),
        p=3,
        ambient_dim=27,
    )
    assert h2.dim == 13


def test_subquotient_rejects_non_contained_image():
    with pytest.raises(ContainmentViolation):
        fl.subquotient([(1, 0)], [(0, 1)], p=3, ambient_dim=2)


def test_subquotient_coset_vectors_independent_modulo_image():
    rng = random.Random(41)
    for _ in range(20):
        kernel = [tuple(rng.randrange(3) for _ in range(8)) for _ in range(5)]
        image = []
        for _ in range(3):
            combo = [0] * 8
            for v in kernel:
                c = rng.randrange(3)
                combo = [(a + c * b) % 3 for a, b in zip(combo, v)]
            image.append(tuple(combo))
        report = fl.subquotient(kernel, image, p=3, ambient_dim=8)
        assert report.dim == report.kernel_dim - report.image_dim
        joint = fl.row_space_basis(3, list(report.image_basis) + list(report.coset_basis))
        assert len(joint) == report.image_dim + report.dim


def test_rank_nullity_on_random_matrices():
    rng = random.Random(7)
    for p in (2, 3, 5):
        for _ in range(10):
            m = random_matrix(rng, p, rng.randrange(1, 7), rng.randrange(1, 7))
            assert len(fl.kernel_basis(m)) + fl.rank(m) == m.cols


def test_exterior_square_of_identity():
    assert fl.exterior_square(fl.FpMatrix.identity(3, 4)) == fl.FpMatrix.identity(3, 6)


def test_exterior_square_of_listed_s1_is_zero():
    assert fl.exterior_square(load_tables().s1_matrix()).is_zero()


def test_exterior_square_of_diagonal():
    m = fl.FpMatrix.from_rows(3, [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    expected = fl.FpMatrix.from_rows(
        3,
        [
            [2, 0, 0, 0, 0, 0],
            [0, 2, 0, 0, 0, 0],
            [0, 0, 2, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ],
    )
    assert fl.exterior_square(m) == expected


def test_exterior_square_is_multiplicative():
    rng = random.Random(11)
    for _ in range(10):
        a = random_matrix(rng, 3, 4, 4)
        b = random_matrix(rng, 3, 4, 4)
        assert fl.exterior_square(a @ b) == fl.exterior_square(a) @ fl.exterior_square(b)


def test_exterior_square_requires_square():
    with pytest.raises(NotSquare):
        fl.exterior_square(fl.FpMatrix.zeros(3, 2, 3))


def test_solve_round_trip():
    rng = random.Random(13)
    for _ in range(20):
        m = random_matrix(rng, 5, rng.randrange(1, 6), rng.randrange(1, 6))
        x = [rng.randrange(5) for _ in range(m.cols)]
        b = tuple(sum(m.entries[i][j] * x[j] for j in range(m.cols)) % 5 for i in range(m.rows))
        sol = fl.solve(m, b)
        assert sol is not None
        check = tuple(
            sum(m.entries[i][j] * sol[j] for j in range(m.cols)) % 5 for i in range(m.rows)
        )
        assert check == b
    assert fl.solve(fl.FpMatrix.zeros(3, 2, 2), (1, 0)) is None


def test_results_are_deterministic():
    s = load_tables().s_matrix()
    assert fl.kernel_basis(s) == fl.kernel_basis(s)
    assert fl.image_basis(s) == fl.image_basis(s)


def test_matrix_json_round_trip():
    s = load_tables().s_matrix()
    assert fl.FpMatrix.from_json(s.to_json()) == s
