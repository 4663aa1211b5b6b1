import itertools

from hypothesis import given, settings, strategies as st

from equivalg.intlin import smith_form, solve_mod


def _mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _det(M):
    import sympy
    return sympy.Matrix(M).det()


mats = st.integers(1, 3).flatmap(lambda m: st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=60)
@given(mats)
def test_smith_form_is_diagonalisation(A):
    diag, U, V = smith_form(A)
    D = _mul(_mul(U, A), V)
    m, n = len(A), len(A[0])
    for i in range(m):
        for j in range(n):
            assert D[i][j] == (diag[i] if i == j else 0)
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    nz = [abs(d) for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_grading_relations_smith_form():
    diag, _, _ = smith_form([[4, -4, 0], [4, 0, -2]])
    assert sorted(abs(d) for d in diag) == [2, 4]


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=3),
       st.integers(2, 6), st.data())
def test_solve_mod_matches_enumeration(rows, N, data):
    rhs = [data.draw(st.integers(0, N - 1)) for _ in rows]
    brute = sorted(list(x) for x in itertools.product(range(N), repeat=2)
                   if all(sum(a * b for a, b in zip(r, x)) % N == c for r, c in zip(rows, rhs)))
    got = sorted(solve_mod(rows, rhs, N))
    assert got == brute
