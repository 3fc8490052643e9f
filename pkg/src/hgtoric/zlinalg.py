"""Exact integer and modular linear algebra.

Everything here works on plain lists of Python ints (arbitrary precision).
Matrices are small (at most ~13 columns), so the algorithms favour
determinism and clarity over asymptotics: Hermite/Smith forms use classic
row/column reduction with explicit unimodular tracking, pivots chosen by
smallest absolute value then lowest index.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

IntMatrix = list[list[int]]


class LinalgError(ValueError):
    pass


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(a) -> IntMatrix:
    return [list(row) for row in a]


def transpose(a) -> IntMatrix:
    return [list(col) for col in zip(*a)]


def matmul(a, b) -> IntMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def det(a) -> int:
    """Signed determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise LinalgError("determinant of a non-square matrix")
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _addmul_row(m, dst, src, c):
    row_s = m[src]
    row_d = m[dst]
    for k in range(len(row_d)):
        row_d[k] += c * row_s[k]


def _negate_row(m, i):
    m[i] = [-x for x in m[i]]


@dataclass
class HermiteResult:
    H: IntMatrix
    U: IntMatrix  # unimodular, U @ A == H


def hnf(a) -> HermiteResult:
    """Row-style Hermite normal form H = U*A.

    H is in row echelon form with positive pivots and the entries above each
    pivot reduced into [0, pivot). Pivot selection: smallest absolute value,
    then lowest row index.
    """
    h = copy_matrix(a)
    nrows = len(h)
    ncols = len(h[0]) if nrows else 0
    u = identity(nrows)
    pr = 0
    for col in range(ncols):
        if pr >= nrows:
            break
        while True:
            nz = [i for i in range(pr, nrows) if h[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][col]), i))
            if i0 != pr:
                _swap_rows(h, pr, i0)
                _swap_rows(u, pr, i0)
            if h[pr][col] < 0:
                _negate_row(h, pr)
                _negate_row(u, pr)
            clean = True
            for i in range(pr + 1, nrows):
                if h[i][col] != 0:
                    q = h[i][col] // h[pr][col]
                    _addmul_row(h, i, pr, -q)
                    _addmul_row(u, i, pr, -q)
                    if h[i][col] != 0:
                        clean = False
            if clean:
                break
        if h[pr][col] != 0:
            for i in range(pr):
                q = h[i][col] // h[pr][col]
                if q:
                    _addmul_row(h, i, pr, -q)
                    _addmul_row(u, i, pr, -q)
            pr += 1
    return HermiteResult(h, u)


@dataclass
class SmithResult:
    S: IntMatrix
    U: IntMatrix  # U @ A @ V == S
    V: IntMatrix

    def invariant_factors(self) -> list[int]:
        n = min(len(self.S), len(self.S[0]) if self.S else 0)
        return [self.S[i][i] for i in range(n)]


def snf(a) -> SmithResult:
    """Smith normal form S = U*A*V with the divisibility chain d1 | d2 | ..."""
    s = copy_matrix(a)
    nrows = len(s)
    ncols = len(s[0]) if nrows else 0
    u = identity(nrows)
    v = identity(ncols)

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_col(dst, src, c):
        for row in s:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_col(i):
        for row in s:
            row[i] = -row[i]
        for row in v:
            row[i] = -row[i]

    t = 0
    while t < min(nrows, ncols):
        nz = [(i, j) for i in range(t, nrows) for j in range(t, ncols) if s[i][j] != 0]
        if not nz:
            break
        i0, j0 = min(nz, key=lambda ij: (abs(s[ij[0]][ij[1]]), ij[0], ij[1]))
        if i0 != t:
            _swap_rows(s, t, i0)
            _swap_rows(u, t, i0)
        if j0 != t:
            swap_cols(t, j0)
        while True:
            progress = False
            for i in range(t + 1, nrows):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    _addmul_row(s, i, t, -q)
                    _addmul_row(u, i, t, -q)
                    if s[i][t] != 0:  # remainder smaller than pivot: swap up
                        _swap_rows(s, t, i)
                        _swap_rows(u, t, i)
                        progress = True
            for j in range(t + 1, ncols):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    addmul_col(j, t, -q)
                    if s[t][j] != 0:
                        swap_cols(t, j)
                        progress = True
            if not progress:
                break
        if s[t][t] < 0:
            negate_col(t)
        # divisibility: pivot must divide every remaining entry
        bad = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if s[i][j] % s[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            _addmul_row(s, t, bad, 1)
            _addmul_row(u, t, bad, 1)
            continue
        t += 1
    return SmithResult(s, u, v)


def inverse_unimodular(u) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(u)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(u)]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[col])]
    out = [[x for x in row[n:]] for row in m]
    if any(x.denominator != 1 for row in out for x in row):
        raise LinalgError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def integer_kernel(a) -> list[list[int]]:
    """Basis of the saturated integer kernel {x : A x = 0}.

    Rows of the unimodular transform of hnf(A^T) that map to zero rows of the
    echelon form span the full integer kernel.
    """
    at = transpose(a)
    res = hnf(at)
    out = []
    for hrow, urow in zip(res.H, res.U):
        if all(x == 0 for x in hrow):
            out.append(list(urow))
    return out


def solve_integer(a, b) -> list[int]:
    """One integer solution x of A x = b, via Smith form; raises if none."""
    res = snf(a)
    rhs = matvec(res.U, b)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    y = [0] * ncols
    for i in range(nrows):
        d = res.S[i][i] if i < min(nrows, ncols) else 0
        if d == 0:
            if rhs[i] != 0:
                raise LinalgError("no integer solution")
        else:
            if rhs[i] % d != 0:
                raise LinalgError("no integer solution")
            y[i] = rhs[i] // d
    return matvec(res.V, y)


def gcd_list(vals) -> int:
    g = 0
    for x in vals:
        g = gcd(g, x)
    return g


def gale_vector(m) -> list[int]:
    """Primitive generator of the rank-1 kernel of the stacked matrix M.

    M must be (d+1) x (d+2) with an all-ones first row and rank d+1. The sign
    is normalized so the first nonzero entry is negative.
    """
    nrows = len(m)
    ncols = len(m[0])
    if ncols != nrows + 1:
        raise LinalgError(f"expected (d+1) x (d+2) matrix, got {nrows} x {ncols}")
    if any(x != 1 for x in m[0]):
        raise LinalgError("first row of M must be all ones")
    ker = integer_kernel(m)
    if len(ker) != 1:
        raise LinalgError(
            "exponent vectors lie in an affine hyperplane (rank(M) < d+1)")
    g = ker[0]
    if gcd_list(g) != 1:
        raise LinalgError("kernel generator is not primitive")  # pragma: no cover
    first = next(x for x in g if x != 0)
    if first > 0:
        g = [-x for x in g]
    return g


def kernel_basis_with_ones(gamma) -> list[list[int]]:
    """Z-basis rows (f_0, f_1, ..., f_d) of {x : gamma.x = 0} with f_0 all ones.

    The all-ones vector is primitive in the saturated kernel (sum gamma_j = 0),
    so its coordinate vector in any kernel basis has gcd 1 and can be completed
    to a unimodular change of basis sending it to the first basis row.
    """
    n = len(gamma)
    if sum(gamma) != 0:
        raise LinalgError("gamma does not sum to zero")
    basis = integer_kernel([list(gamma)])
    coords = solve_integer(transpose(basis), [1] * n)
    res = hnf([[c] for c in coords])  # U @ coords^T = e_1 (gcd of coords is 1)
    if res.H[0][0] != 1:
        raise LinalgError("all-ones vector is not primitive in the kernel")
    L = transpose(inverse_unimodular(res.U))  # first row of L is coords
    out = matmul(L, basis)
    assert out[0] == [1] * n
    return out


def solve_rho(f) -> list[list[int]]:
    """Vectors rho_1..rho_d with F rho_k^T = e_{k+1} for basis rows F.

    F is the (d+1) x (d+2) stack (1, f_1, ..., f_d); its columns span Z^(d+1),
    so every system is solvable.
    """
    nrows = len(f)
    rhos = []
    for k in range(1, nrows):
        e = [int(i == k) for i in range(nrows)]
        rhos.append(solve_integer(f, e))
    return rhos


def modular_nullspace(nmat, n: int) -> list[tuple[int, ...]]:
    """All lambda in (Z/nZ)^d with sum_i lambda_i N_{ik} = 0 mod n for all k.

    nmat must be nonsingular over Q. Solutions come from the Smith form of
    N^T: their count is the product of gcd(s_i, n) over invariant factors s_i.
    """
    d = len(nmat)
    if n < 1:
        raise LinalgError("modulus must be >= 1")
    res = snf(transpose(nmat))
    factors = res.invariant_factors()
    if len(factors) < d or any(s == 0 for s in factors):
        raise LinalgError("covering matrix is singular")
    gs = [gcd(s, n) for s in factors]
    sols = []
    idx = [0] * d
    while True:
        y = [idx[i] * (n // gs[i]) for i in range(d)]
        lam = tuple(x % n for x in matvec(res.V, y))
        sols.append(lam)
        for i in reversed(range(d)):
            idx[i] += 1
            if idx[i] < gs[i]:
                break
            idx[i] = 0
        else:
            break
    assert len(sols) == prod(gs)
    return sols
