"""Small dense linear algebra over both scalar backends, plus root finding.

Exact routines run Gaussian elimination over the Gaussian rationals with no
rounding, so rank decisions are proofs for the given matrix.  Approximate
routines use fully pivoted elimination with rank decided at a threshold
relative to the matrix max-magnitude.
"""

from __future__ import annotations

import cmath

import numpy as np

from .scalars import EPS_DEFAULT, QQi, Scalar, is_exact

Matrix = list[list[Scalar]]
Vector = list[Scalar]


def matrix_is_exact(rows: Matrix) -> bool:
    return all(is_exact(v) for row in rows for v in row)


def identity(n: int, exact: bool = True) -> Matrix:
    one, zero = (QQi(1), QQi(0)) if exact else (1 + 0j, 0j)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_vec(rows: Matrix, v: Vector) -> Vector:
    return [sum((row[j] * v[j] for j in range(1, len(v))), row[0] * v[0])
            for row in rows]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((row[k] * col[k] for k in range(1, len(col))), row[0] * col[0])
             for col in bt] for row in a]


# -- exact elimination --------------------------------------------------------


def exact_rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns, exact arithmetic."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = QQi(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [m[i][j] - f * m[r][j] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def exact_rank(rows: Matrix) -> int:
    return len(exact_rref(rows)[1])


def exact_kernel(rows: Matrix, ncols: int | None = None) -> list[Vector]:
    """Kernel basis, each vector scaled so its first nonzero entry is 1."""
    if not rows:
        n = ncols or 0
        return [[QQi(1) if j == k else QQi(0) for j in range(n)] for k in range(n)]
    n = len(rows[0])
    rref, pivots = exact_rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [QQi(0)] * n
        v[f] = QQi(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        lead = next(x for x in v if x)
        basis.append([x / lead for x in v])
    return basis


def exact_solve(rows: Matrix, rhs: Vector) -> Vector | None:
    """One exact solution of A x = b (free variables 0), or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    rref, pivots = exact_rref(aug)
    if n in pivots:
        return None
    x = [QQi(0)] * n
    for r, c in enumerate(pivots):
        x[c] = rref[r][n]
    return x


def exact_det(rows: Matrix) -> QQi:
    m = [list(r) for r in rows]
    n = len(m)
    det = QQi(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return QQi(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det = det * m[c][c]
        inv = QQi(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [m[i][j] - f * m[c][j] for j in range(n)]
    return det


def exact_inverse(rows: Matrix) -> Matrix | None:
    n = len(rows)
    aug = [list(rows[i]) + identity(n)[i] for i in range(n)]
    rref, pivots = exact_rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in rref]


# -- approximate elimination --------------------------------------------------


def _max_magnitude(rows) -> float:
    return max((abs(complex(v)) for row in rows for v in row), default=0.0)


def approx_echelon(rows: Matrix, eps: float = EPS_DEFAULT):
    """Fully pivoted elimination; returns (matrix, column permutation, rank)."""
    m = [[complex(v) for v in row] for row in rows]
    nrows, ncols = len(m), len(m[0]) if rows else 0
    thresh = eps * max(_max_magnitude(m), 1e-300)
    cols = list(range(ncols))
    r = 0
    for k in range(min(nrows, ncols)):
        best, bi, bj = 0.0, -1, -1
        for i in range(k, nrows):
            for j in range(k, ncols):
                a = abs(m[i][j])
                if a > best:
                    best, bi, bj = a, i, j
        if best <= thresh:
            break
        m[k], m[bi] = m[bi], m[k]
        if bj != k:
            for row in m:
                row[k], row[bj] = row[bj], row[k]
            cols[k], cols[bj] = cols[bj], cols[k]
        for i in range(k + 1, nrows):
            f = m[i][k] / m[k][k]
            m[i][k] = 0.0
            for j in range(k + 1, ncols):
                m[i][j] -= f * m[k][j]
        r += 1
    return m, cols, r


def approx_rank(rows: Matrix, eps: float = EPS_DEFAULT) -> int:
    return approx_echelon(rows, eps)[2]


def approx_kernel(rows: Matrix, eps: float = EPS_DEFAULT) -> list[Vector]:
    m, cols, r = approx_echelon(rows, eps)
    ncols = len(cols)
    basis = []
    for f in range(r, ncols):
        vp = [0j] * ncols
        vp[f] = 1.0 + 0j
        for i in range(r - 1, -1, -1):
            s = sum(m[i][j] * vp[j] for j in range(i + 1, ncols))
            vp[i] = -(s + 0j) / m[i][i]
        v = [0j] * ncols
        for i, c in enumerate(cols):
            v[c] = vp[i]
        mag = max(abs(x) for x in v)
        lead = next(x for x in v if abs(x) > eps * mag)
        basis.append([x / lead for x in v])
    return basis


def approx_solve(rows: Matrix, rhs: Vector, eps: float = EPS_DEFAULT) -> Vector | None:
    """Least-squares solve; None when the residual is not negligible."""
    a = np.array([[complex(v) for v in row] for row in rows], dtype=complex)
    b = np.array([complex(v) for v in rhs], dtype=complex)
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    scale = max(float(np.max(np.abs(b))), float(np.max(np.abs(a))), 1.0)
    if float(np.max(np.abs(a @ x - b))) > 1e3 * eps * scale:
        return None
    return list(map(complex, x))


def approx_det(rows: Matrix) -> complex:
    return complex(np.linalg.det(np.array(
        [[complex(v) for v in row] for row in rows], dtype=complex)))


def approx_inverse(rows: Matrix) -> Matrix:
    inv = np.linalg.inv(np.array(
        [[complex(v) for v in row] for row in rows], dtype=complex))
    return [[complex(v) for v in row] for row in inv]


# -- backend dispatch ----------------------------------------------------------


def mat_kernel(rows: Matrix, eps: float = EPS_DEFAULT) -> list[Vector]:
    if matrix_is_exact(rows):
        return exact_kernel(rows)
    return approx_kernel(rows, eps)


def mat_rank(rows: Matrix, eps: float = EPS_DEFAULT) -> int:
    if matrix_is_exact(rows):
        return exact_rank(rows)
    return approx_rank(rows, eps)


def mat_solve(rows: Matrix, rhs: Vector, eps: float = EPS_DEFAULT) -> Vector | None:
    if matrix_is_exact(rows) and all(is_exact(v) for v in rhs):
        return exact_solve(rows, rhs)
    return approx_solve(rows, rhs, eps)


def mat_inverse(rows: Matrix) -> Matrix | None:
    if matrix_is_exact(rows):
        return exact_inverse(rows)
    return approx_inverse(rows)


def mat_det(rows: Matrix) -> Scalar:
    if matrix_is_exact(rows):
        return exact_det(rows)
    return approx_det(rows)


# -- pencil characteristic polynomial ------------------------------------------


def pencil_charpoly(mg: Matrix, mf: Matrix) -> Vector:
    """Coefficients c_0..c_n of det(M_g - t*M_f), by evaluation-interpolation.

    Exact when both matrices are exact (n+1 integer sample points, exact
    Vandermonde solve).
    """
    n = len(mg)
    exact = matrix_is_exact(mg) and matrix_is_exact(mf)
    points = [QQi(k) if exact else complex(k) for k in range(n + 1)]
    values = []
    for lam in points:
        m = [[mg[i][j] - lam * mf[i][j] for j in range(n)] for i in range(n)]
        values.append(mat_det(m))
    vand = [[p ** k for k in range(n + 1)] for p in points]
    coeffs = mat_solve(vand, values)
    if coeffs is None:
        raise ArithmeticError("charpoly interpolation failed")
    return coeffs


# -- univariate root finding ----------------------------------------------------


def poly_roots(coeffs: list[complex], polish_steps: int = 2) -> list[complex]:
    """Roots of c_0 + c_1 t + ... + c_m t^m with c_m != 0 (companion matrix)."""
    c = [complex(v) for v in coeffs]
    m = len(c) - 1
    if m <= 0:
        return []
    if m == 1:
        return [-c[0] / c[1]]
    roots = [complex(z) for z in np.roots(c[::-1])]
    for _ in range(polish_steps):
        polished = []
        for z in roots:
            val, der = 0j, 0j
            for a in reversed(c):
                der = der * z + val
                val = val * z + a
            if der != 0:
                step = val / der
                if abs(step) < 1.0:
                    z = z - step
            polished.append(z)
        roots = polished
    return roots


def chordal_distance(a: complex, b: complex) -> float:
    """Chordal metric between affine points on the projective line."""
    na = (1.0 + abs(a) ** 2) ** 0.5
    nb = (1.0 + abs(b) ** 2) ** 0.5
    return abs(a - b) / (na * nb)


def cluster_roots(roots: list[complex], eps: float) -> list[tuple[complex, int]]:
    """Merge roots closer than eps in the chordal metric; returns (center, mult)."""
    parent = list(range(len(roots)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if chordal_distance(roots[i], roots[j]) < eps:
                parent[find(j)] = find(i)
    groups: dict[int, list[complex]] = {}
    for i, z in enumerate(roots):
        groups.setdefault(find(i), []).append(z)
    out = []
    for members in groups.values():
        center = sum(members) / len(members)
        out.append((center, len(members)))
    out.sort(key=lambda t: (t[0].real, t[0].imag))
    return out


def principal_sqrt(z: complex) -> complex:
    return cmath.sqrt(z)
