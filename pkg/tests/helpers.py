"""Independent oracles and reference data shared between test modules."""

from __future__ import annotations

from qmap import ACDTriple, CycScalar, Poly

X = Poly.x()


def dense_det(matrix):
    """General Laplace expansion along the first column (oracle only)."""
    size = len(matrix)
    if size == 0:
        return Poly.one()
    if size == 1:
        return matrix[0][0]
    total = Poly.zero()
    sign = 1
    for r in range(size):
        entry = matrix[r][0]
        if not entry.is_zero:
            minor = [row[1:] for idx, row in enumerate(matrix) if idx != r]
            total = total + sign * entry * dense_det(minor)
        sign = -sign
    return total


def delta_bruteforce(view, n, i, j):
    """Explicit-matrix determinant oracle for Delta_n(i, j; x)."""
    if j < i - 2:
        return Poly.zero()
    if j == i - 2:
        return Poly.one()
    rows = list(range(i - 1, j + 1))
    size = len(rows)
    matrix = [[Poly.zero()] * size for _ in range(size)]
    for r, t in enumerate(rows):
        matrix[r][r] = X - Poly.constant(view.b(n, t))
        if r + 1 < size:
            matrix[r][r + 1] = Poly.one()
            matrix[r + 1][r] = Poly.constant(view.a(n, rows[r + 1]))
    return dense_det(matrix)


# -- the documented reduction chain of the laguerre-type class-1 case ---------
# Stage 2 is the raw lifted triple divided by v0 z^2; stage 3 divides by z
# at eta roots (0, -tau); stage 4 divides by z once more when a = 1/q;
# stage 5 divides by (z + tau) when tau^3 = -1.


def chain_stage2(q, tau, a, u0):
    qs = q.q
    z1, z2 = CycScalar(0), -tau
    ell = a.inv() * (qs ** 3 - 1).inv() * qs ** 3
    bk = q.bracket_inv(3)
    f1 = Poly([-z1, qs.inv()]) * Poly([-z2, qs.inv()])  # (z/q - z1)(z/q - z2)
    A = X * Poly([-z1, 1]) * Poly([-z2, 1])
    C = bk * f1 * (ell * Poly([a * qs ** 3 - 1, 0, 0, 1]) - Poly.constant(qs ** 3)) + X * Poly(
        [-(z1 + z2), qs.inv() + 1]
    )
    D = u0 * bk * ell * f1 * Poly([-z1, 1]) * Poly([-z2, 1])
    return ACDTriple(A, C, D)


def chain_stage3(q, tau, a, u0):
    qs = q.q
    c = qs.inv() * (qs - 1).inv() * a.inv()
    A = X * Poly([tau, 1])
    C = c * Poly([tau * qs * (a * qs - 1), a * qs ** 2 - 1, 0, tau * qs, 1])
    D = u0 * c * X * Poly([tau * qs, 1]) * Poly([tau, 1])
    return ACDTriple(A, C, D)


def chain_stage4(q, tau, u0):
    qs = q.q
    A = Poly([tau, 1])
    C = (qs - 1).inv() * Poly([qs - 1, 0, tau * qs, 1])
    D = u0 * (qs - 1).inv() * Poly([tau * qs, 1]) * Poly([tau, 1])
    return ACDTriple(A, C, D)


def chain_stage5(q, tau, u0):
    qs = q.q
    A = Poly.one()
    C = (qs - 1).inv() * Poly([tau ** 2 * (1 - qs), -tau * (1 - qs), 1])
    D = u0 * (qs - 1).inv() * Poly([tau * qs, 1])
    return ACDTriple(A, C, D)
