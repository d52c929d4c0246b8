"""Dense matrices over a FieldSpec, as lists of lists of ints."""

from __future__ import annotations

from .errors import DomainError
from .field import FieldSpec

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def matmul(field: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x and y:
                    s ^= field.mul(x, y)
            new.append(s)
        out.append(new)
    return out


def rank(field: FieldSpec, a: Matrix) -> int:
    rows = [list(r) for r in a]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x ^ field.mul(f, y) for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def inverse(field: FieldSpec, a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise DomainError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [field.mul(inv, x) for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x ^ field.mul(f, y) for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
