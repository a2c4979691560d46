"""Integer Smith normal form on small dense matrices, with transform tracking.

Matrices are lists of lists of Python ints, so there is no overflow concern.
Sizes here stay in the low hundreds; the classic pivoting algorithm is fine.
"""
from __future__ import annotations


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, src, dst, factor):
    row_s, row_d = m[src], m[dst]
    for k in range(len(row_d)):
        row_d[k] += factor * row_s[k]


def _add_col(m, src, dst, factor):
    for row in m:
        row[dst] += factor * row[src]


def smith_normal_form(matrix, rows, cols):
    """Return (diag, U, V) with U*matrix*V diagonal, U and V unimodular.

    ``diag`` is the list of nonzero diagonal entries (each positive, each
    dividing the next).  ``matrix`` is given as a list of ``rows`` lists of
    length ``cols`` and is not modified.
    """
    m = [list(r) for r in matrix]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(m[i][j])
                if val and (best is None or val < best):
                    best, pivot = val, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        _swap_rows(m, t, pi), _swap_rows(u, t, pi)
        _swap_cols(m, t, pj), _swap_cols(v, t, pj)
        while True:
            reduced = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    _add_row(m, t, i, -q), _add_row(u, t, i, -q)
                    if m[i][t]:
                        _swap_rows(m, t, i), _swap_rows(u, t, i)
                        reduced = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    _add_col(m, t, j, -q), _add_col(v, t, j, -q)
                    if m[t][j]:
                        _swap_cols(m, t, j), _swap_cols(v, t, j)
                        reduced = True
            if not reduced:
                break
        # enforce divisibility of later entries by the pivot
        stray = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t]:
                    stray = (i, j)
                    break
            if stray:
                break
        if stray:
            _add_row(m, stray[0], t, 1), _add_row(u, stray[0], t, 1)
            continue
        if m[t][t] < 0:
            # flip row t on both m and u; row t is zero off the pivot here
            for k in range(cols):
                m[t][k] = -m[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]
        t += 1
    diag = [m[i][i] for i in range(min(rows, cols)) if i < t]
    return diag, u, v


def rank_and_torsion(matrix, rows, cols):
    """Rank and the diagonal entries > 1 of the Smith form."""
    diag, _, _ = smith_normal_form(matrix, rows, cols)
    return len(diag), [d for d in diag if d > 1]


def solve_integer(matrix, rows, cols, rhs):
    """One integer solution x of matrix @ x = rhs, or None.

    Used to decide whether a cycle is a boundary and to produce a witness.
    """
    diag, u, v = smith_normal_form(matrix, rows, cols)
    b = [sum(u[i][k] * rhs[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        if i < len(diag):
            if b[i] % diag[i]:
                return None
            y[i] = b[i] // diag[i]
        elif b[i]:
            return None
    return [sum(v[i][k] * y[k] for k in range(cols)) for i in range(cols)]
