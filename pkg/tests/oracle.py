"""Independent exact oracles built on fractions.Fraction only.

Nothing here imports the package's linear algebra: ranks come from a plain
Gaussian elimination and Hom spaces from the defining equations
phi_t X_a = Y_a phi_s written out entry by entry.
"""

from fractions import Fraction


def frac_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def rep_matrices(X):
    """Arrow matrices of a package Representation as lists of Fraction rows."""
    out = []
    for M in X.maps:
        out.append([[Fraction(int(M[i, j].p), int(M[i, j].q)) for j in range(M.ncols())] for i in range(M.nrows())])
    return out


def hom_dim_oracle(arrows, dx, X, dy, Y):
    """dim Hom(X, Y) from the equations Y_a phi_s - phi_t X_a = 0.

    ``X``/``Y`` are lists of Fraction matrices (rows = target dim)."""
    n = len(dx)
    offs, k = [], 0
    for v in range(n):
        offs.append(k)
        k += dy[v] * dx[v]
    nunk = k
    eqs = []
    for a, (s, t) in enumerate(arrows):
        for i in range(dy[t]):
            for j in range(dx[s]):
                row = [Fraction(0)] * nunk
                # (Y_a phi_s)[i][j] = sum_l Y_a[i][l] phi_s[l][j]
                for l in range(dy[s]):
                    row[offs[s] + l * dx[s] + j] += Y[a][i][l]
                # (phi_t X_a)[i][j] = sum_l phi_t[i][l] X_a[l][j]
                for l in range(dx[t]):
                    row[offs[t] + i * dx[t] + l] -= X[a][l][j]
                eqs.append(row)
    if nunk == 0:
        return 0
    return nunk - frac_rank(eqs) if eqs else nunk


def euler(arrows, x, y):
    return sum(a * b for a, b in zip(x, y)) - sum(x[s] * y[t] for s, t in arrows)


def coxeter_by_bilinear_form(arrows, n):
    """Phi = -C^T C^{-1}, with C inverted by Fraction Gauss-Jordan from path counts."""
    # C[i][w] = number of paths i -> w (columns dim P_i as vectors over w)
    paths = [[0] * n for _ in range(n)]
    order = _topo(arrows, n)
    for i in range(n):
        paths[i][i] = 1
        for v in order:
            for s, t in arrows:
                if s == v:
                    paths[i][t] += paths[i][v]
    C = [[Fraction(paths[j][i]) for j in range(n)] for i in range(n)]   # column j = dim P_j
    Ci = _inverse(C)
    CT = [[C[j][i] for j in range(n)] for i in range(n)]
    return [[-sum(CT[i][k] * Ci[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _topo(arrows, n):
    indeg = [0] * n
    for _, t in arrows:
        indeg[t] += 1
    out, ready = [], [v for v in range(n) if indeg[v] == 0]
    while ready:
        v = ready.pop(0)
        out.append(v)
        for s, t in arrows:
            if s == v:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    return out


def _inverse(A):
    n = len(A)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [r[n:] for r in m]
