"""BGP reflection functors and the Coxeter functors built from them.

``coxeter_plus`` (reflect at sinks along an admissible order) is naturally
isomorphic to the AR translate tau, ``coxeter_minus`` to tau^-1.  Both act on
morphisms, which is what the cluster-category composition needs.  The data of
every reflection step is cached on the representation so that morphisms are
transported with the same bases as their endpoints.
"""

from __future__ import annotations

from . import linalg as la
from .linalg import Matrix
from .quiver import Morphism, Quiver, Representation


def sink_order(Q: Quiver) -> list[int]:
    """Admissible order for reflecting at sinks (each vertex is a sink in turn)."""
    return list(reversed(Q.topological_order()))


def source_order(Q: Quiver) -> list[int]:
    return list(Q.topological_order())


def _reflect_sink(X: Representation, Q: Quiver, k: int):
    into = Q.arrows_into(k)
    dims_in = [X.dims[Q.arrows[a][0]] for a in into]
    h = la.hstack([X.maps[a] for a in into], nrows=X.dims[k]) if into else Matrix(X.dims[k], 0)
    K = la.kernel_matrix(h)
    free = la.kernel_free_rows(h)
    newQ = Q.reversed_arrows(into)
    maps = list(X.maps)
    off = 0
    for a, d in zip(into, dims_in):
        maps[a] = la.rows_of(K, range(off, off + d))
        off += d
    dims = list(X.dims)
    dims[k] = K.ncols()
    return Representation(newQ, dims, maps), newQ, (k, into, K, free)


def _reflect_source(X: Representation, Q: Quiver, k: int):
    out = Q.arrows_out(k)
    dims_out = [X.dims[Q.arrows[a][1]] for a in out]
    h = la.vstack([X.maps[a] for a in out], ncols=X.dims[k]) if out else Matrix(0, X.dims[k])
    P = la.left_kernel_matrix(h)
    free = la.kernel_free_rows(h.transpose())
    newQ = Q.reversed_arrows(out)
    maps = list(X.maps)
    off = 0
    for a, d in zip(out, dims_out):
        maps[a] = la.columns(P, range(off, off + d))
        off += d
    dims = list(X.dims)
    dims[k] = P.nrows()
    return Representation(newQ, dims, maps), newQ, (k, out, P, free)


def _coxeter(X: Representation, plus: bool):
    key = "cox+" if plus else "cox-"
    hit = X._cache.get(key)
    if hit is not None:
        return hit
    Q = X.quiver
    order = sink_order(Q) if plus else source_order(Q)
    cur, curQ, steps = X, Q, []
    for k in order:
        if plus:
            cur, curQ, data = _reflect_sink(cur, curQ, k)
        else:
            cur, curQ, data = _reflect_source(cur, curQ, k)
        steps.append((curQ, data))
    assert curQ.arrows == Q.arrows
    Y = Representation(Q, cur.dims, cur.maps)
    X._cache[key] = (Y, steps)
    return Y, steps


def coxeter_plus(X: Representation) -> Representation:
    """tau X (projective summands are killed)."""
    return _coxeter(X, True)[0]


def coxeter_minus(X: Representation) -> Representation:
    """tau^-1 X (injective summands are killed)."""
    return _coxeter(X, False)[0]


def _transport(f: Morphism, plus: bool) -> Morphism:
    X, Y = f.source, f.target
    tX, sx = _coxeter(X, plus)
    tY, sy = _coxeter(Y, plus)
    Q = X.quiver
    mats = list(f.mats)
    prevQ = Q
    for (curQ, (k, arrows, MX, freeX)), (_, (_, _, MY, freeY)) in zip(sx, sy):
        if plus:
            srcs = [prevQ.arrows[a][0] for a in arrows]
            big = la.block_diag([mats[v] for v in srcs]) if srcs else Matrix(0, 0)
            moved = big * MX if srcs else Matrix(0, MX.ncols())
            mats[k] = la.rows_of(moved, freeY)
        else:
            tgts = [prevQ.arrows[a][1] for a in arrows]
            big = la.block_diag([mats[v] for v in tgts]) if tgts else Matrix(0, 0)
            moved = MY * big if tgts else Matrix(MY.nrows(), 0)
            mats[k] = la.columns(moved, freeX)
        prevQ = curQ
    return Morphism(tX, tY, mats)


def coxeter_plus_map(f: Morphism) -> Morphism:
    return _transport(f, True)


def coxeter_minus_map(f: Morphism) -> Morphism:
    return _transport(f, False)
