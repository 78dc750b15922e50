"""Generators for the featured families: type-A Kostant systems,
transportation polytopes and network (flow) polytopes."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arrangement import LinearSystem, new_system
from .errors import Disconnected, MarginMismatch, ValidationError
from .exact import rank


@dataclass(frozen=True)
class ModelInstance:
    system: LinearSystem
    xi: tuple[int, ...]
    labels: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"betas": [list(b) for b in self.system.betas],
                "xi": [str(x) for x in self.xi],
                "labels": self.labels}


def kostant_system(rank_: int) -> LinearSystem:
    """Positive roots of A_l in simple-root coordinates (intervals i..j)."""
    if rank_ < 1:
        raise ValidationError("rank must be at least 1")
    betas = []
    for i in range(rank_):
        for j in range(i, rank_):
            betas.append(tuple(int(i <= k <= j) for k in range(rank_)))
    return new_system(betas)


def kostant_instance(rank_: int, xi: Sequence[int]) -> ModelInstance:
    return ModelInstance(kostant_system(rank_), tuple(xi),
                         {"family": "kostant", "type": "A", "rank": rank_})


def transportation_system(k: int, l: int) -> LinearSystem:
    """Forms beta_ij = e_i + f_j (j < l) and beta_il = e_i on R^(k+l-1).

    The constraint for the last column is dropped since it is implied by the
    others. Forms are ordered row by row.
    """
    if k < 1 or l < 1:
        raise ValidationError("need at least one row and one column")
    dim = k + l - 1
    betas = []
    for i in range(k):
        for j in range(l):
            b = [0] * dim
            b[i] = 1
            if j < l - 1:
                b[k + j] = 1
            betas.append(tuple(b))
    return new_system(betas)


def margins_to_xi(rows: Sequence[int], cols: Sequence[int]) -> tuple[int, ...]:
    rows, cols = [int(x) for x in rows], [int(x) for x in cols]
    if any(x < 0 for x in rows + cols):
        raise ValidationError("margins must be nonnegative")
    if sum(rows) != sum(cols):
        raise MarginMismatch(f"row sum {sum(rows)} != column sum {sum(cols)}")
    return tuple(rows) + tuple(cols[:-1])


def transport_instance(rows: Sequence[int], cols: Sequence[int]) -> ModelInstance:
    xi = margins_to_xi(rows, cols)
    return ModelInstance(transportation_system(len(rows), len(cols)), xi,
                         {"family": "transportation", "rows": list(rows), "cols": list(cols)})


def parse_arcs(spec: str) -> list[tuple[str, str]]:
    """Parse ``"u>v,v>w"`` into arc pairs."""
    arcs = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.count(">") != 1:
            raise ValidationError(f"bad arc {chunk!r}; expected 'tail>head'")
        u, v = (s.strip() for s in chunk.split(">"))
        if not u or not v or u == v:
            raise ValidationError(f"bad arc {chunk!r}")
        arcs.append((u, v))
    if not arcs:
        raise ValidationError("no arcs given")
    return arcs


def network_system(arcs: Sequence[tuple], vertices: Optional[Sequence] = None,
                   drop=None) -> LinearSystem:
    """Columns of the vertex-arc incidence matrix (+1 at tail, -1 at head).

    Vertices are ordered as given, else by first appearance; the coordinate
    of ``drop`` (default: the last vertex) is removed.
    """
    if vertices is None:
        vertices = []
        for u, v in arcs:
            for x in (u, v):
                if x not in vertices:
                    vertices.append(x)
    vertices = list(vertices)
    if drop is None:
        drop = vertices[-1]
    index = {x: i for i, x in enumerate(vertices)}
    full = []
    for u, v in arcs:
        if u not in index or v not in index:
            raise ValidationError(f"arc {u}>{v} uses an unknown vertex")
        col = [0] * len(vertices)
        col[index[u]] += 1
        col[index[v]] -= 1
        full.append(col)
    keep = [i for i, x in enumerate(vertices) if x != drop]
    betas = [tuple(col[i] for i in keep) for col in full]
    if len(vertices) < 2 or rank(betas) < len(keep):
        raise Disconnected("digraph is not connected")
    return new_system(betas)
