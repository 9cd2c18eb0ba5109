"""Deterministic constructors for the named graph families.

All generators emit the standard vertex numbering: cycle vertices first
(0..l-1 in cycle order), then tail-path vertices outward from the cycle,
then pendant vertices. Outputs are byte-reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph

FAMILY_NAMES = (
    "cycle",
    "path",
    "snl",
    "pnl",
    "broom",
    "pfamily",
    "graph-a",
    "graph-b",
    "p3",
    "conj-i",
    "conj-ii",
)


@dataclass(frozen=True)
class FamilyParams:
    """Validated parameters for one family member."""

    family: str
    n: int | None = None
    l: int | None = None
    delta: int | None = None
    x: int | None = None
    hub_pos: int | None = None

    def build(self) -> Graph:
        return build_family(self)


def build_family(p: FamilyParams) -> Graph:
    if p.family == "cycle":
        return make_cycle(_req(p.l if p.l is not None else p.n, "l"))
    if p.family == "path":
        return make_path(_req(p.n, "n"))
    if p.family == "snl":
        return make_s_n_l(_req(p.n, "n"), _req(p.l, "l"))
    if p.family == "pnl":
        return make_p_n_l(_req(p.n, "n"), _req(p.l, "l"))
    if p.family == "broom":
        return make_t_n_delta(_req(p.n, "n"), _req(p.delta, "delta"))
    if p.family == "pfamily":
        return make_p_family_member(
            _req(p.n, "n"), _req(p.l, "l"), _req(p.delta, "delta"), _req(p.hub_pos, "hub-pos")
        )
    if p.family == "graph-a":
        return make_graph_a(_req(p.n, "n"), _req(p.l, "l"), _req(p.delta, "delta"))
    if p.family == "graph-b":
        return make_graph_b(_req(p.n, "n"), _req(p.l, "l"), _req(p.delta, "delta"))
    if p.family == "p3":
        return make_p3_extremal(_req(p.n, "n"), _req(p.delta, "delta"))
    if p.family == "conj-i":
        return make_conj_min_i(_req(p.n, "n"), _req(p.delta, "delta"))
    if p.family == "conj-ii":
        return make_conj_min_ii(_req(p.n, "n"), _req(p.delta, "delta"), _req(p.x, "x"))
    raise ParameterError(f"unknown family {p.family!r}")


def _req(value: int | None, name: str) -> int:
    if value is None:
        raise ParameterError(f"family requires parameter --{name}")
    return value


def _cycle_edges(l: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % l) for i in range(l)]


def make_cycle(l: int) -> Graph:
    if l < 3:
        raise ParameterError(f"cycle needs l >= 3, got {l}")
    return Graph(l, _cycle_edges(l))


def make_path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_s_n_l(n: int, l: int) -> Graph:
    """Cycle C_l with n-l pendant edges at one cycle vertex."""
    if not 3 <= l <= n:
        raise ParameterError(f"need 3 <= l <= n, got l={l}, n={n}")
    edges = _cycle_edges(l) + [(0, v) for v in range(l, n)]
    return Graph(n, edges)


def make_p_n_l(n: int, l: int) -> Graph:
    """Tadpole: cycle C_l with a path of n-l extra vertices at one cycle vertex."""
    if not 3 <= l <= n:
        raise ParameterError(f"need 3 <= l <= n, got l={l}, n={n}")
    edges = _cycle_edges(l)
    prev = 0
    for v in range(l, n):
        edges.append((prev, v))
        prev = v
    return Graph(n, edges)


def make_t_n_delta(n: int, delta: int) -> Graph:
    """Broom: path on n-delta+1 vertices with delta-1 pendants at one end.

    Vertex 0 is the hub (degree exactly delta).
    """
    if delta < 2 or n < delta + 1:
        raise ParameterError(f"broom needs n >= delta+1 >= 3, got n={n}, delta={delta}")
    edges = [(0, v) for v in range(1, delta)]  # pendants
    prev = 0
    for v in range(delta, n):  # path away from the hub
        edges.append((prev, v))
        prev = v
    return Graph(n, edges)


def make_p_family_member(n: int, l: int, delta: int, hub_pos: int) -> Graph:
    """Tadpole with pendants at one tail vertex so its degree is exactly delta.

    hub_pos indexes the admissible hub placements from the cycle outward:
    0 puts the hub on the cycle junction (tail length n-l-delta+3, delta-3
    pendants), the maximum n-l-delta+2 puts it at the tail end (tail length
    n-l-delta+1, delta-1 pendants), and intermediate values put it at that
    distance along a tail of length n-l-delta+2 with delta-2 pendants.
    """
    if l < 3 or delta < 3:
        raise ParameterError(f"need l >= 3 and delta >= 3, got l={l}, delta={delta}")
    if n < l + delta - 2:
        raise ParameterError(f"need n >= l+delta-2, got n={n}, l={l}, delta={delta}")
    max_pos = n - l - delta + 2
    if not 0 <= hub_pos <= max_pos:
        raise ParameterError(f"hub_pos must be in 0..{max_pos}, got {hub_pos}")
    if hub_pos == 0:
        tail, pendants = n - l - delta + 3, delta - 3
    elif hub_pos == max_pos:
        tail, pendants = n - l - delta + 1, delta - 1
    else:
        tail, pendants = n - l - delta + 2, delta - 2
    if tail < 1:
        # only reachable for hub_pos == max_pos with n == l+delta-2 handled above
        raise ParameterError("requested degree unreachable at this position")
    edges = _cycle_edges(l)
    prev = 0
    for v in range(l, l + tail):
        edges.append((prev, v))
        prev = v
    if hub_pos == 0:
        hub = 0
    elif hub_pos == max_pos:
        hub = l + tail - 1
    else:
        hub = l + hub_pos - 1
    for v in range(l + tail, n):
        edges.append((hub, v))
    g = Graph(n, edges)
    if max(len(a) for a in g.adj) != delta:
        raise ParameterError(
            f"degree {delta} unreachable at hub_pos={hub_pos} for n={n}, l={l}"
        )
    return g


def make_graph_a(n: int, l: int, delta: int) -> Graph:
    """Hub-on-cycle extreme of the pendant-tadpole family."""
    return make_p_family_member(n, l, delta, 0)


def make_graph_b(n: int, l: int, delta: int) -> Graph:
    """Hub-at-tail-end extreme of the pendant-tadpole family.

    Needs n >= l+delta (the tail-end broom is otherwise degenerate).
    """
    if n < l + delta:
        raise ParameterError(f"tail-end hub needs n >= l+delta, got n={n}, l={l}, delta={delta}")
    return make_p_family_member(n, l, delta, n - l - delta + 2)


def make_p3_extremal(n: int, delta: int) -> Graph:
    """Triangle whose vertex 0 carries delta-3 pendants and a pendant path.

    The Kf-maximizer among unicyclic graphs with max degree exactly delta.
    """
    if delta < 3 or n < delta + 1:
        raise ParameterError(f"need delta >= 3 and n >= delta+1, got n={n}, delta={delta}")
    return make_p_family_member(n, 3, delta, 0)


def make_conj_min_i(n: int, delta: int) -> Graph:
    """Conjectured Kf-minimizer, small-n branch: C_{n-delta+2} with
    delta-2 pendants at one cycle vertex."""
    if delta < 3 or n < delta + 1:
        raise ParameterError(f"need delta >= 3 and n >= delta+1, got n={n}, delta={delta}")
    return make_s_n_l(n, n - delta + 2)


def make_conj_min_ii(n: int, delta: int, x: int) -> Graph:
    """Conjectured Kf-minimizer, large-n branch: C_l (l = n - x(delta-2))
    with delta-2 pendants on each of x consecutive cycle vertices."""
    if delta < 3:
        raise ParameterError(f"need delta >= 3, got {delta}")
    if x < 1:
        raise ParameterError(f"need x >= 1, got {x}")
    l = n - x * (delta - 2)
    if l < 3 or x > l:
        raise ParameterError(f"cycle length l={l} too short for x={x} hubs")
    edges = _cycle_edges(l)
    v = l
    for hub in range(x):
        for _ in range(delta - 2):
            edges.append((hub, v))
            v += 1
    return Graph(n, edges)
