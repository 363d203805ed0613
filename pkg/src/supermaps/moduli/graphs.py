"""Dual graphs of marked nodal curves with a map degree on each component.

Vertices are components with ``(genus, degree)``, edges are nodes (loops and
multiple edges allowed), legs are marked points labelled ``1..n``.  Only
ordinary double points can be encoded, so that stability condition is
structural.

Text format, one item per line (``;`` also separates items)::

    vertex <id> genus=<h> degree=<d>
    edge <id> <id>
    leg <label> <id>
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..parsing import ParseError


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class DualGraph:
    vertices: Tuple[Tuple[int, int], ...]
    edges: Tuple[Tuple[int, int], ...] = ()
    legs: Tuple[Tuple[int, int], ...] = ()

    def __init__(
        self,
        vertices: Sequence[Tuple[int, int]],
        edges: Iterable[Tuple[int, int]] = (),
        legs: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = (),
    ):
        verts = tuple((int(h), int(d)) for h, d in vertices)
        for h, d in verts:
            if h < 0 or d < 0:
                raise GraphError(f"genus and degree must be non-negative, got {(h, d)}")
        k = len(verts)
        es = []
        for a, b in edges:
            if not (0 <= a < k and 0 <= b < k):
                raise GraphError(f"edge ({a}, {b}) refers to a missing vertex")
            es.append((min(a, b), max(a, b)))
        leg_items = legs.items() if isinstance(legs, Mapping) else legs
        ls = []
        seen = set()
        for label, v in leg_items:
            if label in seen:
                raise GraphError(f"leg label {label} used twice")
            if not 0 <= v < k:
                raise GraphError(f"leg {label} sits on missing vertex {v}")
            seen.add(label)
            ls.append((int(label), int(v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(es)))
        object.__setattr__(self, "legs", tuple(sorted(ls)))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def leg_map(self) -> Dict[int, int]:
        return dict(self.legs)

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(label for label, _ in self.legs)

    def total_degree(self) -> int:
        return sum(d for _, d in self.vertices)

    def legs_at(self, v: int) -> List[int]:
        return [label for label, w in self.legs if w == v]

    def valence(self, v: int) -> int:
        """Edge endpoints at ``v``; a loop counts twice."""
        return sum((a == v) + (b == v) for a, b in self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v: set() for v in range(self.num_vertices)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.num_vertices - 1

    def canonical_form(self):
        """Isomorphism invariant: minimum encoding over invariant-respecting relabelings."""
        k = self.num_vertices
        inv = self._refined_colours()
        classes: Dict[tuple, List[int]] = {}
        for v in range(k):
            classes.setdefault(inv[v], []).append(v)
        keys = sorted(classes)
        best = None
        for choice in product(*(permutations(classes[key]) for key in keys)):
            order = [v for block in choice for v in block]
            new = {v: i for i, v in enumerate(order)}
            enc = (
                tuple(self.vertices[v] for v in order),
                tuple(sorted(tuple(sorted((new[a], new[b]))) for a, b in self.edges)),
                tuple(sorted((label, new[v]) for label, v in self.legs)),
            )
            if best is None or enc < best:
                best = enc
        return best

    def _refined_colours(self) -> Dict[int, tuple]:
        # colour refinement; colours are isomorphism-invariant, so permuting within them suffices
        k = self.num_vertices
        nbrs = {v: [] for v in range(k)}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        colour = {v: (self.vertices[v], tuple(self.legs_at(v)), self.valence(v)) for v in range(k)}
        for _ in range(k):
            new = {v: (colour[v], tuple(sorted(colour[w] for w in nbrs[v]))) for v in range(k)}
            if len(set(new.values())) == len(set(colour.values())):
                break
            colour = new
        return colour

    def canonical(self) -> "DualGraph":
        verts, edges, legs = self.canonical_form()
        return DualGraph(verts, edges, legs)

    def is_isomorphic(self, other: "DualGraph") -> bool:
        return self.canonical_form() == other.canonical_form()

    def remove_vertex(self, v: int) -> "DualGraph":
        """Drop an isolated-from-legs-and-edges vertex and reindex."""
        if self.valence(v) or self.legs_at(v):
            raise GraphError(f"vertex {v} still carries edges or legs")
        new = lambda w: w - (w > v)  # noqa: E731
        return DualGraph(
            self.vertices[:v] + self.vertices[v + 1 :],
            [(new(a), new(b)) for a, b in self.edges],
            [(label, new(w)) for label, w in self.legs],
        )

    def to_text(self, sep: str = "\n") -> str:
        lines = [f"vertex {i} genus={h} degree={d}" for i, (h, d) in enumerate(self.vertices)]
        lines += [f"edge {a} {b}" for a, b in self.edges]
        lines += [f"leg {label} {v}" for label, v in self.legs]
        return sep.join(lines)

    def __str__(self):
        return self.to_text("; ")


_VERTEX = re.compile(r"vertex\s+(\S+)\s+genus=(\d+)\s+degree=(\d+)\Z")
_EDGE = re.compile(r"edge\s+(\S+)\s+(\S+)\Z")
_LEG = re.compile(r"leg\s+(\d+)\s+(\S+)\Z")


def parse_graph(text: str) -> DualGraph:
    """Parse the line-oriented dual-graph format."""
    ids: Dict[str, int] = {}
    vertices, edges, legs = [], [], []
    items = []
    for lineno, line in enumerate(text.splitlines(), 1):
        col = 1
        for chunk in line.split(";"):
            body = chunk.split("#", 1)[0]
            stripped = body.strip()
            if stripped:
                items.append((lineno, col + len(body) - len(body.lstrip()), stripped))
            col += len(chunk) + 1
    for lineno, col, item in items:
        word = item.split()[0]
        if word == "vertex":
            m = _VERTEX.match(item)
            if not m:
                raise ParseError("expected 'vertex <id> genus=<h> degree=<d>'", lineno, col)
            if m.group(1) in ids:
                raise ParseError(f"vertex {m.group(1)!r} declared twice", lineno, col)
            ids[m.group(1)] = len(vertices)
            vertices.append((int(m.group(2)), int(m.group(3))))
        elif word in ("edge", "leg"):
            m = (_EDGE if word == "edge" else _LEG).match(item)
            if not m:
                raise ParseError(f"expected '{word} <{'id' if word == 'edge' else 'label'}> <id>'", lineno, col)
            refs = (m.group(1), m.group(2)) if word == "edge" else (m.group(2),)
            for ref in refs:
                if ref not in ids:
                    raise ParseError(f"unknown vertex {ref!r}", lineno, col + item.index(ref, len(word)))
            if word == "edge":
                edges.append((ids[refs[0]], ids[refs[1]]))
            else:
                label = int(m.group(1))
                if any(label == lab for lab, _ in legs):
                    raise ParseError(f"leg label {label} used twice", lineno, col)
                legs.append((label, ids[refs[0]]))
        else:
            raise ParseError(f"unknown item {word!r}", lineno, col)
    if not vertices:
        raise ParseError("graph has no vertices", 1, 1)
    return DualGraph(vertices, edges, legs)


# basic invariants


def graph_genus(G: DualGraph) -> int:
    """Arithmetic genus: vertex genera plus the first Betti number."""
    if not G.is_connected():
        raise GraphError("graph is disconnected")
    return sum(h for h, _ in G.vertices) + len(G.edges) - G.num_vertices + 1


def special_points(G: DualGraph, v: int) -> int:
    return len(G.legs_at(v)) + G.valence(v)


def _p(problem, name):
    return problem[name] if isinstance(problem, Mapping) else getattr(problem, name)


def stability_reasons(G: DualGraph, g: int, n: int, d: int) -> List[str]:
    reasons = []
    if not G.is_connected():
        reasons.append("connected: the curve is disconnected")
    else:
        genus = graph_genus(G)
        if genus != g:
            reasons.append(f"genus: arithmetic genus is {genus}, expected {g}")
    if set(G.labels) != set(range(1, n + 1)):
        reasons.append(f"markings: legs {sorted(G.labels)} are not 1..{n}")
    for v, (h, dv) in enumerate(G.vertices):
        need = 3 - 2 * h
        have = special_points(G, v)
        if dv == 0 and have < need:
            reasons.append(f"stability: contracted vertex {v} of genus {h} has {have} special points, needs {need}")
    if G.total_degree() != d:
        reasons.append(f"degree: total degree is {G.total_degree()}, expected {d}")
    return reasons


def is_stable_map_graph(G: DualGraph, problem) -> Tuple[bool, List[str]]:
    """Check the stable-map conditions for ``problem`` (anything with ``g``, ``n``, ``d``).

    Returns ``(ok, reasons)`` where ``reasons`` names every violated clause.
    """
    reasons = stability_reasons(G, _p(problem, "g"), _p(problem, "n"), _p(problem, "d"))
    return not reasons, reasons


# contraction


def contract_vertex(G: DualGraph, v: int) -> DualGraph:
    """Contract a genus-0 vertex with at most two special points into its neighbours.

    Its degree, if any, is lost; callers contract degree-0 vertices only or
    have already forgotten the map.
    """
    h, _ = G.vertices[v]
    legs = G.legs_at(v)
    ends = []
    loops = 0
    keep = []
    for a, b in G.edges:
        if a == b == v:
            loops += 1
        elif a == v:
            ends.append(b)
        elif b == v:
            ends.append(a)
        else:
            keep.append((a, b))
            continue
    if h != 0 or loops or len(legs) + len(ends) > 2 or not ends:
        raise GraphError(f"vertex {v} cannot be contracted")
    new_legs = [(label, w) for label, w in G.legs if w != v]
    if len(ends) == 2:
        keep.append((ends[0], ends[1]))
    elif legs:
        new_legs.append((legs[0], ends[0]))
    stripped = DualGraph(G.vertices, keep, new_legs)
    return stripped.remove_vertex(v)


def _first_unstable(G: DualGraph, use_degree: bool) -> Optional[int]:
    for v, (h, d) in enumerate(G.vertices):
        if use_degree and d:
            continue
        if special_points(G, v) < 3 - 2 * h:
            return v
    return None


def stabilize_curve(G: DualGraph, g: int, n: int) -> DualGraph:
    """Forget the map and contract destabilizing components.

    Needs ``n + 2g >= 3``.  Vertices are contracted lowest index first.
    """
    if n + 2 * g < 3:
        raise GraphError(f"no stable model: n + 2g = {n + 2 * g} < 3")
    if graph_genus(G) != g:
        raise GraphError(f"graph has genus {graph_genus(G)}, expected {g}")
    if len(G.legs) != n:
        raise GraphError(f"graph has {len(G.legs)} legs, expected {n}")
    H = DualGraph([(h, 0) for h, _ in G.vertices], G.edges, G.legs)
    while (v := _first_unstable(H, use_degree=False)) is not None:
        H = contract_vertex(H, v)
    return H


def moduli_exists(g: int, n: int, d: int) -> bool:
    """Whether stable maps of type ``(g, n, d)`` exist (to a target with lines)."""
    return g >= 0 and n >= 0 and d >= 0 and (d > 0 or 2 * g - 2 + n > 0)


def forget_point(G: DualGraph, problem, i: int) -> DualGraph:
    """Forget marking ``i``, relabel the later markings down by one, and contract.

    The result is stable for ``(g, n - 1, d)``.
    """
    g, n, d = _p(problem, "g"), _p(problem, "n"), _p(problem, "d")
    ok, reasons = is_stable_map_graph(G, problem)
    if not ok:
        raise GraphError("source graph is not stable: " + "; ".join(reasons))
    if not 1 <= i <= n:
        raise GraphError(f"no marking {i} among 1..{n}")
    if not moduli_exists(g, n - 1, d):
        raise GraphError(f"forgetful map undefined: no stable maps of type (g={g}, n={n - 1}, d={d})")
    legs = [(label - (label > i), v) for label, v in G.legs if label != i]
    H = DualGraph(G.vertices, G.edges, legs)
    while (v := _first_unstable(H, use_degree=True)) is not None:
        H = contract_vertex(H, v)
    return H


# enumeration of genus-0 stable trees

MAX_ENUMERATION = 8


def default_vertex_bound(n: int, d: int) -> int:
    """Largest possible number of components of a genus-0 stable map of type ``(n, d)``."""
    return max(1, 2 * d + n - 2)


def enumerate_stable_graphs(n: int, d: int, max_vertices: Optional[int] = None, g: int = 0) -> List[DualGraph]:
    """All genus-0 stable-map dual graphs with ``n`` legs and degree ``d``, up to isomorphism.

    Trees are built rooted (at the vertex carrying leg 1 when ``n > 0``) from
    canonically ordered subtrees.  Graphs with more than ``max_vertices``
    components are skipped.
    """
    if g != 0:
        raise GraphError("enumeration is only available in genus 0")
    if n < 0 or d < 0:
        raise GraphError("n and d must be non-negative")
    if n + d > MAX_ENUMERATION:
        raise GraphError(f"n + d = {n + d} exceeds the supported bound {MAX_ENUMERATION}")
    if max_vertices is None:
        max_vertices = default_vertex_bound(n, d)
    if max_vertices < 1:
        raise GraphError("max_vertices must be positive")
    max_vertices = min(max_vertices, default_vertex_bound(n, d))

    gen = _TreeGenerator()
    legs = frozenset(range(1, n + 1))
    if n:
        roots = [node for node, _ in gen.trees(legs, d, False, max_vertices, root_leg=1)]
        graphs = {_node_to_graph(node) for node in roots}
    else:
        seen = {}
        for node, _ in gen.trees(legs, d, False, max_vertices):
            G = _node_to_graph(node)
            seen.setdefault(_tree_key(G), G)
        graphs = set(seen.values())
    return sorted(graphs, key=lambda G: (G.num_vertices, _tree_key(G)))


class _TreeGenerator:
    """Rooted decorated trees as nested tuples ``(degree, legs, children)``."""

    def __init__(self):
        self.trees = lru_cache(maxsize=None)(self._trees)

    def _trees(self, legs: frozenset, degree: int, has_parent: bool, budget: int, root_leg=None):
        out = []
        if budget < 1:
            return out
        for dr in range(degree + 1):
            for own in _subsets(legs):
                if root_leg is not None and root_leg not in own:
                    continue
                rest = legs - own
                for kids, size in self._children(rest, degree - dr, budget - 1):
                    specials = len(own) + len(kids) + has_parent
                    if dr == 0 and specials < 3:
                        continue
                    out.append(((dr, tuple(sorted(own)), tuple(sorted(kids))), size + 1))
        return tuple(out)

    def _children(self, rest: frozenset, degree: int, budget: int):
        """Lists of child subtrees exactly covering ``rest`` and ``degree``."""
        if rest:
            first = min(rest)
            others = rest - {first}
            for extra in _subsets(others):
                block = frozenset(extra) | {first}
                for dc in range(degree + 1):
                    for tree, size in self.trees(block, dc, True, budget):
                        for kids, more in self._children(rest - block, degree - dc, budget - size):
                            yield [tree] + kids, size + more
        else:
            yield from self._legless(degree, budget, None)

    def _legless(self, degree: int, budget: int, cap):
        # non-increasing sequences of leg-free subtrees give each multiset once
        if degree == 0:
            yield [], 0
            return
        for dc in range(1, degree + 1):
            for tree, size in self.trees(frozenset(), dc, True, budget):
                if cap is not None and tree > cap:
                    continue
                for kids, more in self._legless(degree - dc, budget - size, tree):
                    yield [tree] + kids, size + more


def _subsets(s: frozenset):
    items = sorted(s)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def _node_to_graph(node) -> DualGraph:
    vertices, edges, legs = [], [], []

    def visit(nd, parent):
        idx = len(vertices)
        vertices.append((0, nd[0]))
        legs.extend((label, idx) for label in nd[1])
        if parent is not None:
            edges.append((parent, idx))
        for child in nd[2]:
            visit(child, idx)

    visit(node, None)
    return DualGraph(vertices, edges, legs)


def _rooted_key(G: DualGraph, root: int):
    adj = {v: [] for v in range(G.num_vertices)}
    for a, b in G.edges:
        adj[a].append(b)
        adj[b].append(a)

    def key(v, parent):
        kids = tuple(sorted(key(w, v) for w in adj[v] if w != parent))
        return (G.vertices[v][1], tuple(G.legs_at(v)), kids)

    return key(root, None)


def _tree_key(G: DualGraph):
    return min(_rooted_key(G, v) for v in range(G.num_vertices))
