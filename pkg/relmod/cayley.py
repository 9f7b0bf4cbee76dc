"""Finite Cayley balls, edge chains and the cycle-to-relators decomposition.

A ball holds every group element reachable from the identity in at most
``radius`` generator steps, keyed by normal-form word. An edge ``(v, i)`` runs
from ``v`` to ``v·gens[i]`` and is kept only when both ends lie in the ball.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

from ._validation import _validate_integer, _validate_non_negative_integer
from .config import get_settings
from .errors import (
    BallBudgetError,
    BallExceededError,
    IdentityViolationError,
    NotACycleError,
    OracleMismatchError,
    SupportOutsideBallError,
    UnknownGeneratorError,
)
from .fox import FoxVector
from .groupring import GroupRingElt
from .oracles import Oracle
from .words import Gen, Word, format_word, inv, mul

logger = logging.getLogger(__name__)

Edge = tuple[Word, int]


@dataclass(frozen=True, eq=False)
class CayleyBall:
    """Ball of radius ``radius`` around the identity of the Cayley graph."""

    oracle: Oracle
    gens: tuple[Word, ...]
    radius: int
    graph: nx.MultiDiGraph = field(repr=False)
    parents: Mapping[Word, tuple[Word, int, int]] = field(repr=False)

    @property
    def vertices(self) -> tuple[Word, ...]:
        return tuple(self.graph.nodes)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((v, i) for v, _, i in self.graph.edges(keys=True))

    def __contains__(self, v: object) -> bool:
        return v in self.graph

    def depth(self, v: Word) -> int:
        return self.graph.nodes[v]["depth"]

    def target(self, edge: Edge) -> Word:
        v, i = edge
        return self.oracle.nf(mul(v, self.gens[i])).word

    def has_edge(self, edge: Edge) -> bool:
        v, i = edge
        return v in self.graph and self.graph.has_edge(v, self.target(edge), key=i)

    def letter_index(self) -> dict[Gen, int]:
        """Map single-generator ``gens`` to their position."""
        index: dict[Gen, int] = {}
        for i, g in enumerate(self.gens):
            if len(g.syllables) == 1 and g.syllables[0][1] == 1:
                index.setdefault(g.syllables[0][0], i)
        return index

    def to_dot(self) -> str:
        return to_dot(self)


def build_ball(
    o: Oracle, gens: Sequence[Word], radius: int, vertex_budget: int | None = None
) -> CayleyBall:
    """Breadth-first ball: generators in order, each with ``+1`` before ``-1``."""
    radius = _validate_non_negative_integer(radius, "radius")
    gens = tuple(gens)
    if vertex_budget is None:
        vertex_budget = get_settings().vertex_budget
    identity = o.nf(Word.identity()).word
    graph = nx.MultiDiGraph()
    graph.add_node(identity, order=0, depth=0)
    parents: dict[Word, tuple[Word, int, int]] = {}
    queue = deque([identity])
    while queue:
        v = queue.popleft()
        depth = graph.nodes[v]["depth"]
        if depth == radius:
            continue
        for i, g in enumerate(gens):
            for sign in (1, -1):
                u = o.nf(mul(v, g if sign == 1 else inv(g))).word
                if u in graph:
                    continue
                if graph.number_of_nodes() >= vertex_budget:
                    raise BallBudgetError(
                        f"ball of radius {radius} exceeds the vertex budget of {vertex_budget}"
                    )
                graph.add_node(u, order=graph.number_of_nodes(), depth=depth + 1)
                parents[u] = (v, i, sign)
                queue.append(u)
    if graph.number_of_nodes() * 10 > vertex_budget * 9:
        logger.warning(
            "Ball of radius %d uses %d of %d budgeted vertices", radius, graph.number_of_nodes(), vertex_budget
        )
    for v in list(graph.nodes):
        for i, g in enumerate(gens):
            u = o.nf(mul(v, g)).word
            if u in graph:
                graph.add_edge(v, u, key=i)
    logger.debug(
        "Ball of radius %d over %s: %d vertices, %d edges",
        radius,
        o,
        graph.number_of_nodes(),
        graph.number_of_edges(),
    )
    return CayleyBall(o, gens, radius, graph, MappingProxyType(parents))


def path_word(ball: CayleyBall, v: Word) -> Word:
    """Word along the BFS tree from the identity to ``v``."""
    if v not in ball:
        raise SupportOutsideBallError(f"{v} is not a vertex of the ball")
    steps: list[Word] = []
    while v in ball.parents:
        prev, i, sign = ball.parents[v]
        steps.append(ball.gens[i] if sign == 1 else inv(ball.gens[i]))
        v = prev
    word = Word.identity()
    for step in reversed(steps):
        word = mul(word, step)
    return word


def growth(ball: CayleyBall) -> list[int]:
    """Number of vertices at each distance ``0..radius``."""
    sizes = [0] * (ball.radius + 1)
    for _, depth in ball.graph.nodes(data="depth"):
        sizes[depth] += 1
    return sizes


@dataclass(frozen=True, eq=False)
class EdgeChain:
    """Finite integer combination of ball edges."""

    ball: CayleyBall
    coeffs: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        coeffs: dict[Edge, int] = {}
        for edge, coef in self.coeffs.items():
            _validate_integer(coef, "coefficient")
            if not coef:
                continue
            if not self.ball.has_edge(edge):
                raise SupportOutsideBallError(f"edge ({edge[0]}, {edge[1]}) is not in the ball")
            coeffs[edge] = coef
        order = self.ball.graph.nodes
        ordered = sorted(coeffs.items(), key=lambda item: (order[item[0][0]]["order"], item[0][1]))
        object.__setattr__(self, "coeffs", MappingProxyType(dict(ordered)))

    def _same_ball(self, other: EdgeChain) -> None:
        if self.ball is not other.ball:
            raise OracleMismatchError("edge chains live in different balls")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeChain):
            return NotImplemented
        return self.ball is other.ball and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.ball), frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: EdgeChain) -> EdgeChain:
        if not isinstance(other, EdgeChain):
            return NotImplemented
        self._same_ball(other)
        coeffs = dict(self.coeffs)
        for edge, coef in other.coeffs.items():
            coeffs[edge] = coeffs.get(edge, 0) + coef
        return EdgeChain(self.ball, coeffs)

    def __neg__(self) -> EdgeChain:
        return EdgeChain(self.ball, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: EdgeChain) -> EdgeChain:
        return self + (-other)

    def __mul__(self, k: int) -> EdgeChain:
        k = _validate_integer(k, "scalar")
        return EdgeChain(self.ball, {e: c * k for e, c in self.coeffs.items()})

    __rmul__ = __mul__

    def boundary(self) -> dict[Word, int]:
        """``sum coef (target - source)`` with zero entries dropped."""
        totals: dict[Word, int] = {}
        for edge, coef in self.coeffs.items():
            source, target = edge[0], self.ball.target(edge)
            totals[target] = totals.get(target, 0) + coef
            totals[source] = totals.get(source, 0) - coef
        return {v: c for v, c in totals.items() if c}

    def is_cycle(self) -> bool:
        return not self.boundary()

    def translate(self, g: Word) -> EdgeChain:
        """Left translate every edge by the group element ``g``."""
        moved: dict[Edge, int] = {}
        for (v, i), coef in self.coeffs.items():
            u = self.ball.oracle.nf(mul(g, v)).word
            if not self.ball.has_edge((u, i)):
                raise SupportOutsideBallError(f"translate of edge ({v}, {i}) by {g} leaves the ball")
            moved[(u, i)] = coef
        return EdgeChain(self.ball, moved)


def lift_word(ball: CayleyBall, w: Word) -> EdgeChain:
    """Signed edge path traced by ``w`` from the identity."""
    index = ball.letter_index()
    oracle = ball.oracle
    v = oracle.nf(Word.identity()).word
    coeffs: dict[Edge, int] = {}
    prefix: list[tuple[Gen, int]] = []
    for gen, sign in w.letters():
        if gen not in index:
            raise UnknownGeneratorError(f"{gen} is not a generator of the ball")
        i = index[gen]
        prefix.append((gen, sign))
        if sign == 1:
            edge = (v, i)
            nxt = oracle.nf(mul(v, ball.gens[i])).word
        else:
            nxt = oracle.nf(mul(v, inv(ball.gens[i]))).word
            edge = (nxt, i)
        if nxt not in ball:
            escaped = Word(tuple(prefix))
            raise BallExceededError(f"prefix {escaped} leaves the ball of radius {ball.radius}", escaped)
        coeffs[edge] = coeffs.get(edge, 0) + sign
        v = nxt
    return EdgeChain(ball, coeffs)


def fox_to_chain(ball: CayleyBall, vector: FoxVector) -> EdgeChain:
    """Put the coefficient of ``h`` in ``dr/dg_i`` on the edge ``(h, i)``."""
    if vector.oracle != ball.oracle:
        raise OracleMismatchError("Fox vector and ball use different oracles")
    index = ball.letter_index()
    coeffs: dict[Edge, int] = {}
    for g in vector.gens:
        component = vector[g]
        if not component:
            continue
        if g not in index:
            raise UnknownGeneratorError(f"{g} is not a generator of the ball")
        for h, coef in component.terms.items():
            edge = (h, index[g])
            if not ball.has_edge(edge):
                raise SupportOutsideBallError(f"coefficient at {h} for {g} lies outside the ball")
            coeffs[edge] = coef
    return EdgeChain(ball, coeffs)


def chain_to_fox(ball: CayleyBall, chain: EdgeChain, word: Word | None = None) -> FoxVector:
    """Inverse of :func:`fox_to_chain` over the ball's single-letter generators."""
    index = ball.letter_index()
    letters = sorted(index, key=index.__getitem__)
    pairs: dict[Gen, list[tuple[Word, int]]] = {g: [] for g in letters}
    by_position = {i: g for g, i in index.items()}
    for (v, i), coef in chain.coeffs.items():
        if i not in by_position:
            raise UnknownGeneratorError(f"ball generator {ball.gens[i]} is not a single letter")
        pairs[by_position[i]].append((v, coef))
    components = {g: GroupRingElt.from_terms(ball.oracle, pairs[g]) for g in letters}
    return FoxVector(word if word is not None else Word.identity(), tuple(letters), ball.oracle, components)


@dataclass(frozen=True)
class _Step:
    start: Word
    end: Word
    letter: Word


def _oriented_steps(chain: EdgeChain) -> list[_Step]:
    steps: list[_Step] = []
    for edge, coef in chain.coeffs.items():
        v, i = edge
        t = chain.ball.target(edge)
        g = chain.ball.gens[i]
        step = _Step(v, t, g) if coef > 0 else _Step(t, v, inv(g))
        steps.extend([step] * abs(coef))
    return steps


def _weight(chain: EdgeChain) -> int:
    return sum(abs(coef) for coef in chain.coeffs.values())


def _relator_loops(ball: CayleyBall, relators: Sequence[Word]) -> list[tuple[Word, EdgeChain, set[Word]]]:
    """``(s, lift of s, vertices on it)`` for every usable ``s = r^{+-1}``."""
    letters = set(ball.letter_index())
    loops: list[tuple[Word, EdgeChain, set[Word]]] = []
    for r in relators:
        if not r or not r.gens() <= letters:
            continue
        for s in (r, inv(r)):
            try:
                lifted = lift_word(ball, s)
            except BallExceededError:
                continue
            vertices = {v for v, _ in lifted.coeffs} | {ball.target(edge) for edge in lifted.coeffs}
            loops.append((s, lifted, vertices))
    return loops


def _next_peel(
    ball: CayleyBall, rest: EdgeChain, loops: list[tuple[Word, EdgeChain, set[Word]]]
) -> tuple[Word, Word, EdgeChain] | None:
    """First ``(base, s, rest - base.lift(s))`` in BFS order of ``base`` that lowers the weight."""
    support = {v for v, _ in rest.coeffs} | {ball.target(edge) for edge in rest.coeffs}
    bases: set[Word] = set()
    for _, _, vertices in loops:
        for u in support:
            for v in vertices:
                base = ball.oracle.nf(mul(u, inv(v))).word
                if base in ball:
                    bases.add(base)
    weight = _weight(rest)
    order = ball.graph.nodes
    for base in sorted(bases, key=lambda b: order[b]["order"]):
        for s, lifted, _ in loops:
            try:
                moved = lifted.translate(base)
            except SupportOutsideBallError:
                continue
            smaller = rest - moved
            if _weight(smaller) < weight:
                return base, s, smaller
    return None


def _closed_walks(ball: CayleyBall, chain: EdgeChain) -> list[tuple[Word, Word]]:
    steps = _oriented_steps(chain)
    outgoing: dict[Word, deque[int]] = {}
    for k, step in enumerate(steps):
        outgoing.setdefault(step.start, deque()).append(k)
    used = [False] * len(steps)
    pairs: list[tuple[Word, Word]] = []
    for k, first in enumerate(steps):
        if used[k]:
            continue
        used[k] = True
        walk = first.letter
        current = first.end
        while current != first.start:
            queue = outgoing[current]
            while used[queue[0]]:
                queue.popleft()
            nxt = queue.popleft()
            used[nxt] = True
            walk = mul(walk, steps[nxt].letter)
            current = steps[nxt].end
        pairs.append((path_word(ball, first.start), walk))
    return pairs


def cycle_to_relators(
    ball: CayleyBall, chain: EdgeChain, relators: Sequence[Word] | None = None
) -> list[tuple[Word, Word]]:
    """Split a cycle into closed walks ``s_j`` based at ``f_j``.

    Translates of the defining relators (``ball.oracle.relators()`` unless
    given) are peeled off first: bases are scanned in BFS order and a
    translate is taken when subtracting it lowers the total weight of the
    chain. The rest is split greedily into closed walks from the smallest
    unused edge, always taking the first unused outgoing edge. ``f_j`` is the
    BFS path word to the base vertex. The lifts of ``f_j s_j f_j^-1`` sum back
    to ``chain``.
    """
    if not chain.is_cycle():
        raise NotACycleError("edge chain has nonzero boundary")
    loops = _relator_loops(ball, ball.oracle.relators() if relators is None else relators)
    pairs: list[tuple[Word, Word]] = []
    rest = chain
    while rest and loops:
        peeled = _next_peel(ball, rest, loops)
        if peeled is None:
            break
        base, s, rest = peeled
        pairs.append((path_word(ball, base), s))
    pairs.extend(_closed_walks(ball, rest))
    total = EdgeChain(ball)
    for f, s in pairs:
        total = total + lift_word(ball, mul(mul(f, s), inv(f)))
    if total != chain:
        raise IdentityViolationError("closed walks do not reassemble the cycle")
    logger.debug("Cycle with %d edges split into %d closed walks", len(chain.coeffs), len(pairs))
    return pairs


def to_dot(ball: CayleyBall) -> str:
    """DOT text with vertices labelled by their normal-form words."""
    names = {v: f"v{data}" for v, data in ball.graph.nodes(data="order")}
    labelled = nx.MultiDiGraph()
    for v in ball.graph.nodes:
        labelled.add_node(names[v], label=f'"{format_word(v)}"')
    for v, u, i in ball.graph.edges(keys=True):
        labelled.add_edge(names[v], names[u], key=i, label=f'"{format_word(ball.gens[i])}"')
    return to_pydot(labelled).to_string()
