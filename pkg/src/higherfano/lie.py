"""Root systems, Weyl group words and parabolic data of finite type.

Everything is integral: roots live in the simple-root basis and the
invariant form is an integer Gram matrix fixed once per diagram, so no
floating point enters the combinatorics.

Conventions
-----------
Nodes are numbered ``1..rank`` in Bourbaki order.  Internally arrays are
0-indexed.  ``cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) /
(alpha_i, alpha_i)``, so the simple reflection acts by
``s_i(beta) = beta - (sum_j cartan[i][j] beta_j) alpha_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

LABELS = "ABCDEFG"

# dimension of the simple group, used as a cross-check of root enumeration
GROUP_DIMENSION = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


class NonFiniteTypeError(ValueError):
    """Raised for Cartan matrices that are not of finite type."""


class EnumerationBoundError(RuntimeError):
    """Raised when a bounded Weyl-group enumeration would grow too large."""


def _check_label(label: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(label, False)
    if not ok:
        raise ValueError(f"no Dynkin diagram of type {label}{rank}")


@lru_cache(maxsize=None)
def _gram(label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Integer Gram matrix of the simple roots, Bourbaki ordering."""
    _check_label(label, rank)
    n = rank
    g = [[0] * n for _ in range(n)]

    def bond(i: int, j: int, value: int) -> None:
        g[i - 1][j - 1] = g[j - 1][i - 1] = value

    if label in "ADE":
        for i in range(n):
            g[i][i] = 2
        if label == "A":
            for i in range(1, n):
                bond(i, i + 1, -1)
        elif label == "D":
            for i in range(1, n - 1):
                bond(i, i + 1, -1)
            bond(n - 2, n, -1)
        else:
            for i, j in [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]:
                bond(i, j, -1)
    elif label == "B":
        for i in range(n):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            bond(i, i + 1, -2)
    elif label == "C":
        for i in range(n):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
        bond(n - 1, n, -2)
    elif label == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        bond(1, 2, -2)
        bond(2, 3, -2)
        bond(3, 4, -1)
    else:  # G2: alpha_1 short
        g[0][0], g[1][1] = 2, 6
        bond(1, 2, -3)
    return tuple(tuple(row) for row in g)


def cartan_matrix(label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Built-in Cartan matrix table for ``label`` and ``rank``."""
    g = _gram(label, rank)
    return tuple(
        tuple(2 * g[i][j] // g[i][i] for j in range(rank)) for i in range(rank)
    )


def _positive_definite(m: list[list[Fraction]]) -> bool:
    a = [row[:] for row in m]
    n = len(a)
    for col in range(n):
        if a[col][col] <= 0:
            return False
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    return True


def validate_cartan(cartan: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Check the generalized Cartan axioms and finite type.

    Returns the matrix as a tuple of tuples.  Raises ``ValueError`` for
    axiom violations and ``NonFiniteTypeError`` when the symmetrized form is
    not positive definite.
    """
    a = tuple(tuple(int(x) for x in row) for row in cartan)
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if a[i][i] != 2:
            raise ValueError(f"cartan[{i}][{i}] = {a[i][i]}, expected 2")
        for j in range(n):
            if i != j and a[i][j] > 0:
                raise ValueError(f"cartan[{i}][{j}] = {a[i][j]} is positive")
            if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                raise ValueError(f"cartan[{i}][{j}] and cartan[{j}][{i}] disagree on zero")
    # symmetrizer d with d_i a_ij = d_j a_ji, found by propagation over edges
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NonFiniteTypeError("Cartan matrix is not symmetrizable")
    sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    if not _positive_definite(sym):
        raise NonFiniteTypeError(
            "symmetrized Cartan form is not positive definite: not of finite type"
        )
    return a


@dataclass(frozen=True)
class DynkinDiagram:
    """A connected Dynkin diagram of finite type in Bourbaki ordering."""

    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        label = self.label.upper()
        object.__setattr__(self, "label", label)
        table = cartan_matrix(label, self.rank)
        if not self.cartan:
            object.__setattr__(self, "cartan", table)
        elif tuple(tuple(r) for r in self.cartan) != table:
            raise ValueError(f"Cartan matrix does not match the {label}{self.rank} table")

    @classmethod
    def from_cartan(cls, cartan: Iterable[Iterable[int]]) -> "DynkinDiagram":
        """Recognize a Cartan matrix given in Bourbaki ordering."""
        a = validate_cartan(cartan)
        n = len(a)
        for label in LABELS:
            try:
                if cartan_matrix(label, n) == a:
                    return cls(label, n)
            except ValueError:
                continue
        raise ValueError("finite-type Cartan matrix, but not a connected diagram in Bourbaki ordering")

    @property
    def name(self) -> str:
        return f"{self.label}{self.rank}"

    def __str__(self) -> str:
        return self.name

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return _gram(self.label, self.rank)

    @property
    def simply_laced(self) -> bool:
        return self.label in "ADE"

    def neighbors(self, node: int) -> list[int]:
        i = node - 1
        return [j + 1 for j in range(self.rank) if j != i and self.cartan[i][j] != 0]

    @cached_property
    def reflection_matrices(self) -> tuple[np.ndarray, ...]:
        """Integer matrices of s_1..s_rank on simple-root coordinates."""
        mats = []
        for i in range(self.rank):
            s = np.eye(self.rank, dtype=np.int64)
            s[i, :] -= np.array(self.cartan[i], dtype=np.int64)
            mats.append(s)
        return tuple(mats)


@dataclass(frozen=True, order=True)
class Root:
    """A root written in the simple-root basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        nz = [c for c in self.coeffs if c]
        if not nz:
            raise ValueError("zero is not a root")
        if not (all(c > 0 for c in nz) or all(c < 0 for c in nz)):
            raise ValueError(f"mixed-sign coefficients {self.coeffs}")

    @property
    def positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))


def reflect(diagram: DynkinDiagram, node: int, vector: tuple[int, ...]) -> tuple[int, ...]:
    """Apply the simple reflection s_node to a vector in root coordinates."""
    i = node - 1
    pairing = sum(c * v for c, v in zip(diagram.cartan[i], vector))
    out = list(vector)
    out[i] -= pairing
    return tuple(out)


def coroot_pairing(diagram: DynkinDiagram, vector: tuple[int, ...], node: int) -> int:
    """<vector, alpha_node^vee>."""
    return sum(c * v for c, v in zip(diagram.cartan[node - 1], vector))


@lru_cache(maxsize=None)
def _positive_roots(diagram: DynkinDiagram) -> frozenset[Root]:
    validate_cartan(diagram.cartan)
    n = diagram.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    bound = GROUP_DIMENSION[diagram.label](n)
    while frontier:
        nxt = []
        for beta in frontier:
            for node in range(1, n + 1):
                if beta == simple[node - 1]:
                    continue
                gamma = reflect(diagram, node, beta)
                if all(c >= 0 for c in gamma) and gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        if len(seen) > bound:
            raise NonFiniteTypeError("root saturation did not terminate")
        frontier = nxt
    return frozenset(Root(b) for b in seen)


def positive_roots(diagram: DynkinDiagram) -> set[Root]:
    """All positive roots, by saturating the simple roots under reflections."""
    return set(_positive_roots(diagram))


@dataclass(frozen=True)
class ParabolicMark:
    """A parabolic subgroup P_I given by its marked (crossed) nodes.

    ``marked`` is the complement of I.  A single marked node is the maximal
    parabolic P^k.
    """

    diagram: DynkinDiagram
    marked: frozenset[int]

    def __init__(self, diagram: DynkinDiagram, marked: int | Iterable[int]):
        nodes = frozenset([marked] if isinstance(marked, int) else marked)
        if not nodes:
            raise ValueError("at least one marked node is required")
        bad = [k for k in nodes if not 1 <= k <= diagram.rank]
        if bad:
            raise ValueError(f"nodes {sorted(bad)} outside 1..{diagram.rank}")
        object.__setattr__(self, "diagram", diagram)
        object.__setattr__(self, "marked", nodes)

    @property
    def levi(self) -> frozenset[int]:
        """The index set I of unmarked nodes."""
        return frozenset(range(1, self.diagram.rank + 1)) - self.marked

    @property
    def maximal(self) -> bool:
        return len(self.marked) == 1

    @property
    def node(self) -> int:
        if not self.maximal:
            raise ValueError("not a maximal parabolic")
        return next(iter(self.marked))

    def __str__(self) -> str:
        marks = ",".join(str(k) for k in sorted(self.marked))
        return f"{self.diagram.name}/P{marks}"


def parse_space(text: str) -> ParabolicMark:
    """Parse a descriptor such as ``E8/P6`` or ``d5/p5``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*/\s*[Pp]\s*(\d+)\s*", text)
    if not m:
        raise ValueError(f"cannot parse space descriptor {text!r}; expected e.g. E8/P6")
    label, rank, node = m.group(1).upper(), int(m.group(2)), int(m.group(3))
    return ParabolicMark(DynkinDiagram(label, rank), node)


def unipotent_roots(mark: ParabolicMark) -> list[Root]:
    """Positive roots outside the Levi subsystem; these span T_{eP}(G/P)."""
    levi = mark.levi
    return sorted(r for r in _positive_roots(mark.diagram) if not r.support() <= levi)


def dimension(mark: ParabolicMark) -> int:
    """dim G/P_I = |Phi+ minus Phi+_I|."""
    return len(unipotent_roots(mark))


def fano_index(mark: ParabolicMark) -> int:
    """Index of G/P^k with respect to the ample generator.

    The anticanonical weight is the sum of the unipotent roots; its pairing
    with the coroot of the marked node is the index.
    """
    k = mark.node
    return sum(coroot_pairing(mark.diagram, r.coeffs, k) for r in unipotent_roots(mark))


@dataclass(frozen=True)
class WeylWord:
    """A word in simple reflections; ``letters[0]`` acts last."""

    letters: tuple[int, ...]
    reduced: bool = True

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "".join(f"s{i}" for i in self.letters)


def word_matrix(diagram: DynkinDiagram, letters: Iterable[int]) -> np.ndarray:
    m = np.eye(diagram.rank, dtype=np.int64)
    for i in letters:
        m = m @ diagram.reflection_matrices[i - 1]
    return m


def word_length(diagram: DynkinDiagram, letters: Iterable[int]) -> int:
    """Length of the element, counted as the number of positive roots sent negative."""
    m = word_matrix(diagram, letters)
    return sum(
        1 for r in _positive_roots(diagram) if (m @ np.array(r.coeffs)).sum() < 0
    )


MAX_COSET_ELEMENTS = 200_000


def minimal_coset_reps(mark: ParabolicMark, max_length: int) -> list[WeylWord]:
    """Elements of W^P of length at most ``max_length``, as reduced words.

    Breadth-first search from the identity by left multiplication.  An
    element w lies in W^P iff w(alpha_j) > 0 for every j in I; elements are
    deduplicated by their integer action matrix.
    """
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    diagram = mark.diagram
    levi = sorted(j - 1 for j in mark.levi)
    s = diagram.reflection_matrices
    ident = np.eye(diagram.rank, dtype=np.int64)
    out = [WeylWord(())]
    level = [((), ident, ident)]
    for _ in range(max_length):
        nxt: dict[bytes, tuple] = {}
        for letters, m, minv in level:
            for i in range(diagram.rank):
                if (minv[:, i] < 0).any():  # length would drop
                    continue
                v = s[i] @ m
                if levi and (v[:, levi] < 0).any():
                    continue
                key = v.tobytes()
                if key not in nxt:
                    nxt[key] = ((i + 1,) + letters, v, minv @ s[i])
        if len(out) + len(nxt) > MAX_COSET_ELEMENTS:
            raise EnumerationBoundError(
                f"more than {MAX_COSET_ELEMENTS} coset representatives; lower max_length"
            )
        level = sorted(nxt.values(), key=lambda t: t[0])
        out.extend(WeylWord(t[0]) for t in level)
        if not level:
            break
    return out


def betti(mark: ParabolicMark, j: int) -> int:
    """b_{2j}(G/P^k) for j in {1, 2}, cross-checked against the diagram."""
    if not mark.maximal:
        raise ValueError("betti() expects a maximal parabolic")
    if j not in (1, 2):
        raise ValueError("only b_2 and b_4 are supported; use minimal_coset_reps for more")
    count = sum(1 for w in minimal_coset_reps(mark, j) if len(w) == j)
    expected = 1 if j == 1 else len(mark.diagram.neighbors(mark.node))
    if count != expected:
        raise AssertionError(f"coset count {count} disagrees with diagram value {expected}")
    return count


def root_length(diagram: DynkinDiagram, node: int) -> int:
    return diagram.gram[node - 1][node - 1]


def is_short_root(diagram: DynkinDiagram, node: int) -> bool:
    """True iff alpha_node is shorter than the longest simple root."""
    return root_length(diagram, node) < max(diagram.gram[i][i] for i in range(diagram.rank))


# -- sub-diagram recognition -------------------------------------------------


def _digraph(cartan, nodes: Iterable[int], lengths) -> nx.DiGraph:
    g = nx.DiGraph()
    nodes = list(nodes)
    for a in nodes:
        g.add_node(a, length=lengths[a])
    for a, b in combinations(nodes, 2):
        if cartan[a][b]:
            g.add_edge(a, b, a=cartan[a][b])
            g.add_edge(b, a, a=cartan[b][a])
    return g


@dataclass(frozen=True)
class Component:
    """A connected sub-diagram recognized as a Bourbaki diagram.

    ``relabel`` maps parent node numbers to node numbers of ``diagram``;
    ``short_in_parent`` records, for rank-1 pieces, whether the node was a
    short root of the parent (a conic rather than a line).
    """

    diagram: DynkinDiagram
    relabel: dict
    short_in_parent: bool = False


def connected_components(diagram: DynkinDiagram, nodes: Iterable[int]) -> list[frozenset[int]]:
    nodes = set(nodes)
    g = nx.Graph()
    g.add_nodes_from(nodes)
    for a, b in combinations(sorted(nodes), 2):
        if diagram.cartan[a - 1][b - 1]:
            g.add_edge(a, b)
    return sorted((frozenset(c) for c in nx.connected_components(g)), key=min)


def recognize(diagram: DynkinDiagram, nodes: Iterable[int]) -> Component:
    """Identify a connected set of nodes of ``diagram`` with a Bourbaki diagram."""
    nodes = sorted(nodes)
    r = len(nodes)
    cart = {a: {b: diagram.cartan[a - 1][b - 1] for b in nodes} for a in nodes}
    top = max(root_length(diagram, a) for a in nodes)
    lengths = {a: Fraction(root_length(diagram, a), top) for a in nodes}
    source = _digraph(cart, nodes, lengths)
    for label in LABELS:
        try:
            cand = DynkinDiagram(label, r)
        except ValueError:
            continue
        ctop = max(cand.gram[i][i] for i in range(r))
        clen = {i + 1: Fraction(cand.gram[i][i], ctop) for i in range(r)}
        ccart = {i + 1: {j + 1: cand.cartan[i][j] for j in range(r)} for i in range(r)}
        target = _digraph(ccart, range(1, r + 1), clen)
        gm = DiGraphMatcher(
            source,
            target,
            node_match=lambda x, y: x["length"] == y["length"],
            edge_match=lambda x, y: x["a"] == y["a"],
        )
        if gm.is_isomorphic():
            short = r == 1 and is_short_root(diagram, nodes[0])
            return Component(cand, dict(gm.mapping), short)
    raise ValueError(f"nodes {nodes} of {diagram} do not form a finite-type diagram")


def automorphism_orbit(diagram: DynkinDiagram, node: int) -> list[int]:
    """Orbit of ``node`` under the diagram automorphisms."""
    lengths = {i + 1: root_length(diagram, i + 1) for i in range(diagram.rank)}
    cart = {i + 1: {j + 1: diagram.cartan[i][j] for j in range(diagram.rank)} for i in range(diagram.rank)}
    g = _digraph(cart, range(1, diagram.rank + 1), lengths)
    gm = DiGraphMatcher(
        g, g,
        node_match=lambda x, y: x["length"] == y["length"],
        edge_match=lambda x, y: x["a"] == y["a"],
    )
    return sorted({iso[node] for iso in gm.isomorphisms_iter()})


def canonical_node(diagram: DynkinDiagram, node: int) -> int:
    """Representative of ``node`` modulo diagram automorphisms.

    Smallest label in the orbit, except for type D and E6 where the largest
    is used (D_n/P^n for spinor varieties, E6/P6).
    """
    orbit = automorphism_orbit(diagram, node)
    if diagram.label == "D" or diagram.name == "E6":
        return max(orbit)
    return min(orbit)


def surgery(mark: ParabolicMark) -> list[tuple[Component, int]]:
    """Delete the marked node and mark its neighbours.

    Returns one ``(component, marked node)`` pair per connected piece that
    contains a neighbour, the marked node given in the component's own
    Bourbaki labels and normalized by :func:`canonical_node`.
    """
    k = mark.node
    diagram = mark.diagram
    rest = [i for i in range(1, diagram.rank + 1) if i != k]
    nbrs = set(diagram.neighbors(k))
    pieces = []
    for comp in connected_components(diagram, rest):
        hit = comp & nbrs
        if not hit:
            continue
        c = recognize(diagram, comp)
        (parent_node,) = hit  # Dynkin diagrams are trees
        local = c.relabel[parent_node]
        pieces.append((c, canonical_node(c.diagram, local)))
    return pieces


def all_maximal_marks(label: str, rank: int) -> list[ParabolicMark]:
    d = DynkinDiagram(label, rank)
    return [ParabolicMark(d, k) for k in range(1, rank + 1)]
