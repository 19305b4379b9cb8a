"""The vertex exchange graph and the two embedders built on it.

Nodes are the same-level vertex pairs; every unordered pair of
independent edges between two adjacent levels contributes one link
joining its lower-endpoint pair to its upper-endpoint pair. Parallel
links are kept: two disjoint edges and their two "swapped" counterparts
yield two links between the same nodes, possibly with different labels.

Under a reference drawing each link is labeled '+' when its two source
edges do not cross there and '-' when they do. Flipping a pair relative
to the reference must flip its linked pairs exactly along '-' labels, so
a cycle with an odd number of '-' labels is unsatisfiable; absence of
odd cycles matches satisfiability of the pair constraints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assign import EmbedOutcome, GreedyPolicy, OrderClass, run_assignment
from .crossings import check_drawing, edges_by_gap
from .model import Drawing, ProperLevelGraph
from .pairs import PairKey, pair_key
from .pairsat import all_pairs, independent_edge_pairs

Edge = tuple[str, str]


class OddCycleError(ValueError):
    """The labeled graph carries an odd cycle; nothing can be embedded."""


class ChoicesError(ValueError):
    """Entry or processing choices name unknown nodes or repeat one."""


@dataclass(frozen=True)
class VeLink:
    """One link; ``a`` <= ``b`` canonically, ``source`` is the sorted
    pair of graph edges that induced it."""

    a: PairKey
    b: PairKey
    source: tuple[Edge, Edge]


@dataclass(frozen=True)
class VeGraph:
    nodes: tuple[PairKey, ...]
    links: tuple[VeLink, ...]


@dataclass(frozen=True)
class LabeledVeGraph:
    """A ve-graph with one '+'/'-' label per link, relative to
    ``reference``."""

    graph: VeGraph
    labels: tuple[str, ...]
    reference: Drawing


@dataclass(frozen=True)
class OddCycleVerdict:
    """``consistent`` means no odd-labeled cycle; otherwise ``cycle``
    holds a witness closed walk with an odd number of '-' labels."""

    consistent: bool
    cycle: tuple[VeLink, ...] | None


@dataclass(frozen=True)
class SwapAssignment:
    """Per-node swap flags from the first traversal: a node is swapped
    when its path parity from its component's entry is odd."""

    swapped: dict[PairKey, bool]
    entries: tuple[PairKey, ...]


@dataclass(frozen=True)
class HHChoices:
    """The free choices of the two-pass embedder: one traversal entry per
    component (missing components default to their canonical node) and
    the node processing order of the second pass (missing nodes are
    appended in canonical order)."""

    entries: tuple[PairKey, ...] = ()
    order: tuple[PairKey, ...] = ()


def build_ve_graph(graph: ProperLevelGraph) -> VeGraph:
    nodes = tuple(all_pairs(graph))
    links = []
    for lvl, e, f in independent_edge_pairs(graph):
        lower = pair_key(lvl, e[0], f[0])
        upper = pair_key(lvl + 1, e[1], f[1])
        a, b = (lower, upper) if lower <= upper else (upper, lower)
        links.append(VeLink(a, b, (e, f)))
    links.sort(key=lambda l: (l.a, l.b, l.source))
    return VeGraph(nodes, tuple(links))


def label_ve_graph(ve: VeGraph, reference: Drawing) -> LabeledVeGraph:
    pos = reference.positions()
    placed = {v for seq in reference.orders.values() for v in seq}
    for node in ve.nodes:
        if node.first not in placed or node.second not in placed:
            raise ValueError(f"reference drawing misses pair {node.text()}")
    labels = []
    for link in ve.links:
        e, f = link.source
        crossing = (pos[e[0]] < pos[f[0]]) != (pos[e[1]] < pos[f[1]])
        labels.append("-" if crossing else "+")
    return LabeledVeGraph(ve, tuple(labels), reference)


def _adjacency(lve: LabeledVeGraph) -> dict[PairKey, list[tuple[int, PairKey]]]:
    adj: dict[PairKey, list[tuple[int, PairKey]]] = {n: [] for n in lve.graph.nodes}
    for idx, link in enumerate(lve.graph.links):
        adj[link.a].append((idx, link.b))
        adj[link.b].append((idx, link.a))
    return adj


@dataclass(frozen=True)
class VeComponent:
    entry: PairKey
    nodes: tuple[PairKey, ...]
    parity: dict[PairKey, int]  # '-'-label count parity from entry, mod 2


def _components(lve: LabeledVeGraph):
    """BFS decomposition; entry of each component is its canonical node.

    Returns (components, violation) where violation is the first link
    whose label disagrees with the two endpoint parities, together with
    the tree paths needed to close the odd cycle.
    """
    adj = _adjacency(lve)
    seen: dict[PairKey, int] = {}
    parent: dict[PairKey, tuple[PairKey, int] | None] = {}
    components: list[VeComponent] = []
    order = sorted(lve.graph.nodes)
    for start in order:
        if start in seen:
            continue
        parity = {start: 0}
        parent[start] = None
        frontier = [start]
        nodes = []
        while frontier:
            node = frontier.pop(0)
            nodes.append(node)
            seen[node] = len(components)
            for idx, other in adj[node]:
                flip = 1 if lve.labels[idx] == "-" else 0
                if other not in parity:
                    parity[other] = parity[node] ^ flip
                    parent[other] = (node, idx)
                    frontier.append(other)
                elif parity[other] != parity[node] ^ flip:
                    cycle = _close_cycle(lve, parent, node, other, idx)
                    return components, (lve.graph.links[idx], cycle)
        components.append(VeComponent(start, tuple(sorted(nodes)), parity))
    return components, None


def _close_cycle(lve, parent, node, other, link_idx):
    def path_to_root(n):
        out = []
        while parent[n] is not None:
            prev, idx = parent[n]
            out.append((n, idx))
            n = prev
        return n, out

    root_a, up_a = path_to_root(node)
    root_b, up_b = path_to_root(other)
    # same BFS tree, so the roots agree; strip the common tail
    tail_a = [idx for _, idx in up_a]
    tail_b = [idx for _, idx in up_b]
    while tail_a and tail_b and tail_a[-1] == tail_b[-1]:
        tail_a.pop()
        tail_b.pop()
    indices = tail_a + list(reversed(tail_b)) + [link_idx]
    return tuple(lve.graph.links[i] for i in indices)


def odd_cycle_test(lve: LabeledVeGraph) -> OddCycleVerdict:
    """Search for an odd-labeled cycle; finding none is equivalent to the
    pair constraints being satisfiable, whatever the reference was."""
    _, violation = _components(lve)
    if violation is None:
        return OddCycleVerdict(True, None)
    return OddCycleVerdict(False, violation[1])


def _ref_order(pos: dict[str, int], pair: PairKey) -> bool:
    return pos[pair.first] < pos[pair.second]


def healy_kuusik_embed(
    graph: ProperLevelGraph,
    reference: Drawing,
    policy: GreedyPolicy | None = None,
) -> EmbedOutcome:
    """Greedy component-swapping relative to a reference drawing.

    A class is one ve-component; its boolean decision says whether the
    entry node is swapped against the reference, and a node's order is
    the reference order flipped by its path parity and that decision.
    Control flow is exactly the greedy engine's: forced closure
    assignments first, then policy picks, default keeping the reference.
    """
    check_drawing(graph, reference)
    lve = label_ve_graph(build_ve_graph(graph), reference)
    components, violation = _components(lve)
    if violation is not None:
        raise OddCycleError("reference-labeled graph has an odd cycle")
    pos = reference.positions()
    classes = []
    for comp in components:
        rep = comp.entry
        ref_rep = _ref_order(pos, rep)
        members = tuple(
            (node, comp.parity[node] ^ (_ref_order(pos, node) != ref_rep))
            for node in comp.nodes
        )
        classes.append(OrderClass(rep, members))
    level_vertices = {lvl: graph.vertices_on(lvl) for lvl in graph.levels()}
    return run_assignment(
        classes,
        level_vertices,
        policy or GreedyPolicy(),
        lambda rep: _ref_order(pos, rep),
    )


def swap_assignment(lve: LabeledVeGraph, entries: tuple[PairKey, ...] = ()) -> SwapAssignment:
    """First pass: mark every node whose parity from its component entry
    is odd. ``entries`` overrides the per-component default entry."""
    components, violation = _components(lve)
    if violation is not None:
        raise OddCycleError("labeled graph has an odd cycle")
    chosen = _resolve_entries(components, entries)
    swapped: dict[PairKey, bool] = {}
    final_entries = []
    for comp in components:
        entry = chosen.get(comp.entry, comp.entry)
        final_entries.append(entry)
        shift = comp.parity[entry]
        for node in comp.nodes:
            swapped[node] = bool(comp.parity[node] ^ shift)
    return SwapAssignment(swapped, tuple(final_entries))


def _resolve_entries(components, entries):
    by_node = {}
    for comp in components:
        for node in comp.nodes:
            by_node[node] = comp.entry
    chosen: dict[PairKey, PairKey] = {}
    for entry in entries:
        comp_key = by_node.get(entry)
        if comp_key is None:
            raise ChoicesError(f"entry {entry.text()} names an unknown node")
        if comp_key in chosen:
            raise ChoicesError(f"two entries for the component of {comp_key.text()}")
        chosen[comp_key] = entry
    return chosen


def harrigan_healy_embed(
    graph: ProperLevelGraph,
    reference: Drawing,
    choices: HHChoices | None = None,
) -> Drawing:
    """Two-pass embedder: mark swapped pairs, then walk the nodes once
    and exchange the two vertices' slots wherever the current relative
    order differs from the target. Always returns a drawing; nothing
    checks it is crossing-free, by design."""
    choices = choices or HHChoices()
    check_drawing(graph, reference)
    lve = label_ve_graph(build_ve_graph(graph), reference)
    assignment = swap_assignment(lve, choices.entries)
    order = _resolve_order(lve.graph.nodes, choices.order)
    pos = reference.positions()
    seqs = {lvl: list(seq) for lvl, seq in reference.orders.items()}
    slot = dict(pos)
    for node in order:
        target = _ref_order(pos, node) ^ assignment.swapped[node]
        i, j = slot[node.first], slot[node.second]
        if (i < j) != target:
            seq = seqs[node.level]
            seq[i], seq[j] = seq[j], seq[i]
            slot[node.first], slot[node.second] = j, i
    return Drawing({lvl: tuple(seq) for lvl, seq in seqs.items()})


def _resolve_order(nodes: tuple[PairKey, ...], order: tuple[PairKey, ...]) -> list[PairKey]:
    known = set(nodes)
    seen: set[PairKey] = set()
    out: list[PairKey] = []
    for node in order:
        if node not in known:
            raise ChoicesError(f"processing order names unknown node {node.text()}")
        if node in seen:
            raise ChoicesError(f"processing order repeats node {node.text()}")
        seen.add(node)
        out.append(node)
    out.extend(n for n in sorted(nodes) if n not in seen)
    return out
