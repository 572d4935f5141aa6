"""Loopless pseudographs with labelled parallel-edge bundles.

A pseudograph here is a finite loopless multigraph.  Any maximal class of
two or more parallel edges between the same endpoint pair is a *bundle*;
every edge of a bundle must carry a label, and labels are unique across the
whole graph.  An edge outside every bundle may carry a label or not.

The *ground set* of a graph is its node set together with the labels of its
bundle edges.  A :class:`Collection` is a subset of the ground set; several
derived constructions (touched subgraphs, reduced graphs, parity complexes)
are driven by collections.

Node ids are positive integers.  Labels start with a letter and continue
with letters or digits, so a collection token is a node exactly when it is
numeric.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DuplicateLabelError,
    GraphError,
    LoopEdgeError,
    NotInAnyBundleError,
    UnknownBundleError,
    UnknownMemberError,
    UnknownNodeError,
    UnknownNodeInEdgeError,
    UnlabelledBundleEdgeError,
)

_LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


class Bundle(NamedTuple):
    u: int
    v: int
    labels: tuple  # lexicographically sorted, length >= 2


def _normalize_edge(edge):
    if len(edge) == 2:
        u, v = edge
        label = None
    elif len(edge) == 3:
        u, v, label = edge
    else:
        raise GraphError(f"edge {edge!r} must be (u, v) or (u, v, label)")
    if not isinstance(u, int) or not isinstance(v, int):
        raise GraphError(f"edge endpoints must be integers: {edge!r}")
    if u > v:
        u, v = v, u
    return u, v, label


class Pseudograph:
    """Immutable validated pseudograph."""

    __slots__ = (
        "_nodes",
        "_edges",
        "_bundles",
        "_bundle_by_label",
        "_adjacency",
        "_pairs",
        "_ground",
        "_ground_index",
        "_key",
        "_hash",
        "_components",
    )

    def __init__(self, nodes=(), edges=()):
        for n in set(nodes):
            if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
                raise GraphError(f"node ids must be positive integers, got {n!r}")
        node_list = sorted(set(nodes))
        node_set = set(node_list)

        norm = []
        for edge in edges:
            u, v, label = _normalize_edge(edge)
            if not isinstance(u, int) or not isinstance(v, int):
                raise GraphError(f"edge endpoints must be integers: {edge!r}")
            if u == v:
                raise LoopEdgeError(f"loop at node {u} is not allowed")
            if u not in node_set or v not in node_set:
                missing = u if u not in node_set else v
                raise UnknownNodeInEdgeError(f"edge {edge!r} uses undeclared node {missing}")
            if label is not None:
                if not isinstance(label, str) or not _LABEL_RE.match(label):
                    raise GraphError(
                        f"label {label!r} must start with a letter and be alphanumeric"
                    )
            norm.append((u, v, label))

        seen_labels = set()
        for u, v, label in norm:
            if label is not None:
                if label in seen_labels:
                    raise DuplicateLabelError(f"label {label!r} appears more than once")
                seen_labels.add(label)

        by_pair = {}
        for u, v, label in norm:
            by_pair.setdefault((u, v), []).append(label)

        bundles = []
        for (u, v), labels in sorted(by_pair.items()):
            if len(labels) > 1:
                if any(lab is None for lab in labels):
                    raise UnlabelledBundleEdgeError(
                        f"parallel edges between {u} and {v} must all carry labels"
                    )
                bundles.append(Bundle(u, v, tuple(sorted(labels))))

        self._nodes = tuple(node_list)
        self._edges = tuple(sorted(norm, key=lambda e: (e[0], e[1], e[2] or "")))
        self._bundles = tuple(bundles)
        self._bundle_by_label = {
            lab: b for b in bundles for lab in b.labels
        }
        adjacency = {n: set() for n in node_list}
        for u, v, _ in norm:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = {n: frozenset(s) for n, s in adjacency.items()}
        self._pairs = frozenset(by_pair)
        labels_sorted = tuple(sorted(self._bundle_by_label))
        self._ground = self._nodes + labels_sorted
        self._ground_index = {m: i for i, m in enumerate(self._ground)}
        self._key = (
            frozenset(self._nodes),
            self._pairs,
            frozenset((u, v, lab) for u, v, lab in norm if lab is not None),
        )
        self._hash = hash(self._key)
        self._components = None

    # -- basic structure ------------------------------------------------

    @property
    def nodes(self):
        return self._nodes

    @property
    def edges(self):
        """All edges as (u, v, label_or_None), canonically sorted."""
        return self._edges

    @property
    def bundles(self):
        return self._bundles

    @property
    def bundle_labels(self):
        return self._ground[len(self._nodes):]

    def bundle_of(self, label):
        try:
            return self._bundle_by_label[label]
        except KeyError:
            raise UnknownMemberError(f"{label!r} is not a bundle-edge label") from None

    def ground_members(self):
        """Nodes (ascending) followed by bundle labels (lexicographic)."""
        return self._ground

    def ground_set(self):
        return frozenset(self._ground)

    def ground_index(self):
        return self._ground_index

    @property
    def simple_pairs(self):
        """Adjacent endpoint pairs (u < v), regardless of multiplicity."""
        return self._pairs

    def neighbors(self, node):
        try:
            return self._adjacency[node]
        except KeyError:
            raise UnknownNodeError(f"node {node} is not in the graph") from None

    def adjacent(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self._pairs

    def edge_labels(self):
        """Every label in the graph, bundle or not."""
        return tuple(sorted(lab for _, _, lab in self._edges if lab is not None))

    # -- connectivity -----------------------------------------------------

    def component_nodesets(self):
        """Connected components as frozensets of nodes, ordered by min node."""
        if self._components is None:
            seen = set()
            comps = []
            for start in self._nodes:
                if start in seen:
                    continue
                stack = [start]
                comp = {start}
                seen.add(start)
                while stack:
                    cur = stack.pop()
                    for nxt in self._adjacency[cur]:
                        if nxt not in comp:
                            comp.add(nxt)
                            seen.add(nxt)
                            stack.append(nxt)
                comps.append(frozenset(comp))
            self._components = tuple(comps)
        return self._components

    def connected_components(self):
        """Induced subgraphs on each component; empty graph gives ()."""
        return tuple(self.induced_subgraph(c) for c in self.component_nodesets())

    def is_connected(self):
        return len(self.component_nodesets()) == 1

    # -- derived graphs ---------------------------------------------------

    def underlying_simple_graph(self):
        """Same nodes, one unlabelled edge per adjacent pair (idempotent)."""
        return Pseudograph(self._nodes, [(u, v) for u, v in sorted(self._pairs)])

    def induced_subgraph(self, node_subset):
        subset = frozenset(node_subset)
        unknown = subset - set(self._nodes)
        if unknown:
            raise UnknownNodeError(f"nodes {sorted(unknown)} are not in the graph")
        edges = [e for e in self._edges if e[0] in subset and e[1] in subset]
        return Pseudograph(subset, edges)

    def partial_underlying(self, collapse_pairs):
        """Replace each listed bundle by a single unlabelled edge.

        `collapse_pairs` is an iterable of endpoint pairs; each must be a
        bundle of this graph.  The labels of a collapsed bundle disappear
        entirely.
        """
        wanted = set()
        bundle_pairs = {(b.u, b.v) for b in self._bundles}
        for pair in collapse_pairs:
            u, v = pair
            if u > v:
                u, v = v, u
            if (u, v) not in bundle_pairs:
                raise UnknownBundleError(f"({u}, {v}) is not a bundle of this graph")
            wanted.add((u, v))
        edges = []
        done = set()
        for u, v, lab in self._edges:
            if (u, v) in wanted:
                if (u, v) not in done:
                    done.add((u, v))
                    edges.append((u, v, None))
            else:
                edges.append((u, v, lab))
        return Pseudograph(self._nodes, edges)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Pseudograph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Pseudograph(nodes={list(self._nodes)}, edges={len(self._edges)})"

    # -- display ----------------------------------------------------------

    def compact_names(self):
        """Whether members can be shown concatenated without ambiguity."""
        return all(n <= 9 for n in self._nodes) and all(
            len(lab) == 1 for lab in self.bundle_labels
        )

    def format_members(self, members):
        """Canonical display name for a set of ground members."""
        nodes = sorted(m for m in members if isinstance(m, int))
        labels = sorted(m for m in members if isinstance(m, str))
        parts = [str(n) for n in nodes] + labels
        if not parts:
            return "-"
        if self.compact_names():
            return "".join(parts)
        return ",".join(parts)


@dataclass(frozen=True)
class Collection:
    """A subset of a graph's ground set, split into nodes and labels.

    Collections are plain value objects: equality ignores which graph they
    were built against, so the same collection can be reused on a reduced
    graph whose ground set still contains it.
    """

    nodes: frozenset
    labels: frozenset

    @classmethod
    def of(cls, graph, members):
        nodes = set()
        labels = set()
        bundle_labels = set(graph.bundle_labels)
        plain_labels = set(graph.edge_labels())
        for m in members:
            if isinstance(m, int) and not isinstance(m, bool):
                if m not in graph._adjacency:
                    raise UnknownMemberError(f"node {m} is not in the graph")
                nodes.add(m)
            elif isinstance(m, str):
                if m in bundle_labels:
                    labels.add(m)
                elif m in plain_labels:
                    raise NotInAnyBundleError(f"label {m!r} belongs to a non-bundle edge")
                else:
                    raise UnknownMemberError(f"{m!r} is not a node or bundle-edge label")
            else:
                raise UnknownMemberError(f"{m!r} is not a node or bundle-edge label")
        return cls(frozenset(nodes), frozenset(labels))

    @classmethod
    def empty(cls):
        return cls(frozenset(), frozenset())

    def members(self):
        return self.nodes | self.labels

    def __len__(self):
        return len(self.nodes) + len(self.labels)

    def is_empty(self):
        return not self.nodes and not self.labels

    def issubset_of(self, graph):
        return self.nodes <= set(graph.nodes) and self.labels <= set(graph.bundle_labels)

    def sort_key(self):
        return (tuple(sorted(self.nodes)), tuple(sorted(self.labels)))

    def __repr__(self):
        items = sorted(map(str, self.nodes)) + sorted(self.labels)
        return f"Collection({{{', '.join(items)}}})"


@dataclass(frozen=True)
class Designation:
    """Choice of a 'last' node per component and a 'last' label per bundle.

    The quotient constructions drop one node per connected component and
    one edge per bundle; which ones are dropped is a free choice that never
    changes any topological output, only enumeration order and the lattice
    bases.  The default takes the largest node id of each component and the
    lexicographically last label of each bundle.
    """

    nodes: frozenset
    labels: frozenset

    @classmethod
    def default(cls, graph):
        nodes = frozenset(max(c) for c in graph.component_nodesets())
        labels = frozenset(b.labels[-1] for b in graph.bundles)
        return cls(nodes, labels)

    @classmethod
    def first(cls, graph):
        """Opposite convention to :meth:`default`: smallest ids, first labels."""
        nodes = frozenset(min(c) for c in graph.component_nodesets())
        labels = frozenset(b.labels[0] for b in graph.bundles)
        return cls(nodes, labels)

    def validate(self, graph):
        comps = graph.component_nodesets()
        if len(self.nodes) != len(comps):
            raise GraphError("designation must pick exactly one node per component")
        for comp in comps:
            if len(self.nodes & comp) != 1:
                raise GraphError(f"designation must pick exactly one node in {sorted(comp)}")
        if len(self.labels) != len(graph.bundles):
            raise GraphError("designation must pick exactly one label per bundle")
        for b in graph.bundles:
            if len(self.labels & set(b.labels)) != 1:
                raise GraphError(f"designation must pick exactly one label in {b.labels}")
        return self

    @classmethod
    def resolve(cls, graph, designation):
        """Turn a designation argument into a validated instance for ``graph``.

        Accepts ``None`` (canonical choice), a ready-made instance, or a
        callable mapping a graph to an instance — the callable form lets one
        choice rule follow a computation across many graphs at once.
        """
        if designation is None:
            return cls.default(graph)
        if callable(designation):
            return designation(graph).validate(graph)
        return designation.validate(graph)


def restricted_ground(graph, designation=None):
    """Ground members minus the designated node of each component and the
    designated label of each bundle, in canonical order."""
    d = Designation.resolve(graph, designation)
    dropped = d.nodes | d.labels
    return tuple(m for m in graph.ground_members() if m not in dropped)


def touched_nodes(graph, collection):
    """Nodes that are members of the collection or endpoints of its edges."""
    if not collection.issubset_of(graph):
        raise UnknownMemberError(
            f"{collection!r} is not a subset of the graph's ground set"
        )
    nodes = set(collection.nodes)
    for lab in collection.labels:
        b = graph.bundle_of(lab)
        nodes.add(b.u)
        nodes.add(b.v)
    return frozenset(nodes)


def touched_subgraph(graph, collection):
    """Induced subgraph on the nodes touched by the collection.

    The empty collection touches nothing and yields the empty graph.
    """
    return graph.induced_subgraph(touched_nodes(graph, collection))


def reduced_graph(graph, collection):
    """Touched subgraph with every bundle that misses the collection
    collapsed to a single unlabelled edge."""
    sub = touched_subgraph(graph, collection)
    collapse = [
        (b.u, b.v) for b in sub.bundles if not (set(b.labels) & collection.labels)
    ]
    return sub.partial_underlying(collapse)


def enumerate_reductions(graph):
    """All graphs obtained by inducing on a nonempty node subset and then
    collapsing any subset of the surviving bundles.

    Results are deterministic and pairwise distinct; the empty graph is
    never included.
    """
    out = []
    seen = set()
    nodes = graph.nodes
    for r in range(1, len(nodes) + 1):
        for subset in itertools.combinations(nodes, r):
            induced = graph.induced_subgraph(subset)
            pairs = [(b.u, b.v) for b in induced.bundles]
            for k in range(len(pairs) + 1):
                for chosen in itertools.combinations(pairs, k):
                    h = induced.partial_underlying(chosen)
                    if h not in seen:
                        seen.add(h)
                        out.append(h)
    return tuple(out)
