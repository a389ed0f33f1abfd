"""
Symmetric Trees
Rooted trees with at most three children per vertex, stored as prefix-closed
sets of child-index tuples. The root is the empty tuple.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, NewType, Optional

from .errors import TreeError

Vertex = tuple[int, ...]
CanonicalForm = NewType('CanonicalForm', str)
LeafCountVector = dict[int, int]

MAX_CHILDREN = 3
ROOT: Vertex = ()


@dataclass(frozen=True)
class Tree:
    """Finite prefix-closed set of vertices over child indices {0,1,2}"""
    vertices: frozenset

    def __post_init__(self):
        verts = frozenset(tuple(v) for v in self.vertices)
        object.__setattr__(self, 'vertices', verts)
        check_tree_invariants(self)

    @classmethod
    def single(cls) -> 'Tree':
        return cls(frozenset({ROOT}))

    @classmethod
    def full(cls, depth: int) -> 'Tree':
        """Complete 3-ary tree of the given depth"""
        verts = {v for k in range(depth + 1) for v in product(range(MAX_CHILDREN), repeat=k)}
        return cls(frozenset(verts))

    @classmethod
    def chain(cls, length: int) -> 'Tree':
        return cls(frozenset((0,) * k for k in range(length + 1)))

    @classmethod
    def from_children(cls, *children: 'Tree') -> 'Tree':
        """Root whose children are the given trees, in index order"""
        verts = {ROOT}
        for i, child in enumerate(children):
            verts.update((i,) + v for v in child.vertices)
        return cls(frozenset(verts))

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def children(self, v: Vertex) -> list[Vertex]:
        return [v + (i,) for i in range(MAX_CHILDREN) if v + (i,) in self.vertices]

    def is_leaf(self, v: Vertex) -> bool:
        return v + (0,) not in self.vertices

    def leaves(self) -> list[Vertex]:
        return sorted(v for v in self.vertices if self.is_leaf(v))

    @property
    def depth(self) -> int:
        return max(len(v) for v in self.vertices)

    def bottom_up(self) -> list[Vertex]:
        """Vertices, deepest first"""
        return sorted(self.vertices, key=lambda v: (-len(v), v))


def check_tree_invariants(tree: Tree):
    """Raise TreeError unless the vertex set is a well-formed tree"""
    verts = tree.vertices
    if not verts:
        raise TreeError("tree must have at least the root")
    for v in verts:
        if any(not isinstance(i, int) or not 0 <= i < MAX_CHILDREN for i in v):
            raise TreeError(f"vertex {v} uses a child index outside 0..{MAX_CHILDREN - 1}")
        if v and v[:-1] not in verts:
            raise TreeError(f"vertex {v} has no parent in the tree (not prefix-closed)")
        if v and v[-1] > 0 and v[:-1] + (v[-1] - 1,) not in verts:
            raise TreeError(f"children of {v[:-1]} are not an initial segment of indices")


def subtree(tree: Tree, v: Vertex) -> Tree:
    """T_v re-rooted at v"""
    v = tuple(v)
    if v not in tree.vertices:
        raise TreeError(f"vertex {v} is not in the tree")
    n = len(v)
    return Tree(frozenset(w[n:] for w in tree.vertices if w[:n] == v))


def subtree_forms(tree: Tree) -> dict[Vertex, CanonicalForm]:
    """Canonical form of every T_v, computed bottom-up in one pass"""
    forms: dict[Vertex, CanonicalForm] = {}
    for v in tree.bottom_up():
        inner = ''.join(sorted(forms[c] for c in tree.children(v)))
        forms[v] = CanonicalForm(f"({inner})")
    return forms


def canonical_form(tree: Tree) -> CanonicalForm:
    """AHU encoding: equal iff isomorphic as unlabeled rooted trees"""
    return subtree_forms(tree)[ROOT]


def _has_identical_pair(kids: list[Vertex], forms: Mapping[Vertex, CanonicalForm]) -> bool:
    seen = set()
    for c in kids:
        if forms[c] in seen:
            return True
        seen.add(forms[c])
    return False


def asymmetric_vertices(tree: Tree, forms: Optional[Mapping[Vertex, CanonicalForm]] = None) -> list[Vertex]:
    """Vertices with >= 2 children but no two identical child subtrees"""
    forms = forms if forms is not None else subtree_forms(tree)
    bad = []
    for v in sorted(tree.vertices):
        kids = tree.children(v)
        if len(kids) >= 2 and not _has_identical_pair(kids, forms):
            bad.append(v)
    return bad


def is_symmetric(tree: Tree) -> bool:
    return not asymmetric_vertices(tree)


def leaf_counts(tree: Tree) -> LeafCountVector:
    """Depth -> number of leaves at that depth"""
    return dict(sorted(Counter(len(v) for v in tree.leaves()).items()))


def extend_to_depth(tree: Tree, depth: int) -> Tree:
    """Grow every leaf into a complete 3-ary tree reaching `depth`"""
    verts = set(tree.vertices)
    for leaf in tree.leaves():
        k = len(leaf)
        if k > depth:
            raise TreeError(f"leaf {leaf} at depth {k} is deeper than {depth}")
        for extra in range(1, depth - k + 1):
            verts.update(leaf + tail for tail in product(range(MAX_CHILDREN), repeat=extra))
    return Tree(frozenset(verts))


def complement_leaves(tree: Tree, depth: int) -> set[str]:
    """
    Binary words of length `depth` whose slots are untouched by the code of
    `tree`, i.e. no code word is a prefix of them.

    Checked against the capacity identity
    3^depth = |L_depth(extend_to_depth(tree, depth))| + sum of 2^{[w]_a} over the result.
    """
    # correspondence imports this module
    from .code_core import iter_free_words
    from .correspondence import tree_to_code

    if tree.depth > depth:
        raise TreeError(f"tree depth {tree.depth} exceeds {depth}")
    if len(tree) == 1:
        free: set[str] = set()
    else:
        free = set(iter_free_words(tree_to_code(tree).words, depth))

    covered = sum(n * 3 ** (depth - k) for k, n in leaf_counts(tree).items())
    weight = sum(2 ** w.count('a') for w in free)
    if covered + weight != 3 ** depth:
        raise TreeError(f"capacity identity failed at depth {depth}: {covered} + {weight} != {3 ** depth}")
    return free


def tree_to_nested(tree: Tree, labels: Optional[Mapping[Vertex, str]] = None) -> dict:
    """Tree JSON object: {"children": [...]} with optional per-child "label" """
    def build(v: Vertex) -> dict:
        node: dict = {}
        if labels is not None and v in labels:
            node['label'] = labels[v]
        node['children'] = [build(c) for c in tree.children(v)]
        return node

    return build(ROOT)


def tree_from_nested(obj: Mapping) -> Tree:
    """Inverse of tree_to_nested; labels are ignored"""
    verts = set()

    def walk(node, v: Vertex):
        if not isinstance(node, Mapping):
            raise TreeError(f"tree node at {v} must be an object")
        verts.add(v)
        kids = node.get('children', [])
        if not isinstance(kids, list):
            raise TreeError(f"'children' at {v} must be a list")
        if len(kids) > MAX_CHILDREN:
            raise TreeError(f"vertex {v} has {len(kids)} children (max {MAX_CHILDREN})")
        for i, child in enumerate(kids):
            walk(child, v + (i,))

    walk(obj, ROOT)
    return Tree(frozenset(verts))


def tree_from_shape(shape: tuple) -> Tree:
    """Nested tuples of children, e.g. ((), ((),)) -> root with a leaf and a chain"""
    def walk(node: tuple, v: Vertex) -> Iterator[Vertex]:
        yield v
        for i, child in enumerate(node):
            yield from walk(child, v + (i,))

    return Tree(frozenset(walk(shape, ROOT)))
