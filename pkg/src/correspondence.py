"""
Code <-> Tree Correspondence
A prefix-free code lifts to a symmetric tree by fanning every 'a' edge of its
prefix tree out into a sibling pair (a, a-) and keeping every 'b' edge single.
The converse labels a symmetric tree and projects leaf labels back to {a,b}.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Optional

from .code_core import Code, is_prefix_free
from .errors import NotPrefixFreeError, NotSymmetricError, PreconditionError, TreeError
from .symtree import ROOT, Tree, Vertex, asymmetric_vertices, subtree_forms, tree_to_nested


class TernarySymbol(str, Enum):
    A = 'a'
    A_INV = 'a-'
    B = 'b'

    @property
    def binary(self) -> str:
        return 'b' if self is TernarySymbol.B else 'a'


# Child-index order among siblings
FAN_ORDER = (TernarySymbol.A, TernarySymbol.A_INV, TernarySymbol.B)


def project(symbols: Iterable[TernarySymbol | str]) -> str:
    """Symbol-wise projection a, a- -> a and b -> b"""
    return ''.join(TernarySymbol(s).binary for s in symbols)


@dataclass(frozen=True)
class LabeledTree:
    """A tree with a ternary label on every non-root vertex"""
    tree: Tree
    labels: Mapping

    def __post_init__(self):
        labels = MappingProxyType({tuple(v): TernarySymbol(s) for v, s in self.labels.items()})
        object.__setattr__(self, 'labels', labels)
        for v in self.tree.vertices:
            if v != ROOT and v not in labels:
                raise TreeError(f"vertex {v} has no label")
        for v in self.tree.vertices:
            sibling_labels = [labels[c] for c in self.tree.children(v)]
            if len(set(sibling_labels)) != len(sibling_labels):
                raise TreeError(f"children of {v} repeat a label: {[s.value for s in sibling_labels]}")
            if (TernarySymbol.A in sibling_labels) != (TernarySymbol.A_INV in sibling_labels):
                raise TreeError(f"children of {v} carry only one of a / a-")

    def word(self, v: Vertex) -> tuple[TernarySymbol, ...]:
        """Label word read from the root down to v"""
        return tuple(self.labels[v[:i]] for i in range(1, len(v) + 1))

    def leaf_words(self) -> dict[Vertex, tuple[TernarySymbol, ...]]:
        return {leaf: self.word(leaf) for leaf in self.tree.leaves()}

    def projected_leaves(self) -> Counter:
        """Binary word -> number of leaves projecting onto it"""
        return Counter(project(w) for w in self.leaf_words().values())

    def to_nested(self) -> dict:
        return tree_to_nested(self.tree, {v: s.value for v, s in self.labels.items()})


def code_to_tree(code: Code) -> LabeledTree:
    """Lift a prefix-free code to its symmetric tree"""
    if len(code) == 0:
        raise PreconditionError("the empty code has no tree")
    if not is_prefix_free(code):
        raise NotPrefixFreeError("code_to_tree needs a prefix-free code")

    prefixes = {w[:i] for w in code.words for i in range(len(w) + 1)}
    verts: set[Vertex] = set()
    labels: dict[Vertex, TernarySymbol] = {}

    def grow(binary: str, v: Vertex):
        verts.add(v)
        fan = []
        if binary + 'a' in prefixes:
            fan += [TernarySymbol.A, TernarySymbol.A_INV]
        if binary + 'b' in prefixes:
            fan.append(TernarySymbol.B)
        for i, label in enumerate(fan):
            child = v + (i,)
            labels[child] = label
            grow(binary + label.binary, child)

    grow('', ROOT)
    return LabeledTree(Tree(frozenset(verts)), labels)


PairChooser = Callable[[list[tuple[int, int]]], tuple[int, int]]


def label_tree(tree: Tree, choose_pair: Optional[PairChooser] = None) -> LabeledTree:
    """
    Label a symmetric tree top-down: one child -> b; two children -> a, a-;
    three children -> the identical pair gets a, a- and the odd one gets b.
    With three identical children the pair is the two smallest indices
    unless `choose_pair` picks another.
    """
    if len(tree) == 1:
        raise TreeError("the single-vertex tree corresponds to no nonempty code")
    forms = subtree_forms(tree)
    bad = asymmetric_vertices(tree, forms)
    if bad:
        raise NotSymmetricError(f"tree is not symmetric at {len(bad)} vertex(es), first {bad[0]}")

    labels: dict[Vertex, TernarySymbol] = {}
    for v in tree.vertices:
        kids = tree.children(v)
        if len(kids) == 1:
            labels[kids[0]] = TernarySymbol.B
        elif len(kids) == 2:
            labels[kids[0]], labels[kids[1]] = TernarySymbol.A, TernarySymbol.A_INV
        elif len(kids) == 3:
            pairs = [(i, j) for i, j in combinations(range(3), 2) if forms[kids[i]] == forms[kids[j]]]
            i, j = choose_pair(pairs) if choose_pair else pairs[0]
            if (i, j) not in pairs:
                raise PreconditionError(f"pair {(i, j)} is not an identical pair at {v}")
            odd = 3 - i - j
            labels[kids[i]], labels[kids[j]], labels[kids[odd]] = (
                TernarySymbol.A, TernarySymbol.A_INV, TernarySymbol.B)
    return LabeledTree(tree, labels)


def tree_to_code(tree: Tree | LabeledTree, choose_pair: Optional[PairChooser] = None) -> Code:
    """Project the leaf labels of a symmetric tree to a prefix-free code"""
    if isinstance(tree, LabeledTree):
        tree = tree.tree
    labeled = label_tree(tree, choose_pair)
    multiplicity = labeled.projected_leaves()
    code = Code(frozenset(multiplicity))
    if not is_prefix_free(code):
        raise TreeError("projected leaves do not form a prefix-free code")
    for word, count in multiplicity.items():
        if count != 2 ** word.count('a'):
            raise TreeError(f"{count} leaves project onto {word!r}, expected {2 ** word.count('a')}")
    return code
