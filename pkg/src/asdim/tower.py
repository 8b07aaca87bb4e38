"""Recursive decomposition of a one-relator presentation into a chain of
certified steps, each paired with the asymptotic dimension bound it
yields.

The chain bottoms out in groups of known dimension: free groups (1, or 0
when trivial) and finite cyclic groups (0).  Interior steps either split
off a free factor (dimension is the max of the parts and 1), eliminate a
generator occurring once (the group is free), pass to an HNN extension
(dimension grows by at most 1), or embed into a larger one-relator group
(dimension does not grow).  The relator length bound ceil(|r| / 2) falls
out because every HNN step shortens the relator by at least two and is
charged exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .presentations import Presentation, letters_of
from .rewriting import (
    HnnRewrite,
    ZeroSumEmbedding,
    choose_embedding_pair,
    find_single_occurrence,
    find_zero_exponent,
    hnn_rewrite,
    split_free_part,
    zero_sum_embedding,
)
from .words import Generator, Registry, exponent_sum

__all__ = [
    "BoundReport",
    "CyclicLeaf",
    "EmbedStep",
    "FreeLeaf",
    "FreeSplit",
    "HnnStep",
    "Node",
    "SingleElim",
    "all_towers",
    "best_tower",
    "bound_of",
    "build_tower",
    "ceil_half",
    "children",
    "summarize",
]


@dataclass(frozen=True)
class FreeLeaf:
    """The group is free of the stated rank (empty relator, or a length-1
    relator killing one generator)."""

    presentation: Presentation
    bound: int
    rank: int


@dataclass(frozen=True)
class CyclicLeaf:
    """Single generator, relator a power of it: a finite cyclic group."""

    presentation: Presentation
    bound: int
    order: int


@dataclass(frozen=True)
class SingleElim:
    """A generator occurring exactly once is eliminated; the rest generate
    freely, so this terminates the chain like a free leaf."""

    presentation: Presentation
    bound: int
    eliminated: Generator
    resulting_rank: int


@dataclass(frozen=True)
class FreeSplit:
    """Generators absent from the relator split off as a free factor."""

    presentation: Presentation
    bound: int
    split_off_rank: int
    child: "Node"


@dataclass(frozen=True)
class HnnStep:
    """HNN extension over the child group, from a zero-exponent-sum
    stable letter."""

    presentation: Presentation
    bound: int
    rewrite: HnnRewrite
    child: "Node"


@dataclass(frozen=True)
class EmbedStep:
    """Embedding into the group decomposed by the inner chain."""

    presentation: Presentation
    bound: int
    embedding: ZeroSumEmbedding
    inner: "Node"


Node = Union[FreeLeaf, CyclicLeaf, SingleElim, FreeSplit, HnnStep, EmbedStep]


def ceil_half(n: int) -> int:
    """ceil(n / 2) for n >= 0.

    >>> ceil_half(5), ceil_half(4), ceil_half(0)
    (3, 2, 0)
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    return (n + 1) // 2


def _free_bound(rank: int) -> int:
    return 0 if rank == 0 else 1


def children(node: Node) -> tuple[Node, ...]:
    if isinstance(node, (FreeSplit, HnnStep)):
        return (node.child,)
    if isinstance(node, EmbedStep):
        return (node.inner,)
    return ()


def bound_of(node: Node) -> int:
    """Recompute the dimension bound of a chain from its structure alone,
    ignoring the stored per-node bounds."""
    if isinstance(node, FreeLeaf):
        return _free_bound(node.rank)
    if isinstance(node, CyclicLeaf):
        return 0
    if isinstance(node, SingleElim):
        return _free_bound(node.resulting_rank)
    if isinstance(node, FreeSplit):
        inner = bound_of(node.child)
        return inner if node.split_off_rank == 0 else max(inner, 1)
    if isinstance(node, HnnStep):
        return 1 + bound_of(node.child)
    if isinstance(node, EmbedStep):
        return bound_of(node.inner)
    raise TypeError(f"not a certificate node: {node!r}")


def build_tower(p: Presentation, registry: Registry | None = None) -> Node:
    """Decompose p deterministically.

    The guards run in a fixed order: empty relator, free split, length-1
    relator, single-occurrence elimination, cyclic relator, HNN rewrite on
    the first zero-exponent-sum generator, and finally the embedding step
    on the pair chosen by choose_embedding_pair.  Rerunning on the same
    input yields an identical chain.
    """
    return _build(p, registry if registry is not None else Registry())


def _build(p: Presentation, reg: Registry) -> Node:
    r = p.relator
    gens = p.generators

    if len(r) == 0:
        return FreeLeaf(p, _free_bound(len(gens)), rank=len(gens))

    occurring = letters_of(p)
    if len(occurring) < len(gens):
        core, free = split_free_part(p)
        child = _build(core, reg)
        k = len(free)
        return FreeSplit(p, child.bound if k == 0 else max(child.bound, 1), k, child)

    if len(r) == 1:
        return FreeLeaf(p, _free_bound(len(gens) - 1), rank=len(gens) - 1)

    g = find_single_occurrence(p)
    if g is not None:
        rank = len(gens) - 1
        return SingleElim(p, _free_bound(rank), eliminated=g, resulting_rank=rank)

    if len(occurring) == 1:
        # Reduced power of a single generator, exponent at least 2 here.
        return CyclicLeaf(p, 0, order=len(r))

    t = find_zero_exponent(p)
    if t is not None:
        rw = hnn_rewrite(p, t, reg)
        child = _build(rw.child, reg)
        return HnnStep(p, 1 + child.bound, rw, child)

    u, v = choose_embedding_pair(p)
    emb = zero_sum_embedding(p, u, v, reg)
    inner = _build(emb.embedded, reg)
    return EmbedStep(p, inner.bound, emb, inner)


@dataclass(frozen=True)
class BoundReport:
    """Summary of a chain: the a priori relator-length bound, the bound
    the chain actually certifies, and its shape."""

    length_bound: int
    tower_bound: int
    hnn_steps: int
    node_count: int


def summarize(root: Node) -> BoundReport:
    hnn = 0
    count = 0
    node: Node | None = root
    while node is not None:
        count += 1
        if isinstance(node, HnnStep):
            hnn += 1
        nxt = children(node)
        node = nxt[0] if nxt else None
    return BoundReport(
        length_bound=ceil_half(len(root.presentation.relator)),
        tower_bound=root.bound,
        hnn_steps=hnn,
        node_count=count,
    )


def all_towers(p: Presentation, registry: Registry | None = None) -> Iterator[Node]:
    """Every chain reachable by varying the stable letter at HNN steps and
    the (u, v) pair at embedding steps; the forced guards stay forced.

    Exponential in the worst case, intended for small inputs.
    """
    yield from _alternatives(p, registry if registry is not None else Registry())


def _alternatives(p: Presentation, reg: Registry) -> Iterator[Node]:
    r = p.relator
    gens = p.generators

    if len(r) == 0 or len(r) == 1:
        yield _build(p, reg)
        return

    occurring = letters_of(p)
    if len(occurring) < len(gens):
        core, free = split_free_part(p)
        k = len(free)
        for child in _alternatives(core, reg):
            yield FreeSplit(p, child.bound if k == 0 else max(child.bound, 1), k, child)
        return

    if find_single_occurrence(p) is not None or len(occurring) == 1:
        yield _build(p, reg)
        return

    pivots = [g for g in gens if exponent_sum(r, g) == 0]
    if pivots:
        for t in pivots:
            rw = hnn_rewrite(p, t, reg)
            for child in _alternatives(rw.child, reg):
                yield HnnStep(p, 1 + child.bound, rw, child)
        return

    for u in gens:
        for v in gens:
            if u == v:
                continue
            emb = zero_sum_embedding(p, u, v, reg)
            for inner in _alternatives(emb.embedded, reg):
                yield EmbedStep(p, inner.bound, emb, inner)


def best_tower(
    p: Presentation, registry: Registry | None = None
) -> tuple[Node, int]:
    """The first chain of minimal bound among all_towers, and how many
    chains were examined."""
    best: Node | None = None
    examined = 0
    for node in all_towers(p, registry):
        examined += 1
        if best is None or node.bound < best.bound:
            best = node
    assert best is not None
    return best, examined
