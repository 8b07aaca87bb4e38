"""The two relator-rewriting steps driving the decomposition, plus the
small structural helpers the tower builder dispatches on.

hnn_rewrite applies when some generator t has exponent sum zero in the
relator: every other letter x is tagged with the running t-exponent i of
the prefix before it, standing for the conjugate t^i x t^-i, and the
t-letters themselves disappear.  The result is a strictly shorter relator
over a fresh generator family, exhibiting the group as an HNN extension
over the group of that family.

zero_sum_embedding applies when every generator has nonzero exponent sum:
two generators u, v with sums alpha, beta are traded for fresh t, b via
u -> b t^-beta and v -> t^alpha.  The rewritten relator has t-exponent
sum zero, so the step above applies next (or t vanishes entirely and the
group splits off a free factor).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .presentations import Presentation, letters_of
from .words import (
    Generator,
    Letter,
    Registry,
    Subscripted,
    Word,
    concat,
    cyclic_reduce,
    exponent_sum,
    generator_power,
    occurrence_count,
    single,
    substitute,
)

__all__ = [
    "HnnRewrite",
    "RenameEntry",
    "ZeroSumEmbedding",
    "choose_embedding_pair",
    "find_single_occurrence",
    "find_zero_exponent",
    "hnn_rewrite",
    "split_free_part",
    "zero_sum_embedding",
]


def split_free_part(p: Presentation) -> tuple[Presentation, list[Generator]]:
    """Split off the generators absent from the relator.

    Returns the core presentation on the occurring generators (declaration
    order kept, relator unchanged) and the list of absent generators; the
    group is the free product of the core group and the free group on the
    absent ones.
    """
    occurring = letters_of(p)
    core_gens = tuple(g for g in p.generators if g in occurring)
    free = [g for g in p.generators if g not in occurring]
    return Presentation(core_gens, p.relator), free


def find_single_occurrence(p: Presentation) -> Generator | None:
    """First generator, in declaration order, occurring exactly once."""
    for g in p.generators:
        if occurrence_count(p.relator, g) == 1:
            return g
    return None


def find_zero_exponent(p: Presentation) -> Generator | None:
    """First generator, in declaration order, that occurs in the relator
    with exponent sum zero.  Occurring with sum zero forces at least two
    occurrences."""
    for g in p.generators:
        if occurrence_count(p.relator, g) > 0 and exponent_sum(p.relator, g) == 0:
            return g
    return None


class RenameEntry(NamedTuple):
    """One row of an hnn_rewrite renaming: fresh stands for the conjugate
    stable^subscript * base * stable^-subscript."""

    fresh: Generator
    base: Generator
    subscript: int


@dataclass(frozen=True)
class HnnRewrite:
    """Outcome of rewriting a relator over a zero-exponent-sum letter.

    rewritten is the new relator over subscripted conjugate generators;
    child is the same word over fresh renamed generators, packaged as the
    next presentation to decompose.  min/max_subscript range over the
    base family of the first rewritten letter, which measures the span of
    conjugates the HNN extension glues along.
    """

    stable: Generator
    base: Generator
    rewritten: Word
    min_subscript: int
    max_subscript: int
    renaming: tuple[RenameEntry, ...]
    child: Presentation


def hnn_rewrite(p: Presentation, stable: Generator, registry: Registry) -> HnnRewrite:
    """Rewrite p's relator over the conjugate families of the non-stable
    letters, eliminating the stable letter.

    Requires exponent_sum(relator, stable) == 0, at least two stable
    occurrences, and at least one other letter.  The emitted word expands
    back to the relator letter for letter when each tagged generator is
    replaced by its conjugate, with no cyclic adjustment; tests and the
    certificate verifier both lean on that exactness.
    """
    r = p.relator
    if exponent_sum(r, stable) != 0:
        raise ValueError(
            f"exponent sum of {stable.name} in the relator is nonzero"
        )
    if occurrence_count(r, stable) < 2:
        raise ValueError(
            f"fewer than two occurrences of {stable.name} in the relator"
        )
    if all(l.gen == stable for l in r):
        raise ValueError("relator is a pure power of the stable letter")

    acc = 0
    emitted: list[Letter] = []
    for l in r:
        if l.gen == stable:
            acc += l.sign
        else:
            emitted.append(Letter(registry.subscripted(l.gen, acc), l.sign))
    assert acc == 0

    raw = Word(tuple(emitted))
    core, conj = cyclic_reduce(raw)
    # For a cyclically reduced relator the emitted sequence is already
    # freely and cyclically reduced: adjacent tags cancel only where the
    # relator itself had a cancelling pair, and an end-to-end cancellation
    # would force the relator's own ends to cancel.
    assert not conj.letters and len(core) == len(emitted)
    rewritten = core

    first = emitted[0].gen.origin
    assert isinstance(first, Subscripted)
    pivot_base = first.base

    parent_index = {g.uid: k for k, g in enumerate(p.generators)}
    occurring = sorted(
        {l.gen for l in rewritten},
        key=lambda g: (parent_index[g.origin.base.uid], g.origin.subscript),  # type: ignore[union-attr]
    )
    entries: list[RenameEntry] = []
    renamed: dict[Generator, Generator] = {}
    for g in occurring:
        origin = g.origin
        assert isinstance(origin, Subscripted)
        i = origin.subscript
        fresh = registry.fresh(
            g.name,
            f"{stable.name}^{i} {origin.base.name} {stable.name}^{-i}",
        )
        entries.append(RenameEntry(fresh, origin.base, i))
        renamed[g] = fresh

    child_word = Word(
        tuple(Letter(renamed[l.gen], l.sign) for l in rewritten), reduced=True
    )
    child = Presentation(tuple(e.fresh for e in entries), child_word)

    family = [e.subscript for e in entries if e.base == pivot_base]
    assert len(rewritten) <= len(r) - 2
    return HnnRewrite(
        stable=stable,
        base=pivot_base,
        rewritten=rewritten,
        min_subscript=min(family),
        max_subscript=max(family),
        renaming=tuple(entries),
        child=child,
    )


def choose_embedding_pair(p: Presentation) -> tuple[Generator, Generator]:
    """Pick the ordered generator pair (u, v) minimizing |alpha * beta|,
    ties broken by declaration order of u and then v."""
    occurring = [g for g in p.generators if occurrence_count(p.relator, g) > 0]
    if len(occurring) < 2:
        raise ValueError("embedding needs at least two occurring generators")
    sums = {g.uid: exponent_sum(p.relator, g) for g in occurring}
    best: tuple[int, int, int] | None = None
    pair: tuple[Generator, Generator] | None = None
    for iu, u in enumerate(occurring):
        for iv, v in enumerate(occurring):
            if u == v:
                continue
            key = (abs(sums[u.uid] * sums[v.uid]), iu, iv)
            if best is None or key < best:
                best, pair = key, (u, v)
    assert pair is not None
    return pair


@dataclass(frozen=True)
class ZeroSumEmbedding:
    """Outcome of the substitution u -> carrier * stable^-beta,
    v -> stable^alpha on a relator where u, v have exponent sums
    alpha, beta.

    image is the cyclically reduced rewritten relator; the stable letter
    has exponent sum zero in it and the carrier occurs.  embedded is the
    presentation the decomposition continues on; the original group embeds
    into the group it presents.
    """

    u: Generator
    v: Generator
    alpha: int
    beta: int
    stable: Generator
    carrier: Generator
    image: Word
    embedded: Presentation


def zero_sum_embedding(
    p: Presentation, u: Generator, v: Generator, registry: Registry
) -> ZeroSumEmbedding:
    r = p.relator
    if u == v:
        raise ValueError("embedding pair must be two distinct generators")
    alpha = exponent_sum(r, u)
    beta = exponent_sum(r, v)
    if alpha == 0:
        raise ValueError(f"exponent sum of {u.name} in the relator is zero")
    if beta == 0:
        raise ValueError(f"exponent sum of {v.name} in the relator is zero")

    stable, carrier = registry.embedding_pair()
    images = {g: single(g) for g in p.generators}
    images[u] = concat(single(carrier), generator_power(stable, -beta))
    images[v] = generator_power(stable, alpha)
    image = cyclic_reduce(substitute(r, images)).core

    assert exponent_sum(image, stable) == 0
    assert occurrence_count(image, carrier) >= 1

    gens = (stable, carrier) + tuple(g for g in p.generators if g not in (u, v))
    embedded = Presentation(gens, image)
    return ZeroSumEmbedding(
        u=u,
        v=v,
        alpha=alpha,
        beta=beta,
        stable=stable,
        carrier=carrier,
        image=image,
        embedded=embedded,
    )
