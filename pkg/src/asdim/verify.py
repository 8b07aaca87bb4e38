"""Independent replay of a decomposition chain.

The verifier re-derives every claim a node makes from the node's own
presentation using only word arithmetic (reduce, substitute, exponent and
occurrence counts, cyclic comparison); it never calls the functions that
built the chain.  Violations come back as data, one entry per failed
check, so a caller can report all of them at once.

Replay is exact where the construction is exact: an HNN node's child
relator, expanded through the recorded renaming, must reproduce the
parent relator letter for letter.  Only the embedding image, which is
defined up to conjugacy by cyclic reduction, is compared as a cyclic
word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import Presentation
from .tower import (
    CyclicLeaf,
    EmbedStep,
    FreeLeaf,
    FreeSplit,
    HnnStep,
    Node,
    SingleElim,
)
from .words import (
    MissingImageError,
    Word,
    concat,
    equal_as_cyclic_words,
    exponent_sum,
    generator_power,
    occurrence_count,
    reduce_word,
    single,
    substitute,
)

__all__ = ["VerificationReport", "Violation", "verify_certificate"]

_KIND = {
    FreeLeaf: "free_leaf",
    CyclicLeaf: "cyclic_leaf",
    SingleElim: "single_elim",
    FreeSplit: "free_split",
    HnnStep: "case1_hnn",
    EmbedStep: "case2_embed",
}


@dataclass(frozen=True)
class Violation:
    depth: int
    kind: str
    check: str
    detail: str

    def __str__(self) -> str:
        return f"depth {self.depth} ({self.kind}): {self.check}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "certificate ok"
        return "\n".join(str(v) for v in self.violations)


def verify_certificate(root: Node) -> VerificationReport:
    out: list[Violation] = []
    _verify(root, 0, out)
    return VerificationReport(tuple(out))


def _verify(node: Node, depth: int, out: list[Violation]) -> None:
    kind = _KIND.get(type(node))
    if kind is None:
        out.append(Violation(depth, type(node).__name__, "kind", "unknown node type"))
        return

    def flag(check: str, detail: str) -> None:
        out.append(Violation(depth, kind, check, detail))

    p = node.presentation
    r = p.relator

    if isinstance(node, FreeLeaf):
        if len(r) == 0:
            expected = len(p.generators)
        elif len(r) == 1:
            expected = len(p.generators) - 1
        else:
            flag("relator shape", f"relator has length {len(r)}, expected 0 or 1")
            expected = None
        if expected is not None and node.rank != expected:
            flag("rank", f"stored {node.rank}, expected {expected}")
        _check_bound(node, 0 if node.rank == 0 else 1, flag)
        return

    if isinstance(node, CyclicLeaf):
        distinct = {l.gen for l in r}
        if len(distinct) != 1 or len(p.generators) != 1:
            flag("relator shape", "not a one-generator power presentation")
        if node.order != len(r):
            flag("order", f"stored {node.order}, relator length {len(r)}")
        if node.order < 2:
            flag("order", f"stored {node.order}, expected at least 2")
        _check_bound(node, 0, flag)
        return

    if isinstance(node, SingleElim):
        if node.eliminated not in p.generators:
            flag("eliminated", f"{node.eliminated.name} is not a generator here")
        n = occurrence_count(r, node.eliminated)
        if n != 1:
            flag("occurrence", f"{node.eliminated.name} occurs {n} times, need exactly 1")
        if node.resulting_rank != len(p.generators) - 1:
            flag(
                "rank",
                f"stored {node.resulting_rank}, expected {len(p.generators) - 1}",
            )
        _check_bound(node, 0 if node.resulting_rank == 0 else 1, flag)
        return

    if isinstance(node, FreeSplit):
        core = node.child.presentation
        if core.relator.letters != r.letters:
            flag("core relator", "differs from the parent relator")
        parent_set = set(p.generators)
        core_set = set(core.generators)
        if not core_set <= parent_set:
            flag("core generators", "not a subset of the parent generators")
        absent = [g for g in p.generators if g not in core_set]
        for g in absent:
            if occurrence_count(r, g) != 0:
                flag("split-off absent", f"{g.name} occurs in the relator")
        for g in core.generators:
            if occurrence_count(r, g) == 0:
                flag("core occurring", f"{g.name} does not occur in the relator")
        if node.split_off_rank != len(absent):
            flag(
                "split-off rank",
                f"stored {node.split_off_rank}, expected {len(absent)}",
            )
        child_bound = node.child.bound
        expected = child_bound if node.split_off_rank == 0 else max(child_bound, 1)
        _check_bound(node, expected, flag)
        _verify(node.child, depth + 1, out)
        return

    if isinstance(node, HnnStep):
        _verify_hnn(node, r, flag)
        _check_bound(node, 1 + node.child.bound, flag)
        _verify(node.child, depth + 1, out)
        return

    if isinstance(node, EmbedStep):
        _verify_embed(node, p, r, flag)
        _check_bound(node, node.inner.bound, flag)
        _verify(node.inner, depth + 1, out)
        return


def _check_bound(node: Node, expected: int, flag) -> None:
    if node.bound != expected:
        flag("bound", f"stored {node.bound}, arithmetic gives {expected}")


def _verify_hnn(node: HnnStep, r: Word, flag) -> None:
    rw = node.rewrite
    t = rw.stable
    child_p = node.child.presentation
    s = child_p.relator

    if t not in node.presentation.generators:
        flag("stable letter", f"{t.name} is not a generator here")
    if exponent_sum(r, t) != 0:
        flag("stable exponent", f"exponent sum of {t.name} is {exponent_sum(r, t)}")
    if occurrence_count(r, t) < 2:
        flag("stable occurrences", f"{t.name} occurs {occurrence_count(r, t)} times")

    entries = rw.renaming
    if {e.fresh for e in entries} != set(child_p.generators):
        flag("renaming", "renamed generators do not match the child generators")

    images = {
        e.fresh: concat(
            generator_power(t, e.subscript),
            single(e.base),
            generator_power(t, -e.subscript),
        )
        for e in entries
    }
    try:
        expanded = reduce_word(substitute(s, images))
    except MissingImageError as err:
        flag("renaming", f"no entry for child generator {err.gen.name}")
    else:
        if expanded.letters != r.letters:
            flag("expansion", "expanded child relator differs from the parent relator")

    stored = [(l.gen.name, l.sign) for l in rw.rewritten]
    if stored != [(l.gen.name, l.sign) for l in s]:
        flag("rewritten word", "does not match the child relator")

    if len(s) > len(r) - 2:
        flag("length", f"child relator has length {len(s)}, parent {len(r)}")

    present = {l.gen for l in s}
    family = [
        e.subscript for e in entries if e.base == rw.base and e.fresh in present
    ]
    if not family:
        flag("pivot family", f"no occurring conjugate of {rw.base.name}")
    else:
        if rw.min_subscript != min(family):
            flag("min subscript", f"stored {rw.min_subscript}, expected {min(family)}")
        if rw.max_subscript != max(family):
            flag("max subscript", f"stored {rw.max_subscript}, expected {max(family)}")


def _verify_embed(node: EmbedStep, p: Presentation, r: Word, flag) -> None:
    emb = node.embedding
    u, v = emb.u, emb.v

    if u == v:
        flag("pair", "u and v are the same generator")
    for g, label in ((u, "u"), (v, "v")):
        if g not in p.generators:
            flag("pair", f"{label} = {g.name} is not a generator here")
            return

    alpha = exponent_sum(r, u)
    beta = exponent_sum(r, v)
    if emb.alpha != alpha or alpha == 0:
        flag("alpha", f"stored {emb.alpha}, relator gives {alpha}")
    if emb.beta != beta or beta == 0:
        flag("beta", f"stored {emb.beta}, relator gives {beta}")

    images = {g: single(g) for g in p.generators}
    images[u] = concat(single(emb.carrier), generator_power(emb.stable, -beta))
    images[v] = generator_power(emb.stable, alpha)
    recomputed = substitute(r, images)
    if not equal_as_cyclic_words(emb.image, recomputed):
        flag("image", "stored image is not the rewritten relator")

    if exponent_sum(emb.image, emb.stable) != 0:
        flag(
            "image exponent",
            f"stable letter has exponent sum {exponent_sum(emb.image, emb.stable)}",
        )
    if occurrence_count(emb.image, emb.carrier) < 1:
        flag("image carrier", "carrier letter does not occur in the image")

    inner_p = node.inner.presentation
    if inner_p.relator.letters != emb.image.letters:
        flag("inner relator", "differs from the stored image")
    expected_gens = {emb.stable, emb.carrier} | {
        g for g in p.generators if g not in (u, v)
    }
    if set(inner_p.generators) != expected_gens:
        flag("inner generators", "do not match the embedding construction")
