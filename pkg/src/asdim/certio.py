"""Certificate documents: a deterministic JSON form of a decomposition
chain, a parser that reconstructs a chain the verifier can replay, and a
plain-text tree rendering.

The document is integers and strings only, keys in a fixed order, so
emitting, parsing, and emitting again is byte-identical.  Generator
identity inside one document is by display name; names invented by the
engine are unique within a chain by construction.
"""

from __future__ import annotations

import json
from typing import Any, Callable

from .presentations import (
    Presentation,
    format_presentation,
    parse_presentation,
    parse_word,
)
from .rewriting import HnnRewrite, RenameEntry, ZeroSumEmbedding
from .tower import (
    CyclicLeaf,
    EmbedStep,
    FreeLeaf,
    FreeSplit,
    HnnStep,
    Node,
    SingleElim,
)
from .words import Generator, Registry, Word, format_word

__all__ = [
    "CertificateError",
    "SCHEMA_VERSION",
    "emit_certificate",
    "parse_certificate",
    "render_tree",
]

SCHEMA_VERSION = 1


class CertificateError(ValueError):
    """The document is not a well-formed certificate."""


def emit_certificate(root: Node) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "root": _to_dict(root)}
    return json.dumps(doc, indent=2)


def _to_dict(node: Node) -> dict[str, Any]:
    d: dict[str, Any] = {}
    if isinstance(node, FreeLeaf):
        d["kind"] = "free_leaf"
    elif isinstance(node, CyclicLeaf):
        d["kind"] = "cyclic_leaf"
    elif isinstance(node, SingleElim):
        d["kind"] = "single_elim"
    elif isinstance(node, FreeSplit):
        d["kind"] = "free_split"
    elif isinstance(node, HnnStep):
        d["kind"] = "case1_hnn"
    elif isinstance(node, EmbedStep):
        d["kind"] = "case2_embed"
    else:
        raise TypeError(f"not a certificate node: {node!r}")
    d["presentation"] = format_presentation(node.presentation)
    d["bound"] = node.bound

    if isinstance(node, FreeLeaf):
        d["rank"] = node.rank
    elif isinstance(node, CyclicLeaf):
        d["order"] = node.order
    elif isinstance(node, SingleElim):
        d["eliminated"] = node.eliminated.name
        d["rank"] = node.resulting_rank
    elif isinstance(node, FreeSplit):
        d["split_off_rank"] = node.split_off_rank
        d["child"] = _to_dict(node.child)
    elif isinstance(node, HnnStep):
        rw = node.rewrite
        d["stable"] = rw.stable.name
        d["base"] = rw.base.name
        d["rewritten"] = format_word(rw.rewritten)
        d["min_subscript"] = rw.min_subscript
        d["max_subscript"] = rw.max_subscript
        d["renaming"] = [[e.fresh.name, e.base.name, e.subscript] for e in rw.renaming]
        d["child"] = _to_dict(node.child)
    elif isinstance(node, EmbedStep):
        emb = node.embedding
        d["u"] = emb.u.name
        d["v"] = emb.v.name
        d["alpha"] = emb.alpha
        d["beta"] = emb.beta
        d["stable"] = emb.stable.name
        d["carrier"] = emb.carrier.name
        d["image"] = format_word(emb.image)
        d["inner"] = _to_dict(node.inner)
    return d


def _need(d: dict[str, Any], key: str, kind: type) -> Any:
    if key not in d:
        raise CertificateError(f"missing field {key!r}")
    value = d[key]
    if kind is int and isinstance(value, bool):
        raise CertificateError(f"field {key!r} must be an integer")
    if not isinstance(value, kind):
        raise CertificateError(f"field {key!r} must be {kind.__name__}")
    return value


def parse_certificate(text: str, registry: Registry | None = None) -> Node:
    """Rebuild a chain from document text.

    Raises CertificateError on malformed documents; a well-formed but
    dishonest document parses fine and is left for verify_certificate to
    reject.
    """
    reg = registry if registry is not None else Registry()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise CertificateError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise CertificateError(
            f"unsupported schema_version {doc.get('schema_version')!r}"
        )

    table: dict[str, Generator] = {}

    def intern(name: str) -> Generator:
        g = table.get(name)
        if g is None:
            g = reg.declare(name)
            table[name] = g
        return g

    def pres(text: str) -> Presentation:
        return parse_presentation(
            text,
            reg,
            allow_empty_generators=True,
            extended_names=True,
            declare=intern,
        )

    def word(text: str) -> Word:
        return parse_word(
            text, lambda name, pos: intern(name), extended_names=True
        )

    root = _need(doc, "root", dict)
    try:
        return _from_dict(root, intern, pres, word)
    except ValueError as e:
        if isinstance(e, CertificateError):
            raise
        raise CertificateError(str(e)) from None


def _from_dict(
    d: dict[str, Any],
    intern: Callable[[str], Generator],
    pres: Callable[[str], Presentation],
    word: Callable[[str], Word],
) -> Node:
    kind = _need(d, "kind", str)
    p = pres(_need(d, "presentation", str))
    bound = _need(d, "bound", int)

    if kind == "free_leaf":
        return FreeLeaf(p, bound, _need(d, "rank", int))
    if kind == "cyclic_leaf":
        return CyclicLeaf(p, bound, _need(d, "order", int))
    if kind == "single_elim":
        return SingleElim(
            p, bound, intern(_need(d, "eliminated", str)), _need(d, "rank", int)
        )
    if kind == "free_split":
        child = _from_dict(_need(d, "child", dict), intern, pres, word)
        return FreeSplit(p, bound, _need(d, "split_off_rank", int), child)
    if kind == "case1_hnn":
        stable = intern(_need(d, "stable", str))
        base = intern(_need(d, "base", str))
        rewritten = word(_need(d, "rewritten", str))
        entries = []
        for row in _need(d, "renaming", list):
            if (
                not isinstance(row, list)
                or len(row) != 3
                or not isinstance(row[0], str)
                or not isinstance(row[1], str)
                or not isinstance(row[2], int)
                or isinstance(row[2], bool)
            ):
                raise CertificateError(
                    "renaming rows must be [fresh, base, subscript]"
                )
            entries.append(RenameEntry(intern(row[0]), intern(row[1]), row[2]))
        child = _from_dict(_need(d, "child", dict), intern, pres, word)
        rw = HnnRewrite(
            stable=stable,
            base=base,
            rewritten=rewritten,
            min_subscript=_need(d, "min_subscript", int),
            max_subscript=_need(d, "max_subscript", int),
            renaming=tuple(entries),
            child=child.presentation,
        )
        return HnnStep(p, bound, rw, child)
    if kind == "case2_embed":
        u = intern(_need(d, "u", str))
        v = intern(_need(d, "v", str))
        stable = intern(_need(d, "stable", str))
        carrier = intern(_need(d, "carrier", str))
        image = word(_need(d, "image", str))
        inner = _from_dict(_need(d, "inner", dict), intern, pres, word)
        emb = ZeroSumEmbedding(
            u=u,
            v=v,
            alpha=_need(d, "alpha", int),
            beta=_need(d, "beta", int),
            stable=stable,
            carrier=carrier,
            image=image,
            embedded=inner.presentation,
        )
        return EmbedStep(p, bound, emb, inner)
    raise CertificateError(f"unknown node kind {kind!r}")


def render_tree(root: Node) -> str:
    lines: list[str] = []
    _render(root, 0, lines)
    return "\n".join(lines)


def _render(node: Node, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    p = format_presentation(node.presentation)
    if isinstance(node, FreeLeaf):
        lines.append(f"{pad}free_leaf  bound={node.bound}  rank={node.rank}  {p}")
    elif isinstance(node, CyclicLeaf):
        lines.append(f"{pad}cyclic_leaf  bound={node.bound}  order={node.order}  {p}")
    elif isinstance(node, SingleElim):
        lines.append(
            f"{pad}single_elim  bound={node.bound}  eliminate={node.eliminated.name}"
            f"  rank={node.resulting_rank}  {p}"
        )
    elif isinstance(node, FreeSplit):
        lines.append(
            f"{pad}free_split  bound={node.bound}"
            f"  split_off_rank={node.split_off_rank}  {p}"
        )
        _render(node.child, depth + 1, lines)
    elif isinstance(node, HnnStep):
        rw = node.rewrite
        lines.append(
            f"{pad}case1_hnn  bound={node.bound}  stable={rw.stable.name}"
            f"  base={rw.base.name}  subscripts={rw.min_subscript}..{rw.max_subscript}"
            f"  s={format_word(rw.rewritten)!r}  {p}"
        )
        _render(node.child, depth + 1, lines)
    elif isinstance(node, EmbedStep):
        emb = node.embedding
        lines.append(
            f"{pad}case2_embed  bound={node.bound}  u={emb.u.name} alpha={emb.alpha}"
            f"  v={emb.v.name} beta={emb.beta}  image={format_word(emb.image)!r}  {p}"
        )
        _render(node.inner, depth + 1, lines)
