"""Acceptance gate.

One test per acceptance criterion, named for what it establishes.  Each
test finishes by printing a single PASS line so a verbose or captured
run reads as a checklist.
"""

from __future__ import annotations

import dataclasses
from random import Random

from asdim import (
    EmbedStep,
    FreeLeaf,
    HnnStep,
    Letter,
    Presentation,
    Registry,
    SingleElim,
    Word,
    all_cyclically_reduced_words,
    build_tower,
    ceil_half,
    children,
    concat,
    exponent_sum,
    format_presentation,
    generator_power,
    hnn_rewrite,
    occurrence_count,
    parse_presentation,
    random_presentation,
    reduce_word,
    single,
    summarize,
    verify_certificate,
)
from oracles import naive_reduce

RANDOM_SEED = 20240817


def _passed(line: str) -> None:
    print(f"ACCEPTANCE PASS: {line}")


def _chain(root):
    out = []
    node = root
    while node is not None:
        out.append(node)
        nxt = children(node)
        node = nxt[0] if nxt else None
    return out


def test_exhaustive_small_scale_bound_and_verification():
    """Every cyclically reduced relator of length 1..8 over two
    generators satisfies the half-length bound and verifies."""
    reg = Registry()
    a = reg.declare("a")
    b = reg.declare("b")
    checked = 0
    for length in range(1, 9):
        for w in all_cyclically_reduced_words((a, b), length):
            p = Presentation((a, b), w)
            root = build_tower(p, reg)
            assert root.bound <= ceil_half(length), format_presentation(p)
            report = verify_certificate(root)
            assert report.ok, f"{format_presentation(p)}: {report}"
            checked += 1
    assert checked == sum(
        1
        for length in range(1, 9)
        for _ in all_cyclically_reduced_words((a, b), length)
    )
    empty = build_tower(Presentation((a, b), Word(())), reg)
    assert verify_certificate(empty).ok
    _passed(
        f"exhaustive sweep, {checked} relators of length <= 8 over 2 generators"
    )


def test_random_scale_bound_and_verification():
    """10,000 seeded random relators, length <= 12, <= 4 generators:
    half-length bound holds and every certificate verifies."""
    rng = Random(RANDOM_SEED)
    violations = 0
    for _ in range(10_000):
        reg = Registry()
        p = random_presentation(rng, reg, max_gens=4, max_len=12)
        root = build_tower(p, reg)
        if root.bound > ceil_half(len(p.relator)) or not verify_certificate(root).ok:
            violations += 1
    assert violations == 0
    _passed("random sweep, 10000 relators of length <= 12 over <= 4 generators")


def test_torus_presentation():
    """The commutator relator gives both bounds equal to 2 through
    exactly one HNN step whose child relator has length |r| - 2."""
    reg = Registry()
    p = parse_presentation("< a, b | a b a^-1 b^-1 >", reg)
    root = build_tower(p, reg)
    report = summarize(root)
    assert report.length_bound == 2
    assert report.tower_bound == 2
    assert report.hnn_steps == 1
    assert isinstance(root, HnnStep)
    assert len(root.child.presentation.relator) == len(p.relator) - 2 == 2
    assert verify_certificate(root).ok
    _passed("torus relator: both bounds 2, one HNN step, child length 2")


def test_trefoil_presentation():
    """u^2 v^3 embeds, then one HNN step and one elimination; the tower
    certifies 2 against the half-length bound of 3."""
    reg = Registry()
    p = parse_presentation("< u, v | u^2 v^3 >", reg)
    root = build_tower(p, reg)
    report = summarize(root)
    assert report.length_bound == 3
    assert report.tower_bound == 2
    kinds = [type(n) for n in _chain(root)]
    assert kinds == [EmbedStep, HnnStep, SingleElim]
    assert verify_certificate(root).ok
    _passed("trefoil relator: bound 2 via embed, HNN, elimination")


def test_baumslag_solitar_family():
    """t a^m t^-1 a^-n for 1 <= m, n <= 4: the root is an HNN step, the
    tower respects the half-length bound, and every run verifies.  The
    pivot is t except when m = n, where a also has sum zero and is
    declared first."""
    for m in range(1, 5):
        for n in range(1, 5):
            reg = Registry()
            text = f"< a, t | t a^{m} t^-1 a^-{n} >"
            p = parse_presentation(text, reg)
            root = build_tower(p, reg)
            assert isinstance(root, HnnStep), text
            expected_pivot = "a" if m == n else "t"
            assert root.rewrite.stable.name == expected_pivot, text
            assert root.bound <= ceil_half(m + n + 2), text
            assert verify_certificate(root).ok, text
    _passed("Baumslag-Solitar family m, n in 1..4: HNN root, bound holds")


def test_genus_two_surface_group():
    """[a,b][c,d] has length 8; the tower certifies at most 4 and
    verifies."""
    reg = Registry()
    p = parse_presentation("< a, b, c, d | [a, b] [c, d] >", reg)
    root = build_tower(p, reg)
    report = summarize(root)
    assert len(p.relator) == 8
    assert report.length_bound == 4
    assert report.tower_bound <= 4
    assert verify_certificate(root).ok
    _passed(
        f"genus-2 surface relator: tower bound {report.tower_bound} <= 4"
    )


def test_hnn_expansion_identity_random_pairs():
    """For 1,000 random eligible (relator, pivot) pairs, replacing each
    subscripted letter x@i by t^i x t^-i and freely reducing reproduces
    the relator letter for letter, and |s| <= |r| - 2."""
    rng = Random(RANDOM_SEED + 1)
    pairs = 0
    while pairs < 1_000:
        reg = Registry()
        p = random_presentation(rng, reg, max_gens=3, max_len=12)
        r = p.relator
        for g in p.generators:
            occ = occurrence_count(r, g)
            if occ < 2 or occ == len(r) or exponent_sum(r, g) != 0:
                continue
            rw = hnn_rewrite(p, g, reg)
            parts = [
                concat(
                    generator_power(rw.stable, l.gen.origin.subscript),
                    single(l.gen.origin.base, l.sign),
                    generator_power(rw.stable, -l.gen.origin.subscript),
                )
                for l in rw.rewritten
            ]
            assert reduce_word(concat(*parts)).letters == r.letters
            assert len(rw.rewritten) <= len(r) - 2
            pairs += 1
            if pairs == 1_000:
                break
    _passed("HNN expansion identity on 1000 random (relator, pivot) pairs")


def _tamper_cases():
    """One mutant per recorded field per node kind.  Every mutant must
    be rejected by the verifier."""
    cases = []

    def add(label, node):
        cases.append((label, node))

    def pres(node, text, reg):
        return dataclasses.replace(
            node, presentation=parse_presentation(text, reg)
        )

    reg = Registry()
    free = build_tower(parse_presentation("< a, b | 1 >", reg), reg)
    add("free_leaf bound", dataclasses.replace(free, bound=free.bound + 1))
    add("free_leaf rank", dataclasses.replace(free, rank=free.rank + 1))
    add("free_leaf presentation", pres(free, "< a, b | a >", Registry()))

    reg = Registry()
    cyclic = build_tower(parse_presentation("< a | a^4 >", reg), reg)
    add("cyclic_leaf bound", dataclasses.replace(cyclic, bound=1))
    add("cyclic_leaf order", dataclasses.replace(cyclic, order=cyclic.order + 1))
    add("cyclic_leaf presentation", pres(cyclic, "< a | a^5 >", Registry()))

    reg = Registry()
    elim = build_tower(parse_presentation("< a, b | b a b >", reg), reg)
    add("single_elim bound", dataclasses.replace(elim, bound=elim.bound + 1))
    add(
        "single_elim rank",
        dataclasses.replace(elim, resulting_rank=elim.resulting_rank + 1),
    )
    add(
        "single_elim eliminated",
        dataclasses.replace(elim, eliminated=elim.presentation.generators[1]),
    )
    foreign = Registry().declare("z")
    add("single_elim foreign", dataclasses.replace(elim, eliminated=foreign))
    add("single_elim presentation", pres(elim, "< a, b | b a b a >", Registry()))

    reg = Registry()
    split = build_tower(parse_presentation("< a, b | a^3 >", reg), reg)
    add("free_split bound", dataclasses.replace(split, bound=split.bound + 1))
    add(
        "free_split rank",
        dataclasses.replace(split, split_off_rank=split.split_off_rank + 1),
    )
    add("free_split presentation", pres(split, "< a, b | a^2 b >", Registry()))
    bad_child = dataclasses.replace(
        split.child,
        presentation=Presentation(
            split.child.presentation.generators,
            Word(split.child.presentation.relator.letters[:-1]),
        ),
    )
    add("free_split child relator", dataclasses.replace(split, child=bad_child))

    reg = Registry()
    hnn = build_tower(parse_presentation("< a, b | a b a^-1 b^-1 >", reg), reg)
    rw = hnn.rewrite
    add("case1_hnn bound", dataclasses.replace(hnn, bound=hnn.bound + 1))
    add(
        "case1_hnn stable",
        dataclasses.replace(hnn, rewrite=dataclasses.replace(rw, stable=rw.base)),
    )
    add(
        "case1_hnn base",
        dataclasses.replace(hnn, rewrite=dataclasses.replace(rw, base=rw.stable)),
    )
    add(
        "case1_hnn rewritten",
        dataclasses.replace(
            hnn,
            rewrite=dataclasses.replace(
                rw, rewritten=Word(rw.rewritten.letters[1:], reduced=True)
            ),
        ),
    )
    add(
        "case1_hnn min_subscript",
        dataclasses.replace(
            hnn, rewrite=dataclasses.replace(rw, min_subscript=rw.min_subscript - 1)
        ),
    )
    add(
        "case1_hnn max_subscript",
        dataclasses.replace(
            hnn, rewrite=dataclasses.replace(rw, max_subscript=rw.max_subscript + 1)
        ),
    )
    shifted = (
        rw.renaming[0],
        rw.renaming[1]._replace(subscript=rw.renaming[1].subscript + 1),
    )
    add(
        "case1_hnn renaming subscript",
        dataclasses.replace(hnn, rewrite=dataclasses.replace(rw, renaming=shifted)),
    )
    swapped = (
        rw.renaming[0]._replace(base=rw.stable),
        rw.renaming[1],
    )
    add(
        "case1_hnn renaming base",
        dataclasses.replace(hnn, rewrite=dataclasses.replace(rw, renaming=swapped)),
    )
    hnn_bad_child = dataclasses.replace(
        hnn.child,
        presentation=Presentation(
            hnn.child.presentation.generators,
            Word(
                tuple(
                    Letter(l.gen, -l.sign)
                    for l in hnn.child.presentation.relator.letters
                )
            ),
        ),
    )
    add("case1_hnn child relator", dataclasses.replace(hnn, child=hnn_bad_child))
    add(
        "case1_hnn presentation",
        pres(hnn, "< a, b | a b a^-1 b >", Registry()),
    )

    reg = Registry()
    emb_node = build_tower(parse_presentation("< u, v | u^2 v^3 >", reg), reg)
    emb = emb_node.embedding
    add("case2_embed bound", dataclasses.replace(emb_node, bound=emb_node.bound + 1))
    add(
        "case2_embed u",
        dataclasses.replace(emb_node, embedding=dataclasses.replace(emb, u=emb.v)),
    )
    add(
        "case2_embed v",
        dataclasses.replace(emb_node, embedding=dataclasses.replace(emb, v=emb.u)),
    )
    add(
        "case2_embed alpha",
        dataclasses.replace(
            emb_node, embedding=dataclasses.replace(emb, alpha=emb.alpha + 1)
        ),
    )
    add(
        "case2_embed beta",
        dataclasses.replace(
            emb_node, embedding=dataclasses.replace(emb, beta=emb.beta - 1)
        ),
    )
    add(
        "case2_embed stable",
        dataclasses.replace(
            emb_node,
            embedding=dataclasses.replace(emb, stable=emb.carrier, carrier=emb.stable),
        ),
    )
    add(
        "case2_embed image",
        dataclasses.replace(
            emb_node,
            embedding=dataclasses.replace(
                emb, image=Word(emb.image.letters[1:], reduced=True)
            ),
        ),
    )
    inner_bad = dataclasses.replace(
        emb_node.inner,
        presentation=Presentation(
            emb_node.inner.presentation.generators,
            Word(emb_node.inner.presentation.relator.letters[:-1]),
        ),
    )
    add("case2_embed inner relator", dataclasses.replace(emb_node, inner=inner_bad))
    add(
        "case2_embed presentation",
        pres(emb_node, "< u, v | u^2 v^2 >", Registry()),
    )
    return cases


def test_tamper_suite_every_field_mutation_is_rejected():
    """Single-field corruptions of valid certificates, one per recorded
    field per node kind, are all rejected."""
    cases = _tamper_cases()
    undetected = [
        label for label, node in cases if verify_certificate(node).ok
    ]
    assert undetected == []
    _passed(f"tamper suite: {len(cases)} single-field corruptions all rejected")


def test_reduction_agrees_with_naive_oracle():
    """Stack-scan reduction agrees with the repeated-rescan oracle on
    10,000 random words of length <= 40."""
    rng = Random(RANDOM_SEED + 2)
    reg = Registry()
    gens = tuple(reg.declare(n) for n in "abc")
    alphabet = [Letter(g, s) for g in gens for s in (1, -1)]
    for _ in range(10_000):
        length = rng.randint(0, 40)
        w = Word(tuple(alphabet[rng.randrange(6)] for _ in range(length)))
        assert reduce_word(w).letters == naive_reduce(w.letters)
    _passed("stack reduction vs naive oracle on 10000 words of length <= 40")
