"""Exact word arithmetic in finitely generated free groups.

Generators are interned atoms whose identity is a registry-issued uid,
never the display name.  Words are immutable sequences of signed letters;
every operation is pure.  The only mutable object is the Registry, which
serializes uid allocation, so concurrent pipelines are safe as long as
each uses its own registry.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

__all__ = [
    "Fresh",
    "Generator",
    "Letter",
    "MissingImageError",
    "Registry",
    "Subscripted",
    "Word",
    "EMPTY_WORD",
    "concat",
    "cyclic_reduce",
    "equal_as_cyclic_words",
    "exponent_sum",
    "format_word",
    "generator_power",
    "inverse",
    "occurrence_count",
    "reduce_word",
    "single",
    "substitute",
]

# Process-wide uid source.  Uniqueness across all registries means atoms
# from unrelated pipelines can never alias each other by accident.
_UIDS = itertools.count()


@dataclass(frozen=True)
class Subscripted:
    """Provenance of a conjugate-family generator: base conjugated by the
    i-th power of a stable letter."""

    base: "Generator"
    subscript: int


@dataclass(frozen=True)
class Fresh:
    """Provenance of a generator invented by the engine, with a short
    human-readable reason."""

    reason: str


@dataclass(frozen=True, eq=False)
class Generator:
    """A generator atom.

    Two Generator objects are the same generator exactly when their uids
    agree; display names may repeat across construction steps.  origin is
    None for user-declared symbols.
    """

    name: str
    uid: int
    origin: Subscripted | Fresh | None = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Generator) and self.uid == other.uid

    def __hash__(self) -> int:
        return hash(self.uid)

    def __repr__(self) -> str:
        return self.name


class Letter(NamedTuple):
    """A signed occurrence of a generator.  sign is +1 or -1."""

    gen: Generator
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


@dataclass(frozen=True)
class Word:
    """An immutable letter sequence.

    The reduced flag records that no adjacent cancelling pair exists.  It
    is set by reduce_word (and by constructions that preserve it) and is
    excluded from equality: words are equal iff their letters are.
    """

    letters: tuple[Letter, ...] = ()
    reduced: bool = field(default=False, compare=False)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


EMPTY_WORD = Word((), reduced=True)


def single(gen: Generator, sign: int = 1) -> Word:
    return Word((Letter(gen, sign),), reduced=True)


def generator_power(gen: Generator, n: int) -> Word:
    """The word gen^n, n may be negative or zero.

    >>> r = Registry(); t = r.declare("t")
    >>> format_word(generator_power(t, -2))
    't^-2'
    """
    sign = 1 if n >= 0 else -1
    return Word(tuple(Letter(gen, sign) for _ in range(abs(n))), reduced=True)


def concat(*words: Word) -> Word:
    """Plain concatenation, no reduction."""
    if len(words) == 1:
        return words[0]
    letters: list[Letter] = []
    for w in words:
        letters.extend(w.letters)
    return Word(tuple(letters))


def inverse(w: Word) -> Word:
    """The group inverse: letters reversed, signs flipped."""
    return Word(tuple(l.inverse() for l in reversed(w.letters)), reduced=w.reduced)


def reduce_word(w: Word) -> Word:
    """The unique freely reduced form of w, via a single stack scan.

    >>> r = Registry(); a, b = r.declare("a"), r.declare("b")
    >>> format_word(reduce_word(concat(single(a), single(a, -1))))
    '1'
    >>> format_word(reduce_word(concat(single(a), single(b), single(b, -1), single(a))))
    'a^2'
    """
    if w.reduced:
        return w
    stack: list[Letter] = []
    for l in w.letters:
        if stack and stack[-1].gen == l.gen and stack[-1].sign == -l.sign:
            stack.pop()
        else:
            stack.append(l)
    return Word(tuple(stack), reduced=True)


class CyclicReduction(NamedTuple):
    core: Word
    conjugator: Word


def cyclic_reduce(w: Word) -> CyclicReduction:
    """Strip mutually cancelling first/last letters after free reduction.

    Returns (core, conjugator) with core cyclically reduced and
    conjugator * core * conjugator^-1 freely equal to w.

    >>> r = Registry(); a, b = r.declare("a"), r.declare("b")
    >>> core, conj = cyclic_reduce(concat(single(a), single(b), single(a, -1)))
    >>> format_word(core), format_word(conj)
    ('b', 'a')
    """
    red = reduce_word(w)
    ls = red.letters
    i, j = 0, len(ls)
    while j - i >= 2 and ls[i].gen == ls[j - 1].gen and ls[i].sign == -ls[j - 1].sign:
        i += 1
        j -= 1
    # Contiguous slices of a reduced word are reduced.
    return CyclicReduction(
        Word(ls[i:j], reduced=True), Word(ls[:i], reduced=True)
    )


def exponent_sum(w: Word, gen: Generator) -> int:
    return sum(l.sign for l in w.letters if l.gen == gen)


def occurrence_count(w: Word, gen: Generator) -> int:
    return sum(1 for l in w.letters if l.gen == gen)


class MissingImageError(ValueError):
    """substitute() met a generator with no assigned image."""

    def __init__(self, gen: Generator):
        self.gen = gen
        super().__init__(f"no image given for generator {gen.name}")


def substitute(w: Word, images: Mapping[Generator, Word]) -> Word:
    """Apply the homomorphism determined by images and freely reduce.

    A letter g^-1 maps to the inverse of images[g].  Every generator
    occurring in w must have an image.
    """
    pieces: list[Word] = []
    for l in w.letters:
        img = images.get(l.gen)
        if img is None:
            raise MissingImageError(l.gen)
        pieces.append(img if l.sign > 0 else inverse(img))
    return reduce_word(concat(*pieces) if pieces else EMPTY_WORD)


def equal_as_cyclic_words(a: Word, b: Word) -> bool:
    """Whether a and b have the same cyclic core up to rotation."""
    ca = cyclic_reduce(a).core.letters
    cb = cyclic_reduce(b).core.letters
    if len(ca) != len(cb):
        return False
    if not ca:
        return True
    doubled = cb + cb
    n = len(ca)
    return any(doubled[k : k + n] == ca for k in range(n))


def format_word(w: Word) -> str:
    """Render a word in the presentation grammar, runs collapsed to powers.

    The empty word renders as "1".
    """
    if not w.letters:
        return "1"
    parts: list[str] = []
    for (gen, sign), run in itertools.groupby(w.letters):
        e = sign * sum(1 for _ in run)
        parts.append(gen.name if e == 1 else f"{gen.name}^{e}")
    return " ".join(parts)


class Registry:
    """Allocates generator atoms.

    uids come from a process-global counter, so distinct registries never
    hand out aliasing atoms; the per-registry state only drives the
    deterministic display names of invented generators.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._subscripted: dict[tuple[int, int], Generator] = {}
        self._pair_count = 0

    def declare(self, name: str) -> Generator:
        if not name:
            raise ValueError("generator name must be nonempty")
        return Generator(name, next(_UIDS))

    def fresh(self, name: str, reason: str) -> Generator:
        return Generator(name, next(_UIDS), Fresh(reason))

    def subscripted(self, base: Generator, subscript: int) -> Generator:
        """The conjugate-family generator written base@subscript.

        Memoized per registry, so repeated requests within one rewriting
        step yield the identical atom.
        """
        with self._lock:
            key = (base.uid, subscript)
            g = self._subscripted.get(key)
            if g is None:
                g = Generator(
                    f"{base.name}@{subscript}",
                    next(_UIDS),
                    Subscripted(base, subscript),
                )
                self._subscripted[key] = g
            return g

    def embedding_pair(self) -> tuple[Generator, Generator]:
        """A fresh (t#k, b#k) pair for an embedding substitution; k counts
        per registry so rendered names are deterministic."""
        with self._lock:
            self._pair_count += 1
            k = self._pair_count
        t = Generator(f"t#{k}", next(_UIDS), Fresh(f"embedding stable letter {k}"))
        b = Generator(f"b#{k}", next(_UIDS), Fresh(f"embedding carrier letter {k}"))
        return t, b
