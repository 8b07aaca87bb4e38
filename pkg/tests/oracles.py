"""Reference implementations kept deliberately naive.

These exist so the fast implementations are checked against code simple
enough to be obviously right: one cancellation per full scan, repeated
to a fixed point.
"""

from __future__ import annotations

from asdim import Letter


def naive_reduce(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    """Freely reduce by rescanning from the start after every single
    cancellation."""
    out = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i] == out[i + 1].inverse():
                del out[i : i + 2]
                changed = True
                break
    return tuple(out)


def naive_cyclic_core(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    """Cyclically reduce by stripping mutually inverse end letters of the
    freely reduced word until none remain."""
    out = list(naive_reduce(letters))
    while len(out) >= 2 and out[0] == out[-1].inverse():
        out = list(naive_reduce(tuple(out[1:-1])))
    return tuple(out)
