"""Free-group words and the Artin action of braids on the free group.

The free group F_m has generators ``x1 .. xm``, one meridian per strand.  A
word is a sequence of letters ``(j, s)`` with ``1 <= j <= m`` and ``s = +-1``;
:func:`free_reduce` cancels adjacent inverse pairs.

The braid group acts by the Artin rules

    sigma_i:      x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
    sigma_i^-1:   x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

with all other generators fixed.  Applying a braid *word* processes its
letters left to right, so the action composes anti-homomorphically (the last
letter of the braid acts last).  The product x1 x2 .. xm is fixed by every
braid -- it is the meridian of the braid axis -- and :func:`artin_apply` of a
word followed by its inverse word is the identity on any input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .braids import BraidWord
from .errors import PreconditionError

FreeLetter = tuple[int, int]


@dataclass(frozen=True, slots=True)
class FreeWord:
    """A (not necessarily reduced) word in the free group on ``rank`` letters."""

    rank: int
    letters: tuple[FreeLetter, ...]

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise PreconditionError("free-group rank must be >= 0")
        for j, s in self.letters:
            if not 1 <= j <= self.rank:
                raise PreconditionError(
                    f"letter x{j} out of range for rank {self.rank}"
                )
            if s not in (1, -1):
                raise PreconditionError(f"letter sign must be +1 or -1, got {s}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise PreconditionError("cannot multiply words of different ranks")
        return FreeWord(self.rank, self.letters + other.letters)

    def __pow__(self, k: int) -> "FreeWord":
        if k < 0:
            return self.inverse() ** (-k)
        return FreeWord(self.rank, self.letters * k)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((j, -s) for j, s in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[FreeLetter]:
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not free_reduce(self).letters

    def __str__(self) -> str:
        return format_free_word(self)


def free_word(rank: int, letters: Iterable[int]) -> FreeWord:
    """Build a word from signed generator numbers: ``free_word(4, [1, -2])``."""
    out: list[FreeLetter] = []
    for v in letters:
        if v == 0:
            raise PreconditionError("0 is not a valid signed letter")
        out.append((abs(v), 1 if v > 0 else -1))
    return FreeWord(rank, tuple(out))


def generator(rank: int, j: int) -> FreeWord:
    return FreeWord(rank, ((j, 1),))


def free_reduce(w: FreeWord) -> FreeWord:
    """Cancel adjacent inverse pairs until none remain (unique reduced form)."""
    stack: list[FreeLetter] = []
    for let in w.letters:
        if stack and stack[-1][0] == let[0] and stack[-1][1] == -let[1]:
            stack.pop()
        else:
            stack.append(let)
    return FreeWord(w.rank, tuple(stack))


def format_free_word(w: FreeWord, names: tuple[str, ...] | None = None) -> str:
    """Render with powers collected: ``x1 x2^-1`` , ``x3^2`` ; identity is ``1``."""
    if names is None:
        names = tuple(f"x{j}" for j in range(1, w.rank + 1))
    if not w.letters:
        return "1"
    parts: list[str] = []
    run_gen, run_exp = w.letters[0][0], w.letters[0][1]
    for j, s in w.letters[1:]:
        if j == run_gen and (run_exp > 0) == (s > 0):
            run_exp += s
        else:
            parts.append(_power_token(names[run_gen - 1], run_exp))
            run_gen, run_exp = j, s
    parts.append(_power_token(names[run_gen - 1], run_exp))
    return " ".join(parts)


def _power_token(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


def parse_free_word(text: str, rank: int) -> FreeWord:
    """Parse ``x1 x2^-1 x1`` or signed integers ``2 -3``.

    A bare signed integer ``j`` is ``x_j`` (so the single token ``1`` is x1);
    the whole-input placeholders ``e`` or ``1`` alone denote the identity.
    """
    if text.strip() in ("", "e", "1"):
        return FreeWord(rank, ())
    letters: list[FreeLetter] = []
    for tok in text.split():
        if tok == "e":
            continue
        base, caret, exp = tok.partition("^")
        power = int(exp) if caret else 1
        if base.startswith("x"):
            j = int(base[1:])
            s = 1
        else:
            v = int(base)
            if v == 0:
                raise PreconditionError("0 is not a valid free-group letter")
            j, s = abs(v), (1 if v > 0 else -1)
        total = s * power
        if total >= 0:
            letters.extend([(j, 1)] * total)
        else:
            letters.extend([(j, -1)] * (-total))
    return FreeWord(rank, tuple(letters))


def boundary_word(rank: int) -> FreeWord:
    """The meridian product ``x1 x2 .. xm``, fixed by the whole braid group."""
    return FreeWord(rank, tuple((j, 1) for j in range(1, rank + 1)))


# ---------------------------------------------------------------------------
# the action
# ---------------------------------------------------------------------------


def artin_generator_image(m: int, i: int, sign: int, j: int) -> FreeWord:
    """Image of the generator ``x_j`` under ``sigma_i^sign`` in B_m."""
    if not 1 <= i <= m - 1:
        raise PreconditionError(f"sigma_{i} does not exist at degree {m}")
    if sign > 0:
        if j == i:
            return free_word(m, [i, i + 1, -i])
        if j == i + 1:
            return generator(m, i)
    else:
        if j == i:
            return generator(m, i + 1)
        if j == i + 1:
            return free_word(m, [-(i + 1), i, i + 1])
    return generator(m, j)


def _apply_letter(m: int, i: int, sign: int, w: FreeWord) -> FreeWord:
    images = [artin_generator_image(m, i, sign, j) for j in range(1, m + 1)]
    out: list[FreeLetter] = []
    for j, s in w.letters:
        img = images[j - 1]
        out.extend(img.letters if s > 0 else img.inverse().letters)
    return free_reduce(FreeWord(m, tuple(out)))


def artin_apply(beta: BraidWord, w: FreeWord) -> FreeWord:
    """Apply the Artin action of the braid word ``beta`` to ``w`` (reduced)."""
    if w.rank != beta.degree:
        raise PreconditionError(
            f"word rank {w.rank} does not match braid degree {beta.degree}"
        )
    out = free_reduce(w)
    for i, s in beta.letters:
        out = _apply_letter(beta.degree, i, s, out)
    return out
