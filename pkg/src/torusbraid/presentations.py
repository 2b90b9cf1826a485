"""Group presentations of the links built from commuting braid pairs.

For a commuting pair ``(a, b)`` of degree-``m`` braids, the fundamental group
of the associated link complement is generated by the strand meridians
``x1 .. xm`` subject to the relations ``x_j = a.x_j`` and ``x_j = b.x_j``
(Artin action), one pair per strand.  :func:`torus_covering_group` builds that
presentation; :func:`tietze_eliminate` shrinks it by eliminating generators
that occur exactly once in some relator; :func:`abelianization` computes the
integral invariants via Smith normal form over exact integers; and
:func:`finite_quotient_count` counts homomorphisms onto small finite groups by
exhaustive enumeration.

Presentations carry ``marked`` words -- named free-group words that are mapped
through every Tietze substitution.  The presentation built here marks the
meridian product ``x1 .. xm`` under the name ``"boundary"``; it equals the
image of the braid-axis meridian and is what powers the central quotients of
:func:`central_twist_relator`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .artin import (
    FreeWord,
    artin_apply,
    boundary_word,
    format_free_word,
    free_reduce,
    generator,
)
from .braids import BraidWord, commute_check, normal_form
from .errors import PreconditionError

TUPLE_CAP = 10**8


@dataclass
class GroupPresentation:
    """``< generators | relators >`` plus named marked words.

    ``generators[k]`` is the display name of free-group index ``k+1``.
    Relators are reduced free words; marked words ride along through
    eliminations but impose nothing.
    """

    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...]
    marked: dict[str, FreeWord] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return format_presentation(self)


def format_presentation(p: GroupPresentation) -> str:
    rels = ", ".join(format_free_word(r, p.generators) for r in p.relators)
    gens = ", ".join(p.generators)
    return f"< {gens} | {rels} >"


def torus_covering_group(
    a: BraidWord, b: BraidWord, *, require_commuting: bool = True
) -> GroupPresentation:
    """Meridian presentation of the link group of the pair ``(a, b)``.

    Raises a precondition error if the braids do not commute (the pair does
    not define a surface in that case), unless ``require_commuting=False``.
    """
    if a.degree != b.degree:
        raise PreconditionError(
            f"braid degrees differ: {a.degree} vs {b.degree}"
        )
    if require_commuting and not commute_check(a, b):
        raise PreconditionError(
            "the two braids do not commute, so they do not define a link"
        )
    m = a.degree
    names = tuple(f"x{j}" for j in range(1, m + 1))
    relators: list[FreeWord] = []
    for braid in (a, b):
        for j in range(1, m + 1):
            rel = free_reduce(
                generator(m, j).inverse() * artin_apply(braid, generator(m, j))
            )
            if rel.letters:
                relators.append(rel)
    return GroupPresentation(names, tuple(relators), {"boundary": boundary_word(m)})


# ---------------------------------------------------------------------------
# Tietze elimination
# ---------------------------------------------------------------------------


def _substitute(w: FreeWord, gi: int, replacement: FreeWord) -> FreeWord:
    out: list[tuple[int, int]] = []
    inv = replacement.inverse()
    for j, s in w.letters:
        if j == gi:
            out.extend(replacement.letters if s > 0 else inv.letters)
        else:
            out.append((j, s))
    return free_reduce(FreeWord(w.rank, tuple(out)))


def _drop_generator(w: FreeWord, gi: int) -> FreeWord:
    letters = tuple((j - 1 if j > gi else j, s) for j, s in w.letters)
    return FreeWord(w.rank - 1, letters)


def _clean(relators: list[FreeWord]) -> list[FreeWord]:
    """Drop empty relators and exact duplicates, keeping first occurrences."""
    seen: set[tuple] = set()
    out: list[FreeWord] = []
    for r in relators:
        if not r.letters or r.letters in seen:
            continue
        seen.add(r.letters)
        out.append(r)
    return out


def tietze_eliminate(p: GroupPresentation) -> GroupPresentation:
    """Eliminate generators occurring exactly once in some relator.

    Repeatedly: find the first relator containing a generator with exactly one
    occurrence (counting both signs), solve the relator for that generator,
    substitute everywhere (including marked words), and drop the relator and
    the generator.  Only free reduction and removal of empty/duplicate
    relators are applied besides that, so the group is unchanged and the
    procedure is deterministic.
    """
    names = list(p.generators)
    relators = _clean([free_reduce(r) for r in p.relators])
    marked = {k: free_reduce(v) for k, v in p.marked.items()}

    while True:
        target: tuple[int, int] | None = None  # (relator index, generator)
        for ri, rel in enumerate(relators):
            counts: dict[int, int] = {}
            for j, _ in rel.letters:
                counts[j] = counts.get(j, 0) + 1
            for j, _ in rel.letters:
                if counts[j] == 1:
                    target = (ri, j)
                    break
            if target:
                break
        if target is None:
            break
        ri, gi = target
        rel = relators[ri]
        pos = next(k for k, (j, _) in enumerate(rel.letters) if j == gi)
        j, s = rel.letters[pos]
        before = FreeWord(rel.rank, rel.letters[:pos])
        after = FreeWord(rel.rank, rel.letters[pos + 1 :])
        # u g^s v = 1  =>  g^s = u^-1 v^-1  =>  g = (u^-1 v^-1)^s
        solved = free_reduce(before.inverse() * after.inverse())
        replacement = solved if s > 0 else solved.inverse()

        del relators[ri]
        relators = [_substitute(r, gi, replacement) for r in relators]
        marked = {k: _substitute(v, gi, replacement) for k, v in marked.items()}
        relators = [_drop_generator(r, gi) for r in relators]
        marked = {k: _drop_generator(v, gi) for k, v in marked.items()}
        del names[gi - 1]
        relators = _clean(relators)

    return GroupPresentation(tuple(names), tuple(relators), marked)


def add_relator(p: GroupPresentation, w: FreeWord) -> GroupPresentation:
    """The quotient presentation with one extra relator."""
    if w.rank != p.rank:
        raise PreconditionError(
            f"relator rank {w.rank} does not match presentation rank {p.rank}"
        )
    w = free_reduce(w)
    relators = p.relators + ((w,) if w.letters else ())
    return GroupPresentation(p.generators, relators, dict(p.marked))


def central_twist_relator(p: GroupPresentation, b: BraidWord) -> FreeWord:
    """The central word to kill when the second braid is a half-twist power.

    If ``b = Delta^k``, the presentation's relators already force the marked
    boundary word ``W`` to satisfy: for even ``k``, the second family of
    relations says exactly that ``W^(k/2)`` is central; for odd ``k`` they
    imply ``W^k`` central (apply the braid relation twice).  The returned word
    is ``W^(k/2)`` resp. ``W^k`` in the presentation's current generators.
    Raises a precondition error if ``b`` is not a half-twist power or the
    presentation does not carry a ``"boundary"`` marked word.
    """
    nf = normal_form(b)
    if not nf.is_half_twist_power():
        raise PreconditionError(
            "central quotient requires the second braid to equal a power "
            "of the half twist"
        )
    if "boundary" not in p.marked:
        raise PreconditionError("presentation has no marked boundary word")
    k = nf.infimum
    exponent = k // 2 if k % 2 == 0 else k
    return free_reduce(p.marked["boundary"] ** exponent)


# ---------------------------------------------------------------------------
# abelianization
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AbelianInvariants:
    """H_1 as ``Z^rank + Z/d1 + ... + Z/dk`` with ``d1 | d2 | ... | dk``."""

    rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts: list[str] = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form (exact, over Z).

    Returns ``[d1, .., dr]`` with each ``d_t > 0`` and ``d_t | d_{t+1}``;
    ``r`` is the rank of the matrix.
    """
    a = [list(map(int, row)) for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    out: list[int] = []
    t = 0
    while True:
        pivot: tuple[int, int] | None = None
        best = 0
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (pivot is None or v < best):
                    pivot, best = (i, j), v
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        p = a[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            q = a[i][t] // p
            if q:
                for j in range(t, ncols):
                    a[i][j] -= q * a[t][j]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, ncols):
            q = a[t][j] // p
            if q:
                for i in range(t, nrows):
                    a[i][j] -= q * a[i][t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue  # smaller remainders appeared; pick a new pivot
        # pivot must divide the rest of the submatrix
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
            continue
        out.append(abs(p))
        t += 1
    return out


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    """Invariants of the abelianized group (exponent-sum matrix, SNF)."""
    rows = []
    for rel in p.relators:
        row = [0] * p.rank
        for j, s in rel.letters:
            row[j - 1] += s
        rows.append(row)
    if not rows:
        return AbelianInvariants(p.rank, ())
    divisors = smith_invariants(rows)
    torsion = tuple(d for d in divisors if d > 1)
    return AbelianInvariants(p.rank - len(divisors), torsion)


def cyclic_hom_count(ab: AbelianInvariants, k: int) -> int:
    """Number of homomorphisms to Z/k predicted by the abelianization."""
    if k < 1:
        raise PreconditionError("cyclic order must be >= 1")
    n = k**ab.rank
    for d in ab.torsion:
        n *= gcd(d, k)
    return n


# ---------------------------------------------------------------------------
# finite quotients by enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FiniteGroup:
    """A small finite group as an index-based multiplication table."""

    name: str
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int = 0

    @property
    def size(self) -> int:
        return len(self.mult)

    def is_abelian(self) -> bool:
        n = self.size
        return all(
            self.mult[x][y] == self.mult[y][x] for x in range(n) for y in range(x)
        )


def _tabulate(name: str, elements: list, compose, unit) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mult = tuple(
        tuple(index[compose(elements[x], elements[y])] for y in range(n))
        for x in range(n)
    )
    inverse = [0] * n
    for x in range(n):
        for y in range(n):
            if mult[x][y] == index[unit]:
                inverse[x] = y
                break
    return FiniteGroup(name, mult, tuple(inverse), index[unit])


def cyclic_group(k: int) -> FiniteGroup:
    if k < 1:
        raise PreconditionError("cyclic order must be >= 1")
    return _tabulate(
        f"Z{k}", list(range(k)), lambda x, y: (x + y) % k, 0
    )


def dihedral_group(k: int) -> FiniteGroup:
    """Symmetries of the k-gon, order 2k; elements (rotation, is_reflection)."""
    if not 2 <= k <= 12:
        raise PreconditionError("dihedral parameter must be in 2..12")
    elements = [(i, e) for e in (0, 1) for i in range(k)]

    def compose(x, y):
        i, e = x
        j, d = y
        return ((i + (j if e == 0 else -j)) % k, (e + d) % 2)

    return _tabulate(f"D{k}", elements, compose, (0, 0))


def symmetric_group(k: int) -> FiniteGroup:
    if not 1 <= k <= 5:
        raise PreconditionError("symmetric-group parameter must be in 1..5")
    elements = list(itertools.permutations(range(k)))

    def compose(x, y):
        return tuple(y[x[i]] for i in range(k))  # x then y, like braid words

    return _tabulate(f"S{k}", elements, compose, tuple(range(k)))


@dataclass(frozen=True, slots=True)
class QuotientCounts:
    homomorphisms: int
    epimorphisms: int
    abelian_image: int


def _relator_holds(rel, images, mult, inv, identity) -> bool:
    acc = identity
    for j, s in rel:
        x = images[j - 1] if s > 0 else inv[images[j - 1]]
        acc = mult[acc][x]
    return acc == identity


def _generates(images, mult, identity, n) -> bool:
    seen = {identity}
    stack = [identity]
    while stack:
        x = stack.pop()
        for g in images:
            y = mult[x][g]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _count_block(args) -> tuple[int, int, int]:
    mult, inv, identity, relators, g, first_values = args
    n = len(mult)
    homs = epis = abelian = 0
    for first in first_values:
        for rest in itertools.product(range(n), repeat=g - 1):
            images = (first, *rest)
            if not all(
                _relator_holds(r, images, mult, inv, identity) for r in relators
            ):
                continue
            homs += 1
            if all(
                mult[images[u]][images[v]] == mult[images[v]][images[u]]
                for u in range(g)
                for v in range(u)
            ):
                abelian += 1
            if _generates(images, mult, identity, n):
                epis += 1
    return homs, epis, abelian


def finite_quotient_count(
    p: GroupPresentation, group: FiniteGroup, *, workers: int = 1
) -> QuotientCounts:
    """Count homomorphisms, epimorphisms, and abelian-image homomorphisms.

    Exhaustive over all ``size**rank`` generator-image tuples (precondition:
    at most ``10**8``).  ``workers > 1`` splits on the first generator's image
    via a process pool; partial counts are summed in a fixed order, so the
    result never depends on the worker count.
    """
    g = p.rank
    n = group.size
    if g == 0:
        epi = 1 if n == 1 else 0
        return QuotientCounts(1, epi, 1)
    if n**g > TUPLE_CAP:
        raise PreconditionError(
            f"enumeration of {n}^{g} tuples exceeds the cap of {TUPLE_CAP}"
        )
    relators = tuple(r.letters for r in p.relators)
    if workers < 1:
        raise PreconditionError("workers must be >= 1")
    blocks: list[list[int]]
    if workers == 1 or n == 1:
        blocks = [list(range(n))]
    else:
        workers = min(workers, n)
        blocks = [list(range(n))[w::workers] for w in range(workers)]
    args = [
        (group.mult, group.inverse, group.identity, relators, g, block)
        for block in blocks
    ]
    if len(args) == 1:
        parts = [_count_block(args[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(args)) as pool:
            parts = list(pool.map(_count_block, args))
    homs = sum(x[0] for x in parts)
    epis = sum(x[1] for x in parts)
    abelian = sum(x[2] for x in parts)
    return QuotientCounts(homs, epis, abelian)
