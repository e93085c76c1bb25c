"""Braid words: parsing, crossing classification, permutations, closures.

A braid word on p strands is a sequence of signed Artin generators.  The
letter k > 0 stands for sigma_k (crossing strands k, k+1), k < 0 for its
inverse.  Crossings of the closure are classified into pairs (i, alpha):
generator index i and occurrence number alpha, counted top to bottom, and
are totally ordered by (i, alpha) lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import Crossing, Diagram
from .errors import InputError, NonPositiveWordError

_STRAND_DIRECTIVE = re.compile(r"^\s*p\s*=\s*(\d+)\s*;")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...]  # (generator, sign)

    def __post_init__(self):
        if self.strands < 1:
            raise InputError(f"strand count must be >= 1, got {self.strands}")
        for gen, sign in self.letters:
            if not 1 <= gen <= self.strands - 1:
                raise InputError(
                    f"generator {gen} out of range for {self.strands} strands"
                )
            if sign not in (1, -1):
                raise InputError(f"letter sign must be +1 or -1, got {sign}")

    @property
    def is_positive(self) -> bool:
        return all(sign == 1 for _, sign in self.letters)

    @property
    def crossings(self) -> int:
        return len(self.letters)

    def text(self) -> str:
        body = " ".join(str(gen * sign) for gen, sign in self.letters)
        return f"p={self.strands}; {body}".rstrip()


@dataclass(frozen=True, order=True)
class CrossingId:
    generator: int
    occurrence: int


@dataclass(frozen=True)
class BraidPermutation:
    mapping: tuple[int, ...]  # mapping[k] = image of strand k+1
    cycles: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.cycles)


def parse_braid(text: str) -> BraidWord:
    """Parse braid text: optional "p=<int>;" directive, then signed integers."""
    explicit = None
    m = _STRAND_DIRECTIVE.match(text)
    if m:
        explicit = int(m.group(1))
        text = text[m.end():]
    letters = []
    for tok in text.split():
        try:
            k = int(tok)
        except ValueError:
            raise InputError(f"malformed braid letter {tok!r}") from None
        if k == 0:
            raise InputError("0 is not a braid generator")
        letters.append((abs(k), 1 if k > 0 else -1))
    default = max((gen for gen, _ in letters), default=0) + 1
    strands = default if explicit is None else explicit
    if explicit is not None and explicit < default:
        raise InputError(
            f"strand count {explicit} too small for generator {default - 1}"
        )
    return BraidWord(strands=strands, letters=tuple(letters))


def crossing_ids(w: BraidWord) -> list[CrossingId]:
    """CrossingId for each letter, in word order."""
    seen: dict[int, int] = {}
    out = []
    for gen, _ in w.letters:
        seen[gen] = seen.get(gen, 0) + 1
        out.append(CrossingId(gen, seen[gen]))
    return out


def classify_crossings(w: BraidWord) -> list[CrossingId]:
    """All crossings of w, sorted by the (i, alpha) total order."""
    return sorted(crossing_ids(w))


def braid_permutation(w: BraidWord) -> BraidPermutation:
    """Underlying permutation of the strands; cycle count = closure components."""
    perm = list(range(1, w.strands + 1))
    for gen, _ in w.letters:
        perm[gen - 1], perm[gen] = perm[gen], perm[gen - 1]
    cycles = []
    visited = set()
    for start in range(1, w.strands + 1):
        if start in visited:
            continue
        cyc = []
        k = start
        while k not in visited:
            visited.add(k)
            cyc.append(k)
            k = perm[k - 1]
        cycles.append(tuple(cyc))
    return BraidPermutation(mapping=tuple(perm), cycles=tuple(cycles))


def braid_closure(w: BraidWord) -> Diagram:
    """Compile the closure of w into a Diagram.

    Crossings are emitted in the (i, alpha) order, which fixes the cube's
    coordinate / sign convention for braid inputs.  Strands that carry no
    letters close into free loops.  Arc labels are consecutive integers and
    every arc keeps the strand position it lives on, recorded so that
    resolutions of braid closures can be matched against strand indices.
    """
    p = w.strands
    next_arc = 0
    init = []
    position = {}
    for pos in range(1, p + 1):
        init.append(next_arc)
        position[next_arc] = pos
        next_arc += 1
    cur = list(init)
    raw = []  # (CrossingId, endpoints a,b,c,d in provisional arc ids, sign)
    used = [False] * (p + 1)
    for cid, (gen, sign) in zip(crossing_ids(w), w.letters):
        i = gen
        t_lo, t_hi = cur[i - 1], cur[i]
        b_lo, b_hi = next_arc, next_arc + 1
        position[b_lo] = i
        position[b_hi] = i + 1
        next_arc += 2
        if sign == 1:
            endpoints = (t_lo, b_lo, b_hi, t_hi)  # under enters at top-left
        else:
            endpoints = (t_hi, t_lo, b_lo, b_hi)  # under enters at top-right
        raw.append((cid, endpoints, sign))
        cur[i - 1], cur[i] = b_lo, b_hi
        used[i] = used[i + 1] = True

    # Closure: bottom of each strand position joins its top.
    parent = list(range(next_arc))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pos in range(p):
        parent[find(cur[pos])] = find(init[pos])

    reps = []
    rep_index = {}
    for _, endpoints, _ in raw:
        for a in endpoints:
            r = find(a)
            if r not in rep_index:
                rep_index[r] = len(reps)
                reps.append(r)
    raw.sort(key=lambda item: item[0])
    crossings = tuple(
        Crossing(endpoints=tuple(rep_index[find(a)] for a in endpoints), sign=sign)
        for _, endpoints, sign in raw
    )
    free_positions = tuple(
        pos for pos in range(1, p + 1) if not used[pos]
    )
    arc_position = tuple(position[r] for r in reps)
    return Diagram(
        crossings=crossings,
        free_loops=len(free_positions),
        arc_positions=arc_position,
        free_loop_positions=free_positions,
        strands=p,
    )


def reduced_diagram(w: BraidWord) -> BraidWord:
    """The reduced word: one occurrence of each generator used, ascending.

    Its closure is isotopic to an unknot or an unlink of unknots; only
    defined for positive words.
    """
    if not w.is_positive:
        raise NonPositiveWordError("reduced_diagram requires a positive braid word")
    gens = sorted({gen for gen, _ in w.letters})
    return BraidWord(strands=w.strands, letters=tuple((g, 1) for g in gens))
