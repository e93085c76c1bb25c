"""Link diagrams as signed crossing lists, and their cube resolutions.

A crossing is stored with its four arc endpoints (a, b, c, d): a is the
incoming understrand and b, c, d follow counterclockwise.  In this labeling
the 0-smoothing always joins (a, b) and (c, d) and the 1-smoothing joins
(a, d) and (b, c); over/under data alone fixes the smoothings, the sign is
only needed for the n+/n- normalization shifts, which is why PD input must
carry explicit signs.

Circles of a resolution are the classes of arcs under the chosen smoothing
gluings, computed with a disjoint-set union; crossing-free components
("free loops") count as extra circles and are ordered last.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InputError


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self):
        groups: dict[object, list] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


@dataclass(frozen=True)
class Crossing:
    endpoints: tuple[int, int, int, int]  # (a, b, c, d), a = incoming under
    sign: int

    @property
    def zero_pairs(self):
        a, b, c, d = self.endpoints
        return (a, b), (c, d)

    @property
    def one_pairs(self):
        a, b, c, d = self.endpoints
        return (a, d), (b, c)

    @property
    def through_pairs(self):
        a, b, c, d = self.endpoints
        return (a, c), (b, d)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    # Braid-closure metadata (None for PD input): strand position of each
    # arc and of each free loop, and the strand count.
    arc_positions: tuple[int, ...] | None = None
    free_loop_positions: tuple[int, ...] | None = None
    strands: int | None = None

    def __post_init__(self):
        counts: dict[int, int] = {}
        for x in self.crossings:
            if x.sign not in (1, -1):
                raise InputError(f"crossing sign must be +1 or -1, got {x.sign}")
            for a in x.endpoints:
                counts[a] = counts.get(a, 0) + 1
        bad = [a for a, n in counts.items() if n != 2]
        if bad:
            raise InputError(
                f"arcs {sorted(bad)} do not appear exactly twice; diagram is not closed"
            )

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted({a for x in self.crossings for a in x.endpoints}))

    @property
    def n_plus(self) -> int:
        return sum(1 for x in self.crossings if x.sign == 1)

    @property
    def n_minus(self) -> int:
        return sum(1 for x in self.crossings if x.sign == -1)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def component_count(self) -> int:
        """Number of link components (through-strand connectivity)."""
        if not self.crossings:
            return self.free_loops
        uf = UnionFind(self.arcs)
        for x in self.crossings:
            for a, b in x.through_pairs:
                uf.union(a, b)
        return len(uf.classes()) + self.free_loops


@dataclass(frozen=True)
class Resolution:
    epsilon: tuple[int, ...]
    circles: tuple[frozenset, ...]  # real circles, sorted by minimal arc
    free_loops: int = 0

    @property
    def circle_count(self) -> int:
        return len(self.circles) + self.free_loops

    @property
    def weight(self) -> int:
        return sum(self.epsilon)


@dataclass(frozen=True)
class EdgeTransition:
    from_epsilon: tuple[int, ...]
    to_epsilon: tuple[int, ...]
    kind: str  # "merge" | "split"
    # merge: circles (src_a, src_b) -> dst; split: circle src -> (dst_a, dst_b)
    merged: tuple[int, int, int] | None
    split: tuple[int, int, int] | None
    unchanged: dict[int, int] = field(compare=False)


def permute_crossings(d: Diagram, order) -> Diagram:
    """Same diagram with crossings listed in a different order."""
    order = list(order)
    if sorted(order) != list(range(d.crossing_count)):
        raise InputError("order must be a permutation of the crossing indices")
    return Diagram(
        crossings=tuple(d.crossings[k] for k in order),
        free_loops=d.free_loops,
        arc_positions=d.arc_positions,
        free_loop_positions=d.free_loop_positions,
        strands=d.strands,
    )


_PD_LINE = re.compile(
    r"^\s*X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*([+-])\s*$"
)


def from_pd(text: str) -> Diagram:
    """Parse signed PD text: one crossing per line, "X[a,b,c,d] <sign>"."""
    crossings = []
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _PD_LINE.match(line)
        if m is None:
            raise InputError(f"malformed PD record: {line.strip()!r}")
        a, b, c, d = (int(m.group(k)) for k in range(1, 5))
        sign = 1 if m.group(5) == "+" else -1
        crossings.append(Crossing(endpoints=(a, b, c, d), sign=sign))
    return Diagram(crossings=tuple(crossings))


def resolve(d: Diagram, epsilon) -> Resolution:
    """Circles of the total resolution of d at the cube vertex epsilon."""
    epsilon = tuple(epsilon)
    if len(epsilon) != d.crossing_count:
        raise InputError(
            f"epsilon length {len(epsilon)} != crossing count {d.crossing_count}"
        )
    if any(e not in (0, 1) for e in epsilon):
        raise InputError("epsilon entries must be 0 or 1")
    uf = UnionFind({a for x in d.crossings for a in x.endpoints})
    for x, e in zip(d.crossings, epsilon):
        for a, b in (x.zero_pairs if e == 0 else x.one_pairs):
            uf.union(a, b)
    circles = sorted((frozenset(c) for c in uf.classes()), key=min)
    return Resolution(
        epsilon=epsilon, circles=tuple(circles), free_loops=d.free_loops
    )


def classify_edge(res_from: Resolution, res_to: Resolution) -> EdgeTransition:
    """Match circles of two resolutions across a single 0->1 flip."""
    from_index = {c: k for k, c in enumerate(res_from.circles)}
    to_index = {c: k for k, c in enumerate(res_to.circles)}
    unchanged = {
        k: to_index[c] for c, k in from_index.items() if c in to_index
    }
    gone = [c for c in res_from.circles if c not in to_index]
    new = [c for c in res_to.circles if c not in from_index]
    nf, nt = len(res_from.circles), len(res_to.circles)
    for k in range(res_from.free_loops):
        unchanged[nf + k] = nt + k
    if len(gone) == 2 and len(new) == 1 and gone[0] | gone[1] == new[0]:
        merged = (from_index[gone[0]], from_index[gone[1]], to_index[new[0]])
        return EdgeTransition(
            res_from.epsilon, res_to.epsilon, "merge", merged, None, unchanged
        )
    if len(gone) == 1 and len(new) == 2 and new[0] | new[1] == gone[0]:
        split = (from_index[gone[0]], to_index[new[0]], to_index[new[1]])
        return EdgeTransition(
            res_from.epsilon, res_to.epsilon, "split", None, split, unchanged
        )
    raise AssertionError(
        f"edge {res_from.epsilon} -> {res_to.epsilon} is neither a merge nor a split"
    )


def edge_transition(d: Diagram, epsilon, flip_index: int) -> EdgeTransition:
    """Classify the cube edge at epsilon that flips crossing flip_index."""
    epsilon = tuple(epsilon)
    if not 0 <= flip_index < d.crossing_count:
        raise InputError(f"flip index {flip_index} out of range")
    if epsilon[flip_index] != 0:
        raise InputError(f"epsilon[{flip_index}] must be 0 to flip")
    target = epsilon[:flip_index] + (1,) + epsilon[flip_index + 1:]
    return classify_edge(resolve(d, epsilon), resolve(d, target))
