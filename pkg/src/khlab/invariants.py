"""Decategorified outputs and the positive-braid theorem verifier.

The graded Euler characteristic of the complex and the alternating state
sum over resolutions must agree exactly (both give the unnormalized Jones
polynomial of the link); this equality is the main external check on the
merge/split/sign conventions.  The verifier mechanically tests the
structural claims about closures of positive braids: vanishing below
degree zero, the rank-2 structure of H^0 for knots, the vanishing of H^1,
the kernel constraint t_(i,alpha) = t_(i,beta) on ker d^1, and the
consistency of the one-crossing-per-generator reduced diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, braid_closure, crossing_ids, reduced_diagram
from .cube import DEFAULT_CAP, ChainComplex, build_complex
from .diagram import Diagram, resolve
from .errors import CapExceededError, NonPositiveWordError
from .homology import BigradedGroup, differential_matrices, homology_table, kernel_basis


class LaurentPolynomial:
    """Laurent polynomial in q with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def q(cls, exponent: int = 1, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def circle(cls) -> "LaurentPolynomial":
        """q + q^-1, the graded dimension of one circle."""
        return cls({1: 1, -1: 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentPolynomial(out)

    def __mul__(self, other):
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    def __pow__(self, n: int):
        out = LaurentPolynomial({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def mirror(self) -> "LaurentPolynomial":
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mono = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if e != 0 and abs(c) == 1:
                term = mono if c > 0 else f"-{mono}"
            elif e == 0:
                term = str(c)
            else:
                term = f"{c}*{mono}"
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def graded_euler_characteristic(c: ChainComplex) -> LaurentPolynomial:
    """Sum of (-1)^(i - n_minus) q^j over the normalized bigraded basis."""
    d = c.diagram
    shift = d.n_plus - 2 * d.n_minus
    coeffs: dict[int, int] = {}
    for i, qs in enumerate(c.q_unnorm):
        sign = -1 if (i - d.n_minus) % 2 else 1
        for q in qs:
            coeffs[q + shift] = coeffs.get(q + shift, 0) + sign
    return LaurentPolynomial(coeffs)


def jones_state_sum(d: Diagram, cap: int = DEFAULT_CAP) -> LaurentPolynomial:
    """Alternating state sum over all 2^m resolutions; never touches chain groups."""
    m = d.crossing_count
    if m > cap:
        raise CapExceededError(m, cap)
    np_, nm = d.n_plus, d.n_minus
    circle = LaurentPolynomial.circle()
    circle_powers = [LaurentPolynomial({0: 1})]
    total = LaurentPolynomial()
    for code in range(2 ** m):
        eps = tuple((code >> j) & 1 for j in range(m))
        w = sum(eps)
        c = resolve(d, eps).circle_count
        while len(circle_powers) <= c:
            circle_powers.append(circle_powers[-1] * circle)
        sign = -1 if (w + nm) % 2 else 1
        term = LaurentPolynomial.q(w + np_ - 2 * nm, sign) * circle_powers[c]
        total = total + term
    return total


def convention_toggle(t: BigradedGroup) -> BigradedGroup:
    """Flip the sign of every q-degree (the inverted-grading convention)."""
    return BigradedGroup({(i, -j): v for (i, j), v in t.table.items()})


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "skip"
    details: str


@dataclass(frozen=True)
class VerificationReport:
    word: BraidWord
    is_knot: bool
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "input": self.word.text(),
            "strands": self.word.strands,
            "crossings": self.word.crossings,
            "is_knot": self.is_knot,
            "checks": [
                {"name": c.name, "status": c.status, "details": c.details}
                for c in self.checks
            ],
        }


def _require_positive(w: BraidWord, op: str):
    if not w.is_positive:
        raise NonPositiveWordError(f"{op} requires a positive braid word")


def _factor_scheme(d: Diagram, generator: int):
    """Strand position set expected of each tensor factor 1..p-1.

    Factor k < generator covers strand position k, factor `generator`
    covers the merged positions {generator, generator+1}, and factor
    k > generator covers position k+1.
    """
    p = d.strands
    scheme = {}
    for k in range(1, p):
        if k < generator:
            scheme[frozenset({k})] = k - 1
        elif k == generator:
            scheme[frozenset({generator, generator + 1})] = k - 1
        else:
            scheme[frozenset({k + 1})] = k - 1
    return scheme


def _occurrence_tensor(c: ChainComplex, d: Diagram, crossing_index: int,
                       generator: int, vector) -> dict:
    """Component of a C^1 vector at one crossing, as a tensor on V^(p-1).

    The labels of each basis state (in the diagram's canonical circle
    order) are permuted into the strand-position factor order, so that
    occurrences of the same generator become directly comparable.
    """
    m = d.crossing_count
    eps = tuple(1 if k == crossing_index else 0 for k in range(m))
    res = resolve(d, eps)
    scheme = _factor_scheme(d, generator)
    circle_to_factor = []
    for circ in res.circles:
        positions = frozenset(d.arc_positions[a] for a in circ)
        circle_to_factor.append(scheme[positions])
    for k in range(res.free_loops):
        positions = frozenset({d.free_loop_positions[k]})
        circle_to_factor.append(scheme[positions])
    tensor: dict[tuple[int, ...], int] = {}
    for idx, state in enumerate(c.bases[1]):
        if state.epsilon != eps:
            continue
        coef = vector[idx]
        if not coef:
            continue
        key = [0] * (d.strands - 1)
        for circle_idx, factor in enumerate(circle_to_factor):
            key[factor] = state.labels[circle_idx]
        tensor[tuple(key)] = tensor.get(tuple(key), 0) + coef
    return tensor


def kernel_structure_check(w: BraidWord, cap: int = DEFAULT_CAP):
    """Verify t_(i,alpha) = t_(i,beta) on every integer kernel vector of d^1.

    Returns (passed, witness, details); the witness is a violating kernel
    vector together with the offending occurrence pair, or None.
    """
    _require_positive(w, "kernel_structure_check")
    d = braid_closure(w)
    m = d.crossing_count
    ids = sorted(crossing_ids(w))  # diagram crossing order
    multi = [g for g in {gen for gen, _ in w.letters}
             if sum(1 for cid in ids if cid.generator == g) >= 2]
    if not multi:
        return True, None, "no generator occurs twice; vacuous"
    c = build_complex(d, cap=cap)
    if m >= 2:
        d1 = differential_matrices(c)[1]
        kernel = kernel_basis(d1)
    else:
        kernel = [tuple(int(i == j) for i in range(len(c.bases[1])))
                  for j in range(len(c.bases[1]))]
    occurrences: dict[int, list[int]] = {}
    for k, cid in enumerate(ids):
        occurrences.setdefault(cid.generator, []).append(k)
    compared = 0
    for vec in kernel:
        for gen, slots in occurrences.items():
            tensors = [
                _occurrence_tensor(c, d, k, gen, vec) for k in slots
            ]
            for beta in range(1, len(tensors)):
                compared += 1
                if tensors[beta] != tensors[0]:
                    details = (
                        f"kernel vector violates t_({gen},1) = t_({gen},{beta + 1})"
                    )
                    return False, (vec, gen, beta + 1), details
    return True, None, (
        f"{len(kernel)} kernel vectors, {compared} occurrence pairs compared"
    )


def reduction_consistency(w: BraidWord, cap: int = DEFAULT_CAP):
    """Check the reduced diagram D': H^1(D') = 0 and dim C^0(D') = 2^p.

    D' is the closure of the word with one crossing per used generator; it
    is an unknot or an unlink, so its first homology must vanish, and its
    all-zero resolution has the same p circles as the original closure.
    """
    _require_positive(w, "reduction_consistency")
    reduced = reduced_diagram(w)
    d_reduced = braid_closure(reduced)
    c_reduced = build_complex(d_reduced, cap=cap)
    dim_c0 = len(c_reduced.bases[0])
    expected = 2 ** w.strands
    table = homology_table(c_reduced)
    h1 = [(i, j) for (i, j) in table.table if i == 1]
    ok = not h1 and dim_c0 == expected
    details = (
        f"D' = closure of {reduced.text()!r}; dim C^0(D') = {dim_c0} "
        f"(expected {expected}); H^1(D') entries: {h1 or 'none'}"
    )
    return ok, details


def verify_positive_braid(w: BraidWord, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Run all structural checks for the closure of a positive braid word."""
    _require_positive(w, "verify_positive_braid")
    d = braid_closure(w)
    components = d.component_count()
    is_knot = components == 1
    c = build_complex(d, cap=cap)
    table = homology_table(c)
    checks = []

    negative = sorted((i, j) for (i, j) in table.table if i < 0)
    checks.append(Check(
        "negative_degree_vanishing",
        "pass" if not negative else "fail",
        f"entries with i<0: {negative or 'none'}",
    ))

    n = d.crossing_count
    p = w.strands
    if not is_knot:
        checks.append(Check(
            "h0_structure", "skip", f"{components} components; knot-only check",
        ))
    else:
        lo, hi = 1 - p + n - 1, 1 - p + n + 1
        row0 = {(i, j): v for (i, j), v in table.table.items() if i == 0}
        expected = {(0, lo): (1, ()), (0, hi): (1, ())}
        checks.append(Check(
            "h0_structure",
            "pass" if row0 == expected else "fail",
            f"H^0 entries {sorted(row0.items())}; expected free rank 1 at "
            f"j = {lo} and j = {hi}",
        ))

    row1 = sorted((i, j) for (i, j) in table.table if i == 1)
    checks.append(Check(
        "h1_vanishing",
        "pass" if not row1 else "fail",
        f"H^1 entries: {row1 or 'none'}",
    ))

    ok, witness, details = kernel_structure_check(w, cap=cap)
    checks.append(Check("kernel_structure", "pass" if ok else "fail", details))

    ok, details = reduction_consistency(w, cap=cap)
    checks.append(Check("reduction_consistency", "pass" if ok else "fail", details))

    return VerificationReport(word=w, is_knot=is_knot, checks=tuple(checks))
