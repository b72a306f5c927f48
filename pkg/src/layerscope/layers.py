"""Closed-form distance-layer combinatorics.

Everything in this module is driven by subsequence comparisons on the vertex
word, never by materializing vertex sets. Write S_i(v) for the set reachable
from v by some walk of length i and S_i*(v) for the set at distance exactly i.
The key facts used throughout:

  * For k <= i < D, S_k(v) and S_i(v') are either nested or disjoint, and
    S_k(v) is contained in S_i(v') exactly when v_{k+1} .. v_{D-(i-k)} equals
    v'_{i+1} .. v'_D. At i = D the test degenerates to a single-symbol rule
    (Kautz) or is vacuous (De Bruijn, where S_D = V).
  * |S_i*(v)| = d^i - sum a_k d^k where a_k is 1 exactly when S_k(v) is a
    maximal sublayer of S_i(v) (``sublayer_nonempty`` below).
  * For w adjacent from v there is at most one j0 >= i with
    S_i*(v) cap S_j0*(w) nonempty, and the intersection cardinalities are
    polynomials derived from the a_k.

The predicates that distinguish nonempty intersections genuinely differ
between d >= 3 and d = 2 (De Bruijn only). Public entry points dispatch on the
concrete d in ``params``; the ``*_eval`` helpers take an explicit
``d2_rules`` flag so symbolic callers can pick the regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from .errors import IndexOutOfRange, NotASuccessor
from .graphs import Family, GraphParams, Vertex, is_successor, successors
from .polynomials import IntPolynomial


# ---------------------------------------------------------------------------
# walk-set predicates (subsequence tests)
# ---------------------------------------------------------------------------


def _check_range(D: int, k: int, i: int) -> None:
    if not (0 <= k <= i <= D):
        raise IndexOutOfRange(f"need 0 <= k <= i <= D, got k={k}, i={i}, D={D}")


def walk_set_contains(family: Family, D: int, v: Vertex, k: int, v2: Vertex, i: int) -> bool:
    """S_k(v) subseteq S_i(v2) for 0 <= k <= i <= D."""
    _check_range(D, k, i)
    if i < D:
        return v[k : k + (D - i)] == v2[i:]
    if family is Family.DEBRUIJN:
        return True  # S_D(v2) is the whole vertex set
    if k < D:
        return v[k] != v2[D - 1]
    return v[D - 1] == v2[D - 1]


def walk_sets_meet(family: Family, D: int, v: Vertex, k: int, v2: Vertex, i: int) -> bool:
    """S_k(v) cap S_i(v2) != empty for 0 <= k <= i <= D.

    Below the diameter the two sets are nested or disjoint, so this coincides
    with containment; at i = D it only relaxes the k = D Kautz case.
    """
    _check_range(D, k, i)
    if i == D and family is Family.KAUTZ and k == D:
        return True  # alphabet has d + 1 >= 3 symbols
    return walk_set_contains(family, D, v, k, v2, i)


def s_contains(params: GraphParams, v: Vertex, k: int, i: int, v2: Optional[Vertex] = None) -> bool:
    """S_k(v) subseteq S_i(v') with v' defaulting to v itself."""
    return walk_set_contains(params.family, params.D, v, k, v2 if v2 is not None else v, i)


def sublayer_nonempty(family: Family, D: int, v: Vertex, k: int, i: int) -> bool:
    """Whether S_k(v) is a maximal sublayer of S_i(v): contained in S_i(v) but
    disjoint from every intermediate S_j(v), k < j < i. Always true for k = i."""
    _check_range(D, k, i)
    if k == i:
        return True
    if not walk_set_contains(family, D, v, k, v, i):
        return False
    for j in range(k + 1, i):
        # j < i <= D, so disjointness is the negation of containment
        if walk_set_contains(family, D, v, k, v, j):
            return False
    return True


def s_ki_nonempty(params: GraphParams, v: Vertex, k: int, i: int) -> bool:
    return sublayer_nonempty(params.family, params.D, v, k, i)


# ---------------------------------------------------------------------------
# layer cardinality polynomial
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LayerPolynomial:
    """The expression d^top - sum_k sub[k] * d^k with small nonnegative sub-coefficients.

    sub holds only nonzero entries; each is 1 except that the k = top - 1
    coefficient can be 2 in the forward intersection polynomial.
    """

    top: int
    sub: tuple  # sorted tuple of (power, coeff)

    @classmethod
    def build(cls, top: int, sub: Dict[int, int]) -> "LayerPolynomial":
        items = tuple(sorted((k, c) for k, c in sub.items() if c != 0))
        for k, c in items:
            if not 0 <= k < top:
                raise ValueError(f"sub-coefficient power {k} outside [0, {top})")
            allowed = (1, 2) if k == top - 1 else (1,)
            if c not in allowed:
                raise ValueError(f"sub-coefficient {c} at power {k} outside {allowed}")
        return cls(top=top, sub=items)

    def coefficient(self, k: int) -> int:
        for power, c in self.sub:
            if power == k:
                return c
        return 0

    def to_poly(self) -> IntPolynomial:
        coeffs = [0] * (self.top + 1)
        coeffs[self.top] = 1
        for k, c in self.sub:
            coeffs[k] -= c
        return IntPolynomial(coeffs)

    def evaluate(self, d: int) -> int:
        return self.to_poly().evaluate(d)

    def __str__(self) -> str:
        return self.to_poly().format()

    def to_json(self) -> list:
        return self.to_poly().to_json()


def layer_coefficients(family: Family, D: int, v: Vertex, i: int) -> List[int]:
    """The bits a_0 .. a_{i-1} of |S_i*(v)| = d^i - sum a_k d^k."""
    return [1 if sublayer_nonempty(family, D, v, k, i) else 0 for k in range(i)]


def layer_star_poly(params: GraphParams, v: Vertex, i: int) -> LayerPolynomial:
    """|S_i*(v)| as a polynomial in d; i = 0 gives the constant 1."""
    return layer_poly_eval(params.family, params.D, v, i)


def layer_poly_eval(family: Family, D: int, v: Vertex, i: int) -> LayerPolynomial:
    if not 0 <= i <= D:
        raise IndexOutOfRange(f"layer index {i} outside [0, {D}]")
    a = layer_coefficients(family, D, v, i)
    return LayerPolynomial.build(i, {k: 1 for k, bit in enumerate(a) if bit})


# ---------------------------------------------------------------------------
# neighbor sets Gamma+
# ---------------------------------------------------------------------------


def gamma_plus(params: GraphParams, v: Vertex, i: int, j: int) -> List[Vertex]:
    """Successors w of v with S_i(v) cap S_j(w) nonempty.

    For j < D the set is empty or the single vertex v_2 .. v_D v_{i+(D-j)};
    for j = D it is all d successors, or the d - 1 with w_D != v_{i+1} in the
    Kautz case with v_{i+1} != v_D.
    """
    if not (0 <= i <= j <= params.D):
        raise IndexOutOfRange(f"need 0 <= i <= j <= D, got i={i}, j={j}")
    return [
        w
        for w in successors(params, v)
        if walk_sets_meet(params.family, params.D, v, i, w, j)
    ]


def gamma_star(params: GraphParams, v: Vertex, i: int, j: int) -> List[Vertex]:
    """Successors w of v with S_i*(v) cap S_j*(w) nonempty (the deflection targets)."""
    d2 = params.d == 2
    return [
        w
        for w in gamma_plus(params, v, i, j)
        if intersection_nonempty_eval(params.family, params.D, v, w, i, j, d2_rules=d2)
    ]


# ---------------------------------------------------------------------------
# intersection emptiness and the unique forward index
# ---------------------------------------------------------------------------


def _constant_tail(v: Vertex, i: int) -> bool:
    """v_i = v_{i+1} = ... = v_D (1-based i)."""
    return all(s == v[i - 1] for s in v[i:])


def back_intersection_empty(family: Family, v: Vertex, w: Vertex, i: int) -> bool:
    """S_i*(v) cap S_{i-1}*(w) = empty, which happens only for De Bruijn with
    v_i = ... = v_D = w_D. Independent of the degree regime."""
    return family is Family.DEBRUIJN and _constant_tail(v, i) and v[-1] == w[-1]


def _require_successor(params: GraphParams, v: Vertex, w: Vertex) -> None:
    if not is_successor(params, v, w):
        raise NotASuccessor(f"{w} is not adjacent from {v}")


def intersection_nonempty_eval(
    family: Family, D: int, v: Vertex, w: Vertex, i: int, j: int, d2_rules: bool
) -> bool:
    """S_i*(v) cap S_j*(w) != empty for w adjacent from v and i - 1 <= j <= D.

    d2_rules selects the d = 2 criteria (extra De Bruijn emptiness cases);
    with d2_rules False the d >= 3 criteria apply.
    """
    if not 1 <= i <= D:
        raise IndexOutOfRange(f"need 1 <= i <= D, got i={i}")
    if not i - 1 <= j <= D:
        raise IndexOutOfRange(f"need i-1 <= j <= D, got j={j}")
    if j == i - 1:
        return not back_intersection_empty(family, v, w, i)
    if i == D:  # forces j = D
        if not d2_rules:
            return True
        return family is Family.KAUTZ or v[-1] == w[-1]
    if not walk_sets_meet(family, D, v, i, w, j):
        return False
    for k in range(i, j):
        # S_i(v) inside a maximal sublayer S_{k,j}(w) kills the intersection
        if sublayer_nonempty(family, D, w, k, j) and walk_set_contains(family, D, v, i, w, k):
            return False
    if (
        d2_rules
        and j == D
        and _constant_tail(v, i)
        and sublayer_nonempty(family, D, w, i - 1, D)
    ):
        return False
    return True


def intersection_nonempty(params: GraphParams, v: Vertex, w: Vertex, i: int, j: int) -> bool:
    """Concrete-degree entry point; uses d = 2 criteria exactly when params.d == 2."""
    _require_successor(params, v, w)
    return intersection_nonempty_eval(
        params.family, params.D, v, w, i, j, d2_rules=params.d == 2
    )


def unique_j0_eval(
    family: Family, D: int, v: Vertex, w: Vertex, i: int, d2_rules: bool
) -> Optional[int]:
    """The unique j0 in [i, D] with S_i*(v) cap S_j0*(w) nonempty, or None.

    None is possible only under d = 2 rules (De Bruijn, constant v-tail
    differing from w_D).
    """
    found = None
    for j in range(i, D + 1):
        if intersection_nonempty_eval(family, D, v, w, i, j, d2_rules):
            if found is not None:
                raise AssertionError(f"two forward intersections at j={found} and j={j}")
            found = j
    return found


def unique_j0(params: GraphParams, v: Vertex, w: Vertex, i: int) -> Optional[int]:
    _require_successor(params, v, w)
    return unique_j0_eval(params.family, params.D, v, w, i, d2_rules=params.d == 2)


# ---------------------------------------------------------------------------
# intersection cardinality polynomials
# ---------------------------------------------------------------------------


class IntersectionCase(Enum):
    SPLIT = "split"  # back and forward both nonempty; cardinalities split the layer
    FORWARD_ONLY = "forward-only"  # back empty, forward at j0 = i equals the layer
    BACK_ONLY = "back-only"  # no forward j; back equals the layer (d = 2 De Bruijn only)


@dataclass(frozen=True)
class IntersectionReport:
    """Cardinality polynomials of S_i*(v) cap S_j*(w) for one (v, w, i).

    back is |S_i*(v) cap S_{i-1}*(w)| and forward is |S_i*(v) cap S_{j0}*(w)|,
    each None when the corresponding set is empty. In the SPLIT case
    back + forward equals the layer polynomial of S_i*(v).
    """

    v: Vertex
    w: Vertex
    i: int
    case: IntersectionCase
    back: Optional[LayerPolynomial]
    forward_j: Optional[int]
    forward: Optional[LayerPolynomial]

    def to_json(self) -> dict:
        return {
            "case": self.case.value,
            "j0": self.forward_j,
            "back": self.back.to_json() if self.back is not None else None,
            "forward": self.forward.to_json() if self.forward is not None else None,
        }


def intersection_report_eval(
    family: Family, D: int, v: Vertex, w: Vertex, i: int, d2_rules: bool
) -> IntersectionReport:
    if not 1 <= i <= D:
        raise IndexOutOfRange(f"need 1 <= i <= D, got i={i}")
    a = layer_coefficients(family, D, v, i)
    back_nonempty = not back_intersection_empty(family, v, w, i)
    j0 = unique_j0_eval(family, D, v, w, i, d2_rules)

    if back_nonempty and j0 is not None:
        # b_k = 1 iff a_k = 1 and v_{D-i+k+1} = w_D, for k <= i - 2
        b = {k: 1 for k in range(i - 1) if a[k] == 1 and v[D - i + k] == w[-1]}
        back = LayerPolynomial.build(i - 1, b)
        fwd_sub = {k: a[k] - b.get(k, 0) for k in range(i - 1)}
        fwd_sub[i - 1] = a[i - 1] + 1
        forward = LayerPolynomial.build(i, fwd_sub)
        return IntersectionReport(v, w, i, IntersectionCase.SPLIT, back, j0, forward)

    if not back_nonempty:
        assert j0 == i, "empty back intersection forces a forward intersection at j = i"
        forward = LayerPolynomial.build(i, {k: a[k] for k in range(i)})
        return IntersectionReport(v, w, i, IntersectionCase.FORWARD_ONLY, None, i, forward)

    # no forward j at all: d = 2 De Bruijn with constant tail; a_{i-1} = 1 lets
    # the full layer d^i - d^{i-1} - ... be rewritten with leading term d^{i-1}
    assert d2_rules and family is Family.DEBRUIJN and a[i - 1] == 1
    back = LayerPolynomial.build(i - 1, {k: a[k] for k in range(i - 1)})
    return IntersectionReport(v, w, i, IntersectionCase.BACK_ONLY, back, None, None)


def intersection_report(params: GraphParams, v: Vertex, w: Vertex, i: int) -> IntersectionReport:
    """Classify and return the intersection cardinality polynomials for one arc."""
    _require_successor(params, v, w)
    return intersection_report_eval(params.family, params.D, v, w, i, d2_rules=params.d == 2)


def intersection_poly_at(report: IntersectionReport, j: int) -> IntPolynomial:
    """|S_i*(v) cap S_j*(w)| as a polynomial, zero where the intersection is empty."""
    if j == report.i - 1:
        return report.back.to_poly() if report.back is not None else IntPolynomial.zero()
    if report.forward_j is not None and j == report.forward_j:
        return report.forward.to_poly()
    return IntPolynomial.zero()
