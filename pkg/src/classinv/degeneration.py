"""One-parameter torus degenerations: expand per-column weights, compute
the flat limit of an ideal as its weighted initial ideal, and produce
nonzero members of the flat family.

The limit of an ideal under a weight vector w is generated by the
w-initial forms of a Groebner basis computed under a w-compatible order
(weight first, graded reverse lexicographic tie-break).  Taking the
basis under an incompatible order can produce a strictly smaller ideal,
so `flat_limit` recomputes the basis under the compatible order unless
the supplied one already certifies there.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .groebner import Ideal, certify_gb
from .poly import GREVLEX, MonomialOrder, Polynomial, Ring, initial_form, weighted_order


def expand_column_weights(ring: Ring, column_weights: Sequence[int], columns: Sequence[str]) -> List[int]:
    """Expand per-matrix-column weights to one weight per ring variable.

    `columns` lists the letter prefixes of the matrix columns in order;
    every variable starting with that letter gets the column's weight.
    Variables outside all columns (constants never appear as variables)
    would be an error.
    """
    if len(column_weights) != len(columns):
        raise ValueError("need one weight per column")
    table = dict(zip(columns, column_weights))
    out = []
    for name in ring.variables:
        prefix = name[0]
        if prefix not in table:
            raise ValueError(f"variable {name!r} matches no column prefix")
        out.append(table[prefix])
    return out


def compatible_order(w: Sequence[int]) -> MonomialOrder:
    """The monomial order 'smaller w-weight first, ties by grevlex'."""
    return weighted_order(w)


def certified_basis(ideal: Ideal, w: Sequence[int], basis: Optional[Sequence[Polynomial]] = None) -> List[Polynomial]:
    """A Groebner basis of the ideal under the w-compatible order.

    If a candidate basis is supplied and passes the Buchberger
    certificate under that order, it is used directly; otherwise the
    reduced basis is recomputed.
    """
    order = compatible_order(w)
    if basis is not None and certify_gb(list(basis), order):
        return list(basis)
    return ideal.groebner_basis(order)


def flat_limit(
    ideal: Ideal, w: Sequence[int], basis: Optional[Sequence[Polynomial]] = None
) -> Ideal:
    """The t -> 0 limit of the one-parameter family attached to w."""
    gb = certified_basis(ideal, w, basis)
    return Ideal(ideal.ring, [initial_form(g, w) for g in gb])


def family_member(
    ideal: Ideal, w: Sequence[int], t: Fraction, basis: Optional[Sequence[Polynomial]] = None
) -> Ideal:
    """The fiber of the family at a nonzero parameter value.

    Each basis element g becomes t^m g(t^{w_1} v_1, ...), scaled by the
    minimal power making every exponent nonnegative; at t = 1 this is
    the source ideal back.
    """
    t = Fraction(t)
    if t == 0:
        raise ValueError("use flat_limit for the zero fiber")
    gb = certified_basis(ideal, w, basis)
    gens = []
    for g in gb:
        weights = {m: sum(wi * e for wi, e in zip(w, m)) for m in g.terms}
        mu = min(weights.values())
        gens.append(
            Polynomial(
                g.ring, {m: c * t ** (weights[m] - mu) for m, c in g.terms.items()}
            )
        )
    return Ideal(ideal.ring, gens)


def run_degeneration(case, data) -> Tuple[Ideal, Ideal, bool]:
    """Execute a catalogued degeneration; returns (limit, target, equal)."""
    from .groebner import ideal_equal

    columns = _column_letters(case.ring)
    w = expand_column_weights(case.ring, data.column_weights, columns)
    source = case.ideal(data.source)
    limit = flat_limit(source, w)
    target = case.ideal(data.target)
    return limit, target, ideal_equal(limit, target)


def _column_letters(ring: Ring) -> List[str]:
    seen: List[str] = []
    for name in ring.variables:
        if name[0] not in seen:
            seen.append(name[0])
    return seen
