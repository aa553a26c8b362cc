"""Operator layer: brackets, polar and contraction operators, Jacobians, and
transvectants of arbitrary order.

A "triple" argument is either a family letter (``"a"`` stands for the symbol
triple a1, a2, a3) or an explicit sequence of three polynomials.  All
differentiation is with respect to a covariant family (``"x"`` unless stated);
contravariant variables and coefficient symbols ride along as parameters.

The transvectant of order n expands the bracket power [abc]^n over three
reserved symbol triples and substitutes n-th partial derivatives of the three
arguments for the symbol powers.  The reserved triples live in families the
parser cannot produce, so arguments containing user-level a, b, c symbols are
never captured.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence, Union

from .errors import InvalidOrderError
from .poly import (
    Poly,
    _compositions,
    _mul_dicts,
    const,
    var,
)

Triple = Union[str, Sequence[Poly]]


def triple_vars(family: str) -> tuple[Poly, Poly, Poly]:
    return (var(f"{family}1"), var(f"{family}2"), var(f"{family}3"))


def incidence(left: str, right: str = "x") -> Poly:
    """The incidence form u_x = u1 x1 + u2 x2 + u3 x3."""
    acc = Poly()
    for i in (1, 2, 3):
        acc = acc + var(f"{left}{i}") * var(f"{right}{i}")
    return acc


def _as_triple(t: Triple) -> tuple[Poly, Poly, Poly]:
    if isinstance(t, str):
        return triple_vars(t)
    seq = tuple(t)
    if len(seq) != 3:
        raise ValueError("a triple needs exactly three components")
    return tuple(q if isinstance(q, Poly) else const(q) for q in seq)  # type: ignore[return-value]


def bracket(p: Triple, q: Triple, r: Triple) -> Poly:
    """3x3 determinant of three triples; alternating in its arguments."""
    a, b, c = _as_triple(p), _as_triple(q), _as_triple(r)
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def polar(p: Poly, frm: str, to: str) -> Poly:
    """The polar operator: sum of to_i times the partial in frm_i."""
    acc = Poly()
    for i in (1, 2, 3):
        d = p.derive(f"{frm}{i}")
        if d:
            acc = acc + var(f"{to}{i}") * d
    return acc


def multi_polar(p: Poly, pattern: Mapping[str, int], family: str = "x") -> Poly:
    """Polar form of ``p``: the coefficient of the matching scalar monomial in
    the expansion of ``p`` under family -> family + t1*fam1 + t2*fam2 + ...

    ``multi_polar(f, {"y": 2, "z": 1})`` is the form written f_yyz when f is
    cubic: apply the polar toward each listed family the listed number of
    times and divide by the factorials.  Pure patterns reduce to evaluation
    (f_yyy is f with x replaced by y); mixed patterns carry the multinomial
    multiplicity of the expansion.
    """
    out = p
    denom = 1
    for fam, k in pattern.items():
        for _ in range(k):
            out = polar(out, family, fam)
        denom *= factorial(k)
    if denom != 1:
        out = out / denom
    return out


def contract(p: Poly, contra: str = "u", co: str = "x") -> Poly:
    """The contraction operator: sum over i of d^2 p / d co_i d contra_i."""
    acc = Poly()
    for i in (1, 2, 3):
        d = p.derive(f"{co}{i}").derive(f"{contra}{i}")
        if d:
            acc = acc + d
    return acc


def contract_power(p: Poly, k: int, contra: str = "u", co: str = "x") -> Poly:
    for _ in range(k):
        p = contract(p, contra, co)
    return p


def jacobian(f: Poly, g: Poly, h: Poly, family: str = "x") -> Poly:
    """Determinant of first partials; equals transvectant(1, f, g, h)."""
    d = [[q.derive(f"{family}{i}") for i in (1, 2, 3)] for q in (f, g, h)]
    return (
        d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1])
        - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0])
        + d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0])
    )


# The three symbol triples reserved for bracket-power expansion.  The '#'
# families cannot be produced by the parser, so user polynomials never
# collide with them.
_SYM = ("#a", "#b", "#c")


@lru_cache(maxsize=None)
def _bracket_power(n: int):
    """[abc]^n over the reserved triples, grouped for the substitution loop:
    a map alpha -> beta -> tuple of (gamma, coeff).  Treat as read-only."""
    power = bracket(_SYM[0], _SYM[1], _SYM[2]) ** n
    slots = {
        fam: [var(f"{fam}{i}")._t for i in (1, 2, 3)] for fam in _SYM
    }
    # Recover exponent triples per reserved family from each monomial.
    shift_of = {}
    for fam in _SYM:
        for i in (1, 2, 3):
            (key,) = slots[fam][i - 1]
            shift_of[(fam, i)] = key.bit_length() - 1
    grouped: dict[tuple, dict[tuple, list]] = {}
    for key, coeff in power._t.items():
        alpha = tuple((key >> shift_of[("#a", i)]) & 0xFFFF for i in (1, 2, 3))
        beta = tuple((key >> shift_of[("#b", i)]) & 0xFFFF for i in (1, 2, 3))
        gamma = tuple((key >> shift_of[("#c", i)]) & 0xFFFF for i in (1, 2, 3))
        grouped.setdefault(alpha, {}).setdefault(beta, []).append((gamma, coeff))
    return grouped


def _partials_table(p: Poly, n: int, family: str) -> dict[tuple[int, int, int], Poly]:
    """All n-th iterated partials d^alpha p for |alpha| = n."""
    table = {(0, 0, 0): p}
    for k in range(1, n + 1):
        nxt: dict[tuple[int, int, int], Poly] = {}
        for alpha in _compositions(k):
            i = 0 if alpha[0] else (1 if alpha[1] else 2)
            pred = list(alpha)
            pred[i] -= 1
            nxt[alpha] = table[tuple(pred)].derive(f"{family}{i + 1}")
        table = nxt
    return table


def transvectant(n: int, f: Poly, g: Poly, h: Poly, family: str = "x") -> Poly:
    """Order-n transvectant J^n[f, g, h].

    Expands [abc]^n and substitutes the n-th partials of f, g, h for the
    symbol powers; zero whenever any argument has degree below n in the
    differentiation family.  The order-1 case is the Jacobian determinant.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"transvectant order must be a positive integer, got {n!r}")
    if any(q.degree_in(family) < n for q in (f, g, h)):
        return Poly()
    ta = _partials_table(f, n, family)
    tb = ta if g is f else _partials_table(g, n, family)
    tc = ta if h is f else (tb if h is g else _partials_table(h, n, family))
    acc: dict = {}
    acc_get = acc.get
    for alpha, betas in _bracket_power(n).items():
        fa = ta[alpha]._t
        if not fa:
            continue
        mid: dict = {}
        mid_get = mid.get
        for beta, gammas in betas.items():
            gb = tb[beta]._t
            if not gb:
                continue
            inner: dict = {}
            inner_get = inner.get
            for gamma, coeff in gammas:
                hc = tc[gamma]._t
                if not hc:
                    continue
                for k, v in hc.items():
                    inner[k] = inner_get(k, 0) + coeff * v
            if not inner:
                continue
            for k, v in _mul_dicts(gb, inner).items():
                mid[k] = mid_get(k, 0) + v
        mid = {k: v for k, v in mid.items() if v}
        if not mid:
            continue
        for k, v in _mul_dicts(fa, mid).items():
            acc[k] = acc_get(k, 0) + v
    return Poly({k: v for k, v in acc.items() if v})
