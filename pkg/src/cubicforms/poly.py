"""Sparse exact multivariate polynomials over named indexed variables.

A variable is a single-letter family plus a short digit index: ``x1``, ``u3``,
``f123``, ``a0``.  Coefficients are exact (Python ``int`` or
``fractions.Fraction``); nothing here ever rounds.  A polynomial is canonically
a map from monomials to nonzero coefficients, so two polynomials are equal
exactly when those maps coincide, and ``p == 0`` is decidable by inspection.

Monomials are packed into single integers, 16 bits of exponent per variable
slot, which turns monomial multiplication into one integer addition and keeps
the inner loops of large products cheap.  Slot numbering is an internal
detail (frequently used families are seeded at low slots so hot keys stay
small); all user-visible ordering goes through the documented variable order

    x < y < z < X < u < v < w < a < b < c < d < e < f < g < h < D < q < i < s

then any other family alphabetically, then the index tuple lexicographically.
Rendering and JSON output sort terms by total degree descending, then by that
variable order (higher exponent on the earlier variable first), so output is
deterministic and byte-stable.

Families ``f``, ``g``, ``h`` and ``D`` hold coefficient symbols with a
multi-digit index kept sorted ascending (``f213`` normalizes to ``f123``);
family ``q`` holds coefficient symbols with a four-digit index normalized as
two sorted pairs (contravariant pair first).  The registry is append-only and
safe for unrestricted concurrent reads.

Substitutions come in four kinds (see :class:`Substitution`): a variable map,
a symbol-power map binding degree-``n`` monomials of one triple to ``n``-th
partial derivatives of a target, a coefficient rename between families, and a
line-coordinates map binding a triple to the cross product of two others.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    DegreeMismatchError,
    PolyParseError,
    UnboundVariableError,
    UnknownVariableError,
)

Coeff = Union[int, Fraction]

_BITS = 16
_MASK = (1 << _BITS) - 1

_FAMILY_ORDER = "x y z X u v w a b c d e f g h D q i s".split()
_FAMILY_RANK = {fam: i for i, fam in enumerate(_FAMILY_ORDER)}

# Families whose multi-digit index is normalized to ascending order.
_SORTED_INDEX_FAMILIES = frozenset("fghD")
# Family with a four-digit index normalized as two sorted pairs.
_PAIRED_INDEX_FAMILIES = frozenset("q")
# Families the text parser accepts (internal families such as the reserved
# bracket symbols are deliberately not parseable).
_PARSE_FAMILIES = frozenset("xyzXuvwabcdfghDqis")
# Triple families: one digit 1..3 (a..d also admit 0 for scalar symbols).
_TRIPLE_FAMILIES = frozenset("xyzXuvw")
_SCALAR_OK_FAMILIES = frozenset("abcd")

_NAME_RE = re.compile(r"(#?[A-Za-z])([0-9]*)\Z")

# Registry: name -> slot, slot -> metadata.  Append-only.
_slot_of: dict[str, int] = {}
_name_of: list[str] = []
_order_of: list[tuple] = []  # slot -> ((0, rank) | (1, family), index)
_family_slots: dict[str, list[int]] = {}
_index_of: list[tuple[int, ...]] = []
_family_of: list[str] = []


def _normalize_index(family: str, index: tuple[int, ...]) -> tuple[int, ...]:
    if family in _SORTED_INDEX_FAMILIES:
        return tuple(sorted(index))
    if family in _PAIRED_INDEX_FAMILIES and len(index) == 4:
        return tuple(sorted(index[:2])) + tuple(sorted(index[2:]))
    return index


def split_name(name: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"f213"`` into ``("f", (1, 2, 3))``, normalizing the index."""
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownVariableError(name)
    family = m.group(1)
    index = tuple(int(d) for d in m.group(2))
    return family, _normalize_index(family, index)


def canonical_name(family: str, index: Iterable[int]) -> str:
    return family + "".join(str(i) for i in index)


def _register(name: str) -> int:
    slot = _slot_of.get(name)
    if slot is not None:
        return slot
    family, index = split_name(name)
    canon = canonical_name(family, index)
    slot = _slot_of.get(canon)
    if slot is None:
        slot = len(_name_of)
        _name_of.append(canon)
        rank = _FAMILY_RANK.get(family)
        order_fam = (0, rank) if rank is not None else (1, family)
        _order_of.append((order_fam, index))
        _family_slots.setdefault(family, []).append(slot)
        _index_of.append(index)
        _family_of.append(family)
        _slot_of[canon] = slot
    if name != canon:
        _slot_of[name] = slot
    return slot


def _seed_registry() -> None:
    # Hot families first so the packed keys of heavy computations stay short.
    for fam in ("x", "y", "z", "u", "v"):
        for i in (1, 2, 3):
            _register(f"{fam}{i}")
    for idx in CUBIC_INDICES:
        _register(canonical_name("f", idx))
    for fam in ("a", "b", "c"):
        for i in (1, 2, 3):
            _register(f"{fam}{i}")


CUBIC_INDICES: tuple[tuple[int, int, int], ...] = (
    (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3),
    (1, 3, 3), (2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3),
)
QUADRATIC_INDICES: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3),
)


def _shift(slot: int) -> int:
    return slot * _BITS


def _decode(key: int) -> list[tuple[int, int]]:
    """Packed key -> list of (slot, exponent), ascending slot."""
    out = []
    slot = 0
    while key:
        e = key & _MASK
        if e:
            out.append((slot, e))
        key >>= _BITS
        slot += 1
    return out


def _total_degree(key: int) -> int:
    total = 0
    while key:
        total += key & _MASK
        key >>= _BITS
    return total


def _sort_key(key: int):
    pairs = []
    total = 0
    slot = 0
    k = key
    while k:
        e = k & _MASK
        if e:
            pairs.append((_order_of[slot], -e))
            total += e
        k >>= _BITS
        slot += 1
    pairs.sort()
    return (-total, tuple(pairs))


def _mul_dicts(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _pow_dict(d: dict, n: int) -> dict:
    result = {0: 1}
    base = d
    while n:
        if n & 1:
            result = _mul_dicts(result, base)
        n >>= 1
        if n:
            base = _mul_dicts(base, base)
    return result


def _add_scaled(acc: dict, d: dict, scale: Coeff) -> None:
    get = acc.get
    if scale == 1:
        for k, v in d.items():
            acc[k] = get(k, 0) + v
    else:
        for k, v in d.items():
            acc[k] = get(k, 0) + scale * v


class Poly:
    """An immutable-by-convention sparse polynomial."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        if terms:
            self._t = {k: v for k, v in terms.items() if v}
        else:
            self._t = {}

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # Internal: terms already canonical (no zero coefficients).
        p = object.__new__(cls)
        p._t = terms
        return p

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def term_count(self) -> int:
        return len(self._t)

    def variables(self) -> set[str]:
        seen: set[int] = set()
        for key in self._t:
            for slot, _ in _decode(key):
                seen.add(slot)
        return {_name_of[s] for s in seen}

    def degree_in(self, family: str) -> int:
        """Largest total exponent of the family's variables in any term."""
        slots = _family_slots.get(family)
        if not slots or not self._t:
            return 0
        shifts = [_shift(s) for s in slots]
        best = 0
        for key in self._t:
            d = 0
            for sh in shifts:
                d += (key >> sh) & _MASK
            if d > best:
                best = d
        return best

    def is_homogeneous_in(self, family: str) -> bool:
        slots = _family_slots.get(family, [])
        shifts = [_shift(s) for s in slots]
        degs = set()
        for key in self._t:
            d = 0
            for sh in shifts:
                d += (key >> sh) & _MASK
            degs.add(d)
        return len(degs) <= 1

    def total_degree(self) -> int:
        return max((_total_degree(k) for k in self._t), default=0)

    def coefficient(self, monomial: Mapping[str, int]) -> Coeff:
        key = 0
        for name, e in monomial.items():
            key += e << _shift(_register(name))
        return self._t.get(key, 0)

    def constant_value(self) -> Coeff:
        """The value of a constant polynomial (degree 0)."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        raise DegreeMismatchError("polynomial is not constant")

    def monomials(self) -> Iterator[tuple[dict[str, int], Coeff]]:
        """Iterate terms in canonical order as ({name: exp}, coeff) pairs."""
        for key in sorted(self._t, key=_sort_key):
            yield {_name_of[s]: e for s, e in _decode(key)}, self._t[key]

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._t
            return self._t == {0: other}
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -v for k, v in self._t.items()})

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        get = out.get
        for k, v in b.items():
            s = get(k, 0) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._t)
        get = out.get
        for k, v in other._t.items():
            s = get(k, 0) - v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Poly._raw(out)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return Poly._raw(_mul_dicts(self._t, other._t))
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw({})
            return Poly._raw({k: other * v for k, v in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return Poly._raw(_pow_dict(self._t, n))

    # -- calculus --------------------------------------------------------

    def derive(self, name: str) -> "Poly":
        """Partial derivative with respect to one variable."""
        slot = _register(name)
        sh = _shift(slot)
        unit = 1 << sh
        out = {}
        for k, c in self._t.items():
            e = (k >> sh) & _MASK
            if e:
                out[k - unit] = c * e
        return Poly._raw(out)

    # -- substitution ----------------------------------------------------

    def subs(self, mapping: Mapping[str, "Poly | Coeff"], strict: bool = True) -> "Poly":
        """Variable-map substitution.

        ``mapping`` sends variable names to polynomials or exact numbers.  In
        strict mode (the default) every present variable whose family appears
        among the sources must be bound; lenient mode leaves unbound variables
        intact, which is what partial polar-style substitutions need.
        """
        if not self._t:
            return Poly._raw({})
        images: dict[int, object] = {}
        src_families: set[str] = set()
        for name, img in mapping.items():
            slot = _register(name)
            src_families.add(_family_of[slot])
            images[slot] = img if isinstance(img, Poly) else Fraction(img)
        if strict:
            unbound = [
                s
                for fam in src_families
                for s in _family_slots.get(fam, [])
                if s not in images
            ]
            if unbound:
                shifts = [(_shift(s), _name_of[s]) for s in unbound]
                for key in self._t:
                    for sh, nm in shifts:
                        if (key >> sh) & _MASK:
                            raise UnboundVariableError(
                                f"variable {nm} has no image in strict substitution"
                            )
        img_items = [(s, _shift(s), img) for s, img in images.items()]
        pow_cache: dict[tuple[int, int], object] = {}
        acc: dict = {}
        get = acc.get
        for key, c in self._t.items():
            rem = key
            numeric = c
            factors = None
            for slot, sh, img in img_items:
                e = (key >> sh) & _MASK
                if not e:
                    continue
                rem -= e << sh
                cached = pow_cache.get((slot, e))
                if cached is None:
                    cached = img ** e if e > 1 else img
                    pow_cache[(slot, e)] = cached
                if isinstance(cached, Poly):
                    if factors is None:
                        factors = cached
                    else:
                        factors = factors * cached
                else:
                    numeric *= cached
            if factors is None:
                if numeric:
                    acc[rem] = get(rem, 0) + numeric
            else:
                for k2, c2 in factors._t.items():
                    k = rem + k2
                    acc[k] = get(k, 0) + numeric * c2
        return Poly._raw({k: v for k, v in acc.items() if v})

    def rename_family(self, src: str, dst: str) -> "Poly":
        """Coefficient rename: every ``src`` variable maps to the same-index
        ``dst`` variable (``f123 -> g123``)."""
        src_slots = _family_slots.get(src, [])
        mapping = {
            _name_of[s]: var(canonical_name(dst, _index_of[s])) for s in src_slots
        }
        if not mapping:
            return self
        return self.subs(mapping, strict=True)

    def _triple_power_sub(
        self, family: str, n: int, table: Mapping[tuple[int, int, int], "Poly | Coeff"]
    ) -> "Poly":
        slots = [_register(f"{family}{i}") for i in (1, 2, 3)]
        shifts = [_shift(s) for s in slots]
        acc: dict = {}
        get = acc.get
        for key, c in self._t.items():
            e1 = (key >> shifts[0]) & _MASK
            e2 = (key >> shifts[1]) & _MASK
            e3 = (key >> shifts[2]) & _MASK
            if e1 + e2 + e3 != n:
                raise DegreeMismatchError(
                    f"term of degree {e1 + e2 + e3} in family {family!r}; expected {n}"
                )
            rem = key - (e1 << shifts[0]) - (e2 << shifts[1]) - (e3 << shifts[2])
            img = table.get((e1, e2, e3))
            if img is None:
                raise DegreeMismatchError(
                    f"no image for {family}^({e1},{e2},{e3}) in power substitution"
                )
            if isinstance(img, Poly):
                for k2, c2 in img._t.items():
                    k = rem + k2
                    acc[k] = get(k, 0) + c * c2
            elif img:
                acc[rem] = get(rem, 0) + c * img
        return Poly({k: v for k, v in acc.items() if v})

    def symbol_power(self, family: str, n: int, target: "Poly") -> "Poly":
        """Symbol-power substitution: each degree-``n`` monomial of the triple
        ``family`` maps to the matching ``n``-th partial derivative of
        ``target`` (``a1^2 a2 -> d^3 target / dx1^2 dx2``).

        When ``target`` has degree ``n``, this is the classical differential
        pairing: substituting partial-derivative operators for the triple and
        applying them to ``target``.  Writing a contravariant's coefficients
        against a form's coefficients ("replace the coefficients of u_x^3 by
        the coefficients of f") is exactly this operation.
        """
        table: dict[tuple[int, int, int], Poly] = {}
        for alpha in _compositions(n):
            table[alpha] = _partial(target, alpha)
        return self._triple_power_sub(family, n, table)

    def substitute(self, sub: "Substitution") -> "Poly":
        """Apply a :class:`Substitution` of any kind."""
        return sub.apply(self)

    # -- evaluation ------------------------------------------------------

    def _eval(self, point: Mapping[str, object], cast) -> object:
        bound: dict[int, object] = {}
        for name, value in point.items():
            bound[_register(name)] = cast(value)
        total = cast(0)
        for key in sorted(self._t, key=_sort_key):
            v = cast(self._t[key])
            for slot, e in _decode(key):
                base = bound.get(slot)
                if base is None:
                    raise UnboundVariableError(
                        f"variable {_name_of[slot]} not bound in evaluation"
                    )
                v = v * base**e
            total = total + v
        return total

    def eval_complex(self, point: Mapping[str, complex]) -> complex:
        """Evaluate at a complex point; summation follows the canonical term
        order so results are bit-for-bit reproducible."""
        return complex(self._eval(point, complex))

    def eval_exact(self, point: Mapping[str, Coeff]) -> Fraction:
        """Evaluate at an exact rational point."""
        return Fraction(self._eval(point, Fraction))

    # -- rendering -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, Coeff]]:
        return [(k, self._t[k]) for k in sorted(self._t, key=_sort_key)]

    def render(self) -> str:
        if not self._t:
            return "0"
        pieces: list[str] = []
        for key, coeff in self.sorted_terms():
            mono = " ".join(
                _name_of[s] if e == 1 else f"{_name_of[s]}^{e}"
                for s, e in sorted(_decode(key), key=lambda t: _order_of[t[0]])
            )
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag} {mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        if len(self._t) > 12:
            return f"Poly(<{len(self._t)} terms>)"
        return f"Poly({self.render()!r})"

    def to_json(self) -> str:
        terms = []
        for key, coeff in self.sorted_terms():
            mono = {
                _name_of[s]: e
                for s, e in sorted(_decode(key), key=lambda t: _order_of[t[0]])
            }
            terms.append({"coeff": str(coeff), "monomial": mono})
        return json.dumps({"terms": terms}, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Poly":
        data = json.loads(text)
        acc: dict = {}
        for term in data["terms"]:
            coeff = Fraction(term["coeff"])
            key = 0
            for name, e in term["monomial"].items():
                key += int(e) << _shift(_register(name))
            acc[key] = acc.get(key, 0) + coeff
        return Poly(acc)


def _coerce(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return const(value)
    return NotImplemented


# -- constructors ---------------------------------------------------------


def var(name: str) -> Poly:
    """The polynomial consisting of one variable."""
    slot = _register(name)
    return Poly._raw({1 << _shift(slot): 1})


def const(value: Coeff) -> Poly:
    value = value if isinstance(value, int) else Fraction(value)
    return Poly._raw({0: value} if value else {})


def varkey(name: str) -> int:
    return 1 << _shift(_register(name))


def poly_from(terms: Iterable[tuple[Mapping[str, int], Coeff]]) -> Poly:
    acc: dict = {}
    for mono, coeff in terms:
        key = 0
        for name, e in mono.items():
            key += e << _shift(_register(name))
        acc[key] = acc.get(key, 0) + coeff
    return Poly(acc)


# -- structure helpers ----------------------------------------------------


def _compositions(n: int) -> list[tuple[int, int, int]]:
    return [
        (e1, e2, n - e1 - e2)
        for e1 in range(n, -1, -1)
        for e2 in range(n - e1, -1, -1)
    ]


def _partial(p: Poly, alpha: tuple[int, int, int], family: str = "x") -> Poly:
    """Iterated partial derivative d^alpha p / dx^alpha."""
    out = p
    for i, e in enumerate(alpha):
        name = f"{family}{i + 1}"
        for _ in range(e):
            out = out.derive(name)
    return out


def coefficients_in(p: Poly, family: str) -> dict[tuple[int, int, int], Poly]:
    """Split ``p`` by the exponent pattern of a triple family.

    Returns a map from the exponent triple over ``family``'s variables 1..3 to
    the polynomial cofactor.  The cofactors carry all other variables.
    """
    slots = [_register(f"{family}{i}") for i in (1, 2, 3)]
    shifts = [_shift(s) for s in slots]
    buckets: dict[tuple[int, int, int], dict] = {}
    for key, c in p._t.items():
        e1 = (key >> shifts[0]) & _MASK
        e2 = (key >> shifts[1]) & _MASK
        e3 = (key >> shifts[2]) & _MASK
        rem = key - (e1 << shifts[0]) - (e2 << shifts[1]) - (e3 << shifts[2])
        buckets.setdefault((e1, e2, e3), {})[rem] = c
    return {alpha: Poly._raw(d) for alpha, d in buckets.items()}


def monomial_coefficient(p: Poly, monomial: Mapping[str, int]) -> Poly:
    """The polynomial coefficient of an exact monomial pattern: all terms of
    ``p`` whose exponents on the named variables match exactly, with those
    variables stripped."""
    want: list[tuple[int, int, int]] = []
    fams = set()
    for name, e in monomial.items():
        slot = _register(name)
        want.append((slot, _shift(slot), e))
        fams.add(_family_of[slot])
    extra = [
        (_shift(s), 0)
        for fam in fams
        for s in _family_slots.get(fam, [])
        if s not in {w[0] for w in want}
    ]
    out: dict = {}
    for key, c in p._t.items():
        ok = True
        rem = key
        for _, sh, e in want:
            have = (key >> sh) & _MASK
            if have != e:
                ok = False
                break
            rem -= e << sh
        if not ok:
            continue
        for sh, _ in extra:
            if (key >> sh) & _MASK:
                ok = False
                break
        if ok:
            out[rem] = c
    return Poly._raw(out)


def cross_map(dst: str, left: str, right: str) -> dict[str, Poly]:
    """Line-coordinates map: ``dst`` triple -> cross product of two triples.

    ``cross_map("u", "y", "z")`` sends u1 -> y2 z3 - y3 z2 and cyclically.
    """
    out: dict[str, Poly] = {}
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        out[f"{dst}{i}"] = var(f"{left}{j}") * var(f"{right}{k}") - var(
            f"{left}{k}"
        ) * var(f"{right}{j}")
    return out


class Substitution:
    """A first-class substitution; build with the static constructors."""

    def __init__(self, kind: str, apply_fn):
        self.kind = kind
        self._apply = apply_fn

    def apply(self, p: Poly) -> Poly:
        return self._apply(p)

    @staticmethod
    def variable_map(mapping: Mapping[str, Poly | Coeff], strict: bool = True) -> "Substitution":
        return Substitution("variable-map", lambda p: p.subs(mapping, strict=strict))

    @staticmethod
    def symbol_power(family: str, n: int, target: Poly) -> "Substitution":
        return Substitution("symbol-power", lambda p: p.symbol_power(family, n, target))

    @staticmethod
    def coefficient_rename(src: str, dst: str) -> "Substitution":
        return Substitution("coefficient-rename", lambda p: p.rename_family(src, dst))

    @staticmethod
    def line_coordinates(dst: str, left: str, right: str) -> "Substitution":
        mapping = cross_map(dst, left, right)
        return Substitution("line-coordinates", lambda p: p.subs(mapping, strict=True))


# -- rewriting and division ------------------------------------------------


def rewrite_powers(p: Poly, rules: Mapping[str, tuple[int, Poly | Coeff]]) -> Poly:
    """Reduce by single-variable power rules until no rule applies.

    ``rules`` maps a variable name to ``(k, replacement)`` meaning
    ``name^k -> replacement``.  Distinct-variable rules commute, so the
    reduction is confluent and terminates (each application strictly lowers
    the exponent of its variable).
    """
    compiled = []
    for name, (k, repl) in rules.items():
        slot = _register(name)
        repl_p = repl if isinstance(repl, Poly) else const(repl)
        compiled.append((_shift(slot), k, repl_p))
    cur = p
    changed = True
    while changed:
        changed = False
        for sh, k, repl in compiled:
            acc: dict = {}
            get = acc.get
            hit = False
            for key, c in cur._t.items():
                e = (key >> sh) & _MASK
                if e >= k:
                    hit = True
                    rem = key - (k << sh)
                    for k2, c2 in repl._t.items():
                        kk = rem + k2
                        acc[kk] = get(kk, 0) + c * c2
                else:
                    acc[key] = get(key, 0) + c
            if hit:
                cur = Poly({kk: v for kk, v in acc.items() if v})
                changed = True
    return cur


def rewrite_product(p: Poly, names: Sequence[str], replacement: Poly | Coeff) -> Poly:
    """Reduce by a single monomial rule ``name1*name2*... -> replacement``
    until no term is divisible by the product."""
    shifts = [_shift(_register(n)) for n in names]
    repl_p = replacement if isinstance(replacement, Poly) else const(replacement)
    pattern = sum(1 << sh for sh in shifts)
    cur = p
    while True:
        acc: dict = {}
        get = acc.get
        hit = False
        for key, c in cur._t.items():
            if all((key >> sh) & _MASK for sh in shifts):
                hit = True
                rem = key - pattern
                for k2, c2 in repl_p._t.items():
                    kk = rem + k2
                    acc[kk] = get(kk, 0) + c * c2
            else:
                acc[key] = get(key, 0) + c
        if not hit:
            return cur
        cur = Poly({kk: v for kk, v in acc.items() if v})


def divide_exact(p: Poly, q: Poly) -> Poly | None:
    """Exact polynomial quotient ``p / q``, or None when division leaves a
    remainder.  Plain long division by leading terms in the canonical order;
    adequate for the proportionality checks this library needs."""
    if q.is_zero():
        return None
    if p.is_zero():
        return Poly()
    qlead = min(q._t, key=_sort_key)
    qexp = _decode(qlead)
    qc = q._t[qlead]
    quotient: dict = {}
    rem = p
    while rem._t:
        rlead = min(rem._t, key=_sort_key)
        rexp = dict(_decode(rlead))
        for slot, e in qexp:
            if rexp.get(slot, 0) < e:
                return None
        mono = rlead - qlead
        c = Fraction(rem._t[rlead]) / Fraction(qc)
        quotient[mono] = quotient.get(mono, 0) + c
        rem = rem - Poly._raw({mono: c}) * q
    return Poly(quotient)


# -- parsing ---------------------------------------------------------------


def _validate_parsed(family: str, index: tuple[int, ...], offset: int, name: str) -> None:
    def bad():
        raise UnknownVariableError(name, offset)

    if family in _TRIPLE_FAMILIES:
        if len(index) != 1 or not 1 <= index[0] <= 3:
            bad()
    elif family in _SCALAR_OK_FAMILIES:
        if len(index) != 1 or not 0 <= index[0] <= 3:
            bad()
    elif family in ("f", "g", "h", "D"):
        if not 1 <= len(index) <= 3 or any(not 1 <= i <= 3 for i in index):
            bad()
    elif family == "q":
        if len(index) != 4 or any(not 1 <= i <= 3 for i in index):
            bad()
    elif family == "i":
        if index:
            bad()
    elif family == "s":
        if index != (3,):
            bad()
    else:
        bad()


class _Parser:
    def __init__(self, text: str):
        self.s = text.replace("−", "-")
        self.i = 0
        self.n = len(self.s)

    def error(self, msg: str):
        raise PolyParseError(msg, self.i)

    def skip_ws(self):
        while self.i < self.n and self.s[self.i] in " \t\r\n":
            self.i += 1

    def peek(self) -> str:
        return self.s[self.i] if self.i < self.n else ""

    def read_int(self) -> int:
        start = self.i
        while self.i < self.n and self.s[self.i].isdigit():
            self.i += 1
        if self.i == start:
            self.error("expected an integer")
        return int(self.s[start : self.i])

    def read_rational(self) -> Fraction:
        num = self.read_int()
        if self.peek() == "/":
            self.i += 1
            den = self.read_int()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def read_name(self) -> Poly:
        start = self.i
        self.i += 1
        while self.i < self.n and self.s[self.i].isdigit():
            self.i += 1
        name = self.s[start : self.i]
        family, index = split_name(name)
        if family not in _PARSE_FAMILIES:
            raise UnknownVariableError(name, start)
        _validate_parsed(family, index, start, name)
        return var(name)

    def parse(self) -> Poly:
        p = self.expr()
        self.skip_ws()
        if self.i < self.n:
            self.error("unexpected trailing input")
        return p

    def expr(self) -> Poly:
        total = Poly()
        sign = 1
        self.skip_ws()
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        while True:
            total = total + sign * self.term()
            self.skip_ws()
            ch = self.peek()
            if ch == "+":
                sign = 1
                self.i += 1
            elif ch == "-":
                sign = -1
                self.i += 1
            else:
                return total

    def term(self) -> Poly:
        self.skip_ws()
        coeff = Fraction(1)
        have_any = False
        p = None
        if self.peek().isdigit():
            coeff = self.read_rational()
            have_any = True
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == "*":
                self.i += 1
                self.skip_ws()
                ch = self.peek()
                if not (ch.isalpha() or ch == "("):
                    self.error("expected a factor after '*'")
            if ch.isalpha():
                f = self.read_name()
            elif ch == "(":
                self.i += 1
                f = self.expr()
                self.skip_ws()
                if self.peek() != ")":
                    self.error("expected ')'")
                self.i += 1
            else:
                break
            if self.peek() == "^":
                self.i += 1
                if not self.peek().isdigit():
                    self.error("expected a positive integer exponent")
                e = self.read_int()
                if e == 0:
                    self.error("exponent must be positive")
                f = f**e
            p = f if p is None else p * f
            have_any = True
        if not have_any:
            self.error("expected a term")
        if p is None:
            return const(coeff)
        return p * coeff


def parse(text: str) -> Poly:
    """Parse polynomial text.

    Grammar: terms joined by ``+``/``-``; a term is an optional rational
    coefficient (``7`` or ``7/3``) followed by factors separated by whitespace
    or ``*``; a factor is a variable name, or a parenthesized subexpression,
    optionally followed by ``^`` and a positive integer.  The Unicode minus
    sign is accepted as ``-``.  Errors carry the character offset.
    """
    return _Parser(text).parse()


def render(p: Poly, fmt: str = "text") -> str:
    """Render a polynomial as deterministic text or JSON."""
    if fmt == "text":
        return p.render()
    if fmt == "json":
        return p.to_json()
    raise ValueError(f"unknown format {fmt!r}")


_seed_registry()
