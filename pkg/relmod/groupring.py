"""Integral group rings over oracle-backed groups.

A :class:`GroupRingElt` is a finite sum ``sum c_g g`` with integer coefficients
keyed by normal-form words. For a Baumslag-Solitar group ``G = H x| <x>``
(``H`` the kernel of the stable exponent) the same element can be viewed as
a skew Laurent polynomial ``sum h_i x^i`` with coefficients in ``ZH``; see
:class:`SkewLaurent`.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ._validation import _validate_integer
from .config import get_settings
from .errors import OracleMismatchError, UnsupportedOracleError, ZeroElementError
from .oracles import BSOracle, Oracle
from .words import Gen, Word, conj, format_word, mul, substitute

logger = logging.getLogger(__name__)


def _accumulate(oracle: Oracle, pairs: Iterable[tuple[Word, int]]) -> dict[Word, int]:
    terms: dict[Word, int] = {}
    for w, coef in pairs:
        _validate_integer(coef, "coefficient")
        if not coef:
            continue
        key = oracle.nf(w).word
        total = terms.get(key, 0) + coef
        if total:
            terms[key] = total
        else:
            del terms[key]
    return terms


@dataclass(frozen=True, eq=False)
class GroupRingElt:
    """Element of ``ZG``; keys are normal-form words, coefficients nonzero."""

    oracle: Oracle
    terms: Mapping[Word, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", MappingProxyType(_accumulate(self.oracle, self.terms.items())))

    @classmethod
    def zero(cls, oracle: Oracle) -> GroupRingElt:
        return cls(oracle)

    @classmethod
    def one(cls, oracle: Oracle) -> GroupRingElt:
        return cls(oracle, {Word.identity(): 1})

    @classmethod
    def from_word(cls, oracle: Oracle, w: Word, coef: int = 1) -> GroupRingElt:
        return cls(oracle, {w: coef})

    @classmethod
    def from_terms(cls, oracle: Oracle, pairs: Iterable[tuple[Word, int]]) -> GroupRingElt:
        return cls(oracle, _accumulate(oracle, pairs))

    def _same_ring(self, other: GroupRingElt) -> None:
        if self.oracle != other.oracle:
            raise OracleMismatchError(f"cannot combine elements over {self.oracle} and {other.oracle}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.oracle == other.oracle and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.oracle, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(sorted(self.terms.items(), key=lambda item: item[0].sort_key))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_element(self)

    def __neg__(self) -> GroupRingElt:
        return GroupRingElt(self.oracle, {w: -c for w, c in self.terms.items()})

    def __add__(self, other: GroupRingElt) -> GroupRingElt:
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        self._same_ring(other)
        return GroupRingElt.from_terms(self.oracle, [*self.terms.items(), *other.terms.items()])

    def __sub__(self, other: GroupRingElt) -> GroupRingElt:
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: GroupRingElt | int) -> GroupRingElt:
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElt(self.oracle, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        self._same_ring(other)
        pairs = [
            (mul(g, h), a * b)
            for g, a in self.terms.items()
            for h, b in other.terms.items()
        ]
        return GroupRingElt.from_terms(self.oracle, pairs)

    def __rmul__(self, other: int) -> GroupRingElt:
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def coefficient(self, w: Word) -> int:
        return self.terms.get(self.oracle.nf(w).word, 0)

    def support(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self)

    def augmentation(self) -> int:
        return augmentation(self)

    def map_keys(self, target_oracle: Oracle, images: Mapping[Gen, Word]) -> GroupRingElt:
        """Push forward along the substitution ``images`` into ``Z[target]``."""
        return GroupRingElt.from_terms(
            target_oracle, ((substitute(w, images), c) for w, c in self.terms.items())
        )


def add(a: GroupRingElt, b: GroupRingElt) -> GroupRingElt:
    return a + b


def multiply(a: GroupRingElt, b: GroupRingElt) -> GroupRingElt:
    return a * b


def augmentation(a: GroupRingElt) -> int:
    """Sum of coefficients (the ring map ``ZG -> Z``)."""
    return sum(a.terms.values())


def map_keys(a: GroupRingElt, target_oracle: Oracle, images: Mapping[Gen, Word]) -> GroupRingElt:
    return a.map_keys(target_oracle, images)


def format_element(a: GroupRingElt) -> str:
    """``coef*word`` terms in word order joined by `` + ``; ``0`` for zero."""
    if not a.terms:
        return "0"
    return " + ".join(f"{c}*{format_word(w)}" for w, c in a)


def _bs_oracle(oracle: Oracle) -> BSOracle:
    if not isinstance(oracle, BSOracle):
        raise UnsupportedOracleError(f"skew Laurent form needs a Baumslag-Solitar oracle, got {oracle}")
    return oracle


@dataclass(frozen=True, eq=False)
class SkewLaurent:
    """``sum_i h_i x^i`` with ``h_i`` in ``ZH``; zero coefficients are not stored."""

    oracle: BSOracle
    coeffs: Mapping[int, GroupRingElt] = field(default_factory=dict)

    def __post_init__(self) -> None:
        coeffs = {}
        for degree, coeff in self.coeffs.items():
            _validate_integer(degree, "degree")
            if coeff.oracle != self.oracle:
                raise OracleMismatchError("skew coefficient over a different oracle")
            if coeff:
                coeffs[degree] = coeff
        object.__setattr__(self, "coeffs", MappingProxyType(dict(sorted(coeffs.items()))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewLaurent):
            return NotImplemented
        return self.oracle == other.oracle and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.oracle, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return format_skew(self)

    @property
    def lo(self) -> int:
        if not self.coeffs:
            raise ZeroElementError("zero element has no degree bounds")
        return min(self.coeffs)

    @property
    def hi(self) -> int:
        if not self.coeffs:
            raise ZeroElementError("zero element has no degree bounds")
        return max(self.coeffs)

    def length(self) -> int:
        return self.hi - self.lo

    def leading(self) -> GroupRingElt:
        return self.coeffs[self.hi]

    def trailing(self) -> GroupRingElt:
        return self.coeffs[self.lo]

    def coefficient(self, degree: int) -> GroupRingElt:
        return self.coeffs.get(degree, GroupRingElt.zero(self.oracle))

    def from_skew(self) -> GroupRingElt:
        """Reassemble ``sum h_i x^i`` in ``ZG``."""
        stable = self.oracle.stable
        pairs = [
            (mul(h, stable.word(degree)), c)
            for degree, coeff in self.coeffs.items()
            for h, c in coeff.terms.items()
        ]
        return GroupRingElt.from_terms(self.oracle, pairs)

    to_group_ring = from_skew

    def __add__(self, other: SkewLaurent) -> SkewLaurent:
        if not isinstance(other, SkewLaurent):
            return NotImplemented
        if self.oracle != other.oracle:
            raise OracleMismatchError("cannot add skew elements over different oracles")
        coeffs = dict(self.coeffs)
        for degree, coeff in other.coeffs.items():
            coeffs[degree] = coeffs[degree] + coeff if degree in coeffs else coeff
        return SkewLaurent(self.oracle, coeffs)

    def __mul__(self, other: SkewLaurent) -> SkewLaurent:
        """Twisted product ``(h x^i)(h' x^j) = h (x^i h' x^-i) x^{i+j}``."""
        if not isinstance(other, SkewLaurent):
            return NotImplemented
        if self.oracle != other.oracle:
            raise OracleMismatchError("cannot multiply skew elements over different oracles")
        stable = self.oracle.stable
        buckets: dict[int, list[tuple[Word, int]]] = {}
        for i, left in self.coeffs.items():
            shift = stable.word(i)
            for j, right in other.coeffs.items():
                bucket = buckets.setdefault(i + j, [])
                for h, a in left.terms.items():
                    for h2, b in right.terms.items():
                        bucket.append((mul(h, conj(shift, h2)), a * b))
        return SkewLaurent(
            self.oracle,
            {degree: GroupRingElt.from_terms(self.oracle, pairs) for degree, pairs in buckets.items()},
        )

    def conjugate_by_stable(self, k: int) -> SkewLaurent:
        """``x^k a x^-k``: every coefficient conjugated, degrees unchanged."""
        shift = self.oracle.stable.word(_validate_integer(k, "k"))
        return SkewLaurent(
            self.oracle,
            {
                degree: GroupRingElt.from_terms(self.oracle, ((conj(shift, h), c) for h, c in coeff.terms.items()))
                for degree, coeff in self.coeffs.items()
            },
        )


def to_skew(a: GroupRingElt, window: int | None = None) -> SkewLaurent:
    """Split every key ``g`` of ``a`` as ``h x^i`` and route it to degree ``i``.

    ``h`` must factor through conjugates ``x^j y x^-j`` with ``|j| <= window``
    (default from settings), otherwise FactorizationError is raised.
    """
    oracle = _bs_oracle(a.oracle)
    if window is None:
        window = get_settings().skew_window
    stable = oracle.stable
    buckets: dict[int, list[tuple[Word, int]]] = {}
    for g, c in a.terms.items():
        degree = oracle.stable_exponent(g)
        h = mul(g, stable.word(-degree))
        oracle.conjugate_decomposition(h, window)
        buckets.setdefault(degree, []).append((h, c))
    skew = SkewLaurent(
        oracle, {degree: GroupRingElt.from_terms(oracle, pairs) for degree, pairs in buckets.items()}
    )
    logger.debug("Split %d terms into %d skew degrees", len(a), len(skew.coeffs))
    return skew


def from_skew(s: SkewLaurent) -> GroupRingElt:
    return s.from_skew()


def length(s: SkewLaurent) -> int:
    """``hi - lo`` of a nonzero skew Laurent element."""
    return s.length()


def _format_coefficient(oracle: BSOracle, coeff: GroupRingElt) -> str:
    if oracle.family is None:
        return format_element(coeff)
    terms = []
    for h, c in coeff:
        family = oracle.family_form(h)
        terms.append(f"{c}*{format_word(h if family is None else family)}")
    return " + ".join(terms)


def format_skew(s: SkewLaurent) -> str:
    """``(coefficient)x^i`` terms by increasing degree joined by `` + ``.

    With a family on the oracle, coefficients are written in family letters
    where possible (``z_1`` rather than ``y^6``).
    """
    if not s.coeffs:
        return "0"
    stable = s.oracle.stable
    return " + ".join(
        f"({_format_coefficient(s.oracle, coeff)}){stable}^{degree}" for degree, coeff in s.coeffs.items()
    )
