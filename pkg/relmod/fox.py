"""Fox free differential calculus with coefficients projected into ZG."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import IdentityViolationError, NotARelatorError, UnknownGeneratorError
from .groupring import GroupRingElt, SkewLaurent, to_skew
from .oracles import BSOracle, FreeOracle, Oracle
from .presentations import Presentation
from .words import Gen, Word, format_word, mul

logger = logging.getLogger(__name__)


def _derivative_pairs(w: Word, g: Gen) -> list[tuple[Word, int]]:
    pairs: list[tuple[Word, int]] = []
    prefix = Word.identity()
    for gen, exp in w.syllables:
        if gen == g:
            if exp > 0:
                # prefix (1 + g + ... + g^{k-1})
                pairs.extend((mul(prefix, g.word(j)), 1) for j in range(exp))
            else:
                # -prefix (g^-1 + ... + g^k)
                pairs.extend((mul(prefix, g.word(-j)), -1) for j in range(1, -exp + 1))
        prefix = mul(prefix, gen.word(exp))
    return pairs


def fox_derive(w: Word, g: Gen, o: Oracle) -> GroupRingElt:
    """``dw/dg`` with every group element reduced by ``o``."""
    return GroupRingElt.from_terms(o, _derivative_pairs(w, g))


@dataclass(frozen=True, eq=False)
class FoxVector:
    """The Fox derivatives of ``word`` with respect to each of ``gens``."""

    word: Word
    gens: tuple[Gen, ...]
    oracle: Oracle
    components: Mapping[Gen, GroupRingElt] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "components", MappingProxyType(dict(self.components)))

    def __getitem__(self, g: Gen) -> GroupRingElt:
        return self.components[g]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FoxVector):
            return NotImplemented
        return (
            self.oracle == other.oracle
            and self.gens == other.gens
            and dict(self.components) == dict(other.components)
        )

    def __hash__(self) -> int:
        return hash((self.oracle, self.gens, frozenset(self.components.items())))

    def is_zero(self) -> bool:
        return not any(self.components.values())

    def boundary(self) -> GroupRingElt:
        """``sum_g (dw/dg)(g - 1)``."""
        one = GroupRingElt.one(self.oracle)
        total = GroupRingElt.zero(self.oracle)
        for g in self.gens:
            total = total + self.components[g] * (GroupRingElt.from_word(self.oracle, g.word()) - one)
        return total

    def check(self) -> bool:
        """Fundamental identity ``sum_g (dw/dg)(g - 1) = w - 1``."""
        expected = GroupRingElt.from_word(self.oracle, self.word) - GroupRingElt.one(self.oracle)
        return self.boundary() == expected

    def to_json(self) -> dict[str, list[list[int | str]]]:
        return {
            str(g): [[c, format_word(w)] for w, c in self.components[g]]
            for g in self.gens
        }


def fox_vector(w: Word, gens: Sequence[Gen], o: Oracle) -> FoxVector:
    """Componentwise :func:`fox_derive`, verified against the fundamental identity."""
    gens = tuple(gens)
    outside = w.gens() - set(gens)
    if outside:
        names = ", ".join(str(g) for g in sorted(outside))
        raise UnknownGeneratorError(f"word uses generators {names} outside the given list")
    vector = FoxVector(w, gens, o, {g: fox_derive(w, g, o) for g in gens})
    if not vector.check():
        raise IdentityViolationError(f"fundamental identity fails for {w} over {o}")
    logger.debug("Fox vector of %s over %s", w, o)
    return vector


def jacobian(p: Presentation, o: Oracle) -> list[list[GroupRingElt]]:
    """One row ``fox_vector(r)`` per relator, one column per generator."""
    rows = []
    for relator in p.relators:
        vector = fox_vector(relator, p.gens, o)
        rows.append([vector[g] for g in p.gens])
    return rows


def chain_rule_rhs(w: Word, images: Mapping[Gen, Word], g: Gen, o: Oracle) -> GroupRingElt:
    """``sum_h phi(dw/dh) d(phi(h))/dg`` for the substitution ``phi = images``."""
    source = FreeOracle(tuple(sorted(w.gens())))
    total = GroupRingElt.zero(o)
    for h in source.gens:
        pushed = fox_derive(w, h, source).map_keys(o, images)
        total = total + pushed * fox_derive(images[h], g, o)
    return total


def relation_module_element(
    r: Word, family: str, o: BSOracle, window: int | None = None
) -> SkewLaurent:
    """Image of the relator ``r`` of ``H`` in ``ZH[x, x^-1]`` via ``e_i -> x^i``.

    ``r`` is a word in the indexed letters ``family_i``. The boundary
    ``sum_i (dr/dz_i)(z_i - 1)`` is always checked to vanish.
    """
    if any(g.name != family or g.index is None for g in r.gens()):
        raise UnknownGeneratorError(f"{r} is not a word in the {family} family")
    if not o.is_trivial(r):
        raise NotARelatorError(f"{r} is nontrivial in {o}")
    letters = sorted(r.gens())
    vector = FoxVector(r, tuple(letters), o, {z: fox_derive(r, z, o) for z in letters})
    if vector.boundary():
        raise IdentityViolationError(f"boundary of the Fox image of {r} is nonzero")
    stable = o.stable
    assembled = GroupRingElt.zero(o)
    for z in letters:
        assembled = assembled + vector[z] * GroupRingElt.from_word(o, stable.word(z.index))
    skew = to_skew(assembled, window)
    logger.debug("Relation module element of %s spans degrees %s", r, sorted(skew.coeffs))
    return skew
