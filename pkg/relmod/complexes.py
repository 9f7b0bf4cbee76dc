"""Presentation 2-complexes and the doubling construction.

Doubling a presentation glues two copies of its complex along the
subcomplex spanned by a list of identification words. After collapsing a
maximal tree this is the presentation with primed copies of every generator
and relator, plus one relator ``w w'^-1`` per identification word.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from sympy.core.intfunc import igcdex

from ._validation import _validate_integer, _validate_non_negative_integer
from .errors import PresentationError
from .oracles import CyclicAmalgamOracle, Oracle, witness_generation
from .presentations import GroupHom, Presentation, X, Y, bs, check_hom, euler_char, trefoil
from .words import Gen, Word, mul, power, substitute

logger = logging.getLogger(__name__)

WITNESS_X = Gen("X")
WITNESS_Y = Gen("Y")


@dataclass(frozen=True)
class TwoComplex:
    """Cell counts of the presentation complex (one vertex)."""

    presentation: Presentation

    @classmethod
    def from_presentation(cls, p: Presentation) -> TwoComplex:
        return cls(p)

    @property
    def vertices(self) -> int:
        return 1

    @property
    def edges(self) -> int:
        return len(self.presentation.gens)

    @property
    def faces(self) -> int:
        return len(self.presentation.relators)

    @property
    def chi(self) -> int:
        return self.vertices - self.edges + self.faces


def prime_word(w: Word) -> Word:
    return substitute(w, {g: g.with_prime().word() for g in w.gens()})


def double_presentation(p: Presentation, identification_words: Sequence[Word]) -> Presentation:
    """Two primed/unprimed copies of ``p`` glued along ``identification_words``."""
    if any(g.primed for g in p.gens):
        raise PresentationError("cannot double a presentation that already has primed generators")
    known = set(p.gens)
    for w in identification_words:
        if not w.gens() <= known:
            raise PresentationError(f"identification word {w} uses generators outside the presentation")
    gens = (*p.gens, *(g.with_prime() for g in p.gens))
    relators = (
        *p.relators,
        *(prime_word(r) for r in p.relators),
        *(mul(w, prime_word(w).inverse()) for w in identification_words),
    )
    doubled = Presentation(gens, relators)
    logger.debug("Doubled %s along %d words: chi %d", p, len(identification_words), euler_char(doubled))
    return doubled


def chi_level_formula(chi_min: int, genset_size: int) -> int:
    """Euler characteristic ``2 chi_min - 1 + |genset|`` of a doubled complex."""
    return 2 * _validate_integer(chi_min, "chi_min") - 1 + _validate_non_negative_integer(genset_size, "genset_size")


def trefoil_genset(i: int) -> tuple[Word, Word]:
    """``(x^{2i+1}, y^{3i+1})``."""
    i = _validate_non_negative_integer(i, "i")
    return X.word(2 * i + 1), Y.word(3 * i + 1)


def trefoil_witnesses(i: int) -> dict[Gen, Word]:
    """Words in ``X, Y`` evaluating to ``x`` and ``y`` at ``X = x^{2i+1}, Y = y^{3i+1}``.

    With ``c = x^2 = y^3`` central, ``X^2 = c^{2i+1}`` and ``Y^3 = c^{3i+1}``; a
    Bezout pair for ``(2i+1, 3i+1)`` gives ``c``, and ``x = X c^-i``, ``y = Y c^-i``.
    """
    i = _validate_non_negative_integer(i, "i")
    a, b, _ = igcdex(2 * i + 1, 3 * i + 1)
    central = mul(WITNESS_X.word(2 * int(a)), WITNESS_Y.word(3 * int(b)))
    correction = power(central, -i)
    return {X: mul(WITNESS_X.word(), correction), Y: mul(WITNESS_Y.word(), correction)}


def verify_trefoil_genset(i: int, o: Oracle | None = None) -> bool:
    """Check that ``trefoil_genset(i)`` generates the trefoil group."""
    oracle = o if o is not None else CyclicAmalgamOracle(X, Y, 2, 3)
    genset = trefoil_genset(i)
    witnesses = trefoil_witnesses(i)
    return all(
        witness_generation(oracle, g.word(), genset, witnesses[g], letters=(WITNESS_X, WITNESS_Y))
        for g in (X, Y)
    )


def verify_doubled_quotient(p_doubled: Presentation, o: Oracle) -> bool:
    """True iff sending every primed generator to its unprimed copy kills all relators."""
    base = tuple(g for g in p_doubled.gens if not g.primed)
    images = {g: g.with_prime(False).word() for g in p_doubled.gens}
    hom = GroupHom(p_doubled, Presentation(base), images, o, verify=False)
    return check_hom(hom)


def doubled_bs_presentation() -> Presentation:
    """``bs(2, 3)`` doubled along ``x`` and ``y^4``."""
    return double_presentation(bs(2, 3), [X.word(), Y.word(4)])


def trefoil_ki(i: int) -> Presentation:
    """The trefoil group doubled along ``trefoil_genset(i)``."""
    return double_presentation(trefoil(), trefoil_genset(i))
