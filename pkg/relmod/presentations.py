"""Finite presentations, Tietze transformations and the named presentations.

Relations ``r = s`` are stored as single relator words ``r s^-1``. Relators are
kept freely and cyclically reduced and identity relators are dropped.
Infinite presentations indexed by ``i`` in Z are only ever materialised as
finite windows with explicit bounds.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import InitVar, dataclass, field
from math import prod
from pathlib import Path
from types import MappingProxyType
from typing import TYPE_CHECKING

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from ._validation import _validate_integer, _validate_nonzero_integer, _validate_window
from .errors import (
    GeneratorCollisionError,
    HomomorphismError,
    MissingImageError,
    NotEliminableError,
    PresentationError,
    PresentationSyntaxError,
    TietzeError,
    WordSyntaxError,
)
from .words import (
    Gen,
    Word,
    comm,
    cyclic_canonical,
    cyclic_reduce,
    exponent_sum,
    format_word,
    inv,
    is_cyclic_conjugate,
    mul,
    parse_gen,
    parse_word,
    power,
    shift_indices,
    substitute,
)

if TYPE_CHECKING:
    from .oracles import Oracle

logger = logging.getLogger(__name__)

X = Gen("x")
Y = Gen("y")
Z = Gen("z")
T = Gen("t")


@dataclass(frozen=True)
class Presentation:
    """A finite presentation ``<gens | relators>``."""

    gens: tuple[Gen, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        gens = tuple(self.gens)
        if len(set(gens)) != len(gens):
            raise PresentationError("duplicate generators in presentation")
        known = set(gens)
        relators: list[Word] = []
        for relator in self.relators:
            unknown = relator.gens() - known
            if unknown:
                names = ", ".join(str(g) for g in sorted(unknown))
                raise PresentationError(f"relator {relator} uses unknown generators {names}")
            reduced = cyclic_reduce(relator)
            if reduced:
                relators.append(reduced)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "relators", tuple(relators))

    def __str__(self) -> str:
        gen_text = ", ".join(str(g) for g in self.gens)
        rel_text = ", ".join(format_word(r) for r in self.relators)
        return f"< {gen_text} | {rel_text} >"

    def relator_set(self) -> frozenset[Word]:
        """Relators up to cyclic rotation and inversion."""
        return frozenset(cyclic_canonical(r) for r in self.relators)

    def relator_index(self, relator: Word) -> int:
        """Index of the stored relator cyclically equal to ``relator``."""
        for k, stored in enumerate(self.relators):
            if is_cyclic_conjugate(stored, relator):
                return k
        raise PresentationError(f"{relator} is not a relator of {self}")


def euler_char(p: Presentation) -> int:
    """Euler characteristic of the presentation complex: 1 - |gens| + |relators|."""
    return 1 - len(p.gens) + len(p.relators)


def _check_words_in(p: Presentation, words: Iterable[Word], what: str) -> None:
    known = set(p.gens)
    for w in words:
        unknown = w.gens() - known
        if unknown:
            names = ", ".join(str(g) for g in sorted(unknown))
            raise PresentationError(f"{what} {w} uses generators {names} outside the presentation")


def _check_index(p: Presentation, index: int) -> int:
    index = _validate_integer(index, "relator index")
    if not 0 <= index < len(p.relators):
        raise PresentationError(f"relator index {index} out of range for {len(p.relators)} relators")
    return index


def tietze_add_gen(p: Presentation, g: Gen, definition: Word) -> Presentation:
    """Add a redundant generator ``g = definition`` (relator ``g·definition^-1``)."""
    if g in p.gens:
        raise GeneratorCollisionError(f"generator {g} already present")
    _check_words_in(p, [definition], "definition")
    relator = mul(g.word(), inv(definition))
    logger.debug("Tietze: add %s = %s", g, definition)
    return Presentation((*p.gens, g), (*p.relators, relator))


def _defining_word(relator: Word, g: Gen) -> Word:
    positions = [k for k, (gen, _) in enumerate(relator.syllables) if gen == g]
    if len(positions) != 1 or abs(relator.syllables[positions[0]][1]) != 1:
        raise NotEliminableError(f"relator {relator} does not contain {g} exactly once")
    k = positions[0]
    sign = relator.syllables[k][1]
    # rotate to g^sign · B·A
    rest = Word(relator.syllables[k + 1 :] + relator.syllables[:k])
    return inv(rest) if sign == 1 else rest


def tietze_remove_gen(p: Presentation, g: Gen, defining_relator_index: int) -> Presentation:
    """Eliminate ``g`` using the relator ``g·w^-1`` (up to rotation and inversion)."""
    if g not in p.gens:
        raise NotEliminableError(f"generator {g} not in presentation")
    index = _check_index(p, defining_relator_index)
    w = _defining_word(p.relators[index], g)
    images = {h: h.word() for h in p.gens if h != g}
    images[g] = w
    relators = [substitute(r, images) for k, r in enumerate(p.relators) if k != index]
    logger.debug("Tietze: remove %s = %s", g, w)
    return Presentation(tuple(h for h in p.gens if h != g), tuple(relators))


def tietze_replace_subword(
    p: Presentation, index: int, subword: Word, replacement: Word
) -> Presentation:
    """Rewrite relator ``index`` by replacing ``subword`` with ``replacement``.

    Only allowed when ``subword·replacement^-1`` is, up to cyclic rotation and
    inversion, one of the relators. Occurrences are matched letter by letter,
    left to right, without overlap.
    """
    index = _check_index(p, index)
    if not subword:
        raise TietzeError("subword must not be the identity")
    _check_words_in(p, [subword, replacement], "word")
    consequence = mul(subword, inv(replacement))
    if not any(is_cyclic_conjugate(consequence, r) for r in p.relators):
        raise TietzeError(f"{subword} = {replacement} is not a relator of the presentation")
    letters = p.relators[index].letters()
    pattern = subword.letters()
    width = len(pattern)
    out: list[tuple[Gen, int]] = []
    hits = 0
    k = 0
    while k < len(letters):
        if letters[k : k + width] == pattern:
            out.extend(replacement.syllables)
            hits += 1
            k += width
        else:
            out.append(letters[k])
            k += 1
    if not hits:
        raise TietzeError(f"{subword} does not occur in relator {p.relators[index]}")
    relators = list(p.relators)
    relators[index] = Word(tuple(out))
    logger.debug("Tietze: rewrite relator %d, %s -> %s (%d hits)", index, subword, replacement, hits)
    return Presentation(p.gens, tuple(relators))


@dataclass(frozen=True)
class TietzeChain:
    """Outcome of a scripted sequence of Tietze moves."""

    start: Presentation
    result: Presentation
    moves: tuple[str, ...]
    eliminated: Mapping[Gen, Word] = field(default_factory=dict)


def bs(m: int, n: int) -> Presentation:
    """Baumslag-Solitar presentation ``<x, y | x y^m x^-1 = y^n>``."""
    m = _validate_nonzero_integer(m, "m")
    n = _validate_nonzero_integer(n, "n")
    relator = mul(mul(X.word(), Y.word(m)), mul(X.word(-1), Y.word(-n)))
    return Presentation((X, Y), (relator,))


def trefoil() -> Presentation:
    """Trefoil group ``<x, y | x^2 = y^3>``."""
    return Presentation((X, Y), (mul(X.word(2), Y.word(-3)),))


def gbar() -> Presentation:
    """``<x, z | z = [x, z]^2>`` stored as ``z^-1 [x, z]^2``."""
    relator = mul(Z.word(-1), power(comm(X.word(), Z.word()), 2))
    return Presentation((X, Z), (relator,))


def z(i: int) -> Gen:
    return Gen("z", i)


def u(i: int) -> Gen:
    return Gen("u", i)


def hbar_window(lo: int, hi: int) -> Presentation:
    """Window ``lo <= i <= hi`` of ``<z_i | z_i = (z_{i+1} z_i^-1)^2>``."""
    lo, hi = _validate_window(lo, hi)
    gens = tuple(z(i) for i in range(lo, hi + 2))
    relators = tuple(
        mul(z(i).word(), inv(power(mul(z(i + 1).word(), z(i).word(-1)), 2)))
        for i in range(lo, hi + 1)
    )
    return Presentation(gens, relators)


def staggered_window(
    template: Iterable[Word], lo: int, hi: int, family: str = "z"
) -> Presentation:
    """Instantiate relators ``s(z_0, z_1)`` at every index ``lo <= i <= hi``."""
    lo, hi = _validate_window(lo, hi)
    template = tuple(template)
    indices = [g.index for w in template for g in w.gens() if g.name == family and g.index is not None]
    first, last = (min(indices), max(indices)) if indices else (0, 1)
    others = sorted({g for w in template for g in w.gens() if g.name != family or g.index is None})
    family_gens = [Gen(family, i) for i in range(lo + first, hi + last + 1)]
    relators = tuple(shift_indices(w, family, i) for i in range(lo, hi + 1) for w in template)
    return Presentation((*family_gens, *others), relators)


def c_relator(i: int) -> Word:
    """``c_i = [z_i, z_{i+1}]``."""
    return comm(z(i).word(), z(i + 1).word())


def d_relator(i: int) -> Word:
    """``d_i = z_i^-3 z_{i+1}^2``."""
    return mul(z(i).word(-3), z(i + 1).word(2))


def e_relator(i: int) -> Word:
    """``e_i = z_i^-1 (z_{i+1} z_i^-1)^2``."""
    return mul(z(i).word(-1), power(mul(z(i + 1).word(), z(i).word(-1)), 2))


def bs_with_z_presentation() -> Presentation:
    """``<x, y, z | x y^2 x^-1 = y^3, z = y^4>``."""
    return tietze_add_gen(bs(2, 3), Z, Y.word(4))


def u_substitution_chain(lo: int, hi: int) -> TietzeChain:
    """Script ``hbar_window(lo, hi)`` into ``<u_i | u_{i+1}^2 = u_i^3>``.

    Adds ``u_i = z_{i+1} z_i^-1``, rewrites each ``z_i = (z_{i+1} z_i^-1)^2`` into
    ``z_i = u_i^2`` and then eliminates ``z_lo, ..., z_{hi+1}`` in order.
    """
    lo, hi = _validate_window(lo, hi)
    start = hbar_window(lo, hi)
    p = start
    moves: list[str] = []
    eliminated: dict[Gen, Word] = {}
    for i in range(lo, hi + 1):
        definition = mul(z(i + 1).word(), z(i).word(-1))
        p = tietze_add_gen(p, u(i), definition)
        moves.append(f"add {u(i)} = {definition}")
    for i in range(lo, hi + 1):
        k = p.relator_index(start.relators[i - lo])
        p = tietze_replace_subword(p, k, mul(z(i).word(), z(i + 1).word(-1)), u(i).word(-1))
        moves.append(f"rewrite relator {k}: {z(i)} {z(i + 1)}^-1 -> {u(i)}^-1")
    for i in range(lo, hi + 1):
        defining = mul(z(i).word(), u(i).word(-2))
        k = p.relator_index(defining)
        eliminated[z(i)] = _defining_word(p.relators[k], z(i))
        p = tietze_remove_gen(p, z(i), k)
        moves.append(f"remove {z(i)} = {eliminated[z(i)]}")
    last = z(hi + 1)
    k = next(k for k, r in enumerate(p.relators) if last in r.gens())
    eliminated[last] = _defining_word(p.relators[k], last)
    p = tietze_remove_gen(p, last, k)
    moves.append(f"remove {last} = {eliminated[last]}")
    logger.debug("u-substitution chain [%d, %d] finished with %s", lo, hi, p)
    return TietzeChain(start, p, tuple(moves), MappingProxyType(eliminated))


def chain_amalgam_relators(lo: int, hi: int) -> frozenset[Word]:
    """Canonical relator set ``{u_{i+1}^2 u_i^-3 : lo <= i < hi}``."""
    return frozenset(
        cyclic_canonical(mul(u(i + 1).word(2), u(i).word(-3))) for i in range(lo, hi)
    )


def staggered_cyclic_chain(i: int = 0) -> TietzeChain:
    """Script ``<z_i, z_{i+1} | e_i>`` into the free group ``<t | >``."""
    i = _validate_integer(i, "i")
    start = Presentation((z(i), z(i + 1)), (e_relator(i),))
    moves: list[str] = []
    eliminated: dict[Gen, Word] = {}
    quotient = mul(z(i + 1).word(), z(i).word(-1))
    p = tietze_add_gen(start, T, quotient)
    moves.append(f"add {T} = {quotient}")
    p = tietze_replace_subword(p, 0, quotient, T.word())
    moves.append(f"rewrite relator 0: {quotient} -> {T}")
    for g in (z(i), z(i + 1)):
        k = next(k for k, r in enumerate(p.relators) if g in r.gens())
        eliminated[g] = _defining_word(p.relators[k], g)
        p = tietze_remove_gen(p, g, k)
        moves.append(f"remove {g} = {eliminated[g]}")
    return TietzeChain(start, p, tuple(moves), MappingProxyType(eliminated))


def abelianization_matrix(p: Presentation) -> list[list[int]]:
    """Exponent-sum matrix, one row per relator and one column per generator."""
    return [[exponent_sum(r, g) for g in p.gens] for r in p.relators]


def _lattice_invariants(rows: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Rank and product of nonzero invariant factors of the row lattice."""
    nonzero = [list(row) for row in rows if any(row)]
    if not nonzero:
        return 0, 1
    snf = smith_normal_form(Matrix(nonzero), domain=ZZ)
    diagonal = [abs(int(snf[k, k])) for k in range(min(snf.shape)) if snf[k, k] != 0]
    return len(diagonal), prod(diagonal)


def in_integer_row_space(matrix: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """True iff ``vector`` is an integer combination of the rows of ``matrix``."""
    if not any(vector):
        return True
    if any(len(row) != len(vector) for row in matrix):
        raise ValueError("vector length must match the matrix width")
    return _lattice_invariants(matrix) == _lattice_invariants([*matrix, vector])


def exponent_vector(p: Presentation, w: Word) -> list[int]:
    return [exponent_sum(w, g) for g in p.gens]


@dataclass(frozen=True, eq=False)
class GroupHom:
    """Homomorphism given by generator images, checked against a target oracle."""

    source: Presentation
    target: Presentation
    images: Mapping[Gen, Word]
    target_oracle: Oracle
    verify: InitVar[bool] = True

    def __post_init__(self, verify: bool) -> None:
        images = dict(self.images)
        for g in self.source.gens:
            if g not in images:
                raise MissingImageError(g)
        _check_words_in(self.target, images.values(), "image")
        object.__setattr__(self, "images", MappingProxyType(images))
        if verify and not check_hom(self):
            raise HomomorphismError("generator images do not kill every source relator")

    def apply(self, w: Word) -> Word:
        return substitute(w, self.images)


def check_hom(h: GroupHom) -> bool:
    """True iff every source relator maps to the identity of the target."""
    for relator in h.source.relators:
        image = h.apply(relator)
        if not h.target_oracle.is_trivial(image):
            logger.debug("Relator %s maps to nontrivial %s", relator, image)
            return False
    return True


def format_presentation(p: Presentation) -> str:
    """Render ``p`` in the presentation file format."""
    lines = ["gens: " + " ".join(str(g) for g in p.gens)]
    lines.extend(f"rel: {format_word(r)}" for r in p.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format (``gens:`` once, ``rel:`` lines, ``#`` comments)."""
    gens: tuple[Gen, ...] | None = None
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in {"gens", "rel"}:
            raise PresentationSyntaxError(f"expected 'gens:' or 'rel:', got {line!r}", lineno)
        try:
            if key == "gens":
                if gens is not None:
                    raise PresentationSyntaxError("duplicate 'gens:' line", lineno)
                gens = tuple(parse_gen(token) for token in value.split())
            else:
                relators.append(parse_word(value))
        except WordSyntaxError as e:
            raise PresentationSyntaxError(str(e), lineno) from e
        if key == "rel" and gens is None:
            raise PresentationSyntaxError("'rel:' before 'gens:'", lineno)
    if gens is None:
        raise PresentationSyntaxError("missing 'gens:' line", max(1, len(text.splitlines())))
    presentation = Presentation(gens, tuple(relators))
    logger.debug("Parsed presentation with %d gens, %d relators", len(gens), len(relators))
    return presentation


def load_presentation(path: str | Path) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def dump_presentation(p: Presentation, path: str | Path) -> None:
    Path(path).write_text(format_presentation(p), encoding="utf-8")
