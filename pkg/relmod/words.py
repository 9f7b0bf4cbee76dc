"""Free-group words over indexed generator symbols.

Words are stored run-length encoded as ``(Gen, exponent)`` syllables and are
always freely reduced: adjacent syllables carry distinct generators and no
exponent is zero. Every value in this module is immutable.

Word literal syntax (used by every file format and CLI flag)::

    x y^2 x^-1 y^-3
    z_1^2 z_0^-3
    x'^3
    1            # the identity
"""

from __future__ import annotations

import logging
import random
import re
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import total_ordering

from ._validation import _validate_integer
from .errors import MissingImageError, WordSyntaxError

logger = logging.getLogger(__name__)

NAME_REGEX = r"[A-Za-z][A-Za-z0-9]*"
_NAME_RE = re.compile(NAME_REGEX)
_SYLLABLE_RE = re.compile(
    rf"(?P<name>{NAME_REGEX})(?:_(?P<index>-?[0-9]+))?(?P<prime>')?(?:\^(?P<exp>[-+]?[0-9]+))?"
)
_TOKEN_RE = re.compile(r"\S+")
IDENTITY_LITERAL = "1"


@total_ordering
@dataclass(frozen=True)
class Gen:
    """A generator symbol: a name, an optional family index and a prime flag."""

    name: str
    index: int | None = None
    primed: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not _NAME_RE.fullmatch(self.name):
            raise ValueError(f"invalid generator name: {self.name!r}")
        if self.index is not None:
            _validate_integer(self.index, "index")
        if not isinstance(self.primed, bool):
            raise ValueError("primed must be a boolean")

    @property
    def sort_key(self) -> tuple[str, bool, int, bool]:
        # unindexed generators sort before every member of their family
        return (
            self.name,
            self.index is not None,
            self.index if self.index is not None else 0,
            self.primed,
        )

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Gen):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        text = self.name
        if self.index is not None:
            text += f"_{self.index}"
        if self.primed:
            text += "'"
        return text

    def shifted(self, delta: int) -> Gen:
        """Return the family member ``delta`` steps further along."""
        if self.index is None:
            raise ValueError(f"generator {self} is not indexed")
        return Gen(self.name, self.index + delta, self.primed)

    def with_prime(self, primed: bool = True) -> Gen:
        return Gen(self.name, self.index, primed)

    def word(self, exp: int = 1) -> Word:
        """Return the word ``self^exp``."""
        return Word(((self, exp),))


Syllable = tuple[Gen, int]


def _freely_reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for gen, exp in syllables:
        if not isinstance(gen, Gen):
            raise TypeError(f"syllable generator must be a Gen, got {gen!r}")
        _validate_integer(exp, "exponent")
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (gen, merged)
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty syllable sequence is the identity."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "syllables", _freely_reduce(self.syllables))

    @classmethod
    def _from_reduced(cls, syllables: tuple[Syllable, ...]) -> Word:
        word = object.__new__(cls)
        object.__setattr__(word, "syllables", syllables)
        return word

    @classmethod
    def identity(cls) -> Word:
        return _IDENTITY

    @classmethod
    def from_letters(cls, letters: Iterable[Syllable]) -> Word:
        return cls(tuple(letters))

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, exp: int) -> Word:
        return power(self, exp)

    def inverse(self) -> Word:
        return inv(self)

    def power(self, exp: int) -> Word:
        return power(self, exp)

    @property
    def length(self) -> int:
        """Number of letters, i.e. the sum of absolute exponents."""
        return sum(abs(exp) for _, exp in self.syllables)

    @property
    def sort_key(self) -> tuple[int, tuple[tuple[tuple[str, bool, int, bool], int], ...]]:
        return (self.length, tuple((g.sort_key, e) for g, e in self.syllables))

    def gens(self) -> frozenset[Gen]:
        return frozenset(g for g, _ in self.syllables)

    def letters(self) -> tuple[Syllable, ...]:
        """Expand into single letters ``(gen, +1)`` / ``(gen, -1)``."""
        out: list[Syllable] = []
        for gen, exp in self.syllables:
            sign = 1 if exp > 0 else -1
            out.extend((gen, sign) for _ in range(abs(exp)))
        return tuple(out)


_IDENTITY = Word._from_reduced(())


def mul(a: Word, b: Word) -> Word:
    """Freely reduced concatenation ``a·b``."""
    if not a.syllables:
        return b
    if not b.syllables:
        return a
    left = list(a.syllables)
    right = b.syllables
    j = 0
    while left and j < len(right):
        gen, exp = left[-1]
        other, other_exp = right[j]
        if gen != other:
            break
        left.pop()
        j += 1
        merged = exp + other_exp
        if merged != 0:
            left.append((gen, merged))
            break
    return Word._from_reduced(tuple(left) + right[j:])


def inv(w: Word) -> Word:
    """Return ``w^-1``."""
    return Word._from_reduced(tuple((g, -e) for g, e in reversed(w.syllables)))


def power(w: Word, exp: int) -> Word:
    """Return ``w^exp`` by repeated squaring."""
    exp = _validate_integer(exp, "exp")
    if exp < 0:
        return power(inv(w), -exp)
    if len(w.syllables) == 1:
        gen, e = w.syllables[0]
        return Word._from_reduced(((gen, e * exp),)) if exp else _IDENTITY
    result = _IDENTITY
    base = w
    while exp:
        if exp & 1:
            result = mul(result, base)
        exp >>= 1
        if exp:
            base = mul(base, base)
    return result


def conj(a: Word, w: Word) -> Word:
    """Return ``a w a^-1``."""
    return mul(mul(a, w), inv(a))


def comm(a: Word, b: Word) -> Word:
    """Return the commutator ``a b a^-1 b^-1``."""
    return mul(mul(a, b), inv(mul(b, a)))


def substitute(w: Word, images: Mapping[Gen, Word]) -> Word:
    """Apply the free-group homomorphism defined by ``images`` to ``w``."""
    result = _IDENTITY
    for gen, exp in w.syllables:
        try:
            image = images[gen]
        except KeyError:
            raise MissingImageError(gen) from None
        result = mul(result, power(image, exp))
    return result


def exponent_sum(w: Word, g: Gen) -> int:
    """Total exponent of ``g`` in ``w`` (a coordinate of the abelianization)."""
    return sum(exp for gen, exp in w.syllables if gen == g)


def shift_indices(w: Word, family: str, delta: int) -> Word:
    """Shift the index of every generator of ``family`` by ``delta``."""
    delta = _validate_integer(delta, "delta")
    if delta == 0:
        return w
    return Word._from_reduced(
        tuple(
            (g.shifted(delta) if g.name == family and g.index is not None else g, e)
            for g, e in w.syllables
        )
    )


def expand_family(w: Word, family: str, image: Callable[[Gen], Word]) -> Word:
    """Replace each indexed member of ``family`` by ``image(gen)``."""
    if not any(g.name == family and g.index is not None for g, _ in w.syllables):
        return w
    result = _IDENTITY
    for gen, exp in w.syllables:
        if gen.name == family and gen.index is not None:
            result = mul(result, power(image(gen), exp))
        else:
            result = mul(result, Word._from_reduced(((gen, exp),)))
    return result


def cyclic_reduce(w: Word) -> Word:
    """Conjugate ``w`` to a cyclically reduced word (first letter != last^-1)."""
    syllables = w.syllables
    while len(syllables) >= 2:
        (first, e1), (last, e2) = syllables[0], syllables[-1]
        if first != last or (e1 > 0) == (e2 > 0):
            break
        middle = syllables[1:-1]
        merged = e1 + e2
        syllables = ((first, merged), *middle) if merged else middle
    return Word._from_reduced(syllables)


def _letter_key(letters: tuple[Syllable, ...]) -> tuple[tuple[tuple[str, bool, int, bool], int], ...]:
    # generator order first, then positive before negative
    return tuple((g.sort_key, -e) for g, e in letters)


def cyclic_canonical(w: Word, allow_inverse: bool = True) -> Word:
    """Minimal letter rotation of the cyclic reduction of ``w`` (or its inverse).

    The minimum starts a run of its smallest letter, so only rotations at
    syllable boundaries are compared.
    """
    reduced = cyclic_reduce(w)
    if not reduced.syllables:
        return reduced
    candidates = [reduced.syllables]
    if allow_inverse:
        candidates.append(inv(reduced).syllables)
    best = min(
        (syllables[k:] + syllables[:k] for syllables in candidates for k in range(len(syllables))),
        key=lambda rotated: _letter_key(Word._from_reduced(rotated).letters()),
    )
    return Word(best)


def is_cyclic_conjugate(a: Word, b: Word, allow_inverse: bool = True) -> bool:
    """True iff ``a`` and ``b`` agree up to cyclic rotation (and inversion)."""
    return cyclic_canonical(a, allow_inverse) == cyclic_canonical(b, allow_inverse)


def format_word(w: Word) -> str:
    """Render ``w`` in word literal syntax."""
    if not w.syllables:
        return IDENTITY_LITERAL
    return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in w.syllables)


def parse_word(text: str) -> Word:
    """Parse a word literal; errors name the 0-based character position."""
    if not isinstance(text, str):
        raise ValueError("word literal must be a string")
    tokens = list(_TOKEN_RE.finditer(text))
    if len(tokens) == 1 and tokens[0].group() == IDENTITY_LITERAL:
        return _IDENTITY
    syllables: list[Syllable] = []
    for token in tokens:
        literal = token.group()
        match = _SYLLABLE_RE.match(literal)
        end = match.end() if match else 0
        if match is None or end != len(literal):
            raise WordSyntaxError(
                f"unexpected character {literal[end]!r}", token.start() + end
            )
        index = match.group("index")
        exp_text = match.group("exp")
        exp = int(exp_text) if exp_text is not None else 1
        if exp == 0:
            raise WordSyntaxError("exponent 0 is not allowed", token.start() + match.start("exp"))
        gen = Gen(match.group("name"), int(index) if index is not None else None, bool(match.group("prime")))
        syllables.append((gen, exp))
    word = Word(tuple(syllables))
    logger.debug("Parsed word %r into %d syllables", text, len(word.syllables))
    return word


def parse_gen(text: str) -> Gen:
    """Parse a single generator symbol such as ``z_1`` or ``x'``."""
    word = parse_word(text)
    if len(word.syllables) != 1 or word.syllables[0][1] != 1 or len(text.split()) != 1:
        raise WordSyntaxError(f"expected a single generator, got {text!r}", 0)
    return word.syllables[0][0]


def random_word(rng: random.Random, alphabet: Sequence[Gen], length: int) -> Word:
    """Freely reduced product of ``length`` random letters ``g^{+-1}``."""
    letters = [(rng.choice(alphabet), rng.choice((1, -1))) for _ in range(length)]
    return Word(tuple(letters))


def gens(*names: str) -> tuple[Gen, ...]:
    """Shorthand: ``gens("x", "y")`` -> ``(Gen("x"), Gen("y"))``."""
    return tuple(parse_gen(name) for name in names)
