"""Word-problem solvers producing canonical normal forms.

Four group families are supported:

* ``FreeOracle``: free groups (free reduction).
* ``BSOracle``: Baumslag-Solitar groups ``<x, y | x y^m x^-1 = y^n>`` via
  Britton reduction followed by coset canonicalization (HNN normal form).
* ``CyclicAmalgamOracle``: ``<a, b | a^m = b^n>``, written ``c^t s_1 ... s_k``
  with ``c = a^m = b^n`` central.
* ``ChainAmalgamOracle``: ``<u_lo, ..., u_hi | u_{i+1}^q = u_i^p>``, reduced as
  an iterated amalgam along the line of vertex groups.

Every oracle is an immutable, hashable dataclass. Two words represent the same
group element iff their normal forms compare equal.
"""

from __future__ import annotations

import logging
import re
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, ClassVar

from ._validation import (
    _validate_nonzero_integer,
    _validate_positive_integer,
    _validate_window,
)
from .errors import (
    ArityMismatchError,
    DescriptorError,
    FactorizationError,
    UnknownGeneratorError,
    UnsupportedOracleError,
    WindowExceededError,
    WordSyntaxError,
)
from .words import (
    Gen,
    Word,
    conj,
    expand_family,
    exponent_sum,
    inv,
    mul,
    parse_gen,
    parse_word,
    substitute,
)

logger = logging.getLogger(__name__)

NF_CACHE_SIZE = 1 << 16


@dataclass(frozen=True)
class NormalForm:
    """Canonical representative of a group element.

    Equality and hashing only look at ``word``; ``certificate`` carries the
    oracle-specific decomposition the word was built from.
    """

    word: Word
    certificate: Any = field(default=None, compare=False)

    def __str__(self) -> str:
        return str(self.word)

    def __bool__(self) -> bool:
        return bool(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word


@dataclass(frozen=True)
class BrittonCertificate:
    """``y^{b_0} x^{e_1} y^{b_1} ... x^{e_k} y^{b_k}`` in HNN normal form."""

    bases: tuple[int, ...]
    letters: tuple[int, ...]

    @property
    def stable_exponent(self) -> int:
        return sum(self.letters)


@dataclass(frozen=True)
class AmalgamCertificate:
    """Central exponent ``t`` and the alternating syllables after it."""

    central: int
    pieces: tuple[tuple[str, int], ...]


class Oracle(ABC):
    """Solves the word problem of one group by computing normal forms."""

    kind: ClassVar[str] = "abstract"

    @abstractmethod
    def generators(self) -> tuple[Gen, ...]:
        """Generators a word may use (indexed families list their window)."""

    @abstractmethod
    def knows(self, g: Gen) -> bool:
        """True iff ``g`` is a generator of this oracle's group."""

    @abstractmethod
    def _normal_form(self, w: Word) -> NormalForm:
        """Uncached normal form; ``w`` has already been checked."""

    @abstractmethod
    def describe(self) -> str:
        """Descriptor string accepted by :func:`parse_oracle`."""

    def check_word(self, w: Word) -> None:
        for g in w.gens():
            if not self.knows(g):
                raise UnknownGeneratorError(f"generator {g} is not known to {self.describe()}")

    def nf(self, w: Word) -> NormalForm:
        return _cached_nf(self, w)

    def is_trivial(self, w: Word) -> bool:
        return self.nf(w).is_identity

    def equal(self, a: Word, b: Word) -> bool:
        return self.is_trivial(mul(a, inv(b)))

    def in_cyclic_subgroup(self, w: Word, g: Word, k: int) -> int | None:
        raise UnsupportedOracleError(f"cyclic subgroup membership is not available for {self.kind}")

    def relators(self) -> tuple[Word, ...]:
        """Defining relators over :meth:`generators`."""
        return ()

    def __str__(self) -> str:
        return self.describe()


@lru_cache(maxsize=NF_CACHE_SIZE)
def _cached_nf(oracle: Oracle, w: Word) -> NormalForm:
    oracle.check_word(w)
    result = oracle._normal_form(w)
    logger.debug("nf[%s] of %d-letter word has %d letters", oracle.kind, w.length, result.word.length)
    return result


def nf(o: Oracle, w: Word) -> NormalForm:
    """Canonical normal form of ``w`` in the group of ``o``."""
    return o.nf(w)


def is_trivial(o: Oracle, w: Word) -> bool:
    return o.is_trivial(w)


def equal(o: Oracle, a: Word, b: Word) -> bool:
    return o.equal(a, b)


def in_cyclic_subgroup(o: Oracle, w: Word, g: Word, k: int) -> int | None:
    """Return ``t`` with ``w = g^{k t}`` in the group, or None."""
    return o.in_cyclic_subgroup(w, g, k)


def _single_syllable(g: Word) -> tuple[Gen, int]:
    if len(g.syllables) != 1:
        raise UnsupportedOracleError(f"{g} is not a power of a single generator")
    return g.syllables[0]


def _divide(total: int, gen_exp: int, k: int) -> int | None:
    step = gen_exp * k
    if total % step:
        return None
    return total // step


@dataclass(frozen=True)
class FreeOracle(Oracle):
    """Free group on ``gens``."""

    gens: tuple[Gen, ...]
    kind: ClassVar[str] = "free"

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))

    def generators(self) -> tuple[Gen, ...]:
        return self.gens

    def knows(self, g: Gen) -> bool:
        return g in self.gens

    def _normal_form(self, w: Word) -> NormalForm:
        return NormalForm(w)

    def describe(self) -> str:
        return "free:" + ",".join(str(g) for g in self.gens)


@dataclass(frozen=True)
class BSOracle(Oracle):
    """Baumslag-Solitar group ``<stable, base | stable base^m stable^-1 = base^n>``.

    With ``family`` set, the indexed letters ``family_i`` stand for
    ``stable^i family_word stable^-i``.
    """

    m: int
    n: int
    stable: Gen = Gen("x")
    base: Gen = Gen("y")
    family: str | None = None
    family_word: Word | None = None
    kind: ClassVar[str] = "bs"

    def __post_init__(self) -> None:
        _validate_positive_integer(self.m, "m")
        _validate_positive_integer(self.n, "n")
        if self.stable == self.base:
            raise ValueError("stable letter and base generator must differ")
        if (self.family is None) != (self.family_word is None):
            raise ValueError("family and family_word must be given together")
        if self.family_word is not None:
            if not self.family_word.gens() <= {self.stable, self.base}:
                raise ValueError("family_word must be a word in the stable letter and base")
            if self.family in (self.stable.name, self.base.name):
                raise ValueError("family name collides with a generator")

    def generators(self) -> tuple[Gen, ...]:
        return (self.stable, self.base)

    def knows(self, g: Gen) -> bool:
        if g in (self.stable, self.base):
            return True
        return self.family is not None and g.name == self.family and g.index is not None and not g.primed

    def family_image(self, g: Gen) -> Word:
        """``family_i -> stable^i family_word stable^-i``."""
        assert self.family_word is not None and g.index is not None
        return conj(self.stable.word(g.index), self.family_word)

    def expand(self, w: Word) -> Word:
        """Rewrite family letters into the stable letter and base."""
        if self.family is None:
            return w
        return expand_family(w, self.family, self.family_image)

    def _family_power(self, level: int, b: int, k: int) -> tuple[int, int] | None:
        """``(i, e)`` with ``base_level^b = family_i^e``, smallest ``|e|`` first."""
        candidates = [(level, b)]
        # base_j^{n t} = base_{j+1}^{m t}, walked up and down
        for step, divisor, factor in ((1, self.n, self.m), (-1, self.m, self.n)):
            j, c = level, b
            for _ in range(abs(b).bit_length()):
                if c % divisor:
                    break
                j, c = j + step, c // divisor * factor
                candidates.append((j, c))
        found = sorted((abs(c // k), j, c // k) for j, c in candidates if c % k == 0)
        if not found:
            return None
        _, i, e = found[0]
        return i, e

    def family_form(self, w: Word) -> Word | None:
        """``w`` as a word in the family letters, or None.

        Only families with ``family_word = base^k`` are rewritten; ``w`` must
        have stable exponent 0.
        """
        if self.family is None or self.family_word is None:
            return None
        if len(self.family_word.syllables) != 1 or self.family_word.syllables[0][0] != self.base:
            return None
        k = self.family_word.syllables[0][1]
        try:
            pieces = self.conjugate_decomposition(w)
        except FactorizationError:
            return None
        out = Word.identity()
        for level, b in pieces:
            power = self._family_power(level, b, k)
            if power is None:
                return None
            out = mul(out, Gen(self.family, power[0]).word(power[1]))
        return out

    def _britton(self, w: Word) -> tuple[list[int], list[int]]:
        bases = [0]
        letters: list[int] = []
        m, n = self.m, self.n
        for gen, exp in w.syllables:
            if gen == self.base:
                bases[-1] += exp
                continue
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                b = bases[-1]
                if letters and letters[-1] == 1 and sign == -1 and b % m == 0:
                    # x y^{mk} x^-1 -> y^{nk}
                    bases.pop()
                    letters.pop()
                    bases[-1] += n * (b // m)
                elif letters and letters[-1] == -1 and sign == 1 and b % n == 0:
                    # x^-1 y^{nk} x -> y^{mk}
                    bases.pop()
                    letters.pop()
                    bases[-1] += m * (b // n)
                else:
                    letters.append(sign)
                    bases.append(0)
        return bases, letters

    def _canonicalize(self, bases: list[int], letters: list[int]) -> None:
        for j, sign in enumerate(letters):
            if sign == 1:
                # y^{n q} x = x y^{m q}
                q, bases[j] = divmod(bases[j], self.n)
                bases[j + 1] += self.m * q
            else:
                # y^{m q} x^-1 = x^-1 y^{n q}
                q, bases[j] = divmod(bases[j], self.m)
                bases[j + 1] += self.n * q

    def _normal_form(self, w: Word) -> NormalForm:
        bases, letters = self._britton(self.expand(w))
        self._canonicalize(bases, letters)
        syllables: list[tuple[Gen, int]] = [(self.base, bases[0])]
        for sign, b in zip(letters, bases[1:]):
            syllables.append((self.stable, sign))
            syllables.append((self.base, b))
        return NormalForm(Word(tuple(syllables)), BrittonCertificate(tuple(bases), tuple(letters)))

    def stable_exponent(self, w: Word) -> int:
        """Exponent sum of the stable letter (the map onto Z)."""
        self.check_word(w)
        return exponent_sum(self.expand(w), self.stable)

    def conjugate_decomposition(self, w: Word, window: int | None = None) -> tuple[tuple[int, int], ...]:
        """Write an element of ``ker(stable_exponent)`` as ``prod base_j^{b}``.

        ``base_j`` is ``stable^j base stable^-j``; the pairs ``(j, b)`` come from the
        prefix sums of the normal form. Raises FactorizationError when the
        element is outside the kernel or needs ``|j| > window``.
        """
        cert = self.nf(w).certificate
        if cert.stable_exponent != 0:
            raise FactorizationError(f"{w} has stable exponent {cert.stable_exponent}, not 0")
        pairs: list[tuple[int, int]] = []
        level = 0
        for j, b in enumerate(cert.bases):
            if j:
                level += cert.letters[j - 1]
            if window is not None and abs(level) > window:
                raise FactorizationError(f"{w} needs conjugate index {level} outside [-{window}, {window}]")
            if b:
                pairs.append((level, b))
        return tuple(pairs)

    def affine_image(self, w: Word) -> tuple[Fraction, Fraction]:
        """Image ``(a, b)`` of ``w`` under stable -> ``t*n/m``, base -> ``t+1``.

        The pair stands for ``t -> a t + b``; a nonidentity image proves ``w``
        is nontrivial.
        """
        self.check_word(w)
        a, b = Fraction(1), Fraction(0)
        dilation = Fraction(self.n, self.m)
        for gen, exp in self.expand(w).syllables:
            if gen == self.base:
                b += a * exp
            else:
                a *= dilation**exp
        return a, b

    def in_cyclic_subgroup(self, w: Word, g: Word, k: int) -> int | None:
        k = _validate_positive_integer(k, "k")
        gen, gen_exp = _single_syllable(g)
        if gen not in (self.stable, self.base):
            raise UnsupportedOracleError(f"{g} is not a power of {self.stable} or {self.base}")
        word = self.nf(w).word
        if not word:
            return 0
        if len(word.syllables) != 1 or word.syllables[0][0] != gen:
            return None
        return _divide(word.syllables[0][1], gen_exp, k)

    def relators(self) -> tuple[Word, ...]:
        head = mul(self.stable.word(), self.base.word(self.m))
        return (mul(head, mul(self.stable.word(-1), self.base.word(-self.n))),)

    def describe(self) -> str:
        text = f"bs:{self.m},{self.n}"
        if self.family is not None:
            text += f":{self.family}={self.family_word}"
        return text


@dataclass(frozen=True)
class CyclicAmalgamOracle(Oracle):
    """``<a, b | a^m = b^n>``; negative ``m`` or ``n`` flip the sign of a generator."""

    a: Gen
    b: Gen
    m: int
    n: int
    a_sign: int = field(init=False, repr=False, compare=False)
    b_sign: int = field(init=False, repr=False, compare=False)
    kind: ClassVar[str] = "amalgam"

    def __post_init__(self) -> None:
        _validate_nonzero_integer(self.m, "m")
        _validate_nonzero_integer(self.n, "n")
        if self.a == self.b:
            raise ValueError("amalgam generators must differ")
        object.__setattr__(self, "a_sign", 1 if self.m > 0 else -1)
        object.__setattr__(self, "b_sign", 1 if self.n > 0 else -1)

    def generators(self) -> tuple[Gen, ...]:
        return (self.a, self.b)

    def knows(self, g: Gen) -> bool:
        return g in (self.a, self.b)

    @property
    def central(self) -> Word:
        """``c = a^m``."""
        return self.a.word(self.m)

    def _factor(self, w: Word) -> tuple[int, list[tuple[str, int]]]:
        t = 0
        pieces: list[tuple[str, int]] = []
        moduli = {"a": abs(self.m), "b": abs(self.n)}
        for gen, exp in w.syllables:
            side = "a" if gen == self.a else "b"
            e = exp * (self.a_sign if side == "a" else self.b_sign)
            if pieces and pieces[-1][0] == side:
                e += pieces.pop()[1]
            q, r = divmod(e, moduli[side])
            t += q
            if r:
                pieces.append((side, r))
        return t, pieces

    def _normal_form(self, w: Word) -> NormalForm:
        t, pieces = self._factor(w)
        syllables: list[tuple[Gen, int]] = [(self.a, self.m * t)]
        for side, r in pieces:
            if side == "a":
                syllables.append((self.a, self.a_sign * r))
            else:
                syllables.append((self.b, self.b_sign * r))
        return NormalForm(Word(tuple(syllables)), AmalgamCertificate(t, tuple(pieces)))

    def in_cyclic_subgroup(self, w: Word, g: Word, k: int) -> int | None:
        k = _validate_positive_integer(k, "k")
        gen, gen_exp = _single_syllable(g)
        if gen not in (self.a, self.b):
            raise UnsupportedOracleError(f"{g} is not a power of {self.a} or {self.b}")
        cert = self.nf(w).certificate
        side = "a" if gen == self.a else "b"
        if len(cert.pieces) > 1 or (cert.pieces and cert.pieces[0][0] != side):
            return None
        if side == "a":
            total = self.a_sign * (abs(self.m) * cert.central + (cert.pieces[0][1] if cert.pieces else 0))
        else:
            total = self.b_sign * (abs(self.n) * cert.central + (cert.pieces[0][1] if cert.pieces else 0))
        return _divide(total, gen_exp, k)

    def relators(self) -> tuple[Word, ...]:
        return (mul(self.a.word(self.m), self.b.word(-self.n)),)

    def describe(self) -> str:
        return f"amalgam:{self.m},{self.n}:{self.a},{self.b}"


# Elements of G[lo, k] are pairs (pieces, d): pieces alternate ("A", lower) with
# lower an element of G[lo, k-1] and ("B", r) with 0 < r < q; the tail is
# gamma^d with gamma = u_k^q = u_{k-1}^p. The base level G[lo, lo] stores
# u_lo^d as ((), d).
_ChainElt = tuple[tuple[tuple[str, Any], ...], int]
_CHAIN_IDENTITY: _ChainElt = ((), 0)


@dataclass(frozen=True)
class ChainAmalgamOracle(Oracle):
    """``<u_lo, ..., u_hi | u_{i+1}^q = u_i^p>`` over a finite index window."""

    family: str
    p: int
    q: int
    lo: int
    hi: int
    kind: ClassVar[str] = "chain"

    def __post_init__(self) -> None:
        _validate_positive_integer(self.p, "p")
        _validate_positive_integer(self.q, "q")
        _validate_window(self.lo, self.hi)
        self.gen(self.lo)

    def gen(self, i: int) -> Gen:
        return Gen(self.family, i)

    def generators(self) -> tuple[Gen, ...]:
        return tuple(self.gen(i) for i in range(self.lo, self.hi + 1))

    def knows(self, g: Gen) -> bool:
        return g.name == self.family and g.index is not None and not g.primed and self.lo <= g.index <= self.hi

    def check_word(self, w: Word) -> None:
        for g in w.gens():
            if g.name == self.family and g.index is not None and not g.primed and not self.knows(g):
                raise WindowExceededError(
                    f"generator {g} is outside the window [{self.lo}, {self.hi}]"
                )
        super().check_word(w)

    def _trailing(self, level: int, elt: _ChainElt) -> tuple[tuple[tuple[str, Any], ...], int]:
        pieces, d = elt
        if level == self.lo:
            return (), d
        if pieces and pieces[-1][0] == "B":
            return pieces[:-1], pieces[-1][1] + self.q * d
        return pieces, self.q * d

    def _from_trailing(self, level: int, prefix: tuple[tuple[str, Any], ...], e: int) -> _ChainElt:
        if level == self.lo:
            return (), e
        d, r = divmod(e, self.q)
        return (prefix + (("B", r),) if r else prefix), d

    def _mul_gen(self, level: int, elt: _ChainElt, j: int, f: int) -> _ChainElt:
        if level == j:
            prefix, e = self._trailing(level, elt)
            return self._from_trailing(level, prefix, e + f)
        pieces, d = elt
        if pieces and pieces[-1][0] == "A":
            lower, head = pieces[-1][1], pieces[:-1]
        else:
            lower, head = _CHAIN_IDENTITY, pieces
        if d:
            lower = self._mul_gen(level - 1, lower, level - 1, self.p * d)
        lower = self._mul_gen(level - 1, lower, j, f)
        # edge group <u_{level-1}^p> = <u_level^q>
        lift = self._vertex_exponent(level - 1, lower, self.p)
        if lift is not None:
            return head, lift
        prefix, e = self._trailing(level - 1, lower)
        lift, rest = divmod(e, self.p)
        return head + (("A", self._from_trailing(level - 1, prefix, rest)),), lift

    def _vertex_exponent(self, level: int, elt: _ChainElt, k: int = 1) -> int | None:
        """``t`` with ``elt = u_level^{k t}`` in ``G[lo, level]``, or None."""
        prefix, e = self._trailing(level, elt)
        if prefix:
            return None
        return _divide(e, 1, k)

    def _descend(self, level: int, elt: _ChainElt, j: int) -> _ChainElt | None:
        """The same element written in ``G[lo, j]``, or None when it lies outside."""
        while level > j:
            pieces, d = elt
            if not pieces:
                lower = _CHAIN_IDENTITY
            elif len(pieces) == 1 and pieces[0][0] == "A":
                lower = pieces[0][1]
            else:
                return None
            if d:
                lower = self._mul_gen(level - 1, lower, level - 1, self.p * d)
            elt, level = lower, level - 1
        return elt

    def in_cyclic_subgroup(self, w: Word, g: Word, k: int) -> int | None:
        k = _validate_positive_integer(k, "k")
        gen, gen_exp = _single_syllable(g)
        if not self.knows(gen):
            raise UnsupportedOracleError(f"{g} is not a power of a generator of {self.describe()}")
        assert gen.index is not None
        elt = self._descend(self.hi, self.nf(w).certificate, gen.index)
        if elt is None:
            return None
        e = self._vertex_exponent(gen.index, elt)
        return None if e is None else _divide(e, gen_exp, k)

    def relators(self) -> tuple[Word, ...]:
        return tuple(
            mul(self.gen(i + 1).word(self.q), self.gen(i).word(-self.p)) for i in range(self.lo, self.hi)
        )

    def _to_syllables(self, level: int, elt: _ChainElt) -> list[tuple[Gen, int]]:
        pieces, d = elt
        if level == self.lo:
            return [(self.gen(level), d)]
        out: list[tuple[Gen, int]] = []
        for tag, value in pieces:
            if tag == "A":
                out.extend(self._to_syllables(level - 1, value))
            else:
                out.append((self.gen(level), value))
        out.append((self.gen(level), self.q * d))
        return out

    def _normal_form(self, w: Word) -> NormalForm:
        elt = _CHAIN_IDENTITY
        for gen, exp in w.syllables:
            elt = self._mul_gen(self.hi, elt, gen.index, exp)
        return NormalForm(Word(tuple(self._to_syllables(self.hi, elt))), elt)

    def describe(self) -> str:
        return f"chain:{self.p},{self.q}:{self.lo}..{self.hi}:{self.family}"


def witness_generation(
    o: Oracle,
    target: Word,
    sub_gens: Sequence[Word],
    witness: Word,
    letters: Sequence[Gen] | None = None,
) -> bool:
    """True iff ``witness`` evaluated at ``sub_gens`` equals ``target``.

    ``letters`` name the abstract witness letters, default ``s_0, s_1, ...``.
    """
    sub_gens = tuple(sub_gens)
    letters = tuple(letters) if letters is not None else tuple(Gen("s", i) for i in range(len(sub_gens)))
    if len(letters) != len(sub_gens):
        raise ArityMismatchError(f"{len(letters)} witness letters for {len(sub_gens)} subgroup generators")
    extra = witness.gens() - set(letters)
    if extra:
        names = ", ".join(str(g) for g in sorted(extra))
        raise ArityMismatchError(f"witness uses unlisted letters {names}")
    value = substitute(witness, dict(zip(letters, sub_gens)))
    return o.equal(value, target)


def bs_affine_image(o: BSOracle, w: Word) -> tuple[Fraction, Fraction]:
    return o.affine_image(w)


_WINDOW_RE = re.compile(r"(-?[0-9]+)\.\.(-?[0-9]+)")
_INT_RE = re.compile(r"[-+]?[0-9]+")


def _parse_ints(text: str, count: int, descriptor: str) -> list[int]:
    parts = [part.strip() for part in text.split(",")]
    if not all(_INT_RE.fullmatch(part) for part in parts):
        raise DescriptorError(f"expected {count} integers in {descriptor!r}")
    values = [int(part) for part in parts]
    if len(values) != count:
        raise DescriptorError(f"expected {count} integers in {descriptor!r}")
    return values


def parse_oracle(descriptor: str) -> Oracle:
    """Build an oracle from a descriptor.

    Accepted forms: ``free:x,y``, ``bs:2,3`` or ``bs:2,3:z=y^4``,
    ``amalgam:3,2`` or ``amalgam:3,2:u_0,u_1`` (default generators ``x,y``),
    ``chain:3,2:0..4`` or ``chain:3,2:0..4:u`` (default family ``u``).
    """
    kind, _, rest = descriptor.strip().partition(":")
    fields = rest.split(":") if rest else []
    try:
        if kind == "free":
            if len(fields) != 1 or not fields[0].strip():
                raise DescriptorError(f"free descriptor needs a generator list: {descriptor!r}")
            return FreeOracle(tuple(parse_gen(name.strip()) for name in fields[0].split(",")))
        if kind == "bs":
            if len(fields) not in (1, 2):
                raise DescriptorError(f"malformed bs descriptor: {descriptor!r}")
            m, n = _parse_ints(fields[0], 2, descriptor)
            if len(fields) == 2:
                name, sep, word = fields[1].partition("=")
                if not sep:
                    raise DescriptorError(f"expected family=word in {descriptor!r}")
                return BSOracle(m, n, family=name.strip(), family_word=parse_word(word))
            return BSOracle(m, n)
        if kind == "amalgam":
            if len(fields) not in (1, 2):
                raise DescriptorError(f"malformed amalgam descriptor: {descriptor!r}")
            m, n = _parse_ints(fields[0], 2, descriptor)
            a, b = Gen("x"), Gen("y")
            if len(fields) == 2:
                names = [parse_gen(name.strip()) for name in fields[1].split(",")]
                if len(names) != 2:
                    raise DescriptorError(f"amalgam needs two generators: {descriptor!r}")
                a, b = names
            return CyclicAmalgamOracle(a, b, m, n)
        if kind == "chain":
            if len(fields) not in (2, 3):
                raise DescriptorError(f"malformed chain descriptor: {descriptor!r}")
            p, q = _parse_ints(fields[0], 2, descriptor)
            window = _WINDOW_RE.fullmatch(fields[1].strip())
            if window is None:
                raise DescriptorError(f"expected lo..hi window in {descriptor!r}")
            family = fields[2].strip() if len(fields) == 3 else "u"
            return ChainAmalgamOracle(family, p, q, int(window.group(1)), int(window.group(2)))
    except (WordSyntaxError, ValueError) as e:
        if isinstance(e, DescriptorError):
            raise
        raise DescriptorError(f"invalid descriptor {descriptor!r}: {e}") from e
    raise DescriptorError(f"unknown oracle kind {kind!r}")


def clear_nf_cache() -> None:
    _cached_nf.cache_clear()


__all__ = [
    "AmalgamCertificate",
    "BSOracle",
    "BrittonCertificate",
    "ChainAmalgamOracle",
    "CyclicAmalgamOracle",
    "FreeOracle",
    "NormalForm",
    "Oracle",
    "bs_affine_image",
    "clear_nf_cache",
    "equal",
    "in_cyclic_subgroup",
    "is_trivial",
    "nf",
    "parse_oracle",
    "witness_generation",
]
