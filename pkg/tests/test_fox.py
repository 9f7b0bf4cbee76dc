import random
from pathlib import Path

import pytest

from relmod.errors import NotARelatorError, UnknownGeneratorError
from relmod.fox import (
    FoxVector,
    chain_rule_rhs,
    fox_derive,
    fox_vector,
    jacobian,
    relation_module_element,
)
from relmod.groupring import GroupRingElt, format_element, format_skew, length
from relmod.oracles import (
    BSOracle,
    ChainAmalgamOracle,
    CyclicAmalgamOracle,
    FreeOracle,
    Oracle,
)
from relmod.presentations import X, Y, bs, c_relator, d_relator, u, z
from relmod.words import Gen, Word, mul, parse_word, random_word, substitute

FAMILIES = {
    "free": (FreeOracle((X, Y)), (X, Y)),
    "bs": (BSOracle(2, 3), (X, Y)),
    "trefoil": (CyclicAmalgamOracle(X, Y, 2, 3), (X, Y)),
    "chain": (ChainAmalgamOracle("u", 3, 2, 0, 4), tuple(u(i) for i in range(5))),
}


def element(oracle: Oracle, *terms: tuple[str, int]) -> GroupRingElt:
    return GroupRingElt.from_terms(oracle, [(parse_word(w), c) for w, c in terms])


def test_basic_derivatives(free: FreeOracle) -> None:
    assert fox_derive(X.word(3), X, free) == element(free, ("1", 1), ("x", 1), ("x^2", 1))
    assert fox_derive(X.word(-1), X, free) == element(free, ("x^-1", -1))
    assert fox_derive(X.word(-2), X, free) == element(free, ("x^-1", -1), ("x^-2", -1))
    assert fox_derive(Y.word(5), X, free) == GroupRingElt.zero(free)
    assert fox_derive(Word.identity(), X, free) == GroupRingElt.zero(free)


def test_bs_relator_derivatives(bs23: BSOracle, test_data: Path) -> None:
    relator = bs(2, 3).relators[0]
    vector = fox_vector(relator, (X, Y), bs23)
    rendered = [f"d/d{g}: {format_element(vector[g])}" for g in vector.gens]
    assert rendered == (test_data / "bs23_fox.txt").read_text().splitlines()
    assert vector[X] == element(bs23, ("1", 1), ("y^3", -1))
    assert vector.boundary() == GroupRingElt.zero(bs23)
    assert not vector.is_zero()


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_fundamental_identity(family: str, rng: random.Random) -> None:
    oracle, alphabet = FAMILIES[family]
    for _ in range(1000):
        w = random_word(rng, alphabet, rng.randint(0, 12))
        vector = fox_vector(w, alphabet, oracle)
        assert vector.check()
        assert vector.boundary() == element(oracle, (str(w), 1), ("1", -1))


def test_product_rule(bs23: BSOracle, rng: random.Random) -> None:
    for _ in range(200):
        a = random_word(rng, (X, Y), rng.randint(0, 8))
        b = random_word(rng, (X, Y), rng.randint(0, 8))
        for g in (X, Y):
            expected = fox_derive(a, g, bs23) + GroupRingElt.from_word(bs23, a) * fox_derive(b, g, bs23)
            assert fox_derive(mul(a, b), g, bs23) == expected


@pytest.mark.parametrize("family", ["free", "bs"])
def test_chain_rule(family: str, rng: random.Random) -> None:
    oracle, alphabet = FAMILIES[family]
    for _ in range(200):
        w = random_word(rng, alphabet, rng.randint(0, 8))
        images = {g: random_word(rng, alphabet, rng.randint(0, 4)) for g in alphabet}
        for g in alphabet:
            assert fox_derive(substitute(w, images), g, oracle) == chain_rule_rhs(w, images, g, oracle)


def test_fox_vector_rejects_foreign_generators(bs23: BSOracle) -> None:
    with pytest.raises(UnknownGeneratorError, match="outside the given list"):
        fox_vector(parse_word("x y"), (X,), bs23)


def test_fox_vector_equality_and_json(bs23: BSOracle) -> None:
    relator = bs(2, 3).relators[0]
    a = fox_vector(relator, (X, Y), bs23)
    b = FoxVector(relator, (X, Y), bs23, {X: a[X], Y: a[Y]})
    assert a == b
    assert hash(a) == hash(b)
    assert a.to_json() == {
        "x": [[1, "1"], [-1, "y^3"]],
        "y": [[-1, "1"], [1, "x"], [-1, "y"], [1, "x y"], [-1, "y^2"]],
    }


def test_jacobian(bs23: BSOracle) -> None:
    rows = jacobian(bs(2, 3), bs23)
    assert len(rows) == 1
    assert rows[0][0] == element(bs23, ("1", 1), ("y^3", -1))
    assert rows[0][1].augmentation() == -1


def test_relation_module_element(bs_z: BSOracle, test_data: Path) -> None:
    beta = relation_module_element(parse_word("z_1^2 z_0^-3"), "z", bs_z)
    assert format_skew(beta) == (test_data / "beta_skew.txt").read_text().strip()
    assert length(beta) == 1
    assert (beta.lo, beta.hi) == (0, 1)


@pytest.mark.parametrize("i", range(-2, 3))
def test_relation_module_lengths(bs_z: BSOracle, i: int) -> None:
    for relator in (c_relator(i), d_relator(i)):
        skew = relation_module_element(relator, "z", bs_z)
        assert (skew.lo, skew.hi) == (i, i + 1)


def test_relation_module_element_rejects_non_relators(bs_z: BSOracle) -> None:
    with pytest.raises(NotARelatorError):
        relation_module_element(parse_word("z_1 z_0^-1"), "z", bs_z)
    with pytest.raises(UnknownGeneratorError):
        relation_module_element(parse_word("x z_0"), "z", bs_z)
    with pytest.raises(UnknownGeneratorError):
        relation_module_element(parse_word("z"), "z", bs_z)


def test_relation_module_element_of_identity_word(bs_z: BSOracle) -> None:
    assert not relation_module_element(Word.identity(), "z", bs_z)


def test_derivative_of_substituted_family(bs_z: BSOracle) -> None:
    # d(z_0^2)/dz_0 = 1 + z_0 = 1 + y^4
    derivative = fox_derive(z(0).word(2), z(0), bs_z)
    assert derivative == element(bs_z, ("1", 1), ("y^4", 1))
    assert fox_derive(z(0).word(2), Gen("z", 1), bs_z) == GroupRingElt.zero(bs_z)
