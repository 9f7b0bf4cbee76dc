import random

import pytest

from relmod.errors import (
    FactorizationError,
    OracleMismatchError,
    UnsupportedOracleError,
    ZeroElementError,
)
from relmod.groupring import (
    GroupRingElt,
    SkewLaurent,
    add,
    augmentation,
    format_element,
    format_skew,
    from_skew,
    length,
    multiply,
    to_skew,
)
from relmod.oracles import BSOracle, CyclicAmalgamOracle, FreeOracle
from relmod.presentations import X, Y
from relmod.words import conj, parse_word, random_word


def element(oracle: BSOracle | FreeOracle | CyclicAmalgamOracle, *terms: tuple[str, int]) -> GroupRingElt:
    return GroupRingElt.from_terms(oracle, [(parse_word(w), c) for w, c in terms])


def random_element(oracle: BSOracle, rng: random.Random, size: int = 4) -> GroupRingElt:
    return GroupRingElt.from_terms(
        oracle,
        [(random_word(rng, (X, Y), rng.randint(0, 6)), rng.randint(-3, 3)) for _ in range(size)],
    )


def test_terms_are_keyed_by_normal_form(bs23: BSOracle) -> None:
    a = element(bs23, ("x y^2 x^-1", 2), ("y^3", -1))
    assert dict(a.terms) == {Y.word(3): 1}
    assert a.coefficient(parse_word("x y^2 x^-1")) == 1
    assert a.coefficient(X.word()) == 0


def test_zero_and_one(bs23: BSOracle) -> None:
    zero = GroupRingElt.zero(bs23)
    one = GroupRingElt.one(bs23)
    a = element(bs23, ("x", 3), ("y", -2))
    assert not zero
    assert a + zero == a
    assert a * one == a == one * a
    assert a * zero == zero
    assert a - a == zero
    assert format_element(zero) == "0"
    assert str(one) == "1*1"


def test_ring_axioms(bs23: BSOracle, rng: random.Random) -> None:
    for _ in range(50):
        a, b, c = (random_element(bs23, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a + b == b + a
        assert add(a, b) == a + b
        assert multiply(a, b) == a * b


def test_augmentation_is_a_ring_map(bs23: BSOracle, rng: random.Random) -> None:
    for _ in range(50):
        a, b = random_element(bs23, rng), random_element(bs23, rng)
        assert augmentation(a * b) == augmentation(a) * augmentation(b)
        assert augmentation(a + b) == a.augmentation() + b.augmentation()


def test_integer_scaling(bs23: BSOracle) -> None:
    a = element(bs23, ("x", 1), ("y", -2))
    assert 3 * a == a * 3 == a + a + a
    assert -a == a * -1
    assert a * 0 == GroupRingElt.zero(bs23)


def test_mismatched_oracles(bs23: BSOracle, free: FreeOracle) -> None:
    with pytest.raises(OracleMismatchError):
        _ = GroupRingElt.one(bs23) + GroupRingElt.one(free)
    with pytest.raises(OracleMismatchError):
        _ = GroupRingElt.one(bs23) * GroupRingElt.one(free)


def test_format_orders_by_length(bs23: BSOracle) -> None:
    a = element(bs23, ("y^2", -1), ("x y", 1), ("y", -1), ("x", 1), ("1", -1))
    assert format_element(a) == "-1*1 + 1*x + -1*y + 1*x y + -1*y^2"
    assert [str(w) for w in a.support()] == ["1", "x", "y", "x y", "y^2"]


def test_map_keys(free: FreeOracle, bs23: BSOracle) -> None:
    a = element(free, ("x y^2 x^-1", 1), ("y^3", -1))
    assert a.augmentation() == 0
    pushed = a.map_keys(bs23, {X: X.word(), Y: Y.word()})
    assert pushed == GroupRingElt.zero(bs23)


def test_coefficients_must_be_integers(bs23: BSOracle) -> None:
    with pytest.raises(ValueError, match="coefficient"):
        GroupRingElt.from_word(bs23, X.word(), True)  # type: ignore[arg-type]


def test_to_skew_routes_degrees(bs23: BSOracle) -> None:
    a = element(bs23, ("x", 2), ("y x^-1", -1), ("y^5", 1), ("x y x^-1 x", 3))
    skew = to_skew(a)
    assert sorted(skew.coeffs) == [-1, 0, 1]
    assert skew.coefficient(1) == element(bs23, ("1", 2), ("x y x^-1", 3))
    assert skew.coefficient(0) == element(bs23, ("y^5", 1))
    assert skew.coefficient(-1) == element(bs23, ("y", -1))
    assert skew.coefficient(7) == GroupRingElt.zero(bs23)
    assert (skew.lo, skew.hi, skew.length(), length(skew)) == (-1, 1, 2, 2)
    assert skew.leading() == skew.coefficient(1)
    assert skew.trailing() == skew.coefficient(-1)


def test_skew_round_trip(bs23: BSOracle, rng: random.Random) -> None:
    for _ in range(100):
        a = random_element(bs23, rng, size=5)
        assert from_skew(to_skew(a)) == a
        assert to_skew(a).to_group_ring() == a


def test_twisted_product_matches_group_ring(bs23: BSOracle, rng: random.Random) -> None:
    for _ in range(100):
        a, b = random_element(bs23, rng), random_element(bs23, rng)
        assert from_skew(to_skew(a) * to_skew(b)) == a * b
        assert to_skew(a) + to_skew(b) == to_skew(a + b)


def test_length_is_additive(bs23: BSOracle, rng: random.Random) -> None:
    checked = 0
    while checked < 1000:
        a, b = random_element(bs23, rng, 3), random_element(bs23, rng, 3)
        if not a or not b:
            continue
        assert length(to_skew(a * b)) == length(to_skew(a)) + length(to_skew(b))
        checked += 1


def test_conjugate_by_stable(bs23: BSOracle) -> None:
    skew = to_skew(element(bs23, ("y^2 x", 1), ("y", 1)))
    moved = skew.conjugate_by_stable(1)
    assert moved.coefficient(1) == element(bs23, ("y^3", 1))
    assert moved.coefficient(0) == element(bs23, ("x y x^-1", 1))
    x_elt = to_skew(GroupRingElt.from_word(bs23, X.word()))
    x_inv = to_skew(GroupRingElt.from_word(bs23, X.word(-1)))
    assert moved == x_elt * skew * x_inv


def test_zero_skew(bs23: BSOracle) -> None:
    zero = to_skew(GroupRingElt.zero(bs23))
    assert not zero
    assert format_skew(zero) == "0"
    with pytest.raises(ZeroElementError):
        _ = zero.lo
    with pytest.raises(ZeroElementError):
        length(zero)


def test_format_skew(bs23: BSOracle) -> None:
    skew = to_skew(element(bs23, ("y x", 2), ("y^-1", -1)))
    assert format_skew(skew) == "(-1*y^-1)x^0 + (2*y)x^1"
    assert str(skew) == format_skew(skew)


def test_format_skew_uses_family_letters(bs_z: BSOracle) -> None:
    skew = to_skew(element(bs_z, ("y^6 x", 1), ("y^8", -2), ("y^2", 3)))
    assert format_skew(skew) == "(3*y^2 + -2*z_0^2)x^0 + (1*z_1)x^1"
    assert format_element(skew.coefficient(1)) == "1*y^6"


def test_to_skew_needs_bs_oracle(trefoil_oracle: CyclicAmalgamOracle) -> None:
    with pytest.raises(UnsupportedOracleError):
        to_skew(GroupRingElt.one(trefoil_oracle))


def test_to_skew_window(bs23: BSOracle) -> None:
    far = GroupRingElt.from_word(bs23, conj(X.word(3), Y.word()))
    assert to_skew(far, window=3).coefficient(0) == far
    with pytest.raises(FactorizationError):
        to_skew(far, window=2)


def test_skew_window_default_from_settings(bs23: BSOracle, monkeypatch: pytest.MonkeyPatch) -> None:
    from relmod.config import get_settings

    monkeypatch.setenv("RELMOD_SKEW_WINDOW", "1")
    get_settings.cache_clear()
    far = GroupRingElt.from_word(bs23, conj(X.word(2), Y.word()))
    with pytest.raises(FactorizationError):
        to_skew(far)


def test_skew_rejects_foreign_coefficients(bs23: BSOracle, bs_z: BSOracle) -> None:
    with pytest.raises(OracleMismatchError):
        SkewLaurent(bs23, {0: GroupRingElt.one(bs_z)})


def test_identity_element_in_skew(bs23: BSOracle) -> None:
    one = to_skew(GroupRingElt.one(bs23))
    assert dict(one.coeffs) == {0: GroupRingElt.one(bs23)}
    assert one * one == one
