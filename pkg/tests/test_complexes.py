from pathlib import Path

import pytest

from relmod.complexes import (
    WITNESS_X,
    WITNESS_Y,
    TwoComplex,
    chi_level_formula,
    double_presentation,
    doubled_bs_presentation,
    prime_word,
    trefoil_genset,
    trefoil_ki,
    trefoil_witnesses,
    verify_doubled_quotient,
    verify_trefoil_genset,
)
from relmod.errors import PresentationError
from relmod.oracles import BSOracle, CyclicAmalgamOracle
from relmod.presentations import X, Y, Presentation, bs, euler_char, gbar, load_presentation, trefoil
from relmod.words import parse_word, substitute


def test_two_complex_counts() -> None:
    cx = TwoComplex.from_presentation(bs(2, 3))
    assert (cx.vertices, cx.edges, cx.faces, cx.chi) == (1, 2, 1, 0)
    assert TwoComplex(Presentation((X,))).chi == 0
    assert TwoComplex(Presentation((X, Y))).chi == -1


@pytest.mark.parametrize("p", [bs(2, 3), trefoil(), gbar(), Presentation((X, Y), (X.word(), Y.word()))])
def test_two_complex_matches_euler_char(p: Presentation) -> None:
    assert TwoComplex.from_presentation(p).chi == euler_char(p)


def test_prime_word() -> None:
    assert prime_word(parse_word("x y^2 x^-1")) == parse_word("x' y'^2 x'^-1")


def test_doubled_bs_presentation(test_data: Path) -> None:
    doubled = doubled_bs_presentation()
    assert doubled == load_presentation(test_data / "doubled_bs23.pres")
    assert euler_char(doubled) == 1 == chi_level_formula(0, 2)


def test_double_presentation_counts() -> None:
    p = double_presentation(trefoil(), [X.word(), Y.word(), parse_word("x y")])
    assert len(p.gens) == 4
    assert len(p.relators) == 5
    assert euler_char(p) == chi_level_formula(euler_char(trefoil()), 3)


def test_double_presentation_errors() -> None:
    with pytest.raises(PresentationError, match="primed"):
        double_presentation(doubled_bs_presentation(), [])
    with pytest.raises(PresentationError, match="outside the presentation"):
        double_presentation(bs(2, 3), [parse_word("z")])


def test_chi_level_formula() -> None:
    assert chi_level_formula(0, 2) == 1
    assert chi_level_formula(-1, 3) == 0
    assert chi_level_formula(1, 0) == 1
    with pytest.raises(ValueError, match="genset_size"):
        chi_level_formula(0, -1)
    with pytest.raises(ValueError, match="chi_min"):
        chi_level_formula(True, 1)  # type: ignore[arg-type]


def test_trefoil_genset() -> None:
    assert trefoil_genset(0) == (X.word(), Y.word())
    assert trefoil_genset(2) == (X.word(5), Y.word(7))
    with pytest.raises(ValueError, match="i must be non-negative"):
        trefoil_genset(-1)


@pytest.mark.parametrize("i", range(6))
def test_trefoil_witnesses_evaluate_to_generators(i: int, trefoil_oracle: CyclicAmalgamOracle) -> None:
    big_x, big_y = trefoil_genset(i)
    values = {WITNESS_X: big_x, WITNESS_Y: big_y}
    witnesses = trefoil_witnesses(i)
    assert trefoil_oracle.equal(substitute(witnesses[X], values), X.word())
    assert trefoil_oracle.equal(substitute(witnesses[Y], values), Y.word())


@pytest.mark.parametrize("i", range(6))
def test_verify_trefoil_genset(i: int, trefoil_oracle: CyclicAmalgamOracle) -> None:
    assert verify_trefoil_genset(i)
    assert verify_trefoil_genset(i, trefoil_oracle)


@pytest.mark.parametrize("i", range(4))
def test_trefoil_ki(i: int, trefoil_oracle: CyclicAmalgamOracle) -> None:
    p = trefoil_ki(i)
    assert euler_char(p) == 1 == chi_level_formula(euler_char(trefoil()), 2)
    k = 2 * i + 1
    assert X.word(k) * X.with_prime().word(-k) in p.relators
    assert verify_doubled_quotient(p, trefoil_oracle)


def test_verify_doubled_quotient(bs23: BSOracle) -> None:
    assert verify_doubled_quotient(doubled_bs_presentation(), bs23)
    crossed = Presentation(doubled_bs_presentation().gens, (parse_word("x y'"),))
    assert not verify_doubled_quotient(crossed, bs23)
