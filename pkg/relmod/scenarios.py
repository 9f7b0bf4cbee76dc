"""Scenario catalog: reproducible end-to-end checks over every module.

Each scenario records ``(description, expected, actual)`` steps; it passes
iff every step matches. Expected values are constants written next to the
computation that should reproduce them.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Literal

from pydantic import BaseModel, Field

from .cayley import build_ball, chain_to_fox, cycle_to_relators, fox_to_chain, lift_word
from .complexes import (
    chi_level_formula,
    double_presentation,
    doubled_bs_presentation,
    prime_word,
    trefoil_ki,
    verify_doubled_quotient,
    verify_trefoil_genset,
)
from .errors import RelmodError, UnknownScenarioError
from .fox import fox_vector, relation_module_element
from .groupring import format_skew
from .oracles import BSOracle, ChainAmalgamOracle, CyclicAmalgamOracle, Oracle, witness_generation
from .presentations import (
    GroupHom,
    Presentation,
    X,
    Y,
    Z,
    abelianization_matrix,
    bs,
    bs_with_z_presentation,
    c_relator,
    chain_amalgam_relators,
    check_hom,
    d_relator,
    e_relator,
    euler_char,
    exponent_vector,
    gbar,
    in_integer_row_space,
    staggered_cyclic_chain,
    tietze_remove_gen,
    trefoil,
    u,
    u_substitution_chain,
    z,
)
from .words import Gen, Word, comm, conj, format_word, inv, mul, parse_word, random_word

logger = logging.getLogger(__name__)


class ScenarioStep(BaseModel):
    """One checked claim inside a scenario."""

    desc: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


class ScenarioReport(BaseModel):
    """Outcome of one scenario run."""

    id: str
    status: Literal["pass", "fail"]
    steps: list[ScenarioStep] = Field(default_factory=list)
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json")


@dataclass(frozen=True)
class ScenarioContext:
    """Oracles shared by the scenarios; replace one to run a negative control."""

    bs: Oracle = field(default_factory=lambda: BSOracle(2, 3, family="z", family_word=Y.word(4)))
    vertex_pair: Oracle = field(default_factory=lambda: CyclicAmalgamOracle(u(0), u(1), 3, 2))
    chain: Oracle = field(default_factory=lambda: ChainAmalgamOracle("u", 3, 2, 0, 1))
    trefoil: Oracle = field(default_factory=lambda: CyclicAmalgamOracle(X, Y, 2, 3))
    seed: int = 20240611
    sample_size: int = 500


class _Steps:
    def __init__(self) -> None:
        self.steps: list[ScenarioStep] = []

    def check(self, desc: str, expected: object, actual: object) -> None:
        self.steps.append(ScenarioStep(desc=desc, expected=_show(expected), actual=_show(actual)))


def _show(value: object) -> str:
    if isinstance(value, Word):
        return format_word(value)
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(sorted(_show(v) for v in value)) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return str(value)


WITNESS_X = Gen("X")
WITNESS_Z = Gen("Z")


def _generation_by_x_and_z(ctx: ScenarioContext, steps: _Steps) -> None:
    sub_gens = (X.word(), Y.word(4))
    letters = (WITNESS_X, WITNESS_Z)
    # x z x^-1 = y^6, so x z x^-1 z^-1 = y^2
    square = parse_word("X Z X^-1 Z^-1")
    steps.check(
        "y^2 = (x z x^-1) z^-1",
        True,
        witness_generation(ctx.bs, Y.word(2), sub_gens, square, letters),
    )
    # y = y^3 y^-2 with y^3 = x y^2 x^-1
    witness = parse_word("X^2 Z X^-1 Z^-1 X^-1 Z X Z^-1 X^-1")
    steps.check("y in <x, y^4>", True, witness_generation(ctx.bs, Y.word(), sub_gens, witness, letters))


def _u_substitution(ctx: ScenarioContext, steps: _Steps) -> None:
    for n in range(1, 5):
        chain = u_substitution_chain(0, n)
        steps.check(f"window [0, {n}] generators", [u(i) for i in range(n + 1)], list(chain.result.gens))
        steps.check(f"window [0, {n}] relators", chain_amalgam_relators(0, n), chain.result.relator_set())


def _commutator_kernel(ctx: ScenarioContext, steps: _Steps) -> None:
    commutator = comm(u(0).word(), u(1).word())
    steps.check("[u_0, u_1] trivial in <u_0, u_1 | u_0^3 = u_1^2>", False, ctx.vertex_pair.is_trivial(commutator))
    steps.check("[u_0, u_1] trivial in the chain window [0, 1]", False, ctx.chain.is_trivial(commutator))
    # u_i -> z_{i+1} z_i^-1 sends u_0 to y^2 and u_1 to x y^2 x^-1
    images = {u(i): mul(z(i + 1).word(), z(i).word(-1)) for i in (0, 1)}
    steps.check("u_0 maps to y^2", True, ctx.bs.equal(images[u(0)], Y.word(2)))
    steps.check("u_1 maps to x y^2 x^-1", True, ctx.bs.equal(images[u(1)], conj(X.word(), Y.word(2))))
    image = comm(Y.word(2), conj(X.word(), Y.word(2)))
    steps.check("[y^2, x y^2 x^-1] trivial in BS(2,3)", True, ctx.bs.is_trivial(image))


def _staggered_cyclic(ctx: ScenarioContext, steps: _Steps) -> None:
    chain = staggered_cyclic_chain(0)
    steps.check("generators after elimination", ["t"], [str(g) for g in chain.result.gens])
    steps.check("relators after elimination", 0, len(chain.result.relators))
    steps.check("z_0 in terms of t", "t^2", format_word(chain.eliminated[z(0)]))
    steps.check("z_1 in terms of t", "t^3", format_word(chain.eliminated[z(1)]))


def _staggered_images(ctx: ScenarioContext, steps: _Steps) -> None:
    for i in range(-2, 3):
        for name, relator in (("c", c_relator(i)), ("d", d_relator(i)), ("e", e_relator(i))):
            steps.check(f"{name}_{i} trivial in BS(2,3)", True, ctx.bs.is_trivial(relator))


def _staggered_closure(ctx: ScenarioContext, steps: _Steps) -> None:
    # c_i is a relator, so <z_i, z_{i+1} | c_i, d_i> is abelian
    for i in range(-2, 3):
        p = Presentation((z(i), z(i + 1)), (c_relator(i), d_relator(i)))
        vector = exponent_vector(p, e_relator(i))
        steps.check(
            f"e_{i} in the normal closure of c_{i}, d_{i}",
            True,
            in_integer_row_space(abelianization_matrix(p), vector),
        )


BETA = parse_word("z_1^2 z_0^-3")
BETA_DISPLAY = "(-1*1 + -1*z_0 + -1*z_0^2)x^0 + (1*1 + 1*z_1)x^1"


def _beta_length(ctx: ScenarioContext, steps: _Steps) -> None:
    if not isinstance(ctx.bs, BSOracle):
        raise RelmodError(f"relation module elements need a Baumslag-Solitar oracle, got {ctx.bs}")
    beta = relation_module_element(BETA, "z", ctx.bs)
    steps.check("length of the Fox image of z_1^2 z_0^-3", 1, beta.length())
    vector = fox_vector(BETA, (z(0), z(1)), ctx.bs)
    steps.check("boundary of the Fox image", "0", str(vector.boundary()))
    steps.check("skew Laurent form", BETA_DISPLAY, format_skew(beta))


def _cycle_roundtrip(ctx: ScenarioContext, steps: _Steps) -> None:
    relator = bs(2, 3).relators[0]
    ball = build_ball(ctx.bs, (X.word(), Y.word()), 5)
    cycle = lift_word(ball, relator)
    steps.check("relator lifts to a cycle", True, cycle.is_cycle())
    vector = fox_vector(relator, (X, Y), ctx.bs)
    steps.check("Fox image equals the lifted cycle", True, fox_to_chain(ball, vector) == cycle)
    steps.check("cycle reads back as the Fox vector", True, chain_to_fox(ball, cycle) == vector)
    for label, chain in (("single relator", cycle), ("two translates", cycle + cycle.translate(Y.word()))):
        pairs = cycle_to_relators(ball, chain)
        total = lift_word(ball, Word.identity())
        for f, s in pairs:
            total = total + lift_word(ball, mul(mul(f, s), inv(f)))
        steps.check(f"{label}: walks reassemble the cycle", True, total == chain)
        steps.check(f"{label}: every walk is a relator", True, all(ctx.bs.is_trivial(s) for _, s in pairs))
    steps.check("single relator: one closed walk", 1, len(cycle_to_relators(ball, cycle)))
    for g in (Y.word(), X.word(), X.word(-1), Y.word(-1)):
        pairs = cycle_to_relators(ball, cycle + cycle.translate(g))
        steps.check(f"translate by {g}: relator at 1 and at {g}", [(Word.identity(), relator), (g, relator)], pairs)


def _doubled_bs(ctx: ScenarioContext, steps: _Steps) -> None:
    doubled = doubled_bs_presentation()
    steps.check("chi of the doubled presentation", 1, euler_char(doubled))
    steps.check("chi from chi_min = 0 and two identifications", 1, chi_level_formula(euler_char(bs(2, 3)), 2))
    steps.check("doubled presentation presents BS(2,3)", True, verify_doubled_quotient(doubled, ctx.bs))


def _doubled_trefoil(ctx: ScenarioContext, steps: _Steps) -> None:
    for i in range(6):
        doubled = trefoil_ki(i)
        steps.check(f"K_{i}: chi", 1, euler_char(doubled))
        steps.check(f"K_{i}: chi formula", 1, chi_level_formula(euler_char(trefoil()), 2))
        steps.check(f"K_{i}: presents the trefoil group", True, verify_doubled_quotient(doubled, ctx.trefoil))
        steps.check(f"K_{i}: identification words generate", True, verify_trefoil_genset(i, ctx.trefoil))


def _redundant_generator(ctx: ScenarioContext, steps: _Steps) -> None:
    base = bs(2, 3)
    extended = bs_with_z_presentation()
    steps.check("chi with z = y^4 added", euler_char(base), euler_char(extended))
    reduced = tietze_remove_gen(extended, Z, extended.relator_index(mul(Z.word(), Y.word(-4))))
    steps.check("removing z restores the relators", base.relator_set(), reduced.relator_set())
    hom = GroupHom(gbar(), base, {X: X.word(), Z: Y.word(4)}, ctx.bs, verify=False)
    steps.check("x -> x, z -> y^4 is a homomorphism", True, check_hom(hom))


def _oracle_crosscheck(ctx: ScenarioContext, steps: _Steps) -> None:
    rng = random.Random(ctx.seed)
    alphabet = (u(0), u(1))
    relator = mul(u(0).word(3), u(1).word(-2))
    disagreements = 0
    trivial = 0
    for k in range(ctx.sample_size):
        w = random_word(rng, alphabet, rng.randint(0, 12))
        if k % 2:
            # splice a conjugate of the defining relator so that trivial words occur
            f = random_word(rng, alphabet, rng.randint(0, 4))
            w = mul(w, mul(conj(f, relator), inv(w)))
        left, right = ctx.chain.is_trivial(w), ctx.vertex_pair.is_trivial(w)
        trivial += left
        disagreements += left != right
    steps.check("chain window [0, 1] agrees with <u_0, u_1 | u_0^3 = u_1^2>", 0, disagreements)
    steps.check("trivial words sampled", True, trivial >= ctx.sample_size // 2)


def _false_homomorphisms(ctx: ScenarioContext, steps: _Steps) -> None:
    base = bs(2, 3)
    hom = GroupHom(gbar(), base, {X: X.word(), Z: Y.word()}, ctx.bs, verify=False)
    steps.check("x -> x, z -> y is a homomorphism", False, check_hom(hom))
    doubled = doubled_bs_presentation()
    honest = mul(Y.word(4), inv(prime_word(Y.word(4))))
    corrupted = Presentation(
        doubled.gens,
        tuple(r for r in doubled.relators if r != honest) + (mul(Y.word(4), Gen("y", primed=True).word(-2)),),
    )
    steps.check("corrupted identification presents BS(2,3)", False, verify_doubled_quotient(corrupted, ctx.bs))
    loose = double_presentation(base, [X.word(), Y.word(4)])
    steps.check("honest identification presents BS(2,3)", True, verify_doubled_quotient(loose, ctx.bs))


Scenario = Callable[[ScenarioContext, _Steps], None]

CATALOG: dict[str, Scenario] = {
    "gen-xz": _generation_by_x_and_z,
    "lemma2.1-tietze": _u_substitution,
    "lemma2.1-commutator": _commutator_kernel,
    "lemma2.2-cyclic": _staggered_cyclic,
    "lemma2.2-images": _staggered_images,
    "lemma2.2-closure": _staggered_closure,
    "thm1.1-beta": _beta_length,
    "lemma3.2-roundtrip": _cycle_roundtrip,
    "thm4.3-chi": _doubled_bs,
    "thm4.4-chi": _doubled_trefoil,
    "cor1.2-tietze": _redundant_generator,
    "oracle-crosscheck": _oracle_crosscheck,
    "hom-negative": _false_homomorphisms,
}


def scenario_ids() -> list[str]:
    return list(CATALOG)


def run_scenario(scenario_id: str, ctx: ScenarioContext | None = None) -> ScenarioReport:
    """Run one catalog entry; library errors turn into a failing step."""
    try:
        scenario = CATALOG[scenario_id]
    except KeyError:
        raise UnknownScenarioError(f"unknown scenario {scenario_id!r}") from None
    ctx = ctx if ctx is not None else ScenarioContext()
    steps = _Steps()
    start = time.perf_counter()
    try:
        scenario(ctx, steps)
    except RelmodError as e:
        logger.warning("Scenario %s raised %s: %s", scenario_id, type(e).__name__, e)
        steps.check("runs without error", "no error", f"{type(e).__name__}: {e}")
    elapsed = (time.perf_counter() - start) * 1000
    passed = bool(steps.steps) and all(step.passed for step in steps.steps)
    if not passed:
        logger.warning("Scenario %s failed", scenario_id)
    return ScenarioReport(
        id=scenario_id, status="pass" if passed else "fail", steps=steps.steps, ms=round(elapsed, 3)
    )


def run_all(
    ids: Iterable[str] | None = None, ctx: ScenarioContext | None = None, jobs: int = 1
) -> list[ScenarioReport]:
    """Run scenarios (all by default); reports come back in the order of ``ids``."""
    selected = list(ids) if ids is not None else scenario_ids()
    for scenario_id in selected:
        if scenario_id not in CATALOG:
            raise UnknownScenarioError(f"unknown scenario {scenario_id!r}")
    ctx = ctx if ctx is not None else ScenarioContext()
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(lambda scenario_id: run_scenario(scenario_id, ctx), selected))
