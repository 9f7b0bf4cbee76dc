#!/usr/bin/env python3
"""Simple relmod Example.
=====================

This example walks through the basic usage of relmod:
- Solving the word problem in BS(2,3) and the trefoil group
- Fox derivatives of a relator and the fundamental identity
- The skew Laurent image of z_1^2 z_0^-3
- Cayley ball growth
- Doubling a presentation and reading off its Euler characteristic
- Error handling for every library call

For the full set of checks, run ``relmod verify --all``.

Dependencies:
pip3 install relmod

Environment Variables (optional):
export RELMOD_LOG_LEVEL=<DEBUG|INFO|WARNING|ERROR>
export RELMOD_VERTEX_BUDGET=<maximum vertices in a Cayley ball>
"""

import logging

from relmod import (
    BSOracle,
    RelmodError,
    build_ball,
    doubled_bs_presentation,
    euler_char,
    format_element,
    format_presentation,
    format_skew,
    fox_vector,
    growth,
    parse_oracle,
    parse_word,
    relation_module_element,
)

# Keep library debug output out of the example
logging.getLogger("relmod").setLevel(logging.WARNING)


def safe_call(method, *args, **kwargs):
    """Call a relmod function, turning library errors into a message.

    Returns (success: bool, result: Any, error_message: str)
    """
    try:
        return True, method(*args, **kwargs), None
    except RelmodError as e:
        return False, None, f"{type(e).__name__}: {e}"
    except ValueError as e:
        return False, None, f"Invalid input: {e}"


def show_normal_forms() -> None:
    """Reduce a few words in BS(2,3) and in the trefoil group."""
    for descriptor, literal in (
        ("bs:2,3", "x y^-1 x^-1"),
        ("bs:2,3", "x y^2 x^-1 y^-3"),
        ("amalgam:2,3:x,y", "x^2 y^-3"),
        ("amalgam:2,3:x,y", "x y"),
    ):
        success, oracle, error = safe_call(parse_oracle, descriptor)
        if not success:
            print(f"  {descriptor}: {error}")
            continue
        success, normal, error = safe_call(oracle.nf, parse_word(literal))
        print(f"  {descriptor:<16} {literal:<18} -> {normal.word if success else error}")

    # Words outside the oracle's alphabet are rejected
    _, oracle, _ = safe_call(parse_oracle, "bs:2,3")
    success, _, error = safe_call(oracle.nf, parse_word("t"))
    print(f"  unknown letter rejected: {not success} ({error})")


def show_fox_calculus() -> None:
    """Fox derivatives of the BS(2,3) relator and of z_1^2 z_0^-3."""
    bs23 = BSOracle(2, 3)
    relator = parse_word("x y^2 x^-1 y^-3")
    success, vector, error = safe_call(fox_vector, relator, sorted(relator.gens()), bs23)
    if not success:
        print(f"  {error}")
        return
    for g in vector.gens:
        print(f"  d/d{g}: {format_element(vector[g])}")
    print(f"  fundamental identity holds: {vector.check()}")

    bs_z = BSOracle(2, 3, family="z", family_word=parse_word("y^4"))
    success, beta, error = safe_call(relation_module_element, parse_word("z_1^2 z_0^-3"), "z", bs_z)
    if success:
        print(f"  skew form: {format_skew(beta)}")
        print(f"  length: {beta.length()}")
    else:
        print(f"  {error}")


def show_ball_growth() -> None:
    """Sphere sizes of small Cayley balls."""
    for descriptor in ("free:x,y", "bs:2,3", "amalgam:2,3:x,y"):
        oracle = parse_oracle(descriptor)
        gens = [g.word() for g in oracle.generators()]
        success, ball, error = safe_call(build_ball, oracle, gens, 4)
        if success:
            print(f"  {descriptor:<16} {growth(ball)}")
        else:
            print(f"  {descriptor:<16} {error}")


def show_doubling() -> None:
    """Double BS(2,3) along x and y^4."""
    doubled = doubled_bs_presentation()
    print("  " + format_presentation(doubled).rstrip("\n").replace("\n", "\n  "))
    print(f"  chi: {euler_char(doubled)}")


def main():
    """Main example demonstrating basic relmod usage."""
    print("Normal forms")
    show_normal_forms()

    print("\nFox calculus")
    show_fox_calculus()

    print("\nCayley balls")
    show_ball_growth()

    print("\nDoubled presentation")
    show_doubling()


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        pass
