"""Import the built-in parabolic algebras and build the ALGEBRA_BUILDERS dictionary

Constants:
    ALGEBRA_BUILDERS (dict): Dictionary of {family: builder} where family is the
        first part of a built-in name (like "conformal" in "conformal:3,0") and
        builder is a function of the integer parameters returning a tuple
        (LieAlgebraData, ParabolicGrading).
"""

from inspect import signature

from ..exceptions import AlgebraError
from .conformal import conformal_algebra
from .projective import projective_algebra
from .g2 import g2_algebra

ALGEBRA_BUILDERS = {
    "conformal": conformal_algebra,
    "projective": projective_algebra,
    "g2": g2_algebra,
    "g2_pfaffian": g2_algebra,
}


def builtin_parabolic(name):
    """Return (LieAlgebraData, ParabolicGrading) for a built-in name

    Args:
        name (str): "conformal:p,q", "projective:n" or "g2". "conformal:n" means
            "conformal:n,0".
    """
    family, _, parameters = name.strip().partition(":")
    family = family.strip().lower()
    if family not in ALGEBRA_BUILDERS:
        raise AlgebraError(
            f"unknown built-in algebra '{name}'. Options are {list(ALGEBRA_BUILDERS)}"
        )
    try:
        arguments = [int(p) for p in parameters.split(",") if p.strip()]
    except ValueError:
        raise AlgebraError(f"could not parse the parameters of '{name}'")
    builder = ALGEBRA_BUILDERS[family]
    try:
        signature(builder).bind(*arguments)
    except TypeError:
        raise AlgebraError(f"wrong number of parameters in '{name}'")
    return builder(*arguments)
