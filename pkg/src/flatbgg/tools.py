"""This module contains general purpose tools"""

import time
import warnings
from fractions import Fraction

import numpy as np
from scipy.special import comb
from sympy import QQ

from .config import config

warnings.simplefilter("default")


def to_rational(value):
    """Return `value` as an exact rational (an element of sympy's QQ)

    Args:
        value (int, str, Fraction, or QQ element): The value. Strings are "p" or "p/q".
            numpy integers are accepted. Floats are refused, as they are not exact.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing to convert float {value!r} to an exact rational")
    if isinstance(value, np.integer):
        return QQ(int(value))
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def rational_to_string(value):
    """Return "p" or "p/q" for a rational, in lowest terms with positive q"""
    value = to_rational(value)
    numerator, denominator = QQ.numer(value), QQ.denom(value)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def numerator_denominator(value):
    """Return (p, q) as python ints for a rational p/q in lowest terms, q > 0"""
    value = to_rational(value)
    return int(QQ.numer(value)), int(QQ.denom(value))


def binomial(n, k):
    """Return the binomial coefficient C(n, k) as an exact int"""
    return int(comb(n, k, exact=True))


def catalan_number(m):
    """Return the m'th Catalan number C(2m, m) / (m + 1)"""
    return binomial(2 * m, m) // (m + 1)


def falling_factorial(n, k):
    """Return n (n - 1) ... (n - k + 1), which is zero for k > n"""
    result = 1
    for i in range(k):
        result *= n - i
    return result


def wedge_indices(first, second):
    """Return (sign, merged) for eps^first ^ eps^second of increasing multi-indices

    The sign is that of the permutation sorting the concatenation. If the indices
    share an element, the wedge product vanishes and (0, None) is returned.
    """
    if set(first) & set(second):
        return 0, None
    inversions = sum(1 for i in first for j in second if i > j)
    return (-1) ** inversions, tuple(sorted(first + second))


def interior_index(i, multi_index):
    """Return (sign, rest) for the contraction e_i _| eps^multi_index

    The sign is (-1)^p where p is the position of i in the increasing multi-index.
    """
    if i not in multi_index:
        return 0, None
    position = multi_index.index(i)
    return (-1) ** position, multi_index[:position] + multi_index[position + 1 :]


def say(message):
    """Print a progress line if config.verbose"""
    if config.verbose:
        print(f"flatbgg: {message}")


class Timer:
    """Context manager measuring the wall time of the code it wraps

    Use as:
        with Timer() as timer:
            ...
        timer.seconds
    """

    def __init__(self):
        self.t_start = None
        self.seconds = None

    def __enter__(self):
        self.t_start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.seconds = time.perf_counter() - self.t_start
        return False


def replace_index(multi_index, position, new):
    """Return (sign, merged) for replacing multi_index[position] by `new` in a wedge

    The result is re-sorted, and the sign is that of the sorting permutation. If
    `new` already occurs elsewhere in the multi-index, (0, None) is returned.
    """
    rest = multi_index[:position] + multi_index[position + 1 :]
    if new in rest:
        return 0, None
    # moving `new` from `position` to its sorted place passes the entries between
    passed = sum(1 for i in rest[:position] if i > new) + sum(
        1 for i in rest[position:] if i < new
    )
    return (-1) ** passed, tuple(sorted(rest + (new,)))
