"""The catalog of named 6-variable reference functions.

``fun_1`` .. ``fun_18`` are the class representatives the claim registry
talks about; ``top_fun_3`` .. ``top_fun_7`` add the degree-6 monomial
x1x2x3x4x5x6 on top of fun_3 .. fun_7 (``top_fun_3`` is the same
function as ``fun_8``, which is defined that way).  ``bent_example`` is
the bent function quoted alongside the histogram observations.

The ANF strings are frozen verbatim; tests compare them token-for-token
against an independent literal table.
"""

from __future__ import annotations

from functools import lru_cache

from .core import AnfPolynomial, TruthTable, truth_table_from_anf

_TOP = "x1x2x3x4x5x6"

_FUN_ANF: dict[str, str] = {
    "fun_1": "x1x2x3+x1x4x5+x2x4x6+x3x5x6+x4x5x6",
    "fun_3": "x1x2x6+x1x3x5+x2x3x4",
    "fun_4": "x1x2x3x4+x1x2x6+x1x4x5+x2x3x5",
    "fun_5": "x1x2x3x4+x1x3x5+x1x4x6+x2x3x5+x2x3x6+x2x4x5",
    "fun_6": "x1x2x3x6+x1x2x4x5+x1x3x5+x1x4x5+x1x4x6+x2x3x4",
    "fun_7": "x1x2x3x4x5+x1x3x5+x1x4x6+x2x3x5+x2x3x6+x2x4x5",
    "fun_9": "x1x2x3x4+x1x5x6+x2x3x6+x2x4x5",
    "fun_10": "x1x2x3x6+x1x2x4x5+x1x4x5+x1x5x6+x2x3x5",
    "fun_11": "x1x2x3x6+x1x2x4x5+x1x5x6+x2x4x6+x3x4x5",
    "fun_12": "x1x2x5x6+x1x3x4x6+x2x3x4x5+x1x2x4+x1x3x4+x1x3x5+x2x3x6",
    "fun_13": "x1x2x5x6+x1x3x4x6+x2x3x4x5+x1x3x4+x1x4x5+x2x3x6",
    "fun_14": "x1x2x3x4x5+x1x2x6+x1x3x5+x2x3x4",
    "fun_15": "x1x2x3x4x5+x1x2x5+x1x4x6+x2x3x6",
    "fun_16": "x1x2x3x4x5+x1x2x3x6+x1x2x6+x1x3x5+x2x3x4",
    "fun_17": "x1x2x3x4x5+x1x2x5x6+x1x3x4x6+x1x2x4+x1x3x5+x3x4x6",
    "fun_18": "x1x2x3x4x5+x1x2x5x6+x1x3x4x6+x1x2x4+x1x3x4+x1x3x5+x2x5x6+x3x4x6",
    "bent_example": "x1x3x4+x1x2x5+x1x6+x2x4+x3x4+x3x5",
}
_FUN_ANF["fun_2"] = _TOP + "+" + _FUN_ANF["fun_1"]
_FUN_ANF["fun_8"] = _TOP + "+" + _FUN_ANF["fun_3"]
for _i in range(3, 8):
    _FUN_ANF[f"top_fun_{_i}"] = _TOP + "+" + _FUN_ANF[f"fun_{_i}"]

CATALOG_N = 6


def catalog_names() -> tuple[str, ...]:
    return tuple(_FUN_ANF)


def catalog_anf_string(name: str) -> str:
    try:
        return _FUN_ANF[name]
    except KeyError:
        raise KeyError(f"unknown catalog name {name!r}") from None


def catalog_anf(name: str) -> AnfPolynomial:
    return AnfPolynomial.from_string(catalog_anf_string(name), n=CATALOG_N)


@lru_cache(maxsize=None)
def catalog_function(name: str) -> TruthTable:
    return truth_table_from_anf(catalog_anf(name))
