"""Textual descriptors for representing functions.

Grammar (whitespace is ignored)::

    F := "one" | "id" | "log"
       | ("arith" | "harmonic" | "geom") ":" NUM
       | "power:r=" NUM ",a=" NUM          (keys in either order)
       | ("ph" | "stolarsky" | "alg") ":" NUM
       | ("transpose" | "adjoint" | "dual") "(" F ")"

``parse_function(f.descriptor())`` reproduces ``f``.
"""

from __future__ import annotations

import math
import re

from .errors import DescriptorError
from .functions import (
    ConstantOne,
    Identity,
    Logarithmic,
    PetzHasegawa,
    PowerDifference,
    PowerMean,
    RepFunction,
    Stolarsky,
    WeightedArithmetic,
    WeightedGeometric,
    WeightedHarmonic,
)

_NULLARY = {
    "one": ConstantOne,
    "id": Identity,
    "identity": Identity,
    "log": Logarithmic,
}
_UNARY = {
    "arith": WeightedArithmetic,
    "arithmetic": WeightedArithmetic,
    "harmonic": WeightedHarmonic,
    "geom": WeightedGeometric,
    "geometric": WeightedGeometric,
    "ph": PetzHasegawa,
    "stolarsky": Stolarsky,
    "alg": PowerDifference,
}
_TRANSFORMS = ("transpose", "adjoint", "dual")
_NAME = re.compile(r"[a-z]+")


def _number(token: str, text: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise DescriptorError(f"expected a number, got {token!r} in {text!r}") from None
    if not math.isfinite(value):
        raise DescriptorError(f"parameter must be finite, got {token!r} in {text!r}")
    return value


def _power_params(body: str, text: str) -> tuple[float, float]:
    params: dict[str, float] = {}
    for part in body.split(","):
        if "=" not in part:
            raise DescriptorError(f"power parameters are 'r=R,a=ALPHA', got {part!r} in {text!r}")
        key, val = part.split("=", 1)
        if key not in ("r", "a") or key in params:
            raise DescriptorError(f"unexpected power parameter {key!r} in {text!r}")
        params[key] = _number(val, text)
    if set(params) != {"r", "a"}:
        raise DescriptorError(f"power needs both r and a, got {text!r}")
    return params["r"], params["a"]


def parse_function(text: str) -> RepFunction:
    """Build a :class:`RepFunction` from its descriptor.

    Raises
    ------
    DescriptorError
        Unknown family name or malformed syntax (the message names the token).
    ParamOutOfDomain
        Well-formed descriptor whose parameter lies outside the family domain.
    """
    if not isinstance(text, str):
        raise DescriptorError(f"descriptor must be a string, got {type(text).__name__}")
    src = "".join(text.split()).lower()
    if not src:
        raise DescriptorError("empty function descriptor")
    return _parse(src, text)


def _parse(src: str, text: str) -> RepFunction:
    for name in _TRANSFORMS:
        if src.startswith(name + "("):
            if not src.endswith(")"):
                raise DescriptorError(f"unbalanced parenthesis in {text!r}")
            inner = _parse(src[len(name) + 1:-1], text)
            return getattr(inner, name)()
    if src in _NULLARY:
        return _NULLARY[src]()
    head, sep, body = src.partition(":")
    if not sep:
        m = _NAME.match(src)
        token = m.group(0) if m else src
        if token in _UNARY or token == "power":
            raise DescriptorError(f"{token!r} needs a parameter, e.g. {token}:0.5")
        raise DescriptorError(f"unknown function {token!r} in {text!r}")
    if not body:
        raise DescriptorError(f"missing parameter after {head!r}: in {text!r}")
    if head == "power":
        r, a = _power_params(body, text)
        return PowerMean(r, a)
    if head in _UNARY:
        return _UNARY[head](_number(body, text))
    raise DescriptorError(f"unknown function {head!r} in {text!r}")
