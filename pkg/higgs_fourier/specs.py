"""
JSON input formats for curves and Higgs bundles, and the builtin presets.

curve:    {"p": 101, "f": [0, -1, 0, 0, 0, 1]}          coefficients lowest first
place:    "inf" or [x, y]
divisor:  [[place, multiplicity], ...]
function: {"a": [...], "b": [...], "den": [...]}         (a + y*b) / den
bundle:   {"summands": [divisor, ...], "field": [[function, ...], ...]}
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from .algebra import (
    INFINITY,
    CurveFunction,
    Divisor,
    HyperellipticCurve,
    Place,
    Polynomial,
    RationalFunction,
    new_curve,
)
from .config import OutputFormat, SignConvention
from .errors import ConfigError, HiggsFourierError
from .higgs import HiggsBundle, companion_section, hitchin_section, new_higgs_bundle, trivial_higgs_bundle

logger = logging.getLogger(__name__)

# y^2 = x^5 - x; split over F_p when p = 1 mod 4.
DEFAULT_F = [0, -1, 0, 0, 0, 1]
SMALL_PRIME = 11

CURVE_PRESETS = ("default", "small")
BUNDLE_PRESETS = ("hitchin", "companion3", "trivial")

PlaceSpec = Union[Literal["inf"], tuple[int, int]]
DivisorSpec = list[tuple[PlaceSpec, int]]


class CurveSpec(BaseModel):
    p: int
    f: list[int]

    def build(self) -> HyperellipticCurve:
        return new_curve(self.p, self.f)


class FunctionSpec(BaseModel):
    a: list[int] = Field(default_factory=list)
    b: list[int] = Field(default_factory=list)
    den: list[int] = Field(default_factory=lambda: [1])

    def build(self, c: HyperellipticCurve) -> CurveFunction:
        den = Polynomial(self.den, c.p)
        if den.is_zero():
            raise ConfigError("function with zero denominator")
        return CurveFunction(
            RationalFunction(Polynomial(self.a, c.p), den),
            RationalFunction(Polynomial(self.b, c.p), den),
            c.f,
        )


class BundleSpec(BaseModel):
    summands: list[DivisorSpec]
    field: list[list[FunctionSpec]]

    def build(self, c: HyperellipticCurve) -> HiggsBundle:
        summands = [build_divisor(c, d) for d in self.summands]
        entries = [[fn.build(c) for fn in row] for row in self.field]
        return new_higgs_bundle(c, summands, entries)


class RunConfig(BaseModel):
    """Everything a command needs; identical configs give identical reports."""
    curve: str = "default"
    bundle: str = "hitchin"
    q: list[int] = Field(default_factory=lambda: [0, 0, 1])
    prime: int = 101
    samples: int = Field(25, ge=0)
    seed: int = 0
    format: OutputFormat = "text"
    sign_convention: SignConvention = "plus"
    degree_bound: int = Field(2, ge=0)
    perturb: int = 0
    genus: Optional[int] = Field(None, ge=2)
    rank: int = Field(2, ge=1)
    probe_points: int = Field(2, ge=0)


def build_place(c: HyperellipticCurve, spec: PlaceSpec) -> Place:
    if spec == "inf":
        return INFINITY
    x0, y0 = spec
    pl = Place.point(x0 % c.p, y0 % c.p)
    if not c.is_on_curve(pl):
        raise ConfigError(f"{spec} is not a point of {c!r}")
    return pl


def build_divisor(c: HyperellipticCurve, spec: DivisorSpec) -> Divisor:
    return Divisor((build_place(c, pl), n) for pl, n in spec)


def _read_json(path: Union[str, Path]) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read {path}: {e}")


def load_curve(name: str, prime: int) -> HyperellipticCurve:
    """A preset name or the path of a curve JSON file."""
    try:
        if name == "default":
            return new_curve(prime, DEFAULT_F)
        if name == "small":
            return new_curve(SMALL_PRIME, DEFAULT_F)
        return CurveSpec.model_validate(_read_json(name)).build()
    except ValidationError as e:
        raise ConfigError(f"Malformed curve description {name}: {e}")
    except ConfigError:
        raise
    except HiggsFourierError as e:
        raise ConfigError(f"Invalid curve {name}: {e.message}")


def q_function(c: HyperellipticCurve, q: list[int]) -> CurveFunction:
    return c.function(Polynomial(q, c.p))


def load_bundle(name: str, c: HyperellipticCurve, q: list[int]) -> HiggsBundle:
    """A preset family or the path of a bundle JSON file."""
    try:
        if name == "hitchin":
            return hitchin_section(c, q_function(c, q))
        if name == "companion3":
            zero = c.constant(0)
            return companion_section(c, (zero, q_function(c, q), zero))
        if name == "trivial":
            return trivial_higgs_bundle(c)
        return BundleSpec.model_validate(_read_json(name)).build(c)
    except ValidationError as e:
        raise ConfigError(f"Malformed bundle description {name}: {e}")
    except ConfigError:
        raise
    except HiggsFourierError as e:
        raise ConfigError(f"Invalid bundle {name}: {e.message}")
