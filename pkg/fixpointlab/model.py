import cmath
import json
import math
import numbers
from typing import Any, Callable

from pydantic import BaseModel


class ComplexValue(complex):
    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema: dict[str, Any]):
        field_schema.update(
            type="array",
            items={"type": "number"},
            minItems=2,
            maxItems=2,
        )

    @classmethod
    def validate(cls, value: Any) -> complex:
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ValueError(
                    f"complex value must be a [re, im] pair, got {value!r}"
                )
            re, im = value
            if not all(isinstance(v, numbers.Real) for v in (re, im)):
                raise TypeError(
                    f"complex value parts must be real numbers, got {value!r}"
                )
            value = complex(float(re), float(im))
        elif isinstance(value, numbers.Number):
            value = complex(value)
        else:
            raise TypeError(f"not a complex value: {value!r}")

        if not cmath.isfinite(value):
            raise ValueError(f"complex value must be finite, got {value!r}")

        return value


def encode_complex(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def format_float(value: float) -> str:
    # Seventeen significant digits round-trip every double
    if not math.isfinite(value):
        return json.dumps(value)
    return f"{value:.16e}"


def _encode(value: Any, default: Callable[[Any], Any]) -> str:
    if value is None or isinstance(value, (bool, str)):
        return json.dumps(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, int):
        return json.dumps(value)
    if isinstance(value, dict):
        items = (
            f"{json.dumps(str(key))}: {_encode(item, default)}"
            for key, item in value.items()
        )
        return "{" + ", ".join(items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_encode(item, default) for item in value) + "]"
    return _encode(default(value), default)


def dumps(
    value: Any,
    *,
    default: Callable[[Any], Any],
    **kwargs: Any,
) -> str:
    return _encode(value, default)


class Model(BaseModel):
    class Config:
        json_encoders = {
            complex: encode_complex,
        }
        json_dumps = dumps
        allow_population_by_field_name = True

    def dump(self) -> str:
        return self.json(by_alias=True)
