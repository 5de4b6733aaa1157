import json
import math
from pathlib import Path
from typing import Any, Type, TypeVar

import numpy as np
import pandas as pd
import typer
from pydantic import BaseModel

from src.subdivision.entity import SampledFunction

Model = TypeVar("Model", bound=BaseModel)

FLOAT_FORMAT = "%.17g"


def _encode(value: Any) -> str:
    """JSON text with sorted keys and every float in 17 significant digits."""
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return "null"
        text = FLOAT_FORMAT % value
        # keep floats recognisable as floats
        return text if any(ch in text for ch in ".e") else text + ".0"
    if isinstance(value, dict):
        items = sorted(value.items())
        return "{" + ", ".join(f"{json.dumps(str(key))}: {_encode(item)}" for key, item in items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_encode(item) for item in value) + "]"
    return json.dumps(value, ensure_ascii=False)


def to_json(data: BaseModel | dict | list) -> str:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json", by_alias=True)
    return _encode(data)


def dump_json(data: BaseModel | dict | list, path: Path | None = None) -> str:
    """
    **Description**: Serializes a report deterministically and writes it to `path`, or to stdout.

    **Output**:
    - *str*: the JSON text.
    """
    text = to_json(data)
    if path is None:
        typer.echo(text)
    else:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def read_model(path: Path, model: Type[Model]) -> Model:
    """Parses a JSON file into `model`; decode and validation errors propagate."""
    return model.model_validate_json(Path(path).read_text(encoding="utf-8"))


def write_csv(samples: SampledFunction | pd.DataFrame, path: Path | None = None) -> None:
    """Writes `t,re,im` rows with '.' decimals and 17 significant digits, to `path` or stdout."""
    frame = samples.to_frame() if isinstance(samples, SampledFunction) else samples
    if path is None:
        typer.echo(frame.to_csv(index=False, float_format=FLOAT_FORMAT), nl=False)
    else:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def read_samples(path: Path) -> SampledFunction:
    """
    **Description**: Reads `t,re,im` rows on a single dyadic grid into SampledFunction.

    **Exceptions**:
    - `ValueError`: If columns are missing or t is not a contiguous dyadic grid.
    """
    frame = pd.read_csv(path)
    missing = {"t", "re"} - set(frame.columns)
    if missing:
        raise ValueError(f"Sample file {path} lacks columns {sorted(missing)}")
    t = frame["t"].to_numpy(dtype=float)
    values = frame["re"].to_numpy(dtype=float) + 1j * (frame["im"].to_numpy(dtype=float) if "im" in frame else 0.0)
    if t.size == 0:
        raise ValueError(f"Sample file {path} is empty")
    step = t[1] - t[0] if t.size > 1 else 1.0
    level = round(-math.log2(step)) if step > 0 else -1
    if level < 0 or not abs(step - 2.0 ** -level) < 1e-12 or not abs(t[0] * 2 ** level - round(t[0] * 2 ** level)) < 1e-9:
        raise ValueError(f"Samples in {path} are not on a dyadic grid 2^-r Z with r >= 0")
    if t.size > 1 and not np.max(np.abs(np.diff(t) - step)) < 1e-12:
        raise ValueError(f"Samples in {path} are not equally spaced")
    return SampledFunction(level, round(t[0] * 2 ** level), values)


def parse_complex(text: str) -> complex:
    """'RE,IM' or 'RE' to a complex number; raises typer.BadParameter otherwise."""
    parts = [part.strip() for part in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise typer.BadParameter(f"expected RE,IM, got {text!r}")


def parse_interval(text: str) -> tuple[float, float]:
    """'LO,HI' with LO < HI."""
    parts = text.split(",")
    try:
        lo, hi = (float(part) for part in parts)
    except ValueError:
        raise typer.BadParameter(f"expected LO,HI, got {text!r}")
    if not lo < hi:
        raise typer.BadParameter(f"interval {text!r} is empty")
    return lo, hi
