"""A small, domain-typed pipeline language over the morphology operators.

Grammar::

    pipeline := step (';' step)*
    step     := name [':' arg]

Every operator consumes and produces one of three domains. A pipeline is
accepted only if each step consumes what the previous one produced.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from . import composed as C
from . import correspondence as K
from . import filters as F
from .hypergraph import EdgeSet, SubHypergraph, VertexSet

__all__ = ["PipelineError", "PipelineStep", "Pipeline", "OPERATORS", "parse_pipeline", "run_pipeline", "domain_of"]

VERTEX, EDGE, HG = "vertex-set", "edge-set", "subhypergraph"


class PipelineError(ValueError):
    """Bad pipeline text or input; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        super().__init__(message if position is None else f"at position {position}: {message}")


@dataclass(frozen=True)
class _Op:
    consumes: str
    produces: str
    arg: str  # "none", "iter" (optional count), "order" (1 or 1/2), "lambda"
    fn: Callable


_OPEN_CLOSE = {
    ("v-open", "1"): F.open1_v,
    ("v-open", "1/2"): F.open_half_v,
    ("v-close", "1"): F.close1_v,
    ("v-close", "1/2"): F.close_half_v,
    ("e-open", "1"): F.open1_e,
    ("e-open", "1/2"): F.open_half_e,
    ("e-close", "1"): F.close1_e,
    ("e-close", "1/2"): F.close_half_e,
    ("hg-open", "1"): F.hg_open_1,
    ("hg-open", "1/2"): F.hg_open_half,
    ("hg-close", "1"): F.hg_close_1,
    ("hg-close", "1/2"): F.hg_close_half,
}

OPERATORS: dict[str, _Op] = {
    "vdelta": _Op(EDGE, VERTEX, "none", K.vertex_dilate_from_edges),
    "veps": _Op(EDGE, VERTEX, "none", K.vertex_erode_from_edges),
    "edelta": _Op(VERTEX, EDGE, "none", K.edge_dilate_from_vertices),
    "eeps": _Op(VERTEX, EDGE, "none", K.edge_erode_from_vertices),
    "vertex-dilate": _Op(VERTEX, VERTEX, "iter", C.vertex_dilate),
    "vertex-erode": _Op(VERTEX, VERTEX, "iter", C.vertex_erode),
    "edge-dilate": _Op(EDGE, EDGE, "iter", C.edge_dilate),
    "edge-erode": _Op(EDGE, EDGE, "iter", C.edge_erode),
    "hg-dilate": _Op(HG, HG, "iter", C.hg_dilate),
    "hg-erode": _Op(HG, HG, "iter", C.hg_erode),
    "v-open": _Op(VERTEX, VERTEX, "order", None),
    "v-close": _Op(VERTEX, VERTEX, "order", None),
    "e-open": _Op(EDGE, EDGE, "order", None),
    "e-close": _Op(EDGE, EDGE, "order", None),
    "hg-open": _Op(HG, HG, "order", None),
    "hg-close": _Op(HG, HG, "order", None),
    "hg-granule-open": _Op(HG, HG, "lambda", F.granule_open),
    "hg-granule-close": _Op(HG, HG, "lambda", F.granule_close),
    "hg-asf": _Op(HG, HG, "lambda", F.asf),
}


@dataclass(frozen=True)
class PipelineStep:
    name: str
    arg: str | None
    consumes: str
    produces: str
    position: int
    apply: Callable

    @property
    def text(self) -> str:
        return self.name if self.arg is None else f"{self.name}:{self.arg}"


@dataclass(frozen=True)
class Pipeline:
    steps: tuple[PipelineStep, ...]

    @property
    def consumes(self) -> str:
        return self.steps[0].consumes

    @property
    def produces(self) -> str:
        return self.steps[-1].produces

    def __str__(self) -> str:
        return "; ".join(step.text for step in self.steps)


_INT = re.compile(r"\d+")
_HALVES = re.compile(r"(\d+)/2")


def _bind(name: str, arg: str | None, position: int) -> Callable:
    op = OPERATORS[name]
    if op.arg == "none":
        if arg is not None:
            raise PipelineError(f"{name} takes no argument", position)
        return op.fn
    if op.arg == "iter":
        if arg is None:
            return op.fn
        if not _INT.fullmatch(arg):
            raise PipelineError(f"{name} takes a non-negative iteration count, got {arg!r}", position)
        return C.iterate(op.fn, int(arg))
    if op.arg == "order":
        if arg not in ("1", "1/2"):
            raise PipelineError(f"{name} needs size 1 or 1/2, got {arg!r}", position)
        return _OPEN_CLOSE[(name, arg)]
    # lambda: "3" and "3/2" both mean three half steps
    if arg is None:
        raise PipelineError(f"{name} needs a size argument", position)
    match = _INT.fullmatch(arg) or _HALVES.fullmatch(arg)
    if match is None:
        raise PipelineError(f"malformed size {arg!r} for {name}", position)
    lam = int(match.group(1) if match.re is _HALVES else match.group(0))
    fn = op.fn
    return lambda x: fn(x, lam)


def parse_pipeline(text: str) -> Pipeline:
    steps: list[PipelineStep] = []
    offset = 0
    for chunk in text.split(";"):
        stripped = chunk.strip()
        position = offset + (len(chunk) - len(chunk.lstrip()))
        offset += len(chunk) + 1
        if not stripped:
            raise PipelineError("empty step", position)
        name, sep, arg = stripped.partition(":")
        name = name.strip()
        arg = arg.strip() if sep else None
        if name not in OPERATORS:
            raise PipelineError(f"unknown operator {name!r}", position)
        op = OPERATORS[name]
        if steps and steps[-1].produces != op.consumes:
            raise PipelineError(
                f"domain mismatch: {name} expects {op.consumes}, found {steps[-1].produces}", position
            )
        steps.append(PipelineStep(name, arg, op.consumes, op.produces, position, _bind(name, arg, position)))
    return Pipeline(tuple(steps))


def domain_of(x: object) -> str:
    if isinstance(x, VertexSet):
        return VERTEX
    if isinstance(x, EdgeSet):
        return EDGE
    if isinstance(x, SubHypergraph):
        return HG
    raise TypeError(f"not a pipeline value: {type(x).__name__}")


def _describe(x) -> str:
    if isinstance(x, SubHypergraph):
        return f"|V|={len(x.vset)} |E|={len(x.eset)}"
    return f"|X|={len(x)}"


def run_pipeline(pipeline: Pipeline, x: VertexSet | EdgeSet | SubHypergraph) -> tuple[object, list[str]]:
    """Apply every step in order; returns the result and a per-step trace."""
    found = domain_of(x)
    if found != pipeline.consumes:
        raise PipelineError(f"pipeline expects {pipeline.consumes}, input is {found}")
    trace = [f"0 input {found} {_describe(x)}"]
    for k, step in enumerate(pipeline.steps, start=1):
        x = step.apply(x)
        trace.append(f"{k} {step.text} {step.produces} {_describe(x)}")
    return x, trace
