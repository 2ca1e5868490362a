"""Decision results and the per-check trace records."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence, Union

from .algebra import Scalar


def _fmt(x) -> str:
    return "None" if x is None else str(x)


@dataclass(frozen=True)
class Witness:
    point: tuple[Scalar, ...]
    value: Scalar

    def as_dict(self) -> dict:
        return {"point": [str(x) for x in self.point], "value": str(self.value)}

    def line(self) -> str:
        return f"witness: ({', '.join(map(str, self.point))}) value: {self.value}"


@dataclass(frozen=True)
class OnesCheck:
    """Value of ``f(1_k, 0_{n-k})``."""

    k: int
    value: Scalar
    passed: bool

    def line(self) -> str:
        return f"k={self.k} value={self.value}"


@dataclass(frozen=True)
class OneMinusOneCheck:
    """Value of ``f(1, -1, 0_{n-2})``; nonpositive settles the orthant question."""

    value: Scalar
    settles: bool

    @property
    def passed(self) -> bool:
        return True

    def line(self) -> str:
        return f"f(1,-1,0)={self.value} branch={'criterion' if self.settles else 'continue'}"


@dataclass(frozen=True)
class PairCheck:
    r: int
    s: int
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    Delta: Scalar
    P: Optional[Scalar]
    Q: Optional[Scalar]
    R: Optional[Scalar]
    branch: str
    passed: bool

    def line(self) -> str:
        out = (
            f"(r,s)=({self.r},{self.s}) alpha={self.alpha} beta={self.beta} "
            f"gamma={self.gamma} Delta={self.Delta}"
        )
        if self.P is not None:
            out += f" P={self.P} Q={self.Q} R={self.R}"
        return out + f" branch={self.branch}"


@dataclass(frozen=True)
class BlockCheck:
    r: int
    A: Scalar
    B: Scalar
    C: Scalar
    D: Scalar
    E: Scalar
    Delta: Scalar
    G: Scalar
    H: Scalar
    K: Scalar
    branch: str
    passed: bool

    def line(self) -> str:
        return (
            f"r={self.r} Delta={self.Delta} G={self.G} H={self.H} K={self.K} "
            f"branch={self.branch}"
        )


TraceRecord = Union[OnesCheck, OneMinusOneCheck, PairCheck, BlockCheck]


def record_dict(rec: TraceRecord) -> dict:
    """JSON-ready dict: rationals as strings, plus the record kind."""
    out = {"check": type(rec).__name__}
    for key, val in asdict(rec).items():
        out[key] = val if isinstance(val, (bool, str)) or val is None else _fmt(val)
    for key in ("k", "r", "s"):
        if key in out:
            out[key] = int(out[key])
    return out


@dataclass
class Verdict:
    """Outcome of a decider.

    ``failing_stage`` names the first failed check (``"ones-check k"``,
    ``"pair (r,s)"``, ``"block r"``); on a ``False`` decision ``witness`` is an
    exact point where the form is negative.
    """

    decision: bool
    failing_stage: Optional[str] = None
    witness: Optional[Witness] = None
    trace: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.decision

    def lines(self) -> list[str]:
        return [rec.line() for rec in self.trace]


OrthantVerdict = Verdict
RealVerdict = Verdict


def first_failure(records: Sequence[TraceRecord]) -> Optional[int]:
    for i, rec in enumerate(records):
        if not rec.passed:
            return i
    return None
