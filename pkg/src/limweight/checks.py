"""Check results and the small helpers every checker shares."""

from dataclasses import dataclass, field

from .exact_core import LimitDoesNotExist, TangentUndefined
from .matrix import Matrix


@dataclass
class CheckResult:
    name: str
    passed: bool
    anchor: str = ""
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    samples: int = 0
    error: str | None = None

    @property
    def status(self):
        if self.error is not None:
            return "error"
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def to_json(self):
        out = {"name": self.name, "status": self.status, "anchor": self.anchor, "samples": self.samples}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = _jsonable(self.details)
        if self.error is not None:
            out["error"] = self.error
        return out


def _jsonable(x):
    if isinstance(x, Matrix):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def witness(**items):
    """Render matrices (and tuples of them) in the matrix literal format."""
    return _jsonable(items)


def all_of(name, parts, anchor=""):
    """Combine sub-results; the first failure supplies the witness."""
    parts = list(parts)
    bad = next((p for p in parts if not p.passed), None)
    details = {"parts": {p.name: p.status for p in parts}}
    if bad is None:
        return CheckResult(name, True, anchor, details=details, samples=max((p.samples for p in parts), default=0))
    details["first_failure"] = bad.name
    return CheckResult(name, False, anchor, witness=bad.witness, details=details,
                       samples=bad.samples, error=bad.error)


def run_law(name, items, law, anchor=""):
    """Evaluate ``law(*item)`` -> (lhs, rhs) on each item; stop at the first mismatch.

    Limit and tangent failures are reported as ``error`` with the item as witness.
    """
    count = 0
    for item in items:
        count += 1
        try:
            lhs, rhs = law(*item)
        except (LimitDoesNotExist, TangentUndefined, ArithmeticError, ValueError) as exc:
            return CheckResult(name, False, anchor, witness=witness(inputs=list(item)),
                               samples=count, error=str(exc))
        if lhs != rhs:
            return CheckResult(name, False, anchor,
                               witness=witness(inputs=list(item), lhs=lhs, rhs=rhs), samples=count)
    return CheckResult(name, True, anchor, samples=count)
