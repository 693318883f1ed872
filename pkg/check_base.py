"""
Verification Check Base Class + Shared Helpers

All checks inherit from Check and implement run().
Shared infrastructure: result records, the run context, status folding.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

from config import SAMPLE_SEED
from errors import CharacteristicObstruction, ConicNetsError

PASS = 'PASS'
WARN = 'WARN'
FAIL = 'FAIL'

_SEVERITY = {PASS: 0, WARN: 1, FAIL: 2}


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    detail: str = ''

    def to_dict(self):
        return {'id': self.id, 'status': self.status, 'detail': self.detail}


@dataclass
class CheckContext:
    """What a verification run is allowed to use."""
    p: int
    oracle: bool = False
    trials: int = 100
    seed: int = SAMPLE_SEED
    orbit_members: int = 0     # 0 = every orbit member

    @cached_property
    def nets(self):
        from net_orbits import representatives
        return representatives(self.p)

    @cached_property
    def pencils(self):
        from pencil_orbits import pencil_representatives
        return pencil_representatives(self.p)


class Check(ABC):
    """
    Base class for all verification checks.

    Subclasses MUST set:
        name, description

    Subclasses MUST implement:
        run(ctx) -> list of CheckResult
    """

    # --- Required (subclass MUST override) ---
    name: str = NotImplemented
    description: str = NotImplemented

    # --- Optional with defaults ---
    enabled: bool = True
    needs_oracle: bool = False
    order: int = 100            # position in the report

    @abstractmethod
    def run(self, ctx):
        """Return a list of CheckResult records."""
        ...

    def execute(self, ctx):
        """run() with escaping domain errors turned into a single record."""
        try:
            return self.run(ctx)
        except CharacteristicObstruction as e:
            return [CheckResult(self.name, WARN, str(e))]
        except ConicNetsError as e:
            return [CheckResult(self.name, FAIL, f"{type(e).__name__}: {e}")]


# =============================================================================
# SHARED HELPERS
# =============================================================================

def expect(check_id, ok, detail=''):
    return CheckResult(check_id, PASS if ok else FAIL, detail)


def guarded(check_id, fn):
    """Call fn() -> CheckResult, folding domain errors into the record."""
    try:
        return fn()
    except CharacteristicObstruction as e:
        return CheckResult(check_id, WARN, str(e))
    except ConicNetsError as e:
        return CheckResult(check_id, FAIL, f"{type(e).__name__}: {e}")


def worst_status(results):
    return max((r.status for r in results), key=_SEVERITY.__getitem__, default=PASS)


def tally(results):
    counts = {PASS: 0, WARN: 0, FAIL: 0}
    for r in results:
        counts[r.status] += 1
    return counts
