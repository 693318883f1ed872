"""
Explicit reductions - each recorded source net and moving matrix lands on
(or in the orbit of) its representative. A move that only reaches
the orbit is reported as WARN. With the oracle enabled over F_5
the source is also checked to share the representative's orbit.
"""

from check_base import WARN, Check, CheckResult, expect, guarded
from net_orbits import classify_net, reductions


class ExplicitReductions(Check):
    name = "reductions"
    description = "Moving matrices carry their source nets to the representatives"
    order = 70

    def run(self, ctx):
        found, skipped = reductions(ctx.p)
        results = [guarded(r.name, lambda r=r: self._one(ctx, r)) for r in found]
        results.extend(CheckResult(name, WARN, reason) for name, reason in skipped)
        return results

    def _one(self, ctx, reduction):
        target = ctx.nets[reduction.target]
        moved = reduction.result()
        if reduction.exact:
            ok = moved == target
            detail = f"moved net {'equals' if ok else 'differs from'} the {reduction.target.value} representative"
        else:
            got = classify_net(moved)
            ok = got is reduction.target
            detail = f"moved net classifies as {got.value}"
            if ok:
                detail += f" but differs from the {reduction.target.value} representative"
        if ctx.oracle and ctx.p == 5:
            from oracle import orbits_equal
            same = orbits_equal(target, reduction.source)
            ok = ok and same
            detail += f"; source in the representative's F_5-orbit: {same}"
        if ok and not reduction.exact:
            return CheckResult(reduction.name, WARN, detail)
        return expect(reduction.name, ok, detail)
