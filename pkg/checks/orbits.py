"""
Orbit ground truth over F_5 (oracle runs only) - representative orbits are
pairwise disjoint and labels are constant along them.
"""

from check_base import WARN, Check, CheckResult, expect, guarded
from oracle import check_orbit_constancy, overlapping_orbits


class OrbitDisjointness(Check):
    name = "orbit_disjointness"
    description = "Representative orbits are pairwise disjoint over F_5"
    needs_oracle = True
    order = 90

    def run(self, ctx):
        if ctx.p != 5:
            return [CheckResult("orbits/disjoint", WARN, "orbit checks run over F_5 only")]
        results = []
        for kind, reps in (('net', ctx.nets), ('pencil', ctx.pencils)):
            overlaps = overlapping_orbits({label.value: W for label, W in reps.items()})
            results.append(expect(f"orbits/{kind}-disjoint", not overlaps,
                                  f"{len(reps)} orbits" + (f"; overlapping {overlaps}" if overlaps else "")))
        return results


class OrbitConstancy(Check):
    name = "orbit_constancy"
    description = "Classifier labels are constant along representative orbits"
    needs_oracle = True
    order = 91

    def run(self, ctx):
        if ctx.p != 5:
            return [CheckResult("orbits/constancy", WARN, "orbit checks run over F_5 only")]
        members = ctx.orbit_members or None
        results = []
        for kind, reps in (('net', ctx.nets), ('pencil', ctx.pencils)):
            for label, W in reps.items():
                check_id = f"orbits/{kind}-constancy/{label.value}"
                results.append(guarded(check_id, lambda W=W, check_id=check_id, label=label: self._one(
                    check_id, W, label, members, ctx.seed)))
        return results

    def _one(self, check_id, W, label, members, seed):
        got, checked = check_orbit_constancy(W, members=members, seed=seed)
        return expect(check_id, got == label.value, f"{checked} orbit members classify as {got}")
