"""
Pencil catalogue - eight representatives, eight distinct labels; a disc
root profile that disagrees with the printed heading is reported as WARN.
"""

from check_base import WARN, Check, CheckResult, expect
from pencil_orbits import PENCIL_HEADINGS, classify_pencil, heading_discrepancies, pencil_invariants


class PencilSeparation(Check):
    name = "pencil_separation"
    description = "Pencil representatives separate and match their headings"
    order = 40

    def run(self, ctx):
        results = []
        seen = set()
        for label, U in ctx.pencils.items():
            got = classify_pencil(U)
            seen.add(got)
            results.append(expect(f"pencil-label/{label.value}", got is label,
                                  f"{got.value}, invariants {pencil_invariants(U).as_tuple()}"))
        results.append(expect("pencil-label/distinct", len(seen) == len(ctx.pencils),
                              f"{len(seen)} distinct labels"))

        wrong = {label: (heading, profile) for label, heading, profile in heading_discrepancies(ctx.p)}
        for label in PENCIL_HEADINGS:
            if label in wrong:
                heading, profile = wrong[label]
                results.append(CheckResult(f"pencil-heading/{label.value}", WARN,
                                           f"listed under {heading}, disc has root profile {profile}"))
            else:
                results.append(expect(f"pencil-heading/{label.value}", True, str(PENCIL_HEADINGS[label])))
        return results
