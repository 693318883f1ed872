"""
Discriminant types - the determinant cubic of each representative has the
geometric type of its case.
"""

from check_base import Check, expect
from net_orbits import NET_CASE_TYPES, disc_type


class DiscTypes(Check):
    name = "disc_types"
    description = "Discriminant cubic type of every catalogue net"
    order = 20

    def run(self, ctx):
        results = []
        for label, W in ctx.nets.items():
            got = disc_type(W)
            expected = NET_CASE_TYPES[label]
            results.append(expect(f"disc-type/{label.value}", got is expected,
                                  f"{got.value} (expected {expected.value})"))
        return results
