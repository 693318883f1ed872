"""
The two separators inside a case: the slice cubic splits the disc-zero
nets, rank-one membership splits the three-general-lines nets.
"""

from check_base import Check, expect
from cubic_taxonomy import CubicType
from net_orbits import OrbitLabel, has_rank_one, slice_type


class SliceDichotomy(Check):
    name = "slice_dichotomy"
    description = "Slice of I_a is the whole plane, slice of I_b a triple line"
    order = 30

    def run(self, ctx):
        a = slice_type(ctx.nets[OrbitLabel.I_a])
        b = slice_type(ctx.nets[OrbitLabel.I_b])
        return [
            expect("slice/I_a", a is CubicType.Zero, a.value),
            expect("slice/I_b", b is CubicType.TripleLine, b.value),
        ]


class RankOneDichotomy(Check):
    name = "rank_one_dichotomy"
    description = "IV_a contains a rank-one matrix, IV_b does not"
    order = 31

    def run(self, ctx):
        a = has_rank_one(ctx.nets[OrbitLabel.IV_a])
        b = has_rank_one(ctx.nets[OrbitLabel.IV_b])
        return [
            expect("rank-one/IV_a", a, f"has rank one: {a}"),
            expect("rank-one/IV_b", not b, f"has rank one: {b}"),
        ]
