"""
Nonsingular nets - disc and slice share their j-invariant, and the
singular-point search agrees with the invariant test on both cubics.
"""

from check_base import Check, expect
from cubic_taxonomy import CubicType, aronhold, classify_cubic
from forms import singular_points
from net_orbits import net_disc, net_slice, random_net


def _paths_agree(F, nonsingular):
    if (classify_cubic(F) is CubicType.Nonsingular) != nonsingular:
        return False
    return not (nonsingular and singular_points(F))


class NonsingularJ(Check):
    name = "nonsingular_j"
    description = "j(disc) = j(slice) on random nonsingular nets"
    order = 80

    def run(self, ctx):
        checked, seen, j_mismatch, path_mismatch = 0, 0, [], []
        t = 0
        while checked < ctx.trials and t < 20 * ctx.trials:
            W = random_net([ctx.seed, 10 ** 6 + t], ctx.p)
            t += 1
            seen += 1
            disc, sl = net_disc(W), net_slice(W)
            disc_inv, slice_inv = aronhold(disc), aronhold(sl)
            disc_ns, slice_ns = disc_inv.delta != 0, slice_inv.delta != 0
            # disc and slice share S and T, so they are singular together
            if disc_ns != slice_ns or not _paths_agree(disc, disc_ns) or not _paths_agree(sl, slice_ns):
                path_mismatch.append(repr(W))
            if not (disc_ns and slice_ns):
                continue
            checked += 1
            if disc_inv.j != slice_inv.j:
                j_mismatch.append(repr(W))
        return [
            expect("nonsingular/j", checked > 0 and not j_mismatch,
                   f"{checked} nets" + (f"; j differs for {j_mismatch[:2]}" if j_mismatch else "")),
            expect("nonsingular/paths", not path_mismatch,
                   f"{seen} nets, {seen - checked} singular"
                   + (f"; disagree on {path_mismatch[:2]}" if path_mismatch else "")),
        ]
