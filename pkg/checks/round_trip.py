"""
Structure round trip - net -> structure constants -> recovered net keeps
its label, on the catalogue and on random nets.
"""

from algebras import classify_algebra, hilbert_vector, structure_constants
from check_base import FAIL, PASS, Check, CheckResult, expect, guarded
from net_orbits import classify_net, random_net


class StructureRoundTrip(Check):
    name = "structure_round_trip"
    description = "classify_algebra(structure_constants(W)) = classify_net(W)"
    order = 60

    def run(self, ctx):
        results = [guarded(f"round-trip/{label.value}",
                           lambda label=label, W=W: self._one(f"round-trip/{label.value}", W, label))
                   for label, W in ctx.nets.items()]
        results.append(guarded("round-trip/random", lambda: self._random(ctx)))
        return results

    def _one(self, check_id, W, label):
        T = structure_constants(W)
        failed = T.check_axioms()
        vector = hilbert_vector(T)
        got = classify_algebra(T)
        return expect(check_id, not failed and vector == (3, 3) and got is label,
                      f"axioms failed: {failed or 'none'}; Hilbert {vector}; label {got.value}")

    def _random(self, ctx):
        mismatches = []
        for t in range(ctx.trials):
            W = random_net([ctx.seed, t], ctx.p)
            a, b = classify_net(W), classify_algebra(structure_constants(W))
            if a is not b:
                mismatches.append(f"{W!r}: {a.value} vs {b.value}")
        return CheckResult("round-trip/random", FAIL if mismatches else PASS,
                           f"{ctx.trials} random nets" + (f"; {mismatches[:3]}" if mismatches else ""))
