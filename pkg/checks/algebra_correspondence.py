"""
Nets versus algebras - for every catalogue row the annihilator of the net
is the quadric part of the printed ideal, and the quotient by that ideal
is a (3,3) algebra carrying the row's label.

A row whose printed quadrics are not apolar to its net is reported as WARN
together with what the printed ideal does classify to.
"""

from algebras import (APOLAR_QUADRICS_IV_B, QuadricSpace, apolar_annihilator,
                      classify_algebra, hilbert_vector, ideal_generators,
                      ideal_quadrics, quotient_algebra)
from check_base import FAIL, PASS, WARN, Check, CheckResult, guarded
from net_orbits import OrbitLabel


class AlgebraCorrespondence(Check):
    name = "algebra_correspondence"
    description = "Annihilators, quotient Hilbert vectors and labels per row"
    order = 50

    def run(self, ctx):
        return [guarded(f"algebra/{label.value}", lambda label=label, W=W: self._row(ctx, label, W))
                for label, W in ctx.nets.items()]

    def _row(self, ctx, label, W):
        check_id = f"algebra/{label.value}"
        annihilator = apolar_annihilator(W)
        printed = ideal_quadrics(label, ctx.p)
        T = quotient_algebra(ideal_generators(label, ctx.p))
        vector = hilbert_vector(T)
        got = classify_algebra(T)
        parts = [f"annihilator {annihilator}", f"Hilbert {vector}", f"label {got.value}"]
        parts.extend(T.notes)

        if annihilator != printed:
            parts.insert(0, f"printed quadrics {printed} are not apolar")
            if label is OrbitLabel.IV_b:
                corrected = QuadricSpace.from_terms(APOLAR_QUADRICS_IV_B, ctx.p) == annihilator
                parts.append(f"corrected quadrics match: {corrected}")
            return CheckResult(check_id, WARN, '; '.join(parts))
        ok = vector == (3, 3) and got is label
        return CheckResult(check_id, PASS if ok else FAIL, '; '.join(parts))
