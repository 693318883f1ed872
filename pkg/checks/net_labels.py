"""
Net labels - every catalogue representative gets its own row label,
the ten labels are distinct, and labels survive random GL(3) moves.
"""

import numpy as np

from check_base import Check, expect
from net_orbits import act, classify_net, random_gl3


class NetLabels(Check):
    name = "net_labels"
    description = "Catalogue nets classify to their own labels, invariantly"
    order = 10

    def run(self, ctx):
        results = []
        labels = {}
        for label, W in ctx.nets.items():
            got = classify_net(W)
            labels[label] = got
            results.append(expect(f"net-label/{label.value}", got is label,
                                  f"classified as {got.value}"))
        distinct = len(set(labels.values()))
        results.append(expect("net-label/distinct", distinct == len(ctx.nets),
                              f"{distinct} distinct labels for {len(ctx.nets)} representatives"))

        rng = np.random.default_rng(ctx.seed)
        reps = list(ctx.nets.items())
        moved = []
        for t in range(ctx.trials):
            label, W = reps[int(rng.integers(len(reps)))]
            M = random_gl3([ctx.seed, t], ctx.p)
            got = classify_net(act(M, W))
            if got is not label:
                moved.append(f"{label.value} -> {got.value}")
        results.append(expect("net-label/invariance", not moved,
                              f"{ctx.trials} random moves" + (f"; changed: {moved[:5]}" if moved else "")))
        return results
