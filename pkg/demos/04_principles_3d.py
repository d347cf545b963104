#!/usr/bin/env python3
"""Modulations in 3-D Cartesian space on a sphere-surface spiral.

All dimensions share one phase, so the modulation characteristics carry
over from the 1-D case: arcs broaden or sharpen the spiral, exaggeration
amplifies or flattens it, and anticipation adds an opening
counter-movement on the most active axes.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from animdmp import ModulationConfig, learn, modulated_rollout, rollout
from animdmp.synth import sphere_spiral_demo

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    demo = sphere_spiral_demo(turns=4.0, samples=400)
    model = learn(demo, 100)
    base = rollout(model)

    variants = [
        ("arc p=5 / p=-5", [ModulationConfig(p_arc=5.0),
                            ModulationConfig(p_arc=-5.0)]),
        ("exaggeration 1.5 / 0.5", [ModulationConfig(p_exa=1.5),
                                    ModulationConfig(p_exa=0.5)]),
        ("anticipation 0.4 on 2 dims",
         [ModulationConfig(p_ant=0.4, t_ant=0.1 * model.tau, n_ant=2)]),
    ]

    fig = plt.figure(figsize=(13, 4.5))
    for i, (title, configs) in enumerate(variants, start=1):
        ax = fig.add_subplot(1, 3, i, projection="3d")
        ax.plot(*demo.positions.T, "k--", lw=1.0, label="demonstration")
        for cfg in configs:
            traj = modulated_rollout(model, cfg, demo=demo)
            ax.plot(*traj.positions.T, lw=1.0)
        ax.set_title(title)
    print(f"base rollout: {base.n_steps} rows, {base.n_dims} dims")
    fig.tight_layout()
    fig.savefig(OUT / "principles_3d.png", dpi=120)
    print(f"wrote {OUT / 'principles_3d.png'}")


if __name__ == "__main__":
    main()
